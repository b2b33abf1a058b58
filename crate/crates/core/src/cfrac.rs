//! Signed continued fractions and the Schubert-fraction algebra of
//! two-bridge knots.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{mod_inverse, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CfError {
    #[error("continued fraction evaluates to infinity")]
    DivisionByZero,
    #[error("continued fraction is empty")]
    Empty,
    #[error("crossing-number formula does not apply: {0}")]
    PreconditionViolated(String),
    #[error("expected alpha odd and beta even, got {alpha}/{beta}")]
    InvalidParity { alpha: BigInt, beta: BigInt },
    #[error("expansion requires a positive fraction, got {0}")]
    NonPositive(String),
    #[error("terms are not of the form [±1, ±2, ..., ±1, ±2]: {0}")]
    ShapeError(String),
    #[error("{beta} is not invertible modulo {alpha}")]
    NotInvertible { alpha: BigInt, beta: BigInt },
    #[error("invalid fraction: {0}")]
    InvalidFraction(String),
    #[error("internal error: {0}")]
    InternalError(String),
}

/// A continued fraction `[a_1, ..., a_n]` with signed integer terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignedCF {
    terms: Vec<i64>,
}

impl SignedCF {
    pub fn new(terms: Vec<i64>) -> Result<Self, CfError> {
        if terms.is_empty() {
            return Err(CfError::Empty);
        }
        Ok(SignedCF { terms })
    }

    pub fn terms(&self) -> &[i64] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn into_terms(self) -> Vec<i64> {
        self.terms
    }

    /// `[-a_n, ..., -a_1]`, which is isotopic to the original for even length.
    pub fn reversed_negated(&self) -> SignedCF {
        SignedCF { terms: self.terms.iter().rev().map(|t| -t).collect() }
    }

    pub fn negated(&self) -> SignedCF {
        SignedCF { terms: self.terms.iter().map(|t| -t).collect() }
    }

    pub fn concat(&self, tail: &SignedCF) -> SignedCF {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&tail.terms);
        SignedCF { terms }
    }
}

impl fmt::Display for SignedCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

/// Schubert fraction `alpha/beta` with `alpha > 0` and `gcd(alpha, beta) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    alpha: BigInt,
    beta: BigInt,
}

impl Fraction {
    pub fn new(alpha: impl Into<BigInt>, beta: impl Into<BigInt>) -> Result<Self, CfError> {
        let (alpha, beta) = (alpha.into(), beta.into());
        if !alpha.is_positive() {
            return Err(CfError::InvalidFraction(format!("alpha must be positive, got {alpha}")));
        }
        if !alpha.gcd(&beta).is_one() {
            return Err(CfError::InvalidFraction(format!("{alpha}/{beta} is not reduced")));
        }
        Ok(Fraction { alpha, beta })
    }

    /// Moves the sign of a nonzero rational onto beta.
    pub fn from_rational(r: &Rational) -> Result<Self, CfError> {
        if r.is_zero() {
            return Err(CfError::InvalidFraction("zero has no Schubert fraction".into()));
        }
        let (n, d) = (r.numer(), r.denom());
        if n.is_negative() {
            Fraction::new(-n, -d)
        } else {
            Fraction::new(n.clone(), d.clone())
        }
    }

    pub fn alpha(&self) -> &BigInt {
        &self.alpha
    }

    pub fn beta(&self) -> &BigInt {
        &self.beta
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.alpha.clone(), self.beta.clone())
    }

    /// `alpha/(-beta)`, the Schubert fraction of the mirror image.
    pub fn mirror(&self) -> Fraction {
        Fraction { alpha: self.alpha.clone(), beta: -&self.beta }
    }

    /// Smallest representative in `(0, alpha)` among `beta^{±1} mod alpha`.
    pub fn canonical(&self) -> Fraction {
        self.smallest_rep(false)
    }

    /// Smallest representative in `(0, alpha)` among `±beta^{±1} mod alpha`,
    /// i.e. the same knot up to mirror image.
    pub fn canonical_up_to_mirror(&self) -> Fraction {
        self.smallest_rep(true)
    }

    fn smallest_rep(&self, with_mirror: bool) -> Fraction {
        if self.alpha.is_one() {
            return Fraction { alpha: BigInt::one(), beta: BigInt::zero() };
        }
        let b = self.beta.mod_floor(&self.alpha);
        let mut reps = vec![b.clone()];
        if let Some(inv) = mod_inverse(&b, &self.alpha) {
            reps.push(inv);
        }
        if with_mirror {
            let mirrored: Vec<BigInt> = reps.iter().map(|r| (-r).mod_floor(&self.alpha)).collect();
            reps.extend(mirrored);
        }
        let beta = reps.into_iter().min().expect("non-empty");
        Fraction { alpha: self.alpha.clone(), beta }
    }
}

/// Serialized as `{"alpha": .., "beta": ..}`; values beyond `i64` become
/// decimal strings.
impl Serialize for Fraction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        fn num(x: &BigInt) -> serde_json_like::Num {
            match i64::try_from(x) {
                Ok(v) => serde_json_like::Num::Small(v),
                Err(_) => serde_json_like::Num::Big(x.to_string()),
            }
        }
        let mut st = s.serialize_struct("Fraction", 2)?;
        st.serialize_field("alpha", &num(&self.alpha))?;
        st.serialize_field("beta", &num(&self.beta))?;
        st.end()
    }
}

mod serde_json_like {
    #[derive(serde::Serialize)]
    #[serde(untagged)]
    pub enum Num {
        Small(i64),
        Big(String),
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.alpha, self.beta)
    }
}

/// Value of `[a_1, ..., a_n]`, folded right to left in projective
/// coordinates so that interior zero terms are harmless.
pub fn evaluate(cf: &SignedCF) -> Result<Rational, CfError> {
    let (num, den) = projective_value(cf.terms());
    if den.is_zero() {
        return Err(CfError::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// Value as a Schubert fraction (sign carried by beta).
pub fn evaluate_fraction(cf: &SignedCF) -> Result<Fraction, CfError> {
    Fraction::from_rational(&evaluate(cf)?)
}

fn projective_value(terms: &[i64]) -> (BigInt, BigInt) {
    let mut num = BigInt::one();
    let mut den = BigInt::zero();
    for &t in terms.iter().rev() {
        let next = BigInt::from(t) * &num + &den;
        den = num;
        num = next;
    }
    (num, den)
}

/// Removes zero terms with `[.., x, 0, y, ..] = [.., x + y, ..]` and
/// `[.., x, y, 0] = [.., x]`.
///
/// A leading zero in front of other terms cannot be spliced away and is
/// kept; `[x, 0]` (value infinity) is returned unchanged.
pub fn normalize(cf: &SignedCF) -> SignedCF {
    let mut terms = cf.terms.clone();
    loop {
        let n = terms.len();
        if let Some(i) = (1..n.saturating_sub(1)).find(|&i| terms[i] == 0) {
            let merged = terms[i - 1] + terms[i + 1];
            terms.splice(i - 1..=i + 1, [merged]);
            continue;
        }
        if n >= 3 && terms[n - 1] == 0 {
            terms.truncate(n - 2);
            continue;
        }
        break;
    }
    SignedCF { terms }
}

/// Positions `j` (1-based) with `a_j · a_{j+1} < 0`.
fn sign_changes(terms: &[i64]) -> Vec<usize> {
    terms
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0].signum() * w[1].signum() < 0)
        .map(|(i, _)| i + 1)
        .collect()
}

fn longest_run(positions: &[usize]) -> usize {
    let mut best = 0;
    let mut run = 0;
    let mut prev: Option<usize> = None;
    for &p in positions {
        run = match prev {
            Some(q) if q + 1 == p => run + 1,
            _ => 1,
        };
        best = best.max(run);
        prev = Some(p);
    }
    best
}

/// Crossing number `Σ|a_i| − #{sign changes}`, valid for expansions with
/// same-signed first and last pairs and no two consecutive sign changes.
pub fn crossing_number_bireg(cf: &SignedCF) -> Result<u64, CfError> {
    let t = cf.terms();
    let mut failures = Vec::new();
    if t.contains(&0) {
        failures.push("terms must be nonzero".to_string());
    }
    let n = t.len();
    if n >= 2 {
        if t[0] * t[1] <= 0 {
            failures.push("a_1·a_2 > 0 fails".to_string());
        }
        if t[n - 2] * t[n - 1] <= 0 {
            failures.push("a_{n-1}·a_n > 0 fails".to_string());
        }
    }
    let changes = sign_changes(t);
    if longest_run(&changes) >= 2 {
        failures.push("two consecutive sign changes".to_string());
    }
    if !failures.is_empty() {
        return Err(CfError::PreconditionViolated(failures.join("; ")));
    }
    let total: u64 = t.iter().map(|a| a.unsigned_abs()).sum();
    Ok(total - changes.len() as u64)
}

/// The unique expansion `[1, ±2, ±1, ±2, ...]` of `alpha/beta` (alpha odd,
/// beta even, value positive) without three consecutive sign changes.
///
/// Terms are peeled from the front: each tail is forced to be of the form
/// `±[1, ±2, ...]`, its sign gives the next odd term, and the next even term
/// is `+2` relative to it exactly when the normalized tail exceeds 1.
pub fn expand_1212(r: &Fraction) -> Result<SignedCF, CfError> {
    if r.alpha().is_even() || r.beta().is_odd() {
        return Err(CfError::InvalidParity { alpha: r.alpha().clone(), beta: r.beta().clone() });
    }
    if !r.beta().is_positive() {
        return Err(CfError::NonPositive(r.to_string()));
    }
    // v = num/den > 0
    let mut num = r.alpha().clone();
    let mut den = r.beta().clone();
    let mut sigma: i64 = 1;
    let mut terms = Vec::new();
    // the expansion has at most (α + β)/2 rounds; the guard is looser
    let limit = r.alpha() + r.beta() + 2;
    let mut round = BigInt::zero();
    loop {
        round += 1;
        if round > limit {
            return Err(CfError::InternalError(format!("expansion of {r} did not terminate")));
        }
        let rel: i64 = if num > den { 1 } else { -1 };
        terms.push(sigma);
        terms.push(2 * sigma * rel);
        // u = 1/(v - 1) = den/(num - den)
        let (u_num, u_den) = (den.clone(), &num - &den);
        // w = 1/(u - 2 rel) = u_den/(u_num - 2 rel u_den)
        let w_num = u_den.clone();
        let w_den = &u_num - BigInt::from(2 * rel) * &u_den;
        if w_den.is_zero() {
            let cf = SignedCF { terms };
            return validate_1212(cf, r);
        }
        let (mut w_num, mut w_den) = (w_num, w_den);
        if w_den.is_negative() {
            w_num = -w_num;
            w_den = -w_den;
        }
        if w_num.is_negative() {
            sigma = -sigma;
            w_num = -w_num;
        }
        if w_num.is_zero() {
            return Err(CfError::InternalError(format!("zero tail while expanding {r}")));
        }
        num = w_num;
        den = w_den;
    }
}

fn validate_1212(cf: SignedCF, r: &Fraction) -> Result<SignedCF, CfError> {
    let profile = sign_change_profile(&cf)?;
    if profile.max_run >= 3 {
        return Err(CfError::InternalError(format!(
            "expansion {cf} of {r} has three consecutive sign changes"
        )));
    }
    if evaluate(&cf)? != r.value() {
        return Err(CfError::InternalError(format!("expansion {cf} does not evaluate to {r}")));
    }
    Ok(cf)
}

/// Sign-change summary of a `[±1, ±2, ...]` expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignChangeProfile {
    /// 1-based positions `j` with `a_j a_{j+1} < 0`.
    pub changes: Vec<usize>,
    pub max_run: usize,
    /// `e_k e_{k+1} = e_{2m−k} e_{2m−k+1}` for all k.
    pub palindromic: bool,
}

pub fn sign_change_profile(cf: &SignedCF) -> Result<SignChangeProfile, CfError> {
    let t = cf.terms();
    let shaped = t.len().is_multiple_of(2)
        && t.iter().enumerate().all(|(i, a)| a.unsigned_abs() == if i % 2 == 0 { 1 } else { 2 });
    if !shaped {
        return Err(CfError::ShapeError(cf.to_string()));
    }
    let changes = sign_changes(t);
    let len = t.len();
    let palindromic = changes.iter().all(|&j| changes.binary_search(&(len - j)).is_ok());
    Ok(SignChangeProfile { max_run: longest_run(&changes), changes, palindromic })
}

/// Two-bridge equivalence: same alpha and `beta' ≡ beta^{±1} (mod alpha)`,
/// optionally also allowing the mirror `−beta'`.
pub fn two_bridge_equivalent(f: &Fraction, g: &Fraction, up_to_mirror: bool) -> Result<bool, CfError> {
    if f.alpha() != g.alpha() {
        return Ok(false);
    }
    let alpha = f.alpha();
    let inv = mod_inverse(f.beta(), alpha)
        .ok_or_else(|| CfError::NotInvertible { alpha: alpha.clone(), beta: f.beta().clone() })?;
    if mod_inverse(g.beta(), alpha).is_none() {
        return Err(CfError::NotInvertible { alpha: alpha.clone(), beta: g.beta().clone() });
    }
    let b = f.beta().mod_floor(alpha);
    let matches = |x: &BigInt| {
        let x = x.mod_floor(alpha);
        x == b || x == inv
    };
    Ok(matches(g.beta()) || (up_to_mirror && matches(&-g.beta())))
}

/// Euclidean expansion with all terms positive.
pub fn positive_cf(r: &Rational) -> Result<SignedCF, CfError> {
    if !r.is_positive() {
        return Err(CfError::NonPositive(r.to_string()));
    }
    let mut num = r.numer().clone();
    let mut den = r.denom().clone();
    let mut terms = Vec::new();
    while !den.is_zero() {
        let (q, rem) = num.div_rem(&den);
        let q: i64 = i64::try_from(q).map_err(|_| CfError::InternalError("partial quotient overflow".into()))?;
        terms.push(q);
        num = den;
        den = rem;
    }
    Ok(SignedCF { terms })
}

/// `cn(r) = q_1 + ... + q_n` over the positive expansion.
pub fn crossing_number_positive(r: &Rational) -> Result<u64, CfError> {
    Ok(positive_cf(r)?.terms().iter().map(|q| *q as u64).sum())
}

/// Generators of the Möbius action used for `[1, ±2, ...]` expansions:
/// `A(x) = [1, x]`, `B(x) = [2, x]`, `S(x) = −x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MobiusGen {
    A,
    B,
    S,
}

/// The map `x ↦ (a x + b)/(c x + d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusMatrix {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl MobiusMatrix {
    pub fn identity() -> Self {
        Self::from_i64(1, 0, 0, 1)
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        MobiusMatrix { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn generator(g: MobiusGen) -> Self {
        match g {
            MobiusGen::A => Self::from_i64(1, 1, 1, 0),
            MobiusGen::B => Self::from_i64(2, 1, 1, 0),
            MobiusGen::S => Self::from_i64(1, 0, 0, -1),
        }
    }

    /// The map `x ↦ [a_1, ..., a_n, x]`.
    pub fn of_prefix(terms: &[i64]) -> Self {
        terms
            .iter()
            .fold(Self::identity(), |m, &t| m.mul(&Self::from_i64(t, 1, 1, 0)))
    }

    pub fn mul(&self, o: &MobiusMatrix) -> MobiusMatrix {
        MobiusMatrix {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Image of infinity, `a/c`, or `None` if it is infinity again.
    pub fn at_infinity(&self) -> Option<Rational> {
        if self.c.is_zero() {
            None
        } else {
            Some(Rational::new(self.a.clone(), self.c.clone()))
        }
    }

    /// Equal as projective maps (up to an overall sign).
    pub fn same_map(&self, o: &MobiusMatrix) -> bool {
        *self == *o || *self == o.negated()
    }

    fn negated(&self) -> MobiusMatrix {
        MobiusMatrix { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }
}

pub fn mobius_compose(word: &[MobiusGen]) -> MobiusMatrix {
    word.iter()
        .fold(MobiusMatrix::identity(), |m, &g| m.mul(&MobiusMatrix::generator(g)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(t: &[i64]) -> SignedCF {
        SignedCF::new(t.to_vec()).unwrap()
    }

    fn frac(a: i64, b: i64) -> Fraction {
        Fraction::new(a, b).unwrap()
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate(&cf(&[1, 2])).unwrap(), q(3, 2));
        assert_eq!(evaluate(&cf(&[1, 0, 1, 2])).unwrap(), q(5, 2));
        let f = evaluate_fraction(&cf(&[-1, -2, 1, 2])).unwrap();
        assert_eq!(f, frac(7, -4));
        assert_eq!(evaluate(&cf(&[1, 0])), Err(CfError::DivisionByZero));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&cf(&[1, 0, 1, 2])), cf(&[2, 2]));
        assert_eq!(normalize(&cf(&[3])), cf(&[3]));
        assert_eq!(normalize(&cf(&[2, 0, -2])), cf(&[0]));
        assert_eq!(normalize(&cf(&[1, 2, 3, 0])), cf(&[1, 2]));
        // cascading splice
        assert_eq!(normalize(&cf(&[1, 0, -1, 0, 4])), cf(&[4]));
    }

    #[test]
    fn bireg_crossing_numbers() {
        assert_eq!(crossing_number_bireg(&cf(&[1, 2, -1, -2])).unwrap(), 5);
        assert_eq!(crossing_number_bireg(&cf(&[3, 2, 2])).unwrap(), 7);
        assert_eq!(crossing_number_bireg(&cf(&[-1, -2, -1, -2])).unwrap(), 6);
    }

    #[test]
    fn bireg_rejects_bad_input() {
        let err = crossing_number_bireg(&cf(&[1, -2, 1, 2])).unwrap_err();
        assert!(matches!(err, CfError::PreconditionViolated(ref m) if m.contains("a_1")));
        let err = crossing_number_bireg(&cf(&[1, 2, -1, 2, 1])).unwrap_err();
        assert!(matches!(err, CfError::PreconditionViolated(ref m) if m.contains("consecutive")));
    }

    #[test]
    fn expansions_1212() {
        assert_eq!(expand_1212(&frac(3, 2)).unwrap(), cf(&[1, 2]));
        assert_eq!(expand_1212(&frac(9, 4)).unwrap(), cf(&[1, 2, -1, 2, 1, -2, 1, 2]));
        assert_eq!(expand_1212(&frac(7, 4)).unwrap(), cf(&[1, 2, -1, -2]));
        assert_eq!(expand_1212(&frac(1, 2)).unwrap(), cf(&[1, -2]));
    }

    #[test]
    fn expansion_errors() {
        assert!(matches!(expand_1212(&frac(7, 3)), Err(CfError::InvalidParity { .. })));
        assert!(matches!(expand_1212(&frac(8, 3)), Err(CfError::InvalidParity { .. })));
        assert!(matches!(expand_1212(&frac(7, -4)), Err(CfError::NonPositive(_))));
    }

    #[test]
    fn profiles() {
        let p = sign_change_profile(&cf(&[1, 2, -1, -2])).unwrap();
        assert_eq!((p.changes.clone(), p.max_run, p.palindromic), (vec![2], 1, true));
        let p = sign_change_profile(&cf(&[1, 2, 1, 2])).unwrap();
        assert_eq!((p.changes.len(), p.max_run, p.palindromic), (0, 0, true));
        let p = sign_change_profile(&cf(&[1, 2, -1, 2, 1, -2, 1, 2])).unwrap();
        assert_eq!(p.changes, vec![2, 3, 5, 6]);
        assert_eq!(p.max_run, 2);
        assert!(p.palindromic);
        let p = sign_change_profile(&cf(&[1, -2, 1, 2])).unwrap();
        assert!(!p.palindromic);
        assert!(sign_change_profile(&cf(&[1, 2, 2])).is_err());
        assert!(sign_change_profile(&cf(&[2, 1])).is_err());
    }

    #[test]
    fn equivalences() {
        assert!(two_bridge_equivalent(&frac(7, 4), &frac(7, 2), false).unwrap());
        assert!(two_bridge_equivalent(&frac(5, 2), &frac(5, -2), false).unwrap());
        assert!(!two_bridge_equivalent(&frac(7, 2), &frac(7, -2), false).unwrap());
        assert!(two_bridge_equivalent(&frac(7, 2), &frac(7, -2), true).unwrap());
        assert!(!two_bridge_equivalent(&frac(7, 2), &frac(9, 2), true).unwrap());
    }

    #[test]
    fn canonical_representatives() {
        assert_eq!(frac(17, -10).canonical_up_to_mirror(), frac(17, 5));
        assert_eq!(frac(7, 4).canonical(), frac(7, 2));
        assert_eq!(frac(41, 12).canonical_up_to_mirror(), frac(41, 12));
        assert_eq!(frac(3, 1).canonical_up_to_mirror(), frac(3, 1));
    }

    #[test]
    fn positive_expansions() {
        assert_eq!(positive_cf(&q(5, 2)).unwrap(), cf(&[2, 2]));
        assert_eq!(positive_cf(&q(3, 1)).unwrap(), cf(&[3]));
        assert_eq!(positive_cf(&q(43, 6)).unwrap(), cf(&[7, 6]));
        assert!(positive_cf(&q(-1, 2)).is_err());
    }

    #[test]
    fn mobius_words() {
        use MobiusGen::*;
        assert_eq!(mobius_compose(&[A, B]), MobiusMatrix::from_i64(3, 1, 2, 1));
        assert_eq!(mobius_compose(&[A, S, B]), MobiusMatrix::from_i64(1, 1, 2, 1));
        assert_eq!(mobius_compose(&[]), MobiusMatrix::identity());
        assert!(mobius_compose(&[A, S, B, S, A]).det().abs().is_one());
    }
}
