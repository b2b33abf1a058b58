//! Exact rational and rational-angle arithmetic.
//!
//! Every sign and ordering decision made elsewhere in the crate goes through
//! this module; nothing is ever decided on a floating-point value.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Sign of a quantity: `-1`, `0` or `+1`.
pub type Sign = i8;

/// The angle `(p/q)·π`, stored unreduced.
///
/// Crossing enumeration produces many angles over a shared denominator, so
/// reduction only happens when a caller asks for it.
#[derive(Clone, Debug)]
pub struct RationalAngle {
    p: BigInt,
    q: BigInt,
}

impl RationalAngle {
    /// Builds `(p/q)·π`. Panics if `q == 0`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        let (p, q) = (p.into(), q.into());
        assert!(!q.is_zero(), "RationalAngle with zero denominator");
        if q.is_negative() {
            RationalAngle { p: -p, q: -q }
        } else {
            RationalAngle { p, q }
        }
    }

    pub fn from_ratio(r: &Rational) -> Self {
        RationalAngle::new(r.numer().clone(), r.denom().clone())
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn denom(&self) -> &BigInt {
        &self.q
    }

    /// The multiple of π as an exact rational.
    pub fn ratio(&self) -> Rational {
        Rational::new(self.p.clone(), self.q.clone())
    }

    /// Same angle with `gcd(|p|, q) = 1`.
    pub fn reduced(&self) -> Self {
        let g = self.p.gcd(&self.q);
        if g.is_one() || g.is_zero() {
            return self.clone();
        }
        RationalAngle { p: &self.p / &g, q: &self.q / &g }
    }

    /// Multiplies the angle by an integer.
    pub fn scale(&self, m: impl Into<BigInt>) -> Self {
        RationalAngle { p: &self.p * m.into(), q: self.q.clone() }
    }

    pub fn neg(&self) -> Self {
        RationalAngle { p: -&self.p, q: self.q.clone() }
    }

    pub fn add(&self, other: &RationalAngle) -> Self {
        RationalAngle::new(&self.p * &other.q + &other.p * &self.q, &self.q * &other.q)
    }

    pub fn sub(&self, other: &RationalAngle) -> Self {
        self.add(&other.neg())
    }

    /// Representative in `[0, 1]` (as a multiple of π) with the same cosine.
    pub fn fold_cos(&self) -> Rational {
        let two_q = &self.q * 2;
        let m = self.p.mod_floor(&two_q);
        let m = if m > self.q { two_q - m } else { m };
        Rational::new(m, self.q.clone())
    }

    /// Whether the angle is an integer multiple of π.
    pub fn is_integer(&self) -> bool {
        self.p.is_multiple_of(&self.q)
    }

    /// Approximate value in radians; for drawing only.
    pub fn to_radians(&self) -> f64 {
        let r = self.ratio();
        r.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI
    }
}

impl PartialEq for RationalAngle {
    fn eq(&self, other: &Self) -> bool {
        &self.p * &other.q == &other.p * &self.q
    }
}

impl Eq for RationalAngle {}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        if r.q.is_one() {
            write!(f, "{}π", r.p)
        } else {
            write!(f, "({}/{})π", r.p, r.q)
        }
    }
}

/// Sign of `sin((p/q)π)`: zero iff `p/q` is an integer, otherwise
/// `(-1)^⌊p/q⌋`.
pub fn sign_sin(x: &RationalAngle) -> Sign {
    let (fl, rem) = x.p.div_mod_floor(&x.q);
    if rem.is_zero() {
        0
    } else if fl.is_even() {
        1
    } else {
        -1
    }
}

/// Sign of `cos((p/q)π)`, via `cos x = sin(π/2 − x)`.
pub fn sign_cos(x: &RationalAngle) -> Sign {
    let comp = RationalAngle::new(&x.q - &x.p * 2, &x.q * 2);
    sign_sin(&comp)
}

/// Compares `cos x` with `cos y` exactly.
///
/// Both angles are folded into `[0, π]`, where cosine is strictly
/// decreasing, so the result is the reverse of the folded comparison.
pub fn compare_cos(x: &RationalAngle, y: &RationalAngle) -> Ordering {
    y.fold_cos().cmp(&x.fold_cos())
}

/// Parity factor `(-1)^n`.
pub fn parity_sign(n: i64) -> Sign {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Inverse of `x` modulo `m`, if it exists. The result lies in `[0, m)`.
pub fn mod_inverse(x: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = x.mod_floor(m).extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ang(p: i64, q: i64) -> RationalAngle {
        RationalAngle::new(p, q)
    }

    #[test]
    fn sine_signs() {
        assert_eq!(sign_sin(&ang(3, 10)), 1);
        assert_eq!(sign_sin(&ang(-4, 5)), -1);
        assert_eq!(sign_sin(&ang(2, 1)), 0);
        assert_eq!(sign_sin(&ang(6, 3)), 0);
        assert_eq!(sign_sin(&ang(7, 5)), -1);
        // negative denominators are normalized
        assert_eq!(sign_sin(&ang(3, -10)), -1);
    }

    #[test]
    fn cosine_signs() {
        assert_eq!(sign_cos(&ang(1, 2)), 0);
        assert_eq!(sign_cos(&ang(1, 3)), 1);
        assert_eq!(sign_cos(&ang(4, 5)), -1);
        assert_eq!(sign_cos(&ang(-1, 3)), 1);
        assert_eq!(sign_cos(&ang(3, 2)), 0);
        assert_eq!(sign_cos(&ang(7, 4)), 1);
    }

    #[test]
    fn cosine_ordering() {
        assert_eq!(compare_cos(&ang(1, 4), &ang(1, 3)), Ordering::Greater);
        assert_eq!(compare_cos(&ang(1, 5), &ang(9, 5)), Ordering::Equal);
        assert_eq!(compare_cos(&ang(2, 3), &ang(1, 2)), Ordering::Less);
        assert_eq!(compare_cos(&ang(-1, 5), &ang(1, 5)), Ordering::Equal);
        assert_eq!(compare_cos(&ang(0, 1), &ang(1, 1)), Ordering::Greater);
    }

    #[test]
    fn unreduced_angles_compare_equal() {
        assert_eq!(ang(2, 4), ang(1, 2));
        assert_eq!(ang(6, 8).reduced().numer(), &BigInt::from(3));
        assert!(ang(12, 4).is_integer());
    }

    #[test]
    fn inverses() {
        let inv = mod_inverse(&BigInt::from(4), &BigInt::from(7)).unwrap();
        assert_eq!(inv, BigInt::from(2));
        let inv = mod_inverse(&BigInt::from(-10), &BigInt::from(17)).unwrap();
        assert_eq!(inv, BigInt::from(5));
        assert!(mod_inverse(&BigInt::from(6), &BigInt::from(9)).is_none());
    }
}
