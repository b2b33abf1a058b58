//! Parameter reduction, the canonical form of `H(4,b,c)`, family
//! predictions, and the full analysis of a harmonic knot.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;
use thiserror::Error;

use crate::cfrac::{
    crossing_number_bireg, crossing_number_positive, evaluate, evaluate_fraction, expand_1212, positive_cf,
    sign_change_profile, two_bridge_equivalent, CfError, Fraction, MobiusMatrix, SignChangeProfile, SignedCF,
};
use crate::chebgeom::{enumerate_crossings, Crossing, GeomError, HarmonicTriple};
use crate::diagram::{
    build_gauss_code, conway_form_h4, read_conway_from_diagram, ConwayForm, DiagramError, GaussCode,
};
use crate::invariants::{
    alexander, alexander_of_fraction, determinant, factor_square, identify, name_table, published_row, Identification,
    LaurentPoly,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    ContinuedFraction(#[from] CfError),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

impl ClassifyError {
    /// Whether the error is the caller's fault rather than a broken invariant.
    pub fn is_invalid_input(&self) -> bool {
        matches!(
            self,
            ClassifyError::InvalidInput(_)
                | ClassifyError::Geometry(GeomError::InvalidTriple { .. })
                | ClassifyError::Diagram(
                    DiagramError::ParityError { .. }
                        | DiagramError::CoprimalityError { .. }
                        | DiagramError::InvalidParameters(_)
                        | DiagramError::Geometry(GeomError::InvalidTriple { .. })
                )
                | ClassifyError::ContinuedFraction(
                    CfError::InvalidFraction(_) | CfError::InvalidParity { .. } | CfError::NonPositive(_)
                )
        )
    }
}

/// One application of `H(a,b,λa+μb) = H̄(a,b,|λa−μb|)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub from_c: u64,
    pub to_c: u64,
    pub lambda: u64,
    pub mu: u64,
    /// Whether the knot after this step is the mirror of the original one.
    pub mirrored: bool,
}

/// Reduces `c` while it is a positive combination of `a` and `b`, taking
/// the step with the smallest resulting `c′` each time.
pub fn reduce_c(knot: &HarmonicTriple) -> Result<(Vec<ReductionStep>, HarmonicTriple), ClassifyError> {
    let (a, b) = (knot.a(), knot.b());
    let mut cur = *knot;
    let mut mirrored = false;
    let mut steps = Vec::new();
    loop {
        let c = cur.c();
        let best = (1..)
            .map(|lambda| lambda * a)
            .take_while(|&la| la < c)
            .filter(|&la| (c - la).is_multiple_of(b))
            .map(|la| (la / a, (c - la) / b, la.abs_diff(c - la)))
            .min_by_key(|&(_, _, to)| to);
        let Some((lambda, mu, to_c)) = best else { break };
        mirrored = !mirrored;
        steps.push(ReductionStep { from_c: c, to_c, lambda, mu, mirrored });
        cur = cur.with_c(to_c)?;
    }
    Ok((steps, cur))
}

/// Unique representative `H(4,b′,c′)` of the class of `H(4,b,c)` up to
/// mirror image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalH4 {
    pub b_prime: u64,
    pub c_prime: u64,
    /// Whether the input knot is the mirror image of `H(4,b′,c′)`.
    pub mirrored: bool,
    /// Conway form of `H(4,b′,c′)`; empty for the unknot.
    pub conway: ConwayForm,
    /// Schubert fraction of `H(4,b′,c′)`.
    pub fraction: Fraction,
    pub crossing_number: u64,
}

impl CanonicalH4 {
    /// The reduction reached `b′ = 1`, where the curve is a graph over y.
    pub fn is_trivial(&self) -> bool {
        self.b_prime == 1
    }

    /// Schubert fraction of the input knot.
    pub fn input_fraction(&self) -> Fraction {
        if self.mirrored {
            self.fraction.mirror()
        } else {
            self.fraction.clone()
        }
    }

    pub fn input_conway(&self) -> ConwayForm {
        if self.mirrored {
            ConwayForm::new(self.conway.terms().iter().map(|t| -t).collect())
        } else {
            self.conway.clone()
        }
    }
}

pub fn canonical_h4(b: u64, c: u64) -> Result<CanonicalH4, ClassifyError> {
    if b == 0 || c == 0 || b.is_even() || c.is_even() {
        return Err(ClassifyError::InvalidInput(format!("H(4,{b},{c}) needs odd positive b and c")));
    }
    if b == c || b.gcd(&c) != 1 {
        return Err(ClassifyError::InvalidInput(format!("b={b} and c={c} are not coprime")));
    }
    let (mut b, mut c, mut mirrored) = (b, c, false);
    loop {
        if b > c {
            // exchanging the y and z coordinates is a reflection
            std::mem::swap(&mut b, &mut c);
            mirrored = !mirrored;
        }
        if b == 1 {
            break;
        }
        let next = if (c - b) % 4 == 0 {
            Some((c - b) / 4 * 4)
        } else if c > 3 * b {
            Some(c - 3 * b)
        } else {
            None
        };
        let Some(four_mu) = next else { break };
        let reduced_mu_b = if (c - b) % 4 == 0 { b } else { 3 * b };
        c = four_mu.abs_diff(reduced_mu_b);
        mirrored = !mirrored;
    }
    if b == 1 {
        return Ok(CanonicalH4 {
            b_prime: 1,
            c_prime: c,
            mirrored,
            conway: ConwayForm::new(Vec::new()),
            fraction: Fraction::new(1, 0)?,
            crossing_number: 0,
        });
    }
    let conway = conway_form_h4(b as i64, c as i64)?;
    let fraction = evaluate_fraction(&conway.to_cf())?;
    Ok(CanonicalH4 { b_prime: b, c_prime: c, mirrored, conway, fraction, crossing_number: (3 * b + c - 2) / 4 })
}

/// Identity a harmonic knot is claimed to have, as a hypothesis to check
/// against invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedIdentity {
    pub claim: String,
    /// `(b, c)` of an isotopic `H(4,b,c)`, when one is predicted.
    pub harmonic4: Option<(u64, u64)>,
    pub conway: ConwayForm,
}

pub fn predict_family(knot: &HarmonicTriple) -> Option<ExpectedIdentity> {
    let (a, b, c) = (knot.a(), knot.b(), knot.c());
    if a % 2 == 1 && b == a + 1 && c == a + 2 && a >= 3 {
        let n = a.div_ceil(2);
        let (hb, hc) = if n % 2 == 1 { (2 * n - 1, 2 * n + 1) } else { (2 * n + 1, 2 * n - 1) };
        let mut terms = vec![3];
        terms.extend(std::iter::repeat_n(2, (n - 2) as usize));
        return Some(ExpectedIdentity {
            claim: format!("isotopic to H(4,{hb},{hc}) up to mirror image"),
            harmonic4: Some((hb, hc)),
            conway: ConwayForm::new(terms),
        });
    }
    if a == 5 && b > 5 && c == b + 1 {
        let (n, r) = (b / 5, b % 5);
        let n = n as i64;
        let terms = match r {
            1 => vec![2 * n + 1, 2 * n],
            3 => vec![2 * n + 1, 2 * n + 2],
            _ => return None,
        };
        let conway = ConwayForm::new(terms);
        return Some(ExpectedIdentity { claim: format!("two-bridge knot {conway}"), harmonic4: None, conway });
    }
    None
}

/// Whether Alexander polynomial and determinant of the harmonic diagram
/// agree with those of the expected two-bridge knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectationCheck {
    pub alexander_matches: bool,
    pub determinant_matches: bool,
}

pub fn check_expectation(knot: &HarmonicTriple, expected: &ExpectedIdentity) -> Result<ExpectationCheck, ClassifyError> {
    let gc = build_gauss_code(knot)?;
    let delta = alexander(&gc)?;
    let det = determinant(&gc)?;
    let mut alexander_matches = alexander_of_fraction(&expected.conway)? == delta;
    let mut determinant_matches = evaluate(&expected.conway.to_cf())?.numer().abs() == det;
    if let Some((hb, hc)) = expected.harmonic4 {
        let h4 = build_gauss_code(&HarmonicTriple::new(4, hb, hc)?)?;
        alexander_matches &= alexander(&h4)? == delta;
        determinant_matches &= determinant(&h4)? == det;
    }
    Ok(ExpectationCheck { alexander_matches, determinant_matches })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FractionCandidate {
    pub fraction: Fraction,
    /// `β² mod α` is `±2`.
    pub beta_squared_pm2: bool,
    pub expansion: Option<SignedCF>,
    pub profile: Option<SignChangeProfile>,
    /// Expansion exists and has no two consecutive sign changes.
    pub harmonic: bool,
}

fn beta_squared_is_pm2(f: &Fraction) -> bool {
    let alpha = f.alpha();
    let sq = (f.beta() * f.beta()).mod_floor(alpha);
    sq == BigInt::from(2).mod_floor(alpha) || sq == BigInt::from(-2).mod_floor(alpha)
}

fn candidate(f: Fraction) -> FractionCandidate {
    let pm2 = beta_squared_is_pm2(&f);
    // the expansion only depends on the knot up to mirror image
    let positive = if f.beta().is_negative() { f.mirror() } else { f.clone() };
    let expansion = if pm2 { expand_1212(&positive).ok() } else { None };
    let profile = expansion.as_ref().and_then(|e| sign_change_profile(e).ok());
    let harmonic = profile.as_ref().is_some_and(|p| p.max_run < 2);
    FractionCandidate { fraction: f, beta_squared_pm2: pm2, expansion, profile, harmonic }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistKnotReport {
    pub n: u64,
    pub conway: ConwayForm,
    pub candidates: Vec<FractionCandidate>,
    /// Some even-denominator fraction passes every test, so the twist knot
    /// can be some `H(4,b,c)`.
    pub harmonic_a4: bool,
}

/// Tests the even-denominator Schubert fractions of the twist knot `C(n,2)`.
pub fn twist_knot_check(n: u64) -> Result<TwistKnotReport, ClassifyError> {
    if n == 0 {
        return Err(ClassifyError::InvalidInput("twist knots need n ≥ 1".into()));
    }
    let alpha = 2 * n as i64 + 1;
    let other = if n.is_multiple_of(2) { -(n as i64) } else { n as i64 + 1 };
    let mut fractions = vec![Fraction::new(alpha, 2)?];
    if other != 2 {
        fractions.push(Fraction::new(alpha, other)?);
    }
    let candidates: Vec<FractionCandidate> = fractions.into_iter().map(candidate).collect();
    let harmonic_a4 = candidates.iter().any(|c| c.harmonic);
    Ok(TwistKnotReport { n, conway: ConwayForm::new(vec![n as i64, 2]), candidates, harmonic_a4 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub n: u64,
    pub fraction: Fraction,
    pub beta_squared_minus2: bool,
    /// The block word `C^k D^k` or `C^k F D^k` spelled out.
    pub construction: SignedCF,
    pub construction_value_matches: bool,
    pub expansion: SignedCF,
    pub expansion_matches_construction: bool,
    pub profile: SignChangeProfile,
    pub crossing_number: u64,
    /// Two consecutive sign changes rule out every `H(4,b,c)`.
    pub obstructed: bool,
}

/// Checks `S(n + 1/(2n)) = (2n²+1)/(2n)`.
pub fn non_harmonic_family_check(n: u64) -> Result<FamilyReport, ClassifyError> {
    if n == 0 {
        return Err(ClassifyError::InvalidInput("the family starts at n = 1".into()));
    }
    let ni = n as i64;
    let fraction = Fraction::new(2 * ni * ni + 1, 2 * ni)?;
    let alpha = fraction.alpha();
    let beta_squared_minus2 = (fraction.beta() * fraction.beta()).mod_floor(alpha) == BigInt::from(-2).mod_floor(alpha);
    const C: [i64; 4] = [1, 2, -1, 2];
    const D: [i64; 4] = [1, -2, 1, 2];
    const F: [i64; 2] = [1, 2];
    let k = (n / 2) as usize;
    let mut word: Vec<i64> = C.repeat(k);
    if n % 2 == 1 {
        word.extend(F);
    }
    word.extend(D.repeat(k));
    let construction = SignedCF::new(word)?;
    let at_inf = MobiusMatrix::of_prefix(construction.terms()).at_infinity();
    let construction_value_matches = at_inf.as_ref() == Some(&fraction.value());
    let expansion = expand_1212(&fraction)?;
    let profile = sign_change_profile(&expansion)?;
    Ok(FamilyReport {
        n,
        beta_squared_minus2,
        construction_value_matches,
        expansion_matches_construction: expansion == construction,
        obstructed: profile.max_run >= 2,
        crossing_number: crossing_number_positive(&fraction.value())?,
        construction,
        expansion,
        profile,
        fraction,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representative {
    pub fraction: Fraction,
    pub expansion: SignedCF,
    pub profile: SignChangeProfile,
    /// `Σ|a_i| − #changes`, when the expansion meets its preconditions.
    pub crossing_number_bireg: Option<u64>,
}

/// Continued-fraction facts about a Schubert fraction `α/β`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CfReport {
    pub fraction: Fraction,
    pub positive_cf: SignedCF,
    pub crossing_number: u64,
    pub beta_squared_mod_alpha: u64,
    pub beta_squared_pm2: bool,
    /// Representatives `α/β′` of the same knot with `0 < β′ < α` even,
    /// each with its `[±1, ±2, ...]` expansion.
    pub even_representatives: Vec<Representative>,
}

pub fn cf_report(alpha: i64, beta: i64) -> Result<CfReport, ClassifyError> {
    if alpha <= 0 || alpha % 2 == 0 {
        return Err(ClassifyError::InvalidInput(format!("alpha must be odd and positive, got {alpha}")));
    }
    let fraction = Fraction::new(alpha, beta)
        .map_err(|_| ClassifyError::InvalidInput(format!("{alpha} and {beta} are not coprime")))?;
    let canonical = fraction.canonical_up_to_mirror();
    let (positive_cf, crossing_number) = if alpha == 1 {
        (SignedCF::new(vec![1])?, 0)
    } else {
        (positive_cf(&canonical.value())?, crossing_number_positive(&canonical.value())?)
    };
    let a = BigInt::from(alpha);
    let b = fraction.beta().mod_floor(&a);
    let sq = (&b * &b).mod_floor(&a);
    let mut reps: Vec<BigInt> = vec![b.clone()];
    if let Some(inv) = crate::exact::mod_inverse(&b, &a) {
        if inv != b {
            reps.push(inv);
        }
    }
    let mut even_representatives = Vec::new();
    for r in reps.into_iter().filter(|r| r.is_even() && r.is_positive()) {
        let f = Fraction::new(a.clone(), r)?;
        let expansion = expand_1212(&f)?;
        let profile = sign_change_profile(&expansion)?;
        let crossing_number_bireg = crossing_number_bireg(&expansion).ok();
        even_representatives.push(Representative { fraction: f, expansion, profile, crossing_number_bireg });
    }
    Ok(CfReport {
        positive_cf,
        crossing_number,
        beta_squared_mod_alpha: sq.to_u64().unwrap_or(0),
        beta_squared_pm2: beta_squared_is_pm2(&fraction),
        even_representatives,
        fraction,
    })
}

/// Where a reported fraction comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FractionSource {
    /// Conway form read off the `a = 3` diagram.
    Diagram,
    /// Closed form for `H(4,b,c)` after canonical reduction.
    CanonicalH4,
    /// Printed table row for this very triple, consistent with Δ.
    PublishedTable,
    /// Fraction of the name that Δ and the determinant match.
    NameTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingRecord {
    pub h: u64,
    pub k: u64,
    pub sign: i8,
    pub over_at_t: bool,
    pub writhe_sign: i8,
}

impl From<&Crossing> for CrossingRecord {
    fn from(c: &Crossing) -> Self {
        CrossingRecord { h: c.h, k: c.k, sign: c.sign, over_at_t: c.over_at_t, writhe_sign: c.oriented_sign }
    }
}

/// Everything known about one harmonic knot.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub triple: [u64; 3],
    pub reductions: Vec<ReductionStep>,
    pub reduced_triple: [u64; 3],
    pub crossings: Vec<CrossingRecord>,
    pub gauss_code: GaussCode,
    pub conway: Option<Vec<i64>>,
    pub fraction: Option<Fraction>,
    pub fraction_source: Option<FractionSource>,
    pub crossing_number: Option<u64>,
    pub diagram_crossings: usize,
    pub alexander: Vec<i64>,
    pub determinant: u64,
    pub name: Option<String>,
    pub identification: Identification,
    pub canonical_h4: Option<CanonicalH4>,
    /// `q` with `Δ = q²`, when Δ is a nontrivial square.
    pub alexander_square_root: Option<Vec<i64>>,
    pub expectation: Option<ExpectedIdentity>,
    pub notes: Vec<String>,
}

impl AnalysisReport {
    pub fn alexander_poly(&self) -> LaurentPoly {
        LaurentPoly::from_i64s(0, &self.alexander)
    }
}

fn fraction_of(cf: &ConwayForm) -> Result<Fraction, ClassifyError> {
    match evaluate_fraction(&cf.to_cf()) {
        Err(CfError::DivisionByZero) => Ok(Fraction::new(1, 0)?),
        r => Ok(r?),
    }
}

fn crossing_number_of(f: &Fraction) -> Result<u64, ClassifyError> {
    if f.alpha().is_one() {
        return Ok(0);
    }
    Ok(crossing_number_positive(&f.canonical_up_to_mirror().value())?)
}

fn name_of_fraction(f: &Fraction) -> Option<String> {
    if f.alpha().is_one() {
        return Some("unknot".into());
    }
    name_table()
        .into_iter()
        .find(|e| e.fraction.as_ref().is_some_and(|g| two_bridge_equivalent(f, g, true).unwrap_or(false)))
        .map(|e| e.name)
}

fn to_i64s(p: &LaurentPoly) -> Result<Vec<i64>, ClassifyError> {
    p.coeffs_i64().ok_or_else(|| ClassifyError::Internal(format!("coefficients of {p} exceed 64 bits")))
}

pub fn analyze(knot: &HarmonicTriple) -> Result<AnalysisReport, ClassifyError> {
    let (reductions, reduced) = reduce_c(knot)?;
    let crossings = enumerate_crossings(knot)?;
    let gauss_code = build_gauss_code(knot)?;
    let delta = alexander(&gauss_code)?;
    let det = determinant(&gauss_code)?;
    let id = identify(&delta, &det, gauss_code.crossing_count());
    let mut notes = Vec::new();

    let mut conway = None;
    let mut fraction = None;
    let mut fraction_source = None;
    let mut crossing_number = None;
    let mut canonical = None;
    let name;
    match knot.a() {
        3 => {
            let cf = read_conway_from_diagram(knot)?;
            let f = fraction_of(&cf)?;
            crossing_number = Some(crossing_number_of(&f)?);
            name = name_of_fraction(&f);
            conway = Some(cf.terms().to_vec());
            fraction = Some(f);
            fraction_source = Some(FractionSource::Diagram);
        }
        4 => {
            let canon = canonical_h4(knot.b(), knot.c())?;
            let f = canon.input_fraction();
            // the reading of the diagram must describe the same knot
            let read = fraction_of(&read_conway_from_diagram(knot)?)?;
            if !two_bridge_equivalent(&read, &f, false)? {
                return Err(ClassifyError::Internal(format!(
                    "{knot}: diagram reads {read}, canonical form gives {f}"
                )));
            }
            if !canon.is_trivial() {
                let bireg = crossing_number_bireg(&canon.conway.to_cf())?;
                if bireg != canon.crossing_number {
                    return Err(ClassifyError::Internal(format!(
                        "{knot}: crossing number {bireg} from the Conway form, {} from (3b′+c′−2)/4",
                        canon.crossing_number
                    )));
                }
            }
            crossing_number = Some(canon.crossing_number);
            name = name_of_fraction(&f);
            conway = Some(canon.input_conway().terms().to_vec());
            fraction = Some(f);
            fraction_source = Some(FractionSource::CanonicalH4);
            canonical = Some(canon);
        }
        _ => {
            name = id.name().map(str::to_string);
            let entry = name.as_ref().and_then(|n| name_table().into_iter().find(|e| &e.name == n));
            if let Some(e) = &entry {
                crossing_number = Some(e.crossing_number);
                let row = published_row(knot).filter(|r| Some(&r.name) == name.as_ref());
                if let Some(f) = row.as_ref().and_then(|r| r.fraction.clone()) {
                    fraction = Some(f);
                    fraction_source = Some(FractionSource::PublishedTable);
                } else if let Some(f) = &e.fraction {
                    fraction = Some(f.clone());
                    fraction_source = Some(FractionSource::NameTable);
                }
            }
            if let Some(f) = &fraction {
                let cf = positive_cf(&f.canonical_up_to_mirror().value())?;
                notes.push(format!(
                    "Δ and determinant are consistent with the two-bridge knot S({f}) = C{}; not a classification",
                    cf.to_string().replace('[', "(").replace(']', ")")
                ));
            }
        }
    }
    if matches!(id, Identification::Ambiguous(_)) {
        notes.push("Δ and determinant match several names".into());
    }
    if let (Some(n), Some(by_delta)) = (&name, id.name()) {
        if n != by_delta {
            return Err(ClassifyError::Internal(format!("{knot}: fraction names {n}, Δ names {by_delta}")));
        }
    }

    let square_root = factor_square(&delta).filter(|q| q.span() > 0);
    if let Some(q) = &square_root {
        notes.push(format!("Δ is a perfect square: ({q})²; consistent with a connected sum K # K"));
    }
    if !reductions.is_empty() {
        let last = reductions.last().unwrap();
        notes.push(format!(
            "{knot} = {}{reduced}",
            if last.mirrored { "mirror of " } else { "" }
        ));
    }
    let expectation = predict_family(knot);

    Ok(AnalysisReport {
        triple: [knot.a(), knot.b(), knot.c()],
        reductions,
        reduced_triple: [reduced.a(), reduced.b(), reduced.c()],
        crossings: crossings.iter().map(CrossingRecord::from).collect(),
        diagram_crossings: gauss_code.crossing_count(),
        gauss_code,
        conway,
        fraction,
        fraction_source,
        crossing_number,
        alexander: to_i64s(&delta)?,
        determinant: det.to_u64().ok_or_else(|| ClassifyError::Internal(format!("determinant {det} exceeds 64 bits")))?,
        name,
        identification: id,
        canonical_h4: canonical,
        alexander_square_root: square_root.as_ref().map(to_i64s).transpose()?,
        expectation,
        notes,
    })
}

/// Triples `3 ≤ a < b < c` with `(a−1)(b−1) ≤ max_ab`, `gcd(c, ab) = 1`
/// and `c` not of the form `λa + μb` with `λ, μ > 0`, sorted.
pub fn table_triples(max_ab: u64) -> Vec<HarmonicTriple> {
    let mut out = Vec::new();
    for a in 3u64.. {
        if (a - 1) * a > max_ab {
            break;
        }
        for b in a + 1.. {
            if (a - 1) * (b - 1) > max_ab {
                break;
            }
            if a.gcd(&b) != 1 {
                continue;
            }
            for c in b + 1..a * b {
                let representable = (1..).map(|l| l * a).take_while(|&la| la < c).any(|la| (c - la) % b == 0);
                if c.gcd(&(a * b)) == 1 && !representable {
                    out.push(HarmonicTriple::new(a, b, c).expect("coprime by construction"));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub triple: HarmonicTriple,
    pub fraction: Option<Fraction>,
    pub crossing_number: Option<u64>,
    pub name: Option<String>,
}

pub fn table(max_ab: u64) -> Result<Vec<TableRow>, ClassifyError> {
    table_triples(max_ab)
        .into_iter()
        .map(|t| {
            let r = analyze(&t)?;
            let fraction = if t.a() <= 4 { r.fraction.map(|f| f.canonical_up_to_mirror()) } else { None };
            Ok(TableRow { triple: t, fraction, crossing_number: r.crossing_number, name: r.name })
        })
        .collect()
}
