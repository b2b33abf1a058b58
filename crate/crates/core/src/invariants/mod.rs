//! Alexander polynomial and determinant of a Gauss code, through the
//! Wirtinger presentation and Fox calculus, plus a small embedded table of
//! knot names.

mod laurent;
mod names;

pub use laurent::LaurentPoly;
pub use names::{
    build_name_table, crossing_number_of_name, format_name_table, identify, name_table, published_row, published_rows,
    Identification, NameEntry, PublishedRow,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::cfrac::Fraction;
use crate::diagram::{diagram_from_conway, ConwayForm, DiagramError, GaussCode, Passage};
use crate::exact::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WirtingerRelation {
    pub overstrand_arc: usize,
    pub incoming_arc: usize,
    pub outgoing_arc: usize,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WirtingerPresentation {
    pub arc_count: usize,
    pub relations: Vec<WirtingerRelation>,
}

/// Arcs run from one under-passage to the next; arc `i` starts right after
/// the `i`-th under-passage of the traversal.
pub fn wirtinger(gc: &GaussCode) -> Result<WirtingerPresentation, DiagramError> {
    let entries = gc.entries();
    let n = gc.crossing_count();
    if entries.len() != 2 * n {
        return Err(DiagramError::MalformedCode("odd number of passages".into()));
    }
    if n == 0 {
        return Ok(WirtingerPresentation { arc_count: 1, relations: Vec::new() });
    }
    let first_under = entries
        .iter()
        .position(|e| e.passage == Passage::Under)
        .ok_or_else(|| DiagramError::MalformedCode("no under-passages".into()))?;
    let mut over_arc = vec![None; n];
    let mut in_arc = vec![None; n];
    let mut out_arc = vec![None; n];
    let mut sign = vec![0; n];
    // walk once around starting at the first under-passage; the arc before it is the last arc
    let mut arc = n - 1;
    for step in 0..entries.len() {
        let e = entries[(first_under + step) % entries.len()];
        if e.id >= n {
            return Err(DiagramError::MalformedCode(format!("crossing id {} out of range", e.id)));
        }
        sign[e.id] = e.sign;
        match e.passage {
            Passage::Over => over_arc[e.id] = Some(arc),
            Passage::Under => {
                in_arc[e.id] = Some(arc);
                arc = (arc + 1) % n;
                out_arc[e.id] = Some(arc);
            }
        }
    }
    let mut relations = Vec::with_capacity(n);
    for id in 0..n {
        match (over_arc[id], in_arc[id], out_arc[id]) {
            (Some(o), Some(i), Some(u)) => relations.push(WirtingerRelation {
                overstrand_arc: o,
                incoming_arc: i,
                outgoing_arc: u,
                sign: sign[id],
            }),
            _ => return Err(DiagramError::MalformedCode(format!("crossing {id} lacks a passage"))),
        }
    }
    Ok(WirtingerPresentation { arc_count: n, relations })
}

/// Abelianized Fox Jacobian, one row per relation.
///
/// A positive crossing gives `x_o x_i x_o⁻¹ x_u⁻¹`, a negative one
/// `x_o⁻¹ x_i x_o x_u⁻¹`; the latter row is multiplied by `t`.
fn fox_matrix(w: &WirtingerPresentation) -> Vec<Vec<LaurentPoly>> {
    let n = w.arc_count;
    let t = LaurentPoly::monomial(1, 1);
    let one = LaurentPoly::one();
    let mut m = vec![vec![LaurentPoly::zero(); n]; w.relations.len()];
    for (r, rel) in w.relations.iter().enumerate() {
        let (do_, di, du) = if rel.sign > 0 {
            (&one - &t, t.clone(), -one.clone())
        } else {
            (&t - &one, one.clone(), -t.clone())
        };
        let row = &mut m[r];
        row[rel.overstrand_arc] = &row[rel.overstrand_arc] + &do_;
        row[rel.incoming_arc] = &row[rel.incoming_arc] + &di;
        row[rel.outgoing_arc] = &row[rel.outgoing_arc] + &du;
    }
    m
}

/// Determinant by fraction-free (Bareiss) elimination over `Z[t, t⁻¹]`, up
/// to sign.
fn bareiss_poly(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        // prefer a pivot with the fewest terms to keep the entries short
        let pivot = (k..n)
            .filter(|&r| !m[r][k].is_zero())
            .min_by_key(|&r| m[r][k].coeffs().len());
        let Some(p) = pivot else { return LaurentPoly::zero() };
        m.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        LaurentPoly::one()
    } else {
        m[n - 1][n - 1].clone()
    }
}

fn bareiss_int(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else { return BigInt::zero() };
        m.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num.div_floor(&prev);
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        BigInt::one()
    } else {
        m[n - 1][n - 1].clone()
    }
}

fn minor(m: Vec<Vec<LaurentPoly>>) -> Vec<Vec<LaurentPoly>> {
    let n = m.len().saturating_sub(1);
    m.into_iter()
        .take(n)
        .map(|mut row| {
            row.truncate(n);
            row
        })
        .collect()
}

/// Normalized Alexander polynomial: lowest exponent 0, positive constant
/// term, `Δ(1) = ±1`.
pub fn alexander(gc: &GaussCode) -> Result<LaurentPoly, DiagramError> {
    let w = wirtinger(gc)?;
    let delta = bareiss_poly(minor(fox_matrix(&w))).normalized();
    if delta.eval_i64(1).abs() != BigInt::one() {
        return Err(DiagramError::Internal(format!("Alexander polynomial {delta} has Δ(1) ≠ ±1")));
    }
    Ok(delta)
}

/// `|Δ(−1)|`, computed from the Fox matrix evaluated at `t = −1`.
pub fn determinant(gc: &GaussCode) -> Result<BigInt, DiagramError> {
    let w = wirtinger(gc)?;
    let m: Vec<Vec<BigInt>> = minor(fox_matrix(&w))
        .into_iter()
        .map(|row| row.into_iter().map(|p| p.eval_i64(-1)).collect())
        .collect();
    Ok(bareiss_int(m).abs())
}

/// Alexander polynomial of the two-bridge knot `C(a_1, ..., a_n)` read from
/// its 4-plat diagram.
pub fn alexander_of_fraction(cf: &ConwayForm) -> Result<LaurentPoly, DiagramError> {
    alexander(&diagram_from_conway(cf)?)
}

/// Alexander polynomial of the two-bridge knot `S(α, β)` from the
/// Schubert normal form: `Σ_{k<α} (−1)^k t^{σ_k}` with
/// `σ_k = Σ_{i≤k} (−1)^{⌊iβ/α⌋}` and `β` odd.
pub fn alexander_schubert(f: &Fraction) -> Result<LaurentPoly, DiagramError> {
    let alpha = f.alpha().clone();
    if alpha.is_even() {
        return Err(DiagramError::NotAKnot(f.to_string()));
    }
    let mut beta = f.beta().mod_floor(&alpha);
    if beta.is_even() {
        beta -= &alpha;
    }
    let alpha_i: i64 = i64::try_from(&alpha)
        .map_err(|_| DiagramError::InvalidParameters(format!("α = {alpha} is too large")))?;
    let mut coeffs: std::collections::BTreeMap<i64, i64> = Default::default();
    let mut sigma = 0i64;
    for k in 0..alpha_i {
        if k > 0 {
            let fl = (BigInt::from(k) * &beta).div_floor(&alpha);
            sigma += if fl.is_even() { 1 } else { -1 };
        }
        *coeffs.entry(sigma).or_default() += if k % 2 == 0 { 1 } else { -1 };
    }
    let low = *coeffs.keys().next().unwrap();
    let high = *coeffs.keys().last().unwrap();
    let dense = (low..=high).map(|e| coeffs.get(&e).copied().unwrap_or(0)).collect::<Vec<_>>();
    Ok(LaurentPoly::from_i64s(low, &dense).normalized())
}

/// `q` with `q² = p`, normalized, if `p` is a square in `Z[t]` up to units.
pub fn factor_square(p: &LaurentPoly) -> Option<LaurentPoly> {
    let p = p.normalized();
    if p.is_zero() || p.span() % 2 == 1 {
        return None;
    }
    let c = p.coeffs();
    let q0 = c[0].sqrt();
    if &q0 * &q0 != c[0] {
        return None;
    }
    let m = p.span() / 2;
    // solve for q coefficient by coefficient from the low end
    let mut q = vec![q0.clone()];
    for k in 1..=m {
        let mut s = c[k].clone();
        for i in 1..k {
            s -= &q[i] * &q[k - i];
        }
        let two_q0 = &q0 * 2;
        let (qk, r) = s.div_rem(&two_q0);
        if !r.is_zero() {
            return None;
        }
        q.push(qk);
    }
    let q = LaurentPoly::from_coeffs(0, q).normalized();
    let sq = (&q * &q).normalized();
    (sq == p).then_some(q)
}
