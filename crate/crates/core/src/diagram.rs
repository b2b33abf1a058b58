//! Knot diagrams: Gauss codes of harmonic knots, Conway normal forms for
//! `a ∈ {3, 4}`, and the standard 4-plat diagram of a Conway form.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cfrac::SignedCF;
use crate::chebgeom::{enumerate_crossings, Crossing, GeomError, HarmonicTriple};
use crate::exact::{compare_cos, sign_sin, RationalAngle, Sign};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error("malformed Gauss code: {0}")]
    MalformedCode(String),
    #[error("b={b} and c={c} must be odd with b ≢ c (mod 4)")]
    ParityError { b: i64, c: i64 },
    #[error("b={b} and c={c} are not coprime")]
    CoprimalityError { b: i64, c: i64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("Conway forms are only read for a ∈ {{3, 4}}, got a={0}")]
    UnsupportedBridge(u64),
    #[error("Conway form has a zero term at position {0}")]
    ZeroTerm(usize),
    #[error("Conway form {0} closes up to a link, not a knot")]
    NotAKnot(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Passage {
    #[serde(rename = "O")]
    Over,
    #[serde(rename = "U")]
    Under,
}

impl Passage {
    pub fn flipped(self) -> Passage {
        match self {
            Passage::Over => Passage::Under,
            Passage::Under => Passage::Over,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussEntry {
    pub id: usize,
    pub passage: Passage,
    pub sign: Sign,
}

/// Cyclic Gauss code of a knot diagram. The two ends of the traversal are
/// joined by an arc that meets no crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct GaussCode {
    entries: Vec<GaussEntry>,
}

impl GaussCode {
    /// Checks that every id appears exactly twice, once over and once under,
    /// with a consistent ±1 sign. Ids are renumbered to `0..n` by first
    /// appearance.
    pub fn new(entries: Vec<GaussEntry>) -> Result<Self, DiagramError> {
        let mut seen: std::collections::BTreeMap<usize, (usize, usize, Sign)> = Default::default();
        for e in &entries {
            if e.sign != 1 && e.sign != -1 {
                return Err(DiagramError::MalformedCode(format!("crossing {} has sign {}", e.id, e.sign)));
            }
            let slot = seen.entry(e.id).or_insert((0, 0, e.sign));
            match e.passage {
                Passage::Over => slot.0 += 1,
                Passage::Under => slot.1 += 1,
            }
            if slot.2 != e.sign {
                return Err(DiagramError::MalformedCode(format!("crossing {} has inconsistent signs", e.id)));
            }
        }
        for (id, (o, u, _)) in &seen {
            if *o != 1 || *u != 1 {
                return Err(DiagramError::MalformedCode(format!(
                    "crossing {id} has {o} over and {u} under passages"
                )));
            }
        }
        let mut rename = std::collections::HashMap::new();
        let entries = entries
            .into_iter()
            .map(|e| {
                let next = rename.len();
                let id = *rename.entry(e.id).or_insert(next);
                GaussEntry { id, ..e }
            })
            .collect();
        Ok(GaussCode { entries })
    }

    pub fn entries(&self) -> &[GaussEntry] {
        &self.entries
    }

    pub fn crossing_count(&self) -> usize {
        self.entries.len() / 2
    }

    /// Same knot traversed in the opposite direction.
    pub fn reversed(&self) -> GaussCode {
        let entries = self.entries.iter().rev().copied().collect();
        GaussCode::new(entries).expect("reversal preserves validity")
    }

    /// Diagram of the mirror image.
    pub fn mirrored(&self) -> GaussCode {
        let entries = self
            .entries
            .iter()
            .map(|e| GaussEntry { id: e.id, passage: e.passage.flipped(), sign: -e.sign })
            .collect();
        GaussCode { entries }
    }

    pub fn writhe(&self) -> i64 {
        self.entries
            .iter()
            .filter(|e| e.passage == Passage::Over)
            .map(|e| e.sign as i64)
            .sum()
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let p = if e.passage == Passage::Over { 'O' } else { 'U' };
            let s = if e.sign > 0 { '+' } else { '-' };
            write!(f, "{p}{}{s}", e.id + 1)?;
        }
        Ok(())
    }
}

/// Conway normal form `C(a_1, ..., a_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConwayForm {
    terms: Vec<i64>,
}

impl ConwayForm {
    pub fn new(terms: Vec<i64>) -> Self {
        ConwayForm { terms }
    }

    pub fn terms(&self) -> &[i64] {
        &self.terms
    }

    pub fn to_cf(&self) -> SignedCF {
        SignedCF::new(self.terms.clone()).unwrap_or_else(|_| SignedCF::new(vec![0]).unwrap())
    }

    pub fn reversed_negated(&self) -> ConwayForm {
        ConwayForm { terms: self.terms.iter().rev().map(|t| -t).collect() }
    }
}

impl fmt::Display for ConwayForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "C({})", parts.join(","))
    }
}

/// Gauss code of `H(a,b,c)` traversed by increasing curve parameter.
pub fn build_gauss_code(knot: &HarmonicTriple) -> Result<GaussCode, DiagramError> {
    let crossings = enumerate_crossings(knot)?;
    gauss_code_from_crossings(&crossings)
}

pub fn gauss_code_from_crossings(crossings: &[Crossing]) -> Result<GaussCode, DiagramError> {
    // (folded angle, crossing index, passage); t = cos θ increases as θ decreases
    let mut params: Vec<(RationalAngle, usize, Passage)> = Vec::with_capacity(2 * crossings.len());
    for (i, c) in crossings.iter().enumerate() {
        params.push((c.over_angle(), i, Passage::Over));
        params.push((c.under_angle(), i, Passage::Under));
    }
    params.sort_by_key(|p| std::cmp::Reverse(p.0.fold_cos()));
    if params.windows(2).any(|w| compare_cos(&w[0].0, &w[1].0) == Ordering::Equal) {
        return Err(DiagramError::Internal("two crossing parameters coincide".into()));
    }
    let entries = params
        .into_iter()
        .map(|(_, i, passage)| GaussEntry { id: i, passage, sign: crossings[i].oriented_sign })
        .collect();
    GaussCode::new(entries)
}

/// The Conway form `[e_1, 2e_2, e_3, 2e_4, ..., e_{b−2}, 2e_{b−1}]` of
/// `H(4,b,c)` with `e_j = sign sin((j − b)θ)` and `θ = (3b − c)π/(4b)`.
pub fn conway_form_h4(b: i64, c: i64) -> Result<ConwayForm, DiagramError> {
    if b.is_even() || c.is_even() || (b - c).rem_euclid(4) == 0 {
        return Err(DiagramError::ParityError { b, c });
    }
    if b.gcd(&c) != 1 {
        return Err(DiagramError::CoprimalityError { b, c });
    }
    if b < 3 || c < 1 {
        return Err(DiagramError::InvalidParameters(format!("need b ≥ 3 and c ≥ 1, got b={b}, c={c}")));
    }
    let mut terms = Vec::with_capacity((b - 1) as usize);
    for j in 1..b {
        let e = sign_sin(&RationalAngle::new((j - b) * (3 * b - c), 4 * b));
        if e == 0 {
            return Err(DiagramError::Internal(format!("zero sine at j={j} for H(4,{b},{c})")));
        }
        let mult = if j % 2 == 1 { 1 } else { 2 };
        terms.push(mult * e as i64);
    }
    Ok(ConwayForm { terms })
}

/// Reads the Conway normal form off the Chebyshev diagram for `a ∈ {3, 4}`.
///
/// For `a = 4` the crossings are taken by increasing x: a crossing on the
/// x-axis contributes its Conway sign `sign D`, and a pair of crossings
/// symmetric about the axis contributes the sum of their Conway signs
/// `−sign D`. For `a = 3` the i-th crossing by decreasing x contributes
/// `(−1)^{i+1} sign D`.
pub fn read_conway_from_diagram(knot: &HarmonicTriple) -> Result<ConwayForm, DiagramError> {
    let crossings = enumerate_crossings(knot)?;
    match knot.a() {
        3 => Ok(ConwayForm {
            terms: crossings
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.sign as i64 } else { -(c.sign as i64) })
                .collect(),
        }),
        4 => read_conway_a4(knot, &crossings),
        a => Err(DiagramError::UnsupportedBridge(a)),
    }
}

fn read_conway_a4(knot: &HarmonicTriple, crossings: &[Crossing]) -> Result<ConwayForm, DiagramError> {
    let x_of = |c: &Crossing| c.t_angle.scale(knot.a() as i64);
    let conway_sign = |c: &Crossing| if c.on_axis { c.sign as i64 } else { -(c.sign as i64) };
    let mut terms = Vec::new();
    // crossings are sorted by decreasing x; walk from the left
    let mut i = crossings.len();
    while i > 0 {
        let c = &crossings[i - 1];
        let mut group = vec![c];
        let mut j = i - 1;
        while j > 0 && compare_cos(&x_of(&crossings[j - 1]), &x_of(c)) == Ordering::Equal {
            group.push(&crossings[j - 1]);
            j -= 1;
        }
        match group.as_slice() {
            [single] if single.on_axis => terms.push(conway_sign(single)),
            [p, q] if !p.on_axis && !q.on_axis => {
                let d = conway_sign(p) + conway_sign(q);
                if d == 0 {
                    return Err(DiagramError::Internal(format!(
                        "{knot} produced a zero twist term; Chebyshev diagrams are never C(..,0,..)"
                    )));
                }
                terms.push(d);
            }
            _ => {
                return Err(DiagramError::Internal(format!(
                    "{knot}: unexpected crossing group of size {} at one abscissa",
                    group.len()
                )))
            }
        }
        i = j;
    }
    Ok(ConwayForm { terms })
}

/// Gauss code of the 4-plat diagram of `C(a_1, ..., a_n)`.
///
/// The diagram is the plat closure of the 4-braid
/// `σ2^{a_1} σ1^{−a_2} σ2^{a_3} ...`, capped on top by the pairs (1,2) and
/// (3,4); at the bottom the caps are (1,2),(3,4) for odd `n` and (1,4),(2,3)
/// for even `n`.
pub fn diagram_from_conway(cf: &ConwayForm) -> Result<GaussCode, DiagramError> {
    if let Some(i) = cf.terms.iter().position(|&t| t == 0) {
        return Err(DiagramError::ZeroTerm(i + 1));
    }
    if cf.terms.is_empty() {
        return Err(DiagramError::InvalidParameters("empty Conway form".into()));
    }
    // (left position of the twisted pair, exponent sign)
    let mut levels: Vec<(usize, i8)> = Vec::new();
    for (i, &t) in cf.terms.iter().enumerate() {
        let (pos, e) = if i % 2 == 0 { (1, t.signum() as i8) } else { (0, -t.signum() as i8) };
        levels.extend(std::iter::repeat_n((pos, e), t.unsigned_abs() as usize));
    }
    let top = [1usize, 0, 3, 2];
    let bottom = if cf.terms.len() % 2 == 1 { [1usize, 0, 3, 2] } else { [3usize, 2, 1, 0] };

    // (level, over?, direction: +1 downward)
    let mut visits: Vec<(usize, bool, i8)> = Vec::new();
    let mut covered = [false; 4];
    let mut pos = 0usize;
    loop {
        covered[pos] = true;
        // down
        for (l, &(g, e)) in levels.iter().enumerate() {
            if pos == g || pos == g + 1 {
                let over = (pos == g) == (e > 0);
                visits.push((l, over, 1));
                pos = if pos == g { g + 1 } else { g };
            }
        }
        pos = bottom[pos];
        // up
        for (l, &(g, e)) in levels.iter().enumerate().rev() {
            if pos == g || pos == g + 1 {
                let next = if pos == g { g + 1 } else { g };
                let over = (next == g) == (e > 0);
                visits.push((l, over, -1));
                pos = next;
            }
        }
        covered[pos] = true;
        pos = top[pos];
        if pos == 0 {
            break;
        }
    }
    if covered.iter().any(|c| !c) || visits.len() != 2 * levels.len() {
        return Err(DiagramError::NotAKnot(cf.to_string()));
    }
    let mut dirs = vec![0i8; levels.len()];
    for &(l, _, d) in &visits {
        dirs[l] = if dirs[l] == 0 { d } else { dirs[l] * d };
    }
    let entries = visits
        .iter()
        .map(|&(l, over, _)| GaussEntry {
            id: l,
            passage: if over { Passage::Over } else { Passage::Under },
            sign: -levels[l].1 * dirs[l],
        })
        .collect();
    GaussCode::new(entries)
}
