//! Double points of the Chebyshev plane curve `x = T_a(t), y = T_b(t)` and
//! the over/under data contributed by `z = T_c(t)`.
//!
//! A double point is indexed by positive integers `(h, k)` with
//! `k/a + h/b < 1`; its two parameters are `t = cos τ` and `s = cos σ` where
//! `τ = (k/a + h/b)π` and `σ = (k/a − h/b)π`. With `t = cos θ` one has
//! `T_n(t) = cos nθ` and `T_n'(t) = n sin nθ / sin θ`, so every sign needed
//! here is a sign of a sine at a rational multiple of π.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{compare_cos, parity_sign, sign_cos, sign_sin, RationalAngle, Sign};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("H({a},{b},{c}) is not a knot: {reason}")]
    InvalidTriple { a: u64, b: u64, c: u64, reason: String },
    #[error("({h},{k}) is not a crossing of the Chebyshev curve C({a},{b})")]
    NotACrossing { a: u64, b: u64, h: u64, k: u64 },
    #[error("zero sine factor at crossing ({h},{k}) of H({a},{b},{c})")]
    DegenerateSign { a: u64, b: u64, c: u64, h: u64, k: u64 },
}

/// Parameters of a harmonic knot `H(a,b,c)`: pairwise coprime, `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HarmonicTriple {
    a: u64,
    b: u64,
    c: u64,
}

impl HarmonicTriple {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self, GeomError> {
        let invalid = |reason: String| GeomError::InvalidTriple { a, b, c, reason };
        if a == 0 || b == 0 || c == 0 {
            return Err(invalid("parameters must be positive".into()));
        }
        for (x, y, nx, ny) in [(a, b, "a", "b"), (a, c, "a", "c"), (b, c, "b", "c")] {
            let g = x.gcd(&y);
            if g != 1 {
                return Err(invalid(format!("{nx}={x} and {ny}={y} are not coprime (gcd {g})")));
            }
        }
        if a >= b {
            return Err(invalid(format!("expected a < b, got a={a}, b={b}")));
        }
        Ok(HarmonicTriple { a, b, c })
    }

    pub fn a(&self) -> u64 {
        self.a
    }
    pub fn b(&self) -> u64 {
        self.b
    }
    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn with_c(&self, c: u64) -> Result<Self, GeomError> {
        HarmonicTriple::new(self.a, self.b, c)
    }

    /// `(a−1)(b−1)/2`.
    pub fn crossing_count(&self) -> usize {
        ((self.a - 1) * (self.b - 1) / 2) as usize
    }

    fn is_crossing(&self, h: u64, k: u64) -> bool {
        h >= 1 && k >= 1 && k * self.b + h * self.a < self.a * self.b
    }

    /// All pairs `(h, k)` with `h, k ≥ 1` and `k/a + h/b < 1`.
    pub fn crossing_pairs(&self) -> Vec<(u64, u64)> {
        let mut pairs = Vec::with_capacity(self.crossing_count());
        for k in 1..self.a {
            for h in 1..self.b {
                if self.is_crossing(h, k) {
                    pairs.push((h, k));
                }
            }
        }
        pairs
    }

    /// Angle `m·π/(ab)`; crossing parameters all live on this lattice.
    fn lattice_angle(&self, m: i64) -> RationalAngle {
        RationalAngle::new(m, (self.a * self.b) as i64)
    }

    /// `τ = (k/a + h/b)π`.
    pub fn t_angle(&self, h: u64, k: u64) -> RationalAngle {
        self.lattice_angle((k * self.b + h * self.a) as i64)
    }

    /// `σ = (k/a − h/b)π`.
    pub fn s_angle(&self, h: u64, k: u64) -> RationalAngle {
        self.lattice_angle(k as i64 * self.b as i64 - h as i64 * self.a as i64)
    }
}

impl fmt::Display for HarmonicTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{},{})", self.a, self.b, self.c)
    }
}

/// One double point of the diagram.
#[derive(Clone, Debug)]
pub struct Crossing {
    pub h: u64,
    pub k: u64,
    pub t_angle: RationalAngle,
    pub s_angle: RationalAngle,
    /// `+1` for a right twist, i.e. `D = (z(t) − z(s)) x'(t) y'(t) > 0`.
    pub sign: Sign,
    /// Whether the branch through parameter `t` is the upper one.
    pub over_at_t: bool,
    /// Writhe sign for the orientation of increasing curve parameter.
    pub oriented_sign: Sign,
    /// Rank among crossings sorted by decreasing x (0 = rightmost).
    pub x_order: usize,
    /// Rank of the crossing's horizontal line, from the bottom (0) up.
    pub y_level: usize,
    /// Whether the crossing lies on the x-axis (`y = 0`).
    pub on_axis: bool,
}

impl Crossing {
    /// The parameter angle of the branch that passes over, folded to `(0, π)`.
    pub fn over_angle(&self) -> RationalAngle {
        if self.over_at_t {
            folded(&self.t_angle)
        } else {
            folded(&self.s_angle)
        }
    }

    pub fn under_angle(&self) -> RationalAngle {
        if self.over_at_t {
            folded(&self.s_angle)
        } else {
            folded(&self.t_angle)
        }
    }
}

fn folded(x: &RationalAngle) -> RationalAngle {
    RationalAngle::from_ratio(&x.fold_cos())
}

fn nonzero(s: Sign, k: &HarmonicTriple, h: u64, kk: u64) -> Result<Sign, GeomError> {
    if s == 0 {
        Err(GeomError::DegenerateSign { a: k.a, b: k.b, c: k.c, h, k: kk })
    } else {
        Ok(s)
    }
}

fn check_pair(knot: &HarmonicTriple, h: u64, k: u64) -> Result<(), GeomError> {
    if knot.is_crossing(h, k) {
        Ok(())
    } else {
        Err(GeomError::NotACrossing { a: knot.a, b: knot.b, h, k })
    }
}

/// Sign of `z(t) − z(s) ∼ −sin(chπ/b) sin(ckπ/a)`.
pub fn z_difference_sign(knot: &HarmonicTriple, h: u64, k: u64) -> Result<Sign, GeomError> {
    check_pair(knot, h, k)?;
    let (a, b, c) = (knot.a as i64, knot.b as i64, knot.c as i64);
    let ab = a * b;
    // ch/b and ck/a over the shared denominator ab
    let s1 = sign_sin(&RationalAngle::new(c * h as i64 * a, ab));
    let s2 = sign_sin(&RationalAngle::new(c * k as i64 * b, ab));
    nonzero(-s1 * s2, knot, h, k)
}

/// Sign of `x'(t) y'(t) ∼ (−1)^{h+k} sin(ahπ/b) sin(bkπ/a)`.
pub fn xy_derivative_sign(knot: &HarmonicTriple, h: u64, k: u64) -> Result<Sign, GeomError> {
    check_pair(knot, h, k)?;
    let (a, b) = (knot.a as i64, knot.b as i64);
    let ab = a * b;
    let s1 = sign_sin(&RationalAngle::new(a * h as i64 * a, ab));
    let s2 = sign_sin(&RationalAngle::new(b * k as i64 * b, ab));
    nonzero(parity_sign((h + k) as i64) * s1 * s2, knot, h, k)
}

/// `+1` iff the crossing `(h, k)` is a right twist.
pub fn crossing_sign(knot: &HarmonicTriple, h: u64, k: u64) -> Result<Sign, GeomError> {
    Ok(z_difference_sign(knot, h, k)? * xy_derivative_sign(knot, h, k)?)
}

/// Whether the branch at parameter `t` passes over the one at `s`.
pub fn over_strand(knot: &HarmonicTriple, h: u64, k: u64) -> Result<bool, GeomError> {
    Ok(z_difference_sign(knot, h, k)? > 0)
}

/// Signs of `(x'(t), y'(t))` at `t = cos θ`, `θ ∈ (0, π)`.
pub fn tangent_signs(knot: &HarmonicTriple, theta: &RationalAngle) -> (Sign, Sign) {
    let theta = folded(theta);
    (
        sign_sin(&theta.scale(knot.a as i64)),
        sign_sin(&theta.scale(knot.b as i64)),
    )
}

/// Writhe sign of a crossing for the orientation of increasing `t`.
///
/// The two branches through a double point have slopes of opposite sign, so
/// both terms of the cross product `o_x u_y − o_y u_x` share a sign and the
/// result only needs `sign(o_x)·sign(u_y)`.
fn oriented_sign(knot: &HarmonicTriple, over: &RationalAngle, under: &RationalAngle) -> Option<Sign> {
    let (ox, oy) = tangent_signs(knot, over);
    let (ux, uy) = tangent_signs(knot, under);
    if ox * oy * ux * uy != -1 {
        return None;
    }
    Some(ox * uy)
}

/// `x` of the crossing is `cos(a τ)`.
fn x_angle(knot: &HarmonicTriple, t_angle: &RationalAngle) -> RationalAngle {
    t_angle.scale(knot.a as i64)
}

fn y_angle(knot: &HarmonicTriple, t_angle: &RationalAngle) -> RationalAngle {
    t_angle.scale(knot.b as i64)
}

/// All `(a−1)(b−1)/2` crossings, sorted by decreasing x (ties: decreasing y).
pub fn enumerate_crossings(knot: &HarmonicTriple) -> Result<Vec<Crossing>, GeomError> {
    let mut out = Vec::with_capacity(knot.crossing_count());
    for (h, k) in knot.crossing_pairs() {
        let t_angle = knot.t_angle(h, k);
        let s_angle = knot.s_angle(h, k);
        let over_at_t = over_strand(knot, h, k)?;
        let sign = crossing_sign(knot, h, k)?;
        let (over, under) = if over_at_t { (&t_angle, &s_angle) } else { (&s_angle, &t_angle) };
        let oriented = oriented_sign(knot, over, under)
            .ok_or(GeomError::DegenerateSign { a: knot.a, b: knot.b, c: knot.c, h, k })?;
        let on_axis = sign_cos(&y_angle(knot, &t_angle)) == 0;
        out.push(Crossing {
            h,
            k,
            t_angle,
            s_angle,
            sign,
            over_at_t,
            oriented_sign: oriented,
            x_order: 0,
            y_level: 0,
            on_axis,
        });
    }
    out.sort_by(|p, q| {
        compare_cos(&x_angle(knot, &q.t_angle), &x_angle(knot, &p.t_angle))
            .then_with(|| compare_cos(&y_angle(knot, &q.t_angle), &y_angle(knot, &p.t_angle)))
    });
    for (i, c) in out.iter_mut().enumerate() {
        c.x_order = i;
    }
    // distinct y values, ascending
    let mut ys: Vec<RationalAngle> = Vec::new();
    for c in &out {
        let y = y_angle(knot, &c.t_angle);
        if !ys.iter().any(|v| compare_cos(v, &y) == Ordering::Equal) {
            ys.push(y);
        }
    }
    ys.sort_by(compare_cos);
    for c in out.iter_mut() {
        let y = y_angle(knot, &c.t_angle);
        c.y_level = ys.iter().position(|v| compare_cos(v, &y) == Ordering::Equal).unwrap();
    }
    Ok(out)
}
