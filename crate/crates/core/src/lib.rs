//! Harmonic knots `H(a,b,c)`: the space curves `(T_a(t), T_b(t), T_c(t))`
//! built from Chebyshev polynomials.
//!
//! The crate enumerates their crossings exactly, assembles Gauss codes,
//! reads Conway normal forms and Schubert fractions for `a ≤ 4`, computes
//! Alexander polynomials through Fox calculus, and renders diagrams as SVG.
//!
//! ```
//! use harmonic_knots::{chebgeom::HarmonicTriple, classify::analyze};
//!
//! let r = analyze(&HarmonicTriple::new(3, 5, 7).unwrap()).unwrap();
//! assert_eq!(r.name.as_deref(), Some("4₁"));
//! assert_eq!(r.alexander_poly().to_string(), "1 - 3t + t^2");
//! assert_eq!(r.determinant, 5);
//! ```

pub mod cfrac;
pub mod exact;
pub mod chebgeom;
pub mod diagram;
pub mod invariants;
pub mod classify;
pub mod render;
