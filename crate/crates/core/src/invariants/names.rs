//! Knot names for the harmonic knots of small diagrams.
//!
//! Two embedded text files back this module: the table of harmonic knots
//! with `(a−1)(b−1) ≤ 30` as printed in the literature, and a name table
//! keyed by Alexander polynomial and determinant that is derived from it
//! (see `build_name_table`, and the `name_table` example which writes the
//! file).

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::{alexander, alexander_of_fraction, alexander_schubert, determinant, LaurentPoly};
use crate::cfrac::{crossing_number_positive, positive_cf, Fraction};
use crate::chebgeom::HarmonicTriple;
use crate::diagram::{build_gauss_code, ConwayForm, DiagramError};

const PUBLISHED_TABLE: &str = include_str!("../../data/published_table.txt");
const NAME_TABLE: &str = include_str!("../../data/knot_names.txt");

/// Knots named in the running text rather than in the table.
const EXTRA_NAMES: &[(&str, [u64; 3])] = &[("8₁₇", [7, 9, 11]), ("10₁₁₅", [9, 11, 13])];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PublishedRow {
    pub triple: HarmonicTriple,
    pub fraction: Option<Fraction>,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NameEntry {
    pub name: String,
    pub crossing_number: u64,
    pub determinant: u64,
    pub alexander: Vec<i64>,
    pub fraction: Option<Fraction>,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "names", rename_all = "snake_case")]
pub enum Identification {
    Identified(String),
    Ambiguous(Vec<String>),
    Unidentified,
}

impl Identification {
    pub fn name(&self) -> Option<&str> {
        match self {
            Identification::Identified(n) => Some(n),
            _ => None,
        }
    }
}

fn parse_fraction(s: &str) -> Option<Fraction> {
    if s == "-" {
        return None;
    }
    let (a, b) = s.split_once('/').unwrap_or((s, "1"));
    Fraction::new(a.trim().parse::<i64>().ok()?, b.trim().parse::<i64>().ok()?).ok()
}

fn records(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split('|').map(str::trim).collect())
}

/// The 51 rows of the published table, in table order.
pub fn published_rows() -> Vec<PublishedRow> {
    records(PUBLISHED_TABLE)
        .map(|f| {
            let n = |i: usize| f[i].parse::<u64>().expect("published table: integer field");
            PublishedRow {
                triple: HarmonicTriple::new(n(0), n(1), n(2)).expect("published table: valid triple"),
                fraction: parse_fraction(f[3]),
                name: f[4].to_string(),
            }
        })
        .collect()
}

pub fn published_row(triple: &HarmonicTriple) -> Option<PublishedRow> {
    published_rows().into_iter().find(|r| &r.triple == triple)
}

/// Crossing number encoded in a knot name: `10₁₃₄` → 10, `12n356` → 12,
/// `4₁#4₁` → 8.
pub fn crossing_number_of_name(name: &str) -> Option<u64> {
    name.split('#')
        .map(|part| {
            let digits: String = part.chars().take_while(|c| c.is_ascii_digit()).collect();
            digits.parse::<u64>().ok()
        })
        .sum()
}

pub fn name_table() -> Vec<NameEntry> {
    records(NAME_TABLE)
        .map(|f| NameEntry {
            name: f[0].to_string(),
            crossing_number: f[1].parse().expect("name table: crossing number"),
            determinant: f[2].parse().expect("name table: determinant"),
            alexander: f[3].split(',').map(|c| c.trim().parse().expect("name table: coefficient")).collect(),
            fraction: parse_fraction(f[4]),
            source: f[5].to_string(),
        })
        .collect()
}

/// Names whose Alexander polynomial and determinant match, restricted to
/// knots whose crossing number does not exceed the diagram's.
pub fn identify(delta: &LaurentPoly, det: &BigInt, diagram_crossings: usize) -> Identification {
    let coeffs = delta.normalized().coeffs_i64();
    let names: BTreeSet<String> = name_table()
        .into_iter()
        .filter(|e| Some(&e.alexander) == coeffs.as_ref())
        .filter(|e| det.to_u64() == Some(e.determinant))
        .filter(|e| e.crossing_number as usize <= diagram_crossings)
        .map(|e| e.name)
        .collect();
    match names.len() {
        0 => Identification::Unidentified,
        1 => Identification::Identified(names.into_iter().next().unwrap()),
        _ => Identification::Ambiguous(names.into_iter().collect()),
    }
}

fn harmonic_invariants(t: &HarmonicTriple) -> Result<(LaurentPoly, BigInt), DiagramError> {
    let gc = build_gauss_code(t)?;
    Ok((alexander(&gc)?, determinant(&gc)?))
}

fn internal(msg: String) -> DiagramError {
    DiagramError::Internal(msg)
}

/// Recomputes the name table from the published rows.
///
/// A name with a printed fraction is a two-bridge knot: its polynomial comes
/// from the Schubert form, and must agree with both the 4-plat diagram of
/// the fraction and the harmonic diagram of every row carrying that name.
/// Names without a fraction take their invariants from the harmonic diagram
/// of the first row that carries them.
pub fn build_name_table() -> Result<Vec<NameEntry>, DiagramError> {
    let rows = published_rows();
    let mut names: Vec<(String, HarmonicTriple)> = Vec::new();
    for r in &rows {
        if !names.iter().any(|(n, _)| n == &r.name) {
            names.push((r.name.clone(), r.triple));
        }
    }
    for (n, t) in EXTRA_NAMES {
        names.push((n.to_string(), HarmonicTriple::new(t[0], t[1], t[2]).map_err(DiagramError::from)?));
    }
    let mut out = Vec::new();
    for (name, source) in names {
        let fraction = rows.iter().filter(|r| r.name == name).find_map(|r| r.fraction.clone());
        let (delta, det, cn) = match &fraction {
            Some(f) => {
                let delta = alexander_schubert(f)?;
                let cf = positive_cf(&f.value()).map_err(|e| internal(e.to_string()))?;
                let plat = alexander_of_fraction(&ConwayForm::new(cf.into_terms()))?;
                if plat != delta {
                    return Err(internal(format!("{name}: Schubert form gives {delta}, 4-plat gives {plat}")));
                }
                let cn = crossing_number_positive(&f.value()).map_err(|e| internal(e.to_string()))?;
                (delta, f.alpha().clone(), cn)
            }
            None => {
                let (delta, det) = harmonic_invariants(&source)?;
                let cn = crossing_number_of_name(&name).ok_or_else(|| internal(format!("bad name {name}")))?;
                (delta, det, cn)
            }
        };
        for r in rows.iter().filter(|r| r.name == name) {
            let (d, k) = harmonic_invariants(&r.triple)?;
            if d != delta || k != det {
                return Err(internal(format!("{} disagrees with {name}: Δ = {d}, det = {k}", r.triple)));
            }
        }
        let alexander = delta.coeffs_i64().ok_or_else(|| internal(format!("{name}: huge coefficients")))?;
        let determinant = det.to_u64().ok_or_else(|| internal(format!("{name}: huge determinant")))?;
        out.push(NameEntry { name, crossing_number: cn, determinant, alexander, fraction, source: source.to_string() });
    }
    Ok(out)
}

/// Text of the name table file for `entries`.
pub fn format_name_table(entries: &[NameEntry]) -> String {
    let mut s = String::from(
        "# Knot names keyed by normalized Alexander polynomial and determinant.\n\
         # Generated by `cargo run -p harmonic-knots --example name_table`.\n\
         # name | crossing number | determinant | Alexander coefficients | fraction or - | source\n",
    );
    for e in entries {
        let coeffs: Vec<String> = e.alexander.iter().map(|c| c.to_string()).collect();
        let frac = e.fraction.as_ref().map_or("-".to_string(), |f| f.to_string());
        writeln!(s, "{} | {} | {} | {} | {} | {}", e.name, e.crossing_number, e.determinant, coeffs.join(","), frac, e.source)
            .unwrap();
    }
    s
}
