//! `hknot`: analyze harmonic knots, regenerate the table, inspect fractions.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use harmonic_knots::chebgeom::HarmonicTriple;
use harmonic_knots::cfrac::Fraction;
use harmonic_knots::classify::{
    analyze, cf_report, table, AnalysisReport, CfReport, ClassifyError, FractionSource, TableRow,
};
use harmonic_knots::render::{render_billiard, render_xy, RenderOptions};

#[derive(Parser)]
#[command(name = "hknot", version, about = "Harmonic knots H(a,b,c): diagrams, fractions, invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze H(a,b,c)
    Analyze {
        a: u64,
        b: u64,
        c: u64,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
        /// Write the Chebyshev diagram as SVG
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        /// Write the billiard trajectory as SVG
        #[arg(long, value_name = "PATH")]
        billiard: Option<PathBuf>,
        /// Label crossings with their writhe signs in the SVG output
        #[arg(long)]
        signs: bool,
    },
    /// Regenerate the table of harmonic knots with (a−1)(b−1) ≤ N
    Table {
        #[arg(long, value_name = "N", default_value_t = 30)]
        max_ab: u64,
        #[arg(long)]
        json: bool,
    },
    /// Continued-fraction facts about the Schubert fraction alpha/beta
    Cf {
        alpha: i64,
        #[arg(allow_negative_numbers = true)]
        beta: i64,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Input(String),
    Internal(String),
    Io(String),
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        if e.is_invalid_input() {
            Failure::Input(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { a, b, c, json, svg, billiard, signs } => cmd_analyze(a, b, c, json, svg, billiard, signs),
        Command::Table { max_ab, json } => cmd_table(max_ab, json),
        Command::Cf { alpha, beta, json } => cmd_cf(alpha, beta, json),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v).map(|s| s + "\n").map_err(|e| Failure::Internal(e.to_string()))
}

fn write_svg(path: &PathBuf, svg: &str) -> Result<(), Failure> {
    std::fs::write(path, svg).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}

fn cmd_analyze(
    a: u64,
    b: u64,
    c: u64,
    as_json: bool,
    svg: Option<PathBuf>,
    billiard: Option<PathBuf>,
    signs: bool,
) -> Result<String, Failure> {
    let knot = HarmonicTriple::new(a, b, c).map_err(|e| Failure::from(ClassifyError::from(e)))?;
    let report = analyze(&knot)?;
    let opts = RenderOptions { annotate_signs: signs, ..Default::default() };
    if let Some(path) = &svg {
        write_svg(path, &render_xy(&knot, &opts).map_err(ClassifyError::from)?)?;
    }
    if let Some(path) = &billiard {
        write_svg(path, &render_billiard(&knot, &opts).map_err(ClassifyError::from)?)?;
    }
    if as_json {
        json(&report)
    } else {
        Ok(human_report(&knot, &report))
    }
}

/// `α/β` in lowest terms up to mirror, printed as `α` when `β = 1`.
fn show_fraction(f: &Fraction) -> String {
    let c = f.canonical_up_to_mirror();
    if c.beta() == &1.into() {
        c.alpha().to_string()
    } else {
        c.to_string()
    }
}

fn terms(t: &[i64]) -> String {
    t.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
}

fn human_report(knot: &HarmonicTriple, r: &AnalysisReport) -> String {
    let mut s = String::new();
    writeln!(s, "{knot}").unwrap();
    writeln!(s, "  diagram crossings  {}", r.diagram_crossings).unwrap();
    if !r.reductions.is_empty() {
        let chain: Vec<String> = r.reductions.iter().map(|st| format!("c = {} → {}", st.from_c, st.to_c)).collect();
        writeln!(s, "  reductions         {}", chain.join(", ")).unwrap();
    }
    if let Some(canon) = &r.canonical_h4 {
        writeln!(
            s,
            "  canonical form     {}H(4,{},{})",
            if canon.mirrored { "mirror of " } else { "" },
            canon.b_prime,
            canon.c_prime
        )
        .unwrap();
    }
    if let Some(cf) = &r.conway {
        writeln!(s, "  Conway form        C({})", terms(cf)).unwrap();
    }
    match &r.fraction {
        Some(f) => {
            let source = match r.fraction_source {
                Some(FractionSource::Diagram) => "read off the diagram",
                Some(FractionSource::CanonicalH4) => "closed form after reduction",
                Some(FractionSource::PublishedTable) => "published table, matches Δ",
                Some(FractionSource::NameTable) => "name table, matches Δ",
                None => "",
            };
            writeln!(s, "  fraction           {} ({source})", show_fraction(f)).unwrap();
        }
        None => writeln!(s, "  fraction           unknown").unwrap(),
    }
    match r.crossing_number {
        Some(n) => writeln!(s, "  crossing number    {n}").unwrap(),
        None => writeln!(s, "  crossing number    unknown (at most {})", r.diagram_crossings).unwrap(),
    }
    writeln!(s, "  Alexander          {}", r.alexander_poly()).unwrap();
    writeln!(s, "  determinant        {}", r.determinant).unwrap();
    writeln!(s, "  name               {}", r.name.as_deref().unwrap_or("unidentified")).unwrap();
    if let Some(e) = &r.expectation {
        writeln!(s, "  family             {}", e.claim).unwrap();
    }
    for n in &r.notes {
        writeln!(s, "  note: {n}").unwrap();
    }
    s
}

fn cmd_table(max_ab: u64, as_json: bool) -> Result<String, Failure> {
    if max_ab > 60 {
        return Err(Failure::Input(format!("--max-ab {max_ab} is too large (at most 60)")));
    }
    let rows = table(max_ab)?;
    if as_json {
        return json(&rows);
    }
    let mut s = String::new();
    for TableRow { triple, fraction, crossing_number, name } in &rows {
        let frac = fraction.as_ref().map_or("-".to_string(), show_fraction);
        let cn = crossing_number.map_or("-".to_string(), |n| n.to_string());
        writeln!(s, "{:<12} {:>10} {:>4}  {}", triple.to_string(), frac, cn, name.as_deref().unwrap_or("unidentified"))
            .unwrap();
    }
    writeln!(s, "{} knot{}", rows.len(), if rows.len() == 1 { "" } else { "s" }).unwrap();
    Ok(s)
}

fn cmd_cf(alpha: i64, beta: i64, as_json: bool) -> Result<String, Failure> {
    let r = cf_report(alpha, beta)?;
    if as_json {
        return json(&r);
    }
    Ok(human_cf(&r))
}

fn human_cf(r: &CfReport) -> String {
    let mut s = String::new();
    writeln!(s, "{}", r.fraction).unwrap();
    writeln!(s, "  positive expansion {}", r.positive_cf).unwrap();
    writeln!(s, "  crossing number    {}", r.crossing_number).unwrap();
    writeln!(
        s,
        "  β² mod α           {}{}",
        r.beta_squared_mod_alpha,
        if r.beta_squared_pm2 { " (≡ ±2)" } else { "" }
    )
    .unwrap();
    if r.even_representatives.is_empty() {
        writeln!(s, "  no even representative β′ ≡ β^±1 in (0, α)").unwrap();
    }
    for rep in &r.even_representatives {
        let p = &rep.profile;
        let flag = if p.max_run >= 2 { ", two consecutive sign changes" } else { "" };
        writeln!(
            s,
            "  {:<18} {}  ({} sign change{}{}{})",
            rep.fraction.to_string(),
            rep.expansion,
            p.changes.len(),
            if p.changes.len() == 1 { "" } else { "s" },
            flag,
            if p.palindromic { ", palindromic" } else { "" }
        )
        .unwrap();
    }
    s
}
