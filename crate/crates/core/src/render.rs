//! SVG drawings of Chebyshev diagrams and their billiard trajectories.

use std::fmt::Write as _;

use crate::chebgeom::{enumerate_crossings, Crossing, GeomError, HarmonicTriple};

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    /// Width of the drawing in pixels; the height follows the aspect ratio.
    pub width: f64,
    pub stroke_width: f64,
    /// Length of the break in the under-strand, in pixels.
    pub gap: f64,
    pub annotate_signs: bool,
    /// Curve samples per unit of parameter angle.
    pub samples: usize,
    pub stroke: String,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width: 480.0,
            stroke_width: 2.0,
            gap: 12.0,
            annotate_signs: false,
            samples: 2000,
            stroke: "#1f3a5f".into(),
        }
    }
}

/// Fixed-precision number formatting keeps the output byte-for-byte stable.
fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn header(s: &mut String, w: f64, h: f64, view_box: &str, title: &str) {
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{view_box}">"#,
        num(w),
        num(h)
    )
    .unwrap();
    writeln!(s, "<title>{title}</title>").unwrap();
}

/// Projection `(T_a(t), T_b(t))` drawn with a break in the lower strand at
/// every crossing.
pub fn render_xy(knot: &HarmonicTriple, opts: &RenderOptions) -> Result<String, GeomError> {
    let crossings = enumerate_crossings(knot)?;
    let (a, b) = (knot.a() as f64, knot.b() as f64);
    let margin = 0.06 * opts.width;
    let w = opts.width;
    let h = opts.width;
    let span = w - 2.0 * margin;
    let to_px = |x: f64, y: f64| (margin + (x + 1.0) / 2.0 * span, margin + (1.0 - y) / 2.0 * span);
    let point = |th: f64| ((a * th).cos(), (b * th).cos());
    let speed_px = |th: f64| {
        let dx = a * (a * th).sin();
        let dy = b * (b * th).sin();
        (dx * dx + dy * dy).sqrt() * span / 2.0
    };

    // parameter intervals removed around each under-passage
    let mut cuts: Vec<(f64, f64)> = crossings
        .iter()
        .map(|c| {
            let th = c.under_angle().to_radians();
            let d = opts.gap / 2.0 / speed_px(th).max(1e-9);
            (th - d, th + d)
        })
        .collect();
    cuts.sort_by(|p, q| p.0.total_cmp(&q.0));

    let mut pieces = Vec::new();
    let mut start = 0.0;
    for &(lo, hi) in &cuts {
        pieces.push((start, lo));
        start = hi;
    }
    pieces.push((start, std::f64::consts::PI));

    let mut s = String::new();
    header(&mut s, w, h, &format!("0 0 {} {}", num(w), num(h)), &knot.to_string());
    writeln!(
        s,
        r#"<g class="diagram" fill="none" stroke="{}" stroke-width="{}" stroke-linecap="round" data-gaps="{}">"#,
        opts.stroke,
        num(opts.stroke_width),
        crossings.len()
    )
    .unwrap();
    let step = 1.0 / opts.samples.max(16) as f64;
    for (lo, hi) in pieces {
        let n = (((hi - lo) / step).ceil() as usize).max(1);
        let mut d = String::new();
        for i in 0..=n {
            let th = lo + (hi - lo) * i as f64 / n as f64;
            let (x, y) = point(th);
            let (px, py) = to_px(x, y);
            write!(d, "{}{},{}", if i == 0 { "M" } else { " L" }, num(px), num(py)).unwrap();
        }
        writeln!(s, r#"<path class="strand" d="{d}"/>"#).unwrap();
    }
    writeln!(s, "</g>").unwrap();
    if opts.annotate_signs {
        annotate(&mut s, &crossings, 12.0, |c| {
            let (x, y) = point(c.over_angle().to_radians());
            to_px(x, y)
        });
    }
    writeln!(s, "</svg>").unwrap();
    Ok(s)
}

fn annotate(s: &mut String, crossings: &[Crossing], size: f64, at: impl Fn(&Crossing) -> (f64, f64)) {
    writeln!(s, r##"<g class="signs" font-family="sans-serif" font-size="{}" fill="#b03a2e">"##, num(size)).unwrap();
    for c in crossings {
        let (x, y) = at(c);
        let label = if c.oriented_sign > 0 { "+" } else { "\u{2212}" };
        writeln!(s, r#"<text class="sign" x="{}" y="{}">{label}</text>"#, num(x + size / 2.0), num(y - size / 2.0)).unwrap();
    }
    writeln!(s, "</g>").unwrap();
}

/// `(X, Y)` of the lattice point `j` in billiard coordinates, where the
/// curve parameter is `cos(jπ/(ab))`.
pub fn billiard_point(knot: &HarmonicTriple, j: u64) -> (i64, i64) {
    let fold = |j: u64, m: u64| {
        let r = j % (2 * m);
        if r <= m {
            r
        } else {
            2 * m - r
        }
    };
    let (a, b) = (knot.a(), knot.b());
    (2 * fold(j, b) as i64 - b as i64, 2 * fold(j, a) as i64 - a as i64)
}

/// Corners of the billiard trajectory: the lattice points on a wall of the
/// rectangle `[−b, b] × [−a, a]`, from `t = 1` to `t = −1`.
pub fn billiard_vertices(knot: &HarmonicTriple) -> Vec<(i64, i64)> {
    let (a, b) = (knot.a(), knot.b());
    (0..=a * b).filter(|j| j % a == 0 || j % b == 0).map(|j| billiard_point(knot, j)).collect()
}

/// The image of the diagram under `(x, y) ↦ (b F(x), a F(y))` with
/// `F(x) = (2/π) arccos x − 1`: a polyline of slope ±1 in the rectangle
/// `[−b, b] × [−a, a]`. Every crossing carries a short over-strand marker.
pub fn render_billiard(knot: &HarmonicTriple, opts: &RenderOptions) -> Result<String, GeomError> {
    let crossings = enumerate_crossings(knot)?;
    let (a, b) = (knot.a() as i64, knot.b() as i64);
    let scale = opts.width / (2 * b + 2) as f64;
    let mut s = String::new();
    let view_box = format!("{} {} {} {}", -b - 1, -a - 1, 2 * b + 2, 2 * a + 2);
    header(&mut s, opts.width, scale * (2 * a + 2) as f64, &view_box, &format!("{knot} billiard"));
    let sw = opts.stroke_width / scale;
    // y grows downward in SVG
    writeln!(s, r#"<g transform="scale(1,-1)">"#).unwrap();
    writeln!(
        s,
        r##"<rect class="table" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#999" stroke-width="{}"/>"##,
        -b,
        -a,
        2 * b,
        2 * a,
        num(sw / 2.0)
    )
    .unwrap();
    let pts: Vec<String> = billiard_vertices(knot).iter().map(|(x, y)| format!("{x},{y}")).collect();
    writeln!(
        s,
        r#"<polyline class="trajectory" fill="none" stroke="{}" stroke-width="{}" stroke-linejoin="round" points="{}"/>"#,
        opts.stroke,
        num(sw),
        pts.join(" ")
    )
    .unwrap();
    let half = opts.gap / 2.0 / scale / std::f64::consts::SQRT_2;
    for c in &crossings {
        let j_over = over_lattice_index(knot, c);
        let (x, y) = billiard_point(knot, j_over);
        let (nx, ny) = billiard_point(knot, j_over + 1);
        let (dx, dy) = ((nx - x).signum() as f64, (ny - y).signum() as f64);
        let (x0, y0, x1, y1) =
            (x as f64 - dx * half, y as f64 - dy * half, x as f64 + dx * half, y as f64 + dy * half);
        writeln!(
            s,
            r##"<g class="crossing" data-h="{}" data-k="{}"><line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#fff" stroke-width="{}"/><line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="{}"/></g>"##,
            c.h,
            c.k,
            num(x0),
            num(y0),
            num(x1),
            num(y1),
            num(3.0 * sw),
            num(x0),
            num(y0),
            num(x1),
            num(y1),
            opts.stroke,
            num(sw)
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();
    if opts.annotate_signs {
        annotate(&mut s, &crossings, 0.6, |c| {
            let (x, y) = billiard_point(knot, over_lattice_index(knot, c));
            (x as f64, -y as f64)
        });
    }
    writeln!(s, "</svg>").unwrap();
    Ok(s)
}

/// Lattice index `j` of the over-passing branch: `kb + ha` for the
/// t-branch, `|kb − ha|` for the s-branch.
fn over_lattice_index(knot: &HarmonicTriple, c: &Crossing) -> u64 {
    let (kb, ha) = (c.k * knot.b(), c.h * knot.a());
    if c.over_at_t {
        kb + ha
    } else {
        kb.abs_diff(ha)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(a: u64, b: u64, c: u64) -> HarmonicTriple {
        HarmonicTriple::new(a, b, c).unwrap()
    }

    #[test]
    fn xy_gaps() {
        for (t, gaps) in [((3, 4, 5), 3), ((4, 5, 7), 6), ((5, 7, 9), 12)] {
            let svg = render_xy(&triple(t.0, t.1, t.2), &RenderOptions::default()).unwrap();
            assert_eq!(svg.matches(r#"class="strand""#).count(), gaps + 1);
            assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        }
    }

    #[test]
    fn deterministic() {
        let k = triple(4, 5, 7);
        let opts = RenderOptions { annotate_signs: true, ..Default::default() };
        assert_eq!(render_xy(&k, &opts).unwrap(), render_xy(&k, &opts).unwrap());
        assert_eq!(render_xy(&k, &opts).unwrap().matches(r#"class="sign""#).count(), 6);
    }

    #[test]
    fn billiard_slopes() {
        let k = triple(5, 6, 7);
        let v = billiard_vertices(&k);
        assert_eq!(v.first(), Some(&(-6, -5)));
        for w in v.windows(2) {
            let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
            assert!(dx != 0 && dx.abs() == dy.abs(), "{w:?}");
        }
        let svg = render_billiard(&triple(3, 4, 5), &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches(r#"class="crossing""#).count(), 3);
        assert!(render_billiard(&triple(3, 5, 7), &RenderOptions::default()).unwrap().contains(r#"width="10" height="6""#));
    }
}
