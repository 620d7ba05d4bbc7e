//! SVG drawings of the dominant chamber of the m-Shi arrangement for n = 3.
//!
//! A point of the chamber is written `(a, b) = (<x, alpha_11>, <x, alpha_22>)`
//! and drawn at `(a + b/2, b * sqrt(3)/2)`, so the two walls of the chamber
//! meet at 60 degrees and the translates of `H_theta` are the slanted family.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::shi::{enumerate_regions, RegionTableau, Root, DEFAULT_REGION_CAP};

const SCALE: f64 = 100.0;
const MARGIN: f64 = 40.0;

type Pt = (f64, f64);

/// Keeps the part of a convex polygon where `f(a, b) = ca*a + cb*b` is at
/// least `level` (`keep_above`) or at most `level`.
fn clip(poly: &[Pt], coeffs: (f64, f64), level: f64, keep_above: bool) -> Vec<Pt> {
    let value = |p: &Pt| {
        let v = coeffs.0 * p.0 + coeffs.1 * p.1 - level;
        if keep_above {
            v
        } else {
            -v
        }
    };
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let cur = poly[i];
        let next = poly[(i + 1) % poly.len()];
        let (vc, vn) = (value(&cur), value(&next));
        if vc >= 0.0 {
            out.push(cur);
        }
        if (vc >= 0.0) != (vn >= 0.0) {
            let t = vc / (vc - vn);
            out.push((cur.0 + t * (next.0 - cur.0), cur.1 + t * (next.1 - cur.1)));
        }
    }
    out
}

fn area(poly: &[Pt]) -> f64 {
    let n = poly.len();
    (0..n)
        .map(|i| {
            let (p, q) = (poly[i], poly[(i + 1) % n]);
            p.0 * q.1 - q.0 * p.1
        })
        .sum::<f64>()
        .abs()
        / 2.0
}

/// Side of the square `0 <= a, b <= extent` in which regions are drawn.
pub fn extent(m: usize) -> f64 {
    m as f64 + 1.5
}

/// Each dominant region with its polygon in `(a, b)` coordinates, clipped to
/// the drawing square.
pub fn region_polygons(m: usize) -> Result<Vec<(RegionTableau, Vec<Pt>)>> {
    let l = extent(m);
    let square = vec![(0.0, 0.0), (l, 0.0), (l, l), (0.0, l)];
    let functionals = [((1, 1), (1.0, 0.0)), ((2, 2), (0.0, 1.0)), ((1, 2), (1.0, 1.0))];
    let mf = m as i64;
    let mut out = Vec::new();
    for e in enumerate_regions(3, m, DEFAULT_REGION_CAP)? {
        let mut poly = square.clone();
        for &((u, v), coeffs) in &functionals {
            let k = e.get(u, v);
            poly = clip(&poly, coeffs, k as f64, true);
            if k < mf {
                poly = clip(&poly, coeffs, (k + 1) as f64, false);
            }
        }
        if area(&poly) > 1e-9 {
            out.push((e, poly));
        }
    }
    Ok(out)
}

fn screen(p: Pt, l: f64) -> Pt {
    let x = p.0 + p.1 / 2.0;
    let y = p.1 * 3f64.sqrt() / 2.0;
    let height = l * 3f64.sqrt() / 2.0;
    (MARGIN + x * SCALE, MARGIN + (height - y) * SCALE)
}

fn fmt_pt(p: Pt) -> String {
    format!("{:.2},{:.2}", p.0, p.1)
}

/// The figure for `n = 3`; regions having `H_{root, m}` as a separating wall
/// are shaded when `root` is given.
pub fn plot_svg(n: usize, m: usize, root: Option<Root>) -> Result<String> {
    if n != 3 {
        return Err(Error::UnsupportedDimension(n));
    }
    if m < 1 {
        return Err(Error::LevelTooSmall);
    }
    if let Some(r) = root {
        Root::new(r.u, r.v, n)?;
    }
    let l = extent(m);
    let width = MARGIN * 2.0 + 1.5 * l * SCALE;
    let height = MARGIN * 2.0 + l * 3f64.sqrt() / 2.0 * SCALE;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(svg, r#"<g id="regions" stroke="none">"#);
    for (e, poly) in region_polygons(m)? {
        let shaded = root.is_some_and(|r| e.is_separating_wall(r));
        let points: Vec<String> = poly.iter().map(|&p| fmt_pt(screen(p, l))).collect();
        let _ = writeln!(
            svg,
            r#"<polygon class="{}" data-tableau="{}" fill="{}" points="{}"/>"#,
            if shaded { "region shaded" } else { "region" },
            e.tableau(),
            if shaded { "#9ecae1" } else { "#f7f7f7" },
            points.join(" ")
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r##"<g id="hyperplanes" stroke="#333" stroke-width="1.5" font-family="serif" font-size="13">"##);
    for k in 0..=m {
        let kf = k as f64;
        let lines = [
            ("1,1", (kf, 0.0), (kf, l)),
            ("2,2", (0.0, kf), (l, kf)),
            ("1,2", (kf, 0.0), (0.0, kf)),
        ];
        for (name, from, to) in lines {
            if name == "1,2" && k == 0 {
                continue;
            }
            let (p, q) = (screen(from, l), screen(to, l));
            let _ = writeln!(
                svg,
                r#"<line class="hyperplane" data-root="{name}" data-level="{k}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
                p.0, p.1, q.0, q.1
            );
            let label = screen(if name == "1,2" { from } else { to }, l);
            let _ = writeln!(
                svg,
                r#"<text x="{:.2}" y="{:.2}" stroke="none">H(α{},{k})</text>"#,
                label.0 + 4.0,
                label.1 + if name == "1,2" { 16.0 } else { -4.0 },
                name.replace(',', "")
            );
        }
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}
