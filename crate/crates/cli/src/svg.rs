//! A self-contained 2x2 SVG panel of the figure table.

use std::fmt::Write;

use susy_fisheye::fisheye::FigureTable;

const PANEL_W: f64 = 360.0;
const PANEL_H: f64 = 260.0;
const MARGIN_L: f64 = 64.0;
const MARGIN_R: f64 = 16.0;
const MARGIN_T: f64 = 30.0;
const MARGIN_B: f64 = 40.0;
const TICKS: usize = 5;

struct Curve<'a> {
    title: &'a str,
    label: &'a str,
    colour: &'a str,
    values: &'a [f64],
}

fn range(values: &[f64]) -> (f64, f64) {
    let (lo, hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    if hi > lo {
        let pad = 0.05 * (hi - lo);
        (lo - pad, hi + pad)
    } else {
        (lo - 0.5, hi + 0.5)
    }
}

fn panel(out: &mut String, ox: f64, oy: f64, x: &[f64], curve: &Curve) {
    let (x0, x1) = (x[0], x[x.len() - 1]);
    let (y0, y1) = range(curve.values);
    let w = PANEL_W - MARGIN_L - MARGIN_R;
    let h = PANEL_H - MARGIN_T - MARGIN_B;
    let px = |v: f64| ox + MARGIN_L + (v - x0) / (x1 - x0) * w;
    let py = |v: f64| oy + MARGIN_T + (y1 - v) / (y1 - y0) * h;

    let _ = writeln!(
        out,
        r#"<g><text x="{:.2}" y="{:.2}" font-size="13" text-anchor="middle">{}</text>"#,
        ox + MARGIN_L + w / 2.0,
        oy + 18.0,
        curve.title
    );
    let _ = writeln!(
        out,
        r#"<rect x="{:.2}" y="{:.2}" width="{w:.2}" height="{h:.2}" fill="none" stroke="black"/>"#,
        ox + MARGIN_L,
        oy + MARGIN_T
    );
    for i in 0..TICKS {
        let t = i as f64 / (TICKS - 1) as f64;
        let xv = x0 + t * (x1 - x0);
        let yv = y0 + t * (y1 - y0);
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="middle">{xv:.2}</text>"#,
            px(xv),
            oy + PANEL_H - MARGIN_B + 14.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="end">{yv:.3}</text>"#,
            ox + MARGIN_L - 4.0,
            py(yv) + 3.0
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-size="11" text-anchor="middle">rho</text>"#,
        ox + MARGIN_L + w / 2.0,
        oy + PANEL_H - 6.0
    );
    if y0 < 0.0 && y1 > 0.0 {
        let _ = writeln!(
            out,
            r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#999" stroke-dasharray="3,3"/>"##,
            px(x0),
            py(0.0),
            px(x1),
            py(0.0)
        );
    }
    let points: Vec<String> = x
        .iter()
        .zip(curve.values)
        .map(|(&a, &b)| format!("{:.2},{:.2}", px(a), py(b)))
        .collect();
    let _ = writeln!(
        out,
        r#"<polyline fill="none" stroke="{}" stroke-width="1.5" points="{}"/>"#,
        curve.colour,
        points.join(" ")
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-size="11" fill="{}" text-anchor="end">{}</text></g>"#,
        ox + PANEL_W - MARGIN_R - 6.0,
        oy + MARGIN_T + 14.0,
        curve.colour,
        curve.label
    );
}

/// Four panels: Maxwell index, deformed index, ratio - 1 and f_bos^2 against rho.
pub fn figure_panel(table: &FigureTable) -> String {
    let curves = [
        Curve {
            title: "Maxwell index",
            label: "n_M",
            colour: "#1f77b4",
            values: &table.n_maxwell,
        },
        Curve {
            title: "Isospectral index",
            label: "n_iso",
            colour: "#d62728",
            values: &table.n_iso,
        },
        Curve {
            title: "Relative deformation",
            label: "ratio - 1",
            colour: "#2ca02c",
            values: &table.ratio_minus_one,
        },
        Curve {
            title: "Damped radial factor",
            label: "f_bos^2",
            colour: "#9467bd",
            values: &table.f_bos_squared,
        },
    ];
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}" viewBox="0 0 {:.0} {:.0}" font-family="sans-serif">"#,
        2.0 * PANEL_W,
        2.0 * PANEL_H + 24.0,
        2.0 * PANEL_W,
        2.0 * PANEL_H + 24.0
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<text x="{:.0}" y="18" font-size="14" text-anchor="middle">l = {}, lambda = {}</text>"#,
        PANEL_W, table.l, table.lambda
    );
    for (i, curve) in curves.iter().enumerate() {
        let ox = (i % 2) as f64 * PANEL_W;
        let oy = 24.0 + (i / 2) as f64 * PANEL_H;
        panel(&mut out, ox, oy, &table.grid, curve);
    }
    out.push_str("</svg>\n");
    out
}
