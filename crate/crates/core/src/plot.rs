//! Dependency-free SVG output: a space-time heatmap for solutions and a
//! log-log error plot for convergence tables.

use std::fmt::Write as _;

use crate::analysis::{Axis, RateTable};
use crate::stepper::SolutionHistory;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 60.0;
const MAX_CELLS: usize = 120;

fn header(out: &mut String, title: &str) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="24" text-anchor="middle" font-size="14">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Diverging blue-white-red map on `s ∈ [-1, 1]`.
fn color(s: f64) -> String {
    let s = s.clamp(-1.0, 1.0);
    let (r, g, b) = if s >= 0.0 {
        (255.0, 255.0 * (1.0 - s), 255.0 * (1.0 - s))
    } else {
        (255.0 * (1.0 + s), 255.0 * (1.0 + s), 255.0)
    };
    format!(
        "#{:02x}{:02x}{:02x}",
        r.round() as u8,
        g.round() as u8,
        b.round() as u8
    )
}

fn sampled_indices(len: usize) -> Vec<usize> {
    if len <= MAX_CELLS {
        return (0..len).collect();
    }
    (0..MAX_CELLS)
        .map(|j| j * (len - 1) / (MAX_CELLS - 1))
        .collect()
}

/// Heatmap of `u_i^k`: space to the right, time upwards.
pub fn heatmap_svg(history: &SolutionHistory, title: &str) -> String {
    let grid = history.grid;
    let xs = sampled_indices(grid.m() + 1);
    let ts = sampled_indices(grid.n() + 1);
    let scale = history
        .levels
        .iter()
        .flat_map(|l| l.0.iter())
        .fold(0.0f64, |m, v| m.max(v.abs()));

    let mut out = String::new();
    header(&mut out, title);
    let (pw, ph) = (WIDTH - 2.0 * MARGIN, HEIGHT - 2.0 * MARGIN);
    let (cw, ch) = (pw / xs.len() as f64, ph / ts.len() as f64);
    for (row, &k) in ts.iter().enumerate() {
        let y = HEIGHT - MARGIN - (row as f64 + 1.0) * ch;
        for (col, &i) in xs.iter().enumerate() {
            let v = history.levels[k][i];
            let s = if scale > 0.0 { v / scale } else { 0.0 };
            let _ = writeln!(
                out,
                r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="{}"/>"#,
                MARGIN + col as f64 * cw,
                y,
                cw + 0.05,
                ch + 0.05,
                color(s)
            );
        }
    }
    let _ = writeln!(
        out,
        r#"<rect x="{MARGIN}" y="{MARGIN}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">x (0 to {})</text>"#,
        WIDTH / 2.0,
        HEIGHT - MARGIN / 2.0 + 6.0,
        grid.length()
    );
    let _ = writeln!(
        out,
        r#"<text x="20" y="{:.1}" transform="rotate(-90 20 {:.1})" text-anchor="middle">t (0 to {})</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0,
        grid.final_time()
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="end">max |u| = {scale:.4e}</text>"#,
        WIDTH - MARGIN,
        MARGIN - 8.0
    );
    out.push_str("</svg>\n");
    out
}

/// Log-log plot of both error norms against the step, with a dashed guide
/// of slope `order` through the first `E∞` point.
pub fn rate_plot_svg(table: &RateTable, order: f64, title: &str) -> String {
    let pts: Vec<(f64, f64, f64)> = table
        .rows
        .iter()
        .filter(|r| r.step > 0.0 && r.e_inf > 0.0 && r.e_l2 > 0.0)
        .map(|r| (r.step.log10(), r.e_inf.log10(), r.e_l2.log10()))
        .collect();
    let mut out = String::new();
    header(&mut out, title);
    let (pw, ph) = (WIDTH - 2.0 * MARGIN, HEIGHT - 2.0 * MARGIN);
    let _ = writeln!(
        out,
        r#"<rect x="{MARGIN}" y="{MARGIN}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#
    );
    let axis_label = match table.axis {
        Axis::Temporal => "log10(tau)",
        Axis::Spatial => "log10(h)",
    };
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{axis_label}</text>"#,
        WIDTH / 2.0,
        HEIGHT - MARGIN / 2.0 + 6.0
    );
    let _ = writeln!(
        out,
        r#"<text x="20" y="{:.1}" transform="rotate(-90 20 {:.1})" text-anchor="middle">log10(error)</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    );
    if pts.is_empty() {
        out.push_str("</svg>\n");
        return out;
    }

    let guide: Vec<(f64, f64)> = pts
        .iter()
        .map(|p| (p.0, pts[0].1 + order * (p.0 - pts[0].0)))
        .collect();
    let (mut x0, mut x1) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in &pts {
        x0 = x0.min(p.0);
        x1 = x1.max(p.0);
        y0 = y0.min(p.1.min(p.2));
        y1 = y1.max(p.1.max(p.2));
    }
    for g in &guide {
        y0 = y0.min(g.1);
        y1 = y1.max(g.1);
    }
    if x1 - x0 < 1e-12 {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if y1 - y0 < 1e-12 {
        y0 -= 0.5;
        y1 += 0.5;
    }
    let map = |x: f64, y: f64| {
        (
            MARGIN + (x - x0) / (x1 - x0) * pw,
            HEIGHT - MARGIN - (y - y0) / (y1 - y0) * ph,
        )
    };
    let polyline = |out: &mut String, series: &[(f64, f64)], stroke: &str, dash: &str| {
        let coords: Vec<String> = series
            .iter()
            .map(|&(x, y)| {
                let (px, py) = map(x, y);
                format!("{px:.2},{py:.2}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="{stroke}" stroke-width="2"{dash}/>"#,
            coords.join(" ")
        );
        for &(x, y) in series {
            let (px, py) = map(x, y);
            let _ = writeln!(
                out,
                r#"<circle cx="{px:.2}" cy="{py:.2}" r="3" fill="{stroke}"/>"#
            );
        }
    };
    let inf: Vec<_> = pts.iter().map(|p| (p.0, p.1)).collect();
    let l2: Vec<_> = pts.iter().map(|p| (p.0, p.2)).collect();
    polyline(&mut out, &guide, "gray", r#" stroke-dasharray="6 4""#);
    polyline(&mut out, &inf, "#c0392b", "");
    polyline(&mut out, &l2, "#2471a3", "");
    let legend = [
        ("#c0392b", "E_inf".to_string()),
        ("#2471a3", "E_2".to_string()),
        ("gray", format!("slope {order}")),
    ];
    for (j, (c, label)) in legend.iter().enumerate() {
        let y = MARGIN + 18.0 + 16.0 * j as f64;
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{y:.1}" fill="{c}">{label}</text>"#,
            MARGIN + 10.0
        );
    }
    out.push_str("</svg>\n");
    out
}
