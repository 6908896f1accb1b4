use std::fmt::Write;

use crate::graph::Graph;
use crate::scalar::Scalar;
use crate::weights::Partition;

use super::convex::Point;

const SIZE: f64 = 400.0;
const MARGIN: f64 = 40.0;
const COLORS: [&str; 3] = ["#d95f02", "#1b9e77", "#7570b3"];

#[derive(Debug, Clone, Copy, Default)]
pub struct SvgOptions {
    /// Draw the guide lines `y = 1/2`, `x + 2y = 1` and `x = y`.
    pub guides: bool,
}

fn canvas(x: f64, y: f64) -> (f64, f64) {
    let span = SIZE - 2.0 * MARGIN;
    (MARGIN + span * x, SIZE - MARGIN - span * y)
}

fn line(out: &mut String, a: (f64, f64), b: (f64, f64), style: &str) {
    let (p, q) = (canvas(a.0, a.1), canvas(b.0, b.1));
    let _ = writeln!(
        out,
        r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" {style}/>"#,
        p.0, p.1, q.0, q.1
    );
}

/// SVG 1.1 drawing of an embedding; nodes are colored by part when a
/// partition is given. Output depends only on the inputs.
pub fn render_svg<S: Scalar>(
    g: &Graph,
    points: &[Point<S>],
    partition: Option<&Partition<S>>,
    opts: SvgOptions,
) -> String {
    let xy: Vec<(f64, f64)> = points
        .iter()
        .map(|(x, y)| (x.to_f64().unwrap_or(0.0), y.to_f64().unwrap_or(0.0)))
        .collect();
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let tri = r##"stroke="#999" stroke-dasharray="4 3" fill="none""##;
    line(&mut out, (0.0, 0.0), (1.0, 0.0), tri);
    line(&mut out, (1.0, 0.0), (0.0, 1.0), tri);
    line(&mut out, (0.0, 1.0), (0.0, 0.0), tri);
    if opts.guides {
        let guide = r##"stroke="#3366cc" stroke-width="0.8""##;
        line(&mut out, (0.0, 0.5), (0.5, 0.5), guide);
        line(&mut out, (1.0, 0.0), (0.0, 0.5), guide);
        line(&mut out, (0.0, 0.0), (1.0 / 3.0, 1.0 / 3.0), guide);
    }
    for (a, b) in g.edges() {
        line(&mut out, xy[a], xy[b], r##"stroke="#555" stroke-width="1""##);
    }
    for (v, &(x, y)) in xy.iter().enumerate() {
        let color = partition
            .and_then(|p| p.part_of(v))
            .map_or("#444444", |i| COLORS[i % COLORS.len()]);
        let (cx, cy) = canvas(x, y);
        let _ = writeln!(
            out,
            r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="5" fill="{color}"><title>{v}</title></circle>"#
        );
    }
    if let Some(p) = partition {
        for i in 0..p.len() {
            let y = 16.0 + 16.0 * i as f64;
            let _ = writeln!(
                out,
                r#"<rect x="{:.1}" y="{:.1}" width="10" height="10" fill="{}"/><text x="{:.1}" y="{:.1}" font-size="12" font-family="sans-serif">part {} ({} nodes)</text>"#,
                SIZE - 130.0,
                y - 9.0,
                COLORS[i % COLORS.len()],
                SIZE - 115.0,
                y,
                i + 1,
                p.part(i).len()
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
