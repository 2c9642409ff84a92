//! Static SVG figure of the polygon, the optimum and its stable cone.
//!
//! Output is a pure function of the report: coordinates are printed with a
//! fixed number of decimals and elements are emitted in vertex order.

use std::fmt::Write;
use std::path::Path;

use crate::geometry::{Angle, Vec2};
use crate::sensitivity::SensitivityReport;

use super::report::fmt_point;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;

struct Frame {
    min: Vec2,
    max: Vec2,
    scale: f64,
    offset: Vec2,
}

impl Frame {
    /// Bounding box plus 10% margin per side, fitted and centred in the canvas.
    fn fit(points: impl Iterator<Item = Vec2>) -> Frame {
        let (mut min, mut max) =
            (Vec2::new(f64::INFINITY, f64::INFINITY), Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
        for p in points {
            min = Vec2::new(min.x1.min(p.x1), min.x2.min(p.x2));
            max = Vec2::new(max.x1.max(p.x1), max.x2.max(p.x2));
        }
        let span = Vec2::new((max.x1 - min.x1).max(1e-9), (max.x2 - min.x2).max(1e-9));
        let min = min - 0.1 * span;
        let max = max + 0.1 * span;
        let (w, h) = (max.x1 - min.x1, max.x2 - min.x2);
        let scale = (WIDTH / w).min(HEIGHT / h);
        let offset = Vec2::new((WIDTH - w * scale) / 2.0, (HEIGHT - h * scale) / 2.0);
        Frame { min, max, scale, offset }
    }

    fn map(&self, p: Vec2) -> (f64, f64) {
        (self.offset.x1 + (p.x1 - self.min.x1) * self.scale, self.offset.x2 + (self.max.x2 - p.x2) * self.scale)
    }
}

fn xy(p: (f64, f64)) -> String {
    format!("{:.3},{:.3}", p.0, p.1)
}

pub fn render_svg(report: &SensitivityReport) -> String {
    let region = &report.region;
    let frame = Frame::fit(region.points());
    let x0 = report.optimal_vertex.point;
    let c0 = frame.map(x0);
    let diag = (frame.max - frame.min).norm();
    let radius = 0.2 * diag / 1.2;
    let along = |a: Angle, len: f64| frame.map(x0 + len * Vec2::unit(a));
    let (lo, hi) = (report.interval.lo, report.interval.hi);
    let width_deg = report.interval.width().degrees();

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    s.push_str(
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"8\" markerHeight=\"8\" orient=\"auto\">\
         <path d=\"M0,0 L10,5 L0,10 z\" fill=\"#b22222\"/></marker></defs>\n",
    );
    let _ = writeln!(s, "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>");

    let outline: Vec<String> = region.points().map(|p| xy(frame.map(p))).collect();
    let _ = writeln!(
        s,
        "<polygon class=\"region\" points=\"{}\" fill=\"#e8eef7\" stroke=\"#1f3b73\" stroke-width=\"2\"/>",
        outline.join(" ")
    );

    // World counterclockwise is screen counterclockwise after the y flip, i.e. sweep-flag 0.
    let r_px = radius * frame.scale;
    let _ = writeln!(
        s,
        "<path class=\"cone\" d=\"M{} L{} A{:.3},{:.3} 0 0 0 {} Z\" fill=\"#f4a261\" fill-opacity=\"0.45\" stroke=\"none\" \
         data-lo-deg=\"{:.4}\" data-hi-deg=\"{:.4}\" data-sweep-deg=\"{:.4}\"/>",
        xy(c0),
        xy(along(lo, radius)),
        r_px,
        r_px,
        xy(along(hi, radius)),
        lo.degrees(),
        hi.degrees(),
        width_deg
    );
    for end in [lo, hi] {
        let _ = writeln!(
            s,
            "<line class=\"cone-ray\" x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"#e76f51\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>",
            c0.0,
            c0.1,
            along(end, 1.5 * radius).0,
            along(end, 1.5 * radius).1
        );
    }
    let tip = along(report.objective_polar.phi, 1.2 * radius);
    let _ = writeln!(
        s,
        "<line class=\"gradient\" x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"#b22222\" stroke-width=\"2.5\" marker-end=\"url(#arrow)\"/>",
        c0.0, c0.1, tip.0, tip.1
    );

    for p in region.points() {
        let (x, y) = frame.map(p);
        let _ = writeln!(s, "<circle class=\"vertex\" cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4\" fill=\"#1f3b73\"/>");
        let _ = writeln!(
            s,
            "<text class=\"label\" x=\"{:.3}\" y=\"{:.3}\" font-family=\"sans-serif\" font-size=\"13\">{}</text>",
            x + 6.0,
            y - 6.0,
            fmt_point(p)
        );
    }
    let _ = writeln!(
        s,
        "<circle class=\"optimal\" cx=\"{:.3}\" cy=\"{:.3}\" r=\"7\" fill=\"none\" stroke=\"#b22222\" stroke-width=\"2.5\"/>",
        c0.0, c0.1
    );
    s.push_str("</svg>\n");
    s
}

pub fn emit_svg(report: &SensitivityReport, path: &Path) -> std::io::Result<()> {
    std::fs::write(path, render_svg(report))
}
