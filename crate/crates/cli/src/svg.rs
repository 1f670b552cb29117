//! Static SVG rendering of the unit disk: the canvas is a 1000×1000 viewbox,
//! curves are stroked, reachable regions filled at 40% opacity, and the
//! generating JSON report is embedded as a metadata comment for round-trip
//! auditability.

use std::fmt::Write;

use num_complex::Complex64;

use disk_squeeze_core::control::{ArcEdge, ArcPolygon, ReachableSet};
use disk_squeeze_core::geometry::GeneralizedCircle;
use disk_squeeze_core::json::JsonValue;

const SIZE: f64 = 1000.0;

fn px(z: Complex64) -> (f64, f64) {
    (0.5 * SIZE * (1.0 + z.re), 0.5 * SIZE * (1.0 - z.im))
}

fn scale(r: f64) -> f64 {
    0.5 * SIZE * r
}

pub struct SvgCanvas {
    body: String,
}

impl SvgCanvas {
    pub fn new() -> Self {
        SvgCanvas { body: String::new() }
    }

    pub fn stroke_curve(&mut self, curve: &GeneralizedCircle, color: &str) {
        match *curve {
            GeneralizedCircle::Circle { center, radius } => {
                let (cx, cy) = px(center);
                writeln!(
                    self.body,
                    r#"  <circle cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="none" stroke="{color}" stroke-width="2"/>"#,
                    scale(radius)
                )
                .unwrap();
            }
            GeneralizedCircle::Line { point, direction } => {
                // Clip the chord to the unit circle.
                let h = ((point) * direction.conj()).im;
                if h.abs() >= 1.0 {
                    return;
                }
                let foot = point - Complex64::new(0.0, h) * direction;
                let half = (1.0 - h * h).sqrt();
                let (x1, y1) = px(foot - direction * half);
                let (x2, y2) = px(foot + direction * half);
                writeln!(
                    self.body,
                    r#"  <line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{color}" stroke-width="2"/>"#
                )
                .unwrap();
            }
        }
    }

    pub fn polyline(&mut self, points: &[Complex64], color: &str) {
        if points.is_empty() {
            return;
        }
        let mut coords = String::new();
        for p in points {
            let (x, y) = px(*p);
            write!(coords, "{x:.3},{y:.3} ").unwrap();
        }
        writeln!(
            self.body,
            r#"  <polyline points="{}" fill="none" stroke="{color}" stroke-width="3"/>"#,
            coords.trim_end()
        )
        .unwrap();
    }

    pub fn dot(&mut self, z: Complex64, color: &str) {
        let (cx, cy) = px(z);
        writeln!(
            self.body,
            r#"  <circle cx="{cx:.3}" cy="{cy:.3}" r="6" fill="{color}"/>"#
        )
        .unwrap();
    }

    fn arc_path_segment(&self, edge: &ArcEdge) -> String {
        let (x, y) = px(edge.to);
        match edge.carrier {
            GeneralizedCircle::Circle { center, radius } => {
                let r = scale(radius);
                let a0 = (edge.from - center).arg();
                let a1 = (edge.to - center).arg();
                let sweep_angle = if edge.ccw {
                    (a1 - a0).rem_euclid(std::f64::consts::TAU)
                } else {
                    (a0 - a1).rem_euclid(std::f64::consts::TAU)
                };
                let large = if sweep_angle > std::f64::consts::PI { 1 } else { 0 };
                // Screen y points down, so a counterclockwise arc in disk
                // coordinates is drawn with sweep flag 0.
                let sweep = if edge.ccw { 0 } else { 1 };
                format!("A {r:.3} {r:.3} 0 {large} {sweep} {x:.3} {y:.3}")
            }
            GeneralizedCircle::Line { .. } => format!("L {x:.3} {y:.3}"),
        }
    }

    pub fn fill_region(&mut self, polygon: &ArcPolygon, color: &str) {
        if polygon.edges.is_empty() {
            return;
        }
        let (x0, y0) = px(polygon.edges[0].from);
        let mut path = format!("M {x0:.3} {y0:.3}");
        for edge in &polygon.edges {
            path.push(' ');
            path.push_str(&self.arc_path_segment(edge));
        }
        path.push_str(" Z");
        writeln!(
            self.body,
            r#"  <path d="{path}" fill="{color}" fill-opacity="0.4" stroke="{color}" stroke-width="2"/>"#
        )
        .unwrap();
    }

    pub fn fill_reachable(&mut self, set: &ReachableSet, color: &str) {
        match set {
            ReachableSet::EntireDisk => {
                writeln!(
                    self.body,
                    r#"  <circle cx="500" cy="500" r="500" fill="{color}" fill-opacity="0.4"/>"#
                )
                .unwrap();
            }
            ReachableSet::Region(polygon) => self.fill_region(polygon, color),
        }
    }

    /// Final document with the generating report embedded as a comment.
    pub fn render(&self, report: &JsonValue) -> String {
        let mut doc = String::new();
        writeln!(
            doc,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 1000">"#
        )
        .unwrap();
        writeln!(doc, "<!-- {} -->", report.to_string()).unwrap();
        writeln!(
            doc,
            r#"  <rect width="1000" height="1000" fill="white"/>"#
        )
        .unwrap();
        writeln!(
            doc,
            r#"  <circle cx="500" cy="500" r="500" fill="none" stroke="black" stroke-width="2"/>"#
        )
        .unwrap();
        doc.push_str(&self.body);
        doc.push_str("</svg>");
        doc
    }
}
