//! Minimal SVG output for planar domains, metric balls and paths.

use std::fmt::Write;

use hypmetrics_core::analysis::sampling::sampling_box;
use hypmetrics_core::format::sig12;
use hypmetrics_core::{Domain, Point, Shape};

const SIZE: f64 = 600.0;

pub struct Figure {
    lo: [f64; 2],
    hi: [f64; 2],
    body: String,
}

impl Figure {
    /// A figure framing `domain`, or the sampling box of an unbounded one
    /// widened to include `focus`.
    pub fn new(domain: &Domain, focus: &[Point]) -> Self {
        let (lo, hi) = sampling_box(domain);
        let mut lo = [lo.coords()[0], lo.coords()[1]];
        let mut hi = [hi.coords()[0], hi.coords()[1]];
        for p in focus {
            for k in 0..2 {
                lo[k] = lo[k].min(p.coords()[k]);
                hi[k] = hi[k].max(p.coords()[k]);
            }
        }
        let pad = 0.05 * (hi[0] - lo[0]).max(hi[1] - lo[1]);
        let mut fig = Self {
            lo: [lo[0] - pad, lo[1] - pad],
            hi: [hi[0] + pad, hi[1] + pad],
            body: String::new(),
        };
        fig.domain(domain);
        fig
    }

    fn scale(&self) -> f64 {
        SIZE / (self.hi[0] - self.lo[0]).max(self.hi[1] - self.lo[1])
    }

    fn map(&self, p: &Point) -> (String, String) {
        let s = self.scale();
        (
            sig12((p.coords()[0] - self.lo[0]) * s),
            sig12((self.hi[1] - p.coords()[1]) * s),
        )
    }

    pub fn circle(&mut self, center: &Point, r: f64, style: &str) {
        let (cx, cy) = self.map(center);
        let r = sig12(r * self.scale());
        writeln!(self.body, r#"<circle cx="{cx}" cy="{cy}" r="{r}" {style}/>"#).unwrap();
    }

    pub fn dot(&mut self, p: &Point, style: &str) {
        let (cx, cy) = self.map(p);
        writeln!(self.body, r#"<circle cx="{cx}" cy="{cy}" r="2" {style}/>"#).unwrap();
    }

    pub fn polyline(&mut self, pts: &[Point], closed: bool, style: &str) {
        let coords: Vec<String> = pts
            .iter()
            .map(|p| {
                let (x, y) = self.map(p);
                format!("{x},{y}")
            })
            .collect();
        let tag = if closed { "polygon" } else { "polyline" };
        writeln!(self.body, r#"<{tag} points="{}" {style}/>"#, coords.join(" ")).unwrap();
    }

    fn domain(&mut self, domain: &Domain) {
        let edge = r#"fill="none" stroke="black" stroke-width="1.5""#;
        match domain.shape() {
            Shape::Ball { center, radius } => self.circle(center, *radius, edge),
            Shape::Annulus { center, inner, outer } => {
                self.circle(center, *outer, edge);
                self.circle(center, *inner, edge);
            }
            Shape::PuncturedBall { center, radius } => {
                self.circle(center, *radius, edge);
                self.dot(center, r#"fill="black""#);
            }
            Shape::SlitDisk { center, radius, direction } => {
                self.circle(center, *radius, edge);
                self.polyline(&[center.clone(), center.offset(direction, *radius)], false, edge);
            }
            Shape::Polygon { vertices } => self.polyline(vertices, true, edge),
            Shape::HalfSpace { normal, offset } => {
                let foot = normal * *offset;
                let along = Point::xy(-normal.coords()[1], normal.coords()[0]);
                let reach = 2.0 * (self.hi[0] - self.lo[0]).max(self.hi[1] - self.lo[1]);
                self.polyline(&[foot.offset(&along, -reach), foot.offset(&along, reach)], false, edge);
            }
            Shape::PuncturedSpace { puncture } => self.dot(puncture, r#"fill="black""#),
        }
    }

    pub fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{s}\" height=\"{s}\" viewBox=\"0 0 {s} {s}\">\n{}</svg>\n",
            self.body,
            s = SIZE
        )
    }
}
