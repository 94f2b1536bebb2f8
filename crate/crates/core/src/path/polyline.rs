use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::format::sig12;
use crate::geom::{Domain, Point};

/// An ordered vertex list whose consecutive segments lie in a domain.
///
/// A path joining a point to itself is the single-vertex path; otherwise
/// consecutive vertices are distinct.
#[derive(Clone, Debug, PartialEq)]
pub struct PolylinePath {
    vertices: Vec<Point>,
}

impl PolylinePath {
    pub fn new(domain: &Domain, vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidPath("a path needs at least 2 vertices".into()));
        }
        for v in &vertices {
            v.check_dim(domain.dim())?;
        }
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPath("consecutive vertices coincide".into()));
        }
        let path = Self { vertices };
        path.check_domain(domain)?;
        Ok(path)
    }

    /// The trivial path at `p`.
    pub fn single(p: Point) -> Self {
        Self { vertices: vec![p] }
    }

    pub(crate) fn from_vertices_unchecked(vertices: Vec<Point>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn start(&self) -> &Point {
        &self.vertices[0]
    }

    pub fn end(&self) -> &Point {
        self.vertices.last().expect("nonempty path")
    }

    pub fn segments(&self) -> impl Iterator<Item = (&Point, &Point)> {
        self.vertices.windows(2).map(|w| (&w[0], &w[1]))
    }

    pub fn euclidean_length(&self) -> f64 {
        self.segments().map(|(a, b)| a.dist(b)).sum()
    }

    pub(crate) fn check_domain(&self, domain: &Domain) -> Result<()> {
        for v in &self.vertices {
            v.check_dim(domain.dim())?;
        }
        if self.vertices.len() == 1 {
            return if domain.clearance(&self.vertices[0]) > 0.0 {
                Ok(())
            } else {
                Err(Error::OutsideDomain)
            };
        }
        for (i, (a, b)) in self.segments().enumerate() {
            if !domain.segment_is_interior(a, b) {
                return Err(Error::InvalidPath(format!("segment {i} leaves the domain")));
            }
        }
        Ok(())
    }

    /// CSV with a `# value=<v>` comment line, a `x0,x1[,x2...]` header and
    /// one row per vertex.
    pub fn to_csv(&self, value: f64) -> String {
        let dim = self.vertices[0].dim();
        let mut out = String::new();
        writeln!(out, "# value={}", sig12(value)).unwrap();
        let header: Vec<String> = (0..dim).map(|i| format!("x{i}")).collect();
        writeln!(out, "{}", header.join(",")).unwrap();
        for v in &self.vertices {
            let row: Vec<String> = v.coords().iter().map(|c| sig12(*c)).collect();
            writeln!(out, "{}", row.join(",")).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let disk = Domain::unit_disk();
        let a = Point::xy(0.0, 0.0);
        assert!(PolylinePath::new(&disk, vec![a.clone()]).is_err());
        assert!(PolylinePath::new(&disk, vec![a.clone(), a.clone()]).is_err());
        assert!(PolylinePath::new(&disk, vec![a.clone(), Point::xy(1.5, 0.0)]).is_err());
        let ann = Domain::annulus(Point::origin(2), 1.0, 2.0).unwrap();
        let across = vec![Point::xy(-1.5, 0.0), Point::xy(1.5, 0.0)];
        assert!(PolylinePath::new(&ann, across).is_err());
        let around = vec![Point::xy(-1.5, 0.0), Point::xy(0.0, 1.5), Point::xy(1.5, 0.0)];
        assert!(PolylinePath::new(&ann, around).is_ok());
    }

    #[test]
    fn csv_layout() {
        let disk = Domain::unit_disk();
        let p = PolylinePath::new(&disk, vec![Point::xy(0.0, 0.0), Point::xy(0.5, 0.25)]).unwrap();
        let csv = p.to_csv(3f64.ln());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "# value=1.09861228867");
        assert_eq!(lines[1], "x0,x1");
        assert_eq!(lines[2], "0,0");
        assert_eq!(lines[3], "0.5,0.25");
    }
}
