//! JSON domain descriptors, one object per domain:
//!
//! ```json
//! {"shape":"ball","center":[0,0],"radius":1}
//! {"shape":"annulus","center":[0,0],"r":1,"R":2}
//! {"shape":"half_space","normal":[0,1],"offset":0}
//! {"shape":"punctured_ball","center":[0,0],"radius":1}
//! {"shape":"slit_disk","center":[0,0],"radius":1,"direction":[1,0]}
//! {"shape":"polygon","vertices":[[0,0],[1,0],[0,1]]}
//! {"shape":"punctured_space","puncture":[0,0]}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::geom::{Domain, Point, Shape};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case", deny_unknown_fields)]
pub enum DomainSpec {
    Ball {
        center: Vec<f64>,
        radius: f64,
    },
    HalfSpace {
        normal: Vec<f64>,
        offset: f64,
    },
    Annulus {
        center: Vec<f64>,
        r: f64,
        #[serde(rename = "R")]
        big_r: f64,
    },
    PuncturedBall {
        center: Vec<f64>,
        radius: f64,
    },
    SlitDisk {
        center: Vec<f64>,
        radius: f64,
        #[serde(default = "default_slit_direction")]
        direction: Vec<f64>,
    },
    Polygon {
        vertices: Vec<Vec<f64>>,
    },
    PuncturedSpace {
        puncture: Vec<f64>,
    },
}

fn default_slit_direction() -> Vec<f64> {
    vec![1.0, 0.0]
}

impl DomainSpec {
    pub fn build(&self) -> Result<Domain> {
        match self {
            DomainSpec::Ball { center, radius } => Domain::ball(Point::new(center)?, *radius),
            DomainSpec::HalfSpace { normal, offset } => {
                Domain::half_space(Point::new(normal)?, *offset)
            }
            DomainSpec::Annulus { center, r, big_r } => {
                Domain::annulus(Point::new(center)?, *r, *big_r)
            }
            DomainSpec::PuncturedBall { center, radius } => {
                Domain::punctured_ball(Point::new(center)?, *radius)
            }
            DomainSpec::SlitDisk {
                center,
                radius,
                direction,
            } => Domain::slit_disk(Point::new(center)?, *radius, Point::new(direction)?),
            DomainSpec::Polygon { vertices } => Domain::polygon(
                vertices
                    .iter()
                    .map(|v| Point::new(v))
                    .collect::<Result<Vec<_>>>()?,
            ),
            DomainSpec::PuncturedSpace { puncture } => {
                Ok(Domain::punctured_space(Point::new(puncture)?))
            }
        }
    }

    pub fn from_domain(domain: &Domain) -> Self {
        let v = |p: &Point| p.coords().to_vec();
        match domain.shape() {
            Shape::Ball { center, radius } => DomainSpec::Ball {
                center: v(center),
                radius: *radius,
            },
            Shape::HalfSpace { normal, offset } => DomainSpec::HalfSpace {
                normal: v(normal),
                offset: *offset,
            },
            Shape::Annulus {
                center,
                inner,
                outer,
            } => DomainSpec::Annulus {
                center: v(center),
                r: *inner,
                big_r: *outer,
            },
            Shape::PuncturedBall { center, radius } => DomainSpec::PuncturedBall {
                center: v(center),
                radius: *radius,
            },
            Shape::SlitDisk {
                center,
                radius,
                direction,
            } => DomainSpec::SlitDisk {
                center: v(center),
                radius: *radius,
                direction: v(direction),
            },
            Shape::Polygon { vertices } => DomainSpec::Polygon {
                vertices: vertices.iter().map(v).collect(),
            },
            Shape::PuncturedSpace { puncture } => DomainSpec::PuncturedSpace {
                puncture: v(puncture),
            },
        }
    }
}

impl Domain {
    pub fn from_json(text: &str) -> Result<Domain> {
        let spec: DomainSpec = serde_json::from_str(text)?;
        spec.build()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&DomainSpec::from_domain(self)).expect("domain spec serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ExtendedReal;

    #[test]
    fn parses_every_shape() {
        let cases = [
            r#"{"shape":"ball","center":[0,0],"radius":1}"#,
            r#"{"shape":"annulus","center":[0,0],"r":1,"R":2}"#,
            r#"{"shape":"half_space","normal":[0,1],"offset":0}"#,
            r#"{"shape":"punctured_ball","center":[0,0,0],"radius":1}"#,
            r#"{"shape":"slit_disk","center":[0,0],"radius":1}"#,
            r#"{"shape":"polygon","vertices":[[0,0],[1,0],[0,1]]}"#,
            r#"{"shape":"punctured_space","puncture":[0,0]}"#,
        ];
        for c in cases {
            let d = Domain::from_json(c).unwrap();
            let again = Domain::from_json(&d.to_json()).unwrap();
            assert_eq!(d, again, "{c}");
        }
        let a = Domain::from_json(cases[1]).unwrap();
        assert_eq!(a.diameter(), ExtendedReal::Finite(4.0));
    }

    #[test]
    fn rejects_malformed() {
        assert!(Domain::from_json(r#"{"shape":"ball","center":[0,0]}"#).is_err());
        assert!(Domain::from_json(r#"{"shape":"ball","center":[0,0],"radius":-1}"#).is_err());
        assert!(Domain::from_json(r#"{"shape":"torus"}"#).is_err());
    }
}
