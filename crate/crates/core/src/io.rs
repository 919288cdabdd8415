//! JSON interchange for every body representation.
//!
//! ```json
//! {"kind":"polygon2","vertices":[[0,0],[1,0],[0,1]]}
//! {"kind":"sampled2","n":64,"h":[...]}
//! {"kind":"measure1","atoms":[[0.0,1.0],[3.14159,1.0]]}
//! {"kind":"polytope_cm","m":2,"vertices":[[x1,y1,x2,y2],...]}
//! {"kind":"ball_cm","m":2,"radius":1.0}
//! {"kind":"oracle_cm","m":2,"terms":[{"s":1.0,"theta":0.0,"base":{...}}]}
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complexspace::{CmBody, OracleTerm, PolytopeCm, SupportOracleCm};
use crate::planar::{AtomicMeasure1, Point2, Polygon2, SampledSupport2};
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum BodyFile {
    Polygon2 { vertices: Vec<[f64; 2]> },
    Sampled2 { n: usize, h: Vec<f64> },
    Measure1 { atoms: Vec<[f64; 2]> },
    PolytopeCm { m: usize, vertices: Vec<Vec<f64>> },
    BallCm {
        m: usize,
        radius: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        center: Option<Vec<f64>>,
    },
    OracleCm { m: usize, terms: Vec<TermFile> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermFile {
    s: f64,
    theta: f64,
    base: BodyFile,
}

/// Any body the library reads or writes.
#[derive(Debug, Clone, PartialEq)]
pub enum Body {
    Polygon(Polygon2),
    Sampled(SampledSupport2),
    Measure(AtomicMeasure1),
    Cm(CmBody),
    Oracle(SupportOracleCm),
}

fn schema(e: Error) -> Error {
    match e {
        Error::Schema(_) => e,
        other => Error::Schema(other.to_string()),
    }
}

fn cm_from_file(f: BodyFile) -> Result<CmBody> {
    match f {
        BodyFile::PolytopeCm { m, vertices } => Ok(PolytopeCm::new(m, vertices)?.into()),
        BodyFile::BallCm { m, radius, center } => {
            let CmBody::Ball { center: zero, .. } = CmBody::ball(m, radius)? else {
                unreachable!()
            };
            let center = center.unwrap_or(zero);
            if center.len() != 2 * m {
                return Err(Error::Schema(format!("ball center must have {} coordinates", 2 * m)));
            }
            Ok(CmBody::Ball { m, radius, center })
        }
        _ => Err(Error::Schema("oracle term base must be polytope_cm or ball_cm".into())),
    }
}

fn cm_to_file(b: &CmBody) -> BodyFile {
    match b {
        CmBody::Polytope(p) => BodyFile::PolytopeCm {
            m: p.m(),
            vertices: p.vertices().map(|v| v.to_vec()).collect(),
        },
        CmBody::Ball { m, radius, center } => BodyFile::BallCm {
            m: *m,
            radius: *radius,
            center: center.iter().any(|&x| x != 0.0).then(|| center.clone()),
        },
    }
}

impl Body {
    fn from_file(f: BodyFile) -> Result<Self> {
        Ok(match f {
            BodyFile::Polygon2 { vertices } => {
                let pts: Vec<Point2> = vertices.iter().map(|v| Point2::new(v[0], v[1])).collect();
                Body::Polygon(Polygon2::from_points(&pts)?)
            }
            BodyFile::Sampled2 { n, h } => {
                if h.len() != n {
                    return Err(Error::Schema(format!("sampled2 declares n = {n} but has {} values", h.len())));
                }
                Body::Sampled(SampledSupport2::new(h)?)
            }
            BodyFile::Measure1 { atoms } => {
                Body::Measure(AtomicMeasure1::new(atoms.iter().map(|a| (a[0], a[1])).collect())?)
            }
            BodyFile::OracleCm { m, terms } => {
                let terms = terms
                    .into_iter()
                    .map(|t| Ok(OracleTerm { s: t.s, theta: t.theta, base: cm_from_file(t.base)? }))
                    .collect::<Result<Vec<_>>>()?;
                Body::Oracle(SupportOracleCm::new(m, terms)?)
            }
            other => Body::Cm(cm_from_file(other)?),
        })
    }

    fn to_file(&self) -> BodyFile {
        match self {
            Body::Polygon(p) => BodyFile::Polygon2 { vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect() },
            Body::Sampled(s) => BodyFile::Sampled2 { n: s.n(), h: s.values().to_vec() },
            Body::Measure(mu) => BodyFile::Measure1 { atoms: mu.atoms().iter().map(|&(t, w)| [t, w]).collect() },
            Body::Cm(b) => cm_to_file(b),
            Body::Oracle(o) => BodyFile::OracleCm {
                m: o.m(),
                terms: o
                    .terms()
                    .iter()
                    .map(|t| TermFile { s: t.s, theta: t.theta, base: cm_to_file(&t.base) })
                    .collect(),
            },
        }
    }

    /// Parses and validates a body; any violation is a [`Error::Schema`].
    pub fn from_json(s: &str) -> Result<Self> {
        let f: BodyFile = serde_json::from_str(s)?;
        Body::from_file(f).map_err(schema)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("bodies serialize")
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Body::Polygon(_) => "polygon2",
            Body::Sampled(_) => "sampled2",
            Body::Measure(_) => "measure1",
            Body::Cm(CmBody::Polytope(_)) => "polytope_cm",
            Body::Cm(CmBody::Ball { .. }) => "ball_cm",
            Body::Oracle(_) => "oracle_cm",
        }
    }
}

pub fn read_body(path: impl AsRef<Path>) -> Result<Body> {
    Body::from_json(&std::fs::read_to_string(path)?)
}

pub fn write_body(path: impl AsRef<Path>, body: &Body) -> Result<()> {
    std::fs::write(path, body.to_json() + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygon_round_trip() {
        let p = Polygon2::regular(5, 1.0, 0.3).unwrap();
        let Body::Polygon(back) = Body::from_json(&Body::Polygon(p.clone()).to_json()).unwrap() else {
            panic!("wrong kind")
        };
        assert!(back.vertex_distance(&p).unwrap() < 1e-12);
    }

    #[test]
    fn oracle_round_trip() {
        let json = r#"{"kind":"oracle_cm","m":1,"terms":[
            {"s":1.0,"theta":0.0,"base":{"kind":"polytope_cm","m":1,"vertices":[[0,0],[1,0]]}},
            {"s":2.0,"theta":1.0,"base":{"kind":"ball_cm","m":1,"radius":0.5}}]}"#;
        let b = Body::from_json(json).unwrap();
        assert_eq!(b.kind(), "oracle_cm");
        assert_eq!(Body::from_json(&b.to_json()).unwrap(), b);
    }

    #[test]
    fn schema_violations() {
        for bad in [
            r#"{"kind":"hexagon"}"#,
            r#"{"kind":"sampled2","n":3,"h":[1,1,1,1]}"#,
            r#"{"kind":"polytope_cm","m":3,"vertices":[[0,0,0,0,0,0]]}"#,
            r#"{"kind":"measure1","atoms":[[0,-1]]}"#,
            r#"{"kind":"polygon2","vertices":[[0,0]],"extra":1}"#,
        ] {
            assert!(matches!(Body::from_json(bad), Err(Error::Schema(_))), "{bad}");
        }
    }
}
