//! JSON form of a driver result, and replay of every object it claims.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::Refutation;
use crate::driver::DriverResult;
use crate::graph::{verify_coloring, verify_path, verify_triangle, Coloring, Graph, PathWitness, TriangleWitness};
use crate::oracles::{verify_refutation, OracleError};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Colored,
    FoundPt,
    NotThreeColorable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    SmallSubgraph {
        vertices: Vec<usize>,
        /// Larger than the certificate cap; brute-force replay may be refused.
        #[serde(default)]
        oversized: bool,
    },
    ListExhaustion { seed: Vec<usize>, frontier: Vec<usize> },
}

impl Certificate {
    pub fn to_refutation(&self) -> Refutation {
        match self {
            Certificate::SmallSubgraph { vertices, .. } => Refutation::SmallSubgraph(vertices.clone()),
            Certificate::ListExhaustion { seed, frontier } => {
                Refutation::ListExhaustion { seed: seed.clone(), frontier: frontier.clone() }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors_used: Option<usize>,
    /// Color per vertex id.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangle: Option<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    pub t: usize,
    pub bound: usize,
    pub runtime_ms: f64,
}

impl Report {
    /// `bound` is the color bound that applies to this result.
    pub fn new(result: &DriverResult, t: usize, bound: usize, runtime_ms: f64, cert_cap: usize) -> Self {
        let mut r = Report {
            schema: SCHEMA_VERSION,
            status: Status::Colored,
            colors_used: None,
            coloring: None,
            path: None,
            triangle: None,
            certificate: None,
            t,
            bound,
            runtime_ms,
        };
        match result {
            DriverResult::Colored { coloring, colors_used, triangle } => {
                r.colors_used = Some(*colors_used);
                r.coloring = Some(coloring.to_vec());
                r.triangle = triangle.map(|x| x.0);
            }
            DriverResult::FoundPt(p) => {
                r.status = Status::FoundPt;
                r.path = Some(p.0.clone());
            }
            DriverResult::NotThreeColorable(refutation) => {
                r.status = Status::NotThreeColorable;
                r.certificate = Some(match refutation {
                    Refutation::SmallSubgraph(w) => {
                        Certificate::SmallSubgraph { vertices: w.clone(), oversized: refutation.oversized(cert_cap) }
                    }
                    Refutation::ListExhaustion { seed, frontier } => {
                        Certificate::ListExhaustion { seed: seed.clone(), frontier: frontier.clone() }
                    }
                });
            }
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("status {0:?} is missing its {1}")]
    Missing(Status, &'static str),
    #[error("coloring has {found} entries for a graph on {n} vertices")]
    ColoringLength { found: usize, n: usize },
    #[error("coloring is not proper and total")]
    ImproperColoring,
    #[error("report claims {claimed} colors but the coloring uses {actual}")]
    ColorCount { claimed: usize, actual: usize },
    #[error("triangle {0:?} is not a triangle of the graph")]
    BadTriangle([usize; 3]),
    #[error("path is not an induced path on t = {0} vertices")]
    BadPath(usize),
    #[error("certificate does not show the graph is not 3-colorable")]
    BadCertificate,
    #[error("certificate cannot be checked: {0}")]
    Unverifiable(OracleError),
}

/// Checks every object the report claims against `g`.
pub fn verify_report(g: &Graph, r: &Report, oracle_cap: usize) -> Result<(), VerifyError> {
    if r.schema != SCHEMA_VERSION {
        return Err(VerifyError::Schema(r.schema));
    }
    if let Some(tri) = r.triangle {
        if tri.iter().any(|&u| u >= g.n()) || !verify_triangle(g, &TriangleWitness(tri)) {
            return Err(VerifyError::BadTriangle(tri));
        }
    }
    match r.status {
        Status::Colored => {
            let colors = r.coloring.as_ref().ok_or(VerifyError::Missing(r.status, "coloring"))?;
            if colors.len() != g.n() {
                return Err(VerifyError::ColoringLength { found: colors.len(), n: g.n() });
            }
            let c = Coloring::from_colors(colors);
            if colors.contains(&0) || !verify_coloring(g, &c) {
                return Err(VerifyError::ImproperColoring);
            }
            if let Some(claimed) = r.colors_used {
                if claimed != c.colors_used() {
                    return Err(VerifyError::ColorCount { claimed, actual: c.colors_used() });
                }
            }
            Ok(())
        }
        Status::FoundPt => {
            let path = r.path.as_ref().ok_or(VerifyError::Missing(r.status, "path"))?;
            if path.iter().any(|&u| u >= g.n()) || !verify_path(g, &PathWitness(path.clone()), r.t, None) {
                return Err(VerifyError::BadPath(r.t));
            }
            Ok(())
        }
        Status::NotThreeColorable => {
            let cert = r.certificate.as_ref().ok_or(VerifyError::Missing(r.status, "certificate"))?;
            match verify_refutation(g, &cert.to_refutation(), oracle_cap) {
                Ok(true) => Ok(()),
                Ok(false) => Err(VerifyError::BadCertificate),
                Err(e) => Err(VerifyError::Unverifiable(e)),
            }
        }
    }
}
