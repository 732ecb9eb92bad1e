//! JSON description of an IFS with probabilities.
//!
//! ```json
//! { "name": "optional",
//!   "maps":  [ { "kappa": {"e1": 0.5, "e2": 0.5}, "beta": {"e1": 0.0, "e2": 0.0} } ],
//!   "probs": [ { "e1": 1.0, "e2": 1.0 } ] }
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{HypError, Result};
use crate::hyperbolic::Hyperbolic;
use crate::ifs::{AffineContraction, HyperbolicIfs};
use crate::probability::HyperbolicDistribution;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub e1: f64,
    pub e2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub kappa: PairSpec,
    pub beta: PairSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IfsSpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub maps: Vec<MapSpec>,
    pub probs: Vec<PairSpec>,
}

impl PairSpec {
    fn to_hyperbolic(self, path: &str) -> Result<Hyperbolic> {
        Hyperbolic::new(self.e1, self.e2).map_err(|e| e.at(path))
    }
}

impl From<Hyperbolic> for PairSpec {
    fn from(x: Hyperbolic) -> Self {
        PairSpec {
            e1: x.e1_part(),
            e2: x.e2_part(),
        }
    }
}

impl IfsSpecFile {
    pub fn from_ifs(ifs: &HyperbolicIfs, name: Option<String>) -> Self {
        IfsSpecFile {
            name,
            maps: ifs
                .maps()
                .iter()
                .map(|f| MapSpec {
                    kappa: f.kappa().into(),
                    beta: f.beta().into(),
                })
                .collect(),
            probs: ifs.dist().probs().iter().map(|&p| p.into()).collect(),
        }
    }

    /// Validates into a system; errors carry the offending field path.
    pub fn into_ifs(&self) -> Result<HyperbolicIfs> {
        if self.maps.is_empty() {
            return Err(HypError::EmptySystem.at("maps"));
        }
        if self.maps.len() != self.probs.len() {
            return Err(HypError::LengthMismatch {
                maps: self.maps.len(),
                probs: self.probs.len(),
            }
            .at("probs"));
        }
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let kappa = m.kappa.to_hyperbolic(&format!("maps[{i}].kappa"))?;
                let beta = m.beta.to_hyperbolic(&format!("maps[{i}].beta"))?;
                AffineContraction::new(kappa, beta).map_err(|e| e.at(format!("maps[{i}].kappa")))
            })
            .collect::<Result<Vec<_>>>()?;
        let probs = self
            .probs
            .iter()
            .enumerate()
            .map(|(i, p)| p.to_hyperbolic(&format!("probs[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        let dist = HyperbolicDistribution::validate(probs).map_err(|e| match e {
            HypError::OutOfRange { index, .. } | HypError::MixedMode { index, .. } => {
                e.at(format!("probs[{index}]"))
            }
            other => other.at("probs"),
        })?;
        HyperbolicIfs::new(maps, dist)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }
}

/// Parses and validates a UTF-8 JSON spec.
pub fn parse_spec(bytes: &[u8]) -> Result<HyperbolicIfs> {
    let file: IfsSpecFile =
        serde_json::from_slice(bytes).map_err(|e| HypError::Parse(e.to_string()))?;
    file.into_ifs()
}
