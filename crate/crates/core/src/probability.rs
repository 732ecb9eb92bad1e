//! Finite hyperbolic-valued probability distributions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{HypError, Result};
use crate::hyperbolic::{Hyperbolic, Interval};

/// Per-component tolerance on the sum state of a distribution.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// Which of the three admissible sum states a distribution is in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SumState {
    /// `Σρ = 1~`
    Full,
    /// `Σρ = 1e1`, every entry a multiple of `e1`
    E1Only,
    /// `Σρ = 1e2`, every entry a multiple of `e2`
    E2Only,
}

impl fmt::Display for SumState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SumState::Full => "full",
            SumState::E1Only => "e1-only",
            SumState::E2Only => "e2-only",
        })
    }
}

/// An ordinary finite distribution over `0..len()`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealDistribution {
    probs: Vec<f64>,
}

impl RealDistribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(HypError::EmptyDistribution);
        }
        if let Some((i, p)) = probs
            .iter()
            .enumerate()
            .find(|(_, p)| !(0.0..=1.0).contains(*p))
        {
            return Err(HypError::BadRealDistribution(format!(
                "entry #{i} = {p} outside [0, 1]"
            )));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(HypError::BadRealDistribution(format!("sum is {sum}")));
        }
        Ok(RealDistribution { probs })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        RealDistribution::new(vec![1.0 / n as f64; n])
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }
}

/// A hyperbolic probability distribution: entries in `[0, 1~]_k` summing to
/// `1~`, `1e1` or `1e2`.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperbolicDistribution {
    probs: Vec<Hyperbolic>,
    mode: SumState,
}

fn near(x: f64, target: f64) -> bool {
    (x - target).abs() <= SUM_TOLERANCE
}

impl HyperbolicDistribution {
    /// Validates `probs` and classifies its sum state (Full, then E1Only, then E2Only).
    pub fn validate(probs: Vec<Hyperbolic>) -> Result<Self> {
        if probs.is_empty() {
            return Err(HypError::EmptyDistribution);
        }
        for (index, rho) in probs.iter().enumerate() {
            if !Interval::UNIT.contains(rho) {
                return Err(HypError::OutOfRange {
                    index,
                    value: rho.to_string(),
                });
            }
        }
        let sum: Hyperbolic = probs.iter().copied().sum();
        let (s1, s2) = (sum.e1_part(), sum.e2_part());

        let mode = if near(s1, 1.0) && near(s2, 1.0) {
            SumState::Full
        } else if near(s1, 1.0) && near(s2, 0.0) {
            if let Some(index) = probs.iter().position(|r| r.e2_part() != 0.0) {
                return Err(HypError::MixedMode { axis: "e1", index });
            }
            SumState::E1Only
        } else if near(s1, 0.0) && near(s2, 1.0) {
            if let Some(index) = probs.iter().position(|r| r.e1_part() != 0.0) {
                return Err(HypError::MixedMode { axis: "e2", index });
            }
            SumState::E2Only
        } else {
            return Err(HypError::BadSum(sum.to_string()));
        };
        Ok(HyperbolicDistribution { probs, mode })
    }

    /// Embeds an ordinary distribution as `{p~}`.
    pub fn from_real(d: &RealDistribution) -> Self {
        HyperbolicDistribution {
            probs: d
                .probs()
                .iter()
                .map(|&p| Hyperbolic::from_parts(p, p))
                .collect(),
            mode: SumState::Full,
        }
    }

    /// Builds the Full distribution `{m1_k e1 + m2_k e2}` from two marginals of equal length.
    pub fn from_marginals(m1: &RealDistribution, m2: &RealDistribution) -> Result<Self> {
        if m1.len() != m2.len() {
            return Err(HypError::BadRealDistribution(format!(
                "marginal lengths differ: {} vs {}",
                m1.len(),
                m2.len()
            )));
        }
        let probs = m1
            .probs()
            .iter()
            .zip(m2.probs())
            .map(|(&a, &b)| Hyperbolic::from_parts(a, b))
            .collect();
        HyperbolicDistribution::validate(probs)
    }

    pub fn probs(&self) -> &[Hyperbolic] {
        &self.probs
    }

    pub fn mode(&self) -> SumState {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    fn require_full(&self) -> Result<()> {
        match self.mode {
            SumState::Full => Ok(()),
            other => Err(HypError::NotFullMode(other.to_string())),
        }
    }

    /// Real selection probabilities for whole maps.
    ///
    /// Full mode uses the accumulated probability of each entry. In the
    /// zero-divisor modes each entry is identified with its live component.
    pub fn accumulated_distribution(&self) -> RealDistribution {
        let probs = match self.mode {
            SumState::Full => self
                .probs
                .iter()
                .map(|r| (r.e1_part() + r.e2_part()) / 2.0)
                .collect(),
            SumState::E1Only => self.probs.iter().map(Hyperbolic::e1_part).collect(),
            SumState::E2Only => self.probs.iter().map(Hyperbolic::e2_part).collect(),
        };
        RealDistribution { probs }
    }

    /// The component lists `{p_k1}` and `{p_k2}`, each a distribution in Full mode.
    pub fn marginals(&self) -> Result<(RealDistribution, RealDistribution)> {
        self.require_full()?;
        let m1 = self.probs.iter().map(Hyperbolic::e1_part).collect();
        let m2 = self.probs.iter().map(Hyperbolic::e2_part).collect();
        Ok((
            RealDistribution { probs: m1 },
            RealDistribution { probs: m2 },
        ))
    }

    /// `π_(s,t) = p_s1 · p_t2` over all `n²` pairs, row-major in `(s, t)`.
    pub fn combined_q(&self) -> Result<RealDistribution> {
        let (m1, m2) = self.marginals()?;
        let probs = m1
            .probs()
            .iter()
            .flat_map(|&a| m2.probs().iter().map(move |&b| a * b))
            .collect();
        Ok(RealDistribution { probs })
    }

    /// `ω_(s,t) = (1/n)~ (p_s1 e1 + p_t2 e2)` over all `n²` pairs, row-major in `(s, t)`.
    pub fn combined_k(&self) -> Result<HyperbolicDistribution> {
        let (m1, m2) = self.marginals()?;
        let inv_n = 1.0 / self.len() as f64;
        let probs = m1
            .probs()
            .iter()
            .flat_map(|&a| {
                m2.probs()
                    .iter()
                    .map(move |&b| Hyperbolic::from_parts(a * inv_n, b * inv_n))
            })
            .collect();
        HyperbolicDistribution::validate(probs)
    }
}

/// Accumulated real probability `(p1 + p2)/2` of a single hyperbolic probability.
pub fn accumulated(rho: &Hyperbolic) -> Result<f64> {
    if !Interval::UNIT.contains(rho) {
        return Err(HypError::OutOfRange {
            index: 0,
            value: rho.to_string(),
        });
    }
    Ok((rho.e1_part() + rho.e2_part()) / 2.0)
}
