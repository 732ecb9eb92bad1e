//! Shannon entropy and its weak and strong hyperbolic extensions.
//!
//! Everything is in nats. Terms with a zero probability contribute zero
//! (the `0 · ln 0 = 0` convention), applied per idempotent component.

use serde::Serialize;

use crate::error::Result;
use crate::hyperbolic::{Hyperbolic, OrderResult};
use crate::probability::{HyperbolicDistribution, RealDistribution};

/// Slack added to the right-hand side of the entropy inequalities before the
/// exact order comparison.
pub const INEQUALITY_SLACK: f64 = 1e-12;

#[inline]
fn neg_xlnx(p: f64) -> f64 {
    if p == 0.0 {
        0.0
    } else {
        -p * p.ln()
    }
}

/// Shannon entropy `-Σ p ln p` of a probability vector.
pub fn shannon_of(probs: &[f64]) -> f64 {
    probs.iter().map(|&p| neg_xlnx(p)).sum()
}

pub fn shannon(d: &RealDistribution) -> f64 {
    shannon_of(d.probs())
}

/// Weak hyperbolic entropy `Σ -ρ_k · ln((p_k1 + p_k2)/2)~`.
///
/// The accumulated formula is applied verbatim in every sum state, so an
/// e1-only entry `p e1` is weighted with `ln(p/2)`.
pub fn weak_entropy(d: &HyperbolicDistribution) -> Hyperbolic {
    d.probs()
        .iter()
        .filter_map(|rho| {
            let acc = (rho.e1_part() + rho.e2_part()) / 2.0;
            (acc > 0.0).then(|| -*rho * acc.ln())
        })
        .sum()
}

/// Strong hyperbolic entropy `Σ -ρ_k Log_𝔻(ρ_k)`.
///
/// Since `e1 e2 = 0` the e1 part is the Shannon entropy of `{p_k1}` and the e2
/// part that of `{p_k2}`.
pub fn strong_entropy(d: &HyperbolicDistribution) -> Hyperbolic {
    d.probs()
        .iter()
        .map(|rho| match rho.ln() {
            Ok(log) => -*rho * log,
            // a zero divisor or zero: evaluate each part under the convention
            Err(_) => Hyperbolic::from_parts(neg_xlnx(rho.e1_part()), neg_xlnx(rho.e2_part())),
        })
        .sum()
}

/// Entropies of a distribution and of its two combined `n²` distributions,
/// with the verdicts of the two entropy inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyReport {
    pub h_strong: Hyperbolic,
    pub h_weak: Hyperbolic,
    /// Shannon entropy of the product distribution `{p_s1 p_t2}`.
    pub h_q: f64,
    /// Strong entropy of `{(1/n)(p_s1 e1 + p_t2 e2)}`.
    pub h_k: Hyperbolic,
    /// `h_strong ⪯ h_q~`
    pub ineq_q_holds: bool,
    /// `h_strong ⪯ h_k`
    pub ineq_k_holds: bool,
}

fn dominated(lhs: &Hyperbolic, rhs: &Hyperbolic) -> bool {
    let padded = *rhs + Hyperbolic::from_parts(INEQUALITY_SLACK, INEQUALITY_SLACK);
    matches!(lhs.order(&padded), OrderResult::Less | OrderResult::Equal)
}

pub fn verify_inequalities(d: &HyperbolicDistribution) -> Result<EntropyReport> {
    let q = d.combined_q()?;
    let k = d.combined_k()?;
    let h_strong = strong_entropy(d);
    let h_q = shannon(&q);
    let h_k = strong_entropy(&k);
    Ok(EntropyReport {
        h_strong,
        h_weak: weak_entropy(d),
        h_q,
        h_k,
        ineq_q_holds: dominated(&h_strong, &Hyperbolic::from_parts(h_q, h_q)),
        ineq_k_holds: dominated(&h_strong, &h_k),
    })
}
