//! Verification harness run by `hypchaos verify`.

use std::fmt;

use hypchaos::chaos_game::{run_many, PointCloud, RunConfig, Variant};
use hypchaos::ifs::{attractor_oracle, diameter, HyperbolicIfs, ProximityIndex};
use hypchaos::{HypError, SumState};

/// Minimum fraction of recorded points that must lie near the oracle set.
pub const MEMBERSHIP_FRACTION: f64 = 0.999;
pub const MEMBERSHIP_TOLERANCE: f64 = 1.0 / 1024.0;
pub const ORACLE_DEPTH: usize = 12;
const ORACLE_MAX_POINTS: f64 = 2.0e6;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {:<22} {}", self.name, self.detail)
    }
}

/// Largest `|observed - expected| / sd` over all categories, using binomial
/// standard deviations per category.
pub fn max_sigma(counts: &[u64], probs: &[f64]) -> f64 {
    let n = counts.iter().sum::<u64>() as f64;
    counts
        .iter()
        .zip(probs)
        .map(|(&c, &p)| {
            let mean = n * p;
            let sd = (n * p * (1.0 - p)).sqrt();
            let dev = (c as f64 - mean).abs();
            if sd == 0.0 {
                if dev == 0.0 {
                    0.0
                } else {
                    f64::INFINITY
                }
            } else {
                dev / sd
            }
        })
        .fold(0.0, f64::max)
}

fn membership(ifs: &HyperbolicIfs, cloud: &PointCloud) -> Result<Check, HypError> {
    let n = ifs.len() as f64;
    let depth = (1..=ORACLE_DEPTH)
        .take_while(|&d| n.powi(d as i32) <= ORACLE_MAX_POINTS)
        .last()
        .unwrap_or(1);
    let oracle = attractor_oracle(ifs.maps(), depth);
    let span = diameter(&oracle)?;
    let span = span.e1_part().max(span.e2_part()).max(1.0);
    let tol = MEMBERSHIP_TOLERANCE.max(2.0 * ifs.max_contraction().powi(depth as i32) * span);
    let index = ProximityIndex::new(&oracle, tol);
    let near = cloud.points.iter().filter(|p| index.is_near(p)).count();
    let frac = near as f64 / cloud.len() as f64;
    Ok(Check {
        name: "attractor-membership",
        passed: frac >= MEMBERSHIP_FRACTION,
        detail: format!(
            "{:.4}% of {} points within {tol:e} of the depth-{depth} oracle ({} points)",
            100.0 * frac,
            cloud.len(),
            oracle.len()
        ),
    })
}

fn tally(name: &'static str, cloud: &PointCloud, probs: &[f64]) -> Check {
    let sigma = max_sigma(&cloud.selection_counts, probs);
    Check {
        name,
        passed: sigma <= 3.0,
        detail: format!(
            "max deviation {sigma:.3} sd over {} categories",
            probs.len()
        ),
    }
}

fn decoupling(ifs: &HyperbolicIfs, cloud: &PointCloud) -> Check {
    let n = ifs.len();
    let trace = cloud.trace.as_deref().unwrap_or_default();
    let burn_in = cloud.config.burn_in as usize;
    let (mut x1, mut x2) = (cloud.config.start.e1_part(), cloud.config.start.e2_part());
    let mut mismatches = 0usize;
    for (step, &m) in trace.iter().enumerate() {
        let (s, t) = (m as usize / n, m as usize % n);
        let (c1, b1) = ifs.maps()[s].e1_component();
        let (c2, b2) = ifs.maps()[t].e2_component();
        x1 = c1 * x1 + b1;
        x2 = c2 * x2 + b2;
        if step >= burn_in {
            let p = cloud.points[step - burn_in];
            if p.e1_part() != x1 || p.e2_part() != x2 {
                mismatches += 1;
            }
        }
    }
    Check {
        name: "d-chaos-decoupling",
        passed: mismatches == 0 && trace.len() as u64 == cloud.config.iterations,
        detail: format!(
            "{mismatches} of {} points differ from the replayed component games",
            cloud.len()
        ),
    }
}

/// Runs the hyperbolic game (and the D-chaos game for full-mode
/// distributions) and evaluates every applicable check.
pub fn run_checks(ifs: &HyperbolicIfs, iterations: u64, seed: u64) -> Result<Vec<Check>, HypError> {
    let full = ifs.dist().mode() == SumState::Full;
    let mut configs = vec![RunConfig::new(Variant::Hyperbolic, seed, iterations)];
    if full {
        configs.push(RunConfig::new(Variant::DChaos, seed, iterations).with_trace(true));
    }
    for c in &configs {
        c.validate()?;
    }
    let clouds = run_many(ifs, &configs)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;

    let hyperbolic = &clouds[0];
    let mut checks = vec![
        membership(ifs, hyperbolic)?,
        tally(
            "hyperbolic-tallies",
            hyperbolic,
            ifs.dist().accumulated_distribution().probs(),
        ),
    ];
    if let Some(d_chaos) = clouds.get(1) {
        let q = ifs.dist().combined_q()?;
        checks.push(tally("d-chaos-pair-tallies", d_chaos, q.probs()));
        checks.push(decoupling(ifs, d_chaos));
    }
    Ok(checks)
}
