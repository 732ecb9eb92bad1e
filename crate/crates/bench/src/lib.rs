//! Fixtures shared by the benchmarks.

use hypchaos::{Hyperbolic, HyperbolicDistribution, RealDistribution};

/// Full-mode distribution over `n` entries with skewed, unequal marginals.
pub fn skewed_distribution(n: usize) -> HyperbolicDistribution {
    let w1: Vec<f64> = (1..=n).map(|k| k as f64).collect();
    let w2: Vec<f64> = (1..=n).map(|k| (n + 1 - k) as f64 * 0.5 + 1.0).collect();
    let norm = |w: Vec<f64>| {
        let s: f64 = w.iter().sum();
        RealDistribution::new(w.into_iter().map(|x| x / s).collect()).unwrap()
    };
    HyperbolicDistribution::from_marginals(&norm(w1), &norm(w2)).unwrap()
}

/// Points on a small lattice inside `[0, 1~]`.
pub fn lattice(side: usize) -> Vec<Hyperbolic> {
    let step = 1.0 / side as f64;
    (0..side)
        .flat_map(|i| {
            (0..side).map(move |j| Hyperbolic::from_parts(i as f64 * step, j as f64 * step))
        })
        .collect()
}
