//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use hypchaos::chaos_game::{run, PointCloud, RunConfig, Variant};
use hypchaos::entropy::{shannon_of, strong_entropy, verify_inequalities};
use hypchaos::ifs::{attractor_oracle, AffineContraction, ProximityIndex};
use hypchaos::rng::Xoshiro256PlusPlus;
use hypchaos::{
    rasterize, systems, Hyperbolic, HyperbolicDistribution, Interval, OrderResult,
    RealDistribution, SumState,
};
use statrs::distribution::{ChiSquared, ContinuousCDF};

const CHAOS_ITERATIONS: u64 = 1_000_000;
const BURN_IN: u64 = 100;
const RANDOM_DISTRIBUTIONS: usize = 1000;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    o.detail = format!("{} [{:.2?}]", o.detail, took);
    if let Some(limit) = limit {
        if took > limit {
            o.passed = false;
            o.detail = format!("{} exceeds {:?}", o.detail, limit);
        }
    }
    o
}

fn uniform_unit(rng: &mut Xoshiro256PlusPlus, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.next_f64()
}

/// Random Full-mode distribution with `n` in 2..=8 and independent marginals.
fn random_full(rng: &mut Xoshiro256PlusPlus) -> HyperbolicDistribution {
    let n = 2 + (rng.next_u64() % 7) as usize;
    let mut marginal = || {
        let w: Vec<f64> = (0..n).map(|_| uniform_unit(rng, 1e-3, 1.0)).collect();
        let s: f64 = w.iter().sum();
        RealDistribution::new(w.iter().map(|x| x / s).collect()).unwrap()
    };
    let (m1, m2) = (marginal(), marginal());
    HyperbolicDistribution::from_marginals(&m1, &m2).unwrap()
}

fn random_distributions(seed: u64) -> Vec<HyperbolicDistribution> {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    (0..RANDOM_DISTRIBUTIONS)
        .map(|_| random_full(&mut rng))
        .collect()
}

// 1
fn algebra_suite() -> Outcome {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(1);
    let (e1, e2) = (Hyperbolic::E1, Hyperbolic::E2);
    let mut ok =
        e1 * e2 == Hyperbolic::ZERO && e1 + e2 == Hyperbolic::ONE && e1 * e1 == e1 && e2 * e2 == e2;
    let mut cases = 0;
    for _ in 0..10_000 {
        let v: Vec<f64> = (0..4).map(|_| uniform_unit(&mut rng, -1e3, 1e3)).collect();
        let x = Hyperbolic::new(v[0], v[1]).unwrap();
        let y = Hyperbolic::new(v[2], v[3]).unwrap();
        let p = x * y;
        ok &= p.e1_part().to_bits() == (v[0] * v[2]).to_bits();
        ok &= p.e2_part().to_bits() == (v[1] * v[3]).to_bits();
        let (a, b) = (v[0], v[2]);
        let (ea, eb) = (
            Hyperbolic::embed_real(a).unwrap(),
            Hyperbolic::embed_real(b).unwrap(),
        );
        ok &= ea + eb == Hyperbolic::embed_real(a + b).unwrap();
        ok &= ea * eb == Hyperbolic::embed_real(a * b).unwrap();
        ok &= x * e1 + x * e2 == x;
        cases += 1;
    }
    outcome(ok, format!("{cases} randomized cases, all exact"))
}

// 2
fn uniform_entropy() -> Outcome {
    let t = 1.0 / 3.0;
    let d = HyperbolicDistribution::validate(vec![Hyperbolic::from_parts(t, t); 3]).unwrap();
    let s = strong_entropy(&d);
    let ln3 = 3f64.ln();
    let mut worst = (s.e1_part() - ln3).abs().max((s.e2_part() - ln3).abs());
    for n in 1..=16usize {
        let d =
            HyperbolicDistribution::validate(vec![Hyperbolic::from_parts(1.0 / n as f64, 0.0); n])
                .unwrap();
        assert_eq!(d.mode(), SumState::E1Only);
        let s = strong_entropy(&d);
        worst = worst
            .max((s.e1_part() - (n as f64).ln()).abs())
            .max(s.e2_part().abs());
    }
    outcome(
        worst <= 1e-12,
        format!("max deviation {worst:e} (tol 1e-12)"),
    )
}

// 3
fn marginal_identity() -> Outcome {
    let mut worst = 0.0f64;
    for d in random_distributions(3) {
        let (m1, m2) = d.marginals().unwrap();
        let s = strong_entropy(&d);
        worst = worst
            .max((s.e1_part() - shannon_of(m1.probs())).abs())
            .max((s.e2_part() - shannon_of(m2.probs())).abs());
    }
    outcome(
        worst <= 1e-12,
        format!("{RANDOM_DISTRIBUTIONS} distributions, max deviation {worst:e} (tol 1e-12)"),
    )
}

// 4
fn entropy_inequalities() -> Outcome {
    let mut violations = 0;
    let mut worst_oracle = 0.0f64;
    for d in random_distributions(3) {
        let r = verify_inequalities(&d).unwrap();
        let strict_q = r.h_strong.order(&Hyperbolic::from_parts(r.h_q, r.h_q));
        let strict_k = r.h_strong.order(&r.h_k);
        let bad = |o: OrderResult| matches!(o, OrderResult::Greater | OrderResult::Incomparable);
        if !(r.ineq_q_holds && r.ineq_k_holds) || bad(strict_q) || bad(strict_k) {
            violations += 1;
        }
        let (m1, m2) = d.marginals().unwrap();
        let (h1, h2) = (shannon_of(m1.probs()), shannon_of(m2.probs()));
        let ln_n = (d.len() as f64).ln();
        worst_oracle = worst_oracle
            .max((r.h_q - (h1 + h2)).abs())
            .max((r.h_k.e1_part() - (h1 + ln_n)).abs())
            .max((r.h_k.e2_part() - (h2 + ln_n)).abs());
    }
    outcome(
        violations == 0 && worst_oracle <= 1e-9,
        format!("{violations} violations, oracle deviation {worst_oracle:e} (tol 1e-9)"),
    )
}

// 5
fn sierpinski_reproduction() -> Outcome {
    let ifs = systems::sierpinski();
    let cfg = RunConfig::new(Variant::Hyperbolic, 20240101, CHAOS_ITERATIONS).with_burn_in(BURN_IN);
    let cloud = run(&ifs, &cfg).unwrap();
    let oracle = attractor_oracle(ifs.maps(), 12);
    let index = ProximityIndex::new(&oracle, 2f64.powi(-10));
    let near = cloud.points.iter().filter(|p| index.is_near(p)).count();
    let frac = near as f64 / cloud.len() as f64;
    outcome(
        frac >= 0.999,
        format!(
            "{:.4}% of {} points within 2^-10 of {} oracle points (need >= 99.9%)",
            100.0 * frac,
            cloud.len(),
            oracle.len()
        ),
    )
}

fn d_chaos(ifs_seed: (&hypchaos::HyperbolicIfs, u64)) -> PointCloud {
    let (ifs, seed) = ifs_seed;
    let cfg = RunConfig::new(Variant::DChaos, seed, CHAOS_ITERATIONS).with_burn_in(BURN_IN);
    run(ifs, &cfg).unwrap()
}

/// Hutchinson iteration on unions of intervals, starting from the hull [0, 1].
fn interval_oracle(maps: &[(f64, f64)], depth: usize) -> Vec<(f64, f64)> {
    let mut ivs = vec![(0.0f64, 1.0f64)];
    for _ in 0..depth {
        let mut next: Vec<(f64, f64)> = ivs
            .iter()
            .flat_map(|&(a, b)| maps.iter().map(move |&(c, t)| (c * a + t, c * b + t)))
            .collect();
        next.sort_by(|x, y| x.0.total_cmp(&y.0));
        let mut merged: Vec<(f64, f64)> = Vec::new();
        for (a, b) in next {
            match merged.last_mut() {
                Some(last) if a <= last.1 => last.1 = last.1.max(b),
                _ => merged.push((a, b)),
            }
        }
        ivs = merged;
    }
    ivs
}

// 6
fn d_chaos_fills_components() -> Outcome {
    let ifs = systems::sierpinski();
    let e1_maps: Vec<_> = ifs
        .maps()
        .iter()
        .map(AffineContraction::e1_component)
        .collect();
    let e2_maps: Vec<_> = ifs
        .maps()
        .iter()
        .map(AffineContraction::e2_component)
        .collect();
    let oracle_ok = interval_oracle(&e1_maps, 12) == vec![(0.0, 1.0)]
        && interval_oracle(&e2_maps, 12) == vec![(0.0, 1.0)];

    let cloud = d_chaos((&ifs, 606));
    let mut h1 = [0u64; 64];
    let mut h2 = [0u64; 64];
    for p in &cloud.points {
        h1[((p.e1_part() * 64.0) as usize).min(63)] += 1;
        h2[((p.e2_part() * 64.0) as usize).min(63)] += 1;
    }
    let empty1 = h1.iter().filter(|&&c| c == 0).count();
    let empty2 = h2.iter().filter(|&&c| c == 0).count();
    outcome(
        oracle_ok && empty1 == 0 && empty2 == 0,
        format!("interval oracle [0,1] x2: {oracle_ok}; empty bins e1={empty1} e2={empty2}"),
    )
}

// 7
fn d_chaos_pair_frequencies() -> Outcome {
    let ifs = systems::sierpinski_hpd2();
    let q = ifs.dist().combined_q().unwrap();
    let frozen = [0.025, 0.02, 0.055, 0.075, 0.06, 0.165, 0.15, 0.12, 0.33];
    let table_ok = q
        .probs()
        .iter()
        .zip(frozen)
        .all(|(a, b)| (a - b).abs() <= 1e-15);
    let cloud = d_chaos((&ifs, 707));
    let n = cloud.selection_counts.iter().sum::<u64>() as f64;
    let worst = cloud
        .selection_counts
        .iter()
        .zip(frozen)
        .map(|(&c, p)| (c as f64 - n * p).abs() / (n * p * (1.0 - p)).sqrt())
        .fold(0.0, f64::max);
    outcome(
        table_ok && worst <= 3.0,
        format!("pi table matches: {table_ok}; max deviation {worst:.3} sd (limit 3)"),
    )
}

/// Stationary mass of each of `bins` equal cells for the 1D system
/// `x ↦ x/2 + b_j` with probabilities `p_j`, every `b_j` a multiple of the
/// cell width. The preimage of a cell under a half-scale map is exactly two
/// cells, so the transfer operator closes on the cell masses.
fn half_scale_cell_measure(offsets: &[f64], probs: &[f64], bins: usize) -> Vec<f64> {
    let shifts: Vec<i64> = offsets
        .iter()
        .map(|b| (b * bins as f64).round() as i64)
        .collect();
    let mut mu = vec![1.0 / bins as f64; bins];
    for _ in 0..10_000 {
        let mut next = vec![0.0; bins];
        for (&s, &p) in shifts.iter().zip(probs) {
            for (m, slot) in next.iter_mut().enumerate() {
                let k = 2 * (m as i64 - s);
                if k >= 0 && (k as usize) + 1 < bins {
                    *slot += p * (mu[k as usize] + mu[k as usize + 1]);
                }
            }
        }
        let delta: f64 = next.iter().zip(&mu).map(|(a, b)| (a - b).abs()).sum();
        mu = next;
        if delta < 1e-17 {
            break;
        }
    }
    mu
}

fn expected_counts(ifs: &hypchaos::HyperbolicIfs, n: f64) -> Vec<f64> {
    let (m1, m2) = ifs.dist().marginals().unwrap();
    let off1: Vec<f64> = ifs.maps().iter().map(|f| f.beta().e1_part()).collect();
    let off2: Vec<f64> = ifs.maps().iter().map(|f| f.beta().e2_part()).collect();
    let mu1 = half_scale_cell_measure(&off1, m1.probs(), 64);
    let mu2 = half_scale_cell_measure(&off2, m2.probs(), 64);
    // row-major with row = e2 bin, matching DensityGrid
    mu2.iter()
        .flat_map(|&b| mu1.iter().map(move |&a| n * a * b))
        .collect()
}

// 8
fn similar_figure_different_accumulation() -> Outcome {
    let uniform = systems::sierpinski();
    let skewed = systems::sierpinski_hpd2();
    let cu = d_chaos((&uniform, 801));
    let ch = d_chaos((&skewed, 802));
    let gu = rasterize(&cu.points, 64, &Interval::UNIT).unwrap();
    let gh = rasterize(&ch.points, 64, &Interval::UNIT).unwrap();
    let eu = expected_counts(&uniform, cu.len() as f64);
    let eh = expected_counts(&skewed, ch.len() as f64);

    let mut unexplained = 0;
    let mut exempt = 0;
    for b in 0..64 * 64 {
        let (ou, oh) = (gu.counts()[b] > 0, gh.counts()[b] > 0);
        if ou == oh {
            continue;
        }
        let missing_expectation = if ou { eh[b] } else { eu[b] };
        if missing_expectation < 5.0 {
            exempt += 1;
        } else {
            unexplained += 1;
        }
    }

    let shared: Vec<usize> = (0..64 * 64)
        .filter(|&b| gu.counts()[b] > 0 && gh.counts()[b] > 0)
        .collect();
    let nu: f64 = shared.iter().map(|&b| gu.counts()[b] as f64).sum();
    let nh: f64 = shared.iter().map(|&b| gh.counts()[b] as f64).sum();
    let total = nu + nh;
    let chi2: f64 = shared
        .iter()
        .map(|&b| {
            let (ou, oh) = (gu.counts()[b] as f64, gh.counts()[b] as f64);
            let pooled = (ou + oh) / total;
            let (xu, xh) = (nu * pooled, nh * pooled);
            (ou - xu).powi(2) / xu + (oh - xh).powi(2) / xh
        })
        .sum();
    let df = (shared.len() - 1) as f64;
    let critical = ChiSquared::new(df).unwrap().inverse_cdf(0.99);
    outcome(
        unexplained == 0 && chi2 > critical,
        format!(
            "support mismatches: {unexplained} unexplained, {exempt} with expected count < 5; \
             chi2 = {chi2:.0} over {} shared bins vs 99th percentile {critical:.0}",
            shared.len()
        ),
    )
}

// 9
fn contraction_lemma() -> Outcome {
    let ifs = systems::sierpinski();
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(9);
    let mut bit_exact = true;
    let mut failures = 0usize;
    // rounding in κξ + β can add a few ulps over exact arithmetic
    let slack = Hyperbolic::from_parts(1e-12, 1e-12);
    for fs in ifs.maps() {
        for ft in ifs.maps() {
            let g = AffineContraction::combine(fs, ft);
            bit_exact &= g.kappa().e1_part().to_bits() == fs.kappa().e1_part().to_bits()
                && g.kappa().e2_part().to_bits() == ft.kappa().e2_part().to_bits();
            for _ in 0..10_000 {
                let mut pt = || {
                    Hyperbolic::new(
                        uniform_unit(&mut rng, -2.0, 2.0),
                        uniform_unit(&mut rng, -2.0, 2.0),
                    )
                    .unwrap()
                };
                let (x, y) = (pt(), pt());
                let lhs = g.apply(x).distance(&g.apply(y));
                let rhs = g.kappa() * x.distance(&y) + slack;
                if !lhs.order(&rhs).is_le() {
                    failures += 1;
                }
            }
        }
    }
    outcome(
        bit_exact && failures == 0,
        format!("9 spliced maps, kappa bit-exact: {bit_exact}; {failures} of 90000 pairs violate"),
    )
}

// 10
fn cli_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let generate = |tag: &str| {
        let csv = dir.path().join(format!("{tag}.csv"));
        let ppm = dir.path().join(format!("{tag}.ppm"));
        let status = Command::new(env!("CARGO_BIN_EXE_hypchaos"))
            .args([
                "generate",
                "--spec",
                "sierpinski_hpd2.json",
                "--variant",
                "d-chaos",
            ])
            .args([
                "--iterations",
                "200000",
                "--seed",
                "42",
                "--resolution",
                "128",
            ])
            .arg("--csv")
            .arg(&csv)
            .arg("--image")
            .arg(&ppm)
            .output()
            .unwrap();
        assert!(status.status.success(), "{status:?}");
        (fs::read(csv).unwrap(), fs::read(ppm).unwrap())
    };
    let (csv_a, ppm_a) = generate("a");
    let (csv_b, ppm_b) = generate("b");
    outcome(
        csv_a == csv_b && ppm_a == ppm_b && !csv_a.is_empty() && !ppm_a.is_empty(),
        format!(
            "csv {} bytes identical: {}; ppm {} bytes identical: {}",
            csv_a.len(),
            csv_a == csv_b,
            ppm_a.len(),
            ppm_a == ppm_b
        ),
    )
}

fn main() {
    type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("algebra suite", Some(Duration::from_secs(1)), algebra_suite),
        (
            "uniform entropy",
            Some(Duration::from_secs(1)),
            uniform_entropy,
        ),
        ("strong-entropy marginal identity", None, marginal_identity),
        (
            "entropy inequalities",
            Some(Duration::from_secs(5)),
            entropy_inequalities,
        ),
        (
            "sierpinski reproduction",
            Some(Duration::from_secs(10)),
            sierpinski_reproduction,
        ),
        (
            "d-chaos decoupled attractor",
            None,
            d_chaos_fills_components,
        ),
        ("d-chaos pair frequencies", None, d_chaos_pair_frequencies),
        (
            "similar figure, different accumulation",
            None,
            similar_figure_different_accumulation,
        ),
        ("contraction lemma", None, contraction_lemma),
        ("generate determinism", None, cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let o = timed(*limit, check);
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {:>2}. {name}: {}", i + 1, o.detail);
        failed += usize::from(!o.passed);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
