//! Chaos-game runners: classical (planar), hyperbolic, and the D-chaos game.
//!
//! All three are driven by [`Xoshiro256PlusPlus`] seeded from the run config.
//! The classical and hyperbolic games draw one whole map per step from the
//! accumulated real probabilities. The D-chaos game draws an e1 selector `s`
//! from the first marginal and then an e2 selector `t` from the second, and
//! applies the spliced map `G_(s,t)`.

use std::fmt;
use std::thread;

use crate::error::{HypError, Result};
use crate::hyperbolic::Hyperbolic;
use crate::ifs::{AffineContraction, HyperbolicIfs};
use crate::rng::{Categorical, Xoshiro256PlusPlus};

pub const DEFAULT_BURN_IN: u64 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Classical,
    Hyperbolic,
    DChaos,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Classical => "classical",
            Variant::Hyperbolic => "hyperbolic",
            Variant::DChaos => "d-chaos",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Variant {
    type Err = HypError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(Variant::Classical),
            "hyperbolic" => Ok(Variant::Hyperbolic),
            "d-chaos" | "dchaos" => Ok(Variant::DChaos),
            other => Err(HypError::Parse(format!("unknown variant {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub variant: Variant,
    pub seed: u64,
    /// Total number of steps, burn-in included.
    pub iterations: u64,
    /// Steps whose points are discarded.
    pub burn_in: u64,
    pub start: Hyperbolic,
    /// Keep the per-step selection sequence in [`PointCloud::trace`].
    pub keep_trace: bool,
}

impl RunConfig {
    pub fn new(variant: Variant, seed: u64, iterations: u64) -> Self {
        RunConfig {
            variant,
            seed,
            iterations,
            burn_in: DEFAULT_BURN_IN,
            start: Hyperbolic::ZERO,
            keep_trace: false,
        }
    }

    pub fn with_burn_in(mut self, burn_in: u64) -> Self {
        self.burn_in = burn_in;
        self
    }

    pub fn with_start(mut self, start: Hyperbolic) -> Self {
        self.start = start;
        self
    }

    pub fn with_trace(mut self, keep: bool) -> Self {
        self.keep_trace = keep;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.iterations <= self.burn_in {
            return Err(HypError::InvalidConfig(format!(
                "iterations ({}) must exceed burn-in ({})",
                self.iterations, self.burn_in
            )));
        }
        if !self.start.is_finite() {
            return Err(HypError::InvalidConfig("start point is not finite".into()));
        }
        Ok(())
    }

    fn expect(&self, variant: Variant) -> Result<()> {
        if self.variant != variant {
            return Err(HypError::ConfigMismatch {
                expected: variant.name(),
                got: self.variant.name(),
            });
        }
        self.validate()
    }
}

/// Recorded output of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    pub points: Vec<Hyperbolic>,
    pub config: RunConfig,
    /// How often each map (or each `(s, t)` pair, row-major, for D-chaos) was
    /// selected, counted over every step including burn-in.
    pub selection_counts: Vec<u64>,
    /// Selected map index per step (flattened `s * n + t` for D-chaos), when requested.
    pub trace: Option<Vec<u32>>,
}

impl PointCloud {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

struct Recorder {
    points: Vec<Hyperbolic>,
    counts: Vec<u64>,
    trace: Option<Vec<u32>>,
    burn_in: u64,
}

impl Recorder {
    fn new(cfg: &RunConfig, categories: usize) -> Self {
        let recorded = (cfg.iterations - cfg.burn_in) as usize;
        Recorder {
            points: Vec::with_capacity(recorded),
            counts: vec![0; categories],
            trace: cfg
                .keep_trace
                .then(|| Vec::with_capacity(cfg.iterations as usize)),
            burn_in: cfg.burn_in,
        }
    }

    #[inline]
    fn record(&mut self, step: u64, selected: usize, x: Hyperbolic) {
        self.counts[selected] += 1;
        if let Some(t) = self.trace.as_mut() {
            t.push(selected as u32);
        }
        if step > self.burn_in {
            self.points.push(x);
        }
    }

    fn finish(self, cfg: &RunConfig) -> PointCloud {
        PointCloud {
            points: self.points,
            config: cfg.clone(),
            selection_counts: self.counts,
            trace: self.trace,
        }
    }
}

/// Planar diagonal affine map `(x, y) ↦ (a x + b, c y + d)`.
#[derive(Debug, Clone, Copy)]
struct PlanarMap {
    scale: [f64; 2],
    shift: [f64; 2],
}

impl From<&AffineContraction> for PlanarMap {
    fn from(f: &AffineContraction) -> Self {
        PlanarMap {
            scale: [f.kappa().e1_part(), f.kappa().e2_part()],
            shift: [f.beta().e1_part(), f.beta().e2_part()],
        }
    }
}

impl PlanarMap {
    #[inline]
    fn apply(&self, p: [f64; 2]) -> [f64; 2] {
        [
            self.scale[0] * p[0] + self.shift[0],
            self.scale[1] * p[1] + self.shift[1],
        ]
    }
}

/// Classical chaos game on the real plane, reading `(e1, e2)` as `(x, y)`.
pub fn run_classical(ifs: &HyperbolicIfs, cfg: &RunConfig) -> Result<PointCloud> {
    cfg.expect(Variant::Classical)?;
    let maps: Vec<PlanarMap> = ifs.maps().iter().map(PlanarMap::from).collect();
    let picker = Categorical::new(ifs.dist().accumulated_distribution().probs());
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(cfg.seed);
    let mut rec = Recorder::new(cfg, maps.len());

    let mut p = [cfg.start.e1_part(), cfg.start.e2_part()];
    for step in 1..=cfg.iterations {
        let j = picker.sample(&mut rng);
        p = maps[j].apply(p);
        rec.record(step, j, Hyperbolic::from_parts(p[0], p[1]));
    }
    Ok(rec.finish(cfg))
}

/// Hyperbolic chaos game: whole maps `F_k` chosen with the accumulated
/// probabilities `(p_k1 + p_k2)/2`, or with the live component in the
/// zero-divisor sum states.
pub fn run_hyperbolic(ifs: &HyperbolicIfs, cfg: &RunConfig) -> Result<PointCloud> {
    cfg.expect(Variant::Hyperbolic)?;
    let picker = Categorical::new(ifs.dist().accumulated_distribution().probs());
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(cfg.seed);
    let mut rec = Recorder::new(cfg, ifs.len());

    let mut x = cfg.start;
    for step in 1..=cfg.iterations {
        let k = picker.sample(&mut rng);
        x = ifs.maps()[k].apply(x);
        rec.record(step, k, x);
    }
    Ok(rec.finish(cfg))
}

/// D-chaos game. Requires a full-mode distribution.
pub fn run_d_chaos(ifs: &HyperbolicIfs, cfg: &RunConfig) -> Result<PointCloud> {
    cfg.expect(Variant::DChaos)?;
    let (m1, m2) = ifs.dist().marginals()?;
    let pick_s = Categorical::new(m1.probs());
    let pick_t = Categorical::new(m2.probs());
    let n = ifs.len();
    let combined = ifs.combined_maps();
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(cfg.seed);
    let mut rec = Recorder::new(cfg, n * n);

    let mut x = cfg.start;
    for step in 1..=cfg.iterations {
        let s = pick_s.sample(&mut rng);
        let t = pick_t.sample(&mut rng);
        let m = s * n + t;
        x = combined[m].apply(x);
        rec.record(step, m, x);
    }
    Ok(rec.finish(cfg))
}

/// Dispatches on `cfg.variant`.
pub fn run(ifs: &HyperbolicIfs, cfg: &RunConfig) -> Result<PointCloud> {
    match cfg.variant {
        Variant::Classical => run_classical(ifs, cfg),
        Variant::Hyperbolic => run_hyperbolic(ifs, cfg),
        Variant::DChaos => run_d_chaos(ifs, cfg),
    }
}

/// Runs several independent configurations on scoped threads. Output order
/// matches `configs`.
pub fn run_many(ifs: &HyperbolicIfs, configs: &[RunConfig]) -> Vec<Result<PointCloud>> {
    thread::scope(|scope| {
        let handles: Vec<_> = configs
            .iter()
            .map(|cfg| scope.spawn(move || run(ifs, cfg)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("chaos game worker panicked"))
            .collect()
    })
}
