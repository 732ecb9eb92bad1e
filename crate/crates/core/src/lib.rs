//! Hyperbolic (split-complex) numbers, hyperbolic-valued probability
//! distributions and their entropies, and chaos-game renderers for iterated
//! function systems on the hyperbolic plane.
//!
//! Numbers are stored in the idempotent basis `e1 = (1 + k)/2`,
//! `e2 = (1 - k)/2`, where every operation acts coordinatewise.

pub mod chaos_game;
pub mod entropy;
pub mod error;
pub mod hyperbolic;
pub mod ifs;
pub mod io;
pub mod probability;
pub mod rng;
pub mod systems;

pub use chaos_game::{
    run, run_classical, run_d_chaos, run_hyperbolic, PointCloud, RunConfig, Variant,
};
pub use entropy::{shannon, strong_entropy, verify_inequalities, weak_entropy, EntropyReport};
pub use error::{HypError, Result};
pub use hyperbolic::{Hyperbolic, Interval, OrderResult};
pub use ifs::{hausdorff, hutchinson_step, AffineContraction, HyperbolicIfs};
pub use io::raster::{rasterize, write_ppm, DensityGrid};
pub use io::spec_file::{parse_spec, IfsSpecFile};
pub use probability::{accumulated, HyperbolicDistribution, RealDistribution, SumState};
