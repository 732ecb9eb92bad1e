//! Bundled example systems.

use crate::hyperbolic::Hyperbolic;
use crate::ifs::{AffineContraction, HyperbolicIfs};
use crate::io::spec_file::parse_spec;
use crate::probability::{HyperbolicDistribution, RealDistribution};

/// Three half-scale maps with offsets `0`, `¼e1 + ½e2` and `½e1`, uniform `(1/3)~`.
pub const SIERPINSKI_JSON: &str = include_str!("../specs/sierpinski.json");
/// The same maps with probabilities `0.1e1 + 0.25e2`, `0.3e1 + 0.2e2`, `0.6e1 + 0.55e2`.
pub const SIERPINSKI_HPD2_JSON: &str = include_str!("../specs/sierpinski_hpd2.json");

/// Looks up a bundled spec by file name (`sierpinski.json`, `sierpinski_hpd2.json`).
pub fn bundled_spec(name: &str) -> Option<&'static str> {
    match name {
        "sierpinski.json" | "sierpinski" => Some(SIERPINSKI_JSON),
        "sierpinski_hpd2.json" | "sierpinski_hpd2" => Some(SIERPINSKI_HPD2_JSON),
        _ => None,
    }
}

fn half(beta_e1: f64, beta_e2: f64) -> AffineContraction {
    AffineContraction::new(
        Hyperbolic::from_parts(0.5, 0.5),
        Hyperbolic::from_parts(beta_e1, beta_e2),
    )
    .expect("half-scale map is a contraction")
}

pub fn sierpinski_maps() -> Vec<AffineContraction> {
    vec![half(0.0, 0.0), half(0.25, 0.5), half(0.5, 0.0)]
}

pub fn sierpinski() -> HyperbolicIfs {
    parse_spec(SIERPINSKI_JSON.as_bytes()).expect("bundled spec is valid")
}

pub fn sierpinski_hpd2() -> HyperbolicIfs {
    parse_spec(SIERPINSKI_HPD2_JSON.as_bytes()).expect("bundled spec is valid")
}

/// The planar Sierpinski system `½x`, `½x + (½, 0)`, `½x + (¼, ½)` with
/// equal real probabilities, with `(x, y)` read as `(e1, e2)`.
pub fn sierpinski_classical() -> HyperbolicIfs {
    let maps = vec![half(0.0, 0.0), half(0.5, 0.0), half(0.25, 0.5)];
    let dist = HyperbolicDistribution::from_real(&RealDistribution::uniform(3).unwrap());
    HyperbolicIfs::new(maps, dist).unwrap()
}
