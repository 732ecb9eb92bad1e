//! Affine hyperbolic contractions, iterated function systems and the
//! Hutchinson operator on finite point sets.

use std::collections::{BTreeSet, HashMap};

use crate::error::{HypError, Result};
use crate::hyperbolic::Hyperbolic;
use crate::probability::HyperbolicDistribution;

/// Grid used to snap and deduplicate points produced by [`hutchinson_step`].
pub const SNAP_GRID: f64 = 1.0 / (1u64 << 40) as f64;

/// The affine map `ξ ↦ κ ξ + β` with `0 ⪯ κ` and `κ ≺ 1~` in both parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineContraction {
    kappa: Hyperbolic,
    beta: Hyperbolic,
}

impl AffineContraction {
    pub fn new(kappa: Hyperbolic, beta: Hyperbolic) -> Result<Self> {
        let ok = |c: f64| (0.0..1.0).contains(&c);
        if !(ok(kappa.e1_part()) && ok(kappa.e2_part())) {
            return Err(HypError::NotContraction(kappa.to_string()));
        }
        Ok(AffineContraction { kappa, beta })
    }

    pub fn kappa(&self) -> Hyperbolic {
        self.kappa
    }

    pub fn beta(&self) -> Hyperbolic {
        self.beta
    }

    #[inline]
    pub fn apply(&self, x: Hyperbolic) -> Hyperbolic {
        self.kappa * x + self.beta
    }

    /// Real component map `x ↦ c x + b` acting on the e1 part.
    pub fn e1_component(&self) -> (f64, f64) {
        (self.kappa.e1_part(), self.beta.e1_part())
    }

    pub fn e2_component(&self) -> (f64, f64) {
        (self.kappa.e2_part(), self.beta.e2_part())
    }

    /// Splices the e1 component of `f_s` with the e2 component of `f_t`.
    ///
    /// The result is again a contraction with factor `c_s1 e1 + c_t2 e2`.
    pub fn combine(f_s: &AffineContraction, f_t: &AffineContraction) -> AffineContraction {
        AffineContraction {
            kappa: Hyperbolic::from_parts(f_s.kappa.e1_part(), f_t.kappa.e2_part()),
            beta: Hyperbolic::from_parts(f_s.beta.e1_part(), f_t.beta.e2_part()),
        }
    }

    /// The unique fixed point `β / (1~ - κ)`.
    pub fn fixed_point(&self) -> Hyperbolic {
        let denom = Hyperbolic::ONE - self.kappa;
        // 1 - c > 0 in both parts, so denom is invertible
        Hyperbolic::from_parts(
            self.beta.e1_part() / denom.e1_part(),
            self.beta.e2_part() / denom.e2_part(),
        )
    }
}

/// An iterated function system with a hyperbolic probability per map.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperbolicIfs {
    maps: Vec<AffineContraction>,
    dist: HyperbolicDistribution,
}

impl HyperbolicIfs {
    pub fn new(maps: Vec<AffineContraction>, dist: HyperbolicDistribution) -> Result<Self> {
        if maps.is_empty() {
            return Err(HypError::EmptySystem);
        }
        if maps.len() != dist.len() {
            return Err(HypError::LengthMismatch {
                maps: maps.len(),
                probs: dist.len(),
            });
        }
        Ok(HyperbolicIfs { maps, dist })
    }

    pub fn maps(&self) -> &[AffineContraction] {
        &self.maps
    }

    pub fn dist(&self) -> &HyperbolicDistribution {
        &self.dist
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// Same maps, different probabilities.
    pub fn with_distribution(&self, dist: HyperbolicDistribution) -> Result<Self> {
        HyperbolicIfs::new(self.maps.clone(), dist)
    }

    /// All `n²` spliced maps `G_(s,t)`, row-major in `(s, t)`.
    pub fn combined_maps(&self) -> Vec<AffineContraction> {
        self.maps
            .iter()
            .flat_map(|fs| {
                self.maps
                    .iter()
                    .map(move |ft| AffineContraction::combine(fs, ft))
            })
            .collect()
    }

    /// Largest contraction factor over both components of every map.
    pub fn max_contraction(&self) -> f64 {
        self.maps
            .iter()
            .map(|f| f.kappa.e1_part().max(f.kappa.e2_part()))
            .fold(0.0, f64::max)
    }
}

fn snap_key(x: &Hyperbolic) -> (i64, i64) {
    (
        (x.e1_part() / SNAP_GRID).round() as i64,
        (x.e2_part() / SNAP_GRID).round() as i64,
    )
}

fn from_key((a, b): (i64, i64)) -> Hyperbolic {
    Hyperbolic::from_parts(a as f64 * SNAP_GRID, b as f64 * SNAP_GRID)
}

/// One application of the Hutchinson operator `J(A) = ⋃ f_j(A)`.
///
/// Images are snapped to a `2^-40` grid and deduplicated; the output is sorted.
pub fn hutchinson_step(maps: &[AffineContraction], points: &[Hyperbolic]) -> Vec<Hyperbolic> {
    let keys: BTreeSet<(i64, i64)> = points
        .iter()
        .flat_map(|&x| maps.iter().map(move |f| snap_key(&f.apply(x))))
        .collect();
    keys.into_iter().map(from_key).collect()
}

/// `J^depth(start)`.
pub fn hutchinson_iterate(
    maps: &[AffineContraction],
    start: &[Hyperbolic],
    depth: usize,
) -> Vec<Hyperbolic> {
    (0..depth).fold(start.to_vec(), |acc, _| hutchinson_step(maps, &acc))
}

/// Attractor approximation obtained by iterating `J` from `{0}`.
pub fn attractor_oracle(maps: &[AffineContraction], depth: usize) -> Vec<Hyperbolic> {
    hutchinson_iterate(maps, &[Hyperbolic::ZERO], depth)
}

/// Hyperbolic diameter `sup - inf` of a point set, componentwise.
pub fn diameter(points: &[Hyperbolic]) -> Result<Hyperbolic> {
    let first = points.first().ok_or(HypError::EmptySet)?;
    let (lo, hi) = points
        .iter()
        .fold((*first, *first), |(lo, hi), p| (lo.inf(p), hi.sup(p)));
    Ok(hi - lo)
}

fn directed_1d(from: &[f64], to_sorted: &[f64]) -> f64 {
    from.iter()
        .map(|&x| {
            let i = to_sorted.partition_point(|&y| y < x);
            let right = to_sorted.get(i).map_or(f64::INFINITY, |&y| y - x);
            let left = i.checked_sub(1).map_or(f64::INFINITY, |j| x - to_sorted[j]);
            right.min(left)
        })
        .fold(0.0, f64::max)
}

fn hausdorff_1d(mut a: Vec<f64>, mut b: Vec<f64>) -> f64 {
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    directed_1d(&a, &b).max(directed_1d(&b, &a))
}

/// Componentwise Hausdorff distance: the real Hausdorff distance of the e1
/// projections times `e1` plus that of the e2 projections times `e2`.
pub fn hausdorff(a: &[Hyperbolic], b: &[Hyperbolic]) -> Result<Hyperbolic> {
    if a.is_empty() || b.is_empty() {
        return Err(HypError::EmptySet);
    }
    let proj = |s: &[Hyperbolic], f: fn(&Hyperbolic) -> f64| s.iter().map(f).collect::<Vec<_>>();
    let d1 = hausdorff_1d(proj(a, Hyperbolic::e1_part), proj(b, Hyperbolic::e1_part));
    let d2 = hausdorff_1d(proj(a, Hyperbolic::e2_part), proj(b, Hyperbolic::e2_part));
    Ok(Hyperbolic::from_parts(d1, d2))
}

/// Bucketed point set answering "is some point within `tol` of `x` in both parts".
#[derive(Debug, Clone)]
pub struct ProximityIndex {
    tol: f64,
    cells: HashMap<(i64, i64), Vec<Hyperbolic>>,
}

impl ProximityIndex {
    pub fn new(points: &[Hyperbolic], tol: f64) -> Self {
        assert!(tol > 0.0, "tolerance must be positive");
        let mut cells: HashMap<(i64, i64), Vec<Hyperbolic>> = HashMap::new();
        for p in points {
            cells.entry(Self::cell(p, tol)).or_default().push(*p);
        }
        ProximityIndex { tol, cells }
    }

    fn cell(p: &Hyperbolic, tol: f64) -> (i64, i64) {
        (
            (p.e1_part() / tol).floor() as i64,
            (p.e2_part() / tol).floor() as i64,
        )
    }

    /// True when some indexed `q` has `D_k(x, q) ⪯ tol~`.
    pub fn is_near(&self, x: &Hyperbolic) -> bool {
        let (c1, c2) = Self::cell(x, self.tol);
        let bound = Hyperbolic::from_parts(self.tol, self.tol);
        (c1 - 1..=c1 + 1).any(|i| {
            (c2 - 1..=c2 + 1).any(|j| {
                self.cells
                    .get(&(i, j))
                    .is_some_and(|v| v.iter().any(|q| x.distance(q).le(&bound)))
            })
        })
    }
}
