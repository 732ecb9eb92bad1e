//! Density grids over a hyperbolic interval and their binary PPM rendering.
//!
//! The e1 part runs along the horizontal axis and the e2 part along the
//! vertical axis, with the origin at the bottom-left.

use std::io::{self, Write};

use crate::error::{HypError, Result};
use crate::hyperbolic::{Hyperbolic, Interval};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityGrid {
    resolution: usize,
    /// Row-major, row 0 at the bottom (lowest e2).
    counts: Vec<u64>,
    overflow: u64,
}

impl DensityGrid {
    /// Builds a grid from explicit counts, rows listed bottom to top.
    pub fn from_counts(resolution: usize, counts: Vec<u64>) -> Result<Self> {
        if resolution < 1 || counts.len() != resolution * resolution {
            return Err(HypError::BadResolution(resolution));
        }
        Ok(DensityGrid {
            resolution,
            counts,
            overflow: 0,
        })
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    /// Count in column `col` (e1 bin) and row `row` (e2 bin, 0 = bottom).
    pub fn count(&self, col: usize, row: usize) -> u64 {
        self.counts[row * self.resolution + col]
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Points that fell outside the extent.
    pub fn overflow(&self) -> u64 {
        self.overflow
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn max_count(&self) -> u64 {
        self.counts.iter().copied().max().unwrap_or(0)
    }
}

fn bin(x: f64, lo: f64, hi: f64, r: usize) -> usize {
    let b = ((x - lo) / (hi - lo) * r as f64).floor() as usize;
    b.min(r - 1)
}

/// Bins points by truncation into an `r × r` grid over `extent`.
pub fn rasterize(
    points: &[Hyperbolic],
    resolution: usize,
    extent: &Interval,
) -> Result<DensityGrid> {
    if resolution < 2 {
        return Err(HypError::BadResolution(resolution));
    }
    let (lo, hi) = (extent.lo(), extent.hi());
    if lo.e1_part() == hi.e1_part() {
        return Err(HypError::DegenerateExtent("e1"));
    }
    if lo.e2_part() == hi.e2_part() {
        return Err(HypError::DegenerateExtent("e2"));
    }
    let mut counts = vec![0u64; resolution * resolution];
    let mut overflow = 0;
    for p in points {
        if !extent.contains(p) {
            overflow += 1;
            continue;
        }
        let col = bin(p.e1_part(), lo.e1_part(), hi.e1_part(), resolution);
        let row = bin(p.e2_part(), lo.e2_part(), hi.e2_part(), resolution);
        counts[row * resolution + col] += 1;
    }
    Ok(DensityGrid {
        resolution,
        counts,
        overflow,
    })
}

/// Log-scaled grey level `floor(255 ln(1 + c) / ln(1 + c_max))`.
pub fn intensity(count: u64, max: u64) -> u8 {
    if max == 0 || count == 0 {
        return 0;
    }
    let v = 255.0 * (count as f64).ln_1p() / (max as f64).ln_1p();
    v.floor().clamp(0.0, 255.0) as u8
}

/// Writes a binary `P6` image, top row first, white points on black.
pub fn write_ppm<W: Write>(grid: &DensityGrid, out: W) -> io::Result<()> {
    let r = grid.resolution;
    let max = grid.max_count();
    let mut out = io::BufWriter::new(out);
    write!(out, "P6\n{r} {r}\n255\n")?;
    let mut row_buf = Vec::with_capacity(3 * r);
    for row in (0..r).rev() {
        row_buf.clear();
        for col in 0..r {
            let v = intensity(grid.count(col, row), max);
            row_buf.extend_from_slice(&[v, v, v]);
        }
        out.write_all(&row_buf)?;
    }
    out.flush()
}
