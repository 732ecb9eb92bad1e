//! Point CSV: header `index,e1,e2`, shortest round-trip decimals, LF endings.

use std::io::{self, Write};

use crate::error::{HypError, Result};
use crate::hyperbolic::Hyperbolic;

pub const HEADER: &str = "index,e1,e2";

pub fn write_csv<W: Write>(points: &[Hyperbolic], out: W) -> io::Result<()> {
    let mut out = io::BufWriter::new(out);
    writeln!(out, "{HEADER}")?;
    for (i, p) in points.iter().enumerate() {
        writeln!(out, "{},{},{}", i, p.e1_part(), p.e2_part())?;
    }
    out.flush()
}

pub fn read_csv(text: &str) -> Result<Vec<Hyperbolic>> {
    let mut lines = text.lines();
    if lines.next() != Some(HEADER) {
        return Err(HypError::Parse(format!("missing `{HEADER}` header")));
    }
    lines
        .enumerate()
        .map(|(row, line)| {
            let bad = || HypError::Parse(format!("row {row}: {line:?}"));
            let mut fields = line.split(',');
            let index: usize = fields.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if index != row {
                return Err(bad());
            }
            let e1: f64 = fields.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let e2: f64 = fields.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if fields.next().is_some() {
                return Err(bad());
            }
            Hyperbolic::new(e1, e2)
        })
        .collect()
}
