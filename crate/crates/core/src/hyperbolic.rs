//! The hyperbolic number scalar.
//!
//! A hyperbolic number `a + k b` (with `k^2 = 1`) is stored in the idempotent
//! basis `e1 = (1 + k)/2`, `e2 = (1 - k)/2`, where it reads `(a + b) e1 + (a - b) e2`.
//! In that basis ring operations, the partial order, the hyperbolic metric and
//! the logarithm all act coordinatewise, which is why it is the canonical form.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{HypError, Result};

/// A hyperbolic number in idempotent coordinates: `e1 * e1_part + e2 * e2_part`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Hyperbolic {
    e1: f64,
    e2: f64,
}

/// Outcome of comparing two hyperbolic numbers under the componentwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderResult {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl OrderResult {
    /// `Less` or `Equal`, i.e. the left side is `⪯` the right side.
    pub fn is_le(self) -> bool {
        matches!(self, OrderResult::Less | OrderResult::Equal)
    }

    pub fn is_ge(self) -> bool {
        matches!(self, OrderResult::Greater | OrderResult::Equal)
    }
}

fn check_finite(v: f64, what: &str) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(HypError::NonFinite(format!("{what} = {v}")))
    }
}

impl Hyperbolic {
    pub const ZERO: Hyperbolic = Hyperbolic { e1: 0.0, e2: 0.0 };
    /// The embedded real `1~ = e1 + e2`.
    pub const ONE: Hyperbolic = Hyperbolic { e1: 1.0, e2: 1.0 };
    pub const E1: Hyperbolic = Hyperbolic { e1: 1.0, e2: 0.0 };
    pub const E2: Hyperbolic = Hyperbolic { e1: 0.0, e2: 1.0 };
    /// The hyperbolic unit `k = e1 - e2`.
    pub const K: Hyperbolic = Hyperbolic { e1: 1.0, e2: -1.0 };

    /// Builds a number from its idempotent parts, rejecting NaN and infinities.
    pub fn new(e1: f64, e2: f64) -> Result<Self> {
        Ok(Hyperbolic {
            e1: check_finite(e1, "e1 part")?,
            e2: check_finite(e2, "e2 part")?,
        })
    }

    /// Const constructor for literals known to be finite.
    pub const fn from_parts(e1: f64, e2: f64) -> Self {
        Hyperbolic { e1, e2 }
    }

    /// Embeds a real: `x ↦ x e1 + x e2`.
    pub fn embed_real(x: f64) -> Result<Self> {
        let x = check_finite(x, "real")?;
        Ok(Hyperbolic { e1: x, e2: x })
    }

    /// Builds `a + k b` from standard coordinates.
    pub fn from_standard(a: f64, b: f64) -> Result<Self> {
        check_finite(a, "a")?;
        check_finite(b, "b")?;
        Hyperbolic::new(a + b, a - b)
    }

    #[inline]
    pub fn e1_part(&self) -> f64 {
        self.e1
    }

    #[inline]
    pub fn e2_part(&self) -> f64 {
        self.e2
    }

    /// Standard coordinates `(a, b)` of `a + k b`.
    pub fn to_standard(&self) -> (f64, f64) {
        ((self.e1 + self.e2) / 2.0, (self.e1 - self.e2) / 2.0)
    }

    /// The e1 projection `x1 e1`.
    pub fn project_e1(&self) -> Self {
        Hyperbolic {
            e1: self.e1,
            e2: 0.0,
        }
    }

    pub fn project_e2(&self) -> Self {
        Hyperbolic {
            e1: 0.0,
            e2: self.e2,
        }
    }

    /// Applies `f` to both idempotent parts.
    pub fn map(self, f: impl Fn(f64) -> f64) -> Self {
        Hyperbolic {
            e1: f(self.e1),
            e2: f(self.e2),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.e1.is_finite() && self.e2.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.e1 == 0.0 && self.e2 == 0.0
    }

    /// Membership in `𝔊 = ℝe1 ∪ ℝe2` minus zero: exactly one part vanishes.
    pub fn is_zero_divisor(&self) -> bool {
        (self.e1 == 0.0) != (self.e2 == 0.0)
    }

    pub fn is_invertible(&self) -> bool {
        self.e1 != 0.0 && self.e2 != 0.0
    }

    fn finite_or_err(self, op: &str) -> Result<Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(HypError::NonFinite(format!("{op} produced {self}")))
        }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        (self + rhs).finite_or_err("addition")
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        (self - rhs).finite_or_err("subtraction")
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        (self * rhs).finite_or_err("multiplication")
    }

    /// Componentwise quotient. Fails on zero and on zero divisors.
    pub fn try_div(self, rhs: Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(HypError::DivisionByZero);
        }
        if rhs.is_zero_divisor() {
            return Err(HypError::ZeroDivisorDivision(rhs.to_string()));
        }
        Hyperbolic {
            e1: self.e1 / rhs.e1,
            e2: self.e2 / rhs.e2,
        }
        .finite_or_err("division")
    }

    /// Compares under `α ⪯ β ⇔ a1 <= b1 and a2 <= b2`. Exact, no epsilon.
    pub fn order(&self, other: &Self) -> OrderResult {
        let c1 = self.e1.partial_cmp(&other.e1);
        let c2 = self.e2.partial_cmp(&other.e2);
        match (c1, c2) {
            (Some(a), Some(b)) => match (a, b) {
                (Ordering::Equal, Ordering::Equal) => OrderResult::Equal,
                (Ordering::Greater, Ordering::Less) | (Ordering::Less, Ordering::Greater) => {
                    OrderResult::Incomparable
                }
                (Ordering::Less, _) | (_, Ordering::Less) => OrderResult::Less,
                _ => OrderResult::Greater,
            },
            _ => OrderResult::Incomparable,
        }
    }

    /// `self ⪯ other`.
    pub fn le(&self, other: &Self) -> bool {
        self.order(other).is_le()
    }

    /// Membership in the hyperbolic interval `[lo, hi]_k`.
    pub fn in_interval(&self, lo: &Self, hi: &Self) -> Result<bool> {
        Ok(Interval::new(*lo, *hi)?.contains(self))
    }

    /// Hyperbolic metric `D_k(x, y) = |x1 - y1| e1 + |x2 - y2| e2`.
    pub fn distance(&self, other: &Self) -> Self {
        Hyperbolic {
            e1: (self.e1 - other.e1).abs(),
            e2: (self.e2 - other.e2).abs(),
        }
    }

    /// Hyperbolic logarithm `Log_𝔻`, the natural log of each idempotent part.
    pub fn ln(&self) -> Result<Self> {
        if self.e1 > 0.0 && self.e2 > 0.0 {
            Ok(Hyperbolic {
                e1: self.e1.ln(),
                e2: self.e2.ln(),
            })
        } else {
            Err(HypError::Domain(self.to_string()))
        }
    }

    /// Componentwise maximum (the least upper bound under `⪯`).
    pub fn sup(&self, other: &Self) -> Self {
        Hyperbolic {
            e1: self.e1.max(other.e1),
            e2: self.e2.max(other.e2),
        }
    }

    pub fn inf(&self, other: &Self) -> Self {
        Hyperbolic {
            e1: self.e1.min(other.e1),
            e2: self.e2.min(other.e2),
        }
    }
}

impl PartialOrd for Hyperbolic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.order(other) {
            OrderResult::Less => Some(Ordering::Less),
            OrderResult::Equal => Some(Ordering::Equal),
            OrderResult::Greater => Some(Ordering::Greater),
            OrderResult::Incomparable => None,
        }
    }
}

impl Add for Hyperbolic {
    type Output = Hyperbolic;
    fn add(self, rhs: Self) -> Self {
        Hyperbolic {
            e1: self.e1 + rhs.e1,
            e2: self.e2 + rhs.e2,
        }
    }
}

impl Sub for Hyperbolic {
    type Output = Hyperbolic;
    fn sub(self, rhs: Self) -> Self {
        Hyperbolic {
            e1: self.e1 - rhs.e1,
            e2: self.e2 - rhs.e2,
        }
    }
}

impl Mul for Hyperbolic {
    type Output = Hyperbolic;
    fn mul(self, rhs: Self) -> Self {
        Hyperbolic {
            e1: self.e1 * rhs.e1,
            e2: self.e2 * rhs.e2,
        }
    }
}

impl Mul<f64> for Hyperbolic {
    type Output = Hyperbolic;
    fn mul(self, rhs: f64) -> Self {
        Hyperbolic {
            e1: self.e1 * rhs,
            e2: self.e2 * rhs,
        }
    }
}

impl Neg for Hyperbolic {
    type Output = Hyperbolic;
    fn neg(self) -> Self {
        Hyperbolic {
            e1: -self.e1,
            e2: -self.e2,
        }
    }
}

impl std::iter::Sum for Hyperbolic {
    fn sum<I: Iterator<Item = Hyperbolic>>(iter: I) -> Self {
        iter.fold(Hyperbolic::ZERO, |acc, x| acc + x)
    }
}

/// Rendered as `E1 <decimal> E2 <decimal>` with shortest round-trip decimals.
impl fmt::Display for Hyperbolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E1 {} E2 {}", self.e1, self.e2)
    }
}

impl FromStr for Hyperbolic {
    type Err = HypError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || HypError::Parse(format!("expected `E1 <x> E2 <y>`, got {s:?}"));
        let mut tokens = s.split_whitespace();
        if tokens.next() != Some("E1") {
            return Err(bad());
        }
        let e1: f64 = tokens.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        if tokens.next() != Some("E2") {
            return Err(bad());
        }
        let e2: f64 = tokens.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        if tokens.next().is_some() {
            return Err(bad());
        }
        Hyperbolic::new(e1, e2)
    }
}

/// A hyperbolic interval `[lo, hi]_k = {ξ : lo ⪯ ξ ⪯ hi}`, a box in idempotent coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: Hyperbolic,
    hi: Hyperbolic,
}

impl Interval {
    /// The unit interval `[0, 1~]_k`.
    pub const UNIT: Interval = Interval {
        lo: Hyperbolic::ZERO,
        hi: Hyperbolic::ONE,
    };

    pub fn new(lo: Hyperbolic, hi: Hyperbolic) -> Result<Self> {
        if lo.le(&hi) {
            Ok(Interval { lo, hi })
        } else {
            Err(HypError::EmptyInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            })
        }
    }

    pub fn lo(&self) -> Hyperbolic {
        self.lo
    }

    pub fn hi(&self) -> Hyperbolic {
        self.hi
    }

    pub fn contains(&self, x: &Hyperbolic) -> bool {
        self.lo.le(x) && x.le(&self.hi)
    }
}
