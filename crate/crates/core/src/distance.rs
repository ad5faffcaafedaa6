//! Distance values shared by every metric in the crate.
//!
//! [`ExtendedDistance`] adds a distinguished infinity so that "no path
//! exists" can flow through sums and differences instead of surfacing as an
//! error. [`LpExponent`] and [`LpKey`] provide exact comparisons for the
//! common integer exponents: for an integer `p` the power sum
//! `Σ |x_i - y_i|^p` is an integer, and it is monotone in the distance itself.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::lattice::LatticePoint;

/// Relative tolerance used when a real-valued distance is compared against a
/// caller-supplied real threshold.
pub const RELATIVE_TOLERANCE: f64 = 1e-9;

/// A nonnegative distance that may be infinite.
///
/// `Finite` always holds a nonnegative, non-NaN value; constructors enforce
/// this and the ordering relies on it.
#[derive(Debug, Clone, Copy)]
pub enum ExtendedDistance {
    Finite(f64),
    Infinity,
}

impl ExtendedDistance {
    pub const ZERO: Self = ExtendedDistance::Finite(0.0);

    /// Panics if `value` is negative or NaN.
    pub fn finite(value: f64) -> Self {
        assert!(value >= 0.0, "distance must be nonnegative, got {value}");
        ExtendedDistance::Finite(value)
    }

    pub fn from_steps(steps: u64) -> Self {
        ExtendedDistance::Finite(steps as f64)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedDistance::Finite(_))
    }

    pub fn value(&self) -> Option<f64> {
        match *self {
            ExtendedDistance::Finite(v) => Some(v),
            ExtendedDistance::Infinity => None,
        }
    }

    /// The value as an integer, when it is finite and integral.
    pub fn as_integer(&self) -> Option<u64> {
        match *self {
            ExtendedDistance::Finite(v) if v.fract() == 0.0 && v <= u64::MAX as f64 => {
                Some(v as u64)
            }
            _ => None,
        }
    }

    /// `|self - other|`, with `|inf - x| = inf` for finite `x` and
    /// `|inf - inf| = 0`.
    pub fn abs_diff(self, other: Self) -> Self {
        match (self, other) {
            (ExtendedDistance::Finite(a), ExtendedDistance::Finite(b)) => {
                ExtendedDistance::Finite((a - b).abs())
            }
            (ExtendedDistance::Infinity, ExtendedDistance::Infinity) => Self::ZERO,
            _ => ExtendedDistance::Infinity,
        }
    }

    /// Multiplies by a positive weight; infinity stays infinite.
    pub fn scale(self, weight: f64) -> Self {
        match self {
            ExtendedDistance::Finite(v) => ExtendedDistance::finite(v * weight),
            ExtendedDistance::Infinity => ExtendedDistance::Infinity,
        }
    }

    /// `self <= other` allowing a relative slack of [`RELATIVE_TOLERANCE`].
    pub fn le_approx(self, other: Self) -> bool {
        match (self, other) {
            (_, ExtendedDistance::Infinity) => true,
            (ExtendedDistance::Infinity, ExtendedDistance::Finite(_)) => false,
            (ExtendedDistance::Finite(a), ExtendedDistance::Finite(b)) => approx_le(a, b),
        }
    }
}

pub(crate) fn approx_le(a: f64, b: f64) -> bool {
    a <= b || a - b <= RELATIVE_TOLERANCE * a.abs().max(b.abs())
}

impl PartialEq for ExtendedDistance {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ExtendedDistance {}

impl PartialOrd for ExtendedDistance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedDistance {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtendedDistance::Finite(a), ExtendedDistance::Finite(b)) => a.total_cmp(b),
            (ExtendedDistance::Finite(_), ExtendedDistance::Infinity) => Ordering::Less,
            (ExtendedDistance::Infinity, ExtendedDistance::Finite(_)) => Ordering::Greater,
            (ExtendedDistance::Infinity, ExtendedDistance::Infinity) => Ordering::Equal,
        }
    }
}

impl Add for ExtendedDistance {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (ExtendedDistance::Finite(a), ExtendedDistance::Finite(b)) => {
                ExtendedDistance::Finite(a + b)
            }
            _ => ExtendedDistance::Infinity,
        }
    }
}

impl From<u64> for ExtendedDistance {
    fn from(steps: u64) -> Self {
        Self::from_steps(steps)
    }
}

/// Integers print exactly, other reals with nine decimals, infinity as `inf`.
impl fmt::Display for ExtendedDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self, self.as_integer()) {
            (_, Some(n)) => write!(f, "{n}"),
            (ExtendedDistance::Finite(v), None) => write!(f, "{v:.9}"),
            (ExtendedDistance::Infinity, _) => f.write_str("inf"),
        }
    }
}

/// Largest integer exponent for which power sums are kept exact.
const MAX_EXACT_EXPONENT: u32 = 16;

/// A validated exponent `p >= 1` of an ℓp metric.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LpExponent {
    p: f64,
    exact: Option<u32>,
}

impl LpExponent {
    pub const MANHATTAN: LpExponent = LpExponent {
        p: 1.0,
        exact: Some(1),
    };
    pub const EUCLIDEAN: LpExponent = LpExponent {
        p: 2.0,
        exact: Some(2),
    };

    pub fn new(p: f64) -> Result<Self> {
        if !p.is_finite() || p < 1.0 {
            return Err(Error::InvalidExponent(p));
        }
        let exact = (p.fract() == 0.0 && p <= MAX_EXACT_EXPONENT as f64).then_some(p as u32);
        Ok(LpExponent { p, exact })
    }

    pub fn get(&self) -> f64 {
        self.p
    }

    /// The comparison key of `d_p(x, y)`. Dimensions are not checked.
    pub(crate) fn key(&self, x: &LatticePoint, y: &LatticePoint) -> LpKey {
        let diffs = x
            .coords()
            .iter()
            .zip(y.coords())
            .map(|(a, b)| a.abs_diff(*b));
        if let Some(e) = self.exact {
            let mut sum: u128 = 0;
            let mut overflow = false;
            for d in diffs.clone() {
                match (d as u128).checked_pow(e).and_then(|t| sum.checked_add(t)) {
                    Some(s) => sum = s,
                    None => {
                        overflow = true;
                        break;
                    }
                }
            }
            if !overflow {
                return LpKey::Exact(sum);
            }
        }
        LpKey::Approx(diffs.map(|d| (d as f64).powf(self.p)).sum())
    }

    /// Converts a comparison key back into the distance it encodes.
    pub(crate) fn distance(&self, key: LpKey) -> f64 {
        match (key, self.exact) {
            (LpKey::Exact(s), Some(1)) => s as f64,
            (LpKey::Exact(s), Some(2)) => (s as f64).sqrt(),
            (LpKey::Exact(s), _) => (s as f64).powf(1.0 / self.p),
            (LpKey::Approx(s), _) => s.powf(1.0 / self.p),
        }
    }
}

/// The power sum `Σ |x_i - y_i|^p`, a monotone stand-in for `d_p`.
///
/// Keys from the same exponent are totally ordered; exact keys compare as
/// integers.
#[derive(Debug, Clone, Copy)]
pub(crate) enum LpKey {
    Exact(u128),
    Approx(f64),
}

impl LpKey {
    pub(crate) const ZERO: LpKey = LpKey::Exact(0);

    fn as_f64(self) -> f64 {
        match self {
            LpKey::Exact(s) => s as f64,
            LpKey::Approx(s) => s,
        }
    }
}

impl PartialEq for LpKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for LpKey {}

impl PartialOrd for LpKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LpKey {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (LpKey::Exact(a), LpKey::Exact(b)) => a.cmp(b),
            _ => self.as_f64().total_cmp(&other.as_f64()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_ordering_and_arithmetic() {
        let inf = ExtendedDistance::Infinity;
        let three = ExtendedDistance::from_steps(3);
        assert!(inf > three);
        assert_eq!(inf, ExtendedDistance::Infinity);
        assert_eq!(inf.abs_diff(inf), ExtendedDistance::ZERO);
        assert_eq!(inf.abs_diff(three), inf);
        assert_eq!(three + inf, inf);
        assert_eq!(inf.scale(2.0), inf);
    }

    #[test]
    fn display_formats() {
        assert_eq!(ExtendedDistance::from_steps(18).to_string(), "18");
        assert_eq!(
            ExtendedDistance::finite(2f64.sqrt()).to_string(),
            "1.414213562"
        );
        assert_eq!(ExtendedDistance::Infinity.to_string(), "inf");
    }

    #[test]
    fn exponent_validation() {
        assert!(LpExponent::new(0.5).is_err());
        assert!(LpExponent::new(f64::NAN).is_err());
        assert!(LpExponent::new(f64::INFINITY).is_err());
        assert_eq!(LpExponent::new(2.0).unwrap(), LpExponent::EUCLIDEAN);
    }

    #[test]
    fn exact_keys_for_integer_exponents() {
        let x = LatticePoint::new(vec![0, 0]).unwrap();
        let y = LatticePoint::new(vec![3, 4]).unwrap();
        let p2 = LpExponent::EUCLIDEAN;
        assert_eq!(p2.key(&x, &y), LpKey::Exact(25));
        assert_eq!(p2.distance(p2.key(&x, &y)), 5.0);
        let p15 = LpExponent::new(1.5).unwrap();
        let d = p15.distance(p15.key(&x, &y));
        assert!((d - (3f64.powf(1.5) + 8.0).powf(1.0 / 1.5)).abs() < 1e-12);
    }
}
