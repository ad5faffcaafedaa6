//! Hausdorff distances between finite point sets.
//!
//! Both variants use the directed max-min form
//! `h(A, B) = max_{a in A} min_{b in B} d(a, b)` and report
//! `max(h(A, B), h(B, A))`. On finite sets this is the least `ε` for which
//! every point of either set has a point of the other within `ε`.

use crate::distance::{ExtendedDistance, LpExponent, LpKey};
use crate::error::{Error, Result};
use crate::lattice::{DigitalImage, LatticePoint};
use crate::metrics::{ambient_indices, check_set};

#[derive(Debug, Clone, PartialEq)]
pub struct HausdorffResult {
    pub value: ExtendedDistance,
    /// `h(A, B)`.
    pub directed_ab: ExtendedDistance,
    /// `h(B, A)`.
    pub directed_ba: ExtendedDistance,
    /// The lexicographically least point of `A` farthest from `B`.
    pub witness_a: LatticePoint,
    /// The lexicographically least point of `B` farthest from `A`.
    pub witness_b: LatticePoint,
}

impl HausdorffResult {
    fn new(
        forward: (ExtendedDistance, LatticePoint),
        backward: (ExtendedDistance, LatticePoint),
    ) -> Self {
        HausdorffResult {
            value: forward.0.max(backward.0),
            directed_ab: forward.0,
            directed_ba: backward.0,
            witness_a: forward.1,
            witness_b: backward.1,
        }
    }
}

fn sorted(set: &[LatticePoint]) -> Vec<&LatticePoint> {
    let mut v: Vec<&LatticePoint> = set.iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn check_pair(a: &[LatticePoint], b: &[LatticePoint]) -> Result<()> {
    let da = check_set(a)?;
    let db = check_set(b)?;
    if da != db {
        return Err(Error::DimensionMismatch {
            expected: da,
            found: db,
        });
    }
    Ok(())
}

/// The Hausdorff metric over the ℓp metric.
pub fn hausdorff_lp(a: &[LatticePoint], b: &[LatticePoint], p: f64) -> Result<HausdorffResult> {
    check_pair(a, b)?;
    let p = LpExponent::new(p)?;
    let a = sorted(a);
    let b = sorted(b);
    Ok(HausdorffResult::new(
        directed_lp(&a, &b, p),
        directed_lp(&b, &a, p),
    ))
}

fn directed_lp(
    from: &[&LatticePoint],
    to: &[&LatticePoint],
    p: LpExponent,
) -> (ExtendedDistance, LatticePoint) {
    let mut best: Option<(LpKey, &LatticePoint)> = None;
    for &x in from {
        let nearest = to.iter().map(|y| p.key(x, y)).min().expect("nonempty set");
        if best.is_none_or(|(k, _)| nearest > k) {
            best = Some((nearest, x));
        }
    }
    let (key, witness) = best.expect("nonempty set");
    (ExtendedDistance::finite(p.distance(key)), witness.clone())
}

/// Least `ε` such that every point of `a` reaches some point of `b`, and
/// every point of `b` reaches some point of `a`, by a path of length at most
/// `ε` inside `ambient`. Infinite when some point cannot reach the other set.
pub fn hausdorff_path(
    ambient: &DigitalImage,
    a: &[LatticePoint],
    b: &[LatticePoint],
) -> Result<HausdorffResult> {
    check_pair(a, b)?;
    if ambient.dim() != a[0].dim() {
        return Err(Error::DimensionMismatch {
            expected: ambient.dim(),
            found: a[0].dim(),
        });
    }
    let ia = ambient_indices(ambient, a)?;
    let ib = ambient_indices(ambient, b)?;
    Ok(HausdorffResult::new(
        directed_path(ambient, &ia, &ib),
        directed_path(ambient, &ib, &ia),
    ))
}

fn directed_path(
    ambient: &DigitalImage,
    from: &[usize],
    to: &[usize],
) -> (ExtendedDistance, LatticePoint) {
    let to_target = ambient.bfs_from(to);
    let mut from = from.to_vec();
    // Indices follow the lexicographic order of points.
    from.sort_unstable();
    from.dedup();
    let mut best: Option<(ExtendedDistance, usize)> = None;
    for i in from {
        let d = to_target[i].map_or(ExtendedDistance::Infinity, ExtendedDistance::from);
        if best.is_none_or(|(k, _)| d > k) {
            best = Some((d, i));
        }
    }
    let (d, i) = best.expect("nonempty set");
    (d, ambient.points()[i].clone())
}
