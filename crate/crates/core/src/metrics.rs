//! Point metrics, diameters and the diameter pseudometric.

use crate::distance::{ExtendedDistance, LpExponent, LpKey};
use crate::error::{Error, Result};
use crate::lattice::{check_dims, DigitalImage, LatticePoint};

/// A metric on lattice points.
#[derive(Debug, Clone, Copy)]
pub enum PointMetric<'a> {
    /// The ℓp metric on `Z^n`.
    Lp(LpExponent),
    /// Shortest-path length inside a fixed ambient image.
    Path(&'a DigitalImage),
    /// Shortest-path length inside the measured set itself, under `c_u`.
    Intrinsic { u: usize },
}

impl PointMetric<'_> {
    pub fn lp(p: f64) -> Result<Self> {
        LpExponent::new(p).map(PointMetric::Lp)
    }
}

/// The ℓp distance between two points.
pub fn lp_distance(x: &LatticePoint, y: &LatticePoint, p: f64) -> Result<f64> {
    check_dims(x, y)?;
    let p = LpExponent::new(p)?;
    Ok(p.distance(p.key(x, y)))
}

/// Length of a shortest `c_u`-path from `x` to `y` inside `ambient`.
pub fn path_distance(
    ambient: &DigitalImage,
    x: &LatticePoint,
    y: &LatticePoint,
) -> Result<ExtendedDistance> {
    let i = ambient.require_index(x)?;
    let j = ambient.require_index(y)?;
    if i == j {
        return Ok(ExtendedDistance::ZERO);
    }
    Ok(ambient.bfs_from(&[i])[j].map_or(ExtendedDistance::Infinity, ExtendedDistance::from))
}

pub(crate) fn check_set(set: &[LatticePoint]) -> Result<usize> {
    let dim = set.first().ok_or(Error::EmptySet)?.dim();
    if let Some(bad) = set.iter().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: bad.dim(),
        });
    }
    Ok(dim)
}

/// Indices of `set` inside `ambient`.
pub(crate) fn ambient_indices(ambient: &DigitalImage, set: &[LatticePoint]) -> Result<Vec<usize>> {
    set.iter()
        .map(|p| {
            ambient
                .index_of(p)
                .ok_or_else(|| Error::NotInAmbient(p.clone()))
        })
        .collect()
}

/// `max { d(a, b) | a, b in set }`.
pub fn diameter(set: &[LatticePoint], metric: PointMetric<'_>) -> Result<ExtendedDistance> {
    check_set(set)?;
    match metric {
        PointMetric::Lp(p) => {
            let mut best = LpKey::ZERO;
            for (i, a) in set.iter().enumerate() {
                for b in &set[i + 1..] {
                    best = best.max(p.key(a, b));
                }
            }
            Ok(ExtendedDistance::finite(p.distance(best)))
        }
        PointMetric::Path(ambient) => {
            if ambient.dim() != set[0].dim() {
                return Err(Error::DimensionMismatch {
                    expected: ambient.dim(),
                    found: set[0].dim(),
                });
            }
            path_diameter(ambient, &ambient_indices(ambient, set)?)
        }
        PointMetric::Intrinsic { u } => {
            let own = DigitalImage::new(set.iter().cloned(), u)?;
            let all: Vec<usize> = (0..own.len()).collect();
            path_diameter(&own, &all)
        }
    }
}

fn path_diameter(ambient: &DigitalImage, members: &[usize]) -> Result<ExtendedDistance> {
    let mut best = 0;
    for &a in members {
        let dist = ambient.bfs_from(&[a]);
        for &b in members {
            match dist[b] {
                Some(d) => best = best.max(d),
                None => return Ok(ExtendedDistance::Infinity),
            }
        }
    }
    Ok(ExtendedDistance::from_steps(best))
}

/// `|diam(a) - diam(b)|`. One infinite diameter gives infinity, two give 0.
pub fn diam_diff(
    a: &[LatticePoint],
    b: &[LatticePoint],
    metric: PointMetric<'_>,
) -> Result<ExtendedDistance> {
    let da = diameter(a, metric)?;
    let db = diameter(b, metric)?;
    if let (Some(x), Some(y)) = (a.first(), b.first()) {
        check_dims(x, y)?;
    }
    Ok(da.abs_diff(db))
}
