//! Lattice points, digital images and `c_u` adjacency.
//!
//! Two distinct points of `Z^n` are `c_u`-adjacent when at most `u` of their
//! coordinates differ and every differing coordinate differs by exactly one.
//! In the plane `c_1` is 4-adjacency and `c_2` is 8-adjacency.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::distance::ExtendedDistance;
use crate::error::{Error, Result};

/// A point of `Z^n`, `n >= 1`. Ordering is lexicographic on coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(Box<[i64]>);

impl LatticePoint {
    pub fn new(coords: impl Into<Vec<i64>>) -> Result<Self> {
        let coords = coords.into();
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(LatticePoint(coords.into_boxed_slice()))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    fn offset(&self, delta: &[i64]) -> LatticePoint {
        LatticePoint(self.0.iter().zip(delta).map(|(c, d)| c + d).collect())
    }
}

impl From<[i64; 2]> for LatticePoint {
    fn from(c: [i64; 2]) -> Self {
        LatticePoint(Box::new(c))
    }
}

impl From<[i64; 3]> for LatticePoint {
    fn from(c: [i64; 3]) -> Self {
        LatticePoint(Box::new(c))
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        LatticePoint(Box::new([x, y]))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn check_dims(x: &LatticePoint, y: &LatticePoint) -> Result<()> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    Ok(())
}

fn check_u(u: usize, dim: usize) -> Result<()> {
    if u == 0 || u > dim {
        return Err(Error::AdjacencyOutOfRange { u, dim });
    }
    Ok(())
}

/// Whether `x` and `y` are `c_u`-adjacent.
pub fn cu_adjacent(x: &LatticePoint, y: &LatticePoint, u: usize) -> Result<bool> {
    check_dims(x, y)?;
    check_u(u, x.dim())?;
    Ok(adjacent_unchecked(x, y, u))
}

pub(crate) fn adjacent_unchecked(x: &LatticePoint, y: &LatticePoint, u: usize) -> bool {
    let mut differing = 0;
    for (a, b) in x.coords().iter().zip(y.coords()) {
        match a.abs_diff(*b) {
            0 => {}
            1 => differing += 1,
            _ => return false,
        }
    }
    differing >= 1 && differing <= u
}

/// A finite nonempty subset of `Z^n` with `c_u` adjacency.
///
/// Points are stored deduplicated in lexicographic order; index `i` always
/// refers to the `i`-th point of [`DigitalImage::points`]. Adjacency lists
/// are built once at construction and images are immutable afterwards.
#[derive(Debug, Clone)]
pub struct DigitalImage {
    points: Vec<LatticePoint>,
    index: HashMap<LatticePoint, usize>,
    dim: usize,
    u: usize,
    adjacency: Vec<Vec<usize>>,
}

impl DigitalImage {
    pub fn new(points: impl IntoIterator<Item = LatticePoint>, u: usize) -> Result<Self> {
        let mut points: Vec<LatticePoint> = points.into_iter().collect();
        let dim = points.first().ok_or(Error::EmptyImage)?.dim();
        if let Some(bad) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        check_u(u, dim)?;
        points.sort_unstable();
        points.dedup();
        let index = points
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut image = DigitalImage {
            points,
            index,
            dim,
            u,
            adjacency: Vec::new(),
        };
        image.adjacency = image.build_adjacency();
        Ok(image)
    }

    /// Convenience constructor for planar images.
    pub fn from_xy(points: impl IntoIterator<Item = (i64, i64)>, u: usize) -> Result<Self> {
        Self::new(points.into_iter().map(LatticePoint::from), u)
    }

    fn build_adjacency(&self) -> Vec<Vec<usize>> {
        let offsets = neighbor_offsets(self.dim, self.u, self.points.len());
        match offsets {
            Some(offsets) => self
                .points
                .iter()
                .map(|p| {
                    let mut adj: Vec<usize> = offsets
                        .iter()
                        .filter_map(|d| self.index.get(&p.offset(d)).copied())
                        .collect();
                    adj.sort_unstable();
                    adj
                })
                .collect(),
            None => self
                .points
                .iter()
                .map(|p| {
                    (0..self.points.len())
                        .filter(|&j| adjacent_unchecked(p, &self.points[j], self.u))
                        .collect()
                })
                .collect(),
        }
    }

    /// The same point set under a different adjacency parameter.
    pub fn with_adjacency(&self, u: usize) -> Result<Self> {
        Self::new(self.points.iter().cloned(), u)
    }

    /// Builds an image over `points` that uses this image's adjacency.
    pub fn subimage<'a>(&self, points: impl IntoIterator<Item = &'a LatticePoint>) -> Result<Self> {
        Self::new(points.into_iter().cloned(), self.u)
    }

    /// Points in lexicographic order.
    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false; images are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn adjacency_parameter(&self) -> usize {
        self.u
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &LatticePoint) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub(crate) fn require_index(&self, p: &LatticePoint) -> Result<usize> {
        self.index_of(p)
            .ok_or_else(|| Error::PointNotInImage(p.clone()))
    }

    /// Indices of the points adjacent to the point at `i`, ascending.
    pub fn neighbor_indices(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// The points of the image adjacent to `x`, in lexicographic order.
    pub fn neighbors(&self, x: &LatticePoint) -> Result<Vec<LatticePoint>> {
        let i = self.require_index(x)?;
        Ok(self.adjacency[i]
            .iter()
            .map(|&j| self.points[j].clone())
            .collect())
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_from(&[0]).iter().all(Option::is_some)
    }

    /// Shortest-path step counts from `source` to every point of the image.
    pub fn bfs_distances(
        &self,
        source: &LatticePoint,
    ) -> Result<BTreeMap<LatticePoint, ExtendedDistance>> {
        let s = self.require_index(source)?;
        Ok(self
            .bfs_from(&[s])
            .into_iter()
            .zip(&self.points)
            .map(|(d, p)| {
                (
                    p.clone(),
                    d.map_or(ExtendedDistance::Infinity, ExtendedDistance::from),
                )
            })
            .collect())
    }

    /// Multi-source BFS: for every point, the number of steps to the nearest
    /// source, or `None` when no source is reachable.
    pub(crate) fn bfs_from(&self, sources: &[usize]) -> Vec<Option<u64>> {
        let mut dist = vec![None; self.points.len()];
        let mut queue = VecDeque::with_capacity(self.points.len());
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(i) = queue.pop_front() {
            let next = dist[i].map(|d| d + 1);
            for &j in &self.adjacency[i] {
                if dist[j].is_none() {
                    dist[j] = next;
                    queue.push_back(j);
                }
            }
        }
        dist
    }
}

impl PartialEq for DigitalImage {
    fn eq(&self, other: &Self) -> bool {
        self.u == other.u && self.points == other.points
    }
}

impl Eq for DigitalImage {}

/// All offsets in `{-1,0,1}^dim` with between 1 and `u` nonzero entries, or
/// `None` when enumerating them would cost more than a pairwise scan.
fn neighbor_offsets(dim: usize, u: usize, n_points: usize) -> Option<Vec<Vec<i64>>> {
    let total = 3usize.checked_pow(dim as u32)?;
    if total > n_points.saturating_mul(4) {
        return None;
    }
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let delta: Vec<i64> = (0..dim)
            .map(|_| {
                let d = (c % 3) as i64 - 1;
                c /= 3;
                d
            })
            .collect();
        let nonzero = delta.iter().filter(|&&d| d != 0).count();
        if (1..=u).contains(&nonzero) {
            out.push(delta);
        }
    }
    Some(out)
}
