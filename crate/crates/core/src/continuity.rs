//! Digital continuity and the metric of continuity.
//!
//! A map between digital images is continuous when adjacent points go to
//! equal or adjacent points. The metric of continuity of `X` and `Y` is the
//! least `t` such that continuous `f: X -> Y` and `g: Y -> X` exist with every
//! point moved at most `t`. The constraints on `f` and `g` share nothing, so
//! the value is the larger of two one-sided optima, each found by searching
//! candidate thresholds drawn from the finite set of realized distances.
//!
//! Feasibility at a threshold is a list-homomorphism problem: `x` may only go
//! to `L(x) = { y : d(x, y) <= t }` and adjacent points must land on equal or
//! adjacent points. It is solved by backtracking with arc consistency
//! maintained after every assignment.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::distance::{approx_le, LpExponent, LpKey};
use crate::error::{Error, Result};
use crate::lattice::{DigitalImage, LatticePoint};

/// Node-expansion budget used when callers do not supply one.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// A total map from the points of one image to the points of another.
#[derive(Debug, Clone, PartialEq)]
pub struct PointMap<'a> {
    source: &'a DigitalImage,
    target: &'a DigitalImage,
    /// `values[i]` is the target index of source point `i`.
    values: Vec<usize>,
}

impl<'a> PointMap<'a> {
    pub fn new(
        source: &'a DigitalImage,
        target: &'a DigitalImage,
        assignment: impl IntoIterator<Item = (LatticePoint, LatticePoint)>,
    ) -> Result<Self> {
        let mut values = vec![None; source.len()];
        for (from, to) in assignment {
            let i = source.require_index(&from)?;
            let j = target
                .index_of(&to)
                .ok_or_else(|| Error::ValueOutsideTarget {
                    from: from.clone(),
                    to: to.clone(),
                })?;
            values[i] = Some(j);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::UndefinedAt(source.points()[i].clone())))
            .collect::<Result<_>>()?;
        Ok(PointMap {
            source,
            target,
            values,
        })
    }

    pub fn identity(image: &'a DigitalImage) -> Self {
        PointMap {
            source: image,
            target: image,
            values: (0..image.len()).collect(),
        }
    }

    pub fn constant(
        source: &'a DigitalImage,
        target: &'a DigitalImage,
        value: &LatticePoint,
    ) -> Result<Self> {
        let j = target.require_index(value)?;
        Ok(PointMap {
            source,
            target,
            values: vec![j; source.len()],
        })
    }

    pub fn source(&self) -> &'a DigitalImage {
        self.source
    }

    pub fn target(&self) -> &'a DigitalImage {
        self.target
    }

    pub fn apply(&self, x: &LatticePoint) -> Option<&'a LatticePoint> {
        let i = self.source.index_of(x)?;
        Some(&self.target.points()[self.values[i]])
    }

    /// `(x, f(x))` pairs in the source's lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&'a LatticePoint, &'a LatticePoint)> + '_ {
        let (s, t) = (self.source.points(), self.target.points());
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &j)| (&s[i], &t[j]))
    }

    /// `max_x d_p(x, f(x))`.
    pub fn max_displacement(&self, p: LpExponent) -> f64 {
        let key = self
            .iter()
            .map(|(x, y)| p.key(x, y))
            .max()
            .unwrap_or(LpKey::ZERO);
        p.distance(key)
    }
}

/// Whether `f` sends adjacent points to equal or adjacent points.
pub fn is_continuous(f: &PointMap<'_>) -> bool {
    (0..f.source.len()).all(|i| {
        f.source.neighbor_indices(i).iter().all(|&k| {
            let (a, b) = (f.values[i], f.values[k]);
            a == b || f.target.neighbor_indices(a).binary_search(&b).is_ok()
        })
    })
}

/// Result of a one-sided optimization.
#[derive(Debug, Clone, PartialEq)]
pub struct Displacement<'a> {
    pub value: f64,
    pub witness: PointMap<'a>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContinuityMetricResult<'a> {
    pub value: f64,
    pub forward_displacement: f64,
    pub backward_displacement: f64,
    /// Continuous `X -> Y` achieving the forward displacement.
    pub forward_witness: PointMap<'a>,
    /// Continuous `Y -> X` achieving the backward displacement.
    pub backward_witness: PointMap<'a>,
}

fn check_compatible(x: &DigitalImage, y: &DigitalImage) -> Result<()> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    if x.adjacency_parameter() != y.adjacency_parameter() {
        return Err(Error::AdjacencyMismatch {
            source_u: x.adjacency_parameter(),
            target_u: y.adjacency_parameter(),
        });
    }
    Ok(())
}

/// Searches for a continuous `f: x -> y` with `d_p(v, f(v)) <= t` for every
/// `v`, up to a relative tolerance of 1e-9 on the comparison.
///
/// Returns `Ok(None)` when no such map exists and
/// [`Error::BudgetExceeded`] when the search gives up.
pub fn feasible_at_threshold<'a>(
    x: &'a DigitalImage,
    y: &'a DigitalImage,
    t: f64,
    p: f64,
    budget: u64,
) -> Result<Option<PointMap<'a>>> {
    check_compatible(x, y)?;
    let p = LpExponent::new(p)?;
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::InvalidThreshold(t));
    }
    let mut search = Search::new(x, y, budget);
    search.run(|a, b| approx_le(p.distance(p.key(a, b)), t))
}

/// The least `max_v d_p(v, f(v))` over continuous `f: x -> y`, with a map
/// attaining it.
pub fn one_sided_displacement<'a>(
    x: &'a DigitalImage,
    y: &'a DigitalImage,
    p: f64,
    budget: u64,
) -> Result<Displacement<'a>> {
    check_compatible(x, y)?;
    let p = LpExponent::new(p)?;
    let keys = candidate_keys(x, y, p);
    let (mut lo, mut hi) = search_bounds(x, y, p, &keys);
    let mut search = Search::new(x, y, budget);
    // Invariant: keys[hi] is feasible, everything below keys[lo] is not.
    let mut best = None;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match search.run(|a, b| p.key(a, b) <= keys[mid])? {
            Some(map) => {
                hi = mid;
                best = Some(map);
            }
            None => lo = mid + 1,
        }
    }
    let witness = match best {
        Some(map) => map,
        None => search
            .run(|a, b| p.key(a, b) <= keys[hi])?
            .expect("upper bound is feasible"),
    };
    Ok(Displacement {
        value: p.distance(keys[hi]),
        witness,
    })
}

/// The metric of continuity under `d_p`.
pub fn continuity_metric<'a>(
    x: &'a DigitalImage,
    y: &'a DigitalImage,
    p: f64,
    budget: u64,
) -> Result<ContinuityMetricResult<'a>> {
    let forward = one_sided_displacement(x, y, p, budget)?;
    let backward = one_sided_displacement(y, x, p, budget)?;
    Ok(ContinuityMetricResult {
        value: forward.value.max(backward.value),
        forward_displacement: forward.value,
        backward_displacement: backward.value,
        forward_witness: forward.witness,
        backward_witness: backward.witness,
    })
}

/// Distinct realized distances `d(v, w)`, `v in x`, `w in y`, ascending.
pub(crate) fn candidate_keys(x: &DigitalImage, y: &DigitalImage, p: LpExponent) -> Vec<LpKey> {
    let mut keys: Vec<LpKey> = x
        .points()
        .iter()
        .flat_map(|a| y.points().iter().map(move |b| p.key(a, b)))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys
}

/// Index bounds for the optimum: no map beats the directed Hausdorff
/// distance, and the best constant map is always feasible.
fn search_bounds(
    x: &DigitalImage,
    y: &DigitalImage,
    p: LpExponent,
    keys: &[LpKey],
) -> (usize, usize) {
    let lower = x
        .points()
        .iter()
        .map(|a| {
            y.points()
                .iter()
                .map(|b| p.key(a, b))
                .min()
                .expect("nonempty")
        })
        .max()
        .expect("nonempty");
    let upper = y
        .points()
        .iter()
        .map(|b| {
            x.points()
                .iter()
                .map(|a| p.key(a, b))
                .max()
                .expect("nonempty")
        })
        .min()
        .expect("nonempty");
    let pos = |k: LpKey| keys.binary_search(&k).expect("key is realized");
    (pos(lower), pos(upper))
}

struct Search<'a> {
    x: &'a DigitalImage,
    y: &'a DigitalImage,
    /// Closed neighbourhoods in `y`: `{w} ∪ adj(w)`.
    closed: Vec<FixedBitSet>,
    /// Assignment order: BFS over each component from its least point.
    order: Vec<usize>,
    budget: u64,
    expanded: u64,
}

impl<'a> Search<'a> {
    fn new(x: &'a DigitalImage, y: &'a DigitalImage, budget: u64) -> Self {
        let closed = (0..y.len())
            .map(|w| {
                let mut set = FixedBitSet::with_capacity(y.len());
                set.insert(w);
                set.extend(y.neighbor_indices(w).iter().copied());
                set
            })
            .collect();
        Search {
            x,
            y,
            closed,
            order: bfs_order(x),
            budget,
            expanded: 0,
        }
    }

    fn run(
        &mut self,
        allowed: impl Fn(&LatticePoint, &LatticePoint) -> bool,
    ) -> Result<Option<PointMap<'a>>> {
        let mut domains: Vec<FixedBitSet> = self
            .x
            .points()
            .iter()
            .map(|a| {
                let mut d = FixedBitSet::with_capacity(self.y.len());
                d.extend((0..self.y.len()).filter(|&w| allowed(a, &self.y.points()[w])));
                d
            })
            .collect();
        let all_arcs: VecDeque<(usize, usize)> = (0..self.x.len())
            .flat_map(|i| self.x.neighbor_indices(i).iter().map(move |&k| (i, k)))
            .collect();
        if !self.propagate(&mut domains, all_arcs) {
            return Ok(None);
        }
        Ok(self.extend(0, domains)?.map(|values| PointMap {
            source: self.x,
            target: self.y,
            values,
        }))
    }

    fn extend(&mut self, depth: usize, domains: Vec<FixedBitSet>) -> Result<Option<Vec<usize>>> {
        let Some(&v) = self.order.get(depth) else {
            let values = domains
                .iter()
                .map(|d| d.ones().next().expect("nonempty domain"))
                .collect();
            return Ok(Some(values));
        };
        for w in domains[v].ones() {
            self.expanded += 1;
            if self.expanded > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let mut next = domains.clone();
            next[v].clear();
            next[v].insert(w);
            let arcs = self.x.neighbor_indices(v).iter().map(|&k| (k, v)).collect();
            if self.propagate(&mut next, arcs) {
                if let Some(found) = self.extend(depth + 1, next)? {
                    return Ok(Some(found));
                }
            }
        }
        Ok(None)
    }

    /// AC-3 over the edges of `x`. Returns false on a domain wipeout.
    fn propagate(&self, domains: &mut [FixedBitSet], mut queue: VecDeque<(usize, usize)>) -> bool {
        while let Some((i, k)) = queue.pop_front() {
            if self.revise(domains, i, k) {
                if domains[i].is_clear() {
                    return false;
                }
                queue.extend(
                    self.x
                        .neighbor_indices(i)
                        .iter()
                        .filter(|&&j| j != k)
                        .map(|&j| (j, i)),
                );
            }
        }
        true
    }

    /// Drops values of `i` that no value of `k` supports.
    fn revise(&self, domains: &mut [FixedBitSet], i: usize, k: usize) -> bool {
        let unsupported: Vec<usize> = domains[i]
            .ones()
            .filter(|&w| domains[k].is_disjoint(&self.closed[w]))
            .collect();
        for &w in &unsupported {
            domains[i].remove(w);
        }
        !unsupported.is_empty()
    }
}

fn bfs_order(x: &DigitalImage) -> Vec<usize> {
    let mut seen = vec![false; x.len()];
    let mut order = Vec::with_capacity(x.len());
    for root in 0..x.len() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            order.push(i);
            for &k in x.neighbor_indices(i) {
                if !seen[k] {
                    seen[k] = true;
                    queue.push_back(k);
                }
            }
        }
    }
    order
}
