//! Random image generators and brute-force oracles shared by the
//! integration suites. Nothing here calls the search or BFS code it checks.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use digimetric::{cu_adjacent, DigitalImage, LatticePoint, PointMap};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn pt(x: i64, y: i64) -> LatticePoint {
    LatticePoint::from((x, y))
}

pub fn square(lo: i64, hi: i64) -> Vec<LatticePoint> {
    (lo..=hi)
        .flat_map(|x| (lo..=hi).map(move |y| pt(x, y)))
        .collect()
}

/// A nonempty random subset of `[lo, hi]^2` with at most `max` points.
pub fn random_subset(rng: &mut impl Rng, lo: i64, hi: i64, max: usize) -> Vec<LatticePoint> {
    let size = rng.gen_range(1..=max);
    let mut set: BTreeSet<LatticePoint> = BTreeSet::new();
    while set.len() < size {
        set.insert(pt(rng.gen_range(lo..=hi), rng.gen_range(lo..=hi)));
    }
    set.into_iter().collect()
}

/// Grows a `c_u`-connected set inside `allowed`, starting from a random
/// member, until it reaches a size drawn from `sizes` or cannot grow.
pub fn random_connected_in(
    rng: &mut impl Rng,
    allowed: &[LatticePoint],
    u: usize,
    sizes: RangeInclusive<usize>,
) -> Vec<LatticePoint> {
    let size = rng.gen_range(sizes);
    let mut chosen = vec![allowed.choose(rng).expect("nonempty").clone()];
    while chosen.len() < size {
        let frontier: Vec<&LatticePoint> = allowed
            .iter()
            .filter(|p| !chosen.contains(p))
            .filter(|p| chosen.iter().any(|q| cu_adjacent(p, q, u).unwrap()))
            .collect();
        match frontier.choose(rng) {
            Some(p) => chosen.push((*p).clone()),
            None => break,
        }
    }
    chosen.sort();
    chosen
}

pub fn image(points: &[LatticePoint], u: usize) -> DigitalImage {
    DigitalImage::new(points.iter().cloned(), u).unwrap()
}

/// Shortest path lengths from `source` by enumerating every simple path.
pub fn path_enumeration(points: &[LatticePoint], u: usize, source: usize) -> Vec<Option<u64>> {
    fn walk(
        points: &[LatticePoint],
        u: usize,
        at: usize,
        len: u64,
        visited: &mut Vec<bool>,
        best: &mut Vec<Option<u64>>,
    ) {
        if best[at].is_none_or(|b| len < b) {
            best[at] = Some(len);
        }
        for next in 0..points.len() {
            if !visited[next] && cu_adjacent(&points[at], &points[next], u).unwrap() {
                visited[next] = true;
                walk(points, u, next, len + 1, visited, best);
                visited[next] = false;
            }
        }
    }
    let mut best = vec![None; points.len()];
    let mut visited = vec![false; points.len()];
    visited[source] = true;
    walk(points, u, source, 0, &mut visited, &mut best);
    best
}

pub fn l1(a: &LatticePoint, b: &LatticePoint) -> u64 {
    a.coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| x.abs_diff(*y))
        .sum()
}

/// Least `ε` among realized ℓ1 distances such that for every pair `(a, b)`
/// there are `a'`, `b'` with `ε >= d(a, b')` and `ε >= d(a', b)`.
pub fn literal_hausdorff_l1(a: &[LatticePoint], b: &[LatticePoint]) -> u64 {
    let mut candidates: Vec<u64> = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| l1(x, y)))
        .collect();
    candidates.push(0);
    candidates.sort_unstable();
    candidates.dedup();
    let holds = |eps: u64| {
        a.iter().all(|x| {
            b.iter()
                .all(|y| b.iter().any(|y2| l1(x, y2) <= eps) && a.iter().any(|x2| l1(x2, y) <= eps))
        })
    };
    candidates
        .into_iter()
        .find(|&e| holds(e))
        .expect("largest distance always works")
}

/// Whether some continuous map `x -> y` moves no point more than `t` in ℓ1,
/// by enumerating all `|y|^|x|` maps.
pub fn exists_map_by_enumeration(x: &DigitalImage, y: &DigitalImage, t: u64) -> bool {
    let (xs, ys) = (x.points(), y.points());
    let u = x.adjacency_parameter();
    let total = ys.len().pow(xs.len() as u32);
    (0..total).any(|mut code| {
        let f: Vec<usize> = (0..xs.len())
            .map(|_| {
                let v = code % ys.len();
                code /= ys.len();
                v
            })
            .collect();
        let close = (0..xs.len()).all(|i| l1(&xs[i], &ys[f[i]]) <= t);
        let continuous = (0..xs.len()).all(|i| {
            (0..xs.len()).all(|j| {
                !cu_adjacent(&xs[i], &xs[j], u).unwrap()
                    || f[i] == f[j]
                    || cu_adjacent(&ys[f[i]], &ys[f[j]], u).unwrap()
            })
        });
        close && continuous
    })
}

/// Plain chronological backtracking with no propagation.
pub fn exists_map_by_backtracking(x: &DigitalImage, y: &DigitalImage, t: u64) -> bool {
    fn go(x: &DigitalImage, y: &DigitalImage, t: u64, f: &mut Vec<usize>) -> bool {
        let i = f.len();
        if i == x.len() {
            return true;
        }
        let u = x.adjacency_parameter();
        for w in 0..y.len() {
            if l1(&x.points()[i], &y.points()[w]) > t {
                continue;
            }
            let ok = (0..i).all(|j| {
                !cu_adjacent(&x.points()[i], &x.points()[j], u).unwrap()
                    || f[j] == w
                    || cu_adjacent(&y.points()[w], &y.points()[f[j]], u).unwrap()
            });
            if ok {
                f.push(w);
                if go(x, y, t, f) {
                    return true;
                }
                f.pop();
            }
        }
        false
    }
    go(x, y, t, &mut Vec::new())
}

/// Checks continuity of a map from its pairs alone.
pub fn map_is_continuous(f: &PointMap<'_>) -> bool {
    let u = f.source().adjacency_parameter();
    let pairs: Vec<_> = f.iter().collect();
    pairs.iter().all(|(a, fa)| {
        pairs.iter().all(|(b, fb)| {
            !cu_adjacent(a, b, u).unwrap() || fa == fb || cu_adjacent(fa, fb, u).unwrap()
        })
    })
}
