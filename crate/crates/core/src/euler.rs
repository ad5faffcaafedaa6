//! Euler characteristic of the clique complex of a digital image.
//!
//! Every set of `k + 1` mutually adjacent points is a `k`-simplex; the Euler
//! characteristic is the alternating sum of simplex counts by dimension.

use crate::lattice::DigitalImage;

/// Number of cliques of each size: entry `k` counts the `(k + 1)`-point
/// cliques. The empty clique is not counted.
pub fn clique_counts(image: &DigitalImage) -> Vec<u64> {
    let mut counts = Vec::new();
    // Each clique is enumerated exactly once, from its smallest index upward.
    let mut stack: Vec<(usize, Vec<usize>)> = Vec::new();
    for v in 0..image.len() {
        let later: Vec<usize> = image
            .neighbor_indices(v)
            .iter()
            .copied()
            .filter(|&w| w > v)
            .collect();
        stack.push((1, later));
        while let Some((size, candidates)) = stack.pop() {
            if counts.len() < size {
                counts.resize(size, 0);
            }
            counts[size - 1] += 1;
            for (i, &w) in candidates.iter().enumerate() {
                let adj = image.neighbor_indices(w);
                let next: Vec<usize> = candidates[i + 1..]
                    .iter()
                    .copied()
                    .filter(|c| adj.binary_search(c).is_ok())
                    .collect();
                stack.push((size + 1, next));
            }
        }
    }
    counts
}

pub fn euler_characteristic(image: &DigitalImage) -> i64 {
    clique_counts(image)
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

/// `|χ(a) - χ(b)|`.
pub fn euler_diff(a: &DigitalImage, b: &DigitalImage) -> u64 {
    euler_characteristic(a).abs_diff(euler_characteristic(b))
}
