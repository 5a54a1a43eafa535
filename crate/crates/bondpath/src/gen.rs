//! Seeded instance generators and exhaustive small-graph corpora.
//!
//! The random stream is ChaCha8 keyed from a 64-bit seed; per-instance seeds
//! are derived with a splitmix step so that parallel scheduling can never
//! change instance content. Both facts are part of the report contract:
//! identical `(generator, n, k, seed)` means an identical graph everywhere.

use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Labeled-enumeration cap for [`exhaustive_connected_graphs`].
pub const EXHAUSTIVE_CAP: usize = 7;

/// splitmix64 step, used to derive independent per-index seeds.
pub fn split_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9e3779b97f4a7c15);
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random k-connected graph: start from the complete graph on `k+1` vertices,
/// attach each further vertex to `k` distinct existing vertices chosen by the
/// seeded stream, then sprinkle extra edges with probability 0.05 each.
/// Attaching a vertex to `k` vertices of a k-connected graph preserves
/// k-connectivity, so the construction cannot fail; the result is still
/// re-verified, with a derived-seed retry on the impossible branch.
pub fn gen_k_connected(n: usize, k: usize, seed: u64) -> Result<Graph> {
    gen_k_connected_with_extra(n, k, seed, 0.05)
}

pub fn gen_k_connected_with_extra(n: usize, k: usize, seed: u64, extra: f64) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if n <= k {
        return Err(Error::Precondition(format!(
            "a {k}-connected graph needs more than {k} vertices, got {n}"
        )));
    }
    let mut seed = seed;
    loop {
        let mut r = rng(seed);
        let mut edges = Vec::new();
        for u in 0..=k {
            for v in u + 1..=k {
                edges.push((u, v));
            }
        }
        for v in k + 1..n {
            let mut existing: Vec<usize> = (0..v).collect();
            existing.shuffle(&mut r);
            for &u in existing.iter().take(k) {
                edges.push((u, v));
            }
        }
        let mut g = Graph::new(n, &edges)?;
        if extra > 0.0 {
            let mut all = edges;
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) && r.random_bool(extra) {
                        all.push((u, v));
                    }
                }
            }
            g = Graph::new(n, &all)?;
        }
        if is_k_connected(&g, k) {
            return Ok(g);
        }
        seed = split_seed(seed, 0xdead);
    }
}

/// Random connected graph: edge probability drawn from [0.25, 0.55], resampled
/// until connected.
pub fn gen_connected(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Precondition("need at least one vertex".into()));
    }
    let mut r = rng(seed);
    loop {
        let p = r.random_range(0.25..0.55);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if r.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
}

/// Uniform random labeled tree via a random Prüfer sequence.
pub fn gen_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Precondition("need at least one vertex".into()));
    }
    if n == 1 {
        return Graph::new(1, &[]);
    }
    if n == 2 {
        return Graph::new(2, &[(0, 1)]);
    }
    let mut r = rng(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| r.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &prufer {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaf_heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &v in &prufer {
        let std::cmp::Reverse(leaf) = leaf_heap.pop().unwrap();
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaf_heap.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = leaf_heap.pop().unwrap();
    let std::cmp::Reverse(b) = leaf_heap.pop().unwrap();
    edges.push((a.min(b), a.max(b)));
    Graph::new(n, &edges)
}

/// Random graph guaranteed to carry a Hamilton path: a random permutation
/// spine plus extra edges at a small probability.
pub fn gen_hamiltonian(n: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Precondition("need at least two vertices".into()));
    }
    let mut r = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut r);
    let mut edges: Vec<(usize, usize)> = order
        .windows(2)
        .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
        .collect();
    let extra = r.random_range(0.05..0.25);
    let spine = Graph::new(n, &edges)?;
    for u in 0..n {
        for v in u + 1..n {
            if !spine.has_edge(u, v) && r.random_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Every labeled simple connected graph on `n <= 7` vertices, exactly once,
/// by edge-subset enumeration filtered by connectivity. Ascending bitmask
/// order over the lexicographic edge list.
pub fn exhaustive_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > EXHAUSTIVE_CAP {
        return Err(Error::CapExceeded(format!(
            "exhaustive enumeration is limited to 1..={EXHAUSTIVE_CAP} vertices, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let count: u64 = 1u64 << pairs.len();
    Ok((0..count).filter_map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).ok()?;
        g.is_connected().then_some(g)
    }))
}

/// Labeled connected graph counts by the standard subtraction recurrence:
/// `c_n = 2^C(n,2) - Σ_{k<n} C(n-1, k-1) c_k 2^C(n-k, 2)`.
/// Used as the independent oracle for the exhaustive corpus.
pub fn connected_graph_count(n: usize) -> u128 {
    fn choose(n: usize, k: usize) -> u128 {
        let mut r: u128 = 1;
        for i in 0..k {
            r = r * (n - i) as u128 / (i + 1) as u128;
        }
        r
    }
    fn pow2_choose2(n: usize) -> u128 {
        1u128 << (n * (n - 1) / 2)
    }
    let mut c = vec![0u128; n + 1];
    for i in 1..=n {
        let mut total = pow2_choose2(i);
        for k in 1..i {
            total -= choose(i - 1, k - 1) * c[k] * pow2_choose2(i - k);
        }
        c[i] = total;
    }
    c[n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::vertex_connectivity;
    use crate::path::longest_path_len;

    #[test]
    fn k_connected_generator_is_valid_and_deterministic() {
        for k in 2..=6usize {
            for i in 0..20u64 {
                let n = k + 2 + (i % 5) as usize;
                let g = gen_k_connected(n, k, split_seed(42, i)).unwrap();
                assert_eq!(g.n(), n);
                assert!(is_k_connected(&g, k), "n={n} k={k} i={i}");
                let again = gen_k_connected(n, k, split_seed(42, i)).unwrap();
                assert_eq!(g, again);
            }
        }
    }

    #[test]
    fn k_plus_one_base_case_is_complete() {
        let g = gen_k_connected(4, 3, 7).unwrap();
        assert!(g.is_complete());
        assert_eq!(vertex_connectivity(&g).unwrap(), 3);
    }

    #[test]
    fn generator_rejects_small_n() {
        assert!(gen_k_connected(5, 5, 1).is_err());
        assert!(gen_k_connected(3, 3, 1).is_err());
    }

    #[test]
    fn trees_are_trees() {
        for i in 0..50u64 {
            let n = 2 + (i % 11) as usize;
            let g = gen_tree(n, split_seed(7, i)).unwrap();
            assert_eq!(g.edge_count(), n - 1);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn hamiltonian_generator_has_spanning_path() {
        for i in 0..30u64 {
            let n = 4 + (i % 9) as usize;
            let g = gen_hamiltonian(n, split_seed(11, i)).unwrap();
            assert_eq!(longest_path_len(&g), n - 1, "i={i}");
        }
    }

    #[test]
    fn connected_generator_is_connected() {
        for i in 0..30u64 {
            let g = gen_connected(7, split_seed(3, i)).unwrap();
            assert!(g.is_connected());
        }
    }

    #[test]
    fn exhaustive_counts_match_recurrence() {
        assert_eq!(connected_graph_count(1), 1);
        assert_eq!(connected_graph_count(2), 1);
        assert_eq!(connected_graph_count(3), 4);
        assert_eq!(connected_graph_count(4), 38);
        assert_eq!(connected_graph_count(5), 728);
        assert_eq!(connected_graph_count(6), 26704);
        assert_eq!(connected_graph_count(7), 1866256);
        for n in 1..=5 {
            let by_enum = exhaustive_connected_graphs(n).unwrap().count() as u128;
            assert_eq!(by_enum, connected_graph_count(n), "n={n}");
        }
        assert!(exhaustive_connected_graphs(8).is_err());
    }
}
