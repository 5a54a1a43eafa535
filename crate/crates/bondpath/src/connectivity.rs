//! Vertex connectivity and vertex-disjoint path families via unit-capacity
//! maximum flow on the vertex-split digraph.
//!
//! Every vertex `v` becomes an arc `v_in -> v_out` of capacity one, every edge
//! `uv` the arcs `u_out -> v_in` and `v_out -> u_in`. Menger then makes
//! `maxflow(s_out, t_in)` the minimum s-t vertex cut for nonadjacent `s`, `t`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::path::Path;

/// Pairwise vertex-disjoint (X,Y)-paths: each path starts in X, ends in Y and
/// has no internal vertex in X ∪ Y.
#[derive(Debug, Clone)]
pub struct DisjointPathFamily {
    pub paths: Vec<Path>,
    pub sources: VertexSet,
    pub sinks: VertexSet,
}

impl DisjointPathFamily {
    /// Re-checks the family invariants against the host graph.
    pub fn check(&self, g: &Graph, x: VertexSet, y: VertexSet) -> bool {
        let mut used = VertexSet::EMPTY;
        for p in &self.paths {
            if Path::new(g, p.vertices().to_vec()).is_err() {
                return false;
            }
            if !used.intersection(p.vertex_set()).is_empty() {
                return false;
            }
            used = used.union(p.vertex_set());
            if !x.contains(p.first()) || !y.contains(p.last()) {
                return false;
            }
            for &v in &p.vertices()[1..p.vertices().len() - 1] {
                if x.contains(v) || y.contains(v) {
                    return false;
                }
            }
        }
        true
    }
}

/// Small dense-graph max-flow network; paired edges `e ^ 1` are residuals.
struct FlowNet {
    adj: Vec<Vec<u32>>,
    to: Vec<u32>,
    cap: Vec<u8>,
}

impl FlowNet {
    fn new(nodes: usize) -> FlowNet {
        FlowNet {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].push(self.to.len() as u32);
        self.to.push(v as u32);
        self.cap.push(1);
        self.adj[v].push(self.to.len() as u32);
        self.to.push(u as u32);
        self.cap.push(0);
    }

    /// Augments one unit along a BFS-shortest path; false when none exists.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut pred: Vec<u32> = vec![u32::MAX; self.adj.len()];
        let mut queue = std::collections::VecDeque::new();
        pred[s] = u32::MAX - 1;
        queue.push_back(s);
        'bfs: while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e as usize] as usize;
                if self.cap[e as usize] > 0 && pred[v] == u32::MAX {
                    pred[v] = e;
                    if v == t {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if pred[t] == u32::MAX {
            return false;
        }
        let mut v = t;
        while v != s {
            let e = pred[v] as usize;
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            v = self.to[e ^ 1] as usize;
        }
        true
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit && self.augment(s, t) {
            flow += 1;
        }
        flow
    }
}

fn vertex_split_net(g: &Graph) -> FlowNet {
    let n = g.n();
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        net.add_edge(2 * v, 2 * v + 1); // v_in -> v_out
    }
    for (u, v) in g.edges() {
        net.add_edge(2 * u + 1, 2 * v);
        net.add_edge(2 * v + 1, 2 * u);
    }
    net
}

/// Minimum s-t vertex cut size for nonadjacent s,t, computed as a bounded
/// max-flow (stops early once `limit` is reached; the true value is then
/// at least `limit`).
pub(crate) fn st_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    debug_assert!(!g.has_edge(s, t) && s != t);
    let mut net = vertex_split_net(g);
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Exact vertex connectivity κ(G): the minimum over nonadjacent pairs of the
/// minimum vertex cut, with κ = n−1 for complete graphs. Requires n ≥ 2.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Precondition(
            "vertex connectivity needs at least 2 vertices".into(),
        ));
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    let mut best = g.min_degree();
    for s in 0..n {
        if best == 0 {
            break;
        }
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(st_vertex_connectivity(g, s, t, best));
            }
        }
    }
    Ok(best)
}

/// True iff `n > k` and κ(G) ≥ k.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return false;
    }
    if k == 0 {
        return true;
    }
    if g.is_complete() {
        return true; // κ = n-1 ≥ k since n > k
    }
    if g.min_degree() < k {
        return false;
    }
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) && st_vertex_connectivity(g, s, t, k) < k {
                return false;
            }
        }
    }
    true
}

/// Constructs `k` pairwise vertex-disjoint (X,Y)-paths in a k-connected graph
/// with |X| ≥ k and |Y| ≥ k, X ∩ Y = ∅. Existence is guaranteed by Menger's
/// fan version; failure to achieve flow value k therefore signals a broken
/// precondition and aborts loudly.
pub fn disjoint_paths(g: &Graph, x: VertexSet, y: VertexSet, k: usize) -> Result<DisjointPathFamily> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if !x.intersection(y).is_empty() {
        return Err(Error::Precondition("X and Y must be disjoint".into()));
    }
    if x.len() < k || y.len() < k {
        return Err(Error::Precondition(format!(
            "need |X| >= {k} and |Y| >= {k}, got {} and {}",
            x.len(),
            y.len()
        )));
    }
    if !x.is_subset_of(g.vertices()) || !y.is_subset_of(g.vertices()) {
        return Err(Error::Precondition("X and Y must be vertex sets of G".into()));
    }
    if !is_k_connected(g, k) {
        return Err(Error::Precondition(format!("graph is not {k}-connected")));
    }

    // auxiliary terminals joined to all of X and all of Y keep the
    // "no internal vertex in X ∪ Y" contract intact after trimming
    let n = g.n();
    let (source, sink) = (2 * n, 2 * n + 1);
    let mut net = vertex_split_net(g);
    net.adj.push(Vec::new());
    net.adj.push(Vec::new());
    for v in x.iter() {
        net.add_edge(source, 2 * v);
    }
    for v in y.iter() {
        net.add_edge(2 * v + 1, sink);
    }
    let flow = net.max_flow(source, sink, k);
    if flow < k {
        return Err(Error::Falsification(format!(
            "only {flow} disjoint (X,Y)-paths found in a {k}-connected graph; \
             the connectivity precondition check must be wrong"
        )));
    }

    // decompose: walk unit flows greedily, smallest vertex index first
    let mut paths = Vec::with_capacity(k);
    let mut x_starts: Vec<usize> = x.iter().collect();
    x_starts.sort_unstable();
    for start in x_starts {
        // source edge to start used?
        let Some(&se) = net.adj[source]
            .iter()
            .find(|&&e| net.to[e as usize] as usize == 2 * start && net.cap[e as usize] == 0)
        else {
            continue;
        };
        net.cap[se as usize] = 1; // consume
        let mut walk = vec![start];
        let mut v = start;
        loop {
            // the split arc v_in -> v_out must be saturated; consume it
            let split = net.adj[2 * v][0] as usize;
            debug_assert_eq!(net.to[split] as usize, 2 * v + 1);
            net.cap[split] = 1;
            // pick the used outgoing arc with the smallest target vertex
            let mut next: Option<(usize, u32)> = None;
            for &e in &net.adj[2 * v + 1] {
                let to = net.to[e as usize] as usize;
                if net.cap[e as usize] == 0 && e & 1 == 0 {
                    if to == sink {
                        next = Some((usize::MAX, e));
                        break;
                    }
                    let w = to / 2;
                    if next.is_none_or(|(bw, _)| w < bw) {
                        next = Some((w, e));
                    }
                }
            }
            let (w, e) = next.expect("unit flow continues to the sink");
            net.cap[e as usize] = 1;
            if w == usize::MAX {
                break;
            }
            walk.push(w);
            v = w;
        }
        // trim to a proper (X,Y)-path: start at the last X vertex, stop at
        // the first Y vertex after it
        let last_x = walk.iter().rposition(|&v| x.contains(v)).unwrap();
        let first_y = walk[last_x..]
            .iter()
            .position(|&v| y.contains(v))
            .map(|i| i + last_x)
            .unwrap();
        paths.push(Path::new(g, walk[last_x..=first_y].to_vec())?);
    }
    if paths.len() != k {
        return Err(Error::Falsification(format!(
            "flow decomposition produced {} paths, expected {k}",
            paths.len()
        )));
    }
    let family = DisjointPathFamily {
        sources: paths.iter().map(|p| p.first()).collect(),
        sinks: paths.iter().map(|p| p.last()).collect(),
        paths,
    };
    debug_assert!(family.check(g, x, y));
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&catalog("K4").unwrap()).unwrap(), 3);
        assert_eq!(vertex_connectivity(&catalog("C_5").unwrap()).unwrap(), 2);
        assert_eq!(vertex_connectivity(&catalog("W4").unwrap()).unwrap(), 3);
        assert_eq!(vertex_connectivity(&catalog("petersen").unwrap()).unwrap(), 3);
        let single = Graph::new(1, &[]).unwrap();
        assert!(vertex_connectivity(&single).is_err());
    }

    #[test]
    fn k_connected_examples() {
        assert!(is_k_connected(&catalog("K3").unwrap(), 2));
        assert!(!is_k_connected(&catalog("P_4").unwrap(), 2));
        assert!(is_k_connected(&catalog("K33").unwrap(), 3));
        assert!(!is_k_connected(&catalog("K33").unwrap(), 4));
        // n > k is required even for complete graphs
        assert!(!is_k_connected(&catalog("K4").unwrap(), 4));
    }

    #[test]
    fn monotone_in_k() {
        for name in ["K4", "W4", "K33", "prism", "petersen", "C_6"] {
            let g = catalog(name).unwrap();
            let kappa = vertex_connectivity(&g).unwrap();
            for k in 1..=kappa {
                assert!(is_k_connected(&g, k), "{name} at {k}");
            }
            assert!(!is_k_connected(&g, kappa + 1), "{name}");
        }
    }

    #[test]
    fn disjoint_paths_matching_in_k33() {
        let g = catalog("K33").unwrap();
        let x = VertexSet::from_iter([0, 1, 2]);
        let y = VertexSet::from_iter([3, 4, 5]);
        let fam = disjoint_paths(&g, x, y, 3).unwrap();
        assert_eq!(fam.paths.len(), 3);
        for p in &fam.paths {
            assert_eq!(p.len(), 1, "a perfect matching as one-edge paths");
        }
        assert!(fam.check(&g, x, y));
    }

    #[test]
    fn disjoint_paths_cycle_arcs() {
        let g = catalog("C_6").unwrap();
        let x = VertexSet::from_iter([0, 1]);
        let y = VertexSet::from_iter([3, 4]);
        let fam = disjoint_paths(&g, x, y, 2).unwrap();
        assert_eq!(fam.paths.len(), 2);
        assert!(fam.check(&g, x, y));
    }

    #[test]
    fn disjoint_paths_precondition_errors() {
        let g = catalog("K5").unwrap();
        let x = VertexSet::from_iter([0, 1, 2, 3]);
        let y = VertexSet::singleton(4);
        assert!(matches!(
            disjoint_paths(&g, x, y, 4),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            disjoint_paths(&g, x, x, 2),
            Err(Error::Precondition(_))
        ));
    }

    /// Brute-force minimum vertex cut: all subsets of V \ {s,t}, smallest
    /// disconnecting one.
    fn brute_force_kappa(g: &Graph) -> usize {
        let n = g.n();
        if g.is_complete() {
            return n - 1;
        }
        let mut best = n - 1;
        for s in 0..n {
            for t in s + 1..n {
                if g.has_edge(s, t) {
                    continue;
                }
                for mask in 0u64..(1 << n) {
                    if mask >> s & 1 == 1 || mask >> t & 1 == 1 {
                        continue;
                    }
                    if (mask.count_ones() as usize) >= best {
                        continue;
                    }
                    let remaining = g.vertices().difference(VertexSet::from_bits(mask));
                    if !g.component_of(s, remaining).contains(t) {
                        best = mask.count_ones() as usize;
                    }
                }
            }
        }
        best
    }

    #[test]
    fn flow_kappa_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xC0FFEE);
        let mut done = 0;
        while done < 150 {
            let n = rng.random_range(4..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            done += 1;
            assert_eq!(
                vertex_connectivity(&g).unwrap(),
                brute_force_kappa(&g),
                "{g:?}"
            );
        }
    }
}
