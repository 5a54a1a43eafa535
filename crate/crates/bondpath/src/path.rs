//! Exact longest-path machinery: the branch-and-bound solver, a bounded
//! path-existence oracle, exhaustive enumeration of long paths, the longest
//! cycle, and the longest-path transversal number.
//!
//! All searches run over bitmask visited-sets and prune with the reachable-set
//! bound: a partial path at head `v` can gain at most as many edges as there
//! are vertices reachable from `v` through the unvisited mask.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use serde::Serialize;
use std::ops::ControlFlow;

/// Ordered sequence of distinct, consecutively adjacent vertices. The length
/// is the edge count; a single vertex is a path of length 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    /// Validates vertex range, distinctness and consecutive adjacency.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Path> {
        if vertices.is_empty() {
            return Err(Error::NotAPath("empty vertex sequence".into()));
        }
        let mut seen = 0u64;
        for &v in &vertices {
            if v >= g.n() {
                return Err(Error::NotAPath(format!("vertex {v} out of range")));
            }
            if seen >> v & 1 == 1 {
                return Err(Error::NotAPath(format!("vertex {v} repeated")));
            }
            seen |= 1 << v;
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::NotAPath(format!("{} and {} not adjacent", w[0], w[1])));
            }
        }
        Ok(Path { vertices })
    }

    /// Parses whitespace-separated vertex ids and validates against `g`.
    pub fn parse(g: &Graph, text: &str) -> Result<Path> {
        let vertices: Vec<usize> = text
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::NotAPath(format!("bad vertex id {t:?}")))
            })
            .collect::<Result<_>>()?;
        Path::new(g, vertices)
    }

    /// Edge count.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// True if `u` and `v` appear consecutively (either order).
    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.vertices
            .windows(2)
            .any(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u))
    }

    /// Position of `v` in the sequence.
    pub fn index_of(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    #[must_use]
    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }

    /// The lexicographically smaller of the sequence and its reversal.
    #[must_use]
    pub fn canonical(&self) -> Path {
        let rev = self.reversed();
        if rev.vertices < self.vertices {
            rev
        } else {
            self.clone()
        }
    }

    pub(crate) fn from_vertices_unchecked(vertices: Vec<usize>) -> Path {
        Path { vertices }
    }
}

impl std::fmt::Display for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Path({self})")
    }
}

impl Serialize for Path {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

// ----- longest path -----

/// Length of a longest path of `G[allowed]`; `None` if `allowed` is empty.
pub fn longest_path_len_within(g: &Graph, allowed: VertexSet) -> Option<usize> {
    let allowed = allowed.bits() & g.vertices().bits();
    if allowed == 0 {
        return None;
    }
    let mut best = 0usize;
    let mut bits = allowed;
    while bits != 0 {
        let s = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let bound = g.reach_from(s, allowed & !(1 << s)).count_ones() as usize;
        if bound > best {
            dfs_len(g, s, 1 << s, 0, allowed, &mut best);
        }
    }
    Some(best)
}

fn dfs_len(g: &Graph, v: usize, visited: u64, len: usize, allowed: u64, best: &mut usize) {
    if len > *best {
        *best = len;
    }
    let avail = allowed & !visited;
    let reach = g.reach_from(v, avail);
    if len + reach.count_ones() as usize <= *best {
        return;
    }
    let mut nbrs = g.adj_bits(v) & avail;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        dfs_len(g, u, visited | 1 << u, len + 1, allowed, best);
    }
}

pub fn longest_path_len(g: &Graph) -> usize {
    longest_path_len_within(g, g.vertices()).unwrap()
}

/// A longest path of the graph, with a deterministic tie-break: among all
/// maximum-length vertex sequences (reversals included) the lexicographically
/// least one is returned.
pub fn longest_path(g: &Graph) -> Path {
    longest_path_within(g, g.vertices()).unwrap()
}

/// Restriction of [`longest_path`] to `G[allowed]`.
pub fn longest_path_within(g: &Graph, allowed: VertexSet) -> Option<Path> {
    let target = longest_path_len_within(g, allowed)?;
    let witness = lex_least_path_of_len(g, allowed.bits() & g.vertices().bits(), target)
        .expect("a path of the computed maximum length exists");
    Some(Path::from_vertices_unchecked(witness))
}

/// First path of length exactly `target` in lexicographic preorder, i.e. the
/// lexicographically least such vertex sequence.
fn lex_least_path_of_len(g: &Graph, allowed: u64, target: usize) -> Option<Vec<usize>> {
    let mut bits = allowed;
    while bits != 0 {
        let s = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let mut path = vec![s];
        if dfs_witness(g, s, 1 << s, allowed, target, &mut path) {
            return Some(path);
        }
    }
    None
}

fn dfs_witness(
    g: &Graph,
    v: usize,
    visited: u64,
    allowed: u64,
    target: usize,
    path: &mut Vec<usize>,
) -> bool {
    let len = path.len() - 1;
    if len == target {
        return true;
    }
    let avail = allowed & !visited;
    let reach = g.reach_from(v, avail);
    if len + (reach.count_ones() as usize) < target {
        return false;
    }
    let mut nbrs = g.adj_bits(v) & avail;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        path.push(u);
        if dfs_witness(g, u, visited | 1 << u, allowed, target, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// True iff `G[restrict]` contains a path with at least `min_len` edges.
/// Early-exits on the first witness.
pub fn has_path_of_length(g: &Graph, restrict: VertexSet, min_len: usize) -> bool {
    let allowed = restrict.bits() & g.vertices().bits();
    if min_len == 0 {
        return allowed != 0;
    }
    let mut bits = allowed;
    while bits != 0 {
        let s = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if (g.reach_from(s, allowed & !(1 << s)).count_ones() as usize) < min_len {
            continue;
        }
        let mut path = vec![s];
        if dfs_witness(g, s, 1 << s, allowed, min_len, &mut path) {
            return true;
        }
    }
    false
}

// ----- enumeration -----

/// Visits every path of `G[allowed]` with at least `min_len >= 1` edges
/// exactly once up to reversal (canonical orientation: lexicographically
/// smaller end first). Returns `false` if the visitor broke off early.
pub fn for_each_long_path<F>(g: &Graph, allowed: VertexSet, min_len: usize, mut f: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let min_len = min_len.max(1);
    let allowed = allowed.bits() & g.vertices().bits();
    let mut bits = allowed;
    while bits != 0 {
        let s = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if (g.reach_from(s, allowed & !(1 << s)).count_ones() as usize) < min_len {
            continue;
        }
        let mut path = vec![s];
        if enum_dfs(g, s, 1 << s, allowed, min_len, &mut path, &mut f).is_break() {
            return false;
        }
    }
    true
}

fn enum_dfs<F>(
    g: &Graph,
    v: usize,
    visited: u64,
    allowed: u64,
    min_len: usize,
    path: &mut Vec<usize>,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let len = path.len() - 1;
    if len >= min_len && path[0] < *path.last().unwrap() {
        f(path)?;
    }
    let avail = allowed & !visited;
    let mut nbrs = g.adj_bits(v) & avail;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        if len + 1 + (g.reach_from(u, avail & !(1 << u)).count_ones() as usize) < min_len {
            continue;
        }
        path.push(u);
        enum_dfs(g, u, visited | 1 << u, allowed, min_len, path, f)?;
        path.pop();
    }
    ControlFlow::Continue(())
}

/// Iterator form of the enumeration: yields every path of length at least
/// `min_len` exactly once up to reversal, in lexicographic preorder of the
/// canonical orientation's start.
pub fn long_paths(g: &Graph, min_len: usize) -> LongPaths<'_> {
    long_paths_within(g, g.vertices(), min_len)
}

pub fn long_paths_within(g: &Graph, allowed: VertexSet, min_len: usize) -> LongPaths<'_> {
    LongPaths {
        g,
        allowed: allowed.bits() & g.vertices().bits(),
        min_len: min_len.max(1),
        starts: allowed.bits() & g.vertices().bits(),
        path: Vec::new(),
        visited: 0,
        cursors: Vec::new(),
    }
}

/// Explicit-stack DFS mirroring [`for_each_long_path`].
pub struct LongPaths<'g> {
    g: &'g Graph,
    allowed: u64,
    min_len: usize,
    starts: u64,
    path: Vec<usize>,
    visited: u64,
    cursors: Vec<u64>,
}

impl LongPaths<'_> {
    /// Pushes `v`; returns true if the new current path qualifies for output.
    fn push(&mut self, v: usize) -> bool {
        self.path.push(v);
        self.visited |= 1 << v;
        self.cursors.push(self.g.adj_bits(v) & self.allowed & !self.visited);
        self.path.len() - 1 >= self.min_len && self.path[0] < *self.path.last().unwrap()
    }
}

impl Iterator for LongPaths<'_> {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        loop {
            if self.path.is_empty() {
                // next start vertex
                loop {
                    if self.starts == 0 {
                        return None;
                    }
                    let s = self.starts.trailing_zeros() as usize;
                    self.starts &= self.starts - 1;
                    let bound = self.g.reach_from(s, self.allowed & !(1 << s)).count_ones() as usize;
                    if bound >= self.min_len {
                        self.visited = 0;
                        self.push(s); // a bare start never qualifies (min_len >= 1)
                        break;
                    }
                }
            }
            let depth = self.path.len() - 1;
            let cursor = &mut self.cursors[depth];
            if *cursor == 0 {
                let v = self.path.pop().unwrap();
                self.visited &= !(1 << v);
                self.cursors.pop();
                continue;
            }
            let u = cursor.trailing_zeros() as usize;
            *cursor &= *cursor - 1;
            let avail = self.allowed & !self.visited & !(1u64 << u);
            if depth + 1 + (self.g.reach_from(u, avail).count_ones() as usize) < self.min_len {
                continue;
            }
            if self.push(u) {
                return Some(Path::from_vertices_unchecked(self.path.clone()));
            }
        }
    }
}

// ----- longest cycle -----

/// Exact maximum cycle length; 0 for forests.
pub fn longest_cycle(g: &Graph) -> usize {
    longest_cycle_witness(g).map_or(0, |c| c.len())
}

/// A maximum-length cycle as its vertex sequence (closing edge implied), or
/// `None` for forests. Deterministic: first maximum found scanning start
/// vertices and neighbors in ascending order.
pub fn longest_cycle_witness(g: &Graph) -> Option<Vec<usize>> {
    let full = g.vertices().bits();
    let mut best: Option<Vec<usize>> = None;
    let mut best_len = 2; // cycles have at least 3 edges
    for s in 0..g.n() {
        // canonical cycles: s is the smallest vertex on the cycle
        let mask = full & !((1u64 << s) | ((1u64 << s) - 1));
        let mut path = vec![s];
        cycle_dfs(g, s, s, 1 << s, mask, &mut path, &mut best_len, &mut best);
    }
    best
}

#[allow(clippy::too_many_arguments)]
fn cycle_dfs(
    g: &Graph,
    start: usize,
    v: usize,
    visited: u64,
    mask: u64,
    path: &mut Vec<usize>,
    best_len: &mut usize,
    best: &mut Option<Vec<usize>>,
) {
    let len = path.len() - 1;
    if len >= 2 && g.has_edge(v, start) && len + 1 > *best_len {
        *best_len = len + 1;
        *best = Some(path.clone());
    }
    let avail = mask & !visited;
    let reach = g.reach_from(v, avail);
    // completing the cycle requires an edge back to start from the head or
    // from some reachable extension vertex
    if !g.has_edge(v, start) && reach & g.adj_bits(start) == 0 {
        return;
    }
    if len + (reach.count_ones() as usize) + 1 <= *best_len {
        return;
    }
    let mut nbrs = g.adj_bits(v) & avail;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        path.push(u);
        cycle_dfs(g, start, u, visited | 1 << u, mask, path, best_len, best);
        path.pop();
    }
}

// ----- longest path transversal -----

/// Default cap on the number of maximum-length paths `lpt` will enumerate.
pub const DEFAULT_LPT_CAP: usize = 100_000;

/// Minimum vertex set meeting every longest path.
#[derive(Debug, Clone, Serialize)]
pub struct TransversalResult {
    /// `lpt(G)`.
    pub size: usize,
    /// A minimum hitting set over the vertex sets of all longest paths.
    pub witness: VertexSet,
    /// Number of distinct maximum-length paths, counted up to reversal.
    pub longest_path_count: usize,
}

pub fn longest_path_transversal(g: &Graph) -> Result<TransversalResult> {
    longest_path_transversal_with_cap(g, DEFAULT_LPT_CAP)
}

/// Exact `lpt(G)` by enumerating every maximum-length path and solving the
/// hitting set over their vertex sets with branch and bound. Aborts with a
/// capacity error if more than `cap` longest paths exist.
pub fn longest_path_transversal_with_cap(g: &Graph, cap: usize) -> Result<TransversalResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let p = longest_path_len(g);
    if p == 0 {
        // single vertex
        return Ok(TransversalResult {
            size: 1,
            witness: VertexSet::singleton(0),
            longest_path_count: 1,
        });
    }
    let mut sets: Vec<u64> = Vec::new();
    let mut count = 0usize;
    let complete = for_each_long_path(g, g.vertices(), p, |path| {
        count += 1;
        if count > cap {
            return ControlFlow::Break(());
        }
        let mut bits = 0u64;
        for &v in path {
            bits |= 1 << v;
        }
        sets.push(bits);
        ControlFlow::Continue(())
    });
    if !complete {
        return Err(Error::CapExceeded(format!(
            "more than {cap} maximum-length paths"
        )));
    }
    sets.sort_unstable();
    sets.dedup();
    // supersets are hit whenever the subset is
    let reduced: Vec<u64> = sets
        .iter()
        .copied()
        .filter(|&a| !sets.iter().any(|&b| b != a && b & a == b))
        .collect();
    let witness = min_hitting_set(&reduced);
    Ok(TransversalResult {
        size: witness.count_ones() as usize,
        witness: VertexSet::from_bits(witness),
        longest_path_count: count,
    })
}

/// Exact minimum hitting set over bitmask sets (all nonempty).
fn min_hitting_set(sets: &[u64]) -> u64 {
    debug_assert!(sets.iter().all(|&s| s != 0));
    // greedy upper bound: repeatedly take the most frequent element
    let mut remaining: Vec<u64> = sets.to_vec();
    let mut greedy = 0u64;
    while !remaining.is_empty() {
        let mut best_v = 0;
        let mut best_hits = 0;
        for v in 0..64 {
            let hits = remaining.iter().filter(|&&s| s >> v & 1 == 1).count();
            if hits > best_hits {
                best_hits = hits;
                best_v = v;
            }
        }
        greedy |= 1 << best_v;
        remaining.retain(|&s| s >> best_v & 1 == 0);
    }
    let mut best = greedy;
    let mut chosen = 0u64;
    branch(sets, &mut chosen, &mut best);
    best
}

/// Count of pairwise-disjoint unhit sets: every one needs its own vertex.
fn disjoint_lower_bound(sets: &[u64], chosen: u64) -> usize {
    let mut used = 0u64;
    let mut count = 0;
    for &s in sets {
        if s & chosen == 0 && s & used == 0 {
            used |= s;
            count += 1;
        }
    }
    count
}

fn branch(sets: &[u64], chosen: &mut u64, best: &mut u64) {
    let size = chosen.count_ones();
    if size + disjoint_lower_bound(sets, *chosen) as u32 >= best.count_ones() {
        return;
    }
    // smallest unhit set branches least
    let pick = sets
        .iter()
        .copied()
        .filter(|&s| s & *chosen == 0)
        .min_by_key(|s| s.count_ones());
    let Some(pick) = pick else {
        if size < best.count_ones() {
            *best = *chosen;
        }
        return;
    };
    let mut bits = pick;
    while bits != 0 {
        let v = bits.trailing_zeros() as u64;
        bits &= bits - 1;
        *chosen |= 1 << v;
        branch(sets, chosen, best);
        *chosen &= !(1 << v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn longest_path_examples() {
        assert_eq!(longest_path(&catalog("W4").unwrap()).len(), 4);
        assert_eq!(longest_path(&catalog("C_6").unwrap()).len(), 5);
        assert_eq!(longest_path(&catalog("petersen").unwrap()).len(), 9);
    }

    #[test]
    fn longest_path_tie_break_is_lex_least() {
        let star = catalog("star_3").unwrap();
        let p = longest_path(&star);
        assert_eq!(p.vertices(), &[1, 0, 2]);

        let k3 = catalog("K3").unwrap();
        assert_eq!(longest_path(&k3).vertices(), &[0, 1, 2]);
    }

    #[test]
    fn has_path_of_length_examples() {
        let p5 = catalog("P_5").unwrap();
        assert!(has_path_of_length(&p5, p5.vertices(), 4));
        assert!(!has_path_of_length(&p5, VertexSet::from_iter([0, 1]), 2));

        let w4 = catalog("W4").unwrap();
        let rim = VertexSet::from_iter([0, 1, 2, 3]);
        assert!(has_path_of_length(&w4, rim, 3));
        assert!(!has_path_of_length(&w4, rim, 4));
    }

    #[test]
    fn enumeration_counts() {
        let k3 = catalog("K3").unwrap();
        assert_eq!(long_paths(&k3, 2).count(), 3);

        let p4 = catalog("P_4").unwrap();
        assert_eq!(long_paths(&p4, 3).count(), 1);

        let c4 = catalog("C_4").unwrap();
        assert_eq!(long_paths(&c4, 4).count(), 0);
    }

    #[test]
    fn enumeration_is_canonical_and_unique() {
        let g = catalog("W4").unwrap();
        let paths: Vec<Path> = long_paths(&g, 1).collect();
        let mut seen = std::collections::BTreeSet::new();
        for p in &paths {
            assert!(p.first() < p.last());
            assert!(seen.insert(p.vertices().to_vec()), "duplicate {p}");
        }
        // visitor and iterator agree
        let mut count = 0;
        for_each_long_path(&g, g.vertices(), 1, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, paths.len());
    }

    #[test]
    fn oracle_matches_enumeration_on_small_graphs() {
        for text in ["Bw", "C?", "D?{", "DQc", "E?~o"] {
            let g = Graph::from_graph6(text).unwrap();
            let p = longest_path_len(&g);
            let by_enum = long_paths(&g, 1).map(|p| p.len()).max().unwrap_or(0);
            assert_eq!(p, by_enum, "{text}");
            for l in 1..=p + 1 {
                assert_eq!(
                    has_path_of_length(&g, g.vertices(), l),
                    l <= p,
                    "{text} at {l}"
                );
            }
        }
    }

    #[test]
    fn longest_cycle_examples() {
        assert_eq!(longest_cycle(&catalog("C_6").unwrap()), 6);
        assert_eq!(longest_cycle(&catalog("P_5").unwrap()), 0);
        assert_eq!(longest_cycle(&catalog("star_3").unwrap()), 0);
        assert_eq!(longest_cycle(&catalog("W4").unwrap()), 5);
        assert_eq!(longest_cycle(&catalog("petersen").unwrap()), 9);
    }

    #[test]
    fn cycle_witness_is_a_cycle() {
        let g = catalog("prism").unwrap();
        let c = longest_cycle_witness(&g).unwrap();
        assert_eq!(c.len(), 6);
        for w in c.windows(2) {
            assert!(g.has_edge(w[0], w[1]));
        }
        assert!(g.has_edge(c[0], *c.last().unwrap()));
    }

    #[test]
    fn path_length_vs_cycle_length() {
        for name in ["K4", "W4", "petersen", "prism", "C_6"] {
            let g = catalog(name).unwrap();
            let c = longest_cycle(&g);
            if c >= 1 {
                assert!(longest_path_len(&g) >= c - 1, "{name}");
            }
        }
    }

    #[test]
    fn transversal_examples() {
        let p6 = catalog("P_6").unwrap();
        let r = longest_path_transversal(&p6).unwrap();
        assert_eq!(r.size, 1);
        assert_eq!(r.longest_path_count, 1);

        // every longest path of the wheel is a Hamilton path, so it contains
        // the hub (and indeed every vertex): lpt = 1
        let w4 = catalog("W4").unwrap();
        let r = longest_path_transversal(&w4).unwrap();
        assert_eq!(r.size, 1);
        let v = r.witness.smallest().unwrap();
        assert!(long_paths(&w4, 4).all(|p| p.contains_vertex(v)));

        let spider = catalog("spider_2_2_2").unwrap();
        let r = longest_path_transversal(&spider).unwrap();
        assert_eq!(r.size, 1);
        assert_eq!(r.witness, VertexSet::singleton(0));
    }

    #[test]
    fn transversal_witness_is_minimal() {
        for text in ["DQc", "D?{", "E?~o", "EFz_"] {
            let g = Graph::from_graph6(text).unwrap();
            if !g.is_connected() {
                continue;
            }
            let r = longest_path_transversal(&g).unwrap();
            let p = longest_path_len(&g);
            let sets: Vec<VertexSet> = long_paths(&g, p.max(1)).map(|q| q.vertex_set()).collect();
            for s in &sets {
                assert!(!s.intersection(r.witness).is_empty());
            }
            // dropping any witness vertex leaves some longest path unhit
            for v in r.witness.iter() {
                let smaller = r.witness.without(v);
                assert!(
                    sets.iter().any(|s| s.intersection(smaller).is_empty()),
                    "witness not minimal on {text}"
                );
            }
        }
    }

    #[test]
    fn transversal_cap_triggers() {
        let k6 = catalog("K6").unwrap();
        assert!(matches!(
            longest_path_transversal_with_cap(&k6, 10),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn path_parse_and_display_round_trip() {
        let g = catalog("P_5").unwrap();
        let p = Path::parse(&g, "0 1 2 3").unwrap();
        assert_eq!(p.to_string(), "0 1 2 3");
        assert_eq!(p.len(), 3);
        assert!(Path::parse(&g, "0 2").is_err());
        assert!(Path::parse(&g, "0 1 0").is_err());
    }

    #[test]
    fn canonical_prefers_smaller_end() {
        let g = catalog("P_5").unwrap();
        let p = Path::parse(&g, "3 2 1 0").unwrap();
        assert_eq!(p.canonical().to_string(), "0 1 2 3");
    }
}
