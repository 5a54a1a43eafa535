//! Immutable undirected simple graphs with bitset adjacency.
//!
//! Vertices are dense integers `0..n-1` so that a vertex set fits one machine
//! word; every removal-style query works on masks, never by mutating the
//! graph. Ingestion formats: graph6 and a plain `n m` edge list. Export:
//! graph6, edge list, and DOT with optional edge/vertex highlighting.

use crate::error::{Error, Result, VertexSetRepr};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Largest supported vertex count; one `u64` bitset word.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of some host graph, bitset semantics over `0..n-1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn smallest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending iterator over members.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut bits = 0u64;
        for v in iter {
            debug_assert!(v < MAX_VERTICES);
            bits |= 1u64 << v;
        }
        VertexSet(bits)
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", VertexSetRepr(self.to_vec()))
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// Ascending iterator over the set bits of a word.
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Immutable undirected simple graph on vertices `0..n-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Rejects self-loops,
    /// duplicate edges and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EdgeList("vertex count must be at least 1".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let mut adj = vec![0u64; n];
        let mut m = 0;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeList(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::EdgeList(format!("self-loop at vertex {u}")));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::EdgeList(format!("duplicate edge ({u},{v})")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            m += 1;
        }
        Ok(Graph { n, adj, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub(crate) fn adj_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges in lexicographic `(u,v)` order with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            let mut higher = self.adj[u] & !((1u64 << u) | ((1u64 << u) - 1));
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n - 1) / 2
    }

    /// Component of `v` inside `allowed` (which must contain `v`).
    pub fn component_of(&self, v: usize, allowed: VertexSet) -> VertexSet {
        debug_assert!(allowed.contains(v));
        let allowed = allowed.bits();
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[u];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Vertices reachable from the neighbors of `v` staying inside `allowed`
    /// (`v` itself excluded unless it is in `allowed` and re-entered).
    pub(crate) fn reach_from(&self, v: usize, allowed: u64) -> u64 {
        let mut seen = self.adj[v] & allowed;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[u];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Maximal connected vertex sets partitioning `V(G)`, ordered by smallest
    /// contained vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of the subgraph induced on `within`, same ordering.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within.bits();
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let comp = self.component_of(v, VertexSet(left));
            left &= !comp.bits();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0, self.vertices()).len() == self.n
    }

    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.smallest() {
            None => false,
            Some(v) => self.component_of(v, within) == within,
        }
    }

    /// Subgraph induced on `s`, plus the relabeling map: entry `i` of the map
    /// is the original id of new vertex `i` (ascending order of `s`).
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        debug_assert!(s.is_subset_of(self.vertices()));
        let map = s.to_vec();
        let mut edges = Vec::new();
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Ok((Graph::new(map.len(), &edges)?, map))
    }

    /// Vertices whose removal disconnects the graph. Errors on disconnected
    /// input.
    pub fn cut_vertices(&self) -> Result<VertexSet> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut cuts = VertexSet::EMPTY;
        for v in 0..self.n {
            let rest = self.vertices().without(v);
            if self.components_within(rest).len() > 1 {
                cuts = cuts.with(v);
            }
        }
        Ok(cuts)
    }

    /// Copy of the graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        debug_assert!(self.has_edge(u, v));
        let mut g = self.clone();
        g.adj[u] &= !(1u64 << v);
        g.adj[v] &= !(1u64 << u);
        g.m -= 1;
        g
    }

    /// Edges whose removal disconnects the graph, lexicographic order. Errors
    /// on disconnected input.
    pub fn cut_edges(&self) -> Result<Vec<(usize, usize)>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self
            .edges()
            .into_iter()
            .filter(|&(u, v)| !self.without_edge(u, v).is_connected())
            .collect())
    }

    // ----- graph6 -----

    /// Decodes one graph6 line; an optional `>>graph6<<` header is stripped.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let mut s = text.trim();
        if let Some(rest) = s.strip_prefix(">>graph6<<") {
            s = rest;
        }
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(Error::Graph6("empty input".into()));
        }
        if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(Error::Graph6(format!(
                "byte {b} outside the printable range 63..=126"
            )));
        }
        let (n, data) = if bytes[0] == 126 {
            if bytes.len() >= 2 && bytes[1] == 126 {
                return Err(Error::Graph6(
                    "8-byte vertex counts exceed the supported maximum".into(),
                ));
            }
            if bytes.len() < 4 {
                return Err(Error::Graph6("truncated long-form vertex count".into()));
            }
            let n = ((bytes[1] - 63) as usize) << 12
                | ((bytes[2] - 63) as usize) << 6
                | (bytes[3] - 63) as usize;
            (n, &bytes[4..])
        } else {
            ((bytes[0] - 63) as usize, &bytes[1..])
        };
        if n == 0 {
            return Err(Error::Graph6("graphs must have at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let nbits = n * (n - 1) / 2;
        let nbytes = nbits.div_ceil(6);
        if data.len() != nbytes {
            return Err(Error::Graph6(format!(
                "expected {nbytes} data bytes for {n} vertices, got {}",
                data.len()
            )));
        }
        let mut edges = Vec::new();
        let mut idx = 0usize;
        for j in 1..n {
            for i in 0..j {
                if (data[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        for t in nbits..nbytes * 6 {
            if (data[t / 6] - 63) >> (5 - t % 6) & 1 == 1 {
                return Err(Error::Graph6("nonzero padding bits".into()));
            }
        }
        Graph::new(n, &edges)
    }

    /// Standard graph6 encoding (upper triangle column by column, 6 bits per
    /// printable byte).
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out: Vec<u8> = Vec::new();
        if n <= 62 {
            out.push(63 + n as u8);
        } else {
            out.push(126);
            out.push(63 + ((n >> 12) & 63) as u8);
            out.push(63 + ((n >> 6) & 63) as u8);
            out.push(63 + (n & 63) as u8);
        }
        let nbits = n * (n - 1) / 2;
        let mut data = vec![0u8; nbits.div_ceil(6)];
        let mut idx = 0usize;
        for j in 1..n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    data[idx / 6] |= 1 << (5 - idx % 6);
                }
                idx += 1;
            }
        }
        out.extend(data.into_iter().map(|b| b + 63));
        String::from_utf8(out).unwrap()
    }

    // ----- edge list -----

    /// Parses the plain text format: first line `n m`, then `m` lines `u v`.
    pub fn from_edge_list_text(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::EdgeList("missing `n m` header".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad header {header:?}")))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad header {header:?}")))?;
        if it.next().is_some() {
            return Err(Error::EdgeList(format!("bad header {header:?}")));
        }
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::EdgeList(format!("bad edge line {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::EdgeList(format!("bad edge line {line:?}")))?;
            if it.next().is_some() {
                return Err(Error::EdgeList(format!("bad edge line {line:?}")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::EdgeList(format!(
                "header declares {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(n, &edges)
    }

    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    // ----- DOT -----

    /// DOT serialization; highlighted edges are drawn bold red, highlighted
    /// vertices filled.
    pub fn to_dot(&self, highlight: Option<&DotHighlight>) -> String {
        let mut out = String::from("graph {\n  node [shape=circle];\n");
        if let Some(h) = highlight {
            for v in h.vertices.iter() {
                out.push_str(&format!("  {v} [style=filled, fillcolor=gold];\n"));
            }
        }
        let hl_edges: Vec<(usize, usize)> = highlight
            .map(|h| {
                h.edges
                    .iter()
                    .map(|&(u, v)| (u.min(v), u.max(v)))
                    .collect()
            })
            .unwrap_or_default();
        for (u, v) in self.edges() {
            if hl_edges.contains(&(u, v)) {
                out.push_str(&format!("  {u} -- {v} [color=red, penwidth=2.0];\n"));
            } else {
                out.push_str(&format!("  {u} -- {v};\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Highlight classes for DOT export.
#[derive(Debug, Clone, Default)]
pub struct DotHighlight {
    pub edges: Vec<(usize, usize)>,
    pub vertices: VertexSet,
}

pub(crate) fn disconnected_side_error(side: VertexSet) -> Error {
    Error::DisconnectedSide {
        side: VertexSetRepr(side.to_vec()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn edge_list_parses_k3() {
        let g = Graph::from_edge_list_text("3 3\n0 1\n0 2\n1 2").unwrap();
        assert_eq!(g, k3());
    }

    #[test]
    fn edge_list_rejects_self_loop() {
        assert!(matches!(
            Graph::from_edge_list_text("2 1\n0 0"),
            Err(Error::EdgeList(_))
        ));
    }

    #[test]
    fn edge_list_rejects_duplicate() {
        assert!(matches!(
            Graph::from_edge_list_text("4 2\n0 1\n0 1"),
            Err(Error::EdgeList(_))
        ));
    }

    #[test]
    fn edge_list_rejects_out_of_range_and_count_mismatch() {
        assert!(Graph::from_edge_list_text("2 1\n0 5").is_err());
        assert!(Graph::from_edge_list_text("3 2\n0 1").is_err());
    }

    #[test]
    fn graph6_k3_round_trip() {
        // Hand encoding: size byte 63+3='B'; triangle bits (0,1),(0,2),(1,2)
        // = 111 padded to 111000 = 56, 56+63=119='w'.
        assert_eq!(k3().to_graph6(), "Bw");
        assert_eq!(Graph::from_graph6("Bw").unwrap(), k3());
    }

    #[test]
    fn graph6_decodes_five_vertex_star() {
        // 'D' = 5 vertices; '?' = 000000, '{' = 111100: the last four pair
        // slots (0,4),(1,4),(2,4),(3,4) are set, so this is the star at 4.
        let g = Graph::from_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(g.to_graph6(), "D?{");
    }

    #[test]
    fn graph6_header_and_empty_graph() {
        let g = Graph::from_graph6(">>graph6<<C?").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn graph6_rejects_bad_inputs() {
        assert!(Graph::from_graph6("B").is_err()); // missing data bytes
        assert!(Graph::from_graph6("Bww").is_err()); // extra data bytes
        assert!(Graph::from_graph6("B\u{7f}").is_err()); // byte out of range
                                                         // K2 with nonzero padding: valid byte is '_' (1 then 00000); 'w' has
                                                         // trailing ones.
        assert!(Graph::from_graph6("Aw").is_err());
        assert!(Graph::from_graph6("A_").is_ok());
    }

    #[test]
    fn graph6_long_form_round_trips() {
        let edges: Vec<(usize, usize)> = (0..63).map(|i| (i, i + 1)).collect();
        let g = Graph::new(64, &edges).unwrap();
        let enc = g.to_graph6();
        assert_eq!(enc.as_bytes()[0], 126);
        assert_eq!(Graph::from_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn components_examples() {
        assert_eq!(k3().components(), vec![VertexSet::full(3)]);

        let g = Graph::new(4, &[(0, 1)]).unwrap();
        assert_eq!(
            g.components(),
            vec![
                VertexSet::from_iter([0, 1]),
                VertexSet::singleton(2),
                VertexSet::singleton(3)
            ]
        );

        // Path on {0,1,3,4} with the middle vertex dropped.
        let g = Graph::new(5, &[(0, 1), (3, 4)]).unwrap();
        let comps = g.components_within(VertexSet::from_iter([0, 1, 3, 4]));
        assert_eq!(
            comps,
            vec![VertexSet::from_iter([0, 1]), VertexSet::from_iter([3, 4])]
        );
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = k3();
        let (h, map) = g.induced_subgraph(g.vertices()).unwrap();
        assert_eq!(h, g);
        assert_eq!(map, vec![0, 1, 2]);

        let w4 = crate::catalog::catalog("W4").unwrap();
        let rim = VertexSet::from_iter([0, 1, 2, 3]);
        let (h, _) = w4.induced_subgraph(rim).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.edge_count(), 4);
        assert!(h.degree(0) == 2 && h.degree(1) == 2 && h.degree(2) == 2 && h.degree(3) == 2);

        let (h, map) = g.induced_subgraph(VertexSet::from_iter([0, 1])).unwrap();
        assert_eq!(h.edges(), vec![(0, 1)]);
        assert_eq!(map, vec![0, 1]);

        assert!(g.induced_subgraph(VertexSet::EMPTY).is_err());
    }

    #[test]
    fn cut_vertices_examples() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.cut_vertices().unwrap(), VertexSet::singleton(1));

        let c5 = crate::catalog::catalog("C_5").unwrap();
        assert!(c5.cut_vertices().unwrap().is_empty());

        let broom = crate::catalog::catalog("double_broom").unwrap();
        assert_eq!(broom.cut_vertices().unwrap(), VertexSet::from_iter([2, 3]));

        let disconnected = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(disconnected.cut_vertices().is_err());
    }

    #[test]
    fn cut_edges_examples() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.cut_edges().unwrap(), vec![(0, 1), (1, 2)]);

        let c5 = crate::catalog::catalog("C_5").unwrap();
        assert!(c5.cut_edges().unwrap().is_empty());

        let broom = crate::catalog::catalog("double_broom").unwrap();
        assert_eq!(broom.cut_edges().unwrap().len(), 5);

        let disconnected = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(disconnected.cut_edges().is_err());
    }

    #[test]
    fn cut_edges_iff_on_no_cycle() {
        // Independent oracle: an edge lies on a cycle iff some simple cycle
        // enumerated by DFS contains it.
        fn edges_on_cycles(g: &Graph) -> Vec<(usize, usize)> {
            let mut on_cycle = std::collections::BTreeSet::new();
            fn dfs(
                g: &Graph,
                start: usize,
                head: usize,
                visited: u64,
                path: &mut Vec<usize>,
                out: &mut std::collections::BTreeSet<(usize, usize)>,
            ) {
                for u in g.neighbors(head).iter() {
                    if u == start && path.len() >= 3 {
                        for w in path.windows(2) {
                            out.insert((w[0].min(w[1]), w[0].max(w[1])));
                        }
                        out.insert((start.min(head), start.max(head)));
                    }
                    if u > start && visited >> u & 1 == 0 {
                        path.push(u);
                        dfs(g, start, u, visited | 1 << u, path, out);
                        path.pop();
                    }
                }
            }
            for s in 0..g.n() {
                let mut path = vec![s];
                dfs(g, s, s, 1 << s, &mut path, &mut on_cycle);
            }
            on_cycle.into_iter().collect()
        }

        let mut rng_state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            rng_state ^= rng_state << 13;
            rng_state ^= rng_state >> 7;
            rng_state ^= rng_state << 17;
            rng_state
        };
        let mut tested = 0;
        while tested < 60 {
            let n = 4 + (next() % 6) as usize;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 100 < 40 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            tested += 1;
            let cyc = edges_on_cycles(&g);
            let cut = g.cut_edges().unwrap();
            for e in g.edges() {
                assert_eq!(cut.contains(&e), !cyc.contains(&e), "edge {e:?} in {g:?}");
            }
        }
    }

    #[test]
    fn component_sizes_sum_to_n() {
        for text in ["D?{", "Bw", "C?", "DQc"] {
            let g = Graph::from_graph6(text).unwrap();
            let total: usize = g.components().iter().map(|c| c.len()).sum();
            assert_eq!(total, g.n());
            for c in g.components() {
                assert!(g.is_connected_within(c));
                let (h, _) = g.induced_subgraph(c).unwrap();
                assert!(h.is_connected());
            }
        }
    }

    #[test]
    fn dot_export_highlights() {
        let g = k3();
        let dot = g.to_dot(Some(&DotHighlight {
            edges: vec![(1, 0)],
            vertices: VertexSet::singleton(2),
        }));
        assert!(dot.contains("0 -- 1 [color=red"));
        assert!(dot.contains("2 [style=filled"));
        assert!(dot.contains("0 -- 2;"));
    }
}
