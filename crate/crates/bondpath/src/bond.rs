//! Bonds: minimal nonempty edge-cuts, their constructions from long paths,
//! enumeration, and the meet-oracle for "this bond meets every path of length
//! at least t".
//!
//! A bond is stored as its defining bipartition. For a connected graph the
//! cut `δ(S)` is a bond exactly when both `G[S]` and `G[V∖S]` are connected,
//! which is what every constructor validates.

use crate::error::{Error, Result};
use crate::graph::{disconnected_side_error, Graph, VertexSet};
use crate::path::{has_path_of_length, Path};
use serde::Serialize;

/// Default cap on the vertex count for exhaustive bond enumeration.
pub const DEFAULT_BOND_ENUM_CAP: usize = 16;

/// A bond with its defining bipartition and full cross-edge set.
#[derive(Debug, Clone, Serialize)]
pub struct Bond {
    side1: VertexSet,
    side2: VertexSet,
    /// Edges with one end in each side, lexicographic `(min,max)` order.
    cross_edges: Vec<(usize, usize)>,
}

impl PartialEq for Bond {
    fn eq(&self, other: &Self) -> bool {
        // unordered bipartition equality
        (self.side1 == other.side1 && self.side2 == other.side2)
            || (self.side1 == other.side2 && self.side2 == other.side1)
    }
}

impl Eq for Bond {}

impl Bond {
    /// Builds the bond `δ(side1)` of a connected graph, validating that both
    /// sides are nonempty and induce connected subgraphs.
    pub fn from_side(g: &Graph, side1: VertexSet) -> Result<Bond> {
        let all = g.vertices();
        let side1 = side1.intersection(all);
        let side2 = all.difference(side1);
        if side1.is_empty() || side2.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if !g.is_connected_within(side1) {
            return Err(disconnected_side_error(side1));
        }
        if !g.is_connected_within(side2) {
            return Err(disconnected_side_error(side2));
        }
        let cross_edges = cross_edges(g, side1);
        debug_assert!(!cross_edges.is_empty() || !g.is_connected());
        if cross_edges.is_empty() {
            return Err(Error::Disconnected);
        }
        Ok(Bond {
            side1,
            side2,
            cross_edges,
        })
    }

    /// The vertex-bond of `v`: all edges incident to `v`. A bond whenever
    /// `G - v` is connected (always in 2-connected graphs).
    pub fn vertex_bond(g: &Graph, v: usize) -> Result<Bond> {
        Bond::from_side(g, VertexSet::singleton(v))
    }

    pub fn side1(&self) -> VertexSet {
        self.side1
    }

    pub fn side2(&self) -> VertexSet {
        self.side2
    }

    pub fn cross_edges(&self) -> &[(usize, usize)] {
        &self.cross_edges
    }

    pub fn size(&self) -> usize {
        self.cross_edges.len()
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.cross_edges.binary_search(&e).is_ok()
    }

    /// True iff the path uses at least one cross edge.
    pub fn meets_path(&self, path: &Path) -> bool {
        path.vertices()
            .windows(2)
            .any(|w| self.contains_edge(w[0], w[1]))
    }

    /// Canonical orientation for enumeration: side containing vertex 0 first.
    #[must_use]
    pub fn canonical(mut self) -> Bond {
        if self.side2.contains(0) {
            std::mem::swap(&mut self.side1, &mut self.side2);
        }
        self
    }

    /// Meet-oracle: the bond meets every path with at least `threshold >= 1`
    /// edges iff neither side's induced subgraph contains such a path — a path
    /// avoiding every cross edge can never change sides.
    pub fn meets_all_long_paths(&self, g: &Graph, threshold: usize) -> bool {
        debug_assert!(threshold >= 1);
        !has_path_of_length(g, self.side1, threshold)
            && !has_path_of_length(g, self.side2, threshold)
    }
}

fn cross_edges(g: &Graph, side1: VertexSet) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| side1.contains(u) != side1.contains(v))
        .collect()
}

/// True iff `edge_set` is exactly the set of edges between the two components
/// of `G - edge_set`, i.e. a minimal nonempty edge-cut of the connected graph.
pub fn is_bond(g: &Graph, edge_set: &[(usize, usize)]) -> bool {
    if edge_set.is_empty() {
        return false;
    }
    let mut normalized: Vec<(usize, usize)> = Vec::with_capacity(edge_set.len());
    for &(u, v) in edge_set {
        if !g.has_edge(u, v) {
            return false;
        }
        normalized.push((u.min(v), u.max(v)));
    }
    normalized.sort_unstable();
    normalized.dedup();
    // remove the set, count components
    let mut h = g.clone();
    for &(u, v) in &normalized {
        h = h.without_edge(u, v);
    }
    let comps = h.components();
    if comps.len() != 2 {
        return false;
    }
    let mut between = cross_edges(g, comps[0]);
    between.sort_unstable();
    normalized == between
}

/// The midpoint bond of a longest path `L = x_0 … x_p`: with `r = ⌈p/2⌉` and
/// `G₁` the component of `G − {x_r,…,x_p}` containing `x_0`, this is
/// `δ(V(G₁))`. Side 2 is connected because the tail `x_r…x_p` is a path and
/// every other component of `G − {x_r,…,x_p}` attaches to it, so the cut is a
/// bond. The edge `x_{r-1} x_r` always crosses it.
pub fn midpoint_bond(g: &Graph, l: &Path) -> Result<Bond> {
    Path::new(g, l.vertices().to_vec())?; // validate against this graph
    let p = l.len();
    if p < 1 {
        return Err(Error::Precondition(
            "midpoint bond needs a path with at least one edge".into(),
        ));
    }
    let r = p.div_ceil(2);
    let tail: VertexSet = l.vertices()[r..].iter().copied().collect();
    let side1 = g.component_of(l.vertices()[0], g.vertices().difference(tail));
    let bond = Bond::from_side(g, side1)?;
    debug_assert!(bond.side1.contains(l.vertices()[r - 1]));
    debug_assert!(bond.side2.contains(l.vertices()[r]));
    debug_assert!(bond.contains_edge(l.vertices()[r - 1], l.vertices()[r]));
    Ok(bond)
}

/// The spine-split bond of a Hamilton path `L = x_0 … x_p`: side 1 is the
/// first `⌈p/2⌉` path vertices, side 2 the rest; both sides carry a spanning
/// subpath, so the cut is a bond. It meets every path of length at least
/// `⌈(p+1)/2⌉`, each side being too small to hold one.
pub fn hamilton_split_bond(g: &Graph, l: &Path) -> Result<Bond> {
    Path::new(g, l.vertices().to_vec())?;
    if l.vertices().len() != g.n() {
        return Err(Error::NotHamilton);
    }
    let p = l.len();
    if p < 1 {
        return Err(Error::NotHamilton);
    }
    let r = p.div_ceil(2);
    let side1: VertexSet = l.vertices()[..r].iter().copied().collect();
    Bond::from_side(g, side1)
}

/// Enumerates every bond of a connected graph exactly once, canonicalized so
/// side 1 contains vertex 0, in ascending order of the side-1 bitmask.
/// Requires `n <= cap`.
pub fn bonds_with_cap(g: &Graph, cap: usize) -> Result<impl Iterator<Item = Bond> + '_> {
    let n = g.n();
    if n > cap {
        return Err(Error::CapExceeded(format!(
            "bond enumeration supports at most {cap} vertices, got {n}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let side_count: u64 = 1u64 << (n - 1);
    Ok((0..side_count).filter_map(move |rest| {
        let side1 = VertexSet::from_bits(1 | rest << 1);
        let side2 = g.vertices().difference(side1);
        if side2.is_empty() {
            return None;
        }
        if !g.is_connected_within(side1) || !g.is_connected_within(side2) {
            return None;
        }
        Some(Bond {
            side1,
            side2,
            cross_edges: cross_edges(g, side1),
        })
    }))
}

/// Enumeration with the default cap.
pub fn bonds(g: &Graph) -> Result<impl Iterator<Item = Bond> + '_> {
    bonds_with_cap(g, DEFAULT_BOND_ENUM_CAP)
}

/// Maximum cross-edge count over all bonds.
pub fn max_bond_size(g: &Graph) -> Result<usize> {
    max_bond_size_with_cap(g, DEFAULT_BOND_ENUM_CAP)
}

pub fn max_bond_size_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    Ok(bonds_with_cap(g, cap)?.map(|b| b.size()).max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::path::{long_paths, longest_path};
    use std::ops::ControlFlow;

    #[test]
    fn is_bond_examples() {
        let p3 = catalog("P_3").unwrap();
        assert!(is_bond(&p3, &[(0, 1)]));

        let k3 = catalog("K3").unwrap();
        assert!(!is_bond(&k3, &[(0, 1)]));

        let w4 = catalog("W4").unwrap();
        let hub_edges: Vec<(usize, usize)> = (0..4).map(|v| (v, 4)).collect();
        assert!(is_bond(&w4, &hub_edges), "vertex-bond of the hub");
        // a disconnecting but non-minimal set is not a bond
        assert!(!is_bond(&w4, &w4.edges()));
        assert!(!is_bond(&k3, &[]));
    }

    #[test]
    fn from_side_examples() {
        let c4 = catalog("C_4").unwrap();
        let b = Bond::from_side(&c4, VertexSet::from_iter([0, 1])).unwrap();
        assert_eq!(b.cross_edges(), &[(0, 3), (1, 2)]);

        let w4 = catalog("W4").unwrap();
        let b = Bond::vertex_bond(&w4, 4).unwrap();
        assert_eq!(b.size(), 4);
        assert!(is_bond(&w4, b.cross_edges()));

        let p4 = catalog("P_4").unwrap();
        assert!(matches!(
            Bond::from_side(&p4, VertexSet::from_iter([0, 2])),
            Err(Error::DisconnectedSide { .. })
        ));
        assert!(Bond::from_side(&p4, VertexSet::EMPTY).is_err());
        assert!(Bond::from_side(&p4, p4.vertices()).is_err());
    }

    #[test]
    fn midpoint_bond_examples() {
        let p5 = catalog("P_5").unwrap();
        let b = midpoint_bond(&p5, &longest_path(&p5)).unwrap();
        assert_eq!(b.side1(), VertexSet::from_iter([0, 1]));
        assert_eq!(b.cross_edges(), &[(1, 2)]);

        let c6 = catalog("C_6").unwrap();
        let l = Path::new(&c6, vec![0, 1, 2, 3, 4, 5]).unwrap();
        let b = midpoint_bond(&c6, &l).unwrap();
        assert_eq!(b.side1(), VertexSet::from_iter([0, 1, 2]));
        assert_eq!(b.cross_edges(), &[(0, 5), (2, 3)]);

        // alternating Hamilton path of K33: split lands after the third vertex
        let k33 = catalog("K33").unwrap();
        let l = Path::new(&k33, vec![0, 3, 1, 4, 2, 5]).unwrap();
        let b = midpoint_bond(&k33, &l).unwrap();
        assert_eq!(b.side1(), VertexSet::from_iter([0, 1, 3]));
        assert_eq!(
            b.cross_edges(),
            &[(0, 4), (0, 5), (1, 4), (1, 5), (2, 3)],
            "five cross edges"
        );
    }

    #[test]
    fn midpoint_bond_rejects_foreign_paths() {
        let p5 = catalog("P_5").unwrap();
        let c6 = catalog("C_6").unwrap();
        let l = Path::new(&c6, vec![0, 1, 2, 3, 4, 5]).unwrap();
        assert!(midpoint_bond(&p5, &l).is_err());
    }

    #[test]
    fn hamilton_split_examples() {
        let p4 = catalog("P_4").unwrap();
        let l = longest_path(&p4);
        let b = hamilton_split_bond(&p4, &l).unwrap();
        assert_eq!(b.side1(), VertexSet::from_iter([0, 1]));
        assert_eq!(b.cross_edges(), &[(1, 2)]);
        assert!(b.meets_all_long_paths(&p4, 2));

        let k4 = catalog("K4").unwrap();
        let l = Path::new(&k4, vec![0, 1, 2, 3]).unwrap();
        let b = hamilton_split_bond(&k4, &l).unwrap();
        assert_eq!(b.cross_edges(), &[(0, 2), (0, 3), (1, 2), (1, 3)]);

        let c4 = catalog("C_4").unwrap();
        let l = Path::new(&c4, vec![0, 1, 2, 3]).unwrap();
        let b = hamilton_split_bond(&c4, &l).unwrap();
        assert_eq!(b.cross_edges(), &[(0, 3), (1, 2)]);

        // non-Hamilton input is rejected
        let sub = Path::new(&k4, vec![0, 1, 2]).unwrap();
        assert!(matches!(
            hamilton_split_bond(&k4, &sub),
            Err(Error::NotHamilton)
        ));
    }

    #[test]
    fn meet_oracle_examples() {
        let w4 = catalog("W4").unwrap();
        let hub = Bond::vertex_bond(&w4, 4).unwrap();
        assert!(!hub.meets_all_long_paths(&w4, 2), "the rim holds a 2-edge path");

        let p5 = catalog("P_5").unwrap();
        let b = midpoint_bond(&p5, &longest_path(&p5)).unwrap();
        assert!(b.meets_all_long_paths(&p5, 3));

        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let b = Bond::from_side(&k2, VertexSet::singleton(0)).unwrap();
        assert!(b.meets_all_long_paths(&k2, 1));
    }

    #[test]
    fn meet_oracle_agrees_with_enumeration() {
        // independent route: enumerate every long path and test edge usage
        for name in ["W4", "K4", "prism", "C_6", "double_broom"] {
            let g = catalog(name).unwrap();
            for b in bonds(&g).unwrap() {
                for threshold in 1..=longest_path(&g).len() {
                    let by_enum = long_paths(&g, threshold).all(|p| b.meets_path(&p));
                    assert_eq!(
                        b.meets_all_long_paths(&g, threshold),
                        by_enum,
                        "{name}, bond {b:?}, threshold {threshold}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let k3 = catalog("K3").unwrap();
        assert_eq!(bonds(&k3).unwrap().count(), 3, "three vertex-bonds");

        let p3 = catalog("P_3").unwrap();
        assert_eq!(bonds(&p3).unwrap().count(), 2, "the two cut edges");

        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(bonds(&k2).unwrap().count(), 1);
    }

    #[test]
    fn enumerated_bonds_are_bonds_and_canonical() {
        for name in ["K4", "W4", "prism", "double_broom"] {
            let g = catalog(name).unwrap();
            for b in bonds(&g).unwrap() {
                assert!(b.side1().contains(0));
                assert!(is_bond(&g, b.cross_edges()), "{name}: {b:?}");
            }
        }
    }

    #[test]
    fn max_bond_size_examples() {
        assert_eq!(max_bond_size(&catalog("K4").unwrap()).unwrap(), 4);
        assert_eq!(max_bond_size(&catalog("P_4").unwrap()).unwrap(), 1);
        assert_eq!(max_bond_size(&catalog("K3").unwrap()).unwrap(), 2);
        let too_big = catalog("C_17").unwrap();
        assert!(matches!(
            max_bond_size(&too_big),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn constructed_bonds_pass_is_bond() {
        for name in ["P_5", "C_6", "K33", "W4", "prism", "petersen"] {
            let g = catalog(name).unwrap();
            let l = longest_path(&g);
            let b = midpoint_bond(&g, &l).unwrap();
            assert!(is_bond(&g, b.cross_edges()), "{name}");
            if l.vertices().len() == g.n() {
                let b = hamilton_split_bond(&g, &l).unwrap();
                assert!(is_bond(&g, b.cross_edges()), "{name}");
            }
        }
    }

    #[test]
    fn paths_avoiding_a_bond_stay_on_one_side() {
        for name in ["W4", "prism", "K33", "C_6"] {
            let g = catalog(name).unwrap();
            for b in bonds(&g).unwrap() {
                crate::path::for_each_long_path(&g, g.vertices(), 1, |path| {
                    let uses_cross = path.windows(2).any(|w| b.contains_edge(w[0], w[1]));
                    if !uses_cross {
                        let on1 = path.iter().all(|&v| b.side1().contains(v));
                        let on2 = path.iter().all(|&v| b.side2().contains(v));
                        assert!(on1 || on2, "{name}: {path:?} vs {b:?}");
                    }
                    ControlFlow::Continue(())
                });
            }
        }
    }
}
