//! Executable forms of the splice machinery behind the bond certificates:
//! parallel/crossing classification of connector pairs, the single and double
//! path splices with their exact length identities, the disjoint-long-path
//! intersection check, the tripod cut-vertex check, and Erdős–Szekeres
//! monotone subsequences.
//!
//! The splice outputs are revalidated as genuine paths (distinct vertices,
//! consecutive adjacency); silent walk/path confusion is the classic bug in
//! this machinery. Checks whose failure the underlying theorems rule out
//! return falsification errors, never quiet booleans.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::path::{longest_path_len, Path};

/// How two vertex-disjoint connectors between two rooted paths relate, by the
/// sign of `(i-p)(j-q)` on their endpoint indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectorClass {
    Parallel,
    Crossing,
}

/// Classifies a connector pair from its four endpoint indices. Equal indices
/// on either path are rejected (vertex-disjoint connectors cannot share an
/// endpoint).
pub fn classify_connectors(i: usize, p: usize, j: usize, q: usize) -> Result<ConnectorClass> {
    if i == p || j == q {
        return Err(Error::Precondition(
            "connector endpoints must be distinct on each path".into(),
        ));
    }
    let sign = (i as i64 - p as i64) * (j as i64 - q as i64);
    Ok(if sign > 0 {
        ConnectorClass::Parallel
    } else {
        ConnectorClass::Crossing
    })
}

/// Three paths sharing exactly one endpoint.
#[derive(Debug, Clone)]
pub struct Tripod {
    shared: usize,
    legs: [Path; 3],
}

impl Tripod {
    /// Validates that all three legs are paths of `g` starting at the same
    /// vertex and that any two of them intersect only there.
    pub fn new(g: &Graph, leg1: Path, leg2: Path, leg3: Path) -> Result<Tripod> {
        let legs = [leg1, leg2, leg3];
        for leg in &legs {
            Path::new(g, leg.vertices().to_vec())?;
            if leg.len() < 1 {
                return Err(Error::Precondition("tripod legs need at least one edge".into()));
            }
        }
        let u = legs[0].first();
        for leg in &legs[1..] {
            if leg.first() != u {
                return Err(Error::Precondition(
                    "tripod legs must start at the shared vertex".into(),
                ));
            }
        }
        for a in 0..3 {
            for b in a + 1..3 {
                let shared = legs[a].vertex_set().intersection(legs[b].vertex_set());
                if shared != VertexSet::singleton(u) {
                    return Err(Error::Precondition(format!(
                        "legs {a} and {b} intersect at {shared}, not only at the shared vertex"
                    )));
                }
            }
        }
        Ok(Tripod { shared: u, legs })
    }

    pub fn shared(&self) -> usize {
        self.shared
    }

    pub fn legs(&self) -> &[Path; 3] {
        &self.legs
    }

    fn all_vertices(&self) -> VertexSet {
        self.legs
            .iter()
            .fold(VertexSet::EMPTY, |acc, l| acc.union(l.vertex_set()))
    }
}

/// Where a connector attaches: index on leg 1, index on leg 2.
struct Attachment {
    i: usize,
    j: usize,
}

/// Validates a connector: a path from `V(P1) ∖ {u}` to `V(P2) ∖ {u}` whose
/// internal vertices avoid the whole tripod.
fn validate_connector(g: &Graph, t: &Tripod, r: &Path) -> Result<Attachment> {
    Path::new(g, r.vertices().to_vec())?;
    let p1 = &t.legs[0];
    let p2 = &t.legs[1];
    let i = p1
        .index_of(r.first())
        .ok_or_else(|| Error::Precondition("connector must start on leg 1".into()))?;
    let j = p2
        .index_of(r.last())
        .ok_or_else(|| Error::Precondition("connector must end on leg 2".into()))?;
    if i == 0 || j == 0 {
        return Err(Error::Precondition(
            "connector endpoints must avoid the shared vertex".into(),
        ));
    }
    let interior: VertexSet = r.vertices()[1..r.vertices().len() - 1]
        .iter()
        .copied()
        .collect();
    if !interior.intersection(t.all_vertices()).is_empty() {
        return Err(Error::Precondition(
            "connector interior must avoid all three legs".into(),
        ));
    }
    Ok(Attachment { i, j })
}

/// Reversed leg 3 ending at the shared vertex: the common prefix of every
/// spliced path.
fn stem(t: &Tripod) -> Vec<usize> {
    let mut v = t.legs[2].vertices().to_vec();
    v.reverse();
    v
}

fn extend_skip_first(out: &mut Vec<usize>, seq: &[usize]) {
    out.extend_from_slice(&seq[1..]);
}

fn extend_reversed_skip_first(out: &mut Vec<usize>, seq: &[usize]) {
    out.extend(seq.iter().rev().skip(1));
}

/// Splices one connector `R = x_i … y_j` through the tripod, producing the
/// two paths `P~ = P3 P1[u,x_i] R P2[y_j, end]` and
/// `Q~ = P3 P2[u,y_j] R P1[x_i, end]` whose lengths sum to exactly
/// `2ℓ(P3) + ℓ(P1) + ℓ(P2) + 2ℓ(R)`.
pub fn splice_single(g: &Graph, t: &Tripod, r: &Path) -> Result<(Path, Path)> {
    let at = validate_connector(g, t, r)?;
    let p1 = t.legs[0].vertices();
    let p2 = t.legs[1].vertices();

    let mut a = stem(t);
    a.extend_from_slice(&p1[1..=at.i]);
    extend_skip_first(&mut a, r.vertices());
    a.extend_from_slice(&p2[at.j + 1..]);

    let mut b = stem(t);
    b.extend_from_slice(&p2[1..=at.j]);
    extend_reversed_skip_first(&mut b, r.vertices());
    b.extend_from_slice(&p1[at.i + 1..]);

    Ok((Path::new(g, a)?, Path::new(g, b)?))
}

/// Splices two vertex-disjoint connectors through the tripod, picking the
/// parallel or crossing configuration from the endpoint indices. The two
/// output lengths sum to `2ℓ(P3) + ℓ(P1) + ℓ(P2) + 2ℓ(R1) + 2ℓ(R2)` in both
/// configurations.
pub fn splice_double(g: &Graph, t: &Tripod, r1: &Path, r2: &Path) -> Result<(Path, Path)> {
    if !r1.vertex_set().intersection(r2.vertex_set()).is_empty() {
        return Err(Error::Precondition("connectors must be vertex-disjoint".into()));
    }
    let a1 = validate_connector(g, t, r1)?;
    let a2 = validate_connector(g, t, r2)?;
    // orient so the first connector attaches lower on leg 1
    let (r1, r2, a1, a2) = if a1.i < a2.i {
        (r1, r2, a1, a2)
    } else {
        (r2, r1, a2, a1)
    };
    let class = classify_connectors(a1.i, a2.i, a1.j, a2.j)?;
    let p1 = t.legs[0].vertices();
    let p2 = t.legs[1].vertices();

    let (a, b) = match class {
        ConnectorClass::Parallel => {
            // i < p, j < q
            let mut a = stem(t);
            a.extend_from_slice(&p1[1..=a1.i]);
            extend_skip_first(&mut a, r1.vertices());
            a.extend_from_slice(&p2[a1.j + 1..=a2.j]);
            extend_reversed_skip_first(&mut a, r2.vertices());
            a.extend_from_slice(&p1[a2.i + 1..]);

            let mut b = stem(t);
            b.extend_from_slice(&p2[1..=a1.j]);
            extend_reversed_skip_first(&mut b, r1.vertices());
            b.extend_from_slice(&p1[a1.i + 1..=a2.i]);
            extend_skip_first(&mut b, r2.vertices());
            b.extend_from_slice(&p2[a2.j + 1..]);
            (a, b)
        }
        ConnectorClass::Crossing => {
            // i < p, j > q
            let mut a = stem(t);
            a.extend_from_slice(&p1[1..=a1.i]);
            extend_skip_first(&mut a, r1.vertices());
            a.extend(p2[a2.j..a1.j].iter().rev());
            extend_reversed_skip_first(&mut a, r2.vertices());
            a.extend_from_slice(&p1[a2.i + 1..]);

            let mut b = stem(t);
            b.extend_from_slice(&p2[1..=a2.j]);
            extend_reversed_skip_first(&mut b, r2.vertices());
            b.extend(p1[a1.i..a2.i].iter().rev());
            extend_skip_first(&mut b, r1.vertices());
            b.extend_from_slice(&p2[a1.j + 1..]);
            (a, b)
        }
    };
    Ok((Path::new(g, a)?, Path::new(g, b)?))
}

/// Outcome of the disjoint-long-path check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathIntersection {
    /// The two paths share at least one vertex.
    SharesVertex,
    /// The exceptional structure: disjoint paths forced `p` even, the short
    /// path two shorter, and this middle-to-middle cut edge.
    SeparatingEdge { u: usize, v: usize },
}

/// Checks that a longest path `L` (length `p >= 2`) and a path of length at
/// least `p-2` intersect — or, failing that, validates the only structure in
/// which they may be disjoint: `p` even, the other path of length exactly
/// `p-2`, and the edge joining the two midpoints a cut edge. Any other
/// disjoint configuration is a falsification witness and aborts loudly.
///
/// With `verify_uniqueness` set, additionally checks that the middle edge is
/// the only connection: removing it must separate `V(L)` from `V(P)`.
pub fn check_path_intersection(
    g: &Graph,
    l: &Path,
    other: &Path,
    verify_uniqueness: bool,
) -> Result<PathIntersection> {
    Path::new(g, l.vertices().to_vec())?;
    Path::new(g, other.vertices().to_vec())?;
    let p = l.len();
    if p < 2 {
        return Err(Error::Precondition("the longest path must have length >= 2".into()));
    }
    if other.len() + 2 < p {
        return Err(Error::Precondition(format!(
            "the other path must have length >= {}, got {}",
            p - 2,
            other.len()
        )));
    }
    if !l.vertex_set().intersection(other.vertex_set()).is_empty() {
        return Ok(PathIntersection::SharesVertex);
    }
    if p % 2 == 1 {
        return Err(Error::Falsification(format!(
            "paths {l} and {other} are disjoint although the longest-path length {p} is odd"
        )));
    }
    if other.len() != p - 2 {
        return Err(Error::Falsification(format!(
            "paths {l} and {other} are disjoint although the second has length {} > {}",
            other.len(),
            p - 2
        )));
    }
    let u = l.vertices()[p / 2];
    let v = other.vertices()[other.len() / 2];
    if !g.has_edge(u, v) {
        return Err(Error::Falsification(format!(
            "disjoint paths {l} and {other} lack the middle edge {u}-{v}"
        )));
    }
    if g.without_edge(u, v).is_connected() {
        return Err(Error::Falsification(format!(
            "middle edge {u}-{v} joining disjoint paths {l} and {other} is not a cut edge"
        )));
    }
    if verify_uniqueness {
        let comp_u = g.without_edge(u, v).component_of(u, g.vertices());
        if !l.vertex_set().is_subset_of(comp_u)
            || !other.vertex_set().intersection(comp_u).is_empty()
        {
            return Err(Error::Falsification(format!(
                "removing {u}-{v} does not separate {l} from {other}: the connector is not unique"
            )));
        }
    }
    Ok(PathIntersection::SeparatingEdge { u, v })
}

/// Checks the tripod cut-vertex guarantee: legs of lengths `⌈p/2⌉`,
/// `p - ⌈p/2⌉` and at least `⌈p/2⌉ - 1` (where `p` is the longest-path length
/// of the graph) force the shared vertex to be a cut vertex. A shared vertex
/// that is not one falsifies the guarantee and aborts loudly.
pub fn tripod_cut_vertex_check(g: &Graph, t: &Tripod) -> Result<()> {
    let p = longest_path_len(g);
    let r = p.div_ceil(2);
    let lens = [t.legs[0].len(), t.legs[1].len(), t.legs[2].len()];
    if lens[0] != r || lens[1] != p - r || lens[2] + 1 < r {
        return Err(Error::Precondition(format!(
            "leg lengths {lens:?} do not match ({r}, {}, >= {})",
            p - r,
            r.saturating_sub(1)
        )));
    }
    let cuts = g.cut_vertices()?;
    if cuts.contains(t.shared) {
        Ok(())
    } else {
        Err(Error::Falsification(format!(
            "shared tripod vertex {} is not a cut vertex (cut vertices: {cuts})",
            t.shared
        )))
    }
}

/// Finds a monotone (non-decreasing or non-increasing) subsequence of length
/// `n >= 2`, preferring non-decreasing and, within a direction, the
/// lexicographically least index list. Guaranteed to succeed whenever the
/// input has at least `(n-1)² + 1` entries (Erdős–Szekeres); returns `None`
/// when no such subsequence exists.
pub fn monotone_subsequence(seq: &[f64], n: usize) -> Result<Option<Vec<usize>>> {
    if n < 2 {
        return Err(Error::Precondition("subsequence length must be at least 2".into()));
    }
    if let Some(w) = directed_subsequence(seq, n, |a, b| a <= b) {
        return Ok(Some(w));
    }
    Ok(directed_subsequence(seq, n, |a, b| a >= b))
}

/// Lexicographically least index list of a length-`n` subsequence monotone
/// under `ok(prev, next)`, via the longest-chain-from-here DP.
fn directed_subsequence(seq: &[f64], n: usize, ok: impl Fn(f64, f64) -> bool) -> Option<Vec<usize>> {
    let len = seq.len();
    let mut from_here = vec![1usize; len];
    for i in (0..len).rev() {
        for j in i + 1..len {
            if ok(seq[i], seq[j]) && from_here[j] + 1 > from_here[i] {
                from_here[i] = from_here[j] + 1;
            }
        }
    }
    if from_here.iter().max().copied().unwrap_or(0) < n {
        return None;
    }
    let mut witness = Vec::with_capacity(n);
    let mut start = 0usize;
    let mut remaining = n;
    let mut prev: Option<f64> = None;
    while remaining > 0 {
        let idx = (start..len).find(|&i| {
            from_here[i] >= remaining && prev.is_none_or(|p| ok(p, seq[i]))
        })?;
        witness.push(idx);
        prev = Some(seq[idx]);
        start = idx + 1;
        remaining -= 1;
    }
    Some(witness)
}
