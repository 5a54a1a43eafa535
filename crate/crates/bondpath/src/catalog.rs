//! Named graphs with fixed canonical labelings, used by the CLI and the
//! verification suites.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Looks up a catalog graph by name.
///
/// Fixed entries: `K3 K4 K5 K6 W4 K33 petersen prism double_broom H_graph`.
/// Parameterized entries: `C_n` (cycle), `P_n` (path), `star_n` (n leaves),
/// `spider_a_b_c` (three legs from a center).
///
/// Labelings:
/// - `K_n`: complete graph on `0..n`.
/// - `P_n`: path `0-1-...-(n-1)`.
/// - `C_n`: cycle `0-1-...-(n-1)-0`.
/// - `W4`: rim cycle `0-1-2-3-0`, hub `4` joined to the whole rim.
/// - `K33`: parts `{0,1,2}` and `{3,4,5}`.
/// - `petersen`: outer cycle `0..4`, inner pentagram `5..9`, spokes `i—i+5`.
/// - `prism`: triangles `0-1-2` and `3-4-5`, rungs `i—i+3`.
/// - `star_n`: center `0`, leaves `1..=n`.
/// - `double_broom`: leaves `0,1` on handle vertex `2`, handle edge `2-3`,
///   leaves `4,5` on `3`.
/// - `spider_a_b_c`: center `0`; legs numbered consecutively leg by leg.
/// - `H_graph`: path `0-1-2-3-4` and path `5-6-7` joined by the edge `2-6`.
pub fn catalog(name: &str) -> Result<Graph> {
    match name {
        "K3" => complete(3),
        "K4" => complete(4),
        "K5" => complete(5),
        "K6" => complete(6),
        "W4" => Graph::new(
            5,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 0),
                (4, 1),
                (4, 2),
                (4, 3),
            ],
        ),
        "K33" => Graph::new(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        ),
        "petersen" => Graph::new(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        ),
        "prism" => Graph::new(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        ),
        "double_broom" => Graph::new(6, &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]),
        "H_graph" => Graph::new(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (2, 6)],
        ),
        _ => {
            if let Some(n) = parse_param(name, "C_") {
                if n < 3 {
                    return Err(Error::UnknownCatalog(format!("{name} (cycles need n >= 3)")));
                }
                let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
                edges.push((0, n - 1));
                return Graph::new(n, &edges);
            }
            if let Some(n) = parse_param(name, "P_") {
                let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
                return Graph::new(n, &edges);
            }
            if let Some(leaves) = parse_param(name, "star_") {
                if leaves == 0 {
                    return Err(Error::UnknownCatalog(format!("{name} (stars need >= 1 leaf)")));
                }
                let edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
                return Graph::new(leaves + 1, &edges);
            }
            if let Some(rest) = name.strip_prefix("spider_") {
                let legs: Vec<usize> = rest
                    .split('_')
                    .map(|t| t.parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::UnknownCatalog(name.to_string()))?;
                if legs.len() != 3 || legs.iter().any(|&l| l == 0) {
                    return Err(Error::UnknownCatalog(format!(
                        "{name} (spiders take three positive leg lengths)"
                    )));
                }
                let mut edges = Vec::new();
                let mut next = 1;
                for &len in &legs {
                    let mut prev = 0;
                    for _ in 0..len {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                }
                return Graph::new(next, &edges);
            }
            Err(Error::UnknownCatalog(name.to_string()))
        }
    }
}

/// Every fixed catalog name plus small representatives of the parameterized
/// families; the corpus for the transversal-bound sweep.
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "K3",
        "K4",
        "K5",
        "K6",
        "C_6",
        "P_5",
        "W4",
        "K33",
        "petersen",
        "prism",
        "star_4",
        "double_broom",
        "spider_2_2_1",
        "H_graph",
    ]
}

fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

fn parse_param(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}
