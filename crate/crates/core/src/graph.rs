//! Undirected simple graphs with 1-indexed vertices, plus BFS distance
//! matrices, eccentricity and connectivity queries.
//!
//! Vertices are `1..=n` everywhere in the public API; adjacency lists are
//! kept sorted so iteration order is deterministic.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range 1..={n}")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least one vertex")]
    Empty,
    #[error("edge list parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Undirected simple connected-or-not graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges are deduplicated and stored
    /// symmetrically; self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w < 1 || w > n {
                    return Err(GraphError::IndexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbors of `v` (1-indexed; panics if `v` is out of range).
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True iff a BFS from vertex 1 reaches all `n` vertices.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::from([1usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if !seen[v - 1] {
                    seen[v - 1] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// All-pairs BFS hop distances; fails with `Disconnected` if any pair is
    /// unreachable.
    pub fn all_pairs_distances(&self) -> Result<DistanceMatrix, GraphError> {
        let n = self.n;
        let mut d = vec![u32::MAX; n * n];
        let mut queue = std::collections::VecDeque::new();
        for src in 1..=n {
            let row = &mut d[(src - 1) * n..src * n];
            row[src - 1] = 0;
            queue.clear();
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                let du = row[u - 1];
                for &v in self.neighbors(u) {
                    if row[v - 1] == u32::MAX {
                        row[v - 1] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
            if row.contains(&u32::MAX) {
                return Err(GraphError::Disconnected);
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    /// Parses the edge-list text format: first significant line `n m`, then
    /// `m` lines `u v`. Lines starting with `#` and blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace().map(|f| {
                f.parse::<usize>().map_err(|_| GraphError::Parse {
                    line: line_no,
                    msg: format!("expected integer, got `{f}`"),
                })
            });
            let mut next = |what: &str| {
                fields.next().unwrap_or(Err(GraphError::Parse {
                    line: line_no,
                    msg: format!("missing {what}"),
                }))
            };
            match header {
                None => {
                    let n = next("vertex count")?;
                    let m = next("edge count")?;
                    header = Some((n, m));
                }
                Some((_, m)) => {
                    if edges.len() == m {
                        return Err(GraphError::Parse {
                            line: line_no,
                            msg: format!("more than {m} edge lines"),
                        });
                    }
                    let u = next("edge endpoint")?;
                    let v = next("edge endpoint")?;
                    edges.push((u, v));
                }
            }
            if fields.next().is_some() {
                return Err(GraphError::Parse {
                    line: line_no,
                    msg: "trailing fields".into(),
                });
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse {
            line: last_line,
            msg: "missing `n m` header line".into(),
        })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: last_line,
                msg: format!("expected {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Canonical edge-list text: `n m` then sorted `u v` lines.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// All-pairs shortest-path hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Hop distance between `u` and `v` (1-indexed).
    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.d[(u - 1) * self.n + (v - 1)]
    }

    /// Distance row of `v` as a slice indexed by `target - 1`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u32] {
        &self.d[(v - 1) * self.n..v * self.n]
    }

    /// Maximum distance from `v` to any vertex.
    pub fn eccentricity(&self, v: usize) -> u32 {
        *self.row(v).iter().max().expect("n >= 1")
    }

    /// All vertices at distance exactly `e(v)` from `v`, ascending.
    pub fn eccentric_vertices(&self, v: usize) -> Vec<usize> {
        let e = self.eccentricity(v);
        self.row(v)
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == e)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn diameter(&self) -> u32 {
        (1..=self.n)
            .map(|v| self.eccentricity(v))
            .max()
            .expect("n >= 1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    #[test]
    fn path_adjacency_is_sorted_and_symmetric() {
        let g = Graph::from_edge_list(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(g.neighbors(2), &[1, 3]);
        assert_eq!(g.neighbors(1), &[2]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn duplicate_and_reversed_edges_collapse() {
        let g = Graph::from_edge_list(2, &[(1, 2), (2, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn out_of_range_vertex_is_rejected() {
        assert_eq!(
            Graph::from_edge_list(4, &[(1, 5)]),
            Err(GraphError::IndexOutOfRange { vertex: 5, n: 4 })
        );
    }

    #[test]
    fn self_loop_is_rejected() {
        assert_eq!(
            Graph::from_edge_list(3, &[(2, 2)]),
            Err(GraphError::SelfLoop(2))
        );
    }

    #[test]
    fn zero_vertices_is_rejected() {
        assert_eq!(Graph::from_edge_list(0, &[]), Err(GraphError::Empty));
    }

    #[test]
    fn cycle_distances() {
        let dm = cycle(5).unwrap().all_pairs_distances().unwrap();
        assert_eq!(dm.dist(1, 3), 2);
        assert_eq!(dm.dist(1, 4), 2);
        assert_eq!(dm.dist(2, 2), 0);
    }

    #[test]
    fn path_distances() {
        let dm = path(4).unwrap().all_pairs_distances().unwrap();
        assert_eq!(dm.dist(1, 4), 3);
        assert_eq!(dm.dist(4, 1), 3);
    }

    #[test]
    fn disconnected_pairs_error() {
        let g = Graph::from_edge_list(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(g.all_pairs_distances(), Err(GraphError::Disconnected));
        assert!(!g.is_connected());
    }

    #[test]
    fn connectivity_cases() {
        assert!(cycle(5).unwrap().is_connected());
        assert!(!Graph::from_edge_list(3, &[(1, 2)]).unwrap().is_connected());
        assert!(Graph::from_edge_list(1, &[]).unwrap().is_connected());
    }

    #[test]
    fn eccentricities() {
        let c5 = cycle(5).unwrap().all_pairs_distances().unwrap();
        for v in 1..=5 {
            assert_eq!(c5.eccentricity(v), 2);
        }
        let p4 = path(4).unwrap().all_pairs_distances().unwrap();
        assert_eq!(p4.eccentricity(1), 3);
        let k4 = complete(4).unwrap().all_pairs_distances().unwrap();
        assert_eq!(k4.eccentricity(3), 1);
    }

    #[test]
    fn eccentric_vertex_sets() {
        let c4 = cycle(4).unwrap().all_pairs_distances().unwrap();
        assert_eq!(c4.eccentric_vertices(1), vec![3]);
        let p3 = path(3).unwrap().all_pairs_distances().unwrap();
        assert_eq!(p3.eccentric_vertices(2), vec![1, 3]);
    }

    #[test]
    fn degrees() {
        let p3 = path(3).unwrap();
        assert_eq!(p3.max_degree(), 2);
        assert_eq!(p3.min_degree(), 1);
    }

    #[test]
    fn edge_list_round_trip_with_comments() {
        let text = "# sample graph\n\n4 3\n1 2\n# middle comment\n2 3\n3 4\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), vec![(1, 2), (2, 3), (3, 4)]);
        let rendered = g.to_edge_list();
        assert_eq!(rendered, "4 3\n1 2\n2 3\n3 4\n");
        assert_eq!(Graph::parse_edge_list(&rendered).unwrap(), g);
    }

    #[test]
    fn edge_list_parse_errors() {
        assert!(matches!(
            Graph::parse_edge_list(""),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("2 1\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("2 1\n1 2\n1 2\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("2 1\n1 x\n"),
            Err(GraphError::Parse { .. })
        ));
    }

    #[test]
    fn triangle_inequality_on_products() {
        // spot-check the metric axioms on a non-trivial graph
        let g =
            crate::families::build_family(&crate::families::FamilySpec::cylinder(3, 5).unwrap())
                .unwrap();
        let dm = g.all_pairs_distances().unwrap();
        let n = dm.vertex_count();
        for u in 1..=n {
            assert_eq!(dm.dist(u, u), 0);
            for v in 1..=n {
                assert_eq!(dm.dist(u, v), dm.dist(v, u));
                if u != v {
                    assert!(dm.dist(u, v) >= 1);
                }
                for w in 1..=n {
                    assert!(dm.dist(u, w) <= dm.dist(u, v) + dm.dist(v, w));
                }
            }
        }
    }
}
