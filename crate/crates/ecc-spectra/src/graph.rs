//! Simple undirected graphs, BFS distances, eccentricities, centers and
//! diametral structure.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A simple undirected graph on vertex labels `0..n`.
///
/// Adjacency lists are sorted and deduplicated; connectivity is computed once
/// at construction and cached. Instances are immutable afterwards and safe to
/// share between threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    num_edges: usize,
    connected: bool,
}

impl Graph {
    /// Builds a graph with `n` vertices from an edge list.
    ///
    /// Duplicate edges collapse silently; a self-loop or an endpoint `>= n`
    /// is an error.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let num_edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let mut g = Graph {
            adj,
            num_edges,
            connected: false,
        };
        g.connected = g.compute_connected();
        Ok(g)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.num_edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Connectivity, computed once at construction. The empty graph counts
    /// as disconnected: eccentricities are undefined on it.
    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// All edges as `(u, v)` pairs with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn compute_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    /// Subgraph induced by a sorted, duplicate-free vertex set. Vertex `i`
    /// of the result corresponds to `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        for &v in vertices {
            if v >= self.order() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.order(),
                });
            }
        }
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::build(vertices.len(), &edges)
    }

    /// Parses the edge-list text format: an optional header line `p <n>`,
    /// then one `u v` pair per line (0-based decimal labels). Lines starting
    /// with `#` and blank lines are ignored. Without a header the order is
    /// one more than the largest label.
    pub fn from_edge_list_str(text: &str) -> Result<Graph> {
        let mut header_n: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let first = tokens.next().expect("non-empty line");
            if first == "p" {
                if header_n.is_some() || !edges.is_empty() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "header `p <n>` must appear once, before any edge".into(),
                    });
                }
                let n = tokens
                    .next()
                    .ok_or_else(|| Error::Parse {
                        line: lineno,
                        msg: "header is missing the vertex count".into(),
                    })?
                    .parse::<usize>()
                    .map_err(|e| Error::Parse {
                        line: lineno,
                        msg: format!("bad vertex count: {e}"),
                    })?;
                if tokens.next().is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "unexpected trailing tokens after header".into(),
                    });
                }
                header_n = Some(n);
                continue;
            }
            let second = tokens.next().ok_or_else(|| Error::Parse {
                line: lineno,
                msg: "expected `u v`".into(),
            })?;
            if tokens.next().is_some() {
                // Extra columns would be edge weights; only unweighted
                // graphs are supported.
                return Err(Error::Parse {
                    line: lineno,
                    msg: "expected exactly two labels per edge line (weighted input rejected)"
                        .into(),
                });
            }
            let parse = |tok: &str| -> Result<usize> {
                tok.parse::<usize>().map_err(|e| Error::Parse {
                    line: lineno,
                    msg: format!("bad vertex label `{tok}`: {e}"),
                })
            };
            edges.push((parse(first)?, parse(second)?));
        }
        let n = header_n.unwrap_or_else(|| {
            edges
                .iter()
                .map(|&(u, v)| u.max(v) + 1)
                .max()
                .unwrap_or(0)
        });
        Graph::build(n, &edges)
    }

    /// Serializes to the edge-list text format, always with a `p <n>` header.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p {}", self.order());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Dense matrix of pairwise graph distances (edge counts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// BFS from every vertex. Fails on disconnected (or empty) input.
    pub fn all_pairs(g: &Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::GraphDisconnected);
        }
        let n = g.order();
        let mut d = vec![0u32; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            let mut seen = vec![false; n];
            seen[s] = true;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in g.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        row[v] = row[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// Eccentricities, radius, diameter and center in one pass.
    pub fn eccentricity_profile(&self) -> EccentricityProfile {
        let ecc: Vec<u32> = (0..self.n)
            .map(|u| (0..self.n).map(|v| self.get(u, v)).max().unwrap_or(0))
            .collect();
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        let center = ecc
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e == radius)
            .map(|(v, _)| v)
            .collect();
        EccentricityProfile {
            ecc,
            radius,
            diameter,
            center,
        }
    }

    /// All unordered pairs at distance exactly the diameter, sorted
    /// lexicographically.
    pub fn diametral_pairs(&self) -> Vec<(usize, usize)> {
        let diameter = (0..self.n * self.n).map(|i| self.d[i]).max().unwrap_or(0);
        let mut pairs = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.get(u, v) == diameter {
                    pairs.push((u, v));
                }
            }
        }
        pairs
    }

    /// True iff `v` lies on some shortest path between `x` and `y`.
    pub fn on_shortest_path(&self, x: usize, v: usize, y: usize) -> bool {
        self.get(x, v) + self.get(v, y) == self.get(x, y)
    }
}

/// Per-vertex eccentricities together with radius, diameter and center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccentricityProfile {
    ecc: Vec<u32>,
    radius: u32,
    diameter: u32,
    center: Vec<usize>,
}

impl EccentricityProfile {
    pub fn ecc(&self, v: usize) -> u32 {
        self.ecc[v]
    }

    pub fn eccentricities(&self) -> &[u32] {
        &self.ecc
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// Vertices of minimum eccentricity; nonempty for every connected graph.
    pub fn center(&self) -> &[usize] {
        &self.center
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::build(n, &edges).unwrap()
    }

    pub(crate) fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn builds_k2() {
        let g = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.size(), 1);
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_self_loop() {
        assert!(matches!(
            Graph::build(3, &[(0, 0)]),
            Err(Error::InvalidEdge(0))
        ));
    }

    #[test]
    fn rejects_out_of_range_endpoint() {
        assert!(matches!(
            Graph::build(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { vertex: 5, order: 2 })
        ));
    }

    #[test]
    fn collapses_duplicate_edges() {
        let g = Graph::build(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn p3_distances() {
        let d = DistanceMatrix::all_pairs(&path(3)).unwrap();
        let rows: Vec<Vec<u32>> = (0..3)
            .map(|u| (0..3).map(|v| d.get(u, v)).collect())
            .collect();
        assert_eq!(rows, vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]);
    }

    #[test]
    fn k5_distances_are_one_off_diagonal() {
        let d = DistanceMatrix::all_pairs(&complete(5)).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
    }

    #[test]
    fn disconnected_input_is_an_error() {
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert!(matches!(
            DistanceMatrix::all_pairs(&g),
            Err(Error::GraphDisconnected)
        ));
    }

    #[test]
    fn complete_graph_center_is_everything() {
        let d = DistanceMatrix::all_pairs(&complete(6)).unwrap();
        let p = d.eccentricity_profile();
        assert_eq!(p.radius(), 1);
        assert_eq!(p.diameter(), 1);
        assert_eq!(p.center(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn p3_diametral_pairs_and_midpoints() {
        let d = DistanceMatrix::all_pairs(&path(3)).unwrap();
        assert_eq!(d.diametral_pairs(), vec![(0, 2)]);
        assert!(d.on_shortest_path(0, 1, 2));
        assert!(!d.on_shortest_path(0, 2, 1));
    }

    #[test]
    fn complete_graph_diametral_pairs_are_all_pairs() {
        let d = DistanceMatrix::all_pairs(&complete(4)).unwrap();
        assert_eq!(d.diametral_pairs().len(), 6);
    }

    #[test]
    fn parses_edge_list_with_header_and_comments() {
        let text = "# a triangle with an isolated extra vertex\np 4\n0 1\n1 2\n0 2\n";
        let g = Graph::from_edge_list_str(text).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 3);
        assert!(!g.is_connected());
    }

    #[test]
    fn parses_edge_list_without_header() {
        let g = Graph::from_edge_list_str("0 1\n1 2\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn rejects_weighted_edge_lines() {
        let err = Graph::from_edge_list_str("0 1 7\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn edge_list_round_trips() {
        let g = path(5);
        let back = Graph::from_edge_list_str(&g.to_edge_list_string()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn radius_diameter_bounds_hold_on_paths() {
        for n in 1..=9 {
            let d = DistanceMatrix::all_pairs(&path(n)).unwrap();
            let p = d.eccentricity_profile();
            assert!(p.radius() <= p.diameter());
            assert!(p.diameter() <= 2 * p.radius());
            assert!(!p.center().is_empty());
        }
    }
}
