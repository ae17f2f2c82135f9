//! Finite simple connected graphs and their integer invariants.
//!
//! Vertices are dense 0-based indices. Each edge keeps the orientation it was
//! given: for the stored pair `(u, v)` the edge coordinate runs from `0` at
//! `u` to `L` at `v`. No spectral quantity depends on that orientation, but
//! the incidence matrices built from it do.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from oriented edge pairs. The vertex count is one more
    /// than the largest index that appears.
    pub fn from_edge_list(pairs: &[(usize, usize)]) -> Result<Self> {
        let vertex_count = pairs
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .ok_or(Error::EmptyGraph)?;
        Self::with_vertex_count(vertex_count, pairs)
    }

    /// Builds a graph on exactly `vertex_count` vertices. Unused indices make
    /// the graph disconnected and are rejected.
    pub fn with_vertex_count(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if pairs.is_empty() || vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = HashSet::with_capacity(pairs.len());
        let mut degrees = vec![0usize; vertex_count];
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (index, &(u, v)) in pairs.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u, edge: index });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge { u, v, edge: index });
            }
            degrees[u] += 1;
            degrees[v] += 1;
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let graph = Graph {
            vertex_count,
            edges: pairs.to_vec(),
            degrees,
            adjacency,
        };
        if let Some(vertex) = graph.first_unreachable_vertex() {
            return Err(Error::Disconnected { vertex });
        }
        Ok(graph)
    }

    /// Parses the whitespace-separated edge-list text format. Lines starting
    /// with `#` and blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| Error::Parse { line: lineno + 1, message };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(parse_err(format!("expected two vertex indices, found {}", fields.len())));
            }
            let mut ends = [0usize; 2];
            for (slot, field) in ends.iter_mut().zip(&fields) {
                *slot = field
                    .parse()
                    .map_err(|_| parse_err(format!("invalid vertex index {field:?}")))?;
            }
            pairs.push((ends[0], ends[1]));
        }
        Self::from_edge_list(&pairs)
    }

    /// `K_{m,p}`: vertices `0..m` form the first part, `m..m+p` the second.
    /// Edges are oriented from the first part to the second.
    pub fn complete_bipartite(m: usize, p: usize) -> Result<Self> {
        if m == 0 || p == 0 {
            return Err(Error::DomainError(format!(
                "complete bipartite graph needs positive part sizes, got ({m}, {p})"
            )));
        }
        let pairs: Vec<_> = (0..m)
            .flat_map(|u| (m..m + p).map(move |w| (u, w)))
            .collect();
        Self::with_vertex_count(m + p, &pairs)
    }

    /// Star with `edge_count` leaves around center vertex `0`.
    pub fn star(edge_count: usize) -> Result<Self> {
        Self::complete_bipartite(1, edge_count)
    }

    /// Cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::DomainError(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let pairs: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::with_vertex_count(n, &pairs)
    }

    /// Path with `n >= 2` vertices.
    pub fn path(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DomainError(format!("path needs at least 2 vertices, got {n}")));
        }
        let pairs: Vec<_> = (0..n - 1).map(|v| (v, v + 1)).collect();
        Self::with_vertex_count(n, &pairs)
    }

    /// Complete graph `K_n`, `n >= 2`.
    pub fn complete(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DomainError(format!("complete graph needs at least 2 vertices, got {n}")));
        }
        let pairs: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::with_vertex_count(n, &pairs)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// First Betti number `E - V + 1`.
    pub fn betti_number(&self) -> usize {
        self.edge_count() + 1 - self.vertex_count
    }

    /// Breadth-first 2-coloring.
    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A proper 2-coloring (`false`/`true` per vertex), if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.vertex_count];
        let mut queue = VecDeque::new();
        for start in 0..self.vertex_count {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                let cv = color[v]?;
                for &w in &self.adjacency[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        color.into_iter().collect()
    }

    fn first_unreachable_vertex(&self) -> Option<usize> {
        let mut visited = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0usize]);
        visited[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !visited[w] {
                    visited[w] = true;
                    queue.push_back(w);
                }
            }
        }
        visited.iter().position(|&seen| !seen)
    }
}

impl fmt::Display for Graph {
    /// Writes the graph in the edge-list text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# V = {}, E = {}", self.vertex_count, self.edges.len())?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::from_edge_list(&[(0, 1)]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_bipartite());
        assert_eq!(g.betti_number(), 0);
    }

    #[test]
    fn k23_from_pairs() {
        let g = Graph::from_edge_list(&[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g, Graph::complete_bipartite(2, 3).unwrap());
        assert_eq!(g.betti_number(), 2);
        assert!(g.is_bipartite());
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            Graph::from_edge_list(&[(0, 1), (0, 1)]),
            Err(Error::DuplicateEdge { u: 0, v: 1, edge: 1 })
        );
        assert_eq!(
            Graph::from_edge_list(&[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 1, v: 0, edge: 1 })
        );
        assert_eq!(
            Graph::from_edge_list(&[(0, 1), (2, 2)]),
            Err(Error::SelfLoop { vertex: 2, edge: 1 })
        );
        assert_eq!(Graph::from_edge_list(&[]), Err(Error::EmptyGraph));
        assert_eq!(
            Graph::from_edge_list(&[(0, 1), (2, 3)]),
            Err(Error::Disconnected { vertex: 2 })
        );
        assert_eq!(
            Graph::with_vertex_count(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { vertex: 5, vertex_count: 2 })
        );
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(Graph::star(5).unwrap().betti_number(), 0);
        assert_eq!(Graph::cycle(3).unwrap().betti_number(), 1);
        assert_eq!(Graph::complete(4).unwrap().betti_number(), 3);
    }

    #[test]
    fn bipartiteness() {
        assert!(!Graph::cycle(3).unwrap().is_bipartite());
        assert!(Graph::cycle(4).unwrap().is_bipartite());
        assert!(!Graph::cycle(7).unwrap().is_bipartite());
        assert!(Graph::path(6).unwrap().is_bipartite());
        assert!(!Graph::complete(4).unwrap().is_bipartite());
    }

    #[test]
    fn families() {
        let k15 = Graph::star(5).unwrap();
        assert_eq!((k15.vertex_count(), k15.edge_count()), (6, 5));
        assert_eq!(k15.degree(0), 5);
        assert!(k15.edges().iter().all(|&(u, _)| u == 0));

        let k11 = Graph::complete_bipartite(1, 1).unwrap();
        assert_eq!(k11.edges(), &[(0, 1)]);
        assert_eq!(Graph::star(1).unwrap(), k11);

        let p3 = Graph::star(2).unwrap();
        assert_eq!(p3.degrees(), &[2, 1, 1]);
        assert!(Graph::complete_bipartite(0, 3).is_err());
        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn edge_list_text_format() {
        let text = "# K_{2,3}\n0 2\n0 3\n\n0 4\n  1 2\n1 3\n1 4\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g, Graph::complete_bipartite(2, 3).unwrap());
        assert_eq!(Graph::parse_edge_list(&g.to_string()).unwrap(), g);

        match Graph::parse_edge_list("0 1\n1 x\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match Graph::parse_edge_list("0 1 2\n") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn handshake() {
        for g in [
            Graph::complete_bipartite(3, 4).unwrap(),
            Graph::complete(5).unwrap(),
            Graph::cycle(6).unwrap(),
        ] {
            assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        }
    }
}
