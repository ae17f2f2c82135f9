//! Graph catalogs used by the verification suite: every connected labeled
//! graph on a few vertices, and reproducible random connected graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// All connected labeled simple graphs on exactly `n` vertices, `2 <= n <= 6`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((2..=6).contains(&n), "exhaustive enumeration supports 2..=6 vertices");
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (1u32..(1 << slots.len()))
        .filter_map(|mask| {
            let pairs: Vec<_> = slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            Graph::with_vertex_count(n, &pairs).ok()
        })
        .collect()
}

/// Every connected graph with `2..=max_vertices` vertices.
pub fn connected_graphs_up_to(max_vertices: usize) -> Vec<Graph> {
    (2..=max_vertices).flat_map(connected_graphs).collect()
}

/// A uniformly relabeled random recursive tree on `n` vertices, with edge
/// orientations drawn at random.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    Graph::with_vertex_count(n, &random_tree_edges(n, rng)).expect("a tree is connected and simple")
}

fn random_tree_edges<R: Rng>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    (1..n)
        .map(|i| {
            let parent = rng.random_range(0..i);
            orient(labels[parent], labels[i], rng)
        })
        .collect()
}

fn orient<R: Rng>(u: usize, v: usize, rng: &mut R) -> (usize, usize) {
    if rng.random_bool(0.5) {
        (u, v)
    } else {
        (v, u)
    }
}

/// A random connected graph: a random spanning tree plus each remaining
/// vertex pair with probability `extra_edge_probability`.
pub fn random_connected<R: Rng>(n: usize, extra_edge_probability: f64, rng: &mut R) -> Graph {
    let mut edges = random_tree_edges(n, rng);
    let mut present = vec![vec![false; n]; n];
    for &(u, v) in &edges {
        present[u][v] = true;
        present[v][u] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u][v] && rng.random_bool(extra_edge_probability) {
                edges.push(orient(u, v, rng));
            }
        }
    }
    Graph::with_vertex_count(n, &edges).expect("spanning tree keeps the graph connected")
}

/// `count` reproducible random connected graphs with vertex counts drawn
/// from `vertex_range` and edge densities spread over `[0, 0.7]`.
pub fn random_connected_graphs(
    count: usize,
    vertex_range: std::ops::RangeInclusive<usize>,
    seed: u64,
) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(vertex_range.clone());
            let p = rng.random_range(0.0..0.7);
            random_connected(n, p, &mut rng)
        })
        .collect()
}

/// The named graphs used throughout the checks.
pub fn named_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("K_{1,1}", Graph::complete_bipartite(1, 1).unwrap()),
        ("K_{2,3}", Graph::complete_bipartite(2, 3).unwrap()),
        ("K_{1,5}", Graph::star(5).unwrap()),
        ("K_{3,3}", Graph::complete_bipartite(3, 3).unwrap()),
        ("C_3", Graph::cycle(3).unwrap()),
        ("C_4", Graph::cycle(4).unwrap()),
        ("C_5", Graph::cycle(5).unwrap()),
        ("K_4", Graph::complete(4).unwrap()),
        ("K_5", Graph::complete(5).unwrap()),
        ("P_4", Graph::path(4).unwrap()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts_of_connected_labeled_graphs() {
        // OEIS A001187
        assert_eq!(connected_graphs(2).len(), 1);
        assert_eq!(connected_graphs(3).len(), 4);
        assert_eq!(connected_graphs(4).len(), 38);
        assert_eq!(connected_graphs(5).len(), 728);
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let a = random_connected_graphs(5, 6..=10, 7);
        let b = random_connected_graphs(5, 6..=10, 7);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| (6..=10).contains(&g.vertex_count())));
    }

    #[test]
    fn random_trees_have_betti_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..30 {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.edge_count(), n - 1);
            assert_eq!(t.betti_number(), 0);
            assert!(t.is_bipartite());
        }
    }
}
