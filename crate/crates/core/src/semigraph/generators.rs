use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Edge, Semigraph};

/// Star semigraph of type I on `n + 3` vertices: the three-vertex edge
/// `(v2, v1, v3)` plus `n` two-vertex edges `(v1, vj)` for `j = 4..n+3`.
pub fn star_type1(n: usize) -> Semigraph {
    let mut edges = vec![Edge::canonical(vec![1, 0, 2])];
    edges.extend((3..n + 3).map(|j| Edge::canonical(vec![0, j])));
    Semigraph::from_canonical(n + 3, edges)
}

/// Three-uniform star semigraph of type II on `2n + 1` vertices: edges
/// `(v_{2k-1}, v0, v_{2k})` for `k = 1..n`. Index `i` is the figure's `v_i`.
///
/// # Panics
///
/// If `n == 0`.
pub fn star_type2(n: usize) -> Semigraph {
    assert!(n >= 1, "star_type2 needs at least one edge");
    let edges = (1..=n)
        .map(|k| Edge::canonical(vec![2 * k - 1, 0, 2 * k]))
        .collect();
    Semigraph::from_canonical(2 * n + 1, edges)
}

/// A seeded random semigraph on `n` vertices.
///
/// Candidate edges are drawn as ordered vertex tuples of uniform size in
/// `2..=min(max_edge_size, n)` from a ChaCha8 stream seeded with `seed`;
/// a candidate sharing a vertex pair with an accepted edge is rejected.
/// Sampling stops after `target_edges` acceptances or `64 * target_edges + 64`
/// draws, so fewer edges than requested may come back.
///
/// # Panics
///
/// If `n < 2` or `max_edge_size < 2`.
pub fn random_semigraph(
    n: usize,
    target_edges: usize,
    max_edge_size: usize,
    seed: u64,
) -> Semigraph {
    assert!(n >= 2, "random_semigraph needs at least two vertices");
    assert!(max_edge_size >= 2, "edges have at least two vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_size = max_edge_size.min(n);
    let mut pool: Vec<usize> = (0..n).collect();
    let mut used_pairs: HashSet<(usize, usize)> = HashSet::new();
    let mut edges = Vec::with_capacity(target_edges);
    let max_draws = 64 * target_edges + 64;
    for _ in 0..max_draws {
        if edges.len() == target_edges {
            break;
        }
        let size = rng.gen_range(2..=max_size);
        let (chosen, _) = pool.partial_shuffle(&mut rng, size);
        let candidate = chosen.to_vec();
        let pairs: Vec<(usize, usize)> = candidate
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| {
                candidate[i + 1..]
                    .iter()
                    .map(move |&b| (a.min(b), a.max(b)))
            })
            .collect();
        if pairs.iter().any(|p| used_pairs.contains(p)) {
            continue;
        }
        used_pairs.extend(pairs);
        edges.push(Edge::canonical(candidate));
    }
    Semigraph::from_canonical(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigraph::{EdgeClass, EdgeCounts, VertexClass, VertexId};

    #[test]
    fn star1_shapes() {
        let s0 = star_type1(0);
        assert_eq!(s0.vertex_count(), 3);
        assert_eq!(s0.edge_classes(), vec![EdgeClass::Full]);

        let s3 = star_type1(3);
        assert_eq!(s3.vertex_count(), 6);
        assert_eq!(s3.edge_count(), 4);
        assert_eq!(s3.classify_vertex(VertexId(0)), VertexClass::MiddleEnd);
        assert_eq!(
            s3.edge_counts(),
            EdgeCounts {
                m1: 1,
                m2: 0,
                m3: 3,
                m4: 0
            }
        );
        assert!(s3.is_connected());
    }

    #[test]
    fn star2_shapes() {
        let s1 = star_type2(1);
        assert_eq!(s1.vertex_count(), 3);
        assert_eq!(s1.edge_classes(), vec![EdgeClass::Full]);

        let s4 = star_type2(4);
        assert_eq!(s4.vertex_count(), 9);
        assert_eq!(
            s4.edge_counts(),
            EdgeCounts {
                m1: 4,
                m2: 0,
                m3: 0,
                m4: 0
            }
        );
        assert_eq!(s4.classify_vertex(VertexId(0)), VertexClass::PureMiddle);
        assert_eq!(s4.rank().unwrap(), 3);
        assert!(s4.is_connected());
    }

    #[test]
    fn random_single_pair() {
        let g = random_semigraph(5, 1, 2, 7);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges()[0].len(), 2);
    }

    #[test]
    fn random_is_valid_and_deterministic() {
        let g = random_semigraph(12, 5, 5, 42);
        let again = random_semigraph(12, 5, 5, 42);
        assert_eq!(g, again);
        let raw: Vec<Vec<usize>> = g.edges().iter().map(|e| e.vertices().to_vec()).collect();
        assert_eq!(Semigraph::new(12, raw).unwrap(), g);
        assert!(g.edge_count() <= 5);
    }

    #[test]
    fn random_can_fall_short() {
        // Only one pair exists, so a second edge is impossible.
        let g = random_semigraph(2, 3, 2, 1);
        assert_eq!(g.edge_count(), 1);
    }
}
