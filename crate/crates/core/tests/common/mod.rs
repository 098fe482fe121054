#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semigraph::{QScalar, Semigraph, SymMatrix};

/// Corpus instance `seed`: order in `2..=15`, edge sizes up to `2..=6`,
/// between `ceil(n/2)` and `n + 2` requested edges.
pub fn corpus_instance(seed: u64) -> Semigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=15usize);
    let max_size = rng.gen_range(2..=6usize);
    let target = rng.gen_range(n.div_ceil(2)..=n + 2);
    semigraph::random_semigraph(n, target, max_size, seed)
}

pub fn corpus(count: u64) -> Vec<Semigraph> {
    (0..count).map(corpus_instance).collect()
}

/// The first `count` corpus instances (in seed order) that are connected and
/// have no isolated vertex, with their seeds.
pub fn connected_corpus(count: usize) -> Vec<(u64, Semigraph)> {
    (0..)
        .map(|s| (s, corpus_instance(s)))
        .filter(|(_, g)| g.is_connected() && !g.has_isolated_vertex() && g.edge_count() > 0)
        .take(count)
        .collect()
}

pub fn sg(n: usize, edges: &[&[usize]]) -> Semigraph {
    Semigraph::new(
        n,
        edges
            .iter()
            .map(|e| e.iter().map(|v| v - 1).collect())
            .collect(),
    )
    .unwrap()
}

/// Rows written in quarter units.
pub fn quarters(rows: &[&[i64]]) -> SymMatrix {
    SymMatrix::from_quarters(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

pub fn q(quarters: i64) -> QScalar {
    QScalar::from_quarters(quarters)
}

pub fn fig1() -> Semigraph {
    sg(
        10,
        &[&[1, 2, 3, 4, 5], &[1, 7, 8], &[2, 6, 8], &[1, 9], &[6, 7]],
    )
}

pub fn fig5() -> Semigraph {
    sg(
        9,
        &[&[1, 2, 3, 4, 5], &[1, 6, 8], &[2, 7, 8], &[6, 7], &[3, 9]],
    )
}

pub fn fig6() -> Semigraph {
    sg(6, &[&[1, 2, 3], &[1, 4, 5], &[2, 6, 5], &[4, 6]])
}

/// The printed 9x9 matrix of the five-edge example, in quarter units.
pub fn fig5_matrix() -> SymMatrix {
    quarters(&[
        &[0, 4, 8, 12, 16, 4, 0, 8, 0],
        &[4, 0, 4, 8, 12, 0, 2, 8, 0],
        &[8, 4, 0, 4, 8, 0, 0, 0, 2],
        &[12, 8, 4, 0, 4, 0, 0, 0, 0],
        &[16, 12, 8, 4, 0, 0, 0, 0, 0],
        &[4, 0, 0, 0, 0, 0, 1, 4, 0],
        &[0, 2, 0, 0, 0, 1, 0, 4, 0],
        &[8, 8, 0, 0, 0, 4, 4, 0, 0],
        &[0, 0, 2, 0, 0, 0, 0, 0, 0],
    ])
}

pub fn fig6_matrices() -> (SymMatrix, SymMatrix, SymMatrix) {
    let a = quarters(&[
        &[0, 4, 8, 4, 8, 0],
        &[4, 0, 4, 0, 8, 2],
        &[8, 4, 0, 0, 0, 0],
        &[4, 0, 0, 0, 4, 1],
        &[8, 8, 0, 4, 0, 4],
        &[0, 2, 0, 1, 4, 0],
    ]);
    let s = quarters(&[
        &[0, 4, 0, 4, 0, 0],
        &[4, 0, 4, 0, 0, 4],
        &[0, 4, 0, 0, 0, 0],
        &[4, 0, 0, 0, 4, 4],
        &[0, 0, 0, 4, 0, 4],
        &[0, 4, 0, 4, 4, 0],
    ]);
    let e = quarters(&[
        &[0, 0, 8, 0, 8, 0],
        &[0, 0, 0, 0, 8, -2],
        &[8, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, -3],
        &[8, 8, 0, 0, 0, 0],
        &[0, -2, 0, -3, 0, 0],
    ]);
    (a, s, e)
}

const PATH_BLOCK: [[i64; 5]; 5] = [
    [0, 4, 8, 12, 16],
    [4, 0, 4, 8, 12],
    [8, 4, 0, 4, 8],
    [12, 8, 4, 0, 4],
    [16, 12, 8, 4, 0],
];

/// 7x7 matrix sharing the path block `(1,2,3,4,5)`; `extra` lists further
/// symmetric entries `(i, j, quarters)` with 1-based indices.
fn with_path_block(extra: &[(usize, usize, i64)]) -> SymMatrix {
    let mut rows = vec![vec![0i64; 7]; 7];
    for i in 0..5 {
        rows[i][..5].copy_from_slice(&PATH_BLOCK[i]);
    }
    for &(i, j, v) in extra {
        rows[i - 1][j - 1] = v;
        rows[j - 1][i - 1] = v;
    }
    SymMatrix::from_quarters(&rows).unwrap()
}

/// Left matrix of the two-semigraph comparison: edges (6,3,7), (4,6), (4,7).
pub fn fig7_left() -> SymMatrix {
    with_path_block(&[(3, 6, 4), (3, 7, 4), (4, 6, 2), (4, 7, 2), (6, 7, 8)])
}

/// Right matrix: edges (6,4,7), (3,6), (3,7).
pub fn fig7_right() -> SymMatrix {
    with_path_block(&[(3, 6, 2), (3, 7, 2), (4, 6, 4), (4, 7, 4), (6, 7, 8)])
}

/// The common 0/1/2 matrix that does not tell the two apart.
pub fn fig7_naive() -> SymMatrix {
    with_path_block(&[(3, 6, 4), (3, 7, 4), (4, 6, 4), (4, 7, 4), (6, 7, 8)])
}

/// Vertex roles from the raw edge lists: `(appears inside an edge, appears at an end)`.
pub fn oracle_roles(g: &Semigraph) -> Vec<(bool, bool)> {
    let mut roles = vec![(false, false); g.vertex_count()];
    for e in g.edges() {
        let v = e.vertices();
        roles[v[0]].1 = true;
        roles[v[v.len() - 1]].1 = true;
        for &x in &v[1..v.len() - 1] {
            roles[x].0 = true;
        }
    }
    roles
}

/// Adjacency from the definition, in quarter units: positional distance
/// within an edge, except that a consecutive pair loses a factor `1/2` for
/// each of its vertices that ends this edge while sitting inside another.
pub fn oracle_adjacency(g: &Semigraph) -> Vec<Vec<i64>> {
    let n = g.vertex_count();
    let roles = oracle_roles(g);
    let mut a = vec![vec![0i64; n]; n];
    for e in g.edges() {
        let v = e.vertices();
        let last = v.len() - 1;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                let value = if j - i >= 2 {
                    4 * (j - i) as i64
                } else {
                    let mut q = 4;
                    for (pos, x) in [(i, v[i]), (j, v[j])] {
                        if (pos == 0 || pos == last) && roles[x].0 {
                            q /= 2;
                        }
                    }
                    q
                };
                a[v[i]][v[j]] = value;
                a[v[j]][v[i]] = value;
            }
        }
    }
    a
}

/// Checks a rejection witness against the matrix, without using the library's
/// recognizer. Returns a description of what was confirmed.
pub fn witness_holds(m: &SymMatrix, r: &semigraph::Rejection) -> bool {
    use semigraph::{RejectReason as R, Witness as W};
    let n = m.dim();
    match (&r.reason, &r.witness) {
        (R::IllegalEntry, W::Entry { row, col, value }) => {
            m.get(*row, *col) == *value && !value.is_adjacency_value()
        }
        (R::CoverageGap, W::ZeroRow { index }) => m.row(*index).iter().all(|x| x.is_zero()),
        (R::BrokenDistanceRun, W::Entry { row, col, value }) => {
            m.get(*row, *col) == *value && !brute_force_supported(m, *row, *col)
        }
        (R::CoverageGap, W::Entry { row, col, value }) => {
            m.get(*row, *col) == *value && !value.is_zero() && row != col
        }
        (
            R::OverlappingEdges,
            W::Overlap {
                pair,
                first,
                second,
            },
        ) => {
            first != second
                && first.contains(&pair.0)
                && first.contains(&pair.1)
                && second.contains(&pair.0)
                && second.contains(&pair.1)
                && is_band(m, first)
                && is_band(m, second)
        }
        (
            R::EndpointClassMismatch,
            W::Mismatch {
                row, col, input, ..
            },
        ) => *row < n && *col < n && m.get(*row, *col) == *input,
        _ => false,
    }
}

/// Whether the submatrix on `seq` has the shape of one edge's block.
pub fn is_band(m: &SymMatrix, seq: &[usize]) -> bool {
    let k = seq.len();
    if k < 2 {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let got = m.get(seq[i], seq[j]).quarters();
            let ok = if j - i >= 2 {
                got == 4 * (j - i) as i64
            } else if k == 2 {
                matches!(got, 1 | 2 | 4)
            } else if i == 0 || j == k - 1 {
                matches!(got, 2 | 4)
            } else {
                got == 4
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Exhaustive search for any band-shaped vertex sequence containing both
/// `u` and `v`, up to length `n`.
pub fn brute_force_supported(m: &SymMatrix, u: usize, v: usize) -> bool {
    fn grow(m: &SymMatrix, seq: &mut Vec<usize>, u: usize, v: usize) -> bool {
        if seq.len() >= 2 && seq.contains(&u) && seq.contains(&v) && is_band(m, seq) {
            return true;
        }
        for z in 0..m.dim() {
            if seq.contains(&z) {
                continue;
            }
            seq.push(z);
            let prefix_ok = seq.len() < 2 || is_band(m, seq);
            if prefix_ok && grow(m, seq, u, v) {
                return true;
            }
            seq.pop();
        }
        false
    }
    let mut seq = Vec::new();
    grow(m, &mut seq, u, v)
}
