//! Recognizing semigraphical matrices and reconstructing the semigraph.
//!
//! Reconstruction runs in two stages. The tracing stage infers vertex
//! classes from local matrix evidence, then walks distance runs out of every
//! end vertex: `1, 2, ..., r` from a pure end, `1/2, 2, ..., r` from a middle
//! end, and lone `1/4` entries as quarter edges. Every edge is met once from
//! each end and deduplicated. Tracing succeeds when the traced edges claim
//! every nonzero pair exactly once and rebuild the input matrix.
//!
//! When tracing fails, an exact-cover search over every band-consistent run
//! decides the question globally. The matrix is accepted if some cover
//! rebuilds it exactly; otherwise the tracing-stage rejection is reported.
//! The search looks for a second cover too, because some matrices are the
//! adjacency matrix of more than one labeled semigraph.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::matrix::{adjacency, MatrixError, SymMatrix};
use crate::qscalar::QScalar;
use crate::semigraph::{Edge, Semigraph, VertexClass};

const TWO: QScalar = QScalar::from_int(2);

#[derive(Clone, Copy, Debug)]
pub struct RecognitionOptions {
    /// Accept all-zero rows as isolated vertices instead of rejecting them.
    pub allow_isolated: bool,
    /// Also run the exact-cover search after a successful trace, to detect
    /// a second semigraph with the same matrix.
    pub check_uniqueness: bool,
    /// Node budget for the exact-cover search.
    pub search_limit: usize,
}

impl Default for RecognitionOptions {
    fn default() -> Self {
        RecognitionOptions {
            allow_isolated: false,
            check_uniqueness: false,
            search_limit: 200_000,
        }
    }
}

/// Per-index vertex classes inferred from a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixVertexClass(pub Vec<VertexClass>);

impl MatrixVertexClass {
    pub fn get(&self, i: usize) -> VertexClass {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[VertexClass] {
        &self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RejectReason {
    IllegalEntry,
    AsymmetricInput,
    NonzeroDiagonal,
    BrokenDistanceRun,
    OverlappingEdges,
    CoverageGap,
    EndpointClassMismatch,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Indices and entries demonstrating a rejection. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A single off-diagonal entry.
    Entry {
        row: usize,
        col: usize,
        value: QScalar,
    },
    /// `(row, col)` and `(col, row)` disagree.
    Mirror {
        row: usize,
        col: usize,
        upper: QScalar,
        lower: QScalar,
    },
    Diagonal {
        index: usize,
        value: QScalar,
    },
    ZeroRow {
        index: usize,
    },
    /// Two distinct traced edges both contain `pair`.
    Overlap {
        pair: (usize, usize),
        first: Vec<usize>,
        second: Vec<usize>,
    },
    /// The traced semigraph's adjacency differs from the input at `(row, col)`.
    Mismatch {
        row: usize,
        col: usize,
        input: QScalar,
        rebuilt: QScalar,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq = |v: &[usize]| {
            v.iter()
                .map(|x| format!("v{}", x + 1))
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Witness::Entry { row, col, value } => {
                write!(f, "entry (v{}, v{}) = {value}", row + 1, col + 1)
            }
            Witness::Mirror {
                row,
                col,
                upper,
                lower,
            } => write!(
                f,
                "entry (v{}, v{}) = {upper} but (v{}, v{}) = {lower}",
                row + 1,
                col + 1,
                col + 1,
                row + 1
            ),
            Witness::Diagonal { index, value } => {
                write!(f, "diagonal entry (v{0}, v{0}) = {value}", index + 1)
            }
            Witness::ZeroRow { index } => write!(f, "row v{} is all zero", index + 1),
            Witness::Overlap {
                pair,
                first,
                second,
            } => write!(
                f,
                "pair (v{}, v{}) lies on traced edges ({}) and ({})",
                pair.0 + 1,
                pair.1 + 1,
                seq(first),
                seq(second)
            ),
            Witness::Mismatch {
                row,
                col,
                input,
                rebuilt,
            } => write!(
                f,
                "entry (v{}, v{}) is {input} but the traced semigraph gives {rebuilt}",
                row + 1,
                col + 1
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub reason: RejectReason,
    pub witness: Witness,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.reason, self.witness)
    }
}

impl std::error::Error for Rejection {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction {
    pub semigraph: Semigraph,
    pub classes: MatrixVertexClass,
    /// Runs traced before deduplication (each edge is met from both ends).
    pub traced_runs: usize,
    /// Whether the exact-cover search, rather than tracing, produced the result.
    pub via_search: bool,
    /// A different semigraph with the same adjacency matrix, when one was found.
    pub alternative: Option<Semigraph>,
    /// The search hit its node budget, so `alternative == None` is inconclusive.
    pub search_truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecognitionOutcome {
    Accepted(Reconstruction),
    Rejected(Rejection),
}

impl RecognitionOutcome {
    pub fn is_accepted(&self) -> bool {
        matches!(self, RecognitionOutcome::Accepted(_))
    }

    pub fn accepted(&self) -> Option<&Reconstruction> {
        match self {
            RecognitionOutcome::Accepted(r) => Some(r),
            RecognitionOutcome::Rejected(_) => None,
        }
    }

    pub fn rejection(&self) -> Option<&Rejection> {
        match self {
            RecognitionOutcome::Accepted(_) => None,
            RecognitionOutcome::Rejected(r) => Some(r),
        }
    }
}

fn reject(reason: RejectReason, witness: Witness) -> Rejection {
    Rejection { reason, witness }
}

fn check_alphabet(m: &SymMatrix) -> Result<(), Rejection> {
    let n = m.dim();
    for i in 0..n {
        for j in i + 1..n {
            let value = m.get(i, j);
            if !value.is_adjacency_value() {
                return Err(reject(
                    RejectReason::IllegalEntry,
                    Witness::Entry {
                        row: i,
                        col: j,
                        value,
                    },
                ));
            }
        }
    }
    Ok(())
}

/// Vertex classes of the semigraph behind `m`.
///
/// When `m` is semigraphical (isolated rows allowed) the classes are those
/// of the reconstructed semigraph. Otherwise they come from
/// [`detect_classes_local`].
pub fn detect_classes(m: &SymMatrix) -> Result<MatrixVertexClass, Rejection> {
    check_alphabet(m)?;
    let opts = RecognitionOptions {
        allow_isolated: true,
        ..Default::default()
    };
    Ok(match reconstruct_inner(m, opts) {
        Ok(r) => r.classes,
        Err(_) => MatrixVertexClass(local_classes(m)),
    })
}

/// Vertex classes read off the matrix entries alone.
///
/// * an all-zero row is isolated;
/// * a `1/4` entry marks a middle end vertex;
/// * for a consecutive neighbour `j` of `v`, `v` sits inside the edge through
///   `j` when another consecutive neighbour `k` of `v` has `a_jk = 2`; when no
///   such `k` exists `v` is an end of that edge;
/// * an end whose corner entry is `1` is a pure end vertex;
/// * an end whose corner is `1/2` is a middle end vertex if the edge
///   continues past `j` (some `k` with `a_vk = 2`, `a_jk` consecutive) or if
///   `v` sits inside some other edge;
/// * a vertex that is never an end is a pure middle vertex.
///
/// A distance `2` between two neighbours of `v` may come from a third edge,
/// so these rules can misjudge a vertex; tracing uses them only as a guide.
pub fn detect_classes_local(m: &SymMatrix) -> Result<MatrixVertexClass, Rejection> {
    check_alphabet(m)?;
    Ok(MatrixVertexClass(local_classes(m)))
}

fn local_classes(m: &SymMatrix) -> Vec<VertexClass> {
    let n = m.dim();
    (0..n)
        .map(|v| {
            let row = m.row(v);
            if row.iter().all(|q| q.is_zero()) {
                return VertexClass::Isolated;
            }
            if row.contains(&QScalar::QUARTER) {
                return VertexClass::MiddleEnd;
            }
            let path_nbrs: Vec<usize> = (0..n)
                .filter(|&j| row[j] == QScalar::ONE || row[j] == QScalar::HALF)
                .collect();
            if path_nbrs.is_empty() {
                return VertexClass::PureEnd;
            }
            let inner = |j: usize| path_nbrs.iter().any(|&k| k != j && m.get(j, k) == TWO);
            let ends: Vec<usize> = path_nbrs.iter().copied().filter(|&j| !inner(j)).collect();
            if ends.is_empty() {
                return VertexClass::PureMiddle;
            }
            if ends.iter().any(|&j| row[j] == QScalar::ONE) {
                return VertexClass::PureEnd;
            }
            let has_mid = ends.len() < path_nbrs.len();
            let long_half = ends.iter().any(|&j| {
                (0..n).any(|k| {
                    row[k] == TWO && (m.get(j, k) == QScalar::ONE || m.get(j, k) == QScalar::HALF)
                })
            });
            if has_mid || long_half {
                VertexClass::MiddleEnd
            } else {
                VertexClass::PureEnd
            }
        })
        .collect()
}

/// Reconstructs from raw rows, reporting shape problems as rejections.
pub fn reconstruct_rows(
    rows: &[Vec<QScalar>],
    opts: RecognitionOptions,
) -> Result<RecognitionOutcome, MatrixError> {
    match SymMatrix::from_rows(rows) {
        Ok(m) => Ok(reconstruct(&m, opts)),
        Err(MatrixError::Asymmetric {
            row,
            col,
            upper,
            lower,
        }) => Ok(RecognitionOutcome::Rejected(reject(
            RejectReason::AsymmetricInput,
            Witness::Mirror {
                row,
                col,
                upper,
                lower,
            },
        ))),
        Err(MatrixError::NonzeroDiagonal { index }) => Ok(RecognitionOutcome::Rejected(reject(
            RejectReason::NonzeroDiagonal,
            Witness::Diagonal {
                index,
                value: rows[index][index],
            },
        ))),
        Err(e) => Err(e),
    }
}

/// Decides whether `m` is the adjacency matrix of a semigraph and rebuilds it.
pub fn reconstruct(m: &SymMatrix, opts: RecognitionOptions) -> RecognitionOutcome {
    match reconstruct_inner(m, opts) {
        Ok(r) => RecognitionOutcome::Accepted(r),
        Err(r) => RecognitionOutcome::Rejected(r),
    }
}

/// `true` iff reconstruction succeeds and the rebuilt adjacency equals `m`.
pub fn is_semigraphical(m: &SymMatrix, opts: RecognitionOptions) -> (bool, RecognitionOutcome) {
    let outcome = reconstruct(m, opts);
    let ok = outcome
        .accepted()
        .is_some_and(|r| adjacency(&r.semigraph) == *m);
    (ok, outcome)
}

fn reconstruct_inner(m: &SymMatrix, opts: RecognitionOptions) -> Result<Reconstruction, Rejection> {
    check_alphabet(m)?;
    let n = m.dim();
    for i in 0..n {
        if !opts.allow_isolated && m.row(i).iter().all(|q| q.is_zero()) {
            return Err(reject(
                RejectReason::CoverageGap,
                Witness::ZeroRow { index: i },
            ));
        }
    }

    let candidates = band_candidates(m);
    let pairs = PairIndex::new(m);
    let mut supported = vec![false; pairs.len()];
    for c in &candidates {
        for p in pairs.of_edge(c) {
            supported[p] = true;
        }
    }
    if let Some(p) = supported.iter().position(|s| !s) {
        let (row, col) = pairs.pair(p);
        return Err(reject(
            RejectReason::BrokenDistanceRun,
            Witness::Entry {
                row,
                col,
                value: m.get(row, col),
            },
        ));
    }

    let classes = local_classes(m);
    let traced = trace(m, &classes, &pairs);
    let traced_ok = traced.is_ok();
    if let Ok((g, runs)) = &traced {
        if !opts.check_uniqueness {
            return Ok(Reconstruction {
                classes: MatrixVertexClass(g.vertex_classes()),
                semigraph: g.clone(),
                traced_runs: *runs,
                via_search: false,
                alternative: None,
                search_truncated: false,
            });
        }
    }

    let search = exact_cover(m, &candidates, &pairs, opts.search_limit);
    match traced {
        Ok((g, runs)) => {
            let alternative = search.solutions.into_iter().find(|s| *s != g);
            Ok(Reconstruction {
                classes: MatrixVertexClass(g.vertex_classes()),
                semigraph: g,
                traced_runs: runs,
                via_search: false,
                alternative,
                search_truncated: search.truncated,
            })
        }
        Err(rejection) => {
            debug_assert!(!traced_ok);
            let mut found = search.solutions.into_iter();
            match found.next() {
                Some(g) => Ok(Reconstruction {
                    classes: MatrixVertexClass(g.vertex_classes()),
                    semigraph: g,
                    traced_runs: 0,
                    via_search: true,
                    alternative: found.next(),
                    search_truncated: search.truncated,
                }),
                None => Err(rejection),
            }
        }
    }
}

/// Unordered nonzero pairs `i < j`, indexed densely.
struct PairIndex {
    n: usize,
    index: HashMap<(usize, usize), usize>,
    pairs: Vec<(usize, usize)>,
}

impl PairIndex {
    fn new(m: &SymMatrix) -> Self {
        let n = m.dim();
        let mut index = HashMap::new();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !m.get(i, j).is_zero() {
                    index.insert((i, j), pairs.len());
                    pairs.push((i, j));
                }
            }
        }
        PairIndex { n, index, pairs }
    }

    fn len(&self) -> usize {
        self.pairs.len()
    }

    fn pair(&self, p: usize) -> (usize, usize) {
        self.pairs[p]
    }

    /// Pair indices covered by an edge; every pair of a band-consistent run is nonzero.
    fn of_edge<'a>(&'a self, e: &'a Edge) -> impl Iterator<Item = usize> + 'a {
        let v = e.vertices();
        debug_assert!(v.iter().all(|&x| x < self.n));
        (0..v.len()).flat_map(move |i| {
            (i + 1..v.len()).map(move |j| self.index[&(v[i].min(v[j]), v[i].max(v[j]))])
        })
    }
}

/// Whether appending `z` to `path` keeps every non-consecutive distance on
/// the band: `a(path[i], z) = len - i`.
fn extends_band(m: &SymMatrix, path: &[usize], z: usize) -> bool {
    let len = path.len();
    !path.contains(&z)
        && path[..len - 1]
            .iter()
            .enumerate()
            .all(|(i, &u)| m.get(u, z) == QScalar::from_int((len - i) as i64))
}

fn consecutive_nbrs(m: &SymMatrix, v: usize) -> impl Iterator<Item = usize> + '_ {
    m.row(v)
        .iter()
        .enumerate()
        .filter(|(_, q)| q.is_consecutive_value())
        .map(|(j, _)| j)
}

/// Every vertex sequence whose submatrix has the edge band shape, ignoring
/// vertex classes: interior consecutive entries `1`, corner entries `1` or
/// `1/2`, a lone `1/4` only as a two-vertex edge.
fn band_candidates(m: &SymMatrix) -> Vec<Edge> {
    fn grow(m: &SymMatrix, path: &mut Vec<usize>, out: &mut HashSet<Edge>) {
        let len = path.len();
        let last_pair = m.get(path[len - 2], path[len - 1]);
        let extendable = if len == 2 {
            last_pair == QScalar::ONE || last_pair == QScalar::HALF
        } else {
            last_pair == QScalar::ONE
        };
        if !extendable {
            return;
        }
        let last = path[len - 1];
        let next: Vec<usize> = consecutive_nbrs(m, last)
            .filter(|&z| {
                let q = m.get(last, z);
                (q == QScalar::ONE || q == QScalar::HALF) && extends_band(m, path, z)
            })
            .collect();
        for z in next {
            path.push(z);
            out.insert(Edge::canonical(path.clone()));
            grow(m, path, out);
            path.pop();
        }
    }

    let mut out = HashSet::new();
    for p in 0..m.dim() {
        for j in consecutive_nbrs(m, p) {
            let mut path = vec![p, j];
            out.insert(Edge::canonical(path.clone()));
            grow(m, &mut path, &mut out);
        }
    }
    let mut v: Vec<Edge> = out.into_iter().collect();
    v.sort();
    v
}

fn end_capable(c: VertexClass) -> bool {
    matches!(c, VertexClass::PureEnd | VertexClass::MiddleEnd)
}

fn interior_capable(c: VertexClass) -> bool {
    matches!(c, VertexClass::PureMiddle | VertexClass::MiddleEnd)
}

fn corner(c: VertexClass) -> QScalar {
    if c == VertexClass::MiddleEnd {
        QScalar::HALF
    } else {
        QScalar::ONE
    }
}

/// Class-guided tracing from every end vertex. Returns the semigraph and
/// the number of runs traced before deduplication.
fn trace(
    m: &SymMatrix,
    classes: &[VertexClass],
    pairs: &PairIndex,
) -> Result<(Semigraph, usize), Rejection> {
    fn walk(
        m: &SymMatrix,
        classes: &[VertexClass],
        path: &mut Vec<usize>,
        runs: &mut Vec<Vec<usize>>,
    ) {
        let len = path.len();
        let (start, last) = (path[0], path[len - 1]);
        let last_pair = m.get(path[len - 2], last);
        let (cs, cl) = (classes[start], classes[last]);

        let terminal = end_capable(cl)
            && if len == 2 {
                let expected = match (cs, cl) {
                    (VertexClass::MiddleEnd, VertexClass::MiddleEnd) => QScalar::QUARTER,
                    (VertexClass::MiddleEnd, _) | (_, VertexClass::MiddleEnd) => QScalar::HALF,
                    _ => QScalar::ONE,
                };
                last_pair == expected
            } else {
                last_pair == corner(cl)
            };
        if terminal {
            runs.push(path.clone());
        }

        let extendable = interior_capable(cl)
            && if len == 2 {
                last_pair == corner(cs)
            } else {
                last_pair == QScalar::ONE
            };
        if !extendable {
            return;
        }
        let next: Vec<usize> = consecutive_nbrs(m, last)
            .filter(|&z| {
                let q = m.get(last, z);
                (q == QScalar::ONE || q == QScalar::HALF) && extends_band(m, path, z)
            })
            .collect();
        for z in next {
            path.push(z);
            walk(m, classes, path, runs);
            path.pop();
        }
    }

    let mut runs = Vec::new();
    for p in 0..m.dim() {
        if !end_capable(classes[p]) {
            continue;
        }
        for j in consecutive_nbrs(m, p) {
            let mut path = vec![p, j];
            walk(m, classes, &mut path, &mut runs);
        }
    }
    let traced_runs = runs.len();

    let mut edges: Vec<Edge> = runs.into_iter().map(Edge::canonical).collect();
    edges.sort();
    edges.dedup();

    let mut owner: Vec<Option<usize>> = vec![None; pairs.len()];
    for (ei, e) in edges.iter().enumerate() {
        for p in pairs.of_edge(e) {
            if let Some(prev) = owner[p] {
                return Err(reject(
                    RejectReason::OverlappingEdges,
                    Witness::Overlap {
                        pair: pairs.pair(p),
                        first: edges[prev].vertices().to_vec(),
                        second: e.vertices().to_vec(),
                    },
                ));
            }
            owner[p] = Some(ei);
        }
    }
    if let Some(p) = owner.iter().position(Option::is_none) {
        let (row, col) = pairs.pair(p);
        return Err(reject(
            RejectReason::CoverageGap,
            Witness::Entry {
                row,
                col,
                value: m.get(row, col),
            },
        ));
    }

    let g = Semigraph::from_canonical(m.dim(), edges);
    let rebuilt = adjacency(&g);
    if let Some((row, col)) = rebuilt.first_difference(m) {
        return Err(reject(
            RejectReason::EndpointClassMismatch,
            Witness::Mismatch {
                row,
                col,
                input: m.get(row, col),
                rebuilt: rebuilt.get(row, col),
            },
        ));
    }
    Ok((g, traced_runs))
}

struct SearchResult {
    solutions: Vec<Semigraph>,
    truncated: bool,
}

/// Exact cover of the nonzero pairs by band candidates; a cover counts only
/// if its semigraph rebuilds `m`. Stops after two solutions.
fn exact_cover(
    m: &SymMatrix,
    candidates: &[Edge],
    pairs: &PairIndex,
    limit: usize,
) -> SearchResult {
    struct State<'a> {
        m: &'a SymMatrix,
        candidates: &'a [Edge],
        cand_pairs: Vec<Vec<usize>>,
        pair_cands: Vec<Vec<usize>>,
        covered: Vec<bool>,
        chosen: Vec<usize>,
        nodes: usize,
        limit: usize,
        truncated: bool,
        solutions: Vec<Semigraph>,
    }

    impl State<'_> {
        fn available(&self, c: usize) -> bool {
            self.cand_pairs[c].iter().all(|&p| !self.covered[p])
        }

        fn search(&mut self) {
            if self.solutions.len() >= 2 || self.truncated {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.limit {
                self.truncated = true;
                return;
            }
            let mut best: Option<(usize, Vec<usize>)> = None;
            for p in 0..self.covered.len() {
                if self.covered[p] {
                    continue;
                }
                let opts: Vec<usize> = self.pair_cands[p]
                    .iter()
                    .copied()
                    .filter(|&c| self.available(c))
                    .collect();
                if best.as_ref().is_none_or(|(_, b)| opts.len() < b.len()) {
                    let done = opts.len() <= 1;
                    best = Some((p, opts));
                    if done {
                        break;
                    }
                }
            }
            let Some((_, options)) = best else {
                let edges = self
                    .chosen
                    .iter()
                    .map(|&c| self.candidates[c].clone())
                    .collect();
                let g = Semigraph::from_canonical(self.m.dim(), edges);
                if adjacency(&g) == *self.m {
                    self.solutions.push(g);
                }
                return;
            };
            for c in options {
                for &p in &self.cand_pairs[c] {
                    self.covered[p] = true;
                }
                self.chosen.push(c);
                self.search();
                self.chosen.pop();
                for &p in &self.cand_pairs[c] {
                    self.covered[p] = false;
                }
                if self.solutions.len() >= 2 || self.truncated {
                    return;
                }
            }
        }
    }

    let cand_pairs: Vec<Vec<usize>> = candidates
        .iter()
        .map(|c| pairs.of_edge(c).collect())
        .collect();
    let mut pair_cands = vec![Vec::new(); pairs.len()];
    for (ci, ps) in cand_pairs.iter().enumerate() {
        for &p in ps {
            pair_cands[p].push(ci);
        }
    }
    let mut state = State {
        m,
        candidates,
        cand_pairs,
        pair_cands,
        covered: vec![false; pairs.len()],
        chosen: Vec::new(),
        nodes: 0,
        limit,
        truncated: false,
        solutions: Vec::new(),
    };
    state.search();
    SearchResult {
        solutions: state.solutions,
        truncated: state.truncated,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::from_quarters(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn edges_1based(g: &Semigraph) -> Vec<Vec<usize>> {
        g.edges()
            .iter()
            .map(|e| e.vertices().iter().map(|v| v + 1).collect())
            .collect()
    }

    #[test]
    fn two_by_two_classes() {
        use VertexClass::*;
        assert_eq!(
            detect_classes(&mat(&[&[0, 4], &[4, 0]])).unwrap().0,
            vec![PureEnd, PureEnd]
        );
        assert_eq!(
            detect_classes(&mat(&[&[0, 1], &[1, 0]])).unwrap().0,
            vec![MiddleEnd, MiddleEnd]
        );
        assert_eq!(
            detect_classes_local(&mat(&[&[0, 2], &[2, 0]])).unwrap().0,
            vec![PureEnd, PureEnd]
        );
    }

    #[test]
    fn illegal_entry() {
        let m = mat(&[&[0, 3], &[3, 0]]);
        let err = detect_classes(&m).unwrap_err();
        assert_eq!(err.reason, RejectReason::IllegalEntry);
        assert_eq!(
            err.witness,
            Witness::Entry {
                row: 0,
                col: 1,
                value: QScalar::from_quarters(3)
            }
        );
    }

    #[test]
    fn single_full_edge() {
        let m = mat(&[&[0, 4, 8], &[4, 0, 4], &[8, 4, 0]]);
        let out = reconstruct(&m, RecognitionOptions::default());
        let r = out.accepted().unwrap();
        assert_eq!(edges_1based(&r.semigraph), vec![vec![1, 2, 3]]);
        assert_eq!(r.traced_runs, 2);
    }

    #[test]
    fn path_graph() {
        let m = mat(&[&[0, 4, 0], &[4, 0, 4], &[0, 4, 0]]);
        let (ok, out) = is_semigraphical(&m, RecognitionOptions::default());
        assert!(ok);
        assert_eq!(
            edges_1based(&out.accepted().unwrap().semigraph),
            vec![vec![1, 2], vec![2, 3]]
        );
    }

    #[test]
    fn distance_beyond_dimension() {
        let m = mat(&[&[0, 12], &[12, 0]]);
        let (ok, out) = is_semigraphical(&m, RecognitionOptions::default());
        assert!(!ok);
        let r = out.rejection().unwrap();
        assert_eq!(r.reason, RejectReason::BrokenDistanceRun);
        assert_eq!(
            r.witness,
            Witness::Entry {
                row: 0,
                col: 1,
                value: QScalar::from_int(3)
            }
        );
    }

    #[test]
    fn zero_rows() {
        let m = mat(&[&[0, 4, 0], &[4, 0, 0], &[0, 0, 0]]);
        let out = reconstruct(&m, RecognitionOptions::default());
        assert_eq!(
            out.rejection().unwrap(),
            &reject(RejectReason::CoverageGap, Witness::ZeroRow { index: 2 })
        );
        let opts = RecognitionOptions {
            allow_isolated: true,
            ..Default::default()
        };
        let r = reconstruct(&m, opts);
        let g = &r.accepted().unwrap().semigraph;
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(r.accepted().unwrap().classes.get(2), VertexClass::Isolated);
    }

    #[test]
    fn raw_rows_rejections() {
        let q = QScalar::from_quarters;
        let asym = vec![vec![q(0), q(4)], vec![q(2), q(0)]];
        let out = reconstruct_rows(&asym, RecognitionOptions::default()).unwrap();
        assert_eq!(
            out.rejection().unwrap().reason,
            RejectReason::AsymmetricInput
        );
        let diag = vec![vec![q(4), q(4)], vec![q(4), q(0)]];
        let out = reconstruct_rows(&diag, RecognitionOptions::default()).unwrap();
        assert_eq!(
            out.rejection().unwrap().reason,
            RejectReason::NonzeroDiagonal
        );
        let ragged = vec![vec![q(0), q(4)], vec![q(4)]];
        assert!(reconstruct_rows(&ragged, RecognitionOptions::default()).is_err());
    }

    #[test]
    fn twin_motif_has_two_reconstructions() {
        // {(1,2,3),(1,4),(4,3)} and {(1,4,3),(1,2),(2,3)}: v2 and v4 are twins.
        let m = mat(&[&[0, 4, 8, 4], &[4, 0, 4, 0], &[8, 4, 0, 4], &[4, 0, 4, 0]]);
        let opts = RecognitionOptions {
            check_uniqueness: true,
            ..Default::default()
        };
        let out = reconstruct(&m, opts);
        let r = out.accepted().unwrap();
        assert!(r.via_search);
        let alt = r.alternative.as_ref().unwrap();
        assert_ne!(&r.semigraph, alt);
        assert_eq!(adjacency(alt), m);
        assert_eq!(adjacency(&r.semigraph), m);
    }
}
