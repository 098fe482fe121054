use num_traits::ToPrimitive;

use super::{Spectrum, SpectrumError};
use crate::matrix::{adjacency, skeleton_adjacency, sum_identities};
use crate::semigraph::Semigraph;

/// Tolerance used when comparing the largest eigenvalue against a bound.
pub const BOUND_SLACK: f64 = 1e-9;

/// The largest eigenvalue checked against three bounds:
/// `lambda1 <= r(r-1)/2 * max skeleton degree`, `min degree <= lambda1` and
/// `lambda1 <= sqrt(trace(A^2) (n-1)/n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundsReport {
    pub lambda1: f64,
    pub rank: usize,
    pub max_skeleton_degree: usize,
    pub bound_skeleton: f64,
    pub bound_delta: f64,
    pub bound_trace: f64,
    /// The trace bound with the printed closed form for `trace(A^2)`; display only.
    pub bound_trace_paper: f64,
    /// For a graph, `sqrt(2m(n-1)/n)`.
    pub bound_trace_graph: Option<f64>,
    pub connected: bool,
    pub holds_skeleton: bool,
    pub holds_delta: bool,
    pub holds_trace: bool,
}

impl BoundsReport {
    pub fn all_hold(&self) -> bool {
        self.holds_skeleton && self.holds_delta && self.holds_trace
    }
}

pub fn bounds(g: &Semigraph, spectrum: &Spectrum) -> Result<BoundsReport, SpectrumError> {
    let rank = g.rank().map_err(|_| SpectrumError::EmptyEdgeSet)?;
    let n = g.vertex_count();
    if spectrum.len() != n {
        return Err(SpectrumError::DimensionMismatch {
            spectrum: spectrum.len(),
            vertices: n,
        });
    }
    let lambda1 = spectrum.lambda1();
    let a = adjacency(g);
    let s = skeleton_adjacency(g);
    let max_skeleton_degree = (0..n)
        .map(|v| {
            s.row_sum(v)
                .as_integer()
                .expect("skeleton rows are integral") as usize
        })
        .max()
        .unwrap_or(0);
    let bound_skeleton = (rank * (rank - 1) / 2 * max_skeleton_degree) as f64;
    let bound_delta = (0..n)
        .map(|v| a.row_sum(v).to_f64())
        .fold(f64::INFINITY, f64::min);

    let ids = sum_identities(g);
    let ratio = (n as f64 - 1.0) / n as f64;
    let to_f = |r: num_rational::Rational64| r.to_f64().unwrap_or(f64::NAN);
    let bound_trace = (to_f(ids.trace_sq_direct) * ratio).sqrt();
    let bound_trace_paper = (to_f(ids.trace_sq_paper) * ratio).max(0.0).sqrt();
    let bound_trace_graph = g
        .is_graph()
        .then(|| (2.0 * g.edge_count() as f64 * ratio).sqrt());

    Ok(BoundsReport {
        lambda1,
        rank,
        max_skeleton_degree,
        bound_skeleton,
        bound_delta,
        bound_trace,
        bound_trace_paper,
        bound_trace_graph,
        connected: g.is_connected(),
        holds_skeleton: lambda1 <= bound_skeleton + BOUND_SLACK,
        holds_delta: bound_delta <= lambda1 + BOUND_SLACK,
        holds_trace: lambda1 <= bound_trace + BOUND_SLACK,
    })
}
