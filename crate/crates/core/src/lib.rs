//! Semigraphs and their symmetric quarter-rational adjacency matrices.
//!
//! A semigraph is a vertex set together with ordered edges of two or more
//! distinct vertices, where an edge equals its reversal and two edges share
//! at most one vertex. This crate provides:
//!
//! * [`semigraph`]: the validated data model, vertex and edge classes,
//!   connectivity, the graph skeleton and generators,
//! * [`matrix`]: exact adjacency, skeleton and excess matrices, degrees and
//!   the degree-sum / trace-of-square identities,
//! * [`recognition`]: deciding whether a matrix is the adjacency matrix of a
//!   semigraph and reconstructing it,
//! * [`spectra`]: eigenvalues, exact characteristic polynomials, the
//!   largest-eigenvalue bounds and the closed-form star spectra.

pub mod matrix;
pub mod qscalar;
pub mod recognition;
pub mod semigraph;
pub mod spectra;

pub use matrix::{
    adjacency, degree, edge_submatrix, excess, skeleton_adjacency, sum_identities, DegreeSplit,
    IdentityReport, MatrixError, SymMatrix,
};
pub use qscalar::QScalar;
pub use recognition::{
    detect_classes, detect_classes_local, is_semigraphical, reconstruct, reconstruct_rows,
    MatrixVertexClass, RecognitionOptions, RecognitionOutcome, RejectReason, Rejection, Witness,
};
pub use semigraph::{
    random_semigraph, star_type1, star_type2, Edge, EdgeClass, EdgeCounts, Semigraph,
    SemigraphError, VertexClass, VertexId,
};
pub use spectra::{
    bounds, char_poly, eigenvalues, star1_charpoly, star2_charpoly, star_spectra, BoundsReport,
    RationalPoly, Spectrum, SpectrumError, StarFamily,
};
