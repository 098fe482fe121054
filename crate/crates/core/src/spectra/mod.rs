//! Eigenvalues, exact characteristic polynomials, largest-eigenvalue bounds
//! and the closed-form spectra of the two star families.

mod bounds;
mod eigen;
mod poly;
mod stars;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use bounds::{bounds, BoundsReport, BOUND_SLACK};
pub use eigen::{eigenvalues, jacobi_eigenvalues, DEFAULT_TOLERANCE};
pub use poly::{char_poly, star1_charpoly, star2_charpoly, RationalPoly};
pub use stars::{cubic_real_roots, star_spectra};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("eigenvalue iteration did not converge within {rotations} rotations")]
    NoConvergence { rotations: usize },
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("the semigraph has no edges")]
    EmptyEdgeSet,
    #[error("unknown star family {0:?} (expected I or II)")]
    InvalidFamily(String),
    #[error("star order must be at least 1, got {n}")]
    InvalidStarOrder { n: usize },
    #[error("cubic does not have three real roots (discriminant {discriminant})")]
    ComplexCubicRoots { discriminant: f64 },
    #[error("spectrum has {spectrum} values but the semigraph has {vertices} vertices")]
    DimensionMismatch { spectrum: usize, vertices: usize },
}

/// Default merge radius for multiplicities, relative to the spectral radius.
pub const DEFAULT_CLUSTER_TOLERANCE: f64 = 1e-7;

/// Real eigenvalues sorted in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    cluster_tolerance: f64,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum {
            values,
            cluster_tolerance: DEFAULT_CLUSTER_TOLERANCE,
        }
    }

    pub fn with_cluster_tolerance(mut self, tol: f64) -> Self {
        self.cluster_tolerance = tol;
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn cluster_tolerance(&self) -> f64 {
        self.cluster_tolerance
    }

    /// The largest eigenvalue, `0` for an empty spectrum.
    pub fn lambda1(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum()
    }

    /// Distinct values with multiplicities. Neighbouring values closer than
    /// `cluster_tolerance * max(1, spectral radius)` merge; a cluster reports
    /// its mean.
    pub fn clusters(&self) -> Vec<(f64, usize)> {
        let radius = self.cluster_tolerance * self.spectral_radius().max(1.0);
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut start = 0;
        for i in 1..=self.values.len() {
            if i == self.values.len() || self.values[i - 1] - self.values[i] > radius {
                let group = &self.values[start..i];
                if !group.is_empty() {
                    out.push((group.iter().sum::<f64>() / group.len() as f64, group.len()));
                }
                start = i;
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StarFamily {
    TypeI,
    TypeII,
}

impl FromStr for StarFamily {
    type Err = SpectrumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "i" | "1" | "typei" | "type-i" => Ok(StarFamily::TypeI),
            "ii" | "2" | "typeii" | "type-ii" => Ok(StarFamily::TypeII),
            _ => Err(SpectrumError::InvalidFamily(s.to_string())),
        }
    }
}

impl fmt::Display for StarFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StarFamily::TypeI => "I",
            StarFamily::TypeII => "II",
        })
    }
}
