//! Spectral zeta functions of equilateral quantum graphs computed from the
//! spectrum of the normalized Laplacian of the underlying discrete graph.
//!
//! The pipeline is
//!
//! 1. [`Graph`]: a finite simple connected graph,
//! 2. [`DiscreteSpectrum`]: eigenvalues `0 = λ_1 < λ_2 <= ... <= λ_V <= 2` of
//!    the normalized Laplacian,
//! 3. [`TransferredSpectrum`]: wavenumbers `k_j` with `1 - cos(k_j L) = λ_j`
//!    and the multiplicities of the Dirichlet ladder `(nπ/L)²`,
//! 4. the quantum spectral zeta function `𝒵(s)` of the Laplacian on the
//!    metric graph, its Casimir energy `𝒵(-1/2)/2` and its zeta-regularized
//!    determinant `exp(-𝒵'(0))`.
//!
//! The [`oracle`] module holds independent brute-force checks used by the
//! verification suite.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod catalog;
pub mod eigen;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod quantum;
pub mod special;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use quantum::{SpectralInvariants, TransferredSpectrum, ZetaMethod, ZetaValue};
pub use spectrum::{DiscreteSpectrum, DEFAULT_ZERO_TOLERANCE};
