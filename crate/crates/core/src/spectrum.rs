//! Normalized Laplacian of a discrete graph, its spectrum, and the discrete
//! spectral zeta function `Z(s)`.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::eigen::{symmetric_eigen, Matrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ZERO_TOLERANCE: f64 = 1e-9;

/// The random-walk normalized Laplacian `I - D^{-1} A`: ones on the
/// diagonal and `-1/d_v` in row `v` for every neighbor `u` of `v`.
pub fn normalized_laplacian(g: &Graph) -> Matrix {
    let mut m = Matrix::identity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let inv = 1.0 / g.degree(v) as f64;
        for &u in g.neighbors(v) {
            m[(v, u)] = -inv;
        }
    }
    m
}

/// The symmetric conjugate `I - D^{-1/2} A D^{-1/2}`, similar to
/// [`normalized_laplacian`].
pub fn symmetric_normalized_laplacian(g: &Graph) -> Matrix {
    let mut m = Matrix::identity(g.vertex_count());
    for (u, v) in g.edges().iter().copied() {
        let w = -1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt();
        m[(u, v)] = w;
        m[(v, u)] = w;
    }
    m
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscreteSpectrum {
    /// Ascending, clamped into `[0, 2]`; values within `zero_tolerance` of
    /// an endpoint are snapped to it.
    pub eigenvalues: Vec<f64>,
    pub kernel_dim_0: usize,
    pub kernel_dim_2: usize,
    pub zero_tolerance: f64,
}

impl DiscreteSpectrum {
    /// Eigendecomposes the symmetric conjugate of the normalized Laplacian.
    pub fn of_graph(g: &Graph, zero_tolerance: f64) -> Result<Self> {
        let eig = symmetric_eigen(&symmetric_normalized_laplacian(g))?;
        Self::from_eigenvalues(eig.values, zero_tolerance)
    }

    /// Wraps a precomputed eigenvalue list (any order).
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>, zero_tolerance: f64) -> Result<Self> {
        if !(zero_tolerance > 0.0 && zero_tolerance <= 1e-6) {
            return Err(Error::DomainError(format!(
                "zero tolerance must lie in (0, 1e-6], got {zero_tolerance}"
            )));
        }
        if eigenvalues.is_empty() {
            return Err(Error::DomainError("empty eigenvalue list".into()));
        }
        if let Some(bad) = eigenvalues
            .iter()
            .find(|x| !x.is_finite() || **x < -zero_tolerance || **x > 2.0 + zero_tolerance)
        {
            return Err(Error::DomainError(format!(
                "normalized Laplacian eigenvalue {bad} lies outside [0, 2]"
            )));
        }
        for x in eigenvalues.iter_mut() {
            if *x <= zero_tolerance {
                *x = 0.0;
            } else if *x >= 2.0 - zero_tolerance {
                *x = 2.0;
            }
        }
        eigenvalues.sort_by(f64::total_cmp);
        let kernel_dim_0 = eigenvalues.iter().filter(|&&x| x == 0.0).count();
        let kernel_dim_2 = eigenvalues.iter().filter(|&&x| x == 2.0).count();
        Ok(DiscreteSpectrum {
            eigenvalues,
            kernel_dim_0,
            kernel_dim_2,
            zero_tolerance,
        })
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = f64> + '_ {
        self.eigenvalues.iter().copied().filter(|&x| x != 0.0)
    }

    /// `Z(s) = sum' lambda^{-s}` over the nonzero eigenvalues.
    pub fn zeta(&self, s: Complex64) -> Complex64 {
        self.nonzero().map(|x| (-s * x.ln()).exp()).sum()
    }

    /// `Z(-r) = sum' lambda^r` for `r = 0..=max_r`, exact in the binary
    /// values of the stored eigenvalues.
    pub fn power_sums_exact(&self, max_r: usize) -> Vec<BigRational> {
        exact_power_sums(&self.nonzero().collect::<Vec<_>>(), max_r)
    }
}

/// `Σ_j x_j^r` for `r = 0..=max_r`, exact in the binary values of `x_j`.
pub fn exact_power_sums(values: &[f64], max_r: usize) -> Vec<BigRational> {
    let values: Vec<BigRational> = values
        .iter()
        .map(|&x| BigRational::from_float(x).expect("finite value"))
        .collect();
    let mut powers = vec![BigRational::one(); values.len()];
    let mut sums = Vec::with_capacity(max_r + 1);
    for _ in 0..=max_r {
        sums.push(powers.iter().fold(BigRational::zero(), |acc, p| acc + p));
        for (p, x) in powers.iter_mut().zip(&values) {
            *p = &*p * x;
        }
    }
    sums
}

/// Spectrum of the normalized Laplacian of a connected graph.
pub fn eigenvalues(g: &Graph, zero_tolerance: f64) -> Result<DiscreteSpectrum> {
    DiscreteSpectrum::of_graph(g, zero_tolerance)
}

/// Discrete spectral zeta function `Z(s)`.
pub fn discrete_zeta(spec: &DiscreteSpectrum, s: Complex64) -> Complex64 {
    spec.zeta(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn spectrum(g: &Graph) -> DiscreteSpectrum {
        eigenvalues(g, DEFAULT_ZERO_TOLERANCE).unwrap()
    }

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn laplacian_of_single_edge() {
        let m = normalized_laplacian(&Graph::path(2).unwrap());
        assert_eq!(m.rows(), vec![vec![1.0, -1.0], vec![-1.0, 1.0]]);
    }

    #[test]
    fn laplacian_of_k12() {
        // center 0 has degree 2, leaves 1 and 2 have degree 1
        let m = normalized_laplacian(&Graph::star(2).unwrap());
        assert_eq!(
            m.rows(),
            vec![
                vec![1.0, -0.5, -0.5],
                vec![-1.0, 1.0, 0.0],
                vec![-1.0, 0.0, 1.0],
            ]
        );
    }

    #[test]
    fn regular_graph_rows_sum_to_zero() {
        let m = normalized_laplacian(&Graph::complete(5).unwrap());
        for row in m.rows() {
            assert!(row.iter().sum::<f64>().abs() < 1e-15);
        }
    }

    #[test]
    fn known_spectra() {
        assert_close(&spectrum(&Graph::complete_bipartite(2, 3).unwrap()).eigenvalues, &[0.0, 1.0, 1.0, 1.0, 2.0], 1e-9);
        assert_close(&spectrum(&Graph::path(2).unwrap()).eigenvalues, &[0.0, 2.0], 1e-9);
        assert_close(&spectrum(&Graph::cycle(4).unwrap()).eigenvalues, &[0.0, 1.0, 1.0, 2.0], 1e-9);
        // K_n: 0 and n/(n-1) with multiplicity n-1
        assert_close(&spectrum(&Graph::complete(4).unwrap()).eigenvalues, &[0.0, 4.0 / 3.0, 4.0 / 3.0, 4.0 / 3.0], 1e-9);
    }

    #[test]
    fn cycle_spectrum_matches_cosine_formula() {
        for n in 3..12 {
            let mut expected: Vec<f64> = (0..n)
                .map(|j| 1.0 - (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos())
                .collect();
            expected.sort_by(f64::total_cmp);
            let got = spectrum(&Graph::cycle(n).unwrap());
            assert_close(&got.eigenvalues, &expected, 1e-9);
        }
    }

    #[test]
    fn kernel_dimensions() {
        let s = spectrum(&Graph::complete_bipartite(2, 3).unwrap());
        assert_eq!((s.kernel_dim_0, s.kernel_dim_2), (1, 1));
        let s = spectrum(&Graph::cycle(5).unwrap());
        assert_eq!((s.kernel_dim_0, s.kernel_dim_2), (1, 0));
    }

    #[test]
    fn zeta_of_k23() {
        let s = spectrum(&Graph::complete_bipartite(2, 3).unwrap());
        let z = |x: f64| discrete_zeta(&s, Complex64::new(x, 0.0));
        assert!((z(1.0).re - 3.5).abs() < 1e-12);
        assert!((z(-1.0).re - 5.0).abs() < 1e-12);
        assert!((z(0.0).re - 4.0).abs() < 1e-15);
    }

    #[test]
    fn exact_power_sums_match_float_powers() {
        let s = spectrum(&Graph::complete(5).unwrap());
        let exact = s.power_sums_exact(6);
        for (r, p) in exact.iter().enumerate() {
            let direct: f64 = s.nonzero().map(|x| x.powi(r as i32)).sum();
            assert!((p.to_f64().unwrap() - direct).abs() < 1e-12 * direct.max(1.0));
        }
        assert_eq!(exact[0], BigRational::from_integer(4.into()));
    }

    #[test]
    fn rejects_out_of_range_input() {
        assert!(DiscreteSpectrum::from_eigenvalues(vec![0.0, 2.5], 1e-9).is_err());
        assert!(DiscreteSpectrum::from_eigenvalues(vec![0.0, 1.0], 1e-3).is_err());
        let s = DiscreteSpectrum::from_eigenvalues(vec![2.0 + 1e-12, 1.0, -1e-12], 1e-9).unwrap();
        assert_eq!(s.eigenvalues, vec![0.0, 1.0, 2.0]);
    }
}
