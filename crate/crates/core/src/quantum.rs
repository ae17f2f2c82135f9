//! The quantum spectral zeta function `𝒵(s) = Σ' k^{-2s}` of the Laplacian
//! with Neumann–Kirchhoff conditions on an equilateral metric graph, built
//! from the normalized Laplacian spectrum of the discrete graph.
//!
//! Every eigenvalue `λ_j` of the discrete Laplacian gives a wavenumber
//! `k_j ∈ [0, π/L]` with `1 - cos(k_j L) = λ_j`. Away from the Dirichlet
//! ladder `(nπ/L)²` the quantum spectrum is the union of the ladders
//! `2nπ/L ± k_j`; the ladder itself enters with multiplicity
//! `(β - 1) + 2 dim ker Δ` for even `n` and `(β - 1) + 2 dim ker(Δ - 2)` for
//! odd `n`. Summing the ladders gives
//!
//! ```text
//! 𝒵(s) = (4^s (β-1) + 2) (L/2π)^{2s} ζ_R(2s)
//!      + (L/2π)^{2s} Σ_{j>=2} [ζ_H(2s, a_j) + ζ_H(2s, 1 - a_j)],   a_j = k_j L / 2π,
//! ```
//!
//! which is the production evaluator ([`quantum_zeta`]). For `Re s < 0` the
//! Hurwitz pairs have a Fourier expansion whose cosine sums are polynomials
//! in the discrete power sums `Z(-r)`; [`quantum_zeta_series`] evaluates that
//! double series as an independent cross-check.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::special::{
    bernoulli_polynomial, chebyshev_coefficients, dirichlet_eta, gamma, hurwitz_zeta, hurwitz_zeta_deriv0,
    riemann_zeta, riemann_zeta_deriv0,
};
use crate::spectrum::{exact_power_sums, DiscreteSpectrum};

/// Largest `n` for which the Chebyshev coefficient form of the cosine sums is
/// evaluated alongside the direct cosine form.
pub const LITERAL_COEFFICIENT_MAX_N: usize = 30;

/// Tolerance for agreement of the two cosine-sum forms.
pub const COEFFICIENT_CHECK_TOLERANCE: f64 = 1e-8;

const SERIES_TERM_CAP: usize = 200_000_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransferredSpectrum {
    /// `k_j = arccos(1 - λ_j)/L`, ascending, one per discrete eigenvalue.
    pub k_values: Vec<f64>,
    /// `a_j = k_j L / 2π ∈ [0, 1/2]`.
    pub phases: Vec<f64>,
    pub edge_length: f64,
    pub betti: usize,
    /// Multiplicity of `(2nπ/L)²`, `n >= 1`.
    pub mult_even: usize,
    /// Multiplicity of `((2n+1)π/L)²`, `n >= 0`.
    pub mult_odd: usize,
    pub edge_count: usize,
    pub vertex_count: usize,
    pub kernel_dim_0: usize,
    pub kernel_dim_2: usize,
}

impl TransferredSpectrum {
    pub fn new(g: &Graph, spec: &DiscreteSpectrum, edge_length: f64) -> Result<Self> {
        Self::from_counts(g.vertex_count(), g.edge_count(), spec, edge_length)
    }

    /// Builds the transferred spectrum from vertex and edge counts alone, for
    /// spectra that were computed elsewhere.
    pub fn from_counts(
        vertex_count: usize,
        edge_count: usize,
        spec: &DiscreteSpectrum,
        edge_length: f64,
    ) -> Result<Self> {
        if !(edge_length > 0.0 && edge_length.is_finite()) {
            return Err(Error::DomainError(format!("edge length must be positive, got {edge_length}")));
        }
        if spec.len() != vertex_count {
            return Err(Error::DomainError(format!(
                "spectrum has {} eigenvalues for a graph with {vertex_count} vertices",
                spec.len()
            )));
        }
        if spec.kernel_dim_0 != 1 {
            return Err(Error::DomainError(format!(
                "zero eigenvalue has multiplicity {}; the graph must be connected",
                spec.kernel_dim_0
            )));
        }
        if edge_count + 1 < vertex_count {
            return Err(Error::DomainError(format!(
                "{edge_count} edges cannot connect {vertex_count} vertices"
            )));
        }
        let betti = edge_count + 1 - vertex_count;
        let (mult_even, mult_odd) = multiplicities_from_counts(betti, spec.kernel_dim_0, spec.kernel_dim_2)?;
        let phases: Vec<f64> = spec
            .eigenvalues
            .iter()
            .map(|&lambda| (1.0 - lambda).clamp(-1.0, 1.0).acos() / (2.0 * PI))
            .collect();
        let k_values = spec
            .eigenvalues
            .iter()
            .map(|&lambda| (1.0 - lambda).clamp(-1.0, 1.0).acos() / edge_length)
            .collect();
        Ok(TransferredSpectrum {
            k_values,
            phases,
            edge_length,
            betti,
            mult_even,
            mult_odd,
            edge_count,
            vertex_count,
            kernel_dim_0: spec.kernel_dim_0,
            kernel_dim_2: spec.kernel_dim_2,
        })
    }

    /// The same graph with every edge rescaled to length `edge_length`.
    pub fn with_edge_length(&self, edge_length: f64) -> Result<Self> {
        if !(edge_length > 0.0 && edge_length.is_finite()) {
            return Err(Error::DomainError(format!("edge length must be positive, got {edge_length}")));
        }
        let mut out = self.clone();
        out.edge_length = edge_length;
        out.k_values = self.phases.iter().map(|a| 2.0 * PI * a / edge_length).collect();
        Ok(out)
    }

    /// Phases `a_j` of the nonzero wavenumbers (`j >= 2`).
    pub fn nonzero_phases(&self) -> &[f64] {
        &self.phases[self.kernel_dim_0..]
    }

    /// `1 - cos(k_j L)`, which reproduces the discrete spectrum.
    pub fn discrete_eigenvalues(&self) -> Vec<f64> {
        self.k_values
            .iter()
            .map(|k| 1.0 - (k * self.edge_length).cos())
            .collect()
    }

    /// Total metric length `E L`.
    pub fn total_length(&self) -> f64 {
        self.edge_count as f64 * self.edge_length
    }
}

/// Transfers the discrete spectrum to the equilateral quantum graph with
/// edge length `edge_length`.
pub fn spectrum_transfer(g: &Graph, spec: &DiscreteSpectrum, edge_length: f64) -> Result<TransferredSpectrum> {
    TransferredSpectrum::new(g, spec, edge_length)
}

fn multiplicities_from_counts(betti: usize, kernel_dim_0: usize, kernel_dim_2: usize) -> Result<(usize, usize)> {
    let even = betti as i64 - 1 + 2 * kernel_dim_0 as i64;
    let odd = betti as i64 - 1 + 2 * kernel_dim_2 as i64;
    if even < 0 || odd < 0 {
        return Err(Error::DomainError(format!(
            "inconsistent spectrum: Dirichlet multiplicities ({even}, {odd}) are negative"
        )));
    }
    Ok((even as usize, odd as usize))
}

/// Multiplicities of `(nπ/L)²` for even and odd `n`:
/// `(β - 1) + 2 dim ker Δ` and `(β - 1) + 2 dim ker(Δ - 2I)`.
pub fn dirichlet_multiplicities(g: &Graph, spec: &DiscreteSpectrum) -> Result<(usize, usize)> {
    multiplicities_from_counts(g.betti_number(), spec.kernel_dim_0, spec.kernel_dim_2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZetaMethod {
    /// Riemann term plus Hurwitz pairs.
    Hurwitz,
    /// Fourier double series in the discrete power sums, `Re s < 0`.
    ChebyshevSeries,
    /// Closed form for `K_{m,p}` in terms of Dirichlet eta.
    CompleteBipartiteClosedForm,
    /// Explicit summation over the quantum spectrum, `Re s > 1/2`.
    DirectSum,
}

impl ZetaMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            ZetaMethod::Hurwitz => "hurwitz",
            ZetaMethod::ChebyshevSeries => "chebyshev-series",
            ZetaMethod::CompleteBipartiteClosedForm => "complete-bipartite-closed-form",
            ZetaMethod::DirectSum => "direct-sum",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZetaValue {
    pub s: Complex64,
    pub value: Complex64,
    pub method: ZetaMethod,
    pub error_estimate: f64,
}

fn pow_real(base: f64, exponent: Complex64) -> Complex64 {
    (exponent * base.ln()).exp()
}

/// `(4^s (β - 1) + 2) (L/2π)^{2s} ζ_R(2s)` with its error estimate.
fn riemann_term(betti: usize, edge_length: f64, s: Complex64) -> Result<(Complex64, f64)> {
    let zeta = riemann_zeta(2.0 * s)?;
    let coefficient = pow_real(4.0, s) * (betti as f64 - 1.0) + 2.0;
    let scale = pow_real(edge_length / (2.0 * PI), 2.0 * s);
    Ok((coefficient * scale * zeta.value, (coefficient * scale).norm() * zeta.abs_error_estimate))
}

/// `𝒵(s)` by the Riemann-plus-Hurwitz-pairs representation, valid for all
/// `s != 1/2`.
pub fn quantum_zeta(ts: &TransferredSpectrum, s: Complex64) -> Result<ZetaValue> {
    if s == Complex64::new(0.5, 0.0) {
        return Err(Error::PoleAtHalf);
    }
    let (riemann, riemann_err) = riemann_term(ts.betti, ts.edge_length, s)?;
    let z = 2.0 * s;
    let mut pairs = Complex64::zero();
    let mut pairs_err = 0.0;
    for &a in ts.nonzero_phases() {
        let left = hurwitz_zeta(z, a)?;
        let right = if a == 0.5 { left } else { hurwitz_zeta(z, 1.0 - a)? };
        pairs += left.value + right.value;
        pairs_err += left.abs_error_estimate + right.abs_error_estimate;
    }
    let scale = pow_real(ts.edge_length / (2.0 * PI), z);
    Ok(ZetaValue {
        s,
        value: riemann + scale * pairs,
        method: ZetaMethod::Hurwitz,
        error_estimate: riemann_err + scale.norm() * pairs_err,
    })
}

/// Diagnostics of a [`quantum_zeta_series`] evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesEvaluation {
    pub zeta: ZetaValue,
    /// Number of terms `n` summed.
    pub terms: usize,
    /// Largest difference between the coefficient form and the cosine form
    /// of `Σ_j cos(k_j L n)` over `n <= 30`.
    pub max_coefficient_discrepancy: f64,
}

/// `Σ_{j>=2} cos(k_j L n)` for `n = 1..=max_n`, computed exactly from the
/// discrete power sums as `Σ_r (-2)^r n/(n+r) C(n+r, 2r) Z(-r)`.
///
/// The power sums are the exact values of the (binary) eigenvalues, and the
/// sums are formed in rational arithmetic, because the coefficients grow like
/// `4^n` with alternating signs.
pub fn cosine_sums_from_power_sums(phases: &[f64], max_n: usize) -> Vec<f64> {
    let lambdas: Vec<f64> = phases.iter().map(|a| 1.0 - (2.0 * PI * a).cos()).collect();
    let power_sums = exact_power_sums(&lambdas, max_n);
    cosine_sums_from_exact_power_sums(&power_sums, max_n)
}

/// `Σ_r c_{n,r} Z(-r)` for `n = 1..=max_n`, from exact power sums
/// `Z(-r)`, `r = 0..=max_n`.
pub fn cosine_sums_from_exact_power_sums(power_sums: &[BigRational], max_n: usize) -> Vec<f64> {
    assert!(power_sums.len() > max_n, "need power sums up to order {max_n}");
    (1..=max_n)
        .map(|n| {
            chebyshev_coefficients(n)
                .into_iter()
                .zip(power_sums)
                .fold(BigRational::zero(), |acc, (c, p)| acc + BigRational::from_integer(c) * p)
                .to_f64()
                .unwrap_or(f64::NAN)
        })
        .collect()
}

/// `Σ_{j>=2} cos(2π a_j n)`.
pub fn cosine_sum(phases: &[f64], n: usize) -> f64 {
    phases.iter().map(|a| (2.0 * PI * a * n as f64).cos()).sum()
}

/// Upper bound on `|Σ_{n>N} n^{2s-1} e^{inθ}|` divided into the
/// `1/|sin(θ/2)|` factor, from summation by parts.
fn oscillatory_tail_factor(s: Complex64, n: usize) -> f64 {
    let sigma = 2.0 * s.re - 1.0;
    let next = (n as f64 + 1.0).powf(sigma);
    if s.im == 0.0 {
        next
    } else {
        next + (2.0 * s - 1.0).norm() * (n as f64).powf(sigma) / (-sigma)
    }
}

/// `Σ_{n>=1} n^{-σ'} cos(n θ)` for a real decay exponent, summed until the
/// summation-by-parts tail bound `(N+1)^{-σ'}/|sin(θ/2)|` drops below
/// `tail_tol`. Returns the partial sum, the bound, and the number of terms.
pub fn fourier_cosine_series(exponent: f64, theta: f64, tail_tol: f64) -> Result<(f64, f64, usize)> {
    if !(exponent > 0.0) {
        return Err(Error::DomainError(format!("decay exponent must be positive, got {exponent}")));
    }
    let half = (0.5 * theta).sin().abs();
    if half == 0.0 {
        return Err(Error::DomainError("cosine series at θ ≡ 0 does not converge".into()));
    }
    let mut sum = 0.0;
    let mut n = 0usize;
    loop {
        for _ in 0..256 {
            n += 1;
            sum += (n as f64).powf(-exponent) * (n as f64 * theta).cos();
        }
        let bound = (n as f64 + 1.0).powf(-exponent) / half;
        if bound < tail_tol {
            return Ok((sum, bound, n));
        }
        if n >= SERIES_TERM_CAP {
            return Err(Error::NoConvergence { terms: n, bound, tolerance: tail_tol });
        }
    }
}

/// `𝒵(s)` for `Re s < 0` from the Fourier double series
///
/// ```text
/// 𝒵(s) = (2 L^{2s} Γ(1-2s)/π) sin(sπ) Σ_{n>=1} n^{2s-1} C_n + (4^s(β-1)+2)(L/2π)^{2s} ζ_R(2s),
/// C_n = Σ_r (-2)^r n/(n+r) C(n+r, 2r) Z(-r) = Σ_{j>=2} cos(k_j L n).
/// ```
///
/// For `n <= 30` both forms of `C_n` are computed and must agree to `1e-8`;
/// the coefficient form enters the sum. Beyond that the cosine form is used.
/// The sum over `n` stops once the summation-by-parts tail bound, scaled by
/// the prefactor, is below `tail_tol`.
pub fn quantum_zeta_series_detailed(ts: &TransferredSpectrum, s: Complex64, tail_tol: f64) -> Result<SeriesEvaluation> {
    if s.re >= 0.0 {
        return Err(Error::DomainError(format!("series representation needs Re(s) < 0, got {s}")));
    }
    if !(tail_tol > 0.0) {
        return Err(Error::DomainError(format!("tail tolerance must be positive, got {tail_tol}")));
    }
    let phases = ts.nonzero_phases();
    let (riemann, riemann_err) = riemann_term(ts.betti, ts.edge_length, s)?;
    let prefactor = 2.0 * pow_real(ts.edge_length, 2.0 * s) * gamma(1.0 - 2.0 * s)? / PI * (s * PI).sin();

    let inv_half_sines: f64 = phases.iter().map(|a| 1.0 / (PI * a).sin().abs()).sum();

    let literal = cosine_sums_from_power_sums(phases, LITERAL_COEFFICIENT_MAX_N);
    let mut max_discrepancy: f64 = 0.0;
    let exponent = 2.0 * s - 1.0;
    let mut sum = Complex64::zero();
    for (idx, &lit) in literal.iter().enumerate() {
        let n = idx + 1;
        let cos_form = cosine_sum(phases, n);
        let diff = (lit - cos_form).abs();
        if diff > COEFFICIENT_CHECK_TOLERANCE {
            return Err(Error::CoefficientMismatch { n, difference: diff });
        }
        max_discrepancy = max_discrepancy.max(diff);
        sum += pow_real(n as f64, exponent) * lit;
    }

    let mut n = LITERAL_COEFFICIENT_MAX_N;
    let bound = |n: usize| prefactor.norm() * oscillatory_tail_factor(s, n) * inv_half_sines;
    while bound(n) >= tail_tol {
        if n >= SERIES_TERM_CAP {
            return Err(Error::NoConvergence { terms: n, bound: bound(n), tolerance: tail_tol });
        }
        for _ in 0..1024 {
            n += 1;
            sum += pow_real(n as f64, exponent) * cosine_sum(phases, n);
        }
    }

    Ok(SeriesEvaluation {
        zeta: ZetaValue {
            s,
            value: prefactor * sum + riemann,
            method: ZetaMethod::ChebyshevSeries,
            error_estimate: bound(n) + riemann_err,
        },
        terms: n,
        max_coefficient_discrepancy: max_discrepancy,
    })
}

pub fn quantum_zeta_series(ts: &TransferredSpectrum, s: Complex64, tail_tol: f64) -> Result<ZetaValue> {
    quantum_zeta_series_detailed(ts, s, tail_tol).map(|e| e.zeta)
}

/// Casimir energy `E_c = 𝒵(-1/2)/2`, using `ζ_H(-1, a) = -B_2(a)/2`:
///
/// ```text
/// E_c = (π/L) [ -((β-1)/2 + 2)/12 - Σ_{j>=2} B_2(a_j) ].
/// ```
pub fn vacuum_energy(ts: &TransferredSpectrum) -> f64 {
    let bernoulli: f64 = ts
        .nonzero_phases()
        .iter()
        .map(|&a| bernoulli_polynomial(2, a).expect("order 2 is tabulated"))
        .sum();
    let riemann = -((ts.betti as f64 - 1.0) / 2.0 + 2.0) / 12.0;
    PI / ts.edge_length * (riemann - bernoulli)
}

/// Casimir force `-dE_c/dL = E_c/L`; positive is repulsive.
pub fn casimir_force(ts: &TransferredSpectrum) -> f64 {
    vacuum_energy(ts) / ts.edge_length
}

/// `𝒵'(0)`, assembled analytically: the Riemann term contributes
/// `-(β-1) ln 2 - (β+1) ln L` and each Hurwitz pair
/// `2 [∂ζ_H(0, a) + ∂ζ_H(0, 1-a)]` by Lerch's formula.
pub fn quantum_zeta_deriv0(ts: &TransferredSpectrum) -> Result<f64> {
    let beta = ts.betti as f64;
    // d/ds [(4^s(β-1)+2)(L/2π)^{2s} ζ_R(2s)] at s = 0
    // with ζ_R(0) = -1/2
    let riemann = -(beta - 1.0) * LN_2 - (beta + 1.0) * (ts.edge_length / (2.0 * PI)).ln()
        + 2.0 * (beta + 1.0) * riemann_zeta_deriv0();
    let mut pairs = 0.0;
    for (offset, &a) in ts.nonzero_phases().iter().enumerate() {
        if a <= 0.0 || a >= 1.0 {
            return Err(Error::DegenerateDeterminant { index: ts.kernel_dim_0 + offset + 1 });
        }
        pairs += 2.0 * (hurwitz_zeta_deriv0(a)? + hurwitz_zeta_deriv0(1.0 - a)?);
    }
    Ok(riemann + pairs)
}

/// `ln det'(𝓛) = -𝒵'(0)`.
pub fn log_spectral_determinant(ts: &TransferredSpectrum) -> Result<f64> {
    quantum_zeta_deriv0(ts).map(|d| -d)
}

/// Zeta-regularized determinant `det'(𝓛) = exp(-𝒵'(0))`.
pub fn spectral_determinant(ts: &TransferredSpectrum) -> Result<f64> {
    log_spectral_determinant(ts).map(f64::exp)
}

/// `ln det'` from the product form `2^{β-1} L^{β+1} Π_{j>=2} (2 sin(k_j L/2))²`.
pub fn log_spectral_determinant_product(ts: &TransferredSpectrum) -> Result<f64> {
    let beta = ts.betti as f64;
    let mut log = (beta - 1.0) * LN_2 + (beta + 1.0) * ts.edge_length.ln();
    for (offset, &a) in ts.nonzero_phases().iter().enumerate() {
        let chord = 2.0 * (PI * a).sin();
        if chord <= 0.0 {
            return Err(Error::DegenerateDeterminant { index: ts.kernel_dim_0 + offset + 1 });
        }
        log += 2.0 * chord.ln();
    }
    Ok(log)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralInvariants {
    pub vacuum_energy: f64,
    pub casimir_force: f64,
    /// `ln det'(𝓛) = -𝒵'(0)`.
    pub log_spectral_determinant: f64,
}

impl SpectralInvariants {
    pub fn compute(ts: &TransferredSpectrum) -> Result<Self> {
        Ok(SpectralInvariants {
            vacuum_energy: vacuum_energy(ts),
            casimir_force: casimir_force(ts),
            log_spectral_determinant: log_spectral_determinant(ts)?,
        })
    }

    pub fn spectral_determinant(&self) -> f64 {
        self.log_spectral_determinant.exp()
    }
}

/// Closed form of `𝒵(s)` for the equilateral complete bipartite graph:
///
/// ```text
/// -(L^{2s} Γ(1-2s)/π) sin(sπ) [(m+p-2) 4^s + 2] η(1-2s) + (4^s(mp-m-p) + 2)(L/2π)^{2s} ζ_R(2s).
/// ```
///
/// Accepted for `Re s < 1/2`, where the eta series in `1 - 2s` converges.
pub fn complete_bipartite_zeta_closed(m: usize, p: usize, edge_length: f64, s: Complex64) -> Result<ZetaValue> {
    if m == 0 || p == 0 {
        return Err(Error::DomainError(format!("part sizes must be positive, got ({m}, {p})")));
    }
    if !(edge_length > 0.0 && edge_length.is_finite()) {
        return Err(Error::DomainError(format!("edge length must be positive, got {edge_length}")));
    }
    if s.re >= 0.5 {
        return Err(Error::DomainError(format!("closed form needs Re(s) < 1/2, got {s}")));
    }
    let (m, p) = (m as f64, p as f64);
    let four_s = pow_real(4.0, s);
    let eta = dirichlet_eta(1.0 - 2.0 * s);
    let gamma_factor = gamma(1.0 - 2.0 * s)?;
    let first_scale = -pow_real(edge_length, 2.0 * s) * gamma_factor / PI * (s * PI).sin() * ((m + p - 2.0) * four_s + 2.0);
    let zeta = riemann_zeta(2.0 * s)?;
    let second_scale = (four_s * (m * p - m - p) + 2.0) * pow_real(edge_length / (2.0 * PI), 2.0 * s);
    Ok(ZetaValue {
        s,
        value: first_scale * eta.value + second_scale * zeta.value,
        method: ZetaMethod::CompleteBipartiteClosedForm,
        error_estimate: first_scale.norm() * eta.abs_error_estimate + second_scale.norm() * zeta.abs_error_estimate,
    })
}
