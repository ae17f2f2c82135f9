//! Independent checks: explicit summation over the quantum spectrum,
//! Dirichlet multiplicities from incidence-matrix ranks, and finite
//! differences.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::eigen::Matrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::quantum::{fourier_cosine_series, TransferredSpectrum, ZetaMethod, ZetaValue};
use crate::special::{bernoulli_number, gamma, hurwitz_zeta};

/// Vertex-edge incidence data of a graph.
///
/// `signed[v][e]` is `+1` where edge `e` starts (`x_e = 0`), `-1` where it
/// ends (`x_e = L`); `unsigned[v][e]` is `1` wherever `e` touches `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrices {
    pub signed: Vec<Vec<i64>>,
    pub unsigned: Vec<Vec<i64>>,
    pub degrees: Vec<usize>,
}

impl IncidenceMatrices {
    pub fn new(g: &Graph) -> Self {
        let (nv, ne) = (g.vertex_count(), g.edge_count());
        let mut signed = vec![vec![0i64; ne]; nv];
        let mut unsigned = vec![vec![0i64; ne]; nv];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            signed[u][e] = 1;
            signed[v][e] = -1;
            unsigned[u][e] = 1;
            unsigned[v][e] = 1;
        }
        IncidenceMatrices { signed, unsigned, degrees: g.degrees().to_vec() }
    }

    pub fn vertex_count(&self) -> usize {
        self.signed.len()
    }

    pub fn edge_count(&self) -> usize {
        self.signed.first().map_or(0, Vec::len)
    }

    /// `D^{-1} Q Q^T`.
    pub fn laplacian_from_signed(&self) -> Matrix {
        self.degree_scaled_gram(&self.signed, 1)
    }

    /// `2I - D^{-1} M M^T`.
    pub fn laplacian_from_unsigned(&self) -> Matrix {
        let mut m = self.degree_scaled_gram(&self.unsigned, -1);
        for v in 0..m.dim() {
            m[(v, v)] += 2.0;
        }
        m
    }

    fn degree_scaled_gram(&self, b: &[Vec<i64>], sign: i64) -> Matrix {
        let n = self.vertex_count();
        let mut m = Matrix::zeros(n);
        for v in 0..n {
            for u in 0..n {
                let dot: i64 = b[v].iter().zip(&b[u]).map(|(x, y)| x * y).sum();
                m[(v, u)] = (sign * dot) as f64 / self.degrees[v] as f64;
            }
        }
        m
    }
}

fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(a: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev_pivot: i128 = 1;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col];
        for r in rank + 1..rows {
            let factor = m[r][col];
            for c in col..cols {
                m[r][c] = (pivot * m[r][c] - factor * m[rank][c]) / prev_pivot;
            }
        }
        prev_pivot = pivot;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Kernel dimensions appearing in the multiplicity count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IncidenceKernels {
    pub signed: usize,
    pub signed_transpose: usize,
    pub unsigned: usize,
    pub unsigned_transpose: usize,
}

pub fn incidence_kernels(g: &Graph) -> IncidenceKernels {
    let inc = IncidenceMatrices::new(g);
    let (nv, ne) = (inc.vertex_count(), inc.edge_count());
    let rank_q = integer_rank(&inc.signed);
    let rank_m = integer_rank(&inc.unsigned);
    debug_assert_eq!(rank_q, integer_rank(&transpose(&inc.signed)));
    IncidenceKernels {
        signed: ne - rank_q,
        signed_transpose: nv - rank_q,
        unsigned: ne - rank_m,
        unsigned_transpose: nv - rank_m,
    }
}

/// Dirichlet multiplicities `(even, odd)` assembled from incidence kernels:
/// the sine coefficients span `ker Q` (even `n`) or `ker M` (odd `n`) and the
/// cosine coefficients span `ker Q^T = ker Δ` or `ker M^T = ker(Δ - 2I)`.
pub fn multiplicity_by_rank(g: &Graph) -> (usize, usize) {
    let k = incidence_kernels(g);
    (k.signed + k.signed_transpose, k.unsigned + k.unsigned_transpose)
}

const TAIL_CORRECTIONS: usize = 4;
const MAX_BLOCKS: usize = 1 << 20;

/// One arithmetic ladder of quantum wavenumbers `(2π/L)(n + offset)`, `n >= 0`.
#[derive(Debug, Clone, Copy)]
struct Ladder {
    offset: f64,
    multiplicity: usize,
}

fn ladders(ts: &TransferredSpectrum) -> Vec<Ladder> {
    let mut out = Vec::new();
    for &a in ts.nonzero_phases() {
        if a < 0.5 {
            out.push(Ladder { offset: a, multiplicity: 1 });
            out.push(Ladder { offset: 1.0 - a, multiplicity: 1 });
        }
    }
    if ts.mult_even > 0 {
        out.push(Ladder { offset: 1.0, multiplicity: ts.mult_even });
    }
    if ts.mult_odd > 0 {
        out.push(Ladder { offset: 0.5, multiplicity: ts.mult_odd });
    }
    out
}

fn rising_norm(z: Complex64, len: usize) -> f64 {
    (0..len).map(|j| (z + j as f64).norm()).product()
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Euler–Maclaurin estimate of `Σ_{n>=start} (n + c)^{-z}` and a bound on
/// its error (the first omitted correction).
fn ladder_tail(z: Complex64, c: f64, start: usize) -> (Complex64, f64) {
    let x = start as f64 + c;
    let x_pow = (-z * x.ln()).exp();
    let mut tail = x_pow * x / (z - 1.0) + 0.5 * x_pow;
    let mut rising = z;
    let mut power = x_pow / x;
    for k in 1..=TAIL_CORRECTIONS {
        tail += rising * power * (bernoulli_number(2 * k).unwrap() / factorial(2 * k));
        rising *= (z + (2 * k - 1) as f64) * (z + (2 * k) as f64);
        power /= x * x;
    }
    let k = TAIL_CORRECTIONS + 1;
    let bound = bernoulli_number(2 * k).unwrap().abs() / factorial(2 * k)
        * rising_norm(z, 2 * k - 1)
        * x.powf(-z.re - (2 * k) as f64 + 1.0);
    (tail, bound)
}

/// `𝒵(s) = Σ' k^{-2s}` for `Re s > 1/2` by listing the quantum spectrum
/// explicitly: the ladders `2nπ/L ± k_j` for every `k_j ∈ (0, π/L)`, and the
/// Dirichlet ladder `nπ/L` with the even and odd multiplicities. All
/// wavenumbers below `2π n_max / L` are summed in ascending order; the
/// remainder of each ladder is added from its Euler–Maclaurin expansion.
/// `n_max` doubles until the tail bound is below `tail_tol`.
pub fn direct_zeta_sum(ts: &TransferredSpectrum, s: Complex64, tail_tol: f64) -> Result<ZetaValue> {
    let (value, bound, _) = direct_zeta_sum_with_blocks(ts, s, tail_tol, 256)?;
    Ok(ZetaValue { s, value, method: ZetaMethod::DirectSum, error_estimate: bound })
}

/// Same as [`direct_zeta_sum`] starting from `initial_blocks` periods;
/// returns the value, the error bound and the number of periods summed.
pub fn direct_zeta_sum_with_blocks(
    ts: &TransferredSpectrum,
    s: Complex64,
    tail_tol: f64,
    initial_blocks: usize,
) -> Result<(Complex64, f64, usize)> {
    if s.re <= 0.5 {
        return Err(Error::DomainError(format!("direct summation needs Re(s) > 1/2, got {s}")));
    }
    if !(tail_tol > 0.0) {
        return Err(Error::DomainError(format!("tail tolerance must be positive, got {tail_tol}")));
    }
    let z = 2.0 * s;
    let period = 2.0 * PI / ts.edge_length;
    let scale = (-z * period.ln()).exp();
    let ladders = ladders(ts);

    let mut blocks = initial_blocks.max(1);
    loop {
        let mut tail = Complex64::new(0.0, 0.0);
        let mut tail_bound = 0.0;
        for ladder in &ladders {
            let (t, b) = ladder_tail(z, ladder.offset, blocks);
            tail += t * ladder.multiplicity as f64;
            tail_bound += b * ladder.multiplicity as f64;
        }
        tail_bound *= scale.norm();
        if tail_bound < tail_tol || blocks >= MAX_BLOCKS {
            if tail_bound >= tail_tol {
                return Err(Error::NoConvergence { terms: blocks, bound: tail_bound, tolerance: tail_tol });
            }
            let mut wavenumbers: Vec<(f64, usize)> = ladders
                .iter()
                .flat_map(|l| (0..blocks).map(move |n| (period * (n as f64 + l.offset), l.multiplicity)))
                .collect();
            wavenumbers.sort_by(|x, y| x.0.total_cmp(&y.0));
            let mut head = Complex64::new(0.0, 0.0);
            let mut magnitude = 0.0;
            for &(k, mult) in &wavenumbers {
                let term = (-z * k.ln()).exp() * mult as f64;
                magnitude += term.norm();
                head += term;
            }
            let roundoff = f64::EPSILON * wavenumbers.len() as f64 * magnitude;
            return Ok((head + scale * tail, tail_bound + roundoff, blocks));
        }
        blocks *= 2;
    }
}

/// Both sides of the Hurwitz pair identity for real `s < 0`, `a ∈ (0, 1)`:
///
/// ```text
/// ζ_H(2s, a) + ζ_H(2s, 1 - a) = 2Γ(1-2s)(2π)^{2s}/π · sin(sπ) · Σ_{n>=1} n^{2s-1} cos(2πna)
/// ```
///
/// Returns `(left, right, bound)` where `bound` covers the truncation of the
/// Fourier side.
pub fn hurwitz_pair_fourier(s: f64, a: f64, tail_tol: f64) -> Result<(f64, f64, f64)> {
    if !(s < 0.0) {
        return Err(Error::DomainError(format!("Fourier side needs s < 0, got {s}")));
    }
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::DomainError(format!("phase must lie in (0, 1), got {a}")));
    }
    let z = Complex64::new(2.0 * s, 0.0);
    let left = hurwitz_zeta(z, a)?.value.re + hurwitz_zeta(z, 1.0 - a)?.value.re;
    let prefactor = 2.0 * gamma(Complex64::new(1.0 - 2.0 * s, 0.0))?.re * (2.0 * PI).powf(2.0 * s) / PI * (s * PI).sin();
    let inner_tol = tail_tol / prefactor.abs().max(1.0);
    let (series, bound, _) = fourier_cosine_series(1.0 - 2.0 * s, 2.0 * PI * a, inner_tol)?;
    Ok((left, prefactor * series, prefactor.abs() * bound))
}

/// Central difference `(f(x0 + h) - f(x0 - h)) / 2h`.
pub fn finite_difference_deriv<F>(f: F, x0: f64, h: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(h > 0.0) {
        return Err(Error::DomainError(format!("step must be positive, got {h}")));
    }
    Ok((f(x0 + h)? - f(x0 - h)?) / (2.0 * h))
}
