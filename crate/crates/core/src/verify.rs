//! Oracle and invariant checks over a catalog of graphs, reported as
//! pass/fail counts.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::catalog::{connected_graphs_up_to, named_graphs, random_connected_graphs};
use crate::error::Result;
use crate::graph::Graph;
use crate::oracle::{direct_zeta_sum, hurwitz_pair_fourier, multiplicity_by_rank, IncidenceMatrices};
use crate::quantum::{
    cosine_sum, cosine_sums_from_power_sums, dirichlet_multiplicities, log_spectral_determinant,
    log_spectral_determinant_product, quantum_zeta, quantum_zeta_series, spectrum_transfer, vacuum_energy,
    TransferredSpectrum,
};
use crate::spectrum::{eigenvalues, normalized_laplacian, DEFAULT_ZERO_TOLERANCE};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    fn record(&mut self, name: impl Into<String>, outcome: Result<(bool, String)>) {
        let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        self.checks.push(CheckOutcome { name: name.into(), passed, detail });
    }

    fn close(&mut self, name: impl Into<String>, got: Result<f64>, want: f64, tol: f64) {
        self.record(
            name,
            got.map(|g| ((g - want).abs() <= tol, format!("got {g:.17e}, want {want:.17e}, tol {tol:e}"))),
        );
    }
}

fn transfer(g: &Graph, edge_length: f64) -> Result<TransferredSpectrum> {
    let spec = eigenvalues(g, DEFAULT_ZERO_TOLERANCE)?;
    spectrum_transfer(g, &spec, edge_length)
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Graph-by-graph invariants.
fn check_graph(report: &mut VerificationReport, name: &str, g: &Graph, analytic: bool) {
    let ts = match transfer(g, 1.0) {
        Ok(ts) => ts,
        Err(e) => {
            report.record(format!("{name}: transfer"), Err(e));
            return;
        }
    };

    report.record(
        format!("{name}: transfer round trip"),
        eigenvalues(g, DEFAULT_ZERO_TOLERANCE).map(|spec| {
            let worst = spec
                .eigenvalues
                .iter()
                .zip(&ts.k_values)
                .map(|(l, k)| (1.0 - (k * ts.edge_length).cos() - l).abs())
                .fold(0.0, f64::max);
            (worst <= 1e-9, format!("max deviation {worst:e}"))
        }),
    );

    report.record(
        format!("{name}: multiplicities by rank"),
        eigenvalues(g, DEFAULT_ZERO_TOLERANCE).and_then(|spec| {
            let formula = dirichlet_multiplicities(g, &spec)?;
            let rank = multiplicity_by_rank(g);
            Ok((formula == rank, format!("formula {formula:?}, rank {rank:?}")))
        }),
    );

    let inc = IncidenceMatrices::new(g);
    let lap = normalized_laplacian(g);
    let diff = inc.laplacian_from_signed().max_abs_diff(&lap).max(inc.laplacian_from_unsigned().max_abs_diff(&lap));
    report.record(format!("{name}: incidence factorizations"), Ok((diff <= 1e-12, format!("max deviation {diff:e}"))));

    if !analytic {
        return;
    }

    for s in [1.0, 2.0] {
        report.record(
            format!("{name}: direct sum at s = {s}"),
            (|| {
                let direct = direct_zeta_sum(&ts, re(s), 1e-12)?;
                let hurwitz = quantum_zeta(&ts, re(s))?;
                let d = (direct.value - hurwitz.value).norm();
                Ok((d <= 1e-8, format!("difference {d:e}")))
            })(),
        );
    }
    for s in [-0.5, -1.0] {
        report.record(
            format!("{name}: series at s = {s}"),
            (|| {
                let series = quantum_zeta_series(&ts, re(s), 1e-8)?;
                let hurwitz = quantum_zeta(&ts, re(s))?;
                let d = (series.value - hurwitz.value).norm();
                Ok((d <= 1e-6, format!("difference {d:e}")))
            })(),
        );
    }
    report.record(
        format!("{name}: cosine sums"),
        Ok({
            let literal = cosine_sums_from_power_sums(ts.nonzero_phases(), 30);
            let worst = literal
                .iter()
                .enumerate()
                .map(|(i, c)| (c - cosine_sum(ts.nonzero_phases(), i + 1)).abs())
                .fold(0.0, f64::max);
            (worst <= 1e-8, format!("max deviation {worst:e}"))
        }),
    );
    report.close(
        format!("{name}: vacuum energy via continuation"),
        quantum_zeta(&ts, re(-0.5)).map(|z| z.value.re / 2.0),
        vacuum_energy(&ts),
        1e-9,
    );
    report.record(
        format!("{name}: determinant product form"),
        (|| {
            let lerch = log_spectral_determinant(&ts)?;
            let product = log_spectral_determinant_product(&ts)?;
            let rel = ((lerch - product).exp_m1()).abs();
            Ok((rel <= 1e-10, format!("relative difference {rel:e}")))
        })(),
    );
    report.record(
        format!("{name}: scaling laws"),
        (|| {
            let scaled = ts.with_edge_length(2.0)?;
            let mut worst: f64 = 0.0;
            for s in [-1.5, -0.5, 1.0, 2.0] {
                let want = quantum_zeta(&ts, re(s))?.value * 2f64.powf(2.0 * s);
                worst = worst.max((quantum_zeta(&scaled, re(s))?.value - want).norm());
            }
            worst = worst.max((vacuum_energy(&scaled) - vacuum_energy(&ts) / 2.0).abs());
            let det_ratio = log_spectral_determinant(&scaled)? - log_spectral_determinant(&ts)?;
            worst = worst.max((det_ratio - (ts.betti as f64 + 1.0) * 2f64.ln()).abs());
            Ok((worst <= 1e-9, format!("max deviation {worst:e}")))
        })(),
    );
}

/// Closed-form results for complete bipartite graphs and stars.
fn check_closed_forms(report: &mut VerificationReport) {
    report.close(
        "K_{2,3}: vacuum energy",
        Graph::complete_bipartite(2, 3).and_then(|g| transfer(&g, 1.0)).map(|ts| vacuum_energy(&ts)),
        -PI / 16.0,
        1e-12,
    );
    for e in 1..=8 {
        report.close(
            format!("K_{{1,{e}}}: vacuum energy"),
            Graph::star(e).and_then(|g| transfer(&g, 1.0)).map(|ts| vacuum_energy(&ts)),
            PI * (e as f64 - 3.0) / 48.0,
            1e-9,
        );
    }
    for m in 1..=4 {
        for p in m..=5 {
            for l in [0.5, 1.0, 2.0] {
                let mp = (m * p) as f64;
                let want = mp * 2f64.ln() + (mp - m as f64 - p as f64 + 2.0) * f64::ln(l);
                report.record(
                    format!("K_{{{m},{p}}}, L = {l}: determinant"),
                    Graph::complete_bipartite(m, p).and_then(|g| transfer(&g, l)).and_then(|ts| {
                        let got = log_spectral_determinant(&ts)?;
                        let rel = (got - want).exp_m1().abs();
                        Ok((rel <= 1e-10, format!("relative difference {rel:e}")))
                    }),
                );
            }
        }
    }
    for s in [-2.5, -1.0, -0.3] {
        for a in [0.1, 0.25, 0.4] {
            report.record(
                format!("Hurwitz pair identity at s = {s}, a = {a}"),
                hurwitz_pair_fourier(s, a, 1e-10).map(|(l, r, _)| {
                    let d = (l - r).abs();
                    (d <= 1e-8, format!("difference {d:e}"))
                }),
            );
        }
    }
}

/// All per-graph checks for a single graph.
pub fn verify_graph(name: &str, g: &Graph) -> VerificationReport {
    let mut report = VerificationReport::default();
    check_graph(&mut report, name, g, true);
    report
}

/// Runs the full suite: closed forms, the analytic cross-checks on the named
/// graphs and a few random graphs, and the structural checks on every
/// connected graph with at most five vertices.
pub fn run_suite() -> VerificationReport {
    let mut report = VerificationReport::default();
    check_closed_forms(&mut report);
    for (name, g) in named_graphs() {
        check_graph(&mut report, name, &g, true);
    }
    for (i, g) in random_connected_graphs(4, 6..=8, 7).iter().enumerate() {
        check_graph(&mut report, &format!("random #{i}"), g, true);
    }
    for (i, g) in connected_graphs_up_to(5).iter().enumerate() {
        check_graph(&mut report, &format!("small #{i}"), g, false);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_passes() {
        let report = run_suite();
        assert!(report.all_passed(), "{:#?}", report.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>());
    }

    #[test]
    fn single_graph_checks_pass() {
        let mut report = VerificationReport::default();
        check_graph(&mut report, "K_{2,3}", &Graph::complete_bipartite(2, 3).unwrap(), true);
        assert!(report.all_passed(), "{:#?}", report.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>());
        assert!(report.passed() > 5);
    }
}
