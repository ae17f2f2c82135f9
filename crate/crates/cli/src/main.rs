//! `qgzeta`: spectral zeta function, Casimir energy and spectral determinant
//! of equilateral quantum graphs.
//!
//! Exit status: 0 on success, 1 on input error, 2 when `verify` finds a
//! failing check.

mod report;
mod source;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::json;

use qgzeta::quantum::{
    casimir_force, log_spectral_determinant, quantum_zeta, quantum_zeta_series, vacuum_energy,
};
use qgzeta::verify::{run_suite, verify_graph, VerificationReport};

use report::{Format, Record, Report};
use source::{load_edge_list, load_family, load_spectrum_json, parse_complex, parse_length, Loaded};

/// Tail tolerance of the series rows added for `Re s < 0`.
const SERIES_TAIL_TOL: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(name = "qgzeta", version, about = "Spectral zeta functions of equilateral quantum graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normalized Laplacian eigenvalues, wavenumbers and Dirichlet multiplicities.
    Spectrum(Common),
    /// Quantum spectral zeta function at one or more points.
    Zeta {
        #[command(flatten)]
        common: Common,
        /// Evaluation points, `re` or `re+imi`; repeat or separate with commas.
        #[arg(long = "s", value_name = "S", required = true, value_delimiter = ',',
              allow_hyphen_values = true, value_parser = parse_complex)]
        s: Vec<Complex64>,
    },
    /// Vacuum (Casimir) energy and Casimir force.
    Energy(Common),
    /// Zeta-regularized spectral determinant.
    Determinant(Common),
    /// Oracle and invariant checks; the built-in catalog unless a graph is given.
    Verify(Common),
}

#[derive(Debug, Args)]
#[group(id = "source", multiple = false)]
struct GraphSource {
    /// Edge-list file: one `u v` pair per line, `#` comments.
    #[arg(long, value_name = "FILE", group = "source")]
    graph: Option<PathBuf>,
    /// Built-in family: `complete-bipartite M P`, `star E` or `cycle N`.
    #[arg(long, num_args = 2..=3, value_names = ["NAME", "ARGS"], group = "source")]
    family: Option<Vec<String>>,
    /// JSON written by `qgzeta spectrum --format json`.
    #[arg(long, value_name = "FILE", group = "source")]
    spectrum_json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Common {
    #[command(flatten)]
    source: GraphSource,
    /// Common edge length L.
    #[arg(long, default_value = "1", value_parser = parse_length)]
    length: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

impl Common {
    fn load(&self) -> Result<Option<Loaded>> {
        let s = &self.source;
        Ok(match (&s.graph, &s.family, &s.spectrum_json) {
            (Some(path), _, _) => Some(load_edge_list(path)?),
            (_, Some(words), _) => Some(load_family(words)?),
            (_, _, Some(path)) => Some(load_spectrum_json(path)?),
            _ => None,
        })
    }

    fn require(&self) -> Result<Loaded> {
        match self.load()? {
            Some(loaded) => Ok(loaded),
            None => bail!("one of --graph, --family or --spectrum-json is required"),
        }
    }
}

fn spectrum(common: &Common) -> Result<Report> {
    let loaded = common.require()?;
    let ts = loaded.transfer(common.length)?;
    let mut report = Report::new(Some(loaded.summary), common.length);
    for (j, (&lambda, (&k, &a))) in loaded.spectrum.eigenvalues.iter().zip(ts.k_values.iter().zip(&ts.phases)).enumerate() {
        report.results.push(vec![("index", (j + 1).into()), ("lambda", lambda.into()), ("k", k.into()), ("phase", a.into())]);
    }
    report.extra.push((
        "dirichlet_multiplicities",
        json!({"even": ts.mult_even, "odd": ts.mult_odd}),
    ));
    report.extra.push(("kernel_dim_0", json!(ts.kernel_dim_0)));
    report.extra.push(("kernel_dim_2", json!(ts.kernel_dim_2)));
    Ok(report)
}

fn zeta_row(z: &qgzeta::ZetaValue) -> Record {
    vec![
        ("s_re", z.s.re.into()),
        ("s_im", z.s.im.into()),
        ("re", z.value.re.into()),
        ("im", z.value.im.into()),
        ("method", z.method.as_str().into()),
        ("error_estimate", z.error_estimate.into()),
    ]
}

fn zeta(common: &Common, points: &[Complex64]) -> Result<Report> {
    let loaded = common.require()?;
    let ts = loaded.transfer(common.length)?;
    let mut report = Report::new(Some(loaded.summary), common.length);
    for &s in points {
        let z = quantum_zeta(&ts, s).with_context(|| format!("--s {s}"))?;
        report.results.push(zeta_row(&z));
        if s.re < 0.0 {
            let series = quantum_zeta_series(&ts, s, SERIES_TAIL_TOL).with_context(|| format!("--s {s}"))?;
            report.results.push(zeta_row(&series));
        }
    }
    Ok(report)
}

fn quantity(name: &str, value: f64) -> Record {
    vec![("quantity", name.into()), ("value", value.into())]
}

fn energy(common: &Common) -> Result<Report> {
    let loaded = common.require()?;
    let ts = loaded.transfer(common.length)?;
    let mut report = Report::new(Some(loaded.summary), common.length);
    report.results.push(quantity("vacuum_energy", vacuum_energy(&ts)));
    report.results.push(quantity("casimir_force", casimir_force(&ts)));
    Ok(report)
}

fn determinant(common: &Common) -> Result<Report> {
    let loaded = common.require()?;
    let ts = loaded.transfer(common.length)?;
    let log_det = log_spectral_determinant(&ts)?;
    let mut report = Report::new(Some(loaded.summary), common.length);
    report.results.push(quantity("spectral_determinant", log_det.exp()));
    report.results.push(quantity("log_spectral_determinant", log_det));
    Ok(report)
}

fn verify(common: &Common) -> Result<(Report, VerificationReport)> {
    let loaded = common.load()?;
    let checks = match &loaded {
        Some(Loaded { graph: Some(g), .. }) => verify_graph("graph", g),
        Some(_) => bail!("--spectrum-json: verify needs an explicit graph"),
        None => run_suite(),
    };
    let mut report = Report::new(loaded.map(|l| l.summary), common.length);
    for c in &checks.checks {
        report.results.push(vec![("check", c.name.clone().into()), ("passed", c.passed.into()), ("detail", c.detail.clone().into())]);
    }
    report.extra.push(("passed", json!(checks.passed())));
    report.extra.push(("failed", json!(checks.failed())));
    Ok((report, checks))
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let (report, format, status) = match &cli.command {
        Command::Spectrum(c) => (spectrum(c)?, c.format, ExitCode::SUCCESS),
        Command::Zeta { common, s } => (zeta(common, s)?, common.format, ExitCode::SUCCESS),
        Command::Energy(c) => (energy(c)?, c.format, ExitCode::SUCCESS),
        Command::Determinant(c) => (determinant(c)?, c.format, ExitCode::SUCCESS),
        Command::Verify(c) => {
            let (report, checks) = verify(c)?;
            eprintln!("{} passed, {} failed", checks.passed(), checks.failed());
            for failure in checks.checks.iter().filter(|c| !c.passed) {
                eprintln!("FAIL {}: {}", failure.name, failure.detail);
            }
            let status = if checks.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(2) };
            (report, c.format, status)
        }
    };
    report.write(format, &mut io::stdout().lock())?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
