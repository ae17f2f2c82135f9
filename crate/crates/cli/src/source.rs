//! Graph sources and numeric argument parsing.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use num_complex::Complex64;
use serde_json::Value;

use qgzeta::quantum::spectrum_transfer;
use qgzeta::{DiscreteSpectrum, Graph, TransferredSpectrum, DEFAULT_ZERO_TOLERANCE};

/// Summary of the discrete graph printed with every result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub beta: usize,
    pub bipartite: bool,
}

/// A loaded graph: either an explicit edge list or a bare spectrum.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub graph: Option<Graph>,
    pub summary: GraphSummary,
    pub spectrum: DiscreteSpectrum,
}

impl Loaded {
    pub fn transfer(&self, edge_length: f64) -> Result<TransferredSpectrum> {
        let ts = match &self.graph {
            Some(g) => spectrum_transfer(g, &self.spectrum, edge_length),
            None => TransferredSpectrum::from_counts(self.summary.vertices, self.summary.edges, &self.spectrum, edge_length),
        };
        ts.context("--length")
    }
}

fn from_graph(g: Graph) -> Result<Loaded> {
    let spectrum = DiscreteSpectrum::of_graph(&g, DEFAULT_ZERO_TOLERANCE)?;
    let summary = GraphSummary {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        beta: g.betti_number(),
        bipartite: g.is_bipartite(),
    };
    Ok(Loaded { graph: Some(g), summary, spectrum })
}

pub fn load_edge_list(path: &Path) -> Result<Loaded> {
    let text = fs::read_to_string(path).with_context(|| format!("--graph: cannot read {}", path.display()))?;
    let g = Graph::parse_edge_list(&text).with_context(|| format!("--graph: {}", path.display()))?;
    from_graph(g)
}

fn count(name: &str, text: &str) -> Result<usize> {
    text.parse().map_err(|_| anyhow!("--family {name}: expected a positive integer, got {text:?}"))
}

/// `complete-bipartite m p`, `star E` or `cycle n`.
pub fn load_family(words: &[String]) -> Result<Loaded> {
    let g = match words {
        [name, m, p] if name == "complete-bipartite" => Graph::complete_bipartite(count(name, m)?, count(name, p)?),
        [name, e] if name == "star" => Graph::star(count(name, e)?),
        [name, n] if name == "cycle" => Graph::cycle(count(name, n)?),
        _ => bail!(
            "--family: expected `complete-bipartite M P`, `star E` or `cycle N`, got {:?}",
            words.join(" ")
        ),
    };
    from_graph(g.context("--family")?)
}

/// Re-ingests the JSON written by the `spectrum` command.
pub fn load_spectrum_json(path: &Path) -> Result<Loaded> {
    let flag = "--spectrum-json";
    let text = fs::read_to_string(path).with_context(|| format!("{flag}: cannot read {}", path.display()))?;
    let doc: Value = serde_json::from_str(&text).with_context(|| format!("{flag}: {}", path.display()))?;
    let field = |key: &str| {
        doc["graph"][key]
            .as_u64()
            .map(|x| x as usize)
            .ok_or_else(|| anyhow!("{flag}: missing integer graph.{key}"))
    };
    let (vertices, edges) = (field("V")?, field("E")?);
    let eigenvalues = doc["results"]
        .as_array()
        .ok_or_else(|| anyhow!("{flag}: missing results array"))?
        .iter()
        .map(|r| r["lambda"].as_f64().ok_or_else(|| anyhow!("{flag}: result without numeric lambda")))
        .collect::<Result<Vec<_>>>()?;
    let spectrum = DiscreteSpectrum::from_eigenvalues(eigenvalues, DEFAULT_ZERO_TOLERANCE).context(flag)?;
    if edges + 1 < vertices {
        bail!("{flag}: {edges} edges cannot connect {vertices} vertices");
    }
    let summary = GraphSummary {
        vertices,
        edges,
        beta: edges + 1 - vertices,
        bipartite: spectrum.kernel_dim_2 > 0,
    };
    Ok(Loaded { graph: None, summary, spectrum })
}

/// Parses `re`, `re+imi` or `re-imi`.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let t = text.trim();
    let bad = || format!("expected a number or `re+imi`, got {text:?}");
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|x| Complex64::new(x, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'))
        .unwrap_or(0);
    let re = if split == 0 { 0.0 } else { body[..split].parse::<f64>().map_err(|_| bad())? };
    let im = match &body[split..] {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => s.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(Complex64::new(re, im))
}

pub fn parse_length(text: &str) -> Result<f64, String> {
    match text.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("expected a positive length, got {text:?}")),
    }
}
