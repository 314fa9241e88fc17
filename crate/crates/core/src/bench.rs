//! Benchmark matrix: datasets × algorithms, timed, emitted as CSV and a
//! markdown table.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Deserialize;

use crate::approx::{aprx2_spanning_bound, aprx3_burning};
use crate::burning::{
    burning_upper_bound, estimate_burning_number, exact_burning_number_with_cap, BurningSequence, SearchStrategy,
    DEFAULT_EXACT_CAP,
};
use crate::cbrh::{cbrh_estimate, MemoTable};
use crate::error::{Error, Result};
use crate::fixtures::fixture;
use crate::generate::{generate_graph, Model};
use crate::graph::Graph;
use crate::heuristics::{Bbgh, Icch};
use crate::io::{load_graph, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Deserialize)]
#[serde(try_from = "String")]
pub enum Algorithm {
    Bbgh,
    Icch,
    /// Greedy drivers with a linear upward budget scan instead of binary
    /// search.
    BbghLinear,
    IcchLinear,
    Cbrh,
    Aprx3,
    Aprx2,
    Exact,
}

impl Algorithm {
    pub const ALL: [Algorithm; 8] = [
        Algorithm::Bbgh,
        Algorithm::Icch,
        Algorithm::BbghLinear,
        Algorithm::IcchLinear,
        Algorithm::Cbrh,
        Algorithm::Aprx3,
        Algorithm::Aprx2,
        Algorithm::Exact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Bbgh => "bbgh",
            Algorithm::Icch => "icch",
            Algorithm::BbghLinear => "bbgh-linear",
            Algorithm::IcchLinear => "icch-linear",
            Algorithm::Cbrh => "cbrh",
            Algorithm::Aprx3 => "aprx3",
            Algorithm::Aprx2 => "aprx2",
            Algorithm::Exact => "exact",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_owned()))
    }
}

impl TryFrom<String> for Algorithm {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub exact_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { exact_cap: DEFAULT_EXACT_CAP }
    }
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub estimate: usize,
    pub sequence: BurningSequence,
    /// Recursive calls, CBRH only.
    pub calls: Option<usize>,
}

/// Runs one algorithm to completion on a non-empty graph.
///
/// CBRH starts from [`burning_upper_bound`] and moves up while it fails;
/// `aprx2` runs on a BFS spanning forest.
pub fn solve(g: &Graph, algo: Algorithm, opts: SolveOptions) -> Result<Solution> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let plain = |(estimate, sequence): (usize, BurningSequence)| Solution { estimate, sequence, calls: None };
    match algo {
        Algorithm::Bbgh => estimate_burning_number(g, &Bbgh::default(), SearchStrategy::Binary).map(plain),
        Algorithm::Icch => estimate_burning_number(g, &Icch, SearchStrategy::Binary).map(plain),
        Algorithm::BbghLinear => estimate_burning_number(g, &Bbgh::default(), SearchStrategy::Linear).map(plain),
        Algorithm::IcchLinear => estimate_burning_number(g, &Icch, SearchStrategy::Linear).map(plain),
        Algorithm::Aprx3 => aprx3_burning(g).map(plain),
        Algorithm::Aprx2 => aprx2_spanning_bound(g).map(plain),
        Algorithm::Exact => exact_burning_number_with_cap(g, opts.exact_cap).map(plain),
        Algorithm::Cbrh => {
            // The greedy burn can miss at the radius bound, so raise the
            // starting budget until it lands. Budget n always succeeds.
            let mut calls = 0;
            for b in burning_upper_bound(g)?..=g.vertex_count() {
                let out = cbrh_estimate(g, b, &mut MemoTable::new())?;
                calls += out.recursive_calls;
                if let Some(estimate) = out.estimate {
                    return Ok(Solution { estimate, sequence: out.sequence, calls: Some(calls) });
                }
            }
            unreachable!("every step burns at least its source")
        }
    }
}

/// One dataset entry of a benchmark config. Exactly one of `fixture`,
/// `path` and `generate` must be set.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetSpec {
    pub name: Option<String>,
    pub fixture: Option<String>,
    pub path: Option<PathBuf>,
    pub format: Option<String>,
    pub generate: Option<Model>,
    /// Ensemble size for generated datasets.
    #[serde(default = "one")]
    pub count: usize,
    /// Seed of the first ensemble member; member `k` uses `seed + k`.
    #[serde(default)]
    pub seed: u64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchConfig {
    #[serde(default)]
    pub datasets: Vec<DatasetSpec>,
    #[serde(default)]
    pub algorithms: Vec<Algorithm>,
    #[serde(default = "one")]
    pub repetitions: usize,
    #[serde(default)]
    pub parallel: bool,
    #[serde(default = "default_cap")]
    pub exact_cap: usize,
    /// Relative dataset paths are resolved against this directory.
    #[serde(skip)]
    pub base_dir: PathBuf,
}

fn one() -> usize {
    1
}

fn default_cap() -> usize {
    DEFAULT_EXACT_CAP
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            datasets: Vec::new(),
            algorithms: Vec::new(),
            repetitions: 1,
            parallel: false,
            exact_cap: DEFAULT_EXACT_CAP,
            base_dir: PathBuf::new(),
        }
    }
}

impl BenchConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let mut config = Self::from_toml(&std::fs::read_to_string(path)?)?;
        config.base_dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok(config)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Estimate {
    Value(usize),
    /// Ensemble mean, shown with one decimal.
    Mean(f64),
}

impl Estimate {
    pub fn as_f64(self) -> f64 {
        match self {
            Estimate::Value(v) => v as f64,
            Estimate::Mean(m) => m,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchResult {
    pub dataset: String,
    pub n: usize,
    pub m: usize,
    pub algo: Algorithm,
    /// Error message when the cell failed.
    pub estimate: std::result::Result<Estimate, String>,
    /// Mean solver time over the repetitions; loading is not included.
    pub ms: f64,
    pub calls: Option<usize>,
    pub seed: Option<u64>,
}

impl BenchResult {
    pub const HEADER: [&'static str; 8] = ["dataset", "n", "m", "algo", "estimate", "ms", "calls", "seed"];

    pub fn is_mean(&self) -> bool {
        matches!(self.estimate, Ok(Estimate::Mean(_)))
    }

    pub fn cells(&self) -> [String; 8] {
        let estimate = match &self.estimate {
            Ok(Estimate::Value(v)) => v.to_string(),
            Ok(Estimate::Mean(m)) => format!("{m:.1}"),
            Err(e) => format!("error: {e}"),
        };
        [
            self.dataset.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.algo.to_string(),
            estimate,
            format!("{:.3}", self.ms),
            self.calls.map(|c| c.to_string()).unwrap_or_default(),
            self.seed.map(|s| s.to_string()).unwrap_or_default(),
        ]
    }
}

struct Instance {
    dataset: String,
    /// Ensemble this instance belongs to, for the mean row.
    ensemble: Option<usize>,
    seed: Option<u64>,
    graph: std::result::Result<Graph, String>,
}

fn load_instances(config: &BenchConfig) -> Result<(Vec<Instance>, usize)> {
    let mut out = Vec::new();
    let mut ensembles = 0;
    for spec in &config.datasets {
        let sources = [spec.fixture.is_some(), spec.path.is_some(), spec.generate.is_some()];
        if sources.iter().filter(|&&s| s).count() != 1 {
            return Err(Error::Config("each dataset needs exactly one of fixture, path, generate".into()));
        }
        if let Some(name) = &spec.fixture {
            let dataset = spec.name.clone().unwrap_or_else(|| name.clone());
            out.push(Instance { dataset, ensemble: None, seed: None, graph: fixture(name).map_err(|e| e.to_string()) });
        } else if let Some(path) = &spec.path {
            let format = match &spec.format {
                Some(f) => f.parse()?,
                None => Format::from_path(path),
            };
            let full = config.base_dir.join(path);
            let dataset = spec.name.clone().unwrap_or_else(|| {
                path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| path.display().to_string())
            });
            let graph = load_graph(&full, format).map_err(|e| format!("{}: {e}", full.display()));
            out.push(Instance { dataset, ensemble: None, seed: None, graph });
        } else if let Some(model) = spec.generate {
            let dataset = spec.name.clone().unwrap_or_else(|| model.name());
            let ensemble = (spec.count > 1).then(|| {
                ensembles += 1;
                ensembles - 1
            });
            for k in 0..spec.count {
                let seed = spec.seed + k as u64;
                let graph = generate_graph(model, seed).map_err(|e| e.to_string());
                out.push(Instance { dataset: dataset.clone(), ensemble, seed: Some(seed), graph });
            }
        }
    }
    Ok((out, ensembles))
}

fn run_cell(instance: &Instance, algo: Algorithm, config: &BenchConfig) -> BenchResult {
    let (n, m) = instance.graph.as_ref().map(|g| (g.vertex_count(), g.edge_count())).unwrap_or((0, 0));
    let mut result = BenchResult {
        dataset: instance.dataset.clone(),
        n,
        m,
        algo,
        estimate: Err(String::new()),
        ms: 0.0,
        calls: None,
        seed: instance.seed,
    };
    let g = match &instance.graph {
        Ok(g) => g,
        Err(e) => {
            result.estimate = Err(e.clone());
            return result;
        }
    };
    let opts = SolveOptions { exact_cap: config.exact_cap };
    let reps = config.repetitions.max(1);
    let mut total = 0.0;
    for _ in 0..reps {
        let start = Instant::now();
        let outcome = solve(g, algo, opts);
        total += start.elapsed().as_secs_f64() * 1000.0;
        match outcome {
            Ok(sol) => {
                result.estimate = Ok(Estimate::Value(sol.estimate));
                result.calls = sol.calls;
            }
            Err(e) => {
                result.estimate = Err(e.to_string());
                break;
            }
        }
    }
    result.ms = total / reps as f64;
    result
}

/// Runs every algorithm on every dataset. Rows follow config order
/// (datasets outer, algorithms inner); each generated ensemble with more
/// than one member is followed by one mean row per algorithm. Cell failures
/// are recorded in the row and the run continues.
pub fn run_benchmark(config: &BenchConfig) -> Result<Vec<BenchResult>> {
    let (instances, _) = load_instances(config)?;
    let cells: Vec<(usize, Algorithm)> =
        (0..instances.len()).flat_map(|i| config.algorithms.iter().map(move |&a| (i, a))).collect();
    let run = |&(i, algo): &(usize, Algorithm)| run_cell(&instances[i], algo, config);
    let rows: Vec<BenchResult> =
        if config.parallel { cells.par_iter().map(run).collect() } else { cells.iter().map(run).collect() };

    let mut out = Vec::with_capacity(rows.len());
    let mut i = 0;
    while i < instances.len() {
        let end = match instances[i].ensemble {
            Some(e) => i + instances[i..].iter().take_while(|x| x.ensemble == Some(e)).count(),
            None => i + 1,
        };
        let width = config.algorithms.len();
        let block = &rows[i * width..end * width];
        out.extend_from_slice(block);
        if instances[i].ensemble.is_some() {
            for (a, &algo) in config.algorithms.iter().enumerate() {
                out.push(mean_row(block.iter().skip(a).step_by(width), algo));
            }
        }
        i = end;
    }
    Ok(out)
}

fn mean_row<'a>(rows: impl Iterator<Item = &'a BenchResult>, algo: Algorithm) -> BenchResult {
    let rows: Vec<&BenchResult> = rows.collect();
    let first = rows[0];
    let count = rows.len() as f64;
    let values: Vec<f64> = rows.iter().filter_map(|r| r.estimate.as_ref().ok().map(|e| e.as_f64())).collect();
    let estimate = if values.len() == rows.len() {
        Ok(Estimate::Mean(values.iter().sum::<f64>() / count))
    } else {
        Err(format!("{} of {} members failed", rows.len() - values.len(), rows.len()))
    };
    BenchResult {
        dataset: format!("{} (mean of {})", first.dataset, rows.len()),
        n: (rows.iter().map(|r| r.n).sum::<usize>() as f64 / count).round() as usize,
        m: (rows.iter().map(|r| r.m).sum::<usize>() as f64 / count).round() as usize,
        algo,
        estimate,
        ms: rows.iter().map(|r| r.ms).sum::<f64>() / count,
        calls: None,
        seed: None,
    }
}

pub fn write_csv<W: std::io::Write>(results: &[BenchResult], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(BenchResult::HEADER)?;
    for r in results {
        writer.write_record(r.cells())?;
    }
    writer.flush()?;
    Ok(())
}

/// Markdown table with columns padded to equal width.
pub fn to_markdown(results: &[BenchResult]) -> String {
    let rows: Vec<[String; 8]> = results.iter().map(BenchResult::cells).collect();
    let mut widths = BenchResult::HEADER.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("| {} |\n", padded.join(" | "))
    };
    let mut out = line(&BenchResult::HEADER.map(String::from));
    out.push_str(&line(&widths.map(|w| "-".repeat(w))));
    for row in &rows {
        out.push_str(&line(row));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!(matches!("mech".parse::<Algorithm>(), Err(Error::UnknownAlgorithm(_))));
    }

    #[test]
    fn empty_matrix() {
        assert!(run_benchmark(&BenchConfig::default()).unwrap().is_empty());
    }

    #[test]
    fn config_parses() {
        let config = BenchConfig::from_toml(
            r#"
            algorithms = ["bbgh", "cbrh"]
            repetitions = 2
            [[datasets]]
            fixture = "FIG3"
            [[datasets]]
            name = "trees"
            generate = { model = "random_tree", n = 20 }
            count = 3
            seed = 5
            "#,
        )
        .unwrap();
        assert_eq!(config.algorithms, vec![Algorithm::Bbgh, Algorithm::Cbrh]);
        assert_eq!(config.datasets[1].generate, Some(Model::RandomTree { n: 20 }));
        assert!(BenchConfig::from_toml("algorithms = [\"mech\"]").is_err());
    }

    #[test]
    fn ensembles_get_mean_rows() {
        let config = BenchConfig {
            datasets: vec![DatasetSpec {
                name: Some("trees".into()),
                generate: Some(Model::RandomTree { n: 12 }),
                count: 4,
                seed: 9,
                ..DatasetSpec::default()
            }],
            algorithms: vec![Algorithm::Bbgh, Algorithm::Exact],
            ..BenchConfig::default()
        };
        let rows = run_benchmark(&config).unwrap();
        assert_eq!(rows.len(), 10);
        let exact: Vec<f64> = rows[..8]
            .iter()
            .filter(|r| r.algo == Algorithm::Exact)
            .map(|r| r.estimate.as_ref().unwrap().as_f64())
            .collect();
        let mean = rows.iter().find(|r| r.is_mean() && r.algo == Algorithm::Exact).unwrap();
        assert_eq!(mean.estimate.as_ref().unwrap().as_f64(), exact.iter().sum::<f64>() / 4.0);
        assert_eq!(rows[0].seed, Some(9));
        assert_eq!(rows[2].seed, Some(10));
        assert_eq!(rows[9].algo, Algorithm::Exact);
    }

    #[test]
    fn failures_are_recorded() {
        let config = BenchConfig {
            datasets: vec![
                DatasetSpec { path: Some("does/not/exist.txt".into()), ..DatasetSpec::default() },
                DatasetSpec { fixture: Some("T1".into()), ..DatasetSpec::default() },
            ],
            algorithms: vec![Algorithm::Exact, Algorithm::Bbgh],
            ..BenchConfig::default()
        };
        let rows = run_benchmark(&config).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows[0].estimate.is_err() && rows[1].estimate.is_err());
        assert!(rows[2].estimate.as_ref().unwrap_err().contains("cap"));
        assert!(matches!(rows[3].estimate, Ok(Estimate::Value(_))));
    }

    #[test]
    fn parallel_preserves_order() {
        let datasets = ["FIG3", "FIG5", "T1", "FIG4"]
            .iter()
            .map(|f| DatasetSpec { fixture: Some(f.to_string()), ..DatasetSpec::default() })
            .collect();
        let mut config = BenchConfig { datasets, algorithms: vec![Algorithm::Icch, Algorithm::Cbrh], ..BenchConfig::default() };
        let serial = run_benchmark(&config).unwrap();
        config.parallel = true;
        let parallel = run_benchmark(&config).unwrap();
        let key = |r: &BenchResult| (r.dataset.clone(), r.algo, r.estimate.clone(), r.calls);
        assert_eq!(serial.iter().map(key).collect::<Vec<_>>(), parallel.iter().map(key).collect::<Vec<_>>());
    }

    #[test]
    fn csv_and_markdown_agree() {
        let config = BenchConfig {
            datasets: vec![DatasetSpec { fixture: Some("FIG3".into()), ..DatasetSpec::default() }],
            algorithms: vec![Algorithm::Exact, Algorithm::Aprx3],
            ..BenchConfig::default()
        };
        let rows = run_benchmark(&config).unwrap();
        assert_eq!(rows[0].estimate, Ok(Estimate::Value(3)));
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let csv_text = String::from_utf8(buf).unwrap();
        let csv_cells: Vec<Vec<String>> =
            csv_text.lines().map(|l| l.split(',').map(str::to_owned).collect()).collect();
        let md_cells: Vec<Vec<String>> = to_markdown(&rows)
            .lines()
            .enumerate()
            .filter(|(i, _)| *i != 1)
            .map(|(_, l)| l.trim_matches('|').split('|').map(|c| c.trim().to_owned()).collect())
            .collect();
        assert_eq!(csv_cells[0].join(","), "dataset,n,m,algo,estimate,ms,calls,seed");
        assert_eq!(csv_cells, md_cells);
    }
}
