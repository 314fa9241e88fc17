//! Seeded random graph models and the c-fat family.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Label};

#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum Model {
    /// `n` vertices and `m` distinct edges drawn uniformly.
    ErdosRenyi { n: usize, m: usize },
    /// Preferential attachment, `m` edges from each new vertex.
    BarabasiAlbert { n: usize, m: usize },
    /// Uniform labelled tree from a random Prüfer sequence.
    RandomTree { n: usize },
    /// Deterministic c-fat graph; the seed is ignored.
    CFat { n: usize, c: f64 },
}

impl Model {
    pub fn name(&self) -> String {
        match *self {
            Model::ErdosRenyi { n, m } => format!("er-{n}-{m}"),
            Model::BarabasiAlbert { n, m } => format!("ba-{n}-{m}"),
            Model::RandomTree { n } => format!("tree-{n}"),
            Model::CFat { n, c } => format!("c-fat{n}-{c}"),
        }
    }
}

pub fn generate_graph(model: Model, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match model {
        Model::ErdosRenyi { n, m } => erdos_renyi(n, m, &mut rng),
        Model::BarabasiAlbert { n, m } => barabasi_albert(n, m, &mut rng),
        Model::RandomTree { n } => random_tree(n, &mut rng),
        Model::CFat { n, c } => cfat(n, c),
    }
}

pub fn erdos_renyi(n: usize, m: usize, rng: &mut impl Rng) -> Result<Graph> {
    let total = n * n.saturating_sub(1) / 2;
    if m > total {
        return Err(Error::InvalidParameters(format!("{m} edges do not fit on {n} vertices")));
    }
    let mut picks = index::sample(rng, total, m).into_vec();
    picks.sort_unstable();
    Graph::from_edges(n, picks.into_iter().map(pair_from_index))
}

/// The `k`-th pair `(u, v)`, `u < v`, ordered by `v` then `u`.
fn pair_from_index(k: usize) -> (usize, usize) {
    let mut v = ((1.0 + (1.0 + 8.0 * k as f64).sqrt()) / 2.0) as usize;
    while v * (v - 1) / 2 > k {
        v -= 1;
    }
    while (v + 1) * v / 2 <= k {
        v += 1;
    }
    (k - v * (v - 1) / 2, v)
}

/// Starts from `m` isolated vertices; each new vertex attaches to `m`
/// distinct targets sampled proportionally to degree.
pub fn barabasi_albert(n: usize, m: usize, rng: &mut impl Rng) -> Result<Graph> {
    if m == 0 || m >= n {
        return Err(Error::InvalidParameters(format!("need 1 <= m < n, got n={n}, m={m}")));
    }
    let mut edges = Vec::with_capacity((n - m) * m);
    let mut repeated: Vec<usize> = Vec::with_capacity(2 * (n - m) * m);
    let mut targets: Vec<usize> = (0..m).collect();
    for source in m..n {
        for &t in &targets {
            edges.push((source, t));
        }
        repeated.extend_from_slice(&targets);
        repeated.extend(std::iter::repeat(source).take(m));
        targets.clear();
        while targets.len() < m {
            let pick = repeated[rng.gen_range(0..repeated.len())];
            if !targets.contains(&pick) {
                targets.push(pick);
            }
        }
    }
    Graph::from_edges(n, edges)
}

pub fn random_tree(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    match n {
        0 => Err(Error::InvalidParameters("a tree needs at least one vertex".into())),
        1 => Graph::from_edges(1, []),
        _ => {
            let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            Graph::from_edges(n, prufer_decode(n, &code))
        }
    }
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    edges
}

/// c-fat graph on vertices `1..=n`: with `k = floor(n / (c ln n))` parts,
/// vertex `i` (0-based) sits in part `i mod k`, and two vertices are adjacent
/// when their parts are equal or cyclically consecutive.
pub fn cfat(n: usize, c: f64) -> Result<Graph> {
    if n < 2 || c <= 0.0 {
        return Err(Error::InvalidParameters(format!("c-fat needs n >= 2 and c > 0, got n={n}, c={c}")));
    }
    let k = (n as f64 / (c * (n as f64).ln())).floor() as usize;
    if k == 0 {
        return Err(Error::InvalidParameters(format!("c-fat with n={n}, c={c} has no parts")));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let diff = (j % k + k - i % k) % k;
            if diff == 0 || diff == 1 || diff + 1 == k {
                edges.push((i, j));
            }
        }
    }
    let labels: Vec<Label> = (1..=n).map(|i| Label::from(i.to_string())).collect();
    Graph::from_labeled_edges(labels, edges)
}
