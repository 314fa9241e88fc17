//! Burning semantics: the greedy burning driver, sequence validation,
//! burning-number search and upper bounds.

mod exact;

pub use exact::{exact_burning_number, exact_burning_number_with_cap, DEFAULT_EXACT_CAP, MAX_EXACT_CAP};

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{closed_ball, component_center, components, induced_delete, Graph, Label, VertexId};

/// Ordered burning sources, reported by external label.
///
/// Source `i` burns everything within distance `budget - i - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurningSequence {
    sources: Vec<Label>,
    budget: usize,
}

impl BurningSequence {
    /// A sequence whose budget equals its length.
    pub fn new(sources: Vec<Label>) -> Self {
        let budget = sources.len();
        Self { sources, budget }
    }

    pub fn with_budget(sources: Vec<Label>, budget: usize) -> Self {
        assert!(sources.len() <= budget, "sequence longer than its budget");
        Self { sources, budget }
    }

    pub fn from_labels<S: AsRef<str>>(labels: &[S]) -> Self {
        Self::new(labels.iter().map(|s| Label::from(s.as_ref())).collect())
    }

    pub fn sources(&self) -> &[Label] {
        &self.sources
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }
}

impl fmt::Display for BurningSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.sources.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(s)?;
        }
        Ok(())
    }
}

/// Strategy that picks the next source on the residual graph, given the
/// radius that source will burn.
pub trait Selector {
    fn select(&self, g: &Graph, radius: usize) -> Result<VertexId>;
}

impl<F> Selector for F
where
    F: Fn(&Graph, usize) -> Result<VertexId>,
{
    fn select(&self, g: &Graph, radius: usize) -> Result<VertexId> {
        self(g, radius)
    }
}

/// Picks the center of the lowest-id component. Succeeds at
/// [`burning_upper_bound`] on every graph.
#[derive(Clone, Copy, Debug, Default)]
pub struct CenterSelector;

impl Selector for CenterSelector {
    fn select(&self, g: &Graph, _radius: usize) -> Result<VertexId> {
        let first = components(g).into_iter().next().ok_or(Error::EmptyGraph)?;
        Ok(component_center(g, &first).map(|(v, _)| v).unwrap_or(0))
    }
}

/// Greedy burning with budget `b`: repeatedly ask `sel` for a source, delete
/// its ball in the residual graph, and stop once nothing is left.
///
/// Returns `None` when vertices remain after `b` picks.
pub fn burn_graph(g: &Graph, b: usize, sel: &dyn Selector) -> Result<Option<BurningSequence>> {
    if b == 0 {
        return Err(Error::ZeroBudget);
    }
    let mut residual = g.clone();
    let mut sources = Vec::new();
    for j in 0..b {
        if residual.is_empty() {
            break;
        }
        let radius = b - j - 1;
        let v = sel.select(&residual, radius)?;
        residual.check_vertex(v)?;
        sources.push(residual.label(v).clone());
        let ball = closed_ball(&residual, v, radius)?;
        residual = induced_delete(&residual, &ball);
    }
    Ok(residual.is_empty().then(|| BurningSequence::with_budget(sources, b)))
}

/// Checks a sequence against `g`.
///
/// Coverage mode: every vertex lies within `budget - i - 1` of some source
/// `i`. Strict mode additionally requires `dist(seq[i], seq[j]) >= j - i`
/// for `i < j`, i.e. no source is already burning when it is chosen.
pub fn is_valid_burning_sequence(g: &Graph, seq: &BurningSequence, strict: bool) -> Result<bool> {
    let index = g.label_index();
    let ids = seq
        .sources()
        .iter()
        .map(|l| index.get(&**l).copied().ok_or_else(|| Error::UnknownLabel(l.to_string())))
        .collect::<Result<Vec<_>>>()?;
    if seq.len() > seq.budget() {
        return Ok(false);
    }
    let radii: Vec<usize> = (0..ids.len()).map(|i| seq.budget() - i - 1).collect();
    if !covers(g, &ids, &radii) {
        return Ok(false);
    }
    if strict {
        for (i, &x) in ids.iter().enumerate() {
            let dist = crate::graph::bfs_distances(g, x);
            for (j, &y) in ids.iter().enumerate().skip(i + 1) {
                if matches!(dist[y], Some(d) if d < j - i) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Multi-source "fuel" BFS: a vertex is covered when some source reaches it
/// with non-negative remaining radius.
pub(crate) fn covers(g: &Graph, sources: &[VertexId], radii: &[usize]) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let Some(&top) = radii.iter().max() else {
        return false;
    };
    let mut fuel: Vec<Option<usize>> = vec![None; n];
    let mut buckets: Vec<Vec<VertexId>> = vec![Vec::new(); top + 1];
    for (&v, &r) in sources.iter().zip(radii) {
        if fuel[v].map_or(true, |f| r > f) {
            fuel[v] = Some(r);
            buckets[r].push(v);
        }
    }
    let mut covered = 0;
    let mut done = vec![false; n];
    for level in (0..=top).rev() {
        let frontier = std::mem::take(&mut buckets[level]);
        for v in frontier {
            if done[v] || fuel[v] != Some(level) {
                continue;
            }
            done[v] = true;
            covered += 1;
            if level == 0 {
                continue;
            }
            for &w in g.neighbors(v) {
                if fuel[w].map_or(true, |f| level - 1 > f) {
                    fuel[w] = Some(level - 1);
                    buckets[level - 1].push(w);
                }
            }
        }
    }
    covered == n
}

/// Sum over components of `radius + 1`; burning the components one after
/// another from their centers always fits in this budget.
pub fn burning_upper_bound(g: &Graph) -> Result<usize> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(components(g)
        .iter()
        .map(|c| component_center(g, c).map_or(1, |(_, radius)| radius + 1))
        .sum())
}

/// How [`estimate_burning_number`] walks the budget range.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Binary search over `[1, burning_upper_bound]`.
    #[default]
    Binary,
    /// Try `1, 2, 3, ...` until the driver succeeds.
    Linear,
}

/// Smallest budget the greedy driver succeeds with, plus its sequence.
///
/// Heuristic success is not monotone in the budget, so the binary search
/// may stop above the smallest successful budget.
pub fn estimate_burning_number(
    g: &Graph,
    sel: &dyn Selector,
    strategy: SearchStrategy,
) -> Result<(usize, BurningSequence)> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let upper = burning_upper_bound(g)?;
    match strategy {
        SearchStrategy::Binary => {
            let (mut lo, mut hi) = (1, upper);
            let mut found = None;
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                match burn_graph(g, mid, sel)? {
                    Some(seq) => {
                        hi = mid;
                        found = Some(seq);
                    }
                    None => lo = mid + 1,
                }
            }
            if let Some(seq) = found.filter(|s| s.budget() == lo) {
                return Ok((lo, seq));
            }
            scan_up(g, lo, sel)
        }
        SearchStrategy::Linear => scan_up(g, 1, sel),
    }
}

/// First budget `>= from` that succeeds. Budget `n` always succeeds because
/// every pick removes at least the picked vertex.
fn scan_up(g: &Graph, from: usize, sel: &dyn Selector) -> Result<(usize, BurningSequence)> {
    for b in from..=g.vertex_count().max(from) {
        if let Some(seq) = burn_graph(g, b, sel)? {
            return Ok((b, seq));
        }
    }
    unreachable!("budget n always burns the graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{labeled, path};

    fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).unwrap()
    }

    fn lowest(g: &Graph, _r: usize) -> Result<VertexId> {
        if g.is_empty() {
            Err(Error::EmptyGraph)
        } else {
            Ok(0)
        }
    }

    #[test]
    fn zero_budget_is_rejected() {
        assert!(matches!(burn_graph(&path(3), 0, &lowest), Err(Error::ZeroBudget)));
    }

    #[test]
    fn empty_graph_burns_immediately() {
        let seq = burn_graph(&Graph::empty(), 3, &lowest).unwrap().unwrap();
        assert!(seq.is_empty());
    }

    #[test]
    fn complete_graph_needs_two() {
        for n in 2..7 {
            let (b, seq) = estimate_burning_number(&complete(n), &lowest, SearchStrategy::Binary).unwrap();
            assert_eq!(b, 2);
            assert!(is_valid_burning_sequence(&complete(n), &seq, false).unwrap());
        }
        let single = Graph::from_edges(1, []).unwrap();
        assert_eq!(estimate_burning_number(&single, &lowest, SearchStrategy::Linear).unwrap().0, 1);
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(burning_upper_bound(&complete(5)).unwrap(), 2);
        assert_eq!(burning_upper_bound(&path(9)).unwrap(), 5);
        assert!(burning_upper_bound(&Graph::empty()).is_err());
    }

    #[test]
    fn center_selector_meets_upper_bound() {
        let g = labeled(9, &[(1, 2), (2, 3), (4, 5), (6, 7), (7, 8), (8, 9)]);
        let b = burning_upper_bound(&g).unwrap();
        assert_eq!(b, 2 + 1 + 1 + 3);
        let seq = burn_graph(&g, b, &CenterSelector).unwrap().expect("upper bound must burn");
        assert!(is_valid_burning_sequence(&g, &seq, false).unwrap());
    }

    #[test]
    fn validation_uses_budget() {
        let g = path(5);
        // Source 3 with radius 2 covers the whole path.
        let seq = BurningSequence::with_budget(vec![Label::from("3")], 3);
        assert!(is_valid_burning_sequence(&g, &seq, false).unwrap());
        assert!(!is_valid_burning_sequence(&g, &BurningSequence::from_labels(&["3"]), false).unwrap());
    }

    #[test]
    fn unknown_label_is_an_error() {
        let seq = BurningSequence::from_labels(&["1", "x"]);
        assert!(matches!(is_valid_burning_sequence(&path(3), &seq, false), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn strict_mode_rejects_burning_sources() {
        let g = path(4);
        let seq = BurningSequence::from_labels(&["1", "2"]);
        assert!(!is_valid_burning_sequence(&g, &seq, false).unwrap());
        let seq = BurningSequence::from_labels(&["2", "4"]);
        assert!(is_valid_burning_sequence(&g, &seq, true).unwrap());
        // Neighbour chosen one step later is still allowed.
        let seq = BurningSequence::from_labels(&["3", "2", "1"]);
        assert!(is_valid_burning_sequence(&g, &seq, true).unwrap());
        let seq = BurningSequence::with_budget(vec![Label::from("2"), Label::from("2")], 3);
        assert!(is_valid_burning_sequence(&g, &seq, false).unwrap());
        assert!(!is_valid_burning_sequence(&g, &seq, true).unwrap());
    }

    #[test]
    fn linear_and_binary_agree_on_paths() {
        for n in 1..12 {
            let g = path(n);
            let a = estimate_burning_number(&g, &CenterSelector, SearchStrategy::Linear).unwrap();
            assert!(is_valid_burning_sequence(&g, &a.1, false).unwrap());
            assert_eq!(a.1.budget(), a.0);
        }
    }
}
