//! Component-based recursive heuristic (CBRH).
//!
//! Whenever the residual graph splits, each component's burning number is
//! estimated by a recursive call (memoized by component) and the source is
//! taken from the component with the largest estimate.

use std::collections::HashMap;

use sha2::{Digest, Sha256};

use crate::burning::BurningSequence;
use crate::centrality::eigenvector_centrality;
use crate::error::{Error, Result};
use crate::graph::{component_subgraphs, components, induced_delete, BallScanner, Graph, Label, VertexSet};
use crate::heuristics::backbone_path_within;

/// Canonical component identity: SHA-256 over the sorted vertex labels and
/// the sorted label-pair edge list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentKey([u8; 32]);

pub fn component_key(comp: &Graph) -> ComponentKey {
    let mut labels: Vec<&str> = comp.labels().iter().map(|l| &**l).collect();
    labels.sort_unstable();
    let mut edges: Vec<(&str, &str)> = comp
        .edges()
        .map(|(u, v)| {
            let (a, b) = (&**comp.label(u), &**comp.label(v));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    edges.sort_unstable();

    let mut hasher = Sha256::new();
    hasher.update((labels.len() as u64).to_le_bytes());
    for l in labels {
        hasher.update((l.len() as u64).to_le_bytes());
        hasher.update(l.as_bytes());
    }
    hasher.update((edges.len() as u64).to_le_bytes());
    for (a, b) in edges {
        for l in [a, b] {
            hasher.update((l.len() as u64).to_le_bytes());
            hasher.update(l.as_bytes());
        }
    }
    ComponentKey(hasher.finalize().into())
}

/// Estimated burning numbers by component; `None` records a failed estimate.
#[derive(Clone, Debug, Default)]
pub struct MemoTable {
    entries: HashMap<ComponentKey, Option<usize>>,
}

impl MemoTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &ComponentKey) -> Option<Option<usize>> {
        self.entries.get(key).copied()
    }

    /// Entries are write-once; rewriting a key with a different value panics.
    pub fn insert(&mut self, key: ComponentKey, estimate: Option<usize>) {
        let previous = self.entries.insert(key, estimate);
        assert!(previous.map_or(true, |p| p == estimate), "memo entry rewritten");
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CbrhLimits {
    pub max_depth: usize,
    pub max_calls: usize,
}

impl Default for CbrhLimits {
    fn default() -> Self {
        Self { max_depth: 64, max_calls: 1_000_000 }
    }
}

#[derive(Clone, Debug)]
pub struct CbrhOutcome {
    /// Smallest budget reached before the first failure, `None` if even the
    /// initial budget failed.
    pub estimate: Option<usize>,
    /// Sequence for `estimate`; empty on failure.
    pub sequence: BurningSequence,
    /// Recursive invocations, not counting the top-level call.
    pub recursive_calls: usize,
}

pub fn cbrh_estimate(g: &Graph, b: usize, memo: &mut MemoTable) -> Result<CbrhOutcome> {
    cbrh_estimate_with_limits(g, b, memo, CbrhLimits::default())
}

pub fn cbrh_estimate_with_limits(
    g: &Graph,
    b: usize,
    memo: &mut MemoTable,
    limits: CbrhLimits,
) -> Result<CbrhOutcome> {
    if b == 0 {
        return Err(Error::ZeroBudget);
    }
    let mut ctx = Context { memo, limits, calls: 0 };
    let (estimate, sources) = ctx.estimate(g, b, 0)?;
    let sequence = match estimate {
        Some(bn) => BurningSequence::with_budget(sources, bn),
        None => BurningSequence::new(Vec::new()),
    };
    Ok(CbrhOutcome { estimate, sequence, recursive_calls: ctx.calls })
}

struct Context<'a> {
    memo: &'a mut MemoTable,
    limits: CbrhLimits,
    calls: usize,
}

impl Context<'_> {
    fn estimate(&mut self, g: &Graph, b: usize, depth: usize) -> Result<(Option<usize>, Vec<Label>)> {
        let mut best: (Option<usize>, Vec<Label>) = (None, Vec::new());
        for budget in (1..=b).rev() {
            match self.attempt(g, budget, depth)? {
                Some(sources) => best = (Some(budget), sources),
                None => break,
            }
        }
        Ok(best)
    }

    /// One `budget`-step burn; `None` if vertices survive.
    fn attempt(&mut self, g: &Graph, budget: usize, depth: usize) -> Result<Option<Vec<Label>>> {
        let mut residual = g.clone();
        let mut sources = Vec::with_capacity(budget);
        let mut scanner = BallScanner::new(g.vertex_count());
        for step in 0..budget {
            if residual.is_empty() {
                break;
            }
            let comps = components(&residual);
            let subgraphs = component_subgraphs(&residual, &comps);
            let chosen = if comps.len() > 1 { self.hardest_component(&subgraphs, budget, depth)? } else { 0 };

            let comp = &subgraphs[chosen];
            let cent = eigenvector_centrality(comp);
            let all: VertexSet = comp.vertices().collect();
            let path = backbone_path_within(comp, &cent, &all);
            let radius = budget - step - 1;
            let mut pick = path.vertices[0];
            let mut most = 0;
            for &v in &path.vertices {
                let size = scanner.ball_size(comp, v, radius);
                if size > most {
                    most = size;
                    pick = v;
                }
            }
            sources.push(comp.label(pick).clone());
            let members = comps[chosen].as_slice();
            let mut ball = Vec::new();
            scanner.visit(comp, pick, radius, |u| ball.push(members[u]));
            residual = induced_delete(&residual, &VertexSet::from_unsorted(ball));
        }
        Ok(residual.is_empty().then_some(sources))
    }

    /// Index of the component with the largest estimated burning number,
    /// first one on ties. A failed estimate counts as `budget + 1`.
    fn hardest_component(&mut self, subgraphs: &[Graph], budget: usize, depth: usize) -> Result<usize> {
        let mut chosen = 0;
        let mut max: Option<usize> = None;
        for (k, sub) in subgraphs.iter().enumerate() {
            let key = component_key(sub);
            let estimate = match self.memo.get(&key) {
                Some(e) => e,
                None => {
                    self.calls += 1;
                    if self.calls > self.limits.max_calls {
                        return Err(Error::RecursionLimit(format!("more than {} calls", self.limits.max_calls)));
                    }
                    if depth + 1 > self.limits.max_depth {
                        return Err(Error::RecursionLimit(format!("depth above {}", self.limits.max_depth)));
                    }
                    let (e, _) = self.estimate(sub, budget, depth + 1)?;
                    self.memo.insert(key, e);
                    e
                }
            };
            let effective = estimate.unwrap_or(budget + 1);
            if max.map_or(true, |m| m < effective) {
                max = Some(effective);
                chosen = k;
            }
        }
        Ok(chosen)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burning::is_valid_burning_sequence;
    use crate::graph::tests::{labeled, path};

    #[test]
    fn keys_identify_components() {
        let g = labeled(6, &[(1, 2), (2, 3), (4, 5), (5, 6)]);
        let comps = components(&g);
        let subs = component_subgraphs(&g, &comps);
        let again = component_subgraphs(&g, &comps);
        assert_eq!(component_key(&subs[0]), component_key(&again[0]));
        assert_ne!(component_key(&subs[0]), component_key(&subs[1]));
        let smaller = induced_delete(&subs[0], &VertexSet::from_unsorted(vec![2]));
        assert_ne!(component_key(&subs[0]), component_key(&smaller));
    }

    #[test]
    fn key_depends_on_edges() {
        let a = labeled(3, &[(1, 2), (2, 3)]);
        let b = labeled(3, &[(1, 2), (1, 3)]);
        assert_ne!(component_key(&a), component_key(&b));
    }

    #[test]
    fn zero_budget_rejected() {
        assert!(matches!(cbrh_estimate(&path(3), 0, &mut MemoTable::new()), Err(Error::ZeroBudget)));
    }

    #[test]
    fn too_small_budget_fails() {
        let out = cbrh_estimate(&path(10), 3, &mut MemoTable::new()).unwrap();
        assert_eq!(out.estimate, None);
        assert!(out.sequence.is_empty());
    }

    #[test]
    fn connected_path_needs_no_recursion() {
        let g = path(9);
        let out = cbrh_estimate(&g, 5, &mut MemoTable::new()).unwrap();
        assert_eq!(out.estimate, Some(3));
        assert_eq!(out.recursive_calls, 0);
        assert!(is_valid_burning_sequence(&g, &out.sequence, false).unwrap());
    }

    #[test]
    fn disjoint_paths_recurse_once_per_component() {
        let g = labeled(8, &[(1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8)]);
        let mut memo = MemoTable::new();
        let out = cbrh_estimate(&g, 6, &mut memo).unwrap();
        assert!(out.recursive_calls >= 2);
        assert!(memo.len() >= 2);
        assert!(is_valid_burning_sequence(&g, &out.sequence, false).unwrap());
    }

    #[test]
    fn depth_limit_is_enforced() {
        let g = labeled(4, &[(1, 2), (3, 4)]);
        let limits = CbrhLimits { max_depth: 0, max_calls: 10 };
        let err = cbrh_estimate_with_limits(&g, 4, &mut MemoTable::new(), limits).unwrap_err();
        assert!(matches!(err, Error::RecursionLimit(_)));
    }
}
