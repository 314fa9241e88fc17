//! Exact burning number by iterative deepening over the budget.
//!
//! For a budget `b` the search places sources for steps `0..b` and tracks
//! the union of their balls as a bitmask. A vertex that is already burning
//! at step `t` (within `t - j` of an earlier source `j`) is never a
//! candidate: its remaining ball lies inside the earlier source's ball.
//! Candidates whose fresh coverage is contained in another candidate's are
//! dominated and skipped, and failed `(step, covered)` states are memoized.

use std::collections::HashSet;

use super::BurningSequence;
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph, VertexId};

pub const DEFAULT_EXACT_CAP: usize = 32;

/// Largest graph the bitmask search can represent.
pub const MAX_EXACT_CAP: usize = 128;

type Mask = u128;

/// True burning number and an optimal sequence, for graphs up to
/// [`DEFAULT_EXACT_CAP`] vertices.
pub fn exact_burning_number(g: &Graph) -> Result<(usize, BurningSequence)> {
    exact_burning_number_with_cap(g, DEFAULT_EXACT_CAP)
}

pub fn exact_burning_number_with_cap(g: &Graph, cap: usize) -> Result<(usize, BurningSequence)> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > cap.min(MAX_EXACT_CAP) {
        return Err(Error::TooLarge { vertex_count: n, cap: cap.min(MAX_EXACT_CAP) });
    }
    let search = Search::new(g);
    for b in 1..=n {
        if let Some(picks) = search.solve(b) {
            return Ok((b, search.to_sequence(g, picks, b)));
        }
    }
    unreachable!("budget n always burns the graph")
}

struct Search {
    n: usize,
    all: Mask,
    /// `balls[r][v]`: vertices within distance `r` of `v`, for `r < n`.
    balls: Vec<Vec<Mask>>,
}

struct Frame {
    budget: usize,
    failed: HashSet<(usize, Mask)>,
    /// Largest ball at each radius; bounds what the remaining steps can cover.
    max_ball: Vec<u32>,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let dist: Vec<Vec<Option<usize>>> = (0..n).map(|v| bfs_distances(g, v)).collect();
        let balls = (0..n)
            .map(|r| {
                (0..n)
                    .map(|v| {
                        (0..n).filter(|&u| matches!(dist[v][u], Some(d) if d <= r)).fold(0, |m, u| m | bit(u))
                    })
                    .collect()
            })
            .collect();
        let all = if n == 128 { Mask::MAX } else { (1 << n) - 1 };
        Self { n, all, balls }
    }

    fn closed_neighborhood(&self, set: Mask) -> Mask {
        let mut out = set;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.balls[1.min(self.n - 1)][v];
        }
        out
    }

    fn solve(&self, budget: usize) -> Option<Vec<Option<VertexId>>> {
        let max_ball =
            (0..budget).map(|r| self.balls[r.min(self.n - 1)].iter().map(|m| m.count_ones()).max().unwrap_or(0)).collect();
        let mut frame = Frame { budget, failed: HashSet::new(), max_ball };
        let mut picks = Vec::with_capacity(budget);
        self.dfs(&mut frame, 0, 0, 0, &mut picks).then_some(picks)
    }

    fn dfs(&self, frame: &mut Frame, step: usize, covered: Mask, burning: Mask, picks: &mut Vec<Option<VertexId>>) -> bool {
        if covered == self.all {
            return true;
        }
        if step == frame.budget {
            return false;
        }
        let uncovered = self.all & !covered;
        let remaining_reach: u32 = (0..frame.budget - step).map(|r| frame.max_ball[r]).sum();
        if uncovered.count_ones() > remaining_reach {
            return false;
        }
        if frame.failed.contains(&(step, covered)) {
            return false;
        }
        let radius = (frame.budget - step - 1).min(self.n - 1);

        let mut candidates: Vec<(VertexId, Mask)> = (0..self.n)
            .filter(|&v| burning & bit(v) == 0)
            .map(|v| (v, self.balls[radius][v] & uncovered))
            .filter(|&(_, gain)| gain != 0)
            .collect();
        candidates.sort_by(|a, b| b.1.count_ones().cmp(&a.1.count_ones()).then(a.0.cmp(&b.0)));
        let mut kept: Vec<(VertexId, Mask)> = Vec::with_capacity(candidates.len());
        for (v, gain) in candidates {
            if !kept.iter().any(|&(_, k)| gain & !k == 0) {
                kept.push((v, gain));
            }
        }

        if kept.is_empty() {
            picks.push(None);
            if self.dfs(frame, step + 1, covered, self.closed_neighborhood(burning), picks) {
                return true;
            }
            picks.pop();
        }
        for (v, gain) in kept {
            picks.push(Some(v));
            let next_burning = self.closed_neighborhood(burning | bit(v));
            if self.dfs(frame, step + 1, covered | gain, next_burning, picks) {
                return true;
            }
            picks.pop();
        }
        frame.failed.insert((step, covered));
        false
    }

    /// Skipped steps get filler vertices so entries stay distinct; fillers do
    /// not affect coverage.
    fn to_sequence(&self, g: &Graph, picks: Vec<Option<VertexId>>, budget: usize) -> BurningSequence {
        let used: HashSet<VertexId> = picks.iter().flatten().copied().collect();
        let mut spare = (0..self.n).filter(|v| !used.contains(v));
        let ids: Vec<VertexId> = picks.into_iter().filter_map(|p| p.or_else(|| spare.next())).collect();
        BurningSequence::with_budget(ids.into_iter().map(|v| g.label(v).clone()).collect(), budget)
    }
}

fn bit(v: VertexId) -> Mask {
    1 << v
}
