//! Eigenvector centrality by power iteration, computed independently on each
//! connected component.
//!
//! Each component iterates on `A + I` so bipartite components (paths, trees)
//! converge instead of oscillating; the shift leaves the Perron vector
//! unchanged. Scores are L2-normalized per component, so an isolated vertex
//! scores exactly 1.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{components, Graph, VertexId};

pub const MAX_ITERATIONS: usize = 1000;
pub const TOLERANCE: f64 = 1e-10;

/// Scores closer than this are treated as equal by every selection rule, so
/// symmetric vertices tie deterministically on the lowest id.
pub const TIE_EPSILON: f64 = 1e-9;

/// Per-vertex eigenvector centrality.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralityMap {
    scores: Vec<f64>,
}

impl CentralityMap {
    pub fn from_scores(scores: Vec<f64>) -> Self {
        Self { scores }
    }

    pub fn score(&self, v: VertexId) -> f64 {
        self.scores[v]
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    /// Tolerance-aware comparison of two vertices' scores.
    pub fn compare(&self, a: VertexId, b: VertexId) -> Ordering {
        compare_scores(self.scores[a], self.scores[b])
    }

    /// Lowest-scoring vertex among `candidates`, first one on ties.
    pub fn argmin(&self, candidates: impl IntoIterator<Item = VertexId>) -> Option<VertexId> {
        candidates.into_iter().fold(None, |best, v| match best {
            Some(b) if self.compare(v, b) != Ordering::Less => Some(b),
            _ => Some(v),
        })
    }

    /// Highest-scoring vertex among `candidates`, first one on ties.
    pub fn argmax(&self, candidates: impl IntoIterator<Item = VertexId>) -> Option<VertexId> {
        candidates.into_iter().fold(None, |best, v| match best {
            Some(b) if self.compare(v, b) != Ordering::Greater => Some(b),
            _ => Some(v),
        })
    }

    /// Vertices sorted by decreasing score, ascending id among ties.
    ///
    /// The tolerance is not transitive, so ties are resolved in runs: after
    /// an exact sort, every vertex within tolerance of the first score of its
    /// run joins that run.
    pub fn descending(&self, vertices: &[VertexId]) -> Vec<VertexId> {
        let mut out = vertices.to_vec();
        out.sort_by(|&a, &b| self.scores[b].total_cmp(&self.scores[a]).then(a.cmp(&b)));
        let mut start = 0;
        while start < out.len() {
            let head = self.scores[out[start]];
            let end = start + out[start..].iter().take_while(|&&v| compare_scores(head, self.scores[v]).is_eq()).count();
            out[start..end].sort_unstable();
            start = end;
        }
        out
    }
}

pub fn compare_scores(a: f64, b: f64) -> Ordering {
    if (a - b).abs() <= TIE_EPSILON {
        Ordering::Equal
    } else {
        a.total_cmp(&b)
    }
}

pub fn eigenvector_centrality(g: &Graph) -> CentralityMap {
    let mut scores = vec![0.0; g.vertex_count()];
    let mut local = vec![0usize; g.vertex_count()];
    for comp in components(g) {
        let members = comp.as_slice();
        for (i, &v) in members.iter().enumerate() {
            local[v] = i;
        }
        let x = component_vector(g, members, &local);
        for (&v, s) in members.iter().zip(x) {
            scores[v] = s;
        }
    }
    CentralityMap { scores }
}

fn component_vector(g: &Graph, members: &[VertexId], local: &[usize]) -> Vec<f64> {
    let n = members.len();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    for _ in 0..MAX_ITERATIONS {
        for (i, &v) in members.iter().enumerate() {
            y[i] = x[i] + g.neighbors(v).iter().map(|&w| x[local[w]]).sum::<f64>();
        }
        let norm = y.iter().map(|s| s * s).sum::<f64>().sqrt();
        y.iter_mut().for_each(|s| *s /= norm);
        let delta = x.iter().zip(&y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
        std::mem::swap(&mut x, &mut y);
        if delta < TOLERANCE {
            break;
        }
    }
    x
}

/// Minimum-centrality vertex; ties go to the lowest id.
pub fn min_central_node(g: &Graph) -> Result<VertexId> {
    eigenvector_centrality(g).argmin(g.vertices()).ok_or(Error::EmptyGraph)
}

/// Maximum-centrality vertex over the whole graph; ties go to the lowest id.
pub fn max_central_node(g: &Graph) -> Result<VertexId> {
    eigenvector_centrality(g).argmax(g.vertices()).ok_or(Error::EmptyGraph)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descending_groups_near_ties() {
        let cent = CentralityMap::from_scores(vec![0.5, 0.5 + 6e-10, 0.5 + 1.2e-9, 0.9, 0.1]);
        assert_eq!(cent.descending(&[0, 1, 2, 3, 4]), vec![3, 1, 2, 0, 4]);
        assert_eq!(cent.descending(&[4, 0]), vec![0, 4]);
    }
    use crate::graph::tests::path;

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn star_center_dominates() {
        let c = eigenvector_centrality(&star(4));
        for leaf in 1..=4 {
            assert!(c.score(0) > c.score(leaf));
            assert!((c.score(leaf) - c.score(1)).abs() < 1e-12);
        }
        assert_eq!(max_central_node(&star(4)).unwrap(), 0);
        assert_eq!(min_central_node(&star(4)).unwrap(), 1);
    }

    #[test]
    fn cycle_is_uniform() {
        let c = eigenvector_centrality(&cycle(5));
        for v in 0..5 {
            assert!((c.score(v) - 1.0 / 5f64.sqrt()).abs() < 1e-9);
        }
        assert_eq!(max_central_node(&cycle(5)).unwrap(), 0);
        assert_eq!(min_central_node(&cycle(5)).unwrap(), 0);
    }

    #[test]
    fn path3_middle_is_sqrt2_times_end() {
        // Perron vector of the P_3 adjacency matrix is (1, sqrt 2, 1) / 2.
        let c = eigenvector_centrality(&path(3));
        assert!((c.score(1) - 2f64.sqrt() * c.score(0)).abs() < 1e-9);
        assert!((c.score(0) - 0.5).abs() < 1e-9);
    }

    #[test]
    fn path5_minimum_is_first_end() {
        assert_eq!(min_central_node(&path(5)).unwrap(), 0);
    }

    #[test]
    fn isolated_vertices_score_one() {
        let g = Graph::from_edges(4, [(0, 1)]).unwrap();
        let c = eigenvector_centrality(&g);
        assert_eq!(c.score(2), 1.0);
        assert_eq!(c.score(3), 1.0);
        assert!((c.score(0) - 1.0 / 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn empty_graph() {
        assert!(eigenvector_centrality(&Graph::empty()).is_empty());
        assert!(matches!(min_central_node(&Graph::empty()), Err(Error::EmptyGraph)));
        assert!(matches!(max_central_node(&Graph::empty()), Err(Error::EmptyGraph)));
    }
}
