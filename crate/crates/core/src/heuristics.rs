//! Greedy source selectors: the backbone-based greedy heuristic (BBGH) and
//! the improved cutting-corners heuristic (ICCH).

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::burning::Selector;
use crate::centrality::{compare_scores, eigenvector_centrality, CentralityMap};
use crate::error::{Error, Result};
use crate::graph::{components, BallScanner, Graph, VertexId, VertexSet};

/// Shortest path from a deepest BFS vertex back to the BFS root, which is
/// the component's least central vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct BackbonePath {
    pub vertices: Vec<VertexId>,
    pub total_centrality: f64,
}

impl BackbonePath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Colour {
    White,
    Grey,
    Black,
}

/// Per-vertex BFS bookkeeping for [`backbone_path`].
#[derive(Clone, Copy, Debug)]
pub struct BfsNodeState {
    pub depth: usize,
    /// Centrality summed along the parent chain, including this vertex.
    pub centrality_sum: f64,
    pub parent: Option<VertexId>,
    pub colour: Colour,
}

impl Default for BfsNodeState {
    fn default() -> Self {
        Self { depth: 0, centrality_sum: 0.0, parent: None, colour: Colour::White }
    }
}

/// Backbone path of a connected graph.
pub fn backbone_path(comp: &Graph, cent: &CentralityMap) -> Result<BackbonePath> {
    let all: VertexSet = comp.vertices().collect();
    if all.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if components(comp).len() != 1 {
        return Err(Error::Disconnected);
    }
    Ok(backbone_path_within(comp, cent, &all))
}

/// Backbone path of the component `members` of `g`.
///
/// BFS runs from the component's minimum-centrality vertex. When a vertex on
/// the next level is reached again from a different parent, the parent that
/// gives the larger centrality sum wins. The terminal vertex maximizes
/// (depth, centrality sum) and then minimizes the id.
pub(crate) fn backbone_path_within(g: &Graph, cent: &CentralityMap, members: &VertexSet) -> BackbonePath {
    let root = cent.argmin(members.iter()).expect("component is non-empty");
    let mut state = vec![BfsNodeState::default(); g.vertex_count()];
    state[root] = BfsNodeState { depth: 0, centrality_sum: cent.score(root), parent: None, colour: Colour::Grey };
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let (ud, ucs) = (state[u].depth, state[u].centrality_sum);
        for &v in g.neighbors(u) {
            let through_u = ucs + cent.score(v);
            let sv = &mut state[v];
            match sv.colour {
                Colour::White => {
                    *sv = BfsNodeState { depth: ud + 1, centrality_sum: through_u, parent: Some(u), colour: Colour::Grey };
                    queue.push_back(v);
                }
                Colour::Grey if sv.depth > ud && compare_scores(sv.centrality_sum, through_u) == Ordering::Less => {
                    sv.centrality_sum = through_u;
                    sv.parent = Some(u);
                }
                _ => {}
            }
        }
        state[u].colour = Colour::Black;
    }

    let mut terminal = root;
    for v in members.iter() {
        let (s, t) = (&state[v], &state[terminal]);
        let better = s.depth > t.depth
            || (s.depth == t.depth && compare_scores(s.centrality_sum, t.centrality_sum) == Ordering::Greater);
        if better {
            terminal = v;
        }
    }
    let mut vertices = Vec::with_capacity(state[terminal].depth + 1);
    let mut cur = Some(terminal);
    while let Some(v) = cur {
        vertices.push(v);
        cur = state[v].parent;
    }
    BackbonePath { vertices, total_centrality: state[terminal].centrality_sum }
}

/// Which backbone paths BBGH scans.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BbghMode {
    /// Keep only the longest backbone path (heaviest on equal length).
    #[default]
    SinglePath,
    /// Scan the backbone path of every component.
    AllPaths,
}

/// Backbone-based greedy selector.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bbgh {
    pub mode: BbghMode,
}

impl Selector for Bbgh {
    fn select(&self, g: &Graph, radius: usize) -> Result<VertexId> {
        bbgh_select(g, radius, self.mode)
    }
}

pub fn bbgh_best_central_node(g: &Graph, r: usize) -> Result<VertexId> {
    bbgh_select(g, r, BbghMode::SinglePath)
}

fn bbgh_select(g: &Graph, r: usize, mode: BbghMode) -> Result<VertexId> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let cent = eigenvector_centrality(g);
    let paths: Vec<BackbonePath> = components(g).iter().map(|c| backbone_path_within(g, &cent, c)).collect();
    let scanned: Vec<&BackbonePath> = match mode {
        BbghMode::SinglePath => {
            let mut best: Option<&BackbonePath> = None;
            for p in &paths {
                let replace = match best {
                    None => true,
                    Some(b) => {
                        p.len() > b.len()
                            || (p.len() == b.len()
                                && compare_scores(p.total_centrality, b.total_centrality) == Ordering::Greater)
                    }
                };
                if replace {
                    best = Some(p);
                }
            }
            best.into_iter().collect()
        }
        BbghMode::AllPaths => paths.iter().collect(),
    };

    let mut scanner = BallScanner::new(g.vertex_count());
    let mut best = None;
    let mut most = 0;
    for path in scanned {
        for v in cent.descending(&path.vertices) {
            let size = scanner.ball_size(g, v, r);
            if size > most {
                most = size;
                best = Some(v);
            }
        }
    }
    best.ok_or(Error::EmptyGraph)
}

/// Improved cutting-corners selector.
#[derive(Clone, Copy, Debug, Default)]
pub struct Icch;

impl Selector for Icch {
    fn select(&self, g: &Graph, radius: usize) -> Result<VertexId> {
        icch_best_central_node(g, radius)
    }
}

pub fn icch_best_central_node(g: &Graph, r: usize) -> Result<VertexId> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let cent = eigenvector_centrality(g);
    let pivot = cent.argmax(g.vertices()).ok_or(Error::EmptyGraph)?;
    let mut scanner = BallScanner::new(g.vertex_count());
    let mut removed = vec![false; g.vertex_count()];
    let mut capacity = 0;
    scanner.visit(g, pivot, r, |u| {
        removed[u] = true;
        capacity += 1;
    });

    let leftover = components_outside(g, &removed);
    if leftover.is_empty() {
        return Ok(pivot);
    }
    let paths = corner_paths(g, &cent, pivot, &leftover);

    let mut best = pivot;
    for path in &paths {
        for w in top_by_degree(g, path, r) {
            let size = scanner.ball_size(g, w, r);
            if capacity <= size {
                capacity = size;
                best = w;
            }
        }
    }
    Ok(best)
}

/// The `r` highest-degree vertices of `path`, ties by lowest id.
fn top_by_degree(g: &Graph, path: &[VertexId], r: usize) -> Vec<VertexId> {
    let mut sorted = path.to_vec();
    sorted.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    sorted.truncate(r);
    sorted
}

/// Components of `g` restricted to the vertices not marked `removed`, in
/// `g`'s ids, ordered by smallest member.
fn components_outside(g: &Graph, removed: &[bool]) -> Vec<Vec<VertexId>> {
    let mut seen = removed.to_vec();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in g.vertices() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut members = Vec::new();
        while let Some(u) = queue.pop_front() {
            members.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Shortest paths from the pivot to the least central vertex of every
/// leftover component, one BFS for all of them. Components the pivot cannot
/// reach contribute no path.
fn corner_paths(g: &Graph, cent: &CentralityMap, pivot: VertexId, comps: &[Vec<VertexId>]) -> Vec<Vec<VertexId>> {
    let mut parent = vec![usize::MAX; g.vertex_count()];
    parent[pivot] = pivot;
    let mut queue = VecDeque::from([pivot]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    comps
        .iter()
        .filter_map(|members| {
            let src = cent.argmin(members.iter().copied())?;
            if parent[src] == usize::MAX {
                return None;
            }
            let mut row = vec![src];
            let mut cur = src;
            while cur != pivot {
                cur = parent[cur];
                row.push(cur);
            }
            row.reverse();
            Some(row)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::path;

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn single_vertex_backbone() {
        let g = Graph::from_edges(1, []).unwrap();
        let cent = eigenvector_centrality(&g);
        let bb = backbone_path(&g, &cent).unwrap();
        assert_eq!(bb.vertices, vec![0]);
        assert!((bb.total_centrality - 1.0).abs() < 1e-12);
        assert_eq!(bbgh_best_central_node(&g, 3).unwrap(), 0);
        assert_eq!(icch_best_central_node(&g, 3).unwrap(), 0);
    }

    #[test]
    fn path5_backbone_runs_from_far_end() {
        let g = path(5);
        let bb = backbone_path(&g, &eigenvector_centrality(&g)).unwrap();
        assert_eq!(bb.vertices, vec![4, 3, 2, 1, 0]);
    }

    #[test]
    fn backbone_rejects_bad_input() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let cent = eigenvector_centrality(&g);
        assert!(matches!(backbone_path(&g, &cent), Err(Error::Disconnected)));
        assert!(matches!(backbone_path(&Graph::empty(), &cent), Err(Error::EmptyGraph)));
    }

    #[test]
    fn backbone_prefers_heavy_parent() {
        // Two routes from leaf 0 to 4: through 1 (degree 2) or 2 (hub with extra leaves).
        let g = Graph::from_edges(8, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (2, 5), (2, 6), (2, 7)]).unwrap();
        let cent = eigenvector_centrality(&g);
        let root = cent.argmin(g.vertices()).unwrap();
        let bb = backbone_path(&g, &cent).unwrap();
        assert_eq!(*bb.vertices.last().unwrap(), root);
        for pair in bb.vertices.windows(2) {
            assert!(g.has_edge(pair[0], pair[1]));
        }
        if root == 0 {
            assert!(bb.vertices.contains(&2));
        }
    }

    #[test]
    fn star_center_selected() {
        let g = star(8);
        assert_eq!(icch_best_central_node(&g, 1).unwrap(), 0);
        assert_eq!(bbgh_best_central_node(&g, 1).unwrap(), 0);
    }

    #[test]
    fn empty_graph_errors() {
        assert!(bbgh_best_central_node(&Graph::empty(), 1).is_err());
        assert!(icch_best_central_node(&Graph::empty(), 1).is_err());
    }
}
