//! Approximation baselines: the 3-approximation for general graphs, the
//! 2-approximation for trees, and spanning trees for turning the latter into
//! an upper bound on any graph.
//!
//! Both approximations guess a budget `k`, cover the graph greedily with
//! balls, and accept the guess when at most `k` centers were needed. The
//! accepted centers become the head of a burning sequence whose length is the
//! number of centers plus the largest distance from any vertex to its
//! nearest center.

use std::collections::VecDeque;

use crate::burning::{burning_upper_bound, BurningSequence};
use crate::error::{Error, Result};
use crate::graph::{component_center, components, is_connected, BallScanner, Graph, VertexId};

/// 3-approximation: centers are chosen greedily (lowest uncovered id) and
/// cover their `2(k - 1)`-ball, so any two centers are more than `2(k - 1)`
/// apart and lie in distinct balls of an optimal sequence.
pub fn aprx3_burning(g: &Graph) -> Result<(usize, BurningSequence)> {
    let upper = burning_upper_bound(g)?;
    let mut scanner = BallScanner::new(g.vertex_count());
    let mut attempt = |k: usize| {
        let radius = 2 * (k - 1);
        let mut covered = vec![false; g.vertex_count()];
        let mut centers = Vec::new();
        for v in g.vertices() {
            if covered[v] {
                continue;
            }
            centers.push(v);
            if centers.len() > k {
                return None;
            }
            scanner.visit(g, v, radius, |u| covered[u] = true);
        }
        Some(centers)
    };
    let (_, centers) = smallest_guess(upper, &mut attempt);
    Ok(sequence_from_centers(g, &centers))
}

/// 2-approximation on a forest: repeatedly take the deepest uncovered
/// vertex, move up `k - 1` levels (or to the root) and cover that vertex's
/// `(k - 1)`-ball.
pub fn aprx2_tree_burning(t: &Graph) -> Result<(usize, BurningSequence)> {
    if t.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let comps = components(t);
    if t.edge_count() + comps.len() != t.vertex_count() {
        return Err(Error::Cyclic);
    }
    let n = t.vertex_count();
    let mut depth = vec![0; n];
    let mut parent = vec![usize::MAX; n];
    for comp in &comps {
        let (root, _) = component_center(t, comp).expect("component is non-empty");
        bfs_tree(t, root, &mut depth, &mut parent);
    }
    let mut order: Vec<VertexId> = t.vertices().collect();
    order.sort_by(|&a, &b| depth[b].cmp(&depth[a]).then(a.cmp(&b)));

    let upper = burning_upper_bound(t)?;
    let mut scanner = BallScanner::new(n);
    let mut attempt = |k: usize| {
        let mut covered = vec![false; n];
        let mut centers = Vec::new();
        for &v in &order {
            if covered[v] {
                continue;
            }
            let mut center = v;
            for _ in 0..(k - 1).min(depth[v]) {
                center = parent[center];
            }
            centers.push(center);
            if centers.len() > k {
                return None;
            }
            scanner.visit(t, center, k - 1, |u| covered[u] = true);
        }
        Some(centers)
    };
    let (_, centers) = smallest_guess(upper, &mut attempt);
    Ok(sequence_from_centers(t, &centers))
}

/// Burning-number upper bound for any graph via a spanning forest.
pub fn aprx2_spanning_bound(g: &Graph) -> Result<(usize, BurningSequence)> {
    aprx2_tree_burning(&spanning_forest(g))
}

/// BFS spanning tree of a connected graph rooted at a minimum-eccentricity
/// vertex. Vertex ids and labels are unchanged.
pub fn spanning_tree(g: &Graph) -> Result<Graph> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(spanning_forest(g))
}

/// One BFS tree per component, each rooted at the component center.
pub fn spanning_forest(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut depth = vec![0; n];
    let mut parent = vec![usize::MAX; n];
    for comp in components(g) {
        let (root, _) = component_center(g, &comp).expect("component is non-empty");
        bfs_tree(g, root, &mut depth, &mut parent);
    }
    let edges = (0..n).filter(|&v| parent[v] != v).map(|v| (parent[v], v));
    Graph::from_labeled_edges(g.labels().to_vec(), edges).expect("tree edges are in range")
}

/// Fills `depth`/`parent` for the component of `root`, which becomes its
/// own parent. Unvisited vertices must have `parent == usize::MAX`.
fn bfs_tree(g: &Graph, root: VertexId, depth: &mut [usize], parent: &mut [usize]) {
    parent[root] = root;
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
}

/// Binary search for the smallest accepted guess in `[1, upper]`; `upper`
/// must be accepted.
fn smallest_guess<T>(upper: usize, attempt: &mut impl FnMut(usize) -> Option<T>) -> (usize, T) {
    let (mut lo, mut hi) = (1, upper.max(1));
    let mut best = None;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match attempt(mid) {
            Some(found) => {
                hi = mid;
                best = Some(found);
            }
            None => lo = mid + 1,
        }
    }
    match best {
        Some(found) if hi == lo => (lo, found),
        _ => (lo, attempt(lo).expect("upper bound guess is always accepted")),
    }
}

/// Sequence of `centers` followed by filler vertices, long enough that each
/// center's radius reaches every vertex nearest to it.
fn sequence_from_centers(g: &Graph, centers: &[VertexId]) -> (usize, BurningSequence) {
    let reach = covering_radius(g, centers);
    let length = centers.len() + reach;
    let mut used = vec![false; g.vertex_count()];
    for &c in centers {
        used[c] = true;
    }
    let fillers = g.vertices().filter(|&v| !used[v]).take(reach);
    let ids: Vec<VertexId> = centers.iter().copied().chain(fillers).collect();
    debug_assert_eq!(ids.len(), length);
    let labels = ids.into_iter().map(|v| g.label(v).clone()).collect();
    (length, BurningSequence::with_budget(labels, length))
}

/// Largest distance from a vertex to its nearest center.
fn covering_radius(g: &Graph, centers: &[VertexId]) -> usize {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut queue = VecDeque::new();
    for &c in centers {
        dist[c] = 0;
        queue.push_back(c);
    }
    let mut far = 0;
    while let Some(u) = queue.pop_front() {
        far = far.max(dist[u]);
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    far
}
