//! Immutable undirected simple graphs and the traversal primitives the
//! burning algorithms are built from.
//!
//! Vertices carry contiguous internal ids `0..n` and an external label. Every
//! derived graph (induced subgraphs, deletions) keeps the external labels so
//! burning sequences can always be reported in terms of the input file.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// External vertex label, shared between a graph and the graphs derived from it.
pub type Label = Arc<str>;

const UNSEEN: usize = usize::MAX;

/// Undirected simple graph in adjacency-list form.
///
/// Adjacency lists are sorted ascending, symmetric, and free of self-loops and
/// parallel edges.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    labels: Vec<Label>,
}

impl Graph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a graph on `0..n` whose labels are the ids themselves.
    /// Self-loops and duplicate edges are dropped.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, vertex_count: n });
                }
            }
            if u != v {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let labels = (0..n).map(|i| Label::from(i.to_string())).collect();
        Ok(Self { adjacency, labels })
    }

    /// Builds a graph whose vertex `i` carries `labels[i]`.
    pub fn from_labeled_edges(
        labels: Vec<Label>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let mut g = Self::from_edges(labels.len(), edges)?;
        g.labels = labels;
        Ok(g)
    }

    fn from_parts(adjacency: Vec<Vec<VertexId>>, labels: Vec<Label>) -> Self {
        debug_assert_eq!(adjacency.len(), labels.len());
        Self { adjacency, labels }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn label(&self, v: VertexId) -> &Label {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Internal id of the vertex carrying `label`.
    pub fn find_label(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| &**l == label)
    }

    pub fn label_index(&self) -> HashMap<&str, VertexId> {
        self.labels.iter().enumerate().map(|(i, l)| (&**l, i)).collect()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count() })
        }
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }
}

/// Accumulates labelled vertices and edges, then assigns internal ids.
///
/// Ids follow the natural order of the labels: numeric when every label is
/// an unsigned integer, lexicographic otherwise.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    index: HashMap<String, usize>,
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.names.len();
        self.names.push(label.to_owned());
        self.index.insert(label.to_owned(), i);
        i
    }

    pub fn add_edge(&mut self, a: &str, b: &str) {
        let u = self.add_vertex(a);
        let v = self.add_vertex(b);
        if u != v {
            self.edges.push((u, v));
        }
    }

    pub fn build(self) -> Graph {
        let n = self.names.len();
        let numeric: Option<Vec<u64>> = self.names.iter().map(|s| s.parse::<u64>().ok()).collect();
        let mut order: Vec<usize> = (0..n).collect();
        match &numeric {
            Some(values) => order.sort_by_key(|&i| values[i]),
            None => order.sort_by(|&a, &b| self.names[a].cmp(&self.names[b])),
        }
        let mut rank = vec![0; n];
        for (new_id, &old) in order.iter().enumerate() {
            rank[old] = new_id;
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            let (u, v) = (rank[u], rank[v]);
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let mut names = self.names;
        let labels = order.iter().map(|&old| Label::from(std::mem::take(&mut names[old]))).collect();
        Graph::from_parts(adjacency, labels)
    }
}

/// Sorted set of internal vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_unsorted(mut ids: Vec<VertexId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        Self(ids)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        Self::from_unsorted(iter.into_iter().collect())
    }
}

/// Connected components ordered by their smallest vertex id.
pub type ComponentList = Vec<VertexSet>;

pub fn components(g: &Graph) -> ComponentList {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
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
        out.push(VertexSet::from_unsorted(members));
    }
    out
}

/// Component membership as a per-vertex index into [`components`].
pub fn component_ids(g: &Graph) -> (Vec<usize>, usize) {
    let comps = components(g);
    let mut id = vec![0; g.vertex_count()];
    for (c, set) in comps.iter().enumerate() {
        for v in set.iter() {
            id[v] = c;
        }
    }
    (id, comps.len())
}

pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// BFS distances from `source`; unreachable vertices are `None`.
pub fn bfs_distances(g: &Graph, source: VertexId) -> Vec<Option<usize>> {
    let mut dist = vec![UNSEEN; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNSEEN {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist.into_iter().map(|d| (d != UNSEEN).then_some(d)).collect()
}

/// Closed ball `{u : dist(u, v) <= r}`.
pub fn closed_ball(g: &Graph, v: VertexId, r: usize) -> Result<VertexSet> {
    g.check_vertex(v)?;
    let mut scanner = BallScanner::new(g.vertex_count());
    let mut members = Vec::new();
    scanner.visit(g, v, r, |u| members.push(u));
    Ok(VertexSet::from_unsorted(members))
}

/// Reusable BFS scratch space for repeated truncated searches on one graph.
#[derive(Debug, Clone)]
pub struct BallScanner {
    depth: Vec<usize>,
    stamp: Vec<u32>,
    round: u32,
    queue: VecDeque<VertexId>,
}

impl BallScanner {
    pub fn new(n: usize) -> Self {
        Self { depth: vec![0; n], stamp: vec![0; n], round: 0, queue: VecDeque::new() }
    }

    fn next_round(&mut self, n: usize) {
        if self.stamp.len() < n {
            self.stamp.resize(n, 0);
            self.depth.resize(n, 0);
        }
        self.round = self.round.wrapping_add(1);
        if self.round == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.round = 1;
        }
    }

    /// Calls `f` on every vertex within distance `r` of `v`, in BFS order.
    pub fn visit(&mut self, g: &Graph, v: VertexId, r: usize, mut f: impl FnMut(VertexId)) {
        self.next_round(g.vertex_count());
        let round = self.round;
        self.queue.clear();
        self.stamp[v] = round;
        self.depth[v] = 0;
        self.queue.push_back(v);
        while let Some(u) = self.queue.pop_front() {
            f(u);
            let d = self.depth[u];
            if d == r {
                continue;
            }
            for &w in g.neighbors(u) {
                if self.stamp[w] != round {
                    self.stamp[w] = round;
                    self.depth[w] = d + 1;
                    self.queue.push_back(w);
                }
            }
        }
    }

    pub fn ball_size(&mut self, g: &Graph, v: VertexId, r: usize) -> usize {
        let mut count = 0;
        self.visit(g, v, r, |_| count += 1);
        count
    }
}

/// Induced subgraph on the vertices kept by `keep`; relative id order and
/// labels are preserved.
fn restrict(g: &Graph, keep: impl Fn(VertexId) -> bool) -> Graph {
    let n = g.vertex_count();
    let mut remap = vec![UNSEEN; n];
    let mut labels = Vec::new();
    for v in 0..n {
        if keep(v) {
            remap[v] = labels.len();
            labels.push(g.label(v).clone());
        }
    }
    let adjacency = (0..n)
        .filter(|&v| remap[v] != UNSEEN)
        .map(|v| g.neighbors(v).iter().filter_map(|&w| (remap[w] != UNSEEN).then(|| remap[w])).collect())
        .collect();
    Graph::from_parts(adjacency, labels)
}

/// `g` with the vertices of `s` removed.
pub fn induced_delete(g: &Graph, s: &VertexSet) -> Graph {
    let n = g.vertex_count();
    let mut removed = vec![false; n];
    for v in s.iter().filter(|&v| v < n) {
        removed[v] = true;
    }
    restrict(g, |v| !removed[v])
}

/// Subgraph induced by `keep`.
pub fn induced_subgraph(g: &Graph, keep: &VertexSet) -> Graph {
    let n = g.vertex_count();
    let mut kept = vec![false; n];
    for v in keep.iter().filter(|&v| v < n) {
        kept[v] = true;
    }
    restrict(g, |v| kept[v])
}

/// One induced subgraph per entry of `comps`, which must be the connected
/// components of `g`. Built in a single pass.
pub fn component_subgraphs(g: &Graph, comps: &[VertexSet]) -> Vec<Graph> {
    let mut local = vec![0; g.vertex_count()];
    for set in comps {
        for (i, v) in set.iter().enumerate() {
            local[v] = i;
        }
    }
    comps
        .iter()
        .map(|set| {
            let adjacency = set
                .iter()
                .map(|v| g.neighbors(v).iter().map(|&w| local[w]).collect())
                .collect();
            let labels = set.iter().map(|v| g.label(v).clone()).collect();
            Graph::from_parts(adjacency, labels)
        })
        .collect()
}

/// BFS shortest path from `u` to `v` inclusive. Neighbors are expanded in
/// ascending id order and the first discoverer becomes the parent.
pub fn shortest_path(g: &Graph, u: VertexId, v: VertexId) -> Result<Vec<VertexId>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let mut parent = vec![UNSEEN; g.vertex_count()];
    let mut queue = VecDeque::new();
    parent[u] = u;
    queue.push_back(u);
    'search: while let Some(x) = queue.pop_front() {
        for &w in g.neighbors(x) {
            if parent[w] == UNSEEN {
                parent[w] = x;
                if w == v {
                    break 'search;
                }
                queue.push_back(w);
            }
        }
    }
    if parent[v] == UNSEEN {
        return Err(Error::NoPath { from: u, to: v });
    }
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    Ok(path)
}

/// Largest BFS distance from `v` within its component.
pub fn eccentricity(g: &Graph, v: VertexId) -> usize {
    bfs_distances(g, v).into_iter().flatten().max().unwrap_or(0)
}

/// Minimum-eccentricity vertex of the component `members` (lowest id on
/// ties) together with that eccentricity.
pub fn component_center(g: &Graph, members: &VertexSet) -> Option<(VertexId, usize)> {
    let mut best: Option<(VertexId, usize)> = None;
    for v in members.iter() {
        let ecc = eccentricity(g, v);
        if best.map_or(true, |(_, e)| ecc < e) {
            best = Some((v, ecc));
        }
    }
    best
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Graph on labels `1..=n` from 1-based edges.
    pub(crate) fn labeled(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut b = GraphBuilder::new();
        for v in 1..=n {
            b.add_vertex(&v.to_string());
        }
        for &(u, v) in edges {
            b.add_edge(&u.to_string(), &v.to_string());
        }
        b.build()
    }

    pub(crate) fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        labeled(n, &edges)
    }

    fn labels_of(g: &Graph, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| g.label(v).to_string()).collect()
    }

    #[test]
    fn builder_orders_numeric_labels_numerically() {
        let mut b = GraphBuilder::new();
        b.add_edge("10", "2");
        b.add_edge("2", "1");
        let g = b.build();
        let labels: Vec<&str> = g.labels().iter().map(|l| &**l).collect();
        assert_eq!(labels, ["1", "2", "10"]);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn builder_strips_loops_and_duplicates() {
        let mut b = GraphBuilder::new();
        b.add_edge("a", "b");
        b.add_edge("b", "a");
        b.add_edge("c", "c");
        let g = b.build();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn single_vertex_has_one_component() {
        let g = Graph::from_edges(1, []).unwrap();
        assert_eq!(components(&g), vec![VertexSet::from_unsorted(vec![0])]);
        assert!(components(&Graph::empty()).is_empty());
    }

    #[test]
    fn ball_on_path() {
        let g = path(5);
        let ball = closed_ball(&g, 2, 1).unwrap();
        assert_eq!(labels_of(&g, &ball), ["2", "3", "4"]);
        assert_eq!(closed_ball(&g, 2, 0).unwrap().as_slice(), &[2]);
        assert!(closed_ball(&g, 5, 1).is_err());
    }

    #[test]
    fn deleting_nothing_or_everything() {
        let g = path(4);
        assert_eq!(induced_delete(&g, &VertexSet::new()), g);
        let all: VertexSet = g.vertices().collect();
        assert!(induced_delete(&g, &all).is_empty());
    }

    #[test]
    fn deletion_keeps_labels() {
        let g = path(5);
        let h = induced_delete(&g, &VertexSet::from_unsorted(vec![1]));
        let labels: Vec<&str> = h.labels().iter().map(|l| &**l).collect();
        assert_eq!(labels, ["1", "3", "4", "5"]);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(components(&h).len(), 2);
    }

    #[test]
    fn shortest_path_basics() {
        let g = path(3);
        assert_eq!(shortest_path(&g, 1, 1).unwrap(), vec![1]);
        assert_eq!(shortest_path(&g, 0, 2).unwrap(), vec![0, 1, 2]);
        let h = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(shortest_path(&h, 0, 2), Err(Error::NoPath { .. })));
    }

    #[test]
    fn shortest_path_prefers_low_ids() {
        // Square 0-1-3-2-0: both routes from 0 to 3 have length 2.
        let g = Graph::from_edges(4, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        assert_eq!(shortest_path(&g, 0, 3).unwrap(), vec![0, 1, 3]);
    }

    #[test]
    fn center_of_path() {
        let g = path(9);
        let all: VertexSet = g.vertices().collect();
        assert_eq!(component_center(&g, &all), Some((4, 4)));
    }
}
