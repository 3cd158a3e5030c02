use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Immutable simple undirected graph over vertex ids `0..n`.
///
/// Adjacency is symmetric by construction, self-loops are rejected and
/// duplicate edges collapse. Once built, a graph is safe to share across
/// threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
            m: 0,
        }
    }

    /// Builds a graph from explicit edges over `0..n`.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::Parameter(format!("self-loop {u}-{v}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::Parameter(format!(
                "edge {u}-{v} out of range for n = {}",
                self.n
            )));
        }
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.m += 1;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Neighbor set of `v` as a bitset.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("complement edges are in range");
                }
            }
        }
        g
    }

    /// Induced subgraph on `keep`; returns the subgraph and, per new id,
    /// the original id it came from (increasing order).
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old_ids = keep.to_vec();
        let index: HashMap<usize, usize> =
            old_ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Graph::new(old_ids.len());
        for (i, &u) in old_ids.iter().enumerate() {
            for v in self.adj[u].iter() {
                if v > u {
                    if let Some(&j) = index.get(&v) {
                        g.add_edge(i, j).expect("induced edges are in range");
                    }
                }
            }
        }
        (g, old_ids)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Parameter("permutation length mismatch".into()));
        }
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::empty(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.adj[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                    count += 1;
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.m == self.n - 1 && self.is_connected()
    }

    /// BFS distances from `src`; unreachable vertices get `UNREACHABLE`.
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for v in self.adj[u].iter() {
                if dist[v] == UNREACHABLE {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

pub const UNREACHABLE: u32 = u32::MAX;

/// Length of a shortest cycle, with a dedicated sentinel for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Girth {
    Acyclic,
    Cycle(usize),
}

impl Girth {
    pub fn value(&self) -> Option<usize> {
        match self {
            Girth::Acyclic => None,
            Girth::Cycle(g) => Some(*g),
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Acyclic => write!(f, "acyclic"),
            Girth::Cycle(g) => write!(f, "{g}"),
        }
    }
}

/// All-pairs hop distances plus the derived scalar metrics.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    pub diameter: usize,
    pub girth: Girth,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn is_connected(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHABLE)
    }
}

/// BFS-exact distances, diameter, girth and degree extremes.
///
/// Disconnected inputs are allowed: unreachable pairs carry the sentinel and
/// the diameter is the largest finite entry.
pub fn all_pairs(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut dist = Vec::with_capacity(n * n);
    for u in 0..n {
        dist.extend(g.bfs_distances(u));
    }
    let diameter = dist
        .iter()
        .filter(|&&d| d != UNREACHABLE)
        .max()
        .copied()
        .unwrap_or(0) as usize;
    let (min_degree, max_degree) = if n == 0 {
        (0, 0)
    } else {
        let degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        (
            *degs.iter().min().expect("n > 0"),
            *degs.iter().max().expect("n > 0"),
        )
    };
    DistanceMatrix {
        n,
        dist,
        diameter,
        girth: girth(g),
        min_degree,
        max_degree,
    }
}

/// Exact girth: for each edge, the shortest cycle through it is one plus the
/// distance between its endpoints with that edge removed.
fn girth(g: &Graph) -> Girth {
    let mut best: Option<usize> = None;
    for (u, v) in g.edges() {
        let mut dist = vec![UNREACHABLE; g.n()];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        'bfs: while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x).iter() {
                if (x == u && y == v) || (x == v && y == u) {
                    continue;
                }
                if dist[y] == UNREACHABLE {
                    dist[y] = dist[x] + 1;
                    if y == v {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        if dist[v] != UNREACHABLE {
            let cycle = dist[v] as usize + 1;
            if best.is_none_or(|b| cycle < b) {
                best = Some(cycle);
            }
        }
    }
    match best {
        Some(gv) => Girth::Cycle(gv),
        None => Girth::Acyclic,
    }
}

/// A graph parsed from edge-list text, with the dense-reindexing record.
///
/// `labels[id]` is the original input label of vertex `id`; ids are assigned
/// in first-appearance order.
#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
}

impl ParsedGraph {
    pub fn label_of(&self, id: usize) -> u64 {
        self.labels[id]
    }
}

/// Parses edge-list text: two nonnegative integer tokens per line, `#`/`c`
/// comment lines and blank lines ignored, arbitrary labels densely
/// reindexed, duplicate edges collapsed.
pub fn from_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut labels: Vec<u64> = Vec::new();
    let mut index: HashMap<u64, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Format {
                line: line_no,
                msg: format!("expected two integer tokens, found {}", tokens.len()),
            });
        }
        let mut pair = [0u64; 2];
        for (slot, tok) in pair.iter_mut().zip(&tokens) {
            *slot = tok.parse().map_err(|_| Error::Format {
                line: line_no,
                msg: format!("non-integer token '{tok}'"),
            })?;
        }
        if pair[0] == pair[1] {
            return Err(Error::Format {
                line: line_no,
                msg: format!("self-loop {} {}", pair[0], pair[1]),
            });
        }
        let ids: Vec<usize> = pair
            .iter()
            .map(|&label| {
                *index.entry(label).or_insert_with(|| {
                    labels.push(label);
                    labels.len() - 1
                })
            })
            .collect();
        edges.push((ids[0], ids[1]));
    }
    let graph = Graph::from_edges(labels.len(), edges)?;
    Ok(ParsedGraph { graph, labels })
}

/// Renders a graph back to edge-list text (one `u v` line per edge).
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Default vertex cap for the exact clique/independence searches.
pub const DEFAULT_EXACT_LIMIT: usize = 64;

/// Exact clique number via branch-and-bound with a greedy coloring bound.
pub fn clique_number(g: &Graph) -> Result<usize> {
    clique_number_with_limit(g, DEFAULT_EXACT_LIMIT)
}

pub fn clique_number_with_limit(g: &Graph, cap: usize) -> Result<usize> {
    Ok(max_clique_with_limit(g, cap)?.len())
}

/// Exact independence number, computed as the clique number of the complement.
pub fn independence_number(g: &Graph) -> Result<usize> {
    independence_number_with_limit(g, DEFAULT_EXACT_LIMIT)
}

pub fn independence_number_with_limit(g: &Graph, cap: usize) -> Result<usize> {
    Ok(max_independent_set_with_limit(g, cap)?.len())
}

/// A maximum clique (one witness, deterministic).
pub fn max_clique(g: &Graph) -> Result<VertexSet> {
    max_clique_with_limit(g, DEFAULT_EXACT_LIMIT)
}

pub fn max_clique_with_limit(g: &Graph, cap: usize) -> Result<VertexSet> {
    if g.n() > cap {
        return Err(Error::TooLarge { n: g.n(), cap });
    }
    Ok(max_clique_search(g))
}

/// A maximum independent set (one witness, deterministic).
pub fn max_independent_set(g: &Graph) -> Result<VertexSet> {
    max_independent_set_with_limit(g, DEFAULT_EXACT_LIMIT)
}

pub fn max_independent_set_with_limit(g: &Graph, cap: usize) -> Result<VertexSet> {
    if g.n() > cap {
        return Err(Error::TooLarge { n: g.n(), cap });
    }
    Ok(max_clique_search(&g.complement()))
}

fn max_clique_search(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut best = VertexSet::empty(n);
    if n == 0 {
        return best;
    }
    // Degree-descending root order, ties by id, so runs are deterministic.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let cand = VertexSet::full(n);
    let mut current = Vec::new();
    expand_clique(g, &cand, &mut current, &mut best);
    best
}

/// Greedy coloring of `cand`: returns (vertex, color) with colors ascending;
/// a vertex of color c caps any clique inside `cand` through it at c.
fn color_sort(g: &Graph, cand: &VertexSet) -> Vec<(usize, usize)> {
    let mut remaining = cand.clone();
    let mut out = Vec::new();
    let mut color = 0;
    while !remaining.is_empty() {
        color += 1;
        let mut class_members = Vec::new();
        let mut blocked = VertexSet::empty(cand.capacity());
        for v in remaining.iter() {
            if !blocked.contains(v) {
                class_members.push(v);
                blocked.union_with(g.neighbors(v));
                blocked.insert(v);
            }
        }
        for v in class_members {
            remaining.remove(v);
            out.push((v, color));
        }
    }
    out
}

fn expand_clique(g: &Graph, cand: &VertexSet, current: &mut Vec<usize>, best: &mut VertexSet) {
    let colored = color_sort(g, cand);
    let mut cand = cand.clone();
    for &(v, color) in colored.iter().rev() {
        if current.len() + color <= best.len() {
            return;
        }
        current.push(v);
        let mut next = cand.clone();
        next.intersect_with(g.neighbors(v));
        if next.is_empty() {
            if current.len() > best.len() {
                *best = VertexSet::from_iter(g.n(), current.iter().copied());
            }
        } else {
            expand_clique(g, &next, current, best);
        }
        current.pop();
        cand.remove(v);
    }
}

#[cfg(test)]
pub(crate) fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).expect("valid path")
}

#[cfg(test)]
pub(crate) fn cycle_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

#[cfg(test)]
pub(crate) fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).expect("valid complete graph")
}

#[cfg(test)]
pub(crate) fn petersen_edges() -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    edges
}
