//! Simple undirected graphs: construction, structural queries, coalescence,
//! and seeded random generation of trees and bipartite graphs.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge list parse error: {0}")]
    Parse(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("star graph needs at least 2 vertices, got {0}")]
    StarTooSmall(usize),
    #[error("bipartite generator failed to reach degree >= 1 at vertex 0 after {0} attempts")]
    GenerationFailed(usize),
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored once as `(min, max)` pairs; the per-vertex adjacency
/// lists are kept sorted and always describe the same relation as the edge
/// set. Values are immutable after construction and all operations are pure.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

/// The two color classes of a bipartite graph. Parts are disjoint, cover
/// every vertex, and every edge crosses between them. Canonical form: the
/// lowest-index vertex of each connected component sits in `part1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub part1: Vec<usize>,
    pub part2: Vec<usize>,
}

/// Result of identifying one vertex of each operand into a single vertex.
///
/// `map_left`/`map_right` send operand vertex indices into the result;
/// they agree exactly on the identified pair (at `merged`) and nowhere else.
#[derive(Debug, Clone)]
pub struct CoalescenceResult {
    pub graph: Graph,
    pub map_left: Vec<usize>,
    pub map_right: Vec<usize>,
    pub merged: usize,
}

/// Vertex deletion result: the induced graph plus the order-preserving
/// old-index -> new-index map (`None` for deleted vertices).
#[derive(Debug, Clone)]
pub struct VertexDeletion {
    pub graph: Graph,
    pub index_map: Vec<Option<usize>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges. `n = 0` gives the empty graph.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: BTreeSet::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Build from an explicit edge list, validating simplicity.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, order: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        Ok(())
    }

    /// Path on `n` vertices, edges `(i, i+1)`. Panics if `n == 0`.
    pub fn path(n: usize) -> Graph {
        assert!(n >= 1, "path graph needs at least one vertex");
        Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
    }

    /// Star on `k` vertices: vertex 0 is the center, vertices `1..k` are leaves.
    pub fn star(k: usize) -> Result<Graph, GraphError> {
        if k < 2 {
            return Err(GraphError::StarTooSmall(k));
        }
        Graph::from_edges(k, (1..k).map(|i| (0, i)))
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle graph needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Parse the edge-list text format: optional `#` comment lines, a header
    /// line `n m`, then `m` lines `u v` with `0 <= u,v < n`, `u != v`,
    /// duplicates rejected.
    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| GraphError::Parse("missing header line".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .ok_or_else(|| GraphError::Parse("missing vertex count".into()))?
            .parse()
            .map_err(|_| GraphError::Parse(format!("bad vertex count in {header:?}")))?;
        let m: usize = it
            .next()
            .ok_or_else(|| GraphError::Parse("missing edge count".into()))?
            .parse()
            .map_err(|_| GraphError::Parse(format!("bad edge count in {header:?}")))?;
        if it.next().is_some() {
            return Err(GraphError::Parse(format!("trailing tokens in header {header:?}")));
        }
        let mut g = Graph::empty(n);
        let mut seen = 0usize;
        for line in lines {
            if seen == m {
                return Err(GraphError::Parse(format!("more than {m} edge lines")));
            }
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize, GraphError> {
                tok.ok_or_else(|| GraphError::Parse(format!("short edge line {line:?}")))?
                    .parse()
                    .map_err(|_| GraphError::Parse(format!("bad vertex index in {line:?}")))
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(GraphError::Parse(format!("trailing tokens in {line:?}")));
            }
            g.insert_edge(u, v)?;
            seen += 1;
        }
        if seen != m {
            return Err(GraphError::Parse(format!("expected {m} edges, found {seen}")));
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as canonical `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    /// Breadth-first shortest-path length; `None` across components.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(w) = queue.pop_front() {
            for &x in &self.adj[w] {
                if dist[x] == usize::MAX {
                    dist[x] = dist[w] + 1;
                    if x == v {
                        return Some(dist[x]);
                    }
                    queue.push_back(x);
                }
            }
        }
        None
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(w) = queue.pop_front() {
                for &x in &self.adj[w] {
                    if !seen[x] {
                        seen[x] = true;
                        comp.push(x);
                        queue.push_back(x);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() == self.n - 1
    }

    /// Two-color the graph, or `None` if it contains an odd cycle. The
    /// lowest-index vertex of each component lands in `part1`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(w) = queue.pop_front() {
                for &x in &self.adj[w] {
                    if color[x] == u8::MAX {
                        color[x] = 1 - color[w];
                        queue.push_back(x);
                    } else if color[x] == color[w] {
                        return None;
                    }
                }
            }
        }
        let part1 = (0..self.n).filter(|&v| color[v] == 0).collect();
        let part2 = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some(Bipartition { part1, part2 })
    }

    /// Delete the vertices in `remove`, reindexing the remainder
    /// order-preservingly.
    pub fn delete_vertices(&self, remove: &[usize]) -> Result<VertexDeletion, GraphError> {
        for &v in remove {
            self.check_vertex(v)?;
        }
        let removed: BTreeSet<usize> = remove.iter().copied().collect();
        let mut index_map = vec![None; self.n];
        let mut next = 0usize;
        for (v, slot) in index_map.iter_mut().enumerate() {
            if !removed.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| {
            match (index_map[u], index_map[v]) {
                (Some(a), Some(b)) => Some((a, b)),
                _ => None,
            }
        });
        let graph = Graph::from_edges(next, edges).expect("induced subgraph is simple");
        Ok(VertexDeletion { graph, index_map })
    }

    /// Delete the listed edges; vertex indices are unchanged.
    pub fn delete_edges(&self, remove: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut edges = self.edges.clone();
        for &(u, v) in remove {
            let key = (u.min(v), u.max(v));
            if !edges.remove(&key) {
                return Err(GraphError::MissingEdge(key.0, key.1));
            }
        }
        Ok(Graph::from_edges(self.n, edges).expect("subset of a simple edge set"))
    }

    /// The graph induced on `keep` plus the old -> new index map.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<VertexDeletion, GraphError> {
        for &v in keep {
            self.check_vertex(v)?;
        }
        let keep: BTreeSet<usize> = keep.iter().copied().collect();
        let drop: Vec<usize> = (0..self.n).filter(|v| !keep.contains(v)).collect();
        self.delete_vertices(&drop)
    }

    /// Disjoint union; `other`'s vertices are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(n, edges).expect("disjoint shift keeps edges simple")
    }

    /// The unique path between `u` and `v` in a tree, as a vertex sequence.
    pub fn tree_path(&self, u: usize, v: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.is_tree() {
            return Err(GraphError::NotATree);
        }
        let mut parent = vec![usize::MAX; self.n];
        parent[u] = u;
        let mut queue = VecDeque::from([u]);
        while let Some(w) = queue.pop_front() {
            if w == v {
                break;
            }
            for &x in &self.adj[w] {
                if parent[x] == usize::MAX {
                    parent[x] = w;
                    queue.push_back(x);
                }
            }
        }
        let mut path = vec![v];
        let mut w = v;
        while w != u {
            w = parent[w];
            path.push(w);
        }
        path.reverse();
        Ok(path)
    }

    /// All bridges: edges whose removal increases the component count.
    pub fn bridges(&self) -> BTreeSet<(usize, usize)> {
        // Iterative DFS low-link. disc[v] = discovery time, low[v] = lowest
        // discovery time reachable from v's subtree via one back edge.
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut time = 0usize;
        let mut bridges = BTreeSet::new();
        // Stack entries: (vertex, parent, next neighbor index to visit).
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            stack.push((root, usize::MAX, 0));
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let w = self.adj[v][*idx];
                    *idx += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            bridges.insert((p.min(v), p.max(v)));
                        }
                    }
                }
            }
        }
        bridges
    }

    /// Identify vertex `u` of `self` with vertex `v` of `other`.
    ///
    /// Left-operand vertices keep their indices (the merged vertex is `u`);
    /// right-operand vertices are appended in order, skipping `v`.
    pub fn coalesce(&self, u: usize, other: &Graph, v: usize) -> Result<CoalescenceResult, GraphError> {
        self.check_vertex(u)?;
        other.check_vertex(v)?;
        let map_left: Vec<usize> = (0..self.n).collect();
        let map_right: Vec<usize> = (0..other.n)
            .map(|j| {
                if j == v {
                    u
                } else if j < v {
                    self.n + j
                } else {
                    self.n + j - 1
                }
            })
            .collect();
        let n = self.n + other.n - 1;
        let edges = self
            .edges()
            .chain(other.edges().map(|(a, b)| (map_right[a], map_right[b])));
        let graph = Graph::from_edges(n, edges)
            .expect("operand vertex universes are disjoint, so the result stays simple");
        Ok(CoalescenceResult { graph, map_left, map_right, merged: u })
    }

    /// Uniform random labeled tree by decoding a random generator sequence.
    /// Deterministic for a fixed seed.
    pub fn random_tree(n: usize, seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Graph::random_tree_with(n, &mut rng)
    }

    /// As [`Graph::random_tree`], drawing from a caller-supplied generator.
    pub fn random_tree_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
        assert!(n >= 1, "tree needs at least one vertex");
        if n == 1 {
            return Graph::empty(1);
        }
        if n == 2 {
            return Graph::from_edges(2, [(0, 1)]).unwrap();
        }
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        decode_pruefer(n, &seq)
    }

    /// Random bipartite graph with parts `0..n1` and `n1..n1+n2`; each cross
    /// edge appears independently with probability `p`. Redraws (up to 1000
    /// times) until vertex 0 has degree at least one.
    pub fn random_bipartite(n1: usize, n2: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Graph::random_bipartite_with(n1, n2, p, &mut rng)
    }

    /// As [`Graph::random_bipartite`], drawing from a caller-supplied generator.
    pub fn random_bipartite_with<R: Rng + ?Sized>(
        n1: usize,
        n2: usize,
        p: f64,
        rng: &mut R,
    ) -> Result<Graph, GraphError> {
        assert!(n1 >= 1 && n2 >= 1, "both parts must be nonempty");
        assert!(p > 0.0 && p <= 1.0, "edge probability must be in (0, 1]");
        const MAX_ATTEMPTS: usize = 1000;
        for _ in 0..MAX_ATTEMPTS {
            let mut edges = Vec::new();
            for i in 0..n1 {
                for j in 0..n2 {
                    if rng.gen_bool(p) {
                        edges.push((i, n1 + j));
                    }
                }
            }
            let g = Graph::from_edges(n1 + n2, edges).expect("cross edges are simple");
            if g.degree(0) >= 1 {
                return Ok(g);
            }
        }
        Err(GraphError::GenerationFailed(MAX_ATTEMPTS))
    }
}

/// Decode a generator sequence over `0..n` (length `n - 2`) into its tree.
fn decode_pruefer(n: usize, seq: &[usize]) -> Graph {
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &a in seq {
        degree[a] += 1;
    }
    // Leaves in ascending order; `ptr` walks the smallest candidate.
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let leaf = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&leaf);
        edges.push((leaf, a));
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.insert(a);
        }
    }
    let mut it = leaves.iter();
    let (x, y) = (*it.next().unwrap(), *it.next().unwrap());
    edges.push((x, y));
    Graph::from_edges(n, edges).expect("decoded sequence forms a tree")
}
