//! Simple connected undirected graphs: validated construction, classification,
//! deterministic random generators, and edge-list text IO.
//!
//! Vertices are labeled `1..=n`. Edges are stored as ordered pairs `(u, v)`
//! with `u < v`, sorted lexicographically, so iteration order and the
//! serialized form are canonical.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Default retry budget for the connected Erdős–Rényi generator.
pub const DEFAULT_MAX_RETRIES: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("{family} requires at least {min} vertices, got {got}")]
    SizeTooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("no connected graph after {attempts} attempts (n={n}, q={q})")]
    RetriesExhausted { n: usize, q: f64, attempts: usize },
    #[error("edge probability {0} outside (0, 1]")]
    InvalidProbability(f64),
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// A simple undirected graph on vertices `1..=n`.
///
/// Immutable after construction; all invariants (no self-loops, no duplicate
/// edges, endpoints in range) are enforced by [`Graph::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Per-vertex degrees together with the non-increasing sorted view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    per_vertex: Vec<usize>,
    sorted: Vec<usize>,
}

impl DegreeSequence {
    /// Degree of vertex `v` (1-based).
    pub fn degree_of(&self, v: usize) -> usize {
        self.per_vertex[v - 1]
    }

    /// Degrees indexed by vertex label minus one.
    pub fn per_vertex(&self) -> &[usize] {
        &self.per_vertex
    }

    /// Degrees in non-increasing order `d1 >= d2 >= ... >= dn`.
    pub fn sorted(&self) -> &[usize] {
        &self.sorted
    }

    /// Largest degree `d1`.
    pub fn max(&self) -> usize {
        self.sorted[0]
    }

    /// Sum of all degrees; equals `2m` by the handshake identity.
    pub fn sum(&self) -> usize {
        self.per_vertex.iter().sum()
    }
}

/// Structural classification of a connected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphClass {
    pub bipartite: bool,
    pub complete: bool,
    pub tree: bool,
}

impl Graph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Each pair is order-normalized to `(min, max)`. Self-loops, duplicate
    /// edges (in either orientation) and out-of-range endpoints are rejected
    /// rather than silently repaired.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::TooFewVertices(n));
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for v in [a, b] {
                if v < 1 || v > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph { n, edges })
    }

    /// Number of vertices `n`.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges `m`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Largest possible edge count `n(n-1)/2` for a given order.
    pub fn max_edges(n: usize) -> usize {
        n * (n - 1) / 2
    }

    /// Adjacency lists indexed by `vertex - 1`.
    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u - 1].push(v - 1);
            adj[v - 1].push(u - 1);
        }
        adj
    }

    /// Per-vertex degrees and the non-increasing sorted view.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut per_vertex = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            per_vertex[u - 1] += 1;
            per_vertex[v - 1] += 1;
        }
        let mut sorted = per_vertex.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { per_vertex, sorted }
    }

    /// True iff a traversal from vertex 1 reaches all `n` vertices.
    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.n
    }

    /// True iff the graph is 2-colorable. Defined for any graph; used both by
    /// [`Graph::classify`] and by spectrum validation.
    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency();
        let mut color = vec![-1i8; self.n];
        for start in 0..self.n {
            if color[start] >= 0 {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if color[y] < 0 {
                        color[y] = 1 - color[x];
                        stack.push(y);
                    } else if color[y] == color[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Classifies a connected graph as bipartite / complete / tree.
    pub fn classify(&self) -> Result<GraphClass, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        Ok(GraphClass {
            bipartite: self.is_bipartite(),
            complete: self.edge_count() == Self::max_edges(self.n),
            tree: self.edge_count() == self.n - 1,
        })
    }

    /// Serializes to the edge-list text format: a `"n m"` header followed by
    /// one `"u v"` line per edge in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} {}\n", self.n, self.edges.len()));
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }
}

/// Parses the edge-list text format.
///
/// Lines starting with `#` and blank lines are ignored. The first payload
/// line must be `"n m"`; exactly `m` lines `"u v"` with `1 <= u < v <= n`
/// must follow.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let parse_err = |line: usize, reason: &str| GraphError::Parse {
        line,
        reason: reason.to_string(),
    };
    let mut payload = text.lines().enumerate().filter_map(|(i, raw)| {
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            None
        } else {
            Some((i + 1, s))
        }
    });

    let (header_line, header) = payload
        .next()
        .ok_or_else(|| parse_err(1, "missing \"n m\" header"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse_err(header_line, "header must be \"n m\""))?;
    let m: usize = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse_err(header_line, "header must be \"n m\""))?;
    if it.next().is_some() {
        return Err(parse_err(header_line, "header must be \"n m\""));
    }
    if n >= 2 && m > Graph::max_edges(n) {
        return Err(parse_err(
            header_line,
            &format!(
                "m={} exceeds the {} possible edges on {} vertices",
                m,
                Graph::max_edges(n),
                n
            ),
        ));
    }

    let last_line = text.lines().count();
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, s) = payload.next().ok_or_else(|| {
            parse_err(
                last_line,
                &format!("expected {} edge lines, found {}", m, edges.len()),
            )
        })?;
        let mut it = s.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_err(line, "edge line must be \"u v\""))?;
        let v: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_err(line, "edge line must be \"u v\""))?;
        if it.next().is_some() {
            return Err(parse_err(line, "edge line must be \"u v\""));
        }
        if u >= v {
            return Err(parse_err(line, "edge endpoints must satisfy u < v"));
        }
        edges.push((u, v));
    }
    if let Some((line, _)) = payload.next() {
        return Err(parse_err(line, "unexpected content after the last edge"));
    }
    Graph::new(n, &edges)
}

/// Canonical constructions of the standard families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    /// Path on `n` vertices, edges `(i, i+1)`.
    Path(usize),
    /// Cycle on `n` vertices.
    Cycle(usize),
    /// Star on `n` vertices with center 1.
    Star(usize),
    /// Complete graph on `n` vertices.
    Complete(usize),
    /// Complete bipartite graph with parts `1..=a` and `a+1..=a+b`.
    CompleteBipartite(usize, usize),
}

pub fn make_named(kind: NamedGraph) -> Result<Graph, GraphError> {
    let too_small = |family, min, got| GraphError::SizeTooSmall { family, min, got };
    match kind {
        NamedGraph::Path(n) => {
            if n < 2 {
                return Err(too_small("path", 2, n));
            }
            let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            Graph::new(n, &edges)
        }
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return Err(too_small("cycle", 3, n));
            }
            let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            edges.push((1, n));
            Graph::new(n, &edges)
        }
        NamedGraph::Star(n) => {
            if n < 2 {
                return Err(too_small("star", 2, n));
            }
            let edges: Vec<_> = (2..=n).map(|v| (1, v)).collect();
            Graph::new(n, &edges)
        }
        NamedGraph::Complete(n) => {
            if n < 2 {
                return Err(too_small("complete", 2, n));
            }
            let mut edges = Vec::with_capacity(Graph::max_edges(n));
            for u in 1..n {
                for v in (u + 1)..=n {
                    edges.push((u, v));
                }
            }
            Graph::new(n, &edges)
        }
        NamedGraph::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return Err(too_small("complete_bipartite", 1, a.min(b)));
            }
            let mut edges = Vec::with_capacity(a * b);
            for u in 1..=a {
                for v in (a + 1)..=(a + b) {
                    edges.push((u, v));
                }
            }
            Graph::new(a + b, &edges)
        }
    }
}

/// Samples connected Erdős–Rényi graphs `G(n, q)` by rejection.
///
/// Each of the `n(n-1)/2` candidate edges is included independently with
/// probability `q`, drawing one uniform variate per pair in the canonical
/// order `(1,2), (1,3), ..., (n-1,n)`; candidates are resampled until one is
/// connected. The stream is a `ChaCha8Rng` seeded with `seed`, so the result
/// is a pure function of `(n, q, seed)` on every platform.
pub fn generate_er_connected(
    n: usize,
    q: f64,
    seed: u64,
    max_retries: usize,
) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::TooFewVertices(n));
    }
    if !(q > 0.0 && q <= 1.0) {
        return Err(GraphError::InvalidProbability(q));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_retries {
        let mut edges = Vec::new();
        for u in 1..n {
            for v in (u + 1)..=n {
                if rng.random::<f64>() < q {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph { n, edges };
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GraphError::RetriesExhausted {
        n,
        q,
        attempts: max_retries,
    })
}

/// Decodes a Prüfer sequence into the labeled tree it encodes.
///
/// Iteratively joins the smallest-labeled current leaf to the head of the
/// remaining sequence; the final two leaves are joined last. A sequence of
/// length `n-2` over `{1..n}` yields a tree with exactly `n-1` edges.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::TooFewVertices(n));
    }
    if seq.len() != n - 2 {
        return Err(GraphError::Parse {
            line: 0,
            reason: format!(
                "Prüfer sequence must have length {}, got {}",
                n - 2,
                seq.len()
            ),
        });
    }
    for &x in seq {
        if x < 1 || x > n {
            return Err(GraphError::VertexOutOfRange { vertex: x, n });
        }
    }
    let mut degree = vec![1usize; n + 1];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = *leaves.iter().next().expect("a tree always has a leaf");
        leaves.remove(&leaf);
        edges.push((leaf.min(x), leaf.max(x)));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let mut rest = leaves.into_iter();
    let (u, v) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((u.min(v), u.max(v)));
    edges.sort_unstable();
    Ok(Graph { n, edges })
}

/// Generates a uniform random labeled tree on `n` vertices.
///
/// Draws a uniform Prüfer sequence of length `n-2` from a `ChaCha8Rng`
/// seeded with `seed` and decodes it; deterministic given `(n, seed)`.
pub fn generate_random_tree(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::TooFewVertices(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(1..=n)).collect();
    prufer_decode(n, &seq)
}
