//! Graph and bipartite-graph types, text I/O, and structural predicates.
//!
//! Graphs are simple and undirected with vertices `0..n`. Adjacency is kept
//! as sorted neighbor lists; the counting engine packs neighborhoods into
//! bitsets per component, so graphs themselves stay list-based and support
//! any `n` the enumeration code asks for.

use rug::{Integer, Rational};
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("part sizes must be at least 1, got ({0}, {1})")]
    EmptyPart(usize, usize),
    #[error("clique order must be at least 1")]
    EmptyClique,
    #[error("edge probability must lie in [0, 1], got {0}")]
    InvalidProbability(Rational),
}

#[derive(Error, Debug)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    BadEdge {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("missing 'n <count>' or 'bip <a> <b>' header line")]
    MissingHeader,
}

/// Unordered degree pair of an edge, stored with `lo <= hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreePair {
    pub lo: usize,
    pub hi: usize,
}

impl DegreePair {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            DegreePair { lo: a, hi: b }
        } else {
            DegreePair { lo: b, hi: a }
        }
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

/// One connected component together with the map from its local vertex ids
/// back to the ids in the original graph (`vertices[local] = original`).
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

impl Graph {
    /// Build a graph from an edge list, rejecting loops, duplicates, and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|l| l.len()).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of isolated (degree-0) vertices.
    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|l| l.is_empty()).count()
    }

    /// Complete graph on `k >= 1` vertices.
    pub fn clique(k: usize) -> Result<Self, GraphError> {
        if k == 0 {
            return Err(GraphError::EmptyClique);
        }
        let mut edges = Vec::new();
        for u in 0..k {
            for v in u + 1..k {
                edges.push((u, v));
            }
        }
        Graph::new(k, &edges)
    }

    /// Complete bipartite graph `K_{a,b}` with parts `0..a` and `a..a+b`,
    /// both parts nonempty.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        if a == 0 || b == 0 {
            return Err(GraphError::EmptyPart(a, b));
        }
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::new(a + b, &edges)
    }

    /// Erdos-Renyi graph `G(n, p)` from the splitmix64 stream seeded with
    /// `seed`. Pairs `(u, v)`, `u < v`, are visited in lexicographic order
    /// and one 64-bit draw is taken per pair; the edge is present iff the
    /// draw is below `floor(p * 2^64)`, computed exactly from the rational
    /// `p`. The same `(n, p, seed)` always yields the same graph.
    pub fn random(n: usize, p: &Rational, seed: u64) -> Result<Self, GraphError> {
        if p.cmp0() == std::cmp::Ordering::Less || *p > 1u32 {
            return Err(GraphError::InvalidProbability(p.clone()));
        }
        let threshold = {
            let scaled = Integer::from(p.numer() << 64u32) / p.denom();
            if scaled > u64::MAX {
                u128::from(u64::MAX) + 1
            } else {
                u128::from(scaled.to_u64().unwrap())
            }
        };
        let mut state = seed;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let draw = splitmix64(&mut state);
                if u128::from(draw) < threshold {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges)
    }

    /// Parse the plain text format: optional `#` comments and blank lines, a
    /// `n <count>` header, then one `<u> <v>` edge per line.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        match parse_any(text)? {
            ParsedInput::Graph(g) => Ok(g),
            ParsedInput::Bigraph(_) => Err(ParseError::Syntax {
                line: 1,
                msg: "expected a 'n <count>' header, found a bipartite 'bip' header".into(),
            }),
        }
    }

    /// Text form acceptable to [`Graph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }

    /// Bipartite double cover `G x K_2`: both parts carry a copy of the
    /// vertex set and each edge `{u, v}` of `G` lifts to the pair of cross
    /// edges `(u_A, v_B)` and `(v_A, u_B)`.
    pub fn double_cover(&self) -> Bigraph {
        let mut edges = Vec::with_capacity(2 * self.edge_count());
        for (u, v) in self.edges() {
            edges.push((u, v));
            edges.push((v, u));
        }
        Bigraph::new(self.n, self.n, &edges).expect("double cover edges are valid")
    }

    /// Connected components in order of their smallest vertex, each with its
    /// local-to-original vertex map.
    pub fn components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut verts = Vec::new();
            while let Some(u) = stack.pop() {
                verts.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            verts.sort_unstable();
            out.push(Component {
                graph: self.induced(&verts),
                vertices: verts,
            });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on a strictly increasing vertex list; local ids
    /// follow list positions.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.adj[v] {
                if w > v && local[w] != usize::MAX {
                    edges.push((i, local[w]));
                }
            }
        }
        Graph::new(verts.len(), &edges).expect("induced edges are valid")
    }

    /// Graph with vertex `w` removed.
    pub fn remove_vertex(&self, w: usize) -> Graph {
        let verts: Vec<usize> = (0..self.n).filter(|&v| v != w).collect();
        self.induced(&verts)
    }

    /// Graph with the closed neighborhood `{w} ∪ N(w)` removed.
    pub fn remove_closed_neighborhood(&self, w: usize) -> Graph {
        let mut drop = vec![false; self.n];
        drop[w] = true;
        for &u in &self.adj[w] {
            drop[u] = true;
        }
        let verts: Vec<usize> = (0..self.n).filter(|&v| !drop[v]).collect();
        self.induced(&verts)
    }

    /// Disjoint union, relabeling each part after the previous ones.
    pub fn disjoint_union(parts: &[Graph]) -> Graph {
        let n: usize = parts.iter().map(|g| g.n).sum();
        let mut edges = Vec::new();
        let mut base = 0;
        for g in parts {
            for (u, v) in g.edges() {
                edges.push((base + u, base + v));
            }
            base += g.n;
        }
        Graph::new(n, &edges).expect("shifted edges are valid")
    }

    /// Proper 2-coloring if one exists (`true` marks one side), found by BFS
    /// on every component; `None` when an odd cycle obstructs.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Every component is a complete graph (isolated vertices count as
    /// `K_1`).
    pub fn is_union_cliques(&self) -> bool {
        self.components().iter().all(|c| {
            let m = c.graph.n();
            c.graph.edge_count() == m * (m - 1) / 2
        })
    }

    /// Every component is a complete bipartite graph; isolated vertices are
    /// permitted (they are handled by the isolated-vertex factor of the
    /// bounds and do not break equality).
    pub fn is_union_complete_bipartite(&self) -> bool {
        self.components().iter().all(|c| {
            let g = &c.graph;
            if g.n() == 1 {
                return true;
            }
            match g.bipartition() {
                None => false,
                Some(side) => {
                    let a = side.iter().filter(|&&s| !s).count();
                    let b = g.n() - a;
                    g.edge_count() == a * b
                }
            }
        })
    }

    /// Multiset of endpoint-degree pairs over the edges, sorted.
    pub fn degree_degree_distribution(&self) -> Vec<DegreePair> {
        let mut out: Vec<DegreePair> = self
            .edges()
            .iter()
            .map(|&(u, v)| DegreePair::new(self.degree(u), self.degree(v)))
            .collect();
        out.sort_unstable();
        out
    }
}

/// One step of the splitmix64 generator.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Bipartite graph with explicit parts `A` (ids `0..a_size`) and `B`
/// (ids `0..b_size`); every edge joins an `A` vertex to a `B` vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bigraph {
    a_size: usize,
    b_size: usize,
    adj_a: Vec<Vec<usize>>,
    adj_b: Vec<Vec<usize>>,
}

impl Bigraph {
    pub fn new(a_size: usize, b_size: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj_a = vec![Vec::new(); a_size];
        let mut adj_b = vec![Vec::new(); b_size];
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in edges {
            if u >= a_size {
                return Err(GraphError::VertexOutOfRange { v: u, n: a_size });
            }
            if v >= b_size {
                return Err(GraphError::VertexOutOfRange { v, n: b_size });
            }
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj_a[u].push(v);
            adj_b[v].push(u);
        }
        for list in adj_a.iter_mut().chain(adj_b.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Bigraph {
            a_size,
            b_size,
            adj_a,
            adj_b,
        })
    }

    /// Complete bipartite graph as a two-part structure, both parts nonempty.
    pub fn complete(a: usize, b: usize) -> Result<Self, GraphError> {
        if a == 0 || b == 0 {
            return Err(GraphError::EmptyPart(a, b));
        }
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in 0..b {
                edges.push((u, v));
            }
        }
        Bigraph::new(a, b, &edges)
    }

    pub fn a_size(&self) -> usize {
        self.a_size
    }

    pub fn b_size(&self) -> usize {
        self.b_size
    }

    pub fn n(&self) -> usize {
        self.a_size + self.b_size
    }

    pub fn degree_a(&self, u: usize) -> usize {
        self.adj_a[u].len()
    }

    pub fn degree_b(&self, v: usize) -> usize {
        self.adj_b[v].len()
    }

    pub fn neighbors_a(&self, u: usize) -> &[usize] {
        &self.adj_a[u]
    }

    pub fn neighbors_b(&self, v: usize) -> &[usize] {
        &self.adj_b[v]
    }

    pub fn iso_a(&self) -> usize {
        self.adj_a.iter().filter(|l| l.is_empty()).count()
    }

    pub fn iso_b(&self) -> usize {
        self.adj_b.iter().filter(|l| l.is_empty()).count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj_a.iter().map(|l| l.len()).sum()
    }

    /// Edges `(u, v)` with `u` in `A`, `v` in `B`, lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.a_size {
            for &v in &self.adj_a[u] {
                out.push((u, v));
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.adj_a
            .iter()
            .chain(self.adj_b.iter())
            .map(|l| l.len())
            .max()
            .unwrap_or(0)
    }

    /// Forget the two-part structure: `A` keeps ids `0..a`, `B` shifts to
    /// `a..a+b`.
    pub fn underlying_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (u, self.a_size + v))
            .collect();
        Graph::new(self.n(), &edges).expect("shifted bigraph edges are valid")
    }

    pub fn is_connected(&self) -> bool {
        self.underlying_graph().is_connected()
    }

    /// Exchange the two parts.
    pub fn swap_parts(&self) -> Bigraph {
        let edges: Vec<(usize, usize)> = self.edges().into_iter().map(|(u, v)| (v, u)).collect();
        Bigraph::new(self.b_size, self.a_size, &edges).expect("swapped edges are valid")
    }

    /// Induced sub-bigraph on the kept vertices of each part, preserving
    /// relative order.
    pub fn induced(&self, keep_a: &[bool], keep_b: &[bool]) -> Bigraph {
        assert_eq!(keep_a.len(), self.a_size);
        assert_eq!(keep_b.len(), self.b_size);
        let map = |keep: &[bool]| {
            let mut m = vec![usize::MAX; keep.len()];
            let mut next = 0;
            for (i, &k) in keep.iter().enumerate() {
                if k {
                    m[i] = next;
                    next += 1;
                }
            }
            (m, next)
        };
        let (map_a, new_a) = map(keep_a);
        let (map_b, new_b) = map(keep_b);
        let mut edges = Vec::new();
        for (u, v) in self.edges() {
            if keep_a[u] && keep_b[v] {
                edges.push((map_a[u], map_b[v]));
            }
        }
        Bigraph::new(new_a, new_b, &edges).expect("induced bigraph edges are valid")
    }

    /// Remove one `A` vertex.
    pub fn remove_a_vertex(&self, w: usize) -> Bigraph {
        let mut keep_a = vec![true; self.a_size];
        keep_a[w] = false;
        self.induced(&keep_a, &vec![true; self.b_size])
    }

    /// Remove an `A` vertex together with its neighborhood in `B`.
    pub fn remove_a_closed_neighborhood(&self, w: usize) -> Bigraph {
        let mut keep_a = vec![true; self.a_size];
        keep_a[w] = false;
        let mut keep_b = vec![true; self.b_size];
        for &v in &self.adj_a[w] {
            keep_b[v] = false;
        }
        self.induced(&keep_a, &keep_b)
    }

    /// Parse the bipartite text format: `bip <a> <b>` header, then
    /// `<u> <v>` edges with `u` an `A` id and `v` a `B` id.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        match parse_any(text)? {
            ParsedInput::Bigraph(b) => Ok(b),
            ParsedInput::Graph(_) => Err(ParseError::Syntax {
                line: 1,
                msg: "expected a 'bip <a> <b>' header, found a plain 'n' header".into(),
            }),
        }
    }

    /// Text form acceptable to [`Bigraph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("bip {} {}\n", self.a_size, self.b_size);
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }
}

/// Either input kind, as detected from the header line.
#[derive(Clone, Debug)]
pub enum ParsedInput {
    Graph(Graph),
    Bigraph(Bigraph),
}

/// Parse either text format, deciding by the header keyword.
pub fn parse_any(text: &str) -> Result<ParsedInput, ParseError> {
    enum Header {
        Plain(usize),
        Bip(usize, usize),
    }
    let mut header: Option<Header> = None;
    let mut header_line = 0;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match &header {
            None => {
                header = Some(match tokens.as_slice() {
                    ["n", count] => Header::Plain(parse_usize(count, line_no)?),
                    ["bip", a, b] => {
                        Header::Bip(parse_usize(a, line_no)?, parse_usize(b, line_no)?)
                    }
                    _ => {
                        return Err(ParseError::Syntax {
                            line: line_no,
                            msg: format!("expected 'n <count>' or 'bip <a> <b>', got '{}'", line),
                        })
                    }
                });
                header_line = line_no;
            }
            Some(_) => match tokens.as_slice() {
                [u, v] => edges.push((parse_usize(u, line_no)?, parse_usize(v, line_no)?)),
                _ => {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        msg: format!("expected an edge '<u> <v>', got '{}'", line),
                    })
                }
            },
        }
    }
    match header {
        None => Err(ParseError::MissingHeader),
        Some(Header::Plain(n)) => Graph::new(n, &edges)
            .map(ParsedInput::Graph)
            .map_err(|source| ParseError::BadEdge {
                line: header_line,
                source,
            }),
        Some(Header::Bip(a, b)) => Bigraph::new(a, b, &edges)
            .map(ParsedInput::Bigraph)
            .map_err(|source| ParseError::BadEdge {
                line: header_line,
                source,
            }),
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError::Syntax {
        line,
        msg: format!("expected a non-negative integer, got '{}'", tok),
    })
}
