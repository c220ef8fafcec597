//! Simple undirected graphs, the named families used throughout, and the
//! edge-list file format.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::Rational;

/// An undirected edge stored with `u < v`.
pub type Edge = (usize, usize);

/// Simple loop-free undirected graph on vertices `0..n`.
///
/// Edges are kept sorted lexicographically, so an edge's position in
/// [`Graph::edges`] is a stable edge id.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicates (either orientation) and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{a},{b}}} out of range for {n} vertices"
                )));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{},{}}}", e.0, e.1)));
            }
            list.push(e);
        }
        Ok(Self::from_sorted_unchecked(n, list))
    }

    fn from_sorted_unchecked(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// Re-checks the structural invariants.
    pub fn validate(&self) -> Result<()> {
        let rebuilt = Graph::new(self.n, self.edges.iter().copied())?;
        if rebuilt != *self {
            return Err(Error::InvalidGraph("adjacency out of sync with edge set".into()));
        }
        Ok(())
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            let mut queue = VecDeque::new();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Image of the graph under a vertex relabelling `perm` (old -> new).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter("relabelling has wrong length".into()));
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_sorted_unchecked(n, edges)
}

/// `C_n`, edges `{i, i+1 mod n}`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// `W_k`: outer cycle on `0..k-1`, hub `k-1` joined to every cycle vertex.
pub fn wheel(k: usize) -> Result<Graph> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!("wheel needs k >= 4, got {k}")));
    }
    let rim = k - 1;
    let outer = (0..rim).map(move |i| (i, (i + 1) % rim));
    let spokes = (0..rim).map(move |i| (i, rim));
    Graph::new(k, outer.chain(spokes))
}

/// Circular complete graph `K_{p/q}`: vertices on a circle, adjacent when
/// their circular distance is at least `q`.
pub fn rational_complete(p: usize, q: usize) -> Result<Graph> {
    if q < 1 || p < 2 * q {
        return Err(Error::InvalidParameter(format!(
            "K{p}/{q} needs q >= 1 and p >= 2q"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..p {
        for v in u + 1..p {
            let gap = v - u;
            if gap.min(p - gap) >= q {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted_unchecked(p, edges))
}

/// Turán graph `T(n, r)`: vertex `v` lives in part `v mod r`.
pub fn turan(n: usize, r: usize) -> Result<Graph> {
    if r < 1 || r > n {
        return Err(Error::InvalidParameter(format!(
            "T{n},{r} needs 1 <= r <= n"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if u % r != v % r {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted_unchecked(n, edges))
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).expect("petersen construction is valid")
}

/// Textual graph description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Wheel(usize),
    RationalComplete(usize, usize),
    Turan(usize, usize),
    Petersen,
    File(PathBuf),
}

impl GraphSpec {
    /// Grammar accepted by [`GraphSpec::from_str`], shared with the CLI help.
    pub const GRAMMAR: &'static str = "K<n> | C<n> (n>=3) | P<n> | W<n> (n>=4) | K<p>/<q> (p>=2q) | T<n>,<r> (1<=r<=n) | petersen | @<path>";

    pub fn build(&self) -> Result<Graph> {
        match *self {
            GraphSpec::Complete(n) => Ok(complete(n)),
            GraphSpec::Cycle(n) => cycle(n),
            GraphSpec::Path(n) => path(n),
            GraphSpec::Wheel(k) => wheel(k),
            GraphSpec::RationalComplete(p, q) => rational_complete(p, q),
            GraphSpec::Turan(n, r) => turan(n, r),
            GraphSpec::Petersen => Ok(petersen()),
            GraphSpec::File(ref path) => read_edge_list(path).map(|doc| doc.graph),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Complete(n) => write!(f, "K{n}"),
            GraphSpec::Cycle(n) => write!(f, "C{n}"),
            GraphSpec::Path(n) => write!(f, "P{n}"),
            GraphSpec::Wheel(k) => write!(f, "W{k}"),
            GraphSpec::RationalComplete(p, q) => write!(f, "K{p}/{q}"),
            GraphSpec::Turan(n, r) => write!(f, "T{n},{r}"),
            GraphSpec::Petersen => write!(f, "petersen"),
            GraphSpec::File(path) => write!(f, "@{}", path.display()),
        }
    }
}

struct SpecCursor<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> SpecCursor<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            input: self.input.to_string(),
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn number(&mut self) -> Result<usize> {
        let rest = &self.input[self.pos..];
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        let value = rest[..len]
            .parse()
            .map_err(|_| self.error("number too large"))?;
        self.pos += len;
        Ok(value)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.input[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.input.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        if let Some(path) = input.strip_prefix('@') {
            if path.is_empty() {
                return Err(Error::Syntax {
                    input: input.into(),
                    column: 2,
                    message: "expected a file path".into(),
                });
            }
            return Ok(GraphSpec::File(PathBuf::from(path)));
        }
        if input.eq_ignore_ascii_case("petersen") {
            return Ok(GraphSpec::Petersen);
        }
        let mut cur = SpecCursor { input, pos: 0 };
        let family = input.chars().next().ok_or_else(|| cur.error("empty graph spec"))?;
        cur.pos = family.len_utf8();
        let spec = match family {
            'K' => {
                let p = cur.number()?;
                if cur.eat('/') {
                    GraphSpec::RationalComplete(p, cur.number()?)
                } else {
                    GraphSpec::Complete(p)
                }
            }
            'C' => GraphSpec::Cycle(cur.number()?),
            'P' => GraphSpec::Path(cur.number()?),
            'W' => GraphSpec::Wheel(cur.number()?),
            'T' => {
                let n = cur.number()?;
                if !cur.eat(',') {
                    return Err(cur.error("expected `,` between n and r"));
                }
                GraphSpec::Turan(n, cur.number()?)
            }
            _ => {
                cur.pos = 0;
                return Err(cur.error(format!("unknown graph family; expected {}", Self::GRAMMAR)));
            }
        };
        cur.finish()?;
        Ok(spec)
    }
}

/// Parses a spec string and builds the graph.
pub fn parse_graph(spec: &str) -> Result<Graph> {
    spec.parse::<GraphSpec>()?.build()
}

/// Contents of an edge-list file: the graph plus any trailing weight lines.
#[derive(Clone, Debug)]
pub struct EdgeListDocument {
    pub graph: Graph,
    /// `(u, v, weight, line)` for each weight line, in file order.
    pub weights: Vec<(usize, usize, Rational, usize)>,
}

/// Parses a nonnegative rational written `p/q` or `p`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (text.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Parses the edge-list format: `#` comment lines, a header `n m`, exactly
/// `m` edge lines `u v`, then optional weight lines `u v p/q`.
pub fn parse_edge_list(text: &str) -> Result<EdgeListDocument> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut seen = HashSet::new();
    let mut weights = Vec::new();
    let mut weighted = HashSet::new();
    let mut last_line = 0;

    let fail = |line: usize, message: String| Error::Format { line, message };
    let vertex = |tok: &str, n: usize, line: usize| -> Result<usize> {
        let v: usize = tok
            .parse()
            .map_err(|_| fail(line, format!("`{tok}` is not a vertex index")))?;
        if v >= n {
            return Err(fail(line, format!("vertex {v} out of range for {n} vertices")));
        }
        Ok(v)
    };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let Some((n, m)) = header else {
            if tokens.len() != 2 {
                return Err(fail(line, "expected header `n m`".into()));
            }
            let n = tokens[0]
                .parse()
                .map_err(|_| fail(line, format!("bad vertex count `{}`", tokens[0])))?;
            let m = tokens[1]
                .parse()
                .map_err(|_| fail(line, format!("bad edge count `{}`", tokens[1])))?;
            header = Some((n, m));
            continue;
        };
        if edges.len() < m {
            if tokens.len() != 2 {
                return Err(fail(line, "expected edge line `u v`".into()));
            }
            let u = vertex(tokens[0], n, line)?;
            let v = vertex(tokens[1], n, line)?;
            if u == v {
                return Err(fail(line, format!("loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(fail(line, format!("duplicate edge {{{},{}}}", e.0, e.1)));
            }
            edges.push(e);
            continue;
        }
        match tokens.len() {
            2 => return Err(fail(line, format!("more than the declared {m} edge lines"))),
            3 => {
                let u = vertex(tokens[0], n, line)?;
                let v = vertex(tokens[1], n, line)?;
                let e = (u.min(v), u.max(v));
                if !seen.contains(&e) {
                    return Err(fail(line, format!("weight given for non-edge {{{},{}}}", e.0, e.1)));
                }
                if !weighted.insert(e) {
                    return Err(fail(line, format!("duplicate weight for {{{},{}}}", e.0, e.1)));
                }
                let w = parse_rational(tokens[2])
                    .filter(|w| *w >= Rational::zero())
                    .ok_or_else(|| fail(line, format!("`{}` is not a nonnegative rational", tokens[2])))?;
                weights.push((e.0, e.1, w, line));
            }
            _ => return Err(fail(line, "expected weight line `u v p/q`".into())),
        }
    }

    let Some((n, m)) = header else {
        return Err(fail(last_line.max(1), "missing header `n m`".into()));
    };
    if edges.len() < m {
        return Err(fail(
            last_line.max(1),
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }
    Ok(EdgeListDocument {
        graph: Graph::from_sorted_unchecked(n, edges),
        weights,
    })
}

pub fn read_edge_list(path: &Path) -> Result<EdgeListDocument> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_edge_list(&text)
}

/// Renders a graph in the edge-list format.
pub fn render_edge_list(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), graph.edge_count());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
