//! Loop-free 2-colored digraphs with 1-based vertex labels.
//!
//! Every edge joins the two color classes; storage is one out- and one
//! in-bitmask per vertex, so membership tests are O(1) and all iteration is
//! in ascending label order, which keeps serialized output deterministic.

use std::fmt;

use serde::{Deserialize, Serialize};

/// 1-based vertex label.
pub type Vertex = u32;

/// Set of vertex labels backed by a u64 bitmask (bit v = vertex v, bit 0 unused).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1u64 << v);
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any. Takes `self` by value so the call wins the
    /// method-resolution race against `Ord::min`.
    pub fn min(self) -> Option<Vertex> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros())
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn raw(&self) -> u64 {
        self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph supports at most {max} vertices, got {got}")]
    TooManyVertices { max: usize, got: usize },
    #[error("expected {expected} colors, got {got}")]
    ColorCount { expected: usize, got: usize },
    #[error("color of vertex {0} must be 0 or 1")]
    ColorValue(Vertex),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("edge [{0},{1}] joins two vertices of the same color")]
    MonochromeEdge(Vertex, Vertex),
    #[error("duplicate edge [{0},{1}]")]
    DuplicateEdge(Vertex, Vertex),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("color classes must both be non-empty for 2 or more vertices")]
    EmptyColorClass,
    #[error(
        "colors are required: the underlying graph is disconnected, so a 2-coloring is ambiguous"
    )]
    ColorsRequired,
}

/// Edge sequence exactly as written in a graph literal. `ColoredDigraph`
/// stores edges as a set; this type preserves the textual order so a parsed
/// literal can be re-emitted byte for byte.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList(pub Vec<(Vertex, Vertex)>);

impl EdgeList {
    /// Renders `<n|[a,b],...>`; an empty list renders as `<n|>`.
    pub fn to_text(&self, n: usize) -> String {
        let mut s = format!("<{n}|");
        for (k, (u, v)) in self.0.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&format!("[{u},{v}]"));
        }
        s.push('>');
        s
    }
}

/// Serialized form: vertex count, one color per vertex, edges ascending.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    colors: Vec<u8>,
    edges: Vec<(Vertex, Vertex)>,
}

/// Loop-free digraph on vertices 1..=n, each vertex colored 0 or 1, every
/// edge joining the two colors. The empty graph (n = 0) is a valid value; it
/// appears as the remainder of a full truncation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredDigraph {
    n: usize,
    colors: Vec<u8>, // indexed by label; entry 0 unused
    out: Vec<u64>,   // out[u] = bitmask of heads of edges with tail u
    inn: Vec<u64>,
}

impl ColoredDigraph {
    pub const MAX_VERTICES: usize = 63;

    /// Builds a graph from explicit per-vertex colors (`colors[k]` colors
    /// vertex k+1) and an edge list. Rejects loops, duplicate edges, edges
    /// within one color class, and out-of-range labels.
    pub fn new(n: usize, colors: &[u8], edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        if n > Self::MAX_VERTICES {
            return Err(GraphError::TooManyVertices { max: Self::MAX_VERTICES, got: n });
        }
        if colors.len() != n {
            return Err(GraphError::ColorCount { expected: n, got: colors.len() });
        }
        let mut g = ColoredDigraph {
            n,
            colors: std::iter::once(0).chain(colors.iter().copied()).collect(),
            out: vec![0; n + 1],
            inn: vec![0; n + 1],
        };
        for (k, &c) in colors.iter().enumerate() {
            if c > 1 {
                return Err(GraphError::ColorValue(k as Vertex + 1));
            }
        }
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        for w in [u, v] {
            if w == 0 || w as usize > self.n {
                return Err(GraphError::VertexOutOfRange(w));
            }
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        if self.colors[u as usize] == self.colors[v as usize] {
            return Err(GraphError::MonochromeEdge(u, v));
        }
        if self.out[u as usize] >> v & 1 == 1 {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.out[u as usize] |= 1 << v;
        self.inn[v as usize] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n as Vertex
    }

    pub fn all_vertices(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn color_of(&self, u: Vertex) -> u8 {
        assert!(u >= 1 && u as usize <= self.n, "vertex {u} out of range");
        self.colors[u as usize]
    }

    /// All vertices of the given color, ascending.
    pub fn class_vertices(&self, color: u8) -> VertexSet {
        self.vertices().filter(|&u| self.colors[u as usize] == color).collect()
    }

    pub fn class_sizes(&self) -> (usize, usize) {
        let c0 = self.class_vertices(0).len();
        (c0, self.n - c0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        assert!(u >= 1 && u as usize <= self.n, "vertex {u} out of range");
        assert!(v >= 1 && v as usize <= self.n, "vertex {v} out of range");
        self.out[u as usize] >> v & 1 == 1
    }

    pub fn out_neighbors(&self, u: Vertex) -> VertexSet {
        assert!(u >= 1 && u as usize <= self.n, "vertex {u} out of range");
        VertexSet(self.out[u as usize])
    }

    pub fn in_neighbors(&self, u: Vertex) -> VertexSet {
        assert!(u >= 1 && u as usize <= self.n, "vertex {u} out of range");
        VertexSet(self.inn[u as usize])
    }

    /// Union of out-neighborhoods over a set.
    pub fn out_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.out_neighbors(v))
    }

    /// Edges in ascending (tail, head) order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut es = Vec::new();
        for u in self.vertices() {
            for v in self.out_neighbors(u).iter() {
                es.push((u, v));
            }
        }
        es
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Unordered pairs {u,v} (reported with u < v) joined by edges in both
    /// directions, ascending.
    pub fn symmetric_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut es = Vec::new();
        for u in self.vertices() {
            for v in self.out_neighbors(u).iter() {
                if v > u && self.has_edge(v, u) {
                    es.push((u, v));
                }
            }
        }
        es
    }

    /// True when no pair of vertices is joined in both directions.
    pub fn is_oriented(&self) -> bool {
        self.symmetric_edges().is_empty()
    }

    /// No edge in either direction between u and v.
    pub fn is_independent(&self, u: Vertex, v: Vertex) -> bool {
        assert_ne!(u, v, "independence is a relation between distinct vertices");
        !self.has_edge(u, v) && !self.has_edge(v, u)
    }

    /// Weakly connected components as vertex sets, sorted by smallest member.
    pub fn weak_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for start in self.vertices() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = vec![start];
            while let Some(u) = frontier.pop() {
                let adj = self.out_neighbors(u) | self.in_neighbors(u);
                for v in (adj - comp).iter() {
                    comp.insert(v);
                    frontier.push(v);
                }
            }
            seen = seen | comp;
            comps.push(comp);
        }
        comps
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.n <= 1 || self.weak_components().len() == 1
    }

    /// Subgraph induced by `keep`, relabeled 1..k in ascending order of the
    /// kept labels. Returns the graph and the map from new label (index + 1)
    /// back to the original label.
    pub fn induced(&self, keep: VertexSet) -> (ColoredDigraph, Vec<Vertex>) {
        let old: Vec<Vertex> = keep.iter().collect();
        let mut new_of = vec![0u32; self.n + 1];
        for (k, &o) in old.iter().enumerate() {
            new_of[o as usize] = k as Vertex + 1;
        }
        let colors: Vec<u8> = old.iter().map(|&o| self.colors[o as usize]).collect();
        let mut edges = Vec::new();
        for &o in &old {
            for v in (self.out_neighbors(o) & keep).iter() {
                edges.push((new_of[o as usize], new_of[v as usize]));
            }
        }
        let g = ColoredDigraph::new(old.len(), &colors, &edges)
            .expect("induced subgraph of a valid graph is valid");
        (g, old)
    }

    /// Renders `<n|[a,b],...>` with edges ascending.
    pub fn to_text(&self) -> String {
        EdgeList(self.edges()).to_text(self.n)
    }

    /// Renders the color sidecar line `colors: a1 a2 ... | b1 b2 ...`.
    pub fn colors_text(&self) -> String {
        let side = |c: u8| {
            self.class_vertices(c).iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
        };
        format!("colors: {} | {}", side(0), side(1))
    }

    /// Parses the `<n|[a,b],...>` notation, returning the vertex count and
    /// the edges in textual order. Whitespace is ignored everywhere.
    pub fn parse_notation(text: &str) -> Result<(usize, EdgeList), GraphError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |msg: &str| GraphError::Parse(msg.to_string());
        let body = s
            .strip_prefix('<')
            .and_then(|t| t.strip_suffix('>'))
            .ok_or_else(|| err("expected <n|...>"))?;
        let (n_str, edge_str) = body.split_once('|').ok_or_else(|| err("missing '|'"))?;
        let n: usize = n_str.parse().map_err(|_| err(&format!("bad vertex count {n_str:?}")))?;
        let mut edges = Vec::new();
        let mut rest = edge_str;
        while !rest.is_empty() {
            let inner =
                rest.strip_prefix('[').ok_or_else(|| err("expected '[' starting an edge"))?;
            let (pair, tail) = inner.split_once(']').ok_or_else(|| err("unterminated edge"))?;
            let (a, b) = pair.split_once(',').ok_or_else(|| err("edge needs two labels"))?;
            let u: Vertex = a.parse().map_err(|_| err(&format!("bad label {a:?}")))?;
            let v: Vertex = b.parse().map_err(|_| err(&format!("bad label {b:?}")))?;
            edges.push((u, v));
            rest = match tail.strip_prefix(',') {
                Some(t) if !t.is_empty() => t,
                Some(_) => return Err(err("trailing comma")),
                None if tail.is_empty() => tail,
                None => return Err(err("expected ',' between edges")),
            };
        }
        Ok((n, EdgeList(edges)))
    }

    /// Parses a `colors: a1 a2 ... | b1 b2 ...` line into the two classes.
    pub fn parse_colors_line(line: &str) -> Result<(Vec<Vertex>, Vec<Vertex>), GraphError> {
        let err = |msg: &str| GraphError::Parse(msg.to_string());
        let body =
            line.trim().strip_prefix("colors:").ok_or_else(|| err("expected 'colors:' prefix"))?;
        let (a, b) = body.split_once('|').ok_or_else(|| err("colors line needs '|'"))?;
        let side = |s: &str| -> Result<Vec<Vertex>, GraphError> {
            s.split_whitespace()
                .map(|t| t.parse().map_err(|_| err(&format!("bad label {t:?}"))))
                .collect()
        };
        Ok((side(a)?, side(b)?))
    }

    /// Builds a graph from the text notation plus an explicit bipartition.
    pub fn from_text_with_classes(
        text: &str,
        class0: &[Vertex],
        class1: &[Vertex],
    ) -> Result<Self, GraphError> {
        let (n, edges) = Self::parse_notation(text)?;
        let mut colors = vec![u8::MAX; n];
        let mut assign = |side: &[Vertex], c: u8| -> Result<(), GraphError> {
            for &v in side {
                if v == 0 || v as usize > n {
                    return Err(GraphError::VertexOutOfRange(v));
                }
                if colors[v as usize - 1] != u8::MAX {
                    return Err(GraphError::Parse(format!("vertex {v} colored twice")));
                }
                colors[v as usize - 1] = c;
            }
            Ok(())
        };
        assign(class0, 0)?;
        assign(class1, 1)?;
        if colors.iter().any(|&c| c == u8::MAX) {
            return Err(GraphError::Parse("color classes do not cover 1..n".into()));
        }
        if n >= 2 && (class0.is_empty() || class1.is_empty()) {
            return Err(GraphError::EmptyColorClass);
        }
        ColoredDigraph::new(n, &colors, &edges.0)
    }

    /// Parses text notation with an optional `colors:` sidecar line. Without
    /// the sidecar the 2-coloring is inferred from the edges, which is only
    /// well-defined when the underlying graph is connected; vertex 1 gets
    /// color 0.
    pub fn from_text(text: &str, colors_line: Option<&str>) -> Result<Self, GraphError> {
        if let Some(line) = colors_line {
            let (c0, c1) = Self::parse_colors_line(line)?;
            return Self::from_text_with_classes(text, &c0, &c1);
        }
        let (n, edges) = Self::parse_notation(text)?;
        Self::infer_colors(n, &edges.0).and_then(|colors| ColoredDigraph::new(n, &colors, &edges.0))
    }

    fn infer_colors(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Vec<u8>, GraphError> {
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut adj = vec![VertexSet::EMPTY; n + 1];
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w as usize > n {
                    return Err(GraphError::VertexOutOfRange(w));
                }
            }
            adj[u as usize].insert(v);
            adj[v as usize].insert(u);
        }
        let mut colors = vec![u8::MAX; n + 1];
        colors[1] = 0;
        let mut frontier = vec![1 as Vertex];
        let mut seen = 1usize;
        while let Some(u) = frontier.pop() {
            for v in adj[u as usize].iter() {
                if colors[v as usize] == u8::MAX {
                    colors[v as usize] = 1 - colors[u as usize];
                    seen += 1;
                    frontier.push(v);
                } else if colors[v as usize] == colors[u as usize] {
                    return Err(GraphError::MonochromeEdge(u, v));
                }
            }
        }
        if seen < n {
            return Err(GraphError::ColorsRequired);
        }
        Ok(colors[1..].to_vec())
    }

    /// Parses a whole document: one graph literal line, optional colors line,
    /// in either order; lines starting with '#' are comments. JSON documents
    /// (first non-space byte '{') are dispatched to the JSON reader.
    pub fn from_document(doc: &str) -> Result<Self, GraphError> {
        if doc.trim_start().starts_with('{') {
            return Self::from_json(doc);
        }
        let mut graph_line = None;
        let mut colors_line = None;
        for line in doc.lines() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            if t.starts_with("colors:") {
                colors_line = Some(t);
            } else {
                graph_line = Some(t);
            }
        }
        let g = graph_line.ok_or_else(|| GraphError::Parse("no graph literal found".into()))?;
        Self::from_text(g, colors_line)
    }

    pub fn to_json(&self) -> String {
        let j = GraphJson { n: self.n, colors: self.colors[1..].to_vec(), edges: self.edges() };
        serde_json::to_string(&j).expect("graph serialization cannot fail")
    }

    pub fn from_json(doc: &str) -> Result<Self, GraphError> {
        let j: GraphJson =
            serde_json::from_str(doc).map_err(|e| GraphError::Parse(e.to_string()))?;
        let g = ColoredDigraph::new(j.n, &j.colors, &j.edges)?;
        if j.n >= 2 {
            let (c0, c1) = g.class_sizes();
            if c0 == 0 || c1 == 0 {
                return Err(GraphError::EmptyColorClass);
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for ColoredDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.to_text(), self.colors_text())
    }
}
