//! Leaf-colored rooted trees and the graphs they induce: each leaf points at
//! the opposite-colored leaves whose last common ancestor with it is as deep
//! as possible. Every graph produced this way satisfies the axioms, which
//! the property suites lean on heavily.

use crate::graph::{ColoredDigraph, Vertex};
use crate::rng::Lcg64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TreeError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("tree needs at least two leaves")]
    TooFewLeaves,
    #[error("leaf coloring must use both colors")]
    NotSurjective,
}

/// Rooted tree stored as an arena; node 0 is the root.
#[derive(Debug, Clone)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
    /// Leaf arena ids in the order they appear left to right.
    leaves: Vec<usize>,
    /// Names of the leaves, parallel to `leaves`.
    names: Vec<String>,
}

impl RootedTree {
    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn leaf_names(&self) -> &[String] {
        &self.names
    }

    pub fn is_leaf(&self, node: usize) -> bool {
        self.children[node].is_empty()
    }

    pub fn depth(&self, node: usize) -> usize {
        self.depth[node]
    }

    /// Last common ancestor by walking the deeper node up first.
    pub fn lca(&self, mut a: usize, mut b: usize) -> usize {
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].expect("deeper node has a parent");
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].expect("deeper node has a parent");
        }
        while a != b {
            a = self.parent[a].expect("distinct nodes at equal depth are not the root");
            b = self.parent[b].expect("distinct nodes at equal depth are not the root");
        }
        a
    }

    /// Is `anc` on the root path of `node` (inclusive)?
    pub fn is_ancestor(&self, anc: usize, node: usize) -> bool {
        let mut cur = Some(node);
        while let Some(c) = cur {
            if c == anc {
                return true;
            }
            cur = self.parent[c];
        }
        false
    }

    fn recompute_depths_and_leaves(&mut self) {
        let mut stack = vec![0usize];
        self.depth[0] = 0;
        self.leaves.clear();
        // Depth-first, children in insertion order, so leaf numbering is the
        // left-to-right order of the drawing.
        let mut order = Vec::new();
        while let Some(node) = stack.pop() {
            order.push(node);
            for &c in self.children[node].iter().rev() {
                self.depth[c] = self.depth[node] + 1;
                stack.push(c);
            }
        }
        for node in order {
            if self.children[node].is_empty() {
                self.leaves.push(node);
            }
        }
        self.names = vec![String::new(); self.leaves.len()];
    }
}

/// A tree together with one color per leaf (index-parallel to the leaf
/// order). Both colors always occur.
#[derive(Debug, Clone)]
pub struct ColoredTree {
    pub tree: RootedTree,
    pub colors: Vec<u8>,
}

/// Parses `((name:color,name:color),name:color)` with an optional trailing
/// semicolon; whitespace is ignored. Colors are 0 or 1 and must both occur.
pub fn parse_colored_tree(text: &str) -> Result<ColoredTree, TreeError> {
    let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut parent = Vec::new();
    let mut children: Vec<Vec<usize>> = Vec::new();
    let mut leaf_info: Vec<(usize, String, u8)> = Vec::new();
    let mut pos = 0usize;

    fn node(
        s: &[char],
        pos: &mut usize,
        parent: &mut Vec<Option<usize>>,
        children: &mut Vec<Vec<usize>>,
        leaf_info: &mut Vec<(usize, String, u8)>,
        up: Option<usize>,
    ) -> Result<usize, TreeError> {
        let err = |msg: &str| TreeError::Parse(msg.to_string());
        let id = parent.len();
        parent.push(up);
        children.push(Vec::new());
        if s.get(*pos) == Some(&'(') {
            *pos += 1;
            loop {
                let child = node(s, pos, parent, children, leaf_info, Some(id))?;
                children[id].push(child);
                match s.get(*pos) {
                    Some(',') => *pos += 1,
                    Some(')') => {
                        *pos += 1;
                        break;
                    }
                    _ => return Err(err("expected ',' or ')'")),
                }
            }
            return Ok(id);
        }
        let start = *pos;
        while s.get(*pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
            *pos += 1;
        }
        if *pos == start {
            return Err(err("expected a leaf name or '('"));
        }
        let name: String = s[start..*pos].iter().collect();
        if s.get(*pos) != Some(&':') {
            return Err(err("leaf needs ':' and a color"));
        }
        *pos += 1;
        let color = match s.get(*pos) {
            Some('0') => 0u8,
            Some('1') => 1u8,
            _ => return Err(err("leaf color must be 0 or 1")),
        };
        *pos += 1;
        leaf_info.push((id, name, color));
        Ok(id)
    }

    node(&s, &mut pos, &mut parent, &mut children, &mut leaf_info, None)?;
    if s.get(pos) == Some(&';') {
        pos += 1;
    }
    if pos != s.len() {
        return Err(TreeError::Parse(format!("trailing input at offset {pos}")));
    }
    let n = parent.len();
    let mut tree =
        RootedTree { parent, children, depth: vec![0; n], leaves: Vec::new(), names: Vec::new() };
    tree.recompute_depths_and_leaves();
    if tree.leaf_count() < 2 {
        return Err(TreeError::TooFewLeaves);
    }
    let mut colors = vec![0u8; tree.leaf_count()];
    for (id, name, color) in leaf_info {
        let k = tree.leaves.iter().position(|&l| l == id).expect("leaf recorded");
        tree.names[k] = name;
        colors[k] = color;
    }
    if colors.iter().all(|&c| c == 0) || colors.iter().all(|&c| c == 1) {
        return Err(TreeError::NotSurjective);
    }
    Ok(ColoredTree { tree, colors })
}

/// Seeded random tree: leaf subtrees are repeatedly merged under fresh
/// roots, two at a time with a sprinkling of three-way merges, then the
/// leaves are colored by coin flips until both colors occur. Leaf k of the
/// result is named Lk.
pub fn random_colored_tree(num_leaves: usize, seed: u64) -> ColoredTree {
    assert!((2..=63).contains(&num_leaves), "leaf count must be in 2..=63");
    let mut rng = Lcg64::new(seed);
    let mut parent: Vec<Option<usize>> = Vec::new();
    let mut children: Vec<Vec<usize>> = Vec::new();
    let mut roots: Vec<usize> = (0..num_leaves)
        .map(|k| {
            parent.push(None);
            children.push(Vec::new());
            k
        })
        .collect();
    while roots.len() > 1 {
        let k = if roots.len() >= 3 && rng.below(5) == 4 { 3 } else { 2 };
        let fresh = parent.len();
        parent.push(None);
        children.push(Vec::new());
        for _ in 0..k {
            let pick = rng.below(roots.len() as u64) as usize;
            let sub = roots.swap_remove(pick);
            parent[sub] = Some(fresh);
            children[fresh].push(sub);
        }
        roots.push(fresh);
    }
    let root = roots[0];
    // Re-root the arena so the root is node 0, as the arena invariant wants.
    if root != 0 {
        let swap_id = |x: &mut usize| {
            if *x == 0 {
                *x = root;
            } else if *x == root {
                *x = 0;
            }
        };
        parent.swap(0, root);
        children.swap(0, root);
        for p in parent.iter_mut().flatten() {
            swap_id(p);
        }
        for cs in children.iter_mut() {
            for c in cs.iter_mut() {
                swap_id(c);
            }
        }
    }
    let n = parent.len();
    let mut tree =
        RootedTree { parent, children, depth: vec![0; n], leaves: Vec::new(), names: Vec::new() };
    tree.recompute_depths_and_leaves();
    for (k, name) in tree.names.iter_mut().enumerate() {
        *name = format!("L{}", k + 1);
    }
    let colors = loop {
        let candidate: Vec<u8> = (0..num_leaves).map(|_| rng.coin() as u8).collect();
        if candidate.iter().any(|&c| c == 0) && candidate.iter().any(|&c| c == 1) {
            break candidate;
        }
    };
    ColoredTree { tree, colors }
}

/// The graph of deepest-ancestor matches: vertex k is leaf k, and k points
/// at every opposite-colored leaf whose last common ancestor with k is at
/// maximal depth.
pub fn best_match_graph(t: &ColoredTree) -> ColoredDigraph {
    let leaves = &t.tree.leaves;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for (a, &la) in leaves.iter().enumerate() {
        let mut best_depth = None;
        let mut matches: Vec<Vertex> = Vec::new();
        for (b, &lb) in leaves.iter().enumerate() {
            if t.colors[b] == t.colors[a] {
                continue;
            }
            let d = t.tree.depth(t.tree.lca(la, lb));
            match best_depth {
                Some(bd) if d < bd => {}
                Some(bd) if d == bd => matches.push(b as Vertex + 1),
                _ => {
                    best_depth = Some(d);
                    matches = vec![b as Vertex + 1];
                }
            }
        }
        edges.extend(matches.into_iter().map(|b| (a as Vertex + 1, b)));
    }
    ColoredDigraph::new(t.colors.len(), &t.colors, &edges)
        .expect("matches cross colors and repeat no pair")
}
