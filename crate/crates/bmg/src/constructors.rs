//! Ways of building valid graphs besides enumeration: joining via minimal
//! vertices, gluing disjoint pieces, block families of complete bipartite
//! graphs, the parity and odd-even bitournaments, and random bitournaments.

use crate::axioms::is_2cbmg;
use crate::graph::{ColoredDigraph, GraphError, Vertex, VertexSet};
use crate::rng::Lcg64;
use crate::structure::minimal_vertices;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("input graph is not a 2-cBMG")]
    NotBestMatch,
    #[error("vertex {0} is not minimal (it has in-neighbors)")]
    NotMinimal(Vertex),
    #[error("the component containing vertex {0} has no minimal vertex to join from")]
    SourcelessComponent(Vertex),
    #[error("family needs at least one block and positive block sizes")]
    BadFamily,
    #[error("too many vertices (limit 63)")]
    TooManyVertices,
    #[error("{0} is not {1}")]
    BadParity(u64, &'static str),
    #[error("graph build failed: {0}")]
    Graph(#[from] GraphError),
}

/// Adds every edge from the chosen minimal vertices to the whole opposite
/// color class. Minimal here means no in-neighbors in the graph itself (such
/// vertices are minimal in every orientation); a vertex on a symmetric edge
/// does not qualify, and joining from one can break the axioms even though
/// it may come first in a topological order of the consistent orientation.
/// The input must pass the axioms; the output passes them again and is
/// connected once `from` is non-empty.
pub fn join_via_minimal(
    g: &ColoredDigraph,
    from: VertexSet,
) -> Result<ColoredDigraph, ConstructError> {
    if !is_2cbmg(g) {
        return Err(ConstructError::NotBestMatch);
    }
    if let Some(bad) = (from - minimal_vertices(g)).min() {
        return Err(ConstructError::NotMinimal(bad));
    }
    let mut edges = g.edges();
    for u in from.iter() {
        let opposite = g.class_vertices(1 - g.color_of(u));
        for w in (opposite - g.out_neighbors(u)).iter() {
            edges.push((u, w));
        }
    }
    let colors: Vec<u8> = g.vertices().map(|v| g.color_of(v)).collect();
    Ok(ColoredDigraph::new(g.n(), &colors, &edges)?)
}

/// Disjoint union of valid graphs (labels shifted block by block), glued
/// into one component by joining through the smallest minimal vertex of
/// every component except the first.
pub fn join_disjoint(parts: &[ColoredDigraph]) -> Result<ColoredDigraph, ConstructError> {
    if parts.is_empty() {
        return Err(ConstructError::BadFamily);
    }
    for p in parts {
        if !is_2cbmg(p) {
            return Err(ConstructError::NotBestMatch);
        }
    }
    let total: usize = parts.iter().map(|p| p.n()).sum();
    if total > 63 {
        return Err(ConstructError::TooManyVertices);
    }
    let mut colors = Vec::with_capacity(total);
    let mut edges = Vec::new();
    let mut offset: Vertex = 0;
    for p in parts {
        colors.extend(p.vertices().map(|v| p.color_of(v)));
        edges.extend(p.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
        offset += p.n() as Vertex;
    }
    let union = ColoredDigraph::new(total, &colors, &edges)?;
    if parts.len() == 1 {
        return Ok(union);
    }
    let minimal = minimal_vertices(&union);
    let components = union.weak_components();
    let mut from = VertexSet::EMPTY;
    for comp in components.into_iter().skip(1) {
        match (comp & minimal).min() {
            // A component made entirely of symmetric edges (a lone pair, say)
            // has nothing safe to join from.
            None => return Err(ConstructError::SourcelessComponent(comp.min().unwrap())),
            Some(v) => from = from | VertexSet::singleton(v),
        }
    }
    join_via_minimal(&union, from)
}

/// Sizes of the two sides of each complete bipartite block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec(pub Vec<(usize, usize)>);

/// A family of complete bipartite blocks Λ1..Λm (all symmetric edges),
/// plus one-way edges from both sides of the first block to the opposite
/// side of every other block. The first block must point outward: turning
/// the one-way edges around (into the first block) lets two later blocks
/// meet inside it and breaks the independence axiom once there are three
/// blocks. Labels run block by block, left side then right side, ascending.
pub fn family_graph(spec: &FamilySpec) -> Result<ColoredDigraph, ConstructError> {
    if spec.0.is_empty() || spec.0.iter().any(|&(a, b)| a == 0 || b == 0) {
        return Err(ConstructError::BadFamily);
    }
    let total: usize = spec.0.iter().map(|&(a, b)| a + b).sum();
    if total > 63 {
        return Err(ConstructError::TooManyVertices);
    }
    let mut colors = vec![0u8; total];
    let mut lefts: Vec<Vec<Vertex>> = Vec::new();
    let mut rights: Vec<Vec<Vertex>> = Vec::new();
    let mut next: Vertex = 1;
    for &(a, b) in &spec.0 {
        let left: Vec<Vertex> = (0..a).map(|k| next + k as Vertex).collect();
        let right: Vec<Vertex> = (0..b).map(|k| next + (a + k) as Vertex).collect();
        for &w in &right {
            colors[w as usize - 1] = 1;
        }
        next += (a + b) as Vertex;
        lefts.push(left);
        rights.push(right);
    }
    let mut edges = Vec::new();
    for (left, right) in lefts.iter().zip(&rights) {
        for &u in left {
            for &w in right {
                edges.push((u, w));
                edges.push((w, u));
            }
        }
    }
    for i in 1..spec.0.len() {
        for &u in &lefts[0] {
            for &w in &rights[i] {
                edges.push((u, w));
            }
        }
        for &w in &rights[0] {
            for &u in &lefts[i] {
                edges.push((w, u));
            }
        }
    }
    Ok(ColoredDigraph::new(total, &colors, &edges)?)
}

/// The parity bitournament on a set of naturals: a→b when a < b and the two
/// have opposite parity. Vertex k is the k-th smallest member; evens are
/// class 0.
pub fn parity_graph(members: &[u64]) -> Result<ColoredDigraph, ConstructError> {
    let mut sorted = members.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() > 63 {
        return Err(ConstructError::TooManyVertices);
    }
    let colors: Vec<u8> = sorted.iter().map(|&x| (x % 2) as u8).collect();
    let mut edges = Vec::new();
    for (p, &a) in sorted.iter().enumerate() {
        for (q, &b) in sorted.iter().enumerate().skip(p + 1) {
            if a % 2 != b % 2 {
                edges.push((p as Vertex + 1, q as Vertex + 1));
            }
        }
    }
    Ok(ColoredDigraph::new(sorted.len(), &colors, &edges)?)
}

/// The odd-even graph on the even set `evens`: a→b when both (a+b)/2 and
/// (b−a)/2 lie in `odds`. Members that are 0 mod 4 form class 0.
pub fn odd_even_graph(evens: &[u64], odds: &[u64]) -> Result<ColoredDigraph, ConstructError> {
    for &a in evens {
        if a % 2 != 0 {
            return Err(ConstructError::BadParity(a, "even"));
        }
    }
    for &o in odds {
        if o % 2 != 1 {
            return Err(ConstructError::BadParity(o, "odd"));
        }
    }
    let mut sorted = evens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() > 63 {
        return Err(ConstructError::TooManyVertices);
    }
    let odd_set: std::collections::BTreeSet<u64> = odds.iter().copied().collect();
    let colors: Vec<u8> = sorted.iter().map(|&a| ((a % 4) / 2) as u8).collect();
    let mut edges = Vec::new();
    for (p, &a) in sorted.iter().enumerate() {
        for (q, &b) in sorted.iter().enumerate() {
            if b > a && odd_set.contains(&((a + b) / 2)) && odd_set.contains(&((b - a) / 2)) {
                edges.push((p as Vertex + 1, q as Vertex + 1));
            }
        }
    }
    Ok(ColoredDigraph::new(sorted.len(), &colors, &edges)?)
}

/// Bitournament with the orientation of each cross pair read off the bits of
/// `mask`: pair (u, w) in row-major order (u ascending, then w) keeps u→w on
/// a zero bit and gets w→u on a one bit.
pub fn bitournament_from_mask(a: usize, b: usize, mask: u64) -> ColoredDigraph {
    assert!(a >= 1 && b >= 1 && a + b <= 63 && a * b <= 64, "side sizes out of range");
    let mut colors = vec![0u8; a + b];
    for c in colors.iter_mut().skip(a) {
        *c = 1;
    }
    let mut edges = Vec::with_capacity(a * b);
    let mut bit = 0;
    for u in 1..=a as Vertex {
        for w in (a as Vertex + 1)..=((a + b) as Vertex) {
            if mask >> bit & 1 == 0 {
                edges.push((u, w));
            } else {
                edges.push((w, u));
            }
            bit += 1;
        }
    }
    ColoredDigraph::new(a + b, &colors, &edges).expect("bitournaments are valid graphs")
}

/// Seeded random bitournament: one coin per cross pair in row-major order;
/// heads flips the pair to w→u.
pub fn random_bitournament(a: usize, b: usize, seed: u64) -> ColoredDigraph {
    let mut rng = Lcg64::new(seed);
    let mut mask = 0u64;
    for bit in 0..a * b {
        if rng.coin() {
            mask |= 1 << bit;
        }
    }
    bitournament_from_mask(a, b, mask)
}

/// Every vertex has an out-edge and an in-edge inside its own component, so
/// a graph is sink-free and source-free after joining. Used by tests.
pub fn is_bitournament(g: &ColoredDigraph) -> bool {
    let (i, j) = g.class_sizes();
    g.edge_count() == i * j
        && g.class_vertices(0)
            .iter()
            .all(|u| g.class_vertices(1).iter().all(|w| g.has_edge(u, w) != g.has_edge(w, u)))
}
