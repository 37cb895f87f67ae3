//! Structure underneath the axioms: the same-neighborhood equivalence and
//! its quotient, orientations of symmetric edges, topological orders with
//! cycle witnesses, reachability, and the graph of symmetric edges.

use std::collections::BTreeMap;

use crate::graph::{ColoredDigraph, GraphError, Vertex, VertexSet};
use crate::rng::Lcg64;

/// Partition of the vertices by (out-neighborhood, in-neighborhood).
/// Classes are listed in ascending order of their smallest member, which is
/// also the class representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceClasses {
    pub classes: Vec<VertexSet>,
}

impl EquivalenceClasses {
    pub fn class_of(&self, v: Vertex) -> usize {
        self.classes.iter().position(|c| c.contains(v)).expect("vertex belongs to some class")
    }

    pub fn representative(&self, v: Vertex) -> Vertex {
        self.classes[self.class_of(v)].min().expect("classes are non-empty")
    }

    pub fn all_singletons(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }
}

/// Groups vertices with identical out- and in-neighborhoods. Color is not
/// part of the key: two isolated vertices of different colors land in one
/// class, matching the bare definition (only sink-free graphs are guaranteed
/// same-colored classes).
pub fn equivalence_classes(g: &ColoredDigraph) -> EquivalenceClasses {
    let mut by_key: BTreeMap<(u64, u64), VertexSet> = BTreeMap::new();
    for v in g.vertices() {
        by_key.entry((g.out_neighbors(v).raw(), g.in_neighbors(v).raw())).or_default().insert(v);
    }
    let mut classes: Vec<VertexSet> = by_key.into_values().collect();
    classes.sort_by_key(|&c| c.min());
    EquivalenceClasses { classes }
}

/// The quotient modulo the same-neighborhood equivalence, on class
/// representatives relabeled 1..k ascending.
#[derive(Debug, Clone)]
pub struct QuotientGraph {
    pub graph: ColoredDigraph,
    /// Original representative label for each quotient vertex (index + 1).
    pub reps: Vec<Vertex>,
    pub classes: EquivalenceClasses,
}

pub fn quotient(g: &ColoredDigraph) -> QuotientGraph {
    let classes = equivalence_classes(g);
    let reps: Vec<Vertex> =
        classes.classes.iter().map(|&c| c.min().expect("non-empty class")).collect();
    let keep: VertexSet = reps.iter().copied().collect();
    // Members of a class have identical neighborhoods, so the subgraph
    // induced on representatives carries exactly the well-defined
    // class-to-class edges.
    let (graph, _) = g.induced(keep);
    QuotientGraph { graph, reps, classes }
}

/// Direction choice for every symmetric edge: maps the unordered pair
/// (u, v) with u < v to true when the kept direction is u→v.
#[derive(Debug, Clone, Default)]
pub struct OrientationChoice {
    pub keep_low_tail: BTreeMap<(Vertex, Vertex), bool>,
}

impl OrientationChoice {
    /// Keeps the direction whose tail has the smaller label.
    pub fn lower_tail(g: &ColoredDigraph) -> Self {
        OrientationChoice {
            keep_low_tail: g.symmetric_edges().into_iter().map(|e| (e, true)).collect(),
        }
    }

    /// Seeded random choice, one coin per symmetric edge in ascending order.
    pub fn seeded(g: &ColoredDigraph, seed: u64) -> Self {
        let mut rng = Lcg64::new(seed);
        OrientationChoice {
            keep_low_tail: g.symmetric_edges().into_iter().map(|e| (e, rng.coin())).collect(),
        }
    }
}

/// A graph together with the record of which direction of each symmetric
/// edge survived.
#[derive(Debug, Clone)]
pub struct OrientedDigraph {
    pub graph: ColoredDigraph,
    /// Kept direction per symmetric edge of the source, in ascending order
    /// of the unordered pair.
    pub kept: Vec<(Vertex, Vertex)>,
}

/// Deletes one direction of every symmetric edge according to `choice`.
/// Fails if the choice misses a symmetric edge or names a pair that is not
/// symmetric in `g`.
pub fn underlying_oriented(
    g: &ColoredDigraph,
    choice: &OrientationChoice,
) -> Result<OrientedDigraph, GraphError> {
    let sym = g.symmetric_edges();
    for pair in choice.keep_low_tail.keys() {
        if !sym.contains(pair) {
            return Err(GraphError::Parse(format!(
                "orientation choice names ({},{}) which is not a symmetric edge",
                pair.0, pair.1
            )));
        }
    }
    let mut edges = Vec::new();
    let mut kept = Vec::new();
    for (u, v) in g.edges() {
        if !g.has_edge(v, u) {
            edges.push((u, v));
            continue;
        }
        let pair = (u.min(v), u.max(v));
        let low_tail = *choice.keep_low_tail.get(&pair).ok_or_else(|| {
            GraphError::Parse(format!(
                "orientation choice missing symmetric edge ({},{})",
                pair.0, pair.1
            ))
        })?;
        let keep = if low_tail { pair } else { (pair.1, pair.0) };
        if (u, v) == keep {
            edges.push((u, v));
            kept.push(keep);
        }
    }
    kept.sort_by_key(|&(u, v)| (u.min(v), u.max(v)));
    let colors: Vec<u8> = g.vertices().map(|v| g.color_of(v)).collect();
    let graph = ColoredDigraph::new(g.n(), &colors, &edges).expect("orienting preserves validity");
    Ok(OrientedDigraph { graph, kept })
}

/// The canonical consistent orientation: a symmetric edge keeps the
/// direction whose tail lies in the equivalence class with the smaller
/// representative. The choice is constant on classes by construction, so
/// equivalent vertices are treated alike.
pub fn consistent_underlying_oriented(g: &ColoredDigraph) -> OrientedDigraph {
    let classes = equivalence_classes(g);
    let choice = OrientationChoice {
        keep_low_tail: g
            .symmetric_edges()
            .into_iter()
            .map(|(u, v)| {
                // u and v are never equivalent (they are adjacent), so the
                // representatives differ.
                ((u, v), classes.representative(u) < classes.representative(v))
            })
            .collect(),
    };
    underlying_oriented(g, &choice).expect("consistent choice covers exactly the symmetric edges")
}

/// Kahn's algorithm with the smallest available label first. `Err` carries a
/// directed cycle v1→v2→…→vk→v1, rotated to start at its smallest vertex.
pub fn topological_order(g: &ColoredDigraph) -> Result<Vec<Vertex>, Vec<Vertex>> {
    let mut indeg: Vec<usize> = vec![0; g.n() + 1];
    for v in g.vertices() {
        indeg[v as usize] = g.in_neighbors(v).len();
    }
    let mut ready: VertexSet = g.vertices().filter(|&v| indeg[v as usize] == 0).collect();
    let mut remaining = g.all_vertices();
    let mut order = Vec::with_capacity(g.n());
    while let Some(u) = ready.min() {
        ready.remove(u);
        remaining.remove(u);
        order.push(u);
        for v in (g.out_neighbors(u) & remaining).iter() {
            indeg[v as usize] -= 1;
            if indeg[v as usize] == 0 {
                ready.insert(v);
            }
        }
    }
    if order.len() == g.n() {
        return Ok(order);
    }
    // Every remaining vertex keeps an unfinished predecessor, so walking
    // predecessors (smallest first) must revisit a vertex and close a cycle.
    let start = remaining.min().expect("non-empty remainder");
    let mut path = vec![start];
    let mut seen = VertexSet::singleton(start);
    loop {
        let u = *path.last().expect("path is non-empty");
        let p = (g.in_neighbors(u) & remaining)
            .min()
            .expect("remaining vertices have remaining predecessors");
        if seen.contains(p) {
            let from = path.iter().position(|&x| x == p).expect("p was recorded");
            // The walk follows in-edges, so reversing yields edge order.
            let mut cycle: Vec<Vertex> = path[from..].iter().rev().copied().collect();
            let min_at = cycle
                .iter()
                .position(|&x| Some(x) == cycle.iter().copied().min())
                .expect("cycle is non-empty");
            cycle.rotate_left(min_at);
            return Err(cycle);
        }
        seen.insert(p);
        path.push(p);
    }
}

/// Vertices with no in-neighbors.
pub fn minimal_vertices(g: &ColoredDigraph) -> VertexSet {
    g.vertices().filter(|&v| g.in_neighbors(v).is_empty()).collect()
}

/// Vertices with no out-neighbors.
pub fn maximal_vertices(g: &ColoredDigraph) -> VertexSet {
    g.vertices().filter(|&v| g.out_neighbors(v).is_empty()).collect()
}

/// Is there a directed path from u to v? (u ≠ v required.) On bi-transitive
/// graphs every such path collapses to length one or two; tests compare this
/// BFS against that collapsed form.
pub fn reachable(g: &ColoredDigraph, u: Vertex, v: Vertex) -> bool {
    assert_ne!(u, v, "reachability query needs distinct vertices");
    let mut seen = g.out_neighbors(u);
    let mut frontier = seen;
    while !frontier.is_empty() {
        if seen.contains(v) {
            return true;
        }
        let next = g.out_of_set(frontier) - seen;
        seen = seen | next;
        frontier = next;
    }
    seen.contains(v)
}

/// One connected piece of the symmetric-edge graph, split by color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaComponent {
    pub side0: VertexSet,
    pub side1: VertexSet,
    /// True when every cross pair inside the component is a symmetric edge.
    pub complete_bipartite: bool,
}

/// The symmetric-edge graph Σ: its vertices are the vertices of `g` lying on
/// at least two symmetric edges, its edges the symmetric edges between such
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricComponents {
    pub vertices: VertexSet,
    pub components: Vec<SigmaComponent>,
}

pub fn symmetric_components(g: &ColoredDigraph) -> SymmetricComponents {
    let sym = g.symmetric_edges();
    let mut degree = vec![0usize; g.n() + 1];
    for &(u, v) in &sym {
        degree[u as usize] += 1;
        degree[v as usize] += 1;
    }
    let vbar: VertexSet = g.vertices().filter(|&v| degree[v as usize] >= 2).collect();
    let mut adj = vec![VertexSet::EMPTY; g.n() + 1];
    for &(u, v) in &sym {
        if vbar.contains(u) && vbar.contains(v) {
            adj[u as usize].insert(v);
            adj[v as usize].insert(u);
        }
    }
    let mut seen = VertexSet::EMPTY;
    let mut components = Vec::new();
    for start in vbar.iter() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = VertexSet::singleton(start);
        let mut frontier = vec![start];
        while let Some(u) = frontier.pop() {
            for v in (adj[u as usize] - comp).iter() {
                comp.insert(v);
                frontier.push(v);
            }
        }
        seen = seen | comp;
        let side0 = comp & g.class_vertices(0);
        let side1 = comp & g.class_vertices(1);
        let complete_bipartite =
            side0.iter().all(|a| side1.iter().all(|b| adj[a as usize].contains(b)));
        components.push(SigmaComponent { side0, side1, complete_bipartite });
    }
    SymmetricComponents { vertices: vbar, components }
}
