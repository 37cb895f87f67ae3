//! Terminal analysis of acyclic orientations: the last vertex and its
//! symmetric partner, truncated remainders, iterated decomposition into
//! pairs and triples, and the elementary graphs the decomposition targets.

use serde::Serialize;

use crate::axioms::{check_2cbmg, check_n1, check_n2, check_n3, Axiom};
use crate::graph::{ColoredDigraph, Vertex, VertexSet};
use crate::structure::{consistent_underlying_oriented, equivalence_classes, topological_order};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TruncationError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("axiom {0:?} fails, graph is not a 2-cBMG")]
    AxiomViolation(Axiom),
    #[error("graph has sinks {0}, so it is not a 2-cBMG")]
    Sinks(VertexSet),
    #[error("vertices {0} and {1} are equivalent")]
    EquivalentVertices(Vertex, Vertex),
    #[error("last vertex {m} is not on a symmetric edge (out-neighbors {out})")]
    NoSymmetricPartner { m: Vertex, out: VertexSet },
    #[error("elementary block sizes must be 2 or 3, got {0}")]
    BadBlockSize(u8),
    #[error("elementary partition is empty")]
    EmptyPartition,
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

/// The last vertex of the canonical topological order, its symmetric
/// partner, and the dependent vertices whose whole out-neighborhood is one
/// of the two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminalAnalysis {
    /// Topological order rearranged so that ℓ sits right before m and the
    /// d-vertices right before ℓ.
    pub order: Vec<Vertex>,
    pub m: Vertex,
    pub ell: Vertex,
    /// Vertices d ∉ {ℓ, m} with N(d) = {m} or N(d) = {ℓ}, ascending.
    pub d_list: Vec<Vertex>,
}

/// Shared precondition work: N1–N3, singleton classes, the canonical order,
/// and the terminal pair. Sink-freeness is demanded only by the strict
/// public entry points; the decomposition loop runs on almost-sink-free
/// remainders too.
fn analyze(
    g: &ColoredDigraph,
    require_sink_free: bool,
) -> Result<TerminalAnalysis, TruncationError> {
    if g.n() == 0 {
        return Err(TruncationError::EmptyGraph);
    }
    if let Some(w) = check_n1(g) {
        return Err(TruncationError::AxiomViolation(w.axiom));
    }
    if let Some(w) = check_n2(g) {
        return Err(TruncationError::AxiomViolation(w.axiom));
    }
    if let Some(w) = check_n3(g) {
        return Err(TruncationError::AxiomViolation(w.axiom));
    }
    if require_sink_free {
        let report = check_2cbmg(g);
        if !report.sinks.is_empty() {
            return Err(TruncationError::Sinks(report.sinks));
        }
    }
    let classes = equivalence_classes(g);
    for c in &classes.classes {
        if c.len() > 1 {
            let mut it = c.iter();
            let a = it.next().expect("class of size two");
            let b = it.next().expect("class of size two");
            return Err(TruncationError::EquivalentVertices(a, b));
        }
    }
    let oriented = consistent_underlying_oriented(g);
    let order = topological_order(&oriented.graph).map_err(|cycle| {
        TruncationError::Invariant(format!("consistent orientation has cycle {cycle:?}"))
    })?;
    let m = *order.last().expect("non-empty order");
    let out_m = g.out_neighbors(m);
    let ell = match out_m.min() {
        Some(ell) if out_m.len() == 1 && g.has_edge(ell, m) => ell,
        _ => return Err(TruncationError::NoSymmetricPartner { m, out: out_m }),
    };
    let mut d_list = Vec::new();
    for d in g.vertices() {
        if d == m || d == ell {
            continue;
        }
        let out = g.out_neighbors(d);
        if out == VertexSet::singleton(m) || out == VertexSet::singleton(ell) {
            d_list.push(d);
        }
    }
    // The symmetric partner is unique and ℓ sends no edge past its position
    // (apart from ℓ→m); both follow from the axioms, so a failure here marks
    // an internal inconsistency rather than bad input.
    for v in g.vertices() {
        if v != ell && g.has_edge(m, v) {
            return Err(TruncationError::Invariant(format!(
                "last vertex {m} has a second out-neighbor {v}"
            )));
        }
    }
    let pos_ell = order.iter().position(|&x| x == ell).expect("ℓ is in the order");
    for &v in &order[pos_ell + 1..] {
        if v != m && g.has_edge(ell, v) {
            return Err(TruncationError::Invariant(format!(
                "partner {ell} keeps an edge to the later vertex {v}"
            )));
        }
    }
    let mut rearranged: Vec<Vertex> =
        order.iter().copied().filter(|&v| v != m && v != ell && !d_list.contains(&v)).collect();
    rearranged.extend(d_list.iter().copied());
    rearranged.push(ell);
    rearranged.push(m);
    debug_assert!(is_topological(&oriented.graph, &rearranged));
    Ok(TerminalAnalysis { order: rearranged, m, ell, d_list })
}

fn is_topological(g: &ColoredDigraph, order: &[Vertex]) -> bool {
    let mut pos = vec![0usize; g.n() + 1];
    for (k, &v) in order.iter().enumerate() {
        pos[v as usize] = k;
    }
    g.edges().iter().all(|&(u, v)| pos[u as usize] < pos[v as usize])
}

/// Terminal pair of a 2-cBMG without equivalent vertices.
pub fn terminal_pair(g: &ColoredDigraph) -> Result<TerminalAnalysis, TruncationError> {
    analyze(g, true)
}

/// The rearranged topological order with ℓ = m−1 and the d-vertices at
/// m−2, m−3, … by position.
pub fn normalize_order(g: &ColoredDigraph) -> Result<Vec<Vertex>, TruncationError> {
    Ok(terminal_pair(g)?.order)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TruncationCase {
    /// No dependent vertices and the remainder is again a 2-cBMG.
    I,
    /// One dependent vertex and the remainder is an almost 2-cBMG.
    II,
    /// Anything else; outside the guarantees of the truncation theory.
    Other,
}

#[derive(Debug, Clone)]
pub struct TruncationStep {
    pub analysis: TerminalAnalysis,
    /// {m, ℓ} ∪ d-list, ascending, in the labels of the input graph.
    pub removed: Vec<Vertex>,
    pub case: TruncationCase,
    /// Induced subgraph on the survivors, relabeled 1..k ascending.
    pub remainder: ColoredDigraph,
    /// Remainder label k (1-based) → label in the input graph.
    pub old_labels: Vec<Vertex>,
}

fn classify_step(d_count: usize, remainder: &ColoredDigraph) -> TruncationCase {
    let report = check_2cbmg(remainder);
    match d_count {
        0 if report.is_2cbmg => TruncationCase::I,
        1 if report.is_almost_2cbmg => TruncationCase::II,
        _ => TruncationCase::Other,
    }
}

fn step_from_analysis(g: &ColoredDigraph, analysis: TerminalAnalysis) -> TruncationStep {
    let mut removed: Vec<Vertex> = analysis.d_list.clone();
    removed.push(analysis.ell);
    removed.push(analysis.m);
    removed.sort_unstable();
    let keep = g.all_vertices() - removed.iter().copied().collect::<VertexSet>();
    let (remainder, old_labels) = g.induced(keep);
    let case = classify_step(analysis.d_list.len(), &remainder);
    TruncationStep { analysis, removed, case, remainder, old_labels }
}

/// One truncation: remove m, its partner, and the dependent vertices.
/// The remainder keeps N1–N3 (a theorem of the construction, re-checked in
/// tests rather than assumed here).
pub fn truncate(g: &ColoredDigraph) -> Result<TruncationStep, TruncationError> {
    Ok(step_from_analysis(g, analyze(g, true)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Pair,
    Triple,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionBlock {
    /// Removed vertices in the labels of the original graph, ascending.
    pub vertices: Vec<Vertex>,
    pub kind: BlockKind,
    pub case: TruncationCase,
    /// For a triple on at least four remaining vertices: whether the vertex
    /// three positions from the end keeps an out-neighbor beyond the removed
    /// block. When false the next remainder may pick up a sink.
    pub sink_guard: Option<bool>,
}

#[derive(Debug, Clone)]
pub enum DecompositionOutcome {
    Complete,
    Failed { reason: TruncationError, remainder: ColoredDigraph },
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub blocks: Vec<DecompositionBlock>,
    pub outcome: DecompositionOutcome,
}

impl Decomposition {
    pub fn is_complete(&self) -> bool {
        matches!(self.outcome, DecompositionOutcome::Complete)
    }
}

/// Repeated truncation. The input must be a 2-cBMG without equivalent
/// vertices; later remainders are allowed to be almost 2-cBMGs (that is how
/// the process dies on some inputs), so the loop itself only insists on
/// N1–N3, singleton classes, and a terminal symmetric pair.
pub fn decompose(g: &ColoredDigraph) -> Result<Decomposition, TruncationError> {
    let first = analyze(g, true)?;
    let mut blocks = Vec::new();
    let mut current = g.clone();
    // Current label → original label; composed across relabelings.
    let mut old_of: Vec<Vertex> = g.vertices().collect();
    let mut analysis = Some(first);
    loop {
        let a = match analysis.take() {
            Some(a) => a,
            None => match analyze(&current, false) {
                Ok(a) => a,
                Err(reason) => {
                    return Ok(Decomposition {
                        blocks,
                        outcome: DecompositionOutcome::Failed { reason, remainder: current },
                    })
                }
            },
        };
        let sink_guard = triple_sink_guard(&current, &a);
        let step = step_from_analysis(&current, a);
        blocks.push(DecompositionBlock {
            vertices: step.removed.iter().map(|&v| old_of[v as usize - 1]).collect(),
            kind: if step.analysis.d_list.is_empty() { BlockKind::Pair } else { BlockKind::Triple },
            case: step.case,
            sink_guard,
        });
        old_of = step.old_labels.iter().map(|&v| old_of[v as usize - 1]).collect();
        current = step.remainder;
        if current.n() == 0 {
            return Ok(Decomposition { blocks, outcome: DecompositionOutcome::Complete });
        }
    }
}

/// For a triple removal with at least one vertex staying behind below it:
/// does the vertex at position m−3 of the rearranged order keep an
/// out-neighbor outside {d, m}? (Strict superset of {d, m} in the theory.)
fn triple_sink_guard(g: &ColoredDigraph, a: &TerminalAnalysis) -> Option<bool> {
    if a.d_list.len() != 1 || a.order.len() < 4 {
        return None;
    }
    let w = a.order[a.order.len() - 4];
    let removed_heads = VertexSet::singleton(a.d_list[0]) | VertexSet::singleton(a.m);
    let out = g.out_neighbors(w);
    Some(removed_heads.is_subset_of(&out) && out.len() > 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementaryBlock {
    pub size: u8,
    /// Swap which side of the block lands in color class 1.
    pub flip: bool,
}

impl ElementaryBlock {
    pub fn pair() -> Self {
        ElementaryBlock { size: 2, flip: false }
    }
    pub fn triple() -> Self {
        ElementaryBlock { size: 3, flip: false }
    }
    pub fn flipped(mut self) -> Self {
        self.flip = true;
        self
    }
}

/// Builds the disconnected graph whose blocks are consecutive-label pairs
/// (one symmetric edge) and triples (symmetric edge plus one feeding arc):
/// pair {i, i+1} has edges [i,i+1],[i+1,i]; triple {i, i+1, i+2} has
/// [i+1,i+2],[i+2,i+1],[i,i+2]. Default colors put i (and i+1 in a triple)
/// in class 0; `flip` swaps the block's classes.
pub fn elementary_graph(blocks: &[ElementaryBlock]) -> Result<ColoredDigraph, TruncationError> {
    if blocks.is_empty() {
        return Err(TruncationError::EmptyPartition);
    }
    let mut colors = Vec::new();
    let mut edges = Vec::new();
    let mut base: Vertex = 1;
    for b in blocks {
        let (lo, hi) = (if b.flip { 1 } else { 0 }, if b.flip { 0 } else { 1 });
        match b.size {
            2 => {
                edges.push((base, base + 1));
                edges.push((base + 1, base));
                colors.extend([lo, hi]);
            }
            3 => {
                edges.push((base + 1, base + 2));
                edges.push((base + 2, base + 1));
                edges.push((base, base + 2));
                colors.extend([lo, lo, hi]);
            }
            s => return Err(TruncationError::BadBlockSize(s)),
        }
        base += b.size as Vertex;
    }
    ColoredDigraph::new(colors.len(), &colors, &edges)
        .map_err(|e| TruncationError::Invariant(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms;
    use crate::fixtures;

    #[test]
    fn pair_truncates_to_nothing() {
        let g = fixtures::symmetric_pair();
        let t = truncate(&g).unwrap();
        assert_eq!((t.analysis.m, t.analysis.ell), (2, 1));
        assert!(t.analysis.d_list.is_empty());
        assert_eq!(t.case, TruncationCase::I);
        assert_eq!(t.remainder.n(), 0);
    }

    #[test]
    fn triple_fixture_is_one_case_ii_block() {
        // <3|[1,3],[2,3],[3,2]>: m=3, partner 2, and N(1)={3} makes 1 a
        // dependent vertex, so the whole graph is one triple.
        let g = fixtures::triple_plain();
        let t = truncate(&g).unwrap();
        assert_eq!((t.analysis.m, t.analysis.ell), (3, 2));
        assert_eq!(t.analysis.d_list, vec![1]);
        assert_eq!(t.analysis.order, vec![1, 2, 3]);
        assert_eq!(t.case, TruncationCase::II);
        assert_eq!(t.remainder.n(), 0);
    }

    #[test]
    fn twin_vertices_are_rejected() {
        let g = fixtures::triple_with_twins();
        assert_eq!(terminal_pair(&g), Err(TruncationError::EquivalentVertices(1, 2)));
    }

    #[test]
    fn seven_vertex_fixture_truncates_to_the_twin_remainder() {
        let g = fixtures::truncation_twins_example();
        let t = truncate(&g).unwrap();
        assert_eq!((t.analysis.m, t.analysis.ell), (7, 6));
        assert_eq!(t.analysis.d_list, vec![5]);
        assert_eq!(t.analysis.order, vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(t.case, TruncationCase::II);
        assert_eq!(t.remainder.to_text(), "<4|[1,3],[2,3],[3,4],[4,3]>");
        // The remainder picks up an equivalent pair even though the input
        // had none.
        let eq = crate::structure::equivalence_classes(&t.remainder);
        assert_eq!(eq.classes[0].to_vec(), vec![1, 2]);
    }

    #[test]
    fn dead_end_fixture_truncates_to_an_almost_remainder() {
        let g = fixtures::truncation_dead_end_example();
        let t = truncate(&g).unwrap();
        assert_eq!(t.case, TruncationCase::II);
        assert_eq!(t.remainder.to_text(), "<4|[1,2],[1,4],[3,4],[4,3]>");
        let report = axioms::check_2cbmg(&t.remainder);
        assert!(!report.is_2cbmg);
        assert!(report.is_almost_2cbmg);
    }

    #[test]
    fn decompose_stops_on_twins() {
        let d = decompose(&fixtures::truncation_twins_example()).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].vertices, vec![5, 6, 7]);
        assert_eq!(d.blocks[0].kind, BlockKind::Triple);
        match d.outcome {
            DecompositionOutcome::Failed { reason, .. } => {
                assert_eq!(reason, TruncationError::EquivalentVertices(1, 2));
            }
            DecompositionOutcome::Complete => panic!("expected a failed decomposition"),
        }
    }

    #[test]
    fn decompose_dead_end_reaches_the_single_edge() {
        let d = decompose(&fixtures::truncation_dead_end_example()).unwrap();
        let blocks: Vec<_> = d.blocks.iter().map(|b| b.vertices.clone()).collect();
        assert_eq!(blocks, vec![vec![5, 6, 7], vec![3, 4]]);
        assert_eq!(d.blocks[0].kind, BlockKind::Triple);
        assert_eq!(d.blocks[0].sink_guard, Some(false));
        assert_eq!(d.blocks[1].kind, BlockKind::Pair);
        match d.outcome {
            DecompositionOutcome::Failed { reason, remainder } => {
                assert_eq!(remainder.to_text(), "<2|[1,2]>");
                assert!(matches!(reason, TruncationError::NoSymmetricPartner { m: 2, .. }));
            }
            DecompositionOutcome::Complete => panic!("expected a failed decomposition"),
        }
    }

    #[test]
    fn decompose_pair_fixture_completes() {
        let d = decompose(&fixtures::symmetric_pair()).unwrap();
        assert!(d.is_complete());
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].vertices, vec![1, 2]);
        assert_eq!(d.blocks[0].kind, BlockKind::Pair);
    }

    #[test]
    fn elementary_blocks_reproduce_the_seven_vertex_bases() {
        let b = [ElementaryBlock::pair(), ElementaryBlock::pair(), ElementaryBlock::triple()];
        let g = elementary_graph(&b).unwrap();
        assert_eq!(g.to_text(), "<7|[1,2],[2,1],[3,4],[4,3],[5,7],[6,7],[7,6]>");
        assert_eq!(g.class_vertices(0).to_vec(), vec![1, 3, 5, 6]);
        assert_eq!(g.class_vertices(1).to_vec(), vec![2, 4, 7]);
        assert!(axioms::is_2cbmg(&g));
    }

    #[test]
    fn elementary_flip_swaps_one_block_only() {
        let b = [
            ElementaryBlock::pair(),
            ElementaryBlock::triple().flipped(),
            ElementaryBlock::triple().flipped(),
        ];
        let g = elementary_graph(&b).unwrap();
        assert_eq!(g.class_vertices(0).to_vec(), vec![1, 5, 8]);
        assert_eq!(g.class_vertices(1).to_vec(), vec![2, 3, 4, 6, 7]);
        assert!(axioms::is_2cbmg(&g));
    }

    #[test]
    fn elementary_rejects_bad_blocks() {
        assert_eq!(elementary_graph(&[]), Err(TruncationError::EmptyPartition));
        let bad = [ElementaryBlock { size: 4, flip: false }];
        assert_eq!(elementary_graph(&bad), Err(TruncationError::BadBlockSize(4)));
    }

    #[test]
    fn decompose_every_elementary_graph_completely() {
        // Elementary graphs are exactly the fixed points of the process:
        // the blocks come back out in descending label order.
        let b = [ElementaryBlock::pair(), ElementaryBlock::triple(), ElementaryBlock::pair()];
        let g = elementary_graph(&b).unwrap();
        let d = decompose(&g).unwrap();
        assert!(d.is_complete());
        let blocks: Vec<_> = d.blocks.iter().map(|b| b.vertices.clone()).collect();
        assert_eq!(blocks, vec![vec![6, 7], vec![3, 4, 5], vec![1, 2]]);
    }
}
