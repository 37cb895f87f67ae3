//! Named example graphs used across the test suites and the command-line
//! golden files: worked examples for each structural feature, the elementary
//! base graphs, and the catalogs of small classes that the enumeration is
//! expected to reproduce.

use crate::graph::{ColoredDigraph, Vertex};
use crate::truncation::{elementary_graph, ElementaryBlock};

fn fx(text: &str, c0: &[Vertex], c1: &[Vertex]) -> ColoredDigraph {
    ColoredDigraph::from_text_with_classes(text, c0, c1).expect("fixture literal parses")
}

/// Contiguous split coloring: 1..i against i+1..n.
fn split(n: usize, i: usize) -> (Vec<Vertex>, Vec<Vertex>) {
    let ns = |r: std::ops::RangeInclusive<usize>| r.map(|v| v as Vertex).collect::<Vec<_>>();
    (ns(1..=i), ns(i + 1..=n))
}

/// One symmetric edge; the smallest sink-free example.
pub fn symmetric_pair() -> ColoredDigraph {
    fx("<2|[1,2],[2,1]>", &[1], &[2])
}

/// Three vertices, no equivalent pair: 1 and 2 both point at 3, which
/// answers only 2.
pub fn triple_plain() -> ColoredDigraph {
    fx("<3|[1,3],[2,3],[3,2]>", &[1, 2], &[3])
}

/// Three vertices where 1 and 2 have identical neighborhoods.
pub fn triple_with_twins() -> ColoredDigraph {
    fx("<3|[1,3],[3,1],[2,3],[3,2]>", &[1, 2], &[3])
}

const TEN_VERTEX_BASE: &str = "<10|[1,7],[1,8],[1,9],[1,10],[2,8],[3,9],[4,10],[5,9],[6,9],\
     [5,10],[6,10],[7,1],[7,2],[7,3],[7,4],[7,5],[7,6],[8,2],[9,3],[10,4]>";

/// Ten-vertex worked example with all classes singleton.
pub fn ten_vertex() -> ColoredDigraph {
    let with_58 = TEN_VERTEX_BASE.replace("[5,9]", "[5,8],[5,9]");
    fx(&with_58, &[1, 2, 3, 4, 5, 6], &[7, 8, 9, 10])
}

/// The same ten-vertex example minus the edge [5,8], which makes 5 and 6
/// equivalent.
pub fn ten_vertex_with_twins() -> ColoredDigraph {
    fx(TEN_VERTEX_BASE, &[1, 2, 3, 4, 5, 6], &[7, 8, 9, 10])
}

/// Bi-transitive with a directed 4-cycle 3→4→5→6→3; the cycle vertices span
/// a complete bipartite block of symmetric edges.
pub fn square_cycle_example() -> ColoredDigraph {
    fx(
        "<6|[1,2],[1,4],[1,6],[2,3],[2,5],[3,4],[4,3],[3,6],[6,3],[4,5],[5,4],[5,6],[6,5]>",
        &[1, 3, 5],
        &[2, 4, 6],
    )
}

/// Truncating this graph removes the triple {5,6,7} and leaves a remainder
/// in which 1 and 2 have become equivalent.
pub fn truncation_twins_example() -> ColoredDigraph {
    fx("<7|[1,3],[1,7],[2,3],[3,4],[4,3],[5,7],[6,7],[7,6]>", &[1, 2, 4, 5, 6], &[3, 7])
}

/// Decomposing this graph runs triple, pair, and then dies on the single
/// edge <2|[1,2]>, whose last vertex has no out-neighbor.
pub fn truncation_dead_end_example() -> ColoredDigraph {
    fx("<7|[1,2],[1,4],[1,7],[2,5],[2,6],[3,4],[4,3],[5,7],[6,7],[7,6]>", &[1, 3, 5, 6], &[2, 4, 7])
}

fn base(blocks: &[ElementaryBlock]) -> ColoredDigraph {
    elementary_graph(blocks).expect("base block lists are valid")
}

const P: ElementaryBlock = ElementaryBlock { size: 2, flip: false };
const PF: ElementaryBlock = ElementaryBlock { size: 2, flip: true };
const T: ElementaryBlock = ElementaryBlock { size: 3, flip: false };
const TF: ElementaryBlock = ElementaryBlock { size: 3, flip: true };

/// Elementary base on 7 vertices: pair, pair, triple; classes {1,3,5,6},{2,4,7}.
pub fn pi11() -> ColoredDigraph {
    base(&[P, P, T])
}

/// Same blocks as [`pi11`] with both pairs flipped; classes {2,4,5,6},{1,3,7}.
pub fn pi12() -> ColoredDigraph {
    base(&[PF, PF, T])
}

/// Pair, triple, flipped pair; classes {1,3,4,7},{2,5,6}.
pub fn pi21() -> ColoredDigraph {
    base(&[P, T, PF])
}

/// Flipped pair, triple, flipped pair; classes {2,3,4,7},{1,5,6}.
pub fn pi22() -> ColoredDigraph {
    base(&[PF, T, PF])
}

/// Triple, pair, pair; classes {1,2,4,6},{3,5,7}.
pub fn pi31() -> ColoredDigraph {
    base(&[T, P, P])
}

/// Triple, pair, flipped pair; classes {1,2,4,7},{3,5,6}.
pub fn pi32() -> ColoredDigraph {
    base(&[T, P, PF])
}

/// Four flipped pairs on 8 vertices; classes {2,4,6,8},{1,3,5,7}.
pub fn pi1() -> ColoredDigraph {
    base(&[PF, PF, PF, PF])
}

/// Pair and two flipped triples on 8 vertices; classes {1,5,8},{2,3,4,6,7}.
pub fn pi2() -> ColoredDigraph {
    base(&[P, TF, TF])
}

/// Pair, triple, flipped triple on 8 vertices; classes {1,3,4,8},{2,5,6,7}.
pub fn pi3() -> ColoredDigraph {
    base(&[P, T, TF])
}

/// The seven supergraphs of [`pi11`] recorded as the connected twin-free
/// family on the same color classes. The third entry leaves {3,4} cut off
/// from the rest as printed; the enumeration tests document how the list
/// relates to the computed family.
pub fn listed_extensions_7() -> Vec<ColoredDigraph> {
    const C0: [Vertex; 4] = [1, 3, 5, 6];
    const C1: [Vertex; 3] = [2, 4, 7];
    [
        "<7|[1,2],[1,4],[2,1],[2,3],[3,4],[4,3],[5,2],[5,4],[5,7],[6,2],[6,4],[6,7],[7,1],[7,3],[7,6]>",
        "<7|[1,2],[2,1],[3,4],[4,3],[5,2],[5,4],[5,7],[6,2],[6,7],[7,1],[7,6]>",
        "<7|[1,2],[1,7],[2,1],[2,6],[3,4],[4,3],[5,2],[5,7],[6,7],[7,6]>",
        "<7|[1,2],[1,4],[1,7],[2,1],[2,3],[2,5],[2,6],[3,4],[4,3],[5,7],[6,7],[7,6]>",
        "<7|[1,2],[2,1],[3,4],[4,3],[5,2],[5,4],[5,7],[6,7],[7,6]>",
        "<7|[1,2],[2,1],[3,4],[4,3],[5,2],[5,4],[5,7],[6,2],[6,4],[6,7],[7,1],[7,3],[7,6]>",
        "<7|[1,2],[2,1],[3,2],[3,4],[3,7],[4,1],[4,3],[4,5],[4,6],[5,2],[5,7],[6,7],[7,6]>",
    ]
    .iter()
    .map(|t| fx(t, &C0, &C1))
    .collect()
}

/// The eighteen supergraphs of [`pi2`] recorded as the connected twin-free
/// family on the same color classes. Entries 3, 4, 7, 14, 16 and 17 are
/// disconnected as printed (entry 4 is the base itself); the list matches
/// the computed family exactly once connectivity is not required.
pub fn listed_extensions_8() -> Vec<ColoredDigraph> {
    const C0: [Vertex; 3] = [1, 5, 8];
    const C1: [Vertex; 5] = [2, 3, 4, 6, 7];
    [
        "<8|[1,2],[1,4],[1,6],[1,7],[2,1],[2,5],[2,8],[3,1],[3,5],[3,8],[4,5],[5,4],[6,5],[6,8],[7,5],[7,8],[8,4],[8,7]>",
        "<8|[1,2],[2,1],[3,1],[3,5],[4,5],[5,4],[6,1],[6,5],[6,8],[7,1],[7,5],[7,8],[8,2],[8,3],[8,4],[8,7]>",
        "<8|[1,2],[2,1],[3,1],[3,5],[4,1],[4,5],[5,2],[5,4],[6,8],[7,8],[8,7]>",
        "<8|[1,2],[2,1],[3,5],[4,5],[5,4],[6,8],[7,8],[8,7]>",
        "<8|[1,2],[1,4],[1,6],[1,7],[2,1],[2,5],[2,8],[3,1],[3,5],[3,8],[4,5],[4,8],[5,4],[5,6],[5,7],[6,8],[7,8],[8,7]>",
        "<8|[1,2],[2,1],[3,5],[4,5],[5,4],[6,1],[6,5],[6,8],[7,8],[8,7]>",
        "<8|[1,2],[1,6],[1,7],[2,1],[2,8],[3,5],[4,5],[5,4],[6,8],[7,8],[8,7]>",
        "<8|[1,2],[2,1],[3,1],[3,5],[3,8],[4,5],[5,4],[6,5],[6,8],[7,8],[8,7]>",
        "<8|[1,2],[2,1],[3,1],[3,5],[3,8],[4,5],[4,8],[5,4],[5,6],[5,7],[6,8],[7,8],[8,7]>",
        "<8|[1,2],[2,1],[3,1],[3,5],[3,8],[4,1],[4,5],[5,2],[5,4],[6,8],[7,8],[8,7]>",
        "<8|[1,2],[1,3],[1,4],[1,6],[1,7],[2,1],[2,5],[2,8],[3,5],[4,5],[5,4],[6,5],[6,8],[7,8],[8,7]>",
        "<8|[1,2],[1,4],[2,1],[2,5],[3,1],[3,5],[4,5],[5,4],[6,1],[6,5],[6,8],[7,8],[8,7]>",
        "<8|[1,2],[1,3],[1,4],[1,6],[1,7],[2,1],[2,5],[2,8],[3,5],[4,5],[5,4],[6,8],[7,8],[8,7]>",
        "<8|[1,2],[2,1],[3,5],[3,8],[4,5],[5,4],[6,8],[7,8],[8,7]>",
        "<8|[1,2],[2,1],[3,1],[3,5],[3,8],[4,1],[4,5],[4,8],[5,2],[5,4],[5,6],[5,7],[6,8],[7,8],[8,7]>",
        "<8|[1,2],[2,1],[3,5],[4,5],[5,4],[6,1],[6,8],[7,8],[8,7]>",
        "<8|[1,2],[2,1],[3,5],[3,8],[4,5],[4,8],[5,4],[5,6],[5,7],[6,8],[7,8],[8,7]>",
        "<8|[1,2],[1,3],[1,4],[1,6],[1,7],[2,1],[2,5],[2,8],[3,5],[3,8],[4,5],[4,8],[5,4],[5,6],[5,7],[6,8],[7,8],[8,7]>",
    ]
    .iter()
    .map(|t| fx(t, &C0, &C1))
    .collect()
}

fn catalog(n: usize, i: usize, texts: &[&str]) -> Vec<ColoredDigraph> {
    let (c0, c1) = split(n, i);
    texts.iter().map(|t| fx(t, &c0, &c1)).collect()
}

/// The listed singleton for three vertices split 1 against {2,3}. As
/// printed, vertex 2 has no out-neighbor, so the graph is not sink-free; the
/// tests document how it relates to the computed class.
pub fn listed_e_3_1() -> Vec<ColoredDigraph> {
    catalog(3, 1, &["<3|[1,2],[1,3],[3,1]>"])
}

/// Both listed classes for four vertices split {1,2} against {3,4} that pass
/// every filter.
pub fn listed_e_4_2() -> Vec<ColoredDigraph> {
    catalog(4, 2, &["<4|[1,4],[2,3],[2,4],[3,1],[3,2],[4,1]>", "<4|[1,4],[2,4],[3,1],[3,2],[4,1]>"])
}

pub fn listed_e_5_2() -> Vec<ColoredDigraph> {
    catalog(
        5,
        2,
        &[
            "<5|[1,4],[1,5],[2,4],[3,1],[3,2],[4,2],[5,2]>",
            "<5|[1,3],[2,5],[3,1],[4,1],[4,2],[5,2]>",
            "<5|[1,4],[2,3],[2,4],[2,5],[3,1],[4,1],[5,1],[5,2]>",
            "<5|[1,4],[2,3],[2,4],[3,1],[3,2],[4,1],[5,1],[5,2]>",
        ],
    )
}

/// The printed list misses one comma between [4,2] and [5,2] in its second
/// entry; the corrected reading is used here.
pub fn listed_e_6_2() -> Vec<ColoredDigraph> {
    catalog(
        6,
        2,
        &[
            "<6|[1,4],[2,4],[2,5],[2,6],[3,1],[3,2],[4,1],[5,1],[5,2],[6,1]>",
            "<6|[1,3],[2,5],[3,1],[4,1],[4,2],[5,2],[6,1]>",
        ],
    )
}

/// The printed list drops the opening bracket of [1,4] in its third entry;
/// the corrected reading is used here.
pub fn listed_e_6_3() -> Vec<ColoredDigraph> {
    catalog(
        6,
        3,
        &[
            "<6|[1,6],[2,4],[2,6],[3,6],[4,1],[4,2],[4,3],[5,1],[5,2],[5,3],[6,3]>",
            "<6|[1,5],[2,4],[2,5],[2,6],[3,6],[4,1],[5,1],[6,3]>",
            "<6|[1,4],[1,5],[1,6],[2,5],[3,5],[3,6],[4,1],[4,2],[4,3],[5,2],[6,2],[6,3]>",
            "<6|[1,5],[1,6],[2,5],[3,5],[3,6],[4,1],[4,2],[4,3],[5,2],[6,2],[6,3]>",
            "<6|[1,4],[1,5],[1,6],[2,4],[2,6],[3,6],[4,3],[5,1],[5,2],[5,3],[6,3]>",
            "<6|[1,4],[1,6],[2,6],[3,6],[4,2],[4,3],[5,1],[5,2],[5,3],[6,3]>",
            "<6|[1,4],[1,6],[2,4],[3,6],[4,2],[5,1],[5,2],[5,3],[6,3]>",
            "<6|[1,5],[2,4],[2,5],[2,6],[3,6],[4,1],[4,2],[4,3],[5,1],[6,3]>",
        ],
    )
}

/// The single class for seven vertices split 2 against 5 that passes every
/// filter: the truncation example whose remainder acquires twins.
pub fn listed_e_7_2() -> Vec<ColoredDigraph> {
    vec![truncation_twins_example()]
}

/// All twenty-one recorded classes for seven vertices split 3 against 4:
/// the seven supergraphs of [`pi11`] plus fourteen more on the contiguous
/// split. Entries 15 and 19 are isomorphic to each other and entry 3 is
/// disconnected, so the list covers nineteen distinct valid classes; the
/// catalog tests pin the computed count at twenty-two.
pub fn listed_e_7_3() -> Vec<ColoredDigraph> {
    let mut graphs = listed_extensions_7();
    graphs.extend(catalog(
        7,
        3,
        &[
            "<7|[1,4],[2,4],[2,5],[3,7],[4,1],[5,1],[6,1],[6,2],[6,3],[7,3]>",
            "<7|[1,4],[2,7],[3,7],[4,1],[5,1],[6,1],[6,2],[6,3],[7,3]>",
            "<7|[1,4],[2,4],[3,4],[3,5],[3,7],[4,1],[5,1],[5,2],[6,1],[6,2],[6,3],[7,1],[7,2],[7,3]>",
            "<7|[1,4],[2,4],[2,5],[3,4],[3,5],[3,7],[4,1],[5,1],[6,1],[6,2],[6,3],[7,1],[7,2],[7,3]>",
            "<7|[1,4],[2,4],[2,5],[2,6],[2,7],[3,7],[4,1],[5,3],[6,1],[7,3]>",
            "<7|[1,4],[2,4],[2,6],[2,7],[3,7],[4,1],[5,1],[5,2],[5,3],[6,3],[7,3]>",
            "<7|[1,4],[2,4],[2,5],[2,7],[3,4],[3,7],[4,1],[5,1],[5,3],[6,1],[6,2],[6,3],[7,1],[7,3]>",
            "<7|[1,5],[2,7],[3,7],[4,2],[4,3],[5,1],[6,1],[6,2],[6,3],[7,3]>",
            "<7|[1,4],[1,5],[1,6],[2,6],[3,4],[3,5],[3,6],[3,7],[4,1],[4,2],[5,2],[6,2],[7,1],[7,2],[7,3]>",
            "<7|[1,4],[2,4],[2,6],[2,7],[3,7],[4,1],[5,1],[5,2],[5,3],[6,1],[6,3],[7,3]>",
            "<7|[1,4],[2,4],[2,5],[2,6],[2,7],[3,7],[4,1],[5,3],[6,1],[6,3],[7,3]>",
            "<7|[1,4],[2,4],[3,7],[4,1],[5,1],[5,2],[5,3],[6,1],[6,2],[7,3]>",
            "<7|[1,4],[1,5],[1,6],[1,7],[2,6],[2,7],[3,7],[4,1],[4,2],[4,3],[5,2],[5,3],[6,3],[7,3]>",
            "<7|[1,4],[2,4],[2,5],[2,7],[3,4],[3,5],[3,7],[4,1],[5,1],[6,1],[6,2],[6,3],[7,1],[7,3]>",
        ],
    ));
    graphs
}
