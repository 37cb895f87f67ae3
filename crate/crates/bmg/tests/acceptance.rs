//! Acceptance sweep. Each test covers one recorded result family and prints
//! a single verdict line (run with `-- --nocapture` to see the lines for
//! passing criteria too). Where the computed truth is known to differ from
//! the recorded values, the test still asserts the recorded values and fails
//! with the full diff; the unit suites pin the computed truth.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::Instant;

use bmg::axioms::{check_2cbmg, check_n2, is_2cbmg, match_forbidden_subgraphs};
use bmg::constructors::{bitournament_from_mask, family_graph, parity_graph, FamilySpec};
use bmg::enumeration::{
    canonical_form, canonical_form_preserving, classify_split, enumerate_extensions,
    graph_from_mask, CanonPolicy, CanonicalForm, ClassSplit, FilterSet, ScanOptions,
};
use bmg::fixtures;
use bmg::rng::Lcg64;
use bmg::structure::{
    quotient, symmetric_components, topological_order, underlying_oriented, OrientationChoice,
};
use bmg::tree::{best_match_graph, random_colored_tree};
use bmg::truncation::{decompose, truncate, BlockKind, DecompositionOutcome, TruncationCase};
use bmg::{ColoredDigraph, Vertex};

/// Splits the classification table covers for 4..=7 vertices, plus (1,2)
/// for the three-vertex row. Computed once and shared by the criteria.
const TABLE_SPLITS: [(usize, usize); 7] = [(1, 2), (2, 2), (2, 3), (2, 4), (3, 3), (2, 5), (3, 4)];

fn scan_options() -> ScanOptions {
    ScanOptions { allow_large: true, ..ScanOptions::default() }
}

fn table() -> &'static BTreeMap<(usize, usize), ClassSplit> {
    static TABLE: OnceLock<BTreeMap<(usize, usize), ClassSplit>> = OnceLock::new();
    TABLE.get_or_init(|| {
        TABLE_SPLITS
            .iter()
            .map(|&(i, j)| ((i, j), classify_split(i, j, &scan_options()).unwrap()))
            .collect()
    })
}

fn verdict(name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("criterion {name}: pass");
    } else {
        println!("criterion {name}: FAIL");
        for f in failures {
            println!("  {f}");
        }
        panic!("{name}: {}", failures.join("; "));
    }
}

#[test]
fn criterion_1_classification_counts_match_the_recorded_rows() {
    let recorded: [(usize, usize, [usize; 5]); 6] = [
        (2, 2, [26, 14, 5, 11, 2]),
        (2, 3, [122, 74, 51, 16, 4]),
        (2, 4, [353, 175, 69, 33, 2]),
        (3, 3, [347, 172, 149, 33, 8]),
        (2, 5, [647, 283, 571, 59, 1]),
        (3, 4, [555, 324, 352, 126, 21]),
    ];
    let mut failures = Vec::new();
    for (i, j, want) in recorded {
        let row = table()[&(i, j)].row();
        let got = [row.a, row.b, row.c, row.d, row.e];
        if got == want {
            continue;
        }
        // On a mismatch the contract is to rerun under the alternative
        // class-interchange convention and report which one matches.
        let convention = if i == j {
            let opts = ScanOptions { policy: CanonPolicy::NeverSwap, ..scan_options() };
            let alt = classify_split(i, j, &opts).unwrap().row();
            let alt_got = [alt.a, alt.b, alt.c, alt.d, alt.e];
            if alt_got == want {
                "the never-interchange convention matches".to_string()
            } else {
                format!("never-interchange computes {alt_got:?}; neither convention matches")
            }
        } else {
            "the interchange conventions coincide on unequal sides".to_string()
        };
        failures
            .push(format!("split ({i},{j}): recorded {want:?}, computed {got:?}; {convention}"));
    }
    verdict("1 (classification counts)", &failures);
}

fn forms_of(graphs: &[ColoredDigraph]) -> BTreeSet<CanonicalForm> {
    graphs.iter().map(|g| canonical_form(g, CanonPolicy::SwapWhenEqual)).collect()
}

fn preserving_forms_of(graphs: &[ColoredDigraph]) -> BTreeSet<CanonicalForm> {
    graphs.iter().map(canonical_form_preserving).collect()
}

#[test]
fn criterion_2_listed_catalogs_match_the_enumerated_sets() {
    let mut failures = Vec::new();
    let catalogs: [(&str, (usize, usize), Vec<ColoredDigraph>); 4] = [
        ("five-vertex full catalog", (2, 3), fixtures::listed_e_5_2()),
        ("six-vertex (2,4) full catalog", (2, 4), fixtures::listed_e_6_2()),
        ("six-vertex (3,3) full catalog", (3, 3), fixtures::listed_e_6_3()),
        ("seven-vertex (3,4) full catalog", (3, 4), fixtures::listed_e_7_3()),
    ];
    for (label, sides, listed) in catalogs {
        let listed_forms = forms_of(&listed);
        let computed = &table()[&sides].e;
        if &listed_forms == computed {
            continue;
        }
        let confirmed = listed_forms.intersection(computed).count();
        failures.push(format!(
            "{label}: {} listed entries with {} distinct certificates, computed {}; \
             {confirmed} confirmed, {} listed but not computed, {} computed but not listed",
            listed.len(),
            listed_forms.len(),
            computed.len(),
            listed_forms.len() - confirmed,
            computed.len() - confirmed,
        ));
    }

    let opts = scan_options();
    let ext7 = enumerate_extensions(&fixtures::pi11(), &FilterSet::E, &opts).unwrap();
    let listed7 = preserving_forms_of(&fixtures::listed_extensions_7());
    if ext7.count() != 7 || listed7 != ext7.forms {
        let confirmed = listed7.intersection(&ext7.forms).count();
        failures.push(format!(
            "supergraphs of the seven-vertex base: recorded 7, computed {}; \
             {confirmed} of the listed graphs confirmed, {} listed but not computed, \
             {} computed but not listed",
            ext7.count(),
            listed7.len() - confirmed,
            ext7.count() - confirmed,
        ));
    }

    let ext8 = enumerate_extensions(&fixtures::pi2(), &FilterSet::E, &opts).unwrap();
    let listed8 = preserving_forms_of(&fixtures::listed_extensions_8());
    if ext8.count() != 18 || listed8 != ext8.forms {
        let loose_filter = FilterSet { require_connected: false, ..FilterSet::E };
        let loose = enumerate_extensions(&fixtures::pi2(), &loose_filter, &opts).unwrap();
        let note = if loose.forms == listed8 {
            "without the connectivity filter the computed family is exactly the 18 listed graphs"
        } else {
            "the listed family matches no tested filter combination"
        };
        failures.push(format!(
            "supergraphs of the eight-vertex base: recorded 18 connected, computed {}; {note}",
            ext8.count(),
        ));
    }
    verdict("2 (listed catalogs)", &failures);
}

#[test]
fn criterion_3_fixture_graphs_get_their_recorded_verdicts() {
    let mut failures = Vec::new();
    let mut expect = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };

    expect(is_2cbmg(&fixtures::symmetric_pair()), "the symmetric pair fails the axioms");

    let plain = fixtures::triple_plain();
    expect(is_2cbmg(&plain), "the plain triple fails the axioms");
    expect(quotient(&plain).graph.n() == 3, "the plain triple has an equivalent pair");

    let twins = fixtures::triple_with_twins();
    expect(is_2cbmg(&twins), "the twin triple fails the axioms");
    let q = quotient(&twins);
    expect(q.graph.n() == 2, "the twin triple should collapse to two classes");
    expect(
        q.classes.classes.iter().any(|c| c.to_vec() == vec![1, 2]),
        "the twin triple should make 1 and 2 equivalent",
    );

    let ten = fixtures::ten_vertex();
    expect(is_2cbmg(&ten), "the ten-vertex example fails the axioms");
    expect(quotient(&ten).graph.n() == 10, "the ten-vertex example has an equivalent pair");

    let ten_twins = fixtures::ten_vertex_with_twins();
    expect(is_2cbmg(&ten_twins), "the twin ten-vertex variant fails the axioms");
    let q = quotient(&ten_twins);
    expect(q.graph.n() == 9, "the twin ten-vertex variant should collapse to nine classes");
    expect(
        q.classes.classes.iter().any(|c| c.to_vec() == vec![5, 6]),
        "dropping [5,8] should make 5 and 6 equivalent",
    );

    let square = fixtures::square_cycle_example();
    expect(is_2cbmg(&square), "the square-cycle example fails the axioms");
    let cycle = [(3, 4), (4, 5), (5, 6), (6, 3)];
    expect(
        cycle.iter().all(|&(u, w)| square.out_neighbors(u).contains(w)),
        "the directed cycle 3->4->5->6->3 is missing",
    );
    let sigma = symmetric_components(&square);
    expect(
        sigma.components.len() == 1
            && sigma.components[0].complete_bipartite
            && sigma.components[0].side0.to_vec() == vec![3, 5]
            && sigma.components[0].side1.to_vec() == vec![4, 6],
        "the cycle vertices should span one complete bipartite block",
    );

    expect(
        is_2cbmg(&fixtures::truncation_twins_example()),
        "the first seven-vertex worked example fails the axioms",
    );
    expect(
        is_2cbmg(&fixtures::truncation_dead_end_example()),
        "the second seven-vertex worked example fails the axioms",
    );

    verdict("3 (fixture verdicts)", &failures);
}

#[test]
fn criterion_4_truncation_traces_match_the_worked_examples() {
    let mut failures = Vec::new();

    let step = truncate(&fixtures::truncation_twins_example()).unwrap();
    if step.remainder.to_text() != "<4|[1,3],[2,3],[3,4],[4,3]>" || step.case != TruncationCase::II
    {
        failures.push(format!(
            "first example: case {:?}, remainder {}",
            step.case,
            step.remainder.to_text()
        ));
    }

    let step = truncate(&fixtures::truncation_dead_end_example()).unwrap();
    if step.remainder.to_text() != "<4|[1,2],[1,4],[3,4],[4,3]>" || step.case != TruncationCase::II
    {
        failures.push(format!(
            "second example: case {:?}, remainder {}",
            step.case,
            step.remainder.to_text()
        ));
    }

    let result = decompose(&fixtures::truncation_dead_end_example()).unwrap();
    let kinds: Vec<BlockKind> = result.blocks.iter().map(|b| b.kind).collect();
    if kinds != [BlockKind::Triple, BlockKind::Pair] {
        failures.push(format!("decomposition removed blocks {kinds:?}"));
    }
    match &result.outcome {
        DecompositionOutcome::Failed { remainder, .. } => {
            if remainder.to_text() != "<2|[1,2]>" {
                failures.push(format!("decomposition died on {}", remainder.to_text()));
            }
            let report = check_2cbmg(remainder);
            if !report.is_almost_2cbmg || report.is_2cbmg {
                failures.push("the dead end should be almost valid with one sink".to_string());
            }
        }
        DecompositionOutcome::Complete => {
            failures.push("decomposition should stop on the single edge".to_string())
        }
    }

    verdict("4 (truncation traces)", &failures);
}

/// All subsets of `values` with exactly `size` elements.
fn subsets_of(values: &[u64], size: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << values.len() {
        if mask.count_ones() as usize == size {
            out.push(
                values
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect(),
            );
        }
    }
    out
}

/// Certificates of every parity graph whose members fit in the window
/// 0..2(a+b) and whose parity counts are {a, b} in either assignment.
fn parity_forms(a: usize, b: usize) -> BTreeSet<CanonicalForm> {
    let n = a + b;
    let evens: Vec<u64> = (0..n as u64).map(|k| 2 * k).collect();
    let odds: Vec<u64> = (0..n as u64).map(|k| 2 * k + 1).collect();
    let mut forms = BTreeSet::new();
    for (p, q) in [(a, b), (b, a)] {
        for es in subsets_of(&evens, p) {
            for os in subsets_of(&odds, q) {
                let members: Vec<u64> = es.iter().chain(&os).copied().collect();
                let g = parity_graph(&members).unwrap();
                forms.insert(canonical_form(&g, CanonPolicy::SwapWhenEqual));
            }
        }
    }
    forms
}

fn sink_free(g: &ColoredDigraph) -> bool {
    (1..=g.n()).all(|v| !g.out_neighbors(v as Vertex).is_empty())
}

#[test]
fn criterion_5_property_suites_hold_within_their_budgets() {
    let mut failures = Vec::new();

    // Tree oracle: 1000 seeded trees with 2..=12 leaves, under 30 seconds.
    let start = Instant::now();
    for seed in 0..1000u64 {
        let leaves = 2 + (seed % 11) as usize;
        let g = best_match_graph(&random_colored_tree(leaves, seed));
        if !is_2cbmg(&g) {
            failures.push(format!("tree leaves={leaves} seed={seed} fails the axioms"));
        }
    }
    let tree_time = start.elapsed();
    if tree_time.as_secs() >= 30 {
        failures.push(format!("tree suite took {tree_time:?}, budget 30s"));
    }

    // Acyclicity: every twin-free class on up to six vertices, sixteen seeded
    // orientation choices each.
    for (i, j) in [(1, 2), (2, 2), (2, 3), (2, 4), (3, 3)] {
        for form in &table()[&(i, j)].c {
            let g = graph_from_mask(i, j, form.bits);
            for seed in 0..16 {
                let choice = OrientationChoice::seeded(&g, seed);
                let oriented = underlying_oriented(&g, &choice)
                    .expect("twin-free graphs accept any orientation choice");
                if topological_order(&oriented.graph).is_err() {
                    failures.push(format!(
                        "({i},{j}) bits {:#x} seed {seed}: oriented graph has a cycle",
                        form.bits
                    ));
                }
            }
        }
    }

    // Bitournaments up to (3,3): bi-transitive, acyclic, and parity-graph
    // membership all coincide.
    for (a, b) in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)] {
        let parity = parity_forms(a, b);
        for mask in 0..1u64 << (a * b) {
            let g = bitournament_from_mask(a, b, mask);
            let bi_transitive = check_n2(&g).is_none();
            let acyclic = topological_order(&g).is_ok();
            if bi_transitive != acyclic {
                failures.push(format!(
                    "bitournament ({a},{b}) mask {mask:#x}: bi-transitive {bi_transitive} \
                     but acyclic {acyclic}"
                ));
            }
            if acyclic && !parity.contains(&canonical_form(&g, CanonPolicy::SwapWhenEqual)) {
                failures.push(format!(
                    "bitournament ({a},{b}) mask {mask:#x}: acyclic but not a parity graph"
                ));
            }
        }
    }

    // Degree-balanced bitournaments on (4,4) are never bi-transitive;
    // exhaustive over the 2^16 masks, under 2 minutes.
    let start = Instant::now();
    let mut balanced = 0u32;
    for mask in 0..1u64 << 16 {
        // Bit r*4+c set means the edge of pair (u_r, w_c) points w->u, so a
        // balanced mask has two set bits in every row and every column.
        let rows = (0..4).all(|r| (mask >> (4 * r) & 0xF).count_ones() == 2);
        let cols = (0..4).all(|c| (mask >> c & 0x1111).count_ones() == 2);
        if !rows || !cols {
            continue;
        }
        balanced += 1;
        let g = bitournament_from_mask(4, 4, mask);
        if check_n2(&g).is_none() {
            failures.push(format!("balanced bitournament mask {mask:#x} is bi-transitive"));
        }
    }
    let balanced_time = start.elapsed();
    if balanced == 0 {
        failures.push("no degree-balanced bitournament was scanned".to_string());
    }
    if balanced_time.as_secs() >= 120 {
        failures.push(format!("balanced scan took {balanced_time:?}, budget 120s"));
    }

    // Block families over 50 seeded specs, and complete-bipartite symmetric
    // components on every enumerated sink-free class up to six vertices.
    let mut rng = Lcg64::new(2024);
    for _ in 0..50 {
        let blocks = 1 + rng.below(4) as usize;
        let sizes: Vec<(usize, usize)> =
            (0..blocks).map(|_| (1 + rng.below(3) as usize, 1 + rng.below(3) as usize)).collect();
        let g = family_graph(&FamilySpec(sizes.clone())).unwrap();
        if !is_2cbmg(&g) {
            failures.push(format!("family {sizes:?} fails the axioms"));
        }
    }
    for (i, j) in [(1, 2), (2, 2), (2, 3), (2, 4), (3, 3)] {
        for form in &table()[&(i, j)].d {
            let g = graph_from_mask(i, j, form.bits);
            let sigma = symmetric_components(&g);
            if !sigma.components.iter().all(|c| c.complete_bipartite) {
                failures.push(format!(
                    "({i},{j}) bits {:#x}: a symmetric component is not complete bipartite",
                    form.bits
                ));
            }
        }
    }

    verdict("5 (property suites)", &failures);
}

#[test]
fn criterion_6_forbidden_pattern_agreement_matrix_is_emitted() {
    let mut failures = Vec::new();
    let mut both_clean = 0u64;
    let mut valid_with_patterns = 0u64;
    let mut invalid_and_clean = 0u64;
    let mut both_flag = 0u64;
    let mut pattern_2_tracks_n2 = true;
    let mut discrepancies = Vec::new();

    for (i, j) in [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3)] {
        for mask in 0..1u64 << (2 * i * j) {
            let g = graph_from_mask(i, j, mask);
            if !sink_free(&g) || !g.is_weakly_connected() {
                continue;
            }
            let valid = is_2cbmg(&g);
            let patterns = match_forbidden_subgraphs(&g);
            let has_pattern_2 = patterns.iter().any(|m| m.pattern == 2);
            if has_pattern_2 != check_n2(&g).is_some() {
                pattern_2_tracks_n2 = false;
            }
            match (valid, patterns.is_empty()) {
                (true, true) => both_clean += 1,
                (true, false) => valid_with_patterns += 1,
                (false, true) => invalid_and_clean += 1,
                (false, false) => both_flag += 1,
            }
            if valid != patterns.is_empty() && discrepancies.len() < 100 {
                discrepancies.push(serde_json::json!({
                    "sides": [i, j],
                    "mask": mask,
                    "graph": g.to_text(),
                    "colors": g.colors_text(),
                    "passes_axioms": valid,
                    "patterns": patterns
                        .iter()
                        .map(|m| serde_json::json!({
                            "pattern": m.pattern,
                            "vertices": m.vertices,
                        }))
                        .collect::<Vec<_>>(),
                }));
            }
        }
    }

    let total = both_clean + valid_with_patterns + invalid_and_clean + both_flag;
    let report = serde_json::json!({
        "universe": "all sink-free weakly connected graphs on splits of up to five vertices",
        "total": total,
        "matrix": {
            "axioms_pass_no_pattern": both_clean,
            "axioms_pass_with_pattern": valid_with_patterns,
            "axioms_fail_no_pattern": invalid_and_clean,
            "axioms_fail_with_pattern": both_flag,
        },
        "pattern_2_matches_bi_transitivity_failure_exactly": pattern_2_tracks_n2,
        "discrepancies_listed": discrepancies.len(),
        "discrepancies": discrepancies,
    });

    let path =
        std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("forbidden_pattern_agreement.json");
    if let Err(e) = std::fs::write(&path, serde_json::to_string_pretty(&report).unwrap()) {
        failures.push(format!("cannot write the agreement report: {e}"));
    }
    println!(
        "  agreement over {total} inputs: {both_clean} clean, {valid_with_patterns} valid \
         with patterns, {invalid_and_clean} invalid without patterns, {both_flag} flagged; \
         report at {}",
        path.display()
    );

    if total == 0 {
        failures.push("the scan produced no inputs".to_string());
    }
    // The second pattern is an exact probe for bi-transitivity; the other two
    // are necessary conditions only, so the matrix may have off-diagonal
    // entries without failing.
    if !pattern_2_tracks_n2 {
        failures.push("pattern 2 disagreed with the bi-transitivity check".to_string());
    }
    verdict("6 (forbidden-pattern agreement matrix)", &failures);
}
