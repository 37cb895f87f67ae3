//! Exhaustive catalogs of two-class digraphs up to isomorphism.
//!
//! Every graph on color classes sized (i, j) is an edge subset of the
//! complete bipartite digraph, i.e. one mask of 2·i·j bits. The scan walks
//! all masks, keeps those passing a [`FilterSet`], and deduplicates by
//! canonical certificate. Five nested catalogs matter downstream:
//!
//! * A: the three neighborhood axioms hold;
//! * B: A and weakly connected;
//! * C: A and no two vertices with identical neighborhoods;
//! * D: A and sink-free;
//! * E: all of the above, i.e. exactly the connected 2-cBMGs without
//!   redundant vertices.
//!
//! The scan is embarrassingly parallel; results merge as set unions, so the
//! outcome does not depend on worker count or chunking.

mod bitgraph;
mod canon;

pub use bitgraph::{graph_from_mask, mask_from_graph, BitGraph, MAX_SIDE};
pub use canon::{
    canonical_form, canonical_form_preserving, permutations, CanonPolicy, CanonicalForm, PermTables,
};

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::ColoredDigraph;

/// Which predicates a mask must pass to be collected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilterSet {
    pub require_n1: bool,
    pub require_n2: bool,
    pub require_n3: bool,
    pub require_connected: bool,
    pub require_no_equivalent: bool,
    pub require_sink_free: bool,
}

impl FilterSet {
    pub const A: FilterSet = FilterSet {
        require_n1: true,
        require_n2: true,
        require_n3: true,
        require_connected: false,
        require_no_equivalent: false,
        require_sink_free: false,
    };
    pub const B: FilterSet = FilterSet { require_connected: true, ..FilterSet::A };
    pub const C: FilterSet = FilterSet { require_no_equivalent: true, ..FilterSet::A };
    pub const D: FilterSet = FilterSet { require_sink_free: true, ..FilterSet::A };
    pub const E: FilterSet = FilterSet {
        require_connected: true,
        require_no_equivalent: true,
        require_sink_free: true,
        ..FilterSet::A
    };

    pub fn from_letter(letter: char) -> Option<FilterSet> {
        match letter.to_ascii_uppercase() {
            'A' => Some(FilterSet::A),
            'B' => Some(FilterSet::B),
            'C' => Some(FilterSet::C),
            'D' => Some(FilterSet::D),
            'E' => Some(FilterSet::E),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("sizes ({i},{j}) need {bits} edge bits, over the limit of {limit}")]
    BudgetExceeded { i: usize, j: usize, bits: usize, limit: usize },
}

/// Knobs for one scan. `workers` = 0 uses the default pool, 1 forces the
/// sequential path, anything else builds a pool of that size (with the
/// `parallel` feature; otherwise every scan is sequential).
#[derive(Debug, Clone, Copy)]
pub struct ScanOptions {
    pub workers: usize,
    pub allow_large: bool,
    pub policy: CanonPolicy,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { workers: 0, allow_large: false, policy: CanonPolicy::default() }
    }
}

/// Default edge-bit budget (all masks of a (3,4) split, 16.7M, stay cheap).
const DEFAULT_BIT_LIMIT: usize = 24;
/// Hard cap with `allow_large`: one u64 scan up to a (3,5) split.
const LARGE_BIT_LIMIT: usize = 30;

fn check_budget(i: usize, j: usize, allow_large: bool) -> Result<(), EnumerationError> {
    let bits = 2 * i * j;
    let limit = if allow_large { LARGE_BIT_LIMIT } else { DEFAULT_BIT_LIMIT };
    if bits > limit || i > MAX_SIDE || j > MAX_SIDE {
        return Err(EnumerationError::BudgetExceeded { i, j, bits, limit });
    }
    Ok(())
}

/// One enumerated catalog: class sizes plus the certificate set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedClass {
    pub sides: (usize, usize),
    pub forms: BTreeSet<CanonicalForm>,
}

impl EnumeratedClass {
    pub fn count(&self) -> usize {
        self.forms.len()
    }
}

/// The five catalogs of one (i, j) split, computed in a single scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSplit {
    pub sides: (usize, usize),
    pub a: BTreeSet<CanonicalForm>,
    pub b: BTreeSet<CanonicalForm>,
    pub c: BTreeSet<CanonicalForm>,
    pub d: BTreeSet<CanonicalForm>,
    pub e: BTreeSet<CanonicalForm>,
}

impl ClassSplit {
    fn empty(sides: (usize, usize)) -> Self {
        ClassSplit {
            sides,
            a: BTreeSet::new(),
            b: BTreeSet::new(),
            c: BTreeSet::new(),
            d: BTreeSet::new(),
            e: BTreeSet::new(),
        }
    }

    fn absorb(mut self, other: Self) -> Self {
        self.a.extend(other.a);
        self.b.extend(other.b);
        self.c.extend(other.c);
        self.d.extend(other.d);
        self.e.extend(other.e);
        self
    }

    pub fn row(&self) -> ClassificationRow {
        ClassificationRow {
            n: self.sides.0 + self.sides.1,
            i: self.sides.0.min(self.sides.1),
            a: self.a.len(),
            b: self.b.len(),
            c: self.c.len(),
            d: self.d.len(),
            e: self.e.len(),
        }
    }
}

/// Counts of the five catalogs for one (n, i) split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassificationRow {
    pub n: usize,
    pub i: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
}

impl std::fmt::Display for ClassificationRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "n={} i={}: A={} B={} C={} D={} E={}",
            self.n, self.i, self.a, self.b, self.c, self.d, self.e
        )
    }
}

/// Folds `step` over all masks below `total`, merging per-chunk states.
/// Merging is a set union at every call site, so the result is independent
/// of how the range gets chunked.
fn fold_masks<S, N, F, M>(total: u64, workers: usize, new: N, step: F, merge: M) -> S
where
    S: Send,
    N: Fn() -> S + Sync + Send,
    F: Fn(&mut S, u64) + Sync + Send,
    M: Fn(S, S) -> S + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if workers != 1 {
        use rayon::prelude::*;
        let run = || {
            (0..total)
                .into_par_iter()
                .fold(&new, |mut s, mask| {
                    step(&mut s, mask);
                    s
                })
                .reduce(&new, &merge)
        };
        return if workers == 0 {
            run()
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .expect("worker pool construction")
                .install(run)
        };
    }
    #[cfg(not(feature = "parallel"))]
    let _ = &merge;
    let mut s = new();
    for mask in 0..total {
        step(&mut s, mask);
    }
    s
}

/// Does one decoded mask pass the filters? Derived rows are computed at
/// most once, in cheapest-first order.
#[inline]
fn passes(bg: &BitGraph, f: &FilterSet) -> bool {
    if f.require_n2 && !bg.n2_ok() {
        return false;
    }
    if f.require_sink_free && !bg.sink_free() {
        return false;
    }
    let need_nn = f.require_n1 || f.require_n3;
    let nn = if need_nn { Some(bg.two_step()) } else { None };
    if f.require_n1 {
        let (nn_u, nn_w) = nn.as_ref().unwrap();
        if !bg.n1_ok(nn_u, nn_w) {
            return false;
        }
    }
    let need_in = f.require_n3 || f.require_connected || f.require_no_equivalent;
    let ins = if need_in { Some(bg.transpose()) } else { None };
    if f.require_n3 {
        let (nn_u, nn_w) = nn.as_ref().unwrap();
        let (in_u, in_w) = ins.as_ref().unwrap();
        if !bg.n3_ok(nn_u, nn_w, in_u, in_w) {
            return false;
        }
    }
    if f.require_connected {
        let (in_u, in_w) = ins.as_ref().unwrap();
        if !bg.is_weakly_connected(in_u, in_w) {
            return false;
        }
    }
    if f.require_no_equivalent {
        let (in_u, in_w) = ins.as_ref().unwrap();
        if bg.has_equivalent_pair(in_u, in_w) {
            return false;
        }
    }
    true
}

/// All edge subsets of the complete bipartite digraph on classes sized
/// (i, j) passing the filters, up to isomorphism.
pub fn enumerate_class(
    i: usize,
    j: usize,
    filters: &FilterSet,
    opts: &ScanOptions,
) -> Result<EnumeratedClass, EnumerationError> {
    check_budget(i, j, opts.allow_large)?;
    let tables = PermTables::normalized(i, j, opts.policy);
    let sides = (i.min(j) as u8, i.max(j) as u8);
    let total = 1u64 << (2 * i * j);
    let forms = fold_masks(
        total,
        opts.workers,
        BTreeSet::new,
        |set: &mut BTreeSet<CanonicalForm>, mask| {
            let bg = BitGraph::decode(i, j, mask);
            if passes(&bg, filters) {
                set.insert(CanonicalForm { sides, bits: tables.min_bits(mask) });
            }
        },
        |mut x, y| {
            x.extend(y);
            x
        },
    );
    Ok(EnumeratedClass { sides: (i, j), forms })
}

/// One scan that sorts every axiom-passing mask into all five catalogs.
pub fn classify_split(
    i: usize,
    j: usize,
    opts: &ScanOptions,
) -> Result<ClassSplit, EnumerationError> {
    check_budget(i, j, opts.allow_large)?;
    let tables = PermTables::normalized(i, j, opts.policy);
    let sides = (i.min(j) as u8, i.max(j) as u8);
    let total = 1u64 << (2 * i * j);
    let split = fold_masks(
        total,
        opts.workers,
        || ClassSplit::empty((i, j)),
        |s: &mut ClassSplit, mask| {
            let bg = BitGraph::decode(i, j, mask);
            if !bg.n2_ok() {
                return;
            }
            let (nn_u, nn_w) = bg.two_step();
            if !bg.n1_ok(&nn_u, &nn_w) {
                return;
            }
            let (in_u, in_w) = bg.transpose();
            if !bg.n3_ok(&nn_u, &nn_w, &in_u, &in_w) {
                return;
            }
            let form = CanonicalForm { sides, bits: tables.min_bits(mask) };
            s.a.insert(form);
            let connected = bg.is_weakly_connected(&in_u, &in_w);
            let no_equivalent = !bg.has_equivalent_pair(&in_u, &in_w);
            let sink_free = bg.sink_free();
            if connected {
                s.b.insert(form);
            }
            if no_equivalent {
                s.c.insert(form);
            }
            if sink_free {
                s.d.insert(form);
            }
            if connected && no_equivalent && sink_free {
                s.e.insert(form);
            }
        },
        ClassSplit::absorb,
    );
    Ok(split)
}

/// Count rows for every requested vertex total: splits (i, n-i) for
/// 2 ≤ i ≤ n/2, plus the (1, 2) split for n = 3.
pub fn classification_table(
    ns: impl IntoIterator<Item = usize>,
    opts: &ScanOptions,
) -> Result<Vec<ClassificationRow>, EnumerationError> {
    let mut rows = Vec::new();
    for n in ns {
        if n == 3 {
            rows.push(classify_split(1, 2, opts)?.row());
            continue;
        }
        for i in 2..=n / 2 {
            rows.push(classify_split(i, n - i, opts)?.row());
        }
    }
    Ok(rows)
}

/// All edge-supersets of `base` (within the complete bipartite digraph on
/// its own classes) passing the filters, deduplicated by class-preserving
/// certificate. The base itself participates when it passes.
pub fn enumerate_extensions(
    base: &ColoredDigraph,
    filters: &FilterSet,
    opts: &ScanOptions,
) -> Result<EnumeratedClass, EnumerationError> {
    let c0 = base.class_vertices(0).to_vec();
    let c1 = base.class_vertices(1).to_vec();
    let (i, j) = (c0.len(), c1.len());
    let bits = 2 * i * j;
    if bits > LARGE_BIT_LIMIT || i > MAX_SIDE || j > MAX_SIDE {
        return Err(EnumerationError::BudgetExceeded { i, j, bits, limit: LARGE_BIT_LIMIT });
    }
    let base_mask = mask_from_graph(base, &c0, &c1);
    let free: Vec<u8> = (0..bits as u8).filter(|&b| base_mask >> b & 1 == 0).collect();
    // The scatter range is what actually costs time; cap it like a scan.
    let free_limit = if opts.allow_large { LARGE_BIT_LIMIT } else { DEFAULT_BIT_LIMIT };
    if free.len() > free_limit {
        return Err(EnumerationError::BudgetExceeded { i, j, bits: free.len(), limit: free_limit });
    }
    let tables = PermTables::preserving(i, j);
    let sides = (i as u8, j as u8);
    let total = 1u64 << free.len();
    let forms = fold_masks(
        total,
        opts.workers,
        BTreeSet::new,
        |set: &mut BTreeSet<CanonicalForm>, subset| {
            let mut mask = base_mask;
            let mut s = subset;
            while s != 0 {
                let k = s.trailing_zeros() as usize;
                s &= s - 1;
                mask |= 1 << free[k];
            }
            let bg = BitGraph::decode(i, j, mask);
            if passes(&bg, filters) {
                set.insert(CanonicalForm { sides, bits: tables.min_bits(mask) });
            }
        },
        |mut x, y| {
            x.extend(y);
            x
        },
    );
    Ok(EnumeratedClass { sides: (i, j), forms })
}

/// Certificate equality under the default policy.
pub fn are_isomorphic(g: &ColoredDigraph, h: &ColoredDigraph) -> bool {
    canonical_form(g, CanonPolicy::default()) == canonical_form(h, CanonPolicy::default())
}
