//! Canonical certificates for two-class digraphs.
//!
//! A certificate is the minimum edge mask over a relabeling group: all
//! permutations within each color class, with the two classes themselves
//! normalized so the smaller one comes first. When the classes have equal
//! sizes the [`CanonPolicy`] decides whether interchanging them is part of
//! the group; unequal sizes leave nothing to decide because normalization
//! fixes the assignment. Extension scans instead use a class-preserving
//! variant that never reorders the classes.

use serde::Serialize;

use crate::graph::ColoredDigraph;

use super::bitgraph::mask_from_graph;

/// Whether certificates may interchange equally-sized color classes.
/// The recorded counts for square class sizes hold under `SwapWhenEqual`;
/// `NeverSwap` keeps the two colors distinguishable and is retained for
/// comparing the two conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CanonPolicy {
    #[default]
    SwapWhenEqual,
    NeverSwap,
}

/// Total-order certificate: two graphs get equal certificates exactly when
/// some group element maps one onto the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm {
    /// Class sizes in certificate orientation (normalized ascending, except
    /// for class-preserving certificates which keep the input order).
    pub sides: (u8, u8),
    /// Minimal edge mask in the layout of [`super::bitgraph`].
    pub bits: u64,
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{}):{:#x}", self.sides.0, self.sides.1, self.bits)
    }
}

/// All permutations of 0..k in lexicographic order (720 entries at k = 6;
/// callers guard the factorial budget before asking for more).
pub fn permutations(k: usize) -> Vec<Vec<u8>> {
    let mut all = Vec::new();
    let mut current = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn extend(k: usize, current: &mut Vec<u8>, used: &mut [bool], all: &mut Vec<Vec<u8>>) {
        if current.len() == k {
            all.push(current.clone());
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                current.push(v as u8);
                extend(k, current, used, all);
                current.pop();
                used[v] = false;
            }
        }
    }
    extend(k, &mut current, &mut used, &mut all);
    all
}

fn perm_budget_ok(i: usize, j: usize) -> bool {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    fact(i).saturating_mul(fact(j)) <= 10_000_000
}

/// Destination of one edge bit under (p over the left class, q over the
/// right class), optionally transposing the classes. The transposed layout
/// swaps the roles of the two blocks, so a left-to-right edge lands in the
/// high block and vice versa.
#[inline]
fn map_bit(bit: usize, i: usize, j: usize, p: &[u8], q: &[u8], transpose: bool) -> usize {
    let ij = i * j;
    if bit < ij {
        let (a, b) = (bit / j, bit % j);
        if transpose {
            ij + p[a] as usize * j + q[b] as usize
        } else {
            p[a] as usize * j + q[b] as usize
        }
    } else {
        let r = bit - ij;
        let (b, a) = (r / i, r % i);
        if transpose {
            q[b] as usize * i + p[a] as usize
        } else {
            ij + q[b] as usize * i + p[a] as usize
        }
    }
}

#[inline]
fn remap(mask: u64, i: usize, j: usize, p: &[u8], q: &[u8], transpose: bool) -> u64 {
    let mut m = mask;
    let mut out = 0u64;
    while m != 0 {
        let bit = m.trailing_zeros() as usize;
        m &= m - 1;
        out |= 1 << map_bit(bit, i, j, p, q, transpose);
    }
    out
}

/// Precomputed bit-destination tables for a whole scan: `maps[k][bit]` is
/// where `bit` goes under the k-th group element.
pub struct PermTables {
    maps: Vec<Box<[u8]>>,
}

impl PermTables {
    fn build(i: usize, j: usize, transposes: &[bool]) -> Self {
        assert!(perm_budget_ok(i, j), "permutation budget exceeded for sizes ({i},{j})");
        let perms_u = permutations(i);
        let perms_w = permutations(j);
        let width = 2 * i * j;
        let mut maps = Vec::with_capacity(perms_u.len() * perms_w.len() * transposes.len());
        for &t in transposes {
            for p in &perms_u {
                for q in &perms_w {
                    let mut map = vec![0u8; width].into_boxed_slice();
                    for (bit, slot) in map.iter_mut().enumerate() {
                        *slot = map_bit(bit, i, j, p, q, t) as u8;
                    }
                    maps.push(map);
                }
            }
        }
        PermTables { maps }
    }

    /// Tables whose output layout puts the smaller class first.
    pub fn normalized(i: usize, j: usize, policy: CanonPolicy) -> Self {
        let transposes: &[bool] = if i < j {
            &[false]
        } else if i > j {
            &[true]
        } else if policy == CanonPolicy::SwapWhenEqual {
            &[false, true]
        } else {
            &[false]
        };
        Self::build(i, j, transposes)
    }

    /// Tables that keep the class assignment fixed.
    pub fn preserving(i: usize, j: usize) -> Self {
        Self::build(i, j, &[false])
    }

    #[inline]
    pub fn min_bits(&self, mask: u64) -> u64 {
        let mut best = u64::MAX;
        for map in &self.maps {
            let mut m = mask;
            let mut out = 0u64;
            while m != 0 {
                let bit = m.trailing_zeros() as usize;
                m &= m - 1;
                out |= 1 << map[bit];
            }
            if out < best {
                best = out;
            }
        }
        best
    }
}

fn class_mask(g: &ColoredDigraph) -> (Vec<crate::graph::Vertex>, Vec<crate::graph::Vertex>, u64) {
    let c0 = g.class_vertices(0).to_vec();
    let c1 = g.class_vertices(1).to_vec();
    let mask = mask_from_graph(g, &c0, &c1);
    (c0, c1, mask)
}

fn min_bits_lazy(mask: u64, i: usize, j: usize, transposes: &[bool]) -> u64 {
    let perms_u = permutations(i);
    let perms_w = permutations(j);
    let mut best = u64::MAX;
    for &t in transposes {
        for p in &perms_u {
            for q in &perms_w {
                let out = remap(mask, i, j, p, q, t);
                if out < best {
                    best = out;
                }
            }
        }
    }
    best
}

/// Certificate under the full group: permutations within classes, smaller
/// class normalized first, and for equal sizes the interchange per `policy`.
pub fn canonical_form(g: &ColoredDigraph, policy: CanonPolicy) -> CanonicalForm {
    let (c0, c1, mask) = class_mask(g);
    let (i, j) = (c0.len(), c1.len());
    assert!(perm_budget_ok(i, j), "permutation budget exceeded for sizes ({i},{j})");
    let transposes: &[bool] = if i < j {
        &[false]
    } else if i > j {
        &[true]
    } else if policy == CanonPolicy::SwapWhenEqual {
        &[false, true]
    } else {
        &[false]
    };
    CanonicalForm {
        sides: (i.min(j) as u8, i.max(j) as u8),
        bits: min_bits_lazy(mask, i, j, transposes),
    }
}

/// Certificate under class-preserving relabelings only; the class order is
/// kept as given, which is what extension scans over a fixed base need.
pub fn canonical_form_preserving(g: &ColoredDigraph) -> CanonicalForm {
    let (c0, c1, mask) = class_mask(g);
    let (i, j) = (c0.len(), c1.len());
    assert!(perm_budget_ok(i, j), "permutation budget exceeded for sizes ({i},{j})");
    CanonicalForm { sides: (i as u8, j as u8), bits: min_bits_lazy(mask, i, j, &[false]) }
}
