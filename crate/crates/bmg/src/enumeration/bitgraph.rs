//! Fixed-width bit representation of a two-class digraph for the mask scan.
//!
//! A graph on classes sized (i, j) is one `u64` of 2·i·j edge bits: the low
//! i·j bits hold left-to-right edges (bit a·j + b for u_a→w_b) and the high
//! i·j bits hold right-to-left edges (bit i·j + b·i + a for w_b→u_a). Each
//! direction is contiguous, so an extension scan can freeze a base edge set
//! and scatter subsets over the remaining positions.
//!
//! Every predicate here has a slow twin working on [`ColoredDigraph`] via
//! the `axioms` and `structure` modules; the tests compare the two
//! exhaustively on small class sizes.

use crate::graph::{ColoredDigraph, Vertex};

/// Largest class size a `u16` row mask can hold.
pub const MAX_SIDE: usize = 15;

/// Decoded adjacency rows for one edge mask. `out_u[a]` is a j-bit mask of
/// right-side targets, `out_w[b]` an i-bit mask of left-side targets.
#[derive(Debug, Clone, Copy)]
pub struct BitGraph {
    pub i: usize,
    pub j: usize,
    pub out_u: [u16; MAX_SIDE],
    pub out_w: [u16; MAX_SIDE],
}

/// Iterates the set bit positions of a row mask.
#[inline]
fn bits(mut m: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(b)
    })
}

impl BitGraph {
    #[inline]
    pub fn decode(i: usize, j: usize, mask: u64) -> Self {
        debug_assert!(i <= MAX_SIDE && j <= MAX_SIDE && 2 * i * j <= 64);
        let mut out_u = [0u16; MAX_SIDE];
        let mut out_w = [0u16; MAX_SIDE];
        for (a, row) in out_u.iter_mut().enumerate().take(i) {
            *row = (mask >> (a * j)) as u16 & ((1u16 << j) - 1);
        }
        for (b, row) in out_w.iter_mut().enumerate().take(j) {
            *row = (mask >> (i * j + b * i)) as u16 & ((1u16 << i) - 1);
        }
        BitGraph { i, j, out_u, out_w }
    }

    /// In-neighbor rows, as (in_u over W-bits, in_w over U-bits).
    #[inline]
    pub fn transpose(&self) -> ([u16; MAX_SIDE], [u16; MAX_SIDE]) {
        let mut in_u = [0u16; MAX_SIDE];
        let mut in_w = [0u16; MAX_SIDE];
        for a in 0..self.i {
            for b in bits(self.out_u[a]) {
                in_w[b] |= 1 << a;
            }
        }
        for b in 0..self.j {
            for a in bits(self.out_w[b]) {
                in_u[a] |= 1 << b;
            }
        }
        (in_u, in_w)
    }

    /// Two-step successor rows: `nn_u[a]` collects everything reachable from
    /// u_a in exactly two steps (a U-mask), and symmetrically `nn_w[b]`.
    #[inline]
    pub fn two_step(&self) -> ([u16; MAX_SIDE], [u16; MAX_SIDE]) {
        let mut nn_u = [0u16; MAX_SIDE];
        let mut nn_w = [0u16; MAX_SIDE];
        for a in 0..self.i {
            for b in bits(self.out_u[a]) {
                nn_u[a] |= self.out_w[b];
            }
        }
        for b in 0..self.j {
            for a in bits(self.out_w[b]) {
                nn_w[b] |= self.out_u[a];
            }
        }
        (nn_u, nn_w)
    }

    /// Bi-transitivity: any directed path u1→v1→u2→v2 forces the shortcut
    /// u1→v2, i.e. three-step reachability never leaves the out-neighborhood.
    #[inline]
    pub fn n2_ok(&self) -> bool {
        for a in 0..self.i {
            let s1 = self.out_u[a];
            let mut s2 = 0u16;
            for b in bits(s1) {
                s2 |= self.out_w[b];
            }
            let mut s3 = 0u16;
            for a2 in bits(s2) {
                s3 |= self.out_u[a2];
            }
            if s3 & !s1 != 0 {
                return false;
            }
        }
        for b in 0..self.j {
            let s1 = self.out_w[b];
            let mut s2 = 0u16;
            for a in bits(s1) {
                s2 |= self.out_u[a];
            }
            let mut s3 = 0u16;
            for b2 in bits(s2) {
                s3 |= self.out_w[b2];
            }
            if s3 & !s1 != 0 {
                return false;
            }
        }
        true
    }

    /// Independent cross pairs must not see each other's out-neighborhoods
    /// through one extra hop.
    #[inline]
    pub fn n1_ok(&self, nn_u: &[u16; MAX_SIDE], nn_w: &[u16; MAX_SIDE]) -> bool {
        for a in 0..self.i {
            for b in 0..self.j {
                let adjacent = (self.out_u[a] >> b) & 1 != 0 || (self.out_w[b] >> a) & 1 != 0;
                if adjacent {
                    continue;
                }
                if self.out_u[a] & nn_w[b] != 0 || self.out_w[b] & nn_u[a] != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Same-class pairs with a common out-neighbor and no two-step path in
    /// either direction must share in-neighborhoods and have nested outs.
    #[inline]
    pub fn n3_ok(
        &self,
        nn_u: &[u16; MAX_SIDE],
        nn_w: &[u16; MAX_SIDE],
        in_u: &[u16; MAX_SIDE],
        in_w: &[u16; MAX_SIDE],
    ) -> bool {
        for a in 0..self.i {
            for a2 in a + 1..self.i {
                if self.out_u[a] & self.out_u[a2] == 0 {
                    continue;
                }
                if (nn_u[a] >> a2) & 1 != 0 || (nn_u[a2] >> a) & 1 != 0 {
                    continue;
                }
                if in_u[a] != in_u[a2] {
                    return false;
                }
                let (x, y) = (self.out_u[a], self.out_u[a2]);
                if x & !y != 0 && y & !x != 0 {
                    return false;
                }
            }
        }
        for b in 0..self.j {
            for b2 in b + 1..self.j {
                if self.out_w[b] & self.out_w[b2] == 0 {
                    continue;
                }
                if (nn_w[b] >> b2) & 1 != 0 || (nn_w[b2] >> b) & 1 != 0 {
                    continue;
                }
                if in_w[b] != in_w[b2] {
                    return false;
                }
                let (x, y) = (self.out_w[b], self.out_w[b2]);
                if x & !y != 0 && y & !x != 0 {
                    return false;
                }
            }
        }
        true
    }

    #[inline]
    pub fn sink_free(&self) -> bool {
        self.out_u[..self.i].iter().all(|&m| m != 0) && self.out_w[..self.j].iter().all(|&m| m != 0)
    }

    /// Two vertices are interchangeable when out- and in-neighborhoods agree
    /// as vertex sets. Across the two classes that can only happen for a
    /// pair of isolated vertices.
    #[inline]
    pub fn has_equivalent_pair(&self, in_u: &[u16; MAX_SIDE], in_w: &[u16; MAX_SIDE]) -> bool {
        for a in 0..self.i {
            for a2 in a + 1..self.i {
                if self.out_u[a] == self.out_u[a2] && in_u[a] == in_u[a2] {
                    return true;
                }
            }
        }
        for b in 0..self.j {
            for b2 in b + 1..self.j {
                if self.out_w[b] == self.out_w[b2] && in_w[b] == in_w[b2] {
                    return true;
                }
            }
        }
        let iso_u = (0..self.i).any(|a| self.out_u[a] == 0 && in_u[a] == 0);
        let iso_w = (0..self.j).any(|b| self.out_w[b] == 0 && in_w[b] == 0);
        iso_u && iso_w
    }

    #[inline]
    pub fn is_weakly_connected(&self, in_u: &[u16; MAX_SIDE], in_w: &[u16; MAX_SIDE]) -> bool {
        let n = self.i + self.j;
        if n <= 1 {
            return true;
        }
        let (mut seen_u, mut seen_w) = if self.i > 0 { (1u16, 0u16) } else { (0u16, 1u16) };
        loop {
            let mut next_w = seen_w;
            for a in bits(seen_u) {
                next_w |= self.out_u[a] | in_u[a];
            }
            let mut next_u = seen_u;
            for b in bits(next_w) {
                next_u |= self.out_w[b] | in_w[b];
            }
            if next_u == seen_u && next_w == seen_w {
                break;
            }
            seen_u = next_u;
            seen_w = next_w;
        }
        seen_u.count_ones() as usize == self.i && seen_w.count_ones() as usize == self.j
    }
}

/// Reads a graph's edge mask in the scan layout, mapping `u_list` onto the
/// left class and `w_list` onto the right class in the given order.
pub fn mask_from_graph(g: &ColoredDigraph, u_list: &[Vertex], w_list: &[Vertex]) -> u64 {
    let i = u_list.len();
    let j = w_list.len();
    assert!(2 * i * j <= 64, "edge mask does not fit in 64 bits");
    let mut mask = 0u64;
    for (a, &u) in u_list.iter().enumerate() {
        for (b, &w) in w_list.iter().enumerate() {
            if g.has_edge(u, w) {
                mask |= 1 << (a * j + b);
            }
            if g.has_edge(w, u) {
                mask |= 1 << (i * j + b * i + a);
            }
        }
    }
    mask
}

/// Materializes a mask as a graph: the left class becomes vertices 1..=i
/// with color 0, the right class i+1..=i+j with color 1.
pub fn graph_from_mask(i: usize, j: usize, mask: u64) -> ColoredDigraph {
    let bg = BitGraph::decode(i, j, mask);
    let mut colors = vec![0u8; i + j];
    for c in colors.iter_mut().skip(i) {
        *c = 1;
    }
    let mut edges = Vec::new();
    for a in 0..i {
        for b in bits(bg.out_u[a]) {
            edges.push((a as Vertex + 1, (i + b) as Vertex + 1));
        }
    }
    for b in 0..j {
        for a in bits(bg.out_w[b]) {
            edges.push(((i + b) as Vertex + 1, a as Vertex + 1));
        }
    }
    ColoredDigraph::new(i + j, &colors, &edges).expect("mask decodes to a valid bipartite graph")
}
