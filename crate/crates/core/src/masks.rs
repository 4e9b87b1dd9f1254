//! Word-sized fast paths for graphs with at most 64 vertices.
//!
//! States are plain `u64` masks with bit `i` for vertex `i`. Everything here
//! mirrors an [`F2Vector`](crate::f2::F2Vector) operation elsewhere in the
//! crate; the exhaustive searches use these instead.

use crate::graph::Graph;

/// Per-vertex neighbor masks of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveTable {
    nbr: Vec<u64>,
}

impl MoveTable {
    /// Panics if `g` has more than 64 vertices.
    pub fn new(g: &Graph) -> Self {
        assert!(g.vertex_count() <= 64, "MoveTable supports n <= 64");
        MoveTable {
            nbr: (0..g.vertex_count()).map(|v| g.neighbor_mask(v)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.nbr.len()
    }

    pub fn neighbors(&self, s: usize) -> u64 {
        self.nbr[s]
    }

    /// Mask with every vertex set.
    pub fn full(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    /// Lit-only move: if `s` is on, toggle its neighbors.
    #[inline]
    pub fn lit(&self, state: u64, s: usize) -> u64 {
        if state >> s & 1 == 1 {
            state ^ self.nbr[s]
        } else {
            state
        }
    }

    /// Reeder move: flip `s` when an odd number of its neighbors are on.
    #[inline]
    pub fn reeder(&self, state: u64, s: usize) -> u64 {
        if (state & self.nbr[s]).count_ones() & 1 == 1 {
            state ^ (1u64 << s)
        } else {
            state
        }
    }

    #[inline]
    pub fn theta(&self, alpha: u64) -> u64 {
        let mut out = 0;
        let mut rest = alpha;
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            out ^= self.nbr[s];
            rest &= rest - 1;
        }
        out
    }

    /// `B(α,β) = θ(α)(β)`.
    #[inline]
    pub fn b(&self, alpha: u64, beta: u64) -> bool {
        (self.theta(alpha) & beta).count_ones() & 1 == 1
    }

    /// `Q(α) = |T| + e(T) mod 2` for the support `T` of `α`.
    #[inline]
    pub fn q(&self, alpha: u64) -> bool {
        let mut twice_edges = 0u32;
        let mut rest = alpha;
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            twice_edges += (self.nbr[s] & alpha).count_ones();
            rest &= rest - 1;
        }
        (alpha.count_ones() + twice_edges / 2) & 1 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn ladder_forms() {
        let t = MoveTable::new(&catalog::ladder_8());
        // α1+α4+α5+α8 in 1-based labels
        let alpha = 0b1001_1001;
        assert_eq!(t.theta(alpha), 0b0110_0110);
        assert!(!t.q(alpha));
        assert!(t.q(0b0001_1010)); // α2+α4+α5
        assert!(t.q(0b0000_0001));
    }

    #[test]
    fn moves_on_p2() {
        let t = MoveTable::new(&catalog::path(2));
        assert_eq!(t.lit(0b11, 0), 0b01);
        assert_eq!(t.lit(0b10, 0), 0b10);
        assert_eq!(t.reeder(0b10, 0), 0b11);
        assert_eq!(t.full(), 0b11);
    }
}
