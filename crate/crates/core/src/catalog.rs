//! Small named graphs used throughout the tests and the CLI.
//!
//! The three `dynkin_e*` trees are the E-type Dynkin diagrams. Their ids
//! follow the labeling `1..n` used in the literature, shifted down by one:
//! the branch vertex is id 1, its short arm is id 0, and the arms are
//! `2-3-1` and `1-4-5-...`.

use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i))).expect("valid star")
}

fn dynkin_e(n: usize) -> Graph {
    let mut edges = vec![(2, 3), (3, 1), (1, 4), (0, 1)];
    edges.extend((5..n).map(|i| (i - 1, i)));
    Graph::from_edges(n, edges).expect("valid E-type tree")
}

/// Six vertices; has a perfect matching.
pub fn dynkin_e6() -> Graph {
    dynkin_e(6)
}

pub fn dynkin_e7() -> Graph {
    dynkin_e(7)
}

pub fn dynkin_e8() -> Graph {
    dynkin_e(8)
}

/// Two 4-vertex paths `0-1-2-3` and `4-5-6-7` joined by rungs `{1,5}` and
/// `{2,6}`. Nondegenerate but not 1-lit.
pub fn ladder_8() -> Graph {
    Graph::from_edges(
        8,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (4, 5),
            (5, 6),
            (6, 7),
            (1, 5),
            (2, 6),
        ],
    )
    .expect("valid ladder")
}
