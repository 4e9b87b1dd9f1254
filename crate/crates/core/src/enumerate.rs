//! Isomorphism-class enumeration of small trees and connected graphs.
//!
//! Trees are grown one leaf at a time and deduplicated by a canonical
//! parenthesis encoding rooted at the centroid. Connected graphs are grown
//! one vertex at a time and deduplicated by a refinement-guided minimum
//! adjacency code.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::Graph;
use crate::matching::tree_perfect_matching;

/// Vertices minimizing the largest component left after their removal.
/// A tree has one or two of them.
pub fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let (order, parent) = dfs_order(g, 0);
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            size[p] += size[v];
        }
    }
    let worst: Vec<usize> = (0..n)
        .map(|v| {
            let up = n - size[v];
            g.neighbors(v)
                .iter()
                .filter(|&&t| parent[t] == Some(v))
                .map(|&t| size[t])
                .fold(up, usize::max)
        })
        .collect();
    let best = *worst.iter().min().unwrap();
    (0..n).filter(|&v| worst[v] == best).collect()
}

/// Preorder from `root` plus parent pointers.
fn dfs_order(g: &Graph, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
    let n = g.vertex_count();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &t in g.neighbors(v) {
            if !seen[t] {
                seen[t] = true;
                parent[t] = Some(v);
                stack.push(t);
            }
        }
    }
    (order, parent)
}

/// AHU encoding of the tree rooted at `root`: `(` children sorted `)`.
pub fn rooted_code(g: &Graph, root: usize) -> Vec<u8> {
    let (order, parent) = dfs_order(g, root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); g.vertex_count()];
    for &v in order.iter().rev() {
        let mut children: Vec<Vec<u8>> = g
            .neighbors(v)
            .iter()
            .filter(|&&t| parent[t] == Some(v))
            .map(|&t| std::mem::take(&mut codes[t]))
            .collect();
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        codes[v] = code;
    }
    std::mem::take(&mut codes[root])
}

/// Canonical form of a tree: equal exactly for isomorphic trees.
pub fn tree_canonical_code(g: &Graph) -> Vec<u8> {
    debug_assert!(g.is_tree());
    centroids(g)
        .into_iter()
        .map(|c| rooted_code(g, c))
        .min()
        .unwrap_or_default()
}

/// Rebuilds a tree from a rooted parenthesis code, numbering vertices in
/// preorder (the root is 0).
pub fn tree_from_code(code: &[u8]) -> Graph {
    let n = code.iter().filter(|&&c| c == b'(').count();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for &c in code {
        match c {
            b'(' => {
                if let Some(&p) = stack.last() {
                    edges.push((p, next));
                }
                stack.push(next);
                next += 1;
            }
            b')' => {
                stack.pop();
            }
            other => panic!("bad tree code byte {other}"),
        }
    }
    Graph::from_edges(n, edges).expect("tree code describes a tree")
}

/// One representative per isomorphism class of trees on `n` vertices, in
/// increasing canonical-code order. Empty for `n == 0`.
pub fn free_trees(n: usize) -> Vec<Graph> {
    free_trees_up_to(n).pop().unwrap_or_default()
}

/// `result[k]` holds the trees on `k` vertices, for `k` in `0..=max_n`.
pub fn free_trees_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![Vec::new()];
    if max_n == 0 {
        return levels;
    }
    let mut current: Vec<Graph> = vec![Graph::empty(1)];
    levels.push(current.clone());
    for k in 2..=max_n {
        let mut codes = BTreeSet::new();
        for t in &current {
            for v in 0..t.vertex_count() {
                let grown = grow_leaf(t, v);
                codes.insert(tree_canonical_code(&grown));
            }
        }
        current = codes.iter().map(|c| tree_from_code(c)).collect();
        debug_assert!(current.iter().all(|t| t.vertex_count() == k));
        levels.push(current.clone());
    }
    levels
}

fn grow_leaf(t: &Graph, v: usize) -> Graph {
    let n = t.vertex_count();
    let edges = t
        .edges()
        .map(|e| e.endpoints())
        .chain(std::iter::once((v, n)));
    Graph::from_edges(n + 1, edges).expect("leaf addition keeps the graph simple")
}

/// Trees on `n` vertices with a perfect matching, one per isomorphism class.
/// Odd `n` yields nothing.
pub fn enumerate_pm_trees(n: usize) -> impl Iterator<Item = Graph> {
    let trees = if n >= 2 && n.is_multiple_of(2) {
        free_trees(n)
    } else {
        Vec::new()
    };
    trees.into_iter().filter(has_perfect_matching)
}

fn has_perfect_matching(t: &Graph) -> bool {
    matches!(tree_perfect_matching(t), Ok(Some(_)))
}

/// `result[k]` holds the perfect-matching trees on `k` vertices.
pub fn pm_trees_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    free_trees_up_to(max_n)
        .into_iter()
        .map(|level| level.into_iter().filter(has_perfect_matching).collect())
        .collect()
}

/// Stable color refinement starting from degrees. Colors are canonical:
/// they depend only on the isomorphism type of each vertex's neighborhood
/// structure, never on its id.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = colors.iter().collect::<BTreeSet<_>>().len();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&t| colors[t]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let index: BTreeMap<&(usize, Vec<usize>), usize> = signatures
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let next: Vec<usize> = signatures.iter().map(|s| index[s]).collect();
        let next_classes = index.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

/// Canonical certificate of a small graph (`n <= 11`): the vertex count and
/// the least upper-triangle adjacency code over all orderings that list the
/// refined color classes in order.
pub fn graph_certificate(g: &Graph) -> (usize, u64) {
    let n = g.vertex_count();
    assert!(n <= 11, "graph_certificate supports n <= 11");
    let colors = refine_colors(g);
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by_key(|&v| colors[v]);
    let slot_colors: Vec<usize> = slots.iter().map(|&v| colors[v]).collect();

    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search_orderings(g, &colors, &slot_colors, &mut order, &mut used, &mut best);
    (n, best)
}

fn search_orderings(
    g: &Graph,
    colors: &[usize],
    slot_colors: &[usize],
    order: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut u64,
) {
    let n = g.vertex_count();
    if order.len() == n {
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(order[i], order[j]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        *best = (*best).min(code);
        return;
    }
    let want = slot_colors[order.len()];
    for v in 0..n {
        if !used[v] && colors[v] == want {
            used[v] = true;
            order.push(v);
            search_orderings(g, colors, slot_colors, order, used, best);
            order.pop();
            used[v] = false;
        }
    }
}

fn graph_from_certificate(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).expect("certificate describes a simple graph")
}

/// All connected graphs on `n` vertices up to isomorphism (`1 <= n <= 10`),
/// relabeled into certificate order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    connected_graphs_up_to(n).pop().unwrap_or_default()
}

/// `result[k]` holds the connected graphs on `k` vertices.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    assert!(max_n <= 10, "connected graph enumeration supports n <= 10");
    let mut levels = vec![Vec::new()];
    if max_n == 0 {
        return levels;
    }
    let mut current = vec![Graph::empty(1)];
    levels.push(current.clone());
    for k in 2..=max_n {
        // every connected graph has a vertex whose removal leaves it connected
        let mut certs = BTreeSet::new();
        for g in &current {
            let base: Vec<(usize, usize)> = g.edges().map(|e| e.endpoints()).collect();
            let m = k - 1;
            for subset in 1u32..(1 << m) {
                let edges = base
                    .iter()
                    .copied()
                    .chain((0..m).filter(|&i| subset >> i & 1 == 1).map(|i| (i, m)));
                let grown = Graph::from_edges(k, edges).expect("simple");
                certs.insert(graph_certificate(&grown));
            }
        }
        current = certs
            .into_iter()
            .map(|(n, c)| graph_from_certificate(n, c))
            .collect();
        levels.push(current.clone());
    }
    levels
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn free_tree_counts() {
        // number of unlabeled trees on n vertices
        let expected = [0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        let levels = free_trees_up_to(12);
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(levels[n].len(), *want, "n = {n}");
        }
    }

    #[test]
    fn small_pm_tree_counts() {
        assert_eq!(enumerate_pm_trees(2).count(), 1);
        let four: Vec<Graph> = enumerate_pm_trees(4).collect();
        assert_eq!(four.len(), 1);
        assert!(four[0].is_path());
        assert_eq!(enumerate_pm_trees(5).count(), 0);
        assert_eq!(enumerate_pm_trees(0).count(), 0);
    }

    #[test]
    fn centroid_code_is_label_independent() {
        let a = catalog::dynkin_e6();
        // same tree with reversed ids
        let b = Graph::from_edges(6, a.edges().map(|e| (5 - e.lo(), 5 - e.hi()))).unwrap();
        assert_eq!(tree_canonical_code(&a), tree_canonical_code(&b));
        assert_ne!(
            tree_canonical_code(&a),
            tree_canonical_code(&catalog::path(6))
        );
    }

    #[test]
    fn code_roundtrip() {
        for t in free_trees(9) {
            let code = tree_canonical_code(&t);
            assert_eq!(tree_canonical_code(&tree_from_code(&code)), code);
        }
    }

    #[test]
    fn two_centroids_on_even_path() {
        assert_eq!(centroids(&catalog::path(4)), vec![1, 2]);
        assert_eq!(centroids(&catalog::star(4)), vec![0]);
    }

    #[test]
    fn connected_graph_counts() {
        // number of connected unlabeled graphs on n vertices
        let expected = [0, 1, 1, 2, 6, 21, 112, 853];
        let levels = connected_graphs_up_to(7);
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(levels[n].len(), *want, "n = {n}");
            assert!(levels[n].iter().all(Graph::is_connected));
        }
    }

    #[test]
    fn certificate_detects_isomorphism() {
        let a = catalog::ladder_8();
        let perm = [3, 7, 0, 5, 1, 6, 2, 4];
        let b = Graph::from_edges(8, a.edges().map(|e| (perm[e.lo()], perm[e.hi()]))).unwrap();
        assert_eq!(graph_certificate(&a), graph_certificate(&b));
        assert_ne!(graph_certificate(&a), graph_certificate(&catalog::path(8)));
    }
}
