//! Perfect matchings of trees and the alternating-path counts `a_s`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A set of pairwise disjoint edges of some host graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    n: usize,
    pairs: BTreeSet<Edge>,
    mate: Vec<Option<usize>>,
}

impl Matching {
    /// Checks that every pair is an edge of `g` and no vertex repeats.
    pub fn new(g: &Graph, pairs: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let n = g.vertex_count();
        let mut mate = vec![None; n];
        let mut set = BTreeSet::new();
        for e in pairs {
            let (u, v) = e.endpoints();
            if !g.has_edge(u, v) {
                return Err(Error::EdgeNotFound(u, v));
            }
            if mate[u].is_some() || mate[v].is_some() {
                return Err(Error::InvalidEdge(u, v));
            }
            mate[u] = Some(v);
            mate[v] = Some(u);
            set.insert(e);
        }
        Ok(Matching {
            n,
            pairs: set,
            mate,
        })
    }

    pub fn pairs(&self) -> impl Iterator<Item = Edge> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_perfect(&self) -> bool {
        2 * self.pairs.len() == self.n
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        u != v && self.mate.get(u).copied().flatten() == Some(v)
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs.iter()).finish()
    }
}

/// The unique perfect matching of a tree, found by leaf peeling: a leaf must
/// be matched to its only remaining neighbor, after which both are removed.
pub fn tree_perfect_matching(g: &Graph) -> Result<Option<Matching>> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut pairs = Vec::with_capacity(n / 2);

    while let Some(leaf) = stack.pop() {
        if removed[leaf] {
            continue;
        }
        let Some(&partner) = g.neighbors(leaf).iter().find(|&&t| !removed[t]) else {
            // stranded: every neighbor was already taken
            return Ok(None);
        };
        removed[leaf] = true;
        removed[partner] = true;
        pairs.push(Edge::new(leaf, partner));
        for &t in g.neighbors(partner) {
            if !removed[t] {
                degree[t] -= 1;
                if degree[t] <= 1 {
                    stack.push(t);
                }
            }
        }
    }
    if removed.iter().any(|r| !r) {
        return Ok(None);
    }
    Matching::new(g, pairs).map(Some)
}

/// Perfect matchings of an arbitrary graph by backtracking, stopping after
/// `limit` results. Exponential; meant for small graphs.
pub fn enumerate_perfect_matchings(g: &Graph, limit: usize) -> Vec<Matching> {
    fn go(
        g: &Graph,
        covered: &mut [bool],
        cur: &mut Vec<Edge>,
        out: &mut Vec<Matching>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        let Some(v) = covered.iter().position(|c| !c) else {
            out.push(Matching::new(g, cur.iter().copied()).expect("disjoint graph edges"));
            return;
        };
        covered[v] = true;
        for &t in g.neighbors(v) {
            if !covered[t] {
                covered[t] = true;
                cur.push(Edge::new(v, t));
                go(g, covered, cur, out, limit);
                cur.pop();
                covered[t] = false;
            }
        }
        covered[v] = false;
    }
    let mut out = Vec::new();
    if g.vertex_count().is_multiple_of(2) {
        go(
            g,
            &mut vec![false; g.vertex_count()],
            &mut Vec::new(),
            &mut out,
            limit,
        );
    }
    out
}

fn check_tree_pm(g: &Graph, m: &Matching) -> Result<()> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    if m.n != g.vertex_count() || !m.is_perfect() || m.pairs().any(|e| !g.has_edge(e.lo(), e.hi()))
    {
        return Err(Error::NotPerfect);
    }
    Ok(())
}

/// `A_s`: the far endpoints of alternating paths that leave `s` through its
/// matched edge and end on a matched edge. The matched edge alone counts, so
/// the mate of `s` is always a member. Returned sorted.
pub fn alternating_set(g: &Graph, m: &Matching, s: usize) -> Result<Vec<usize>> {
    check_tree_pm(g, m)?;
    g.check_vertex(s)?;
    Ok(alternating_set_unchecked(g, m, s))
}

fn alternating_set_unchecked(g: &Graph, m: &Matching, s: usize) -> Vec<usize> {
    let mut out = Vec::new();
    // (vertex reached by a matched edge, vertex it came from)
    let first = m.mate(s).expect("perfect matching");
    let mut stack = vec![(first, s)];
    while let Some((v, from)) = stack.pop() {
        out.push(v);
        for &t in g.neighbors(v) {
            if t == from || m.contains(v, t) {
                continue;
            }
            let next = m.mate(t).expect("perfect matching");
            stack.push((next, t));
        }
    }
    out.sort_unstable();
    out
}

/// `a_s = |A_s|` for every vertex.
pub fn alternating_counts(g: &Graph, m: &Matching) -> Result<Vec<usize>> {
    check_tree_pm(g, m)?;
    Ok((0..g.vertex_count())
        .map(|s| alternating_set_unchecked(g, m, s).len())
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeType {
    Odd,
    Even,
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeType::Odd => "odd",
            EdgeType::Even => "even",
        })
    }
}

/// Parity of `a_s + a_t` for the edge `{s,t}`.
pub fn edge_type(g: &Graph, m: &Matching, s: usize, t: usize) -> Result<EdgeType> {
    check_tree_pm(g, m)?;
    if !g.has_edge(s, t) {
        return Err(Error::EdgeNotFound(s, t));
    }
    let a = alternating_set_unchecked(g, m, s).len() + alternating_set_unchecked(g, m, t).len();
    Ok(if a % 2 == 1 {
        EdgeType::Odd
    } else {
        EdgeType::Even
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn pairs(m: &Matching) -> Vec<(usize, usize)> {
        m.pairs().map(Edge::endpoints).collect()
    }

    // E6 tree in 1-based labels: 3-4-2-5-6 with 1 hanging off 2.
    fn label(ids: &[usize]) -> Vec<usize> {
        ids.iter().map(|i| i + 1).collect()
    }

    #[test]
    fn path_matching() {
        let m = tree_perfect_matching(&catalog::path(4)).unwrap().unwrap();
        assert_eq!(pairs(&m), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn star_has_none() {
        assert_eq!(tree_perfect_matching(&catalog::star(3)).unwrap(), None);
        assert_eq!(tree_perfect_matching(&catalog::path(3)).unwrap(), None);
        assert_eq!(tree_perfect_matching(&Graph::empty(1)).unwrap(), None);
    }

    #[test]
    fn not_a_tree() {
        assert_eq!(
            tree_perfect_matching(&catalog::ladder_8()),
            Err(Error::NotATree)
        );
    }

    #[test]
    fn e6_matching_and_alternating_sets() {
        let g = catalog::dynkin_e6();
        let m = tree_perfect_matching(&g).unwrap().unwrap();
        // labels {1,2},{3,4},{5,6}
        assert_eq!(pairs(&m), vec![(0, 1), (2, 3), (4, 5)]);
        assert_eq!(label(&alternating_set(&g, &m, 4).unwrap()), vec![6]);
        assert_eq!(label(&alternating_set(&g, &m, 5).unwrap()), vec![1, 5]);
        assert_eq!(label(&alternating_set(&g, &m, 0).unwrap()), vec![2, 3, 6]);
        let a = alternating_counts(&g, &m).unwrap();
        assert_eq!(a[4], 1);
        assert_eq!(a[5], 2);
        assert_eq!(a[0], 3);
    }

    #[test]
    fn e6_edge_types() {
        let g = catalog::dynkin_e6();
        let m = tree_perfect_matching(&g).unwrap().unwrap();
        assert_eq!(edge_type(&g, &m, 4, 5).unwrap(), EdgeType::Odd);
        assert_eq!(edge_type(&g, &m, 0, 1).unwrap(), EdgeType::Even);
        assert_eq!(edge_type(&g, &m, 0, 4), Err(Error::EdgeNotFound(0, 4)));
    }

    #[test]
    fn p4_middle_edge_is_even() {
        let g = catalog::path(4);
        let m = tree_perfect_matching(&g).unwrap().unwrap();
        assert_eq!(alternating_counts(&g, &m).unwrap(), vec![2, 1, 1, 2]);
        assert_eq!(edge_type(&g, &m, 1, 2).unwrap(), EdgeType::Even);
    }

    #[test]
    fn ladder_has_one_perfect_matching() {
        let g = catalog::ladder_8();
        let all = enumerate_perfect_matchings(&g, 10);
        assert_eq!(all.len(), 1);
        assert_eq!(pairs(&all[0]), vec![(0, 1), (2, 3), (4, 5), (6, 7)]);
        // a 4-cycle has two
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(enumerate_perfect_matchings(&c4, 10).len(), 2);
        assert_eq!(enumerate_perfect_matchings(&c4, 1).len(), 1);
    }

    #[test]
    fn rejects_non_perfect() {
        let g = catalog::path(4);
        let m = Matching::new(&g, [Edge::new(1, 2)]).unwrap();
        assert_eq!(alternating_set(&g, &m, 0), Err(Error::NotPerfect));
        assert!(Matching::new(&g, [Edge::new(0, 1), Edge::new(1, 2)]).is_err());
        assert!(Matching::new(&g, [Edge::new(0, 2)]).is_err());
    }
}
