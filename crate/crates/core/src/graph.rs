//! Finite simple graphs on vertices `0..n` and their text format.
//!
//! File format: lines starting with `#` are comments, the first other line
//! holds the vertex count `n`, and every following line is an edge `u v`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::f2::F2Vector;

/// Undirected edge, always stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(usize, usize);

impl Edge {
    /// Panics on a self-loop.
    pub fn new(u: usize, v: usize) -> Self {
        assert_ne!(u, v, "self-loop {u}");
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting out-of-range ids, self-loops and repeats.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v || !set.insert(Edge::new(u, v)) {
                return Err(Error::InvalidEdge(u, v));
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    fn from_edge_set(n: usize, edges: BTreeSet<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.edges.contains(&Edge::new(u, v))
    }

    /// Neighbor indicator of `v`, i.e. `θ(α_v) = Σ_{vt∈R} f_t`.
    pub fn neighbor_vector(&self, v: usize) -> F2Vector {
        F2Vector::from_indices(self.n, self.adj[v].iter().copied())
    }

    /// Neighbor indicator as a bitmask. Requires `n <= 64`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        assert!(self.n <= 64, "neighbor_mask needs n <= 64");
        self.adj[v].iter().fold(0, |m, &t| m | (1u64 << t))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &t in &self.adj[v] {
                if !seen[t] {
                    seen[t] = true;
                    count += 1;
                    queue.push_back(t);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    /// Inserts a new vertex `z = n` on edge `{x,y}`, replacing it by `{x,z}`
    /// and `{y,z}`.
    pub fn subdivide_edge(&self, x: usize, y: usize) -> Result<Graph> {
        if !self.has_edge(x, y) {
            return Err(Error::EdgeNotFound(x, y));
        }
        let z = self.n;
        let mut edges = self.edges.clone();
        edges.remove(&Edge::new(x, y));
        edges.insert(Edge::new(x, z));
        edges.insert(Edge::new(y, z));
        Ok(Self::from_edge_set(self.n + 1, edges))
    }

    /// Path through the tree from `from` to `to`, both endpoints included.
    /// Returns `None` if they lie in different components.
    pub fn path_between(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for &t in &self.adj[v] {
                if parent[t] == usize::MAX {
                    parent[t] = v;
                    queue.push_back(t);
                }
            }
        }
        if parent[to] == usize::MAX {
            return None;
        }
        let mut path = vec![to];
        let mut v = to;
        while v != from {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        Some(path)
    }

    /// Serializes in the graph file format with edges sorted.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.0, e.1));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Graph, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
        let n: usize = header.parse().map_err(|_| ParseError::Malformed {
            line: hline,
            msg: format!("expected vertex count, found {header:?}"),
        })?;
        if n == 0 {
            return Err(ParseError::Malformed {
                line: hline,
                msg: "vertex count must be at least 1".into(),
            });
        }

        let mut edges = BTreeSet::new();
        for (line, content) in lines {
            let parts: Vec<&str> = content.split_whitespace().collect();
            let [a, b] = parts.as_slice() else {
                return Err(ParseError::Malformed {
                    line,
                    msg: format!("expected \"u v\", found {content:?}"),
                });
            };
            let parse_id = |s: &str| {
                s.parse::<usize>().map_err(|_| ParseError::Malformed {
                    line,
                    msg: format!("invalid vertex id {s:?}"),
                })
            };
            let (u, v) = (parse_id(a)?, parse_id(b)?);
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(ParseError::VertexOutOfRange { line, vertex, n });
                }
            }
            if u == v {
                return Err(ParseError::SelfLoop { line, vertex: u });
            }
            if !edges.insert(Edge::new(u, v)) {
                return Err(ParseError::DuplicateEdge { line, u, v });
            }
        }
        Ok(Self::from_edge_set(n, edges))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.0, e.1)?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn parse_single_edge() {
        let g = Graph::parse("2\n0 1\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![Edge::new(0, 1)]);
    }

    #[test]
    fn parse_ladder() {
        let g = Graph::parse("8\n0 1\n1 2\n2 3\n4 5\n5 6\n6 7\n1 5\n2 6\n").unwrap();
        assert_eq!(g, catalog::ladder_8());
        assert_eq!(g.neighbors(1), &[0, 2, 5]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            Graph::parse("3\n0 1\n0 3\n"),
            Err(ParseError::VertexOutOfRange {
                line: 3,
                vertex: 3,
                n: 3
            })
        );
        assert_eq!(
            Graph::parse("3\n1 1\n"),
            Err(ParseError::SelfLoop { line: 2, vertex: 1 })
        );
        assert_eq!(
            Graph::parse("3\n0 1\n1 0\n"),
            Err(ParseError::DuplicateEdge {
                line: 3,
                u: 1,
                v: 0
            })
        );
        assert!(matches!(
            Graph::parse("3\n0 1 2\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse("x\n"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
        assert_eq!(
            Graph::parse("# only a comment\n"),
            Err(ParseError::MissingHeader)
        );
    }

    #[test]
    fn comments_are_skipped() {
        let g = Graph::parse("# header\n3\n# edge list\n0 1\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn serialize() {
        assert_eq!(catalog::path(2).to_text(), "2\n0 1\n");
        assert_eq!(Graph::empty(1).to_text(), "1\n");
        let g = catalog::ladder_8();
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn tree_and_path_recognition() {
        let p4 = catalog::path(4);
        assert!(p4.is_tree() && p4.is_path());
        let star = catalog::star(3);
        assert!(star.is_tree() && !star.is_path());
        assert_eq!(star.degree(0), 3);
        let ladder = catalog::ladder_8();
        assert!(!ladder.is_tree());
        assert!(Graph::empty(1).is_tree());
        assert!(!Graph::empty(2).is_tree());
    }

    #[test]
    fn subdivide() {
        let p3 = catalog::path(2).subdivide_edge(0, 1).unwrap();
        assert_eq!(p3.vertex_count(), 3);
        assert_eq!(
            p3.edges().collect::<Vec<_>>(),
            vec![Edge::new(0, 2), Edge::new(1, 2)]
        );
        assert!(p3.is_path());
        assert_eq!(
            catalog::path(3).subdivide_edge(0, 2),
            Err(Error::EdgeNotFound(0, 2))
        );
    }

    #[test]
    fn from_edges_validates() {
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
        assert!(Graph::from_edges(2, [(1, 1)]).is_err());
        assert!(Graph::from_edges(2, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn path_between_in_tree() {
        let t = catalog::dynkin_e6();
        // 1-based labels 3 and 6 are ids 2 and 5; route 3-4-2-5-6
        assert_eq!(t.path_between(2, 5).unwrap(), vec![2, 3, 1, 4, 5]);
    }
}
