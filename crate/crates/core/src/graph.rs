//! Simple undirected graphs over contiguous vertex ids, vertex sets and
//! two-colorings.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Vertex identifier. Vertices of a graph of order `n` are `0..n`.
pub type Vertex = usize;

/// Reasons a list of edges cannot form a simple graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: Vertex, n: usize },
    SelfLoop { vertex: Vertex },
    DuplicateEdge { u: Vertex, v: Vertex },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph of order {n}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// An immutable simple undirected graph.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted lexicographically.
/// Adjacency lists are symmetric and sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates (in either
    /// orientation) and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            let (u, v) = w[0];
            return Err(GraphError::DuplicateEdge { u, v });
        }
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.n
    }

    /// `G - v`. Ids below `v` keep their value, ids above `v` shift down by
    /// one (see [`deleted_id`] and [`restored_id`]).
    pub fn induced_delete(&self, v: Vertex) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (deleted_id(a, v), deleted_id(b, v)))
            .collect::<Vec<_>>();
        let mut adj = Vec::with_capacity(self.n - 1);
        for (u, list) in self.adj.iter().enumerate() {
            if u == v {
                continue;
            }
            adj.push(
                list.iter()
                    .filter(|&&w| w != v)
                    .map(|&w| deleted_id(w, v))
                    .collect(),
            );
        }
        Ok(Graph {
            n: self.n - 1,
            edges,
            adj,
        })
    }

    /// Relabels vertices: vertex `u` becomes `perm[u]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabeling preserves simplicity")
    }

    /// `N[s] = s ∪ N(s)`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            for &w in &self.adj[v] {
                out.insert(w);
            }
        }
        out
    }

    /// `N(s)`, the vertices adjacent to some member of `s`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for v in s.iter() {
            for &w in &self.adj[v] {
                out.insert(w);
            }
        }
        out
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|v| self.adj[v].iter().all(|&w| !s.contains(w)))
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices().filter(|&v| self.adj[v].is_empty())
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Two-colors the graph by BFS from each uncolored vertex in ascending
    /// order, or returns an odd cycle.
    pub fn bipartition(&self) -> Bipartition {
        let mut side: Vec<Option<Side>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        let mut queue = VecDeque::new();
        for root in self.vertices() {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Side::A);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(su.other());
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => {
                            return Bipartition::OddCycle(tree_cycle(u, w, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartition::Bipartite(TwoColoring {
            side: side.into_iter().map(|s| s.unwrap()).collect(),
        })
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::Bipartite(_))
    }
}

/// Closes the BFS-tree paths from `u` and `w` at their lowest common
/// ancestor. `u` and `w` are adjacent and at equal depth parity, so the
/// cycle is odd.
fn tree_cycle(u: Vertex, w: Vertex, parent: &[Vertex], depth: &[usize]) -> Vec<Vertex> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Id of `u` in `G - v`. `u` must differ from `v`.
pub fn deleted_id(u: Vertex, v: Vertex) -> Vertex {
    debug_assert_ne!(u, v);
    if u < v {
        u
    } else {
        u - 1
    }
}

/// Id in `G` of vertex `u` of `G - v`.
pub fn restored_id(u: Vertex, v: Vertex) -> Vertex {
    if u < v {
        u
    } else {
        u + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A proper two-coloring: every edge joins an `A` vertex to a `B` vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColoring {
    side: Vec<Side>,
}

impl TwoColoring {
    pub fn side(&self, v: Vertex) -> Side {
        self.side[v]
    }

    pub fn part(&self, which: Side) -> VertexSet {
        VertexSet::from_iter(
            self.side.len(),
            self.side
                .iter()
                .enumerate()
                .filter(|&(_, &s)| s == which)
                .map(|(v, _)| v),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    Bipartite(TwoColoring),
    /// Vertices of an odd cycle; consecutive entries (and last, first) are
    /// adjacent.
    OddCycle(Vec<Vertex>),
}

const WORD: usize = 64;

/// A subset of `0..universe`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        Self::from_iter(universe, 0..universe)
    }

    /// # Panics
    /// If an item is `>= universe`.
    pub fn from_iter<I: IntoIterator<Item = Vertex>>(universe: usize, items: I) -> Self {
        let mut s = Self::new(universe);
        for v in items {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let (w, b) = (v / WORD, v % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / WORD, v % WORD);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.universe && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut bits = word;
            core::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(core::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn path3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(2, [(0, 0)]),
            Err(GraphError::SelfLoop { vertex: 0 })
        );
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn adjacency_is_sorted_and_symmetric() {
        let g = Graph::new(4, [(3, 0), (2, 0), (1, 0), (1, 3)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.neighbors(3), &[0, 1]);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3), (1, 3)]);
        let total: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.size());
    }

    #[test]
    fn delete_middle_of_path() {
        let h = path3().induced_delete(1).unwrap();
        assert_eq!(h, Graph::edgeless(2));
    }

    #[test]
    fn delete_only_vertex() {
        let h = Graph::edgeless(1).induced_delete(0).unwrap();
        assert_eq!(h.order(), 0);
        assert!(path3().induced_delete(3).is_err());
    }

    #[test]
    fn delete_v5_from_fig4_g1() {
        let g = fixtures::FIG4_G1.graph();
        let h = g.induced_delete(4).unwrap();
        // v1v2, v1v3, v2v3, v4v7, v4v6 in the renumbered ids of G - v5
        let expected = Graph::new(6, [(0, 1), (0, 2), (1, 2), (3, 5), (3, 4)]).unwrap();
        assert_eq!(h, expected);
        assert_eq!(h.size(), g.size() - g.degree(4));
    }

    #[test]
    fn id_translation_round_trips() {
        for v in 0..5 {
            for u in (0..5).filter(|&u| u != v) {
                assert_eq!(restored_id(deleted_id(u, v), v), u);
            }
        }
    }

    #[test]
    fn closed_neighborhood_cases() {
        let g = fixtures::FIG3_G1.graph();
        let s = VertexSet::from_iter(7, [6, 3]);
        assert_eq!(g.closed_neighborhood(&s).to_vec(), vec![2, 3, 6]);
        assert!(g.closed_neighborhood(&VertexSet::new(7)).is_empty());
        let e = Graph::edgeless(4);
        assert_eq!(e.closed_neighborhood(&VertexSet::full(4)), VertexSet::full(4));
    }

    #[test]
    fn bipartition_of_fig5_g2() {
        match fixtures::FIG5_G2.graph().bipartition() {
            Bipartition::Bipartite(c) => {
                assert_eq!(c.part(Side::A).len(), 3);
                assert_eq!(c.part(Side::B).len(), 3);
            }
            other => panic!("expected bipartite, got {other:?}"),
        }
        assert!(Graph::new(2, [(0, 1)]).unwrap().is_bipartite());
    }

    #[test]
    fn odd_cycle_of_fig4_g1_is_the_triangle() {
        match fixtures::FIG4_G1.graph().bipartition() {
            Bipartition::OddCycle(mut c) => {
                c.sort_unstable();
                assert_eq!(c, vec![0, 1, 2]);
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    #[test]
    fn vertex_set_ops() {
        let mut s = VertexSet::from_iter(130, [0, 64, 129, 5]);
        assert_eq!(s.to_vec(), vec![0, 5, 64, 129]);
        assert_eq!(s.len(), 4);
        assert!(s.remove(64));
        assert!(!s.contains(64));
        let t = VertexSet::from_iter(130, [0, 5, 7]);
        assert!(s.clone().is_subset(&VertexSet::from_iter(130, [0, 5, 129])));
        s.intersect_with(&t);
        assert_eq!(s.to_vec(), vec![0, 5]);
    }
}
