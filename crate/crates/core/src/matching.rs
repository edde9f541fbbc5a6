//! Maximum cardinality matching.
//!
//! Bipartite graphs go through Hopcroft-Karp phases. Everything else uses
//! Edmonds' blossom search, one root at a time, with blossoms tracked by a
//! base array instead of explicit contraction. Both start from the same
//! greedy matching and scan neighbors in ascending id order, so results are
//! reproducible.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{deleted_id, Bipartition, Graph, GraphError, Side, TwoColoring, Vertex};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchingError {
    VertexOutOfRange { vertex: Vertex, n: usize },
    /// A vertex appears in two pairs.
    TwoMates { vertex: Vertex },
    /// A matched pair that is not an edge of the host graph.
    NotAnEdge { u: Vertex, v: Vertex },
    /// The matching was built for a graph of another order.
    OrderMismatch { matching: usize, graph: usize },
}

impl fmt::Display for MatchingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MatchingError::VertexOutOfRange { vertex, n } => {
                write!(f, "matched vertex {vertex} out of range for order {n}")
            }
            MatchingError::TwoMates { vertex } => {
                write!(f, "vertex {vertex} is matched twice")
            }
            MatchingError::NotAnEdge { u, v } => write!(f, "matched pair {u}-{v} is not an edge"),
            MatchingError::OrderMismatch { matching, graph } => write!(
                f,
                "matching covers {matching} vertices but the graph has {graph}"
            ),
        }
    }
}

impl core::error::Error for MatchingError {}

/// A set of vertex-disjoint pairs, stored as a mate map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<Vertex>>,
    size: usize,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: vec![None; n],
            size: 0,
        }
    }

    /// Builds a matching on `n` vertices. Pairs are not checked against any
    /// graph; see [`Matching::check_against`].
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self, MatchingError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut m = Matching::empty(n);
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(MatchingError::VertexOutOfRange { vertex: w, n });
                }
                if m.mate[w].is_some() {
                    return Err(MatchingError::TwoMates { vertex: w });
                }
            }
            if u == v {
                return Err(MatchingError::TwoMates { vertex: u });
            }
            m.mate[u] = Some(v);
            m.mate[v] = Some(u);
            m.size += 1;
        }
        Ok(m)
    }

    fn from_mates(mate: Vec<usize>) -> Self {
        let mate: Vec<Option<Vertex>> = mate
            .into_iter()
            .map(|w| if w == NONE { None } else { Some(w) })
            .collect();
        let size = mate.iter().filter(|m| m.is_some()).count() / 2;
        Matching { mate, size }
    }

    /// Verifies that this matching lives on `g`: same order, every pair is
    /// an edge of `g`.
    pub fn check_against(&self, g: &Graph) -> Result<(), MatchingError> {
        if self.mate.len() != g.order() {
            return Err(MatchingError::OrderMismatch {
                matching: self.mate.len(),
                graph: g.order(),
            });
        }
        for (u, v) in self.pairs() {
            if !g.has_edge(u, v) {
                return Err(MatchingError::NotAnEdge { u, v });
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.mate.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate[v]
    }

    pub fn is_matched(&self, v: Vertex) -> bool {
        self.mate[v].is_some()
    }

    /// Matched pairs `(u, v)` with `u < v`, ordered by `u`.
    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, &m)| m.filter(|&v| u < v).map(|v| (u, v)))
    }

    pub fn is_perfect(&self) -> bool {
        2 * self.size == self.mate.len()
    }

    /// The matching restricted to `G - v`, in the ids of `G - v`.
    pub fn without(&self, v: Vertex) -> Matching {
        let mut mate = Vec::with_capacity(self.mate.len().saturating_sub(1));
        for (u, &m) in self.mate.iter().enumerate() {
            if u == v {
                continue;
            }
            mate.push(match m {
                Some(w) if w != v => Some(deleted_id(w, v)),
                _ => None,
            });
        }
        let size = self.size - usize::from(self.mate[v].is_some());
        Matching { mate, size }
    }
}

/// A maximum matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    match g.bipartition() {
        Bipartition::Bipartite(coloring) => hopcroft_karp(g, &coloring),
        Bipartition::OddCycle(_) => edmonds(g),
    }
}

/// True iff `matching` covers every vertex.
pub fn has_perfect_matching(g: &Graph, matching: &Matching) -> bool {
    debug_assert_eq!(g.order(), matching.order());
    matching.is_perfect()
}

/// `mu(G - v)` given a maximum matching of `g`.
pub fn mu_after_delete(g: &Graph, matching: &Matching, v: Vertex) -> Result<usize, GraphError> {
    if v >= g.order() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g.order() });
    }
    if !matching.is_matched(v) {
        return Ok(matching.size());
    }
    delete_with_matching(g, matching, v).map(|(_, m)| m.size())
}

/// `G - v` together with a maximum matching of it, derived from a maximum
/// matching of `g`.
///
/// Dropping the pair at `v` leaves its mate `w` exposed. Any augmenting
/// path of `G - v` must end at `w` (otherwise it would augment `matching`
/// in `g`), so one blossom search rooted at `w` settles `mu(G - v)`.
pub fn delete_with_matching(
    g: &Graph,
    matching: &Matching,
    v: Vertex,
) -> Result<(Graph, Matching), GraphError> {
    let h = g.induced_delete(v)?;
    let mut m = matching.without(v);
    if let Some(w) = matching.mate(v) {
        let root = deleted_id(w, v);
        let mut mate: Vec<usize> = m.mate.iter().map(|x| x.unwrap_or(NONE)).collect();
        if BlossomSearch::new(&h).augment_from(&mut mate, root) {
            m = Matching::from_mates(mate);
        }
    }
    Ok((h, m))
}

/// Lowest-id free vertex paired with its lowest-id free neighbor.
fn greedy(g: &Graph) -> Vec<usize> {
    let mut mate = vec![NONE; g.order()];
    for u in g.vertices() {
        if mate[u] != NONE {
            continue;
        }
        if let Some(&w) = g.neighbors(u).iter().find(|&&w| mate[w] == NONE) {
            mate[u] = w;
            mate[w] = u;
        }
    }
    mate
}

/// Maximum matching by Edmonds' blossom algorithm.
pub fn edmonds(g: &Graph) -> Matching {
    let mut mate = greedy(g);
    let mut search = BlossomSearch::new(g);
    for root in g.vertices() {
        if mate[root] == NONE && g.degree(root) > 0 {
            search.augment_from(&mut mate, root);
        }
    }
    Matching::from_mates(mate)
}

struct BlossomSearch<'g> {
    g: &'g Graph,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> BlossomSearch<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        BlossomSearch {
            g,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            on_path: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    /// Grows an alternating tree from the exposed vertex `root`; on success
    /// flips the augmenting path in `mate` and returns true.
    fn augment_from(&mut self, mate: &mut [usize], root: usize) -> bool {
        match self.find_path(mate, root) {
            Some(end) => {
                let mut v = end;
                while v != NONE {
                    let pv = self.parent[v];
                    let next = mate[pv];
                    mate[v] = pv;
                    mate[pv] = v;
                    v = next;
                }
                true
            }
            None => false,
        }
    }

    fn find_path(&mut self, mate: &[usize], root: usize) -> Option<usize> {
        let n = self.g.order();
        self.parent.fill(NONE);
        self.in_tree.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    // `to` is an outer vertex: the edge closes a blossom.
                    let b = self.lca(mate, v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(mate, v, b, to);
                    self.mark_path(mate, to, b, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = b;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    let next = mate[to];
                    self.in_tree[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn lca(&mut self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        self.on_path.fill(false);
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if self.on_path[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }
}

/// Maximum matching of a bipartite graph by Hopcroft-Karp phases.
pub fn hopcroft_karp(g: &Graph, coloring: &TwoColoring) -> Matching {
    let n = g.order();
    let mut mate = greedy(g);
    let left: Vec<Vertex> = g.vertices().filter(|&v| coloring.side(v) == Side::A).collect();
    let mut dist = vec![usize::MAX; n];
    let mut next_edge = vec![0usize; n];
    let mut queue = VecDeque::new();
    loop {
        // BFS layers over left vertices, from every free one.
        let mut free_dist = usize::MAX;
        queue.clear();
        for &u in &left {
            if mate[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        while let Some(x) = queue.pop_front() {
            if dist[x] >= free_dist {
                continue;
            }
            for &y in g.neighbors(x) {
                let z = mate[y];
                if z == NONE {
                    free_dist = free_dist.min(dist[x] + 1);
                } else if dist[z] == usize::MAX {
                    dist[z] = dist[x] + 1;
                    queue.push_back(z);
                }
            }
        }
        if free_dist == usize::MAX {
            break;
        }

        // Vertex-disjoint shortest augmenting paths along the layers.
        next_edge.fill(0);
        let mut stack: Vec<Vertex> = Vec::new();
        let mut via: Vec<Vertex> = Vec::new();
        for &root in &left {
            if mate[root] != NONE || dist[root] != 0 {
                continue;
            }
            stack.clear();
            via.clear();
            stack.push(root);
            while let Some(&x) = stack.last() {
                let nbrs = g.neighbors(x);
                if next_edge[x] == nbrs.len() {
                    dist[x] = usize::MAX;
                    stack.pop();
                    via.pop();
                    continue;
                }
                let y = nbrs[next_edge[x]];
                next_edge[x] += 1;
                let z = mate[y];
                if z == NONE {
                    if dist[x] + 1 == free_dist {
                        via.push(y);
                        for (&a, &b) in stack.iter().zip(&via) {
                            mate[a] = b;
                            mate[b] = a;
                        }
                        for &a in &stack {
                            dist[a] = usize::MAX;
                        }
                        break;
                    }
                } else if dist[z] != usize::MAX && dist[z] == dist[x] + 1 {
                    via.push(y);
                    stack.push(z);
                }
            }
        }
    }
    Matching::from_mates(mate)
}
