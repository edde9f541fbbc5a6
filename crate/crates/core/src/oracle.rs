//! Exhaustive reference computations for small graphs.
//!
//! Nothing here shares code with the matching, KE or core modules; the
//! point is to certify them. Every entry point refuses graphs with more than
//! [`MAX_ORDER`] vertices.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Bipartition, Graph, Side, Vertex, VertexSet};

pub const MAX_ORDER: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { n: usize, limit: usize },
    NotKe,
    VertexOutOfRange { vertex: Vertex, n: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OracleError::TooLarge { n, limit } => {
                write!(f, "graph of order {n} exceeds the oracle limit of {limit}")
            }
            OracleError::NotKe => f.write_str("graph is not König-Egerváry"),
            OracleError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for order {n}")
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// Adjacency as bitmasks, one word per vertex.
struct Masks {
    n: usize,
    adj: Vec<u32>,
}

impl Masks {
    fn of(g: &Graph) -> Result<Self, OracleError> {
        let n = g.order();
        if n > MAX_ORDER {
            return Err(OracleError::TooLarge { n, limit: MAX_ORDER });
        }
        let mut adj = alloc::vec![0u32; n];
        for &(u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Masks { n, adj })
    }

    fn all(&self) -> u32 {
        (1u32 << self.n) - 1
    }
}

/// All maximum independent sets of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MisFamily {
    pub alpha: usize,
    /// Sorted lexicographically as ascending id lists.
    pub sets: Vec<VertexSet>,
}

impl MisFamily {
    pub fn count(&self) -> usize {
        self.sets.len()
    }

    /// Intersection of all members.
    pub fn core(&self, n: usize) -> VertexSet {
        let mut core = VertexSet::full(n);
        for s in &self.sets {
            core.intersect_with(s);
        }
        core
    }
}

/// Branch and bound over include/exclude decisions, always branching on the
/// lowest-id undecided vertex.
pub fn enumerate_mis(g: &Graph) -> Result<MisFamily, OracleError> {
    let masks = Masks::of(g)?;
    let mut best = 0u32;
    let mut found: Vec<u32> = Vec::new();
    mis_branch(&masks, 0, 0, masks.all(), &mut best, &mut found);
    let mut lists: Vec<Vec<Vertex>> = found
        .into_iter()
        .map(|m| (0..masks.n).filter(|&v| m & (1 << v) != 0).collect())
        .collect();
    lists.sort();
    Ok(MisFamily {
        alpha: best as usize,
        sets: lists
            .into_iter()
            .map(|l| VertexSet::from_iter(masks.n, l))
            .collect(),
    })
}

fn mis_branch(m: &Masks, set: u32, size: u32, cand: u32, best: &mut u32, found: &mut Vec<u32>) {
    if size + cand.count_ones() < *best {
        return;
    }
    if cand == 0 {
        if size > *best {
            *best = size;
            found.clear();
        }
        found.push(set);
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let bit = 1u32 << v;
    mis_branch(m, set | bit, size + 1, cand & !bit & !m.adj[v], best, found);
    mis_branch(m, set, size, cand & !bit, best, found);
}

/// Intersection of all maximum independent sets.
pub fn brute_core(g: &Graph) -> Result<VertexSet, OracleError> {
    Ok(enumerate_mis(g)?.core(g.order()))
}

pub fn brute_alpha(g: &Graph) -> Result<usize, OracleError> {
    Ok(enumerate_mis(g)?.alpha)
}

/// Matching number by exhaustive search: the lowest-id uncovered vertex is
/// either left single or matched to one of its free neighbors.
pub fn brute_mu(g: &Graph) -> Result<usize, OracleError> {
    let masks = Masks::of(g)?;
    let mut best = 0;
    mu_branch(&masks, masks.all(), 0, &mut best);
    Ok(best)
}

fn mu_branch(m: &Masks, free: u32, size: usize, best: &mut usize) {
    *best = (*best).max(size);
    if free == 0 || size + free.count_ones() as usize / 2 <= *best {
        return;
    }
    let v = free.trailing_zeros() as usize;
    let rest = free & !(1 << v);
    let mut nbrs = m.adj[v] & rest;
    while nbrs != 0 {
        let w = nbrs.trailing_zeros();
        nbrs &= nbrs - 1;
        mu_branch(m, rest & !(1 << w), size + 1, best);
    }
    mu_branch(m, rest, size, best);
}

/// Tries every 2-coloring with vertex 0 fixed.
pub fn brute_is_bipartite(g: &Graph) -> Result<bool, OracleError> {
    let masks = Masks::of(g)?;
    if masks.n <= 1 {
        return Ok(true);
    }
    let proper = |coloring: u32| {
        g.edges()
            .iter()
            .all(|&(u, v)| (coloring >> u) & 1 != (coloring >> v) & 1)
    };
    Ok((0..1u32 << (masks.n - 1)).any(|c| proper(c << 1)))
}

pub fn brute_is_ke(g: &Graph) -> Result<bool, OracleError> {
    Ok(brute_alpha(g)? + brute_mu(g)? == g.order())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremCase {
    /// `mu(G - v) = mu(G)`: `G - v` must be KE and `v` in the core.
    MuKept,
    /// `mu(G - v) = mu(G) - 1`: `G - v` is KE iff `v` is outside the core.
    MuDropped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremCheck {
    pub vertex: Vertex,
    pub case: TheoremCase,
    pub minus_is_ke: bool,
    pub in_core: bool,
    pub pass: bool,
}

/// Checks the per-vertex deletion dichotomy for `v` of a KE graph using
/// only exhaustive quantities.
pub fn verify_theorem_th(g: &Graph, v: Vertex) -> Result<TheoremCheck, OracleError> {
    let family = enumerate_mis(g)?;
    let mu = brute_mu(g)?;
    if family.alpha + mu != g.order() {
        return Err(OracleError::NotKe);
    }
    if v >= g.order() {
        return Err(OracleError::VertexOutOfRange { vertex: v, n: g.order() });
    }
    check_vertex(g, v, mu, &family.core(g.order()))
}

/// [`verify_theorem_th`] for every vertex, enumerating `Omega(G)` once.
pub fn verify_theorem_all(g: &Graph) -> Result<Vec<TheoremCheck>, OracleError> {
    let family = enumerate_mis(g)?;
    let mu = brute_mu(g)?;
    if family.alpha + mu != g.order() {
        return Err(OracleError::NotKe);
    }
    let core = family.core(g.order());
    g.vertices().map(|v| check_vertex(g, v, mu, &core)).collect()
}

fn check_vertex(g: &Graph, v: Vertex, mu: usize, core: &VertexSet) -> Result<TheoremCheck, OracleError> {
    let h = g.induced_delete(v).expect("vertex checked");
    let mu_h = brute_mu(&h)?;
    let minus_is_ke = brute_alpha(&h)? + mu_h == h.order();
    let in_core = core.contains(v);
    let (case, pass) = if mu_h == mu {
        (TheoremCase::MuKept, minus_is_ke && in_core)
    } else {
        (
            TheoremCase::MuDropped,
            mu_h + 1 == mu && minus_is_ke != in_core,
        )
    };
    Ok(TheoremCheck {
        vertex: v,
        case,
        minus_is_ke,
        in_core,
        pass,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    NotApplicable,
    Pass,
    Fail,
}

impl CheckStatus {
    fn of(holds: bool) -> Self {
        if holds {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CheckStatus::NotApplicable => "not-applicable",
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureCheck {
    pub name: &'static str,
    pub status: CheckStatus,
}

/// Connected bipartite, order >= 2: `alpha > n/2` iff `|core| >= 2`.
pub const BIPARTITE_ABOVE_HALF: &str = "bipartite-alpha-above-half";
/// Connected bipartite, order >= 2: `alpha = n/2` iff core is empty and
/// both color classes are maximum independent sets.
pub const BIPARTITE_AT_HALF: &str = "bipartite-alpha-at-half";
/// Connected KE, order >= 2: `alpha > n/2` iff `|core| > |N(core)| >= 1`.
pub const KE_ABOVE_HALF: &str = "ke-alpha-above-half";
/// Connected KE, order >= 2: `alpha = n/2` iff there is a perfect matching.
pub const KE_AT_HALF: &str = "ke-alpha-at-half";
/// No isolated vertices and `alpha > mu`: `|core| > alpha - mu`.
pub const CORE_EXCEEDS_GAP: &str = "core-exceeds-alpha-minus-mu";
/// Connected, order >= 2, `3 mu < n`: `|core| >= 2`.
pub const SMALL_MATCHING_CORE: &str = "small-matching-core";

/// Evaluates each structural statement whose hypotheses `g` satisfies.
pub fn validate_structure(g: &Graph) -> Result<Vec<StructureCheck>, OracleError> {
    let n = g.order();
    let family = enumerate_mis(g)?;
    let alpha = family.alpha;
    let mu = brute_mu(g)?;
    let core = family.core(n);
    let connected = n >= 2 && g.is_connected();
    let ke = alpha + mu == n;

    let mut out = Vec::new();
    let mut push = |name, status| out.push(StructureCheck { name, status });

    match g.bipartition() {
        Bipartition::Bipartite(coloring) if connected => {
            push(
                BIPARTITE_ABOVE_HALF,
                CheckStatus::of((2 * alpha > n) == (core.len() >= 2)),
            );
            let (a, b) = (coloring.part(Side::A), coloring.part(Side::B));
            let parts_maximum = family.sets.contains(&a) && family.sets.contains(&b);
            push(
                BIPARTITE_AT_HALF,
                CheckStatus::of((2 * alpha == n) == (core.is_empty() && parts_maximum)),
            );
        }
        _ => {
            push(BIPARTITE_ABOVE_HALF, CheckStatus::NotApplicable);
            push(BIPARTITE_AT_HALF, CheckStatus::NotApplicable);
        }
    }

    if connected && ke {
        let boundary = g.open_neighborhood(&core).len();
        push(
            KE_ABOVE_HALF,
            CheckStatus::of((2 * alpha > n) == (core.len() > boundary && boundary >= 1)),
        );
        push(KE_AT_HALF, CheckStatus::of((2 * alpha == n) == (2 * mu == n)));
    } else {
        push(KE_ABOVE_HALF, CheckStatus::NotApplicable);
        push(KE_AT_HALF, CheckStatus::NotApplicable);
    }

    if g.isolated_vertices().next().is_none() && alpha > mu {
        push(CORE_EXCEEDS_GAP, CheckStatus::of(core.len() > alpha - mu));
    } else {
        push(CORE_EXCEEDS_GAP, CheckStatus::NotApplicable);
    }

    if connected && 3 * mu < n {
        push(SMALL_MATCHING_CORE, CheckStatus::of(core.len() >= 2));
    } else {
        push(SMALL_MATCHING_CORE, CheckStatus::NotApplicable);
    }
    Ok(out)
}
