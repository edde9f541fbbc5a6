//! core(G) of König-Egerváry graphs.
//!
//! For a KE graph `G` and a vertex `v`:
//! - if `mu(G - v) = mu(G)`, then `v` is in every maximum independent set;
//! - otherwise `v` is in the core exactly when `G - v` is not KE.
//!
//! Three per-vertex loops follow from this. The general one uses both
//! branches. For bipartite graphs every `G - v` is KE, so only the matching
//! number matters. With a perfect matching `mu` always drops, so only the KE
//! test of `G - v` matters, and the matching of `G - v` is the old one minus
//! the pair at `v`.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::ke::ke_given_matching;
use crate::matching::{delete_with_matching, maximum_matching, Matching};

/// Runs a per-vertex function over `0..n`, returning results in vertex
/// order.
pub trait VertexMap {
    fn map<T, F>(&self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(Vertex) -> T + Sync + Send;
}

/// Ascending vertex order on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl VertexMap for Sequential {
    fn map<T, F>(&self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(Vertex) -> T + Sync + Send,
    {
        (0..n).map(f).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Auto,
    General,
    Bipartite,
    Perfect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    General,
    Bipartite,
    PerfectMatching,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::General => "general",
            Algorithm::Bipartite => "bipartite",
            Algorithm::PerfectMatching => "perfect-matching",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreError {
    NotKe,
    NotBipartite,
    NoPerfectMatching,
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoreError::NotKe => "graph is not König-Egerváry",
            CoreError::NotBipartite => "graph is not bipartite",
            CoreError::NoPerfectMatching => "graph has no perfect matching",
        })
    }
}

impl core::error::Error for CoreError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreResult {
    pub core: VertexSet,
    /// `in_core[v]` is true iff `v` belongs to the core.
    pub in_core: Vec<bool>,
    /// Whether `G - v` is KE, recorded only where that test decided `v`.
    pub ke_flag: Vec<Option<bool>>,
    pub algorithm: Algorithm,
    pub mu: usize,
    pub alpha: usize,
}

impl CoreResult {
    fn assemble(g: &Graph, m: &Matching, algorithm: Algorithm, bits: Vec<(bool, Option<bool>)>) -> Self {
        let (in_core, ke_flag): (Vec<bool>, Vec<Option<bool>>) = bits.into_iter().unzip();
        let core = VertexSet::from_iter(
            g.order(),
            in_core.iter().enumerate().filter(|(_, &c)| c).map(|(v, _)| v),
        );
        CoreResult {
            core,
            in_core,
            ke_flag,
            algorithm,
            mu: m.size(),
            alpha: g.order() - m.size(),
        }
    }
}

fn ke_matching(g: &Graph) -> Result<Matching, CoreError> {
    let m = maximum_matching(g);
    if ke_given_matching(g, &m).expect("own matching").is_ke() {
        Ok(m)
    } else {
        Err(CoreError::NotKe)
    }
}

/// Both branches per vertex; valid for every KE graph.
pub fn core_general<E: VertexMap>(g: &Graph, exec: &E) -> Result<CoreResult, CoreError> {
    let m = ke_matching(g)?;
    Ok(general_with(g, &m, exec))
}

fn general_with<E: VertexMap>(g: &Graph, m: &Matching, exec: &E) -> CoreResult {
    let mu = m.size();
    let bits = exec.map(g.order(), |v| {
        if !m.is_matched(v) {
            return (true, None);
        }
        let (h, mh) = delete_with_matching(g, m, v).expect("vertex in range");
        if mh.size() == mu {
            (true, None)
        } else {
            let ke = ke_given_matching(&h, &mh).expect("own matching").is_ke();
            (!ke, Some(ke))
        }
    });
    CoreResult::assemble(g, m, Algorithm::General, bits)
}

/// `v` is in the core iff deleting it keeps the matching number.
pub fn core_bipartite<E: VertexMap>(g: &Graph, exec: &E) -> Result<CoreResult, CoreError> {
    if !g.is_bipartite() {
        return Err(CoreError::NotBipartite);
    }
    let m = maximum_matching(g);
    Ok(bipartite_with(g, &m, exec))
}

fn bipartite_with<E: VertexMap>(g: &Graph, m: &Matching, exec: &E) -> CoreResult {
    let mu = m.size();
    let bits = exec.map(g.order(), |v| {
        if !m.is_matched(v) {
            return (true, None);
        }
        let (_, mh) = delete_with_matching(g, m, v).expect("vertex in range");
        (mh.size() == mu, None)
    });
    CoreResult::assemble(g, m, Algorithm::Bipartite, bits)
}

/// `v` is in the core iff `G - v` is not KE. Requires a perfect matching.
pub fn core_perfect_matching<E: VertexMap>(g: &Graph, exec: &E) -> Result<CoreResult, CoreError> {
    let m = ke_matching(g)?;
    if !m.is_perfect() {
        return Err(CoreError::NoPerfectMatching);
    }
    Ok(perfect_with(g, &m, exec))
}

fn perfect_with<E: VertexMap>(g: &Graph, m: &Matching, exec: &E) -> CoreResult {
    let bits = exec.map(g.order(), |v| {
        let h = g.induced_delete(v).expect("vertex in range");
        // n - 1 is odd, so mu(G - v) = mu - 1 and this is maximum.
        let mh = m.without(v);
        let ke = ke_given_matching(&h, &mh).expect("restricted matching").is_ke();
        (!ke, Some(ke))
    });
    CoreResult::assemble(g, m, Algorithm::PerfectMatching, bits)
}

/// Checks that `g` is KE, then dispatches. `Auto` prefers bipartite, then
/// perfect-matching, then general.
pub fn compute_core<E: VertexMap>(g: &Graph, mode: Mode, exec: &E) -> Result<CoreResult, CoreError> {
    let m = ke_matching(g)?;
    match mode {
        Mode::General => Ok(general_with(g, &m, exec)),
        Mode::Bipartite if g.is_bipartite() => Ok(bipartite_with(g, &m, exec)),
        Mode::Bipartite => Err(CoreError::NotBipartite),
        Mode::Perfect if m.is_perfect() => Ok(perfect_with(g, &m, exec)),
        Mode::Perfect => Err(CoreError::NoPerfectMatching),
        Mode::Auto if g.is_bipartite() => Ok(bipartite_with(g, &m, exec)),
        Mode::Auto if m.is_perfect() => Ok(perfect_with(g, &m, exec)),
        Mode::Auto => Ok(general_with(g, &m, exec)),
    }
}

/// `alpha(G) = n - mu(G)` for KE graphs.
pub fn alpha_ke(g: &Graph) -> Result<usize, CoreError> {
    ke_matching(g).map(|m| g.order() - m.size())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UniqueMis {
    Unique(VertexSet),
    NotUnique,
}

/// The maximum independent set is unique iff the core is a maximal
/// independent set, i.e. `N[core] = V`.
pub fn unique_mis<E: VertexMap>(g: &Graph, exec: &E) -> Result<UniqueMis, CoreError> {
    let r = compute_core(g, Mode::Auto, exec)?;
    if g.closed_neighborhood(&r.core).len() == g.order() {
        Ok(UniqueMis::Unique(r.core))
    } else {
        Ok(UniqueMis::NotUnique)
    }
}
