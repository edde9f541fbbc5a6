//! König-Egerváry recognition from a maximum matching.
//!
//! Since `alpha + mu <= n` always holds, a graph is KE exactly when it has an
//! independent set of size `n - mu`. Such a set must take every vertex left
//! exposed by the matching and exactly one endpoint of each matched pair.
//! Choosing the endpoint is a boolean per pair, and the non-adjacency
//! requirements are 2-clauses over those booleans, so the whole question is a
//! linear-size 2-SAT instance.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::matching::{maximum_matching, Matching, MatchingError};
use crate::twosat::{Lit, TwoSat};

/// Why no independent set of size `n - mu` exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotKeReason {
    /// Two vertices exposed by the matching are adjacent.
    ExposedEdge { u: Vertex, v: Vertex },
    /// Both endpoint choices for this matched pair lead to a conflict.
    /// `pair` indexes matched pairs ordered by lower endpoint.
    Contradiction { pair: usize, u: Vertex, v: Vertex },
}

impl fmt::Display for NotKeReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NotKeReason::ExposedEdge { u, v } => {
                write!(f, "unmatched vertices {u} and {v} are adjacent")
            }
            NotKeReason::Contradiction { pair, u, v } => write!(
                f,
                "matched pair #{pair} ({u}-{v}) admits no consistent endpoint choice"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KeVerdict {
    /// `witness` is an independent set of size `n - mu`, hence maximum.
    Ke { witness: VertexSet },
    NotKe { reason: NotKeReason },
}

impl KeVerdict {
    pub fn is_ke(&self) -> bool {
        matches!(self, KeVerdict::Ke { .. })
    }

    pub fn witness(&self) -> Option<&VertexSet> {
        match self {
            KeVerdict::Ke { witness } => Some(witness),
            KeVerdict::NotKe { .. } => None,
        }
    }

    pub fn reason(&self) -> Option<NotKeReason> {
        match self {
            KeVerdict::Ke { .. } => None,
            KeVerdict::NotKe { reason } => Some(*reason),
        }
    }
}

/// Decides whether `g` is KE, given a maximum matching of it. Linear in
/// `n + m`.
///
/// If `matching` is not maximum a positive answer is still correct (the
/// witness would beat `alpha`), but a negative one is meaningless.
pub fn ke_given_matching(g: &Graph, matching: &Matching) -> Result<KeVerdict, MatchingError> {
    matching.check_against(g)?;
    let pairs: Vec<(Vertex, Vertex)> = matching.pairs().collect();
    // pair index of each matched vertex
    let mut pair_of = alloc::vec![usize::MAX; g.order()];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        pair_of[u] = i;
        pair_of[v] = i;
    }
    // Variable i true: the lower endpoint of pair i joins the set.
    let chosen = |u: Vertex| {
        let i = pair_of[u];
        if pairs[i].0 == u {
            Lit::pos(i)
        } else {
            Lit::neg(i)
        }
    };

    let mut sat = TwoSat::new(pairs.len());
    for &(u, v) in g.edges() {
        match (matching.is_matched(u), matching.is_matched(v)) {
            (false, false) => {
                return Ok(KeVerdict::NotKe {
                    reason: NotKeReason::ExposedEdge { u, v },
                })
            }
            (false, true) => sat.unit(chosen(v).not()),
            (true, false) => sat.unit(chosen(u).not()),
            (true, true) if pair_of[u] == pair_of[v] => {}
            (true, true) => sat.or(chosen(u).not(), chosen(v).not()),
        }
    }

    match sat.solve() {
        Ok(value) => {
            let mut witness =
                VertexSet::from_iter(g.order(), g.vertices().filter(|&v| !matching.is_matched(v)));
            for (&(lo, hi), take_lo) in pairs.iter().zip(value) {
                witness.insert(if take_lo { lo } else { hi });
            }
            Ok(KeVerdict::Ke { witness })
        }
        Err(pair) => {
            let (u, v) = pairs[pair];
            Ok(KeVerdict::NotKe {
                reason: NotKeReason::Contradiction { pair, u, v },
            })
        }
    }
}

/// Maximum matching followed by [`ke_given_matching`].
pub fn is_ke(g: &Graph) -> KeVerdict {
    let m = maximum_matching(g);
    ke_given_matching(g, &m).expect("matching computed on this graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, ALL};
    use crate::matching::delete_with_matching;
    use crate::oracle;

    fn check_witness(g: &Graph, m: &Matching, verdict: &KeVerdict) {
        let w = verdict.witness().unwrap();
        assert!(g.is_independent(w));
        assert_eq!(w.len(), g.order() - m.size());
        for v in g.vertices() {
            if !m.is_matched(v) {
                assert!(w.contains(v));
            }
        }
        for (u, v) in m.pairs() {
            assert!(w.contains(u) ^ w.contains(v));
        }
    }

    #[test]
    fn fig1_h3_is_not_ke() {
        let g = fixtures::FIG1_H3.graph();
        assert!(!is_ke(&g).is_ke());
        assert!(is_ke(&fixtures::FIG1_H1.graph()).is_ke());
    }

    #[test]
    fn fig4_g1_witness() {
        let g = fixtures::FIG4_G1.graph();
        let m = maximum_matching(&g);
        let verdict = ke_given_matching(&g, &m).unwrap();
        assert!(verdict.is_ke());
        assert_eq!(verdict.witness().unwrap().len(), 4);
        check_witness(&g, &m, &verdict);
    }

    #[test]
    fn fig5_g1_minus_v1_is_not_ke() {
        let g = fixtures::FIG5_G1.graph();
        let m = maximum_matching(&g);
        let (h, mh) = delete_with_matching(&g, &m, 0).unwrap();
        let verdict = ke_given_matching(&h, &mh).unwrap();
        assert!(!verdict.is_ke());
        assert!(verdict.reason().is_some());
    }

    #[test]
    fn trivial_graphs() {
        let k1 = Graph::edgeless(1);
        let v = ke_given_matching(&k1, &Matching::empty(1)).unwrap();
        assert_eq!(v.witness().unwrap().to_vec(), alloc::vec![0]);
        let empty = Graph::edgeless(0);
        assert!(is_ke(&empty).witness().unwrap().is_empty());
    }

    #[test]
    fn exposed_edge_detected() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let m = Matching::empty(3);
        assert_eq!(
            ke_given_matching(&g, &m).unwrap().reason(),
            Some(NotKeReason::ExposedEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn invalid_matching_is_rejected() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let m = Matching::from_pairs(3, [(0, 2)]).unwrap();
        assert!(ke_given_matching(&g, &m).is_err());
        let m = Matching::empty(4);
        assert!(ke_given_matching(&g, &m).is_err());
    }

    #[test]
    fn agrees_with_oracle_on_fixtures() {
        for f in ALL {
            let g = f.graph();
            let m = maximum_matching(&g);
            let verdict = ke_given_matching(&g, &m).unwrap();
            let alpha = oracle::enumerate_mis(&g).unwrap().alpha;
            let mu = oracle::brute_mu(&g).unwrap();
            assert_eq!(verdict.is_ke(), alpha + mu == g.order(), "{}", f.name);
            if verdict.is_ke() {
                check_witness(&g, &m, &verdict);
            }
        }
    }
}
