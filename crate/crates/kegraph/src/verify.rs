//! Side-by-side comparison of the polynomial algorithms against the
//! exhaustive oracle.

use kegraph_core::oracle::{self, CheckStatus, OracleError, StructureCheck, TheoremCheck};
use kegraph_core::{compute_core, is_ke, maximum_matching, CoreError, Graph, Mode, VertexMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeStatus {
    Agree,
    Mismatch,
    NotApplicable,
}

impl ModeStatus {
    pub fn name(self) -> &'static str {
        match self {
            ModeStatus::Agree => "agree",
            ModeStatus::Mismatch => "mismatch",
            ModeStatus::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub n: usize,
    pub m: usize,
    pub mu: usize,
    pub brute_mu: usize,
    pub is_ke: bool,
    pub brute_is_ke: bool,
    pub alpha: Option<usize>,
    pub brute_alpha: usize,
    pub core: Option<Vec<usize>>,
    pub brute_core: Vec<usize>,
    pub modes: Vec<(&'static str, ModeStatus)>,
    pub theorem: Vec<TheoremCheck>,
    pub structure: Vec<StructureCheck>,
}

impl VerifyReport {
    /// Human-readable list of every disagreement or failed check.
    pub fn mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.mu != self.brute_mu {
            out.push(format!("matching size {} != oracle {}", self.mu, self.brute_mu));
        }
        if self.is_ke != self.brute_is_ke {
            out.push(format!("KE verdict {} != oracle {}", self.is_ke, self.brute_is_ke));
        }
        if self.brute_is_ke {
            if self.alpha != Some(self.brute_alpha) {
                out.push(format!("alpha {:?} != oracle {}", self.alpha, self.brute_alpha));
            }
            if self.core.as_ref() != Some(&self.brute_core) {
                out.push(format!("core {:?} != oracle {:?}", self.core, self.brute_core));
            }
        }
        for (mode, status) in &self.modes {
            if *status == ModeStatus::Mismatch {
                out.push(format!("mode {mode} disagrees with the oracle"));
            }
        }
        for t in self.theorem.iter().filter(|t| !t.pass) {
            out.push(format!("deletion dichotomy fails at vertex {}", t.vertex));
        }
        for s in self.structure.iter().filter(|s| s.status == CheckStatus::Fail) {
            out.push(format!("structure check {} fails", s.name));
        }
        out
    }

    pub fn ok(&self) -> bool {
        self.mismatches().is_empty()
    }
}

pub fn verify_graph<E: VertexMap>(g: &Graph, exec: &E) -> Result<VerifyReport, OracleError> {
    let family = oracle::enumerate_mis(g)?;
    let brute_mu = oracle::brute_mu(g)?;
    let brute_is_ke = family.alpha + brute_mu == g.order();
    let brute_core = family.core(g.order()).to_vec();

    let auto = compute_core(g, Mode::Auto, exec).ok();
    let mut modes = Vec::new();
    for (name, mode) in [
        ("general", Mode::General),
        ("bipartite", Mode::Bipartite),
        ("perfect", Mode::Perfect),
    ] {
        let status = match compute_core(g, mode, exec) {
            Ok(r) if brute_is_ke && r.core.to_vec() == brute_core => ModeStatus::Agree,
            Ok(_) => ModeStatus::Mismatch,
            Err(CoreError::NotKe) if !brute_is_ke => ModeStatus::NotApplicable,
            Err(CoreError::NotBipartite) if !oracle::brute_is_bipartite(g)? => {
                ModeStatus::NotApplicable
            }
            Err(CoreError::NoPerfectMatching) if 2 * brute_mu != g.order() => {
                ModeStatus::NotApplicable
            }
            Err(_) => ModeStatus::Mismatch,
        };
        modes.push((name, status));
    }

    let theorem = if brute_is_ke {
        oracle::verify_theorem_all(g)?
    } else {
        Vec::new()
    };

    Ok(VerifyReport {
        n: g.order(),
        m: g.size(),
        mu: maximum_matching(g).size(),
        brute_mu,
        is_ke: is_ke(g).is_ke(),
        brute_is_ke,
        alpha: auto.as_ref().map(|r| r.alpha),
        brute_alpha: family.alpha,
        core: auto.map(|r| r.core.to_vec()),
        brute_core,
        modes,
        theorem,
        structure: oracle::validate_structure(g)?,
    })
}

/// Greedily deletes vertices, then edges, while `fails` keeps holding.
pub fn minimize(g: &Graph, fails: impl Fn(&Graph) -> bool) -> Graph {
    let mut current = g.clone();
    'outer: loop {
        for v in current.vertices() {
            let h = current.induced_delete(v).expect("in range");
            if fails(&h) {
                current = h;
                continue 'outer;
            }
        }
        for i in 0..current.size() {
            let edges = current
                .edges()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &e)| e);
            let h = Graph::new(current.order(), edges).expect("subgraph");
            if fails(&h) {
                current = h;
                continue 'outer;
            }
        }
        return current;
    }
}
