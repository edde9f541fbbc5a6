//! Seeded König-Egerváry graphs with a prescribed matching number.
//!
//! Vertices split into `S = 0..n-mu` and `D = n-mu..n`. The edges
//! `(n-mu+i, i)` for `i < mu` are always present; every other edge lies
//! inside `D` or between `D` and `S` and is kept with probability `p`.
//!
//! Why the result is KE with `mu(G) = mu`:
//! - every edge meets `D`, so `D` is a vertex cover and `mu(G) <= |D| = mu`;
//! - the mandatory edges form a matching of size `mu`, so `mu(G) = mu`;
//! - `S` has no internal edges, so `alpha(G) >= n - mu`;
//! - `alpha(G) + mu(G) <= n` holds in every graph, so `alpha(G) = n - mu`.
//!
//! Without `D`-internal edges the graph is bipartite with sides `S` and `D`.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, Vertex};

/// One splitmix64 step: returns the output and the advanced state.
pub fn prng_next(state: u64) -> (u64, u64) {
    let state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    (z ^ (z >> 31), state)
}

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        let (value, state) = prng_next(self.state);
        self.state = state;
        value
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform-ish in `0..bound` by modulo reduction. `bound` must be > 0.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Ke,
    BipartiteKe,
    PerfectMatchingKe,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Ke => "ke",
            Flavor::BipartiteKe => "bipartite-ke",
            Flavor::PerfectMatchingKe => "perfect-matching-ke",
        }
    }

    pub fn from_name(s: &str) -> Option<Flavor> {
        match s {
            "ke" => Some(Flavor::Ke),
            "bipartite-ke" => Some(Flavor::BipartiteKe),
            "perfect-matching-ke" => Some(Flavor::PerfectMatchingKe),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenError {
    MatchingTooLarge { n: usize, mu: usize },
    NotPerfect { n: usize, mu: usize },
    Probability(f64),
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GenError::MatchingTooLarge { n, mu } => {
                write!(f, "matching number {mu} exceeds half the order {n}")
            }
            GenError::NotPerfect { n, mu } => {
                write!(f, "perfect-matching flavor needs 2*mu = n (got n={n}, mu={mu})")
            }
            GenError::Probability(p) => write!(f, "edge probability {p} outside [0, 1]"),
        }
    }
}

impl core::error::Error for GenError {}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub mu: usize,
    pub extra_edge_prob: f64,
    pub seed: u64,
    pub flavor: Flavor,
}

impl GenSpec {
    pub fn validate(&self) -> Result<(), GenError> {
        if 2 * self.mu > self.n {
            return Err(GenError::MatchingTooLarge { n: self.n, mu: self.mu });
        }
        if self.flavor == Flavor::PerfectMatchingKe && 2 * self.mu != self.n {
            return Err(GenError::NotPerfect { n: self.n, mu: self.mu });
        }
        if !(0.0..=1.0).contains(&self.extra_edge_prob) {
            return Err(GenError::Probability(self.extra_edge_prob));
        }
        Ok(())
    }

    /// A spec drawn from `seed`: flavor, order in `1..=max_n`, matching
    /// number and edge probability all pseudo-random. Used for test corpora.
    pub fn sample(seed: u64, max_n: usize) -> GenSpec {
        assert!(max_n >= 2);
        let mut rng = SplitMix64::new(seed);
        let flavor = match rng.below(3) {
            0 => Flavor::Ke,
            1 => Flavor::BipartiteKe,
            _ => Flavor::PerfectMatchingKe,
        };
        let (n, mu) = if flavor == Flavor::PerfectMatchingKe {
            let half = 1 + rng.below((max_n / 2) as u64) as usize;
            (2 * half, half)
        } else {
            let n = 1 + rng.below(max_n as u64) as usize;
            (n, rng.below((n / 2 + 1) as u64) as usize)
        };
        GenSpec {
            n,
            mu,
            extra_edge_prob: rng.next_f64(),
            seed,
            flavor,
        }
    }
}

/// Builds the graph described by `spec`. The same spec always yields the
/// same edge list.
pub fn gen_ke(spec: &GenSpec) -> Result<Graph, GenError> {
    spec.validate()?;
    let GenSpec { n, mu, .. } = *spec;
    let first_d = n - mu;
    let mut rng = SplitMix64::new(spec.seed);
    let mut edges: Vec<(Vertex, Vertex)> = (0..mu).map(|i| (i, first_d + i)).collect();
    let keep = |rng: &mut SplitMix64| rng.next_f64() < spec.extra_edge_prob;

    if spec.flavor != Flavor::BipartiteKe {
        for a in first_d..n {
            for b in a + 1..n {
                if keep(&mut rng) {
                    edges.push((a, b));
                }
            }
        }
    }
    for d in first_d..n {
        for s in 0..first_d {
            if s == d - first_d {
                continue;
            }
            if keep(&mut rng) {
                edges.push((s, d));
            }
        }
    }
    Ok(Graph::new(n, edges).expect("generated edges are simple"))
}
