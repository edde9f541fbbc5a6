//! Small named graphs with known independence number, matching number and
//! core. Labels map figure vertex names to ids.

use crate::graph::{Graph, Vertex};

pub struct Fixture {
    pub name: &'static str,
    pub n: usize,
    pub edges: &'static [(Vertex, Vertex)],
    /// `(label, id)` pairs.
    pub labels: &'static [(&'static str, Vertex)],
}

impl Fixture {
    pub fn graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied()).expect("fixture edges are valid")
    }

    /// Id of a labeled vertex.
    ///
    /// # Panics
    /// If the label is unknown.
    pub fn id(&self, label: &str) -> Vertex {
        self.labels
            .iter()
            .find(|(l, _)| *l == label)
            .map(|&(_, v)| v)
            .unwrap_or_else(|| panic!("{}: no vertex labeled {label}", self.name))
    }
}

/// KE, not bipartite (contains a triangle).
pub const FIG1_H1: Fixture = Fixture {
    name: "FIG1-H1",
    n: 4,
    edges: &[(0, 1), (1, 2), (1, 3), (2, 3)],
    labels: &[],
};

/// Not KE: alpha + mu = 4 < 5.
pub const FIG1_H3: Fixture = Fixture {
    name: "FIG1-H3",
    n: 5,
    edges: &[(0, 1), (1, 2), (0, 3), (1, 4), (4, 2)],
    labels: &[],
};

/// Bipartite, alpha = 4, core = {u, v}.
pub const FIG3_G1: Fixture = Fixture {
    name: "FIG3-G1",
    n: 7,
    edges: &[(0, 4), (1, 5), (2, 6), (4, 5), (0, 1), (1, 2), (2, 3)],
    labels: &[
        ("p1", 0),
        ("p2", 1),
        ("p3", 2),
        ("v", 3),
        ("q1", 4),
        ("q2", 5),
        ("u", 6),
    ],
};

/// KE with a perfect matching, core = {a, b, c}.
pub const FIG3_G2: Fixture = Fixture {
    name: "FIG3-G2",
    n: 6,
    edges: &[
        (0, 3),
        (1, 4),
        (2, 5),
        (0, 1),
        (1, 2),
        (0, 4),
        (1, 3),
        (1, 5),
        (4, 2),
    ],
    labels: &[
        ("x1", 0),
        ("x2", 1),
        ("x3", 2),
        ("a", 3),
        ("b", 4),
        ("c", 5),
    ],
};

/// KE, not bipartite, no perfect matching; core = {v5, v6, v7}.
pub const FIG4_G1: Fixture = Fixture {
    name: "FIG4-G1",
    n: 7,
    edges: &[(0, 1), (0, 2), (1, 2), (2, 4), (4, 3), (3, 6), (3, 5)],
    labels: &[
        ("v1", 0),
        ("v2", 1),
        ("v3", 2),
        ("v4", 3),
        ("v5", 4),
        ("v6", 5),
        ("v7", 6),
    ],
};

/// Bipartite, no perfect matching; core = {x6, x7}.
pub const FIG4_G2: Fixture = Fixture {
    name: "FIG4-G2",
    n: 7,
    edges: &[(0, 1), (2, 3), (4, 5), (1, 3), (0, 2), (2, 4), (4, 6)],
    labels: &[
        ("x1", 0),
        ("x2", 1),
        ("x3", 2),
        ("x4", 3),
        ("x5", 4),
        ("x6", 5),
        ("x7", 6),
    ],
};

/// KE with a perfect matching; core = {x}.
pub const FIG111_H1: Fixture = Fixture {
    name: "FIG111-H1",
    n: 6,
    edges: &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (5, 3)],
    labels: &[("x", 0)],
};

/// KE with a perfect matching; core = {u, v}.
pub const FIG111_H2: Fixture = Fixture {
    name: "FIG111-H2",
    n: 6,
    edges: &[(0, 1), (1, 2), (0, 3), (3, 4), (1, 4), (2, 5), (1, 5)],
    labels: &[
        ("u", 0),
        ("p", 1),
        ("q", 2),
        ("r", 3),
        ("v", 4),
        ("s", 5),
    ],
};

/// KE, not bipartite, perfect matching; core = {v1, v3}.
pub const FIG5_G1: Fixture = Fixture {
    name: "FIG5-G1",
    n: 6,
    edges: &[(0, 1), (1, 2), (2, 3), (3, 5), (3, 4), (4, 5)],
    labels: &[
        ("v1", 0),
        ("v2", 1),
        ("v3", 2),
        ("v4", 3),
        ("v5", 4),
        ("v6", 5),
    ],
};

/// Bipartite with a perfect matching; empty core.
pub const FIG5_G2: Fixture = Fixture {
    name: "FIG5-G2",
    n: 6,
    edges: &[(0, 3), (1, 4), (2, 5), (4, 5), (0, 1), (1, 2)],
    labels: &[],
};

pub const ALL: [&Fixture; 10] = [
    &FIG1_H1, &FIG1_H3, &FIG3_G1, &FIG3_G2, &FIG4_G1, &FIG4_G2, &FIG111_H1, &FIG111_H2,
    &FIG5_G1, &FIG5_G2,
];

pub fn by_name(name: &str) -> Option<&'static Fixture> {
    ALL.iter().copied().find(|f| f.name.eq_ignore_ascii_case(name))
}
