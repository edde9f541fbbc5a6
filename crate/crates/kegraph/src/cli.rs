//! Command dispatch. [`run`] is a pure function from configuration and input
//! text to an exit code plus the two output streams; `main` only does IO.

use std::fmt::Write as _;
use std::num::NonZeroUsize;

use clap::{Parser, ValueEnum};
use kegraph_core::generator::{gen_ke, Flavor, GenSpec};
use kegraph_core::oracle::OracleError;
use kegraph_core::solver::{alpha_ke, unique_mis, UniqueMis};
use kegraph_core::{compute_core, is_ke, maximum_matching, CoreResult, Graph, KeVerdict, Mode};
use serde_json::{json, Value};

use crate::edgelist;
use crate::parallel::Parallel;
use crate::verify::{minimize, verify_graph, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_ORACLE_LIMIT: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Compute core(G) of a König-Egerváry graph
    Core,
    /// Decide whether the graph is König-Egerváry
    IsKe,
    /// Print a maximum matching
    Matching,
    /// Independence number of a König-Egerváry graph
    Alpha,
    /// Decide whether the maximum independent set is unique
    UniqueMis,
    /// Compare every answer against exhaustive search (n <= 24)
    Verify,
    /// Generate a König-Egerváry graph
    Gen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Auto,
    General,
    Bipartite,
    Perfect,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Auto => Mode::Auto,
            ModeArg::General => Mode::General,
            ModeArg::Bipartite => Mode::Bipartite,
            ModeArg::Perfect => Mode::Perfect,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Ke,
    BipartiteKe,
    PerfectMatchingKe,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Ke => Flavor::Ke,
            FlavorArg::BipartiteKe => Flavor::BipartiteKe,
            FlavorArg::PerfectMatchingKe => Flavor::PerfectMatchingKe,
        }
    }
}

/// König-Egerváry graphs: recognition, maximum matching and core(G).
#[derive(Debug, Clone, Parser)]
#[command(name = "kegraph", version)]
pub struct RunConfig {
    pub command: Command,
    /// Edge-list file, or "-" for standard input (ignored by gen)
    #[arg(default_value = "-")]
    pub input: String,
    /// Algorithm for the core command
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
    /// Worker threads for the per-vertex loop
    #[arg(long, default_value = "1")]
    pub workers: NonZeroUsize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub mu: usize,
    /// Probability of each optional edge
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    #[arg(long, value_enum, default_value_t = FlavorArg::Ke)]
    pub flavor: FlavorArg,
}

impl RunConfig {
    /// Defaults for `command`, as if no flags were given.
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            input: "-".into(),
            mode: ModeArg::Auto,
            workers: NonZeroUsize::MIN,
            format: Format::Text,
            seed: 0,
            n: 10,
            mu: 3,
            p: 0.3,
            flavor: FlavorArg::Ke,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

pub fn run(config: &RunConfig, input: &str) -> Outcome {
    if config.command == Command::Gen {
        return generate(config);
    }
    let g = match edgelist::parse(input) {
        Ok(g) => g,
        Err(e) => return Outcome::fail(EXIT_PARSE, e),
    };
    let exec = Parallel::new(config.workers);
    let json = config.format == Format::Json;
    match config.command {
        Command::Core => match compute_core(&g, config.mode.into(), &exec) {
            Ok(r) => Outcome::ok(render_core(&g, &r, json)),
            Err(e) => Outcome::fail(EXIT_PRECONDITION, e),
        },
        Command::IsKe => {
            let m = maximum_matching(&g);
            Outcome::ok(render_is_ke(&g, m.size(), &is_ke(&g), json))
        }
        Command::Matching => {
            let m = maximum_matching(&g);
            let pairs: Vec<(usize, usize)> = m.pairs().collect();
            Outcome::ok(if json {
                line(json!({
                    "n": g.order(),
                    "m": g.size(),
                    "mu": m.size(),
                    "perfect": m.is_perfect(),
                    "pairs": pairs.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
                }))
            } else {
                let mut s = format!("mu {}\nperfect {}\n", m.size(), yes_no(m.is_perfect()));
                for (u, v) in pairs {
                    let _ = writeln!(s, "pair {u} {v}");
                }
                s
            })
        }
        Command::Alpha => match alpha_ke(&g) {
            Ok(alpha) => Outcome::ok(if json {
                line(json!({"n": g.order(), "alpha": alpha, "mu": g.order() - alpha}))
            } else {
                format!("alpha {alpha}\n")
            }),
            Err(e) => Outcome::fail(EXIT_PRECONDITION, e),
        },
        Command::UniqueMis => match unique_mis(&g, &exec) {
            Ok(UniqueMis::Unique(s)) => Outcome::ok(if json {
                line(json!({"unique": true, "mis": s.to_vec()}))
            } else {
                format!("unique yes\nmis {}\n", ids(&s.to_vec()))
            }),
            Ok(UniqueMis::NotUnique) => Outcome::ok(if json {
                line(json!({"unique": false, "mis": null}))
            } else {
                "unique no\n".to_string()
            }),
            Err(e) => Outcome::fail(EXIT_PRECONDITION, e),
        },
        Command::Verify => run_verify(&g, &exec, json),
        Command::Gen => unreachable!(),
    }
}

fn generate(config: &RunConfig) -> Outcome {
    let spec = GenSpec {
        n: config.n,
        mu: config.mu,
        extra_edge_prob: config.p,
        seed: config.seed,
        flavor: config.flavor.into(),
    };
    match gen_ke(&spec) {
        Ok(g) => Outcome::ok(edgelist::write(&g, &[spec_comment(&spec)])),
        Err(e) => Outcome::fail(EXIT_PRECONDITION, e),
    }
}

pub fn spec_comment(spec: &GenSpec) -> String {
    format!(
        "gen n={} mu={} p={} seed={} flavor={}",
        spec.n,
        spec.mu,
        spec.extra_edge_prob,
        spec.seed,
        spec.flavor.name()
    )
}

fn run_verify(g: &Graph, exec: &Parallel, json: bool) -> Outcome {
    let report = match verify_graph(g, exec) {
        Ok(r) => r,
        Err(e @ OracleError::TooLarge { .. }) => return Outcome::fail(EXIT_ORACLE_LIMIT, e),
        Err(e) => return Outcome::fail(EXIT_PRECONDITION, e),
    };
    let stdout = render_verify(&report, json);
    if report.ok() {
        return Outcome::ok(stdout);
    }
    let small = minimize(g, |h| verify_graph(h, exec).map(|r| !r.ok()).unwrap_or(false));
    let mut stderr = String::new();
    for m in report.mismatches() {
        let _ = writeln!(stderr, "mismatch: {m}");
    }
    let _ = writeln!(stderr, "minimal counterexample:");
    stderr.push_str(&edgelist::write(&small, &[]));
    Outcome {
        code: EXIT_MISMATCH,
        stdout,
        stderr,
    }
}

fn line(v: Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn ids(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn core_json(g: &Graph, r: &CoreResult) -> Value {
    json!({
        "n": g.order(),
        "m": g.size(),
        "mu": r.mu,
        "alpha": r.alpha,
        "is_ke": true,
        "algorithm": r.algorithm.name(),
        "core": r.core.to_vec(),
        "c": r.in_core.iter().map(|&b| u8::from(b)).collect::<Vec<_>>(),
        "ke": r.ke_flag.iter().map(|k| k.map(u8::from)).collect::<Vec<_>>(),
    })
}

fn render_core(g: &Graph, r: &CoreResult, json: bool) -> String {
    if json {
        return line(core_json(g, r));
    }
    let bits: Vec<String> = r.in_core.iter().map(|&b| u8::from(b).to_string()).collect();
    let ke: Vec<String> = r
        .ke_flag
        .iter()
        .map(|k| k.map_or("-".to_string(), |b| u8::from(b).to_string()))
        .collect();
    format!(
        "n {}\nm {}\nmu {}\nalpha {}\nalgorithm {}\ncore {}\nc {}\nke {}\n",
        g.order(),
        g.size(),
        r.mu,
        r.alpha,
        r.algorithm,
        ids(&r.core.to_vec()),
        bits.join(" "),
        ke.join(" ")
    )
}

fn render_is_ke(g: &Graph, mu: usize, verdict: &KeVerdict, json: bool) -> String {
    let witness = verdict.witness().map(|w| w.to_vec());
    let reason = verdict.reason().map(|r| r.to_string());
    if json {
        return line(json!({
            "n": g.order(),
            "m": g.size(),
            "mu": mu,
            "is_ke": verdict.is_ke(),
            "witness": witness,
            "reason": reason,
        }));
    }
    let mut s = format!("ke {}\nmu {mu}\n", yes_no(verdict.is_ke()));
    if let Some(w) = witness {
        let _ = writeln!(s, "witness {}", ids(&w));
    }
    if let Some(r) = reason {
        let _ = writeln!(s, "reason {r}");
    }
    s
}

fn render_verify(r: &VerifyReport, json: bool) -> String {
    if json {
        let theorem: Vec<Value> = r
            .theorem
            .iter()
            .map(|t| {
                json!({
                    "vertex": t.vertex,
                    "case": match t.case {
                        kegraph_core::oracle::TheoremCase::MuKept => "mu-kept",
                        kegraph_core::oracle::TheoremCase::MuDropped => "mu-dropped",
                    },
                    "minus_is_ke": t.minus_is_ke,
                    "in_core": t.in_core,
                    "pass": t.pass,
                })
            })
            .collect();
        let structure: serde_json::Map<String, Value> = r
            .structure
            .iter()
            .map(|s| (s.name.to_string(), json!(s.status.name())))
            .collect();
        let modes: serde_json::Map<String, Value> = r
            .modes
            .iter()
            .map(|(m, s)| (m.to_string(), json!(s.name())))
            .collect();
        return line(json!({
            "n": r.n,
            "m": r.m,
            "ok": r.ok(),
            "mu": {"solver": r.mu, "oracle": r.brute_mu},
            "is_ke": {"solver": r.is_ke, "oracle": r.brute_is_ke},
            "alpha": {"solver": r.alpha, "oracle": r.brute_alpha},
            "core": {"solver": r.core, "oracle": r.brute_core},
            "modes": modes,
            "theorem": theorem,
            "structure": structure,
            "mismatches": r.mismatches(),
        }));
    }
    let mut s = String::new();
    let _ = writeln!(s, "mu {} oracle {}", r.mu, r.brute_mu);
    let _ = writeln!(s, "ke {} oracle {}", yes_no(r.is_ke), yes_no(r.brute_is_ke));
    let _ = writeln!(s, "alpha {} oracle {}", opt(r.alpha), r.brute_alpha);
    let _ = writeln!(
        s,
        "core {} oracle {}",
        r.core.as_deref().map_or("-".to_string(), ids),
        ids(&r.brute_core)
    );
    for (m, st) in &r.modes {
        let _ = writeln!(s, "mode {m} {}", st.name());
    }
    for t in &r.theorem {
        let _ = writeln!(
            s,
            "vertex {} {:?} {}",
            t.vertex,
            t.case,
            if t.pass { "pass" } else { "fail" }
        );
    }
    for c in &r.structure {
        let _ = writeln!(s, "structure {} {}", c.name, c.status.name());
    }
    let _ = writeln!(s, "ok {}", yes_no(r.ok()));
    s
}

fn opt(v: Option<usize>) -> String {
    v.map_or("-".to_string(), |x| x.to_string())
}
