//! Exit criteria. Each criterion prints one PASS/FAIL line; the test fails if
//! any criterion fails.

use std::num::NonZeroUsize;
use std::time::{Duration, Instant};

use kegraph::cli::{run, Command, Format, RunConfig};
use kegraph::edgelist;
use kegraph_core::fixtures::{self, Fixture};
use kegraph_core::generator::{gen_ke, Flavor, GenSpec};
use kegraph_core::oracle::{self, CheckStatus};
use kegraph_core::solver::{alpha_ke, core_general, core_perfect_matching};
use kegraph_core::{compute_core, is_ke, maximum_matching, mu_after_delete, Graph, Mode, Sequential};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn labels(f: &Fixture, names: &[&str]) -> Vec<usize> {
    let mut v: Vec<usize> = names.iter().map(|l| f.id(l)).collect();
    v.sort_unstable();
    v
}

fn corpus() -> Vec<(GenSpec, Graph)> {
    (1..=1000u64)
        .map(|seed| {
            let spec = GenSpec::sample(seed, 14);
            (spec, gen_ke(&spec).expect("sampled specs are valid"))
        })
        .collect()
}

fn large_spec() -> GenSpec {
    GenSpec {
        n: 2000,
        mu: 700,
        extra_edge_prob: 0.01,
        seed: 7,
        flavor: Flavor::Ke,
    }
}

fn fixture_exactness() -> Outcome {
    let start = Instant::now();
    let auto = |f: &Fixture| {
        compute_core(&f.graph(), Mode::Auto, &Sequential)
            .map(|r| r.core.to_vec())
            .map_err(|e| format!("{}: {e}", f.name))
    };
    let expected: [(&Fixture, &[&str]); 7] = [
        (&fixtures::FIG4_G1, &["v5", "v6", "v7"]),
        (&fixtures::FIG4_G2, &["x6", "x7"]),
        (&fixtures::FIG3_G1, &["u", "v"]),
        (&fixtures::FIG3_G2, &["a", "b", "c"]),
        (&fixtures::FIG111_H1, &["x"]),
        (&fixtures::FIG111_H2, &["u", "v"]),
        (&fixtures::FIG5_G1, &["v1", "v3"]),
    ];
    for (f, names) in expected {
        let got = auto(f)?;
        ensure(got == labels(f, names), || format!("core({}) = {got:?}", f.name))?;
    }
    let empty = auto(&fixtures::FIG5_G2)?;
    ensure(empty.is_empty(), || format!("core(FIG5-G2) = {empty:?}"))?;
    ensure(!is_ke(&fixtures::FIG1_H3.graph()).is_ke(), || "FIG1-H3 reported KE".into())?;
    let alpha = alpha_ke(&fixtures::FIG3_G1.graph());
    ensure(alpha == Ok(4), || format!("alpha(FIG3-G1) = {alpha:?}"))?;
    for f in [&fixtures::FIG4_G1, &fixtures::FIG4_G2] {
        let mu = maximum_matching(&f.graph()).size();
        ensure(mu == 3, || format!("mu({}) = {mu}", f.name))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("11 values exact in {elapsed:?}"))
}

fn general_trace_fig4_g1() -> Outcome {
    let f = &fixtures::FIG4_G1;
    let g = f.graph();
    let m = maximum_matching(&g);
    let r = core_general(&g, &Sequential).map_err(|e| e.to_string())?;
    ensure(r.mu == 3, || format!("mu = {}", r.mu))?;

    let kept: Vec<usize> = g
        .vertices()
        .filter(|&v| mu_after_delete(&g, &m, v).unwrap() == r.mu)
        .collect();
    ensure(kept == labels(f, &["v6", "v7"]), || format!("mu kept at {kept:?}"))?;
    let undecided: Vec<usize> = g.vertices().filter(|&v| r.ke_flag[v].is_none()).collect();
    ensure(undecided == kept, || format!("equality branch at {undecided:?}"))?;

    let ke_one: Vec<usize> = g.vertices().filter(|&v| r.ke_flag[v] == Some(true)).collect();
    ensure(ke_one == labels(f, &["v1", "v2", "v3", "v4"]), || {
        format!("ke=1 at {ke_one:?}")
    })?;
    let ke_zero: Vec<usize> = g.vertices().filter(|&v| r.ke_flag[v] == Some(false)).collect();
    ensure(ke_zero == labels(f, &["v5"]), || format!("ke=0 at {ke_zero:?}"))?;
    ensure(r.core.to_vec() == labels(f, &["v5", "v6", "v7"]), || {
        format!("core {:?}", r.core)
    })?;
    Ok("mu-kept {v6,v7}, ke=1 {v1..v4}, ke=0 {v5}".into())
}

fn perfect_matching_traces() -> Outcome {
    let f = &fixtures::FIG5_G1;
    let r = core_perfect_matching(&f.graph(), &Sequential).map_err(|e| e.to_string())?;
    let zeros: Vec<usize> = (0..f.n).filter(|&v| r.ke_flag[v] == Some(false)).collect();
    ensure(zeros == labels(f, &["v1", "v3"]), || format!("FIG5-G1 ke=0 at {zeros:?}"))?;
    ensure(r.ke_flag.iter().all(Option::is_some), || "FIG5-G1 undefined flag".into())?;

    let r = core_perfect_matching(&fixtures::FIG5_G2.graph(), &Sequential)
        .map_err(|e| e.to_string())?;
    ensure(r.ke_flag.iter().all(|&k| k == Some(true)), || {
        format!("FIG5-G2 flags {:?}", r.ke_flag)
    })?;
    Ok("FIG5-G1 ke=0 exactly at {v1,v3}; FIG5-G2 all ke=1".into())
}

fn oracle_equivalence(corpus: &[(GenSpec, Graph)]) -> Outcome {
    let start = Instant::now();
    let mut flavors = [0usize; 3];
    for (spec, g) in corpus {
        flavors[spec.flavor as usize] += 1;
        let seed = spec.seed;
        let family = oracle::enumerate_mis(g).map_err(|e| e.to_string())?;
        let brute_mu = oracle::brute_mu(g).map_err(|e| e.to_string())?;
        let brute_core = family.core(g.order());

        let mu = maximum_matching(g).size();
        ensure(mu == brute_mu, || format!("seed {seed}: mu {mu} vs {brute_mu}"))?;
        let ke = is_ke(g).is_ke();
        ensure(ke == (family.alpha + brute_mu == g.order()), || {
            format!("seed {seed}: is_ke {ke}")
        })?;
        let core = compute_core(g, Mode::Auto, &Sequential)
            .map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(core.core == brute_core, || {
            format!("seed {seed}: core {:?} vs {:?}", core.core, brute_core)
        })?;
        let alpha = alpha_ke(g).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(alpha == family.alpha, || {
            format!("seed {seed}: alpha {alpha} vs {}", family.alpha)
        })?;
    }
    ensure(flavors.iter().all(|&c| c > 0), || format!("flavor mix {flavors:?}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} graphs, 0 mismatches, flavors {flavors:?}, {elapsed:?}",
        corpus.len()
    ))
}

fn theorem_suite(corpus: &[(GenSpec, Graph)]) -> Outcome {
    let mut checks = 0;
    for (spec, g) in corpus {
        for v in g.vertices() {
            let c = oracle::verify_theorem_th(g, v).map_err(|e| format!("seed {}: {e}", spec.seed))?;
            ensure(c.pass, || format!("seed {}: {c:?}", spec.seed))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} vertex checks, 0 failures"))
}

fn structure_suite(corpus: &[(GenSpec, Graph)]) -> Outcome {
    let mut applicable: std::collections::BTreeMap<&str, usize> = Default::default();
    let all = corpus
        .iter()
        .map(|(_, g)| g.clone())
        .chain(fixtures::ALL.iter().map(|f| f.graph()));
    for g in all {
        for c in oracle::validate_structure(&g).map_err(|e| e.to_string())? {
            ensure(c.status != CheckStatus::Fail, || {
                format!("{} fails on {}", c.name, edgelist::write(&g, &[]))
            })?;
            let slot = applicable.entry(c.name).or_default();
            if c.status == CheckStatus::Pass {
                *slot += 1;
            }
        }
    }
    ensure(applicable.values().all(|&n| n > 0), || {
        format!("a check never applied: {applicable:?}")
    })?;
    Ok(format!("applicable passes {applicable:?}"))
}

fn core_output(input: &str, workers: usize) -> String {
    let mut c = RunConfig::new(Command::Core);
    c.format = Format::Json;
    c.workers = NonZeroUsize::new(workers).unwrap();
    let out = run(&c, input);
    assert_eq!(out.code, 0, "{}", out.stderr);
    out.stdout
}

fn determinism(large: &Graph) -> Outcome {
    let small = edgelist::write(&fixtures::FIG4_G1.graph(), &[]);
    let big = edgelist::write(large, &[]);
    for (name, text) in [("FIG4-G1", &small), ("n=2000", &big)] {
        let one = core_output(text, 1);
        let eight = core_output(text, 8);
        ensure(one == eight, || format!("{name}: outputs differ between 1 and 8 workers"))?;
    }
    Ok("byte-identical for 1 and 8 workers".into())
}

fn scale(large: &Graph) -> Outcome {
    let start = Instant::now();
    let r = compute_core(large, Mode::Auto, &Sequential).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(r.mu == 700, || format!("mu = {}", r.mu))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "n=2000 m={} |core|={} via {} in {elapsed:?}",
        large.size(),
        r.core.len(),
        r.algorithm
    ))
}

#[test]
fn acceptance() {
    let corpus = corpus();
    let large = gen_ke(&large_spec()).unwrap();
    let results: Vec<(&str, Outcome)> = vec![
        ("1 fixture exactness", fixture_exactness()),
        ("2 general trace on FIG4-G1", general_trace_fig4_g1()),
        ("3 perfect-matching traces on FIG5", perfect_matching_traces()),
        ("4 oracle equivalence", oracle_equivalence(&corpus)),
        ("5 deletion dichotomy suite", theorem_suite(&corpus)),
        ("6 structure-theorem suite", structure_suite(&corpus)),
        ("7 determinism across workers", determinism(&large)),
        ("8 scale sanity", scale(&large)),
    ];
    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
