//! Acceptance suite. Prints one PASS/FAIL line per criterion and fails if any
//! criterion fails. Run with `cargo test --test acceptance -- --nocapture`.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use affsat::cartan::{dominance_leq, Rank, Weight};
use affsat::crystal::{
    tensor_highest_weights, tensor_weight_multiplicity, weight_multiplicity, CrystalGraph,
    GenerationConfig,
};
use affsat::freudenthal::{freudenthal_multiplicity, Freudenthal};
use affsat::satake::{attracting_component_count, enumerate_leaves, fixed_point_count};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

/// Every graph built here goes through the axiom checker.
#[derive(Default)]
struct Axioms {
    graphs: usize,
    nodes: usize,
    violations: Vec<String>,
}

impl Axioms {
    fn generate(&mut self, lambda: &Weight, budget: &[i64], config: &GenerationConfig) -> CrystalGraph {
        let g = CrystalGraph::generate(lambda, budget, config).expect("generation succeeds");
        self.graphs += 1;
        self.nodes += g.len();
        self.violations.extend(g.axiom_violations().into_iter().take(5));
        g
    }
}

fn rank(n: usize) -> Rank {
    Rank::new(n).unwrap()
}

fn lam(n: usize, w: &[i64]) -> Weight {
    Weight::highest(rank(n), w.to_vec()).unwrap()
}

fn boxed(c: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &ci in c {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=ci).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

fn dominant_of_level(n: usize, level: i64) -> Vec<Vec<i64>> {
    boxed(&vec![level; n]).into_iter().filter(|w| w.iter().sum::<i64>() == level).collect()
}

/// Pairing `<lambda - sum c_j alpha_j, h_i>` from the Cartan matrix written out by hand.
fn pairing(w: &[i64], c: &[i64], i: usize) -> i64 {
    let n = w.len();
    let a = |i: usize, j: usize| -> i64 {
        if i == j {
            2
        } else if n == 2 {
            -2
        } else if (i + 1) % n == j || (j + 1) % n == i {
            -1
        } else {
            0
        }
    };
    w[i] - (0..n).map(|j| a(i, j) * c[j]).sum::<i64>()
}

/// Number of `colors`-colored partitions of 0..=max.
fn colored_partitions(colors: usize, max: usize) -> Vec<u64> {
    let mut p = vec![0u64; max + 1];
    p[0] = 1;
    for _ in 0..colors {
        for part in 1..=max {
            for m in part..=max {
                p[m] += p[m - part];
            }
        }
    }
    p
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    if elapsed > Duration::from_secs(limit_secs) {
        Err(format!("took {:.1?}, limit {limit_secs} s", elapsed))
    } else {
        Ok(())
    }
}

fn oracle_agreement(axioms: &mut Axioms) -> Outcome {
    let start = Instant::now();
    let mut compared = 0usize;
    let mut nonzero = 0usize;
    for n in [2, 3] {
        for level in 1..=2 {
            for w in dominant_of_level(n, level) {
                let lambda = lam(n, &w);
                let budget = vec![4; n];
                let g = axioms.generate(&lambda, &budget, &GenerationConfig::default());
                let counts = g.weight_counts();
                let mut oracle = Freudenthal::new(&lambda).unwrap();
                for c in boxed(&budget) {
                    let crystal = counts.get(&c).copied().unwrap_or(0);
                    let expected = oracle.lowering_multiplicity(&c).map_err(|e| e.to_string())?;
                    if crystal != expected {
                        return Err(format!("n={n} w={w:?} c={c:?}: crystal {crystal}, Freudenthal {expected}"));
                    }
                    compared += 1;
                    nonzero += usize::from(crystal > 0);
                }
                // The public entry points agree with the bulk comparison.
                for c in [vec![4; n], vec![1; n], budget.iter().enumerate().map(|(i, _)| (i % 2) as i64 * 3).collect()] {
                    let mu = lambda.with_lowering(c.clone()).unwrap();
                    let a = weight_multiplicity(&lambda, &mu).map_err(|e| e.to_string())?;
                    let b = freudenthal_multiplicity(&lambda, &mu).map_err(|e| e.to_string())?;
                    if a != b || a != counts.get(&c).copied().unwrap_or(0) {
                        return Err(format!("n={n} w={w:?} c={c:?}: entry points disagree ({a} vs {b})"));
                    }
                }
            }
        }
    }
    within(start.elapsed(), 60)?;
    Ok(format!("{compared} weights compared, {nonzero} nonzero, {:.1?}", start.elapsed()))
}

fn basic_strings(axioms: &mut Axioms) -> Outcome {
    let start = Instant::now();
    let cases: [(usize, usize, &[u64]); 2] = [(2, 6, &[1, 1, 2, 3, 5, 7, 11]), (3, 4, &[1, 2, 5, 10, 20])];
    for (n, depth, expected) in cases {
        let lambda = Weight::fundamental(rank(n), 0);
        let g = axioms.generate(&lambda, &vec![depth as i64; n], &GenerationConfig::default());
        let mut oracle = Freudenthal::new(&lambda).unwrap();
        let generating = colored_partitions(n - 1, depth);
        for d in 0..=depth {
            let c = vec![d as i64; n];
            let crystal = g.multiplicity(&c);
            let freud = oracle.lowering_multiplicity(&c).map_err(|e| e.to_string())?;
            if crystal != expected[d] || freud != expected[d] || generating[d] != expected[d] {
                return Err(format!(
                    "n={n} d={d}: crystal {crystal}, Freudenthal {freud}, partitions {}, expected {}",
                    generating[d], expected[d]
                ));
            }
        }
    }
    within(start.elapsed(), 30)?;
    Ok(format!("n=2 d<=6 and n=3 d<=4 match, {:.1?}", start.elapsed()))
}

fn chain_regression() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for n in 3..=5 {
        let r = rank(n);
        let (l1, l2) = (Weight::fundamental(r, 1), Weight::fundamental(r, n - 1));
        let mut w = vec![0; n];
        w[1] += 1;
        w[n - 1] += 1;
        let mut c = vec![1; n];
        c[0] = 0;
        let mu = lam(n, &w).with_lowering(c.clone()).unwrap();
        let got = tensor_weight_multiplicity(&l1, &l2, &mu).map_err(|e| e.to_string())?;
        // Splittings c = x + (c - x), each factor by Freudenthal.
        let brute: u64 = boxed(&c)
            .into_iter()
            .map(|x| {
                let y: Vec<i64> = c.iter().zip(&x).map(|(a, b)| a - b).collect();
                let a = freudenthal_multiplicity(&l1, &l1.with_lowering(x).unwrap()).unwrap();
                let b = freudenthal_multiplicity(&l2, &l2.with_lowering(y).unwrap()).unwrap();
                a * b
            })
            .sum();
        if got != n as u64 || brute != n as u64 {
            return Err(format!("n={n}: got {got}, brute force {brute}, expected {n}"));
        }
        seen.push(got);
    }
    within(start.elapsed(), 10)?;
    Ok(format!("multiplicities {seen:?} for n = 3,4,5, {:.1?}", start.elapsed()))
}

fn adjoint_plus_trivial() -> Outcome {
    for n in [3, 4] {
        let r = rank(n);
        let (l1, l2) = (Weight::fundamental(r, 1), Weight::fundamental(r, n - 1));
        let mut w = vec![0; n];
        w[1] += 1;
        w[n - 1] += 1;
        let top = lam(n, &w);
        let mut c = vec![1; n];
        c[0] = 0;
        let trivial = top.with_lowering(c).unwrap();
        for depth in [1, 2] {
            let hw = tensor_highest_weights(&l1, &l2, &vec![depth; n]).map_err(|e| e.to_string())?;
            let degree_zero: BTreeMap<_, _> = hw.into_iter().filter(|(k, _)| k.delta_degree() == 0).collect();
            let ok = degree_zero.len() == 2
                && degree_zero.iter().any(|(k, &m)| k.same_as(&top) && m == 1)
                && degree_zero.iter().any(|(k, &m)| k.same_as(&trivial) && m == 1);
            if !ok {
                return Err(format!("n={n} budget {depth}: degree-zero highest weights {degree_zero:?}"));
            }
        }
    }
    Ok("n = 3,4: {lambda: 1, lambda - theta: 1} at degree 0".into())
}

fn branching(axioms: &mut Axioms) -> Outcome {
    let mut checked = 0usize;
    let cases: [(usize, &[i64]); 6] =
        [(2, &[1, 0]), (2, &[1, 1]), (2, &[2, 1]), (3, &[1, 0, 0]), (3, &[1, 1, 0]), (4, &[1, 0, 1, 0])];
    for (n, w) in cases {
        let lambda = lam(n, w);
        let g = axioms.generate(&lambda, &vec![3; n], &GenerationConfig::default());
        for c in boxed(&vec![2; n]) {
            let mu = lambda.with_lowering(c.clone()).unwrap();
            for i in 0..n {
                let table = g.levi_branching(&c, i).map_err(|e| e.to_string())?;
                if mu.pairing(i) >= 0 && table.total() != g.multiplicity(&c) {
                    return Err(format!("w={w:?} c={c:?} i={i}: sum {} vs mult {}", table.total(), g.multiplicity(&c)));
                }
                let mut below = c.clone();
                below[i] += 1;
                let lower = g.levi_branching(&below, i).map_err(|e| e.to_string())?;
                for k in 0..=c[i] {
                    if table.get(k) != lower.get(k + 1) {
                        return Err(format!("w={w:?} c={c:?} i={i} k={k}: {} vs {}", table.get(k), lower.get(k + 1)));
                    }
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (lambda, mu, i) triples"))
}

/// Independent count of strata, straight from the labeling rule.
fn leaf_count_oracle(w: &[i64], v: &[i64], include_empty: bool) -> usize {
    let n = w.len();
    let level: i64 = w.iter().sum();
    let partitions = colored_partitions(1, *v.iter().min().unwrap() as usize);
    boxed(v)
        .into_iter()
        .filter(|c| (0..n).all(|i| pairing(w, c, i) >= 0))
        .filter(|c| include_empty || level != 1 || c.as_slice() == v)
        .map(|c| {
            let m = *c.iter().min().unwrap() as usize;
            partitions[..=m].iter().sum::<u64>() as usize
        })
        .sum()
}

fn leaves() -> Outcome {
    let l0 = Weight::fundamental(rank(2), 0);
    let mu = l0.minus_delta(1);
    let filtered = enumerate_leaves(&l0, &mu, false).map_err(|e| e.to_string())?.len();
    let unfiltered = enumerate_leaves(&l0, &mu, true).map_err(|e| e.to_string())?.len();
    if (filtered, unfiltered) != (2, 3) || leaf_count_oracle(&[1, 0], &[1, 1], false) != 2 {
        return Err(format!("Lambda_0 - delta: {filtered} and {unfiltered} strata"));
    }
    let mut rng = StdRng::seed_from_u64(0x1eaf);
    let mut strata_seen = 0usize;
    for case in 0..150 {
        let n = rng.gen_range(2..=4);
        let level = rng.gen_range(1..=3);
        let mut w = vec![0i64; n];
        for _ in 0..level {
            w[rng.gen_range(0..n)] += 1;
        }
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        let include_empty = rng.gen_bool(0.5);
        let lambda = lam(n, &w);
        let mu = lambda.with_lowering(v.clone()).unwrap();
        let strata = enumerate_leaves(&lambda, &mu, include_empty).map_err(|e| e.to_string())?;
        if strata.len() != leaf_count_oracle(&w, &v, include_empty) {
            return Err(format!("case {case} w={w:?} v={v:?}: {} strata, oracle disagrees", strata.len()));
        }
        for s in &strata {
            let size = s.k.size() as i64;
            let upper = lambda.minus_delta(size);
            let ok = s.kappa.is_dominant()
                && dominance_leq(&mu, &s.kappa).unwrap_or(false)
                && dominance_leq(&s.kappa, &upper).unwrap_or(false)
                && size <= *s.kappa.c().iter().min().unwrap();
            if !ok {
                return Err(format!("case {case} w={w:?} v={v:?}: bad stratum {s:?}"));
            }
        }
        let at_top = enumerate_leaves(&lambda, &lambda, include_empty).map_err(|e| e.to_string())?;
        if at_top.len() != 1 {
            return Err(format!("case {case} w={w:?}: mu = lambda gives {} strata", at_top.len()));
        }
        strata_seen += strata.len();
    }
    Ok(format!("2/3 strata at Lambda_0 - delta; 150 random cases, {strata_seen} strata checked"))
}

fn fixed_points() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xf1ed);
    let mut nonempty = 0;
    for case in 0..200 {
        let n = rng.gen_range(2..=3);
        let level = rng.gen_range(1..=2);
        let mut w = vec![0i64; n];
        for _ in 0..level {
            w[rng.gen_range(0..n)] += 1;
        }
        let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-1..=3)).collect();
        let lambda = lam(n, &w);
        let mu = lambda.with_lowering(c.clone()).unwrap();
        let fixed = fixed_point_count(&lambda, &mu).map_err(|e| e.to_string())?;
        let components = attracting_component_count(&lambda, &mu).map_err(|e| e.to_string())?;
        let freud = if c.iter().all(|&x| x >= 0) { freudenthal_multiplicity(&lambda, &mu).unwrap() } else { 0 };
        if fixed > 1 || fixed != u64::from(components > 0) || components != freud {
            return Err(format!("case {case} w={w:?} c={c:?}: {fixed} fixed, {components} components, {freud} expected"));
        }
        nonempty += fixed;
    }
    Ok(format!("200 random pairs, {nonempty} with a fixed point"))
}

fn determinism(axioms: &mut Axioms) -> Outcome {
    let lambda = lam(3, &[1, 1, 0]);
    let budget = [3, 3, 3];
    let settings = [None, Some(1), Some(2), Some(3), Some(8)];
    let mut digests = Vec::new();
    for threads in settings {
        let config = GenerationConfig { threads, ..GenerationConfig::default() };
        digests.push(axioms.generate(&lambda, &budget, &config).digest());
    }
    if digests.iter().any(|d| d != &digests[0]) {
        return Err(format!("digests differ: {digests:?}"));
    }

    let dir = tempfile::tempdir().unwrap();
    let run = |cache: bool| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_affsat"));
        cmd.args(["crystal", "-n", "3", "-w", "1,1,0", "--depth", "3"]).env_remove("AFFSAT_CACHE_DIR");
        if cache {
            cmd.arg("--cache-dir").arg(dir.path());
        }
        cmd.output().expect("binary runs")
    };
    let uncached = run(false);
    let cold = run(true);
    let entries = std::fs::read_dir(dir.path()).unwrap().count();
    let warm = run(true);
    for (name, out) in [("uncached", &uncached), ("cold", &cold), ("warm", &warm)] {
        if !out.status.success() || !out.stderr.is_empty() {
            return Err(format!("{name} run: {:?}, stderr {}", out.status, String::from_utf8_lossy(&out.stderr)));
        }
    }
    if entries != 1 {
        return Err(format!("cold run left {entries} cache entries"));
    }
    if cold.stdout != warm.stdout || cold.stdout != uncached.stdout {
        return Err("warm, cold and uncached outputs differ".into());
    }
    Ok(format!("5 thread settings -> {}, warm/cold CLI output identical ({} bytes)", &digests[0][..16], warm.stdout.len()))
}

fn axiom_suite(axioms: &mut Axioms) -> Outcome {
    let sweep: [(usize, &[i64], i64); 5] =
        [(2, &[2, 1], 8), (3, &[1, 1, 1], 5), (3, &[0, 2, 1], 4), (4, &[1, 0, 1, 0], 3), (5, &[1, 0, 0, 0, 0], 3)];
    for (n, w, depth) in sweep {
        axioms.generate(&lam(n, w), &vec![depth; n], &GenerationConfig::default());
    }
    if !axioms.violations.is_empty() {
        return Err(format!("violations: {:?}", axioms.violations));
    }
    if axioms.nodes < 10_000 {
        return Err(format!("only {} nodes checked", axioms.nodes));
    }
    Ok(format!("{} graphs, {} nodes, no violations", axioms.graphs, axioms.nodes))
}

#[test]
fn acceptance() {
    let mut axioms = Axioms::default();
    let mut results: Vec<(u32, &str, Outcome)> = vec![
        (1, "oracle agreement", oracle_agreement(&mut axioms)),
        (2, "basic representation strings", basic_strings(&mut axioms)),
        (3, "chain of projective lines", chain_regression()),
        (4, "adjoint plus trivial", adjoint_plus_trivial()),
        (6, "branch sum rule and stability", branching(&mut axioms)),
        (7, "leaf enumeration", leaves()),
        (8, "fixed-point dichotomy", fixed_points()),
        (9, "determinism", determinism(&mut axioms)),
    ];
    results.push((5, "crystal axioms", axiom_suite(&mut axioms)));
    results.sort_by_key(|r| r.0);

    let mut failed = 0;
    for (id, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {id} [{name}]: PASS ({detail})"),
            Err(why) => {
                failed += 1;
                println!("criterion {id} [{name}]: FAIL ({why})");
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
