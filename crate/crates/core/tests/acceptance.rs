//! Acceptance criteria 1 to 10, one PASS/FAIL line each.

mod common;

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use hkcolor::fglss::{
    alpha_coloring, good_fraction_curve, is_good_query, mwis_exact, verify_coloring, FglssGraph, LabelingScope,
    DEFAULT_GOOD_CAP,
};
use hkcolor::label_cover::{extend, gen_random, value_exact, GenParams, DEFAULT_VALUE_CAP};
use hkcolor::pcp::{
    accept_prob_exact_enum, accept_prob_exact_product, accept_prob_mc, Proof, VerifierConfig, DEFAULT_ENUM_CAP,
};
use hkcolor::predicate::HadamardPredicate;
use hkcolor::weights::Weight;
use hkcolor::Sign;
use num_traits::{One, Zero};

use common::{tiny1, within_sigmas};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed(limit: Duration, start: Instant) -> Result<String, String> {
    let el = start.elapsed();
    check(el < limit, format!("took {el:.2?}, limit {limit:?}"))?;
    Ok(format!("{el:.2?}"))
}

fn c1_predicate_counts() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for r in 2..=3u32 {
        let h = HadamardPredicate::new(r).unwrap();
        let k = h.arity();
        let count = (0u32..1 << k)
            .filter(|m| {
                let x: Vec<Sign> = (0..k).map(|j| Sign::from_minus(m >> j & 1 == 1)).collect();
                h.evaluate(&x).unwrap()
            })
            .count();
        check(count == k + 1, format!("r={r}: {count} accepting of 2^{k}"))?;
        notes.push(format!("r={r}: {count}"));
    }
    let h = HadamardPredicate::new(4).unwrap();
    let all_accept = h.accepting_set().iter().all(|c| h.evaluate(c.bits()).unwrap());
    check(h.codeword_count() == 16 && all_accept, "r=4: generator count")?;
    notes.push("r=4: 16".into());
    let t = timed(Duration::from_secs(1), start)?;
    Ok(format!("{} ({t})", notes.join(", ")))
}

fn c2_perfect_completeness() -> Outcome {
    let start = Instant::now();
    let (inst, lab) = tiny1();
    let cfg = VerifierConfig::new(2, 1).with_eta(0.0);
    let proof = Proof::correct(lab, 0, 0).unwrap();
    let mc = accept_prob_mc(&inst, &cfg, &proof, 100_000).map_err(|e| e.to_string())?;
    check(
        mc.accepted == mc.trials,
        format!("{} rejections", mc.trials - mc.accepted),
    )?;
    let exact = accept_prob_exact_enum(&inst, &cfg, &proof, DEFAULT_ENUM_CAP).map_err(|e| e.to_string())?;
    check(exact.probability.is_one(), format!("exact = {}", exact.probability))?;
    let t = timed(Duration::from_secs(30), start)?;
    Ok(format!("0 rejections in 10^5, exact = 1 ({t})"))
}

fn c3_noisy_completeness() -> Outcome {
    let start = Instant::now();
    let (inst, lab) = tiny1();
    let k2 = 9.0;
    let mut notes = Vec::new();
    for (n, eta) in [1.0 / (2.0 * k2), 1.0 / k2].into_iter().enumerate() {
        let cfg = VerifierConfig::new(2, 100 + n as u64).with_eta(eta);
        let mc = accept_prob_mc(&inst, &cfg, &Proof::correct(lab.clone(), 0, 0).unwrap(), 1_000_000)
            .map_err(|e| e.to_string())?;
        let exact = accept_prob_exact_product(&inst, &cfg, &lab, 0).map_err(|e| e.to_string())?;
        check(
            mc.estimate >= 1.0 - k2 * eta,
            format!("η={eta}: {} < {}", mc.estimate, 1.0 - k2 * eta),
        )?;
        check(
            within_sigmas(mc.estimate, exact, mc.stderr, 3.0),
            format!("η={eta}: MC {} vs exact {exact} (stderr {})", mc.estimate, mc.stderr),
        )?;
        notes.push(format!("η={eta:.4}: MC {:.5} exact {exact:.5}", mc.estimate));
    }
    let t = timed(Duration::from_secs(120), start)?;
    Ok(format!("{} ({t})", notes.join("; ")))
}

fn c4_random_baseline() -> Outcome {
    let (inst, _) = tiny1();
    let mut notes = Vec::new();
    for r in [2u32, 3] {
        let k = (1u32 << r) - 1;
        let want = (k + 1) as f64 / 2f64.powi(k as i32);
        let cfg = VerifierConfig::new(r, 40 + r as u64);
        let mc = accept_prob_mc(&inst, &cfg, &Proof::random(r as u64), 100_000).map_err(|e| e.to_string())?;
        check(
            within_sigmas(mc.estimate, want, mc.stderr, 3.0),
            format!("r={r}: {} vs {want} (stderr {})", mc.estimate, mc.stderr),
        )?;
        notes.push(format!("r={r}: {:.5} vs {want}", mc.estimate));
    }
    Ok(notes.join("; "))
}

fn c5_extension_value() -> Outcome {
    let start = Instant::now();
    let (tiny, _) = tiny1();
    let random = gen_random(
        GenParams {
            u_count: 2,
            v_count: 3,
            left_labels: 2,
            d: 2,
            edge_count: 6,
        },
        2,
    )
    .unwrap();
    let mut notes = Vec::new();
    for (name, inst) in [("TINY-1", &tiny), ("random", &random)] {
        let base = value_exact(inst, DEFAULT_VALUE_CAP).map_err(|e| e.to_string())?.value;
        for t in [1, 2] {
            let ext = extend(inst, t).unwrap();
            let v = value_exact(&ext, DEFAULT_VALUE_CAP).map_err(|e| e.to_string())?.value;
            check(v == base, format!("{name} t={t}: {v} vs {base}"))?;
        }
        notes.push(format!("{name}: {base}"));
    }
    let t = timed(Duration::from_secs(60), start)?;
    Ok(format!("{} at t = 0, 1, 2 ({t})", notes.join(", ")))
}

fn c6_fglss_identities() -> Outcome {
    let (inst, lab) = tiny1();
    let k = 3;
    for (seed, n) in [(1u64, 1usize), (2, 7), (3, 64)] {
        let g = FglssGraph::build_sampled(&inst, &VerifierConfig::new(2, seed), n).unwrap();
        check(
            g.total_weight() == Weight::from_integer((k + 1).into()),
            format!("N={n}: total weight"),
        )?;
        for q in 0..n {
            for a in 0..=k {
                for b in 0..a {
                    check(
                        g.conflict(g.vertex_id(q, a), g.vertex_id(q, b)),
                        format!("N={n}: query {q} clique"),
                    )?;
                }
            }
        }
    }
    let cfg = VerifierConfig::new(2, 6);
    let g = FglssGraph::build_sampled(&inst, &cfg, 64).unwrap();
    for proof in [Proof::correct(lab, 0, 0).unwrap(), Proof::random(9)] {
        let is = g.is_from_proof(&proof).map_err(|e| e.to_string())?;
        let accepted = g
            .queries
            .iter()
            .filter(|lq| g.predicate().evaluate(&proof.eval(&inst, &lq.query).unwrap()).unwrap())
            .count();
        let frac = Weight::new(accepted.into(), 64.into());
        check(
            is.weight == frac,
            format!("IS weight {} vs accept fraction {frac}", is.weight),
        )?;
        check(g.is_independent(&is.vertices), "proof set not independent")?;
    }
    Ok("total weight K+1, per-query cliques, IS weight = accept fraction on 64 trials".into())
}

fn brute_mwis(g: &FglssGraph) -> Weight {
    let n = g.vertex_count();
    let mut best = Weight::zero();
    for s in 0u32..1 << n {
        let set: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
        if g.is_independent(&set) {
            let w: Weight = set.iter().fold(Weight::zero(), |acc, &v| acc + &g.vertices[v].weight);
            if w > best {
                best = w;
            }
        }
    }
    best
}

fn c7_mwis() -> Outcome {
    let (inst, _) = tiny1();
    for i in 0..25u64 {
        let n = 1 + (i % 5) as usize;
        let eta = if i % 2 == 0 { 0.0 } else { 1.0 / 9.0 };
        let g = FglssGraph::build_sampled(&inst, &VerifierConfig::new(2, 500 + i).with_eta(eta), n).unwrap();
        check(g.vertex_count() <= 20, "graph too large")?;
        let best = mwis_exact(&g, 60).map_err(|e| e.to_string())?;
        let brute = brute_mwis(&g);
        check(
            best.weight == brute,
            format!("graph {i}: {} vs brute {brute}", best.weight),
        )?;
        let strat = g.strategy_from_is(&best.vertices).map_err(|e| e.to_string())?;
        check(
            strat.accept_weight == best.weight,
            format!("graph {i}: strategy {}", strat.accept_weight),
        )?;
    }
    Ok("25 graphs agree with 2^n enumeration; strategies re-evaluate exactly".into())
}

fn c8_alpha_coloring() -> Outcome {
    let (inst, lab) = tiny1();
    let ext = extend(&inst, 3).unwrap();
    let g = FglssGraph::build_sampled(&ext, &VerifierConfig::new(2, 8), 32).unwrap();
    let col = alpha_coloring(&g, &lab).map_err(|e| e.to_string())?;
    check(
        col.colors.len() + col.removed.len() == g.vertex_count(),
        "vertices unaccounted for",
    )?;
    let bad = verify_coloring(&g, &col);
    check(bad.is_empty(), format!("{} violations", bad.len()))?;
    check(col.palette_size() <= 8, format!("palette {}", col.palette_size()))?;
    let proofs: Vec<Proof> = (0..8).map(|a| Proof::correct(lab.clone(), a, 3).unwrap()).collect();
    for &v in &col.removed {
        let vx = &g.vertices[v];
        let q = &g.queries[vx.query].query;
        for p in &proofs {
            let hit = g.predicate().codeword_index(&p.eval(&ext, q).unwrap());
            check(hit != Some(vx.codeword), format!("removed vertex {v} is covered"))?;
        }
        for scope in [LabelingScope::All, LabelingScope::Satisfying] {
            let rep = is_good_query(&ext, g.predicate(), q, scope, DEFAULT_GOOD_CAP).map_err(|e| e.to_string())?;
            check(!rep.good, format!("removed vertex {v} on a good query"))?;
        }
    }
    Ok(format!(
        "{} colored, {} removed (all certified), palette {} of 8, 0 violations",
        col.colors.len(),
        col.removed.len(),
        col.palette_size()
    ))
}

fn c9_good_fraction() -> Outcome {
    let start = Instant::now();
    let (inst, _) = tiny1();
    let cfg = VerifierConfig::new(2, 9);
    let mut notes = Vec::new();
    for scope in [LabelingScope::All, LabelingScope::Satisfying] {
        let pts =
            good_fraction_curve(&inst, &cfg, &[3, 4, 5], 400, scope, DEFAULT_GOOD_CAP).map_err(|e| e.to_string())?;
        check(
            pts.windows(2).all(|w| w[1].not_good <= w[0].not_good),
            format!("{scope:?}: not monotone"),
        )?;
        let mut parts = Vec::new();
        for p in &pts {
            check(
                p.not_good_estimate <= p.union_bound + 3.0 * p.stderr,
                format!(
                    "{scope:?} 2^t={}: {} > {} + 3·{}",
                    p.alphas, p.not_good_estimate, p.union_bound, p.stderr
                ),
            )?;
            parts.push(format!(
                "{}:{:.3}≤{:.3}",
                p.alphas,
                p.not_good_estimate,
                p.union_bound + 3.0 * p.stderr
            ));
        }
        notes.push(format!("{scope:?} [{}]", parts.join(" ")));
    }
    let t = timed(Duration::from_secs(600), start)?;
    Ok(format!("{} ({t})", notes.join("; ")))
}

fn hkcolor(dir: &Path, args: &[&str]) -> Result<(), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hkcolor"))
        .args(args)
        .current_dir(dir)
        .output()
        .map_err(|e| e.to_string())?;
    check(
        out.status.success(),
        format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr).trim()),
    )
}

fn pipeline(dir: &Path, threads: &str) -> Result<BTreeMap<String, Vec<u8>>, String> {
    let steps: &[&[&str]] = &[
        &[
            "gen-lc",
            "--planted",
            "--u",
            "2",
            "--v",
            "3",
            "--labels",
            "2",
            "--d",
            "2",
            "--edges",
            "4",
            "--seed",
            "7",
        ],
        &["lc-value"],
        &["extend", "--t", "3"],
        &[
            "accept", "--proof", "correct", "--mode", "mc", "--eta", "0", "--r", "2", "--trials", "100000", "--seed",
            "1",
        ],
        &[
            "accept",
            "--proof",
            "random",
            "--mode",
            "mc",
            "--trials",
            "20000",
            "--seed",
            "2",
            "--out",
            "random.json",
        ],
        &[
            "accept",
            "--proof",
            "correct",
            "--mode",
            "exact-enum",
            "--eta",
            "0",
            "--seed",
            "1",
            "--out",
            "enum.json",
        ],
        &[
            "fglss-build",
            "--instance",
            "instance_t3.json",
            "--n",
            "15",
            "--seed",
            "3",
            "--format",
            "dimacs",
        ],
        &["mwis"],
        &["color"],
        &["verify-coloring"],
        &["good-fraction", "--n", "100", "--seed", "5"],
        &["report", "--r", "2", "--t", "3"],
    ];
    for step in steps {
        let mut args: Vec<&str> = vec!["--threads", threads];
        args.extend_from_slice(step);
        hkcolor(dir, &args)?;
    }
    let mut files = BTreeMap::new();
    for entry in std::fs::read_dir(dir).map_err(|e| e.to_string())? {
        let path = entry.map_err(|e| e.to_string())?.path();
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        files.insert(name, std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    Ok(files)
}

fn c10_determinism() -> Outcome {
    let a = tempfile::tempdir().map_err(|e| e.to_string())?;
    let b = tempfile::tempdir().map_err(|e| e.to_string())?;
    let fa = pipeline(a.path(), "1")?;
    let fb = pipeline(b.path(), "4")?;
    check(fa.keys().eq(fb.keys()), "different artifact sets")?;
    for (name, bytes) in &fa {
        check(fb[name] == *bytes, format!("{name} differs"))?;
    }
    Ok(format!(
        "{} artifacts byte-identical across runs and thread counts",
        fa.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("predicate counts", c1_predicate_counts),
        ("perfect completeness", c2_perfect_completeness),
        ("noisy completeness", c3_noisy_completeness),
        ("random-proof baseline", c4_random_baseline),
        ("extension value preservation", c5_extension_value),
        ("FGLSS identities", c6_fglss_identities),
        ("MWIS correctness", c7_mwis),
        ("alpha-coloring", c8_alpha_coloring),
        ("good-fraction behavior", c9_good_fraction),
        ("determinism", c10_determinism),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail})", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({detail})", n + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
