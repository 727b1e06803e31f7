//! Seeded randomized checks of the library's invariants. Case seeds are drawn
//! up front from the run seed, so the report does not depend on scheduling.

use clap::Args;
use cube_spectra_core::*;
use std::result::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{CliError, Outcome};

#[derive(Args, Debug)]
pub struct SelftestArgs {
    /// Cases per check.
    #[arg(long, default_value_t = 200)]
    pub cases: usize,
}

type Case = fn(&mut ChaCha8Rng) -> Result<(), String>;

fn random_family(d: u32, rng: &mut ChaCha8Rng) -> VertexFamily {
    let density = rng.gen_range(0.05..0.95);
    let members: Vec<Vertex> = (0..1u64 << d).filter(|_| rng.gen_bool(density)).map(Vertex::from_mask).collect();
    if members.is_empty() {
        return VertexFamily::new(d, [Vertex::EMPTY]).unwrap();
    }
    VertexFamily::new(d, members).unwrap()
}

fn compression_monotone(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let d = 6;
    let mut entries = Vec::new();
    for m in 0..1u64 << d {
        if rng.gen_bool(0.5) {
            entries.push((Vertex::from_mask(m), rng.gen_range(0.0..1.0)));
        }
    }
    let x = WeightVector::from_entries(d, entries).unwrap();
    let before = rayleigh(&x);
    for step in Schedule::Spectral.sweep(d) {
        let y = x.compress(step).unwrap();
        if rayleigh(&y) < before - 1e-12 {
            return Err(format!("{step} lowers the Rayleigh quotient of {x:?}"));
        }
        if y.sorted_weights() != x.sorted_weights() {
            return Err(format!("{step} changes the weights of {x:?}"));
        }
    }
    Ok(())
}

fn fixpoint(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let f = random_family(rng.gen_range(2..=7), rng);
    let c = fully_compress(&f).value;
    if !c.is_down_closed() || !is_compressed(&c) || fully_compress(&c).value != c || c.len() != f.len() {
        return Err(format!("fixpoint of {f:?} is {c:?}"));
    }
    Ok(())
}

fn search_oracle(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let d = rng.gen_range(2..=4);
    let n = rng.gen_range(1..=1usize << d);
    let cfg = SearchConfig::default();
    let a = max_lambda1(n, d, &cfg).map_err(|e| e.to_string())?;
    let b = exhaustive_max_lambda1(n, d, &cfg).map_err(|e| e.to_string())?;
    if (a.best_lambda1 - b.best_lambda1).abs() > 1e-8 {
        return Err(format!("n={n} d={d}: compressed {} vs brute force {}", a.best_lambda1, b.best_lambda1));
    }
    Ok(())
}

fn subcube_chain(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let f = random_family(5, rng);
    let n = f.len() as u64;
    for k in 0..=5 {
        let c = count_subcubes(&f, k).count;
        let t = initial_count(n, k).count;
        let s = subcube_bound_smooth(n, k);
        let i = subcube_bound_integer(n, k);
        if c > t || t as f64 > s * (1.0 + 1e-12) + 1e-9 || s > i * (1.0 + 1e-12) + 1e-9 {
            return Err(format!("n={n} k={k}: {c} {t} {s} {i}"));
        }
    }
    Ok(())
}

fn hamming_oracle(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let d = rng.gen_range(1..=10);
    let i = rng.gen_range(0..=d);
    let exact = hamming_lambda1_exact(d, i, 1e-12).unwrap().lambda1;
    let power = lambda1(&hamming_ball(d, i).unwrap(), 1e-10).unwrap().lambda1;
    if (exact - power).abs() > 1e-8 {
        return Err(format!("d={d} i={i}: {exact} vs {power}"));
    }
    Ok(())
}

fn partition_parts(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let d = rng.gen_range(4..=8);
    let f = fully_compress(&random_family(d, rng)).value;
    let eps = rng.gen_range(0.2..0.8);
    let Ok(cert) = build_partition(&f, eps) else {
        return Ok(());
    };
    let report = verify_partition(&cert, &f);
    match report.parts.iter().find(|p| !p.passed()) {
        Some(p) => Err(format!("{} at ε={eps}: {:?}", p.name, p.witness)),
        None => Ok(()),
    }
}

const CHECKS: [(&str, Case); 6] = [
    ("compression never lowers the Rayleigh quotient", compression_monotone),
    ("compression fixpoints are down-closed and stable", fixpoint),
    ("compressed search matches brute force", search_oracle),
    ("subcube counting chain", subcube_chain),
    ("exact Hamming λ₁ matches power iteration", hamming_oracle),
    ("partition certificates satisfy all four parts", partition_parts),
];

pub fn run(args: &SelftestArgs, seed: u64) -> Result<Outcome, CliError> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let mut failed = Vec::new();
    for (name, case) in CHECKS {
        let seeds: Vec<u64> = (0..args.cases).map(|_| master.gen()).collect();
        let first_failure = seeds
            .par_iter()
            .map(|&s| case(&mut ChaCha8Rng::seed_from_u64(s)).err().map(|w| (s, w)))
            .find_first(|r| r.is_some())
            .flatten();
        let (passed, witness) = match first_failure {
            None => (true, Value::Null),
            Some((s, w)) => {
                failed.push(name);
                (false, json!({ "case_seed": s, "witness": w }))
            }
        };
        rows.push(json!({ "check": name, "cases": args.cases, "passed": passed, "failure": witness }));
    }
    let report = json!({ "seed": seed, "passed": failed.is_empty(), "rows": rows });
    let verdict = if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("selftest failed: {}", failed.join("; "))))
    };
    Ok(Outcome { report, verdict })
}
