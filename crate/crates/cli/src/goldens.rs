//! Golden tables committed under `crates/cli/goldens/`.
//!
//! Each suite is a deterministic TSV table; floats carry 12 significant
//! digits. Rows are computed in parallel and emitted in parameter order.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use cube_spectra_core::*;
use std::result::Result;
use rayon::prelude::*;
use serde_json::json;

use crate::commands::shape;
use crate::report::significant;
use crate::{CliError, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    HammingTable,
    BoundsTable,
    SearchTable,
    PartitionCerts,
}

pub const SUITES: [Suite; 4] = [Suite::HammingTable, Suite::BoundsTable, Suite::SearchTable, Suite::PartitionCerts];

impl Suite {
    pub fn file_name(self) -> &'static str {
        match self {
            Suite::All => unreachable!("not a single table"),
            Suite::HammingTable => "hamming-table.tsv",
            Suite::BoundsTable => "bounds-table.tsv",
            Suite::SearchTable => "search-table.tsv",
            Suite::PartitionCerts => "partition-certs.tsv",
        }
    }
}

#[derive(Args, Debug)]
pub struct RegenArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Directory holding the tables.
    #[arg(long, default_value = default_dir())]
    pub dir: PathBuf,
    /// Compare against the files instead of rewriting them; a difference exits with 1.
    #[arg(long)]
    pub check: bool,
}

fn default_dir() -> &'static str {
    concat!(env!("CARGO_MANIFEST_DIR"), "/goldens")
}

fn num(x: f64) -> String {
    significant(x, 12)
}

fn table(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut out = header.join("\t");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

fn exact(d: u32, i: u32) -> f64 {
    hamming_lambda1_exact(d, i, 1e-13).unwrap().lambda1
}

/// `λ₁(H_d^i)` for `4 ≤ d ≤ 20`, `0 ≤ i ≤ d/2`.
pub fn hamming_table() -> String {
    let params: Vec<(u32, u32)> = (4..=20).flat_map(|d| (0..=d / 2).map(move |i| (d, i))).collect();
    let rows = params
        .par_iter()
        .map(|&(d, i)| {
            let size: u64 = (0..=i as u64).map(|j| binomial(d as u64, j)).sum();
            let l = exact(d, i);
            let upper = if i == 0 { "NA".to_string() } else { num(hamming_upper_bound(d, i).unwrap()) };
            vec![d.to_string(), i.to_string(), size.to_string(), num(l), upper, num(l / (d as f64).sqrt())]
        })
        .collect();
    table(&["d", "i", "size", "lambda1", "upper", "lambda1_over_sqrt_d"], rows)
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// Walk lower bound, exact value and upper bounds for each radius, with the
/// closed-form rows (6,2) and (16,4) at the top.
pub fn bounds_table() -> String {
    let mut params = vec![(6u32, 2u32), (16, 4)];
    for d in [8u32, 12, 16, 24, 32, 64] {
        params.extend((1..=d / 2).map(|i| (d, i)));
    }
    let rows = params
        .par_iter()
        .map(|&(d, i)| {
            let l = exact(d, i);
            let (k, walk) = (1..i)
                .map(|k| (k, hamming_walk_lower_bound(d, i, k).unwrap()))
                .fold((0, f64::NAN), |best, cur| if best.1.is_nan() || cur.1 > best.1 { cur } else { best });
            let walk = if walk.is_nan() { "NA".to_string() } else { num(walk) };
            let upper = hamming_upper_bound(d, i).unwrap();
            vec![
                d.to_string(),
                i.to_string(),
                k.to_string(),
                walk,
                num(l),
                num(upper),
                num(2.0 * (i as f64 * d as f64).sqrt()),
                num(l / upper),
            ]
        })
        .collect();
    table(&["d", "i", "best_k", "walk_lower", "exact", "upper", "coarse_upper", "ratio"], rows)
}

/// Exact maxima for `2 ≤ n ≤ 12` in `Q_{n-1}`, where the compressed search is complete.
pub fn search_table() -> String {
    let rows = (2..=12usize)
        .into_par_iter()
        .map(|n| {
            let d = n as u32 - 1;
            let r = max_lambda1(n, d, &SearchConfig::default()).unwrap();
            let m = r.maximizer();
            let members: Vec<String> = m.members().iter().map(|v| v.to_string()).collect();
            vec![
                n.to_string(),
                d.to_string(),
                num(r.best_lambda1),
                num(((n - 1) as f64).sqrt()),
                r.maximizers.len().to_string(),
                r.search_space_size.to_string(),
                shape(m),
                members.join(" "),
            ]
        })
        .collect();
    table(
        &["n", "d", "best_lambda1", "star_lambda1", "maximizers", "families", "shape", "first_maximizer"],
        rows,
    )
}

fn degeneracy(f: &VertexFamily) -> usize {
    let adj = f.adjacency();
    let mut alive = vec![true; adj.len()];
    let mut best = 0;
    for _ in 0..adj.len() {
        let (i, deg) = (0..adj.len())
            .filter(|&i| alive[i])
            .map(|i| (i, adj[i].iter().filter(|&&j| alive[j as usize]).count()))
            .min_by_key(|&(_, deg)| deg)
            .unwrap();
        best = best.max(deg);
        alive[i] = false;
    }
    best
}

/// Certificates for Hamming balls and initial segments at the tight ε just
/// above the degeneracy and at ε = 0.5.
pub fn partition_certs() -> String {
    let mut families: Vec<(String, VertexFamily)> = Vec::new();
    for (d, i) in [(6, 1), (8, 1), (10, 1), (8, 2), (10, 2)] {
        families.push((format!("H_{d}^{i}"), hamming_ball(d, i).unwrap()));
    }
    for n in [16, 24, 40, 64, 100] {
        families.push((format!("I_{n}"), initial_segment(n, 8).unwrap()));
    }
    let rows: Vec<Vec<Vec<String>>> = families
        .par_iter()
        .map(|(name, f)| {
            let d = f.dim();
            let tight = (degeneracy(f) as f64 + 0.5) / d as f64;
            [("tight", tight), ("half", 0.5)]
                .iter()
                .map(|&(label, eps)| {
                    let mut row = vec![name.clone(), f.len().to_string(), d.to_string(), label.to_string(), num(eps)];
                    match build_partition(f, eps) {
                        Ok(cert) => {
                            let report = verify_partition(&cert, f);
                            let failures: Vec<&str> = report.failures().map(|c| c.name).collect();
                            row.push(cert.depth.to_string());
                            row.push(cert.m.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(","));
                            row.push(cert.stars.len().to_string());
                            row.push(report.parts.iter().all(|p| p.passed()).to_string());
                            row.push(if failures.is_empty() { "none".to_string() } else { failures.join("; ") });
                        }
                        Err(e) => {
                            row.extend(["NA", "NA", "NA", "NA"].map(String::from));
                            row.push(format!("not built: {e}"));
                        }
                    }
                    row
                })
                .collect()
        })
        .collect();
    table(
        &["family", "n", "d", "rule", "epsilon", "depth", "m", "star_balls", "parts_pass", "failed_checks"],
        rows.into_iter().flatten().collect(),
    )
}

pub fn generate(suite: Suite) -> String {
    match suite {
        Suite::All => unreachable!("not a single table"),
        Suite::HammingTable => hamming_table(),
        Suite::BoundsTable => bounds_table(),
        Suite::SearchTable => search_table(),
        Suite::PartitionCerts => partition_certs(),
    }
}

fn write_or_check(dir: &Path, suite: Suite, check: bool) -> Result<bool, CliError> {
    let path = dir.join(suite.file_name());
    let fresh = generate(suite);
    if check {
        let current = std::fs::read_to_string(&path).unwrap_or_default();
        return Ok(current == fresh);
    }
    std::fs::create_dir_all(dir).map_err(|e| CliError::input(format!("{}: {e}", dir.display())))?;
    std::fs::write(&path, fresh).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    Ok(true)
}

pub fn regen(args: &RegenArgs) -> Result<Outcome, CliError> {
    let suites: Vec<Suite> = if args.suite == Suite::All { SUITES.to_vec() } else { vec![args.suite] };
    let mut rows = Vec::new();
    let mut stale = Vec::new();
    for suite in suites {
        let same = write_or_check(&args.dir, suite, args.check)?;
        if !same {
            stale.push(suite.file_name());
        }
        let status = match (args.check, same) {
            (false, _) => "written",
            (true, true) => "unchanged",
            (true, false) => "differs",
        };
        rows.push(json!({ "file": suite.file_name(), "status": status }));
    }
    let report = json!({ "dir": args.dir.display().to_string(), "rows": rows });
    let verdict = if stale.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("golden tables differ: {}", stale.join(", "))))
    };
    Ok(Outcome { report, verdict })
}
