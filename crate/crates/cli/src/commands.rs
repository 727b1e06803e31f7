//! The numeric commands. Each returns a JSON report.

use std::path::PathBuf;

use clap::{ArgGroup, Args, ValueEnum};
use cube_spectra_core::search::partition::Check;
use cube_spectra_core::spectral::{expand_levels, lambda1_dense};
use cube_spectra_core::*;
use std::result::Result;
use serde_json::{json, Value};

use crate::formats::{self, binary};
use crate::report::{integer, real};
use crate::{CliError, Outcome};

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// Family file: `d=<int>` then one binary string per line.
    #[arg(long)]
    pub family: PathBuf,
}

#[derive(Args, Debug)]
pub struct Lambda1Args {
    #[command(flatten)]
    pub input: FamilyArgs,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Use the dense eigensolver (small families only).
    #[arg(long)]
    pub dense: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").args(["exact", "bounds", "constants"])))]
pub struct HammingArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub i: u32,
    /// Exact λ₁ from the level reduction (the default).
    #[arg(long)]
    pub exact: bool,
    /// Walk lower bounds and the upper bound next to the exact value.
    #[arg(long)]
    pub bounds: bool,
    /// The limit constant of λ₁/√d as d grows with i fixed.
    #[arg(long)]
    pub constants: bool,
    #[arg(long, default_value_t = 1e-13)]
    pub tol: f64,
    /// Also print the level weights spread over every vertex (d ≤ 20).
    #[arg(long)]
    pub vertices: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Family,
    Vector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScheduleArg {
    Spectral,
    WithBinary,
}

#[derive(Args, Debug)]
pub struct CompressArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Kind::Family)]
    pub kind: Kind,
    #[arg(long, value_enum, default_value_t = ScheduleArg::Spectral)]
    pub schedule: ScheduleArg,
    /// Write every changing step here as JSON.
    #[arg(long)]
    pub log: Option<PathBuf>,
    /// Write the compressed family or vector here, in the input format.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").args(["family", "initial"]).required(true)))]
pub struct CountCubesArgs {
    #[arg(long)]
    pub family: Option<PathBuf>,
    /// Count in the first N vertices of binary order.
    #[arg(long)]
    pub initial: Option<u64>,
    #[arg(long)]
    pub dprime: u32,
    /// Add the smooth and integer upper bounds.
    #[arg(long)]
    pub bounds: bool,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: u32,
    /// Tolerance for treating two λ₁ values as tied.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Number of runner-up families to keep.
    #[arg(long, default_value_t = 5)]
    pub top: usize,
    /// Cross-check against brute force over all n-subsets (d ≤ 5).
    #[arg(long)]
    pub oracle: bool,
    /// Stop after this many families; an unfinished search exits with 3.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Write each maximizer as a family file into this directory.
    #[arg(long)]
    pub save: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PresetArg {
    /// ε = √(2(n/d)/d).
    #[value(alias = "sec51")]
    StarCover,
    /// ε = α / ln(d/i).
    #[value(alias = "sec52")]
    LogRatio,
    /// ε = 2i·d^(-1/(i+1)).
    #[value(alias = "sec6")]
    FixedRadius,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("eps").args(["epsilon", "preset"]).required(true)))]
pub struct PartitionArgs {
    #[command(flatten)]
    pub input: FamilyArgs,
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long, value_enum)]
    pub preset: Option<PresetArg>,
    /// α for the log-ratio preset.
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// Radius i for the log-ratio and fixed-radius presets.
    #[arg(long, default_value_t = 1)]
    pub radius: u32,
    /// Check the certificate; a failed check exits with 1.
    #[arg(long)]
    pub verify: bool,
}

fn load_family(args: &FamilyArgs) -> Result<VertexFamily, CliError> {
    formats::parse_family(&formats::read(&args.family)?)
}

pub fn family_json(f: &VertexFamily) -> Value {
    json!(f.members().iter().map(|&v| binary(v, f.dim())).collect::<Vec<_>>())
}

fn spectral_json(r: &SpectralResult) -> Value {
    json!({
        "method": r.method.as_str(),
        "lambda1": real(r.lambda1),
        "error_bound": real(r.error_bound),
        "diagnostics": {
            "lower": real(r.lower()),
            "upper": real(r.upper()),
            "residual": real(r.residual),
            "iterations": r.iterations,
            "converged": r.converged,
        },
    })
}

fn check_tol(tol: f64) -> Result<(), CliError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(CliError::input(format!("tolerance must be positive, got {tol}")))
    }
}

pub fn lambda1(args: &Lambda1Args) -> Result<Outcome, CliError> {
    check_tol(args.tol)?;
    let f = load_family(&args.input)?;
    let r = if args.dense { lambda1_dense(&f)? } else { cube_spectra_core::lambda1(&f, args.tol)? };
    let mut out = spectral_json(&r);
    out["n"] = json!(f.len());
    out["d"] = json!(f.dim());
    Ok(out.into())
}

pub fn hamming(args: &HammingArgs) -> Result<Outcome, CliError> {
    let (d, i) = (args.d, args.i);
    if d == 0 || d > MAX_DIM {
        return Err(CliError::input(format!("dimension {d} not in 1..=64")));
    }
    if args.constants {
        let c = limit_constant(i)?;
        return Ok(json!({ "i": i, "limit_constant": real(c), "sqrt_d_times_constant": real(c * (d as f64).sqrt()) }).into());
    }
    check_tol(args.tol)?;
    let r = hamming_lambda1_exact(d, i, args.tol)?;
    let mut out = spectral_json(&r);
    out["d"] = json!(d);
    out["i"] = json!(i);
    if let Eigenvector::Levels(levels) = &r.eigenvector {
        out["diagnostics"]["levels"] = json!(levels.iter().map(|&x| real(x)).collect::<Vec<_>>());
        if args.vertices {
            if d > 20 {
                return Err(CliError::input("--vertices needs d ≤ 20"));
            }
            let x = expand_levels(d, levels)?;
            out["vertices"] = json!(x.iter().map(|(v, w)| json!([binary(v, d), real(w)])).collect::<Vec<_>>());
        }
    }
    if args.bounds {
        let upper = hamming_upper_bound(d, i)?;
        let walks: Vec<Value> = (1..i)
            .map(|k| Ok(json!({ "k": k, "bound": real(hamming_walk_lower_bound(d, i, k)?) })))
            .collect::<Result<_, cube_spectra_core::Error>>()?;
        out["bounds"] = json!({
            "upper": real(upper),
            "coarse_upper": real(2.0 * (i as f64 * d as f64).sqrt()),
            "walk_lower": walks,
            "ratio_to_upper": real(r.lambda1 / upper),
        });
    }
    Ok(out.into())
}

pub fn bounds(args: &FamilyArgs) -> Result<Outcome, CliError> {
    let f = load_family(args)?;
    if f.is_empty() {
        return Err(CliError::input("family is empty"));
    }
    let r = cube_spectra_core::lambda1(&f, 1e-10)?;
    let mut out = spectral_json(&r);
    let c = classic_bounds(&f);
    let counts = count_p2_c4(&f);
    let walks: Vec<Value> = (1..=4)
        .map(|k| walk_trace_bound(&f, k).map(|w| json!({ "k": k, "bound": real(w.bound) })))
        .collect::<Result<_, _>>()?;
    let diag = &mut out["diagnostics"];
    diag["edges"] = json!(c.edges);
    diag["brualdi_hoffman"] = real(c.brualdi_hoffman);
    diag["stanley"] = real(c.stanley);
    diag["fms"] = real(c.fms);
    diag["nosal"] = real(c.nosal);
    diag["tightest_classic"] = real(c.tightest());
    diag["level_bound"] = level_bound(&f).map_or(Value::Null, real);
    diag["walk_trace"] = json!(walks);
    diag["paths2"] = json!(counts.paths2);
    diag["cycles4"] = json!(counts.cycles4);
    diag["fourth_moment_root"] = real((counts.fourth_moment() as f64).powf(0.25));
    out["n"] = json!(f.len());
    out["d"] = json!(f.dim());
    Ok(out.into())
}

pub fn compress(args: &CompressArgs) -> Result<Outcome, CliError> {
    let schedule = match args.schedule {
        ScheduleArg::Spectral => Schedule::Spectral,
        ScheduleArg::WithBinary => Schedule::WithBinary,
    };
    let text = formats::read(&args.input)?;
    let (mut out, steps, written) = match args.kind {
        Kind::Family => {
            let f = formats::parse_family(&text)?;
            let c = fully_compress_with(&f, schedule);
            let out = json!({
                "kind": "family",
                "n": f.len(),
                "d": f.dim(),
                "already_compressed": c.steps.is_empty(),
                "sweeps": c.sweeps,
                "steps": c.steps.len(),
                "down_closed": c.value.is_down_closed(),
                "compressed": family_json(&c.value),
            });
            (out, c.steps, formats::write_family(&c.value))
        }
        Kind::Vector => {
            let x = formats::parse_vector(&text)?;
            let c = fully_compress_with(&x, schedule);
            let out = json!({
                "kind": "vector",
                "support": x.support_len(),
                "d": x.dim(),
                "already_compressed": c.steps.is_empty(),
                "sweeps": c.sweeps,
                "steps": c.steps.len(),
                "rayleigh_before": real(rayleigh(&x)),
                "rayleigh_after": real(rayleigh(&c.value)),
            });
            (out, c.steps, formats::write_vector(&c.value))
        }
    };
    if let Some(path) = &args.log {
        let log: Vec<Value> = steps
            .iter()
            .map(|s| match *s {
                CompressionStep::Uv { u, v } => json!({ "step": s.to_string(), "u": u.to_string(), "v": v.to_string() }),
                CompressionStep::Binary(i) => json!({ "step": s.to_string(), "binary": i }),
            })
            .collect();
        let text = serde_json::to_string_pretty(&log).unwrap() + "\n";
        std::fs::write(path, text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        out["log"] = json!(path.display().to_string());
    }
    if let Some(path) = &args.out {
        std::fs::write(path, written).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        out["out"] = json!(path.display().to_string());
    }
    Ok(out.into())
}

pub fn count_cubes(args: &CountCubesArgs) -> Result<Outcome, CliError> {
    let k = args.dprime;
    let (n, count, mut out) = match (&args.family, args.initial) {
        (Some(path), _) => {
            let f = formats::parse_family(&formats::read(path)?)?;
            let n = f.len() as u64;
            let c = count_subcubes(&f, k).count;
            let out = json!({ "source": "family", "n": n, "d": f.dim(), "d_prime": k, "count": integer(c) });
            (n, c, out)
        }
        (None, Some(n)) => {
            let c = initial_count(n, k).count;
            (n, c, json!({ "source": "initial", "n": n, "d_prime": k, "count": integer(c) }))
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    if args.bounds {
        out["initial_count"] = integer(initial_count(n, k).count);
        out["smooth_bound"] = real(subcube_bound_smooth(n, k));
        out["integer_bound"] = real(subcube_bound_integer(n, k));
        out["count_at_most_initial"] = json!(count <= initial_count(n, k).count);
    }
    Ok(out.into())
}

/// A name for the few shapes worth naming.
pub fn shape(f: &VertexFamily) -> String {
    let n = f.len();
    let profile = degree_profile(f);
    let edges: u32 = profile.degrees.iter().sum::<u32>() / 2;
    let connected = {
        let adj = f.adjacency();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        while let Some(u) = stack.pop() {
            if n > 0 && !seen[u] {
                seen[u] = true;
                stack.extend(adj[u].iter().map(|&w| w as usize));
            }
        }
        seen.iter().all(|&s| s)
    };
    if n >= 4 && connected && profile.degrees.iter().all(|&d| d == 2) {
        return format!("cycle C_{n}");
    }
    if n >= 2 && connected && edges as usize == n - 1 && profile.max_degree as usize == n - 1 {
        return format!("star K_1,{}", n - 1);
    }
    if n.is_power_of_two() && connected {
        let k = n.trailing_zeros();
        if edges as usize == (k as usize) * n / 2 {
            return format!("cube Q_{k}");
        }
    }
    if connected && edges as usize == n - 1 {
        return "tree".to_string();
    }
    "other".to_string()
}

fn ranked_json(lambda1: f64, f: &VertexFamily) -> Value {
    json!({ "lambda1": real(lambda1), "shape": shape(f), "family": family_json(f) })
}

pub fn search(args: &SearchArgs) -> Result<Outcome, CliError> {
    check_tol(args.tol)?;
    let cfg = SearchConfig { tol: args.tol, top_k: args.top, budget: args.budget };
    let r = max_lambda1(args.n, args.d, &cfg)?;
    let mut out = json!({
        "n": r.n,
        "d": r.d,
        "best_lambda1": real(r.best_lambda1),
        "maximizer": ranked_json(r.best_lambda1, r.maximizer()),
        "maximizers": r.maximizers.iter().map(family_json).collect::<Vec<_>>(),
        "runner_ups": r.runner_ups.iter().map(|x| ranked_json(x.lambda1, &x.family)).collect::<Vec<_>>(),
        "search_space_size": r.search_space_size,
        "restricted": r.restricted,
        "complete": r.complete,
    });
    if args.oracle {
        if args.d > 5 {
            return Err(CliError::input("--oracle enumerates every n-subset and needs d ≤ 5"));
        }
        let o = exhaustive_max_lambda1(args.n, args.d, &SearchConfig { budget: None, ..cfg })?;
        let agreement = (o.best_lambda1 - r.best_lambda1).abs() <= 1e-8;
        out["oracle"] = json!({
            "best_lambda1": real(o.best_lambda1),
            "subsets": o.search_space_size,
            "agreement": agreement,
        });
    }
    if let Some(dir) = &args.save {
        std::fs::create_dir_all(dir).map_err(|e| CliError::input(format!("{}: {e}", dir.display())))?;
        let mut files = Vec::new();
        for (idx, m) in r.maximizers.iter().enumerate() {
            let path = dir.join(format!("max_n{}_d{}_{idx}.fam", r.n, r.d));
            std::fs::write(&path, formats::write_family(m)).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
            files.push(path.display().to_string());
        }
        out["saved"] = json!(files);
    }
    let verdict = if !r.complete {
        Err(CliError::Budget(format!("budget exhausted after {} families", r.search_space_size)))
    } else if out["oracle"]["agreement"] == json!(false) {
        Err(CliError::Failed("compressed search and brute force disagree".into()))
    } else {
        Ok(())
    };
    Ok(Outcome { report: out, verdict })
}

fn check_json(c: &Check) -> Value {
    json!({ "name": c.name, "passed": c.passed(), "witness": c.witness })
}

fn vertices_json(f: &VertexFamily) -> Value {
    json!(f.members().iter().map(|v| v.to_string()).collect::<Vec<_>>())
}

pub fn partition(args: &PartitionArgs) -> Result<Outcome, CliError> {
    let g = load_family(&args.input)?;
    let d = g.dim();
    let (epsilon, preset) = match (args.epsilon, args.preset) {
        (Some(e), _) => (e, None),
        (None, Some(p)) => {
            let preset = match p {
                PresetArg::StarCover => EpsilonPreset::StarCover,
                PresetArg::LogRatio => EpsilonPreset::LogRatio { alpha: args.alpha, i: args.radius },
                PresetArg::FixedRadius => EpsilonPreset::FixedRadius { i: args.radius },
            };
            (preset.epsilon(g.len(), d)?, Some(preset.name()))
        }
        (None, None) => unreachable!("clap requires ε or a preset"),
    };
    let cert = build_partition(&g, epsilon)?;
    let blocks: Vec<Value> = (0..=cert.depth)
        .map(|k| {
            json!({
                "k": k,
                "a_size": cert.a[k].len(),
                "b": cert.b[k],
                "m": cert.m[k],
                "c": vertices_json(&cert.c[k]),
                "d": vertices_json(&cert.d[k]),
                "e_size": cert.e[k].len(),
            })
        })
        .collect();
    let stars: Vec<Value> = cert
        .stars
        .iter()
        .map(|s| json!({ "k": s.k, "centre": s.centre.to_string(), "members": vertices_json(&s.members) }))
        .collect();
    let mut out = json!({
        "n": g.len(),
        "d": d,
        "preset": preset,
        "epsilon": real(epsilon),
        "threshold": real(cert.threshold()),
        "depth": cert.depth,
        "trivial": cert.trivial,
        "blocks": blocks,
        "star_balls": stars,
    });
    let mut verdict = Ok(());
    if args.verify {
        let report = verify_partition(&cert, &g);
        out["verification"] = json!({
            "passed": report.all_passed(),
            "parts": report.parts.iter().map(check_json).collect::<Vec<_>>(),
            "assertions": report.assertions.iter().map(check_json).collect::<Vec<_>>(),
        });
        if !report.all_passed() {
            let names: Vec<&str> = report.failures().map(|c| c.name).collect();
            verdict = Err(CliError::Failed(format!("certificate check failed: {}", names.join("; "))));
        }
    }
    Ok(Outcome { report: out, verdict })
}
