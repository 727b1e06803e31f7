//! Line-oriented text formats for families and weight vectors.
//!
//! Both start with `d=<int>`. A family file then lists one vertex per line as
//! a binary string of length `d`; a vector file adds a decimal weight after
//! the string. `#` starts a comment, blank lines are skipped, and a repeated
//! vertex is an error.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use cube_spectra_core::{Vertex, VertexFamily, WeightVector};

use crate::CliError;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(no, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((no + 1, line))
    })
}

fn header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<u32, CliError> {
    let (no, line) = lines.next().ok_or_else(|| CliError::input("missing `d=<int>` header"))?;
    let d = line
        .strip_prefix("d=")
        .and_then(|v| v.trim().parse::<u32>().ok())
        .ok_or_else(|| CliError::input(format!("line {no}: expected `d=<int>`, found `{line}`")))?;
    if d == 0 || d > cube_spectra_core::MAX_DIM {
        return Err(CliError::input(format!("line {no}: dimension {d} not in 1..=64")));
    }
    Ok(d)
}

fn vertex(no: usize, s: &str, d: u32) -> Result<Vertex, CliError> {
    match Vertex::parse_binary(s) {
        Some((v, len)) if len == d => Ok(v),
        Some((_, len)) => Err(CliError::input(format!("line {no}: vertex `{s}` has length {len}, expected {d}"))),
        None => Err(CliError::input(format!("line {no}: `{s}` is not a binary string"))),
    }
}

pub fn parse_family(text: &str) -> Result<VertexFamily, CliError> {
    let mut lines = content_lines(text);
    let d = header(&mut lines)?;
    let mut seen = BTreeSet::new();
    for (no, line) in lines {
        let v = vertex(no, line, d)?;
        if !seen.insert(v) {
            return Err(CliError::input(format!("line {no}: duplicate vertex {v}")));
        }
    }
    Ok(VertexFamily::new(d, seen)?)
}

pub fn parse_vector(text: &str) -> Result<WeightVector, CliError> {
    let mut lines = content_lines(text);
    let d = header(&mut lines)?;
    let mut seen = BTreeSet::new();
    let mut entries = Vec::new();
    for (no, line) in lines {
        let mut parts = line.split_whitespace();
        let v = vertex(no, parts.next().unwrap_or(""), d)?;
        let w: f64 = parts
            .next()
            .and_then(|w| w.parse().ok())
            .filter(|w: &f64| w.is_finite())
            .ok_or_else(|| CliError::input(format!("line {no}: expected `<binary> <weight>`")))?;
        if parts.next().is_some() {
            return Err(CliError::input(format!("line {no}: trailing fields")));
        }
        if !seen.insert(v) {
            return Err(CliError::input(format!("line {no}: duplicate vertex {v}")));
        }
        entries.push((v, w));
    }
    Ok(WeightVector::from_entries(d, entries)?)
}

pub fn write_family(f: &VertexFamily) -> String {
    let mut out = format!("d={}\n", f.dim());
    for v in f.members() {
        v.write_binary(f.dim(), &mut out).unwrap();
        out.push('\n');
    }
    out
}

pub fn write_vector(x: &WeightVector) -> String {
    let mut out = format!("d={}\n", x.dim());
    for (v, w) in x.iter() {
        v.write_binary(x.dim(), &mut out).unwrap();
        writeln!(out, " {w:?}").unwrap();
    }
    out
}

pub fn binary(v: Vertex, d: u32) -> String {
    let mut s = String::with_capacity(d as usize);
    v.write_binary(d, &mut s).unwrap();
    s
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}
