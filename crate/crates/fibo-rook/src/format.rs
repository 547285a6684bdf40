//! Triangle exports: aligned text, JSON and CSV.
//!
//! JSON and CSV carry `format = 1` and parse back to the same [`Triangle`],
//! so render, parse, render is byte-identical.

use std::fmt::Write as _;
use std::str::FromStr;

use fibo_rook_core::{Family, QPoly, Triangle};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format version {0}")]
    Version(u32),
    #[error("line {line}: {msg}")]
    Csv { line: usize, msg: String },
    #[error(transparent)]
    Core(#[from] fibo_rook_core::Error),
    #[error("cell ({n},{k}) is missing or out of place")]
    Cell { n: usize, k: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Rows `n = 1..=max_n`, each `n | cell_1  cell_2  ...  cell_n`.
pub fn render_text(t: &Triangle) -> String {
    let mut out = String::new();
    for n in 1..=t.max_n() {
        let cells: Vec<String> = (1..=n).map(|k| t.get(n, k).to_string()).collect();
        writeln!(out, "{n} | {}", cells.join("  ")).unwrap();
    }
    out
}

#[derive(Serialize, Deserialize)]
struct JsonTriangle {
    format: u32,
    family: String,
    max_n: usize,
    cells: Vec<JsonCell>,
}

#[derive(Serialize, Deserialize)]
struct JsonCell {
    n: usize,
    k: usize,
    coeffs: Vec<serde_json::Number>,
}

fn number(c: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&c.to_string()).expect("integers are valid JSON numbers")
}

pub fn render_json(t: &Triangle) -> String {
    let doc = JsonTriangle {
        format: FORMAT_VERSION,
        family: t.family().name().into(),
        max_n: t.max_n(),
        cells: t
            .cells()
            .map(|(n, k, p)| JsonCell {
                n,
                k,
                coeffs: p.coeffs().iter().map(number).collect(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("triangle serializes");
    s.push('\n');
    s
}

fn assemble(family: Family, max_n: usize, cells: Vec<(usize, usize, QPoly)>) -> Result<Triangle, FormatError> {
    let mut rows: Vec<Vec<QPoly>> = Vec::with_capacity(max_n + 1);
    let mut it = cells.into_iter();
    for n in 0..=max_n {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            match it.next() {
                Some((cn, ck, p)) if (cn, ck) == (n, k) => row.push(p),
                _ => return Err(FormatError::Cell { n, k }),
            }
        }
        rows.push(row);
    }
    if let Some((n, k, _)) = it.next() {
        return Err(FormatError::Cell { n, k });
    }
    Ok(Triangle::from_rows(family, rows)?)
}

pub fn parse_json(s: &str) -> Result<Triangle, FormatError> {
    let doc: JsonTriangle = serde_json::from_str(s)?;
    if doc.format != FORMAT_VERSION {
        return Err(FormatError::Version(doc.format));
    }
    let family: Family = doc.family.parse()?;
    let cells = doc
        .cells
        .into_iter()
        .map(|c| {
            let coeffs = c
                .coeffs
                .iter()
                .map(|x| BigInt::from_str(&x.to_string()).map_err(|_| FormatError::Cell { n: c.n, k: c.k }))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((c.n, c.k, QPoly::from_coeffs(coeffs)))
        })
        .collect::<Result<Vec<_>, FormatError>>()?;
    assemble(family, doc.max_n, cells)
}

/// A `# format=1 family=F max_n=N` line, the header `n,k,coeffs`, then one
/// row per cell with space-separated coefficients (empty for zero).
pub fn render_csv(t: &Triangle) -> String {
    let mut out = format!("# format={FORMAT_VERSION} family={} max_n={}\nn,k,coeffs\n", t.family(), t.max_n());
    for (n, k, p) in t.cells() {
        let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
        writeln!(out, "{n},{k},{}", coeffs.join(" ")).unwrap();
    }
    out
}

pub fn parse_csv(s: &str) -> Result<Triangle, FormatError> {
    let err = |line: usize, msg: &str| FormatError::Csv { line, msg: msg.into() };
    let mut lines = s.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (_, meta) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let meta = meta.strip_prefix('#').ok_or_else(|| err(1, "expected a '#' metadata line"))?;
    let (mut version, mut family, mut max_n) = (None, None, None);
    for field in meta.split_whitespace() {
        match field.split_once('=') {
            Some(("format", v)) => version = v.parse::<u32>().ok(),
            Some(("family", v)) => family = Some(v.parse::<Family>()?),
            Some(("max_n", v)) => max_n = v.parse::<usize>().ok(),
            _ => return Err(err(1, &format!("unknown field {field:?}"))),
        }
    }
    let version = version.ok_or_else(|| err(1, "missing format"))?;
    if version != FORMAT_VERSION {
        return Err(FormatError::Version(version));
    }
    let family = family.ok_or_else(|| err(1, "missing family"))?;
    let max_n = max_n.ok_or_else(|| err(1, "missing max_n"))?;

    match lines.next() {
        Some((_, "n,k,coeffs")) => {}
        Some((i, _)) => return Err(err(i, "expected header n,k,coeffs")),
        None => return Err(err(2, "missing header")),
    }

    let mut cells = Vec::new();
    for (i, line) in lines {
        let mut parts = line.splitn(3, ',');
        let (Some(n), Some(k), Some(c)) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err(i, "expected n,k,coeffs"));
        };
        let n = n.parse().map_err(|_| err(i, "bad n"))?;
        let k = k.parse().map_err(|_| err(i, "bad k"))?;
        let coeffs = c
            .split_whitespace()
            .map(BigInt::from_str)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| err(i, "bad coefficient"))?;
        cells.push((n, k, QPoly::from_coeffs(coeffs)));
    }
    assemble(family, max_n, cells)
}
