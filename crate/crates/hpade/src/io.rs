//! File formats: germ/polynomial/root-set JSON with decimal-string numbers,
//! measure CSV, and the equilibrium / continuation reports.
//!
//! All numeric payloads are decimal strings, never binary floats, so files
//! round-trip across languages at full precision.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use rug::{Complex, Float};
use serde::{Deserialize, Serialize};

use crate::continuation::ContinuationResult;
use crate::poly::Polynomial;
use crate::potential::DiscreteMeasure;
use crate::series::{Center, PowerSeries};
use crate::{Error, Result};

fn float_to_string(f: &Float) -> String {
    if *f == 0 {
        return "0".into();
    }
    f.to_string_radix(10, None)
}

fn complex_pair(c: &Complex) -> [String; 2] {
    [float_to_string(c.real()), float_to_string(c.imag())]
}

fn parse_float(bits: u32, s: &str) -> Result<Float> {
    let incomplete = Float::parse(s)
        .map_err(|e| Error::InvalidInput(format!("bad decimal number {s:?}: {e}")))?;
    Ok(Float::with_val(bits, incomplete))
}

fn parse_complex(bits: u32, pair: &[String; 2]) -> Result<Complex> {
    let re = parse_float(bits, &pair[0])?;
    let im = parse_float(bits, &pair[1])?;
    Ok(Complex::with_val(bits, (re, im)))
}

fn c64_pair(z: Complex64) -> [String; 2] {
    [format!("{:.17e}", z.re), format!("{:.17e}", z.im)]
}

#[derive(Serialize, Deserialize)]
struct GermFile {
    center: String,
    bits: u32,
    order: usize,
    coeffs: Vec<[String; 2]>,
}

pub fn write_germ(path: &Path, g: &PowerSeries) -> Result<()> {
    let doc = GermFile {
        center: match g.center() {
            Center::AtInfinity => "infinity".into(),
            Center::AtZero => "zero".into(),
        },
        bits: g.bits(),
        order: g.order(),
        coeffs: g.coeffs().iter().map(complex_pair).collect(),
    };
    fs::write(path, serde_json::to_string_pretty(&doc)?)?;
    Ok(())
}

pub fn read_germ(path: &Path) -> Result<PowerSeries> {
    let doc: GermFile = serde_json::from_str(&fs::read_to_string(path)?)?;
    let center = match doc.center.as_str() {
        "infinity" => Center::AtInfinity,
        "zero" => Center::AtZero,
        other => return Err(Error::InvalidInput(format!("unknown center {other:?}"))),
    };
    if doc.coeffs.len() != doc.order + 1 {
        return Err(Error::InvalidInput(format!(
            "order {} does not match {} coefficients",
            doc.order,
            doc.coeffs.len()
        )));
    }
    let coeffs = doc
        .coeffs
        .iter()
        .map(|p| parse_complex(doc.bits, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(PowerSeries::new(center, coeffs))
}

#[derive(Serialize, Deserialize)]
struct PolyFile {
    kind: String,
    n: usize,
    degrees: Vec<usize>,
    coeffs: Vec<[String; 2]>,
}

pub fn write_polynomial(path: &Path, kind: &str, n: usize, p: &Polynomial) -> Result<()> {
    let doc = PolyFile {
        kind: kind.into(),
        n,
        degrees: vec![p.nominal_degree()],
        coeffs: p.coeffs().iter().map(complex_pair).collect(),
    };
    fs::write(path, serde_json::to_string_pretty(&doc)?)?;
    Ok(())
}

pub fn read_polynomial(path: &Path, bits: u32) -> Result<(String, usize, Polynomial)> {
    let doc: PolyFile = serde_json::from_str(&fs::read_to_string(path)?)?;
    let coeffs = doc
        .coeffs
        .iter()
        .map(|p| parse_complex(bits, p))
        .collect::<Result<Vec<_>>>()?;
    Ok((doc.kind, doc.n, Polynomial::new(coeffs)))
}

#[derive(Serialize, Deserialize)]
struct RootSetFile {
    kind: String,
    n: usize,
    points: Vec<[String; 2]>,
}

pub fn write_roots(path: &Path, kind: &str, n: usize, roots: &[Complex64]) -> Result<()> {
    let doc = RootSetFile {
        kind: kind.into(),
        n,
        points: roots.iter().map(|z| c64_pair(*z)).collect(),
    };
    fs::write(path, serde_json::to_string_pretty(&doc)?)?;
    Ok(())
}

pub fn write_measure_csv(path: &Path, mu: &DiscreteMeasure) -> Result<()> {
    let mut out = String::from("node_re,node_im,weight\n");
    for (z, w) in mu.nodes.iter().zip(&mu.weights) {
        out.push_str(&format!("{:.17e},{:.17e},{:.17e}\n", z.re, z.im, w));
    }
    fs::write(path, out)?;
    Ok(())
}

#[derive(Serialize, Deserialize)]
pub struct EquilibriumReport {
    pub a: f64,
    pub b: f64,
    pub gamma: f64,
    pub residual: f64,
    #[serde(rename = "N")]
    pub n: usize,
}

pub fn write_equilibrium_report(path: &Path, report: &EquilibriumReport) -> Result<()> {
    fs::write(path, serde_json::to_string_pretty(report)?)?;
    Ok(())
}

#[derive(Serialize)]
struct SheetLogEntry {
    x: [String; 2],
    family: String,
}

#[derive(Serialize)]
struct ContinuationFile {
    value: [String; 2],
    sheet_log: Vec<SheetLogEntry>,
    method: String,
    n: usize,
    terminal_sheet: usize,
}

pub fn continuation_json(res: &ContinuationResult) -> Result<String> {
    let doc = ContinuationFile {
        value: c64_pair(res.value),
        sheet_log: res
            .sheet_log
            .iter()
            .map(|(x, tag)| SheetLogEntry {
                x: c64_pair(*x),
                family: tag.name().into(),
            })
            .collect(),
        method: res.method.name().into(),
        n: res.n,
        terminal_sheet: res.terminal_sheet,
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}
