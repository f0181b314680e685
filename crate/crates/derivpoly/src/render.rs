//! Text, LaTeX, JSON and CSV rendering of polynomials, sequences and check
//! reports. JSON output is the machine interface: coefficients are exact
//! `num/den` strings and round-trip through the parser.

use std::str::FromStr;

use serde_json::{json, Value};

use crate::exact::Rational;
use crate::polyfamilies::FamilyResult;
use crate::quadcheck::CheckReport;

/// Output formats accepted by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Plain,
    Latex,
    Json,
    Csv,
}

fn term(coeff: &Rational, j: usize, var: &str, latex: bool) -> String {
    let abs = coeff.abs();
    let coeff_str = if j == 0 || abs != Rational::one() {
        if abs.is_integer() {
            abs.to_string()
        } else {
            format!("({})", abs)
        }
    } else {
        String::new()
    };
    let var_str = match j {
        0 => String::new(),
        1 => var.to_string(),
        _ if latex => format!("{}^{{{}}}", var, j),
        _ => format!("{}^{}", var, j),
    };
    format!("{}{}", coeff_str, var_str)
}

/// Descending-degree rendering, zero terms omitted: `2z^3 - 2z`.
pub fn poly_plain(coeffs: &[Rational], var: &str, latex: bool) -> String {
    let mut out = String::new();
    for (j, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c < &Rational::zero();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&term(c, j, var, latex));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn poly_json(result: &FamilyResult) -> Value {
    let coeffs: Vec<String> =
        result.real_coeffs().iter().map(|c| c.to_string()).collect();
    json!({
        "family": result.family.name(),
        "m": result.m,
        "coefficients": coeffs,
    })
}

pub fn poly_csv(result: &FamilyResult) -> String {
    let mut out = String::from("degree,coefficient\n");
    for (j, c) in result.real_coeffs().iter().enumerate() {
        out.push_str(&format!("{},{}\n", j, c));
    }
    out
}

/// Parses the `coefficients` array of the JSON schema back into rationals.
pub fn parse_coefficients(value: &Value) -> Result<Vec<Rational>, String> {
    value["coefficients"]
        .as_array()
        .ok_or_else(|| "missing coefficients array".to_string())?
        .iter()
        .map(|v| {
            let s = v.as_str().ok_or_else(|| "coefficient is not a string".to_string())?;
            Rational::from_str(s)
        })
        .collect()
}

pub fn report_json(report: &CheckReport) -> Value {
    json!({
        "id": report.identity_id,
        "params": report.params,
        "lhs": [report.lhs.re, report.lhs.im],
        "rhs": [report.rhs.re, report.rhs.im],
        "residual": report.residual,
        "pass": report.pass,
    })
}

pub fn report_plain(report: &CheckReport) -> String {
    let params: Vec<String> =
        report.params.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
    format!(
        "{} {} lhs=({:.12e},{:.12e}) rhs=({:.12e},{:.12e}) residual={:.3e} {}",
        report.identity_id,
        params.join(" "),
        report.lhs.re,
        report.lhs.im,
        report.rhs.re,
        report.rhs.im,
        report.residual,
        if report.pass { "PASS" } else { "FAIL" }
    )
}
