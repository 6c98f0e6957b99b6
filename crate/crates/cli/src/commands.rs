use std::fmt::Write as _;
use std::str::FromStr;

use rm_groebner::decoder::Decoder;
use rm_groebner::groebner::{is_groebner, BasisReport};
use rm_groebner::rmcode::{build_g, build_h, encode, jennings_basis};
use rm_groebner::{divide, CodeParams, MonomialOrder, Poly, Word};

use crate::{CliError, Output, EXIT_CHECK_FAILED, EXIT_DECODE_FAILURE};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    G,
    H,
    Jennings,
    ReducedCheck,
}

impl FromStr for BasisKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.to_ascii_lowercase().as_str() {
            "g" => Ok(BasisKind::G),
            "h" => Ok(BasisKind::H),
            "jennings" => Ok(BasisKind::Jennings),
            "reduced-check" => Ok(BasisKind::ReducedCheck),
            other => Err(CliError::Usage(format!(
                "unknown basis `{other}` (expected G, H, jennings or reduced-check)"
            ))),
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn report_line(report: &BasisReport) -> String {
    format!("GROEBNER: {}, REDUCED: {}", yes_no(report.is_groebner), yes_no(report.is_reduced))
}

fn listing(polys: &[Poly], ord: MonomialOrder) -> String {
    polys.iter().map(|p| format!("{}\n", p.format(ord))).collect()
}

/// Lists `G`, `H` or the Jennings basis, one polynomial per line, or checks
/// the Buchberger criterion on `G`, `H` and `G u H`.
pub fn cmd_basis(m: usize, l: usize, which: BasisKind, ord: MonomialOrder) -> Result<Output, CliError> {
    let params = CodeParams::new(m, l)?;
    let out = match which {
        BasisKind::G => listing(&build_g(&params)?, ord),
        BasisKind::H => listing(&build_h(&params)?, ord),
        BasisKind::Jennings => listing(&jennings_basis(&params)?, ord),
        BasisKind::ReducedCheck => {
            let g = build_g(&params)?;
            let h = build_h(&params)?;
            let union: Vec<Poly> = g.iter().chain(&h).cloned().collect();
            let mut out = String::new();
            let mut all = true;
            for (name, basis) in [("G", &g), ("H", &h), ("G+H", &union)] {
                let report = is_groebner(basis, ord)?;
                all &= report.is_groebner;
                writeln!(out, "{name}: {}", report_line(&report)).unwrap();
            }
            return Ok(Output { stdout: out, code: if all { 0 } else { EXIT_CHECK_FAILED } });
        }
    };
    Ok(Output::ok(out))
}

/// Encodes a message polynomial in `y1..ym` of degree at most `m - l`.
pub fn cmd_encode(m: usize, l: usize, message: &str) -> Result<Output, CliError> {
    let params = CodeParams::new(m, l)?;
    let p = Poly::parse(m, message)?;
    Ok(Output::ok(format!("{}\n", encode(&p, &params)?)))
}

/// Decodes a bitstring and prints the JSON report; exit 3 on failure.
pub fn cmd_decode(m: usize, l: usize, word: &str) -> Result<Output, CliError> {
    let params = CodeParams::new(m, l)?;
    let v = Word::parse(m, word)?;
    let result = Decoder::new(params)?.decode(&v)?;
    let json = serde_json::to_string(&result.report()).expect("report serializes");
    let code = if result.status.is_success() { 0 } else { EXIT_DECODE_FAILURE };
    Ok(Output { stdout: format!("{json}\n"), code })
}

/// Largest variable index mentioned in the texts, at least 1.
fn infer_vars<'a>(texts: impl IntoIterator<Item = &'a str>) -> usize {
    let mut m = 1;
    for text in texts {
        let bytes = text.as_bytes();
        for (k, &b) in bytes.iter().enumerate() {
            if matches!(b, b'x' | b'X' | b'y' | b'Y') {
                let digits: String =
                    bytes[k + 1..].iter().take_while(|c| c.is_ascii_digit()).map(|&c| c as char).collect();
                if let Ok(i) = digits.parse::<usize>() {
                    m = m.max(i);
                }
            }
        }
    }
    m
}

fn basis_lines(text: &str) -> Vec<&str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect()
}

fn parse_basis(m: usize, lines: &[&str]) -> Result<Vec<Poly>, CliError> {
    let polys = lines.iter().map(|l| Poly::parse(m, l)).collect::<Result<Vec<_>, _>>()?;
    if polys.iter().any(Poly::is_zero) {
        return Err(CliError::Usage("basis file contains the zero polynomial".into()));
    }
    Ok(polys)
}

/// Divides `f` by the divisors listed in `divisors_text`, in file order.
pub fn cmd_divide(
    f: &str,
    divisors_text: &str,
    ord: MonomialOrder,
    m: Option<usize>,
) -> Result<Output, CliError> {
    let lines = basis_lines(divisors_text);
    if lines.is_empty() {
        return Err(CliError::Usage("no divisors given".into()));
    }
    let m = m.unwrap_or_else(|| infer_vars(lines.iter().copied().chain([f])));
    let divisors = parse_basis(m, &lines)?;
    let f = Poly::parse(m, f)?;
    let res = divide(&f, &divisors, ord)?;
    let mut out = String::new();
    for (k, q) in res.quotients.iter().enumerate() {
        writeln!(out, "q{} = {}", k + 1, q.format(ord)).unwrap();
    }
    writeln!(out, "remainder = {}", res.remainder.format(ord)).unwrap();
    Ok(Output::ok(out))
}

/// Checks the Buchberger criterion and reducedness of a basis file; exit 0
/// iff it is a Groebner basis.
pub fn cmd_groebner_check(basis_text: &str, ord: MonomialOrder, m: Option<usize>) -> Result<Output, CliError> {
    let lines = basis_lines(basis_text);
    if lines.is_empty() {
        return Err(CliError::Usage("empty basis".into()));
    }
    let m = m.unwrap_or_else(|| infer_vars(lines.iter().copied()));
    let basis = parse_basis(m, &lines)?;
    let report = is_groebner(&basis, ord)?;
    let mut out = format!("{}\n", report_line(&report));
    if let Some(pair) = &report.failing_pair {
        writeln!(
            out,
            "failing pair: ({}, {}) remainder {}",
            pair.i + 1,
            pair.j + 1,
            pair.remainder.format(ord)
        )
        .unwrap();
    }
    let code = if report.is_groebner { 0 } else { EXIT_CHECK_FAILED };
    Ok(Output { stdout: out, code })
}
