//! Exhaustive desk-scale checks of the whole pipeline.

use std::fmt::Write as _;
use std::time::Instant;

use itertools::Itertools;

use rm_groebner::groebner::{is_groebner, is_reduced};
use rm_groebner::rmcode::{
    berman_check, build_g, build_h, codewords, jennings_matrix, min_weight_bruteforce,
    ENUMERATION_MAX_M,
};
use rm_groebner::{CodeParams, Decoder, Error, MonomialOrder, Poly, Word};

use crate::{CliError, Output, EXIT_CHECK_FAILED};

/// Up to 32 codewords spread over the enumeration; all of them when the
/// code has at most 64.
pub fn sample_codewords(params: &CodeParams) -> Result<Vec<Word>, Error> {
    let all = codewords(params)?;
    let total = all.len();
    if total <= 64 {
        return Ok(all.collect());
    }
    let stride = total / 32;
    Ok(all.step_by(stride).take(32).collect())
}

/// Every error word of weight at most `max_weight`.
pub fn error_patterns(m: usize, max_weight: usize) -> impl Iterator<Item = Word> {
    let n = 1usize << m;
    (0..=max_weight).flat_map(move |w| {
        (0..n).combinations(w).map(move |positions| {
            let mut e = Word::zeros(m).expect("valid m");
            for p in positions {
                e.flip(p);
            }
            e
        })
    })
}

fn check_bases(params: &CodeParams) -> Result<bool, Error> {
    let ord = MonomialOrder::Grlex;
    let g = build_g(params)?;
    let h = build_h(params)?;
    let union: Vec<Poly> = g.iter().chain(&h).cloned().collect();
    Ok(is_groebner(&g, ord)?.is_groebner
        && is_reduced(&g, ord)?
        && is_groebner(&h, ord)?.is_groebner
        && is_groebner(&union, ord)?.is_groebner)
}

fn check_decoding(params: &CodeParams) -> Result<bool, Error> {
    if params.t == 0 {
        return Ok(true);
    }
    let dec = Decoder::new(*params)?;
    let map = dec.index_map().clone();
    let errors: Vec<Word> = error_patterns(params.m, params.t).collect();
    for e in &errors {
        let syn = dec.syndrome(e)?;
        let all_low = e.bits().ones().all(|pos| (map.mask_at(pos).count_ones() as usize) < params.l);
        if (syn.weight <= params.t) != all_low {
            return Ok(false);
        }
    }
    for c in sample_codewords(params)? {
        for e in &errors {
            let v = c.add(e)?;
            let res = dec.decode(&v)?;
            if res.codeword.as_ref() != Some(&c) {
                return Ok(false);
            }
            if res.error.as_ref().map(|p| map.poly_to_word(p)).transpose()?.as_ref() != Some(e) {
                return Ok(false);
            }
            if dec.ml_decode_bruteforce(&v)?.codeword != c {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Runs every check for all `(m, l)` with `m <= max_m`; exit 1 if any fails.
pub fn cmd_selftest(max_m: usize) -> Result<Output, CliError> {
    if max_m == 0 || max_m > ENUMERATION_MAX_M {
        return Err(CliError::Core(Error::Capability(format!(
            "selftest supports 1 <= max_m <= {ENUMERATION_MAX_M}, got {max_m}"
        ))));
    }
    let start = Instant::now();
    let mut out = String::new();
    let mut failed = 0;
    for params in CodeParams::all_up_to(max_m) {
        let checks: [(&str, bool); 5] = [
            ("groebner", check_bases(&params)?),
            ("berman", berman_check(&params)?),
            ("dimension", jennings_matrix(&params)?.rank() == params.dim),
            ("min-weight", min_weight_bruteforce(&params)? == Some(params.d)),
            ("decoding", check_decoding(&params)?),
        ];
        for (name, ok) in checks {
            if !ok {
                failed += 1;
            }
            writeln!(
                out,
                "{} m={} l={} {name}",
                if ok { "PASS" } else { "FAIL" },
                params.m,
                params.l
            )
            .unwrap();
        }
    }
    writeln!(
        out,
        "selftest {}: {failed} failed, {:.1} ms",
        if failed == 0 { "passed" } else { "failed" },
        start.elapsed().as_secs_f64() * 1e3
    )
    .unwrap();
    Ok(Output { stdout: out, code: if failed == 0 { 0 } else { EXIT_CHECK_FAILED } })
}
