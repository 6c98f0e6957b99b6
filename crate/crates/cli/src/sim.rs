//! Seeded channel simulation: random codewords, random errors, decode, tally.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use rm_groebner::decoder::random_error_with;
use rm_groebner::rmcode::generator_matrix;
use rm_groebner::{CodeParams, DecodeStatus, Decoder, ErrorMode, Word};

use crate::{CliError, Output};

/// Error model of a simulation run, written `fixed_weight:W` or `bsc:P`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimMode(pub ErrorMode);

impl fmt::Display for SimMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            ErrorMode::FixedWeight(w) => write!(f, "fixed_weight:{w}"),
            ErrorMode::Bsc(p) => write!(f, "bsc:{p}"),
        }
    }
}

impl FromStr for SimMode {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::Usage(format!("bad mode `{s}` (expected fixed_weight:W or bsc:P)"));
        let (kind, value) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "fixed_weight" => Ok(SimMode(ErrorMode::FixedWeight(value.parse().map_err(|_| bad())?))),
            "bsc" => {
                let p: f64 = value.parse().map_err(|_| bad())?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(bad());
                }
                Ok(SimMode(ErrorMode::Bsc(p)))
            }
            _ => Err(bad()),
        }
    }
}

impl Serialize for SimMode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialRow {
    pub trial: u64,
    pub error_weight: usize,
    pub status: &'static str,
    pub correct: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SimReport {
    pub m: usize,
    pub l: usize,
    pub t: usize,
    pub trials: u64,
    pub mode: SimMode,
    pub seed: u64,
    pub decoded_ok: u64,
    pub failures: u64,
    pub miscorrections: u64,
    pub elapsed_ms: f64,
}

/// Runs `trials` independent trials. Trial `k` draws from a ChaCha8 stream
/// `k` under `seed`, so results do not depend on scheduling.
pub fn simulate(
    params: CodeParams,
    trials: u64,
    mode: SimMode,
    seed: u64,
) -> Result<(SimReport, Vec<TrialRow>), CliError> {
    let start = Instant::now();
    let decoder = Decoder::new(params)?;
    let generators = generator_matrix(&params)?.rows().to_vec();

    let rows = (0..trials)
        .into_par_iter()
        .map(|trial| -> Result<TrialRow, CliError> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial);
            let mut sent = Word::zeros(params.m)?;
            for row in &generators {
                if rng.gen::<bool>() {
                    sent = sent.add(&Word::from_bitvec(params.m, row.clone())?)?;
                }
            }
            let error = random_error_with(&params, mode.0, &mut rng)?;
            let received = sent.add(&error)?;
            let result = decoder.decode(&received)?;
            Ok(TrialRow {
                trial,
                error_weight: error.weight(),
                status: result.status.as_str(),
                correct: result.codeword.as_ref() == Some(&sent),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;

    let decoded_ok = rows.iter().filter(|r| r.correct).count() as u64;
    let failures = rows.iter().filter(|r| r.status == DecodeStatus::Failure.as_str()).count() as u64;
    let report = SimReport {
        m: params.m,
        l: params.l,
        t: params.t,
        trials,
        mode,
        seed,
        decoded_ok,
        failures,
        miscorrections: trials - decoded_ok - failures,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    Ok((report, rows))
}

pub fn write_csv<W: Write>(rows: &[TrialRow], out: W) -> Result<(), CliError> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

/// Runs a simulation, writes the per-trial CSV to `out` when given, and
/// returns the JSON summary.
pub fn cmd_simulate(
    m: usize,
    l: usize,
    trials: u64,
    mode: SimMode,
    seed: u64,
    out: Option<&Path>,
) -> Result<Output, CliError> {
    let params = CodeParams::new(m, l)?;
    let (report, rows) = simulate(params, trials, mode, seed)?;
    if let Some(path) = out {
        write_csv(&rows, std::fs::File::create(path)?)?;
    }
    let json = serde_json::to_string(&report).expect("report serializes");
    Ok(Output::ok(format!("{json}\n")))
}
