//! Decoding `M^l` by remainders modulo the reduced Groebner basis `G`.
//!
//! The syndrome of a received word `v` is the remainder of `v(X)` on
//! division by `G` under grlex. It vanishes exactly on codewords and only
//! depends on the error pattern. If its weight is at most `t`, the syndrome
//! *is* the error. Otherwise some error location `X_I` has `|I| >= l`, and
//! the decoder searches sets `S` of such locations, smallest first, for one
//! whose residual `syndrome + rem(sum X_I)` is light enough to be the rest of
//! the error.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::division::remainder;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Poly};
use crate::rmcode::{build_g, codewords, CodeParams, IndexMap, SubsetIndex, Word};

/// Order under which `G` is a reduced Groebner basis for decoding.
pub const DECODE_ORDER: MonomialOrder = MonomialOrder::Grlex;

/// Remainder of a received word modulo `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syndrome {
    pub rem: Poly,
    pub weight: usize,
}

impl Syndrome {
    fn new(rem: Poly) -> Self {
        Syndrome { weight: rem.weight(), rem }
    }

    pub fn is_zero(&self) -> bool {
        self.rem.is_zero()
    }
}

/// `I` together with `I^`, the subsets `L` with `X_L` in the remainder of `X_I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatSet {
    pub index: SubsetIndex,
    pub hat: BTreeSet<SubsetIndex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecodeStatus {
    /// Zero syndrome, the word was already a codeword.
    Clean,
    /// Syndrome weight at most `t`; the syndrome is the error.
    CorrectedLow,
    /// Error found through the search over high-degree locations.
    CorrectedOmega,
    /// No error pattern of weight at most `t` explains the syndrome.
    Failure,
}

impl DecodeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            DecodeStatus::Clean => "clean",
            DecodeStatus::CorrectedLow => "corrected_low",
            DecodeStatus::CorrectedOmega => "corrected_omega",
            DecodeStatus::Failure => "failure",
        }
    }

    pub fn is_success(self) -> bool {
        self != DecodeStatus::Failure
    }
}

/// Outcome of a decode. On success `codeword + error` is the received word
/// and `error` is zero exactly when the status is `Clean`; on failure both
/// are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub status: DecodeStatus,
    pub codeword: Option<Word>,
    pub error: Option<Poly>,
    pub syndrome: Syndrome,
    /// Locations with `|I| >= l` picked by the search, when it ran and succeeded.
    pub chosen_s: Option<Vec<SubsetIndex>>,
}

impl DecodeResult {
    pub fn report(&self) -> DecodeReport {
        DecodeReport {
            status: self.status,
            codeword: self.codeword.as_ref().map(Word::to_string),
            error_poly: self.error.as_ref().map(|e| e.format(DECODE_ORDER)),
            syndrome: self.syndrome.rem.format(DECODE_ORDER),
            chosen_s: self
                .chosen_s
                .as_ref()
                .map(|s| s.iter().map(|i| i.indices()).collect()),
        }
    }
}

/// Serializable view of a [`DecodeResult`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeReport {
    pub status: DecodeStatus,
    pub codeword: Option<String>,
    pub error_poly: Option<String>,
    pub syndrome: String,
    #[serde(rename = "chosen_S")]
    pub chosen_s: Option<Vec<Vec<usize>>>,
}

/// Nearest codewords by exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MlDecode {
    pub codeword: Word,
    pub distance: usize,
    /// Another codeword sits at the same distance.
    pub tie: bool,
}

/// How [`random_error`] draws error patterns.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ErrorMode {
    /// Uniform among patterns of exactly this weight.
    FixedWeight(usize),
    /// Each bit flips independently with this probability.
    Bsc(f64),
}

/// Decoder for one `(m, l)`, caching `G`, the word layout and the
/// remainders of every `X_I` with `|I| >= l`.
#[derive(Debug, Clone)]
pub struct Decoder {
    params: CodeParams,
    g: Vec<Poly>,
    map: IndexMap,
    high: Vec<(SubsetIndex, Poly)>,
}

impl Decoder {
    pub fn new(params: CodeParams) -> Result<Self> {
        let g = build_g(&params)?;
        let map = IndexMap::for_words(params.m)?;
        let high = SubsetIndex::all_descending(params.m, DECODE_ORDER)
            .into_iter()
            .filter(|s| s.len() >= params.l)
            .map(|s| {
                let x = Poly::from(s.monomial(params.m)?);
                Ok((s, remainder(&x, &g, DECODE_ORDER)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Decoder { params, g, map, high })
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn basis(&self) -> &[Poly] {
        &self.g
    }

    pub fn index_map(&self) -> &IndexMap {
        &self.map
    }

    fn check_word(&self, v: &Word) -> Result<()> {
        if v.m() != self.params.m {
            return Err(Error::WordLength { got: v.len(), expected: self.params.n });
        }
        Ok(())
    }

    pub fn syndrome(&self, v: &Word) -> Result<Syndrome> {
        self.check_word(v)?;
        let f = self.map.word_to_poly(v)?;
        Ok(Syndrome::new(remainder(&f, &self.g, DECODE_ORDER)?))
    }

    pub fn is_codeword(&self, v: &Word) -> Result<bool> {
        Ok(self.syndrome(v)?.is_zero())
    }

    /// Remainder of `X_I` modulo `G`.
    pub fn remainder_of(&self, index: SubsetIndex) -> Result<Poly> {
        if let Some((_, r)) = self.high.iter().find(|(s, _)| *s == index) {
            return Ok(r.clone());
        }
        let x = Poly::from(index.monomial(self.params.m)?);
        remainder(&x, &self.g, DECODE_ORDER)
    }

    /// Remainder of `sum X_I` computed directly by division.
    pub fn remainder_of_sum(&self, indices: &[SubsetIndex]) -> Result<Poly> {
        let m = self.params.m;
        let sum = Poly::from_monomials(m, indices.iter().map(|s| s.monomial(m)).collect::<Result<Vec<_>>>()?)?;
        remainder(&sum, &self.g, DECODE_ORDER)
    }

    pub fn hat_set(&self, index: SubsetIndex) -> Result<HatSet> {
        let r = self.remainder_of(index)?;
        Ok(HatSet { index, hat: support_sets(&r)? })
    }

    /// `rem(sum X_I)` as the iterated symmetric difference of hat sets.
    pub fn hat_symdiff(&self, indices: &[SubsetIndex]) -> Result<Poly> {
        if indices.iter().duplicates().next().is_some() {
            return Err(Error::InvalidArgument("subsets must be pairwise distinct".into()));
        }
        let mut acc: BTreeSet<SubsetIndex> = BTreeSet::new();
        for &i in indices {
            let hat = self.hat_set(i)?.hat;
            acc = acc.symmetric_difference(&hat).copied().collect();
        }
        let m = self.params.m;
        Poly::from_monomials(m, acc.into_iter().map(|s| s.monomial(m)).collect::<Result<Vec<_>>>()?)
    }

    pub fn decode(&self, v: &Word) -> Result<DecodeResult> {
        let syndrome = self.syndrome(v)?;
        let t = self.params.t;
        let m = self.params.m;

        if syndrome.is_zero() {
            return Ok(DecodeResult {
                status: DecodeStatus::Clean,
                codeword: Some(v.clone()),
                error: Some(Poly::zero(m)?),
                syndrome,
                chosen_s: None,
            });
        }
        if syndrome.weight <= t {
            let error = syndrome.rem.clone();
            return self.finish(v, error, DecodeStatus::CorrectedLow, syndrome, None);
        }

        for size in 1..=t {
            for combo in self.high.iter().combinations(size) {
                let mut residual = syndrome.rem.clone();
                for (_, r) in &combo {
                    residual.add_in_place(r);
                }
                if residual.weight() > t - size {
                    continue;
                }
                // Residual monomials all have degree < l, disjoint from S.
                let mut error = residual;
                for (s, _) in &combo {
                    error.toggle(s.monomial(m)?);
                }
                let chosen = combo.iter().map(|(s, _)| *s).collect();
                return self.finish(v, error, DecodeStatus::CorrectedOmega, syndrome, Some(chosen));
            }
        }
        Ok(failure(syndrome))
    }

    fn finish(
        &self,
        v: &Word,
        error: Poly,
        status: DecodeStatus,
        syndrome: Syndrome,
        chosen_s: Option<Vec<SubsetIndex>>,
    ) -> Result<DecodeResult> {
        let codeword = v.add(&self.map.poly_to_word(&error)?)?;
        if !self.is_codeword(&codeword)? {
            return Ok(failure(syndrome));
        }
        Ok(DecodeResult { status, codeword: Some(codeword), error: Some(error), syndrome, chosen_s })
    }

    /// Single-error decoding for `l = 2`: a syndrome `sum_{i in I} Xi (+ 1)`
    /// points at the error `x_I`. Anything else falls back to [`Decoder::decode`].
    pub fn decode_m2(&self, v: &Word) -> Result<DecodeResult> {
        if self.params.l != 2 {
            return Err(Error::InvalidArgument(format!(
                "single-error decoding needs l = 2, got l = {}",
                self.params.l
            )));
        }
        let syndrome = self.syndrome(v)?;
        let m = self.params.m;
        if syndrome.is_zero() {
            return Ok(DecodeResult {
                status: DecodeStatus::Clean,
                codeword: Some(v.clone()),
                error: Some(Poly::zero(m)?),
                syndrome,
                chosen_s: None,
            });
        }
        let Some(location) = linear_shape(&syndrome.rem) else {
            return self.decode(v);
        };
        let error = Poly::from(location.monomial(m)?);
        let (status, chosen) = if location.len() < 2 {
            (DecodeStatus::CorrectedLow, None)
        } else {
            (DecodeStatus::CorrectedOmega, Some(vec![location]))
        };
        // A single error at x_I has syndrome sum Xi plus 1 exactly when |I|
        // is even; any other constant means more than one error.
        let constant = syndrome.rem.contains(&Monomial::one(m)?);
        if constant != (location.len() % 2 == 0) {
            return self.decode(v);
        }
        let result = self.finish(v, error, status, syndrome, chosen)?;
        if result.status.is_success() {
            Ok(result)
        } else {
            self.decode(v)
        }
    }

    /// Closest codeword by exhaustive search over the code (`m <= 4`).
    pub fn ml_decode_bruteforce(&self, v: &Word) -> Result<MlDecode> {
        self.check_word(v)?;
        let mut best: Option<(Word, usize)> = None;
        let mut tie = false;
        for c in codewords(&self.params)? {
            let dist = c.distance(v);
            match &best {
                Some((_, d)) if dist > *d => {}
                Some((_, d)) if dist == *d => tie = true,
                _ => {
                    best = Some((c, dist));
                    tie = false;
                }
            }
        }
        let (codeword, distance) = best.expect("a code contains at least the zero word");
        Ok(MlDecode { codeword, distance, tie })
    }
}

fn failure(syndrome: Syndrome) -> DecodeResult {
    DecodeResult { status: DecodeStatus::Failure, codeword: None, error: None, syndrome, chosen_s: None }
}

fn support_sets(p: &Poly) -> Result<BTreeSet<SubsetIndex>> {
    p.monomials()
        .map(|mono| mono.to_mask().map(SubsetIndex).ok_or(Error::NotReduced))
        .collect()
}

/// `I` when `p = sum_{i in I} Xi` or `p = sum_{i in I} Xi + 1`.
fn linear_shape(p: &Poly) -> Option<SubsetIndex> {
    let mut mask = 0u32;
    for mono in p.monomials() {
        match mono.degree() {
            0 => {}
            1 => mask |= mono.to_mask()?,
            _ => return None,
        }
    }
    Some(SubsetIndex(mask))
}

pub fn syndrome(v: &Word, params: &CodeParams) -> Result<Syndrome> {
    Decoder::new(*params)?.syndrome(v)
}

pub fn hat_set(index: SubsetIndex, params: &CodeParams) -> Result<HatSet> {
    Decoder::new(*params)?.hat_set(index)
}

pub fn hat_symdiff(indices: &[SubsetIndex], params: &CodeParams) -> Result<Poly> {
    Decoder::new(*params)?.hat_symdiff(indices)
}

pub fn decode(v: &Word, params: &CodeParams) -> Result<DecodeResult> {
    Decoder::new(*params)?.decode(v)
}

pub fn decode_m2(v: &Word, params: &CodeParams) -> Result<DecodeResult> {
    Decoder::new(*params)?.decode_m2(v)
}

pub fn ml_decode_bruteforce(v: &Word, params: &CodeParams) -> Result<MlDecode> {
    Decoder::new(*params)?.ml_decode_bruteforce(v)
}

/// Deterministic error pattern for `seed`.
pub fn random_error(params: &CodeParams, mode: ErrorMode, seed: u64) -> Result<Word> {
    random_error_with(params, mode, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_error_with<R: Rng + ?Sized>(params: &CodeParams, mode: ErrorMode, rng: &mut R) -> Result<Word> {
    let mut w = Word::zeros(params.m)?;
    match mode {
        ErrorMode::FixedWeight(weight) => {
            if weight > params.n {
                return Err(Error::InvalidArgument(format!(
                    "error weight {weight} exceeds length {}",
                    params.n
                )));
            }
            for pos in sample(rng, params.n, weight) {
                w.flip(pos);
            }
        }
        ErrorMode::Bsc(p) => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidArgument(format!("crossover probability {p} outside [0, 1]")));
            }
            for pos in 0..params.n {
                if rng.gen_bool(p) {
                    w.flip(pos);
                }
            }
        }
    }
    Ok(w)
}
