//! The ambient algebra `A = F2[X1..Xm]/(X1^2-1, .., Xm^2-1)`, the radical
//! powers `M^l` and their identification with Reed-Muller codes.
//!
//! A word of length `2^m` is a square-free polynomial: position `j` holds the
//! coefficient of the `j`-th square-free monomial in descending lexicographic
//! order, so position 1 is `x1*x2*..*xm` and position `2^m` is `1`. For
//! `m = 3` the positions read
//!
//! ```text
//! x1x2x3  x1x2  x1x3  x1  x2x3  x2  x3  1
//! ```
//!
//! which is the layout under which `10100010` is `x1x2x3 + x1x3 + x3`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::polyring::{Monomial, MonomialOrder, Poly, MAX_VARS};

/// Order used to lay out words.
pub const WORD_ORDER: MonomialOrder = MonomialOrder::Lex;

/// Largest `m` for which whole-code enumeration is allowed.
pub const ENUMERATION_MAX_M: usize = 4;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Parameters of `M^l = RM(m - l, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeParams {
    pub m: usize,
    pub l: usize,
    /// Length `2^m`.
    pub n: usize,
    /// Reed-Muller order `m - l`.
    pub nu: usize,
    pub dim: usize,
    /// Minimum distance `2^l`.
    pub d: usize,
    /// Largest `t` with `2t + 1 <= 2^l`.
    pub t: usize,
}

impl CodeParams {
    pub fn new(m: usize, l: usize) -> Result<Self> {
        if !(1..=MAX_VARS).contains(&m) || l > m {
            return Err(Error::BadParams { m, l });
        }
        let d = 1usize << l;
        Ok(CodeParams {
            m,
            l,
            n: 1 << m,
            nu: m - l,
            dim: (l..=m).map(|j| binomial(m, j)).sum(),
            d,
            t: (d - 1) / 2,
        })
    }

    /// Every `(m, l)` with `1 <= m <= max_m`, `0 <= l <= m`.
    pub fn all_up_to(max_m: usize) -> impl Iterator<Item = CodeParams> {
        (1..=max_m).flat_map(|m| (0..=m).map(move |l| CodeParams::new(m, l).expect("valid")))
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M^{} (m={}, n={}, dim={}, d={}, t={})", self.l, self.m, self.n, self.dim, self.d, self.t)
    }
}

/// A subset `I` of `{1, .., m}`, bit `i - 1` standing for `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetIndex(pub u32);

impl SubsetIndex {
    pub const EMPTY: SubsetIndex = SubsetIndex(0);

    /// From 1-based element indices.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &i in indices {
            if i == 0 || i > MAX_VARS {
                return Err(Error::InvalidArgument(format!("subset element {i} out of range")));
            }
            mask |= 1 << (i - 1);
        }
        Ok(SubsetIndex(mask))
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|i| (self.0 >> i) & 1 == 1).map(|i| i + 1).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: SubsetIndex) -> bool {
        self.0 & !other.0 == 0
    }

    /// All subsets of `self`, the power set `P(I)`.
    pub fn subsets(self) -> impl Iterator<Item = SubsetIndex> {
        // Standard submask walk, emitted from `self` down to the empty set.
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & full) };
            Some(SubsetIndex(cur))
        })
    }

    /// `X_I = prod_{i in I} Xi`.
    pub fn monomial(self, m: usize) -> Result<Monomial> {
        Monomial::from_mask(m, self.0)
    }

    /// `g_I = prod_{i in I} (Xi - 1)`, which over F2 is the sum of `X_L` over
    /// all `L` contained in `I`.
    pub fn g_poly(self, m: usize) -> Result<Poly> {
        let monos = self.subsets().map(|s| s.monomial(m)).collect::<Result<Vec<_>>>()?;
        Poly::from_monomials(m, monos)
    }

    /// Subsets of `{1..m}` in descending order of `X_I` under `ord`.
    pub fn all_descending(m: usize, ord: MonomialOrder) -> Vec<SubsetIndex> {
        let mut all: Vec<SubsetIndex> = (0..1u32 << m).map(SubsetIndex).collect();
        all.sort_by(|a, b| {
            ord.cmp(&b.monomial(m).expect("valid"), &a.monomial(m).expect("valid"))
        });
        all
    }
}

impl fmt::Debug for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Bijection between word positions and square-free monomials (as masks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexMap {
    m: usize,
    masks: Vec<u32>,
    positions: Vec<usize>,
}

impl IndexMap {
    /// The layout used for all words in this crate.
    pub fn for_words(m: usize) -> Result<Self> {
        Self::descending(m, WORD_ORDER)
    }

    /// Positions `0..2^m` holding monomials in descending `ord`.
    pub fn descending(m: usize, ord: MonomialOrder) -> Result<Self> {
        if !(1..=MAX_VARS).contains(&m) {
            return Err(Error::BadVariableCount(m));
        }
        let masks: Vec<u32> = match ord {
            // Descending lex with x1 most significant: reverse the bits of a
            // descending counter.
            MonomialOrder::Lex => (0..1u32 << m)
                .rev()
                .map(|a| a.reverse_bits() >> (32 - m))
                .collect(),
            MonomialOrder::Grlex => {
                SubsetIndex::all_descending(m, ord).into_iter().map(|s| s.0).collect()
            }
        };
        let mut positions = vec![0; masks.len()];
        for (pos, &mask) in masks.iter().enumerate() {
            positions[mask as usize] = pos;
        }
        Ok(IndexMap { m, masks, positions })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Mask of the monomial at 0-based `position`.
    pub fn mask_at(&self, position: usize) -> u32 {
        self.masks[position]
    }

    /// 0-based position of the monomial with the given mask.
    pub fn position_of(&self, mask: u32) -> usize {
        self.positions[mask as usize]
    }

    pub fn word_to_poly(&self, w: &Word) -> Result<Poly> {
        if w.m() != self.m {
            return Err(Error::DimensionMismatch { left: self.m, right: w.m() });
        }
        let monos = w
            .bits
            .ones()
            .map(|pos| Monomial::from_mask(self.m, self.masks[pos]))
            .collect::<Result<Vec<_>>>()?;
        Poly::from_monomials(self.m, monos)
    }

    pub fn poly_to_word(&self, f: &Poly) -> Result<Word> {
        if f.vars() != self.m {
            return Err(Error::DimensionMismatch { left: self.m, right: f.vars() });
        }
        let mut w = Word::zeros(self.m)?;
        for mono in f.monomials() {
            let mask = mono.to_mask().ok_or(Error::NotReduced)?;
            w.bits.flip(self.position_of(mask));
        }
        Ok(w)
    }
}

/// A binary word of length `2^m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    m: usize,
    bits: BitVec,
}

impl Word {
    pub fn zeros(m: usize) -> Result<Self> {
        if !(1..=MAX_VARS).contains(&m) {
            return Err(Error::BadVariableCount(m));
        }
        Ok(Word { m, bits: BitVec::zeros(1 << m) })
    }

    pub fn from_bitvec(m: usize, bits: BitVec) -> Result<Self> {
        let expected = 1usize << m;
        if bits.len() != expected {
            return Err(Error::WordLength { got: bits.len(), expected });
        }
        Ok(Word { m, bits })
    }

    pub fn from_bits(m: usize, bits: &[u8]) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::Parse("word bits must be 0 or 1".into()));
        }
        Self::from_bitvec(m, BitVec::from_bools(bits.iter().map(|&b| b == 1)))
    }

    /// Parses a bitstring; the leftmost character is position 1.
    pub fn parse(m: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut bits = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => return Err(Error::Parse(format!("unexpected character `{c}` in word"))),
            }
        }
        Self::from_bits(m, &bits)
    }

    /// Unit word with a single 1 at the 0-based `position`.
    pub fn unit(m: usize, position: usize) -> Result<Self> {
        let mut w = Self::zeros(m)?;
        if position >= w.len() {
            return Err(Error::InvalidArgument(format!("position {position} out of range")));
        }
        w.bits.flip(position);
        Ok(w)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    pub fn get(&self, position: usize) -> bool {
        self.bits.get(position)
    }

    pub fn flip(&mut self, position: usize) {
        self.bits.flip(position)
    }

    pub fn weight(&self) -> usize {
        self.bits.weight()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn distance(&self, other: &Word) -> usize {
        self.bits.distance(&other.bits)
    }

    pub fn add(&self, other: &Word) -> Result<Word> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch { left: self.m, right: other.m });
        }
        let mut out = self.clone();
        out.bits.xor_assign(&other.bits);
        Ok(out)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.bits)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits)
    }
}

pub fn word_to_poly(w: &Word) -> Result<Poly> {
    IndexMap::for_words(w.m())?.word_to_poly(w)
}

pub fn poly_to_word(f: &Poly) -> Result<Word> {
    IndexMap::for_words(f.vars())?.poly_to_word(f)
}

/// Subsets of size exactly `l`, in descending order of `X_I`.
pub fn subsets_of_size(m: usize, l: usize) -> Vec<SubsetIndex> {
    SubsetIndex::all_descending(m, MonomialOrder::Grlex)
        .into_iter()
        .filter(|s| s.len() == l)
        .collect()
}

/// `G = {g_I : |I| = l}`, ordered by descending `X_I`.
pub fn build_g(params: &CodeParams) -> Result<Vec<Poly>> {
    subsets_of_size(params.m, params.l).into_iter().map(|s| s.g_poly(params.m)).collect()
}

/// `H = {X1^2 - 1, .., Xm^2 - 1}`.
pub fn build_h(params: &CodeParams) -> Result<Vec<Poly>> {
    let m = params.m;
    (1..=m)
        .map(|i| {
            let mut e = vec![0u32; m];
            e[i - 1] = 2;
            Poly::from_monomials(m, [Monomial::new(&e)?, Monomial::one(m)?])
        })
        .collect()
}

/// The Jennings basis of `M^l`: `g_I` for every `|I| >= l`, ordered by
/// descending `X_I` under grlex.
pub fn jennings_basis(params: &CodeParams) -> Result<Vec<Poly>> {
    SubsetIndex::all_descending(params.m, MonomialOrder::Grlex)
        .into_iter()
        .filter(|s| s.len() >= params.l)
        .map(|s| s.g_poly(params.m))
        .collect()
}

/// Jennings basis elements as the rows of a matrix.
pub fn jennings_matrix(params: &CodeParams) -> Result<BitMatrix> {
    let map = IndexMap::for_words(params.m)?;
    let rows = jennings_basis(params)?
        .iter()
        .map(|p| map.poly_to_word(p).map(|w| w.bits))
        .collect::<Result<Vec<_>>>()?;
    Ok(BitMatrix::new(params.n, rows))
}

/// Evaluation encoding: the bit at the position of `x^i` is `P(i)`.
///
/// `message` is a square-free polynomial in `Y1..Ym` (parsed with the same
/// grammar as any other polynomial) of total degree at most `m - l`.
pub fn encode(message: &Poly, params: &CodeParams) -> Result<Word> {
    if message.vars() != params.m {
        return Err(Error::DimensionMismatch { left: params.m, right: message.vars() });
    }
    let terms = message
        .monomials()
        .map(|mono| mono.to_mask().ok_or(Error::NotReduced))
        .collect::<Result<Vec<_>>>()?;
    if let Some(degree) = message.total_degree() {
        if degree as usize > params.nu {
            return Err(Error::NotInCode { degree, max: params.nu });
        }
    }
    let map = IndexMap::for_words(params.m)?;
    let mut w = Word::zeros(params.m)?;
    for pos in 0..params.n {
        let point = map.mask_at(pos);
        let value = terms.iter().filter(|&&t| t & !point == 0).count() % 2 == 1;
        if value {
            w.flip(pos);
        }
    }
    Ok(w)
}

/// Encodings of the monomials `Y_J`, `|J| <= m - l`, a generator matrix of
/// the evaluation code.
pub fn generator_matrix(params: &CodeParams) -> Result<BitMatrix> {
    let rows = SubsetIndex::all_descending(params.m, MonomialOrder::Grlex)
        .into_iter()
        .filter(|s| s.len() <= params.nu)
        .map(|s| Ok(encode(&Poly::from(s.monomial(params.m)?), params)?.bits))
        .collect::<Result<Vec<_>>>()?;
    Ok(BitMatrix::new(params.n, rows))
}

/// Streams all `2^dim` codewords in Gray-code order of the generator rows.
pub struct Codewords {
    m: usize,
    rows: Vec<BitVec>,
    current: BitVec,
    index: u64,
    total: u64,
}

impl Iterator for Codewords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.index >= self.total {
            return None;
        }
        if self.index > 0 {
            self.current.xor_assign(&self.rows[self.index.trailing_zeros() as usize]);
        }
        self.index += 1;
        Some(Word { m: self.m, bits: self.current.clone() })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Codewords {}

/// Brute-force enumeration of the code, limited to `m <= 4`.
pub fn codewords(params: &CodeParams) -> Result<Codewords> {
    if params.m > ENUMERATION_MAX_M {
        return Err(Error::Capability(format!(
            "codeword enumeration supports m <= {ENUMERATION_MAX_M}, got m = {}",
            params.m
        )));
    }
    let rows = generator_matrix(params)?.rows().to_vec();
    Ok(Codewords {
        m: params.m,
        total: 1u64 << rows.len(),
        rows,
        current: BitVec::zeros(params.n),
        index: 0,
    })
}

/// `M^l` (span of the Jennings basis) equals the evaluation code of order
/// `m - l`, compared through reduced row echelon forms.
pub fn berman_check(params: &CodeParams) -> Result<bool> {
    Ok(jennings_matrix(params)?.same_row_space(&generator_matrix(params)?))
}

/// Smallest nonzero codeword weight by exhaustive enumeration; `None` for
/// the zero code (never produced by valid parameters).
pub fn min_weight_bruteforce(params: &CodeParams) -> Result<Option<usize>> {
    Ok(codewords(params)?.map(|w| w.weight()).filter(|&w| w > 0).min())
}
