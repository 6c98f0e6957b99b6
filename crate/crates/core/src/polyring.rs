//! Sparse multivariate monomials and polynomials over F2.
//!
//! Variables are `X1 .. Xm` with the fixed precedence `X1 > X2 > .. > Xm`.
//! A polynomial is its support: a coefficient is 1 exactly when the monomial
//! is present, so addition is symmetric difference.

use std::cmp::Ordering;
use std::collections::btree_set;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 16;

/// Largest exponent a monomial may carry. Exponents >= 2 only show up while
/// working against `H = {Xi^2 - 1}`.
pub const EXPONENT_CAP: u8 = 4;

fn check_vars(m: usize) -> Result<()> {
    if (1..=MAX_VARS).contains(&m) {
        Ok(())
    } else {
        Err(Error::BadVariableCount(m))
    }
}

fn check_same(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: a, right: b })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grlex,
}

impl MonomialOrder {
    /// Compares two monomials. Panics if the variable counts differ; use
    /// [`MonomialOrder::try_cmp`] for a checked comparison.
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.m, b.m, "comparing monomials in different rings");
        let lex = || a.exps[..a.m as usize].cmp(&b.exps[..b.m as usize]);
        match self {
            MonomialOrder::Lex => lex(),
            MonomialOrder::Grlex => a.degree().cmp(&b.degree()).then_with(lex),
        }
    }

    pub fn try_cmp(self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        check_same(a.vars(), b.vars())?;
        Ok(self.cmp(a, b))
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grlex => "grlex",
        })
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" => Ok(MonomialOrder::Grlex),
            other => Err(Error::Parse(format!("unknown monomial order `{other}`"))),
        }
    }
}

/// `X^a = X1^a1 * .. * Xm^am`.
///
/// The derived `Ord` is the lexicographic order on the exponent vector and
/// is only used for storage; leading terms always go through a
/// [`MonomialOrder`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    m: u8,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub fn one(m: usize) -> Result<Self> {
        check_vars(m)?;
        Ok(Monomial { m: m as u8, exps: [0; MAX_VARS] })
    }

    pub fn new(exponents: &[u32]) -> Result<Self> {
        check_vars(exponents.len())?;
        let mut exps = [0u8; MAX_VARS];
        for (slot, &e) in exps.iter_mut().zip(exponents) {
            if e > EXPONENT_CAP as u32 {
                return Err(Error::ExponentOverflow { exponent: e, cap: EXPONENT_CAP });
            }
            *slot = e as u8;
        }
        Ok(Monomial { m: exponents.len() as u8, exps })
    }

    /// The single variable `Xi`, 1-based.
    pub fn var(m: usize, i: usize) -> Result<Self> {
        let mut mono = Self::one(m)?;
        if i == 0 || i > m {
            return Err(Error::InvalidArgument(format!("variable x{i} outside x1..x{m}")));
        }
        mono.exps[i - 1] = 1;
        Ok(mono)
    }

    /// Square-free monomial from a bit mask, bit `i - 1` standing for `Xi`.
    pub fn from_mask(m: usize, mask: u32) -> Result<Self> {
        let mut mono = Self::one(m)?;
        if m < 32 && mask >> m != 0 {
            return Err(Error::InvalidArgument(format!("mask {mask:#x} uses more than {m} variables")));
        }
        for i in 0..m {
            mono.exps[i] = ((mask >> i) & 1) as u8;
        }
        Ok(mono)
    }

    /// Inverse of [`Monomial::from_mask`]; `None` unless square-free.
    pub fn to_mask(&self) -> Option<u32> {
        let mut mask = 0u32;
        for (i, &e) in self.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => mask |= 1 << i,
                _ => return None,
            }
        }
        Some(mask)
    }

    pub fn vars(&self) -> usize {
        self.m as usize
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.m as usize]
    }

    pub fn exponent(&self, i: usize) -> u8 {
        self.exponents()[i]
    }

    /// Total degree `|a|`.
    pub fn degree(&self) -> u32 {
        self.exponents().iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents().iter().all(|&e| e == 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.exponents().iter().all(|&e| e <= 1)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_same(self.vars(), other.vars())?;
        let mut out = *self;
        for i in 0..self.vars() {
            let e = self.exps[i] as u32 + other.exps[i] as u32;
            if e > EXPONENT_CAP as u32 {
                return Err(Error::ExponentOverflow { exponent: e, cap: EXPONENT_CAP });
            }
            out.exps[i] = e as u8;
        }
        Ok(out)
    }

    /// `self | other`, componentwise `<=`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.m == other.m && self.exponents().iter().zip(other.exponents()).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, or `None` when `divisor` does not divide `self`.
    pub fn div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        let mut out = *self;
        for i in 0..self.vars() {
            out.exps[i] -= divisor.exps[i];
        }
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        check_same(self.vars(), other.vars())?;
        let mut out = *self;
        for i in 0..self.vars() {
            out.exps[i] = self.exps[i].max(other.exps[i]);
        }
        Ok(out)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, self, 'x')
    }
}

fn write_monomial(f: &mut impl fmt::Write, mono: &Monomial, var: char) -> fmt::Result {
    if mono.is_one() {
        return f.write_str("1");
    }
    let mut first = true;
    for (i, &e) in mono.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        write!(f, "{}{}", var, i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// A polynomial over F2, stored as its support.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    m: u8,
    support: BTreeSet<Monomial>,
}

impl Poly {
    pub fn zero(m: usize) -> Result<Self> {
        check_vars(m)?;
        Ok(Poly { m: m as u8, support: BTreeSet::new() })
    }

    pub fn one(m: usize) -> Result<Self> {
        Ok(Poly::from(Monomial::one(m)?))
    }

    /// Sums the given monomials; repeated monomials cancel in pairs.
    pub fn from_monomials<I>(m: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut p = Poly::zero(m)?;
        for mono in monomials {
            check_same(m, mono.vars())?;
            p.toggle(mono);
        }
        Ok(p)
    }

    pub fn vars(&self) -> usize {
        self.m as usize
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Number of monomials in the support, i.e. the weight of a reduced polynomial.
    pub fn weight(&self) -> usize {
        self.support.len()
    }

    pub fn contains(&self, mono: &Monomial) -> bool {
        self.support.contains(mono)
    }

    /// Monomials in storage order. Use [`Poly::sorted`] for a specific order.
    pub fn monomials(&self) -> btree_set::Iter<'_, Monomial> {
        self.support.iter()
    }

    /// Monomials in descending `ord`.
    pub fn sorted(&self, ord: MonomialOrder) -> Vec<Monomial> {
        let mut v: Vec<_> = self.support.iter().copied().collect();
        v.sort_by(|a, b| ord.cmp(b, a));
        v
    }

    /// Adds one monomial in place (F2: removes it if present).
    pub(crate) fn toggle(&mut self, mono: Monomial) {
        debug_assert_eq!(mono.m, self.m);
        if !self.support.remove(&mono) {
            self.support.insert(mono);
        }
    }

    pub(crate) fn add_in_place(&mut self, other: &Poly) {
        debug_assert_eq!(other.m, self.m);
        for &mono in &other.support {
            self.toggle(mono);
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        check_same(self.vars(), other.vars())?;
        let mut out = self.clone();
        out.add_in_place(other);
        Ok(out)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        check_same(self.vars(), other.vars())?;
        let mut out = Poly { m: self.m, support: BTreeSet::new() };
        for a in &self.support {
            for b in &other.support {
                out.toggle(a.mul(b)?);
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Result<Poly> {
        check_same(self.vars(), mono.vars())?;
        let mut support = BTreeSet::new();
        for a in &self.support {
            support.insert(a.mul(mono)?);
        }
        Ok(Poly { m: self.m, support })
    }

    /// Leading monomial under `ord`; over F2 this is also the leading term.
    pub fn leading(&self, ord: MonomialOrder) -> Result<Monomial> {
        self.support
            .iter()
            .copied()
            .max_by(|a, b| ord.cmp(a, b))
            .ok_or(Error::ZeroPolynomial)
    }

    /// `multideg(f)` as an exponent vector.
    pub fn multideg(&self, ord: MonomialOrder) -> Result<Vec<u32>> {
        Ok(self.leading(ord)?.exponents().iter().map(|&e| e as u32).collect())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.support.iter().map(Monomial::degree).max()
    }

    /// True when every exponent is 0 or 1, i.e. the polynomial is its own
    /// remainder modulo `H`.
    pub fn is_square_free(&self) -> bool {
        self.support.iter().all(Monomial::is_square_free)
    }

    /// Canonical text with monomials in descending `ord`.
    pub fn format(&self, ord: MonomialOrder) -> String {
        self.format_with(ord, 'x')
    }

    /// Same as [`Poly::format`] with a different variable letter.
    pub fn format_with(&self, ord: MonomialOrder, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, mono) in self.sorted(ord).iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            write_monomial(&mut out, mono, var).expect("writing to a String");
        }
        out
    }

    /// Parses the polynomial text grammar in `m` variables.
    ///
    /// ```text
    /// poly   := "0" | term ("+" term)*
    /// term   := "1" | factor ("*" factor)*
    /// factor := ("x" | "y") index ["^" exponent]
    /// ```
    ///
    /// Whitespace is ignored and the variable letter is case-insensitive.
    pub fn parse(m: usize, text: &str) -> Result<Poly> {
        check_vars(m)?;
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Poly::zero(m)?;
        if cleaned == "0" {
            return Ok(p);
        }
        for term in cleaned.split('+') {
            p.toggle(parse_term(m, term)?);
        }
        Ok(p)
    }
}

fn parse_term(m: usize, term: &str) -> Result<Monomial> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    if term == "1" {
        return Monomial::one(m);
    }
    let mut exps = vec![0u32; m];
    for factor in term.split('*') {
        let rest = factor
            .strip_prefix(['x', 'X', 'y', 'Y'])
            .ok_or_else(|| Error::Parse(format!("bad factor `{factor}`")))?;
        let (index, power) = match rest.split_once('^') {
            Some((i, e)) => (i, e),
            None => (rest, "1"),
        };
        let index: usize = index
            .parse()
            .map_err(|_| Error::Parse(format!("bad variable index in `{factor}`")))?;
        let power: u32 = power
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
        if index == 0 || index > m {
            return Err(Error::Parse(format!("variable index {index} outside 1..={m}")));
        }
        exps[index - 1] += power;
    }
    Monomial::new(&exps)
}

impl From<Monomial> for Poly {
    fn from(mono: Monomial) -> Self {
        Poly { m: mono.m, support: BTreeSet::from([mono]) }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(MonomialOrder::Grlex))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(MonomialOrder::Grlex))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    fn p3(s: &str) -> Poly {
        Poly::parse(3, s).unwrap()
    }

    #[test]
    fn compare_examples() {
        use MonomialOrder::*;
        assert_eq!(Lex.cmp(&mono(&[1, 0, 0]), &mono(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(Grlex.cmp(&mono(&[0, 2, 0]), &mono(&[1, 0, 0])), Ordering::Greater);
        assert_eq!(Lex.cmp(&mono(&[0, 2, 0]), &mono(&[1, 0, 0])), Ordering::Less);
        assert_eq!(Grlex.cmp(&mono(&[1, 1, 0]), &mono(&[1, 0, 1])), Ordering::Greater);
        assert!(Grlex.try_cmp(&mono(&[1, 0]), &mono(&[1, 0, 0])).is_err());
    }

    #[test]
    fn monomial_arithmetic() {
        assert_eq!(mono(&[1, 0]).mul(&mono(&[0, 1])).unwrap(), mono(&[1, 1]));
        assert_eq!(mono(&[1, 0]).mul(&mono(&[1, 0])).unwrap(), mono(&[2, 0]));
        assert_eq!(mono(&[1, 1]).mul(&Monomial::one(2).unwrap()).unwrap(), mono(&[1, 1]));
        assert!(matches!(
            mono(&[3, 0]).mul(&mono(&[2, 0])),
            Err(Error::ExponentOverflow { exponent: 5, .. })
        ));
        assert!(Monomial::new(&[5]).is_err());

        assert!(mono(&[1, 0]).divides(&mono(&[1, 1])));
        assert_eq!(mono(&[1, 1]).div(&mono(&[1, 0])), Some(mono(&[0, 1])));
        assert!(!mono(&[1, 1]).divides(&mono(&[1, 0])));
        assert!(Monomial::one(2).unwrap().divides(&mono(&[3, 4])));
        assert_eq!(mono(&[2, 1, 0]).lcm(&mono(&[1, 0, 3])).unwrap(), mono(&[2, 1, 3]));
    }

    #[test]
    fn polynomial_addition() {
        assert_eq!(p3("x1 + 1").add(&p3("x1 + x2")).unwrap(), p3("x2 + 1"));
        assert_eq!(p3("x1 + 1").add(&p3("0")).unwrap(), p3("x1 + 1"));
        let f = p3("x2*x3 + x2 + x3 + 1");
        assert!(f.add(&f).unwrap().is_zero());
        assert!(p3("x1").add(&Poly::parse(2, "x1").unwrap()).is_err());
    }

    #[test]
    fn polynomial_multiplication() {
        let prod = p3("x1 + 1").mul(&p3("x2 + 1")).unwrap();
        assert_eq!(prod, p3("x1*x2 + x1 + x2 + 1"));
        assert_eq!(prod.mul(&p3("1")).unwrap(), prod);
        assert_eq!(p3("x1 + 1").mul(&p3("x1 + 1")).unwrap(), p3("x1^2 + 1"));
    }

    #[test]
    fn leading_terms() {
        use MonomialOrder::*;
        assert_eq!(p3("x1*x2 + x1 + x2 + 1").leading(Grlex).unwrap(), mono(&[1, 1, 0]));
        assert_eq!(p3("1").leading(Grlex).unwrap(), mono(&[0, 0, 0]));
        assert_eq!(p3("x1 + x2 + x3").leading(Grlex).unwrap(), mono(&[1, 0, 0]));
        assert_eq!(p3("x2^2 + x1").leading(Lex).unwrap(), mono(&[1, 0, 0]));
        assert_eq!(p3("x2^2 + x1").multideg(Grlex).unwrap(), vec![0, 2, 0]);
        assert_eq!(p3("0").leading(Grlex), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn parse_and_format() {
        let f = p3("x1*x2 + x1 + x2 + 1");
        let expected: BTreeSet<_> =
            [mono(&[1, 1, 0]), mono(&[1, 0, 0]), mono(&[0, 1, 0]), mono(&[0, 0, 0])].into();
        assert_eq!(f.monomials().copied().collect::<BTreeSet<_>>(), expected);
        assert!(p3("0").is_zero());
        assert_eq!(p3(" x1 *x1 + X3^2+1+1 ").format(MonomialOrder::Grlex), "x1^2 + x3^2");
        assert_eq!(p3("1 + x3 + x2").format(MonomialOrder::Grlex), "x2 + x3 + 1");
        for g in ["x1*x2 + x1 + x2 + 1", "x1*x3 + x1 + x3 + 1", "x2*x3 + x2 + x3 + 1"] {
            assert_eq!(p3(g).format(MonomialOrder::Grlex), g);
        }
        assert_eq!(p3("y1*y3").format_with(MonomialOrder::Grlex, 'y'), "y1*y3");
        for bad in ["", "x0", "x4", "x1 +", "z1", "x1^", "x1^9", "2"] {
            assert!(Poly::parse(3, bad).is_err(), "{bad:?} should not parse");
        }
    }

    fn arb_mono(m: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0..=max_exp, m).prop_map(|e| Monomial::new(&e).unwrap())
    }

    fn arb_poly(m: usize, max_exp: u32) -> impl Strategy<Value = Poly> {
        prop::collection::vec(arb_mono(m, max_exp), 0..8)
            .prop_map(move |ms| Poly::from_monomials(m, ms).unwrap())
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![Just(MonomialOrder::Lex), Just(MonomialOrder::Grlex)]
    }

    proptest! {
        #[test]
        fn order_is_total(a in arb_mono(4, 2), b in arb_mono(4, 2), c in arb_mono(4, 2), ord in arb_order()) {
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
            prop_assert_eq!(ord.cmp(&a, &b) == Ordering::Equal, a == b);
            if ord.cmp(&a, &b) == Ordering::Greater && ord.cmp(&b, &c) == Ordering::Greater {
                prop_assert_eq!(ord.cmp(&a, &c), Ordering::Greater);
            }
        }

        #[test]
        fn order_respects_multiplication(a in arb_mono(4, 2), b in arb_mono(4, 2), c in arb_mono(4, 2), ord in arb_order()) {
            let (ac, bc) = (a.mul(&c).unwrap(), b.mul(&c).unwrap());
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&ac, &bc));
        }

        #[test]
        fn addition_laws(f in arb_poly(3, 2), g in arb_poly(3, 2), h in arb_poly(3, 2)) {
            prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
            prop_assert_eq!(f.add(&g).unwrap().add(&h).unwrap(), f.add(&g.add(&h).unwrap()).unwrap());
            prop_assert!(f.add(&f).unwrap().is_zero());
            let lhs = f.mul(&g.add(&h).unwrap()).unwrap();
            let rhs = f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn leading_is_multiplicative(f in arb_poly(3, 2), g in arb_poly(3, 2), ord in arb_order()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let lead = f.mul(&g).unwrap().leading(ord).unwrap();
            prop_assert_eq!(lead, f.leading(ord).unwrap().mul(&g.leading(ord).unwrap()).unwrap());
        }

        #[test]
        fn format_parse_round_trip(f in arb_poly(4, 3), ord in arb_order()) {
            prop_assert_eq!(Poly::parse(4, &f.format(ord)).unwrap(), f);
        }
    }
}
