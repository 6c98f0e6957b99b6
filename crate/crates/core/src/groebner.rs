//! S-polynomials, the Buchberger criterion, reduced bases, and a plain
//! Buchberger completion.
//!
//! Everything here is written for verification rather than speed: the
//! criterion checks every unordered pair and completion uses no pair
//! elimination.

use std::collections::VecDeque;

use crate::division::remainder;
use crate::error::{Error, Result};
use crate::polyring::{MonomialOrder, Poly};

/// Default bound on basis insertions during [`buchberger_complete`].
pub const COMPLETION_LIMIT: usize = 10_000;

/// A pair whose S-polynomial does not reduce to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailingPair {
    pub i: usize,
    pub j: usize,
    pub remainder: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisReport {
    pub is_groebner: bool,
    /// First pair `(i, j)`, `i < j`, with a nonzero S-remainder. Present iff
    /// `is_groebner` is false.
    pub failing_pair: Option<FailingPair>,
    pub is_reduced: bool,
}

/// `S(f, g) = lcm/lt(f) * f - lcm/lt(g) * g` with `lcm = lcm(lm(f), lm(g))`.
pub fn s_polynomial(f: &Poly, g: &Poly, ord: MonomialOrder) -> Result<Poly> {
    let (lf, lg) = match (f.leading(ord), g.leading(ord)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return Err(Error::InvalidArgument("S-polynomial of a zero polynomial".into())),
    };
    let lcm = lf.lcm(&lg)?;
    let left = f.mul_monomial(&lcm.div(&lf).expect("lcm is a multiple"))?;
    let right = g.mul_monomial(&lcm.div(&lg).expect("lcm is a multiple"))?;
    left.add(&right)
}

/// Checks the Buchberger criterion on every unordered pair and the reduced
/// conditions.
pub fn is_groebner(basis: &[Poly], ord: MonomialOrder) -> Result<BasisReport> {
    check_nonzero(basis)?;
    let mut failing_pair = None;
    'pairs: for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], ord)?;
            let r = remainder(&s, basis, ord)?;
            if !r.is_zero() {
                failing_pair = Some(FailingPair { i, j, remainder: r });
                break 'pairs;
            }
        }
    }
    Ok(BasisReport {
        is_groebner: failing_pair.is_none(),
        failing_pair,
        is_reduced: is_reduced(basis, ord)?,
    })
}

/// No monomial of any element is divisible by the leading term of another
/// element. Monicity is automatic over F2.
pub fn is_reduced(basis: &[Poly], ord: MonomialOrder) -> Result<bool> {
    check_nonzero(basis)?;
    let leads = basis.iter().map(|p| p.leading(ord)).collect::<Result<Vec<_>>>()?;
    for (k, p) in basis.iter().enumerate() {
        for mono in p.monomials() {
            if leads.iter().enumerate().any(|(j, l)| j != k && l.divides(mono)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Extends `generators` to a Groebner basis by adjoining nonzero
/// S-remainders, processing pairs first-in first-out.
pub fn buchberger_complete(generators: &[Poly], ord: MonomialOrder) -> Result<Vec<Poly>> {
    buchberger_complete_with_limit(generators, ord, COMPLETION_LIMIT)
}

pub fn buchberger_complete_with_limit(
    generators: &[Poly],
    ord: MonomialOrder,
    limit: usize,
) -> Result<Vec<Poly>> {
    let mut basis: Vec<Poly> = Vec::new();
    for g in generators {
        if !g.is_zero() && !basis.contains(g) {
            basis.push(g.clone());
        }
    }
    let mut pairs: VecDeque<(usize, usize)> =
        (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut inserted = 0;
    while let Some((i, j)) = pairs.pop_front() {
        let s = s_polynomial(&basis[i], &basis[j], ord)?;
        let r = remainder(&s, &basis, ord)?;
        if r.is_zero() {
            continue;
        }
        inserted += 1;
        if inserted > limit {
            return Err(Error::CompletionLimit(limit));
        }
        let new = basis.len();
        basis.push(r);
        pairs.extend((0..new).map(|i| (i, new)));
    }
    Ok(basis)
}

/// Turns a Groebner basis into the reduced Groebner basis of the same
/// ideal, sorted by descending leading monomial.
pub fn reduce_basis(basis: &[Poly], ord: MonomialOrder) -> Result<Vec<Poly>> {
    check_nonzero(basis)?;
    // Minimal basis: drop elements whose leading term is a multiple of
    // another's; among equal leading terms keep the first.
    let leads = basis.iter().map(|p| p.leading(ord)).collect::<Result<Vec<_>>>()?;
    let mut minimal: Vec<Poly> = Vec::new();
    for (k, p) in basis.iter().enumerate() {
        let redundant = leads.iter().enumerate().any(|(j, l)| {
            j != k && l.divides(&leads[k]) && (*l != leads[k] || j < k)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }

    // Replace each element by its leading term plus the remainder of its
    // tail against the rest; leading terms do not change.
    for k in 0..minimal.len() {
        let lead = minimal[k].leading(ord)?;
        let mut tail = minimal[k].clone();
        tail.toggle(lead);
        let others: Vec<Poly> =
            minimal.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, p)| p.clone()).collect();
        let mut reduced = if others.is_empty() { tail } else { remainder(&tail, &others, ord)? };
        reduced.toggle(lead);
        minimal[k] = reduced;
    }
    sort_descending(&mut minimal, ord);
    Ok(minimal)
}

/// `f` lies in the ideal generated by the Groebner basis `basis`.
pub fn ideal_member(f: &Poly, basis: &[Poly], ord: MonomialOrder) -> Result<bool> {
    Ok(remainder(f, basis, ord)?.is_zero())
}

/// Sorts by descending leading monomial. Zero polynomials go last.
pub fn sort_descending(basis: &mut [Poly], ord: MonomialOrder) {
    basis.sort_by(|a, b| match (a.leading(ord), b.leading(ord)) {
        (Ok(x), Ok(y)) => ord.cmp(&y, &x),
        (Ok(_), Err(_)) => std::cmp::Ordering::Less,
        (Err(_), Ok(_)) => std::cmp::Ordering::Greater,
        (Err(_), Err(_)) => std::cmp::Ordering::Equal,
    });
}

fn check_nonzero(basis: &[Poly]) -> Result<()> {
    if basis.iter().any(Poly::is_zero) {
        Err(Error::InvalidArgument("basis contains the zero polynomial".into()))
    } else {
        Ok(())
    }
}
