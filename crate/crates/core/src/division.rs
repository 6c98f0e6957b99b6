//! Multivariate division of a polynomial by an ordered list of divisors.

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Poly};

/// `f = sum(quotients[i] * divisors[i]) + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotients: Vec<Poly>,
    pub remainder: Poly,
}

/// Divides `f` by `divisors` in the given order.
///
/// At each step the leading term of the running polynomial is cancelled by
/// the first divisor whose leading term divides it; when none does, that
/// term moves to the remainder. The scan restarts from the first divisor
/// after every reduction.
pub fn divide(f: &Poly, divisors: &[Poly], ord: MonomialOrder) -> Result<DivisionResult> {
    let m = f.vars();
    let mut leads: Vec<Monomial> = Vec::with_capacity(divisors.len());
    for d in divisors {
        if d.vars() != m {
            return Err(Error::DimensionMismatch { left: m, right: d.vars() });
        }
        leads.push(d.leading(ord).map_err(|_| Error::InvalidArgument("zero divisor".into()))?);
    }

    let mut quotients = vec![Poly::zero(m)?; divisors.len()];
    let mut remainder = Poly::zero(m)?;
    let mut p = f.clone();
    while !p.is_zero() {
        let lead = p.leading(ord)?;
        let hit = leads.iter().enumerate().find_map(|(i, l)| lead.div(l).map(|q| (i, q)));
        match hit {
            Some((i, q)) => {
                quotients[i].toggle(q);
                p.add_in_place(&divisors[i].mul_monomial(&q)?);
            }
            None => {
                remainder.toggle(lead);
                p.toggle(lead);
            }
        }
    }
    Ok(DivisionResult { quotients, remainder })
}

/// The remainder of `f` on division by `divisors`.
pub fn remainder(f: &Poly, divisors: &[Poly], ord: MonomialOrder) -> Result<Poly> {
    Ok(divide(f, divisors, ord)?.remainder)
}
