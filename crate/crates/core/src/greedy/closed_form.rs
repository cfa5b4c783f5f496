//! Explicit formulas for the greedy denominators of three families of
//! rationals. Each one is checked against [`super::expand`] in the tests.

use num_bigint::BigInt;
use num_integer::Integer;

use super::indices::upsilon;
use crate::error::{Error, Result};

fn require_fraction(p: u64, q: u64, m: usize) -> Result<()> {
    if p == 0 || p > q {
        return Err(Error::domain(format!("{p}/{q} is not in (0, 1]")));
    }
    if m == 0 {
        return Err(Error::domain("number of terms must be at least 1"));
    }
    Ok(())
}

/// Extends `terms` to length `m` with `a_n = scale * prod_{i<n} a_i + 1`.
fn extend_product_recurrence(mut terms: Vec<BigInt>, scale: BigInt, m: usize) -> Vec<BigInt> {
    let mut prod: BigInt = terms.iter().product();
    while terms.len() < m {
        let next = &scale * &prod + 1;
        prod *= &next;
        terms.push(next);
    }
    terms.truncate(m);
    terms
}

/// `a_1 = (q + Υ)/p`, `a_n = (q/Υ) a_1 ... a_{n-1} + 1`, valid when `Υ(p,q) | q`.
pub fn closed_form_upsilon_divides_q(p: u64, q: u64, m: usize) -> Result<Vec<BigInt>> {
    require_fraction(p, q, m)?;
    let ups = upsilon(p, q)?;
    if !q.is_multiple_of(ups) {
        return Err(Error::domain(format!(
            "Upsilon({p},{q}) = {ups} does not divide {q}"
        )));
    }
    let a1 = BigInt::from((q + ups) / p);
    Ok(extend_product_recurrence(
        vec![a1],
        BigInt::from(q / ups),
        m,
    ))
}

/// `a_1 = (q+2)/p`, `a_2 = floor(q a_1 / 2) + 1`, `a_n = q a_1 ... a_{n-1} + 1`
/// for `n >= 3`; valid when `q` is odd and `Υ(p,q) = 2`.
pub fn closed_form_upsilon2_odd_q(p: u64, q: u64, m: usize) -> Result<Vec<BigInt>> {
    require_fraction(p, q, m)?;
    if q.is_multiple_of(2) || upsilon(p, q)? != 2 {
        return Err(Error::domain(format!(
            "{p}/{q} needs odd q and Upsilon = 2"
        )));
    }
    let a1 = BigInt::from((q + 2) / p);
    let a2 = (BigInt::from(q) * &a1).div_floor(&BigInt::from(2)) + 1;
    Ok(extend_product_recurrence(vec![a1, a2], BigInt::from(q), m))
}

/// `a_1 = (q+1)/p`, `a_{n+1} = q a_1 ... a_n + 1`; valid when `p | q + 1`.
pub fn closed_form_p_divides_q_plus_1(p: u64, q: u64, m: usize) -> Result<Vec<BigInt>> {
    require_fraction(p, q, m)?;
    if !(q + 1).is_multiple_of(p) {
        return Err(Error::domain(format!("{p} does not divide {q} + 1")));
    }
    let a1 = BigInt::from((q + 1) / p);
    Ok(extend_product_recurrence(vec![a1], BigInt::from(q), m))
}
