use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{expand, sylvester_successor, Greedy};
use crate::error::{Error, Result};
use crate::rational::{decimal, Rational};

/// Which closed form, if any, describes the greedy expansion of `p/q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `p | q + 1`.
    PDividesQPlus1,
    /// `Upsilon(p, q) | q`, excluding the case above.
    UpsilonDividesQ,
    /// `q` odd and `Upsilon(p, q) = 2`.
    Upsilon2OddQ,
    General,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpsilonProfile {
    pub p: u64,
    pub q: u64,
    pub upsilon: u64,
    pub ell: u64,
    pub delta: u64,
    pub family: Family,
}

/// Smallest `m >= 1` with `p | q + m`.
pub fn upsilon(p: u64, q: u64) -> Result<u64> {
    if p == 0 || q == 0 {
        return Err(Error::domain("upsilon needs p, q >= 1"));
    }
    Ok(p - q % p)
}

/// `(p, q)` divided by their gcd.
pub fn reduce(p: u64, q: u64) -> (u64, u64) {
    let g = p.gcd(&q).max(1);
    (p / g, q / g)
}

fn require_reduced_fraction(p: u64, q: u64) -> Result<()> {
    if p == 0 || p > q {
        return Err(Error::domain(format!("{p}/{q} is not in (0, 1]")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::domain(format!("{p}/{q} is not in lowest terms")));
    }
    Ok(())
}

/// Smallest `l >= 0` with `p | q + l`, for reduced `p/q` in `(0, 1]`.
pub fn ell_index(p: u64, q: u64) -> Result<u64> {
    require_reduced_fraction(p, q)?;
    Ok((p - q % p) % p)
}

/// Reduces `p/q` first and reports the pair that was used.
pub fn ell_index_reduced(p: u64, q: u64) -> Result<(u64, (u64, u64))> {
    let (p, q) = reduce(p, q);
    Ok((ell_index(p, q)?, (p, q)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaWitness {
    pub delta: u64,
    /// The integer `1/e_delta`.
    #[serde(with = "decimal")]
    pub reciprocal: BigInt,
}

/// Smallest `m >= 0` for which `1/e_m` is an integer, with that integer.
pub fn delta_witness(p: u64, q: u64) -> Result<DeltaWitness> {
    let ell = ell_index(p, q)?;
    let theta = Rational::new(p, q)?;
    let mut greedy = Greedy::new(&theta)?;
    // The error numerator strictly decreases each step, so this terminates
    // within `ell` steps.
    for delta in 0..=ell {
        let e = greedy.error();
        if e.numer() == &BigInt::from(1) {
            return Ok(DeltaWitness {
                delta,
                reciprocal: e.denom().clone(),
            });
        }
        greedy.next();
    }
    Err(Error::invariant(format!(
        "no integral reciprocal within ell = {ell} steps for {p}/{q}"
    )))
}

pub fn delta_index(p: u64, q: u64) -> Result<u64> {
    Ok(delta_witness(p, q)?.delta)
}

/// Υ, ℓ, Δ and the applicable closed-form family for reduced `p/q`.
pub fn profile(p: u64, q: u64) -> Result<UpsilonProfile> {
    let ell = ell_index(p, q)?;
    let upsilon = upsilon(p, q)?;
    let delta = delta_index(p, q)?;
    let family = if upsilon == 1 {
        Family::PDividesQPlus1
    } else if q.is_multiple_of(upsilon) {
        Family::UpsilonDividesQ
    } else if upsilon == 2 && q % 2 == 1 {
        Family::Upsilon2OddQ
    } else {
        Family::General
    };
    Ok(UpsilonProfile {
        p,
        q,
        upsilon,
        ell,
        delta,
        family,
    })
}

/// Whether `a_{n+1} = a_n^2 - a_n + 1` holds for all `l + 1 <= n < horizon`.
///
/// The fraction is reduced before `l` is computed.
pub fn eventual_quadratic_recurrence(p: u64, q: u64, horizon: usize) -> Result<bool> {
    let (ell, (p, q)) = ell_index_reduced(p, q)?;
    if horizon == 0 {
        return Ok(true);
    }
    let exp = expand(&Rational::new(p, q)?, horizon)?;
    let first = usize::try_from(ell).unwrap_or(usize::MAX);
    // 1-based n from ell+1 means 0-based index ell.
    Ok(exp
        .terms
        .windows(2)
        .skip(first)
        .all(|w| w[1] == sylvester_successor(&w[0])))
}
