use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{expand, g_func, g_unchecked, require_unit_interval};
use crate::error::{Error, Result};
use crate::rational::{decimal, Rational};

/// `Phi(theta) = 1 / (G(theta) - 1/theta)`. Equals 1 at every `1/n`.
pub fn phi(theta: &Rational) -> Result<Rational> {
    let g = Rational::from_integer(g_func(theta)?);
    let gap = g - theta.recip()?;
    gap.recip()
}

/// `b = floor(N/e) + 1`: `N/b` is the largest fraction with numerator `N`
/// strictly below `e`.
pub fn superior_denominator(e: &Rational, n: u64) -> Result<BigInt> {
    if !e.is_positive() {
        return Err(Error::domain("superior denominator needs e > 0"));
    }
    if n == 0 {
        return Err(Error::domain("numerator N must be at least 1"));
    }
    let scaled = e.checked_div(&Rational::from_integer(n))?;
    Ok(g_unchecked(&scaled))
}

/// All four characterisations of `1/a_m = N/b_m` evaluated at one step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub m: usize,
    #[serde(with = "decimal")]
    pub a_m: BigInt,
    #[serde(with = "decimal")]
    pub a_next: BigInt,
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(with = "decimal")]
    pub b_m: BigInt,
    /// `a_{m+1} >= N a_m^2 - a_m + 1`
    pub cond_i: bool,
    /// `b_m = N a_m`
    pub cond_ii: bool,
    /// `Phi(e_{m-1}) >= N`
    pub cond_iii: bool,
    /// `e_{m-1} <= N / (N a_m - 1)`
    pub cond_iv: bool,
    pub phi_value: Rational,
}

impl StepReport {
    /// The common verdict: whether the greedy term is as good as `N/b_m`.
    pub fn greedy_matches(&self) -> bool {
        self.cond_i
    }
}

/// Evaluates conditions (i)-(iv) at step `m` of the greedy expansion of
/// `theta` with numerator `n`. They are equivalent, so any disagreement is
/// reported as [`Error::Invariant`].
pub fn step_report(theta: &Rational, m: usize, n: u64) -> Result<StepReport> {
    require_unit_interval(theta)?;
    if m == 0 || n == 0 {
        return Err(Error::domain(
            "step index m and numerator N must be at least 1",
        ));
    }
    let exp = expand(theta, m + 1)?;
    let a_m = exp.terms[m - 1].clone();
    let a_next = exp.terms[m].clone();
    // e_{m-1} = e_{m+1} + 1/a_m + 1/a_{m+1}
    let e_prev = &exp.error + &Rational::unit(&a_m)? + Rational::unit(&a_next)?;

    let big_n = BigInt::from(n);
    let n_a = &big_n * &a_m;
    let b_m = superior_denominator(&e_prev, n)?;
    let phi_value = phi(&e_prev)?;

    let cond_i = a_next >= &n_a * &a_m - &a_m + 1;
    let cond_ii = b_m == n_a;
    let cond_iii = phi_value >= Rational::from_integer(big_n.clone());
    let cond_iv = e_prev <= Rational::new(big_n, &n_a - 1)?;

    if !(cond_i == cond_ii && cond_ii == cond_iii && cond_iii == cond_iv) {
        return Err(Error::invariant(format!(
            "step conditions disagree at theta={theta}, m={m}, N={n}: \
             ({cond_i}, {cond_ii}, {cond_iii}, {cond_iv})"
        )));
    }
    Ok(StepReport {
        m,
        a_m,
        a_next,
        n,
        b_m,
        cond_i,
        cond_ii,
        cond_iii,
        cond_iv,
        phi_value,
    })
}
