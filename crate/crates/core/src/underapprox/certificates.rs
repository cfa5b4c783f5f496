use num_bigint::BigInt;
use num_traits::One;

use super::reciprocal_sum;
use crate::error::{Error, Result};
use crate::greedy::expand;
use crate::rational::Rational;

/// Checks the necessary interval conditions on a competing pair:
/// `a_1 + 1 <= x_1 <= 2 a_1 - 1 <= x_2 < a_1 x_1 / (x_1 - a_1)` and
/// `x_2 <= a_2 - 1`, where `(a_1, a_2)` are the greedy terms of `theta`.
///
/// The premises are that `2 <= x_1 <= x_2`, the pair differs from the greedy
/// pair, and its sum lies in `[1/a_1 + 1/a_2, theta)`; violating them is a
/// domain error.
pub fn na23_bounds_check(theta: &Rational, x1: &BigInt, x2: &BigInt) -> Result<bool> {
    let exp = expand(theta, 2)?;
    let (a1, a2) = (&exp.terms[0], &exp.terms[1]);
    if x1 == a1 && x2 == a2 {
        return Err(Error::domain("the greedy pair itself is excluded"));
    }
    if *x1 < BigInt::from(2) || x1 > x2 {
        return Err(Error::domain("need 2 <= x1 <= x2"));
    }
    let sum = reciprocal_sum(&[x1.clone(), x2.clone()])?;
    if sum < exp.partial_sum() || sum >= *theta {
        return Err(Error::domain(
            "pair sum is not between the greedy sum and theta",
        ));
    }
    if *x1 <= *a1 {
        return Ok(false);
    }
    let two_a1_minus_1 = BigInt::from(2) * a1 - 1;
    // x2 < a1 x1 / (x1 - a1)  <=>  x2 (x1 - a1) < a1 x1
    let holds = *x1 <= two_a1_minus_1
        && two_a1_minus_1 <= *x2
        && x2 * (x1 - a1) < a1 * x1
        && *x2 <= a2 - BigInt::one();
    Ok(holds)
}

fn require_positive_nondecreasing(xs: &[BigInt], name: &str) -> Result<()> {
    if xs.iter().any(|x| *x < BigInt::one()) {
        return Err(Error::domain(format!("{name} has a nonpositive entry")));
    }
    if xs.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::domain(format!("{name} is not nondecreasing")));
    }
    Ok(())
}

/// Prefix-product domination: `a_1 ... a_k <= x_1 ... x_k` for every `k`.
///
/// When it holds, `sum 1/x_i < sum 1/a_i` must follow; if it does not the
/// call fails with [`Error::Invariant`].
pub fn muirhead_certificate(x: &[BigInt], a: &[BigInt]) -> Result<bool> {
    if x.len() != a.len() {
        return Err(Error::domain("tuples have different lengths"));
    }
    if x == a {
        return Err(Error::domain("tuples must differ"));
    }
    require_positive_nondecreasing(x, "x")?;
    require_positive_nondecreasing(a, "a")?;

    let mut px = BigInt::one();
    let mut pa = BigInt::one();
    for (xi, ai) in x.iter().zip(a) {
        px *= xi;
        pa *= ai;
        if pa > px {
            return Ok(false);
        }
    }
    let sx: Rational = reciprocal_sum(x)?;
    let sa: Rational = reciprocal_sum(a)?;
    if sx >= sa {
        return Err(Error::invariant(format!(
            "prefix products dominate but {sx} >= {sa}"
        )));
    }
    Ok(true)
}
