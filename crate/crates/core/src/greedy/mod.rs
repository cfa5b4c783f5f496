//! The greedy algorithm and the per-step quantities built on top of it.
//!
//! For `theta` in `(0, 1]` the greedy algorithm repeatedly takes the largest
//! unit fraction strictly below what is left, so the expansion never
//! terminates and every error term stays strictly positive.

mod closed_form;
mod growth;
mod indices;
mod step;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{decimal, Rational};

pub use closed_form::{
    closed_form_p_divides_q_plus_1, closed_form_upsilon2_odd_q, closed_form_upsilon_divides_q,
};
pub use growth::{cubic_growth_check, growth_condition_check, CubicGrowth};
pub use indices::{
    delta_index, delta_witness, ell_index, ell_index_reduced, eventual_quadratic_recurrence,
    profile, reduce, upsilon, DeltaWitness, Family, UpsilonProfile,
};
pub use step::{phi, step_report, superior_denominator, StepReport};

pub(crate) fn require_unit_interval(theta: &Rational) -> Result<()> {
    if !theta.is_positive() || *theta > Rational::one() {
        return Err(Error::domain(format!("{theta} is not in (0, 1]")));
    }
    Ok(())
}

/// `G(theta) = floor(1/theta) + 1`, the denominator of the largest unit
/// fraction strictly smaller than `theta`.
pub fn g_func(theta: &Rational) -> Result<BigInt> {
    require_unit_interval(theta)?;
    Ok(g_unchecked(theta))
}

/// `G` on any positive rational; callers guarantee positivity.
pub(crate) fn g_unchecked(x: &Rational) -> BigInt {
    x.floor_of_reciprocal().expect("positive argument") + 1
}

/// `n^2 - n + 1`, the minimal successor of a greedy term.
pub fn sylvester_successor(n: &BigInt) -> BigInt {
    n * n - n + 1
}

/// Iterator over the greedy denominators of a rational in `(0, 1]`.
///
/// The error term is carried exactly; each step costs one reciprocal.
#[derive(Debug, Clone)]
pub struct Greedy {
    error: Rational,
}

impl Greedy {
    pub fn new(theta: &Rational) -> Result<Self> {
        require_unit_interval(theta)?;
        Ok(Greedy {
            error: theta.clone(),
        })
    }

    /// The error term left after the denominators yielded so far.
    pub fn error(&self) -> &Rational {
        &self.error
    }
}

impl Iterator for Greedy {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let a = g_unchecked(&self.error);
        self.error = &self.error - &Rational::unit(&a).expect("a >= 2");
        Some(a)
    }
}

/// The first `m` greedy denominators of `theta` and the exact error left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub theta: Rational,
    pub terms: Vec<BigInt>,
    pub error: Rational,
}

impl Expansion {
    /// Sum of the unit fractions `1/a_1 + ... + 1/a_m`.
    pub fn partial_sum(&self) -> Rational {
        &self.theta - &self.error
    }

    /// Smallest 1-based `n` such that `a_{k+1} = a_k^2 - a_k + 1` for every
    /// computed `k >= n`, or `None` if the last computed pair breaks it.
    pub fn recurrence_start(&self) -> Option<usize> {
        recurrence_start(&self.terms)
    }
}

/// See [`Expansion::recurrence_start`].
pub fn recurrence_start(terms: &[BigInt]) -> Option<usize> {
    let mut start = None;
    for k in (0..terms.len().saturating_sub(1)).rev() {
        if terms[k + 1] != sylvester_successor(&terms[k]) {
            break;
        }
        start = Some(k + 1);
    }
    start
}

#[derive(Serialize, Deserialize)]
struct ExpansionRepr {
    theta: Rational,
    #[serde(with = "decimal::vec")]
    terms: Vec<BigInt>,
    error: Rational,
    recurrence_start: Option<usize>,
}

impl Serialize for Expansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExpansionRepr {
            theta: self.theta.clone(),
            terms: self.terms.clone(),
            error: self.error.clone(),
            recurrence_start: self.recurrence_start(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Expansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ExpansionRepr::deserialize(d)?;
        let exp = Expansion {
            theta: repr.theta,
            terms: repr.terms,
            error: repr.error,
        };
        if exp.recurrence_start() != repr.recurrence_start {
            return Err(D::Error::custom("recurrence_start does not match terms"));
        }
        Ok(exp)
    }
}

/// First `m` terms of the greedy expansion of `theta`.
pub fn expand(theta: &Rational, m: usize) -> Result<Expansion> {
    expand_guarded(theta, m, None)
}

/// Like [`expand`], but fails with [`Error::DigitGuard`] as soon as a
/// denominator would have more than `digit_guard` decimal digits.
pub fn expand_guarded(theta: &Rational, m: usize, digit_guard: Option<usize>) -> Result<Expansion> {
    if m == 0 {
        return Err(Error::domain("expansion length must be at least 1"));
    }
    let limit = digit_guard.map(|d| num_traits::pow(BigInt::from(10), d));
    let mut greedy = Greedy::new(theta)?;
    let mut terms = Vec::with_capacity(m);
    for index in 1..=m {
        if let (Some(limit), Some(guard)) = (&limit, digit_guard) {
            // The next term is floor(1/e) + 1; test it before paying for the subtraction.
            if g_unchecked(greedy.error()) >= *limit {
                return Err(Error::DigitGuard {
                    limit: guard,
                    index,
                });
            }
        }
        terms.push(greedy.next().expect("greedy never terminates"));
    }
    Ok(Expansion {
        theta: theta.clone(),
        terms,
        error: greedy.error,
    })
}

/// Checks the structural properties every greedy expansion must have.
pub fn check_expansion_invariants(exp: &Expansion) -> Result<()> {
    let two = BigInt::from(2);
    let first = exp
        .terms
        .first()
        .ok_or_else(|| Error::invariant("empty expansion"))?;
    if *first < two {
        return Err(Error::invariant("a_1 < 2"));
    }
    for w in exp.terms.windows(2) {
        if w[1] < sylvester_successor(&w[0]) {
            return Err(Error::invariant(format!(
                "{} < {}^2 - {} + 1",
                w[1], w[0], w[0]
            )));
        }
    }
    let sum: Rational = exp
        .terms
        .iter()
        .map(|a| Rational::unit(a).expect("nonzero"))
        .sum();
    if &exp.theta - &sum != exp.error || !exp.error.is_positive() {
        return Err(Error::invariant("error term mismatch"));
    }
    let last = exp.terms.last().expect("nonempty");
    let bound = Rational::unit(&(last - BigInt::one()))?;
    if exp.error > bound {
        return Err(Error::invariant("error exceeds 1/(a_m - 1)"));
    }
    Ok(())
}
