//! Exact search for best underapproximations by sums of unit fractions.
//!
//! An `m`-tuple `x_1 <= ... <= x_m` is feasible for `theta` when
//! `1/x_1 + ... + 1/x_m < theta`; the searches here return every feasible
//! tuple of maximal sum, never a single arbitrary representative.

mod certificates;
mod sweep;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::greedy::{expand, g_unchecked, require_unit_interval};
use crate::rational::{decimal, Rational};

pub use certificates::{muirhead_certificate, na23_bounds_check};
pub use sweep::{verify_threshold_sweep, SweepRow, ThresholdSweep};

/// Default node budget for [`best_m_term`].
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnderapproxResult {
    pub theta: Rational,
    pub m: usize,
    #[serde(with = "decimal::vec")]
    pub greedy_terms: Vec<BigInt>,
    pub greedy_sum: Rational,
    #[serde(with = "decimal::tuples")]
    pub optimal_tuples: BTreeSet<Vec<BigInt>>,
    pub optimal_sum: Rational,
    pub greedy_is_best: bool,
    pub unique: bool,
    /// Search-tree nodes visited.
    pub nodes: u64,
}

impl UnderapproxResult {
    fn from_search(
        theta: &Rational,
        m: usize,
        greedy_terms: Vec<BigInt>,
        greedy_sum: Rational,
        optimal_tuples: BTreeSet<Vec<BigInt>>,
        optimal_sum: Rational,
        nodes: u64,
    ) -> Result<Self> {
        if optimal_sum < greedy_sum || optimal_sum >= *theta {
            return Err(Error::invariant("optimal sum outside [greedy sum, theta)"));
        }
        let greedy_is_best = optimal_sum == greedy_sum;
        if greedy_is_best && !optimal_tuples.contains(&greedy_terms) {
            return Err(Error::invariant(
                "greedy tuple attains the optimum but was not found",
            ));
        }
        let unique = optimal_tuples.len() == 1;
        Ok(UnderapproxResult {
            theta: theta.clone(),
            m,
            greedy_terms,
            greedy_sum,
            optimal_tuples,
            optimal_sum,
            greedy_is_best,
            unique,
            nodes,
        })
    }

    /// Optimal tuples other than the greedy one.
    pub fn competitors(&self) -> impl Iterator<Item = &Vec<BigInt>> {
        self.optimal_tuples
            .iter()
            .filter(move |t| **t != self.greedy_terms)
    }
}

/// Admissible range of `x_i` at one level of the search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub level: usize,
    #[serde(with = "decimal")]
    pub lower: BigInt,
    #[serde(with = "decimal")]
    pub upper: BigInt,
}

impl SearchBounds {
    pub fn is_empty(&self) -> bool {
        self.lower > self.upper
    }
}

/// Range of `x_level` given the partial sum of the earlier terms, the previous
/// term, and the incumbent best sum.
///
/// The lower end keeps `1/x < theta - partial` and the tuple nondecreasing.
/// The upper end is the largest `x` for which `remaining` copies of `1/x`
/// still reach `incumbent`. Returns `None` when the incumbent does not exceed
/// the partial sum, where no finite upper end exists.
pub fn level_bounds(
    theta: &Rational,
    level: usize,
    partial: &Rational,
    prev: Option<&BigInt>,
    remaining: usize,
    incumbent: &Rational,
) -> Option<SearchBounds> {
    let slack = incumbent - partial;
    if !slack.is_positive() {
        return None;
    }
    let gap = theta - partial;
    let mut lower = g_unchecked(&gap);
    if let Some(prev) = prev {
        if *prev > lower {
            lower = prev.clone();
        }
    }
    let upper = Rational::from_integer(remaining as u64)
        .checked_div(&slack)
        .expect("positive slack")
        .floor();
    Some(SearchBounds {
        level,
        lower,
        upper,
    })
}

fn unit(x: &BigInt) -> Rational {
    Rational::unit(x).expect("denominators are positive")
}

/// Every best two-term underapproximation of `theta`.
///
/// Any optimal pair has `1/x_1 >= S/2` with `S` the greedy two-term sum, so
/// `x_1` runs over `G(theta) ..= floor(2/S)`; for fixed `x_1` the best
/// partner is `max(x_1, G(theta - 1/x_1))`.
pub fn best_two_term(theta: &Rational) -> Result<UnderapproxResult> {
    require_unit_interval(theta)?;
    let greedy = expand(theta, 2)?;
    let greedy_sum = greedy.partial_sum();
    let lo = greedy.terms[0].clone();
    let hi = Rational::from_integer(2).checked_div(&greedy_sum)?.floor();

    let mut best = greedy_sum.clone();
    let mut tuples = BTreeSet::new();
    let mut nodes = 0u64;
    let mut x1 = lo;
    while x1 <= hi {
        nodes += 1;
        let first = unit(&x1);
        let rest = theta - &first;
        let mut x2 = g_unchecked(&rest);
        if x2 < x1 {
            x2 = x1.clone();
        }
        let sum = &first + &unit(&x2);
        if sum > best {
            best = sum;
            tuples.clear();
            tuples.insert(vec![x1.clone(), x2]);
        } else if sum == best {
            tuples.insert(vec![x1.clone(), x2]);
        }
        x1 += 1;
    }
    UnderapproxResult::from_search(theta, 2, greedy.terms, greedy_sum, tuples, best, nodes)
}

struct Search<'a> {
    theta: &'a Rational,
    m: usize,
    budget: u64,
    nodes: u64,
    best: Rational,
    tuples: BTreeSet<Vec<BigInt>>,
    prefix: Vec<BigInt>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Inconclusive {
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn offer(&mut self, sum: Rational, tuple: Vec<BigInt>) {
        if sum > self.best {
            self.best = sum;
            self.tuples.clear();
            self.tuples.insert(tuple);
        } else if sum == self.best {
            self.tuples.insert(tuple);
        }
    }

    /// Largest admissible term for each remaining slot, taken greedily.
    fn complete_greedily(&mut self, partial: &Rational) {
        let mut tuple = self.prefix.clone();
        let mut sum = partial.clone();
        while tuple.len() < self.m {
            let mut x = g_unchecked(&(self.theta - &sum));
            if let Some(prev) = tuple.last() {
                if *prev > x {
                    x = prev.clone();
                }
            }
            sum = sum + unit(&x);
            tuple.push(x);
        }
        self.offer(sum, tuple);
    }

    fn descend(&mut self, partial: &Rational) -> Result<()> {
        let level = self.prefix.len() + 1;
        let remaining = self.m - self.prefix.len();
        if remaining == 1 {
            // Last slot: only the largest feasible unit fraction can be optimal.
            self.tick()?;
            let mut x = g_unchecked(&(self.theta - partial));
            if let Some(prev) = self.prefix.last() {
                if *prev > x {
                    x = prev.clone();
                }
            }
            let sum = partial + &unit(&x);
            if sum >= self.best {
                let mut tuple = self.prefix.clone();
                tuple.push(x);
                self.offer(sum, tuple);
            }
            return Ok(());
        }
        if self.best <= *partial {
            self.complete_greedily(partial);
        }
        let bounds = level_bounds(
            self.theta,
            level,
            partial,
            self.prefix.last(),
            remaining,
            &self.best,
        )
        .expect("incumbent exceeds partial sum");
        let mut upper = bounds.upper;
        let mut x = bounds.lower;
        while x <= upper {
            self.tick()?;
            let next = partial + &unit(&x);
            self.prefix.push(x.clone());
            self.descend(&next)?;
            self.prefix.pop();
            // The incumbent only grows, so the upper end only shrinks.
            let slack = &self.best - partial;
            upper = Rational::from_integer(remaining as u64)
                .checked_div(&slack)?
                .floor();
            x += 1;
        }
        Ok(())
    }
}

/// Every best `m`-term underapproximation of `theta`, by complete
/// branch-and-bound over nondecreasing tuples.
///
/// The incumbent starts at the greedy sum. If more than `budget` search nodes
/// would be needed the call fails with [`Error::Inconclusive`] instead of
/// returning a partial answer.
pub fn best_m_term(theta: &Rational, m: usize, budget: u64) -> Result<UnderapproxResult> {
    require_unit_interval(theta)?;
    if m == 0 {
        return Err(Error::domain("number of terms must be at least 1"));
    }
    let greedy = expand(theta, m)?;
    let greedy_sum = greedy.partial_sum();
    let mut search = Search {
        theta,
        m,
        budget,
        nodes: 0,
        best: greedy_sum.clone(),
        tuples: BTreeSet::from([greedy.terms.clone()]),
        prefix: Vec::with_capacity(m),
    };
    search.descend(&Rational::zero())?;
    UnderapproxResult::from_search(
        theta,
        m,
        greedy.terms,
        greedy_sum,
        search.tuples,
        search.best,
        search.nodes,
    )
}

/// Sum of reciprocals of a tuple.
pub fn reciprocal_sum(xs: &[BigInt]) -> Result<Rational> {
    xs.iter().map(Rational::unit).sum()
}
