use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn require_prefix(seq: &[BigInt]) -> Result<()> {
    match seq.first() {
        None => Err(Error::domain("growth check needs a nonempty sequence")),
        Some(c1) if *c1 < BigInt::from(2) => Err(Error::domain("first term must be at least 2")),
        Some(_) => Ok(()),
    }
}

/// Whether `c_{n+1} >= N c_n^2 - c_n + 1` for every consecutive pair of the
/// finite prefix. Nothing is claimed about terms beyond the prefix.
pub fn growth_condition_check(seq: &[BigInt], n: u64) -> Result<bool> {
    require_prefix(seq)?;
    let n = BigInt::from(n);
    Ok(seq
        .windows(2)
        .all(|w| w[1] >= &n * &w[0] * &w[0] - &w[0] + 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicGrowth {
    /// `c_{n+1} >= c_n^3 - c_n + 1` on the whole prefix.
    pub holds: bool,
    /// First 1-based index with `c_m >= N`, if the prefix reaches `N`.
    pub m_n: Option<usize>,
}

/// The cubic growth variant together with `m_N`.
///
/// When the growth holds the prefix is strictly increasing from `c_1 >= 2`,
/// which forces `m_N <= N`; a violation is reported as an invariant error.
pub fn cubic_growth_check(seq: &[BigInt], n: u64) -> Result<CubicGrowth> {
    require_prefix(seq)?;
    let holds = seq
        .windows(2)
        .all(|w| w[1] >= &w[0] * &w[0] * &w[0] - &w[0] + 1);
    let target = BigInt::from(n);
    let m_n = seq.iter().position(|c| *c >= target).map(|i| i + 1);
    if holds {
        if let Some(m) = m_n {
            if m as u64 > n.max(1) {
                return Err(Error::invariant(format!("m_N = {m} exceeds N = {n}")));
            }
        }
    }
    Ok(CubicGrowth { holds, m_n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::expand;
    use crate::rational::Rational;

    fn ints(xs: &[u64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn quadratic_examples() {
        // 85 < 2*49 - 7 + 1 = 92
        assert!(!growth_condition_check(&ints(&[2, 7, 85]), 2).unwrap());
        assert!(growth_condition_check(&ints(&[2, 7, 92]), 2).unwrap());
        assert!(!growth_condition_check(&ints(&[2, 7, 91]), 2).unwrap());
        let sylvester = expand(&Rational::one(), 8).unwrap().terms;
        assert!(growth_condition_check(&sylvester, 1).unwrap());
        assert!(!growth_condition_check(&sylvester, 2).unwrap());
        assert!(growth_condition_check(&ints(&[5]), 7).unwrap());
    }

    #[test]
    fn malformed_prefixes() {
        assert!(growth_condition_check(&[], 2).is_err());
        assert!(growth_condition_check(&ints(&[1, 3]), 2).is_err());
        assert!(cubic_growth_check(&[], 2).is_err());
    }

    #[test]
    fn cubic_examples() {
        // 7 >= 8 - 2 + 1 and 337 >= 343 - 7 + 1, both with equality
        let c = cubic_growth_check(&ints(&[2, 7, 337]), 5).unwrap();
        assert!(c.holds);
        assert_eq!(c.m_n, Some(2));
        let c = cubic_growth_check(&ints(&[2, 7, 336]), 5).unwrap();
        assert!(!c.holds);
        let c = cubic_growth_check(&ints(&[2, 7, 337]), 1000).unwrap();
        assert_eq!(c.m_n, None);
        let c = cubic_growth_check(&ints(&[2, 7, 337]), 1).unwrap();
        assert_eq!(c.m_n, Some(1));
    }

    #[test]
    fn minimal_cubic_chain_reaches_n_in_time() {
        let mut seq = ints(&[2]);
        for _ in 0..4 {
            let c = seq.last().unwrap().clone();
            seq.push(&c * &c * &c - &c + 1);
        }
        for n in 1..=5u64 {
            let c = cubic_growth_check(&seq, n).unwrap();
            assert!(c.holds);
            assert!(c.m_n.unwrap() as u64 <= n);
        }
    }
}
