//! Fractions with `Υ(p, q) = k >= 4` whose greedy pair is not the best
//! two-term underapproximation.
//!
//! Every instance has `p = k + 1` and `q = (k+1)kv - k` for some `v >= 1`,
//! which makes `Υ(p, q) = k` and `k | q`. The greedy pair is then beaten by
//! `x_1 = a_1 + 1` and its largest feasible partner whenever
//!
//! ```text
//! (k(kv+1)((k+1)v-1) + k + 1/v) / (2k+1 + 1/(kv^2)) > floor(k(kv+1)((k+1)v-1) / (2k+1)) + 1
//! ```
//!
//! which [`check_s5`] evaluates exactly. [`construct`] picks `v` by the
//! residue of `k` mod 4.

mod claims;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::greedy::{expand, g_func};
use crate::rational::{decimal, Rational};
use crate::underapprox::reciprocal_sum;

pub use claims::{check_fractional_claims, check_root_interval, ResidueCase};

/// `(k, v)` pairs for `k = 4j + 2`, `1 <= j <= 11`.
pub const TABLE_K_2_MOD_4: [(u64, u64); 11] = [
    (6, 8),
    (10, 11),
    (14, 12),
    (18, 12),
    (22, 12),
    (26, 15),
    (30, 16),
    (34, 16),
    (38, 16),
    (42, 16),
    (46, 16),
];

/// `(k, v)` pairs for `k = 4j + 3`, `1 <= j <= 5`.
pub const TABLE_K_3_MOD_4: [(u64, u64); 5] = [(7, 8), (11, 13), (15, 12), (19, 12), (23, 12)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub k: u64,
    pub p: u64,
    #[serde(with = "decimal")]
    pub q: BigInt,
    pub v: u64,
    /// Bracket index; absent for `k ≡ 0 mod 4` and for table entries.
    pub s: Option<u64>,
    #[serde(with = "decimal::pair")]
    pub greedy_pair: (BigInt, BigInt),
    #[serde(with = "decimal::pair")]
    pub beating_pair: (BigInt, BigInt),
    /// Beating sum minus greedy sum.
    pub margin: Rational,
}

impl Counterexample {
    pub fn theta(&self) -> Rational {
        Rational::new(self.p, self.q.clone()).expect("q is positive")
    }
}

fn require_kv(k: u64, v: u64) -> Result<()> {
    if k < 4 {
        return Err(Error::domain(format!("k = {k} must be at least 4")));
    }
    if v == 0 {
        return Err(Error::domain("v must be at least 1"));
    }
    Ok(())
}

/// `q = (k+1)kv - k`.
pub fn denominator(k: u64, v: u64) -> BigInt {
    let k = BigInt::from(k);
    (&k + 1u32) * &k * v - &k
}

/// Exact verdict of the defining strict inequality for `(k, v)`.
pub fn check_s5(k: u64, v: u64) -> Result<bool> {
    require_kv(k, v)?;
    let (kb, vb) = (BigInt::from(k), BigInt::from(v));
    let t = &kb * (&kb * &vb + 1u32) * ((&kb + 1u32) * &vb - 1u32);
    let two_k_1 = BigInt::from(2u32) * &kb + 1u32;
    let lhs = (Rational::from_integer(&t + &kb) + Rational::unit(&vb)?).checked_div(
        &(Rational::from_integer(two_k_1.clone()) + Rational::unit(&(&kb * &vb * &vb))?),
    )?;
    let rhs = t.div_floor(&two_k_1) + 1u32;
    Ok(lhs.cmp_integer(&rhs).is_gt())
}

/// Greedy pair and beating pair for `(k+1)/q`, `q = (k+1)kv - k`.
///
/// Fails with a domain error unless [`check_s5`] holds. The returned pairs are
/// checked against [`expand`] and `G`, and the strict chain
/// `1/a_1 + 1/a_2 < 1/x_1 + 1/x_2 < p/q` is verified exactly.
pub fn beating_pair(k: u64, v: u64) -> Result<((BigInt, BigInt), (BigInt, BigInt))> {
    if !check_s5(k, v)? {
        return Err(Error::domain(format!(
            "(k, v) = ({k}, {v}) does not satisfy the inequality"
        )));
    }
    let (kb, vb) = (BigInt::from(k), BigInt::from(v));
    let kv = &kb * &vb;
    let m = (&kb + 1u32) * &vb - 1u32;
    let a1 = kv.clone();
    let a2 = &kv * &m + 1u32;
    let x1 = &kv + 1u32;
    let x2 = (&kb * &m * &x1).div_floor(&(BigInt::from(2u32) * &kb + 1u32)) + 1u32;

    let theta = Rational::new(k + 1, denominator(k, v))?;
    let greedy = expand(&theta, 2)?;
    if greedy.terms != [a1.clone(), a2.clone()] {
        return Err(Error::invariant(format!(
            "greedy terms {:?} differ from the formulas for (k, v) = ({k}, {v})",
            greedy.terms
        )));
    }
    if g_func(&(&theta - &Rational::unit(&x1)?))? != x2 {
        return Err(Error::invariant(
            "x2 is not the largest feasible partner of x1",
        ));
    }
    let greedy_sum = greedy.partial_sum();
    let beating_sum = reciprocal_sum(&[x1.clone(), x2.clone()])?;
    if !(greedy_sum < beating_sum && beating_sum < theta) {
        return Err(Error::invariant(format!(
            "(k, v) = ({k}, {v}) passes the inequality but the pair does not beat greedy"
        )));
    }
    Ok(((a1, a2), (x1, x2)))
}

/// The `v` and bracket index `s` chosen for `k`.
pub fn choose_v(k: u64) -> Result<(u64, Option<u64>)> {
    if k < 4 {
        return Err(Error::domain(format!("k = {k} must be at least 4")));
    }
    let j = k / 4;
    let table = |t: &[(u64, u64)]| t.iter().find(|e| e.0 == k).map(|e| (e.1, None));
    let found = match k % 4 {
        0 => Some((1, None)),
        2 if j <= 11 => table(&TABLE_K_2_MOD_4),
        3 if j <= 5 => table(&TABLE_K_3_MOD_4),
        r => {
            let case = ResidueCase::from_residue(r).expect("residue is 1, 2 or 3");
            let s = case.s_for_j(j)?;
            Some((case.v(s), Some(s)))
        }
    };
    found.ok_or_else(|| Error::invariant(format!("no table entry for k = {k}")))
}

/// A verified counterexample with `Υ(p, q) = k`.
pub fn construct(k: u64) -> Result<Counterexample> {
    let (v, s) = choose_v(k)?;
    let ((a1, a2), (x1, x2)) = beating_pair(k, v).map_err(|e| match e {
        Error::Domain(msg) => Error::invariant(format!("construction for k = {k} failed: {msg}")),
        other => other,
    })?;
    let q = denominator(k, v);
    let p = BigInt::from(k + 1);
    let ups = &p - q.mod_floor(&p);
    if ups != BigInt::from(k) || !q.is_multiple_of(&BigInt::from(k)) {
        return Err(Error::invariant(format!(
            "q = {q} has the wrong residues for k = {k}"
        )));
    }
    let margin =
        reciprocal_sum(&[x1.clone(), x2.clone()])? - reciprocal_sum(&[a1.clone(), a2.clone()])?;
    Ok(Counterexample {
        k,
        p: k + 1,
        q,
        v,
        s,
        greedy_pair: (a1, a2),
        beating_pair: (x1, x2),
        margin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::upsilon;
    use crate::underapprox::best_two_term;

    fn pair(a: u64, b: u64) -> (BigInt, BigInt) {
        (BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn k4_is_five_sixteenths() {
        let c = construct(4).unwrap();
        assert_eq!((c.p, c.q.clone(), c.v, c.s), (5, BigInt::from(16), 1, None));
        assert_eq!(c.greedy_pair, pair(4, 17));
        assert_eq!(c.beating_pair, pair(5, 9));
        assert_eq!(
            c.margin,
            Rational::new(14, 45).unwrap() - Rational::new(21, 68).unwrap()
        );
    }

    #[test]
    fn table_values_are_used() {
        assert_eq!(construct(6).unwrap().v, 8);
        assert_eq!(construct(7).unwrap().v, 8);
        assert_eq!(construct(46).unwrap().v, 16);
        assert_eq!(construct(23).unwrap().v, 12);
        let c = construct(50).unwrap();
        assert_eq!((c.v, c.s), (20, Some(0)));
        let c = construct(27).unwrap();
        assert_eq!((c.v, c.s), (16, Some(2)));
        let c = construct(5).unwrap();
        assert_eq!((c.v, c.s), (7, Some(1)));
    }

    #[test]
    fn table_entries_satisfy_the_inequality() {
        for (k, v) in TABLE_K_2_MOD_4.iter().chain(&TABLE_K_3_MOD_4) {
            assert!(check_s5(*k, *v).unwrap(), "({k}, {v})");
        }
    }

    #[test]
    fn check_s5_examples() {
        assert!(check_s5(4, 1).unwrap());
        assert!(check_s5(10, 11).unwrap());
        // 1554/79 < 20
        assert!(!check_s5(6, 1).unwrap());
        assert!(check_s5(4, 1_000_000).unwrap());
        assert!(check_s5(3, 1).is_err());
        assert!(check_s5(4, 0).is_err());
    }

    #[test]
    fn beating_pair_for_table_entry() {
        let ((a1, a2), (x1, x2)) = beating_pair(6, 8).unwrap();
        assert_eq!((a1, a2), pair(48, 48 * 55 + 1));
        assert_eq!(x1, BigInt::from(49));
        // floor(6 * 55 * 49 / 13) + 1
        assert_eq!(x2, BigInt::from(6 * 55 * 49 / 13 + 1));
        assert!(beating_pair(6, 1).is_err());
    }

    #[test]
    fn multiples_of_four_use_v_one() {
        for k in (4..=200).step_by(4) {
            assert!(check_s5(k, 1).unwrap());
            assert_eq!(construct(k).unwrap().v, 1);
        }
    }

    #[test]
    fn constructions_up_to_200() {
        for k in 4..=200u64 {
            let c = construct(k).unwrap();
            let q = u64::try_from(&c.q).unwrap();
            assert_eq!(upsilon(c.p, q).unwrap(), k);
            assert_eq!(q % k, 0);
            assert!(c.margin.is_positive());
        }
    }

    #[test]
    fn small_constructions_agree_with_search() {
        for k in 4..=12u64 {
            let c = construct(k).unwrap();
            let res = best_two_term(&c.theta()).unwrap();
            assert!(!res.greedy_is_best, "k = {k}");
            let beat =
                reciprocal_sum(&[c.beating_pair.0.clone(), c.beating_pair.1.clone()]).unwrap();
            assert!(beat <= res.optimal_sum);
        }
    }

    #[test]
    fn json_shape() {
        let c = construct(4).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["q"], "16");
        assert_eq!(v["beating_pair"], serde_json::json!(["5", "9"]));
        assert_eq!(v["s"], serde_json::Value::Null);
        let back: Counterexample = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn small_k_rejected() {
        assert!(construct(3).is_err());
        assert!(choose_v(0).is_err());
    }
}
