use num_bigint::BigInt;
use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::VerificationReport;

/// Residue of `k = 4j + r` mod 4 for the three bracketed constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ResidueCase {
    /// `k = 4j + 1`, `v = 2s + 5`, `s(s+1)/2 <= j <= (s+1)(s+2)/2 - 1`.
    One,
    /// `k = 4j + 2`, `v = 4s + 20`, `12 + s(s+7) <= j <= 11 + (s+1)(s+8)`.
    Two,
    /// `k = 4j + 3`, `v = 4s + 8`, `s(s+1) <= j <= (s+1)(s+2) - 1`.
    Three,
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

impl ResidueCase {
    pub const ALL: [ResidueCase; 3] = [ResidueCase::One, ResidueCase::Two, ResidueCase::Three];

    pub fn from_residue(r: u64) -> Option<Self> {
        match r {
            1 => Some(ResidueCase::One),
            2 => Some(ResidueCase::Two),
            3 => Some(ResidueCase::Three),
            _ => None,
        }
    }

    pub fn residue(self) -> u64 {
        match self {
            ResidueCase::One => 1,
            ResidueCase::Two => 2,
            ResidueCase::Three => 3,
        }
    }

    pub fn first_s(self) -> u64 {
        match self {
            ResidueCase::One => 1,
            ResidueCase::Two => 0,
            ResidueCase::Three => 2,
        }
    }

    /// Smallest `j` covered by the brackets.
    pub fn first_j(self) -> u64 {
        self.j_bracket(self.first_s()).0 as u64
    }

    pub fn v(self, s: u64) -> u64 {
        match self {
            ResidueCase::One => 2 * s + 5,
            ResidueCase::Two => 4 * s + 20,
            ResidueCase::Three => 4 * s + 8,
        }
    }

    pub fn k(self, j: u64) -> u64 {
        4 * j + self.residue()
    }

    /// Inclusive range of `j` assigned to `s`.
    pub fn j_bracket(self, s: u64) -> (u128, u128) {
        let s = s as u128;
        match self {
            ResidueCase::One => (s * (s + 1) / 2, (s + 1) * (s + 2) / 2 - 1),
            ResidueCase::Two => (12 + s * (s + 7), 11 + (s + 1) * (s + 8)),
            ResidueCase::Three => (s * (s + 1), (s + 1) * (s + 2) - 1),
        }
    }

    fn contains(self, s: u64, j: u64) -> bool {
        let (lo, hi) = self.j_bracket(s);
        lo <= j as u128 && j as u128 <= hi
    }

    /// The unique `s` whose bracket contains `j`.
    pub fn s_for_j(self, j: u64) -> Result<u64> {
        if j < self.first_j() {
            return Err(Error::domain(format!(
                "j = {j} is below the first bracket ({}) for k ≡ {} mod 4",
                self.first_j(),
                self.residue()
            )));
        }
        let guess = match self {
            ResidueCase::One => (2 * j as u128).sqrt() as u64,
            _ => (j as u128).sqrt() as u64,
        };
        let mut s = guess.max(self.first_s());
        while s > self.first_s() && self.j_bracket(s).0 > j as u128 {
            s -= 1;
        }
        while self.j_bracket(s).1 < j as u128 {
            s += 1;
        }
        let others = [s.checked_sub(1), Some(s + 1)]
            .into_iter()
            .flatten()
            .filter(|&t| t >= self.first_s() && self.contains(t, j))
            .count();
        if !self.contains(s, j) || others != 0 {
            return Err(Error::invariant(format!("brackets do not tile at j = {j}")));
        }
        Ok(s)
    }

    /// Exact `x = k(kv+1)((k+1)v-1) / (2k+1)` for `(k, v)` built from `(j, s)`.
    pub fn floor_argument(self, j: u64, s: u64) -> Rational {
        let (k, v) = (big(self.k(j)), big(self.v(s)));
        let num = &k * (&k * &v + 1u32) * ((&k + 1u32) * &v - 1u32);
        Rational::new(num, 2u32 * k + 1u32).expect("positive denominator")
    }

    /// The claimed value of `x - floor(x)`.
    pub fn claimed_fraction(self, j: u64, s: u64) -> Rational {
        let (j, s) = (big(j), big(s));
        let (num, den) = match self {
            ResidueCase::One => {
                // (s-2)(s-1) is even, so the halving is exact on integers
                let tri = (&s - 2u32) * (&s - 1u32) / 2u32;
                (5u32 * &j + 2u32 + 3u32 * &s + tri, 8u32 * &j + 3u32)
            }
            ResidueCase::Two => (
                2u32 * &s * &s + 18u32 * &s + 4u32 * &j + 43u32,
                8u32 * &j + 5u32,
            ),
            ResidueCase::Three => (
                2u32 * &s * &s + 6u32 * &s + 4u32 * &j + 8u32,
                8u32 * &j + 7u32,
            ),
        };
        Rational::new(num, den).expect("positive denominator")
    }

    /// Closed form of `floor(x) + 1`.
    pub fn claimed_ceiling(self, j: u64, s: u64) -> BigInt {
        let (j, s) = (big(j), big(s));
        let (j2, s2) = (&j * &j, &s * &s);
        let js = &j * &s;
        match self {
            ResidueCase::One => {
                32u32 * &j2 * &s2
                    + 160u32 * &j2 * &s
                    + 200u32 * &j2
                    + 20u32 * &j * &s2
                    + 100u32 * &js
                    + 125u32 * &j
                    + (5u32 * &s2 + 27u32 * &s) / 2u32
                    + 18u32
            }
            ResidueCase::Two => {
                960u32
                    + 3600u32 * &j
                    + 3200u32 * &j2
                    + 382u32 * &s
                    + 1440u32 * &js
                    + 1280u32 * &j2 * &s
                    + 38u32 * &s2
                    + 144u32 * &j * &s2
                    + 128u32 * &j2 * &s2
            }
            ResidueCase::Three => {
                332u32
                    + 832u32 * &j
                    + 512u32 * &j2
                    + 330u32 * &s
                    + 832u32 * &js
                    + 512u32 * &j2 * &s
                    + 82u32 * &s2
                    + 208u32 * &j * &s2
                    + 128u32 * &j2 * &s2
            }
        }
    }

    /// The quadratic in `j` whose negativity is equivalent to the defining
    /// inequality for this case.
    pub fn quadratic(self, s: u64, j: &BigInt) -> BigInt {
        let s = big(s);
        let s2 = &s * &s;
        let s3 = &s2 * &s;
        let (a, b, c) = match self {
            ResidueCase::One => {
                let s4 = &s3 * &s;
                (
                    8u32 * &s2 + 40u32 * &s + 50u32,
                    4u32 * &s4 + 32u32 * &s3 + 85u32 * &s2 + 79u32 * &s + 10u32,
                    &s4 + 8u32 * &s3 + 22u32 * &s2 + 23u32 * &s + 6u32,
                )
            }
            ResidueCase::Two => (
                64u32 * &s + 320u32,
                64u32 * &s3 + 896u32 * &s2 + 4088u32 * &s + 6048u32,
                32u32 * &s3 + 448u32 * &s2 + 2061u32 * &s + 3108u32,
            ),
            ResidueCase::Three => (
                64u32 * (&s + 2u32),
                8u32 * (8u32 * &s3 + 40u32 * &s2 + 51u32 * &s + 7u32),
                48u32 * &s3 + 240u32 * &s2 + 343u32 * &s + 115u32,
            ),
        };
        a * j * j - b * j - c
    }
}

/// Checks the fractional-part claim and the closed form of `floor(x) + 1` for
/// every `j` from the first bracket up to `j_max`, with `s` from the bracket
/// rule. Failure tuples are `[j, s]`.
pub fn check_fractional_claims(case: ResidueCase, j_max: u64) -> Result<VerificationReport> {
    let first = case.first_j();
    if j_max < first {
        return Err(Error::domain(format!("j_max must be at least {first}")));
    }
    let mut report = VerificationReport::new(
        format!("fractional-claim-k{}mod4", case.residue()),
        format!("{first} <= j <= {j_max}"),
    );
    for j in first..=j_max {
        let s = case.s_for_j(j)?;
        let x = case.floor_argument(j, s);
        let holds = x.fract() == case.claimed_fraction(j, s)
            && x.floor() + 1u32 == case.claimed_ceiling(j, s);
        report.record(&[j as i64, s as i64], holds);
    }
    report.normalize();
    Ok(report)
}

/// Sign check of the case's quadratic at both ends of every bracket with
/// `s <= s_max`. Failure tuples are `[s, j]`.
pub fn check_root_interval(case: ResidueCase, s_max: u64) -> Result<VerificationReport> {
    if s_max < 2 {
        return Err(Error::domain("s_max must be at least 2"));
    }
    let mut report = VerificationReport::new(
        format!("root-interval-k{}mod4", case.residue()),
        format!("{} <= s <= {s_max}", case.first_s()),
    );
    for s in case.first_s()..=s_max {
        let (lo, hi) = case.j_bracket(s);
        for j in [lo, hi] {
            let negative = case.quadratic(s, &BigInt::from(j)) < BigInt::from(0);
            report.record(&[s as i64, j as i64], negative);
        }
    }
    report.normalize();
    Ok(report)
}
