//! The finite brute-force steps inside the lemma proofs.
//!
//! Each proof case writes `k u^2 - 2d u - d s = (ks + d) ell + j` with the
//! remainder `j` pinned to `ks + 1` or `ks + 2`, bounds `u` and `k`, and then
//! enumerates the triples `(u, s, k)` for which `ell` is a nonnegative integer.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

/// Whether `a n^2 ≡ b (mod m)` has a solution.
pub fn congruence_solvable(a: u64, b: u64, m: u64) -> bool {
    (0..m).any(|n| (a * n % m * n) % m == b % m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllSolution {
    pub u: u64,
    pub s: u64,
    pub k: u64,
    pub ell: u64,
}

/// Named enumeration steps from the proofs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EllCase {
    /// `Υ = 2`, `j = ks + 1`, `k = 3`, `2 <= u <= 11`; survivors need `2s(ell+1) <= u^2`.
    Lp1K3,
    /// As [`EllCase::Lp1K3`] with `k = 5`.
    Lp1K5,
    /// `Υ = 3`, `j = ks + 1`, `v = 3`, `2 <= u <= 4`, `4 <= k <= 6`; survivors need `3s(ell+1) <= u^2`.
    Lp11Case2,
    /// `Υ = 3`, `j = ks + 2`, `v = 2`, `2 <= u <= 17`, `4 <= k <= 10`; survivors need `2s(ell+1) <= u^2`.
    Lp11Case31,
    /// `Υ = 3`, `j = ks + 2`, `v = 3`, `s >= 2`, `3 <= u <= 26`, `4 <= k <= 13`; survivors need `3s(ell+1) <= 2u^2`.
    Lp11Case32a,
}

struct CaseShape {
    d: u64,
    j_offset: u64,
    ks: RangeInclusive<u64>,
    us: RangeInclusive<u64>,
    s_min: u64,
    /// Survivor test `a s (ell + 1) <= b u^2`.
    a: u64,
    b: u64,
}

impl EllCase {
    pub const ALL: [EllCase; 5] = [
        EllCase::Lp1K3,
        EllCase::Lp1K5,
        EllCase::Lp11Case2,
        EllCase::Lp11Case31,
        EllCase::Lp11Case32a,
    ];

    fn shape(self) -> CaseShape {
        match self {
            EllCase::Lp1K3 => CaseShape {
                d: 2,
                j_offset: 1,
                ks: 3..=3,
                us: 2..=11,
                s_min: 1,
                a: 2,
                b: 1,
            },
            EllCase::Lp1K5 => CaseShape {
                d: 2,
                j_offset: 1,
                ks: 5..=5,
                us: 2..=11,
                s_min: 1,
                a: 2,
                b: 1,
            },
            EllCase::Lp11Case2 => CaseShape {
                d: 3,
                j_offset: 1,
                ks: 4..=6,
                us: 2..=4,
                s_min: 1,
                a: 3,
                b: 1,
            },
            EllCase::Lp11Case31 => CaseShape {
                d: 3,
                j_offset: 2,
                ks: 4..=10,
                us: 2..=17,
                s_min: 1,
                a: 2,
                b: 1,
            },
            EllCase::Lp11Case32a => CaseShape {
                d: 3,
                j_offset: 2,
                ks: 4..=13,
                us: 3..=26,
                s_min: 2,
                a: 3,
                b: 2,
            },
        }
    }
}

/// Every `(u, s, k)` in the case's box for which `ell` is a nonnegative integer.
pub fn ell_solutions(case: EllCase) -> Vec<EllSolution> {
    let sh = case.shape();
    let mut out = Vec::new();
    for k in sh.ks.clone() {
        for u in sh.us.clone() {
            for s in sh.s_min..u {
                let lhs =
                    (k * u * u) as i128 - (2 * sh.d * u + sh.d * s + k * s + sh.j_offset) as i128;
                let den = (k * s + sh.d) as i128;
                if lhs >= 0 && lhs % den == 0 {
                    out.push(EllSolution {
                        u,
                        s,
                        k,
                        ell: (lhs / den) as u64,
                    });
                }
            }
        }
    }
    out
}

/// Solutions that also satisfy the case's contradiction hypothesis.
pub fn survivors(case: EllCase) -> Vec<EllSolution> {
    let sh = case.shape();
    ell_solutions(case)
        .into_iter()
        .filter(|e| sh.a * e.s * (e.ell + 1) <= sh.b * e.u * e.u)
        .collect()
}

/// `u` in `2..=u_max` with `3(u+1)^2 = ell (k+3) + j` for some integer `ell >= 0`.
pub fn lp50_integral_u(k: u64, j: u64, u_max: u64) -> Vec<u64> {
    (2..=u_max)
        .filter(|u| {
            let t = 3 * (u + 1) * (u + 1);
            t >= j && (t - j).is_multiple_of(k + 3)
        })
        .collect()
}
