//! Acceptance suite. Each criterion runs in isolation, prints one PASS/FAIL
//! line, and the test fails if any criterion does.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use egyptian::counterexample::{check_s5, construct, TABLE_K_2_MOD_4, TABLE_K_3_MOD_4};
use egyptian::greedy::{
    closed_form_p_divides_q_plus_1, closed_form_upsilon2_odd_q, closed_form_upsilon_divides_q,
    delta_index, delta_witness, ell_index, expand, step_report,
};
use egyptian::lemmas::{lp12_sides, verify_lp1, verify_lp11, verify_lp12, verify_lp50};
use egyptian::underapprox::{best_m_term, verify_threshold_sweep, DEFAULT_BUDGET};
use egyptian::{Error, Rational};

// Wall-clock limits. The two-term, factory, lemma and m-term limits are the
// stated ones; AC1 is stated at 1 s.
const AC1_LIMIT: Duration = Duration::from_secs(1);
const AC2_LIMIT: Duration = Duration::from_secs(30);
const AC3_LIMIT: Duration = Duration::from_secs(10);
const AC5_LIMIT: Duration = Duration::from_secs(60);
const AC9_LIMIT: Duration = Duration::from_secs(120);

const AC5_WORKERS: usize = 4;
const AC6_SEED: u64 = 0x5EED_0006;
const AC6_SAMPLES: usize = 1000;

type Outcome = Result<String, String>;

fn r(p: u64, q: u64) -> Rational {
    Rational::new(p, q).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn reduced_fractions(q_max: u64) -> impl Iterator<Item = (u64, u64)> {
    (2..=q_max).flat_map(|q| (1..q).filter(move |p| p.gcd(&q) == 1).map(move |p| (p, q)))
}

fn upsilon(p: u64, q: u64) -> u64 {
    p - q % p
}

fn strings(terms: &[BigInt]) -> Vec<String> {
    terms.iter().map(ToString::to_string).collect()
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let cases: [(u64, u64, &[&str]); 3] = [
        (1, 7, &["8", "57", "3193", "10192057", "103878015699193"]),
        (
            1,
            1,
            &[
                "2",
                "3",
                "7",
                "43",
                "1807",
                "3263443",
                "10650056950807",
                "113423713055421844361000443",
            ],
        ),
        (
            9,
            28,
            &[
                "4",
                "15",
                "211",
                "44311",
                "1963420411",
                "3855019708367988511",
                "14861176951905611184725545411860008611",
                "220854580395850552531842289089175529937535309395681309187277137641134140711",
                "48776745681827215201073590705821720129907215948452411133840819544687359972408576801483754037949229638828609122243178453897962110488158061591213444811",
            ],
        ),
    ];
    for (p, q, want) in cases {
        let got = strings(&expand(&r(p, q), want.len()).unwrap().terms);
        ensure(got == want, || format!("{p}/{q}: got {got:?}"))?;
    }
    let t = within(start, AC1_LIMIT)?;
    Ok(format!("1/7, 1, 9/28 digit-exact in {t:?}"))
}

fn ac2() -> Outcome {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let sweep = pool.install(|| verify_threshold_sweep(200)).unwrap();
    let mut checked = 0;
    for row in sweep.rows.iter().filter(|row| row.upsilon <= 3) {
        checked += 1;
        ensure(row.upsilon == upsilon(row.p, row.q), || {
            format!("Upsilon of {}/{}", row.p, row.q)
        })?;
        ensure(row.greedy_is_best, || {
            format!("greedy loses at {}/{}", row.p, row.q)
        })?;
        let tie = (row.p, row.q) == (10, 17);
        ensure(row.unique != tie, || {
            format!("uniqueness wrong at {}/{}", row.p, row.q)
        })?;
        if tie {
            let want: BTreeSet<Vec<BigInt>> = [vec![BigInt::from(3), BigInt::from(4)]].into();
            ensure(row.ties == want, || format!("10/17 ties {:?}", row.ties))?;
        }
    }
    ensure(
        sweep.rows.iter().any(|row| (row.p, row.q) == (10, 17)),
        || "10/17 missing".into(),
    )?;
    let t = within(start, AC2_LIMIT)?;
    Ok(format!(
        "{checked} fractions with Upsilon <= 3, single tie at 10/17, {t:?}"
    ))
}

fn ac3() -> Outcome {
    let start = Instant::now();
    for k in 4..=200u64 {
        let c = construct(k).map_err(|e| format!("k = {k}: {e}"))?;
        let q = u64::try_from(&c.q).map_err(|e| e.to_string())?;
        ensure(c.p == k + 1 && upsilon(c.p, q) == k, || {
            format!("k = {k}: Upsilon")
        })?;
        ensure(q % k == 0, || format!("k = {k}: k does not divide q"))?;
        let theta = BigRational::new(c.p.into(), q.into());
        let unit = |x: &BigInt| BigRational::new(BigInt::one(), x.clone());
        let greedy = unit(&c.greedy_pair.0) + unit(&c.greedy_pair.1);
        let beat = unit(&c.beating_pair.0) + unit(&c.beating_pair.1);
        ensure(greedy < beat && beat < theta, || {
            format!("k = {k}: chain fails")
        })?;
        let g = expand(&r(c.p, q), 2).unwrap().terms;
        ensure(
            g == [c.greedy_pair.0.clone(), c.greedy_pair.1.clone()],
            || format!("k = {k}: greedy pair mismatch"),
        )?;
    }
    let c4 = construct(4).unwrap();
    ensure(
        (c4.p, c4.q.clone()) == (5, BigInt::from(16))
            && c4.beating_pair == (BigInt::from(5), BigInt::from(9)),
        || format!("k = 4 gives {c4:?}"),
    )?;
    let t = within(start, AC3_LIMIT)?;
    Ok(format!(
        "k = 4..=200 verified, k = 4 is 5/16 beaten by (5, 9), {t:?}"
    ))
}

/// The defining strict inequality, evaluated from scratch with `BigRational`.
fn s5_oracle(k: u64, v: u64) -> bool {
    let (k, v) = (BigInt::from(k), BigInt::from(v));
    let t: BigInt = &k * (&k * &v + 1) * ((&k + 1) * &v - 1);
    let lhs = (BigRational::from_integer(&t + &k) + BigRational::new(BigInt::one(), v.clone()))
        / (BigRational::from_integer(2 * &k + 1) + BigRational::new(BigInt::one(), &k * &v * &v));
    let rhs = t.div_floor(&(2 * &k + 1)) + 1;
    lhs > BigRational::from_integer(rhs)
}

fn ac4() -> Outcome {
    let entries: Vec<(u64, u64)> = TABLE_K_2_MOD_4
        .iter()
        .chain(&TABLE_K_3_MOD_4)
        .copied()
        .collect();
    ensure(entries.len() == 16, || format!("{} entries", entries.len()))?;
    for (k, v) in &entries {
        ensure(check_s5(*k, *v).unwrap(), || {
            format!("check_s5({k}, {v}) is false")
        })?;
        ensure(s5_oracle(*k, *v), || format!("oracle rejects ({k}, {v})"))?;
    }
    Ok("all 16 table entries satisfy the inequality exactly".into())
}

fn ac5() -> Outcome {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(AC5_WORKERS)
        .build()
        .unwrap();
    let (lp1, lp11, lp50, lp12) = pool.install(|| {
        (
            verify_lp1(500).unwrap(),
            verify_lp11(500).unwrap(),
            verify_lp50(500).unwrap(),
            verify_lp12().unwrap(),
        )
    });
    ensure(lp1.failures.is_empty(), || {
        format!("lp1 failures {:?}", lp1.failures)
    })?;
    let exceptional: BTreeSet<(i64, i64)> = [(17, 2), (61, 8)].into();
    for rep in [&lp11, &lp50] {
        let seen: BTreeSet<(i64, i64)> = rep.failures.iter().map(|f| (f[0], f[1])).collect();
        ensure(seen == exceptional, || {
            format!("{} failures at {seen:?}", rep.lemma_id)
        })?;
    }
    ensure(lp12.failures == [vec![155]], || {
        format!("lp12 failures {:?}", lp12.failures)
    })?;
    let (left, right) = lp12_sides(155);
    ensure(left == 7 && right == Rational::from(7), || {
        format!("s = 155: {left} vs {right}")
    })?;
    let t = within(start, AC5_LIMIT)?;
    Ok(format!(
        "lp1 clean, lp11/lp50 fail only at (17,2), (61,8), lp12 7 = 7 at s = 155, {t:?}"
    ))
}

fn ac6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(AC6_SEED);
    let mut disagreements = Vec::new();
    let mut checked = 0;
    while checked < AC6_SAMPLES {
        let q = rng.gen_range(2..=10_000u64);
        let p = rng.gen_range(1..q);
        if p.gcd(&q) != 1 {
            continue;
        }
        checked += 1;
        let m = rng.gen_range(1..=3usize);
        let n = rng.gen_range(1..=5u64);
        match step_report(&r(p, q), m, n) {
            Ok(s) => {
                let conds = [s.cond_i, s.cond_ii, s.cond_iii, s.cond_iv];
                if conds.iter().any(|c| *c != conds[0]) {
                    disagreements.push((p, q, m, n));
                }
            }
            Err(Error::Invariant(_)) => disagreements.push((p, q, m, n)),
            Err(e) => return Err(format!("{p}/{q} m={m} N={n}: {e}")),
        }
    }
    ensure(disagreements.is_empty(), || {
        format!("disagreements at {disagreements:?}")
    })?;
    Ok(format!(
        "{checked} random fractions, conditions (i)-(iv) always agree"
    ))
}

fn ac7() -> Outcome {
    let mut count = 0;
    for (p, q) in reduced_fractions(500) {
        let (delta, ell) = (delta_index(p, q).unwrap(), ell_index(p, q).unwrap());
        ensure(delta <= ell, || {
            format!("{p}/{q}: Delta {delta} > ell {ell}")
        })?;
        count += 1;
    }
    let w = delta_witness(7, 54).unwrap();
    ensure(w.delta == 1 && w.reciprocal == BigInt::from(216), || {
        format!("7/54: {w:?}")
    })?;
    let mut fact = 1u64;
    for ell in 1..=3u64 {
        fact *= ell + 1;
        for k in 1..=3u64 {
            let (p, q) = (ell + 1, fact * k + 1);
            ensure(
                ell_index(p, q).unwrap() == ell && delta_index(p, q).unwrap() == ell,
                || format!("{p}/{q} misses Delta = ell = {ell}"),
            )?;
        }
    }
    Ok(format!(
        "Delta <= ell on {count} fractions, 7/54 -> 216, family attains Delta = ell"
    ))
}

fn ac8() -> Outcome {
    let mut hits = [0usize; 3];
    for (p, q) in reduced_fractions(300) {
        let greedy = expand(&r(p, q), 4).unwrap().terms;
        let forms = [
            closed_form_upsilon_divides_q(p, q, 4),
            closed_form_upsilon2_odd_q(p, q, 4),
            closed_form_p_divides_q_plus_1(p, q, 4),
        ];
        let admissible = [
            q % upsilon(p, q) == 0,
            q % 2 == 1 && upsilon(p, q) == 2,
            (q + 1) % p == 0,
        ];
        for (i, (form, ok)) in forms.into_iter().zip(admissible).enumerate() {
            ensure(form.is_ok() == ok, || {
                format!("{p}/{q}: admissibility of form {i}")
            })?;
            if let Ok(terms) = form {
                ensure(terms == greedy, || {
                    format!("{p}/{q}: form {i} gives {terms:?}")
                })?;
                hits[i] += 1;
            }
        }
    }
    Ok(format!(
        "formulas match on {} / {} / {} fractions",
        hits[0], hits[1], hits[2]
    ))
}

fn ac9() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for (p, q) in reduced_fractions(60) {
        if (q + 1) % p != 0 && !(q % 2 == 1 && upsilon(p, q) == 2) {
            continue;
        }
        for m in 1..=3 {
            let res =
                best_m_term(&r(p, q), m, DEFAULT_BUDGET).map_err(|e| format!("{p}/{q}: {e}"))?;
            let only: BTreeSet<Vec<BigInt>> = [res.greedy_terms.clone()].into();
            ensure(res.optimal_tuples == only, || {
                format!("{p}/{q} m = {m}: optimum {:?}", res.optimal_tuples)
            })?;
            count += 1;
        }
    }
    let t = within(start, AC9_LIMIT)?;
    Ok(format!(
        "{count} searches return exactly the greedy tuple, {t:?}"
    ))
}

/// All nondecreasing `m`-tuples with sum in `[S, theta)`, `S` the greedy sum,
/// each kept only if its sum is maximal. Every level enumerates its whole
/// admissible range; nothing is pruned by an improving incumbent.
fn naive_best(theta: &BigRational, m: usize) -> (BigRational, BTreeSet<Vec<BigInt>>) {
    let mut greedy_sum = BigRational::zero();
    for _ in 0..m {
        let a = ((theta - &greedy_sum).recip()).floor().to_integer() + 1;
        greedy_sum += BigRational::new(BigInt::one(), a);
    }
    let mut best = (greedy_sum.clone(), BTreeSet::new());
    let mut prefix = Vec::new();
    walk(
        theta,
        &greedy_sum,
        m,
        &BigRational::zero(),
        &mut prefix,
        &mut best,
    );
    best
}

fn walk(
    theta: &BigRational,
    floor_sum: &BigRational,
    m: usize,
    partial: &BigRational,
    prefix: &mut Vec<BigInt>,
    best: &mut (BigRational, BTreeSet<Vec<BigInt>>),
) {
    let remaining = m - prefix.len();
    if remaining == 0 {
        if partial >= floor_sum && partial < theta {
            if *partial > best.0 {
                best.0 = partial.clone();
                best.1.clear();
            }
            if *partial == best.0 {
                best.1.insert(prefix.clone());
            }
        }
        return;
    }
    // 1/x < theta - partial, x >= previous term, and remaining/x >= S - partial.
    let first_feasible: BigInt = (theta - partial).recip().floor().to_integer() + 1;
    let lo = prefix
        .last()
        .map_or(first_feasible.clone(), |x| x.clone().max(first_feasible));
    let slack = floor_sum - partial;
    if slack <= BigRational::zero() {
        return;
    }
    let hi = (BigRational::from_integer(remaining.into()) / slack)
        .floor()
        .to_integer();
    let mut x = lo;
    while x <= hi {
        let next = partial + BigRational::new(BigInt::one(), x.clone());
        prefix.push(x.clone());
        walk(theta, floor_sum, m, &next, prefix, best);
        prefix.pop();
        x += 1;
    }
}

fn ac10() -> Outcome {
    let mut count = 0;
    for (p, q) in reduced_fractions(40) {
        let theta = BigRational::new(p.into(), q.into());
        for m in 1..=3 {
            let (sum, tuples) = naive_best(&theta, m);
            let res =
                best_m_term(&r(p, q), m, DEFAULT_BUDGET).map_err(|e| format!("{p}/{q}: {e}"))?;
            let got = BigRational::new(
                res.optimal_sum.numer().clone(),
                res.optimal_sum.denom().clone(),
            );
            ensure(got == sum && res.optimal_tuples == tuples, || {
                format!(
                    "{p}/{q} m = {m}: search {:?} vs naive {tuples:?}",
                    res.optimal_tuples
                )
            })?;
            count += 1;
        }
    }
    Ok(format!(
        "{count} (fraction, m) pairs agree with naive enumeration"
    ))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("AC1 expansion fidelity", ac1),
        ("AC2 two-term threshold", ac2),
        ("AC3 counterexample factory", ac3),
        ("AC4 table reproduction", ac4),
        ("AC5 lemma sweeps", ac5),
        ("AC6 step-condition equivalence", ac6),
        ("AC7 Delta and ell", ac7),
        ("AC8 closed forms", ac8),
        ("AC9 best m-term families", ac9),
        ("AC10 naive oracle equivalence", ac10),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                println!("FAIL {name}: {detail}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
