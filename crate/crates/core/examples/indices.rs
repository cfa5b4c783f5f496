//! The residue `Upsilon`, the index `ell`, and the first integral-reciprocal step `Delta`.
//!
//! ```bash
//! cargo run --example indices
//! ```

use egyptian::greedy::{delta_witness, eventual_quadratic_recurrence, profile};

fn main() -> egyptian::Result<()> {
    for (p, q) in [(9, 28), (7, 54), (3, 7), (5, 121), (4, 25), (10, 17)] {
        let prof = profile(p, q)?;
        let w = delta_witness(p, q)?;
        println!(
            "{p}/{q}: Upsilon = {}, ell = {}, Delta = {} (1/e = {}), family {:?}",
            prof.upsilon, prof.ell, prof.delta, w.reciprocal, prof.family
        );
    }

    // (l+1) / ((l+1)! k + 1) is the extremal family with Delta = ell.
    let mut fact = 1;
    for ell in 1..=4u64 {
        fact *= ell + 1;
        let (p, q) = (ell + 1, fact + 1);
        let prof = profile(p, q)?;
        println!("{p}/{q}: ell = {}, Delta = {}", prof.ell, prof.delta);
    }

    println!(
        "9/28 settles into the quadratic recurrence: {}",
        eventual_quadratic_recurrence(9, 28, 9)?
    );
    Ok(())
}
