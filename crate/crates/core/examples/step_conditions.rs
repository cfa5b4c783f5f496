//! When is the greedy term as good as the best fraction `N/b` with `N` fixed?
//! Prints `Phi` of the running error and the four equivalent conditions.
//!
//! ```bash
//! cargo run --example step_conditions -- 3 7
//! ```

use egyptian::greedy::{expand, phi, step_report};
use egyptian::Rational;

fn main() -> egyptian::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (p, q) = match args[..] {
        [p, q] => (p, q),
        _ => (3, 7),
    };
    let theta = Rational::new(p, q)?;
    let exp = expand(&theta, 3)?;
    println!("{theta}: greedy {:?}", exp.terms);

    let mut e = theta.clone();
    for (m, a) in exp.terms.iter().enumerate() {
        println!("m = {}: Phi(e_{}) = {:.4}", m + 1, m, phi(&e)?.to_f64());
        for n in 1..=4 {
            let s = step_report(&theta, m + 1, n)?;
            println!(
                "  N = {n}: b = {:<12} greedy as good: {:<5} (i..iv = {} {} {} {})",
                s.b_m.to_string(),
                s.greedy_matches(),
                s.cond_i,
                s.cond_ii,
                s.cond_iii,
                s.cond_iv
            );
        }
        e = e - Rational::unit(a)?;
    }
    Ok(())
}
