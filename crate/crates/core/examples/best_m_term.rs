//! Exact `m`-term search by branch and bound, with a node budget.
//!
//! ```bash
//! cargo run --release --example best_m_term -- 4 13 3
//! ```

use egyptian::underapprox::{best_m_term, muirhead_certificate, DEFAULT_BUDGET};
use egyptian::{Error, Rational};

fn main() -> egyptian::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (p, q, m) = match args[..] {
        [p, q, m] => (p, q, m as usize),
        _ => (4, 13, 3),
    };
    let theta = Rational::new(p, q)?;
    for k in 1..=m {
        let res = best_m_term(&theta, k, DEFAULT_BUDGET)?;
        println!(
            "m = {k}: greedy {:?}, best {:?}, greedy optimal: {}, unique: {}, nodes: {}",
            res.greedy_terms, res.optimal_tuples, res.greedy_is_best, res.unique, res.nodes
        );
        for t in res.competitors() {
            let dominated = muirhead_certificate(t, &res.greedy_terms)?;
            println!("  {t:?} dominated by greedy products: {dominated}");
        }
    }

    match best_m_term(&theta, 4, 10) {
        Err(Error::Inconclusive { budget }) => println!("m = 4 with budget {budget}: inconclusive"),
        other => println!("m = 4 with budget 10: {other:?}"),
    }
    Ok(())
}
