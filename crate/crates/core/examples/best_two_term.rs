//! Best two-term underapproximation, and where greedy stops being optimal.
//!
//! ```bash
//! cargo run --release --example best_two_term
//! ```

use egyptian::underapprox::{best_two_term, na23_bounds_check, verify_threshold_sweep};
use egyptian::Rational;

fn main() -> egyptian::Result<()> {
    for (p, q) in [(3, 7), (10, 17), (5, 16), (7, 15)] {
        let theta = Rational::new(p, q)?;
        let res = best_two_term(&theta)?;
        println!(
            "{theta}: greedy {:?} sum {}, optimum {:?} sum {}",
            res.greedy_terms, res.greedy_sum, res.optimal_tuples, res.optimal_sum
        );
        for t in res.competitors() {
            println!(
                "  competitor {t:?} within bounds: {}",
                na23_bounds_check(&theta, &t[0], &t[1])?
            );
        }
    }

    let sweep = verify_threshold_sweep(120)?;
    println!("{}", sweep.report.summary_line());
    for note in &sweep.report.notes {
        println!("  {note}");
    }
    Ok(())
}
