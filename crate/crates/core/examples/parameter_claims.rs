//! The fractional-part claims and root intervals behind the choice of `v`.
//!
//! ```bash
//! cargo run --release --example parameter_claims
//! ```

use egyptian::counterexample::{check_fractional_claims, check_root_interval, ResidueCase};

fn main() -> egyptian::Result<()> {
    for case in ResidueCase::ALL {
        let j = case.first_j() + 3;
        let s = case.s_for_j(j)?;
        println!(
            "k = 4j + {} with j = {j}: s = {s}, v = {}, floor argument {}, claimed fraction {}",
            case.residue(),
            case.v(s),
            case.floor_argument(j, s),
            case.claimed_fraction(j, s)
        );
        println!("  {}", check_fractional_claims(case, 300)?.summary_line());
        println!("  {}", check_root_interval(case, 200)?.summary_line());
    }
    Ok(())
}
