//! For every `k >= 4`, a fraction with residue `Upsilon = k` whose greedy
//! pair is beaten by another two-term sum.
//!
//! ```bash
//! cargo run --example counterexamples -- 4 30
//! ```

use egyptian::counterexample::{construct, TABLE_K_2_MOD_4, TABLE_K_3_MOD_4};

fn main() -> egyptian::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (lo, hi) = match args[..] {
        [lo, hi] => (lo, hi),
        _ => (4, 30),
    };
    println!(
        "{:>4} {:>4} {:>14} {:>22} {:>22}",
        "k", "v", "theta", "greedy", "beating"
    );
    for k in lo.max(4)..=hi {
        let c = construct(k)?;
        println!(
            "{k:>4} {:>4} {:>14} {:>22} {:>22}",
            c.v,
            c.theta().to_string(),
            format!("({}, {})", c.greedy_pair.0, c.greedy_pair.1),
            format!("({}, {})", c.beating_pair.0, c.beating_pair.1),
        );
    }
    println!("tabulated k = 2 mod 4: {TABLE_K_2_MOD_4:?}");
    println!("tabulated k = 3 mod 4: {TABLE_K_3_MOD_4:?}");
    Ok(())
}
