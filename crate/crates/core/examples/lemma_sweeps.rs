//! Finite sweeps of the floor inequalities, with the known exceptions.
//!
//! ```bash
//! cargo run --release --example lemma_sweeps -- 300
//! ```

use egyptian::lemmas::{
    lp12_sides, survivors, tie_bridge_check, verify_lp1, verify_lp11, verify_lp12, verify_lp50,
    EllCase,
};

fn main() -> egyptian::Result<()> {
    let q_max = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(300);
    let reports = [
        verify_lp1(q_max)?,
        verify_lp11(q_max)?,
        verify_lp50(q_max)?,
        verify_lp12()?,
        tie_bridge_check(q_max.max(61))?,
    ];
    for rep in &reports {
        println!("{}", rep.summary_line());
        for note in &rep.notes {
            println!("  {note}");
        }
    }

    let (left, right) = lp12_sides(155);
    println!("s = 155 is an equality: {left} = {right}");

    for case in EllCase::ALL {
        println!("{case:?}: survivors {:?}", survivors(case));
    }
    Ok(())
}
