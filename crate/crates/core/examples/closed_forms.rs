//! Closed-form greedy terms for the three admissible shapes of `p/q`,
//! compared with the step-by-step expansion.
//!
//! ```bash
//! cargo run --example closed_forms
//! ```

use egyptian::greedy::{
    closed_form_p_divides_q_plus_1, closed_form_upsilon2_odd_q, closed_form_upsilon_divides_q,
    expand,
};
use egyptian::Rational;

fn main() -> egyptian::Result<()> {
    let cases: [(&str, u64, u64, fn(u64, u64, usize) -> egyptian::Result<_>); 3] = [
        ("Upsilon | q", 5, 9, closed_form_upsilon_divides_q),
        ("Upsilon = 2, q odd", 5, 13, closed_form_upsilon2_odd_q),
        ("p | q + 1", 4, 23, closed_form_p_divides_q_plus_1),
    ];
    for (name, p, q, form) in cases {
        let closed = form(p, q, 4)?;
        let greedy = expand(&Rational::new(p, q)?, 4)?.terms;
        println!("{name:<20} {p}/{q}");
        println!("  closed form {closed:?}");
        println!("  greedy      {greedy:?}");
        assert_eq!(closed, greedy);
    }
    // Outside its shape a formula refuses.
    println!(
        "3/7 under `p | q + 1`: {}",
        closed_form_p_divides_q_plus_1(3, 7, 3).unwrap_err()
    );
    Ok(())
}
