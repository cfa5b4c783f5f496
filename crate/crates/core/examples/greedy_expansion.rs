//! Greedy Egyptian-fraction expansion with exact errors.
//!
//! ```bash
//! cargo run --example greedy_expansion -- 9 28 9
//! ```

use egyptian::greedy::{check_expansion_invariants, expand};
use egyptian::Rational;

fn main() -> egyptian::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (p, q, m) = match args[..] {
        [p, q, m] => (p, q, m as usize),
        _ => (9, 28, 9),
    };
    let theta = Rational::new(p, q)?;
    let exp = expand(&theta, m)?;
    check_expansion_invariants(&exp)?;

    println!("{theta} = sum of 1/a_n plus error");
    for (n, a) in exp.terms.iter().enumerate() {
        println!("  a_{:<2} = {a}", n + 1);
    }
    println!("partial sum  {}", exp.partial_sum());
    println!("error digits {}", exp.error.denom().to_string().len());
    match exp.recurrence_start() {
        Some(n) => println!("a_(k+1) = a_k^2 - a_k + 1 from n = {n}"),
        None => println!("no Sylvester-type recurrence on this prefix"),
    }
    Ok(())
}
