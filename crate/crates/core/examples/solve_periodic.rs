//! Decide periodicity and find conjugators to d^k or epsilon^k.

use periodic_braids::cli::parse_braid;
use periodic_braids::periodic::{reduce_epsilon_divisor_traced, solve};
use periodic_braids::{NormalForm, Result};

fn main() -> Result<()> {
    let cases = [
        (13, "d^3 [13,10][12,11][6,4]"),
        (6, "s(1)^-1 d s(1)"),
        (6, "d^3 [4,2]"),
        (9, "[9,5] d^-2 [9,5]^-1"),
    ];
    for (n, text) in cases {
        let alpha = parse_braid(n, text)?.normalize()?;
        let verdict = solve(&alpha)?;
        let shown = match verdict.conjugator() {
            Some(c) => c.normal_form()?.to_string(),
            None => "-".into(),
        };
        println!(
            "B_{n} {text:<28} {:?} k={:?} gamma={shown} verified={}",
            verdict.kind(),
            verdict.exponent(),
            verdict.verify(&alpha)?
        );
    }

    let alpha = parse_braid(13, "d^3 [13,10][12,11][6,4]")?.normalize()?;
    let trace = reduce_epsilon_divisor_traced(&alpha, 3)?;
    for (i, round) in trace.rounds.iter().enumerate() {
        let moved: Vec<String> = round.cycles.iter().map(|c| c.to_string()).collect();
        println!("round {}: {}", i + 1, moved.join(" -> "));
    }
    println!("final block starts at {}", trace.start);
    assert_eq!(trace.conjugator.apply(&alpha)?, NormalForm::epsilon_power(13, 3)?);
    Ok(())
}
