//! Translation numbers of periodic braids and the exponent transfer between
//! the two Garside structures.

use periodic_braids::periodic::{minimal_power_exponent, classify_pc, t_inf_periodic};
use periodic_braids::{PeriodKind, Rational, Result};

fn mark(p: i64, q: i64, m: i64) -> Result<&'static str> {
    let t = Rational::new(p, q);
    Ok(match classify_pc(*t.numer(), *t.denom(), m)? {
        (true, true) => "**",
        (true, false) => "*",
        _ => "",
    })
}

fn main() -> Result<()> {
    println!("t_inf(epsilon in B_10) = {}", t_inf_periodic(PeriodKind::Epsilon, 1, 10)?);
    println!("t_inf(d^5 in B_7)      = {}", t_inf_periodic(PeriodKind::Delta, 5, 7)?);
    println!("transfer exponent for (2, 9, 2): {}", minimal_power_exponent(2, 9, 2)?);

    println!("{:>3} {:>8} {:>8} {:>8} {:>8}", "k", "2k/9", "2k/10", "10k/9", "11k/10");
    for k in 1..=9 {
        println!(
            "{k:>3} {:>8} {:>8} {:>8} {:>8}",
            mark(2 * k, 9, 2)?,
            mark(2 * k, 10, 2)?,
            mark(10 * k, 9, 10)?,
            mark(11 * k, 10, 11)?
        );
    }
    Ok(())
}
