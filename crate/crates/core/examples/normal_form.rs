//! Parse braid words and print their left normal forms.
//!
//! Run with `cargo run --example normal_form`.

use periodic_braids::cli::parse_braid;
use periodic_braids::{NormalForm, Result};

fn main() -> Result<()> {
    let inputs = [
        (6, "d^3 [4,2][4,3][2,1]"),
        (6, "d^3 [4,3][5,2,1] d^3 [4,3][5,2,1]"),
        (10, "[12,11,10,9]"),
        (5, "s(1) s(2) s(3) s(4)"),
        (5, "a(3,1)^-2 d^-1 [5,4]"),
    ];
    for (n, text) in inputs {
        let g = parse_braid(n, text)?.normalize()?;
        println!("B_{n}: {text:<36} -> {g}   (inf {}, sup {})", g.inf(), g.sup());
    }

    // epsilon^(n-1) = d^n, the smallest central element
    let eps = NormalForm::epsilon(7);
    println!("epsilon in B_7 = {eps}, epsilon^6 = {}", eps.power(6)?);
    Ok(())
}
