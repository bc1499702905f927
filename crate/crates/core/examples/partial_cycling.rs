//! Partial cycling of epsilon^3 in B_6 by different prefixes.

use periodic_braids::conjugacy::partial_cycling;
use periodic_braids::{NormalForm, Result, SimpleElement};

fn main() -> Result<()> {
    let g = NormalForm::epsilon_power(6, 3)?;
    println!("g = {g}");
    for prefix in [&[4, 1][..], &[4, 2], &[3, 2, 1], &[4, 3, 2, 1]] {
        let b = SimpleElement::from_cycles(6, &[prefix])?;
        let (h, x) = partial_cycling(&g, &b)?;
        assert_eq!(x.apply(&g)?, h);
        println!("by {b:<10} -> {h}   (canonical length {})", h.len());
    }
    Ok(())
}
