//! Powers of a periodic braid by square-and-multiply, keeping a conjugator.

use periodic_braids::periodic::power_conjugacy;
use periodic_braids::{NormalForm, Result};

fn main() -> Result<()> {
    let g = NormalForm::epsilon(20);
    for r in [1, 2, 7, 19, 1000] {
        let pc = power_conjugacy(&g, r)?;
        assert_eq!(pc.conjugator.apply(&pc.power)?, g.power(r)?);
        println!("r = {r:>4}: {} rounds, power {}", pc.rounds, pc.power);
    }
    let pc = power_conjugacy(&NormalForm::epsilon(13), 12)?;
    println!("epsilon^12 in B_13 = {}", pc.power);
    Ok(())
}
