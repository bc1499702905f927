//! Hide a periodic braid behind a random conjugator and recover a super
//! summit representative by cycling and decycling.

use periodic_braids::conjugacy::super_summit_conjugate;
use periodic_braids::oracle::random_conjugator;
use periodic_braids::{NormalForm, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 12;
    let target = NormalForm::epsilon_power(n, 4)?;
    let x = random_conjugator(n, 20, &mut rng);
    let g = x.apply(&target)?;
    println!("hidden: inf {} sup {} len {}", g.inf(), g.sup(), g.len());

    let (h, y) = super_summit_conjugate(&g)?;
    assert_eq!(y.apply(&g)?, h);
    println!("summit: {h}");
    println!("conjugator has {} syllables", y.word().syllables().len());
    Ok(())
}
