#![allow(dead_code)]

use periodic_braids::cli::parse_braid;
use periodic_braids::{NormalForm, SimpleElement};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn s(n: usize, cycles: &[&[i64]]) -> SimpleElement {
    SimpleElement::from_cycles(n, cycles).unwrap()
}

pub fn nf(n: usize, text: &str) -> NormalForm {
    parse_braid(n, text).unwrap().normalize().unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
