//! Artin's faithful action of `B_n` on the free group `F_n`, used as a
//! normal-form-free test of braid equality.

use crate::braidword::{BraidWord, Syllable};
use crate::ncp::SimpleElement;

/// A reduced word in the free group on `x_1, ..., x_n`; `-i` is `x_i^-1`.
pub type FreeWord = Vec<i32>;

fn free_mul(a: &[i32], b: &[i32]) -> FreeWord {
    let mut out = a.to_vec();
    for &x in b {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn free_inv(a: &[i32]) -> FreeWord {
    a.iter().rev().map(|&x| -x).collect()
}

/// Artin generators `s_i^{+-1}` as signed 1-based indices.
fn artin_band(t: usize, s: usize) -> Vec<i32> {
    // a_{t,s} = s_{t-1} ... s_{s+1} s_s s_{s+1}^-1 ... s_{t-1}^-1
    let mut w: Vec<i32> = (s + 1..t).rev().map(|i| i as i32).collect();
    w.push(s as i32);
    w.extend((s + 1..t).map(|i| -(i as i32)));
    w
}

pub(crate) fn artin_simple(a: &SimpleElement) -> Vec<i32> {
    let mut w = Vec::new();
    for c in a.cycles() {
        for pair in c.indices().windows(2) {
            w.extend(artin_band(pair[0], pair[1]));
        }
    }
    w
}

fn artin_delta(n: usize) -> Vec<i32> {
    (1..n).rev().map(|i| i as i32).collect()
}

/// The word in Artin generators of a braid word.
pub fn artin_word(w: &BraidWord) -> Vec<i32> {
    let n = w.n();
    let mut out = Vec::new();
    for s in w.syllables() {
        match s {
            Syllable::Delta(k) => {
                let d = if *k >= 0 { artin_delta(n) } else { free_inv(&artin_delta(n)) };
                for _ in 0..k.unsigned_abs() {
                    out.extend(&d);
                }
            }
            Syllable::Simple(a) => out.extend(artin_simple(a)),
            Syllable::SimpleInverse(a) => out.extend(free_inv(&artin_simple(a))),
        }
    }
    out
}

/// Images of `x_1, ..., x_n` under the automorphism of the free group
/// induced by the braid. Two braids are equal iff their images agree.
pub fn free_group_images(n: usize, artin: &[i32]) -> Vec<FreeWord> {
    let mut img: Vec<FreeWord> = (1..=n as i32).map(|i| vec![i]).collect();
    for &g in artin {
        let i = g.unsigned_abs() as usize - 1;
        let (a, b) = (img[i].clone(), img[i + 1].clone());
        if g > 0 {
            // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
            img[i] = free_mul(&free_mul(&a, &b), &free_inv(&a));
            img[i + 1] = a;
        } else {
            // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
            img[i] = b.clone();
            img[i + 1] = free_mul(&free_mul(&free_inv(&b), &a), &b);
        }
    }
    img
}

pub fn braid_images(w: &BraidWord) -> Vec<FreeWord> {
    free_group_images(w.n(), &artin_word(w))
}

/// Braid equality decided by the free-group action alone.
pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> bool {
    a.n() == b.n() && braid_images(a) == braid_images(b)
}
