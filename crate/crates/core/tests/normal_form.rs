mod common;

use common::{nf, rng, s};
use periodic_braids::oracle::{braids_equal, random_word};
use periodic_braids::{BraidWord, NormalForm, Syllable};
use proptest::prelude::*;

#[test]
fn golden_normal_forms() {
    let eps3 = nf(6, "d^3 [4,2][4,3][2,1]");
    assert_eq!(eps3.inf(), 3);
    assert_eq!(eps3.factors(), &[s(6, &[&[4, 3, 2, 1]])]);
    assert_eq!(eps3, NormalForm::epsilon_power(6, 3).unwrap());

    let g3 = nf(6, "d^3 [4,3][5,2,1]");
    let sq = g3.mul(&g3).unwrap();
    assert_eq!(sq.inf(), 6);
    assert_eq!(sq.factors(), &[s(6, &[&[6, 1], &[5, 4, 3, 2]]), s(6, &[&[5, 2, 1]])]);
    assert_eq!(sq.to_string(), "d^6 [6,1][5,4,3,2] . [5,2,1]");

    for n in 2..10 {
        for a in [s(n, &[&[2, 1]]), s(n, &[&[n as i64, 1]])] {
            let w = BraidWord::from_syllables(n, [Syllable::Simple(a.clone()), Syllable::SimpleInverse(a)]).unwrap();
            assert!(w.normalize().unwrap().is_identity());
        }
    }
}

#[test]
fn epsilon_powers() {
    for n in 3..16 {
        let e = NormalForm::epsilon(n);
        let mut acc = NormalForm::identity(n);
        for _ in 0..n - 1 {
            acc = acc.mul(&e).unwrap();
        }
        assert_eq!(acc, NormalForm::delta_power(n, n as i64));
        assert_eq!(e.power(n as i64 - 1).unwrap(), acc);
    }
    let e3 = NormalForm::epsilon(3);
    assert_eq!(e3.mul(&e3).unwrap(), NormalForm::delta_power(3, 3));
    assert_eq!(NormalForm::epsilon(13).power(12).unwrap(), NormalForm::delta_power(13, 13));
    let alpha = nf(13, "d^3 [13,10][12,11][6,4]");
    assert_eq!(alpha.power(4).unwrap(), NormalForm::delta_power(13, 13));
}

#[test]
fn inverse_power_identities() {
    let n = 6;
    assert!(NormalForm::identity(n).inverse().unwrap().is_identity());
    let d_inv = NormalForm::delta_power(n, 1).inverse().unwrap();
    assert_eq!((d_inv.inf(), d_inv.len()), (-1, 0));
    let e = NormalForm::epsilon(n);
    assert!(e.mul(&e.inverse().unwrap()).unwrap().is_identity());
    assert!(e.power(0).unwrap().is_identity());
    assert_eq!(NormalForm::delta_power(n, 1).power(5).unwrap(), NormalForm::delta_power(n, 5));
}

#[test]
fn exponent_sums_and_permutations() {
    for n in 2..12 {
        assert_eq!(NormalForm::identity(n).exponent_sum().unwrap(), 0);
        assert_eq!(NormalForm::delta_power(n, 1).exponent_sum().unwrap(), n as i64 - 1);
        for k in -4..5 {
            assert_eq!(NormalForm::epsilon_power(n, k).unwrap().exponent_sum().unwrap(), k * n as i64);
        }
        let id: Vec<usize> = (0..n).collect();
        assert_eq!(NormalForm::identity(n).permutation(), id);
        let shift: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        assert_eq!(NormalForm::delta_power(n, 1).permutation(), shift);
    }
    for n in 3..14 {
        let q = n - 1;
        for d in (1..q).filter(|d| q % d == 0) {
            let p = NormalForm::epsilon_power(n, d as i64).unwrap().permutation();
            let fixed: Vec<usize> = (0..n).filter(|&i| p[i] == i).collect();
            assert_eq!(fixed, vec![0], "n={n} d={d}");
        }
    }
}

#[test]
fn normal_forms_agree_with_free_group_action() {
    let mut r = rng(11);
    for case in 0..300 {
        let n = 2 + case % 4;
        let w = random_word(n, 1 + case % 5, &mut r);
        let g = w.normalize().unwrap();
        assert!(braids_equal(&w, &g.to_word()), "{w} vs {g}");
    }
}

fn word_pair() -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2usize..=12, 0usize..=15, 0usize..=15, any::<u64>()).prop_map(|(n, lu, lv, seed)| {
        let mut r = rng(seed);
        (random_word(n, lu, &mut r), random_word(n, lv, &mut r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn homomorphism((u, v) in word_pair()) {
        let (x, y) = (u.normalize()?, v.normalize()?);
        let xy = u.concat(&v)?.normalize()?;
        prop_assert_eq!(&xy, &x.mul(&y)?);
        prop_assert!(xy.is_well_formed());
        for pair in xy.factors().windows(2) {
            prop_assert!(pair[0].right_complement().meet_left(&pair[1])?.is_identity());
        }
        prop_assert!(xy.inf() >= x.inf() + y.inf());
        prop_assert!(xy.sup() <= x.sup() + y.sup());
        prop_assert_eq!(xy.exponent_sum()?, x.exponent_sum()? + y.exponent_sum()?);
        let composed: Vec<usize> = x.permutation().iter().map(|&i| y.permutation()[i]).collect();
        prop_assert_eq!(xy.permutation(), composed);
    }

    #[test]
    fn exponent_sum_is_a_class_invariant((u, v) in word_pair()) {
        let g = u.normalize()?;
        let x = v.normalize()?;
        let conj = x.inverse()?.mul(&g)?.mul(&x)?;
        prop_assert_eq!(conj.exponent_sum()?, g.exponent_sum()?);
    }

    #[test]
    fn inverse_and_printing((u, _v) in word_pair()) {
        let g = u.normalize()?;
        prop_assert!(g.mul(&g.inverse()?)?.is_identity());
        prop_assert_eq!(u.inverse()?.normalize()?, g.inverse()?);
        prop_assert_eq!(nf(g.n(), &g.to_string()), g);
    }
}
