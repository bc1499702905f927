//! Cycling, decycling, partial cycling and super summit reduction, each
//! returning the conjugator that realises it.

use std::fmt;

use crate::braidword::{BraidWord, NormalForm, Syllable};
use crate::error::{Error, Result};
use crate::ncp::SimpleElement;

/// A lazily evaluated conjugating element `x`; applying it to `g` gives
/// `x^-1 . g . x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Conjugator {
    word: BraidWord,
}

impl Conjugator {
    pub fn identity(n: usize) -> Self {
        Conjugator {
            word: BraidWord::new(n),
        }
    }

    pub fn from_word(word: BraidWord) -> Self {
        Conjugator { word }
    }

    pub fn simple(a: SimpleElement) -> Self {
        Conjugator {
            word: BraidWord::simple(a),
        }
    }

    pub fn simple_inverse(a: SimpleElement) -> Self {
        Conjugator {
            word: BraidWord::simple_inverse(a),
        }
    }

    pub fn delta_power(n: usize, k: i64) -> Self {
        Conjugator {
            word: BraidWord::delta_power(n, k),
        }
    }

    pub fn n(&self) -> usize {
        self.word.n()
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn into_word(self) -> BraidWord {
        self.word
    }

    pub fn is_trivial_word(&self) -> bool {
        self.word.is_empty()
    }

    /// `x^-1 . g . x`, one syllable at a time.
    pub fn apply(&self, g: &NormalForm) -> Result<NormalForm> {
        if g.n() != self.n() {
            return Err(Error::StrandMismatch(self.n(), g.n()));
        }
        let mut h = g.clone();
        for s in self.word.syllables() {
            match s {
                Syllable::Delta(k) => h = h.tau_power(*k),
                Syllable::Simple(a) => {
                    h.mul_simple_inverse_left(a)?;
                    h.mul_simple_right(a)?;
                }
                Syllable::SimpleInverse(a) => {
                    h.mul_simple_left(a)?;
                    h.mul_simple_inverse_right(a)?;
                }
            }
        }
        Ok(h)
    }

    /// `self . other`: conjugating by the result is conjugating by `self`
    /// and then by `other`.
    pub fn compose(&self, other: &Conjugator) -> Result<Conjugator> {
        Ok(Conjugator {
            word: self.word.concat(&other.word)?,
        })
    }

    pub fn invert(&self) -> Result<Conjugator> {
        Ok(Conjugator {
            word: self.word.inverse()?,
        })
    }

    pub fn normal_form(&self) -> Result<NormalForm> {
        self.word.normalize()
    }
}

impl fmt::Display for Conjugator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

/// `c(g) = d^u a_2 ... a_l tau^-u(a_1)`, conjugated by `tau^-u(a_1)`.
pub fn cycling(g: &NormalForm) -> Result<(NormalForm, Conjugator)> {
    let n = g.n();
    let Some(first) = g.factors().first() else {
        return Ok((g.clone(), Conjugator::identity(n)));
    };
    let b = first.tau_power(-g.inf());
    let mut h = NormalForm::from_parts_unchecked(n, g.inf(), g.factors()[1..].to_vec());
    h.push_right_unchecked(b.clone())?;
    Ok((h, Conjugator::simple(b)))
}

/// `d(g) = d^u tau^u(a_l) a_1 ... a_{l-1}`, conjugated by `a_l^-1`.
pub fn decycling(g: &NormalForm) -> Result<(NormalForm, Conjugator)> {
    let n = g.n();
    let Some(last) = g.factors().last() else {
        return Ok((g.clone(), Conjugator::identity(n)));
    };
    let l = g.len();
    let mut h = NormalForm::from_parts_unchecked(n, g.inf(), g.factors()[..l - 1].to_vec());
    h.push_left_unchecked(last.tau_power(g.inf()))?;
    Ok((h, Conjugator::simple_inverse(last.clone())))
}

/// Conjugation by `tau^-u(b)` for a prefix `b` of the first factor:
/// `d^u (b^-1 a_1) a_2 ... a_l tau^-u(b)`.
pub fn partial_cycling(g: &NormalForm, b: &SimpleElement) -> Result<(NormalForm, Conjugator)> {
    let n = g.n();
    if b.n() != n {
        return Err(Error::StrandMismatch(n, b.n()));
    }
    if b.is_identity() {
        return Ok((g.clone(), Conjugator::identity(n)));
    }
    let Some(first) = g.factors().first() else {
        return Err(Error::NotAPrefix);
    };
    if !b.is_prefix_of(first) {
        return Err(Error::NotAPrefix);
    }
    let moved = b.tau_power(-g.inf());
    let mut h = NormalForm::delta_power(n, g.inf());
    h.push_right_unchecked(b.left_quotient_unchecked(first))?;
    for a in &g.factors()[1..] {
        h.push_right_unchecked(a.clone())?;
    }
    h.push_right_unchecked(moved.clone())?;
    debug_assert!(h.inf() >= g.inf(), "partial cycling lowered the infimum");
    Ok((h, Conjugator::simple(moved)))
}

/// Reduces `g` to an element `h` of its super summit set and returns
/// `(h, y)` with `y^-1 . g . y = h`.
///
/// Cycling stops once `n - 1` consecutive cyclings fail to raise the
/// infimum; decycling then stops once `n - 1` consecutive decyclings fail to
/// lower the supremum. Canonical length at most one is already summit.
pub fn super_summit_conjugate(g: &NormalForm) -> Result<(NormalForm, Conjugator)> {
    let n = g.n();
    let window = n.saturating_sub(1).max(1);
    let mut h = g.clone();
    let mut y = BraidWord::new(n);

    let mut stale = 0;
    while stale < window && h.len() > 1 {
        let (c, x) = cycling(&h)?;
        stale = if c.inf() > h.inf() { 0 } else { stale + 1 };
        h = c;
        y = y.concat(x.word())?;
    }

    stale = 0;
    while stale < window && h.len() > 1 {
        let (d, x) = decycling(&h)?;
        stale = if d.sup() < h.sup() { 0 } else { stale + 1 };
        h = d;
        y = y.concat(x.word())?;
    }
    Ok((h, Conjugator::from_word(y)))
}

/// Reduces `g` to an element `h` of its super summit set and returns
/// `(h, x)` with `x^-1 . h . x = g`.
pub fn to_super_summit(g: &NormalForm) -> Result<(NormalForm, Conjugator)> {
    let (h, y) = super_summit_conjugate(g)?;
    Ok((h, y.invert()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, cycles: &[&[i64]]) -> SimpleElement {
        SimpleElement::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn apply_basics() {
        let g = NormalForm::epsilon_power(6, 2).unwrap();
        assert_eq!(Conjugator::identity(6).apply(&g).unwrap(), g);
        assert_eq!(Conjugator::delta_power(6, 1).apply(&g).unwrap(), g.tau_power(1));
        let x = Conjugator::simple(s(6, &[&[5, 3]]))
            .compose(&Conjugator::simple_inverse(s(6, &[&[6, 2, 1]])))
            .unwrap();
        let h = x.apply(&g).unwrap();
        assert_eq!(x.invert().unwrap().apply(&h).unwrap(), g);
    }

    #[test]
    fn cycling_epsilon_b6() {
        let g = NormalForm::epsilon(6);
        let (h, x) = cycling(&g).unwrap();
        assert_eq!(x.word().syllables(), &[Syllable::Simple(s(6, &[&[6, 1]]))]);
        assert_eq!(h, NormalForm::from_parts(6, 1, vec![s(6, &[&[6, 1]])]).unwrap());
        assert_eq!(x.apply(&g).unwrap(), h);
    }

    #[test]
    fn decycling_identity() {
        let g = BraidWord::from_syllables(
            7,
            vec![
                Syllable::Delta(2),
                Syllable::Simple(s(7, &[&[5, 3]])),
                Syllable::Simple(s(7, &[&[4, 2]])),
                Syllable::SimpleInverse(s(7, &[&[7, 1]])),
            ],
        )
        .unwrap()
        .normalize()
        .unwrap();
        let (h, x) = decycling(&g).unwrap();
        assert_eq!(x.apply(&g).unwrap(), h);
        assert!(h.sup() <= g.sup());
    }

    #[test]
    fn partial_cycling_b6_examples() {
        let eps3 = NormalForm::epsilon_power(6, 3).unwrap();
        let (h, x) = partial_cycling(&eps3, &s(6, &[&[4, 1]])).unwrap();
        assert_eq!(h.inf(), 3);
        assert_eq!(h.len(), 2);
        assert_eq!(x.apply(&eps3).unwrap(), h);

        let (g3, _) = partial_cycling(&eps3, &s(6, &[&[4, 2]])).unwrap();
        assert_eq!(g3, NormalForm::from_parts(6, 3, vec![s(6, &[&[4, 3], &[5, 2, 1]])]).unwrap());

        let (same, x) = partial_cycling(&eps3, &SimpleElement::identity(6)).unwrap();
        assert_eq!(same, eps3);
        assert!(x.is_trivial_word());

        assert_eq!(
            partial_cycling(&eps3, &s(6, &[&[6, 5]])).unwrap_err(),
            Error::NotAPrefix
        );
    }

    #[test]
    fn super_summit_of_delta_powers() {
        for k in -3..4 {
            let g = NormalForm::delta_power(5, k);
            let (h, x) = to_super_summit(&g).unwrap();
            assert_eq!(h, g);
            assert!(x.is_trivial_word());
        }
    }

    #[test]
    fn super_summit_recovers_epsilon_cube() {
        let eps3 = NormalForm::epsilon_power(13, 3).unwrap();
        let x = Conjugator::from_word(
            BraidWord::from_syllables(
                13,
                vec![
                    Syllable::Simple(s(13, &[&[9, 4, 2], &[13, 10]])),
                    Syllable::SimpleInverse(s(13, &[&[7, 6, 5]])),
                    Syllable::Simple(s(13, &[&[12, 1]])),
                    Syllable::Delta(2),
                    Syllable::SimpleInverse(s(13, &[&[11, 8, 3]])),
                ],
            )
            .unwrap(),
        );
        let g = x.apply(&eps3).unwrap();
        let (h, back) = to_super_summit(&g).unwrap();
        assert_eq!((h.inf(), h.len()), (3, 1));
        assert_eq!(back.apply(&h).unwrap(), g);
        let (h2, fwd) = super_summit_conjugate(&g).unwrap();
        assert_eq!(fwd.apply(&g).unwrap(), h2);
    }
}
