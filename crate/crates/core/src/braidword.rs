//! Braid words over the simple elements and their left normal forms.

use std::fmt;

use crate::error::{Error, Result};
use crate::ncp::SimpleElement;

/// One letter of a braid word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Syllable {
    Delta(i64),
    Simple(SimpleElement),
    SimpleInverse(SimpleElement),
}

impl Syllable {
    pub fn inverse(&self) -> Result<Syllable> {
        Ok(match self {
            Syllable::Delta(k) => Syllable::Delta(k.checked_neg().ok_or(Error::ExponentOverflow)?),
            Syllable::Simple(a) => Syllable::SimpleInverse(a.clone()),
            Syllable::SimpleInverse(a) => Syllable::Simple(a.clone()),
        })
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Syllable::Delta(1) => write!(f, "d"),
            Syllable::Delta(k) => write!(f, "d^{k}"),
            Syllable::Simple(a) => write!(f, "{a}"),
            Syllable::SimpleInverse(a) => write!(f, "{a}^-1"),
        }
    }
}

/// An unreduced word in delta powers, simple elements and their inverses.
///
/// Identity syllables and `d^0` are dropped on insertion and adjacent delta
/// powers are merged.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    syllables: Vec<Syllable>,
}

impl BraidWord {
    pub fn new(n: usize) -> Self {
        BraidWord {
            n,
            syllables: Vec::new(),
        }
    }

    pub fn from_syllables(n: usize, syllables: impl IntoIterator<Item = Syllable>) -> Result<Self> {
        let mut w = BraidWord::new(n);
        for s in syllables {
            w.push(s)?;
        }
        Ok(w)
    }

    pub fn delta_power(n: usize, k: i64) -> Self {
        let mut w = BraidWord::new(n);
        if k != 0 {
            w.syllables.push(Syllable::Delta(k));
        }
        w
    }

    pub fn simple(a: SimpleElement) -> Self {
        let mut w = BraidWord::new(a.n());
        if !a.is_identity() {
            w.syllables.push(Syllable::Simple(a));
        }
        w
    }

    pub fn simple_inverse(a: SimpleElement) -> Self {
        let mut w = BraidWord::new(a.n());
        if !a.is_identity() {
            w.syllables.push(Syllable::SimpleInverse(a));
        }
        w
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of syllables that are not delta powers.
    pub fn simple_length(&self) -> usize {
        self.syllables
            .iter()
            .filter(|s| !matches!(s, Syllable::Delta(_)))
            .count()
    }

    pub fn push(&mut self, s: Syllable) -> Result<()> {
        match s {
            Syllable::Delta(0) => {}
            Syllable::Delta(k) => {
                if let Some(Syllable::Delta(prev)) = self.syllables.last_mut() {
                    *prev = prev.checked_add(k).ok_or(Error::ExponentOverflow)?;
                    if *prev == 0 {
                        self.syllables.pop();
                    }
                } else {
                    self.syllables.push(Syllable::Delta(k));
                }
            }
            Syllable::Simple(ref a) | Syllable::SimpleInverse(ref a) => {
                if a.n() != self.n {
                    return Err(Error::StrandMismatch(self.n, a.n()));
                }
                if !a.is_identity() {
                    self.syllables.push(s);
                }
            }
        }
        Ok(())
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut w = self.clone();
        for s in &other.syllables {
            w.push(s.clone())?;
        }
        Ok(w)
    }

    pub fn inverse(&self) -> Result<BraidWord> {
        let mut w = BraidWord::new(self.n);
        for s in self.syllables.iter().rev() {
            w.push(s.inverse()?)?;
        }
        Ok(w)
    }

    /// The left normal form of the element this word represents.
    ///
    /// A right-to-left pass moves every delta power to the front (twisting
    /// the simple letters it passes) and rewrites `a^-1` as `d^-1 . *a`; the
    /// resulting positive factors are then appended one at a time.
    pub fn normalize(&self) -> Result<NormalForm> {
        let mut shift: i64 = 0;
        let mut positive = Vec::with_capacity(self.syllables.len());
        for s in self.syllables.iter().rev() {
            match s {
                Syllable::Delta(k) => {
                    shift = shift.checked_add(*k).ok_or(Error::ExponentOverflow)?;
                }
                Syllable::Simple(a) => positive.push(a.tau_power(shift)),
                Syllable::SimpleInverse(a) => {
                    positive.push(a.left_complement().tau_power(shift));
                    shift = shift.checked_sub(1).ok_or(Error::ExponentOverflow)?;
                }
            }
        }
        let mut nf = NormalForm::delta_power(self.n, shift);
        for a in positive.into_iter().rev() {
            nf.push_right_unchecked(a)?;
        }
        Ok(nf)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "e");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Left normal form `d^inf . a_1 ... a_len`: no factor is `e` or `d`, and
/// every consecutive pair is left-weighted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    n: usize,
    inf: i64,
    factors: Vec<SimpleElement>,
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        Self::delta_power(n, 0)
    }

    pub fn delta_power(n: usize, k: i64) -> Self {
        NormalForm {
            n,
            inf: k,
            factors: Vec::new(),
        }
    }

    pub fn from_simple(a: SimpleElement) -> Self {
        let mut nf = Self::identity(a.n());
        nf.push_right_unchecked(a)
            .expect("a simple element cannot overflow");
        nf
    }

    /// `epsilon = d . a_{2,1}`.
    pub fn epsilon(n: usize) -> Self {
        let mut nf = Self::delta_power(n, 1);
        nf.factors.push(SimpleElement::band_generator(n, 2, 1).expect("n >= 2"));
        nf.absorb_leading_deltas().expect("no overflow");
        nf
    }

    pub fn epsilon_power(n: usize, k: i64) -> Result<Self> {
        Self::epsilon(n).power(k)
    }

    /// Validates the normal-form invariants and builds the element.
    pub fn from_parts(n: usize, inf: i64, factors: Vec<SimpleElement>) -> Result<Self> {
        for a in &factors {
            if a.n() != n {
                return Err(Error::StrandMismatch(n, a.n()));
            }
        }
        let nf = NormalForm { n, inf, factors };
        if !nf.is_well_formed() {
            return Err(Error::InternalInconsistency(format!(
                "factors of {nf} are not a left normal form"
            )));
        }
        Ok(nf)
    }

    /// For factor lists that are already left-weighted.
    pub(crate) fn from_parts_unchecked(n: usize, inf: i64, factors: Vec<SimpleElement>) -> Self {
        let nf = NormalForm { n, inf, factors };
        debug_assert!(nf.is_well_formed(), "not a normal form: {nf}");
        nf
    }

    pub fn is_well_formed(&self) -> bool {
        self.factors
            .iter()
            .all(|a| a.n() == self.n && !a.is_identity() && !a.is_delta())
            && self
                .factors
                .windows(2)
                .all(|w| w[0].is_left_weighted_with(&w[1]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf.saturating_add(self.factors.len() as i64)
    }

    /// Canonical length.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[SimpleElement] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// `Some(k)` iff the element is `d^k`.
    pub fn as_delta_power(&self) -> Option<i64> {
        self.factors.is_empty().then_some(self.inf)
    }

    pub fn to_word(&self) -> BraidWord {
        let mut w = BraidWord::delta_power(self.n, self.inf);
        for a in &self.factors {
            w.syllables.push(Syllable::Simple(a.clone()));
        }
        w
    }

    fn check_strands(&self, n: usize) -> Result<()> {
        if self.n == n {
            Ok(())
        } else {
            Err(Error::StrandMismatch(self.n, n))
        }
    }

    fn absorb_leading_deltas(&mut self) -> Result<()> {
        let lead = self.factors.iter().take_while(|a| a.is_delta()).count();
        if lead > 0 {
            self.factors.drain(..lead);
            self.inf = self.inf.checked_add(lead as i64).ok_or(Error::ExponentOverflow)?;
        }
        Ok(())
    }

    /// Appends a factor and restores left-weightedness by a right-to-left
    /// sweep; stops as soon as a pair is already left-weighted.
    pub(crate) fn push_right_unchecked(&mut self, a: SimpleElement) -> Result<()> {
        if a.is_identity() {
            return Ok(());
        }
        self.factors.push(a);
        let mut i = self.factors.len() - 1;
        while i > 0 {
            match self.factors[i - 1].left_weight_unchecked(&self.factors[i]) {
                None => break,
                Some((x, y)) => {
                    self.factors[i - 1] = x;
                    if y.is_identity() {
                        self.factors.remove(i);
                    } else {
                        self.factors[i] = y;
                    }
                }
            }
            i -= 1;
        }
        self.absorb_leading_deltas()
    }

    /// Prepends a factor (placed right after the delta power) and sweeps
    /// left to right.
    pub(crate) fn push_left_unchecked(&mut self, a: SimpleElement) -> Result<()> {
        if a.is_identity() {
            return Ok(());
        }
        self.factors.insert(0, a);
        let mut i = 0;
        while i + 1 < self.factors.len() {
            match self.factors[i].left_weight_unchecked(&self.factors[i + 1]) {
                None => break,
                Some((x, y)) => {
                    self.factors[i] = x;
                    if y.is_identity() {
                        self.factors.remove(i + 1);
                        break;
                    }
                    self.factors[i + 1] = y;
                }
            }
            i += 1;
        }
        self.absorb_leading_deltas()
    }

    /// `self . a`
    pub fn mul_simple_right(&mut self, a: &SimpleElement) -> Result<()> {
        self.check_strands(a.n())?;
        self.push_right_unchecked(a.clone())
    }

    /// `self . a^-1 = self . a* . d^-1`
    pub fn mul_simple_inverse_right(&mut self, a: &SimpleElement) -> Result<()> {
        self.check_strands(a.n())?;
        if a.is_identity() {
            return Ok(());
        }
        self.push_right_unchecked(a.right_complement())?;
        self.mul_delta_right(-1)
    }

    /// `a . self`
    pub fn mul_simple_left(&mut self, a: &SimpleElement) -> Result<()> {
        self.check_strands(a.n())?;
        self.push_left_unchecked(a.tau_power(self.inf))
    }

    /// `a^-1 . self = d^-1 . *a . self`
    pub fn mul_simple_inverse_left(&mut self, a: &SimpleElement) -> Result<()> {
        self.check_strands(a.n())?;
        if a.is_identity() {
            return Ok(());
        }
        self.push_left_unchecked(a.left_complement().tau_power(self.inf))?;
        self.inf = self.inf.checked_sub(1).ok_or(Error::ExponentOverflow)?;
        Ok(())
    }

    /// `self . d^k`
    pub fn mul_delta_right(&mut self, k: i64) -> Result<()> {
        self.inf = self.inf.checked_add(k).ok_or(Error::ExponentOverflow)?;
        if k.rem_euclid(self.n as i64) != 0 {
            for a in &mut self.factors {
                *a = a.tau_power(k);
            }
        }
        Ok(())
    }

    /// `d^k . self`
    pub fn mul_delta_left(&mut self, k: i64) -> Result<()> {
        self.inf = self.inf.checked_add(k).ok_or(Error::ExponentOverflow)?;
        Ok(())
    }

    /// `tau^k(self) = d^-k . self . d^k`
    pub fn tau_power(&self, k: i64) -> NormalForm {
        NormalForm {
            n: self.n,
            inf: self.inf,
            factors: self.factors.iter().map(|a| a.tau_power(k)).collect(),
        }
    }

    pub fn mul(&self, other: &NormalForm) -> Result<NormalForm> {
        self.check_strands(other.n)?;
        // Prepending may absorb deltas, so each factor is twisted by the
        // current infimum rather than by `other.inf`.
        let mut out = other.clone();
        for a in self.factors.iter().rev() {
            out.push_left_unchecked(a.tau_power(out.inf))?;
        }
        out.inf = out.inf.checked_add(self.inf).ok_or(Error::ExponentOverflow)?;
        Ok(out)
    }

    pub fn inverse(&self) -> Result<NormalForm> {
        self.to_word().inverse()?.normalize()
    }

    /// `self^k` by repeated squaring.
    pub fn power(&self, k: i64) -> Result<NormalForm> {
        let (mut base, mut e) = if k < 0 {
            (self.inverse()?, k.checked_neg().ok_or(Error::ExponentOverflow)? as u64)
        } else {
            (self.clone(), k as u64)
        };
        let mut acc = NormalForm::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Exponent sum in the band generators.
    pub fn exponent_sum(&self) -> Result<i64> {
        let atoms: i64 = self.factors.iter().map(|a| a.atom_length() as i64).sum();
        self.inf
            .checked_mul(self.n as i64 - 1)
            .and_then(|x| x.checked_add(atoms))
            .ok_or(Error::ExponentOverflow)
    }

    /// Induced permutation, 0-based, acting on the right: point `i` goes to
    /// `permutation()[i]`.
    pub fn permutation(&self) -> Vec<usize> {
        let n = self.n;
        let shift = self.inf.rem_euclid(n as i64) as usize;
        (0..n)
            .map(|i| {
                self.factors
                    .iter()
                    .fold((i + shift) % n, |p, a| a.permutation()[p])
            })
            .collect()
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        let mut first = true;
        match self.inf {
            0 => {}
            1 => {
                write!(f, "d")?;
                first = false;
            }
            u => {
                write!(f, "d^{u}")?;
                first = false;
            }
        }
        for (i, a) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " . ")?;
            } else if !first {
                write!(f, " ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, cycles: &[&[i64]]) -> SimpleElement {
        SimpleElement::from_cycles(n, cycles).unwrap()
    }

    fn word(n: usize, syl: Vec<Syllable>) -> BraidWord {
        BraidWord::from_syllables(n, syl).unwrap()
    }

    #[test]
    fn epsilon_cubed_in_b6() {
        let w = word(
            6,
            vec![
                Syllable::Delta(3),
                Syllable::Simple(s(6, &[&[4, 2]])),
                Syllable::Simple(s(6, &[&[4, 3]])),
                Syllable::Simple(s(6, &[&[2, 1]])),
            ],
        );
        let nf = w.normalize().unwrap();
        assert_eq!(nf.inf(), 3);
        assert_eq!(nf.factors(), &[s(6, &[&[4, 3, 2, 1]])]);
        assert_eq!(nf, NormalForm::epsilon_power(6, 3).unwrap());
        assert_eq!(nf.to_string(), "d^3 [4,3,2,1]");
    }

    #[test]
    fn g3_squared() {
        let g3 = NormalForm::from_parts(6, 3, vec![s(6, &[&[4, 3], &[5, 2, 1]])]).unwrap();
        let sq = g3.power(2).unwrap();
        assert_eq!(sq.inf(), 6);
        assert_eq!(sq.factors(), &[s(6, &[&[6, 1], &[5, 4, 3, 2]]), s(6, &[&[5, 2, 1]])]);
        assert_eq!(sq.to_string(), "d^6 [6,1][5,4,3,2] . [5,2,1]");
    }

    #[test]
    fn simple_times_inverse() {
        for cycles in [&[&[3i64, 1][..]][..], &[&[4, 3, 2][..], &[5, 1][..]][..]] {
            let a = SimpleElement::from_cycles(5, cycles).unwrap();
            let w = word(5, vec![Syllable::Simple(a.clone()), Syllable::SimpleInverse(a.clone())]);
            assert!(w.normalize().unwrap().is_identity());
            let w = word(5, vec![Syllable::SimpleInverse(a.clone()), Syllable::Simple(a)]);
            assert!(w.normalize().unwrap().is_identity());
        }
    }

    #[test]
    fn epsilon_power_is_central_delta_power() {
        for n in 3..15 {
            let e = NormalForm::epsilon(n);
            assert_eq!(e.power(n as i64 - 1).unwrap(), NormalForm::delta_power(n, n as i64));
        }
        let eps = NormalForm::epsilon(3);
        assert_eq!(eps.mul(&eps).unwrap(), NormalForm::delta_power(3, 3));
    }

    #[test]
    fn thirteen_strand_fourth_power() {
        let a = NormalForm::from_parts(13, 3, vec![s(13, &[&[13, 10], &[12, 11], &[6, 4]])]).unwrap();
        assert_eq!(a.power(4).unwrap(), NormalForm::delta_power(13, 13));
    }

    #[test]
    fn inverse_and_identity() {
        assert!(NormalForm::identity(4).inverse().unwrap().is_identity());
        assert_eq!(
            NormalForm::delta_power(5, 1).inverse().unwrap(),
            NormalForm::delta_power(5, -1)
        );
        let eps = NormalForm::epsilon(6);
        assert!(eps.mul(&eps.inverse().unwrap()).unwrap().is_identity());
        assert!(eps.power(0).unwrap().is_identity());
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(NormalForm::identity(7).exponent_sum().unwrap(), 0);
        assert_eq!(NormalForm::delta_power(7, 1).exponent_sum().unwrap(), 6);
        for k in -4..5 {
            assert_eq!(
                NormalForm::epsilon_power(7, k).unwrap().exponent_sum().unwrap(),
                7 * k
            );
        }
    }

    #[test]
    fn permutations() {
        assert_eq!(NormalForm::identity(4).permutation(), vec![0, 1, 2, 3]);
        assert_eq!(NormalForm::delta_power(4, 1).permutation(), vec![1, 2, 3, 0]);
        // epsilon^d fixes exactly the first strand when d | n-1, 0 < d < n-1
        for (n, d) in [(7usize, 2i64), (7, 3), (13, 4), (10, 3)] {
            let p = NormalForm::epsilon_power(n, d).unwrap().permutation();
            let fixed: Vec<usize> = (0..n).filter(|&i| p[i] == i).collect();
            assert_eq!(fixed, vec![0], "n={n} d={d}");
        }
    }

    #[test]
    fn overflow_is_reported() {
        let big = NormalForm::delta_power(4, i64::MAX);
        assert_eq!(big.mul(&NormalForm::delta_power(4, 1)), Err(Error::ExponentOverflow));
        assert_eq!(NormalForm::epsilon(4).power(i64::MIN), Err(Error::ExponentOverflow));
    }
}
