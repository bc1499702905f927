//! Brute-force ground truth for small braid groups.
//!
//! Everything here trades speed for independence: simple elements are
//! enumerated exhaustively, super summit sets of `epsilon^k` are found by
//! testing every candidate, and braid equality can be decided through
//! Artin's faithful action on the free group without touching normal forms.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::Rng;
use serde_json::{json, Value};

use crate::braidword::{BraidWord, NormalForm, Syllable};
use crate::conjugacy::{partial_cycling, Conjugator};
use crate::error::{Error, Result};
use crate::ncp::SimpleElement;

mod free_group;
pub mod suites;

pub use free_group::{artin_word, braid_images, braids_equal, free_group_images, FreeWord};
use free_group::artin_simple;

pub const ENUMERATION_LIMIT: usize = 14;
pub const SSS_LIMIT: usize = 10;

/// `C_n = binom(2n, n) / (n + 1)`, exact for `n <= 64`.
pub fn catalan(n: usize) -> u128 {
    assert!(n <= 64, "Catalan number C_{n} is out of range");
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Streams every simple element of `B_n` exactly once, identity first and
/// `d` last.
///
/// Simple elements are in bijection with Dyck words of semilength `n`: for
/// each point, write one up-step per element of its block if it opens the
/// block, then a down-step. Words are visited in lexicographic order with
/// the down-step first.
pub fn enumerate_simples(n: usize) -> Result<SimpleIter> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut word = Vec::with_capacity(2 * n);
    for _ in 0..n {
        word.push(true);
        word.push(false);
    }
    Ok(SimpleIter {
        n,
        word: Some(word),
    })
}

pub struct SimpleIter {
    n: usize,
    word: Option<Vec<bool>>,
}

impl Iterator for SimpleIter {
    type Item = SimpleElement;

    fn next(&mut self) -> Option<SimpleElement> {
        let word = self.word.take()?;
        let item = simple_from_dyck(self.n, &word);
        self.word = next_dyck(self.n, word);
        Some(item)
    }
}

fn simple_from_dyck(n: usize, word: &[bool]) -> SimpleElement {
    let mut labels = vec![0; n];
    // open blocks with the number of points they still need
    let mut open: Vec<(usize, usize)> = Vec::new();
    let mut ups = 0;
    let mut point = 0;
    for &step in word {
        if step {
            ups += 1;
            continue;
        }
        if ups > 0 {
            open.push((point, ups));
            ups = 0;
        }
        let top = open.last_mut().expect("Dyck word keeps a block open");
        labels[point] = top.0;
        top.1 -= 1;
        if top.1 == 0 {
            open.pop();
        }
        point += 1;
    }
    SimpleElement::from_labels(&labels)
}

fn next_dyck(n: usize, mut word: Vec<bool>) -> Option<Vec<bool>> {
    let mut ups_before = vec![0; word.len() + 1];
    for (i, &s) in word.iter().enumerate() {
        ups_before[i + 1] = ups_before[i] + s as usize;
    }
    let p = (0..word.len())
        .rev()
        .find(|&p| !word[p] && p > 0 && ups_before[p] < n)?;
    word[p] = true;
    let ups = ups_before[p] + 1;
    let downs = p + 1 - ups;
    let mut balance = ups - downs;
    let mut left = n - ups;
    let mut i = p + 1;
    while i < word.len() {
        if balance > 0 {
            word[i] = false;
            balance -= 1;
        } else {
            word[i] = true;
            word[i + 1] = false;
            left -= 1;
            i += 1;
        }
        i += 1;
    }
    debug_assert_eq!(left, 0);
    Some(word)
}

/// A uniformly random simple element of `B_n` (cycle lemma on a shuffled
/// sequence of `n` up-steps and `n + 1` down-steps).
pub fn random_simple<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SimpleElement {
    let mut steps: Vec<bool> = (0..2 * n + 1).map(|i| i < n).collect();
    steps.shuffle(rng);
    let mut sum: i64 = 0;
    let mut min = 0;
    let mut at = 0;
    for (i, &s) in steps.iter().enumerate() {
        sum += if s { 1 } else { -1 };
        if sum < min {
            min = sum;
            at = i + 1;
        }
    }
    let len = steps.len();
    steps.rotate_left(at % len);
    steps.pop();
    simple_from_dyck(n, &steps)
}

/// A random word of `len` syllables: simple elements, their inverses and
/// occasional small delta powers.
pub fn random_word<R: Rng + ?Sized>(n: usize, len: usize, rng: &mut R) -> BraidWord {
    let mut w = BraidWord::new(n);
    for _ in 0..len {
        let s = match rng.gen_range(0..10) {
            0 => Syllable::Delta(rng.gen_range(-2..=2)),
            1..=5 => Syllable::Simple(random_simple(n, rng)),
            _ => Syllable::SimpleInverse(random_simple(n, rng)),
        };
        w.push(s).expect("strand counts agree");
    }
    w
}

/// A random conjugator with exactly `len` non-trivial simple syllables.
pub fn random_conjugator<R: Rng + ?Sized>(n: usize, len: usize, rng: &mut R) -> Conjugator {
    let mut w = BraidWord::new(n);
    while w.simple_length() < len {
        let a = random_simple(n, rng);
        let s = if rng.gen_bool(0.5) {
            Syllable::Simple(a)
        } else {
            Syllable::SimpleInverse(a)
        };
        w.push(s).expect("strand counts agree");
    }
    Conjugator::from_word(w)
}

/// Every left divisor of a simple element: the non-crossing refinements of
/// each of its blocks.
pub fn left_divisors(a: &SimpleElement) -> Result<Vec<SimpleElement>> {
    let n = a.n();
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, l) in a.labels().into_iter().enumerate() {
        blocks[l].push(i);
    }
    let mut out = vec![(0..n).collect::<Vec<usize>>()];
    for block in blocks.iter().filter(|b| b.len() >= 2) {
        let parts: Vec<Vec<usize>> = enumerate_simples(block.len())?.map(|s| s.labels()).collect();
        let mut next = Vec::with_capacity(out.len() * parts.len());
        for base in &out {
            for part in &parts {
                let mut l = base.clone();
                for (j, &p) in block.iter().enumerate() {
                    l[p] = block[part[j]];
                }
                next.push(l);
            }
        }
        out = next;
    }
    Ok(out.iter().map(|l| SimpleElement::from_labels(l)).collect())
}

/// Divisibility among the simple elements of a small `B_n`, computed from
/// free-group images of all pairwise products.
pub struct DivisorTable {
    pub simples: Vec<SimpleElement>,
    /// `product[i][j] = Some(k)` iff `simples[i] . simples[j] = simples[k]`.
    pub product: Vec<Vec<Option<usize>>>,
}

impl DivisorTable {
    pub fn new(n: usize) -> Result<Self> {
        if n > 7 {
            return Err(Error::TooLarge { n, limit: 7 });
        }
        let simples: Vec<SimpleElement> = enumerate_simples(n)?.collect();
        let words: Vec<Vec<i32>> = simples.iter().map(artin_simple).collect();
        let index: HashMap<Vec<FreeWord>, usize> = words
            .iter()
            .enumerate()
            .map(|(i, w)| (free_group_images(n, w), i))
            .collect();
        let product = words
            .iter()
            .map(|a| {
                words
                    .iter()
                    .map(|b| {
                        let ab: Vec<i32> = a.iter().chain(b).copied().collect();
                        index.get(&free_group_images(n, &ab)).copied()
                    })
                    .collect()
            })
            .collect();
        Ok(DivisorTable { simples, product })
    }

    pub fn index_of(&self, a: &SimpleElement) -> usize {
        self.simples.iter().position(|s| s == a).expect("simple of this table")
    }

    pub fn left_divides(&self, a: usize, b: usize) -> bool {
        self.product[a].contains(&Some(b))
    }

    pub fn right_divides(&self, a: usize, b: usize) -> bool {
        self.product.iter().any(|row| row[a] == Some(b))
    }

    fn extremum(&self, candidates: Vec<usize>, below: impl Fn(usize, usize) -> bool, top: bool) -> usize {
        *candidates
            .iter()
            .find(|&&c| {
                candidates
                    .iter()
                    .all(|&o| if top { below(o, c) } else { below(c, o) })
            })
            .expect("lattice has an extremum")
    }

    pub fn meet_left(&self, a: usize, b: usize) -> usize {
        let common: Vec<usize> = (0..self.simples.len())
            .filter(|&c| self.left_divides(c, a) && self.left_divides(c, b))
            .collect();
        self.extremum(common, |x, y| self.left_divides(x, y), true)
    }

    pub fn join_left(&self, a: usize, b: usize) -> usize {
        let common: Vec<usize> = (0..self.simples.len())
            .filter(|&c| self.left_divides(a, c) && self.left_divides(b, c))
            .collect();
        self.extremum(common, |x, y| self.left_divides(x, y), false)
    }

    pub fn meet_right(&self, a: usize, b: usize) -> usize {
        let common: Vec<usize> = (0..self.simples.len())
            .filter(|&c| self.right_divides(c, a) && self.right_divides(c, b))
            .collect();
        self.extremum(common, |x, y| self.right_divides(x, y), true)
    }

    pub fn join_right(&self, a: usize, b: usize) -> usize {
        let common: Vec<usize> = (0..self.simples.len())
            .filter(|&c| self.right_divides(a, c) && self.right_divides(b, c))
            .collect();
        self.extremum(common, |x, y| self.right_divides(x, y), false)
    }
}

// ---------------------------------------------------------------------------
// Super summit sets of epsilon powers

/// The super summit set of `epsilon^k` found by exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SssTable {
    pub n: usize,
    pub k: i64,
    pub elements: BTreeSet<NormalForm>,
}

impl SssTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &NormalForm) -> bool {
        self.elements.contains(g)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "k": self.k,
            "size": self.elements.len(),
            "elements": self.elements.iter().map(normal_form_json).collect::<Vec<_>>(),
        })
    }
}

/// `{"inf": u, "factors": [[[i, ...], ...], ...]}` with 1-based cycles.
pub fn normal_form_json(g: &NormalForm) -> Value {
    json!({
        "inf": g.inf(),
        "factors": g
            .factors()
            .iter()
            .map(|a| a.cycles().iter().map(|c| c.indices().to_vec()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

/// All `d^k a` with `a` simple of atom length `k` whose `(n-1)`-th power is
/// `d^{nk}`; for `0 < k < n-1` this is exactly the super summit set of
/// `epsilon^k`.
pub fn brute_sss_epsilon(n: usize, k: i64) -> Result<SssTable> {
    if n > SSS_LIMIT {
        return Err(Error::TooLarge { n, limit: SSS_LIMIT });
    }
    if n < 3 || k <= 0 || k >= n as i64 - 1 {
        return Err(Error::BadParameters(format!("need 0 < k < n-1, got n={n} k={k}")));
    }
    let central = NormalForm::delta_power(n, n as i64 * k);
    let mut elements = BTreeSet::new();
    for a in enumerate_simples(n)? {
        if a.atom_length() as i64 != k {
            continue;
        }
        let g = NormalForm::from_parts(n, k, vec![a])?;
        if g.power(n as i64 - 1)? == central {
            elements.insert(g);
        }
    }
    Ok(SssTable { n, k, elements })
}

/// The `C_k` elements `d^u tau^u(b) a` for the factorisations `a b` of
/// `[k, ..., 1]`, all conjugate to `d^u [k, ..., 1]`; checks that each has
/// infimum `u` and canonical length one and that they are pairwise distinct.
pub fn uss_lower_bound(n: usize, u: i64, k: usize) -> Result<Vec<NormalForm>> {
    let half = n / 2;
    let ok = k >= 2 && u >= 0 && ((k as i64 <= u && u as usize <= half) || (k as i64 == u + 1 && k <= half));
    if !ok {
        return Err(Error::BadParameters(format!(
            "need 2 <= k <= u <= n/2 or 2 <= k = u+1 <= n/2, got n={n} u={u} k={k}"
        )));
    }
    let top: Vec<i64> = (1..=k as i64).rev().collect();
    let c = SimpleElement::from_cycles(n, &[top])?;
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for a in left_divisors(&c)? {
        let b = a.left_quotient_unchecked(&c);
        let w = BraidWord::from_syllables(
            n,
            [Syllable::Delta(u), Syllable::Simple(b.tau_power(u)), Syllable::Simple(a)],
        )?;
        let g = w.normalize()?;
        if g.inf() != u || g.len() != 1 {
            return Err(Error::InternalInconsistency(format!("{g} is not of the form d^{u} a")));
        }
        if !seen.insert(g.clone()) {
            return Err(Error::InternalInconsistency(format!("{g} constructed twice")));
        }
        out.push(g);
    }
    Ok(out)
}

/// A partial cycling that left the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureViolation {
    pub element: NormalForm,
    pub prefix: SimpleElement,
    pub result: NormalForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    pub elements: usize,
    pub cyclings: usize,
    pub violations: Vec<ClosureViolation>,
}

impl ClosureReport {
    pub fn to_json(&self) -> Value {
        json!({
            "elements": self.elements,
            "partial_cyclings": self.cyclings,
            "violations": self.violations.iter().map(|v| json!({
                "element": v.element.to_string(),
                "prefix": v.prefix.to_string(),
                "result": v.result.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Partially cycles every element of the table by every prefix of its
/// simple factor and reports results that fall outside the table.
pub fn check_partial_cycling_closure(table: &SssTable) -> Result<ClosureReport> {
    let mut report = ClosureReport {
        elements: table.len(),
        cyclings: 0,
        violations: Vec::new(),
    };
    for g in &table.elements {
        for b in left_divisors(&g.factors()[0])? {
            let (h, _) = partial_cycling(g, &b)?;
            report.cyclings += 1;
            if !table.contains(&h) {
                report.violations.push(ClosureViolation {
                    element: g.clone(),
                    prefix: b,
                    result: h,
                });
            }
        }
    }
    Ok(report)
}

/// For `g = d^u a`: whether `tau^{(q-1)u}(a) ... tau^u(a) a = d`.
pub fn twisted_product_is_delta(g: &NormalForm, q: i64) -> Result<bool> {
    if g.len() != 1 || q < 1 {
        return Ok(false);
    }
    let a = &g.factors()[0];
    let u = g.inf();
    let syllables = (0..q).rev().map(|j| Syllable::Simple(a.tau_power(j * u)));
    let w = BraidWord::from_syllables(g.n(), syllables)?;
    Ok(w.normalize()? == NormalForm::delta_power(g.n(), 1))
}

/// Whether `gamma^-1 alpha gamma` equals `target` exactly.
pub fn verify_conjugation(alpha: &NormalForm, gamma: &Conjugator, target: &NormalForm) -> Result<bool> {
    if alpha.n() != target.n() {
        return Err(Error::StrandMismatch(alpha.n(), target.n()));
    }
    Ok(gamma.apply(alpha)? == *target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn catalan_counts() {
        let expected = [1u128, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(n), c);
            if n >= 1 {
                let all: BTreeSet<SimpleElement> = enumerate_simples(n).unwrap().collect();
                assert_eq!(all.len() as u128, c, "n={n}");
            }
        }
        assert!(matches!(enumerate_simples(15), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn enumeration_endpoints() {
        let all: Vec<SimpleElement> = enumerate_simples(6).unwrap().collect();
        assert!(all[0].is_identity());
        assert!(all.last().unwrap().is_delta());
    }

    #[test]
    fn random_simple_hits_everything() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let seen: BTreeSet<SimpleElement> = (0..2000).map(|_| random_simple(4, &mut rng)).collect();
        assert_eq!(seen.len(), 14);
    }

    #[test]
    fn divisors_of_a_cycle() {
        let c = SimpleElement::from_cycles(6, &[[3i64, 2, 1]]).unwrap();
        assert_eq!(left_divisors(&c).unwrap().len(), 5);
        let two = SimpleElement::from_cycles(6, &[&[3i64, 2, 1][..], &[6, 5][..]]).unwrap();
        let divs = left_divisors(&two).unwrap();
        assert_eq!(divs.len(), 10);
        assert!(divs.iter().all(|d| d.is_prefix_of(&two)));
    }

    #[test]
    fn free_group_action_sees_braid_relations() {
        // s1 s2 s1 = s2 s1 s2 and s1 s3 = s3 s1
        assert_eq!(free_group_images(4, &[1, 2, 1]), free_group_images(4, &[2, 1, 2]));
        assert_eq!(free_group_images(4, &[1, 3]), free_group_images(4, &[3, 1]));
        assert_ne!(free_group_images(4, &[1, 2]), free_group_images(4, &[2, 1]));
        assert_eq!(free_group_images(3, &[1, -1]), free_group_images(3, &[]));
    }

    #[test]
    fn sss_contains_known_elements() {
        let t = brute_sss_epsilon(6, 3).unwrap();
        let s = |c: &[&[i64]]| SimpleElement::from_cycles(6, c).unwrap();
        let g3 = NormalForm::from_parts(6, 3, vec![s(&[&[4, 3], &[5, 2, 1]])]).unwrap();
        assert!(t.contains(&g3));
        assert!(t.contains(&NormalForm::epsilon_power(6, 3).unwrap()));
    }

    #[test]
    fn lower_bound_sizes() {
        assert_eq!(uss_lower_bound(6, 2, 3).unwrap().len(), 5);
        assert_eq!(uss_lower_bound(6, 3, 3).unwrap().len(), 5);
        assert_eq!(uss_lower_bound(5, 2, 2).unwrap().len(), 2);
        assert!(uss_lower_bound(6, 1, 3).is_err());
    }

    #[test]
    fn verify_conjugation_basics() {
        let a = NormalForm::epsilon_power(5, 2).unwrap();
        assert!(verify_conjugation(&a, &Conjugator::identity(5), &a).unwrap());
        assert!(!verify_conjugation(&a, &Conjugator::identity(5), &NormalForm::identity(5)).unwrap());
    }
}
