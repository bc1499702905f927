//! Randomised algebraic property suites with a fixed seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{braids_equal, random_conjugator, random_simple, random_word};
use crate::braidword::{BraidWord, NormalForm, Syllable};
use crate::conjugacy::{cycling, decycling, partial_cycling, super_summit_conjugate};
use crate::error::Result;
use crate::ncp::{Side, SimpleElement};

const MAX_REPORTED: usize = 5;

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub min_n: usize,
    pub max_n: usize,
    pub cases: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            min_n: 2,
            max_n: 12,
            cases: 10_000,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub examples: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &'static str) -> Self {
        SuiteOutcome {
            name,
            cases: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_REPORTED {
                self.examples.push(what());
            }
        }
    }

    fn record(&mut self, r: Result<()>) {
        if let Err(e) = r {
            self.check(false, || format!("error: {e}"));
        }
    }
}

fn rng_for(cfg: &SuiteConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn nf(syllables: Vec<Syllable>, n: usize) -> Result<NormalForm> {
    BraidWord::from_syllables(n, syllables)?.normalize()
}

fn simples_product(n: usize, factors: &[&SimpleElement]) -> Result<NormalForm> {
    nf(factors.iter().map(|a| Syllable::Simple((*a).clone())).collect(), n)
}

pub fn run_all(cfg: &SuiteConfig) -> Vec<SuiteOutcome> {
    vec![
        lattice_laws(cfg),
        complement_identities(cfg),
        normal_form_homomorphism(cfg),
        normal_form_uniqueness(cfg),
        cycling_identities(cfg),
    ]
}

/// Commutativity, associativity, idempotence and absorption of both
/// lattices, plus agreement of the order with prefixes.
pub fn lattice_laws(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("lattice laws");
    let mut rng = rng_for(cfg, 1);
    for _ in 0..cfg.cases {
        let n = rng.gen_range(cfg.min_n..=cfg.max_n);
        let (a, b, c) = (
            random_simple(n, &mut rng),
            random_simple(n, &mut rng),
            random_simple(n, &mut rng),
        );
        out.cases += 1;
        let r = (|| -> Result<()> {
            type Op = fn(&SimpleElement, &SimpleElement) -> Result<SimpleElement>;
            let ops: [(&str, Op); 4] = [
                ("meet_left", SimpleElement::meet_left),
                ("join_left", SimpleElement::join_left),
                ("meet_right", SimpleElement::meet_right),
                ("join_right", SimpleElement::join_right),
            ];
            for (name, op) in ops {
                out.check(op(&a, &b)? == op(&b, &a)?, || format!("{name} not commutative on {a}, {b}"));
                out.check(
                    op(&op(&a, &b)?, &c)? == op(&a, &op(&b, &c)?)?,
                    || format!("{name} not associative on {a}, {b}, {c}"),
                );
                out.check(op(&a, &a)? == a, || format!("{name} not idempotent on {a}"));
            }
            out.check(a.join_left(&a.meet_left(&b)?)? == a, || format!("left absorption fails on {a}, {b}"));
            out.check(a.meet_left(&a.join_left(&b)?)? == a, || format!("left absorption fails on {a}, {b}"));
            out.check(a.join_right(&a.meet_right(&b)?)? == a, || format!("right absorption fails on {a}, {b}"));
            out.check(a.meet_right(&a.join_right(&b)?)? == a, || format!("right absorption fails on {a}, {b}"));

            let m = a.meet_left(&b)?;
            out.check(m.is_prefix_of(&a) && m.is_prefix_of(&b), || format!("meet of {a}, {b} is not a prefix"));
            let j = a.join_left(&b)?;
            out.check(a.is_prefix_of(&j) && b.is_prefix_of(&j), || format!("join of {a}, {b} is not a multiple"));

            let prefix = m == a;
            let c = a.complement_in(&b, Side::Right)?;
            let reaches = simples_product(n, &[&a, &c])? == NormalForm::from_simple(b.clone());
            out.check(
                prefix == a.is_prefix_of(&b) && prefix == reaches,
                || format!("order tests disagree on {a} <= {b}"),
            );
            Ok(())
        })();
        out.record(r);
    }
    out
}

/// Complements against `d`, relative complements and left-weighting.
pub fn complement_identities(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("complement identities");
    let mut rng = rng_for(cfg, 2);
    for _ in 0..cfg.cases {
        let n = rng.gen_range(cfg.min_n..=cfg.max_n);
        let a = random_simple(n, &mut rng);
        let b = random_simple(n, &mut rng);
        out.cases += 1;
        let r = (|| -> Result<()> {
            let delta = NormalForm::delta_power(n, 1);
            let left = a.complement_delta(Side::Left);
            let right = a.complement_delta(Side::Right);
            out.check(simples_product(n, &[&left, &a])? == delta, || format!("*a . a != d for {a}"));
            out.check(simples_product(n, &[&a, &right])? == delta, || format!("a . a* != d for {a}"));
            out.check(
                a.tau_power(1) == right.right_complement(),
                || format!("tau(a) != (a*)* for {a}"),
            );
            out.check(right.left_complement() == a, || format!("*(a*) != a for {a}"));

            let c = a.complement_in(&b, Side::Right)?;
            out.check(
                simples_product(n, &[&a, &c])? == NormalForm::from_simple(a.join_left(&b)?),
                || format!("right relative complement of {a} in {b}"),
            );
            let c = a.complement_in(&b, Side::Left)?;
            out.check(
                simples_product(n, &[&c, &a])? == NormalForm::from_simple(a.join_right(&b)?),
                || format!("left relative complement of {a} in {b}"),
            );

            let (x, y) = a.left_weight_pair(&b)?;
            out.check(x.is_left_weighted_with(&y), || format!("pair from {a}, {b} not left-weighted"));
            out.check(
                simples_product(n, &[&x, &y])? == simples_product(n, &[&a, &b])?,
                || format!("left-weighting changed the product of {a}, {b}"),
            );
            let composed: Vec<usize> = a.permutation().iter().map(|&i| b.permutation()[i]).collect();
            let composed2: Vec<usize> = x.permutation().iter().map(|&i| y.permutation()[i]).collect();
            out.check(composed == composed2, || format!("left-weighting changed the permutation of {a}, {b}"));
            Ok(())
        })();
        out.record(r);
    }
    out
}

fn word_permutation(w: &BraidWord) -> Vec<usize> {
    let n = w.n();
    let mut p: Vec<usize> = (0..n).collect();
    for s in w.syllables() {
        match s {
            Syllable::Delta(k) => {
                let sh = k.rem_euclid(n as i64) as usize;
                for x in p.iter_mut() {
                    *x = (*x + sh) % n;
                }
            }
            Syllable::Simple(a) => {
                for x in p.iter_mut() {
                    *x = a.permutation()[*x];
                }
            }
            Syllable::SimpleInverse(a) => {
                let mut inv = vec![0; n];
                for (i, &j) in a.permutation().iter().enumerate() {
                    inv[j] = i;
                }
                for x in p.iter_mut() {
                    *x = inv[*x];
                }
            }
        }
    }
    p
}

fn word_exponent_sum(w: &BraidWord) -> i64 {
    let n = w.n() as i64;
    w.syllables()
        .iter()
        .map(|s| match s {
            Syllable::Delta(k) => k * (n - 1),
            Syllable::Simple(a) => a.atom_length() as i64,
            Syllable::SimpleInverse(a) => -(a.atom_length() as i64),
        })
        .sum()
}

/// `normalize(u v) = normalize(u) normalize(v)`, together with the
/// permutation, exponent sum and infimum/supremum bounds.
pub fn normal_form_homomorphism(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("normal form homomorphism");
    let mut rng = rng_for(cfg, 3);
    for _ in 0..cfg.cases {
        let n = rng.gen_range(cfg.min_n..=cfg.max_n);
        let u = random_word(n, rng.gen_range(0..=12), &mut rng);
        let v = random_word(n, rng.gen_range(0..=12), &mut rng);
        out.cases += 1;
        let r = (|| -> Result<()> {
            let (nu, nv) = (u.normalize()?, v.normalize()?);
            let uv = u.concat(&v)?;
            let nuv = uv.normalize()?;
            out.check(nuv == nu.mul(&nv)?, || format!("normalize({u} {v}) != product"));
            out.check(nuv.is_well_formed(), || format!("normal form of {uv} malformed"));
            out.check(
                nuv.inf() >= nu.inf() + nv.inf() && nuv.sup() <= nu.sup() + nv.sup(),
                || format!("inf/sup bounds fail for {u} | {v}"),
            );
            out.check(
                nuv.exponent_sum()? == nu.exponent_sum()? + nv.exponent_sum()?,
                || format!("exponent sum not additive on {u} | {v}"),
            );
            out.check(nuv.exponent_sum()? == word_exponent_sum(&uv), || format!("exponent sum of {uv}"));
            out.check(nuv.permutation() == word_permutation(&uv), || format!("permutation of {uv}"));
            Ok(())
        })();
        out.record(r);
    }
    out
}

/// Rewrites a word into an equivalent one using defining identities only.
fn rewrite<R: Rng>(w: &BraidWord, rng: &mut R) -> Result<BraidWord> {
    let n = w.n();
    let mut syl: Vec<Syllable> = w.syllables().to_vec();
    for _ in 0..3 {
        let pos = rng.gen_range(0..=syl.len());
        match rng.gen_range(0..4) {
            0 => {
                let a = random_simple(n, rng);
                let pair = if rng.gen_bool(0.5) {
                    [Syllable::Simple(a.clone()), Syllable::SimpleInverse(a)]
                } else {
                    [Syllable::SimpleInverse(a.clone()), Syllable::Simple(a)]
                };
                syl.splice(pos..pos, pair);
            }
            1 => {
                // a = b . (b^-1 a) for a prefix b of a
                if let Some(Syllable::Simple(a)) = syl.get(pos).cloned() {
                    let b = a.meet_left(&random_simple(n, rng))?;
                    let rest = b.left_quotient_unchecked(&a);
                    syl.splice(pos..=pos, [Syllable::Simple(b), Syllable::Simple(rest)]);
                }
            }
            2 => {
                // a = (*a)^-1 . d
                if let Some(Syllable::Simple(a)) = syl.get(pos).cloned() {
                    syl.splice(
                        pos..=pos,
                        [Syllable::SimpleInverse(a.left_complement()), Syllable::Delta(1)],
                    );
                }
            }
            _ => {
                // a . d^k = d^k . tau^k(a)
                let k = rng.gen_range(-3..=3);
                if let Some(Syllable::Simple(a)) = syl.get(pos).cloned() {
                    syl.splice(
                        pos..=pos,
                        [Syllable::Delta(k), Syllable::Simple(a.tau_power(k)), Syllable::Delta(-k)],
                    );
                }
            }
        }
    }
    BraidWord::from_syllables(n, syl)
}

/// Equivalent words share one normal form; small cases are also compared
/// through the free-group action.
pub fn normal_form_uniqueness(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("normal form uniqueness");
    let mut rng = rng_for(cfg, 4);
    for case in 0..cfg.cases {
        let n = rng.gen_range(cfg.min_n..=cfg.max_n);
        let w = random_word(n, rng.gen_range(0..=10), &mut rng);
        out.cases += 1;
        let r = (|| -> Result<()> {
            let w2 = rewrite(&w, &mut rng)?;
            let (a, b) = (w.normalize()?, w2.normalize()?);
            out.check(a == b, || format!("{w} and {w2} normalize differently"));
            out.check(a.to_word().normalize()? == a, || format!("normal form of {w} not stable"));
            if case % 10 == 0 && n <= 5 && w.simple_length() <= 4 {
                out.check(braids_equal(&w, &a.to_word()), || format!("free-group action disagrees on {w}"));
            }
            Ok(())
        })();
        out.record(r);
    }
    out
}

/// Conjugators returned by cycling, decycling, partial cycling and the
/// super summit reduction realise the claimed conjugation; composition and
/// inversion of conjugators behave as group operations.
pub fn cycling_identities(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("cycling identities");
    let mut rng = rng_for(cfg, 5);
    for case in 0..cfg.cases {
        let n = rng.gen_range(cfg.min_n..=cfg.max_n);
        let len = rng.gen_range(1..=8);
        let w = random_word(n, len, &mut rng);
        out.cases += 1;
        let r = (|| -> Result<()> {
            let g = w.normalize()?;
            let (h, x) = cycling(&g)?;
            out.check(x.apply(&g)? == h && h.inf() >= g.inf(), || format!("cycling of {g}"));
            let (h, x) = decycling(&g)?;
            out.check(x.apply(&g)? == h && h.sup() <= g.sup(), || format!("decycling of {g}"));
            if let Some(first) = g.factors().first() {
                let b = first.meet_left(&random_simple(n, &mut rng))?;
                let (h, x) = partial_cycling(&g, &b)?;
                out.check(x.apply(&g)? == h && h.inf() >= g.inf(), || format!("partial cycling of {g} by {b}"));
            }
            if case % 4 == 0 {
                let (h, y) = super_summit_conjugate(&g)?;
                out.check(y.apply(&g)? == h, || format!("super summit conjugator of {g}"));
            }
            let x = random_conjugator(n, rng.gen_range(0..=3), &mut rng);
            let y = random_conjugator(n, rng.gen_range(0..=3), &mut rng);
            let composed = x.compose(&y)?.apply(&g)?;
            out.check(composed == y.apply(&x.apply(&g)?)?, || format!("compose on {g}"));
            out.check(x.invert()?.apply(&x.apply(&g)?)? == g, || format!("invert on {g}"));
            Ok(())
        })();
        out.record(r);
    }
    out
}
