//! Periodic braids: translation-number arithmetic and the polynomial-time
//! conjugacy decision and search for conjugates of `d^k` and `epsilon^k`.

use num_integer::Integer;
use num_rational::Ratio;

use crate::braidword::NormalForm;
use crate::conjugacy::{partial_cycling, super_summit_conjugate, Conjugator};
use crate::error::{Error, Result};
use crate::ncp::DescendingCycle;

pub type Rational = Ratio<i64>;

/// The two families of periodic braids up to conjugacy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PeriodKind {
    Delta,
    Epsilon,
}

/// Outcome of the conjugacy solver. A returned conjugator `g` satisfies
/// `g^-1 . alpha . g = d^k` (resp. `epsilon^k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PeriodicVerdict {
    NonPeriodic,
    DeltaType { k: i64, conjugator: Conjugator },
    EpsilonType { k: i64, conjugator: Conjugator },
}

impl PeriodicVerdict {
    pub fn kind(&self) -> Option<PeriodKind> {
        match self {
            PeriodicVerdict::NonPeriodic => None,
            PeriodicVerdict::DeltaType { .. } => Some(PeriodKind::Delta),
            PeriodicVerdict::EpsilonType { .. } => Some(PeriodKind::Epsilon),
        }
    }

    pub fn exponent(&self) -> Option<i64> {
        match self {
            PeriodicVerdict::NonPeriodic => None,
            PeriodicVerdict::DeltaType { k, .. } | PeriodicVerdict::EpsilonType { k, .. } => Some(*k),
        }
    }

    pub fn conjugator(&self) -> Option<&Conjugator> {
        match self {
            PeriodicVerdict::NonPeriodic => None,
            PeriodicVerdict::DeltaType { conjugator, .. }
            | PeriodicVerdict::EpsilonType { conjugator, .. } => Some(conjugator),
        }
    }

    /// The element the conjugator is claimed to reach.
    pub fn target(&self, n: usize) -> Result<Option<NormalForm>> {
        Ok(match self {
            PeriodicVerdict::NonPeriodic => None,
            PeriodicVerdict::DeltaType { k, .. } => Some(NormalForm::delta_power(n, *k)),
            PeriodicVerdict::EpsilonType { k, .. } => Some(NormalForm::epsilon_power(n, *k)?),
        })
    }

    /// Checks the conjugation identity exactly. Non-periodic verdicts carry
    /// no certificate and verify trivially.
    pub fn verify(&self, alpha: &NormalForm) -> Result<bool> {
        match (self.conjugator(), self.target(alpha.n())?) {
            (Some(g), Some(target)) => Ok(g.apply(alpha)? == target),
            _ => Ok(true),
        }
    }
}

/// Result of the decision step, before any epsilon conjugator is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Periodicity {
    NonPeriodic,
    /// `conjugator^-1 . alpha . conjugator = d^k`.
    DeltaType { k: i64, conjugator: Conjugator },
    /// `alpha` is conjugate to `epsilon^k`.
    EpsilonType { k: i64 },
}

/// `t_inf` of `d^k` or `epsilon^k` in `B_n`.
pub fn t_inf_periodic(kind: PeriodKind, k: i64, n: usize) -> Result<Rational> {
    match kind {
        PeriodKind::Delta => Ok(Rational::from_integer(k)),
        PeriodKind::Epsilon => {
            let n = n as i64;
            let p = k.checked_mul(n).ok_or(Error::ExponentOverflow)?;
            Ok(Rational::new(p, n - 1))
        }
    }
}

/// `(p_minimal, c_tight)` for a periodic element with `t_inf = p/q` whose
/// smallest central power of the Garside element is the `m`-th.
pub fn classify_pc(p: i64, q: i64, m: i64) -> Result<(bool, bool)> {
    if q < 1 || m < 1 {
        return Err(Error::BadParameters(format!("need q >= 1 and m >= 1, got q={q} m={m}")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotReduced { p, q });
    }
    Ok((p.rem_euclid(q) == 1 % q, p.rem_euclid(m) == 0))
}

/// An exponent `r` with `p r = 1 mod q` and `r` prime to `m / gcd(p, m)`,
/// so that `g^r` is P-minimal and generates the same cyclic subgroup modulo
/// the centre. Lies in `[1, q m)`.
pub fn minimal_power_exponent(p: i64, q: i64, m: i64) -> Result<i64> {
    if q < 1 || m < 1 {
        return Err(Error::BadParameters(format!("need q >= 1 and m >= 1, got q={q} m={m}")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotReduced { p, q });
    }
    if q == 1 {
        return Ok(1);
    }
    let r0 = mod_inverse(p, q).expect("p is a unit mod q");
    let free = m / p.gcd(&m);
    let modulus = prime_factors(free)
        .into_iter()
        .filter(|&f| q % f != 0)
        .try_fold(1i64, |acc, f| acc.checked_mul(f))
        .ok_or(Error::ExponentOverflow)?;
    if modulus == 1 {
        return Ok(r0);
    }
    // r = r0 + q t with r = 1 mod `modulus`
    let q_inv = mod_inverse(q, modulus).expect("q is prime to the extra primes");
    let t = (((1 - r0) as i128).rem_euclid(modulus as i128) * q_inv as i128) % modulus as i128;
    let r = r0 as i128 + q as i128 * t;
    i64::try_from(r).map_err(|_| Error::ExponentOverflow)
}

fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let eg = a.rem_euclid(m).extended_gcd(&m);
    (eg.gcd == 1).then(|| eg.x.rem_euclid(m))
}

fn prime_factors(mut x: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= x {
        if x % f == 0 {
            out.push(f);
            while x % f == 0 {
                x /= f;
            }
        }
        f += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

/// For `k` not divisible by `n - 1`: `d = gcd(k, n-1)` and the pair `(r, s)`
/// with `k r + (n-1) s = d` and `0 < r < n-1`, `r` as small as possible.
pub fn epsilon_reduction(k: i64, n: usize) -> Result<(i64, i64, i64)> {
    if n < 3 {
        return Err(Error::BadParameters(format!("need n >= 3, got {n}")));
    }
    let m = n as i64 - 1;
    if k.rem_euclid(m) == 0 {
        return Err(Error::BadParameters(format!("{k} is a multiple of {m}")));
    }
    let eg = k.extended_gcd(&m);
    let d = eg.gcd.abs();
    let q = m / d;
    let mut r = (eg.x * eg.gcd.signum()).rem_euclid(q);
    if r == 0 {
        r = q;
    }
    let kr = (k as i128) * (r as i128);
    let s = (d as i128 - kr) / m as i128;
    debug_assert_eq!(kr + m as i128 * s, d as i128);
    let s = i64::try_from(s).map_err(|_| Error::ExponentOverflow)?;
    Ok((d, r, s))
}

/// Output of [`power_conjugacy`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerConjugacy {
    /// A super summit element of `[g^r]`.
    pub power: NormalForm,
    /// `x` with `x^-1 . power . x = g^r`.
    pub conjugator: Conjugator,
    /// `y` with `y^-1 . g . y` commuting with `power` and `y^-1 g^r y = power`;
    /// the inverse of `conjugator`.
    pub forward: Conjugator,
    /// Number of square-and-multiply rounds, `floor(log2 r) + 1`.
    pub rounds: u32,
}

/// Square-and-multiply for a periodic super summit element, keeping every
/// intermediate power in its super summit set.
///
/// Fails with `NotPeriodic` as soon as an intermediate summit element has
/// canonical length above one.
pub fn power_conjugacy(g: &NormalForm, r: i64) -> Result<PowerConjugacy> {
    if r < 1 {
        return Err(Error::BadParameters(format!("power must be positive, got {r}")));
    }
    let n = g.n();
    let mut base = g.clone();
    let mut h = NormalForm::identity(n);
    let mut forward = Conjugator::identity(n);
    let bits = 64 - r.leading_zeros();
    for i in (0..bits).rev() {
        let mut next = h.mul(&h)?;
        if (r >> i) & 1 == 1 {
            next = next.mul(&base)?;
        }
        let (summit, y) = super_summit_conjugate(&next)?;
        if summit.len() > 1 {
            return Err(Error::NotPeriodic);
        }
        base = y.apply(&base)?;
        forward = forward.compose(&y)?;
        h = summit;
        debug_assert_eq!(h.mul(&base)?, base.mul(&h)?, "trackers must commute");
    }
    Ok(PowerConjugacy {
        power: h,
        conjugator: forward.invert()?,
        forward,
        rounds: bits,
    })
}

/// Decides periodicity. Delta-type answers carry a conjugator; for the
/// epsilon type only the exponent is determined here.
pub fn decide_periodic(alpha: &NormalForm) -> Result<Periodicity> {
    let (beta, gamma) = super_summit_conjugate(alpha)?;
    decide_from_summit(&beta, gamma)
}

/// `beta` is a super summit element and `gamma^-1 alpha gamma = beta`.
fn decide_from_summit(beta: &NormalForm, gamma: Conjugator) -> Result<Periodicity> {
    let n = beta.n();
    if let Some(k) = beta.as_delta_power() {
        return Ok(Periodicity::DeltaType { k, conjugator: gamma });
    }
    if beta.len() > 1 || n < 3 {
        return Ok(Periodicity::NonPeriodic);
    }
    let pc = match power_conjugacy(beta, n as i64 - 1) {
        Ok(pc) => pc,
        Err(Error::NotPeriodic) => return Ok(Periodicity::NonPeriodic),
        Err(e) => return Err(e),
    };
    match pc.power.as_delta_power() {
        Some(j) if j % n as i64 == 0 => Ok(Periodicity::EpsilonType { k: j / n as i64 }),
        Some(j) => Err(Error::InternalInconsistency(format!(
            "power {} of a summit element is d^{j}, not a multiple of d^{n}",
            n - 1
        ))),
        None => Ok(Periodicity::NonPeriodic),
    }
}

/// One round of the epsilon-divisor reduction: the moved cycle at each
/// partial cycling, ending with the one that merged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeRound {
    pub cycles: Vec<DescendingCycle>,
}

/// Full record of an epsilon-divisor reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub rounds: Vec<MergeRound>,
    /// Smallest index of the final consecutive block `{t, ..., t+d}`.
    pub start: usize,
    pub conjugator: Conjugator,
}

/// For `alpha = d^d a` in the super summit set of `epsilon^d`, where
/// `0 < d < n-1` divides `n-1`: a conjugator `g` with
/// `g^-1 alpha g = epsilon^d`.
pub fn reduce_epsilon_divisor(alpha: &NormalForm, d: i64) -> Result<Conjugator> {
    Ok(reduce_epsilon_divisor_traced(alpha, d)?.conjugator)
}

/// As [`reduce_epsilon_divisor`], recording which cycles were moved.
///
/// Each round repeatedly partially cycles by the descending cycle with the
/// largest maximal index (and then by its twisted image) until it merges
/// with another cycle; at most `(n-1)/d - 1` steps are allowed per round.
pub fn reduce_epsilon_divisor_traced(alpha: &NormalForm, d: i64) -> Result<ReductionTrace> {
    let n = alpha.n();
    let m = n as i64 - 1;
    if d <= 0 || d >= m || m % d != 0 {
        return Err(Error::BadParameters(format!("{d} is not a proper divisor of {m}")));
    }
    let q = m / d;
    let shape_ok = |g: &NormalForm| g.inf() == d && g.len() == 1;
    if !shape_ok(alpha) {
        return Err(Error::NotInSss(format!("{alpha} is not of the form d^{d} a")));
    }
    let mut g = alpha.clone();
    let mut gamma = Conjugator::identity(n);
    let mut rounds = Vec::new();
    loop {
        let a = &g.factors()[0];
        let cycles = a.cycles();
        let count = cycles.len();
        if count <= 1 {
            break;
        }
        let mut b = cycles[0].to_simple();
        let mut moved = vec![cycles[0].clone()];
        let mut steps = 0;
        loop {
            if steps == q - 1 {
                return Err(Error::NotInSss(format!(
                    "no merge after {steps} partial cyclings"
                )));
            }
            let (h, x) = partial_cycling(&g, &b).map_err(|e| match e {
                Error::NotAPrefix => Error::NotInSss(format!("{b} is not a cycle of {g}")),
                e => e,
            })?;
            steps += 1;
            gamma = gamma.compose(&x)?;
            g = h;
            if !shape_ok(&g) {
                return Err(Error::NotInSss(format!("partial cycling left the summit: {g}")));
            }
            b = b.tau_power(-d);
            moved.push(b.cycles()[0].clone());
            if g.factors()[0].cycle_count() < count {
                break;
            }
        }
        rounds.push(MergeRound { cycles: moved });
    }
    let block = match g.factors()[0].cycles().pop() {
        Some(c) => c,
        None => return Err(Error::NotInSss(format!("{g} has no cycle"))),
    };
    let start = consecutive_start(block.indices(), n, d as usize)
        .ok_or_else(|| Error::NotInSss(format!("{block} is not a consecutive block")))?;
    gamma = gamma.compose(&Conjugator::delta_power(n, 1 - start as i64))?;
    Ok(ReductionTrace {
        rounds,
        start,
        conjugator: gamma,
    })
}

/// The `t` with `indices = {t, t+1, ..., t+d}` modulo `n`, if any.
fn consecutive_start(indices: &[usize], n: usize, d: usize) -> Option<usize> {
    if indices.len() != d + 1 {
        return None;
    }
    let mut member = vec![false; n + 1];
    for &i in indices {
        member[i] = true;
    }
    indices
        .iter()
        .copied()
        .find(|&t| (0..=d).all(|j| member[(t - 1 + j) % n + 1]))
}

/// For `alpha` in the super summit set of `epsilon^k`: a conjugator `g` with
/// `g^-1 alpha g = epsilon^k`.
pub fn epsilon_conjugator(alpha: &NormalForm, k: i64) -> Result<Conjugator> {
    let n = alpha.n();
    if n < 3 {
        return Err(Error::BadParameters(format!("need n >= 3, got {n}")));
    }
    let m = n as i64 - 1;
    let (u, v) = k.div_mod_floor(&m);
    let mut base = alpha.clone();
    let shift = u.checked_mul(n as i64).ok_or(Error::ExponentOverflow)?;
    base.mul_delta_left(-shift)?;
    if v == 0 {
        return Ok(Conjugator::identity(n));
    }
    let (d, r, s) = epsilon_reduction(v, n)?;
    let pc = power_conjugacy(&base, r)?;
    let mut reduced = pc.power;
    reduced.mul_delta_left(s.checked_mul(n as i64).ok_or(Error::ExponentOverflow)?)?;
    let tail = reduce_epsilon_divisor(&reduced, d)?;
    pc.forward.compose(&tail)
}

/// Decides whether `alpha` is periodic and, if so, returns the exponent and
/// a conjugator to `d^k` or `epsilon^k`.
///
/// A multiple of `n-1` as epsilon exponent means `alpha` is conjugate to a
/// (central) power of `d`, which is how such elements are reported.
pub fn solve(alpha: &NormalForm) -> Result<PeriodicVerdict> {
    if alpha.n() < 2 {
        return Err(Error::BadParameters("need at least two strands".into()));
    }
    let (summit, gamma0) = super_summit_conjugate(alpha)?;
    if summit.len() > 1 {
        return Ok(PeriodicVerdict::NonPeriodic);
    }
    let verdict = match decide_from_summit(&summit, gamma0.clone())? {
        Periodicity::NonPeriodic => PeriodicVerdict::NonPeriodic,
        Periodicity::DeltaType { k, conjugator } => PeriodicVerdict::DeltaType { k, conjugator },
        Periodicity::EpsilonType { k } => {
            let tail = epsilon_conjugator(&summit, k)?;
            PeriodicVerdict::EpsilonType {
                k,
                conjugator: gamma0.compose(&tail)?,
            }
        }
    };
    debug_assert!(verdict.verify(alpha)?, "solver produced a wrong conjugator");
    Ok(verdict)
}
