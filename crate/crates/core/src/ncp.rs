//! Simple elements of the band-generator monoid.
//!
//! A simple element of `B_n` is a product of parallel descending cycles, and
//! the set of simple elements is in bijection with the non-crossing
//! partitions of `{1, ..., n}`. We store a simple element as the permutation
//! it induces (right action, 0-based internally): a descending cycle
//! `[i_k, ..., i_1]` sends `i_1 -> i_2 -> ... -> i_k -> i_1`, so every block is
//! traversed in increasing cyclic order.
//!
//! On simple elements the prefix order and the suffix order coincide with
//! refinement of partitions, so `meet_left` is the blockwise intersection and
//! `join_left` is the non-crossing closure of the union. The right-hand lattice
//! operations and the relative complements are derived from the left ones
//! through the complement identities `*a . a = delta = a . a*`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Which side a complement is taken on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A descending cycle `[i_k, ..., i_1]`, stored with strictly decreasing
/// 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescendingCycle {
    n: usize,
    indices: Vec<usize>,
}

impl DescendingCycle {
    /// Builds a cycle from its written form.
    ///
    /// Entries may be given modulo `n` (anything in `1..=2n`), so `[12,11,10,9]`
    /// in `B_10` denotes `[10,9,2,1]`. After reduction the written sequence
    /// must be a cyclic rotation of the strictly decreasing order.
    pub fn new(n: usize, written: &[i64]) -> Result<Self> {
        let mut reduced = Vec::with_capacity(written.len());
        for &x in written {
            if x < 1 || x > 2 * n as i64 {
                return Err(Error::IndexOutOfRange { index: x, n });
            }
            reduced.push(((x - 1) as usize % n) + 1);
        }
        if reduced.len() < 2 {
            return Err(Error::NotDescending(written.to_vec()));
        }
        let mut sorted = reduced.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotDescending(written.to_vec()));
        }
        let k = sorted.len();
        let start = sorted.iter().position(|&x| x == reduced[0]).unwrap();
        if (0..k).any(|j| reduced[j] != sorted[(start + j) % k]) {
            return Err(Error::NotDescending(written.to_vec()));
        }
        Ok(DescendingCycle { n, indices: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The indices, strictly decreasing and 1-based.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn max_index(&self) -> usize {
        self.indices[0]
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// True iff the convex hulls of the two index sets on the circle are
    /// disjoint. Cycles sharing an index are never parallel.
    pub fn is_parallel(&self, other: &DescendingCycle) -> bool {
        if self.n != other.n {
            return false;
        }
        let mut owner = vec![0u8; self.n + 1];
        for &i in &self.indices {
            owner[i] = 1;
        }
        for &j in &other.indices {
            if owner[j] == 1 {
                return false;
            }
            owner[j] = 2;
        }
        // Non-crossing iff the circular sequence of owners has exactly two runs.
        let seq: Vec<u8> = owner[1..].iter().copied().filter(|&o| o != 0).collect();
        let changes = (0..seq.len())
            .filter(|&p| seq[p] != seq[(p + 1) % seq.len()])
            .count();
        changes == 2
    }

    pub fn to_simple(&self) -> SimpleElement {
        let mut labels: Vec<usize> = (0..self.n).collect();
        let root = *self.indices.last().unwrap() - 1;
        for &i in &self.indices {
            labels[i - 1] = root;
        }
        SimpleElement::from_labels(&labels)
    }
}

impl fmt::Display for DescendingCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (p, i) in self.indices.iter().enumerate() {
            if p > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

/// A simple element of `B_n` under the band-generator structure.
///
/// Equality is equality of the induced permutations, which is faithful on
/// simple elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleElement {
    perm: Box<[usize]>,
}

impl SimpleElement {
    pub fn identity(n: usize) -> Self {
        SimpleElement {
            perm: (0..n).collect(),
        }
    }

    /// The Garside element `delta = a_{n,n-1} ... a_{2,1}`.
    pub fn delta(n: usize) -> Self {
        SimpleElement {
            perm: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    /// The band generator `a_{i,j}`; the order of `i` and `j` does not matter.
    pub fn band_generator(n: usize, i: usize, j: usize) -> Result<Self> {
        for x in [i, j] {
            if x < 1 || x > n {
                return Err(Error::IndexOutOfRange { index: x as i64, n });
            }
        }
        if i == j {
            return Err(Error::NotDescending(vec![i as i64, j as i64]));
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i - 1, j - 1);
        Ok(SimpleElement { perm: perm.into() })
    }

    /// Builds the product of the given parallel descending cycles.
    pub fn from_cycles<C: AsRef<[i64]>>(n: usize, cycles: &[C]) -> Result<Self> {
        let mut labels: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for c in cycles {
            let cycle = DescendingCycle::new(n, c.as_ref())?;
            let root = *cycle.indices.last().unwrap() - 1;
            for &i in &cycle.indices {
                if used[i - 1] {
                    return Err(Error::OverlappingBlocks(i));
                }
                used[i - 1] = true;
                labels[i - 1] = root;
            }
        }
        if let Some((x, y)) = find_crossing(&labels) {
            let block = |l: usize| -> Vec<usize> {
                (0..n)
                    .filter(|&i| labels[i] == l)
                    .map(|i| i + 1)
                    .rev()
                    .collect()
            };
            return Err(Error::CrossingBlocks(block(x), block(y)));
        }
        Ok(Self::from_labels(&labels))
    }

    /// Validates an arbitrary permutation (0-based images, right action).
    pub fn from_permutation(perm: Vec<usize>) -> Option<Self> {
        if is_simple_permutation(&perm) {
            Some(SimpleElement { perm: perm.into() })
        } else {
            None
        }
    }

    pub(crate) fn from_perm(perm: Vec<usize>) -> Self {
        debug_assert!(is_simple_permutation(&perm), "not a simple element: {perm:?}");
        SimpleElement { perm: perm.into() }
    }

    /// Builds the simple element whose blocks are the classes of `labels`;
    /// labels must lie in `0..n` and define a non-crossing partition.
    pub(crate) fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut first = vec![usize::MAX; n];
        let mut last = vec![usize::MAX; n];
        for (i, &l) in labels.iter().enumerate() {
            if first[l] == usize::MAX {
                first[l] = i;
            } else {
                perm[last[l]] = i;
            }
            last[l] = i;
        }
        for l in 0..n {
            if first[l] != usize::MAX {
                perm[last[l]] = first[l];
            }
        }
        Self::from_perm(perm)
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// The induced permutation, 0-based: point `i` goes to `permutation()[i]`.
    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.n();
        self.perm.iter().enumerate().all(|(i, &p)| p == (i + 1) % n)
    }

    /// Block label of every point: the smallest point of its block.
    pub fn labels(&self) -> Vec<usize> {
        let n = self.n();
        let mut labels = vec![usize::MAX; n];
        for start in 0..n {
            if labels[start] != usize::MAX {
                continue;
            }
            let mut i = start;
            loop {
                labels[i] = start;
                i = self.perm[i];
                if i == start {
                    break;
                }
            }
        }
        labels
    }

    pub fn block_count(&self) -> usize {
        self.labels()
            .iter()
            .enumerate()
            .filter(|&(i, &l)| i == l)
            .count()
    }

    /// Number of band generators in any positive word for this element.
    pub fn atom_length(&self) -> usize {
        self.n() - self.block_count()
    }

    /// The parallel descending cycles, largest maximal index first.
    pub fn cycles(&self) -> Vec<DescendingCycle> {
        let n = self.n();
        let labels = self.labels();
        let mut blocks: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, &l) in labels.iter().enumerate() {
            blocks.entry(l).or_default().push(i + 1);
        }
        let mut cycles: Vec<DescendingCycle> = blocks
            .into_values()
            .filter(|b| b.len() >= 2)
            .map(|mut b| {
                b.reverse();
                DescendingCycle { n, indices: b }
            })
            .collect();
        cycles.sort_by_key(|c| std::cmp::Reverse(c.max_index()));
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.perm
            .iter()
            .enumerate()
            .filter(|&(i, &p)| p < i)
            .count()
    }

    /// `tau^u`, conjugation by `delta^u`: every index shifts by `u` modulo `n`.
    pub fn tau_power(&self, u: i64) -> Self {
        let n = self.n();
        let s = u.rem_euclid(n as i64) as usize;
        if s == 0 {
            return self.clone();
        }
        let mut perm = vec![0; n];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[(i + s) % n] = (p + s) % n;
        }
        Self::from_perm(perm)
    }

    fn inverse_permutation(&self) -> Vec<usize> {
        let mut inv = vec![0; self.n()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        inv
    }

    /// `a*`, the unique simple element with `a . a* = delta`.
    pub fn right_complement(&self) -> Self {
        let n = self.n();
        let inv = self.inverse_permutation();
        Self::from_perm(inv.iter().map(|&x| (x + 1) % n).collect())
    }

    /// `*a`, the unique simple element with `*a . a = delta`.
    pub fn left_complement(&self) -> Self {
        let n = self.n();
        let inv = self.inverse_permutation();
        Self::from_perm((0..n).map(|i| inv[(i + 1) % n]).collect())
    }

    pub fn complement_delta(&self, side: Side) -> Self {
        match side {
            Side::Left => self.left_complement(),
            Side::Right => self.right_complement(),
        }
    }

    fn check_strands(&self, other: &Self) -> Result<()> {
        if self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::StrandMismatch(self.n(), other.n()))
        }
    }

    /// Product of two simple elements whose product is known to be simple.
    pub(crate) fn product_unchecked(&self, other: &Self) -> Self {
        Self::from_perm(self.perm.iter().map(|&x| other.perm[x]).collect())
    }

    /// `self^{-1} . other`, for `self` a prefix of `other`.
    pub(crate) fn left_quotient_unchecked(&self, other: &Self) -> Self {
        let inv = self.inverse_permutation();
        Self::from_perm(inv.iter().map(|&x| other.perm[x]).collect())
    }

    /// `self <=_L other` (equivalently `<=_R` on simple elements): every
    /// block of `self` lies inside a block of `other`.
    pub fn is_prefix_of(&self, other: &Self) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let lb = other.labels();
        self.perm.iter().enumerate().all(|(i, &p)| lb[i] == lb[p])
    }

    pub(crate) fn meet_unchecked(&self, other: &Self) -> Self {
        // Walk each block of `self` in increasing order and split it by the
        // block of `other`; stamps avoid clearing `first` between blocks.
        let n = self.n();
        let lb = other.labels();
        let mut labels = vec![usize::MAX; n];
        let mut first = vec![0; n];
        let mut stamp = vec![usize::MAX; n];
        for start in 0..n {
            if labels[start] != usize::MAX {
                continue;
            }
            let mut j = start;
            loop {
                let y = lb[j];
                if stamp[y] != start {
                    stamp[y] = start;
                    first[y] = j;
                }
                labels[j] = first[y];
                j = self.perm[j];
                if j == start {
                    break;
                }
            }
        }
        Self::from_labels(&labels)
    }

    pub(crate) fn join_unchecked(&self, other: &Self) -> Self {
        let n = self.n();
        let mut uf = UnionFind::new(n);
        for i in 0..n {
            uf.union(i, self.perm[i]);
            uf.union(i, other.perm[i]);
        }
        loop {
            let labels: Vec<usize> = (0..n).map(|i| uf.find(i)).collect();
            match find_crossing(&labels) {
                Some((x, y)) => uf.union(x, y),
                None => return Self::from_labels(&labels),
            }
        }
    }

    /// Greatest common prefix.
    pub fn meet_left(&self, other: &Self) -> Result<Self> {
        self.check_strands(other)?;
        Ok(self.meet_unchecked(other))
    }

    /// Least common right multiple.
    pub fn join_left(&self, other: &Self) -> Result<Self> {
        self.check_strands(other)?;
        Ok(self.join_unchecked(other))
    }

    /// Greatest common suffix, `*(a* v_L b*)`.
    pub fn meet_right(&self, other: &Self) -> Result<Self> {
        self.check_strands(other)?;
        Ok(self
            .right_complement()
            .join_unchecked(&other.right_complement())
            .left_complement())
    }

    /// Least common left multiple, `(*a ^_L *b)*`.
    pub fn join_right(&self, other: &Self) -> Result<Self> {
        self.check_strands(other)?;
        Ok(self
            .left_complement()
            .meet_unchecked(&other.left_complement())
            .right_complement())
    }

    /// Relative complement of `self` in `other`.
    ///
    /// Right: the `c` with `self . c = self v_L other`.
    /// Left: the `c` with `c . self = self v_R other`.
    pub fn complement_in(&self, other: &Self, side: Side) -> Result<Self> {
        self.check_strands(other)?;
        Ok(match side {
            Side::Right => {
                let lcm = self.join_unchecked(other);
                lcm.left_complement()
                    .product_unchecked(self)
                    .right_complement()
            }
            Side::Left => {
                let lcm = self.join_right(other)?;
                self.product_unchecked(&lcm.right_complement())
                    .left_complement()
            }
        })
    }

    /// Left-weights the pair `(self, other)`: returns `(a', b')` with
    /// `a' b' = self . other` and `a'* ^_L b' = e`.
    pub fn left_weight_pair(&self, other: &Self) -> Result<(Self, Self)> {
        self.check_strands(other)?;
        Ok(self.left_weight_unchecked(other).unwrap_or_else(|| (self.clone(), other.clone())))
    }

    /// `None` when the pair is already left-weighted.
    pub(crate) fn left_weight_unchecked(&self, other: &Self) -> Option<(Self, Self)> {
        let moved = self.right_complement().meet_unchecked(other);
        if moved.is_identity() {
            return None;
        }
        Some((
            self.product_unchecked(&moved),
            moved.left_quotient_unchecked(other),
        ))
    }

    pub fn is_left_weighted_with(&self, next: &Self) -> bool {
        self.right_complement().meet_unchecked(next).is_identity()
    }
}

impl fmt::Display for SimpleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for c in cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SimpleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Simple<{}>({})", self.n(), self)
    }
}

/// Finds two crossing blocks of a labelled partition, if any.
///
/// Scans left to right keeping the stack of open blocks; revisiting a block
/// that is not on top means the block above it crosses it.
pub(crate) fn find_crossing(labels: &[usize]) -> Option<(usize, usize)> {
    let n = labels.len();
    let mut last = vec![0; n];
    for (i, &l) in labels.iter().enumerate() {
        last[l] = i;
    }
    let mut seen = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    for (i, &l) in labels.iter().enumerate() {
        if !seen[l] {
            seen[l] = true;
            if last[l] > i {
                stack.push(l);
            }
        } else {
            let top = *stack.last().expect("revisited block must be open");
            if top != l {
                return Some((top, l));
            }
            if last[l] == i {
                stack.pop();
            }
        }
    }
    None
}

/// True iff `perm` is a permutation whose cycles are increasing cyclic runs
/// over the blocks of a non-crossing partition.
pub(crate) fn is_simple_permutation(perm: &[usize]) -> bool {
    let n = perm.len();
    let mut labels = vec![usize::MAX; n];
    for start in 0..n {
        if labels[start] != usize::MAX {
            continue;
        }
        let mut i = start;
        let mut descents = 0;
        let mut size = 0;
        loop {
            if i >= n || labels[i] != usize::MAX {
                return false;
            }
            labels[i] = start;
            size += 1;
            let next = perm[i];
            if next >= n {
                return false;
            }
            if next < i {
                descents += 1;
            }
            i = next;
            if i == start {
                break;
            }
        }
        if size >= 2 && descents != 1 {
            return false;
        }
    }
    find_crossing(&labels).is_none()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx.max(ry)] = rx.min(ry);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, cycles: &[&[i64]]) -> SimpleElement {
        SimpleElement::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn figure_one_element() {
        let a = s(12, &[&[12, 10, 1], &[9, 8, 2], &[7, 6, 4, 3]]);
        assert_eq!(a.block_count(), 5);
        let cycles: Vec<Vec<usize>> = a.cycles().iter().map(|c| c.indices().to_vec()).collect();
        assert_eq!(cycles, vec![vec![12, 10, 1], vec![9, 8, 2], vec![7, 6, 4, 3]]);
        assert_eq!(a.atom_length(), 7);
        assert_eq!(a.to_string(), "[12,10,1][9,8,2][7,6,4,3]");
    }

    #[test]
    fn construction_edge_cases() {
        assert!(SimpleElement::from_cycles::<&[i64]>(5, &[]).unwrap().is_identity());
        assert!(matches!(
            SimpleElement::from_cycles(4, &[&[3i64, 1][..], &[4, 2][..]]),
            Err(Error::CrossingBlocks(_, _))
        ));
        assert_eq!(
            SimpleElement::from_cycles(4, &[&[3i64, 1][..], &[3, 2][..]]),
            Err(Error::OverlappingBlocks(3))
        );
        assert!(matches!(
            SimpleElement::from_cycles(4, &[&[5i64, 9][..]]),
            Err(Error::IndexOutOfRange { index: 9, .. })
        ));
        assert!(matches!(
            SimpleElement::from_cycles(4, &[&[1i64, 2, 3][..]]),
            Err(Error::NotDescending(_))
        ));
    }

    #[test]
    fn wraparound_notation() {
        let c = DescendingCycle::new(10, &[12, 11, 10, 9]).unwrap();
        assert_eq!(c.indices(), &[10, 9, 2, 1]);
        let a = s(10, &[&[12, 11, 10, 9]]);
        assert_eq!(a, s(10, &[&[10, 9, 2, 1]]));
    }

    #[test]
    fn cycles_of_delta_and_identity() {
        assert!(SimpleElement::identity(6).cycles().is_empty());
        let d = SimpleElement::delta(4);
        assert_eq!(d.cycles()[0].indices(), &[4, 3, 2, 1]);
        assert_eq!(d, s(4, &[&[4, 3, 2, 1]]));
        assert_eq!(d.atom_length(), 3);
    }

    #[test]
    fn tau_shifts_indices() {
        assert_eq!(s(4, &[&[3, 2]]).tau_power(1), s(4, &[&[4, 3]]));
        assert_eq!(s(13, &[&[13, 10]]).tau_power(-3), s(13, &[&[10, 7]]));
        for u in -5..5 {
            assert_eq!(SimpleElement::delta(7).tau_power(u), SimpleElement::delta(7));
        }
        // tau(a) = (a*)*
        let a = s(6, &[&[5, 3], &[2, 1]]);
        assert_eq!(a.tau_power(1), a.right_complement().right_complement());
    }

    #[test]
    fn lattice_small_cases() {
        let a = s(4, &[&[3, 2, 1]]);
        let b = s(4, &[&[4, 3, 2]]);
        assert_eq!(a.meet_left(&b).unwrap(), s(4, &[&[3, 2]]));
        assert_eq!(
            s(4, &[&[2, 1]]).join_left(&s(4, &[&[3, 2]])).unwrap(),
            s(4, &[&[3, 2, 1]])
        );
        assert_eq!(
            s(4, &[&[3, 1]]).join_left(&s(4, &[&[4, 2]])).unwrap(),
            SimpleElement::delta(4)
        );
        let e = SimpleElement::identity(4);
        let d = SimpleElement::delta(4);
        assert_eq!(a.meet_left(&e).unwrap(), e);
        assert_eq!(a.join_left(&e).unwrap(), a);
        assert_eq!(a.meet_right(&d).unwrap(), a);
        assert_eq!(a.join_right(&d).unwrap(), d);
        assert_eq!(a.meet_right(&a).unwrap(), a);
        assert_eq!(a.join_right(&a).unwrap(), a);
        assert_eq!(
            a.meet_left(&SimpleElement::identity(5)),
            Err(Error::StrandMismatch(4, 5))
        );
    }

    #[test]
    fn complements() {
        for n in 2..7 {
            let e = SimpleElement::identity(n);
            let d = SimpleElement::delta(n);
            assert_eq!(e.right_complement(), d);
            assert_eq!(e.left_complement(), d);
            assert_eq!(d.right_complement(), e);
            assert_eq!(d.left_complement(), e);
        }
        let a = s(4, &[&[3, 2]]);
        assert_eq!(a.product_unchecked(&a.right_complement()), SimpleElement::delta(4));
        assert_eq!(a.left_complement().product_unchecked(&a), SimpleElement::delta(4));
        assert_eq!(a.complement_in(&a, Side::Right).unwrap(), SimpleElement::identity(4));
        let b = s(4, &[&[4, 1]]);
        assert_eq!(SimpleElement::identity(4).complement_in(&b, Side::Right).unwrap(), b);
    }

    #[test]
    fn left_weighting_b6() {
        // [4,3,2][4,1] is not simple: the pair stays of length two.
        let (a, b) = s(6, &[&[4, 3, 2]]).left_weight_pair(&s(6, &[&[4, 1]])).unwrap();
        assert!(!b.is_identity());
        assert!(a.is_left_weighted_with(&b));
        // [4,3][2,1] . [5,1] = [4,3][5,2,1] is simple.
        let (a, b) = s(6, &[&[4, 3], &[2, 1]])
            .left_weight_pair(&s(6, &[&[5, 1]]))
            .unwrap();
        assert_eq!(a, s(6, &[&[4, 3], &[5, 2, 1]]));
        assert!(b.is_identity());
    }

    #[test]
    fn parallel_cycles() {
        let c = |n, v: &[i64]| DescendingCycle::new(n, v).unwrap();
        assert!(c(6, &[4, 3]).is_parallel(&c(6, &[2, 1])));
        assert!(!c(4, &[3, 1]).is_parallel(&c(4, &[4, 2])));
        assert!(!c(4, &[3, 1]).is_parallel(&c(4, &[3, 2])));
        for n in 4..12usize {
            for u in 2..=n / 2 {
                for k in 2..=u {
                    let hi: Vec<i64> = (u + 1..=u + k).rev().map(|x| x as i64).collect();
                    let lo: Vec<i64> = (1..=k).rev().map(|x| x as i64).collect();
                    assert!(c(n, &hi).is_parallel(&c(n, &lo)), "n={n} u={u} k={k}");
                }
            }
        }
    }

    #[test]
    fn simple_permutation_validation() {
        assert!(SimpleElement::from_permutation(vec![1, 2, 0]).is_some());
        // descending orientation of a 3-block is not a simple element
        assert!(SimpleElement::from_permutation(vec![2, 0, 1]).is_none());
        // crossing transpositions (1 3)(2 4)
        assert!(SimpleElement::from_permutation(vec![2, 3, 0, 1]).is_none());
    }
}
