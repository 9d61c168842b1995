//! The hyperoctahedral group `B_n` of signed permutations.
//!
//! An element is stored by its window `w_1 … w_n`, the images of `1 … n`.
//! The action on negative letters is forced by `w(-i) = -w(i)`. Products are
//! read as function composition, `(uv)(i) = u(v(i))`, so left multiplication
//! by a simple reflection acts on values and right multiplication acts on
//! positions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Windows are stored as `i8`, which leaves headroom above this bound.
pub const MAX_RANK: usize = 64;

/// Largest rank for which the group order (and therefore [`SignedPermutation::index`]) fits in a `u64`.
pub const MAX_INDEXED_RANK: usize = 16;

type Window = SmallVec<[i8; 8]>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Window,
}

/// A pair of positions `i < j`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexPair {
    pub i: usize,
    pub j: usize,
}

impl IndexPair {
    pub fn new(i: usize, j: usize) -> Self {
        debug_assert!(1 <= i && i < j);
        Self { i, j }
    }
}

/// Negative indices, inversions and negative-sum pairs of an element.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatisticSets {
    pub neg: Vec<usize>,
    pub inv: Vec<IndexPair>,
    pub nsp: Vec<IndexPair>,
}

impl StatisticSets {
    pub fn total(&self) -> usize {
        self.neg.len() + self.inv.len() + self.nsp.len()
    }
}

fn check_rank(n: usize) -> Result<()> {
    match n {
        0 => Err(Error::ZeroRank),
        n if n > MAX_RANK => Err(Error::RankTooLarge(n)),
        _ => Ok(()),
    }
}

/// `|B_n| = 2^n n!`, or `None` when it does not fit in a `u64`.
pub fn group_order(n: usize) -> Option<u64> {
    let mut order: u64 = 1;
    for k in 1..=n as u64 {
        order = order.checked_mul(2 * k)?;
    }
    Some(order)
}

impl SignedPermutation {
    /// Builds an element from its window, validating that the absolute values
    /// form a permutation of `1..=n`.
    pub fn new<T: Copy + Into<i64>>(window: &[T]) -> Result<Self> {
        let n = window.len();
        check_rank(n)?;
        let mut seen = vec![false; n + 1];
        let mut out = Window::with_capacity(n);
        for (pos, &v) in window.iter().enumerate() {
            let v: i64 = v.into();
            if v == 0 {
                return Err(Error::ZeroEntry(pos + 1));
            }
            let m = v.unsigned_abs() as usize;
            if m > n {
                return Err(Error::Parse(format!(
                    "entry {v} exceeds the rank {n} of the window"
                )));
            }
            if seen[m] {
                return Err(Error::DuplicateMagnitude(v.abs()));
            }
            seen[m] = true;
            out.push(v as i8);
        }
        Ok(Self { window: out })
    }

    pub(crate) fn from_window_unchecked(window: Window) -> Self {
        Self { window }
    }

    pub(crate) fn from_iter_unchecked<I: IntoIterator<Item = i8>>(iter: I) -> Self {
        Self::from_window_unchecked(iter.into_iter().collect())
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(Self::from_iter_unchecked(1..=n as i8))
    }

    /// `w_0 = -1 -2 … -n`, the unique element of length `n²`.
    pub fn longest_element(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(Self::from_iter_unchecked((1..=n as i8).map(|v| -v)))
    }

    /// `s_0` negates the first entry; `s_i` for `i ≥ 1` swaps positions `i` and `i + 1`.
    pub fn simple_reflection(n: usize, i: usize) -> Result<Self> {
        check_rank(n)?;
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut w = Self::identity(n)?;
        if i == 0 {
            w.window[0] = -1;
        } else {
            w.window.swap(i - 1, i);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i8] {
        &self.window
    }

    /// The entry `w_i` for a 1-based position.
    pub fn get(&self, i: usize) -> i8 {
        self.window[i - 1]
    }

    /// The image of a signed letter `±k`.
    pub fn apply(&self, letter: i8) -> i8 {
        let image = self.window[letter.unsigned_abs() as usize - 1];
        if letter < 0 {
            -image
        } else {
            image
        }
    }

    /// `u.compose(v)` is the product `uv`, i.e. `v` applied first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self::from_iter_unchecked(other.window.iter().map(|&v| self.apply(v)))
    }

    pub fn inverse(&self) -> Self {
        let mut out: Window = SmallVec::from_elem(0, self.rank());
        for (pos, &v) in self.window.iter().enumerate() {
            let slot = v.unsigned_abs() as usize - 1;
            out[slot] = if v < 0 { -(pos as i8 + 1) } else { pos as i8 + 1 };
        }
        Self { window: out }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i8 + 1)
    }

    /// `s_i · w`: on values, `s_0` flips the sign of `±1` and `s_i` exchanges `±i` with `±(i+1)`.
    pub fn left_multiply_simple(&self, i: usize) -> Self {
        debug_assert!(i < self.rank());
        let window = self
            .window
            .iter()
            .map(|&v| {
                let (m, sign) = (v.unsigned_abs() as usize, v.signum());
                match i {
                    0 if m == 1 => -v,
                    0 => v,
                    _ if m == i => sign * (i as i8 + 1),
                    _ if m == i + 1 => sign * i as i8,
                    _ => v,
                }
            })
            .collect();
        Self { window }
    }

    /// `w · s_i`: on positions, `s_0` negates `w_1` and `s_i` swaps `w_i` and `w_{i+1}`.
    pub fn right_multiply_simple(&self, i: usize) -> Self {
        debug_assert!(i < self.rank());
        let mut w = self.clone();
        if i == 0 {
            w.window[0] = -w.window[0];
        } else {
            w.window.swap(i - 1, i);
        }
        w
    }

    pub fn statistic_sets(&self) -> StatisticSets {
        let w = &self.window;
        let n = w.len();
        let mut sets = StatisticSets::default();
        for i in 0..n {
            if w[i] < 0 {
                sets.neg.push(i + 1);
            }
            for j in i + 1..n {
                if w[i] > w[j] {
                    sets.inv.push(IndexPair::new(i + 1, j + 1));
                }
                if w[i] as i16 + (w[j] as i16) < 0 {
                    sets.nsp.push(IndexPair::new(i + 1, j + 1));
                }
            }
        }
        sets
    }

    /// `#Neg + #Inv + #Nsp`.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let n = w.len();
        let mut len = 0;
        for i in 0..n {
            len += (w[i] < 0) as usize;
            for j in i + 1..n {
                len += (w[i] > w[j]) as usize;
                len += ((w[i] as i16 + w[j] as i16) < 0) as usize;
            }
        }
        len
    }

    /// `#Inv − Σ_{w_i < 0} w_i`, the second closed form for the length.
    pub fn length_by_negative_sum(&self) -> usize {
        let w = &self.window;
        let mut inv = 0usize;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                inv += (w[i] > w[j]) as usize;
            }
        }
        let neg: i64 = w.iter().filter(|&&v| v < 0).map(|&v| -(v as i64)).sum();
        inv + neg as usize
    }

    /// Position of this element in the enumeration order of [`all`]:
    /// the lexicographic rank of `|w|` times `2^n`, plus the sign mask.
    pub fn index(&self) -> u64 {
        let n = self.rank();
        assert!(n <= MAX_INDEXED_RANK, "index is only defined for n <= {MAX_INDEXED_RANK}");
        let mut used = 0u64;
        let mut perm_rank = 0u64;
        let mut mask = 0u64;
        for (pos, &v) in self.window.iter().enumerate() {
            let m = v.unsigned_abs() as u64 - 1;
            let smaller_unused = m - (used & ((1u64 << m) - 1)).count_ones() as u64;
            perm_rank = perm_rank * (n - pos) as u64 + smaller_unused;
            used |= 1 << m;
            if v < 0 {
                mask |= 1 << pos;
            }
        }
        (perm_rank << n) | mask
    }

    /// Inverse of [`index`](Self::index).
    pub fn from_index(n: usize, index: u64) -> Result<Self> {
        check_rank(n)?;
        if n > MAX_INDEXED_RANK {
            return Err(Error::RankTooLarge(n));
        }
        let order = group_order(n).expect("order fits for indexed ranks");
        if index >= order {
            return Err(Error::Parse(format!("index {index} out of range for B_{n}")));
        }
        let mask = index & ((1u64 << n) - 1);
        let mut perm_rank = index >> n;
        let mut digits = vec![0u64; n];
        for pos in (0..n).rev() {
            let base = (n - pos) as u64;
            digits[pos] = perm_rank % base;
            perm_rank /= base;
        }
        let mut remaining: Vec<i8> = (1..=n as i8).collect();
        let window = digits
            .iter()
            .enumerate()
            .map(|(pos, &d)| {
                let m = remaining.remove(d as usize);
                if mask & (1 << pos) != 0 {
                    -m
                } else {
                    m
                }
            })
            .collect();
        Ok(Self { window })
    }
}

/// Every element of `B_n`, in [`SignedPermutation::index`] order.
pub fn all(n: usize) -> Result<impl ExactSizeIterator<Item = SignedPermutation>> {
    check_rank(n)?;
    if n > MAX_INDEXED_RANK {
        return Err(Error::RankTooLarge(n));
    }
    let order = group_order(n).expect("order fits for indexed ranks");
    Ok((0..order as usize).map(move |k| {
        SignedPermutation::from_index(n, k as u64).expect("index within group order")
    }))
}

impl std::ops::Mul for &SignedPermutation {
    type Output = SignedPermutation;

    /// Panics on a rank mismatch; use [`SignedPermutation::compose`] for a checked product.
    fn mul(self, rhs: Self) -> SignedPermutation {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch in product");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.window.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses space-separated signed integers such as `"-2 3 4 5 1"`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("invalid entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if values.is_empty() {
            return Err(Error::Parse("empty window".into()));
        }
        Self::new(&values)
    }
}

impl Serialize for SignedPermutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignedPermutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    /// Signed permutation matrix with column `j` equal to `sign(w_j) e_{|w_j|}`.
    fn matrix(w: &SignedPermutation) -> Vec<Vec<i32>> {
        let n = w.rank();
        let mut m = vec![vec![0; n]; n];
        for (j, &v) in w.window().iter().enumerate() {
            m[v.unsigned_abs() as usize - 1][j] = v.signum() as i32;
        }
        m
    }

    fn matmul(a: &[Vec<i32>], b: &[Vec<i32>]) -> Vec<Vec<i32>> {
        let n = a.len();
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
            .collect()
    }

    #[test]
    fn constructors() {
        assert_eq!(SignedPermutation::identity(3).unwrap(), sp("1 2 3"));
        assert_eq!(SignedPermutation::identity(1).unwrap(), sp("1"));
        assert_eq!(SignedPermutation::identity(5).unwrap().length(), 0);
        assert_eq!(SignedPermutation::longest_element(2).unwrap(), sp("-1 -2"));
        assert_eq!(SignedPermutation::longest_element(3).unwrap().length(), 9);
        assert_eq!(SignedPermutation::simple_reflection(2, 0).unwrap(), sp("-1 2"));
        assert_eq!(SignedPermutation::simple_reflection(2, 1).unwrap(), sp("2 1"));
        assert_eq!(SignedPermutation::simple_reflection(5, 3).unwrap(), sp("1 2 4 3 5"));
        assert_eq!(SignedPermutation::identity(0), Err(Error::ZeroRank));
        assert!(matches!(
            SignedPermutation::simple_reflection(3, 3),
            Err(Error::IndexOutOfRange { index: 3, n: 3 })
        ));
    }

    #[test]
    fn parse_rejects_malformed_windows() {
        assert_eq!("1 0 2".parse::<SignedPermutation>(), Err(Error::ZeroEntry(2)));
        assert_eq!("1 -1".parse::<SignedPermutation>(), Err(Error::DuplicateMagnitude(1)));
        assert!(matches!("1 3".parse::<SignedPermutation>(), Err(Error::Parse(_))));
        assert!(matches!("".parse::<SignedPermutation>(), Err(Error::Parse(_))));
        assert!(matches!("1 x".parse::<SignedPermutation>(), Err(Error::Parse(_))));
        assert_eq!(sp("-2 3 4 5 1").to_string(), "-2 3 4 5 1");
    }

    #[test]
    fn composition_matches_matrix_product() {
        assert_eq!(sp("2 1").compose(&sp("-1 2")).unwrap(), sp("-2 1"));
        let w0 = SignedPermutation::longest_element(2).unwrap();
        assert_eq!(w0.compose(&sp("2 1")).unwrap(), sp("-2 -1"));
        let w0 = SignedPermutation::longest_element(4).unwrap();
        assert!((&w0 * &w0).is_identity());
        assert!(sp("1 2").compose(&sp("1 2 3")).is_err());

        let elems: Vec<_> = all(3).unwrap().collect();
        for u in elems.iter().step_by(5) {
            for v in &elems {
                let product = u * v;
                assert_eq!(matrix(&product), matmul(&matrix(u), &matrix(v)));
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(sp("-2 3 4 5 1").inverse(), sp("5 -1 2 3 4"));
        assert_eq!(sp("3 -1 4 2").inverse(), sp("-2 4 1 3"));
        assert!(SignedPermutation::identity(4).unwrap().inverse().is_identity());
    }

    #[test]
    fn statistic_sets_examples() {
        let s = sp("1 -2").statistic_sets();
        assert_eq!(s.neg, vec![2]);
        assert_eq!(s.inv, vec![IndexPair::new(1, 2)]);
        assert_eq!(s.nsp, vec![IndexPair::new(1, 2)]);
        let s = sp("-2 -1").statistic_sets();
        assert_eq!(s.neg, vec![1, 2]);
        assert!(s.inv.is_empty());
        assert_eq!(s.nsp, vec![IndexPair::new(1, 2)]);
        assert_eq!(SignedPermutation::identity(4).unwrap().statistic_sets().total(), 0);
    }

    #[test]
    fn length_examples() {
        assert_eq!(sp("1 -2").length(), 3);
        assert_eq!(sp("2 3 5 1 -4").length(), 11);
        for n in 1..=6 {
            assert_eq!(SignedPermutation::longest_element(n).unwrap().length(), n * n);
        }
    }

    #[test]
    fn length_formulas_agree() {
        for n in 1..=5 {
            for w in all(n).unwrap() {
                assert_eq!(w.length(), w.length_by_negative_sum(), "{w}");
                assert_eq!(w.length(), w.statistic_sets().total());
            }
        }
    }

    #[test]
    fn simple_reflections_change_length_by_one() {
        for n in 1..=4 {
            for w in all(n).unwrap() {
                for i in 0..n {
                    let s = SignedPermutation::simple_reflection(n, i).unwrap();
                    let sw = &s * &w;
                    assert_eq!(sw, w.left_multiply_simple(i));
                    assert_eq!(&w * &s, w.right_multiply_simple(i));
                    assert_eq!(sw.length().abs_diff(w.length()), 1);
                }
                assert_eq!(w.inverse().length(), w.length());
                assert!((&w * &w.inverse()).is_identity());
                let neg_inv: Vec<usize> = w.inverse().statistic_sets().neg;
                let mut expected: Vec<usize> = w
                    .statistic_sets()
                    .neg
                    .iter()
                    .map(|&i| w.get(i).unsigned_abs() as usize)
                    .collect();
                expected.sort();
                assert_eq!(neg_inv, expected);
            }
        }
    }

    #[test]
    fn enumeration_is_a_bijection_onto_indices() {
        for n in 1..=5 {
            let elems: Vec<_> = all(n).unwrap().collect();
            assert_eq!(elems.len() as u64, group_order(n).unwrap());
            for (k, w) in elems.iter().enumerate() {
                assert_eq!(w.index(), k as u64);
            }
            let mut sorted = elems.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), elems.len());
        }
        assert_eq!(group_order(6), Some(46080));
    }

    #[test]
    fn serde_uses_canonical_text() {
        let w = sp("-2 3 1");
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, "\"-2 3 1\"");
        assert_eq!(serde_json::from_str::<SignedPermutation>(&json).unwrap(), w);
    }
}
