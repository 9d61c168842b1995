//! The root system of type `B_n` in coordinates, inversion sets as sets of
//! roots, and the recursive pivot test for separability.
//!
//! Conventions: `Φ⁺ = {±e_i + e_j : i < j} ∪ {e_i}` with simple roots
//! `α_0 = e_1` and `α_i = -e_i + e_{i+1}`. An element acts by
//! `w e_i = e_{w_i}` where `e_{-k} = -e_k`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::signed_perm::SignedPermutation;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    coords: Vec<i32>,
}

impl RootVector {
    /// Accepts exactly the vectors `±e_i` and `±e_i ± e_j` (`i ≠ j`).
    pub fn new(coords: Vec<i32>) -> Result<Self> {
        let support: Vec<i32> = coords.iter().copied().filter(|&c| c != 0).collect();
        let ok = matches!(support.len(), 1 | 2) && support.iter().all(|c| c.abs() == 1);
        if ok {
            Ok(Self { coords })
        } else {
            Err(Error::NotARoot(format!("{coords:?}")))
        }
    }

    /// The basis vector `e_i` (1-based) in dimension `n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut coords = vec![0; n];
        coords[i - 1] = 1;
        Self { coords }
    }

    fn from_terms(n: usize, terms: &[(usize, i32)]) -> Self {
        let mut coords = vec![0; n];
        for &(i, c) in terms {
            coords[i - 1] += c;
        }
        Self { coords }
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Positive iff the last nonzero coordinate is positive.
    pub fn is_positive(&self) -> bool {
        self.coords.iter().rev().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }

    pub fn dot(&self, other: &Self) -> i64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| a as i64 * b as i64)
            .sum()
    }

    /// Image under the linear action of a signed permutation.
    pub fn act(&self, w: &SignedPermutation) -> Self {
        let mut coords = vec![0; self.dim()];
        for (i, &c) in self.coords.iter().enumerate() {
            let target = w.get(i + 1);
            coords[target.unsigned_abs() as usize - 1] += c * target.signum() as i32;
        }
        Self { coords }
    }

    fn difference(&self, other: &Self) -> Vec<i32> {
        self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect()
    }
}

impl fmt::Display for RootVector {
    /// Written as a combination of basis vectors, e.g. `-e1+e2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = match (c < 0, first) {
                (true, _) => "-",
                (false, true) => "",
                (false, false) => "+",
            };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            write!(f, "{sign}{mag}e{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A subsystem `Φ ∩ U` given by its positive roots and an ordered simple system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSubsystem {
    positive_roots: BTreeSet<RootVector>,
    simple_roots: Vec<RootVector>,
    ambient_rank: usize,
}

/// The positive roots of `B_n`.
fn positive_roots_b(n: usize) -> BTreeSet<RootVector> {
    let mut roots = BTreeSet::new();
    for j in 1..=n {
        roots.insert(RootVector::basis(n, j));
        for i in 1..j {
            roots.insert(RootVector::from_terms(n, &[(i, -1), (j, 1)]));
            roots.insert(RootVector::from_terms(n, &[(i, 1), (j, 1)]));
        }
    }
    roots
}

/// Every root of `B_n`, positive and negative.
pub fn all_roots(n: usize) -> Vec<RootVector> {
    positive_roots_b(n)
        .into_iter()
        .flat_map(|r| {
            let neg = RootVector { coords: r.coords.iter().map(|c| -c).collect() };
            [r, neg]
        })
        .collect()
}

/// The full system of type `B_n`, simple roots ordered `α_0, …, α_{n-1}`.
pub fn full_system(n: usize) -> Result<RootSubsystem> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut simple = vec![RootVector::basis(n, 1)];
    for i in 1..n {
        simple.push(RootVector::from_terms(n, &[(i, -1), (i + 1, 1)]));
    }
    Ok(RootSubsystem {
        positive_roots: positive_roots_b(n),
        simple_roots: simple,
        ambient_rank: n,
    })
}

/// Solves `target = Σ c_k basis_k` exactly. `None` if the target is outside the span.
fn solve_in_basis(basis: &[RootVector], target: &[i32]) -> Option<Vec<Rational64>> {
    let rows = target.len();
    let cols = basis.len();
    // Augmented matrix [B | t] with the basis vectors as columns.
    let mut m: Vec<Vec<Rational64>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational64> =
                basis.iter().map(|b| Rational64::from_integer(b.coords[r] as i64)).collect();
            row.push(Rational64::from_integer(target[r] as i64));
            row
        })
        .collect();
    let mut pivots = Vec::with_capacity(cols);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != Rational64::from_integer(0)) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][c];
        for x in m[r].iter_mut() {
            *x /= lead;
        }
        for i in 0..rows {
            if i != r && m[i][c] != Rational64::from_integer(0) {
                let factor = m[i][c];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x -= factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| row[cols] != Rational64::from_integer(0)) {
        return None;
    }
    let mut coeffs = vec![Rational64::from_integer(0); cols];
    for (row, &c) in pivots.iter().enumerate() {
        coeffs[c] = m[row][cols];
    }
    Some(coeffs)
}

impl RootSubsystem {
    pub fn positive_roots(&self) -> &BTreeSet<RootVector> {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[RootVector] {
        &self.simple_roots
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// Coordinates of `v` in the simple-root basis, or `None` outside the span.
    pub fn simple_coefficients(&self, v: &[i32]) -> Option<Vec<Rational64>> {
        solve_in_basis(&self.simple_roots, v)
    }

    /// The subsystem spanned by a subset of this system's simple roots.
    pub fn span_of(&self, simple: Vec<RootVector>) -> RootSubsystem {
        let positive_roots = self
            .positive_roots
            .iter()
            .filter(|r| solve_in_basis(&simple, &r.coords).is_some())
            .cloned()
            .collect();
        RootSubsystem {
            positive_roots,
            simple_roots: simple,
            ambient_rank: self.ambient_rank,
        }
    }

    /// The subsystem spanned by the simple roots with the given indices (into `simple_roots`).
    pub fn span_of_indices(&self, indices: &[usize]) -> RootSubsystem {
        self.span_of(indices.iter().map(|&k| self.simple_roots[k].clone()).collect())
    }

    fn check_member(&self, r: &RootVector) -> Result<()> {
        if self.positive_roots.contains(r) {
            Ok(())
        } else {
            Err(Error::NotPositiveRoot(r.to_string()))
        }
    }

    /// `α ≤ β` iff `β − α` is a nonnegative integer combination of the simple roots.
    pub fn dominance_leq(&self, alpha: &RootVector, beta: &RootVector) -> Result<bool> {
        self.check_member(alpha)?;
        self.check_member(beta)?;
        Ok(self.leq_unchecked(alpha, beta))
    }

    fn leq_unchecked(&self, alpha: &RootVector, beta: &RootVector) -> bool {
        match self.simple_coefficients(&beta.difference(alpha)) {
            Some(c) => c.iter().all(|x| x.is_integer() && *x >= Rational64::from_integer(0)),
            None => false,
        }
    }

    /// `{β ∈ Φ⁺ : β ≥ α}`.
    pub fn upper_set(&self, alpha: &RootVector) -> Result<BTreeSet<RootVector>> {
        self.check_member(alpha)?;
        Ok(self
            .positive_roots
            .iter()
            .filter(|b| self.leq_unchecked(alpha, b))
            .cloned()
            .collect())
    }

    /// Connected components of the simple roots under non-orthogonality.
    pub fn components(&self) -> Vec<RootSubsystem> {
        let k = self.simple_roots.len();
        let mut label: Vec<usize> = (0..k).collect();
        fn find(label: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while label[r] != r {
                r = label[r];
            }
            label[x] = r;
            r
        }
        for a in 0..k {
            for b in a + 1..k {
                if self.simple_roots[a].dot(&self.simple_roots[b]) != 0 {
                    let (ra, rb) = (find(&mut label, a), find(&mut label, b));
                    label[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_of: Vec<Option<usize>> = vec![None; k];
        for a in 0..k {
            let r = find(&mut label, a);
            match root_of[r] {
                Some(g) => groups[g].push(a),
                None => {
                    root_of[r] = Some(groups.len());
                    groups.push(vec![a]);
                }
            }
        }
        groups.iter().map(|g| self.span_of_indices(g)).collect()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components().len() <= 1
    }
}

/// `I_Φ(w)`: `e_i` for negative indices, `-e_i + e_j` for inversions and
/// `e_i + e_j` for negative-sum pairs.
pub fn inversion_roots(w: &SignedPermutation) -> BTreeSet<RootVector> {
    let n = w.rank();
    let sets = w.statistic_sets();
    let mut roots = BTreeSet::new();
    for i in sets.neg {
        roots.insert(RootVector::basis(n, i));
    }
    for p in sets.inv {
        roots.insert(RootVector::from_terms(n, &[(p.i, -1), (p.j, 1)]));
    }
    for p in sets.nsp {
        roots.insert(RootVector::from_terms(n, &[(p.i, 1), (p.j, 1)]));
    }
    roots
}

/// Recursive separability test on an inversion set.
///
/// Rank at most one is separable; a reducible system is separable when every
/// component is; an irreducible one needs a pivot simple root whose upper set
/// is either inside `inv` or disjoint from it, with the system spanned by the
/// remaining simple roots separable. Restrictions pass `inv ∩ span`.
pub fn is_separable_recursive(inv: &BTreeSet<RootVector>, sys: &RootSubsystem) -> Result<bool> {
    if let Some(bad) = inv.iter().find(|r| !sys.positive_roots.contains(*r)) {
        return Err(Error::NotPositiveRoot(bad.to_string()));
    }
    Ok(separable_rec(inv, sys))
}

fn restrict(inv: &BTreeSet<RootVector>, sys: &RootSubsystem) -> BTreeSet<RootVector> {
    inv.intersection(&sys.positive_roots).cloned().collect()
}

fn separable_rec(inv: &BTreeSet<RootVector>, sys: &RootSubsystem) -> bool {
    if sys.rank() <= 1 {
        return true;
    }
    let comps = sys.components();
    if comps.len() > 1 {
        return comps.iter().all(|c| separable_rec(&restrict(inv, c), c));
    }
    (0..sys.rank()).any(|k| {
        let alpha = &sys.simple_roots[k];
        let upper: Vec<&RootVector> = sys
            .positive_roots
            .iter()
            .filter(|b| sys.leq_unchecked(alpha, b))
            .collect();
        let inside = upper.iter().all(|b| inv.contains(*b));
        let outside = upper.iter().all(|b| !inv.contains(*b));
        if !(inside || outside) {
            return false;
        }
        let rest: Vec<usize> = (0..sys.rank()).filter(|&j| j != k).collect();
        let sub = sys.span_of_indices(&rest);
        separable_rec(&restrict(inv, &sub), &sub)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed_perm::all;

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    fn rv(c: &[i32]) -> RootVector {
        RootVector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn full_system_counts() {
        let b2 = full_system(2).unwrap();
        let expected: BTreeSet<_> =
            [rv(&[1, 0]), rv(&[0, 1]), rv(&[-1, 1]), rv(&[1, 1])].into_iter().collect();
        assert_eq!(b2.positive_roots(), &expected);
        assert_eq!(b2.simple_roots(), &[rv(&[1, 0]), rv(&[-1, 1])]);
        assert_eq!(full_system(4).unwrap().positive_roots().len(), 16);
        assert_eq!(full_system(1).unwrap().positive_roots().len(), 1);
        for n in 1..=5 {
            let sys = full_system(n).unwrap();
            assert_eq!(sys.positive_roots().len(), n * n);
            assert!(sys.positive_roots().iter().all(RootVector::is_positive));
        }
    }

    #[test]
    fn root_validation() {
        assert!(RootVector::new(vec![0, 0]).is_err());
        assert!(RootVector::new(vec![2, 0]).is_err());
        assert!(RootVector::new(vec![1, 1, 1]).is_err());
        assert_eq!(rv(&[-1, 1]).to_string(), "-e1+e2");
    }

    #[test]
    fn positive_roots_are_nonnegative_simple_combinations() {
        for n in 1..=5 {
            let sys = full_system(n).unwrap();
            for r in sys.positive_roots() {
                let c = sys.simple_coefficients(r.coords()).unwrap();
                assert!(c.iter().all(|x| x.is_integer() && *x >= Rational64::from_integer(0)));
            }
        }
    }

    #[test]
    fn inversion_roots_examples() {
        let n = 2;
        let e1 = RootVector::basis(n, 1);
        let e2 = RootVector::basis(n, 2);
        let e12 = rv(&[1, 1]);
        let expected: BTreeSet<_> = [e1, e2, e12].into_iter().collect();
        assert_eq!(inversion_roots(&sp("-2 -1")), expected);
        assert!(inversion_roots(&SignedPermutation::identity(4).unwrap()).is_empty());
        let w0 = SignedPermutation::longest_element(2).unwrap();
        assert_eq!(&inversion_roots(&w0), full_system(2).unwrap().positive_roots());
    }

    #[test]
    fn inversion_roots_agree_with_the_linear_action() {
        for n in 1..=4 {
            let sys = full_system(n).unwrap();
            let mut seen = BTreeSet::new();
            for w in all(n).unwrap() {
                let by_action: BTreeSet<_> = sys
                    .positive_roots()
                    .iter()
                    .filter(|r| !r.act(&w).is_positive())
                    .cloned()
                    .collect();
                let roots = inversion_roots(&w);
                assert_eq!(roots, by_action, "{w}");
                assert_eq!(roots.len(), w.length());
                assert!(seen.insert(roots), "inversion set repeated for {w}");
            }
        }
        for w in all(5).unwrap() {
            assert_eq!(inversion_roots(&w).len(), w.length());
        }
    }

    #[test]
    fn dominance_examples() {
        let b2 = full_system(2).unwrap();
        let a0 = rv(&[1, 0]);
        let a1 = rv(&[-1, 1]);
        let top = rv(&[1, 1]);
        assert!(b2.dominance_leq(&a0, &top).unwrap());
        assert!(b2.dominance_leq(&a1, &a1).unwrap());
        assert!(!b2.dominance_leq(&a1, &a0).unwrap());
        assert!(b2.dominance_leq(&rv(&[-1, 0]), &a0).is_err());
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 1..=4 {
            let sys = full_system(n).unwrap();
            let roots: Vec<_> = sys.positive_roots().iter().cloned().collect();
            let leq = |a: &RootVector, b: &RootVector| sys.dominance_leq(a, b).unwrap();
            for a in &roots {
                assert!(leq(a, a));
                for b in &roots {
                    if a != b {
                        assert!(!(leq(a, b) && leq(b, a)));
                    }
                    for c in &roots {
                        if leq(a, b) && leq(b, c) {
                            assert!(leq(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn components_examples() {
        for n in 1..=5 {
            assert!(full_system(n).unwrap().is_irreducible());
        }
        let b3 = full_system(3).unwrap();
        let comps = b3.span_of_indices(&[0, 2]).components();
        assert_eq!(comps.iter().map(RootSubsystem::rank).collect::<Vec<_>>(), vec![1, 1]);

        let b4 = full_system(4).unwrap();
        let comps = b4.span_of_indices(&[0, 2, 3]).components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].rank(), 1);
        assert_eq!(comps[0].positive_roots().len(), 1);
        assert_eq!(comps[1].rank(), 2);
        assert_eq!(comps[1].positive_roots().len(), 3);
    }

    #[test]
    fn spans_are_closed_subsystems() {
        let n = 4;
        let b4 = full_system(n).unwrap();
        let roots = all_roots(n);
        for mask in 0u32..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|&k| mask & (1 << k) != 0).collect();
            let sub = b4.span_of_indices(&idx);
            let in_span: BTreeSet<_> = roots
                .iter()
                .filter(|r| sub.simple_coefficients(r.coords()).is_some())
                .cloned()
                .collect();
            let expected: BTreeSet<_> = sub
                .positive_roots()
                .iter()
                .flat_map(|r| {
                    let neg = RootVector::new(r.coords().iter().map(|c| -c).collect()).unwrap();
                    [r.clone(), neg]
                })
                .collect();
            assert_eq!(in_span, expected);
        }
    }

    #[test]
    fn recursive_oracle_examples() {
        let b2 = full_system(2).unwrap();
        assert!(!is_separable_recursive(&inversion_roots(&sp("-2 1")), &b2).unwrap());
        assert!(is_separable_recursive(&inversion_roots(&sp("1 -2")), &b2).unwrap());
        assert!(is_separable_recursive(&BTreeSet::new(), &full_system(3).unwrap()).unwrap());
        let bogus: BTreeSet<_> = [rv(&[-1, 0])].into_iter().collect();
        assert!(is_separable_recursive(&bogus, &b2).is_err());
    }
}
