//! Left and right weak order, principal ideals, rank polynomials and
//! reduced words.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomials::Polynomial;
use crate::signed_perm::SignedPermutation;

fn same_rank(u: &SignedPermutation, w: &SignedPermutation) -> Result<()> {
    if u.rank() == w.rank() {
        Ok(())
    } else {
        Err(Error::RankMismatch { left: u.rank(), right: w.rank() })
    }
}

/// `u ≤_L w` iff each of `Neg`, `Inv`, `Nsp` of `u` is contained in that of `w`.
pub fn left_leq(u: &SignedPermutation, w: &SignedPermutation) -> Result<bool> {
    same_rank(u, w)?;
    let (a, b) = (u.window(), w.window());
    let n = a.len();
    for i in 0..n {
        if a[i] < 0 && b[i] >= 0 {
            return Ok(false);
        }
        for j in i + 1..n {
            if a[i] > a[j] && b[i] <= b[j] {
                return Ok(false);
            }
            if (a[i] as i16 + a[j] as i16) < 0 && (b[i] as i16 + b[j] as i16) >= 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `u ≤_R w` iff `u⁻¹ ≤_L w⁻¹`.
pub fn right_leq(u: &SignedPermutation, w: &SignedPermutation) -> Result<bool> {
    same_rank(u, w)?;
    left_leq(&u.inverse(), &w.inverse())
}

/// Indices `i` with `ℓ(s_i w) < ℓ(w)`.
pub fn left_descents(w: &SignedPermutation) -> Vec<usize> {
    let inv = w.inverse();
    let v = inv.window();
    (0..w.rank())
        .filter(|&i| if i == 0 { v[0] < 0 } else { v[i - 1] > v[i] })
        .collect()
}

/// Indices `i` with `ℓ(s_i w) > ℓ(w)`.
pub fn left_ascents(w: &SignedPermutation) -> Vec<usize> {
    let desc = left_descents(w);
    (0..w.rank()).filter(|i| !desc.contains(i)).collect()
}

/// The elements covered by `w` in left weak order.
pub fn lower_covers_left(w: &SignedPermutation) -> Vec<SignedPermutation> {
    let mut covers: Vec<_> = left_descents(w)
        .into_iter()
        .map(|i| w.left_multiply_simple(i))
        .collect();
    covers.sort();
    covers
}

/// The elements covering `w` in left weak order.
pub fn upper_covers_left(w: &SignedPermutation) -> Vec<SignedPermutation> {
    let mut covers: Vec<_> = left_ascents(w)
        .into_iter()
        .map(|i| w.left_multiply_simple(i))
        .collect();
    covers.sort();
    covers
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    /// `[e, w]_L`
    LowerLeft,
    /// `[w, w_0]_L`
    UpperLeft,
    /// `[e, w]_R`
    LowerRight,
}

/// A principal ideal or filter of a weak order, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ideal {
    kind: IdealKind,
    apex: SignedPermutation,
    elements: Vec<SignedPermutation>,
}

impl Ideal {
    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn apex(&self) -> &SignedPermutation {
        &self.apex
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<SignedPermutation> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &SignedPermutation) -> bool {
        self.elements.binary_search(w).is_ok()
    }

    /// Rank-generating function of the ideal as a poset graded from its
    /// minimum: absolute length for lower ideals, `ℓ(x) − ℓ(w)` for `[w, w_0]_L`.
    pub fn rank_polynomial(&self) -> Polynomial {
        let base = match self.kind {
            IdealKind::UpperLeft => self.apex.length(),
            IdealKind::LowerLeft | IdealKind::LowerRight => 0,
        };
        Polynomial::from_ranks(self.elements.iter().map(|x| x.length() - base))
    }
}

/// `Σ q^{ℓ(x)}` over a set of elements.
pub fn rank_polynomial<'a, I>(elements: I) -> Polynomial
where
    I: IntoIterator<Item = &'a SignedPermutation>,
{
    Polynomial::from_ranks(elements.into_iter().map(SignedPermutation::length))
}

/// Closure of `start` under `step`, explored layer by layer.
fn closure<F>(start: &SignedPermutation, step: F) -> Vec<SignedPermutation>
where
    F: Fn(&SignedPermutation) -> Vec<SignedPermutation>,
{
    let mut out = vec![start.clone()];
    let mut frontier = vec![start.clone()];
    while !frontier.is_empty() {
        // Each step moves one rank, so only the next layer needs deduplication.
        let mut next = HashSet::new();
        for w in &frontier {
            next.extend(step(w));
        }
        frontier = next.into_iter().collect();
        out.extend(frontier.iter().cloned());
    }
    out.sort();
    out
}

/// `[e, w]_L`.
pub fn lower_ideal_left(w: &SignedPermutation) -> Ideal {
    Ideal {
        kind: IdealKind::LowerLeft,
        apex: w.clone(),
        elements: closure(w, lower_covers_left),
    }
}

/// `[w, w_0]_L`.
pub fn upper_ideal_left(w: &SignedPermutation) -> Ideal {
    Ideal {
        kind: IdealKind::UpperLeft,
        apex: w.clone(),
        elements: closure(w, upper_covers_left),
    }
}

/// `[e, u]_R`, obtained by inverting `[e, u⁻¹]_L`.
pub fn interval_right(u: &SignedPermutation) -> Ideal {
    let mut elements: Vec<_> = closure(&u.inverse(), lower_covers_left)
        .iter()
        .map(SignedPermutation::inverse)
        .collect();
    elements.sort();
    Ideal { kind: IdealKind::LowerRight, apex: u.clone(), elements }
}

/// Number of reduced words of `w`, by the recursion
/// `count(v) = Σ count(s v)` over left descents `s` of `v`.
pub fn reduced_word_count(w: &SignedPermutation) -> BigUint {
    let mut ideal = closure(w, lower_covers_left);
    ideal.sort_by_key(SignedPermutation::length);
    let mut count: HashMap<SignedPermutation, BigUint> = HashMap::with_capacity(ideal.len());
    for v in ideal {
        let c = if v.is_identity() {
            BigUint::from(1u8)
        } else {
            left_descents(&v)
                .into_iter()
                .map(|i| count[&v.left_multiply_simple(i)].clone())
                .sum()
        };
        count.insert(v, c);
    }
    count.remove(w).expect("apex is in its own ideal")
}

/// Reduced words `i_1 … i_ℓ` with `w = s_{i_1} ⋯ s_{i_ℓ}`, in lexicographic
/// order, stopping after `limit` words.
pub fn reduced_words(w: &SignedPermutation, limit: usize) -> Vec<Vec<usize>> {
    fn go(
        w: &SignedPermutation,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if w.is_identity() {
            out.push(prefix.clone());
            return;
        }
        for i in left_descents(w) {
            prefix.push(i);
            go(&w.left_multiply_simple(i), prefix, out, limit);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(w, &mut Vec::with_capacity(w.length()), &mut out, limit);
    out
}

/// The product `s_{i_1} ⋯ s_{i_k}` in `B_n`.
pub fn word_product(n: usize, word: &[usize]) -> Result<SignedPermutation> {
    let mut w = SignedPermutation::identity(n)?;
    for &i in word.iter().rev() {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        w = w.left_multiply_simple(i);
    }
    Ok(w)
}
