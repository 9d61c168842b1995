//! Generalized quotients `W/U`, splittings `(X, Y)` of `B_n`, and the
//! exhaustive check that `(W/U, [e,u]_R)` splits exactly for separable `u`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::patterns::{in_parabolic_subgroup, is_separable, parabolic_order};
use crate::report::{scan, LemmaReport, Observation};
use crate::signed_perm::{all, group_order, SignedPermutation, MAX_INDEXED_RANK};
use crate::weak_order::{interval_right, left_leq, lower_ideal_left, right_leq, Ideal};

fn check_ranks<'a, I>(n: usize, elements: I) -> Result<()>
where
    I: IntoIterator<Item = &'a SignedPermutation>,
{
    match elements.into_iter().find(|w| w.rank() != n) {
        Some(w) => Err(Error::RankMismatch { left: w.rank(), right: n }),
        None => Ok(()),
    }
}

/// `W/U = {w : ℓ(wu) = ℓ(w) + ℓ(u) for all u ∈ U}`, by direct filtering.
pub fn generalized_quotient(u_set: &[SignedPermutation], n: usize) -> Result<Vec<SignedPermutation>> {
    if u_set.is_empty() {
        return Err(Error::EmptySet);
    }
    check_ranks(n, u_set)?;
    let lengths: Vec<usize> = u_set.iter().map(SignedPermutation::length).collect();
    let mut out: Vec<_> = all(n)?
        .filter(|w| {
            let lw = w.length();
            u_set.iter().zip(&lengths).all(|(u, &lu)| (w * u).length() == lw + lu)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `W/[e,u]_R`, computed as the interval `[e, w_0 u⁻¹]_L`.
pub fn quotient_of_interval(u: &SignedPermutation) -> Ideal {
    let w0 = SignedPermutation::longest_element(u.rank()).expect("valid rank");
    lower_ideal_left(&(&w0 * &u.inverse()))
}

/// Whether the filter definition of `W/[e,u]_R` agrees with `[e, w_0 u⁻¹]_L`.
pub fn bw_interval_identity(u: &SignedPermutation) -> Result<bool> {
    let interval = interval_right(u);
    let filtered = generalized_quotient(interval.elements(), u.rank())?;
    Ok(filtered.as_slice() == quotient_of_interval(u).elements())
}

/// A pair of products showing that multiplication `X × Y → W` is not a
/// length-additive bijection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SplittingWitness {
    /// Two distinct pairs with the same product.
    Collision {
        first: (SignedPermutation, SignedPermutation),
        second: (SignedPermutation, SignedPermutation),
        product: SignedPermutation,
    },
    /// `ℓ(xy) < ℓ(x) + ℓ(y)`.
    LengthDeficit {
        x: SignedPermutation,
        y: SignedPermutation,
        product: SignedPermutation,
    },
}

impl SplittingWitness {
    /// Recomputes the products and confirms the failure is genuine.
    pub fn replay(&self) -> bool {
        match self {
            Self::Collision { first, second, product } => {
                first != second && &(&first.0 * &first.1) == product && &(&second.0 * &second.1) == product
            }
            Self::LengthDeficit { x, y, product } => {
                &(x * y) == product && product.length() != x.length() + y.length()
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingCounts {
    pub x: usize,
    pub y: usize,
    /// Order of the group being split.
    pub group: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingReport {
    pub is_splitting: bool,
    pub size_check: bool,
    pub counts: SplittingCounts,
    pub witness: Option<SplittingWitness>,
}

struct Bitmap(Vec<u64>);

impl Bitmap {
    fn new(bits: u64) -> Self {
        Self(vec![0; bits.div_ceil(64) as usize])
    }

    /// Sets the bit and reports whether it was already set.
    fn test_and_set(&mut self, k: u64) -> bool {
        let (word, bit) = ((k / 64) as usize, 1u64 << (k % 64));
        let was = self.0[word] & bit != 0;
        self.0[word] |= bit;
        was
    }
}

fn as_set(elements: &[SignedPermutation]) -> Vec<SignedPermutation> {
    let mut v = elements.to_vec();
    v.sort();
    v.dedup();
    v
}

/// Checks `X × Y → G` for a group `G` of order `group` containing every product.
fn check_splitting(x: &[SignedPermutation], y: &[SignedPermutation], n: usize, group: u64) -> SplittingReport {
    let counts = SplittingCounts { x: x.len(), y: y.len(), group };
    let size_check = x.len() as u64 * y.len() as u64 == group;
    let report = |witness: Option<SplittingWitness>| SplittingReport {
        is_splitting: size_check && witness.is_none(),
        size_check,
        counts,
        witness,
    };
    if !size_check {
        return report(None);
    }
    let ly: Vec<usize> = y.iter().map(SignedPermutation::length).collect();
    let mut seen = Bitmap::new(group_order(n).expect("indexed rank"));
    for (a, xa) in x.iter().enumerate() {
        let lx = xa.length();
        for (b, yb) in y.iter().enumerate() {
            let product = xa * yb;
            if product.length() != lx + ly[b] {
                return report(Some(SplittingWitness::LengthDeficit {
                    x: xa.clone(),
                    y: yb.clone(),
                    product,
                }));
            }
            if seen.test_and_set(product.index()) {
                let earlier = x[..=a]
                    .iter()
                    .flat_map(|p| y.iter().map(move |q| (p, q)))
                    .find(|(p, q)| *p * *q == product)
                    .expect("a colliding product was recorded earlier");
                return report(Some(SplittingWitness::Collision {
                    first: (earlier.0.clone(), earlier.1.clone()),
                    second: (xa.clone(), yb.clone()),
                    product,
                }));
            }
        }
    }
    report(None)
}

/// Whether `X × Y → B_n` is length-additive and bijective. Sizes are checked first.
pub fn is_splitting(x: &[SignedPermutation], y: &[SignedPermutation], n: usize) -> Result<SplittingReport> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > MAX_INDEXED_RANK {
        return Err(Error::RankTooLarge(n));
    }
    check_ranks(n, x.iter().chain(y))?;
    Ok(check_splitting(&as_set(x), &as_set(y), n, group_order(n).expect("indexed rank")))
}

/// The splitting test for `(W/[e,u]_R, [e,u]_R)`.
pub fn interval_splitting(u: &SignedPermutation) -> Result<SplittingReport> {
    let quotient = quotient_of_interval(u);
    let interval = interval_right(u);
    is_splitting(quotient.elements(), interval.elements(), u.rank())
}

/// The unique element of `set` that dominates all others under `leq`.
fn greatest<F>(set: &[SignedPermutation], leq: F) -> Result<SignedPermutation>
where
    F: Fn(&SignedPermutation, &SignedPermutation) -> Result<bool>,
{
    let top_len = set.iter().map(SignedPermutation::length).max().ok_or(Error::EmptySet)?;
    let mut tops = set.iter().filter(|w| w.length() == top_len);
    let top = tops.next().expect("a longest element exists");
    if tops.next().is_some() {
        return Err(Error::NoUniqueMaximum);
    }
    for w in set {
        if !leq(w, top)? {
            return Err(Error::NoUniqueMaximum);
        }
    }
    Ok(top.clone())
}

/// From a splitting `(X, Y)` with maxima `x_0` (left order) and `y_0`
/// (right order), `x_0 y_0 = w_0`, builds `({z x_0⁻¹}, {x_0 z w_0})`.
pub fn splitting_transport(
    x: &[SignedPermutation],
    y: &[SignedPermutation],
) -> Result<(Vec<SignedPermutation>, Vec<SignedPermutation>)> {
    let x0 = greatest(x, left_leq)?;
    let y0 = greatest(y, right_leq)?;
    let n = x0.rank();
    check_ranks(n, x.iter().chain(y))?;
    let w0 = SignedPermutation::longest_element(n)?;
    if &x0 * &y0 != w0 {
        return Err(Error::Precondition(format!(
            "maxima {x0} and {y0} do not multiply to the longest element"
        )));
    }
    let x0_inv = x0.inverse();
    let mut new_x: Vec<_> = x.iter().map(|z| z * &x0_inv).collect();
    let mut new_y: Vec<_> = y.iter().map(|z| &(&x0 * z) * &w0).collect();
    new_x.sort();
    new_y.sort();
    Ok((new_x, new_y))
}

/// Tests `(X ∩ W_J, Y ∩ W_J)` as a splitting of `W_J`.
pub fn splitting_restriction(
    x: &[SignedPermutation],
    y: &[SignedPermutation],
    n: usize,
    removed: &[usize],
) -> Result<SplittingReport> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > MAX_INDEXED_RANK {
        return Err(Error::RankTooLarge(n));
    }
    check_ranks(n, x.iter().chain(y))?;
    let order = parabolic_order(n, removed)?;
    let keep = |set: &[SignedPermutation]| -> Vec<SignedPermutation> {
        set.iter()
            .filter(|w| in_parabolic_subgroup(w, removed).expect("removed validated"))
            .cloned()
            .collect()
    };
    Ok(check_splitting(&as_set(&keep(x)), &as_set(&keep(y)), n, order))
}

/// The main equivalence on one element: the interval pair splits iff `u` is separable.
pub fn main_theorem_observation(u: &SignedPermutation) -> Observation {
    let report = interval_splitting(u).expect("rank already validated");
    let separable = is_separable(u);
    Observation::check(report.is_splitting == separable, || {
        format!(
            "separable = {separable} but splitting = {} (|W/U| = {}, |U| = {})",
            report.is_splitting, report.counts.x, report.counts.y
        )
    })
    .tag_if(separable, "separable")
    .tag_if(report.is_splitting, "splitting")
    .tag_if(!report.size_check, "size-mismatch")
}

/// For every `u ∈ B_n`: `(W/[e,u]_R, [e,u]_R)` is a splitting iff `u` is separable.
pub fn verify_main_theorem(n: usize) -> Result<LemmaReport> {
    if !(2..=6).contains(&n) {
        return Err(Error::RankOutOfRange { n, min: 2, max: 6 });
    }
    let universe: Vec<_> = all(n)?.collect();
    Ok(scan("theorem", n, &universe, |_| true, main_theorem_observation))
}
