//! Standardization, signed pattern containment, separability by pattern
//! avoidance, minimal non-separability and parabolic factorization.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::signed_perm::{all, SignedPermutation};

/// Ranks of the keys, 1-based; ties are rejected by the callers.
fn ranks(keys: &[i64]) -> Vec<i8> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by_key(|&k| keys[k]);
    let mut out = vec![0i8; keys.len()];
    for (r, &k) in order.iter().enumerate() {
        out[k] = r as i8 + 1;
    }
    out
}

fn check_nonzero(values: &[i64]) -> Result<()> {
    match values.iter().position(|&v| v == 0) {
        Some(pos) => Err(Error::ZeroEntry(pos + 1)),
        None => Ok(()),
    }
}

fn first_repeat(keys: &[i64]) -> Option<i64> {
    let mut sorted = keys.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).find(|p| p[0] == p[1]).map(|p| p[0])
}

/// The unsigned pattern of a sequence: `st(a)_i < st(a)_j` iff `a_i < a_j`.
pub fn st(values: &[i64]) -> Result<SignedPermutation> {
    check_nonzero(values)?;
    if let Some(v) = first_repeat(values) {
        return Err(Error::DuplicateValue(v));
    }
    if values.is_empty() {
        return Err(Error::ZeroRank);
    }
    Ok(SignedPermutation::from_iter_unchecked(ranks(values)))
}

/// The signed pattern of a sequence: signs are kept and absolute values are
/// replaced by their ranks.
pub fn sts(values: &[i64]) -> Result<SignedPermutation> {
    check_nonzero(values)?;
    let mags: Vec<i64> = values.iter().map(|v| v.abs()).collect();
    if let Some(m) = first_repeat(&mags) {
        return Err(Error::DuplicateMagnitude(m));
    }
    if values.is_empty() {
        return Err(Error::ZeroRank);
    }
    Ok(sts_unchecked(values.iter().map(|&v| v as i8)))
}

fn st_unchecked<I: IntoIterator<Item = i8>>(values: I) -> SignedPermutation {
    let keys: Vec<i64> = values.into_iter().map(i64::from).collect();
    SignedPermutation::from_iter_unchecked(ranks(&keys))
}

fn sts_unchecked<I: IntoIterator<Item = i8>>(values: I) -> SignedPermutation {
    let values: Vec<i8> = values.into_iter().collect();
    let mags: Vec<i64> = values.iter().map(|v| v.unsigned_abs() as i64).collect();
    let r = ranks(&mags);
    SignedPermutation::from_iter_unchecked(
        values.iter().zip(r).map(|(&v, r)| if v < 0 { -r } else { r }),
    )
}

fn sts_of_positions(w: &SignedPermutation, positions: &[usize]) -> SignedPermutation {
    sts_unchecked(positions.iter().map(|&p| w.get(p)))
}

/// Whether the sequence `seq` has a subsequence whose signed pattern is `p`.
fn slice_contains(seq: &[i8], p: &[i8]) -> bool {
    fn go(seq: &[i8], p: &[i8], chosen: &mut Vec<i8>, start: usize) -> bool {
        let k = chosen.len();
        if k == p.len() {
            return true;
        }
        let need = p.len() - k;
        for idx in start..=seq.len().saturating_sub(need) {
            let v = seq[idx];
            if (v < 0) != (p[k] < 0) {
                continue;
            }
            let fits = chosen.iter().zip(p).all(|(&c, &q)| {
                (c.unsigned_abs() < v.unsigned_abs()) == (q.unsigned_abs() < p[k].unsigned_abs())
            });
            if fits {
                chosen.push(v);
                if go(seq, p, chosen, idx + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    p.len() <= seq.len() && go(seq, p, &mut Vec::with_capacity(p.len()), 0)
}

/// Whether some subsequence of `w` standardizes (signed) to `p`.
pub fn contains_pattern(w: &SignedPermutation, p: &SignedPermutation) -> bool {
    slice_contains(w.window(), p.window())
}

/// A named family of patterns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    name: &'static str,
    members: Vec<SignedPermutation>,
}

const SET_WINDOWS: &[(&str, &[&[i8]])] = &[
    (
        "sep-forbidden-6",
        &[&[-2, 1], &[2, -1], &[3, 1, 4, 2], &[2, 4, 1, 3], &[-3, -1, -4, -2], &[-2, -4, -1, -3]],
    ),
    (
        "minnonsep-quad-pos",
        &[&[1, 3, -4, 2], &[2, -3, 4, 1], &[-1, 3, -4, 2], &[-2, 3, -4, 1]],
    ),
    (
        "minnonsep-quad-neg",
        &[&[-1, -3, 4, -2], &[-2, 3, -4, -1], &[1, -3, 4, -2], &[2, -3, 4, -1]],
    ),
    ("inverse-quad-pos", &[&[-1, -4, -2, 3], &[1, -4, -2, 3]]),
    ("inverse-quad-neg", &[&[1, 4, 2, -3], &[-1, 4, 2, -3]]),
];

const TYPE_A_FORBIDDEN: &[&[i8]] = &[&[3, 1, 4, 2], &[2, 4, 1, 3]];

fn registry() -> &'static [PatternSet] {
    static SETS: OnceLock<Vec<PatternSet>> = OnceLock::new();
    SETS.get_or_init(|| {
        SET_WINDOWS
            .iter()
            .map(|&(name, windows)| {
                let mut members: Vec<SignedPermutation> = windows
                    .iter()
                    .map(|w| SignedPermutation::new(w).expect("pattern tables are valid"))
                    .collect();
                members.sort();
                members.dedup();
                PatternSet { name, members }
            })
            .collect()
    })
}

impl PatternSet {
    pub fn names() -> Vec<&'static str> {
        SET_WINDOWS.iter().map(|&(name, _)| name).collect()
    }

    pub fn named(name: &str) -> Result<&'static PatternSet> {
        registry()
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn members(&self) -> &[SignedPermutation] {
        &self.members
    }

    /// The first member (in sorted order) occurring in `w`.
    pub fn first_contained(&self, w: &SignedPermutation) -> Option<&SignedPermutation> {
        self.members.iter().find(|p| contains_pattern(w, p))
    }

    pub fn avoided_by(&self, w: &SignedPermutation) -> bool {
        self.first_contained(w).is_none()
    }

    fn contains_member(&self, p: &SignedPermutation) -> bool {
        self.members.binary_search(p).is_ok()
    }
}

fn set(name: &str) -> &'static PatternSet {
    PatternSet::named(name).expect("built-in pattern set")
}

/// Separable iff `w` avoids `2̄1`, `21̄`, `3142`, `2413`, `3̄1̄4̄2̄` and `2̄4̄1̄3̄`.
pub fn is_separable(w: &SignedPermutation) -> bool {
    set("sep-forbidden-6").avoided_by(w)
}

/// Separability in the symmetric group: avoidance of `3142` and `2413`.
pub fn is_separable_unsigned(seq: &[i8]) -> bool {
    TYPE_A_FORBIDDEN.iter().all(|p| !slice_contains(seq, p))
}

/// All elements of `B_n` whose unsigned pattern is `target`.
pub fn st_class(target: &SignedPermutation) -> Result<Vec<SignedPermutation>> {
    Ok(all(target.rank())?
        .filter(|w| &st_unchecked(w.window().iter().copied()) == target)
        .collect())
}

/// The separable elements of `B_n`, sorted.
pub fn separable_elements(n: usize) -> Result<Vec<SignedPermutation>> {
    let mut out: Vec<_> = all(n)?.filter(is_separable).collect();
    out.sort();
    Ok(out)
}

/// Positions of the blocks of `W_J` for `J = Δ ∖ {α_p : p ∈ removed}`: the
/// first block `1..=p_1` is of type B, the rest are of type A.
fn blocks(n: usize, removed: &[usize]) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut cuts: Vec<usize> = removed.to_vec();
    cuts.sort_unstable();
    cuts.dedup();
    if let Some(&bad) = cuts.iter().find(|&&p| p >= n) {
        return Err(Error::IndexOutOfRange { index: bad, n });
    }
    let signed = cuts.first().copied().unwrap_or(n);
    let mut later = Vec::new();
    for (k, &start) in cuts.iter().enumerate() {
        let end = cuts.get(k + 1).copied().unwrap_or(n);
        later.push((start + 1, end));
    }
    Ok((signed, later))
}

/// `w = w^J · w_J` with `w^J` a minimal coset representative and `w_J ∈ W_J`,
/// where `J` omits the simple roots indexed by `removed`. Returns
/// `(w^J, w_J)`; for `removed = ∅` this is `(e, w)`.
pub fn parabolic_factor(
    w: &SignedPermutation,
    removed: &[usize],
) -> Result<(SignedPermutation, SignedPermutation)> {
    let n = w.rank();
    let (signed, later) = blocks(n, removed)?;
    let win = w.window();
    let mut quotient: Vec<i8> = Vec::with_capacity(n);
    let mut subgroup: Vec<i8> = Vec::with_capacity(n);

    if signed > 0 {
        let head = &win[..signed];
        let mut mags: Vec<i8> = head.iter().map(|v| v.abs()).collect();
        mags.sort_unstable();
        quotient.extend(mags);
        subgroup.extend(sts_unchecked(head.iter().copied()).window().iter().copied());
    }
    for &(start, end) in &later {
        let block = &win[start - 1..end];
        let mut sorted = block.to_vec();
        sorted.sort_unstable();
        quotient.extend(sorted);
        let offset = start as i8 - 1;
        subgroup.extend(st_unchecked(block.iter().copied()).window().iter().map(|&r| r + offset));
    }
    Ok((
        SignedPermutation::from_iter_unchecked(quotient),
        SignedPermutation::from_iter_unchecked(subgroup),
    ))
}

/// Membership in `W_J`.
pub fn in_parabolic_subgroup(w: &SignedPermutation, removed: &[usize]) -> Result<bool> {
    let (signed, later) = blocks(w.rank(), removed)?;
    let win = w.window();
    let head_ok = win[..signed].iter().all(|v| v.unsigned_abs() as usize <= signed);
    let tail_ok = later.iter().all(|&(start, end)| {
        win[start - 1..end].iter().all(|&v| v > 0 && (start..=end).contains(&(v as usize)))
    });
    Ok(head_ok && tail_ok)
}

/// Membership in `W^J`: `0 < w_1 < … < w_{p_1}` and each later block increasing.
pub fn is_minimal_coset_representative(w: &SignedPermutation, removed: &[usize]) -> Result<bool> {
    let (signed, later) = blocks(w.rank(), removed)?;
    let win = w.window();
    let head = &win[..signed];
    let head_ok = head.first().is_none_or(|&v| v > 0) && head.windows(2).all(|p| p[0] < p[1]);
    let tail_ok = later
        .iter()
        .all(|&(start, end)| win[start - 1..end].windows(2).all(|p| p[0] < p[1]));
    Ok(head_ok && tail_ok)
}

/// `|W_J| = 2^{p_1} p_1! · Π (block size)!`.
pub fn parabolic_order(n: usize, removed: &[usize]) -> Result<u64> {
    let (signed, later) = blocks(n, removed)?;
    let factorial = |k: usize| (1..=k as u64).product::<u64>();
    let head = crate::signed_perm::group_order(signed).ok_or(Error::RankTooLarge(signed))?;
    Ok(later.iter().fold(head, |acc, &(start, end)| acc * factorial(end + 1 - start)))
}

/// `W_J` as a sorted list.
pub fn parabolic_subgroup(n: usize, removed: &[usize]) -> Result<Vec<SignedPermutation>> {
    blocks(n, removed)?;
    Ok(sorted(all(n)?.filter(|w| in_parabolic_subgroup(w, removed).unwrap_or(false)).collect()))
}

/// `W^J` as a sorted list.
pub fn minimal_coset_representatives(n: usize, removed: &[usize]) -> Result<Vec<SignedPermutation>> {
    blocks(n, removed)?;
    Ok(sorted(
        all(n)?.filter(|w| is_minimal_coset_representative(w, removed).unwrap_or(false)).collect(),
    ))
}

fn sorted(mut v: Vec<SignedPermutation>) -> Vec<SignedPermutation> {
    v.sort();
    v
}

/// Not separable, while every maximal parabolic factor
/// `sts(w_1…w_i) × st(w_{i+1}…w_n)` is.
pub fn is_minimal_nonseparable_definitional(w: &SignedPermutation) -> bool {
    if is_separable(w) {
        return false;
    }
    let win = w.window();
    (0..w.rank()).all(|i| {
        let head_ok = i == 0 || is_separable(&sts_unchecked(win[..i].iter().copied()));
        let tail = st_unchecked(win[i..].iter().copied());
        head_ok && is_separable_unsigned(tail.window())
    })
}

/// Minimal non-separability through the local pattern conditions on the
/// prefix `w_1 … w_{n-1}` and the last entry.
pub fn is_minimal_nonseparable_fast(w: &SignedPermutation) -> bool {
    let n = w.rank();
    if n < 2 {
        return false;
    }
    let win = w.window();
    let prefix = &win[..n - 1];
    let forbidden = set("sep-forbidden-6");
    let (short, long): (Vec<_>, Vec<_>) = forbidden.members().iter().partition(|p| p.rank() == 2);
    if short.iter().any(|p| slice_contains(prefix, p.window())) {
        return false;
    }
    if long.iter().any(|p| contains_pattern(w, p)) {
        return false;
    }

    let last = win[n - 1];
    let last_mag = last.unsigned_abs();
    let has_partner = prefix.iter().any(|&v| {
        v.unsigned_abs() > last_mag && if last > 0 { v < 0 } else { v > 0 }
    });
    if !has_partner {
        return false;
    }
    let quads = if last > 0 { set("minnonsep-quad-pos") } else { set("minnonsep-quad-neg") };
    !any_quadruple_with_last(w, quads)
}

/// Whether `sts(w_j w_k w_l w_n)` lies in `quads` for some `j < k < l < n`.
fn any_quadruple_with_last(w: &SignedPermutation, quads: &PatternSet) -> bool {
    let n = w.rank();
    for j in 1..n {
        for k in j + 1..n {
            for l in k + 1..n {
                if quads.contains_member(&sts_of_positions(w, &[j, k, l, n])) {
                    return true;
                }
            }
        }
    }
    false
}

/// For minimal non-separable `w`, decides whether `w⁻¹` is minimal
/// non-separable from the entries of `w`: the entry `±n` sits at some
/// `i < n` whose removal leaves a separable pattern, and no quadruple ending
/// at `w_n` falls in the matching inverse family.
pub fn inverse_minimality_criterion(w: &SignedPermutation) -> Result<bool> {
    if !is_minimal_nonseparable_fast(w) {
        return Err(Error::Precondition(format!("{w} is not minimal non-separable")));
    }
    let n = w.rank();
    let win = w.window();
    let top = (1..n).find(|&i| win[i - 1].unsigned_abs() as usize == n);
    let cond1 = top.is_some_and(|i| {
        let rest = win.iter().enumerate().filter(|&(k, _)| k != i - 1).map(|(_, &v)| v);
        is_separable(&sts_unchecked(rest))
    });
    if !cond1 {
        return Ok(false);
    }
    let quads = if win[n - 1] > 0 { set("inverse-quad-pos") } else { set("inverse-quad-neg") };
    Ok(!any_quadruple_with_last(w, quads))
}

/// Minimal non-separable elements of `B_n`, sorted.
pub fn minimal_nonseparable_elements(n: usize) -> Result<Vec<SignedPermutation>> {
    Ok(sorted(all(n)?.filter(is_minimal_nonseparable_fast).collect()))
}
