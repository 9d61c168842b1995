//! Dense polynomials in `q` with nonnegative integer coefficients.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    /// `coeffs[d]` is the coefficient of `q^d`; no trailing zeros.
    coeffs: Vec<u64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// `1 + q + … + q^(m-1)`.
    pub fn q_integer(m: usize) -> Self {
        Self::new(vec![1; m])
    }

    /// Counts a multiset of ranks: the coefficient of `q^d` is the number of `d`s.
    pub fn from_ranks<I: IntoIterator<Item = usize>>(ranks: I) -> Self {
        let mut coeffs = Vec::new();
        for d in ranks {
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] += 1;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// `[q^d] f`, zero beyond the degree.
    pub fn coeff(&self, d: usize) -> u64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn evaluate(&self, q: u64) -> Option<u64> {
        self.coeffs
            .iter()
            .rev()
            .try_fold(0u64, |acc, &c| acc.checked_mul(q)?.checked_add(c))
    }

    /// Sum of the coefficients.
    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        if self.is_zero() || other.is_zero() {
            return Some(Self::zero());
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].checked_add(a.checked_mul(b)?)?;
            }
        }
        Some(Self::new(out))
    }

    /// Exact product; panics if a coefficient overflows `u64`.
    pub fn multiply(&self, other: &Self) -> Self {
        self.checked_mul(other)
            .expect("polynomial coefficient overflow")
    }

    /// `q^deg f(1/q)`.
    pub fn reversal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// `a_i = a_{d-i}` for all `i`, with `d` the degree.
    pub fn is_symmetric(&self) -> bool {
        let c = &self.coeffs;
        (0..c.len()).all(|i| c[i] == c[c.len() - 1 - i])
    }

    /// `a_0 ≤ … ≤ a_m ≥ … ≥ a_d` for some `m`.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coeffs;
        let mut i = 0;
        while i + 1 < c.len() && c[i] <= c[i + 1] {
            i += 1;
        }
        while i + 1 < c.len() && c[i] >= c[i + 1] {
            i += 1;
        }
        i + 1 >= c.len()
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Self) -> Polynomial {
        self.multiply(rhs)
    }
}

/// Poincaré polynomial of `B_n`: the product of `[2i]_q` over `i = 1..=n`,
/// the degrees of `B_n` being `2, 4, …, 2n`.
pub fn group_poincare(n: usize) -> Polynomial {
    (1..=n).fold(Polynomial::one(), |acc, i| {
        acc.multiply(&Polynomial::q_integer(2 * i))
    })
}

impl fmt::Display for Polynomial {
    /// Ascending form, e.g. `1 + 2q + 2q^2 + q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("q")?,
                (1, c) => write!(f, "{c}q")?,
                (d, 1) => write!(f, "q^{d}")?,
                (d, c) => write!(f, "{c}q^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Self::new(Vec::<u64>::deserialize(d)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[u64]) -> Polynomial {
        Polynomial::new(c.to_vec())
    }

    #[test]
    fn products() {
        assert_eq!(p(&[1, 1]).multiply(&p(&[1, 1, 1, 1])), p(&[1, 2, 2, 2, 1]));
        assert_eq!(p(&[1, 1]).multiply(&p(&[1, 1])), p(&[1, 2, 1]));
        let f = p(&[3, 0, 7]);
        assert_eq!(&f * &Polynomial::one(), f);
        assert!(p(&[u64::MAX, 1]).checked_mul(&p(&[2])).is_none());
    }

    #[test]
    fn symmetry_and_unimodality() {
        assert!(!p(&[1, 2, 2, 2, 1, 1]).is_symmetric());
        assert!(p(&[1, 1, 1, 1, 1, 1]).is_symmetric());
        assert!(Polynomial::one().is_unimodal());
        assert!(Polynomial::zero().is_symmetric());
        assert!(p(&[1, 3, 2, 2, 1]).is_unimodal());
        assert!(!p(&[1, 3, 2, 3, 1]).is_unimodal());
        assert!(!p(&[2, 1, 2]).is_unimodal());
    }

    #[test]
    fn poincare_small_ranks() {
        assert_eq!(group_poincare(1), p(&[1, 1]));
        assert_eq!(group_poincare(2), p(&[1, 2, 2, 2, 1]));
        assert_eq!(group_poincare(3).evaluate(1), Some(48));
        assert_eq!(group_poincare(6).evaluate(1), Some(46080));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, 2, 2, 2, 1, 1]).to_string(), "1 + 2q + 2q^2 + 2q^3 + q^4 + q^5");
        assert_eq!(p(&[0, 0, 3]).to_string(), "3q^2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(serde_json::to_string(&p(&[1, 2, 1])).unwrap(), "[1,2,1]");
        assert_eq!(serde_json::from_str::<Polynomial>("[1,2,1,0]").unwrap(), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
    }

    fn symmetric_unimodal() -> impl Strategy<Value = Polynomial> {
        // Built as a mirrored nondecreasing run, so the shape is guaranteed.
        (prop::collection::vec(0u64..5, 0..6), 1u64..4, any::<bool>()).prop_map(
            |(steps, start, odd)| {
                let mut half = vec![start];
                for s in steps {
                    half.push(half.last().unwrap() + s);
                }
                let mut coeffs = half.clone();
                let tail = if odd { &half[..half.len() - 1] } else { &half[..] };
                coeffs.extend(tail.iter().rev());
                Polynomial::new(coeffs)
            },
        )
    }

    proptest! {
        #[test]
        fn symmetric_unimodal_closed_under_products(f in symmetric_unimodal(), g in symmetric_unimodal()) {
            prop_assume!(f.degree().unwrap() <= 20 && g.degree().unwrap() <= 20);
            let h = f.multiply(&g);
            prop_assert!(h.is_symmetric());
            prop_assert!(h.is_unimodal());
        }

        #[test]
        fn reversal_is_an_involution_on_nonzero_constant_term(c in prop::collection::vec(0u64..100, 1..12)) {
            let mut c = c;
            c[0] += 1;
            let f = Polynomial::new(c);
            prop_assert_eq!(f.reversal().reversal(), f);
        }
    }
}
