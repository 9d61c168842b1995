//! Signed permutations and the hyperoctahedral group `B_n`: lengths, weak
//! orders, separability by patterns and by the root system, generalized
//! quotients and splittings, with exhaustive checkers for small ranks.

#[cfg(feature = "cli")]
pub mod cli;
pub mod error;
pub mod patterns;
pub mod polynomials;
pub mod quotients;
pub mod report;
pub mod root_system;
pub mod signed_perm;
pub mod theorems;
pub mod weak_order;

pub use error::{Error, Result};
pub use polynomials::Polynomial;
pub use signed_perm::SignedPermutation;
