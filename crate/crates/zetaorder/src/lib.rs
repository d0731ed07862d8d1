//! An exact computational workbench around orders of zeros of Dedekind zeta
//! functions: finite-group character tables in exact cyclotomic arithmetic,
//! machine-checkable multiplicity certificates, prime-by-prime Artin
//! local-factor identities for concrete Galois number fields, and
//! multiprecision location of multiple zeros in the critical strip.

pub mod perm;
pub mod groups;
pub mod cyclo;
pub mod modp;
pub mod chartab;
pub mod certify;
pub mod lfunc;

pub use groups::{FiniteGroup, Group, GroupTag, Subgroup};
pub use perm::Permutation;
