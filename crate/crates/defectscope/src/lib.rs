//! Block-theoretic invariants of finite permutation groups: exact character
//! tables, p-block partitions, defect groups, and comparisons of k(B) against
//! k(D).

pub mod blocks;
pub mod chartab;
pub mod classify;
pub mod cyclo;
pub mod dade;
pub mod error;
pub mod gfp;
pub mod perm;
pub mod presets;
pub mod symfunc;

pub use chartab::CharacterTable;
pub use cyclo::CycloNum;
pub use error::{Error, Result};
pub use perm::{ConjugacyClass, PermGroup, Permutation};
