//! Combinatorics of partitions and two-row symbols parametrizing the
//! quadratic unipotent characters and l-blocks of the finite general
//! linear, unitary and symplectic groups, the correspondences between the
//! type-A and type-C sides, and exhaustive brute-force audits of both.

pub mod blocks;
pub mod characters;
pub mod error;
pub mod partitions;
pub mod symbols;
pub mod verify;

pub use blocks::{BlockCore, BlockLabel, EndoscopicLabel, Family, Regime};
pub use characters::{GlFamily, GlTuple, QuCharGl, QuCharSp, SpTuple};
pub use error::{Error, Result};
pub use partitions::{BetaSet, Bipartition, Partition};
pub use symbols::{Symbol, SymbolFamily};
