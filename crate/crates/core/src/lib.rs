//! Invariants, ideal arithmetic and classification predicates for
//! one-dimensional numerical semigroup rings `k[[H]]`, together with an
//! exhaustive genus-tree enumerator and a harness that checks structural
//! theorems about self-dual maximal ideals over every semigroup up to a
//! genus bound.

pub mod classify;
pub mod cli;
pub mod error;
pub mod ideal;
pub mod search;
pub mod semigroup;
pub mod verify;

pub use error::{Error, Result};
pub use ideal::RelativeIdeal;
pub use semigroup::{CoreInvariants, NumericalSemigroup};
