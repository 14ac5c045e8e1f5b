//! Solubilizers of elements in finite permutation groups.
//!
//! Permutations act on the right: `p.then(q)` maps `i` to `q(p(i))` and
//! `x^g = g^-1 x g`. Points are 0-based in memory and 1-based in all text.

pub mod bsgs;
pub mod catalog;
pub mod classifier;
mod error;
pub mod group;
pub mod perm;
pub mod quotient;
pub mod series;
pub mod solubilizer;
pub mod subgroups;

pub use error::{Error, Result};
pub use group::{ElementSet, PermGroup, DEFAULT_CAP};
pub use perm::Permutation;
