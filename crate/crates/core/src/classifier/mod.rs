//! Number theory for primitive prime divisors and the enumeration of simple
//! groups with a maximal subgroup of order `pq`.

pub mod arith;
mod crossval;
mod table2;
mod zsigmondy;

pub use crossval::{cross_validate, row_group, CrossValidation};
pub use table2::{table2_enumerate, theorem44_enumerate, Bounds, ClassifierRow, MaximalStructure, RowFamily};
pub use zsigmondy::{
    divides_q_pow_minus_1, primitive_prime_divisors, zsigmondy_divides_qd_plus_1, QdPlusOne, ZsigmondyResult,
};
