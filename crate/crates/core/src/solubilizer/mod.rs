//! Solubilizers and the identities built on them.

mod bounds;
mod frobenius;
mod identities;
mod orbits;
pub mod properties;
mod rational;
mod sol;
mod structure;

pub use bounds::{lemma_exp_bound, pq_scan, pq_verdict, quotient_sol_check, ExpBound, PqInstance};
pub use frobenius::{
    abelian_kernel_check, frobenius_kernel, frobenius_structure, AbelianKernelCheck, FrobeniusFinding,
};
pub use identities::{
    eq1_check, lemma32_check, lemma32_residual, n_value, n_value_cached, orbit_representatives, theorem34_ratio,
};
pub use orbits::{burnside_orbit_count, orbit_count};
pub use rational::RationalValue;
pub use sol::{
    set_is_subgroup, sol_record, sol_record_cached, sol_set, sol_set_cached, sol_set_direct, soluble_radical,
    SolubilityCache, SolubilizerRecord,
};
pub use structure::structure_tag;
