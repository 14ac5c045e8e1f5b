//! Checks classifier rows against the permutation-group engine when the
//! group is small enough to build.

use serde::Serialize;

use super::table2::{ClassifierRow, MaximalStructure, RowFamily};
use crate::catalog::{make_family, FamilySpec};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::solubilizer::{sol_record, SolubilizerRecord};
use crate::subgroups::{conjugacy_class_reps, is_maximal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossValidation {
    pub group: String,
    pub element: String,
    pub sol_size: usize,
    pub nx_order: u128,
    pub sol_equals_nx: bool,
    pub sol_maximal: bool,
    pub structure_matches: bool,
    /// Empty when the engine agrees with the row.
    pub failures: Vec<String>,
}

impl CrossValidation {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Engine model for a row, or `NotConstructible`.
pub fn row_group(row: &ClassifierRow, cap: usize) -> Result<PermGroup> {
    let spec = match (row.family, row.r, row.d) {
        (
            RowFamily::Psl2Fermat
            | RowFamily::Psl2Mersenne
            | RowFamily::Psl2Cpct
            | RowFamily::Psl2DihedralPlus
            | RowFamily::Psl2DihedralMinus,
            Some(r),
            _,
        ) => FamilySpec::Psl2(r as u32),
        (RowFamily::PslD, Some(2), Some(3)) => FamilySpec::Psl3_2,
        _ => return Err(Error::NotConstructible(row.group_name())),
    };
    if spec.expected_order() > cap as u128 {
        return Err(Error::NotConstructible(format!(
            "{} has order {} above the cap {cap}",
            row.group_name(),
            spec.expected_order()
        )));
    }
    make_family(spec)
}

fn structure_matches(rec: &SolubilizerRecord, structure: MaximalStructure, cap: usize) -> Result<bool> {
    let n = rec.n_x.enumeration(cap)?;
    let inverted = rec.x.inverse();
    let has_inverting_involution = n
        .elements
        .iter()
        .any(|t| t.order() == 2 && rec.x.conjugate_by(t) == inverted);
    Ok(match structure {
        MaximalStructure::Dihedral { q } => has_inverting_involution && rec.n_x.order() == 2 * q as u128,
        MaximalStructure::Metacyclic { q, p } => {
            rec.n_x.order() == (p * q) as u128 && rec.c_x.order() == q as u128 && (p == 2 || !has_inverting_involution)
        }
    })
}

/// Picks the first class representative of order `q_prime` and compares its
/// solubilizer with the row. Rows in the theorem sub-list must have
/// `Sol = N_x` maximal of order `pq` with the stated shape; other rows must not.
pub fn cross_validate(row: &ClassifierRow, cap: usize) -> Result<CrossValidation> {
    let g = row_group(row, cap)?;
    let x = conjugacy_class_reps(&g, cap)?
        .into_iter()
        .find(|x| x.order() == row.q_prime)
        .ok_or_else(|| {
            Error::InvalidParameter(format!("{} has no element of order {}", row.group_name(), row.q_prime))
        })?;
    let rec = sol_record(&g, &x, cap)?;
    let pq = (row.p_prime * row.q_prime) as usize;
    let sol_maximal = rec.equals_nx && is_maximal(&g, &rec.n_x, cap)?;
    let shape = structure_matches(&rec, row.maximal_structure, cap)?;
    let mut failures = Vec::new();
    if row.in_theorem44 {
        if rec.sol_size != pq {
            failures.push(format!("|Sol| = {}, expected {pq}", rec.sol_size));
        }
        if !rec.equals_nx {
            failures.push("Sol differs from N_x".to_string());
        }
        if !sol_maximal {
            failures.push("Sol is not a maximal subgroup".to_string());
        }
        if !shape {
            failures.push(format!("N_x is not {}", row.maximal_structure));
        }
    } else if rec.equals_nx && rec.sol_size == pq {
        failures.push(format!("excluded row still has Sol = N_x of order {pq}"));
    }
    Ok(CrossValidation {
        group: row.group_name(),
        element: x.to_string(),
        sol_size: rec.sol_size,
        nx_order: rec.n_x.order(),
        sol_equals_nx: rec.equals_nx,
        sol_maximal,
        structure_matches: shape,
        failures,
    })
}
