//! Size bounds on solubilizers, compatibility with quotients, and the scan
//! for solubilizers of order `pq`.

use crate::classifier::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::{ElementSet, PermGroup};
use crate::perm::Permutation;
use crate::quotient::quotient_by_normal;
use crate::series::is_soluble;
use crate::subgroups::{conjugacy_class, conjugacy_class_reps, cyclic_elements, is_normal};

use super::sol::{sol_record_cached, sol_set, SolubilityCache, SolubilizerRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpBound {
    /// Least `|<x> : <x> ∩ <x^y>|` over `y` outside `N_x`.
    pub exp_ell: usize,
    /// `Sol_G(x) = N_x` or `|Sol_G(x)| > exp_ell * |x|`.
    pub ok: bool,
}

pub fn lemma_exp_bound(g: &PermGroup, rec: &SolubilizerRecord, cap: usize) -> Result<ExpBound> {
    if rec.n_x.order() == g.order() {
        return Err(Error::NormalizerIsWholeGroup);
    }
    let powers = cyclic_elements(&rec.x);
    let exp_ell = conjugacy_class(g, &rec.x, cap)?
        .iter()
        .filter(|c| !powers.contains(c))
        .map(|c| {
            let common = cyclic_elements(c).iter().filter(|e| powers.contains(e)).count();
            powers.len() / common
        })
        .min()
        .expect("x^y outside <x> exists when N_x is proper");
    let order = rec.x.order() as usize;
    Ok(ExpBound {
        exp_ell,
        ok: rec.equals_nx || rec.sol_size > exp_ell * order,
    })
}

/// `Sol_{G/N}(xN) = Sol_G(x)/N` and `|N|` divides `|Sol_G(x)|`, for soluble
/// normal `N`.
pub fn quotient_sol_check(g: &PermGroup, n: &PermGroup, x: &Permutation, cap: usize) -> Result<bool> {
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    if !is_soluble(n) {
        return Err(Error::NotSoluble);
    }
    let sol = sol_set(g, x, cap)?;
    let (q, hom) = quotient_by_normal(g, n, cap)?;
    let image = ElementSet::new(
        q.degree(),
        sol.iter().map(|s| hom.image(s)).collect::<Result<Vec<_>>>()?,
    );
    let quotient_sol = sol_set(&q, &hom.image(x)?, cap)?;
    Ok(image == quotient_sol && (sol.len() as u128).is_multiple_of(n.order()))
}

/// A class representative whose solubilizer has order `p * q`, `p <= q` primes.
#[derive(Debug, Clone)]
pub struct PqInstance {
    pub x: Permutation,
    pub p: u64,
    pub q: u64,
    pub sol_size: usize,
    pub violations: Vec<String>,
}

fn split_pq(n: usize) -> Option<(u64, u64)> {
    let n = n as u64;
    let p = (2..).find(|d| n.is_multiple_of(*d) || d * d > n)?;
    if !n.is_multiple_of(p) || p == n {
        return None;
    }
    let q = n / p;
    is_prime(q).then_some((p, q))
}

pub fn pq_scan(g: &PermGroup, cap: usize) -> Result<Vec<PqInstance>> {
    if is_soluble(g) {
        return Err(Error::GroupSoluble);
    }
    let cache = SolubilityCache::new();
    let mut out = Vec::new();
    for x in conjugacy_class_reps(g, cap)? {
        if x.is_identity() {
            continue;
        }
        let rec = sol_record_cached(g, &x, cap, &cache)?;
        if let Some(found) = pq_verdict(&rec) {
            out.push(found);
        }
    }
    Ok(out)
}

/// Checks one record against the `pq` conclusions; `None` when the
/// solubilizer order is not a product of two primes.
pub fn pq_verdict(rec: &SolubilizerRecord) -> Option<PqInstance> {
    let (p, q) = split_pq(rec.sol_size)?;
    let order = rec.x.order();
    let mut violations = Vec::new();
    if order != q || q <= 3 {
        violations.push(format!("|x| = {order}, expected q = {q} > 3"));
    }
    if p == q || (q - 1) % p != 0 {
        violations.push(format!("{p} does not divide {q} - 1"));
    }
    if !rec.is_subgroup || !rec.equals_nx {
        violations.push("Sol is not the subgroup N_x".to_string());
    }
    if rec.sol_size == 6 {
        violations.push("|Sol| = 6".to_string());
    }
    Some(PqInstance {
        x: rec.x.clone(),
        p,
        q,
        sol_size: rec.sol_size,
        violations,
    })
}
