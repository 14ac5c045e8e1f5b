//! Orbit-counting identities relating `Sol_G(x)`, `N_x` and `C_x`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::series::is_soluble;
use crate::subgroups::{centralizer, orbit_under_conjugation};

use super::orbits::{burnside_orbit_count, orbit_count};
use super::rational::RationalValue;
use super::sol::{SolubilityCache, SolubilizerRecord};

/// `n(g, x) = |Sol_{C_G(g)}(x)| / |N_x ∩ C_G(g)|` for `g` in `N_x`.
pub fn n_value(g: &PermGroup, elem: &Permutation, x: &Permutation, cap: usize) -> Result<RationalValue> {
    n_value_cached(g, elem, x, cap, &SolubilityCache::new())
}

pub fn n_value_cached(
    g: &PermGroup,
    elem: &Permutation,
    x: &Permutation,
    cap: usize,
    cache: &SolubilityCache,
) -> Result<RationalValue> {
    let nx = crate::subgroups::normalizer_of_cyclic(g, x, cap)?;
    n_value_in(g, &nx, elem, x, cap, cache)
}

fn n_value_in(
    g: &PermGroup,
    nx: &PermGroup,
    elem: &Permutation,
    x: &Permutation,
    cap: usize,
    cache: &SolubilityCache,
) -> Result<RationalValue> {
    if !nx.contains(elem) {
        return Err(Error::NotInGroup(format!("{elem} (outside N_x)")));
    }
    let cg = centralizer(g, elem, cap)?;
    let cg_elems = cg.enumeration(cap)?;
    let numerator = cg_elems.elements.iter().filter(|h| cache.is_soluble_pair(x, h)).count();
    let denominator = cg_elems.elements.iter().filter(|h| nx.contains(h)).count();
    Ok(RationalValue::new(numerator as u64, denominator as u64))
}

/// Least member of each `N_x`-conjugation orbit on `H \ {1}`.
pub fn orbit_representatives(h: &PermGroup, nx: &PermGroup, cap: usize) -> Result<Vec<Permutation>> {
    let elems = h.enumeration(cap)?;
    let mut done = vec![false; elems.len()];
    let mut reps = Vec::new();
    for i in 0..elems.len() {
        let e = elems.get(i);
        if done[i] || e.is_identity() {
            continue;
        }
        let orbit = orbit_under_conjugation(e, nx.generators());
        for y in orbit.iter() {
            let j = elems.index_of(y).ok_or(Error::SubgroupChainViolated)?;
            done[j] = true;
        }
        reps.push(orbit.as_slice()[0].clone());
    }
    Ok(reps)
}

fn check_chain(rec: &SolubilizerRecord, h: &PermGroup) -> Result<()> {
    if rec.n_x.contains_group(h) && h.contains_group(&rec.c_x) {
        Ok(())
    } else {
        Err(Error::SubgroupChainViolated)
    }
}

/// `|H| l_H - |Sol_G(x)| - |N_x| * sum_i n(g_i, x)`, which should vanish.
pub fn lemma32_check(g: &PermGroup, x: &Permutation, h: &PermGroup, cap: usize) -> Result<BigInt> {
    let cache = SolubilityCache::new();
    let rec = super::sol::sol_record_cached(g, x, cap, &cache)?;
    lemma32_residual(g, &rec, h, cap, &cache)
}

pub fn lemma32_residual(
    g: &PermGroup,
    rec: &SolubilizerRecord,
    h: &PermGroup,
    cap: usize,
    cache: &SolubilityCache,
) -> Result<BigInt> {
    check_chain(rec, h)?;
    let ell = orbit_count(h, &rec.sol)?;
    let burnside = burnside_orbit_count(h, &rec.sol, cap)?;
    assert_eq!(ell, burnside, "direct and Burnside orbit counts disagree");
    let sum: RationalValue = orbit_representatives(h, &rec.n_x, cap)?
        .iter()
        .map(|gi| n_value_in(g, &rec.n_x, gi, &rec.x, cap, cache))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum();
    let scaled = &sum * &BigInt::from(rec.n_x.order());
    let scaled = scaled
        .to_integer()
        .ok_or_else(|| Error::NonIntegralSum(scaled.to_string()))?;
    Ok(BigInt::from(h.order()) * BigInt::from(ell) - BigInt::from(rec.sol_size) - scaled)
}

/// Residual of the soluble-group orbit formula
/// `l_H = |G:H| + |N_x:H| * sum_i |C_G(g_i) : N_x ∩ C_G(g_i)|`, scaled by `|H|`.
pub fn eq1_check(g: &PermGroup, x: &Permutation, h: &PermGroup, cap: usize) -> Result<BigInt> {
    if !is_soluble(g) {
        return Err(Error::NotSoluble);
    }
    let nx = crate::subgroups::normalizer_of_cyclic(g, x, cap)?;
    let cx = centralizer(g, x, cap)?;
    if !(nx.contains_group(h) && h.contains_group(&cx)) {
        return Err(Error::SubgroupChainViolated);
    }
    let all = g.enumerate_elements(cap)?;
    let ell = orbit_count(h, &all)?;
    let mut index_sum = BigInt::from(0);
    for gi in orbit_representatives(h, &nx, cap)? {
        let cg = centralizer(g, &gi, cap)?;
        let inter = cg.enumeration(cap)?.elements.iter().filter(|e| nx.contains(e)).count();
        index_sum += BigInt::from(cg.order() / inter as u128);
    }
    Ok(BigInt::from(h.order()) * BigInt::from(ell) - BigInt::from(g.order()) - BigInt::from(nx.order()) * index_sum)
}

/// `|C_x| l_{C_x} / |N_x|`.
pub fn theorem34_ratio(g: &PermGroup, x: &Permutation, cap: usize) -> Result<RationalValue> {
    Ok(super::sol::sol_record(g, x, cap)?.ratio34)
}
