//! Checkable consequences of the definition of `Sol_G(x)`. Each check returns
//! the list of violations it found.

use crate::classifier::arith::is_prime;
use crate::error::Result;
use crate::group::{ElementSet, PermGroup};
use crate::perm::Permutation;
use crate::series::is_soluble;

use super::frobenius::frobenius_over;
use super::sol::{sol_set_cached, SolubilityCache, SolubilizerRecord};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Structural facts about one record: `1, x` and all of `N_x` lie in
/// `Sol_G(x)`, and `|C_x|` divides `|Sol_G(x)|`.
pub fn record_invariants(rec: &SolubilizerRecord, cap: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    if !rec.sol.contains(&rec.x) || !rec.sol.contains(&Permutation::identity(rec.x.degree())) {
        out.push(format!("{}: x or 1 missing from Sol", rec.x));
    }
    if !rec.n_x.enumeration(cap)?.elements.is_subset(&rec.sol) {
        out.push(format!("{}: N_x not contained in Sol", rec.x));
    }
    if !(rec.sol_size as u128).is_multiple_of(rec.c_x.order()) {
        out.push(format!(
            "{}: |C_x| = {} does not divide |Sol| = {}",
            rec.x,
            rec.c_x.order(),
            rec.sol_size
        ));
    }
    Ok(out)
}

/// `Sol_G(x^k) = Sol_G(x)` for every `k` coprime to `|x|`.
pub fn generator_invariance(
    g: &PermGroup,
    rec: &SolubilizerRecord,
    cap: usize,
    cache: &SolubilityCache,
) -> Result<Vec<String>> {
    let order = rec.x.order();
    let mut out = Vec::new();
    for k in (2..order).filter(|&k| gcd(k, order) == 1) {
        let y = rec.x.power(k as i64);
        if sol_set_cached(g, &y, cap, cache)? != rec.sol {
            out.push(format!("{}: Sol(x^{k}) differs from Sol(x)", rec.x));
        }
    }
    Ok(out)
}

/// `Sol_G(x^c) = Sol_G(x)^c` for each conjugator `c`.
pub fn conjugation_equivariance(
    g: &PermGroup,
    rec: &SolubilizerRecord,
    conjugators: &[Permutation],
    cap: usize,
    cache: &SolubilityCache,
) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for c in conjugators {
        let moved = ElementSet::new(g.degree(), rec.sol.iter().map(|s| s.conjugate_by(c)).collect());
        if sol_set_cached(g, &rec.x.conjugate_by(c), cap, cache)? != moved {
            out.push(format!("{}: Sol(x^c) != Sol(x)^c for c = {c}", rec.x));
        }
    }
    Ok(out)
}

/// A prime `|Sol_G(x)|` forces `G` to have that order, and a solubilizer of
/// pairwise commuting elements forces `G` abelian.
pub fn size_and_commutativity(g: &PermGroup, rec: &SolubilizerRecord) -> Vec<String> {
    let mut out = Vec::new();
    if is_prime(rec.sol_size as u64) && g.order() != rec.sol_size as u128 {
        out.push(format!(
            "{}: |Sol| = {} is prime but |G| = {}",
            rec.x,
            rec.sol_size,
            g.order()
        ));
    }
    if !g.is_abelian() {
        let sol = rec.sol.as_slice();
        let commuting = sol
            .iter()
            .enumerate()
            .all(|(i, a)| sol[i + 1..].iter().all(|b| a.commutes_with(b)));
        if commuting {
            out.push(format!("{}: Sol is commutative in a non-abelian group", rec.x));
        }
    }
    out
}

/// In an insoluble group no `<x>` of prime order is self-normalizing.
pub fn prime_order_not_self_normalizing(g: &PermGroup, rec: &SolubilizerRecord) -> Vec<String> {
    let order = rec.x.order();
    if is_prime(order) && rec.n_x.order() == order as u128 && !is_soluble(g) {
        vec![format!("{}: <x> of prime order is self-normalizing", rec.x)]
    } else {
        Vec::new()
    }
}

/// When `N_x` is Frobenius over `C_x` with prime index, `|N_x|` divides `|Sol_G(x)|`.
pub fn frobenius_instance(rec: &SolubilizerRecord, cap: usize) -> Result<Vec<String>> {
    let finding = frobenius_over(&rec.n_x, &rec.c_x, cap)?;
    if finding.is_frobenius_over_cx && finding.index_prime && !rec.conjecture_ok {
        Ok(vec![format!(
            "{}: Frobenius N_x of prime index but |N_x| does not divide |Sol|",
            rec.x
        )])
    } else {
        Ok(Vec::new())
    }
}

/// All per-record checks above, with the group's generators as conjugators.
pub fn check_record(
    g: &PermGroup,
    rec: &SolubilizerRecord,
    cap: usize,
    cache: &SolubilityCache,
) -> Result<Vec<String>> {
    let mut out = record_invariants(rec, cap)?;
    out.extend(generator_invariance(g, rec, cap, cache)?);
    out.extend(conjugation_equivariance(g, rec, g.generators(), cap, cache)?);
    out.extend(size_and_commutativity(g, rec));
    out.extend(prime_order_not_self_normalizing(g, rec));
    out.extend(frobenius_instance(rec, cap)?);
    Ok(out)
}
