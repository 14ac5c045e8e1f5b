//! Short isomorphism-type labels for the small groups that occur as normalizers.

use crate::classifier::arith::{factor_u64_sorted, is_prime};
use crate::error::Result;
use crate::group::PermGroup;
use crate::series::{derived_series, derived_subgroup};

/// Invariant factors of a finite abelian group, from its element orders.
fn abelian_invariants(h: &PermGroup, cap: usize) -> Result<Vec<u64>> {
    let elems = h.enumeration(cap)?;
    let orders: Vec<u64> = elems.elements.iter().map(|e| e.order()).collect();
    let mut factors: Vec<u64> = Vec::new();
    for (p, e) in factor_u64_sorted(h.order() as u64) {
        // omega[k] = #{g : g^(p^k) = 1} = p^(sum_i min(lambda_i, k)).
        let mut log_omega = vec![0u32];
        for k in 1..=e {
            let pk = p.pow(k);
            let count = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            log_omega.push(count.ilog(p));
        }
        // Number of parts >= k is the increment of log_omega at k.
        let parts_at_least: Vec<u32> = (1..=e as usize).map(|k| log_omega[k] - log_omega[k - 1]).collect();
        let mut parts = Vec::new();
        for k in (1..=e as usize).rev() {
            let next = parts_at_least.get(k).copied().unwrap_or(0);
            for _ in 0..parts_at_least[k - 1] - next {
                parts.push(p.pow(k as u32));
            }
        }
        for (i, part) in parts.into_iter().enumerate() {
            if i < factors.len() {
                factors[i] *= part;
            } else {
                factors.push(part);
            }
        }
    }
    factors.sort_unstable();
    Ok(factors)
}

fn is_dihedral(h: &PermGroup, cap: usize) -> Result<bool> {
    let n = h.order() as u64;
    if n < 6 || !n.is_multiple_of(2) {
        return Ok(false);
    }
    let elems = h.enumeration(cap)?;
    let Some(rot) = elems.elements.iter().find(|e| e.order() == n / 2) else {
        return Ok(false);
    };
    let rotations = crate::subgroups::cyclic_elements(rot);
    Ok(elems.elements.iter().all(|e| rotations.contains(e) || e.order() == 2))
}

fn join(factors: &[u64]) -> String {
    factors.iter().map(|f| format!("C_{f}")).collect::<Vec<_>>().join("×")
}

/// Label such as `A_5`, `C_2×C_2`, `S_3`, `D_10`, `C_7:C_3`; groups outside
/// the recognised shapes get `order <n>`.
pub fn structure_tag(h: &PermGroup, cap: usize) -> Result<String> {
    let n = h.order() as u64;
    if n == 1 {
        return Ok("1".into());
    }
    if h.is_abelian() {
        return Ok(join(&abelian_invariants(h, cap)?));
    }
    if n == 6 {
        return Ok("S_3".into());
    }
    if is_dihedral(h, cap)? {
        return Ok(format!("D_{n}"));
    }
    let factors = factor_u64_sorted(n);
    if let [(p, 1), (q, 1)] = factors[..] {
        return Ok(format!("C_{q}:C_{p}"));
    }
    let derived: Vec<u128> = derived_series(h)?.iter().map(PermGroup::order).collect();
    let tag = match (n, derived.as_slice()) {
        (12, [12, 4, 1]) => "A_4".to_string(),
        (24, [24, 12, 4, 1]) => "S_4".to_string(),
        (60, [60]) => "A_5".to_string(),
        (120, [120, 60]) => "S_5".to_string(),
        (120, [120]) => "SL(2,5)".to_string(),
        (168, [168]) => "PSL(2,7)".to_string(),
        _ => {
            // Affine type C_q:C_k with a normal cyclic subgroup of prime order q.
            let d = derived_subgroup(h);
            let q = d.order() as u64;
            if is_prime(q) && h.enumeration(cap)?.elements.iter().any(|e| e.order() == n / q) {
                format!("C_{q}:C_{}", n / q)
            } else {
                format!("order {n}")
            }
        }
    };
    Ok(tag)
}
