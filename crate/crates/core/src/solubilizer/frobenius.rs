//! Frobenius structure of `N_x` over `C_x`, and Frobenius permutation groups.

use crate::classifier::arith::is_prime;
use crate::error::Result;
use crate::group::{ElementSet, PermGroup};
use crate::perm::Permutation;
use crate::subgroups::{centralizer, is_normal, normalizer_of_cyclic};

use super::orbits::orbit_count;

#[derive(Debug, Clone)]
pub struct FrobeniusFinding {
    pub is_frobenius_over_cx: bool,
    /// `|N_x : C_x|`.
    pub complement_order: u128,
    pub index_prime: bool,
    pub kernel: PermGroup,
}

/// Whether `N_x` is a Frobenius group with kernel `C_x`.
pub fn frobenius_structure(g: &PermGroup, x: &Permutation, cap: usize) -> Result<FrobeniusFinding> {
    let nx = normalizer_of_cyclic(g, x, cap)?;
    let cx = centralizer(g, x, cap)?;
    frobenius_over(&nx, &cx, cap)
}

pub(crate) fn frobenius_over(nx: &PermGroup, cx: &PermGroup, cap: usize) -> Result<FrobeniusFinding> {
    let complement_order = nx.order() / cx.order();
    let mut is_frob = complement_order > 1 && is_normal(nx, cx);
    if is_frob {
        let kernel = cx.enumeration(cap)?;
        is_frob = nx
            .enumeration(cap)?
            .elements
            .iter()
            .all(|h| cx.contains(h) || kernel.elements.iter().all(|k| k.is_identity() || !k.commutes_with(h)));
    }
    Ok(FrobeniusFinding {
        is_frobenius_over_cx: is_frob,
        complement_order,
        index_prime: complement_order <= u64::MAX as u128 && is_prime(complement_order as u64),
        kernel: cx.clone(),
    })
}

/// Kernel and a complement of a Frobenius permutation group: transitive,
/// not regular, each non-identity element fixing at most one point. The kernel
/// is the identity together with the fixed-point-free elements.
pub fn frobenius_kernel(g: &PermGroup, cap: usize) -> Result<Option<(PermGroup, PermGroup)>> {
    let elems = g.enumeration(cap)?;
    let n = g.degree();
    let fixed = |p: &Permutation| (0..n).filter(|&i| p.image(i) == i).count();
    let transitive = elems
        .elements
        .iter()
        .map(|p| p.image(0))
        .collect::<std::collections::HashSet<_>>()
        .len()
        == n;
    if !transitive || g.order() == n as u128 {
        return Ok(None);
    }
    if elems.elements.iter().any(|p| !p.is_identity() && fixed(p) > 1) {
        return Ok(None);
    }
    let kernel_elems = ElementSet::new(
        n,
        elems
            .elements
            .iter()
            .filter(|p| p.is_identity() || fixed(p) == 0)
            .cloned()
            .collect(),
    );
    if !kernel_elems.is_closed() {
        return Ok(None);
    }
    let kernel = PermGroup::from_elements(n, kernel_elems);
    let complement = g.filter_subgroup(cap, |p| p.image(0) == 0)?;
    Ok(Some((kernel, complement)))
}

/// Both sides of `l_{C_x} = |H| + l |N_x : K|` for a Frobenius group `KH`
/// with abelian kernel `K` and `1 != x` in `K`, where `l + 1` counts the
/// orbits of `N_x` on `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianKernelCheck {
    pub direct: usize,
    pub formula: usize,
    pub ell: usize,
}

impl AbelianKernelCheck {
    pub fn holds(&self) -> bool {
        self.direct == self.formula
    }
}

pub fn abelian_kernel_check(g: &PermGroup, x: &Permutation, cap: usize) -> Result<Option<AbelianKernelCheck>> {
    let Some((kernel, complement)) = frobenius_kernel(g, cap)? else {
        return Ok(None);
    };
    if x.is_identity() || !kernel.contains(x) || !kernel.is_abelian() {
        return Ok(None);
    }
    let cx = centralizer(g, x, cap)?;
    let nx = normalizer_of_cyclic(g, x, cap)?;
    // Sol_G(x) = G because the kernel lies in the soluble radical.
    let direct = orbit_count(&cx, &g.enumerate_elements(cap)?)?;
    let ell = orbit_count(&nx, &kernel.enumerate_elements(cap)?)? - 1;
    let formula = complement.order() as usize + ell * (nx.order() / kernel.order()) as usize;
    Ok(Some(AbelianKernelCheck { direct, formula, ell }))
}
