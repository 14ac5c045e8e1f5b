//! Solubilizers `Sol_G(x) = { g in G : <x, g> is soluble }`.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::bsgs::Bsgs;
use crate::error::{Error, Result};
use crate::group::{ElementSet, PermGroup};
use crate::perm::Permutation;
use crate::series::{is_soluble, is_two_generated_soluble};
use crate::subgroups::{centralizer, conjugacy_class_reps, is_normal, normalizer_of_cyclic};

use super::orbits::{burnside_orbit_count, orbit_count};
use super::rational::RationalValue;

/// Memo of solubility verdicts for two-generated subgroups of one group,
/// keyed by the unordered pair of generators.
#[derive(Debug, Default)]
pub struct SolubilityCache {
    verdicts: Mutex<HashMap<(Permutation, Permutation), bool>>,
}

impl SolubilityCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.verdicts.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Solubility of `<a, b>`; concurrent callers may both compute a value,
    /// but only whole verdicts are ever stored.
    pub fn is_soluble_pair(&self, a: &Permutation, b: &Permutation) -> bool {
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        if let Some(&v) = self.verdicts.lock().unwrap().get(&key) {
            return v;
        }
        let v = is_two_generated_soluble(a, b);
        self.verdicts.lock().unwrap().insert(key, v);
        v
    }
}

fn require_member(g: &PermGroup, x: &Permutation) -> Result<()> {
    if g.contains(x) {
        Ok(())
    } else {
        Err(Error::NotInGroup(x.to_string()))
    }
}

/// Reference scan: tests `<x, g>` for every `g` with no shortcuts.
pub fn sol_set_direct(g: &PermGroup, x: &Permutation, cap: usize) -> Result<ElementSet> {
    require_member(g, x)?;
    let en = g.enumeration(cap)?;
    let members = en
        .elements
        .iter()
        .filter(|h| is_two_generated_soluble(x, h))
        .cloned()
        .collect();
    Ok(ElementSet::new(g.degree(), members))
}

pub fn sol_set(g: &PermGroup, x: &Permutation, cap: usize) -> Result<ElementSet> {
    sol_set_cached(g, x, cap, &SolubilityCache::new())
}

/// `Sol_G(x)`. Solubility of `<x, h>` is constant along the moves
/// `h -> xh, hx, h^-1, h^c` (`c` in `N_G(<x>)`), since each move yields the
/// same subgroup or a conjugate of it; one verdict per move-orbit is computed.
pub fn sol_set_cached(g: &PermGroup, x: &Permutation, cap: usize, cache: &SolubilityCache) -> Result<ElementSet> {
    require_member(g, x)?;
    let en = g.enumeration(cap)?;
    if is_soluble(g) {
        return Ok(en.elements.clone());
    }
    let nx = normalizer_of_cyclic(g, x, cap)?;
    let mut status: Vec<Option<bool>> = vec![None; en.len()];
    let mut stack = Vec::new();
    for start in 0..en.len() {
        if status[start].is_some() {
            continue;
        }
        let verdict = cache.is_soluble_pair(x, en.get(start));
        status[start] = Some(verdict);
        stack.push(start);
        while let Some(i) = stack.pop() {
            let h = en.get(i);
            let mut moves = vec![x.then(h), h.then(x), h.inverse()];
            moves.extend(nx.generators().iter().map(|c| h.conjugate_by(c)));
            for m in moves {
                let j = en.index_of(&m).expect("moves stay inside G");
                if status[j].is_none() {
                    status[j] = Some(verdict);
                    stack.push(j);
                }
            }
        }
    }
    let members = en
        .elements
        .iter()
        .zip(&status)
        .filter(|(_, s)| **s == Some(true))
        .map(|(h, _)| h.clone())
        .collect();
    Ok(ElementSet::new(g.degree(), members))
}

/// True iff the finite set is a subgroup: it generates a group of its own size.
pub fn set_is_subgroup(set: &ElementSet) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut bsgs = Bsgs::new(set.degree(), &[]);
    for s in set.iter() {
        bsgs.extend(s);
        if bsgs.order() > set.len() as u128 {
            return false;
        }
    }
    bsgs.order() == set.len() as u128
}

#[derive(Debug, Clone)]
pub struct SolubilizerRecord {
    pub x: Permutation,
    pub sol: ElementSet,
    pub sol_size: usize,
    pub n_x: PermGroup,
    pub c_x: PermGroup,
    /// Orbits of `C_x` acting on `Sol_G(x)` by conjugation.
    pub ell_cx: usize,
    /// Orbits of `N_x` acting on `Sol_G(x)` by conjugation.
    pub ell_nx: usize,
    /// `|N_x|` divides `|Sol_G(x)|`.
    pub conjecture_ok: bool,
    /// `|C_x| * ell_cx / |N_x|`.
    pub ratio34: RationalValue,
    pub is_subgroup: bool,
    pub equals_nx: bool,
}

impl SolubilizerRecord {
    pub fn ratio34_integral(&self) -> bool {
        self.ratio34.is_integer()
    }
}

pub fn sol_record(g: &PermGroup, x: &Permutation, cap: usize) -> Result<SolubilizerRecord> {
    sol_record_cached(g, x, cap, &SolubilityCache::new())
}

pub fn sol_record_cached(
    g: &PermGroup,
    x: &Permutation,
    cap: usize,
    cache: &SolubilityCache,
) -> Result<SolubilizerRecord> {
    let sol = sol_set_cached(g, x, cap, cache)?;
    record_from_sol(g, x, sol, cap)
}

pub(crate) fn record_from_sol(
    g: &PermGroup,
    x: &Permutation,
    sol: ElementSet,
    cap: usize,
) -> Result<SolubilizerRecord> {
    let n_x = normalizer_of_cyclic(g, x, cap)?;
    let c_x = centralizer(g, x, cap)?;
    let ell_cx = orbit_count(&c_x, &sol)?;
    let ell_nx = orbit_count(&n_x, &sol)?;
    for (h, ell) in [(&c_x, ell_cx), (&n_x, ell_nx)] {
        let burnside = burnside_orbit_count(h, &sol, cap)?;
        assert_eq!(ell, burnside, "direct and Burnside orbit counts disagree");
    }
    let sol_size = sol.len();
    let nx_order = n_x.order() as usize;
    let ratio34 = RationalValue::new(c_x.order() as u64 * ell_cx as u64, nx_order as u64);
    let n_elems = n_x.enumeration(cap)?;
    let equals_nx = sol_size == nx_order && n_elems.elements.is_subset(&sol);
    Ok(SolubilizerRecord {
        x: x.clone(),
        is_subgroup: set_is_subgroup(&sol),
        sol,
        sol_size,
        conjecture_ok: sol_size.is_multiple_of(nx_order),
        ratio34,
        equals_nx,
        ell_cx,
        ell_nx,
        n_x,
        c_x,
    })
}

/// `<{ x : Sol_G(x) = G }>`, the soluble radical.
pub fn soluble_radical(g: &PermGroup, cap: usize) -> Result<PermGroup> {
    let en = g.enumeration(cap)?;
    if is_soluble(g) {
        return Ok(g.clone());
    }
    let cache = SolubilityCache::new();
    let mut members = Vec::new();
    for rep in conjugacy_class_reps(g, cap)? {
        let sol = sol_set_cached(g, &rep, cap, &cache)?;
        if sol.len() == en.len() {
            members.extend(crate::subgroups::conjugacy_class(g, &rep, cap)?.iter().cloned());
        }
    }
    let radical = PermGroup::new(g.degree(), members.clone())?;
    assert!(is_normal(g, &radical), "soluble radical must be normal");
    assert!(is_soluble(&radical), "soluble radical must be soluble");
    assert_eq!(
        radical.order() as usize,
        members.len(),
        "radical must consist exactly of the elements with full solubilizer"
    );
    Ok(radical)
}
