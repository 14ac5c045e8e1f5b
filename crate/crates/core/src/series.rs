//! Commutator subgroups, derived series and solubility.

use crate::bsgs::Bsgs;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

pub const MAX_SERIES_DEPTH: usize = 64;

/// Normal closure of `seeds` under conjugation by the generators of `ambient`.
pub fn normal_closure(ambient: &PermGroup, seeds: &[Permutation]) -> PermGroup {
    let degree = ambient.degree();
    let mut bsgs = Bsgs::new(degree, &[]);
    let mut gens: Vec<Permutation> = Vec::new();
    for s in seeds {
        if bsgs.extend(s) {
            gens.push(s.clone());
        }
    }
    let mut i = 0;
    while i < gens.len() {
        let c = gens[i].clone();
        i += 1;
        for s in ambient.generators() {
            let conj = c.conjugate_by(s);
            if bsgs.extend(&conj) {
                gens.push(conj);
            }
        }
    }
    PermGroup::new(degree, gens).expect("generators share the ambient degree")
}

/// `[H, H]`: normal closure of the commutators of generator pairs.
pub fn derived_subgroup(h: &PermGroup) -> PermGroup {
    let gens = h.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.commutator(b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(h, &comms)
}

/// `H = H^(0) >= H^(1) >= ...` down to the first repeated term.
pub fn derived_series(h: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().unwrap();
        if last.is_trivial() {
            return Ok(series);
        }
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            return Ok(series);
        }
        if series.len() >= MAX_SERIES_DEPTH {
            return Err(Error::SeriesTooDeep(MAX_SERIES_DEPTH));
        }
        series.push(next);
    }
}

pub fn is_soluble(h: &PermGroup) -> bool {
    let mut current = h.clone();
    for _ in 0..MAX_SERIES_DEPTH {
        if current.is_trivial() {
            return true;
        }
        let next = derived_subgroup(&current);
        if next.order() == current.order() {
            return false;
        }
        current = next;
    }
    unreachable!("derived series deeper than {MAX_SERIES_DEPTH}")
}

/// Solubility of `<a, b>` without keeping the group around.
pub fn is_two_generated_soluble(a: &Permutation, b: &Permutation) -> bool {
    if a.commutes_with(b) {
        return true;
    }
    let h = PermGroup::new(a.degree(), vec![a.clone(), b.clone()]).expect("matching degrees");
    is_soluble(&h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_one_based(images).unwrap()
    }

    fn sym(n: usize) -> PermGroup {
        let mut cyc: Vec<usize> = (2..=n).collect();
        cyc.push(1);
        let mut t: Vec<usize> = (1..=n).collect();
        t.swap(0, 1);
        PermGroup::new(n, vec![p(&cyc), p(&t)]).unwrap()
    }

    #[test]
    fn textbook_solubility() {
        assert!(is_soluble(&sym(4)));
        assert!(!is_soluble(&sym(5)));
        let a5 = PermGroup::new(5, vec![p(&[2, 3, 4, 5, 1]), p(&[2, 3, 1, 4, 5])]).unwrap();
        assert!(!is_soluble(&a5));
        assert!(is_soluble(&PermGroup::trivial(3)));
    }

    #[test]
    fn s3_series_by_direct_commutators() {
        let s3 = sym(3);
        let series = derived_series(&s3).unwrap();
        let orders: Vec<u128> = series.iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![6, 3, 1]);

        // Oracle: all commutators of all element pairs of S_3 form A_3.
        let els = s3.enumerate_elements(10).unwrap();
        let mut comms: Vec<Permutation> = els
            .iter()
            .flat_map(|a| els.iter().map(move |b| a.commutator(b)))
            .collect();
        comms.sort();
        comms.dedup();
        assert_eq!(comms.len(), 3);
        assert!(comms.iter().all(|c| series[1].contains(c)));
    }

    #[test]
    fn s4_series_orders() {
        let orders: Vec<u128> = derived_series(&sym(4)).unwrap().iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
    }

    #[test]
    fn perfect_group_series_stops() {
        let s5 = sym(5);
        let orders: Vec<u128> = derived_series(&s5).unwrap().iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![120, 60]);
    }
}
