//! Centralizers, normalizers, conjugacy classes and maximality, all by
//! exhaustive filtration of the element list.

use crate::error::{Error, Result};
use crate::group::{ElementSet, PermGroup};
use crate::perm::Permutation;

fn require_member(g: &PermGroup, x: &Permutation) -> Result<()> {
    if g.contains(x) {
        Ok(())
    } else {
        Err(Error::NotInGroup(x.to_string()))
    }
}

/// Powers of `x`, i.e. the elements of `<x>`.
pub fn cyclic_elements(x: &Permutation) -> ElementSet {
    let mut out = vec![Permutation::identity(x.degree())];
    let mut cur = x.clone();
    while !cur.is_identity() {
        out.push(cur.clone());
        cur = cur.then(x);
    }
    ElementSet::new(x.degree(), out)
}

pub fn centralizer(g: &PermGroup, x: &Permutation, cap: usize) -> Result<PermGroup> {
    require_member(g, x)?;
    g.filter_subgroup(cap, |h| h.commutes_with(x))
}

/// Centralizer of an arbitrary subset.
pub fn centralizer_of_set(g: &PermGroup, set: &[Permutation], cap: usize) -> Result<PermGroup> {
    g.filter_subgroup(cap, |h| set.iter().all(|s| h.commutes_with(s)))
}

/// `N_G(<x>) = { g : x^g in <x> }`.
pub fn normalizer_of_cyclic(g: &PermGroup, x: &Permutation, cap: usize) -> Result<PermGroup> {
    require_member(g, x)?;
    let powers = cyclic_elements(x);
    g.filter_subgroup(cap, |h| powers.contains(&x.conjugate_by(h)))
}

pub fn center(g: &PermGroup, cap: usize) -> Result<PermGroup> {
    centralizer_of_set(g, g.generators(), cap)
}

pub fn conjugacy_class(g: &PermGroup, x: &Permutation, cap: usize) -> Result<ElementSet> {
    require_member(g, x)?;
    g.check_cap(cap)?;
    Ok(orbit_under_conjugation(x, g.generators()))
}

/// Orbit of `x` under conjugation by the group generated by `gens`.
pub fn orbit_under_conjugation(x: &Permutation, gens: &[Permutation]) -> ElementSet {
    let mut seen = std::collections::HashSet::new();
    let mut queue = vec![x.clone()];
    seen.insert(x.clone());
    let mut i = 0;
    while i < queue.len() {
        let y = queue[i].clone();
        i += 1;
        for s in gens {
            let z = y.conjugate_by(s);
            if seen.insert(z.clone()) {
                queue.push(z);
            }
        }
    }
    ElementSet::new(x.degree(), queue)
}

/// All conjugacy classes, ordered by (element order, least member). Each
/// class's representative is its least member.
pub fn conjugacy_classes(g: &PermGroup, cap: usize) -> Result<Vec<ElementSet>> {
    let en = g.enumeration(cap)?;
    let mut assigned = vec![false; en.len()];
    let mut classes = Vec::new();
    for i in 0..en.len() {
        if assigned[i] {
            continue;
        }
        let class = orbit_under_conjugation(en.get(i), g.generators());
        for y in class.iter() {
            assigned[en.index_of(y).expect("class stays inside the group")] = true;
        }
        classes.push(class);
    }
    classes.sort_by(|a, b| {
        let (ra, rb) = (&a.as_slice()[0], &b.as_slice()[0]);
        (ra.order(), ra).cmp(&(rb.order(), rb))
    });
    Ok(classes)
}

pub fn conjugacy_class_reps(g: &PermGroup, cap: usize) -> Result<Vec<Permutation>> {
    Ok(conjugacy_classes(g, cap)?
        .into_iter()
        .map(|c| c.as_slice()[0].clone())
        .collect())
}

/// `H` normal in `G`, for `H <= G`.
pub fn is_normal(g: &PermGroup, h: &PermGroup) -> bool {
    g.contains_group(h)
        && h.generators()
            .iter()
            .all(|a| g.generators().iter().all(|s| h.contains(&a.conjugate_by(s))))
}

/// `H` is a proper subgroup and `<H, g> = G` for every `g` outside `H`.
pub fn is_maximal(g: &PermGroup, h: &PermGroup, cap: usize) -> Result<bool> {
    if !g.contains_group(h) {
        return Err(Error::NotInGroup("subgroup generators".into()));
    }
    if h.order() == g.order() {
        return Ok(false);
    }
    let en = g.enumeration(cap)?;
    let h_elems = h.enumeration(cap)?;
    let mut covered = vec![false; en.len()];
    for i in 0..en.len() {
        if covered[i] {
            continue;
        }
        let t = en.get(i);
        // <H, t> depends only on the coset Ht.
        for u in h_elems.elements.iter() {
            covered[en.index_of(&u.then(t)).expect("coset inside G")] = true;
        }
        if h.contains(t) {
            continue;
        }
        let mut gens = h.generators().to_vec();
        gens.push(t.clone());
        let k = PermGroup::new(g.degree(), gens)?;
        if k.order() != g.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_one_based(images).unwrap()
    }

    fn a5() -> PermGroup {
        PermGroup::new(5, vec![p(&[2, 3, 4, 5, 1]), p(&[2, 3, 1, 4, 5])]).unwrap()
    }

    #[test]
    fn a5_centralizers_and_normalizers() {
        let g = a5();
        let five = p(&[2, 3, 4, 5, 1]);
        assert_eq!(centralizer(&g, &five, 100).unwrap().order(), 5);
        assert_eq!(normalizer_of_cyclic(&g, &five, 100).unwrap().order(), 10);
        let three = p(&[2, 3, 1, 4, 5]);
        assert_eq!(centralizer(&g, &three, 100).unwrap().order(), 3);
        assert_eq!(normalizer_of_cyclic(&g, &three, 100).unwrap().order(), 6);
    }

    #[test]
    fn abelian_group_is_its_own_centralizer() {
        let c6 = PermGroup::new(6, vec![p(&[2, 3, 4, 5, 6, 1])]).unwrap();
        let x = p(&[3, 4, 5, 6, 1, 2]);
        assert_eq!(centralizer(&c6, &x, 10).unwrap().order(), 6);
        assert_eq!(normalizer_of_cyclic(&c6, &x, 10).unwrap().order(), 6);
    }

    #[test]
    fn a5_class_sizes_partition_the_group() {
        let g = a5();
        let classes = conjugacy_classes(&g, 100).unwrap();
        let mut sizes: Vec<usize> = classes.iter().map(ElementSet::len).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 60);
        sizes.sort();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        let reps = conjugacy_class_reps(&g, 100).unwrap();
        assert!(reps[0].is_identity());
        let orders: Vec<u64> = reps.iter().map(Permutation::order).collect();
        assert_eq!(orders, vec![1, 2, 3, 5, 5]);
        assert_eq!(conjugacy_class(&g, &g.identity(), 100).unwrap().len(), 1);
        let five = p(&[2, 3, 4, 5, 1]);
        assert_eq!(conjugacy_class(&g, &five, 100).unwrap().len() * 5, 60);
    }

    #[test]
    fn maximality_in_a5() {
        let g = a5();
        let d10 = g
            .generated_subgroup(&[p(&[2, 3, 4, 5, 1]), p(&[1, 5, 4, 3, 2])])
            .unwrap();
        assert!(is_maximal(&g, &d10, 100).unwrap());
        let c5 = g.generated_subgroup(&[p(&[2, 3, 4, 5, 1])]).unwrap();
        assert!(!is_maximal(&g, &c5, 100).unwrap());
        assert!(!is_maximal(&g, &g, 100).unwrap());
        assert!(center(&g, 100).unwrap().is_trivial());
    }

    #[test]
    fn normality() {
        let s4 = PermGroup::new(4, vec![p(&[2, 3, 4, 1]), p(&[2, 1, 3, 4])]).unwrap();
        let v4 = s4.generated_subgroup(&[p(&[2, 1, 4, 3]), p(&[3, 4, 1, 2])]).unwrap();
        assert!(is_normal(&s4, &v4));
        let c2 = s4.generated_subgroup(&[p(&[2, 1, 3, 4])]).unwrap();
        assert!(!is_normal(&s4, &c2));
    }
}
