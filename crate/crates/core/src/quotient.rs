//! Quotients `G/N` realized as the action of `G` on the right cosets of `N`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::subgroups::is_normal;

/// Homomorphism from `source` onto `target` induced by the coset action.
#[derive(Debug, Clone)]
pub struct GroupHom {
    pub source: PermGroup,
    pub target: PermGroup,
    /// Coset index (0-based point of the target) of each element of the source.
    coset_of: HashMap<Permutation, usize>,
    /// One representative per coset, indexed by point.
    reps: Vec<Permutation>,
}

impl GroupHom {
    /// Image of a source element: the permutation `Nr -> Nrg` on cosets.
    pub fn image(&self, g: &Permutation) -> Result<Permutation> {
        if !self.source.contains(g) {
            return Err(Error::NotInGroup(g.to_string()));
        }
        let images = self.reps.iter().map(|r| self.coset_of[&r.then(g)] as u32).collect();
        Permutation::from_images(images)
    }

    pub fn coset_index(&self, g: &Permutation) -> Option<usize> {
        self.coset_of.get(g).copied()
    }
}

pub fn quotient_by_normal(g: &PermGroup, n: &PermGroup, cap: usize) -> Result<(PermGroup, GroupHom)> {
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let index = g.order() / n.order();
    if index > cap as u128 {
        return Err(Error::OrderExceedsCap { order: index, cap });
    }
    let en = g.enumeration(cap)?;
    let n_elems = n.enumeration(cap)?;
    let mut coset_of: HashMap<Permutation, usize> = HashMap::with_capacity(en.len());
    let mut reps = Vec::with_capacity(index as usize);
    for t in en.elements.iter() {
        if coset_of.contains_key(t) {
            continue;
        }
        let id = reps.len();
        for u in n_elems.elements.iter() {
            coset_of.insert(u.then(t), id);
        }
        reps.push(t.clone());
    }
    let degree = reps.len();
    let mut hom = GroupHom {
        source: g.clone(),
        target: PermGroup::trivial(degree.max(1)),
        coset_of,
        reps,
    };
    let gens = g
        .generators()
        .iter()
        .map(|s| hom.image(s))
        .collect::<Result<Vec<_>>>()?;
    hom.target = PermGroup::new(degree, gens)?;
    Ok((hom.target.clone(), hom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_one_based(images).unwrap()
    }

    fn s4() -> PermGroup {
        PermGroup::new(4, vec![p(&[2, 3, 4, 1]), p(&[2, 1, 3, 4])]).unwrap()
    }

    #[test]
    fn s4_mod_v4_is_s3() {
        let g = s4();
        let v4 = g.generated_subgroup(&[p(&[2, 1, 4, 3]), p(&[3, 4, 1, 2])]).unwrap();
        let (q, hom) = quotient_by_normal(&g, &v4, 100).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.degree(), 6);
        for a in g.generators() {
            for b in g.generators() {
                assert_eq!(
                    hom.image(&a.then(b)).unwrap(),
                    hom.image(a).unwrap().then(&hom.image(b).unwrap())
                );
            }
        }
        assert!(hom.image(&p(&[2, 1, 4, 3])).unwrap().is_identity());
    }

    #[test]
    fn degenerate_quotients() {
        let g = s4();
        let (q, _) = quotient_by_normal(&g, &g, 100).unwrap();
        assert_eq!(q.order(), 1);
        let (q, _) = quotient_by_normal(&g, &PermGroup::trivial(4), 100).unwrap();
        assert_eq!(q.order(), 24);
        assert_eq!(q.degree(), 24);
    }

    #[test]
    fn rejects_non_normal() {
        let g = s4();
        let c2 = g.generated_subgroup(&[p(&[2, 1, 3, 4])]).unwrap();
        assert_eq!(quotient_by_normal(&g, &c2, 100).unwrap_err(), Error::NotNormal);
    }
}
