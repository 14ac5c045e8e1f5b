//! Permutation groups given by generators, backed by a BSGS.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::bsgs::Bsgs;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default bound on the order of any group that is enumerated element by element.
pub const DEFAULT_CAP: usize = 20_000;

/// A deduplicated set of permutations of one degree, kept sorted by image
/// sequence so iteration order is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    degree: usize,
    members: Vec<Permutation>,
}

impl ElementSet {
    pub fn new(degree: usize, mut members: Vec<Permutation>) -> Self {
        assert!(members.iter().all(|m| m.degree() == degree), "degree mismatch");
        members.sort_unstable();
        members.dedup();
        ElementSet { degree, members }
    }

    pub fn singleton(p: Permutation) -> Self {
        ElementSet {
            degree: p.degree(),
            members: vec![p],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.binary_search(p).is_ok()
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.members.binary_search(p).ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[Permutation] {
        &self.members
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }

    /// True when the set is closed under multiplication (a finite nonempty
    /// set closed under products is a subgroup).
    pub fn is_closed(&self) -> bool {
        !self.members.is_empty()
            && self
                .members
                .iter()
                .all(|a| self.members.iter().all(|b| self.contains(&a.then(b))))
    }
}

impl std::fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a Permutation;
    type IntoIter = std::slice::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Full element listing of a group together with a lookup index.
#[derive(Debug)]
pub struct Enumeration {
    pub elements: ElementSet,
    index: HashMap<Permutation, usize>,
}

impl Enumeration {
    fn new(elements: ElementSet) -> Self {
        let index = elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Enumeration { elements, index }
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn get(&self, i: usize) -> &Permutation {
        &self.elements.as_slice()[i]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    bsgs: Bsgs,
    order: u128,
    enumeration: Arc<OnceLock<Arc<Enumeration>>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    /// Builds `<generators>`; identity generators are dropped. An empty list
    /// gives the trivial group of the given degree.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::MalformedPermutation("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        let bsgs = Bsgs::new(degree, &gens);
        let order = bsgs.order();
        Ok(PermGroup {
            degree,
            generators: gens,
            bsgs,
            order,
            enumeration: Arc::new(OnceLock::new()),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("positive degree")
    }

    /// Subgroup given by its complete element list; generators are chosen
    /// greedily and the listing is kept as the cached enumeration.
    pub fn from_elements(degree: usize, elements: ElementSet) -> Self {
        assert_eq!(elements.degree(), degree, "degree mismatch");
        let mut bsgs = Bsgs::new(degree, &[]);
        let mut gens = Vec::new();
        for e in elements.iter() {
            if bsgs.extend(e) {
                gens.push(e.clone());
            }
        }
        let order = bsgs.order();
        assert_eq!(order, elements.len() as u128, "element list is not a subgroup");
        let cell = OnceLock::new();
        let _ = cell.set(Arc::new(Enumeration::new(elements)));
        PermGroup {
            degree,
            generators: gens,
            bsgs,
            order,
            enumeration: Arc::new(cell),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn base(&self) -> Vec<usize> {
        self.bsgs.base()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.bsgs.orbit_lengths()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.bsgs.contains(p)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn check_cap(&self, cap: usize) -> Result<()> {
        if self.order > cap as u128 {
            Err(Error::OrderExceedsCap { order: self.order, cap })
        } else {
            Ok(())
        }
    }

    /// Element listing with an index, computed once and shared by clones.
    pub fn enumeration(&self, cap: usize) -> Result<Arc<Enumeration>> {
        self.check_cap(cap)?;
        Ok(self
            .enumeration
            .get_or_init(|| Arc::new(Enumeration::new(ElementSet::new(self.degree, self.bsgs.elements()))))
            .clone())
    }

    pub fn enumerate_elements(&self, cap: usize) -> Result<ElementSet> {
        Ok(self.enumeration(cap)?.elements.clone())
    }

    /// `<elems>` as a subgroup of `self`; every element must lie in `self`.
    pub fn generated_subgroup(&self, elems: &[Permutation]) -> Result<PermGroup> {
        for e in elems {
            if !self.contains(e) {
                return Err(Error::NotInGroup(e.to_string()));
            }
        }
        PermGroup::new(self.degree, elems.to_vec())
    }

    /// `H <= self`, tested on generators.
    pub fn contains_group(&self, h: &PermGroup) -> bool {
        h.degree == self.degree && h.generators.iter().all(|g| self.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order == other.order && self.contains_group(other)
    }

    /// Subgroup of all elements satisfying `pred`. The caller guarantees the
    /// filtered set is a subgroup.
    pub fn filter_subgroup(&self, cap: usize, pred: impl Fn(&Permutation) -> bool) -> Result<PermGroup> {
        let en = self.enumeration(cap)?;
        let members: Vec<Permutation> = en.elements.iter().filter(|g| pred(g)).cloned().collect();
        Ok(PermGroup::from_elements(
            self.degree,
            ElementSet::new(self.degree, members),
        ))
    }
}
