//! Deterministic Schreier-Sims.
//!
//! Level `i` holds base point `b_i`, the strong generators fixing
//! `b_0..b_{i-1}`, and a transversal of the orbit of `b_i` under them.

use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[p]` maps the base point to `p`; paired with its inverse.
    transversal: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut level = Level {
            base_point,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        let id = Permutation::identity(degree);
        self.transversal[self.base_point] = Some((id.clone(), id));
        self.orbit = vec![self.base_point];
        let mut head = 0;
        while head < self.orbit.len() {
            let pt = self.orbit[head];
            head += 1;
            for s in &self.gens {
                let img = s.image(pt);
                if self.transversal[img].is_none() {
                    let u = self.transversal[pt].as_ref().unwrap().0.then(s);
                    let inv = u.inverse();
                    self.transversal[img] = Some((u, inv));
                    self.orbit.push(img);
                }
            }
        }
    }
}

/// Base and strong generating set for a permutation group.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        let mut bsgs = Bsgs {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            bsgs.extend(g);
        }
        bsgs
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .try_fold(1u128, |acc, n| acc.checked_mul(n))
            .expect("group order overflows u128")
    }

    /// All strong generators (deduplicated), in level order.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Strips `g` through levels `from..`; returns the residue and the level
    /// at which stripping stopped (`levels.len()` when it went all the way).
    fn sift_from(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.image(level.base_point);
            match &level.transversal[beta] {
                Some((_, inv)) => h = h.then(inv),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, depth) = self.sift_from(g, 0);
        depth == self.levels.len() && h.is_identity()
    }

    /// Adds `g` to the group and restores the strong generating property.
    /// Returns false if `g` was already a member.
    pub fn extend(&mut self, g: &Permutation) -> bool {
        assert_eq!(g.degree(), self.degree, "degree mismatch");
        let (h, depth) = self.sift_from(g, 0);
        if depth == self.levels.len() && h.is_identity() {
            return false;
        }
        let top = self.insert_generator(h, depth);
        self.complete(top);
        true
    }

    /// Inserts a residue that fixes the base points of levels `< depth` into
    /// levels `0..=depth`, adding a base point when needed.
    fn insert_generator(&mut self, h: Permutation, depth: usize) -> usize {
        if depth == self.levels.len() {
            let pt = h.first_moved().expect("identity residue");
            self.levels.push(Level::new(pt, self.degree));
        }
        for l in 0..=depth {
            self.levels[l].gens.push(h.clone());
            self.levels[l].rebuild_orbit(self.degree);
        }
        depth
    }

    fn complete(&mut self, start: usize) {
        let mut i = start as isize;
        'outer: while i >= 0 {
            let li = i as usize;
            let n_orbit = self.levels[li].orbit.len();
            let n_gens = self.levels[li].gens.len();
            for oi in 0..n_orbit {
                for gi in 0..n_gens {
                    let level = &self.levels[li];
                    let beta = level.orbit[oi];
                    let s = &level.gens[gi];
                    let img = s.image(beta);
                    let u_beta = &level.transversal[beta].as_ref().unwrap().0;
                    let u_img_inv = &level.transversal[img].as_ref().unwrap().1;
                    let schreier = u_beta.then(s).then(u_img_inv);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, depth) = self.sift_from(&schreier, li + 1);
                    if depth < self.levels.len() || !h.is_identity() {
                        let j = self.insert_generator(h, depth);
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Every element, each produced exactly once.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        // Elements factor uniquely as u_k ... u_1 u_0 with u_i from level i.
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for g in &out {
                for &pt in &level.orbit {
                    let u = &level.transversal[pt].as_ref().unwrap().0;
                    next.push(g.then(u));
                }
            }
            out = next;
        }
        out
    }
}
