//! Stabilizer chain built with deterministic Schreier–Sims.

use alloc::vec;
use alloc::vec::Vec;

use crate::Perm;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Perm>,
    /// Basic orbit in discovery order; `orbit[0] == base`.
    orbit: Vec<u32>,
    /// `reps[β]` maps the base point to `β`.
    reps: Vec<Option<Perm>>,
    inv_reps: Vec<Option<Perm>>,
    /// `checked[k]`: number of orbit points whose Schreier generator with
    /// `gens[k]` has already been sifted.
    checked: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Level {
        let mut reps = vec![None; degree];
        let mut inv_reps = vec![None; degree];
        reps[base] = Some(Perm::identity(degree));
        inv_reps[base] = Some(Perm::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base as u32],
            reps,
            inv_reps,
            checked: Vec::new(),
        }
    }

    fn close_orbit(&mut self) {
        let mut k = 0;
        while k < self.orbit.len() {
            let pt = self.orbit[k] as usize;
            for g in &self.gens {
                let img = g.apply(pt);
                if self.reps[img].is_none() {
                    let rep = self.reps[pt].as_ref().expect("orbit point has a rep") * g;
                    self.inv_reps[img] = Some(rep.inverse());
                    self.reps[img] = Some(rep);
                    self.orbit.push(img as u32);
                }
            }
            k += 1;
        }
    }
}

/// A base and strong generating set.
#[derive(Clone, Debug)]
pub(crate) struct Chain {
    degree: usize,
    levels: Vec<Level>,
}

impl Chain {
    pub(crate) fn new(degree: usize) -> Chain {
        Chain {
            degree,
            levels: Vec::new(),
        }
    }

    pub(crate) fn degree(&self) -> usize {
        self.degree
    }

    pub(crate) fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub(crate) fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub(crate) fn strong_generators(&self) -> Vec<Perm> {
        let mut out: Vec<Perm> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Sifts `g` through the levels starting at `from`. Returns the residue
    /// and the index of the level where sifting stopped (`levels.len()` if
    /// it went all the way through).
    fn strip(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.apply(level.base);
            match &level.inv_reps[beta] {
                Some(inv) => h = &h * inv,
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    pub(crate) fn contains(&self, g: &Perm) -> bool {
        let (h, j) = self.strip(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    /// Adds `g` to the generating set. Returns false if it was already a member.
    pub(crate) fn add_generator(&mut self, g: &Perm) -> bool {
        debug_assert_eq!(g.degree(), self.degree);
        let (h, j) = self.strip(g, 0);
        if j == self.levels.len() && h.is_identity() {
            return false;
        }
        self.insert(h, 0, j);
        self.complete(j);
        true
    }

    /// Appends `h` to the generators of levels `from..=to`, creating level
    /// `to` when it does not exist yet.
    fn insert(&mut self, h: Perm, from: usize, to: usize) {
        if to == self.levels.len() {
            let moved = (0..self.degree)
                .find(|&i| h.apply(i) != i)
                .expect("residue moves a point");
            self.levels.push(Level::new(moved, self.degree));
        }
        for level in &mut self.levels[from..=to] {
            level.gens.push(h.clone());
            level.checked.push(0);
            level.close_orbit();
        }
    }

    fn complete(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let l = i as usize;
            match self.next_missing_schreier_generator(l) {
                Some((h, j)) => {
                    self.insert(h, l + 1, j);
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    fn next_missing_schreier_generator(&mut self, l: usize) -> Option<(Perm, usize)> {
        for k in 0..self.levels[l].gens.len() {
            while self.levels[l].checked[k] < self.levels[l].orbit.len() {
                let level = &mut self.levels[l];
                let beta = level.orbit[level.checked[k]] as usize;
                level.checked[k] += 1;
                let s = &level.gens[k];
                let target = s.apply(beta);
                let u_beta_s = level.reps[beta].as_ref().expect("rep") * s;
                if Some(&u_beta_s) == level.reps[target].as_ref() {
                    continue;
                }
                let schreier = &u_beta_s * level.inv_reps[target].as_ref().expect("rep");
                let (h, j) = self.strip(&schreier, l + 1);
                if j < self.levels.len() || !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    /// Every element exactly once, identity first.
    pub(crate) fn elements(&self) -> Vec<Perm> {
        let mut acc = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * level.orbit.len());
            for &beta in &level.orbit {
                let u = level.reps[beta as usize].as_ref().expect("rep");
                for h in &acc {
                    next.push(h * u);
                }
            }
            acc = next;
        }
        acc
    }

    /// Product of uniformly chosen transversal elements; uniform on the group.
    pub(crate) fn random_element<R: rand_core::RngCore + ?Sized>(&self, rng: &mut R) -> Perm {
        let mut g = Perm::identity(self.degree);
        for level in self.levels.iter().rev() {
            let k = (rng.next_u64() % level.orbit.len() as u64) as usize;
            let u = level.reps[level.orbit[k] as usize].as_ref().expect("rep");
            g = &g * u;
        }
        g
    }
}
