//! Permutation groups backed by a base and strong generating set.

mod chain;

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::ops::Deref;

use once_cell::race::OnceBox;

use crate::arith::is_power_of;
use crate::subgroup::ConjugacyClasses;
use crate::{Error, Perm, Result};
use chain::Chain;

/// Default limit on exhaustive element enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// Degree, generators and an optional label. No generators means the
/// trivial group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Perm>,
    pub name: Option<String>,
}

impl GroupSpec {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<GroupSpec> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(GroupSpec {
            degree,
            generators,
            name: None,
        })
    }

    pub fn named(mut self, name: impl Into<String>) -> GroupSpec {
        self.name = Some(name.into());
        self
    }
}

struct ElementTable {
    elements: Vec<Perm>,
    /// Indices into `elements`, sorted by element.
    sorted: Vec<u32>,
}

/// A permutation group. Immutable after construction apart from the lazily
/// filled element table and conjugacy classes, which are write-once and
/// safe to race on.
pub struct Group {
    spec: GroupSpec,
    chain: Chain,
    cap: usize,
    table: OnceBox<ElementTable>,
    classes: OnceBox<ConjugacyClasses>,
}

impl Group {
    /// Runs Schreier–Sims on the generators of `spec`.
    pub fn new(spec: GroupSpec) -> Group {
        let mut chain = Chain::new(spec.degree);
        for g in &spec.generators {
            chain.add_generator(g);
        }
        Group::from_parts(spec, chain, DEFAULT_ENUMERATION_CAP)
    }

    pub fn from_generators(degree: usize, generators: Vec<Perm>) -> Result<Group> {
        Ok(Group::new(GroupSpec::new(degree, generators)?))
    }

    pub fn trivial(degree: usize) -> Group {
        Group::new(GroupSpec {
            degree,
            generators: Vec::new(),
            name: None,
        })
    }

    fn from_parts(spec: GroupSpec, chain: Chain, cap: usize) -> Group {
        Group {
            spec,
            chain,
            cap,
            table: OnceBox::new(),
            classes: OnceBox::new(),
        }
    }

    /// Sets the enumeration cap used by [`Group::elements`] and inherited by
    /// every group derived from this one.
    pub fn with_cap(mut self, cap: usize) -> Group {
        self.cap = cap;
        self
    }

    pub fn named(mut self, name: impl Into<String>) -> Group {
        self.spec.name = Some(name.into());
        self
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn name(&self) -> Option<&str> {
        self.spec.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.spec.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.spec.generators
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.chain.orbit_lengths()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        self.chain.strong_generators()
    }

    /// Exact membership by sifting. Panics if the degrees differ.
    pub fn contains(&self, x: &Perm) -> bool {
        assert_eq!(x.degree(), self.degree(), "degree mismatch in contains");
        self.chain.contains(x)
    }

    pub fn try_contains(&self, x: &Perm) -> Result<bool> {
        if x.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: x.degree(),
            });
        }
        Ok(self.chain.contains(x))
    }

    /// Orbit of the 0-based point `point`, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            let pt = orbit[k];
            for g in self.generators() {
                let img = g.apply(pt);
                if !seen[img] {
                    seen[img] = true;
                    orbit.push(img);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    /// Uniform random element, as a product of random coset representatives
    /// down the stabilizer chain.
    pub fn random_element<R: rand_core::RngCore + ?Sized>(&self, rng: &mut R) -> Perm {
        self.chain.random_element(rng)
    }

    pub fn check_cap(&self, cap: usize) -> Result<()> {
        if self.order() > cap as u128 {
            return Err(Error::ExceedsEnumerationCap {
                order: self.order(),
                cap,
            });
        }
        Ok(())
    }

    /// All elements, using the group's own cap.
    pub fn elements(&self) -> Result<&[Perm]> {
        self.elements_capped(self.cap)
    }

    /// All elements exactly once, identity first. The table is cached, so
    /// later calls return it regardless of `cap`.
    pub fn elements_capped(&self, cap: usize) -> Result<&[Perm]> {
        if let Some(t) = self.table.get() {
            return Ok(&t.elements);
        }
        self.check_cap(cap)?;
        let t = self.table.get_or_init(|| {
            let elements = self.chain.elements();
            let mut sorted: Vec<u32> = (0..elements.len() as u32).collect();
            sorted.sort_unstable_by(|&a, &b| elements[a as usize].cmp(&elements[b as usize]));
            alloc::boxed::Box::new(ElementTable { elements, sorted })
        });
        Ok(&t.elements)
    }

    /// Position of `x` in the element table.
    pub fn index_of(&self, x: &Perm) -> Result<Option<usize>> {
        self.elements()?;
        let t = self.table.get().expect("table populated");
        Ok(t
            .sorted
            .binary_search_by(|&i| t.elements[i as usize].cmp(x))
            .ok()
            .map(|pos| t.sorted[pos] as usize))
    }

    pub(crate) fn classes_cell(&self) -> &OnceBox<ConjugacyClasses> {
        &self.classes
    }

    /// A group on the same points with the same cap.
    pub fn sibling(&self, generators: Vec<Perm>) -> Group {
        let mut b = GroupBuilder::new(self.degree()).with_cap(self.cap);
        for g in &generators {
            b.add(g);
        }
        b.finish_with_generators(generators)
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        is_power_of(self.order(), p)
    }

    /// True iff `self` is a subgroup of `other` (same points).
    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree() == other.degree()
            && other.order().is_multiple_of(self.order())
            && self.generators().iter().all(|g| other.contains(g))
    }

    /// Equality as element sets.
    pub fn same_elements(&self, other: &Group) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }
}

impl Clone for Group {
    fn clone(&self) -> Group {
        Group::from_parts(self.spec.clone(), self.chain.clone(), self.cap)
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.spec.name)
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field("generators", &self.spec.generators)
            .finish()
    }
}

/// Incremental generation: add elements one at a time, keeping only the
/// ones that enlarge the group.
pub struct GroupBuilder {
    chain: Chain,
    generators: Vec<Perm>,
    cap: usize,
}

impl GroupBuilder {
    pub fn new(degree: usize) -> GroupBuilder {
        GroupBuilder {
            chain: Chain::new(degree),
            generators: Vec::new(),
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> GroupBuilder {
        self.cap = cap;
        self
    }

    /// Adds `g` if it is not yet a member; returns whether the group grew.
    pub fn add(&mut self, g: &Perm) -> bool {
        let grew = self.chain.add_generator(g);
        if grew {
            self.generators.push(g.clone());
        }
        grew
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain.contains(g)
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn finish(self) -> Group {
        let generators = self.generators.clone();
        self.finish_with_generators(generators)
    }

    fn finish_with_generators(self, generators: Vec<Perm>) -> Group {
        let spec = GroupSpec {
            degree: self.chain.degree(),
            generators,
            name: None,
        };
        Group::from_parts(spec, self.chain, self.cap)
    }
}

/// A group together with the ambient group it lives in.
#[derive(Clone, Debug)]
pub struct Subgroup {
    group: Arc<Group>,
    ambient: Arc<Group>,
}

impl Subgroup {
    /// Wraps `group` as a subgroup of `ambient`, checking every generator.
    pub fn new(ambient: Arc<Group>, group: Arc<Group>) -> Result<Subgroup> {
        if group.degree() != ambient.degree() {
            return Err(Error::DegreeMismatch {
                left: ambient.degree(),
                right: group.degree(),
            });
        }
        if let Some(g) = group.generators().iter().find(|g| !ambient.contains(g)) {
            return Err(Error::ElementNotInAmbient(format!("{g}")));
        }
        Ok(Subgroup { group, ambient })
    }

    pub(crate) fn new_unchecked(ambient: Arc<Group>, group: Group) -> Subgroup {
        debug_assert!(group.is_subgroup_of(&ambient));
        Subgroup {
            group: Arc::new(group),
            ambient,
        }
    }

    pub fn whole(ambient: &Arc<Group>) -> Subgroup {
        Subgroup {
            group: ambient.clone(),
            ambient: ambient.clone(),
        }
    }

    pub fn trivial(ambient: &Arc<Group>) -> Subgroup {
        let g = ambient.sibling(Vec::new());
        Subgroup::new_unchecked(ambient.clone(), g)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn ambient(&self) -> &Arc<Group> {
        &self.ambient
    }

    /// Index in the ambient group.
    pub fn index(&self) -> u128 {
        self.ambient.order() / self.group.order()
    }

    /// Re-homes the subgroup in another group that contains it.
    pub fn rehome(&self, ambient: &Arc<Group>) -> Result<Subgroup> {
        Subgroup::new(ambient.clone(), self.group.clone())
    }
}

impl Deref for Subgroup {
    type Target = Group;

    fn deref(&self) -> &Group {
        &self.group
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn g(degree: usize, gens: &[&str]) -> Group {
        let gens = gens.iter().map(|t| Perm::parse(t, degree).unwrap()).collect();
        Group::from_generators(degree, gens).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(g(3, &["(1 2)", "(1 2 3)"]).order(), 6);
        assert_eq!(g(5, &["(1 2 3 4 5)", "(1 2)"]).order(), 120);
        assert_eq!(g(4, &[]).order(), 1);
        assert_eq!(g(8, &["(1 2 3 4 5 6 7 8)", "(1 2)"]).order(), 40320);
        assert_eq!(g(4, &["(1 2 3)", "(2 3 4)"]).order(), 12);
        assert_eq!(g(6, &["(1 2)", "(3 4)", "(5 6)"]).order(), 8);
    }

    #[test]
    fn membership() {
        let s3 = g(3, &["(1 2)", "(1 2 3)"]);
        assert!(s3.contains(&Perm::parse("(1 2 3)", 3).unwrap()));
        let a4 = g(4, &["(1 2 3)", "(2 3 4)"]);
        assert!(!a4.contains(&Perm::parse("(1 2)", 4).unwrap()));
        assert!(a4.contains(&Perm::identity(4)));
        assert!(matches!(
            a4.try_contains(&Perm::identity(3)),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn enumeration_and_cap() {
        let s3 = g(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(s3.elements_capped(10).unwrap().len(), 6);
        let s5 = g(5, &["(1 2 3 4 5)", "(1 2)"]);
        assert_eq!(
            s5.elements_capped(100),
            Err(Error::ExceedsEnumerationCap { order: 120, cap: 100 })
        );
        let els = s5.elements().unwrap();
        assert_eq!(els.len(), 120);
        assert!(els[0].is_identity());
        let mut sorted = els.to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 120);
        for (i, x) in els.iter().enumerate() {
            assert_eq!(s5.index_of(x).unwrap(), Some(i));
        }
    }

    #[test]
    fn orbits_and_random() {
        let s3 = g(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(s3.orbit(0), [0, 1, 2]);
        assert_eq!(g(3, &[]).orbit(1), [1]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = g(12, &["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"]);
        assert_eq!(m.order(), 7920);
        for _ in 0..50 {
            assert!(m.contains(&m.random_element(&mut rng)));
        }
    }

    #[test]
    fn subgroup_wrapping() {
        let s4 = Arc::new(g(4, &["(1 2 3 4)", "(1 2)"]));
        let a4 = Arc::new(g(4, &["(1 2 3)", "(2 3 4)"]));
        let sub = Subgroup::new(s4.clone(), a4.clone()).unwrap();
        assert_eq!(sub.index(), 2);
        assert!(matches!(
            Subgroup::new(a4, s4),
            Err(Error::ElementNotInAmbient(_))
        ));
    }
}
