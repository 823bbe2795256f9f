//! Subgroup constructions over a fixed ambient group.
//!
//! Normalizers, centralizers, conjugacy classes and intersections are exact
//! filters over the ambient element table, so they are only available
//! below the enumeration cap.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::p_part;
use crate::group::GroupBuilder;
use crate::{Error, Group, Perm, Result, Subgroup};

/// Conjugacy classes of a group, stored against its element table.
#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    representatives: Vec<Perm>,
    /// Element-table indices of each class, ascending.
    members: Vec<Vec<u32>>,
    /// Class number of each element-table index.
    class_of: Vec<u32>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn representatives(&self) -> &[Perm] {
        &self.representatives
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    pub fn members(&self, class: usize) -> &[u32] {
        &self.members[class]
    }

    /// Class number of the element at table index `index`.
    pub fn class_of_index(&self, index: usize) -> usize {
        self.class_of[index] as usize
    }
}

fn require_member(ambient: &Group, x: &Perm) -> Result<()> {
    if !ambient.try_contains(x)? {
        return Err(Error::ElementNotInAmbient(format!("{x}")));
    }
    Ok(())
}

/// `⟨gens⟩` as a subgroup of `ambient`.
pub fn generated_subgroup(ambient: &Arc<Group>, gens: &[Perm]) -> Result<Subgroup> {
    let mut b = GroupBuilder::new(ambient.degree()).with_cap(ambient.cap());
    for g in gens {
        require_member(ambient, g)?;
        b.add(g);
    }
    Ok(Subgroup::new_unchecked(ambient.clone(), b.finish()))
}

/// Smallest normal subgroup of `ambient` containing `gens`: conjugates of
/// the current generators by the ambient generators are adjoined until
/// nothing new appears.
pub fn normal_closure(ambient: &Arc<Group>, gens: &[Perm]) -> Result<Subgroup> {
    let mut b = GroupBuilder::new(ambient.degree()).with_cap(ambient.cap());
    for g in gens {
        require_member(ambient, g)?;
        b.add(g);
    }
    let conjugators: Vec<(Perm, Perm)> = ambient
        .generators()
        .iter()
        .map(|a| (a.clone(), a.inverse()))
        .collect();
    let mut k = 0;
    while k < b.generators().len() && b.order() < ambient.order() {
        let x = b.generators()[k].clone();
        for (a, a_inv) in &conjugators {
            let c = &(a * &x) * a_inv;
            b.add(&c);
        }
        k += 1;
    }
    Ok(Subgroup::new_unchecked(ambient.clone(), b.finish()))
}

/// Subgroup generated by several subgroups of the same ambient group.
pub fn join(ambient: &Arc<Group>, parts: &[&Group]) -> Result<Subgroup> {
    let gens: Vec<Perm> = parts
        .iter()
        .flat_map(|h| h.generators().iter().cloned())
        .collect();
    generated_subgroup(ambient, &gens)
}

fn filter_elements(ambient: &Arc<Group>, mut keep: impl FnMut(&Perm) -> bool) -> Result<Subgroup> {
    let mut b = GroupBuilder::new(ambient.degree()).with_cap(ambient.cap());
    for g in ambient.elements()? {
        if !b.contains(g) && keep(g) {
            b.add(g);
        }
    }
    Ok(Subgroup::new_unchecked(ambient.clone(), b.finish()))
}

/// Elements of `g` commuting with every permutation in `targets`.
pub fn centralizer(g: &Arc<Group>, targets: &[Perm]) -> Result<Subgroup> {
    for t in targets {
        if t.degree() != g.degree() {
            return Err(Error::DegreeMismatch {
                left: g.degree(),
                right: t.degree(),
            });
        }
    }
    filter_elements(g, |x| targets.iter().all(|t| x.commutes_with(t)))
}

/// `N_G(H)`. Since conjugation by a fixed element is injective and the
/// group is finite, `gHg⁻¹ ⊆ H` already forces `gHg⁻¹ = H`; checking the
/// generators of `H` in one direction is therefore exact.
pub fn normalizer(g: &Arc<Group>, h: &Group) -> Result<Subgroup> {
    if h.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: h.degree(),
        });
    }
    filter_elements(g, |x| normalizes(x, h))
}

pub(crate) fn normalizes(x: &Perm, h: &Group) -> bool {
    let inv = x.inverse();
    h.generators().iter().all(|y| h.contains(&(&(x * y) * &inv)))
}

/// Conjugacy classes, computed once per group and cached.
pub fn conjugacy_classes(g: &Group) -> Result<&ConjugacyClasses> {
    let cell = g.classes_cell();
    if let Some(c) = cell.get() {
        return Ok(c);
    }
    let elements = g.elements()?;
    let computed = compute_classes(g, elements)?;
    Ok(cell.get_or_init(|| alloc::boxed::Box::new(computed)))
}

fn compute_classes(g: &Group, elements: &[Perm]) -> Result<ConjugacyClasses> {
    const UNSEEN: u32 = u32::MAX;
    let conjugators: Vec<(Perm, Perm)> = g
        .generators()
        .iter()
        .map(|a| (a.clone(), a.inverse()))
        .collect();
    let mut class_of = vec![UNSEEN; elements.len()];
    let mut representatives = Vec::new();
    let mut members = Vec::new();
    for start in 0..elements.len() {
        if class_of[start] != UNSEEN {
            continue;
        }
        let c = representatives.len() as u32;
        class_of[start] = c;
        let mut class = vec![start as u32];
        let mut k = 0;
        while k < class.len() {
            let x = &elements[class[k] as usize];
            for (a, a_inv) in &conjugators {
                let y = &(a * x) * a_inv;
                let j = g.index_of(&y)?.expect("conjugate stays in the group");
                if class_of[j] == UNSEEN {
                    class_of[j] = c;
                    class.push(j as u32);
                }
            }
            k += 1;
        }
        class.sort_unstable();
        representatives.push(elements[start].clone());
        members.push(class);
    }
    Ok(ConjugacyClasses {
        representatives,
        members,
        class_of,
    })
}

/// Class number of `x` in `g`.
pub fn class_index(g: &Group, x: &Perm) -> Result<usize> {
    let classes = conjugacy_classes(g)?;
    let i = g
        .index_of(x)?
        .ok_or_else(|| Error::ElementNotInAmbient(format!("{x}")))?;
    Ok(classes.class_of_index(i))
}

/// `x^G ∩ H`.
pub fn class_meet_subgroup(g: &Group, x: &Perm, h: &Group) -> Result<BTreeSet<Perm>> {
    let c = class_index(g, x)?;
    let elements = g.elements()?;
    let classes = conjugacy_classes(g)?;
    Ok(classes
        .members(c)
        .iter()
        .map(|&i| &elements[i as usize])
        .filter(|y| h.contains(y))
        .cloned()
        .collect())
}

/// A Sylow p-subgroup, grown one step at a time inside normalizers.
///
/// While `P` is not Sylow, `p` divides `[N_G(P) : P]`, so some `y ∈ N_G(P)`
/// maps to an element of order `p` in `N_G(P)/P`. The p-part of such a `y`
/// still lies outside `P` and normalizes it, so `⟨P, y_p⟩` is a strictly
/// larger p-group. Elements are scanned in element-table order, which makes
/// the result reproducible.
pub fn sylow_subgroup(g: &Arc<Group>, p: u64) -> Result<Subgroup> {
    let target = p_part(g.order(), p);
    let mut b = GroupBuilder::new(g.degree()).with_cap(g.cap());
    if target == 1 {
        return Ok(Subgroup::new_unchecked(g.clone(), b.finish()));
    }
    let elements = g.elements()?;
    while b.order() < target {
        let current = Group::from_generators(g.degree(), b.generators().to_vec())?;
        let mut grew = false;
        for y in elements {
            if b.contains(y) || !normalizes(y, &current) {
                continue;
            }
            let z = y.p_part(p);
            if !b.contains(&z) {
                b.add(&z);
                grew = true;
                break;
            }
        }
        assert!(grew, "normalizer growth stalled below the Sylow order");
    }
    Ok(Subgroup::new_unchecked(g.clone(), b.finish()))
}

/// `[G, G]`, the normal closure of the commutators of generator pairs.
pub fn derived_subgroup(g: &Arc<Group>) -> Result<Subgroup> {
    let gens = g.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.commutator(b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms)
}

pub fn is_normal(g: &Group, h: &Group) -> bool {
    h.is_subgroup_of(g) && g.generators().iter().all(|x| normalizes(x, h))
}

/// `H ∩ K`, enumerating the smaller of the two.
pub fn subgroup_intersection(h: &Subgroup, k: &Group) -> Result<Subgroup> {
    let (small, large): (&Group, &Group) = if h.order() <= k.order() {
        (h, k)
    } else {
        (k, h)
    };
    let mut b = GroupBuilder::new(h.degree()).with_cap(h.cap());
    for x in small.elements()? {
        if !b.contains(x) && large.contains(x) {
            b.add(x);
        }
    }
    Ok(Subgroup::new_unchecked(h.ambient().clone(), b.finish()))
}

/// Number of elements of `a` lying in `b`.
pub fn intersection_order(a: &Group, b: &Group) -> Result<u128> {
    Ok(a.elements()?.iter().filter(|x| b.contains(x)).count() as u128)
}

/// Whether `g = h·c` for some `h ∈ H`, `c ∈ C`, i.e. `g·c⁻¹ ∈ H` for some
/// `c ∈ C`. The smaller factor is enumerated; `h⁻¹·g ∈ C` is the same test
/// read from the other side.
pub fn subgroup_product_contains(g: &Perm, h: &Group, c: &Group) -> Result<bool> {
    if c.order() <= h.order() {
        Ok(c.elements()?.iter().any(|x| h.contains(&(g * &x.inverse()))))
    } else {
        Ok(h.elements()?.iter().any(|x| c.contains(&(&x.inverse() * g))))
    }
}
