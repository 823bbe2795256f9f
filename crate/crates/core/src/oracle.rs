//! Brute-force reference implementations for differential testing.
//!
//! Nothing here uses the stabilizer chain, the cached element tables or the
//! class-based shortcuts of the main implementations: groups are plain
//! element sets closed by repeated multiplication, and every predicate is
//! its literal definition. Only [`Perm`] arithmetic is shared.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Group, Perm, Result};

/// Largest group order the oracles accept.
pub const ORACLE_CAP: usize = 2000;

pub type ElementSet = BTreeSet<Perm>;

fn check(order: usize) -> Result<()> {
    if order > ORACLE_CAP {
        return Err(Error::ExceedsEnumerationCap {
            order: order as u128,
            cap: ORACLE_CAP,
        });
    }
    Ok(())
}

/// Closure of `gens` under multiplication, starting from the identity.
pub fn closure<'a>(degree: usize, gens: impl IntoIterator<Item = &'a Perm>) -> Result<ElementSet> {
    let gens: Vec<&Perm> = gens.into_iter().collect();
    let mut set = ElementSet::new();
    let id = Perm::identity(degree);
    set.insert(id.clone());
    let mut frontier = alloc::vec![id];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = &x * g;
            if !set.contains(&y) {
                check(set.len() + 1)?;
                set.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    Ok(set)
}

/// Elements of `g`, recomputed from its generators.
pub fn elements(g: &Group) -> Result<ElementSet> {
    closure(g.degree(), g.generators())
}

fn conj_set(g: &Perm, h: &ElementSet) -> ElementSet {
    h.iter().map(|x| g.conjugate(x)).collect()
}

fn is_normal_in(g: &ElementSet, n: &ElementSet) -> bool {
    g.iter().all(|x| conj_set(x, n) == *n)
}

/// All normal subgroups of `g`: normal closures of every element (the
/// subgroup generated by its class), closed under pairwise joins.
pub fn naive_normal_subgroups(g: &Group) -> Result<Vec<ElementSet>> {
    let all = elements(g)?;
    let degree = g.degree();
    let mut found: Vec<ElementSet> = Vec::new();
    let mut seen = ElementSet::new();
    for x in &all {
        if seen.contains(x) {
            continue;
        }
        let class: ElementSet = all.iter().map(|y| y.conjugate(x)).collect();
        seen.extend(class.iter().cloned());
        let n = closure(degree, &class)?;
        if !found.contains(&n) {
            found.push(n);
        }
    }
    let mut k = 0;
    while k < found.len() {
        for j in 0..k {
            let joined = closure(degree, found[k].iter().chain(found[j].iter()))?;
            if !found.contains(&joined) {
                found.push(joined);
            }
        }
        k += 1;
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    debug_assert!(found.iter().all(|n| is_normal_in(&all, n)));
    Ok(found)
}

/// No normal subgroup of index `p`, by listing the normal subgroups.
pub fn naive_is_p_perfect(g: &Group, p: u64) -> Result<bool> {
    let order = elements(g)?.len();
    Ok(naive_normal_subgroups(g)?
        .iter()
        .all(|n| order / n.len() != p as usize))
}

fn p_part(mut n: usize, p: u64) -> usize {
    let mut part = 1;
    while n.is_multiple_of(p as usize) {
        n /= p as usize;
        part *= p as usize;
    }
    part
}

/// `O_A(G)` as the largest qualifying normal subgroup; errors if the
/// qualifying subgroups have no maximum.
pub fn naive_o_sub_a(g: &Group, a: &ElementSet, p: u64) -> Result<ElementSet> {
    let qualifying: Vec<ElementSet> = naive_normal_subgroups(g)?
        .into_iter()
        .filter(|n| n.intersection(a).count() == p_part(n.len(), p))
        .collect();
    let top = qualifying
        .iter()
        .max_by_key(|n| n.len())
        .expect("the trivial subgroup qualifies")
        .clone();
    if !qualifying.iter().all(|n| n.is_subset(&top)) {
        return Err(Error::InvalidParameter(
            "qualifying normal subgroups have no maximum".into(),
        ));
    }
    Ok(top)
}

pub fn naive_normalizer(g: &Group, h: &ElementSet) -> Result<ElementSet> {
    Ok(elements(g)?
        .into_iter()
        .filter(|x| conj_set(x, h) == *h)
        .collect())
}

pub fn naive_centralizer(g: &Group, targets: &ElementSet) -> Result<ElementSet> {
    Ok(elements(g)?
        .into_iter()
        .filter(|x| targets.iter().all(|t| (x * t) == (t * x)))
        .collect())
}

/// Literal strong-closure test over every `x ∈ R` and `g ∈ G`.
pub fn naive_is_strongly_closed(g: &ElementSet, s: &ElementSet, r: &ElementSet) -> bool {
    r.iter().all(|x| {
        g.iter().all(|y| {
            let c = y.conjugate(x);
            !s.contains(&c) || r.contains(&c)
        })
    })
}

/// Literal fusion-control test over all pairs of `R`.
pub fn naive_controls_fusion(g: &ElementSet, h: &ElementSet, r: &ElementSet) -> bool {
    r.iter().all(|x| {
        let in_g: ElementSet = g.iter().map(|y| y.conjugate(x)).collect();
        let in_h: ElementSet = h.iter().map(|y| y.conjugate(x)).collect();
        r.iter().all(|y| !in_g.contains(y) || in_h.contains(y))
    })
}

fn socle_of(degree: usize, h: &ElementSet, p: u64) -> Result<ElementSet> {
    let gens: Vec<&Perm> = h.iter().filter(|x| x.order() == p).collect();
    closure(degree, gens)
}

/// `ω̄S` by the literal iteration: every element of the current stage is
/// conjugated by every element of `G`.
pub fn naive_omega_bar(g: &Group, s: &ElementSet, p: u64) -> Result<ElementSet> {
    let all = elements(g)?;
    let degree = g.degree();
    let mut stage = socle_of(degree, s, p)?;
    loop {
        let mut gens = ElementSet::new();
        for x in &stage {
            for y in &all {
                let c = y.conjugate(x);
                if s.contains(&c) {
                    gens.insert(c);
                }
            }
        }
        let next = closure(degree, &gens)?;
        if next == stage {
            return Ok(stage);
        }
        stage = next;
    }
}

/// Every subgroup of a small group given as an element set: depth-first
/// over "current subgroup plus one more element".
pub fn naive_all_subgroups(degree: usize, group: &ElementSet) -> Result<Vec<ElementSet>> {
    if group.len() > 512 {
        return Err(Error::ExceedsEnumerationCap {
            order: group.len() as u128,
            cap: 512,
        });
    }
    let trivial = closure(degree, core::iter::empty())?;
    let mut found: Vec<ElementSet> = alloc::vec![trivial.clone()];
    let mut seen: BTreeSet<ElementSet> = BTreeSet::new();
    seen.insert(trivial);
    let mut k = 0;
    while k < found.len() {
        let current = found[k].clone();
        for x in group {
            if current.contains(x) {
                continue;
            }
            let next = closure(degree, current.iter().chain(core::iter::once(x)))?;
            if seen.insert(next.clone()) {
                found.push(next);
            }
        }
        k += 1;
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(found)
}

/// Subgroups found by testing every subset for closure. Only for groups of
/// order at most 16.
pub fn subset_subgroups(group: &ElementSet) -> Result<Vec<ElementSet>> {
    if group.len() > 16 {
        return Err(Error::ExceedsEnumerationCap {
            order: group.len() as u128,
            cap: 16,
        });
    }
    let items: Vec<&Perm> = group.iter().collect();
    let mut out = Vec::new();
    for mask in 1u32..(1 << items.len()) {
        let subset: ElementSet = (0..items.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| items[i].clone())
            .collect();
        let closed = subset
            .iter()
            .all(|a| subset.iter().all(|b| subset.contains(&(a * b))));
        if closed {
            out.push(subset);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// The strongly closed subgroups of `S` containing `Ω₁(S)`, and their unique
/// minimum. Errors if the minimum is not unique.
pub struct StronglyClosedFamily {
    pub members: Vec<ElementSet>,
    pub minimum: ElementSet,
}

pub fn naive_strongly_closed_family(g: &Group, s: &ElementSet, p: u64) -> Result<StronglyClosedFamily> {
    let all = elements(g)?;
    let degree = g.degree();
    let socle = socle_of(degree, s, p)?;
    let members: Vec<ElementSet> = naive_all_subgroups(degree, s)?
        .into_iter()
        .filter(|r| socle.is_subset(r) && naive_is_strongly_closed(&all, s, r))
        .collect();
    let minima: Vec<&ElementSet> = members
        .iter()
        .filter(|m| members.iter().all(|other| m.is_subset(other)))
        .collect();
    match minima.as_slice() {
        [only] => {
            let minimum = (*only).clone();
            Ok(StronglyClosedFamily { members, minimum })
        }
        _ => Err(Error::InvalidParameter(format!(
            "{} minimal strongly closed subgroups among {}",
            minima.len(),
            members.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn normal_subgroup_counts() {
        assert_eq!(naive_normal_subgroups(&catalog::symmetric(3).unwrap()).unwrap().len(), 3);
        assert_eq!(naive_normal_subgroups(&catalog::alternating(5).unwrap()).unwrap().len(), 2);
        let s4 = naive_normal_subgroups(&catalog::symmetric(4).unwrap()).unwrap();
        let orders: Vec<usize> = s4.iter().map(|n| n.len()).collect();
        assert_eq!(orders, [1, 4, 12, 24]);
    }

    #[test]
    fn omega_bar_of_s3() {
        let s3 = catalog::symmetric(3).unwrap();
        let s = closure(3, &[Perm::parse("(1 2 3)", 3).unwrap()]).unwrap();
        assert_eq!(naive_omega_bar(&s3, &s, 3).unwrap(), s);
    }

    #[test]
    fn subset_oracle_on_d8() {
        let d8 = elements(&catalog::dihedral(8).unwrap()).unwrap();
        assert_eq!(subset_subgroups(&d8).unwrap().len(), 10);
        assert_eq!(naive_all_subgroups(4, &d8).unwrap().len(), 10);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            elements(&catalog::symmetric(7).unwrap()),
            Err(Error::ExceedsEnumerationCap { cap: ORACLE_CAP, .. })
        ));
    }
}
