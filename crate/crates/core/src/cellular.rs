//! p-socles, strong closure, `ω̄S`, `O_A(G)`, p-perfectness and fusion control.
//!
//! All predicates are exact sweeps over element tables and conjugacy
//! classes, so they inherit the enumeration cap of the groups involved.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::arith::{is_power_of, p_part};
use crate::group::GroupBuilder;
use crate::lattice::all_subgroups;
use crate::subgroup::{
    centralizer, class_index, conjugacy_classes, derived_subgroup, intersection_order,
    normal_closure, subgroup_product_contains, sylow_subgroup,
};
use crate::{Error, Group, Perm, Result, Subgroup};

/// `A = ω̄S` together with the Sylow subgroup it was computed in.
#[derive(Debug, Clone)]
pub struct OmegaBarResult {
    pub subgroup: Subgroup,
    pub sylow: Subgroup,
    /// `|Cl₀(S)|, |Cl₁(S)|, …`, strictly increasing, ending with the first
    /// repeated value.
    pub trace: Vec<u128>,
}

/// `O_A(G)` and the class representatives whose normal closures made it up.
#[derive(Debug, Clone)]
pub struct OAResult {
    pub subgroup: Subgroup,
    pub contributing_classes: Vec<Perm>,
}

/// `Ω₁(H)`: the subgroup generated by the elements of order `p`.
pub fn p_socle(h: &Arc<Group>, p: u64) -> Result<Subgroup> {
    let mut b = GroupBuilder::new(h.degree()).with_cap(h.cap());
    for x in h.elements()? {
        if !b.contains(x) && x.order() == p {
            b.add(x);
        }
    }
    Ok(Subgroup::new_unchecked(h.clone(), b.finish()))
}

/// Whether `R ≤ S` is strongly closed in `G`: every `G`-conjugate of an
/// element of `R` that lands in `S` lies in `R`.
///
/// `x^G ∩ S` only depends on the class of `x`, so each class meeting `R`
/// is inspected once.
pub fn is_strongly_closed(g: &Group, s: &Group, r: &Group) -> Result<bool> {
    let elements = g.elements()?;
    let classes = conjugacy_classes(g)?;
    let mut visited = BTreeSet::new();
    for x in r.elements()? {
        let c = class_index(g, x)?;
        if !visited.insert(c) {
            continue;
        }
        let escapes = classes.members(c).iter().any(|&i| {
            let y = &elements[i as usize];
            s.contains(y) && !r.contains(y)
        });
        if escapes {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ω̄S` for a Sylow p-subgroup `S` chosen by [`sylow_subgroup`].
pub fn omega_bar(g: &Arc<Group>, p: u64) -> Result<OmegaBarResult> {
    let s = sylow_subgroup(g, p)?;
    omega_bar_in(g, s, p)
}

/// `ω̄S` for a given Sylow p-subgroup `S` of `G`, by the iteration
/// `Cl₀ = Ω₁(S)`, `Cl_{i+1} = ⟨ x^G ∩ S : x ∈ Cl_i ⟩` up to its fixed point.
///
/// Each stage lies in every strongly closed subgroup of `S` containing
/// `Ω₁(S)`, so the fixed point is the smallest one.
pub fn omega_bar_in(g: &Arc<Group>, s: Subgroup, p: u64) -> Result<OmegaBarResult> {
    if s.is_trivial() {
        return Ok(OmegaBarResult {
            subgroup: s.clone(),
            sylow: s,
            trace: alloc::vec![1],
        });
    }
    let elements = g.elements()?;
    let classes = conjugacy_classes(g)?;
    let mut stage = p_socle(s.group(), p)?.group().clone();
    let mut trace = alloc::vec![stage.order()];
    let mut stages = Vec::new();
    loop {
        let mut meeting = BTreeSet::new();
        for x in stage.elements()? {
            meeting.insert(class_index(g, x)?);
        }
        let mut b = GroupBuilder::new(g.degree()).with_cap(g.cap());
        for &c in &meeting {
            for &i in classes.members(c) {
                let y = &elements[i as usize];
                if !b.contains(y) && s.contains(y) {
                    b.add(y);
                }
            }
        }
        let next = Arc::new(b.finish());
        trace.push(next.order());
        if next.order() == stage.order() {
            break;
        }
        stages.push(stage);
        stage = next;
    }
    debug_assert!(is_strongly_closed(g, &s, &stage)?);
    // Every earlier stage is a proper subgroup of the limit and fails closure.
    debug_assert!(stages
        .iter()
        .all(|earlier| !is_strongly_closed(g, &s, earlier).unwrap_or(true)));
    Ok(OmegaBarResult {
        subgroup: Subgroup::new_unchecked(g.clone(), (*stage).clone()),
        sylow: s,
        trace,
    })
}

/// `O_A(G)`: the largest normal subgroup `N` with `A ∩ N` Sylow in `N`.
///
/// Every normal subgroup is the product of the normal closures `⟨g^G⟩` of its
/// elements. The defining property passes to normal subgroups of `G` inside
/// a qualifying `N` (a Sylow subgroup of `N` meets a normal subgroup of `N`
/// in a Sylow subgroup), and it is preserved under products. So `O_A(G)` is
/// the product of the qualifying `⟨g^G⟩`, one `g` per conjugacy class.
pub fn o_sub_a(g: &Arc<Group>, a: &Group, p: u64) -> Result<OAResult> {
    let classes = conjugacy_classes(g)?;
    let mut b = GroupBuilder::new(g.degree()).with_cap(g.cap());
    let mut contributing = Vec::new();
    for rep in classes.representatives() {
        if rep.is_identity() {
            continue;
        }
        let n = normal_closure(g, core::slice::from_ref(rep))?;
        if intersection_order(a, &n)? == p_part(n.order(), p) {
            contributing.push(rep.clone());
            for x in n.generators() {
                b.add(x);
            }
        }
    }
    Ok(OAResult {
        subgroup: Subgroup::new_unchecked(g.clone(), b.finish()),
        contributing_classes: contributing,
    })
}

/// No normal subgroup of index `p`. Any such subgroup contains `G'`, and the
/// abelian group `G/G'` has a subgroup of index `p` iff `p` divides its
/// order, so this is `p ∤ [G : G']`.
pub fn is_p_perfect(g: &Arc<Group>, p: u64) -> Result<bool> {
    let d = derived_subgroup(g)?;
    Ok(!(g.order() / d.order()).is_multiple_of(p as u128))
}

fn require_chain(g: &Group, h: &Group, r: &Group) -> Result<()> {
    if !r.is_subgroup_of(h) || !h.is_subgroup_of(g) {
        return Err(Error::InvalidParameter("fusion control needs R <= H <= G".into()));
    }
    Ok(())
}

/// Whether elements of `R` that are conjugate in `G` are conjugate in `H`.
pub fn controls_fusion(g: &Group, h: &Group, r: &Group) -> Result<bool> {
    require_chain(g, h, r)?;
    let mut h_class_of_g_class: BTreeMap<usize, usize> = BTreeMap::new();
    for x in r.elements()? {
        let gc = class_index(g, x)?;
        let hc = class_index(h, x)?;
        if *h_class_of_g_class.entry(gc).or_insert(hc) != hc {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether for every `P ≤ R` and `g ∈ G` with `gPg⁻¹ ≤ R` one can write
/// `g = h·c` with `h ∈ H` and `c ∈ C_G(P)`.
pub fn controls_strong_fusion(g: &Arc<Group>, h: &Group, r: &Group) -> Result<bool> {
    require_chain(g, h, r)?;
    let r = Arc::new(r.clone());
    let elements = g.elements()?;
    for p in all_subgroups(&r)? {
        let c = centralizer(g, p.generators())?;
        for x in elements {
            let inv = x.inverse();
            let lands_in_r = p.generators().iter().all(|y| r.contains(&(&(x * y) * &inv)));
            if lands_in_r && !subgroup_product_contains(x, h, &c)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For a p-group `T` generated by elements of order `p`: picks a minimal
/// generating set of order-`p` elements and returns the normal closure `H`
/// of all but the last one. Then `[T:H] = p` and `Ω₁(H) = H`.
///
/// The generating set is found greedily in element-table order and then
/// pruned of redundant members. In a p-group every irredundant generating
/// set is minimal (it maps to a basis of the Frattini quotient).
pub fn socle_step(t: &Arc<Group>, p: u64) -> Result<Subgroup> {
    if !is_power_of(t.order(), p) {
        return Err(Error::NotAPGroup(p));
    }
    if t.is_trivial() {
        return Err(Error::InvalidParameter("socle step needs a nontrivial group".into()));
    }
    let mut b = GroupBuilder::new(t.degree()).with_cap(t.cap());
    for x in t.elements()? {
        if b.order() == t.order() {
            break;
        }
        if x.order() == p {
            b.add(x);
        }
    }
    if b.order() != t.order() {
        return Err(Error::NotGeneratedByOrderP(p));
    }
    let mut gens = b.generators().to_vec();
    let mut k = 0;
    while k < gens.len() {
        let mut without = GroupBuilder::new(t.degree());
        for (j, x) in gens.iter().enumerate() {
            if j != k {
                without.add(x);
            }
        }
        if without.order() == t.order() {
            gens.remove(k);
        } else {
            k += 1;
        }
    }
    let h = normal_closure(t, &gens[..gens.len() - 1])?;
    debug_assert_eq!(t.order() / h.order(), p as u128);
    debug_assert!(p_socle(h.group(), p)?.order() == h.order());
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use alloc::vec;

    fn arc(g: Group) -> Arc<Group> {
        Arc::new(g)
    }

    fn perm(t: &str, n: usize) -> Perm {
        Perm::parse(t, n).unwrap()
    }

    fn d8_in_s4() -> (Arc<Group>, Group) {
        let s4 = arc(catalog::symmetric(4).unwrap());
        let d8 = Group::from_generators(4, vec![perm("(1 2 3 4)", 4), perm("(1 3)", 4)]).unwrap();
        (s4, d8)
    }

    #[test]
    fn socles() {
        assert_eq!(p_socle(&arc(catalog::cyclic(9).unwrap()), 3).unwrap().order(), 3);
        assert_eq!(p_socle(&arc(catalog::quaternion8().unwrap()), 2).unwrap().order(), 2);
        assert_eq!(p_socle(&arc(catalog::symmetric(3).unwrap()), 3).unwrap().order(), 3);
    }

    #[test]
    fn strong_closure() {
        let (s4, d8) = d8_in_s4();
        assert!(is_strongly_closed(&s4, &d8, &d8).unwrap());
        let r = Group::from_generators(4, vec![perm("(1 2)(3 4)", 4)]).unwrap();
        assert!(!is_strongly_closed(&s4, &d8, &r).unwrap());
        let g = arc(catalog::psl2(19).unwrap());
        let s = sylow_subgroup(&g, 3).unwrap();
        let omega = p_socle(s.group(), 3).unwrap();
        assert!(is_strongly_closed(&g, &s, &omega).unwrap());
    }

    #[test]
    fn omega_bar_examples() {
        let g = arc(catalog::psl2(19).unwrap());
        let res = omega_bar(&g, 3).unwrap();
        assert_eq!(res.subgroup.order(), 3);
        assert_eq!(res.trace, [3, 3]);
        let a5 = arc(catalog::alternating(5).unwrap());
        let res = omega_bar(&a5, 2).unwrap();
        assert_eq!(res.subgroup.order(), 4);
        assert!(res.subgroup.same_elements(&res.sylow));
        let z5 = arc(catalog::cyclic(5).unwrap());
        assert_eq!(omega_bar(&z5, 5).unwrap().subgroup.order(), 5);
        let s3 = arc(catalog::symmetric(3).unwrap());
        let res = omega_bar(&s3, 5).unwrap();
        assert!(res.subgroup.is_trivial());
        assert_eq!(res.trace, [1]);
    }

    #[test]
    fn o_sub_a_examples() {
        let s4 = arc(catalog::symmetric(4).unwrap());
        let s = sylow_subgroup(&s4, 2).unwrap();
        assert!(o_sub_a(&s4, &s, 2).unwrap().subgroup.same_elements(&s4));
        let g = arc(catalog::psl2(19).unwrap());
        let a = omega_bar(&g, 3).unwrap().subgroup;
        assert!(o_sub_a(&g, &a, 3).unwrap().subgroup.is_trivial());
        let s3 = arc(catalog::symmetric(3).unwrap());
        let a3 = p_socle(&s3, 3).unwrap();
        assert!(o_sub_a(&s3, &a3, 3).unwrap().subgroup.same_elements(&s3));
    }

    #[test]
    fn p_perfect_examples() {
        assert!(is_p_perfect(&arc(catalog::alternating(5).unwrap()), 2).unwrap());
        assert!(!is_p_perfect(&arc(catalog::cyclic(3).unwrap()), 3).unwrap());
        let s3 = arc(catalog::symmetric(3).unwrap());
        assert!(!is_p_perfect(&s3, 2).unwrap());
        assert!(is_p_perfect(&s3, 3).unwrap());
    }

    #[test]
    fn fusion_examples() {
        let (s4, d8) = d8_in_s4();
        assert!(controls_fusion(&s4, &s4, &d8).unwrap());
        assert!(!controls_fusion(&s4, &d8, &d8).unwrap());
        assert!(controls_strong_fusion(&s4, &s4, &d8).unwrap());
        assert!(!controls_strong_fusion(&s4, &d8, &d8).unwrap());
        let g = arc(catalog::psl2(19).unwrap());
        let s = sylow_subgroup(&g, 3).unwrap();
        let n = crate::subgroup::normalizer(&g, &s).unwrap();
        assert!(controls_fusion(&g, &n, &s).unwrap());
        let a = omega_bar(&g, 3).unwrap().subgroup;
        let na = crate::subgroup::normalizer(&g, &a).unwrap();
        assert!(controls_strong_fusion(&g, &na, &s).unwrap());
        assert!(matches!(
            controls_fusion(&d8, &s4, &d8),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn socle_step_examples() {
        let z5 = arc(catalog::cyclic(5).unwrap());
        let h = socle_step(&z5, 5).unwrap();
        assert!(h.is_trivial());
        let v4 = arc(
            Group::from_generators(4, vec![perm("(1 2)(3 4)", 4), perm("(1 3)(2 4)", 4)]).unwrap(),
        );
        assert_eq!(socle_step(&v4, 2).unwrap().order(), 2);
        let d8 = arc(catalog::dihedral(8).unwrap());
        let h = socle_step(&d8, 2).unwrap();
        assert_eq!(h.order(), 4);
        assert_eq!(p_socle(h.group(), 2).unwrap().order(), 4);
        assert_eq!(
            socle_step(&arc(catalog::symmetric(3).unwrap()), 2).unwrap_err(),
            Error::NotAPGroup(2)
        );
        assert_eq!(
            socle_step(&arc(catalog::cyclic(4).unwrap()), 2).unwrap_err(),
            Error::NotGeneratedByOrderP(2)
        );
    }
}
