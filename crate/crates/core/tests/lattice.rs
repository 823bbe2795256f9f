//! Subgroup enumeration against the depth-first oracle.

use std::sync::Arc;

use cellfuse_core::catalog::{self, desk_catalog};
use cellfuse_core::lattice::all_subgroups;
use cellfuse_core::oracle::{self, naive_all_subgroups, subset_subgroups, ElementSet};
use cellfuse_core::subgroup::sylow_subgroup;
use cellfuse_core::Group;

fn element_sets(g: &Arc<Group>) -> Vec<ElementSet> {
    let mut v: Vec<ElementSet> = all_subgroups(g)
        .unwrap()
        .iter()
        .map(|h| oracle::elements(h).unwrap())
        .collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    v
}

#[test]
fn lattice_matches_oracle_up_to_order_32() {
    let mut seen = 0;
    for g in desk_catalog().unwrap() {
        if g.order() > 32 {
            continue;
        }
        let g = Arc::new(g);
        let naive = naive_all_subgroups(g.degree(), &oracle::elements(&g).unwrap()).unwrap();
        assert_eq!(element_sets(&g), naive, "{}", g.name().unwrap());
        seen += 1;
    }
    assert!(seen > 40);
}

#[test]
fn depth_first_oracle_matches_subset_oracle() {
    for g in [catalog::dihedral(8).unwrap(), catalog::quaternion8().unwrap(), catalog::cyclic(12).unwrap()] {
        let set = oracle::elements(&g).unwrap();
        assert_eq!(naive_all_subgroups(g.degree(), &set).unwrap(), subset_subgroups(&set).unwrap());
    }
}

#[test]
fn sylow_lattices_of_larger_groups() {
    for (g, p) in [(catalog::symmetric(6).unwrap(), 2), (catalog::dihedral(64).unwrap(), 2), (catalog::psl2_8().unwrap(), 2)] {
        let s = sylow_subgroup(&Arc::new(g), p).unwrap();
        let naive = naive_all_subgroups(s.degree(), &oracle::elements(&s).unwrap()).unwrap();
        assert_eq!(element_sets(s.group()), naive);
    }
}
