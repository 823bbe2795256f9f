//! Every subgroup of a small group (intended for the p-groups `A` and `S`).

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::group::GroupBuilder;
use crate::{Error, Group, Result, Subgroup};

/// Largest group order accepted by [`all_subgroups`].
pub const SUBGROUP_LATTICE_CAP: usize = 512;

type Bits = Vec<u64>;

fn bit(bits: &Bits, i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(bits: &mut Bits, i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

struct Table {
    n: usize,
    /// `mul[i * n + j]` is the index of `e_i · e_j`.
    mul: Vec<u16>,
}

impl Table {
    fn new(p: &Group) -> Result<Table> {
        let elements = p.elements()?;
        let n = elements.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in elements {
            for b in elements {
                let j = p.index_of(&(a * b))?.expect("closed under products");
                mul.push(j as u16);
            }
        }
        Ok(Table { n, mul })
    }

    /// Subgroup generated by the elements with indices `gens`.
    fn closure(&self, gens: &[usize]) -> Bits {
        let mut bits = vec![0u64; self.n.div_ceil(64)];
        // The identity is element 0 of every element table.
        set_bit(&mut bits, 0);
        let mut members = vec![0usize];
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            for &g in gens {
                let y = self.mul[x * self.n + g] as usize;
                if !bit(&bits, y) {
                    set_bit(&mut bits, y);
                    members.push(y);
                }
            }
            k += 1;
        }
        bits
    }
}

/// All subgroups of `p`, each exactly once, ordered by order and then by
/// element set. Starts from the cyclic subgroups and closes under joins
/// with cyclic subgroups, deduplicating by element set.
pub fn all_subgroups(p: &Arc<Group>) -> Result<Vec<Subgroup>> {
    if p.order() > SUBGROUP_LATTICE_CAP as u128 {
        return Err(Error::ExceedsEnumerationCap {
            order: p.order(),
            cap: SUBGROUP_LATTICE_CAP,
        });
    }
    let table = Table::new(p)?;
    let mut seen: BTreeSet<Bits> = BTreeSet::new();
    let mut found: Vec<(Bits, Vec<usize>)> = Vec::new();
    let mut cyclic_gens: Vec<usize> = Vec::new();
    for x in 0..table.n {
        let gens = if x == 0 { Vec::new() } else { vec![x] };
        let bits = table.closure(&gens);
        if seen.insert(bits.clone()) {
            if x != 0 {
                cyclic_gens.push(x);
            }
            found.push((bits, gens));
        }
    }
    let mut k = 0;
    while k < found.len() {
        for &c in &cyclic_gens {
            if bit(&found[k].0, c) {
                continue;
            }
            let mut gens = found[k].1.clone();
            gens.push(c);
            let bits = table.closure(&gens);
            if seen.insert(bits.clone()) {
                found.push((bits, gens));
            }
        }
        k += 1;
    }
    let count = |b: &Bits| b.iter().map(|w| w.count_ones()).sum::<u32>();
    found.sort_by(|a, b| count(&a.0).cmp(&count(&b.0)).then_with(|| a.0.cmp(&b.0)));
    let elements = p.elements()?;
    Ok(found
        .into_iter()
        .map(|(_, gens)| {
            let mut b = GroupBuilder::new(p.degree()).with_cap(p.cap());
            for g in gens {
                b.add(&elements[g]);
            }
            Subgroup::new_unchecked(p.clone(), b.finish())
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::Perm;

    fn count(g: Group) -> usize {
        all_subgroups(&Arc::new(g)).unwrap().len()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(catalog::cyclic(5).unwrap()), 2);
        let v4 = Group::from_generators(
            4,
            vec![Perm::parse("(1 2)(3 4)", 4).unwrap(), Perm::parse("(1 3)(2 4)", 4).unwrap()],
        )
        .unwrap();
        assert_eq!(count(v4), 5);
        assert_eq!(count(catalog::dihedral(8).unwrap()), 10);
        assert_eq!(count(catalog::quaternion8().unwrap()), 6);
        assert_eq!(count(catalog::cyclic(32).unwrap()), 6);
        assert_eq!(count(catalog::symmetric(4).unwrap()), 30);
        assert_eq!(count(Group::trivial(3)), 1);
    }

    #[test]
    fn orders_divide_and_are_sorted() {
        let g = Arc::new(catalog::dihedral(16).unwrap());
        let subs = all_subgroups(&g).unwrap();
        assert!(subs.windows(2).all(|w| w[0].order() <= w[1].order()));
        assert!(subs.iter().all(|h| 16 % h.order() == 0));
        assert!(subs.first().unwrap().is_trivial());
        assert!(subs.last().unwrap().same_elements(&g));
    }

    #[test]
    fn cap() {
        let g = Arc::new(catalog::symmetric(6).unwrap());
        assert!(matches!(
            all_subgroups(&g),
            Err(Error::ExceedsEnumerationCap { order: 720, cap: 512 })
        ));
    }
}
