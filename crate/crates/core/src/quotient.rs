//! Quotients `G/N` realized as permutation groups on the right cosets of `N`.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::group::GroupBuilder;
use crate::subgroup::is_normal;
use crate::{Error, Group, Perm, Result, Subgroup};

/// The projection `G → G/N`.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    source: Arc<Group>,
    kernel: Subgroup,
    quotient: Arc<Group>,
    generator_images: Vec<(Perm, Perm)>,
    kernel_elements: Vec<Perm>,
    coset_reps: Vec<Perm>,
    /// Least element of each coset, mapped to the coset number.
    coset_of: BTreeMap<Perm, u32>,
}

impl QuotientMap {
    pub fn source(&self) -> &Arc<Group> {
        &self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn quotient(&self) -> &Arc<Group> {
        &self.quotient
    }

    pub fn generator_images(&self) -> &[(Perm, Perm)] {
        &self.generator_images
    }

    pub fn coset_representatives(&self) -> &[Perm] {
        &self.coset_reps
    }

    fn coset_key(&self, x: &Perm) -> Perm {
        least_in_coset(&self.kernel_elements, x)
    }

    fn coset_number(&self, x: &Perm) -> usize {
        self.coset_of[&self.coset_key(x)] as usize
    }

    /// Image of an element of the source group.
    pub fn map(&self, x: &Perm) -> Result<Perm> {
        if !self.source.try_contains(x)? {
            return Err(Error::ElementNotInAmbient(alloc::format!("{x}")));
        }
        let images = self
            .coset_reps
            .iter()
            .map(|r| self.coset_number(&(r * x)) as u32)
            .collect();
        Ok(Perm::from_images_unchecked(images))
    }

    /// `HN/N`, generated by the images of the generators of `h`.
    pub fn image(&self, h: &Group) -> Result<Subgroup> {
        let mut b = GroupBuilder::new(self.quotient.degree()).with_cap(self.quotient.cap());
        for g in h.generators() {
            b.add(&self.map(g)?);
        }
        Ok(Subgroup::new_unchecked(self.quotient.clone(), b.finish()))
    }
}

fn least_in_coset(kernel_elements: &[Perm], x: &Perm) -> Perm {
    kernel_elements
        .iter()
        .map(|n| n * x)
        .min()
        .expect("kernel contains the identity")
}

/// `G/N` acting on the `[G:N]` right cosets `Nx`; coset `Nx` goes to `Nxg`
/// under `g`, which is a homomorphism for the left-to-right product.
pub fn quotient(g: &Arc<Group>, n: &Group) -> Result<QuotientMap> {
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let index = g.order() / n.order();
    if index > g.cap() as u128 {
        return Err(Error::ExceedsEnumerationCap {
            order: index,
            cap: g.cap(),
        });
    }
    let kernel_elements = n.elements_capped(g.cap())?.to_vec();
    let mut coset_reps = alloc::vec![Perm::identity(g.degree())];
    let mut coset_of = BTreeMap::new();
    coset_of.insert(least_in_coset(&kernel_elements, &coset_reps[0]), 0u32);
    // Actions of the generators on cosets, filled in as cosets are discovered.
    let mut actions: Vec<Vec<u32>> = alloc::vec![Vec::new(); g.generators().len()];
    let mut k = 0;
    while k < coset_reps.len() {
        let r = coset_reps[k].clone();
        for (gi, a) in g.generators().iter().enumerate() {
            let y = &r * a;
            let key = least_in_coset(&kernel_elements, &y);
            let next = coset_of.len() as u32;
            let j = *coset_of.entry(key).or_insert_with(|| {
                coset_reps.push(y);
                next
            });
            actions[gi].push(j);
        }
        k += 1;
    }
    debug_assert_eq!(coset_reps.len() as u128, index);

    let degree = coset_reps.len();
    let mut generator_images = Vec::new();
    for (a, act) in g.generators().iter().zip(actions) {
        generator_images.push((a.clone(), Perm::from_images_unchecked(act)));
    }
    let images = generator_images.iter().map(|(_, img)| img.clone()).collect();
    // Generators stay aligned with the source generators, identities included.
    let quotient_group = Group::from_generators(degree, images)?.with_cap(g.cap());
    let kernel = Subgroup::new(g.clone(), Arc::new(n.clone()))?;
    Ok(QuotientMap {
        source: g.clone(),
        kernel,
        quotient: Arc::new(quotient_group),
        generator_images,
        kernel_elements,
        coset_reps,
        coset_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::subgroup::{normal_closure, sylow_subgroup};

    #[test]
    fn s3_mod_a3() {
        let s3 = Arc::new(catalog::symmetric(3).unwrap());
        let a3 = normal_closure(&s3, &[Perm::parse("(1 2 3)", 3).unwrap()]).unwrap();
        let q = quotient(&s3, &a3).unwrap();
        assert_eq!(q.quotient().order(), 2);
        assert!(q.image(&a3).unwrap().is_trivial());
    }

    #[test]
    fn trivial_kernel_gives_regular_action() {
        let s4 = Arc::new(catalog::symmetric(4).unwrap());
        let q = quotient(&s4, &Group::trivial(4)).unwrap();
        assert_eq!(q.quotient().order(), 24);
        assert_eq!(q.quotient().degree(), 24);
    }

    #[test]
    fn sylow_image_in_s4_mod_v4() {
        let s4 = Arc::new(catalog::symmetric(4).unwrap());
        let v4 = normal_closure(&s4, &[Perm::parse("(1 2)(3 4)", 4).unwrap()]).unwrap();
        let q = quotient(&s4, &v4).unwrap();
        assert_eq!(q.quotient().order(), 6);
        let d8 = sylow_subgroup(&s4, 2).unwrap();
        assert_eq!(q.image(&d8).unwrap().order(), 2);
    }

    #[test]
    fn rejects_non_normal() {
        let s3 = Arc::new(catalog::symmetric(3).unwrap());
        let t = Group::from_generators(3, alloc::vec![Perm::parse("(1 2)", 3).unwrap()]).unwrap();
        assert!(matches!(quotient(&s3, &t), Err(Error::NotNormal)));
    }

    #[test]
    fn map_is_a_homomorphism_with_the_right_kernel() {
        let s4 = Arc::new(catalog::symmetric(4).unwrap());
        let v4 = normal_closure(&s4, &[Perm::parse("(1 2)(3 4)", 4).unwrap()]).unwrap();
        let q = quotient(&s4, &v4).unwrap();
        let els = s4.elements().unwrap();
        for x in els {
            let fx = q.map(x).unwrap();
            assert_eq!(fx.is_identity(), v4.contains(x));
            for y in els {
                assert_eq!(q.map(&(x * y)).unwrap(), &fx * &q.map(y).unwrap());
            }
        }
    }
}
