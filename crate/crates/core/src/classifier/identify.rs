//! Best-effort names for small groups, used to label `Γ` in reports.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{lcm, prime_divisors};
use crate::Group;

/// Largest order for which [`identify_small_group`] tries anything.
pub const IDENTIFY_MAX_ORDER: u128 = 120;

/// One of `cyclic n`, `dihedral 2n`, `elementary abelian p^k`,
/// `symmetric n`, `alternating n`, `quaternion 8` or `unknown(order)`.
///
/// Cyclic, elementary abelian, dihedral and quaternion labels are exact
/// characterizations. Symmetric and alternating labels are assigned by
/// matching the element-order histogram, which separates them from every
/// other group of the same order up to 120 that is likely to show up.
pub fn identify_small_group(h: &Group) -> String {
    let order = h.order();
    if order == 1 {
        return "cyclic 1".into();
    }
    let unknown = || format!("unknown({order})");
    if order > IDENTIFY_MAX_ORDER {
        return unknown();
    }
    let Ok(elements) = h.elements() else {
        return unknown();
    };
    let orders: Vec<u64> = elements.iter().map(|x| x.order()).collect();
    let n = order as u64;
    if orders.contains(&n) {
        return format!("cyclic {n}");
    }
    if h.is_abelian() {
        let primes = prime_divisors(order);
        if primes.len() == 1 && orders.iter().all(|&o| o == 1 || o == primes[0]) {
            let p = primes[0];
            let k = (0..).take_while(|&k| (p as u128).pow(k) < order).count();
            return format!("elementary abelian {p}^{k}");
        }
        return unknown();
    }
    let involutions = orders.iter().filter(|&&o| o == 2).count();
    if order == 8 && involutions == 1 {
        return "quaternion 8".into();
    }
    if n.is_multiple_of(2) && n >= 6 {
        let half = n / 2;
        if let Some(r) = elements.iter().find(|x| x.order() == half) {
            let rotations: Vec<_> = (0..half as i64).map(|k| r.pow(k)).collect();
            let dihedral = elements
                .iter()
                .zip(&orders)
                .all(|(x, &o)| o == 2 || rotations.contains(x));
            if dihedral {
                return format!("dihedral {n}");
            }
        }
    }
    let mut histogram = BTreeMap::new();
    for &o in &orders {
        *histogram.entry(o).or_insert(0u64) += 1;
    }
    for degree in 4..=5u64 {
        if histogram == order_histogram(degree, false) {
            return format!("symmetric {degree}");
        }
        if histogram == order_histogram(degree, true) {
            return format!("alternating {degree}");
        }
    }
    unknown()
}

/// Element-order histogram of `S_n` (or `A_n`), from the cycle types.
fn order_histogram(n: u64, even_only: bool) -> BTreeMap<u64, u64> {
    let mut out = BTreeMap::new();
    let factorial = |k: u64| (1..=k).product::<u64>();
    let mut stack: Vec<(u64, u64, Vec<u64>)> = alloc::vec![(n, n, Vec::new())];
    while let Some((left, max, parts)) = stack.pop() {
        if left == 0 {
            let transpositions: u64 = parts.iter().map(|&l| l - 1).sum();
            if even_only && transpositions % 2 == 1 {
                continue;
            }
            let mut mult: BTreeMap<u64, u64> = BTreeMap::new();
            for &l in &parts {
                *mult.entry(l).or_insert(0) += 1;
            }
            let centralizer: u64 = mult.iter().map(|(&l, &m)| l.pow(m as u32) * factorial(m)).product();
            let elt_order = parts.iter().fold(1, |a, &l| lcm(a, l));
            *out.entry(elt_order).or_insert(0) += factorial(n) / centralizer;
            continue;
        }
        for part in 1..=max.min(left) {
            let mut next = parts.clone();
            next.push(part);
            stack.push((left - part, part, next));
        }
    }
    out
}
