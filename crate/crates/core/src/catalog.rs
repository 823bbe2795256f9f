//! Constructors for the standard families of permutation groups.

use alloc::format;
use alloc::vec::Vec;

use crate::arith::is_prime;
use crate::{Error, Group, GroupSpec, Perm, Result};

fn cycle_on(points: &[usize], degree: usize) -> Perm {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (k, &pt) in points.iter().enumerate() {
        images[pt] = points[(k + 1) % points.len()] as u32;
    }
    Perm::from_images_unchecked(images)
}

fn build(degree: usize, gens: Vec<Perm>, name: alloc::string::String) -> Result<Group> {
    Ok(Group::new(GroupSpec::new(degree, gens)?.named(name)))
}

fn parse_all(degree: usize, cycles: &[&str]) -> Vec<Perm> {
    cycles
        .iter()
        .map(|c| Perm::parse(c, degree).expect("built-in generator"))
        .collect()
}

/// `Z/n` as the regular action of an `n`-cycle.
pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic order must be positive".into()));
    }
    let points: Vec<usize> = (0..n).collect();
    let gens = if n > 1 { alloc::vec![cycle_on(&points, n)] } else { Vec::new() };
    build(n, gens, format!("cyclic {n}"))
}

/// Dihedral group of order `order = 2n` (`n ≥ 3`) on the vertices of an `n`-gon.
pub fn dihedral(order: usize) -> Result<Group> {
    if !order.is_multiple_of(2) || order < 6 {
        return Err(Error::InvalidParameter(format!(
            "dihedral order must be even and at least 6, got {order}"
        )));
    }
    let n = order / 2;
    let points: Vec<usize> = (0..n).collect();
    let rotation = cycle_on(&points, n);
    let reflection = Perm::from_images_unchecked((0..n).map(|i| ((n - i) % n) as u32).collect());
    build(n, alloc::vec![rotation, reflection], format!("dihedral {order}"))
}

/// `S_n` generated by `(1 2)` and the `n`-cycle.
pub fn symmetric(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidParameter("degree must be positive".into()));
    }
    let gens = if n >= 2 {
        let points: Vec<usize> = (0..n).collect();
        alloc::vec![cycle_on(&[0, 1], n), cycle_on(&points, n)]
    } else {
        Vec::new()
    };
    build(n, gens, format!("symmetric {n}"))
}

/// `A_n` generated by the 3-cycles `(1 2 k)`.
pub fn alternating(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidParameter("degree must be positive".into()));
    }
    let gens = (2..n).map(|k| cycle_on(&[0, 1, k], n)).collect();
    build(n, gens, format!("alternating {n}"))
}

/// `Q_8` in its regular representation. The points `1..=8` stand for
/// `1, -1, i, -i, j, -j, k, -k`; the generators are left multiplication by
/// `i` and by `j`.
pub fn quaternion8() -> Result<Group> {
    let gens = parse_all(8, &["(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"]);
    build(8, gens, "quaternion 8".into())
}

/// `PSL_2(p)` for a prime `p ≥ 5`, acting on the projective line
/// `{0, …, p−1, ∞}`. Point `x + 1` stands for `x` and point `p + 1` for `∞`.
/// Generated by `x ↦ x + 1` and `x ↦ −1/x` (with `0 ↔ ∞`).
pub fn psl2(p: u64) -> Result<Group> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::InvalidParameter(format!("psl2 needs a prime p >= 5, got {p}")));
    }
    let q = p as usize;
    let inf = q;
    let mut translate: Vec<u32> = (0..q).map(|x| ((x + 1) % q) as u32).collect();
    translate.push(inf as u32);
    let inverse_mod = |x: usize| (1..q).find(|&y| x * y % q == 1).expect("field inverse");
    let mut invert: Vec<u32> = (0..q)
        .map(|x| if x == 0 { inf as u32 } else { ((q - inverse_mod(x)) % q) as u32 })
        .collect();
    invert.push(0);
    let gens = alloc::vec![
        Perm::from_images_unchecked(translate),
        Perm::from_images_unchecked(invert),
    ];
    build(q + 1, gens, format!("psl2 {p}"))
}

/// `PSL_2(8)` on the projective line over `F_8 = F_2[w]/(w³+w+1)`.
/// Points `1..=8` are the field elements in binary order and point 9 is `∞`;
/// the generators are `z ↦ z + 1`, `z ↦ w·z` and `z ↦ 1/z`.
pub fn psl2_8() -> Result<Group> {
    let gens = parse_all(
        9,
        &["(1 2)(3 4)(5 6)(7 8)", "(2 3 5 4 7 8 6)", "(1 9)(3 6)(4 7)(5 8)"],
    );
    build(9, gens, "psl2 8".into())
}

/// `SL_2(3)` acting on the eight nonzero vectors of `F_3²`, generated by the
/// two elementary transvections.
pub fn sl2_3() -> Result<Group> {
    let gens = parse_all(8, &["(1 4 7)(2 8 5)", "(3 4 5)(6 8 7)"]);
    build(8, gens, "sl2 3".into())
}

/// Direct product on the disjoint union of the two point sets.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    let degree = a.degree() + b.degree();
    let mut gens: Vec<Perm> = a.generators().iter().map(|g| g.shifted(0, degree)).collect();
    gens.extend(b.generators().iter().map(|g| g.shifted(a.degree(), degree)));
    let name = format!(
        "direct_product({}, {})",
        a.name().unwrap_or("?"),
        b.name().unwrap_or("?")
    );
    build(degree, gens, name)
}

/// `Z/m ≀ T` in its imprimitive action on `m·n` points, where `T` acts on
/// `n` points. Point `b·m + r + 1` is level `r` of block `b`; the base group
/// `(Z/m)^n` rotates each block and `T` permutes the blocks.
pub fn wreath(m: usize, top: &Group) -> Result<Group> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("wreath bottom order must be >= 2, got {m}")));
    }
    let n = top.degree();
    let degree = m * n;
    let mut gens = Vec::new();
    for block in 0..n {
        let points: Vec<usize> = (0..m).map(|r| block * m + r).collect();
        gens.push(cycle_on(&points, degree));
    }
    for t in top.generators() {
        let images = (0..degree)
            .map(|pt| (t.apply(pt / m) * m + pt % m) as u32)
            .collect();
        gens.push(Perm::from_images_unchecked(images));
    }
    let name = format!("wreath(cyclic {m}, {})", top.name().unwrap_or("?"));
    build(degree, gens, name)
}

/// The desk-scale test catalog: cyclic groups of order 2 to 32, dihedral
/// groups of order up to 64, `S_3..S_6`, `A_4..A_6`, `Q_8`, `SL_2(3)`,
/// `PSL_2(p)` for `p` in 5, 7, 11, 13, `PSL_2(8)`, `Z/3 ≀ S_2` and `Z/2 ≀ S_3`.
/// `D_8` is the dihedral entry of order 8.
pub fn desk_catalog() -> Result<Vec<Group>> {
    let mut out = Vec::new();
    for n in 2..=32 {
        out.push(cyclic(n)?);
    }
    for order in (6..=64).step_by(2) {
        out.push(dihedral(order)?);
    }
    for n in 3..=6 {
        out.push(symmetric(n)?);
    }
    for n in 4..=6 {
        out.push(alternating(n)?);
    }
    out.push(quaternion8()?);
    out.push(sl2_3()?);
    for p in [5, 7, 11, 13] {
        out.push(psl2(p)?);
    }
    out.push(psl2_8()?);
    out.push(wreath(3, &symmetric(2)?)?);
    out.push(wreath(2, &symmetric(3)?)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        assert_eq!(cyclic(9).unwrap().order(), 9);
        assert_eq!(cyclic(1).unwrap().order(), 1);
        let d8 = dihedral(8).unwrap();
        assert_eq!((d8.order(), d8.degree()), (8, 4));
        assert_eq!(dihedral(64).unwrap().order(), 64);
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert_eq!(alternating(6).unwrap().order(), 360);
        assert_eq!(alternating(2).unwrap().order(), 1);
        assert_eq!(quaternion8().unwrap().order(), 8);
        assert_eq!(sl2_3().unwrap().order(), 24);
        assert_eq!(psl2_8().unwrap().order(), 504);
        let w = wreath(3, &symmetric(2).unwrap()).unwrap();
        assert_eq!((w.order(), w.degree()), (18, 6));
        assert_eq!(wreath(2, &symmetric(3).unwrap()).unwrap().order(), 48);
        let dp = direct_product(&cyclic(2).unwrap(), &symmetric(3).unwrap()).unwrap();
        assert_eq!((dp.order(), dp.degree()), (12, 5));
    }

    #[test]
    fn psl2_orders_match_formula() {
        for p in [5u64, 7, 11, 13, 19, 23] {
            let g = psl2(p).unwrap();
            assert_eq!(g.degree() as u64, p + 1);
            assert_eq!(g.order(), (p * (p * p - 1) / 2) as u128, "p = {p}");
        }
    }

    #[test]
    fn bad_parameters() {
        assert_eq!(psl2(21).unwrap_err(), Error::NotPrime(21));
        assert!(matches!(psl2(3), Err(Error::InvalidParameter(_))));
        assert!(matches!(dihedral(7), Err(Error::InvalidParameter(_))));
        assert!(matches!(cyclic(0), Err(Error::InvalidParameter(_))));
        assert!(matches!(wreath(1, &cyclic(2).unwrap()), Err(Error::InvalidParameter(_))));
    }
}
