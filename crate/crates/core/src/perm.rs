//! Permutations of `{1..n}` and cycle notation.
//!
//! Internally points are `0..n`; all text (cycle notation, JSON) is
//! 1-based. Products are left to right: `a * b` applies `a` first.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::arith::lcm;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Box<[u32]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::MalformedCycle(format!(
                    "image list {images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Perm {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    /// Parses disjoint-cycle notation such as `"(1 2 3)(4 5)"` on `degree` points.
    ///
    /// Separators inside a cycle are runs of spaces or a comma. `"()"` is the
    /// identity. Whitespace between cycles is tolerated.
    pub fn parse(text: &str, degree: usize) -> Result<Perm> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        let bad = |why: &str| Error::MalformedCycle(format!("{text:?}: {why}"));
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let trimmed = text.trim();
        if trimmed == "()" {
            return Ok(Perm::identity(degree));
        }
        if trimmed.is_empty() {
            return Err(bad("empty input"));
        }
        let mut rest = trimmed;
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(bad("expected '('"));
            };
            let close = body.find(')').ok_or_else(|| bad("unbalanced parentheses"))?;
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(bad("nested '('"));
            }
            let points = parse_cycle_body(inner).map_err(|why| bad(&why))?;
            for &pt in &points {
                if pt < 1 || pt > degree {
                    return Err(bad(&format!("point {pt} outside 1..={degree}")));
                }
                if used[pt - 1] {
                    return Err(bad(&format!("point {pt} repeated")));
                }
                used[pt - 1] = true;
            }
            for (k, &pt) in points.iter().enumerate() {
                let next = points[(k + 1) % points.len()];
                images[pt - 1] = (next - 1) as u32;
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// "Apply `self`, then `other`."
    pub fn try_compose(&self, other: &Perm) -> Result<Perm> {
        check_degrees(self, other)?;
        Ok(self * other)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self · x · self⁻¹` under the left-to-right product.
    ///
    /// Panics on a degree mismatch; see [`Perm::try_conjugate`].
    pub fn conjugate(&self, x: &Perm) -> Perm {
        assert_eq!(self.degree(), x.degree(), "degree mismatch in conjugate");
        let inv = self.inverse();
        let images = self
            .images
            .iter()
            .map(|&gi| inv.images[x.images[gi as usize] as usize])
            .collect();
        Perm { images }
    }

    pub fn try_conjugate(&self, x: &Perm) -> Result<Perm> {
        check_degrees(self, x)?;
        Ok(self.conjugate(x))
    }

    /// Commutator `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        &(&self.inverse() * &other.inverse()) * &(self * other)
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        (0..self.degree()).all(|i| other.apply(self.apply(i)) == self.apply(other.apply(i)))
    }

    /// Disjoint cycles of length at least two, each starting at its least
    /// point, sorted by least point (0-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j);
                j = self.apply(j);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                len += 1;
                j = self.apply(j);
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1, |acc, len| lcm(acc, len as u64))
    }

    /// `self^k`; negative exponents are powers of the inverse.
    pub fn pow(&self, k: i64) -> Perm {
        let mut images = vec![0u32; self.degree()];
        for (i, img) in images.iter_mut().enumerate() {
            *img = i as u32;
        }
        for cycle in self.cycles() {
            let len = cycle.len() as i64;
            let shift = k.rem_euclid(len) as usize;
            for (pos, &pt) in cycle.iter().enumerate() {
                images[pt] = cycle[(pos + shift) % cycle.len()] as u32;
            }
        }
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    /// The p-part of `self`: writing `order = p^a · m` with `p ∤ m`, returns
    /// `self^m`, an element of order `p^a`.
    pub fn p_part(&self, p: u64) -> Perm {
        let mut m = self.order();
        while m.is_multiple_of(p) {
            m /= p;
        }
        self.pow(m as i64)
    }

    /// Re-embeds on a larger point set, fixing the new points.
    pub fn extend_to(&self, degree: usize) -> Perm {
        assert!(degree >= self.degree());
        let mut images: Vec<u32> = self.images.to_vec();
        images.extend(self.degree() as u32..degree as u32);
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    /// Shifts the support by `offset` points inside a permutation of `degree`.
    pub fn shifted(&self, offset: usize, degree: usize) -> Perm {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[offset + i] = (offset as u32) + j;
        }
        Perm {
            images: images.into_boxed_slice(),
        }
    }
}

fn parse_cycle_body(inner: &str) -> core::result::Result<Vec<usize>, String> {
    let mut points = Vec::new();
    let mut token = String::new();
    let mut pending_comma = false;
    let chars = inner.chars().peekable();
    let flush = |token: &mut String, points: &mut Vec<usize>| -> core::result::Result<(), String> {
        if !token.is_empty() {
            let v = token
                .parse::<usize>()
                .map_err(|_| format!("bad point {token:?}"))?;
            points.push(v);
            token.clear();
        }
        Ok(())
    };
    for c in chars {
        match c {
            '0'..='9' => {
                token.push(c);
                pending_comma = false;
            }
            ' ' | '\t' => flush(&mut token, &mut points)?,
            ',' => {
                if pending_comma || (token.is_empty() && points.is_empty()) {
                    return Err("misplaced comma".into());
                }
                flush(&mut token, &mut points)?;
                pending_comma = true;
            }
            other => return Err(format!("unexpected character {other:?}")),
        }
    }
    if pending_comma {
        return Err("trailing comma".into());
    }
    flush(&mut token, &mut points)?;
    if points.is_empty() {
        return Err("empty cycle".into());
    }
    Ok(points)
}

fn check_degrees(a: &Perm, b: &Perm) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(())
}

impl Mul for &Perm {
    type Output = Perm;

    /// `self * rhs` applies `self` first. Panics on a degree mismatch.
    fn mul(self, rhs: &Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        let images = self
            .images
            .iter()
            .map(|&i| rhs.images[i as usize])
            .collect();
        Perm { images }
    }
}

/// Canonical cycle notation: 1-based, each cycle starting at its least
/// point, cycles sorted, fixed points omitted, identity as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}; {}]", self.degree(), self)
    }
}
