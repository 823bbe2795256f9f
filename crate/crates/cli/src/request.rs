//! Inline constructor requests such as `psl2 19` or
//! `wreath(cyclic 3, symmetric 2)`.
//!
//! ```text
//! spec := "cyclic" N | "dihedral" N | "symmetric" N | "alternating" N
//!       | "quaternion8" | "psl2" P
//!       | "wreath" "(" "cyclic" M "," spec ")"
//!       | "direct_product" "(" spec "," spec ")"
//! ```

use std::fmt;
use std::str::FromStr;

use cellfuse_core::{catalog, Group};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructorRequest {
    Cyclic(usize),
    /// Parameter is the group order `2n`.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    Psl2(u64),
    DirectProduct(Box<ConstructorRequest>, Box<ConstructorRequest>),
    Wreath { bottom: usize, top: Box<ConstructorRequest> },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RequestError {
    #[error("unexpected end of constructor request")]
    UnexpectedEnd,
    #[error("unexpected token {0:?}")]
    Unexpected(String),
    #[error("unknown group family {0:?}")]
    UnknownFamily(String),
    #[error("expected a number, got {0:?}")]
    NotANumber(String),
}

fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut word = String::new();
    for c in text.chars() {
        match c {
            '(' | ')' | ',' => {
                if !word.is_empty() {
                    out.push(std::mem::take(&mut word));
                }
                out.push(c.to_string());
            }
            c if c.is_whitespace() => {
                if !word.is_empty() {
                    out.push(std::mem::take(&mut word));
                }
            }
            c => word.push(c),
        }
    }
    if !word.is_empty() {
        out.push(word);
    }
    out
}

struct Parser {
    tokens: Vec<String>,
    pos: usize,
}

impl Parser {
    fn next(&mut self) -> Result<String, RequestError> {
        let t = self.tokens.get(self.pos).cloned().ok_or(RequestError::UnexpectedEnd)?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, what: &str) -> Result<(), RequestError> {
        let t = self.next()?;
        if t != what {
            return Err(RequestError::Unexpected(t));
        }
        Ok(())
    }

    fn number<T: FromStr>(&mut self) -> Result<T, RequestError> {
        let t = self.next()?;
        t.parse().map_err(|_| RequestError::NotANumber(t))
    }

    fn spec(&mut self) -> Result<ConstructorRequest, RequestError> {
        use ConstructorRequest::*;
        let family = self.next()?;
        Ok(match family.as_str() {
            "cyclic" => Cyclic(self.number()?),
            "dihedral" => Dihedral(self.number()?),
            "symmetric" => Symmetric(self.number()?),
            "alternating" => Alternating(self.number()?),
            "quaternion8" => Quaternion8,
            "psl2" => Psl2(self.number()?),
            "direct_product" => {
                self.expect("(")?;
                let a = self.spec()?;
                self.expect(",")?;
                let b = self.spec()?;
                self.expect(")")?;
                DirectProduct(Box::new(a), Box::new(b))
            }
            "wreath" => {
                self.expect("(")?;
                self.expect("cyclic")?;
                let bottom = self.number()?;
                self.expect(",")?;
                let top = self.spec()?;
                self.expect(")")?;
                Wreath {
                    bottom,
                    top: Box::new(top),
                }
            }
            _ => return Err(RequestError::UnknownFamily(family)),
        })
    }
}

impl FromStr for ConstructorRequest {
    type Err = RequestError;

    fn from_str(text: &str) -> Result<Self, RequestError> {
        let mut p = Parser {
            tokens: tokenize(text),
            pos: 0,
        };
        let spec = p.spec()?;
        if let Some(extra) = p.tokens.get(p.pos) {
            return Err(RequestError::Unexpected(extra.clone()));
        }
        Ok(spec)
    }
}

impl fmt::Display for ConstructorRequest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConstructorRequest::*;
        match self {
            Cyclic(n) => write!(f, "cyclic {n}"),
            Dihedral(n) => write!(f, "dihedral {n}"),
            Symmetric(n) => write!(f, "symmetric {n}"),
            Alternating(n) => write!(f, "alternating {n}"),
            Quaternion8 => f.write_str("quaternion8"),
            Psl2(p) => write!(f, "psl2 {p}"),
            DirectProduct(a, b) => write!(f, "direct_product({a}, {b})"),
            Wreath { bottom, top } => write!(f, "wreath(cyclic {bottom}, {top})"),
        }
    }
}

impl ConstructorRequest {
    pub fn build(&self) -> cellfuse_core::Result<Group> {
        use ConstructorRequest::*;
        match self {
            Cyclic(n) => catalog::cyclic(*n),
            Dihedral(n) => catalog::dihedral(*n),
            Symmetric(n) => catalog::symmetric(*n),
            Alternating(n) => catalog::alternating(*n),
            Quaternion8 => catalog::quaternion8(),
            Psl2(p) => catalog::psl2(*p),
            DirectProduct(a, b) => catalog::direct_product(&a.build()?, &b.build()?),
            Wreath { bottom, top } => catalog::wreath(*bottom, &top.build()?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_families() {
        assert_eq!("psl2 19".parse(), Ok(ConstructorRequest::Psl2(19)));
        assert_eq!(" dihedral   8 ".parse(), Ok(ConstructorRequest::Dihedral(8)));
        let w: ConstructorRequest = "wreath(cyclic 3, symmetric 2)".parse().unwrap();
        assert_eq!(w.build().unwrap().order(), 18);
        assert_eq!(w.build().unwrap().degree(), 6);
        let d: ConstructorRequest = "direct_product(cyclic 2, wreath(cyclic 2, symmetric 3))".parse().unwrap();
        assert_eq!(d.build().unwrap().order(), 96);
        assert_eq!(d.to_string().parse::<ConstructorRequest>().unwrap(), d);
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!("cyclic".parse::<ConstructorRequest>(), Err(RequestError::UnexpectedEnd));
        assert_eq!(
            "boxes 3".parse::<ConstructorRequest>(),
            Err(RequestError::UnknownFamily("boxes".into()))
        );
        assert_eq!(
            "cyclic x".parse::<ConstructorRequest>(),
            Err(RequestError::NotANumber("x".into()))
        );
        assert!("cyclic 3 4".parse::<ConstructorRequest>().is_err());
        assert!("wreath(symmetric 2, cyclic 3)".parse::<ConstructorRequest>().is_err());
        let bad: ConstructorRequest = "psl2 15".parse().unwrap();
        assert_eq!(bad.build().unwrap_err(), cellfuse_core::Error::NotPrime(15));
    }
}
