//! Text forms: parsing of scalar expressions, partition literals, symmetric
//! function literals and operator literals used by the CLI and the on-disk
//! cache. Printing uses the canonical forms on the types themselves; the
//! parsers accept those forms back bit-exactly.

use num_bigint::BigInt;

use crate::error::CmsError;
use crate::partition::Partition;
use crate::scalar::{Generator, Rat, Scalar};
use crate::symfunc::{Basis, SymFunc};
use crate::ops::OpExpr;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, CmsError> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '[' => {
                out.push(Tok::LBracket);
                i += 1;
            }
            ']' => {
                out.push(Tok::RBracket);
                i += 1;
            }
            ',' => {
                out.push(Tok::Comma);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i]
                    .parse()
                    .map_err(|_| CmsError::Parse(format!("bad integer near {}", &s[start..i])))?;
                out.push(Tok::Int(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push(Tok::Ident(s[start..i].to_string()));
            }
            _ => return Err(CmsError::Parse(format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), CmsError> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(CmsError::Parse(format!("expected {:?}, got {:?}", t, got))),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    // scalar grammar: expr := term (('+'|'-') term)*
    //                 term := factor (('*'|'/') factor)*
    //                 factor := '-'* (int | generator | '(' expr ')') ('^' uint)?
    fn scalar_expr(&mut self) -> Result<Scalar, CmsError> {
        let mut acc = self.scalar_term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc.add(&self.scalar_term()?);
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc.sub(&self.scalar_term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn scalar_term(&mut self) -> Result<Scalar, CmsError> {
        let mut acc = self.scalar_factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = acc.mul(&self.scalar_factor()?);
                }
                Some(Tok::Slash) => {
                    self.next();
                    let d = self.scalar_factor()?;
                    acc = acc.div(&d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn scalar_factor(&mut self) -> Result<Scalar, CmsError> {
        let mut neg = false;
        while self.peek() == Some(&Tok::Minus) {
            self.next();
            neg = !neg;
        }
        let mut base = match self.next() {
            Some(Tok::Int(n)) => Scalar::from_rat(Rat::from_integer(n)),
            Some(Tok::Ident(name)) => match Generator::from_name(&name) {
                Some(g) => Scalar::gen(g),
                None => return Err(CmsError::Parse(format!("unknown generator `{name}`"))),
            },
            Some(Tok::LParen) => {
                let e = self.scalar_expr()?;
                self.expect(Tok::RParen)?;
                e
            }
            got => return Err(CmsError::Parse(format!("unexpected token {:?}", got))),
        };
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            match self.next() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| CmsError::Parse("exponent out of range".into()))?;
                    base = base.pow(e);
                }
                got => return Err(CmsError::Parse(format!("expected exponent, got {:?}", got))),
            }
        }
        if neg {
            base = base.neg();
        }
        Ok(base)
    }

    fn partition(&mut self) -> Result<Partition, CmsError> {
        self.expect(Tok::LBracket)?;
        let mut parts = Vec::new();
        if self.peek() == Some(&Tok::RBracket) {
            self.next();
            return Partition::new(parts);
        }
        loop {
            match self.next() {
                Some(Tok::Int(n)) => {
                    let v: u32 = n
                        .try_into()
                        .map_err(|_| CmsError::Parse("part out of range".into()))?;
                    parts.push(v);
                }
                got => return Err(CmsError::Parse(format!("expected part, got {:?}", got))),
            }
            match self.next() {
                Some(Tok::Comma) => continue,
                Some(Tok::RBracket) => break,
                got => return Err(CmsError::Parse(format!("expected , or ], got {:?}", got))),
            }
        }
        Partition::new(parts)
    }

    // symfunc grammar: sum of terms; term := scalar factors and at most one
    // basis element `p|m|e|j [parts]`, joined by '*'
    fn symfunc_expr(&mut self, default_basis: Basis) -> Result<SymFunc, CmsError> {
        let mut acc: Option<SymFunc> = None;
        let mut sign = 1i64;
        loop {
            let term = self.symfunc_term(default_basis)?;
            let term = if sign < 0 { term.scale(&Scalar::int(-1)) } else { term };
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term)?,
            });
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    sign = 1;
                }
                Some(Tok::Minus) => {
                    self.next();
                    sign = -1;
                }
                _ => break,
            }
        }
        Ok(acc.unwrap())
    }

    fn symfunc_term(&mut self, default_basis: Basis) -> Result<SymFunc, CmsError> {
        let mut coeff = Scalar::one();
        let mut elem: Option<(Basis, Partition)> = None;
        loop {
            match self.peek() {
                Some(Tok::Ident(name)) if basis_from_tag(name).is_some() => {
                    // basis element only when immediately followed by '['
                    if self.toks.get(self.pos + 1) == Some(&Tok::LBracket) {
                        let tag = name.clone();
                        self.next();
                        let lam = self.partition()?;
                        if elem.is_some() {
                            return Err(CmsError::Parse(
                                "only one basis element per term".into(),
                            ));
                        }
                        elem = Some((basis_from_tag(&tag).unwrap(), lam));
                    } else {
                        coeff = coeff.mul(&self.scalar_factor()?);
                    }
                }
                _ => {
                    coeff = coeff.mul(&self.scalar_factor()?);
                }
            }
            if self.peek() == Some(&Tok::Star) {
                self.next();
                continue;
            }
            break;
        }
        let (basis, lam) = elem.unwrap_or((default_basis, Partition::empty()));
        Ok(SymFunc::term(basis, lam, coeff))
    }

    // operator grammar: expr := term ('+' term)*;
    // term := factor ('*' factor)*; composition right to left
    fn op_expr(&mut self) -> Result<OpExpr, CmsError> {
        let mut parts = vec![self.op_term()?];
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    parts.push(self.op_term()?);
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.op_term()?;
                    parts.push(OpExpr::Compose(vec![
                        OpExpr::Scale(Scalar::int(-1)),
                        t,
                    ]));
                }
                _ => break,
            }
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            OpExpr::Sum(parts)
        })
    }

    fn op_term(&mut self) -> Result<OpExpr, CmsError> {
        let mut factors = vec![self.op_factor()?];
        while self.peek() == Some(&Tok::Star) {
            self.next();
            factors.push(self.op_factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            OpExpr::Compose(factors)
        })
    }

    fn op_factor(&mut self) -> Result<OpExpr, CmsError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) if name == "E" || name == "D" || name == "PD" => {
                self.next();
                self.expect(Tok::LBracket)?;
                let n = match self.next() {
                    Some(Tok::Int(n)) => {
                        let v: u32 = n
                            .try_into()
                            .map_err(|_| CmsError::Parse("index out of range".into()))?;
                        v
                    }
                    got => return Err(CmsError::Parse(format!("expected index, got {:?}", got))),
                };
                self.expect(Tok::RBracket)?;
                Ok(match name.as_str() {
                    "E" => OpExpr::E(n),
                    "D" => OpExpr::D(n),
                    _ => OpExpr::Pd(n),
                })
            }
            Some(Tok::Ident(name)) if name == "mul" => {
                self.next();
                self.expect(Tok::LParen)?;
                let f = self.symfunc_expr(Basis::PowerSum)?;
                self.expect(Tok::RParen)?;
                let f = f.to_power_sum_free()?;
                Ok(OpExpr::Mul(f))
            }
            Some(Tok::LParen) => {
                // parenthesised scalar or operator expression: try scalar first
                let save = self.pos;
                self.next();
                if let Ok(s) = self.scalar_expr() {
                    if self.peek() == Some(&Tok::RParen) {
                        self.next();
                        return Ok(OpExpr::Scale(s));
                    }
                }
                self.pos = save;
                self.next();
                let e = self.op_expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => {
                let s = self.scalar_factor()?;
                Ok(OpExpr::Scale(s))
            }
        }
    }
}

fn basis_from_tag(tag: &str) -> Option<Basis> {
    match tag {
        "p" => Some(Basis::PowerSum),
        "m" => Some(Basis::Monomial),
        "e" => Some(Basis::Elementary),
        "j" => Some(Basis::Jack),
        _ => None,
    }
}

pub fn basis_tag(basis: Basis) -> &'static str {
    match basis {
        Basis::PowerSum => "p",
        Basis::Monomial => "m",
        Basis::Elementary => "e",
        Basis::Jack => "j",
    }
}

fn run<T>(s: &str, f: impl FnOnce(&mut Parser) -> Result<T, CmsError>) -> Result<T, CmsError> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
    };
    let v = f(&mut p)?;
    if !p.at_end() {
        return Err(CmsError::Parse(format!(
            "trailing input after position {}",
            p.pos
        )));
    }
    Ok(v)
}

pub fn parse_scalar(s: &str) -> Result<Scalar, CmsError> {
    run(s, |p| p.scalar_expr())
}

pub fn parse_partition(s: &str) -> Result<Partition, CmsError> {
    run(s, |p| p.partition())
}

pub fn parse_symfunc(s: &str) -> Result<SymFunc, CmsError> {
    run(s, |p| p.symfunc_expr(Basis::PowerSum))
}

pub fn parse_op(s: &str) -> Result<OpExpr, CmsError> {
    run(s, |p| p.op_expr())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::alpha;

    #[test]
    fn scalar_round_trip() {
        let cases = [
            "alpha + 1",
            "(p0^2 - p0)/(1 + alpha)",
            "-3/4",
            "a*nu^2 - p*q + s - X",
            "0",
        ];
        for c in cases {
            let v = parse_scalar(c).unwrap();
            let text = v.to_text();
            let back = parse_scalar(&text).unwrap();
            assert_eq!(v.to_text(), back.to_text(), "round trip failed for {c}");
            assert!(v == back);
        }
    }

    #[test]
    fn partition_literals() {
        assert_eq!(parse_partition("[3,1]").unwrap().parts(), &[3, 1]);
        assert_eq!(parse_partition("[]").unwrap(), Partition::empty());
        assert_eq!(parse_partition("[0]").unwrap(), Partition::empty());
        assert!(parse_partition("[1,3]").is_err());
    }

    #[test]
    fn symfunc_literals() {
        let f = parse_symfunc("m[2] + 2*m[1,1]").unwrap();
        assert_eq!(f.basis(), Basis::Monomial);
        let lam = Partition::new(vec![1, 1]).unwrap();
        assert_eq!(f.coeff(&lam), Scalar::int(2));
        let g = parse_symfunc("(1/(1+alpha))*p[2,1] - p[3]").unwrap();
        let two_one = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(
            g.coeff(&two_one),
            Scalar::one().div(&Scalar::one().add(&alpha())).unwrap()
        );
    }

    #[test]
    fn op_literals() {
        assert!(matches!(parse_op("E[2]").unwrap(), OpExpr::E(2)));
        assert!(matches!(parse_op("D[0]").unwrap(), OpExpr::D(0)));
        assert!(matches!(parse_op("PD[3]").unwrap(), OpExpr::Pd(3)));
        assert!(parse_op("mul(p[2,1])").is_ok());
        assert!(parse_op("E[1]*E[0] + (1/2)*D[1]").is_ok());
        assert!(parse_op("(alpha)*E[1]").is_ok());
    }
}
