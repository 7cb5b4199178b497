//! Text syntax for rings, elements, ideals and polynomials over a ring.
//!
//! ```text
//! ring     = atom { "(+)" atom } ;
//! atom     = "Z" | "Q" | "Zmod" uint [ "^" uint ] | "Quad" int | "Poly" uint ;
//! element  = "[" tuple "]" | "(" tuple ")" | expr ;      (* bare expr: one component *)
//! tuple    = "(" exprs ")" | exprs ;
//! exprs    = expr { "," expr } ;
//! ideal    = "<" [ element { "," element } ] ">" ;
//! polyR    = [ "poly" ":" ] element { "," element } ;    (* coefficients c0, c1, ... *)
//! expr     = [ "+" | "-" ] term { ( "+" | "-" ) term } ;
//! term     = factor { [ "*" | "/" ] factor } ;
//! factor   = "-" factor | primary [ "^" uint ] ;
//! primary  = uint | var | "(" expr ")" ;
//! var      = "w" (Quad) | "X" | "Y" (Poly) ;
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::ideal::{ideal_from_generators, FracIdeal, PrimeRef};
use crate::nagata::PolyOverR;
use crate::poly::{Poly, VAR_X, VAR_Y};
use crate::polyideal::RatFun;
use crate::quad::{QuadInt, QuadNum};
use crate::ring::{Atom, Element, Fraction, RingDesc, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Zero-based character offset.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at column {}: {}", self.pos + 1, self.msg)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = std::result::Result<T, ParseError>;

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(s: &str) -> Self {
        Cursor { chars: s.chars().collect(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError { pos: self.pos, msg: msg.into() })
    }

    fn err_at<T>(&self, pos: usize, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError { pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        if self.chars.len() >= self.pos + n && self.chars[self.pos..self.pos + n].iter().copied().eq(s.chars()) {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(d) => self.err(format!("expected `{c}`, found `{d}`")),
                None => self.err(format!("expected `{c}`, found end of input")),
            }
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn finish(&mut self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected `{c}`")),
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn uint(&mut self) -> PResult<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn small_uint(&mut self) -> PResult<u64> {
        let start = self.peek_pos();
        let n = self.uint()?;
        n.to_u64().map_or_else(|| self.err_at(start, "number too large"), Ok)
    }

    fn int(&mut self) -> PResult<BigInt> {
        let neg = self.eat('-');
        let n = self.uint()?;
        Ok(if neg { -n } else { n })
    }

    fn peek_pos(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }
}

fn parse_atom(c: &mut Cursor) -> PResult<Atom> {
    let start = c.peek_pos();
    let w = c.word();
    let atom = match w.as_str() {
        "Z" => Ok(Atom::Integer),
        "Q" => Ok(Atom::Rational),
        "Zmod" => {
            let n = c.small_uint()?;
            if c.eat('^') {
                let k = c.small_uint()?;
                let k = u32::try_from(k).map_err(|_| ParseError { pos: start, msg: "exponent too large".into() })?;
                Atom::mod_prime_power(n, k)
            } else {
                match crate::intutil::prime_power(n) {
                    Some((p, k)) => Atom::mod_prime_power(p, k),
                    None => return c.err_at(start, format!("{n} is not a prime power")),
                }
            }
        }
        "Quad" => {
            let pos = c.peek_pos();
            let d = c.int()?;
            let d = d.to_i64().map_or_else(|| c.err_at(pos, "number too large"), Ok)?;
            Atom::quadratic(d)
        }
        "Poly" => {
            let pos = c.peek_pos();
            let p = c.small_uint()?;
            let p = u32::try_from(p).map_or_else(|_| c.err_at(pos, "number too large"), Ok)?;
            Atom::poly(p)
        }
        "" => return c.err("expected a ring atom (Z, Q, Zmod, Quad, Poly)"),
        other => return c.err_at(start, format!("unknown ring atom `{other}`")),
    };
    atom.map_err(|e| ParseError { pos: start, msg: e.to_string() })
}

pub fn parse_ring(s: &str) -> PResult<RingDesc> {
    let mut c = Cursor::new(s);
    let mut atoms = vec![parse_atom(&mut c)?];
    while c.eat_str("(+)") {
        atoms.push(parse_atom(&mut c)?);
    }
    c.finish()?;
    Ok(RingDesc::new(atoms).expect("nonempty"))
}

fn scalar_of_int(a: &Atom, n: &BigInt) -> Scalar {
    match a {
        Atom::Integer | Atom::Rational => Scalar::Rat(BigRational::from_integer(n.clone())),
        Atom::ModPrimePower { .. } => {
            let m = BigInt::from(a.modulus());
            let r = ((n % &m) + &m) % &m;
            Scalar::Res(r.to_u64().unwrap())
        }
        Atom::Quadratic(_) => Scalar::Quad(QuadNum::from_rational(BigRational::from_integer(n.clone()))),
        Atom::Poly { p } => {
            let q = BigInt::from(*p);
            let r = ((n % &q) + &q) % &q;
            Scalar::Fun(RatFun::from_poly(Poly::constant(*p, r.to_i64().unwrap())))
        }
    }
}

struct ExprParser<'a> {
    c: &'a mut Cursor,
    atom: &'a Atom,
}

impl ExprParser<'_> {
    fn expr(&mut self) -> PResult<Scalar> {
        let a = self.atom;
        let mut acc = if self.c.eat('-') {
            a.neg(&self.term()?)
        } else {
            self.c.eat('+');
            self.term()?
        };
        loop {
            if self.c.eat('+') {
                acc = a.add(&acc, &self.term()?);
            } else if self.c.eat('-') {
                acc = a.sub(&acc, &self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_primary(&mut self) -> bool {
        matches!(self.c.peek(), Some(ch) if ch.is_ascii_alphanumeric() || ch == '(')
    }

    fn term(&mut self) -> PResult<Scalar> {
        let a = self.atom;
        let mut acc = self.factor()?;
        loop {
            if self.c.eat('*') {
                acc = a.mul(&acc, &self.factor()?);
            } else if self.c.peek() == Some('/') {
                self.c.eat('/');
                let pos = self.c.peek_pos();
                let d = self.factor()?;
                let inv = a.inv(&d).or_else(|_| self.c.err_at(pos, format!("cannot divide by {d} in {a}")))?;
                acc = a.mul(&acc, &inv);
            } else if self.starts_primary() {
                acc = a.mul(&acc, &self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> PResult<Scalar> {
        if self.c.eat('-') {
            let f = self.factor()?;
            return Ok(self.atom.neg(&f));
        }
        let base = self.primary()?;
        if self.c.eat('^') {
            let pos = self.c.peek_pos();
            let e = self.c.small_uint()?;
            if e > 64 {
                return self.c.err_at(pos, "exponent too large (max 64)");
            }
            return Ok(self.atom.pow(&base, e as u32));
        }
        Ok(base)
    }

    fn primary(&mut self) -> PResult<Scalar> {
        let a = self.atom;
        match self.c.peek() {
            Some('(') => {
                self.c.eat('(');
                let v = self.expr()?;
                self.c.expect(')')?;
                Ok(v)
            }
            Some(ch) if ch.is_ascii_digit() => Ok(scalar_of_int(a, &self.c.uint()?)),
            Some(ch) if ch.is_ascii_alphabetic() => {
                let pos = self.c.pos;
                self.c.pos += 1;
                match (ch, a) {
                    ('w', Atom::Quadratic(_)) => Ok(Scalar::Quad(QuadNum::from_int(&QuadInt::new(0, 1)))),
                    ('X', Atom::Poly { p }) => Ok(Scalar::Fun(RatFun::from_poly(Poly::var(*p, VAR_X)))),
                    ('Y', Atom::Poly { p }) => Ok(Scalar::Fun(RatFun::from_poly(Poly::var(*p, VAR_Y)))),
                    _ => self.c.err_at(pos, format!("unknown variable `{ch}` for {a}")),
                }
            }
            Some(ch) => self.c.err(format!("unexpected `{ch}` in expression")),
            None => self.c.err("unexpected end of input in expression"),
        }
    }
}

fn scalar(c: &mut Cursor, a: &Atom) -> PResult<Scalar> {
    ExprParser { c, atom: a }.expr()
}

/// Does the parenthesized group starting at the cursor contain a top-level comma?
fn paren_group_is_tuple(c: &mut Cursor) -> bool {
    let mut i = c.peek_pos();
    let mut depth = 0usize;
    while let Some(&ch) = c.chars.get(i) {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth == 0 {
                    return false;
                }
            }
            ',' if depth == 1 => return true,
            _ => {}
        }
        i += 1;
    }
    false
}

fn exprs(c: &mut Cursor, r: &RingDesc, close: char) -> PResult<Vec<Scalar>> {
    let start = c.peek_pos();
    let mut out = Vec::new();
    loop {
        if out.len() == r.len() {
            return c.err(format!("too many components (ring has {})", r.len()));
        }
        out.push(scalar(c, r.atom(out.len()))?);
        if !c.eat(',') {
            break;
        }
    }
    if out.len() != r.len() {
        return c.err_at(start, format!("expected {} components, found {}", r.len(), out.len()));
    }
    if c.peek() != Some(close) {
        return c.expect(close).map(|_| out);
    }
    Ok(out)
}

fn fraction_parts(c: &mut Cursor, r: &RingDesc) -> PResult<Vec<Scalar>> {
    if c.eat('[') {
        let parts = if c.peek() == Some('(') && paren_group_is_tuple(c) {
            c.eat('(');
            let parts = exprs(c, r, ')')?;
            c.expect(')')?;
            parts
        } else {
            exprs(c, r, ']')?
        };
        c.expect(']')?;
        Ok(parts)
    } else if c.peek() == Some('(') && paren_group_is_tuple(c) {
        c.eat('(');
        let parts = exprs(c, r, ')')?;
        c.expect(')')?;
        Ok(parts)
    } else if r.len() == 1 {
        Ok(vec![scalar(c, r.atom(0))?])
    } else {
        c.err(format!("expected `[` to start an element of a {}-component ring", r.len()))
    }
}

fn fraction_at(c: &mut Cursor, r: &RingDesc) -> PResult<Fraction> {
    let start = c.peek_pos();
    let parts = fraction_parts(c, r)?;
    r.fraction(parts).or_else(|e| c.err_at(start, e.to_string()))
}

fn element_at(c: &mut Cursor, r: &RingDesc) -> PResult<Element> {
    let start = c.peek_pos();
    let parts = fraction_parts(c, r)?;
    r.element(parts).or_else(|e| c.err_at(start, e.to_string()))
}

pub fn parse_fraction(r: &RingDesc, s: &str) -> PResult<Fraction> {
    let mut c = Cursor::new(s);
    let x = fraction_at(&mut c, r)?;
    c.finish()?;
    Ok(x)
}

pub fn parse_element(r: &RingDesc, s: &str) -> PResult<Element> {
    let mut c = Cursor::new(s);
    let x = element_at(&mut c, r)?;
    c.finish()?;
    Ok(x)
}

pub fn parse_ideal(r: &RingDesc, s: &str) -> PResult<FracIdeal> {
    let mut c = Cursor::new(s);
    c.expect('<')?;
    let mut gens = Vec::new();
    if !c.eat('>') {
        loop {
            gens.push(fraction_at(&mut c, r)?);
            if !c.eat(',') {
                break;
            }
        }
        c.expect('>')?;
    }
    c.finish()?;
    Ok(ideal_from_generators(r, &gens))
}

pub fn parse_prime(r: &RingDesc, s: &str) -> PResult<PrimeRef> {
    let i = parse_ideal(r, s)?;
    PrimeRef::from_ideal(&i).map_or_else(|| Err(ParseError { pos: 0, msg: format!("{i} is not a prime ideal") }), Ok)
}

pub fn parse_poly(r: &RingDesc, s: &str) -> PResult<PolyOverR> {
    let mut c = Cursor::new(s);
    if c.eat_str("poly") {
        c.expect(':')?;
    }
    let mut coeffs = Vec::new();
    if !c.at_end() {
        loop {
            coeffs.push(element_at(&mut c, r)?);
            if !c.eat(',') {
                break;
            }
        }
    }
    c.finish()?;
    Ok(PolyOverR::new(r, coeffs))
}

/// Generators of a finitely generated ideal in literal syntax.
pub fn ideal_literal(i: &FracIdeal) -> Option<String> {
    let gens = i.generators()?;
    let gens: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    Some(format!("<{}>", gens.join(", ")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::AtomIdeal;
    use crate::ring::{int, poly, quad, rat};

    #[test]
    fn rings() {
        let r = parse_ring("Z (+) Zmod 2^2 (+) Quad -5 (+) Poly 3 (+) Q").unwrap();
        assert_eq!(r.to_string(), "Z (+) Zmod 2^2 (+) Quad -5 (+) Poly 3 (+) Q");
        assert_eq!(parse_ring("Zmod 8").unwrap().to_string(), "Zmod 2^3");
        let e = parse_ring("Z (+) Zmod 6^1").unwrap_err();
        assert_eq!(e.pos, 6);
        assert_eq!(parse_ring("Z (+) R").unwrap_err().pos, 6);
        assert!(parse_ring("Quad -4").is_err());
        assert!(parse_ring("Poly 7").is_err());
        assert_eq!(parse_ring("Z Q").unwrap_err().pos, 2);
    }

    #[test]
    fn elements() {
        let r = parse_ring("Z (+) Zmod 2^2 (+) Quad -5").unwrap();
        let e = parse_element(&r, "[6, 2, 1+w]").unwrap();
        assert_eq!(e, r.element(vec![int(6), Scalar::Res(2), quad(1, 1)]).unwrap());
        assert_eq!(parse_element(&r, "[(6, -2, 2w - 1)]").unwrap().parts()[1], Scalar::Res(2));
        assert_eq!(parse_element(&r, "(6, 6, 3*w)").unwrap().parts()[2], quad(0, 3));
        assert!(parse_element(&r, "[1/2, 1, 1]").is_err());
        assert_eq!(parse_fraction(&r, "[1/2, 3, (1+w)/2]").unwrap().parts()[0], rat(1, 2));
        let err = parse_element(&r, "[1, 2]").unwrap_err();
        assert!(err.msg.contains("expected 3 components"), "{err}");
        let err = parse_element(&r, "[1, 2, 1+v]").unwrap_err();
        assert_eq!(err.pos, 9);
        let p = parse_ring("Poly 2").unwrap();
        let x = Poly::var(2, VAR_X);
        let y = Poly::var(2, VAR_Y);
        assert_eq!(parse_element(&p, "X^2*Y + 1").unwrap().parts()[0], poly(x.pow(2).mul(&y).add(&Poly::one(2))));
        assert_eq!(parse_element(&p, "[X Y]").unwrap().parts()[0], poly(x.mul(&y)));
        assert_eq!(parse_element(&p, "3").unwrap().parts()[0], poly(Poly::one(2)));
    }

    #[test]
    fn displayed_values_parse_back() {
        let r = parse_ring("Q (+) Quad -3 (+) Poly 5").unwrap();
        let x = parse_fraction(&r, "[-7/3, (1+w)/2, (X^2 + 2*Y)/(X*Y + 4)]").unwrap();
        assert_eq!(parse_fraction(&r, &x.to_string()).unwrap(), x);
    }

    #[test]
    fn ideals() {
        let r = parse_ring("Z (+) Q").unwrap();
        let i = parse_ideal(&r, "<[(1,0)]>").unwrap();
        assert_eq!(i.parts(), &[AtomIdeal::Int(BigRational::from_integer(1.into())), AtomIdeal::Zero]);
        assert!(parse_ideal(&r, "<>").unwrap().is_zero());
        assert!(parse_ideal(&r, "<[1,0], [0,1]>").unwrap().is_unit());
        let o = parse_ring("Quad -5").unwrap();
        let p = parse_prime(&o, "<2, 1+w>").unwrap();
        assert!(!p.is_principal(&o));
        assert!(parse_prime(&o, "<6>").is_err());
        assert_eq!(parse_ideal(&r, "<[1,0]").unwrap_err().pos, 6);
        let i = parse_ideal(&o, "<6, 2+2w>").unwrap();
        assert_eq!(parse_ideal(&o, &ideal_literal(&i).unwrap()).unwrap(), i);
    }

    #[test]
    fn polys_over_rings() {
        let r = parse_ring("Z (+) Q").unwrap();
        let f = parse_poly(&r, "poly: [1,0], [0,1]").unwrap();
        assert_eq!(f.degree(), Some(1));
        assert_eq!(parse_poly(&r, &f.to_string()).unwrap(), f);
        assert!(parse_poly(&r, "poly:").unwrap().is_zero());
        let z4 = parse_ring("Zmod 4").unwrap();
        assert_eq!(parse_poly(&z4, "2, 2, 0").unwrap().degree(), Some(1));
    }
}
