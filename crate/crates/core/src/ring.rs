//! Ring atoms, finite direct sums of them, and their elements.
//!
//! A per-atom value is a [`Scalar`] living in the total quotient ring of the
//! atom. An [`Element`] is a tuple of integral scalars and a [`Fraction`] a
//! tuple of arbitrary ones.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intutil;
use crate::poly::Poly;
use crate::polyideal::RatFun;
use crate::quad::{QuadInt, QuadNum, QuadRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Integer,
    Rational,
    ModPrimePower { p: u64, k: u32 },
    Quadratic(QuadRing),
    Poly { p: u32 },
}

const MAX_MODULUS: u64 = 1 << 62;

impl Atom {
    pub fn mod_prime_power(p: u64, k: u32) -> Result<Atom> {
        if !intutil::is_prime(p) {
            return Err(Error::InvalidRing(format!("Zmod {p}^{k}: {p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidRing("Zmod p^0 is not allowed".into()));
        }
        match p.checked_pow(k) {
            Some(m) if m < MAX_MODULUS => Ok(Atom::ModPrimePower { p, k }),
            _ => Err(Error::InvalidRing(format!("Zmod {p}^{k}: modulus too large"))),
        }
    }

    pub fn quadratic(d: i64) -> Result<Atom> {
        Ok(Atom::Quadratic(QuadRing::new(d)?))
    }

    pub fn poly(p: u32) -> Result<Atom> {
        if !intutil::is_prime(p as u64) || p > 5 {
            return Err(Error::InvalidRing(format!("Poly {p}: need a prime p <= 5")));
        }
        Ok(Atom::Poly { p })
    }

    pub fn is_domain(&self) -> bool {
        !matches!(self, Atom::ModPrimePower { .. })
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Atom::Rational)
    }

    /// Special primary ring `Z/p^k`.
    pub fn is_spr(&self) -> bool {
        matches!(self, Atom::ModPrimePower { .. })
    }

    pub fn krull_dim(&self) -> u32 {
        match self {
            Atom::Integer | Atom::Quadratic(_) => 1,
            Atom::Rational | Atom::ModPrimePower { .. } => 0,
            Atom::Poly { .. } => 2,
        }
    }

    pub fn modulus(&self) -> u64 {
        match self {
            Atom::ModPrimePower { p, k } => p.pow(*k),
            _ => 0,
        }
    }

    pub fn total_quotient(&self) -> TotalAtom {
        match *self {
            Atom::Integer | Atom::Rational => TotalAtom::Rationals,
            Atom::ModPrimePower { p, k } => TotalAtom::ModPrimePower { p, k },
            Atom::Quadratic(r) => TotalAtom::QuadraticField(r.d),
            Atom::Poly { p } => TotalAtom::RationalFunctions(p),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Atom::Integer | Atom::Rational => Scalar::Rat(BigRational::zero()),
            Atom::ModPrimePower { .. } => Scalar::Res(0),
            Atom::Quadratic(_) => Scalar::Quad(QuadNum::zero()),
            Atom::Poly { p } => Scalar::Fun(RatFun::zero(*p)),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            Atom::Integer | Atom::Rational => Scalar::Rat(BigRational::from_integer(n.into())),
            Atom::ModPrimePower { .. } => Scalar::Res(n.rem_euclid(self.modulus() as i64) as u64),
            Atom::Quadratic(_) => Scalar::Quad(QuadNum::from_int(&QuadInt::new(n, 0))),
            Atom::Poly { p } => Scalar::Fun(RatFun::from_poly(Poly::constant(*p, n))),
        }
    }

    /// Does the scalar have the shape this atom expects?
    pub fn accepts(&self, x: &Scalar) -> bool {
        match (self, x) {
            (Atom::Integer | Atom::Rational, Scalar::Rat(_)) => true,
            (Atom::ModPrimePower { .. }, Scalar::Res(r)) => *r < self.modulus(),
            (Atom::Quadratic(_), Scalar::Quad(_)) => true,
            (Atom::Poly { p }, Scalar::Fun(f)) => f.modulus() == *p,
            _ => false,
        }
    }

    /// Does the scalar lie in the atom itself (not just its total quotient ring)?
    pub fn is_integral(&self, x: &Scalar) -> bool {
        match (self, x) {
            (Atom::Integer, Scalar::Rat(q)) => q.is_integer(),
            (Atom::Quadratic(_), Scalar::Quad(q)) => q.to_int().is_some(),
            (Atom::Poly { .. }, Scalar::Fun(f)) => f.is_poly(),
            _ => self.accepts(x),
        }
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Res(r) => *r == 0,
            Scalar::Quad(q) => q.is_zero(),
            Scalar::Fun(f) => f.is_zero(),
        }
    }

    /// Non-zero-divisor: nonzero in a domain, a unit in `Z/p^k`.
    pub fn is_regular(&self, x: &Scalar) -> bool {
        match (self, x) {
            (Atom::ModPrimePower { p, .. }, Scalar::Res(r)) => r % p != 0,
            _ => !self.is_zero(x),
        }
    }

    /// Unit of the atom itself.
    pub fn is_unit(&self, x: &Scalar) -> bool {
        match (self, x) {
            (Atom::Integer, Scalar::Rat(q)) => q.is_integer() && q.abs().is_one(),
            (Atom::Rational, Scalar::Rat(q)) => !q.is_zero(),
            (Atom::ModPrimePower { p, .. }, Scalar::Res(r)) => r % p != 0,
            (Atom::Quadratic(r), Scalar::Quad(q)) => q.to_int().map(|z| z.is_unit(r)).unwrap_or(false),
            (Atom::Poly { .. }, Scalar::Fun(f)) => f.is_poly() && !f.is_zero() && f.num().is_constant(),
            _ => false,
        }
    }

    pub fn add(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (x, y) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Res(a), Scalar::Res(b)) => {
                Scalar::Res(((*a as u128 + *b as u128) % self.modulus() as u128) as u64)
            }
            (Scalar::Quad(a), Scalar::Quad(b)) => Scalar::Quad(a.add(b)),
            (Scalar::Fun(a), Scalar::Fun(b)) => Scalar::Fun(a.add(b)),
            _ => panic!("scalar kinds do not match the atom"),
        }
    }

    pub fn neg(&self, x: &Scalar) -> Scalar {
        match x {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Res(a) => Scalar::Res((self.modulus() - a) % self.modulus()),
            Scalar::Quad(a) => Scalar::Quad(a.neg()),
            Scalar::Fun(a) => Scalar::Fun(a.neg()),
        }
    }

    pub fn sub(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (self, x, y) {
            (_, Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (_, Scalar::Res(a), Scalar::Res(b)) => {
                Scalar::Res(((*a as u128 * *b as u128) % self.modulus() as u128) as u64)
            }
            (Atom::Quadratic(r), Scalar::Quad(a), Scalar::Quad(b)) => Scalar::Quad(a.mul(b, r)),
            (_, Scalar::Fun(a), Scalar::Fun(b)) => Scalar::Fun(a.mul(b)),
            _ => panic!("scalar kinds do not match the atom"),
        }
    }

    pub fn pow(&self, x: &Scalar, e: u32) -> Scalar {
        let mut r = self.one();
        for _ in 0..e {
            r = self.mul(&r, x);
        }
        r
    }

    /// Inverse in the total quotient ring; defined for regular scalars.
    pub fn inv(&self, x: &Scalar) -> Result<Scalar> {
        if !self.is_regular(x) {
            return Err(Error::NotAUnit(format!("{} is a zero divisor", x)));
        }
        Ok(match (self, x) {
            (_, Scalar::Rat(a)) => Scalar::Rat(a.recip()),
            (Atom::ModPrimePower { .. }, Scalar::Res(a)) => {
                let m = BigInt::from(self.modulus());
                let eg = BigInt::from(*a).extended_gcd(&m);
                let inv = eg.x.mod_floor(&m);
                Scalar::Res(inv.try_into().expect("residue fits"))
            }
            (Atom::Quadratic(r), Scalar::Quad(a)) => Scalar::Quad(a.inv(r).expect("nonzero")),
            (_, Scalar::Fun(a)) => Scalar::Fun(a.inv().expect("nonzero")),
            _ => unreachable!(),
        })
    }

    /// `p`-adic valuation of a residue in `Z/p^k`, with `v(0) = k`.
    pub fn spr_valuation(&self, x: &Scalar) -> u32 {
        let (Atom::ModPrimePower { p, k }, Scalar::Res(mut r)) = (self, x) else {
            panic!("not a residue");
        };
        if r == 0 {
            return *k;
        }
        let mut v = 0;
        while r % p == 0 {
            r /= p;
            v += 1;
        }
        v
    }

    /// Some `q` in the atom with `x = q·y`.
    pub fn div_exact(&self, x: &Scalar, y: &Scalar) -> Result<Scalar> {
        let fail = || Error::DivisionNotExact(format!("{} by {}", x, y));
        if self.is_zero(y) {
            return if self.is_zero(x) { Ok(self.zero()) } else { Err(fail()) };
        }
        match (self, x, y) {
            (Atom::ModPrimePower { p, .. }, Scalar::Res(a), Scalar::Res(b)) => {
                let (va, vb) = (self.spr_valuation(x), self.spr_valuation(y));
                if vb > va {
                    return Err(fail());
                }
                let pv = p.pow(vb);
                let m = self.modulus() / pv;
                // a/p^vb = q·(b/p^vb) mod p^(k-vb)
                let a1 = (a / pv) % m;
                let b1 = (b / pv) % m;
                let sub = Atom::ModPrimePower { p: *p, k: m.ilog(*p) };
                if m == 1 {
                    return Ok(Scalar::Res(0));
                }
                let inv = sub.inv(&Scalar::Res(b1))?;
                Ok(sub.mul(&Scalar::Res(a1), &inv))
            }
            _ => {
                let q = self.mul(x, &self.inv(y)?);
                if self.is_integral(&q) {
                    Ok(q)
                } else {
                    Err(fail())
                }
            }
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Integer => write!(f, "Z"),
            Atom::Rational => write!(f, "Q"),
            Atom::ModPrimePower { p, k } => write!(f, "Zmod {p}^{k}"),
            Atom::Quadratic(r) => write!(f, "Quad {}", r.d),
            Atom::Poly { p } => write!(f, "Poly {p}"),
        }
    }
}

/// Total quotient ring of an atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TotalAtom {
    Rationals,
    ModPrimePower { p: u64, k: u32 },
    QuadraticField(i64),
    RationalFunctions(u32),
}

impl fmt::Display for TotalAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TotalAtom::Rationals => write!(f, "Q"),
            TotalAtom::ModPrimePower { p, k } => write!(f, "Zmod {p}^{k}"),
            TotalAtom::QuadraticField(d) => write!(f, "Q(sqrt {d})"),
            TotalAtom::RationalFunctions(p) => write!(f, "F_{p}(X,Y)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalQuotient {
    pub atoms: Vec<TotalAtom>,
    pub krull_dim: u32,
    /// Every ideal of a finite product of fields and SPRs is principal.
    pub is_pir: bool,
}

impl fmt::Display for TotalQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.atoms.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(" (+) "))
    }
}

/// A value of the total quotient ring of one atom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// `Z` and `Q` atoms.
    Rat(BigRational),
    /// Residue in `[0, p^k)`.
    Res(u64),
    Quad(QuadNum),
    Fun(RatFun),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => write!(f, "{q}"),
            Scalar::Res(r) => write!(f, "{r}"),
            Scalar::Quad(q) => write!(f, "{q}"),
            Scalar::Fun(g) => write!(f, "{g}"),
        }
    }
}

fn fmt_tuple(f: &mut fmt::Formatter<'_>, parts: &[Scalar]) -> fmt::Result {
    let s: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
    write!(f, "[{}]", s.join(", "))
}

/// Element of the ring: one integral scalar per component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    parts: Vec<Scalar>,
}

impl Element {
    pub fn parts(&self) -> &[Scalar] {
        &self.parts
    }

    pub fn to_fraction(&self) -> Fraction {
        Fraction { parts: self.parts.clone() }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.parts)
    }
}

/// Element of the total quotient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    parts: Vec<Scalar>,
}

impl Fraction {
    pub fn parts(&self) -> &[Scalar] {
        &self.parts
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.parts)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingDesc {
    atoms: Vec<Atom>,
}

impl RingDesc {
    pub fn new(atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one component".into()));
        }
        Ok(RingDesc { atoms })
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn atom(&self, i: usize) -> &Atom {
        &self.atoms[i]
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Every atom is Noetherian, so every ring here satisfies Property(A).
    pub fn has_property_a(&self) -> bool {
        true
    }

    pub fn krull_dim(&self) -> u32 {
        self.atoms.iter().map(|a| a.krull_dim()).max().unwrap()
    }

    /// `R = T(R)` exactly when every component is a field or an SPR.
    pub fn is_total_quotient_ring(&self) -> bool {
        self.atoms.iter().all(|a| a.is_field() || a.is_spr())
    }

    pub fn total_quotient(&self) -> TotalQuotient {
        TotalQuotient { atoms: self.atoms.iter().map(|a| a.total_quotient()).collect(), krull_dim: 0, is_pir: true }
    }

    fn check_parts(&self, parts: &[Scalar]) -> Result<()> {
        if parts.len() != self.atoms.len() {
            return Err(Error::InvalidElement(format!(
                "expected {} components, got {}",
                self.atoms.len(),
                parts.len()
            )));
        }
        for (i, (a, x)) in self.atoms.iter().zip(parts).enumerate() {
            if !a.accepts(x) {
                return Err(Error::InvalidElement(format!("component {} is not a value of {a}", i + 1)));
            }
        }
        Ok(())
    }

    pub fn element(&self, parts: Vec<Scalar>) -> Result<Element> {
        self.check_parts(&parts)?;
        for (i, (a, x)) in self.atoms.iter().zip(&parts).enumerate() {
            if !a.is_integral(x) {
                return Err(Error::InvalidElement(format!("component {} is not in {a}", i + 1)));
            }
        }
        Ok(Element { parts })
    }

    pub fn fraction(&self, parts: Vec<Scalar>) -> Result<Fraction> {
        self.check_parts(&parts)?;
        Ok(Fraction { parts })
    }

    pub fn to_element(&self, x: &Fraction) -> Option<Element> {
        self.element(x.parts.clone()).ok()
    }

    pub fn zero(&self) -> Element {
        Element { parts: self.atoms.iter().map(|a| a.zero()).collect() }
    }

    pub fn one(&self) -> Element {
        Element { parts: self.atoms.iter().map(|a| a.one()).collect() }
    }

    /// The element with `x` in component `i` and `fill` elsewhere.
    pub fn embed(&self, i: usize, x: Scalar, fill_one: bool) -> Element {
        let parts = self
            .atoms
            .iter()
            .enumerate()
            .map(|(j, a)| {
                if j == i {
                    x.clone()
                } else if fill_one {
                    a.one()
                } else {
                    a.zero()
                }
            })
            .collect();
        Element { parts }
    }

    /// The fraction with `x` in component `i` and zero elsewhere.
    pub fn embed_fraction(&self, i: usize, x: Scalar) -> Fraction {
        let parts = self
            .atoms
            .iter()
            .enumerate()
            .map(|(j, a)| if j == i { x.clone() } else { a.zero() })
            .collect();
        Fraction { parts }
    }

    fn zip(&self, x: &[Scalar], y: &[Scalar], f: impl Fn(&Atom, &Scalar, &Scalar) -> Scalar) -> Vec<Scalar> {
        self.atoms.iter().zip(x.iter().zip(y)).map(|(a, (u, v))| f(a, u, v)).collect()
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        Element { parts: self.zip(&x.parts, &y.parts, |a, u, v| a.add(u, v)) }
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        Element { parts: self.zip(&x.parts, &y.parts, |a, u, v| a.sub(u, v)) }
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        Element { parts: self.zip(&x.parts, &y.parts, |a, u, v| a.mul(u, v)) }
    }

    pub fn neg(&self, x: &Element) -> Element {
        Element { parts: self.atoms.iter().zip(&x.parts).map(|(a, u)| a.neg(u)).collect() }
    }

    pub fn pow(&self, x: &Element, e: u32) -> Element {
        Element { parts: self.atoms.iter().zip(&x.parts).map(|(a, u)| a.pow(u, e)).collect() }
    }

    pub fn is_regular(&self, x: &Element) -> bool {
        self.atoms.iter().zip(&x.parts).all(|(a, u)| a.is_regular(u))
    }

    pub fn is_unit(&self, x: &Element) -> bool {
        self.atoms.iter().zip(&x.parts).all(|(a, u)| a.is_unit(u))
    }

    pub fn is_zero(&self, x: &Element) -> bool {
        self.atoms.iter().zip(&x.parts).all(|(a, u)| a.is_zero(u))
    }

    pub fn unit_inverse(&self, x: &Element) -> Result<Element> {
        if !self.is_unit(x) {
            return Err(Error::NotAUnit(x.to_string()));
        }
        let parts = self.atoms.iter().zip(&x.parts).map(|(a, u)| a.inv(u)).collect::<Result<Vec<_>>>()?;
        Ok(Element { parts })
    }

    pub fn div_exact(&self, x: &Element, y: &Element) -> Result<Element> {
        let parts = self
            .atoms
            .iter()
            .zip(x.parts.iter().zip(&y.parts))
            .map(|(a, (u, v))| a.div_exact(u, v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Element { parts })
    }

    pub fn frac_add(&self, x: &Fraction, y: &Fraction) -> Fraction {
        Fraction { parts: self.zip(&x.parts, &y.parts, |a, u, v| a.add(u, v)) }
    }

    pub fn frac_mul(&self, x: &Fraction, y: &Fraction) -> Fraction {
        Fraction { parts: self.zip(&x.parts, &y.parts, |a, u, v| a.mul(u, v)) }
    }

    pub fn frac_neg(&self, x: &Fraction) -> Fraction {
        Fraction { parts: self.atoms.iter().zip(&x.parts).map(|(a, u)| a.neg(u)).collect() }
    }

    pub fn frac_is_regular(&self, x: &Fraction) -> bool {
        self.atoms.iter().zip(&x.parts).all(|(a, u)| a.is_regular(u))
    }

    /// Inverse of a regular fraction.
    pub fn frac_inv(&self, x: &Fraction) -> Result<Fraction> {
        let parts = self.atoms.iter().zip(&x.parts).map(|(a, u)| a.inv(u)).collect::<Result<Vec<_>>>()?;
        Ok(Fraction { parts })
    }

    /// `num / den` for a regular `den`.
    pub fn frac_div(&self, num: &Element, den: &Element) -> Result<Fraction> {
        Ok(self.frac_mul(&num.to_fraction(), &self.frac_inv(&den.to_fraction())?))
    }
}

impl fmt::Display for RingDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.atoms.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(" (+) "))
    }
}

/// Integer scalar helper for tests and generators.
pub fn int(n: i64) -> Scalar {
    Scalar::Rat(BigRational::from_integer(n.into()))
}

pub fn rat(n: i64, d: i64) -> Scalar {
    Scalar::Rat(BigRational::new(n.into(), d.into()))
}

pub fn quad(a: i64, b: i64) -> Scalar {
    Scalar::Quad(QuadNum::from_int(&QuadInt::new(a, b)))
}

pub fn poly(f: Poly) -> Scalar {
    Scalar::Fun(RatFun::from_poly(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{VAR_X, VAR_Y};
    use proptest::prelude::*;

    fn zq() -> RingDesc {
        RingDesc::new(vec![Atom::Integer, Atom::Rational]).unwrap()
    }

    #[test]
    fn total_quotient_rings() {
        assert_eq!(zq().total_quotient().to_string(), "Q (+) Q");
        let r = RingDesc::new(vec![Atom::mod_prime_power(2, 2).unwrap()]).unwrap();
        assert_eq!(r.total_quotient().to_string(), "Zmod 2^2");
        let r = RingDesc::new(vec![
            Atom::Integer,
            Atom::mod_prime_power(2, 3).unwrap(),
            Atom::quadratic(-5).unwrap(),
        ])
        .unwrap();
        let t = r.total_quotient();
        assert_eq!(t.to_string(), "Q (+) Zmod 2^3 (+) Q(sqrt -5)");
        assert_eq!(t.krull_dim, 0);
        assert!(t.is_pir);
    }

    #[test]
    fn regularity() {
        let r = zq();
        assert!(!r.is_regular(&r.element(vec![int(1), int(0)]).unwrap()));
        assert!(r.is_regular(&r.one()));
        let z4 = RingDesc::new(vec![Atom::mod_prime_power(2, 2).unwrap()]).unwrap();
        assert!(!z4.is_regular(&z4.element(vec![Scalar::Res(2)]).unwrap()));
    }

    #[test]
    fn atom_arithmetic_examples() {
        let o = Atom::quadratic(-5).unwrap();
        if let Atom::Quadratic(q) = o {
            assert_eq!(QuadInt::new(1, 1).norm(&q), BigInt::from(6));
        }
        let z8 = Atom::mod_prime_power(2, 3).unwrap();
        assert_eq!(z8.mul(&Scalar::Res(3), &Scalar::Res(3)), Scalar::Res(1));
        let f2 = Atom::poly(2).unwrap();
        let s = poly(Poly::var(2, VAR_X).add(&Poly::var(2, VAR_Y)));
        let sq = poly(Poly::var(2, VAR_X).pow(2).add(&Poly::var(2, VAR_Y).pow(2)));
        assert_eq!(f2.mul(&s, &s), sq);
    }

    #[test]
    fn errors() {
        let z = Atom::Integer;
        assert!(matches!(z.div_exact(&int(3), &int(2)), Err(Error::DivisionNotExact(_))));
        let r = zq();
        assert!(matches!(r.unit_inverse(&r.element(vec![int(2), int(1)]).unwrap()), Err(Error::NotAUnit(_))));
        assert!(Atom::mod_prime_power(4, 1).is_err());
        assert!(Atom::mod_prime_power(2, 0).is_err());
        assert!(Atom::quadratic(-4).is_err());
        assert!(Atom::poly(7).is_err());
        assert!(r.element(vec![rat(1, 2), int(1)]).is_err());
    }

    #[test]
    fn spr_division() {
        let z8 = Atom::mod_prime_power(2, 3).unwrap();
        let q = z8.div_exact(&Scalar::Res(4), &Scalar::Res(6)).unwrap();
        assert_eq!(z8.mul(&q, &Scalar::Res(6)), Scalar::Res(4));
        assert!(z8.div_exact(&Scalar::Res(2), &Scalar::Res(4)).is_err());
    }

    fn atoms() -> Vec<Atom> {
        vec![
            Atom::Integer,
            Atom::Rational,
            Atom::mod_prime_power(3, 2).unwrap(),
            Atom::quadratic(-5).unwrap(),
            Atom::quadratic(-3).unwrap(),
            Atom::poly(3).unwrap(),
        ]
    }

    fn sample(a: &Atom, v: &[i64; 4]) -> Scalar {
        match a {
            Atom::Integer => int(v[0]),
            Atom::Rational => rat(v[0], v[1].abs() + 1),
            Atom::ModPrimePower { .. } => a.from_int(v[0]),
            Atom::Quadratic(_) => quad(v[0], v[1]),
            Atom::Poly { p } => poly(Poly::from_terms(
                *p,
                [([1, 0, 0], v[0]), ([0, 1, 0], v[1]), ([1, 1, 0], v[2]), ([0, 0, 0], v[3])],
            )),
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(ai in 0usize..6, x in prop::array::uniform4(-9i64..9), y in prop::array::uniform4(-9i64..9), z in prop::array::uniform4(-9i64..9)) {
            let a = atoms()[ai];
            let (x, y, z) = (sample(&a, &x), sample(&a, &y), sample(&a, &z));
            prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
            prop_assert_eq!(a.mul(&x, &a.add(&y, &z)), a.add(&a.mul(&x, &y), &a.mul(&x, &z)));
            prop_assert_eq!(a.mul(&a.one(), &x), x.clone());
            prop_assert_eq!(a.add(&x, &a.neg(&x)), a.zero());
            if a.is_regular(&x) && a.is_regular(&y) {
                prop_assert!(a.is_regular(&a.mul(&x, &y)));
            }
            if a.is_regular(&x) && !a.is_regular(&y) {
                prop_assert!(!a.is_regular(&a.mul(&x, &y)));
            }
        }

        #[test]
        fn fraction_canonicalization_is_idempotent(n in prop::array::uniform4(-4i64..4), d in prop::array::uniform4(-4i64..4)) {
            let p = 5;
            let mk = |v: &[i64; 4]| Poly::from_terms(p, [([1, 0, 0], v[0]), ([0, 1, 0], v[1]), ([2, 0, 0], v[2]), ([0, 0, 0], v[3])]);
            if let Some(f) = RatFun::new(mk(&n), mk(&d)) {
                let again = RatFun::new(f.num().clone(), f.den().clone()).unwrap();
                prop_assert_eq!(again, f);
            }
        }
    }
}
