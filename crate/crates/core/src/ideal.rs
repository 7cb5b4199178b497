//! Fractional ideals of a direct sum, stored componentwise in canonical form.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intutil;
use crate::poly::Poly;
use crate::polyfactor;
use crate::polyideal::{quotient_is_field, PolyIdeal, RatFun};
use crate::quad::{self, QuadIdeal, QuadNum};
use crate::ring::{Atom, Fraction, RingDesc, Scalar};

/// An ideal of one atom's total quotient ring.
///
/// `Whole` is the entire total quotient ring `T(atom)`; it only occurs for
/// domain atoms, since an SPR is its own total quotient ring and uses `Spr(0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AtomIdeal {
    Zero,
    Whole,
    /// `q·Z` with `q > 0`, for the integer atom.
    Int(BigRational),
    /// `(p^j)` in `Z/p^k`; `j = k` is the zero ideal.
    Spr(u32),
    Quad(QuadIdeal),
    Poly(PolyIdeal),
}

fn rat_gcd(x: &BigRational, y: &BigRational) -> BigRational {
    let num = (x.numer() * y.denom()).gcd(&(y.numer() * x.denom()));
    BigRational::new(num, x.denom() * y.denom())
}

fn rat_lcm(x: &BigRational, y: &BigRational) -> BigRational {
    (x * y).abs() / rat_gcd(x, y)
}

impl AtomIdeal {
    pub fn zero(a: &Atom) -> AtomIdeal {
        match a {
            Atom::ModPrimePower { k, .. } => AtomIdeal::Spr(*k),
            _ => AtomIdeal::Zero,
        }
    }

    /// The atom itself as an ideal.
    pub fn unit(a: &Atom) -> AtomIdeal {
        match a {
            Atom::Integer => AtomIdeal::Int(BigRational::one()),
            Atom::Rational => AtomIdeal::Whole,
            Atom::ModPrimePower { .. } => AtomIdeal::Spr(0),
            Atom::Quadratic(r) => AtomIdeal::Quad(r.one_ideal()),
            Atom::Poly { p } => AtomIdeal::Poly(PolyIdeal::unit(*p)),
        }
    }

    /// The total quotient ring of the atom as a module.
    pub fn total(a: &Atom) -> AtomIdeal {
        match a {
            Atom::ModPrimePower { .. } => AtomIdeal::Spr(0),
            _ => AtomIdeal::Whole,
        }
    }

    pub fn is_zero(&self, a: &Atom) -> bool {
        *self == AtomIdeal::zero(a)
    }

    pub fn from_generators(a: &Atom, gens: &[Scalar]) -> AtomIdeal {
        let nonzero: Vec<&Scalar> = gens.iter().filter(|g| !a.is_zero(g)).collect();
        if nonzero.is_empty() {
            return AtomIdeal::zero(a);
        }
        match a {
            Atom::Integer => {
                let g = nonzero.iter().fold(BigRational::zero(), |acc, s| match s {
                    Scalar::Rat(q) => {
                        if acc.is_zero() {
                            q.abs()
                        } else {
                            rat_gcd(&acc, q)
                        }
                    }
                    _ => unreachable!(),
                });
                AtomIdeal::Int(g)
            }
            Atom::Rational => AtomIdeal::Whole,
            Atom::ModPrimePower { .. } => AtomIdeal::Spr(nonzero.iter().map(|s| a.spr_valuation(s)).min().unwrap()),
            Atom::Quadratic(r) => {
                let g: Vec<QuadNum> = nonzero
                    .iter()
                    .map(|s| match s {
                        Scalar::Quad(q) => q.clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                AtomIdeal::Quad(QuadIdeal::from_generators(*r, &g).expect("nonzero generators"))
            }
            Atom::Poly { p } => {
                let g: Vec<RatFun> = nonzero
                    .iter()
                    .map(|s| match s {
                        Scalar::Fun(f) => f.clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                AtomIdeal::Poly(PolyIdeal::from_generators(*p, &g).expect("nonzero generators"))
            }
        }
    }

    /// A finite generating set, or `None` for a non-finitely generated `Whole`.
    pub fn generators(&self, a: &Atom) -> Option<Vec<Scalar>> {
        Some(match (self, a) {
            (AtomIdeal::Zero, _) => vec![],
            (AtomIdeal::Whole, Atom::Rational) => vec![a.one()],
            (AtomIdeal::Whole, _) => return None,
            (AtomIdeal::Int(q), _) => vec![Scalar::Rat(q.clone())],
            (AtomIdeal::Spr(j), Atom::ModPrimePower { p, k }) => {
                if j == k {
                    vec![]
                } else {
                    vec![Scalar::Res(p.pow(*j))]
                }
            }
            (AtomIdeal::Quad(i), _) => i.basis().into_iter().map(Scalar::Quad).collect(),
            (AtomIdeal::Poly(i), _) => i.generators().into_iter().map(Scalar::Fun).collect(),
            _ => unreachable!("ideal kind does not match atom"),
        })
    }

    pub fn add(&self, o: &AtomIdeal, a: &Atom) -> AtomIdeal {
        if self.is_zero(a) {
            return o.clone();
        }
        if o.is_zero(a) {
            return self.clone();
        }
        match (self, o) {
            (AtomIdeal::Whole, _) | (_, AtomIdeal::Whole) => AtomIdeal::Whole,
            (AtomIdeal::Int(x), AtomIdeal::Int(y)) => AtomIdeal::Int(rat_gcd(x, y)),
            (AtomIdeal::Spr(i), AtomIdeal::Spr(j)) => AtomIdeal::Spr(*i.min(j)),
            (AtomIdeal::Quad(x), AtomIdeal::Quad(y)) => AtomIdeal::Quad(x.add(y)),
            (AtomIdeal::Poly(x), AtomIdeal::Poly(y)) => AtomIdeal::Poly(x.add(y)),
            _ => unreachable!("ideal kinds do not match"),
        }
    }

    pub fn mul(&self, o: &AtomIdeal, a: &Atom) -> AtomIdeal {
        if let (AtomIdeal::Spr(i), AtomIdeal::Spr(j), Atom::ModPrimePower { k, .. }) = (self, o, a) {
            return AtomIdeal::Spr((i + j).min(*k));
        }
        if self.is_zero(a) || o.is_zero(a) {
            return AtomIdeal::zero(a);
        }
        match (self, o) {
            (AtomIdeal::Whole, _) | (_, AtomIdeal::Whole) => AtomIdeal::Whole,
            (AtomIdeal::Int(x), AtomIdeal::Int(y)) => AtomIdeal::Int(x * y),
            (AtomIdeal::Quad(x), AtomIdeal::Quad(y)) => AtomIdeal::Quad(x.mul(y)),
            (AtomIdeal::Poly(x), AtomIdeal::Poly(y)) => AtomIdeal::Poly(x.mul(y)),
            _ => unreachable!("ideal kinds do not match"),
        }
    }

    pub fn pow(&self, e: u32, a: &Atom) -> AtomIdeal {
        let mut r = AtomIdeal::unit(a);
        for _ in 0..e {
            r = r.mul(self, a);
        }
        r
    }

    pub fn intersect(&self, o: &AtomIdeal, a: &Atom) -> AtomIdeal {
        if self.is_zero(a) || o.is_zero(a) {
            return AtomIdeal::zero(a);
        }
        match (self, o) {
            (AtomIdeal::Whole, x) | (x, AtomIdeal::Whole) => x.clone(),
            (AtomIdeal::Int(x), AtomIdeal::Int(y)) => AtomIdeal::Int(rat_lcm(x, y)),
            (AtomIdeal::Spr(i), AtomIdeal::Spr(j)) => AtomIdeal::Spr(*i.max(j)),
            (AtomIdeal::Quad(x), AtomIdeal::Quad(y)) => AtomIdeal::Quad(x.intersect(y)),
            (AtomIdeal::Poly(x), AtomIdeal::Poly(y)) => AtomIdeal::Poly(x.intersect(y)),
            _ => unreachable!("ideal kinds do not match"),
        }
    }

    /// `(self : o) = {x ∈ T(atom) : x·o ⊆ self}`.
    pub fn colon(&self, o: &AtomIdeal, a: &Atom) -> AtomIdeal {
        if let (AtomIdeal::Spr(i), AtomIdeal::Spr(j)) = (self, o) {
            return AtomIdeal::Spr(i.saturating_sub(*j));
        }
        if o.is_zero(a) {
            return AtomIdeal::total(a);
        }
        if self.is_zero(a) {
            return AtomIdeal::zero(a);
        }
        match (self, o) {
            (AtomIdeal::Whole, _) => AtomIdeal::Whole,
            // a nonzero fractional ideal of a domain that is not a field absorbs no
            // nonzero multiple of T
            (_, AtomIdeal::Whole) => AtomIdeal::Zero,
            (AtomIdeal::Int(x), AtomIdeal::Int(y)) => AtomIdeal::Int(x / y),
            (AtomIdeal::Quad(x), AtomIdeal::Quad(y)) => AtomIdeal::Quad(x.colon(y)),
            (AtomIdeal::Poly(x), AtomIdeal::Poly(y)) => AtomIdeal::Poly(x.colon(y)),
            _ => unreachable!("ideal kinds do not match"),
        }
    }

    pub fn inverse(&self, a: &Atom) -> AtomIdeal {
        AtomIdeal::unit(a).colon(self, a)
    }

    pub fn contains(&self, x: &Scalar, a: &Atom) -> bool {
        match (self, x) {
            (AtomIdeal::Zero, _) => a.is_zero(x),
            (AtomIdeal::Whole, _) => true,
            (AtomIdeal::Int(q), Scalar::Rat(v)) => (v / q).is_integer(),
            (AtomIdeal::Spr(j), Scalar::Res(_)) => a.spr_valuation(x) >= *j,
            (AtomIdeal::Quad(i), Scalar::Quad(v)) => i.contains(v),
            (AtomIdeal::Poly(i), Scalar::Fun(v)) => i.contains(v),
            _ => false,
        }
    }

    /// `o ⊆ self`, decided on canonical forms.
    pub fn contains_ideal(&self, o: &AtomIdeal, a: &Atom) -> bool {
        self.add(o, a) == *self
    }

    /// Contains a non-zero-divisor of the atom.
    pub fn is_regular(&self, a: &Atom) -> bool {
        match self {
            AtomIdeal::Spr(j) => *j == 0,
            _ => !self.is_zero(a),
        }
    }

    pub fn is_integral(&self, a: &Atom) -> bool {
        AtomIdeal::unit(a).contains_ideal(self, a)
    }

    pub fn display<'a>(&'a self, a: &'a Atom) -> AtomIdealDisplay<'a> {
        AtomIdealDisplay(self, a)
    }
}

pub struct AtomIdealDisplay<'a>(&'a AtomIdeal, &'a Atom);

impl fmt::Display for AtomIdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, a) = (self.0, self.1);
        if *i == AtomIdeal::unit(a) {
            return write!(f, "{a}");
        }
        match i {
            AtomIdeal::Zero => write!(f, "(0)"),
            AtomIdeal::Whole => write!(f, "{}", a.total_quotient()),
            AtomIdeal::Int(q) => write!(f, "({q})"),
            AtomIdeal::Spr(j) => match a {
                Atom::ModPrimePower { k, .. } if j == k => write!(f, "(0)"),
                Atom::ModPrimePower { p, .. } if *j == 1 => write!(f, "({p})"),
                Atom::ModPrimePower { p, .. } => write!(f, "({p}^{j})"),
                _ => unreachable!(),
            },
            AtomIdeal::Quad(q) => write!(f, "{q}"),
            AtomIdeal::Poly(q) => write!(f, "{q}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FracIdeal {
    ring: RingDesc,
    parts: Vec<AtomIdeal>,
}

impl FracIdeal {
    /// Builds an ideal from per-component parts, checking that each matches its atom.
    pub fn from_parts(ring: &RingDesc, parts: Vec<AtomIdeal>) -> Result<FracIdeal> {
        if parts.len() != ring.len() {
            return Err(Error::RingMismatch);
        }
        for (a, p) in ring.atoms().iter().zip(&parts) {
            let ok = matches!(
                (a, p),
                (Atom::Integer, AtomIdeal::Zero | AtomIdeal::Whole | AtomIdeal::Int(_))
                    | (Atom::Rational, AtomIdeal::Zero | AtomIdeal::Whole)
                    | (Atom::Quadratic(_), AtomIdeal::Zero | AtomIdeal::Whole | AtomIdeal::Quad(_))
                    | (Atom::Poly { .. }, AtomIdeal::Zero | AtomIdeal::Whole | AtomIdeal::Poly(_))
            ) || matches!((a, p), (Atom::ModPrimePower { k, .. }, AtomIdeal::Spr(j)) if j <= k);
            let ok = ok
                && match p {
                    AtomIdeal::Int(q) => q.is_positive(),
                    AtomIdeal::Quad(q) => matches!(a, Atom::Quadratic(r) if *r == q.ring),
                    AtomIdeal::Poly(q) => matches!(a, Atom::Poly { p } if *p == q.modulus()),
                    _ => true,
                };
            if !ok {
                return Err(Error::InvalidElement(format!("ideal part does not belong to {a}")));
            }
        }
        Ok(FracIdeal { ring: ring.clone(), parts })
    }

    pub fn ring(&self) -> &RingDesc {
        &self.ring
    }

    pub fn parts(&self) -> &[AtomIdeal] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &AtomIdeal {
        &self.parts[i]
    }

    pub fn with_part(&self, i: usize, part: AtomIdeal) -> FracIdeal {
        let mut parts = self.parts.clone();
        parts[i] = part;
        FracIdeal { ring: self.ring.clone(), parts }
    }

    fn map(&self, f: impl Fn(&AtomIdeal, &Atom) -> AtomIdeal) -> FracIdeal {
        let parts = self.parts.iter().zip(self.ring.atoms()).map(|(p, a)| f(p, a)).collect();
        FracIdeal { ring: self.ring.clone(), parts }
    }

    fn zip(&self, o: &FracIdeal, f: impl Fn(&AtomIdeal, &AtomIdeal, &Atom) -> AtomIdeal) -> Result<FracIdeal> {
        if self.ring != o.ring {
            return Err(Error::RingMismatch);
        }
        let parts = self
            .parts
            .iter()
            .zip(&o.parts)
            .zip(self.ring.atoms())
            .map(|((x, y), a)| f(x, y, a))
            .collect();
        Ok(FracIdeal { ring: self.ring.clone(), parts })
    }

    pub fn unit(ring: &RingDesc) -> FracIdeal {
        FracIdeal { ring: ring.clone(), parts: ring.atoms().iter().map(AtomIdeal::unit).collect() }
    }

    pub fn zero(ring: &RingDesc) -> FracIdeal {
        FracIdeal { ring: ring.clone(), parts: ring.atoms().iter().map(AtomIdeal::zero).collect() }
    }

    pub fn total(ring: &RingDesc) -> FracIdeal {
        FracIdeal { ring: ring.clone(), parts: ring.atoms().iter().map(AtomIdeal::total).collect() }
    }

    pub fn principal(ring: &RingDesc, x: &Fraction) -> FracIdeal {
        ideal_from_generators(ring, std::slice::from_ref(x))
    }

    pub fn is_unit(&self) -> bool {
        *self == FracIdeal::unit(&self.ring)
    }

    pub fn is_zero(&self) -> bool {
        *self == FracIdeal::zero(&self.ring)
    }

    pub fn sum(&self, o: &FracIdeal) -> Result<FracIdeal> {
        self.zip(o, |x, y, a| x.add(y, a))
    }

    pub fn product(&self, o: &FracIdeal) -> Result<FracIdeal> {
        self.zip(o, |x, y, a| x.mul(y, a))
    }

    pub fn intersect(&self, o: &FracIdeal) -> Result<FracIdeal> {
        self.zip(o, |x, y, a| x.intersect(y, a))
    }

    pub fn colon(&self, o: &FracIdeal) -> Result<FracIdeal> {
        self.zip(o, |x, y, a| x.colon(y, a))
    }

    pub fn inverse(&self) -> FracIdeal {
        self.map(|x, a| x.inverse(a))
    }

    pub fn pow(&self, e: u32) -> FracIdeal {
        self.map(|x, a| x.pow(e, a))
    }

    /// `self ∩ R`.
    pub fn contract(&self) -> FracIdeal {
        self.map(|x, a| x.intersect(&AtomIdeal::unit(a), a))
    }

    pub fn contains(&self, x: &Fraction) -> Result<bool> {
        if x.parts().len() != self.parts.len() {
            return Err(Error::RingMismatch);
        }
        Ok(self
            .parts
            .iter()
            .zip(x.parts())
            .zip(self.ring.atoms())
            .all(|((i, v), a)| i.contains(v, a)))
    }

    /// `o ⊆ self`.
    pub fn contains_ideal(&self, o: &FracIdeal) -> Result<bool> {
        Ok(self.sum(o)? == *self)
    }

    pub fn is_integral(&self) -> bool {
        self.parts.iter().zip(self.ring.atoms()).all(|(i, a)| i.is_integral(a))
    }

    /// Contains a regular element: every component does.
    pub fn is_regular(&self) -> bool {
        self.parts.iter().zip(self.ring.atoms()).all(|(i, a)| i.is_regular(a))
    }

    /// Contains a finitely generated subideal with zero annihilator. Every ring
    /// here has Property(A), so this coincides with regularity.
    pub fn is_semiregular(&self) -> bool {
        self.annihilator().is_zero()
    }

    /// `((0) : A) ∩ R`.
    pub fn annihilator(&self) -> FracIdeal {
        FracIdeal::zero(&self.ring).colon(self).expect("same ring").contract()
    }

    pub fn contains_whole_ring(&self) -> bool {
        self.contains_ideal(&FracIdeal::unit(&self.ring)).expect("same ring")
    }

    /// Finite generating set as fractions, one generator per nonzero part
    /// padded with zeros elsewhere; `None` if some part is not finitely generated.
    pub fn generators(&self) -> Option<Vec<Fraction>> {
        let mut out = Vec::new();
        for (i, (p, a)) in self.parts.iter().zip(self.ring.atoms()).enumerate() {
            for g in p.generators(a)? {
                out.push(self.ring.embed_fraction(i, g));
            }
        }
        Some(out)
    }
}

impl fmt::Display for FracIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .parts
            .iter()
            .zip(self.ring.atoms())
            .map(|(p, a)| p.display(a).to_string())
            .collect();
        write!(f, "{}", s.join(" x "))
    }
}

pub fn ideal_from_generators(ring: &RingDesc, gens: &[Fraction]) -> FracIdeal {
    let parts = ring
        .atoms()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let g: Vec<Scalar> = gens.iter().map(|x| x.parts()[i].clone()).collect();
            AtomIdeal::from_generators(a, &g)
        })
        .collect();
    FracIdeal { ring: ring.clone(), parts }
}

/// A prime ideal of one atom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AtomPrime {
    /// The zero ideal of a domain component.
    ZeroPrime,
    IntegerPrime(u64),
    /// `(p)` in `Z/p^k`.
    SprMax,
    QuadPrime(QuadIdeal),
    /// `(f)` for a monic irreducible `f` in `F_p[X,Y]`.
    PolyPrime(Poly),
    /// A maximal ideal of `F_p[X,Y]`, which has height two.
    PolyMaximal(PolyIdeal),
}

impl AtomPrime {
    fn rank(&self) -> u8 {
        match self {
            AtomPrime::ZeroPrime => 0,
            AtomPrime::IntegerPrime(_) => 1,
            AtomPrime::SprMax => 2,
            AtomPrime::QuadPrime(_) => 3,
            AtomPrime::PolyPrime(_) => 4,
            AtomPrime::PolyMaximal(_) => 5,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            AtomPrime::ZeroPrime => "zero",
            AtomPrime::IntegerPrime(_) => "integer",
            AtomPrime::SprMax => "spr-maximal",
            AtomPrime::QuadPrime(_) => "quadratic",
            AtomPrime::PolyPrime(_) => "polynomial",
            AtomPrime::PolyMaximal(_) => "polynomial-maximal",
        }
    }

    pub fn to_atom_ideal(&self, a: &Atom) -> AtomIdeal {
        match self {
            AtomPrime::ZeroPrime => AtomIdeal::zero(a),
            AtomPrime::IntegerPrime(p) => AtomIdeal::Int(BigRational::from_integer(BigInt::from(*p))),
            AtomPrime::SprMax => AtomIdeal::Spr(1),
            AtomPrime::QuadPrime(q) => AtomIdeal::Quad(q.clone()),
            AtomPrime::PolyPrime(f) => AtomIdeal::Poly(PolyIdeal::new(Poly::one(f.modulus()), &[f.clone()]).unwrap()),
            AtomPrime::PolyMaximal(i) => AtomIdeal::Poly(i.clone()),
        }
    }
}

fn basis_cmp(a: &[Poly], b: &[Poly]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let c = x.canonical_cmp(y);
        if c != Ordering::Equal {
            return c;
        }
    }
    a.len().cmp(&b.len())
}

impl Ord for AtomPrime {
    fn cmp(&self, o: &Self) -> Ordering {
        self.rank().cmp(&o.rank()).then_with(|| match (self, o) {
            (AtomPrime::IntegerPrime(x), AtomPrime::IntegerPrime(y)) => x.cmp(y),
            (AtomPrime::QuadPrime(x), AtomPrime::QuadPrime(y)) => {
                (&x.a * &x.c, &x.a, &x.b, &x.c).cmp(&(&y.a * &y.c, &y.a, &y.b, &y.c))
            }
            (AtomPrime::PolyPrime(x), AtomPrime::PolyPrime(y)) => x.canonical_cmp(y),
            (AtomPrime::PolyMaximal(x), AtomPrime::PolyMaximal(y)) => basis_cmp(x.basis(), y.basis()),
            _ => Ordering::Equal,
        })
    }
}

impl PartialOrd for AtomPrime {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// A prime of the direct sum: an atom prime in one component, the whole atom elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeRef {
    /// Zero-based component index.
    pub component: usize,
    pub prime: AtomPrime,
}

impl PrimeRef {
    pub fn new(component: usize, prime: AtomPrime) -> Self {
        PrimeRef { component, prime }
    }

    pub fn to_ideal(&self, ring: &RingDesc) -> FracIdeal {
        let a = ring.atom(self.component);
        FracIdeal::unit(ring).with_part(self.component, self.prime.to_atom_ideal(a))
    }

    /// Recognizes a prime ideal of `R`; `None` if `I` is not prime.
    pub fn from_ideal(i: &FracIdeal) -> Option<PrimeRef> {
        let ring = i.ring();
        let proper: Vec<usize> = (0..ring.len()).filter(|&c| *i.part(c) != AtomIdeal::unit(ring.atom(c))).collect();
        if proper.len() != 1 {
            return None;
        }
        let c = proper[0];
        let a = ring.atom(c);
        let part = i.part(c);
        let prime = match (a, part) {
            (Atom::ModPrimePower { .. }, AtomIdeal::Spr(1)) => AtomPrime::SprMax,
            (Atom::ModPrimePower { .. }, _) => return None,
            (_, AtomIdeal::Zero) => AtomPrime::ZeroPrime,
            (Atom::Integer, AtomIdeal::Int(q)) => {
                let n = q.is_integer().then(|| q.to_integer().to_u64()).flatten()?;
                if !intutil::is_prime(n) {
                    return None;
                }
                AtomPrime::IntegerPrime(n)
            }
            (Atom::Quadratic(_), AtomIdeal::Quad(q)) => {
                if !quad::is_prime_ideal(q) {
                    return None;
                }
                AtomPrime::QuadPrime(q.clone())
            }
            (Atom::Poly { .. }, AtomIdeal::Poly(q)) => {
                if !q.is_integral() {
                    return None;
                }
                if let Some(g) = q.principal_generator() {
                    let f = g.num().monic();
                    let irreducible = polyfactor::is_irreducible(&f, polyfactor::DEFAULT_DEGREE_CAP).ok()?;
                    if !irreducible {
                        return None;
                    }
                    AtomPrime::PolyPrime(f)
                } else if quotient_is_field(q.basis()) {
                    AtomPrime::PolyMaximal(q.clone())
                } else {
                    return None;
                }
            }
            _ => return None,
        };
        Some(PrimeRef { component: c, prime })
    }

    /// Principal as an ideal of `R`.
    pub fn is_principal(&self, ring: &RingDesc) -> bool {
        match &self.prime {
            AtomPrime::QuadPrime(q) => q.is_principal(),
            AtomPrime::PolyMaximal(_) => false,
            _ => {
                let _ = ring;
                true
            }
        }
    }

    /// Height-one prime of a domain component of positive dimension.
    pub fn is_height_one(&self) -> bool {
        matches!(
            self.prime,
            AtomPrime::IntegerPrime(_) | AtomPrime::QuadPrime(_) | AtomPrime::PolyPrime(_)
        )
    }

    pub fn display<'a>(&'a self, ring: &'a RingDesc) -> PrimeDisplay<'a> {
        PrimeDisplay(self, ring)
    }
}

pub struct PrimeDisplay<'a>(&'a PrimeRef, &'a RingDesc);

impl fmt::Display for PrimeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.to_ideal(self.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{VAR_X, VAR_Y};
    use crate::ring::{int, poly, quad};

    fn zq() -> RingDesc {
        RingDesc::new(vec![Atom::Integer, Atom::Rational]).unwrap()
    }

    fn frac(r: &RingDesc, parts: Vec<Scalar>) -> Fraction {
        r.fraction(parts).unwrap()
    }

    #[test]
    fn generated_ideals() {
        let r = zq();
        let i = ideal_from_generators(&r, &[frac(&r, vec![int(1), int(0)])]);
        assert_eq!(i.parts(), &[AtomIdeal::Int(BigRational::one()), AtomIdeal::Zero]);
        let z4 = RingDesc::new(vec![Atom::mod_prime_power(2, 2).unwrap()]).unwrap();
        let i = ideal_from_generators(&z4, &[frac(&z4, vec![Scalar::Res(2)])]);
        assert_eq!(i.parts(), &[AtomIdeal::Spr(1)]);
        let f2 = RingDesc::new(vec![Atom::poly(2).unwrap()]).unwrap();
        let (x, y) = (Poly::var(2, VAR_X), Poly::var(2, VAR_Y));
        let i = ideal_from_generators(&f2, &[frac(&f2, vec![poly(x.pow(2))]), frac(&f2, vec![poly(x.mul(&y))])]);
        let AtomIdeal::Poly(pi) = i.part(0) else { panic!() };
        assert!(pi.is_integral());
        assert_eq!(pi.basis(), &[x.mul(&y), x.pow(2)]);
    }

    #[test]
    fn sums_products_intersections() {
        let z = RingDesc::new(vec![Atom::Integer]).unwrap();
        let i4 = ideal_from_generators(&z, &[frac(&z, vec![int(4)])]);
        let i6 = ideal_from_generators(&z, &[frac(&z, vec![int(6)])]);
        assert_eq!(i4.intersect(&i6).unwrap().part(0), &AtomIdeal::Int(BigRational::from_integer(12.into())));
        let o = RingDesc::new(vec![Atom::quadratic(-5).unwrap()]).unwrap();
        let p = ideal_from_generators(&o, &[frac(&o, vec![quad(2, 0)]), frac(&o, vec![quad(1, 1)])]);
        assert_eq!(p.product(&p).unwrap(), ideal_from_generators(&o, &[frac(&o, vec![quad(2, 0)])]));
        let r = zq();
        let a = FracIdeal::from_parts(&r, vec![AtomIdeal::Int(BigRational::from_integer(6.into())), AtomIdeal::Zero]).unwrap();
        let b = FracIdeal::from_parts(&r, vec![AtomIdeal::Zero, AtomIdeal::Whole]).unwrap();
        assert_eq!(
            a.sum(&b).unwrap().parts(),
            &[AtomIdeal::Int(BigRational::from_integer(6.into())), AtomIdeal::Whole]
        );
        let other = RingDesc::new(vec![Atom::Integer]).unwrap();
        assert_eq!(a.sum(&FracIdeal::unit(&other)), Err(Error::RingMismatch));
    }

    #[test]
    fn colon_examples() {
        let z = RingDesc::new(vec![Atom::Integer]).unwrap();
        let i6 = ideal_from_generators(&z, &[frac(&z, vec![int(6)])]);
        let i2 = ideal_from_generators(&z, &[frac(&z, vec![int(2)])]);
        assert_eq!(i6.colon(&i2).unwrap().part(0), &AtomIdeal::Int(BigRational::from_integer(3.into())));
        let r = zq();
        let i = FracIdeal::from_parts(&r, vec![AtomIdeal::Int(BigRational::from_integer(6.into())), AtomIdeal::Zero]).unwrap();
        let e = FracIdeal::principal(&r, &frac(&r, vec![int(1), int(0)]));
        let c = i.colon(&e).unwrap();
        assert_eq!(c.parts(), &[AtomIdeal::Int(BigRational::from_integer(6.into())), AtomIdeal::Whole]);
        // oracle: (a,q)·(1,0) = (a,0) ∈ I iff a ∈ 6Z
        for a in -12..12 {
            let x = frac(&r, vec![int(a), int(5)]);
            let prod = r.frac_mul(&x, &frac(&r, vec![int(1), int(0)]));
            assert_eq!(i.contains(&prod).unwrap(), c.contains(&x).unwrap());
        }
        let z4 = RingDesc::new(vec![Atom::mod_prime_power(2, 2).unwrap()]).unwrap();
        let two = FracIdeal::principal(&z4, &frac(&z4, vec![Scalar::Res(2)]));
        assert_eq!(FracIdeal::zero(&z4).colon(&two).unwrap(), two);
    }

    #[test]
    fn inverse_examples() {
        let r = zq();
        let e = FracIdeal::principal(&r, &frac(&r, vec![int(1), int(0)]));
        assert!(e.inverse().is_unit());
        let f2 = RingDesc::new(vec![Atom::poly(2).unwrap()]).unwrap();
        let m = ideal_from_generators(
            &f2,
            &[frac(&f2, vec![poly(Poly::var(2, VAR_X))]), frac(&f2, vec![poly(Poly::var(2, VAR_Y))])],
        );
        assert!(m.inverse().is_unit());
        let o = RingDesc::new(vec![Atom::quadratic(-5).unwrap()]).unwrap();
        let p = ideal_from_generators(&o, &[frac(&o, vec![quad(2, 0)]), frac(&o, vec![quad(1, 1)])]);
        let inv = p.inverse();
        assert!(p.product(&inv).unwrap().is_unit());
        let AtomIdeal::Quad(pq) = p.part(0) else { panic!() };
        let AtomIdeal::Quad(iq) = inv.part(0) else { panic!() };
        assert_eq!(iq.scale(&QuadNum::from_int(&crate::quad::QuadInt::new(2, 0))).unwrap(), pq.conj());
    }

    #[test]
    fn regularity_and_annihilators() {
        let r = zq();
        let e = FracIdeal::principal(&r, &frac(&r, vec![int(1), int(0)]));
        assert!(!e.is_regular());
        assert!(!e.is_semiregular());
        let z4 = RingDesc::new(vec![Atom::mod_prime_power(2, 2).unwrap()]).unwrap();
        let two = FracIdeal::principal(&z4, &frac(&z4, vec![Scalar::Res(2)]));
        assert_eq!(two.annihilator(), two);
        let r2 = RingDesc::new(vec![Atom::Integer, Atom::mod_prime_power(2, 2).unwrap()]).unwrap();
        let i = FracIdeal::principal(&r2, &frac(&r2, vec![int(6), Scalar::Res(2)]));
        assert!(!i.is_regular());
        assert!(FracIdeal::unit(&r2).contains_whole_ring());
        assert!(!i.contains_whole_ring());
    }

    #[test]
    fn prime_recognition() {
        let r2 = RingDesc::new(vec![Atom::Integer, Atom::mod_prime_power(2, 2).unwrap()]).unwrap();
        let p = PrimeRef::new(1, AtomPrime::SprMax);
        assert_eq!(PrimeRef::from_ideal(&p.to_ideal(&r2)), Some(p));
        let p = PrimeRef::new(0, AtomPrime::IntegerPrime(3));
        assert_eq!(PrimeRef::from_ideal(&p.to_ideal(&r2)), Some(p));
        let not = FracIdeal::principal(&r2, &frac(&r2, vec![int(6), Scalar::Res(1)]));
        assert_eq!(PrimeRef::from_ideal(&not), None);
        let f2 = RingDesc::new(vec![Atom::poly(2).unwrap()]).unwrap();
        let m = ideal_from_generators(
            &f2,
            &[frac(&f2, vec![poly(Poly::var(2, VAR_X))]), frac(&f2, vec![poly(Poly::var(2, VAR_Y))])],
        );
        assert!(matches!(PrimeRef::from_ideal(&m).unwrap().prime, AtomPrime::PolyMaximal(_)));
        assert_eq!(m.to_string(), "<Y, X>");
    }
}
