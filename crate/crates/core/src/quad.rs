//! Maximal orders of imaginary quadratic fields.
//!
//! `O_d = Z[ω]` with `ω = √d` when `d ≢ 1 (mod 4)` and `ω = (1+√d)/2`
//! otherwise, so `ω² = w1·ω + w0`. Elements are written in the integral basis
//! `{1, ω}`. A nonzero fractional ideal is `(1/den)·L` where `L ⊆ Z²` is given
//! by its Hermite normal form `{a, b + cω}` with `0 ≤ b < a` and `den` minimal.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intutil;

pub const DEFAULT_CLASS_GROUP_BOUND: u64 = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadRing {
    pub d: i64,
    pub w0: i64,
    pub w1: i64,
}

impl QuadRing {
    pub fn new(d: i64) -> Result<Self> {
        if d >= 0 {
            return Err(Error::InvalidRing(format!("Quad {d}: d must be negative")));
        }
        if !intutil::is_squarefree(d.unsigned_abs()) {
            return Err(Error::InvalidRing(format!("Quad {d}: d must be squarefree")));
        }
        let (w0, w1) = if d.rem_euclid(4) == 1 { ((d - 1) / 4, 1) } else { (d, 0) };
        Ok(QuadRing { d, w0, w1 })
    }

    pub fn discriminant(&self) -> i64 {
        if self.d.rem_euclid(4) == 1 {
            self.d
        } else {
            4 * self.d
        }
    }

    pub fn one_ideal(&self) -> QuadIdeal {
        QuadIdeal::from_parts(*self, BigInt::one(), BigInt::one(), BigInt::zero(), BigInt::one())
    }
}

/// `a + b·ω` with integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &QuadInt) -> QuadInt {
        QuadInt { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    pub fn sub(&self, o: &QuadInt) -> QuadInt {
        QuadInt { a: &self.a - &o.a, b: &self.b - &o.b }
    }

    pub fn neg(&self) -> QuadInt {
        QuadInt { a: -&self.a, b: -&self.b }
    }

    pub fn scale(&self, k: &BigInt) -> QuadInt {
        QuadInt { a: &self.a * k, b: &self.b * k }
    }

    pub fn mul(&self, o: &QuadInt, r: &QuadRing) -> QuadInt {
        let be = &self.b * &o.b;
        QuadInt {
            a: &self.a * &o.a + &be * r.w0,
            b: &self.a * &o.b + &self.b * &o.a + &be * r.w1,
        }
    }

    pub fn conj(&self, r: &QuadRing) -> QuadInt {
        QuadInt { a: &self.a + &self.b * r.w1, b: -&self.b }
    }

    pub fn norm(&self, r: &QuadRing) -> BigInt {
        &self.a * &self.a + &self.a * &self.b * r.w1 - &self.b * &self.b * r.w0
    }

    pub fn trace(&self, r: &QuadRing) -> BigInt {
        BigInt::from(2) * &self.a + &self.b * r.w1
    }

    pub fn is_unit(&self, r: &QuadRing) -> bool {
        self.norm(r).is_one()
    }

    /// Exact quotient `self / o` when it lies in the order.
    pub fn div_exact(&self, o: &QuadInt, r: &QuadRing) -> Option<QuadInt> {
        let q = QuadNum::from_int(self).div(&QuadNum::from_int(o), r)?;
        q.to_int()
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(f, &self.a.to_string(), &self.b, self.a.is_zero())
    }
}

fn fmt_coords(f: &mut fmt::Formatter<'_>, a: &str, b: &BigInt, a_zero: bool) -> fmt::Result {
    if b.is_zero() {
        return write!(f, "{a}");
    }
    let bw = if b.is_one() {
        "w".to_string()
    } else if *b == BigInt::from(-1) {
        "-w".to_string()
    } else {
        format!("{b}*w")
    };
    if a_zero {
        write!(f, "{bw}")
    } else if b.is_negative() {
        write!(f, "{a}{bw}")
    } else {
        write!(f, "{a}+{bw}")
    }
}

/// Element of `Q(√d)` as `a + b·ω` with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadNum {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadNum {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadNum { a, b }
    }

    pub fn from_int(x: &QuadInt) -> Self {
        QuadNum { a: BigRational::from_integer(x.a.clone()), b: BigRational::from_integer(x.b.clone()) }
    }

    pub fn from_rational(q: BigRational) -> Self {
        QuadNum { a: q, b: BigRational::zero() }
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn to_int(&self) -> Option<QuadInt> {
        if self.a.is_integer() && self.b.is_integer() {
            Some(QuadInt { a: self.a.to_integer(), b: self.b.to_integer() })
        } else {
            None
        }
    }

    /// Least positive integer `m` with `m·self` integral.
    pub fn denominator(&self) -> BigInt {
        self.a.denom().lcm(self.b.denom())
    }

    pub fn add(&self, o: &QuadNum) -> QuadNum {
        QuadNum { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    pub fn sub(&self, o: &QuadNum) -> QuadNum {
        QuadNum { a: &self.a - &o.a, b: &self.b - &o.b }
    }

    pub fn neg(&self) -> QuadNum {
        QuadNum { a: -&self.a, b: -&self.b }
    }

    pub fn scale(&self, k: &BigRational) -> QuadNum {
        QuadNum { a: &self.a * k, b: &self.b * k }
    }

    pub fn mul(&self, o: &QuadNum, r: &QuadRing) -> QuadNum {
        let be = &self.b * &o.b;
        QuadNum {
            a: &self.a * &o.a + &be * BigRational::from_integer(r.w0.into()),
            b: &self.a * &o.b + &self.b * &o.a + &be * BigRational::from_integer(r.w1.into()),
        }
    }

    pub fn conj(&self, r: &QuadRing) -> QuadNum {
        QuadNum { a: &self.a + &self.b * BigRational::from_integer(r.w1.into()), b: -&self.b }
    }

    pub fn norm(&self, r: &QuadRing) -> BigRational {
        let w0 = BigRational::from_integer(r.w0.into());
        let w1 = BigRational::from_integer(r.w1.into());
        &self.a * &self.a + &self.a * &self.b * w1 - &self.b * &self.b * w0
    }

    pub fn inv(&self, r: &QuadRing) -> Option<QuadNum> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm(r);
        Some(self.conj(r).scale(&n.recip()))
    }

    pub fn div(&self, o: &QuadNum, r: &QuadRing) -> Option<QuadNum> {
        Some(self.mul(&o.inv(r)?, r))
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.denominator();
        let a = (&self.a * BigRational::from_integer(den.clone())).to_integer();
        let b = (&self.b * BigRational::from_integer(den.clone())).to_integer();
        if den.is_one() {
            return fmt_coords(f, &a.to_string(), &b, a.is_zero());
        }
        write!(f, "(")?;
        fmt_coords(f, &a.to_string(), &b, a.is_zero())?;
        write!(f, ")/{den}")
    }
}

/// HNF `(a, b, c)` of the lattice spanned by integer vectors `(x, y) ↔ x + yω`.
/// `None` unless the span has rank 2.
pub fn hnf(vectors: &[(BigInt, BigInt)]) -> Option<(BigInt, BigInt, BigInt)> {
    let mut a = BigInt::zero();
    let mut pivot: (BigInt, BigInt) = (BigInt::zero(), BigInt::zero());
    for (x, y) in vectors {
        if y.is_zero() {
            a = a.gcd(x);
            continue;
        }
        if pivot.1.is_zero() {
            pivot = (x.clone(), y.clone());
            continue;
        }
        let eg = pivot.1.extended_gcd(y);
        let g = eg.gcd;
        let new_pivot = (&eg.x * &pivot.0 + &eg.y * x, &eg.x * &pivot.1 + &eg.y * y);
        // (y/g)·pivot - (pivot.1/g)·w has zero ω-coordinate
        let comb = (y / &g) * &pivot.0 - (&pivot.1 / &g) * x;
        a = a.gcd(&comb);
        pivot = new_pivot;
    }
    if a.is_zero() || pivot.1.is_zero() {
        return None;
    }
    if pivot.1.is_negative() {
        pivot = (-pivot.0, -pivot.1);
    }
    let b = pivot.0.mod_floor(&a);
    Some((a, b, pivot.1))
}

/// A nonzero fractional ideal `(1/den)·⟨a, b + cω⟩_Z` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadIdeal {
    pub ring: QuadRing,
    pub den: BigInt,
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl QuadIdeal {
    fn from_parts(ring: QuadRing, den: BigInt, a: BigInt, b: BigInt, c: BigInt) -> Self {
        let g = den.gcd(&a).gcd(&b).gcd(&c);
        QuadIdeal { ring, den: den / &g, a: a / &g, b: b / &g, c: c / &g }
    }

    /// Validates and canonicalizes raw HNF data, e.g. from JSON.
    pub fn from_hnf(ring: QuadRing, den: BigInt, a: BigInt, b: BigInt, c: BigInt) -> Result<Self> {
        if !den.is_positive() || !a.is_positive() || !c.is_positive() || b.is_negative() || b >= a {
            return Err(Error::InvalidElement("malformed HNF data".into()));
        }
        let lat = QuadIdeal::from_parts(ring, den, a, b, c);
        // must be closed under multiplication by ω
        let omega = QuadNum::from_int(&QuadInt::new(0, 1));
        for g in lat.basis() {
            if !lat.contains(&g.mul(&omega, &ring)) {
                return Err(Error::InvalidElement("lattice is not an ideal".into()));
            }
        }
        Ok(lat)
    }

    /// `Z`-span of `vectors / den`, assumed to be an `O`-module.
    fn from_lattice(ring: QuadRing, den: BigInt, vectors: &[(BigInt, BigInt)]) -> Option<Self> {
        let (a, b, c) = hnf(vectors)?;
        Some(QuadIdeal::from_parts(ring, den, a, b, c))
    }

    /// Ideal generated by the given field elements; `None` if all are zero.
    pub fn from_generators(ring: QuadRing, gens: &[QuadNum]) -> Option<Self> {
        let omega = QuadNum::from_int(&QuadInt::new(0, 1));
        let mut zgens: Vec<QuadNum> = Vec::new();
        for g in gens {
            zgens.push(g.clone());
            zgens.push(g.mul(&omega, &ring));
        }
        Self::from_z_generators(ring, &zgens)
    }

    fn from_z_generators(ring: QuadRing, zgens: &[QuadNum]) -> Option<Self> {
        let den = zgens.iter().fold(BigInt::one(), |acc, g| acc.lcm(&g.denominator()));
        let dq = BigRational::from_integer(den.clone());
        let vectors: Vec<(BigInt, BigInt)> = zgens
            .iter()
            .map(|g| ((&g.a * &dq).to_integer(), (&g.b * &dq).to_integer()))
            .collect();
        Self::from_lattice(ring, den, &vectors)
    }

    pub fn principal(ring: QuadRing, g: &QuadNum) -> Option<Self> {
        Self::from_generators(ring, std::slice::from_ref(g))
    }

    /// `Z`-basis `{a/den, (b + cω)/den}`.
    pub fn basis(&self) -> [QuadNum; 2] {
        let den = BigRational::from_integer(self.den.clone());
        [
            QuadNum::new(BigRational::from_integer(self.a.clone()) / &den, BigRational::zero()),
            QuadNum::new(
                BigRational::from_integer(self.b.clone()) / &den,
                BigRational::from_integer(self.c.clone()) / &den,
            ),
        ]
    }

    /// Row-major HNF matrix `[a, 0, b, c]`.
    pub fn hnf_matrix(&self) -> [BigInt; 4] {
        [self.a.clone(), BigInt::zero(), self.b.clone(), self.c.clone()]
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.a.is_one() && self.b.is_zero() && self.c.is_one()
    }

    /// Absolute norm `[O : I]`, extended multiplicatively to fractional ideals.
    pub fn norm(&self) -> BigRational {
        BigRational::new(&self.a * &self.c, &self.den * &self.den)
    }

    pub fn contains(&self, x: &QuadNum) -> bool {
        let den = BigRational::from_integer(self.den.clone());
        let (xa, xb) = (&x.a * &den, &x.b * &den);
        if !xa.is_integer() || !xb.is_integer() {
            return false;
        }
        let (xa, xb) = (xa.to_integer(), xb.to_integer());
        if !xb.is_multiple_of(&self.c) {
            return false;
        }
        let k = &xb / &self.c;
        (xa - k * &self.b).is_multiple_of(&self.a)
    }

    pub fn contains_int(&self, x: &QuadInt) -> bool {
        self.contains(&QuadNum::from_int(x))
    }

    pub fn contains_ideal(&self, o: &QuadIdeal) -> bool {
        o.basis().iter().all(|g| self.contains(g))
    }

    pub fn add(&self, o: &QuadIdeal) -> QuadIdeal {
        let mut z: Vec<QuadNum> = self.basis().to_vec();
        z.extend(o.basis());
        Self::from_z_generators(self.ring, &z).expect("sum of nonzero ideals")
    }

    pub fn mul(&self, o: &QuadIdeal) -> QuadIdeal {
        let mut z = Vec::with_capacity(4);
        for x in self.basis() {
            for y in o.basis() {
                z.push(x.mul(&y, &self.ring));
            }
        }
        Self::from_z_generators(self.ring, &z).expect("product of nonzero ideals")
    }

    pub fn scale(&self, x: &QuadNum) -> Option<QuadIdeal> {
        if x.is_zero() {
            return None;
        }
        let z: Vec<QuadNum> = self.basis().iter().map(|g| g.mul(x, &self.ring)).collect();
        Self::from_z_generators(self.ring, &z)
    }

    pub fn conj(&self) -> QuadIdeal {
        let z: Vec<QuadNum> = self.basis().iter().map(|g| g.conj(&self.ring)).collect();
        Self::from_z_generators(self.ring, &z).expect("conjugate of a nonzero ideal")
    }

    /// `I^{-1} = conj(I) / N(I)`.
    pub fn inverse(&self) -> QuadIdeal {
        let n = self.norm();
        self.conj().scale(&QuadNum::from_rational(n.recip())).expect("nonzero norm")
    }

    /// `(I : J) = I·J^{-1}`.
    pub fn colon(&self, o: &QuadIdeal) -> QuadIdeal {
        self.mul(&o.inverse())
    }

    /// `I ∩ J = (I^{-1} + J^{-1})^{-1}` in a Dedekind domain.
    pub fn intersect(&self, o: &QuadIdeal) -> QuadIdeal {
        self.inverse().add(&o.inverse()).inverse()
    }

    pub fn pow(&self, e: u32) -> QuadIdeal {
        let mut r = self.ring.one_ideal();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Integral ideal `den·I` together with `den`.
    pub fn numerator(&self) -> QuadIdeal {
        QuadIdeal {
            ring: self.ring,
            den: BigInt::one(),
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
        }
    }

    /// A generator when the ideal is principal.
    pub fn principal_generator(&self) -> Option<QuadNum> {
        let g = reduced_minimum(&self.numerator());
        if QuadNum::from_int(&g).norm(&self.ring) == BigRational::from_integer(&self.a * &self.c) {
            Some(QuadNum::from_int(&g).scale(&BigRational::new(BigInt::one(), self.den.clone())))
        } else {
            None
        }
    }

    pub fn is_principal(&self) -> bool {
        self.principal_generator().is_some()
    }
}

impl fmt::Display for QuadIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [g1, g2] = self.basis();
        write!(f, "<{g1}, {g2}>")
    }
}

/// Nonzero element of least norm in an integral ideal, by Lagrange reduction
/// of the norm form on its `Z`-basis.
pub fn reduced_minimum(ideal: &QuadIdeal) -> QuadInt {
    let r = ideal.ring;
    let mut alpha = QuadInt::new(ideal.a.clone(), 0);
    let mut beta = QuadInt::new(ideal.b.clone(), ideal.c.clone());
    loop {
        let na = alpha.norm(&r);
        let nb = beta.norm(&r);
        if nb < na {
            std::mem::swap(&mut alpha, &mut beta);
            continue;
        }
        // B = Tr(α·conj β) is the cross term of the form
        let cross = alpha.mul(&beta.conj(&r), &r).trace(&r);
        // shift β by the integer k nearest to B / (2A)
        let two_na = BigInt::from(2) * &na;
        let k = (&cross + &na).div_floor(&two_na);
        if k.is_zero() {
            break;
        }
        beta = beta.sub(&alpha.scale(&k));
    }
    alpha
}

/// Primes of `O_d` above the rational prime `p`, sorted canonically.
pub fn primes_above(r: &QuadRing, p: u64) -> Vec<QuadIdeal> {
    let pb = BigInt::from(p);
    let roots: Vec<u64> = (0..p)
        .filter(|&x| {
            let v = (x as i128) * (x as i128) - (r.w1 as i128) * (x as i128) - r.w0 as i128;
            v.rem_euclid(p as i128) == 0
        })
        .collect();
    let mut out: Vec<QuadIdeal> = if roots.is_empty() {
        vec![QuadIdeal::from_parts(*r, BigInt::one(), pb.clone(), BigInt::zero(), pb)]
    } else {
        roots
            .iter()
            .map(|&x| {
                // (p, ω - x) has HNF {p, (-x mod p) + ω}
                let b = (p - x) % p;
                QuadIdeal::from_parts(*r, BigInt::one(), pb.clone(), BigInt::from(b), BigInt::one())
            })
            .collect()
    };
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Splitting {
    Split,
    Ramified,
    Inert,
}

pub fn splitting(r: &QuadRing, p: u64) -> Splitting {
    let ps = primes_above(r, p);
    if ps.len() == 2 {
        Splitting::Split
    } else if ps[0].a == ps[0].c {
        Splitting::Inert
    } else {
        Splitting::Ramified
    }
}

/// Is `P` a nonzero prime ideal of `O_d`?
pub fn is_prime_ideal(ideal: &QuadIdeal) -> bool {
    if !ideal.is_integral() || ideal.is_one() {
        return false;
    }
    let n = (&ideal.a * &ideal.c).to_u64();
    let Some((p, _)) = n.and_then(intutil::prime_power) else {
        return false;
    };
    primes_above(&ideal.ring, p).contains(ideal)
}

/// Prime factorization of a nonzero integral ideal, primes sorted canonically.
pub fn factor_ideal(ideal: &QuadIdeal) -> Result<Vec<(QuadIdeal, u32)>> {
    if !ideal.is_integral() {
        return Err(Error::NotIntegral);
    }
    let n = &ideal.a * &ideal.c;
    let mut rest = ideal.clone();
    let mut out = Vec::new();
    for (p, _) in intutil::factor_bigint(&n)? {
        for prime in primes_above(&ideal.ring, p) {
            let mut e = 0;
            while prime.contains_ideal(&rest) && !rest.is_one() {
                rest = rest.colon(&prime);
                e += 1;
            }
            if e > 0 {
                out.push((prime, e));
            }
        }
    }
    debug_assert!(rest.is_one());
    Ok(out)
}

fn integral_valuation(ideal: &QuadIdeal, prime: &QuadIdeal) -> i64 {
    let mut i = ideal.clone();
    let mut v = 0;
    while !i.is_one() && prime.contains_ideal(&i) {
        i = i.colon(prime);
        v += 1;
    }
    v
}

/// Exponent of the prime `P` in the fractional ideal `I`.
pub fn valuation(ideal: &QuadIdeal, prime: &QuadIdeal) -> i64 {
    let den = QuadIdeal::principal(ideal.ring, &QuadNum::from_int(&QuadInt::new(ideal.den.clone(), 0)))
        .expect("positive denominator");
    integral_valuation(&ideal.numerator(), prime) - integral_valuation(&den, prime)
}

/// A local uniformizer at `P`: an element of `P` outside `P²`.
pub fn uniformizer(prime: &QuadIdeal) -> QuadInt {
    let p2 = prime.mul(prime);
    prime
        .basis()
        .into_iter()
        .chain(std::iter::once(prime.basis()[0].add(&prime.basis()[1])))
        .filter_map(|x| x.to_int())
        .find(|x| !p2.contains_int(x))
        .expect("P is not contained in P^2")
}

/// Finite abelian group by invariant factors `d_1 | d_2 | ...` (all > 1).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct AbelianGroup {
    pub invariants: Vec<u64>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { invariants: vec![] }
    }

    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    /// Direct sum, re-normalized to invariant factors.
    pub fn direct_sum(&self, o: &AbelianGroup) -> AbelianGroup {
        let mut prime_powers: Vec<(u64, u32)> = Vec::new();
        for &n in self.invariants.iter().chain(o.invariants.iter()) {
            prime_powers.extend(intutil::factor_u64(n));
        }
        AbelianGroup::from_prime_powers(prime_powers)
    }

    fn from_prime_powers(mut pp: Vec<(u64, u32)>) -> AbelianGroup {
        // group the exponents per prime, largest first, and multiply across primes
        pp.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let mut per_prime: Vec<Vec<u64>> = Vec::new();
        let mut last = 0;
        for (p, e) in pp {
            if p != last {
                per_prime.push(Vec::new());
                last = p;
            }
            per_prime.last_mut().unwrap().push(p.pow(e));
        }
        let len = per_prime.iter().map(|v| v.len()).max().unwrap_or(0);
        let mut inv: Vec<u64> = (0..len)
            .map(|i| per_prime.iter().map(|v| v.get(i).copied().unwrap_or(1)).product())
            .collect();
        inv.reverse();
        AbelianGroup { invariants: inv }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariants.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.invariants.iter().map(|n| format!("Z/{n}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

#[derive(Clone, Debug)]
pub struct ClassGroup {
    pub group: AbelianGroup,
    /// One small-norm integral representative per class, the trivial class first.
    pub representatives: Vec<QuadIdeal>,
    /// Nonprincipal prime ideals below the Minkowski bound generating the group.
    pub generators: Vec<QuadIdeal>,
}

fn same_class(a: &QuadIdeal, b: &QuadIdeal) -> bool {
    a.colon(b).is_principal()
}

/// Integral ideal of small norm in the class of `I`.
pub fn reduce_in_class(ideal: &QuadIdeal) -> QuadIdeal {
    let i = ideal.numerator();
    let alpha = reduced_minimum(&i);
    // (α) = I·J, and conj(J) = conj(α)·I / N(I) lies in the class of I
    let n = i.norm();
    i.scale(&QuadNum::from_int(&alpha.conj(&i.ring)).scale(&n.recip()))
        .expect("α nonzero")
}

pub fn minkowski_bound(r: &QuadRing) -> f64 {
    2.0 / std::f64::consts::PI * (r.discriminant().unsigned_abs() as f64).sqrt()
}

pub fn class_group(d: i64, bound: u64) -> Result<ClassGroup> {
    if d.unsigned_abs() > bound {
        return Err(Error::BoundExceeded { d: d.unsigned_abs(), bound });
    }
    let r = QuadRing::new(d)?;
    let mk = minkowski_bound(&r).floor() as u64;
    let mut gens: Vec<QuadIdeal> = Vec::new();
    for p in 2..=mk {
        if intutil::is_prime(p) {
            for q in primes_above(&r, p) {
                if !q.is_principal() {
                    gens.push(q);
                }
            }
        }
    }
    let mut reps: Vec<QuadIdeal> = vec![r.one_ideal()];
    let mut queue = 0;
    while queue < reps.len() {
        let cur = reps[queue].clone();
        queue += 1;
        for g in &gens {
            let next = reduce_in_class(&cur.mul(g));
            if !reps.iter().any(|x| same_class(x, &next)) {
                reps.push(next);
            }
        }
    }
    let h = reps.len() as u64;
    // |G[q^j]| for each prime q | h determines the q-primary part
    let mut pp: Vec<(u64, u32)> = Vec::new();
    for (q, e) in intutil::factor_u64(h) {
        let mut prev = 1u64;
        let mut j = 1;
        let mut counts: Vec<u32> = Vec::new();
        while prev < q.pow(e) {
            let qj = q.pow(j);
            let cnt = reps.iter().filter(|x| x.pow(qj as u32).is_principal()).count() as u64;
            let mut k = 0;
            let mut t = cnt / prev;
            while t > 1 {
                t /= q;
                k += 1;
            }
            counts.push(k);
            prev = cnt;
            j += 1;
        }
        // counts[j-1] = number of cyclic factors of order ≥ q^j
        for (j, &c) in counts.iter().enumerate() {
            let next = counts.get(j + 1).copied().unwrap_or(0);
            for _ in 0..(c - next) {
                pp.push((q, j as u32 + 1));
            }
        }
    }
    Ok(ClassGroup { group: AbelianGroup::from_prime_powers(pp), representatives: reps, generators: gens })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(d: i64) -> QuadRing {
        QuadRing::new(d).unwrap()
    }

    fn q(x: i64, y: i64) -> QuadNum {
        QuadNum::from_int(&QuadInt::new(x, y))
    }

    /// Class number by counting reduced primitive positive definite forms of
    /// the field discriminant.
    fn class_number_by_forms(d: i64) -> u64 {
        let disc = ring(d).discriminant();
        let mut h = 0;
        let mut a = 1i64;
        while 3 * a * a <= -disc {
            for b in -a + 1..=a {
                let num = b * b - disc;
                if num % (4 * a) != 0 {
                    continue;
                }
                let c = num / (4 * a);
                if c < a || (c == a && b < 0) {
                    continue;
                }
                if a.gcd(&b).gcd(&c) == 1 {
                    h += 1;
                }
            }
            a += 1;
        }
        h
    }

    /// Principality by searching the element box of a fixed norm.
    fn brute_principal(i: &QuadIdeal) -> bool {
        let r = i.ring;
        let n = (&i.a * &i.c).to_i64().unwrap();
        let lim = 2 * (n as f64).sqrt() as i64 + 2;
        for x in -lim..=lim {
            for y in -lim..=lim {
                let e = QuadInt::new(x, y);
                if e.norm(&r) == BigInt::from(n) && i.contains_int(&e) {
                    return true;
                }
            }
        }
        false
    }

    /// All integral ideals of norm `n`, by checking every HNF for ω-stability.
    fn ideals_of_norm(r: &QuadRing, n: i64) -> Vec<QuadIdeal> {
        let mut out = Vec::new();
        for a in 1..=n {
            if n % a != 0 {
                continue;
            }
            let c = n / a;
            for b in 0..a {
                if let Ok(i) = QuadIdeal::from_hnf(*r, 1.into(), a.into(), b.into(), c.into()) {
                    if i.a == BigInt::from(a) && i.c == BigInt::from(c) {
                        out.push(i);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn norm_of_one_plus_sqrt_minus_five() {
        let r = ring(-5);
        assert_eq!(QuadInt::new(1, 1).norm(&r), BigInt::from(6));
        // (1+√-5)(1-√-5) = 6 computed directly
        let prod = QuadInt::new(1, 1).mul(&QuadInt::new(1, -1), &r);
        assert_eq!(prod, QuadInt::new(6, 0));
    }

    #[test]
    fn ramified_prime_squares_to_two() {
        let r = ring(-5);
        let p2 = QuadIdeal::from_generators(r, &[q(2, 0), q(1, 1)]).unwrap();
        assert_eq!(p2.norm(), BigRational::from_integer(2.into()));
        assert!(!p2.is_principal());
        assert!(!brute_principal(&p2));
        let sq = p2.mul(&p2);
        assert_eq!(sq, QuadIdeal::principal(r, &q(2, 0)).unwrap());
    }

    #[test]
    fn inverse_matches_conjugate_over_norm_and_cyclic_intersection() {
        let r = ring(-5);
        let p = QuadIdeal::from_generators(r, &[q(2, 0), q(1, 1)]).unwrap();
        let inv = p.inverse();
        assert!(p.mul(&inv).is_one());
        // 2·P^{-1} = conj(P)
        assert_eq!(inv.scale(&q(2, 0)).unwrap(), p.conj());
        // oracle: (1/2)O ∩ (1/(1+√-5))O
        let a = QuadIdeal::principal(r, &q(2, 0).inv(&r).unwrap()).unwrap();
        let b = QuadIdeal::principal(r, &q(1, 1).inv(&r).unwrap()).unwrap();
        assert_eq!(lattice_intersection(&a, &b), inv);
    }

    /// Lattice intersection by membership in a box: both lattices contain
    /// `m·Z²` for an integer `m`, so the intersection is spanned by members
    /// of a small box.
    fn lattice_intersection(a: &QuadIdeal, b: &QuadIdeal) -> QuadIdeal {
        let den = a.den.lcm(&b.den);
        let bound = (&a.a * &a.c).max(&b.a * &b.c).to_i64().unwrap() * 2;
        let d = BigRational::from_integer(den.clone());
        let mut gens = Vec::new();
        for x in -bound..=bound {
            for y in -bound..=bound {
                let e = QuadNum::new(BigRational::from_integer(x.into()) / &d, BigRational::from_integer(y.into()) / &d);
                if !e.is_zero() && a.contains(&e) && b.contains(&e) {
                    gens.push(e);
                }
            }
        }
        QuadIdeal::from_z_generators(a.ring, &gens).unwrap()
    }

    #[test]
    fn intersection_matches_lattice_oracle() {
        let r = ring(-5);
        let p2 = QuadIdeal::from_generators(r, &[q(2, 0), q(1, 1)]).unwrap();
        let p3 = QuadIdeal::from_generators(r, &[q(3, 0), q(1, 1)]).unwrap();
        let i = p2.mul(&p2).mul(&p3);
        let j = p2.mul(&p3.conj());
        assert_eq!(i.intersect(&j), lattice_intersection(&i, &j));
        assert_eq!(i.intersect(&j), p2.mul(&p2).mul(&p3).mul(&p3.conj()));
    }

    #[test]
    fn factor_six_in_minus_five() {
        let r = ring(-5);
        let six = QuadIdeal::principal(r, &q(6, 0)).unwrap();
        let f = factor_ideal(&six).unwrap();
        let p2 = QuadIdeal::from_generators(r, &[q(2, 0), q(1, 1)]).unwrap();
        let p3 = QuadIdeal::from_generators(r, &[q(3, 0), q(1, 1)]).unwrap();
        let p3c = QuadIdeal::from_generators(r, &[q(3, 0), q(1, -1)]).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.contains(&(p2, 2)));
        assert!(f.contains(&(p3, 1)));
        assert!(f.contains(&(p3c, 1)));
        // norm oracle: N(6) = 36 = 2^2 3^2
        let total: BigRational = f.iter().map(|(p, e)| p.norm().pow(*e as i32)).product();
        assert_eq!(total, BigRational::from_integer(36.into()));
    }

    #[test]
    fn splitting_types() {
        let r = ring(-5);
        assert_eq!(splitting(&r, 2), Splitting::Ramified);
        assert_eq!(splitting(&r, 3), Splitting::Split);
        assert_eq!(splitting(&r, 11), Splitting::Inert);
        let g = ring(-1);
        assert_eq!(splitting(&g, 5), Splitting::Split);
        assert_eq!(splitting(&g, 3), Splitting::Inert);
    }

    #[test]
    fn principality_agrees_with_brute_force() {
        for d in [-1i64, -2, -3, -5, -6, -15, -23, -26] {
            let r = ring(d);
            for n in 1..=12 {
                for i in ideals_of_norm(&r, n) {
                    assert_eq!(i.is_principal(), brute_principal(&i), "d={d} {i}");
                }
            }
        }
    }

    #[test]
    fn class_numbers_match_form_count() {
        for d in [-1i64, -2, -3, -5, -6, -7, -10, -11, -14, -15, -17, -21, -23, -26, -30, -31, -47, -71, -199] {
            let cg = class_group(d, 200).unwrap();
            assert_eq!(cg.group.order(), class_number_by_forms(d), "d = {d}");
        }
    }

    #[test]
    fn class_group_structures() {
        assert!(class_group(-1, 200).unwrap().group.is_trivial());
        assert_eq!(class_group(-5, 200).unwrap().group.invariants, vec![2]);
        assert_eq!(class_group(-23, 200).unwrap().group.invariants, vec![3]);
        // Cl(Q(√-21)) = Z/2 x Z/2, Cl(Q(√-14)) = Z/4
        assert_eq!(class_group(-21, 200).unwrap().group.invariants, vec![2, 2]);
        assert_eq!(class_group(-14, 200).unwrap().group.invariants, vec![4]);
        assert!(matches!(class_group(-201, 200), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn class_representatives_by_norm_enumeration() {
        // independent count: classes of all ideals of norm up to the Minkowski bound,
        // equivalence decided by brute-force principality of I·conj(J)
        for d in [-5i64, -23, -14] {
            let r = ring(d);
            let mk = minkowski_bound(&r).floor() as i64;
            let mut classes: Vec<QuadIdeal> = Vec::new();
            for n in 1..=mk {
                for i in ideals_of_norm(&r, n) {
                    if !classes.iter().any(|c| brute_principal(&i.mul(&c.conj()))) {
                        classes.push(i);
                    }
                }
            }
            assert_eq!(classes.len() as u64, class_group(d, 200).unwrap().group.order(), "d = {d}");
        }
    }

    #[test]
    fn uniformizer_has_valuation_one() {
        let r = ring(-5);
        for p in [2u64, 3, 7] {
            for prime in primes_above(&r, p) {
                let u = uniformizer(&prime);
                let f = factor_ideal(&QuadIdeal::principal(r, &QuadNum::from_int(&u)).unwrap()).unwrap();
                let e = f.iter().find(|(q, _)| *q == prime).map(|x| x.1);
                assert_eq!(e, Some(1));
            }
        }
    }

    #[test]
    fn hnf_rejects_non_ideals() {
        let r = ring(-5);
        assert!(QuadIdeal::from_hnf(r, 1.into(), 2.into(), 0.into(), 1.into()).is_err());
        assert!(QuadIdeal::from_hnf(r, 1.into(), 2.into(), 1.into(), 1.into()).is_ok());
    }
}
