//! Rational functions over `F_p` and fractional ideals of `F_p[X,Y]`.
//!
//! A nonzero fractional ideal is `(1/den)·J` with `J` an integral ideal given by
//! its reduced Gröbner basis, `den` monic, and `gcd(den, gcd(J)) = 1`.

use std::fmt;

use crate::groebner;
use crate::poly::Poly;
use crate::upoly::poly_gcd;

/// `num / den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let p = num.modulus();
        if num.is_zero() {
            return Some(RatFun { num, den: Poly::one(p) });
        }
        let g = poly_gcd(&num, &den);
        let mut n = num.div_exact(&g).expect("gcd divides");
        let d = den.div_exact(&g).expect("gcd divides");
        let lc = d.leading_coeff();
        let inv = crate::poly::inv_mod(lc, p);
        n = n.scale(inv);
        Some(RatFun { num: n, den: d.monic() })
    }

    pub fn from_poly(f: Poly) -> Self {
        let p = f.modulus();
        RatFun { num: f, den: Poly::one(p) }
    }

    pub fn zero(p: u32) -> Self {
        Self::from_poly(Poly::zero(p))
    }

    pub fn one(p: u32) -> Self {
        Self::from_poly(Poly::one(p))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn modulus(&self) -> u32 {
        self.num.modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, o: &RatFun) -> RatFun {
        RatFun::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den)).unwrap()
    }

    pub fn neg(&self) -> RatFun {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &RatFun) -> RatFun {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFun) -> RatFun {
        RatFun::new(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }

    pub fn inv(&self) -> Option<RatFun> {
        RatFun::new(self.den.clone(), self.num.clone())
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyIdeal {
    den: Poly,
    basis: Vec<Poly>,
}

fn basis_gcd(basis: &[Poly]) -> Poly {
    let p = basis[0].modulus();
    basis.iter().fold(Poly::zero(p), |g, f| poly_gcd(&g, f))
}

fn scale_basis(basis: &[Poly], f: &Poly) -> Vec<Poly> {
    groebner::groebner(&basis.iter().map(|g| g.mul(f)).collect::<Vec<_>>())
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    a.mul(b).div_exact(&poly_gcd(a, b)).unwrap().monic()
}

impl PolyIdeal {
    /// Canonical form of `(1/den)·⟨gens⟩`; `None` for the zero ideal.
    pub fn new(den: Poly, gens: &[Poly]) -> Option<Self> {
        assert!(!den.is_zero());
        let basis = groebner::groebner(gens);
        if basis.is_empty() {
            return None;
        }
        let den = den.monic();
        let g = poly_gcd(&basis_gcd(&basis), &den);
        if g.is_one() {
            return Some(PolyIdeal { den, basis });
        }
        let gens: Vec<Poly> = basis.iter().map(|b| b.div_exact(&g).unwrap()).collect();
        Some(PolyIdeal { den: den.div_exact(&g).unwrap().monic(), basis: groebner::groebner(&gens) })
    }

    /// Ideal generated by rational functions; `None` if all are zero.
    pub fn from_generators(p: u32, gens: &[RatFun]) -> Option<Self> {
        let den = gens.iter().fold(Poly::one(p), |acc, g| lcm(&acc, g.den()));
        let nums: Vec<Poly> = gens
            .iter()
            .map(|g| g.num().mul(&den.div_exact(g.den()).unwrap()))
            .collect();
        PolyIdeal::new(den, &nums)
    }

    /// Validates raw data (e.g. from JSON) and canonicalizes it.
    pub fn from_parts(den: Poly, basis: Vec<Poly>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        PolyIdeal::new(den, &basis)
    }

    pub fn unit(p: u32) -> Self {
        PolyIdeal { den: Poly::one(p), basis: vec![Poly::one(p)] }
    }

    pub fn modulus(&self) -> u32 {
        self.den.modulus()
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_unit(&self) -> bool {
        self.den.is_one() && groebner::is_unit_ideal(&self.basis)
    }

    /// Generators as rational functions.
    pub fn generators(&self) -> Vec<RatFun> {
        self.basis
            .iter()
            .map(|b| RatFun::new(b.clone(), self.den.clone()).unwrap())
            .collect()
    }

    /// Both ideals over the common denominator `lcm(den1, den2)`.
    fn common(&self, o: &PolyIdeal) -> (Poly, Vec<Poly>, Vec<Poly>) {
        let l = lcm(&self.den, &o.den);
        let a = scale_basis(&self.basis, &l.div_exact(&self.den).unwrap());
        let b = scale_basis(&o.basis, &l.div_exact(&o.den).unwrap());
        (l, a, b)
    }

    pub fn add(&self, o: &PolyIdeal) -> PolyIdeal {
        let (l, a, b) = self.common(o);
        PolyIdeal::new(l, &groebner::sum(&a, &b)).unwrap()
    }

    pub fn mul(&self, o: &PolyIdeal) -> PolyIdeal {
        PolyIdeal::new(self.den.mul(&o.den), &groebner::product(&self.basis, &o.basis)).unwrap()
    }

    pub fn intersect(&self, o: &PolyIdeal) -> PolyIdeal {
        let (l, a, b) = self.common(o);
        PolyIdeal::new(l, &groebner::intersect(&a, &b)).unwrap()
    }

    pub fn scale(&self, x: &RatFun) -> Option<PolyIdeal> {
        if x.is_zero() {
            return None;
        }
        PolyIdeal::new(self.den.mul(x.den()), &scale_basis(&self.basis, x.num()))
    }

    pub fn contains(&self, x: &RatFun) -> bool {
        // x ∈ J/den ⟺ den·x ∈ J
        let Some(h) = self.den.mul(x.num()).div_exact(x.den()) else {
            return false;
        };
        groebner::contains(&self.basis, &h)
    }

    pub fn contains_ideal(&self, o: &PolyIdeal) -> bool {
        o.generators().iter().all(|g| self.contains(g))
    }

    /// `(I : K) = ∩_k (1/k)·I` over generators `k` of `K`.
    pub fn colon(&self, o: &PolyIdeal) -> PolyIdeal {
        let mut out: Option<PolyIdeal> = None;
        for g in o.generators() {
            let part = self.scale(&g.inv().unwrap()).unwrap();
            out = Some(match out {
                None => part,
                Some(acc) => acc.intersect(&part),
            });
        }
        out.expect("nonzero ideal has a generator")
    }

    pub fn inverse(&self) -> PolyIdeal {
        PolyIdeal::unit(self.modulus()).colon(self)
    }

    pub fn pow(&self, e: u32) -> PolyIdeal {
        let mut r = PolyIdeal::unit(self.modulus());
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Generator of a principal ideal.
    pub fn principal_generator(&self) -> Option<RatFun> {
        groebner::principal_generator(&self.basis).map(|g| RatFun::new(g.clone(), self.den.clone()).unwrap())
    }

    /// `gcd` of the numerator basis divided by the denominator: `(1/g)·R`
    /// generates the divisorial hull of the ideal.
    pub fn gcd_generator(&self) -> RatFun {
        RatFun::new(basis_gcd(&self.basis), self.den.clone()).unwrap()
    }
}

impl fmt::Display for PolyIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// Is `F_p[X,Y] / J` a finite field? `J` is given by a reduced Gröbner basis.
/// Decided by checking that multiplication by every nonzero residue is
/// injective on the finite quotient.
pub fn quotient_is_field(basis: &[Poly]) -> bool {
    if basis.is_empty() || groebner::is_unit_ideal(basis) || groebner::quotient_dimension(basis).is_none() {
        return false;
    }
    let p = basis[0].modulus();
    let std = groebner::standard_monomials(basis);
    let n = std.len();
    let coords = |f: &Poly| -> Vec<u32> {
        let r = f.reduce(basis);
        std.iter().map(|m| r.coeff(m)).collect()
    };
    let total = (p as u64).pow(n as u32);
    for code in 1..total {
        let mut rem = code;
        let a = Poly::from_terms(
            p,
            std.iter().map(|m| {
                let c = (rem % p as u64) as i64;
                rem /= p as u64;
                (*m, c)
            }),
        );
        let rows: Vec<Vec<u32>> = std.iter().map(|m| coords(&a.mul(&Poly::monomial(p, *m, 1)))).collect();
        if rank_mod_p(rows, p) < n {
            return false;
        }
    }
    true
}

fn rank_mod_p(mut m: Vec<Vec<u32>>, p: u32) -> usize {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = crate::poly::inv_mod(m[rank][c], p);
        for i in 0..rows {
            if i != rank && m[i][c] != 0 {
                let f = crate::poly::mul_mod(m[i][c], inv, p);
                for j in 0..cols {
                    let sub = crate::poly::mul_mod(f, m[rank][j], p);
                    m[i][j] = (m[i][j] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}
