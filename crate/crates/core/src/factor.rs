//! Prime factorization of elements and u-ideals as canonical u-products.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::ideal::{AtomIdeal, AtomPrime, FracIdeal, PrimeRef};
use crate::intutil;
use crate::polyfactor::{self, DEFAULT_DEGREE_CAP};
use crate::quad;
use crate::ring::{Atom, Element, RingDesc, Scalar};
use crate::star::{self, closure, StarOp};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCert {
    pub input: FracIdeal,
    /// Sorted by `(component, prime)`; each prime appears once.
    pub factors: Vec<(PrimeRef, u32)>,
    pub canonicalized: bool,
    /// `U` for u-products, `D` for the plain product of the zero factorization.
    pub product_op: StarOp,
    pub recomputed: FracIdeal,
    pub verified: bool,
}

impl FactorCert {
    fn build(input: FracIdeal, factors: Vec<(PrimeRef, u32)>, op: StarOp) -> FactorCert {
        let factors = canonicalize(input.ring(), factors);
        let recomputed = recombine(input.ring(), &factors, op);
        let verified = recomputed == input;
        FactorCert { input, factors, canonicalized: true, product_op: op, recomputed, verified }
    }
}

/// `(∏ Pᵢ^eᵢ)_op`.
pub fn recombine(ring: &RingDesc, factors: &[(PrimeRef, u32)], op: StarOp) -> FracIdeal {
    let prod = factors
        .iter()
        .fold(FracIdeal::unit(ring), |acc, (p, e)| acc.product(&p.to_ideal(ring).pow(*e)).expect("same ring"));
    closure(op, &prod)
}

/// Merges repeated primes, caps SPR exponents at the nilpotency index and
/// zero-prime exponents at 1, and drops primes of a component whose zero prime
/// is present, since `(0)·Q` u-closes to `(0)` there.
pub fn canonicalize(ring: &RingDesc, factors: Vec<(PrimeRef, u32)>) -> Vec<(PrimeRef, u32)> {
    let mut merged: BTreeMap<PrimeRef, u32> = BTreeMap::new();
    for (p, e) in factors {
        if e > 0 {
            *merged.entry(p).or_insert(0) += e;
        }
    }
    let zero_components: Vec<usize> = merged
        .keys()
        .filter(|p| p.prime == AtomPrime::ZeroPrime)
        .map(|p| p.component)
        .collect();
    merged
        .into_iter()
        .filter(|(p, _)| p.prime == AtomPrime::ZeroPrime || !zero_components.contains(&p.component))
        .map(|(p, e)| {
            let e = match (&p.prime, ring.atom(p.component)) {
                (AtomPrime::ZeroPrime, _) => 1,
                (AtomPrime::SprMax, Atom::ModPrimePower { k, .. }) => e.min(*k),
                _ => e,
            };
            (p, e)
        })
        .collect()
}

fn factor_part(c: usize, a: &Atom, part: &AtomIdeal, cap: u32) -> Result<Vec<(PrimeRef, u32)>> {
    let at = |p: AtomPrime| PrimeRef::new(c, p);
    let mut out = Vec::new();
    match (a, part) {
        (Atom::ModPrimePower { .. }, AtomIdeal::Spr(j)) => {
            if *j > 0 {
                out.push((at(AtomPrime::SprMax), *j));
            }
        }
        (_, AtomIdeal::Zero) => out.push((at(AtomPrime::ZeroPrime), 1)),
        (_, AtomIdeal::Whole) => {}
        (Atom::Integer, AtomIdeal::Int(q)) => {
            if !q.is_integer() {
                return Err(Error::NotIntegral);
            }
            for (p, e) in intutil::factor_bigint(&q.to_integer())? {
                out.push((at(AtomPrime::IntegerPrime(p)), e));
            }
        }
        (Atom::Quadratic(_), AtomIdeal::Quad(q)) => {
            for (p, e) in quad::factor_ideal(q)? {
                out.push((at(AtomPrime::QuadPrime(p)), e));
            }
        }
        (Atom::Poly { .. }, AtomIdeal::Poly(q)) => {
            let g = q.principal_generator().ok_or(Error::NotUClosed)?;
            if !g.is_poly() {
                return Err(Error::NotIntegral);
            }
            if !g.num().is_constant() {
                for (f, e) in polyfactor::factor(g.num(), cap)?.factors {
                    out.push((at(AtomPrime::PolyPrime(f)), e));
                }
            }
        }
        _ => unreachable!("part kind matches atom"),
    }
    Ok(out)
}

fn factor_parts(i: &FracIdeal, cap: u32) -> Result<Vec<(PrimeRef, u32)>> {
    let mut out = Vec::new();
    for (c, (part, a)) in i.parts().iter().zip(i.ring().atoms()).enumerate() {
        out.extend(factor_part(c, a, part, cap)?);
    }
    Ok(out)
}

pub fn factor_principal(r: &RingDesc, a: &Element) -> Result<FactorCert> {
    factor_principal_capped(r, a, DEFAULT_DEGREE_CAP)
}

/// As [`factor_principal`] with an explicit total-degree cap for polynomial components.
pub fn factor_principal_capped(r: &RingDesc, a: &Element, cap: u32) -> Result<FactorCert> {
    if r.is_unit(a) {
        return Err(Error::UnitElement);
    }
    let input = FracIdeal::principal(r, &a.to_fraction());
    let factors = factor_parts(&input, cap)?;
    Ok(FactorCert::build(input, factors, StarOp::U))
}

/// `(0)` as a plain product of the minimal primes.
pub fn factor_zero(r: &RingDesc) -> FactorCert {
    let factors = r
        .atoms()
        .iter()
        .enumerate()
        .map(|(c, a)| match a {
            Atom::ModPrimePower { k, .. } => (PrimeRef::new(c, AtomPrime::SprMax), *k),
            _ => (PrimeRef::new(c, AtomPrime::ZeroPrime), 1),
        })
        .collect();
    FactorCert::build(FracIdeal::zero(r), factors, StarOp::D)
}

fn check_u_ideal(i: &FracIdeal) -> Result<()> {
    if !i.is_integral() {
        return Err(Error::NotIntegral);
    }
    if closure(StarOp::U, i) != *i {
        return Err(Error::NotUClosed);
    }
    Ok(())
}

pub fn factor_u_ideal(i: &FracIdeal) -> Result<FactorCert> {
    factor_u_ideal_capped(i, DEFAULT_DEGREE_CAP)
}

pub fn factor_u_ideal_capped(i: &FracIdeal, cap: u32) -> Result<FactorCert> {
    check_u_ideal(i)?;
    if i.is_unit() {
        return Err(Error::IdealIsWholeRing);
    }
    let factors = factor_parts(i, cap)?;
    Ok(FactorCert::build(i.clone(), factors, StarOp::U))
}

/// Every u-ideal containing the integral u-ideal `I`, as u-closed subproducts
/// of its factorization, in lexicographic order of exponent vectors.
pub fn u_divisors(i: &FracIdeal) -> Result<Vec<FracIdeal>> {
    check_u_ideal(i)?;
    let ring = i.ring();
    if i.is_unit() {
        return Ok(vec![i.clone()]);
    }
    let infinite = i
        .parts()
        .iter()
        .zip(ring.atoms())
        .any(|(p, a)| *p == AtomIdeal::Zero && a.krull_dim() > 0);
    if infinite {
        return Err(Error::InfiniteDivisorFamily);
    }
    let cert = factor_u_ideal(i)?;
    let mut exps = vec![0u32; cert.factors.len()];
    let mut out = Vec::new();
    loop {
        let sub: Vec<(PrimeRef, u32)> =
            cert.factors.iter().zip(&exps).map(|((p, _), e)| (p.clone(), *e)).collect();
        out.push(recombine(ring, &sub, StarOp::U));
        let mut k = 0;
        loop {
            if k == exps.len() {
                return Ok(out);
            }
            if exps[k] < cert.factors[k].1 {
                exps[k] += 1;
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

/// A u-invertible prime contained in the nonprincipal prime `P`.
pub fn find_u_invertible_prime_below(r: &RingDesc, p: &PrimeRef) -> Result<PrimeRef> {
    if p.is_principal(r) {
        return Err(Error::PrimeIsPrincipal);
    }
    let c = p.component;
    let x = match &p.prime {
        AtomPrime::QuadPrime(q) => {
            Scalar::Quad(quad::QuadNum::from_rational(BigRational::from_integer(q.a.clone() * &q.den)))
        }
        AtomPrime::PolyMaximal(m) => {
            let g = m.basis().last().expect("nonzero maximal ideal").clone();
            crate::ring::poly(g)
        }
        _ => return Err(Error::PrimeIsPrincipal),
    };
    let a = r.embed(c, x, true);
    if !r.is_regular(&a) {
        return Err(Error::NoRegularElement);
    }
    let cap = match &a.parts()[c] {
        Scalar::Fun(f) => f.num().degree().unwrap_or(0).max(DEFAULT_DEGREE_CAP),
        _ => DEFAULT_DEGREE_CAP,
    };
    let cert = factor_principal_capped(r, &a, cap)?;
    let big = p.to_ideal(r);
    cert.factors
        .into_iter()
        .map(|(q, _)| q)
        .find(|q| {
            let qi = q.to_ideal(r);
            big.contains_ideal(&qi).unwrap_or(false) && star::is_star_invertible(&qi, StarOp::U)
        })
        .ok_or(Error::NoRegularElement)
}

/// `a = regular_part · zerodiv_part` with the zero-divisor part a product of
/// prime elements generating minimal primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegZeroSplit {
    pub a: Element,
    pub regular_part: Element,
    pub zerodiv_part: Element,
    /// Prime elements with multiplicity; each generates a minimal prime.
    pub prime_elements: Vec<(Element, u32)>,
}

pub fn split_regular_zero(r: &RingDesc, a: &Element) -> RegZeroSplit {
    let mut regular = Vec::new();
    let mut zerodiv = Vec::new();
    let mut primes = Vec::new();
    for (c, (at, x)) in r.atoms().iter().zip(a.parts()).enumerate() {
        match at {
            Atom::ModPrimePower { p, .. } => {
                let j = at.spr_valuation(x);
                let Scalar::Res(v) = x else { unreachable!() };
                if j == 0 {
                    regular.push(x.clone());
                    zerodiv.push(at.one());
                } else {
                    let pj = p.pow(j);
                    let u = if *v == 0 { 1 } else { v / pj };
                    regular.push(Scalar::Res(u));
                    zerodiv.push(at.pow(&Scalar::Res(*p), j));
                    primes.push((r.embed(c, Scalar::Res(*p), true), j));
                }
            }
            _ => {
                if at.is_zero(x) {
                    regular.push(at.one());
                    zerodiv.push(at.zero());
                    primes.push((r.embed(c, at.zero(), true), 1));
                } else {
                    regular.push(x.clone());
                    zerodiv.push(at.one());
                }
            }
        }
    }
    RegZeroSplit {
        a: a.clone(),
        regular_part: r.element(regular).expect("integral"),
        zerodiv_part: r.element(zerodiv).expect("integral"),
        prime_elements: primes,
    }
}

/// `∏(eᵢ+1)` over the factors of a certificate: the number of u-divisors.
pub fn divisor_count(cert: &FactorCert) -> u64 {
    cert.factors.iter().map(|(_, e)| u64::from(*e) + 1).product()
}

/// Integer value of an integral rational, used by tests and generators.
pub fn small_int(q: &BigRational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal_from_generators;
    use crate::poly::{Poly, VAR_X, VAR_Y};
    use crate::quad::{QuadIdeal, QuadRing};
    use crate::ring::{int, poly, quad};

    fn ring(atoms: Vec<Atom>) -> RingDesc {
        RingDesc::new(atoms).unwrap()
    }

    fn z_z4() -> RingDesc {
        ring(vec![Atom::Integer, Atom::mod_prime_power(2, 2).unwrap()])
    }

    fn int_prime(c: usize, p: u64) -> PrimeRef {
        PrimeRef::new(c, AtomPrime::IntegerPrime(p))
    }

    fn quad_prime(d: i64, a: i64, b: i64, c: i64) -> QuadIdeal {
        QuadIdeal::from_hnf(QuadRing::new(d).unwrap(), 1.into(), a.into(), b.into(), c.into()).unwrap()
    }

    /// Direct product of the listed primes, independent of `recombine`.
    fn plain_product(r: &RingDesc, fs: &[(PrimeRef, u32)]) -> FracIdeal {
        let mut acc = FracIdeal::unit(r);
        for (p, e) in fs {
            for _ in 0..*e {
                acc = acc.product(&p.to_ideal(r)).unwrap();
            }
        }
        acc
    }

    #[test]
    fn split_examples() {
        let r = ring(vec![Atom::Integer, Atom::mod_prime_power(2, 3).unwrap(), Atom::Integer]);
        let a = r.element(vec![int(0), Scalar::Res(2), int(3)]).unwrap();
        let s = split_regular_zero(&r, &a);
        assert_eq!(s.regular_part, r.element(vec![int(1), Scalar::Res(1), int(3)]).unwrap());
        assert_eq!(s.zerodiv_part, r.element(vec![int(0), Scalar::Res(2), int(1)]).unwrap());
        assert_eq!(
            s.prime_elements,
            vec![
                (r.element(vec![int(0), Scalar::Res(1), int(1)]).unwrap(), 1),
                (r.element(vec![int(1), Scalar::Res(2), int(1)]).unwrap(), 1)
            ]
        );
        assert_eq!(r.mul(&s.regular_part, &s.zerodiv_part), a);
        assert!(r.is_regular(&s.regular_part));

        let zq = ring(vec![Atom::Integer, Atom::Rational]);
        let a = zq.element(vec![int(5), int(1)]).unwrap();
        let s = split_regular_zero(&zq, &a);
        assert_eq!(s.regular_part, a);
        assert!(s.prime_elements.is_empty());
        let a = zq.element(vec![int(1), int(0)]).unwrap();
        let s = split_regular_zero(&zq, &a);
        assert_eq!(s.regular_part, zq.one());
        assert_eq!(s.zerodiv_part, a);
        assert_eq!(s.prime_elements.len(), 1);
    }

    #[test]
    fn principal_examples() {
        let r = z_z4();
        let a = r.element(vec![int(6), Scalar::Res(2)]).unwrap();
        let cert = factor_principal(&r, &a).unwrap();
        let expected = vec![(int_prime(0, 2), 1), (int_prime(0, 3), 1), (PrimeRef::new(1, AtomPrime::SprMax), 1)];
        assert_eq!(cert.factors, expected);
        assert!(cert.verified);
        assert_eq!(closure(StarOp::U, &plain_product(&r, &expected)), FracIdeal::principal(&r, &a.to_fraction()));

        let o = ring(vec![Atom::quadratic(-5).unwrap()]);
        let cert = factor_principal(&o, &o.element(vec![quad(6, 0)]).unwrap()).unwrap();
        let p2 = quad_prime(-5, 2, 1, 1);
        let p3 = quad_prime(-5, 3, 1, 1);
        let p3c = quad_prime(-5, 3, 2, 1);
        let got: Vec<(QuadIdeal, u32)> = cert
            .factors
            .iter()
            .map(|(p, e)| match &p.prime {
                AtomPrime::QuadPrime(q) => (q.clone(), *e),
                _ => panic!(),
            })
            .collect();
        assert_eq!(got.len(), 3);
        assert!(got.contains(&(p2, 2)) && got.contains(&(p3, 1)) && got.contains(&(p3c, 1)));
        assert!(cert.verified);

        let zq = ring(vec![Atom::Integer, Atom::Rational]);
        let cert = factor_principal(&zq, &zq.element(vec![int(1), int(0)]).unwrap()).unwrap();
        assert_eq!(cert.factors, vec![(PrimeRef::new(1, AtomPrime::ZeroPrime), 1)]);
        assert!(cert.verified);

        assert_eq!(factor_principal(&zq, &zq.one()).unwrap_err(), Error::UnitElement);
    }

    #[test]
    fn degree_cap_is_enforced() {
        let f2 = ring(vec![Atom::poly(2).unwrap()]);
        let x = Poly::var(2, VAR_X);
        let a = f2.element(vec![poly(x.pow(9).add(&Poly::one(2)))]).unwrap();
        assert!(matches!(factor_principal(&f2, &a), Err(Error::DegreeCapExceeded { degree: 9, cap: 8 })));
        assert!(factor_principal_capped(&f2, &a, 9).unwrap().verified);
    }

    #[test]
    fn zero_factorizations() {
        let r = z_z4();
        let cert = factor_zero(&r);
        assert_eq!(
            cert.factors,
            vec![(PrimeRef::new(0, AtomPrime::ZeroPrime), 1), (PrimeRef::new(1, AtomPrime::SprMax), 2)]
        );
        assert!(cert.verified);
        // (1,2)^2 (0,1) = (0,0)
        let h = r.element(vec![int(1), Scalar::Res(2)]).unwrap();
        let z = r.element(vec![int(0), Scalar::Res(1)]).unwrap();
        assert!(r.is_zero(&r.mul(&r.pow(&h, 2), &z)));
        assert!(plain_product(&r, &cert.factors).is_zero());

        let z8 = ring(vec![Atom::mod_prime_power(2, 3).unwrap()]);
        assert_eq!(factor_zero(&z8).factors, vec![(PrimeRef::new(0, AtomPrime::SprMax), 3)]);
        let o = ring(vec![Atom::quadratic(-5).unwrap()]);
        assert_eq!(factor_zero(&o).factors, vec![(PrimeRef::new(0, AtomPrime::ZeroPrime), 1)]);
    }

    #[test]
    fn u_ideal_examples() {
        let o = ring(vec![Atom::quadratic(-5).unwrap()]);
        let p2 = quad_prime(-5, 2, 1, 1);
        let i = FracIdeal::from_parts(&o, vec![AtomIdeal::Quad(p2.clone())]).unwrap();
        assert_eq!(factor_u_ideal(&i).unwrap().factors, vec![(PrimeRef::new(0, AtomPrime::QuadPrime(p2)), 1)]);

        let f2 = ring(vec![Atom::poly(2).unwrap()]);
        let (x, y) = (Poly::var(2, VAR_X), Poly::var(2, VAR_Y));
        let i = ideal_from_generators(&f2, &[f2.fraction(vec![poly(x.pow(2).mul(&y))]).unwrap()]);
        assert_eq!(
            factor_u_ideal(&i).unwrap().factors,
            vec![(PrimeRef::new(0, AtomPrime::PolyPrime(y.clone())), 1), (PrimeRef::new(0, AtomPrime::PolyPrime(x.clone())), 2)]
        );

        let r = z_z4();
        let i = ideal_from_generators(&r, &[r.fraction(vec![int(12), Scalar::Res(2)]).unwrap()]);
        assert_eq!(
            factor_u_ideal(&i).unwrap().factors,
            vec![(int_prime(0, 2), 2), (int_prime(0, 3), 1), (PrimeRef::new(1, AtomPrime::SprMax), 1)]
        );

        let m = ideal_from_generators(&f2, &[f2.fraction(vec![poly(x)]).unwrap(), f2.fraction(vec![poly(y)]).unwrap()]);
        assert_eq!(factor_u_ideal(&m).unwrap_err(), Error::NotUClosed);
        let half = ideal_from_generators(&r, &[r.fraction(vec![crate::ring::rat(1, 2), Scalar::Res(1)]).unwrap()]);
        assert_eq!(factor_u_ideal(&half).unwrap_err(), Error::NotIntegral);
    }

    #[test]
    fn divisor_examples() {
        let r = z_z4();
        let i = ideal_from_generators(&r, &[r.fraction(vec![int(6), Scalar::Res(2)]).unwrap()]);
        let ds = u_divisors(&i).unwrap();
        assert_eq!(ds.len(), 8);
        for (n, d) in ds.iter().enumerate() {
            assert_eq!(closure(StarOp::U, d), *d);
            assert!(d.contains_ideal(&i).unwrap());
            assert!(!ds[..n].contains(d));
        }
        assert_eq!(u_divisors(&FracIdeal::unit(&r)).unwrap(), vec![FracIdeal::unit(&r)]);
        let z8 = ring(vec![Atom::mod_prime_power(2, 3).unwrap()]);
        let four = ideal_from_generators(&z8, &[z8.fraction(vec![Scalar::Res(4)]).unwrap()]);
        let ds = u_divisors(&four).unwrap();
        let parts: Vec<AtomIdeal> = ds.iter().map(|d| d.part(0).clone()).collect();
        assert_eq!(parts, vec![AtomIdeal::Spr(0), AtomIdeal::Spr(1), AtomIdeal::Spr(2)]);

        let zq = ring(vec![Atom::Integer, Atom::Rational]);
        let i = FracIdeal::from_parts(&zq, vec![AtomIdeal::Zero, AtomIdeal::Whole]).unwrap();
        assert_eq!(u_divisors(&i).unwrap_err(), Error::InfiniteDivisorFamily);
        let i = FracIdeal::from_parts(&zq, vec![AtomIdeal::Int(BigRational::from_integer(4.into())), AtomIdeal::Zero])
            .unwrap();
        assert_eq!(u_divisors(&i).unwrap().len(), 6);
    }

    #[test]
    fn u_invertible_primes_below() {
        let o = ring(vec![Atom::quadratic(-5).unwrap()]);
        let p2 = PrimeRef::new(0, AtomPrime::QuadPrime(quad_prime(-5, 2, 1, 1)));
        assert_eq!(find_u_invertible_prime_below(&o, &p2).unwrap(), p2);

        let f2 = ring(vec![Atom::poly(2).unwrap()]);
        let (x, y) = (Poly::var(2, VAR_X), Poly::var(2, VAR_Y));
        let m = ideal_from_generators(&f2, &[f2.fraction(vec![poly(x.clone())]).unwrap(), f2.fraction(vec![poly(y)]).unwrap()]);
        let mp = PrimeRef::from_ideal(&m).unwrap();
        assert_eq!(find_u_invertible_prime_below(&f2, &mp).unwrap(), PrimeRef::new(0, AtomPrime::PolyPrime(x)));

        let oz = ring(vec![Atom::quadratic(-5).unwrap(), Atom::Integer]);
        let p = PrimeRef::new(0, AtomPrime::QuadPrime(quad_prime(-5, 2, 1, 1)));
        assert_eq!(find_u_invertible_prime_below(&oz, &p).unwrap(), p);

        assert_eq!(find_u_invertible_prime_below(&oz, &int_prime(1, 3)).unwrap_err(), Error::PrimeIsPrincipal);
    }

    #[test]
    fn canonical_form_absorbs_primes_under_a_zero_prime() {
        let r = ring(vec![Atom::Integer, Atom::Integer]);
        let a = r.element(vec![int(0), int(1)]).unwrap();
        let b = r.element(vec![int(2), int(3)]).unwrap();
        let fa = factor_principal(&r, &a).unwrap().factors;
        let fb = factor_principal(&r, &b).unwrap().factors;
        let merged = canonicalize(&r, fa.into_iter().chain(fb).collect());
        assert_eq!(merged, factor_principal(&r, &r.mul(&a, &b)).unwrap().factors);
    }
}
