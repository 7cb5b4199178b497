//! Star operations `d, v, t, w, w′, u` and the predicates built on them.
//!
//! Closures are computed componentwise. Per atom:
//!
//! | op       | zero ideal | SPR atom   | field atom | other domain, nonzero |
//! |----------|------------|------------|------------|-----------------------|
//! | d        | itself     | itself     | itself     | itself                |
//! | v, t     | `(0)^-1^-1`| whole atom | whole      | double inverse        |
//! | u, w     | `(0)`      | itself     | itself     | double inverse        |
//! | w′       | as u       | whole atom | whole      | double inverse        |
//!
//! `t = v` because every ideal handled here is finitely generated, and `w = u`
//! because every ring here satisfies Property(A). For `w′` the defining family
//! of finitely generated `J` with `J^-1 = R` is taken to include `(0)` whenever
//! `(0)^-1 = R`, i.e. on field and SPR atoms, which forces those components to
//! close to the whole atom.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ideal::{AtomIdeal, AtomPrime, FracIdeal, PrimeRef};
use crate::intutil;
use crate::polyfactor;
use crate::quad;
use crate::ring::{Atom, Fraction};
use crate::upoly::poly_gcd;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StarOp {
    D,
    V,
    T,
    W,
    WPrime,
    U,
}

impl StarOp {
    pub const ALL: [StarOp; 6] = [StarOp::D, StarOp::V, StarOp::T, StarOp::W, StarOp::WPrime, StarOp::U];

    pub fn name(&self) -> &'static str {
        match self {
            StarOp::D => "d",
            StarOp::V => "v",
            StarOp::T => "t",
            StarOp::W => "w",
            StarOp::WPrime => "wprime",
            StarOp::U => "u",
        }
    }
}

impl fmt::Display for StarOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StarOp {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "d" => StarOp::D,
            "v" => StarOp::V,
            "t" => StarOp::T,
            "w" => StarOp::W,
            "wprime" | "w'" => StarOp::WPrime,
            "u" => StarOp::U,
            _ => return Err(format!("unknown star operation `{s}` (expected d, v, t, w, wprime, u)")),
        })
    }
}

fn v_atom(part: &AtomIdeal, a: &Atom) -> AtomIdeal {
    part.inverse(a).inverse(a)
}

fn u_atom(part: &AtomIdeal, a: &Atom) -> AtomIdeal {
    if part.is_zero(a) || a.is_spr() {
        part.clone()
    } else {
        v_atom(part, a)
    }
}

pub fn atom_closure(op: StarOp, part: &AtomIdeal, a: &Atom) -> AtomIdeal {
    match op {
        StarOp::D => part.clone(),
        StarOp::V | StarOp::T => v_atom(part, a),
        StarOp::U | StarOp::W => u_atom(part, a),
        StarOp::WPrime => {
            if a.is_field() || a.is_spr() {
                AtomIdeal::total(a)
            } else {
                u_atom(part, a)
            }
        }
    }
}

pub fn closure(op: StarOp, i: &FracIdeal) -> FracIdeal {
    let parts = i
        .parts()
        .iter()
        .zip(i.ring().atoms())
        .map(|(p, a)| atom_closure(op, p, a))
        .collect();
    FracIdeal::from_parts(i.ring(), parts).expect("closure preserves part kinds")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RgvCertificate {
    pub witness: FracIdeal,
    pub finitely_generated: bool,
    pub is_regular: bool,
    pub inverse_is_r: bool,
}

impl RgvCertificate {
    pub fn is_member(&self) -> bool {
        self.finitely_generated && self.is_regular && self.inverse_is_r
    }
}

pub fn is_rgv(j: &FracIdeal) -> RgvCertificate {
    RgvCertificate {
        witness: j.clone(),
        finitely_generated: j.generators().is_some(),
        is_regular: j.is_regular(),
        inverse_is_r: j.inverse().is_unit(),
    }
}

/// GV membership. Equal to rGV membership because semiregular and regular
/// coincide under Property(A), which every ring here has.
pub fn is_gv(j: &FracIdeal) -> bool {
    is_rgv(j).is_member()
}

/// `(I·I^-1)_* = R`.
pub fn is_star_invertible(i: &FracIdeal, op: StarOp) -> bool {
    let prod = i.product(&i.inverse()).expect("same ring");
    closure(op, &prod).is_unit()
}

/// Exact invertibility `I·I^-1 = R`.
pub fn is_invertible(i: &FracIdeal) -> bool {
    i.product(&i.inverse()).expect("same ring").is_unit()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UMaxOver {
    Primes(Vec<PrimeRef>),
    /// A zero part in a domain component of positive dimension lies in
    /// infinitely many height-one primes.
    InfiniteFamily,
}

/// All maximal u-ideals containing the integral ideal `I`.
pub fn maximal_u_ideals_over(i: &FracIdeal) -> Result<UMaxOver> {
    if !i.is_integral() {
        return Err(Error::NotIntegral);
    }
    if i.is_unit() {
        return Err(Error::IdealIsWholeRing);
    }
    let mut out = Vec::new();
    for (c, (part, a)) in i.parts().iter().zip(i.ring().atoms()).enumerate() {
        if part.is_zero(a) && a.is_domain() && !a.is_field() {
            return Ok(UMaxOver::InfiniteFamily);
        }
        match (a, part) {
            (Atom::Rational, AtomIdeal::Zero) => out.push(PrimeRef::new(c, AtomPrime::ZeroPrime)),
            (Atom::ModPrimePower { .. }, AtomIdeal::Spr(j)) if *j > 0 => out.push(PrimeRef::new(c, AtomPrime::SprMax)),
            (Atom::Integer, AtomIdeal::Int(q)) => {
                for (p, _) in intutil::factor_bigint(&q.to_integer())? {
                    out.push(PrimeRef::new(c, AtomPrime::IntegerPrime(p)));
                }
            }
            (Atom::Quadratic(_), AtomIdeal::Quad(q)) => {
                for (p, _) in quad::factor_ideal(q)? {
                    out.push(PrimeRef::new(c, AtomPrime::QuadPrime(p)));
                }
            }
            (Atom::Poly { .. }, AtomIdeal::Poly(q)) => {
                let g = q.basis().iter().fold(crate::poly::Poly::zero(q.modulus()), |acc, f| poly_gcd(&acc, f));
                if !g.is_constant() {
                    let cap = g.degree().unwrap().max(polyfactor::DEFAULT_DEGREE_CAP);
                    for (f, _) in polyfactor::factor(&g, cap)?.factors {
                        out.push(PrimeRef::new(c, AtomPrime::PolyPrime(f)));
                    }
                }
            }
            _ => {}
        }
    }
    out.sort();
    Ok(UMaxOver::Primes(out))
}

/// `x ∈ I_u` decided through stability: `((I : x) ∩ R)_u = R`.
pub fn in_u_closure_via_stability(i: &FracIdeal, x: &Fraction) -> Result<bool> {
    let px = FracIdeal::principal(i.ring(), x);
    let c = i.colon(&px)?.contract();
    Ok(closure(StarOp::U, &c).is_unit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal_from_generators;
    use crate::poly::{Poly, VAR_X, VAR_Y};
    use crate::ring::{int, poly, quad, RingDesc, Scalar};
    use num_rational::BigRational;

    fn zq() -> RingDesc {
        RingDesc::new(vec![Atom::Integer, Atom::Rational]).unwrap()
    }

    fn ideal(r: &RingDesc, gens: Vec<Vec<Scalar>>) -> FracIdeal {
        let g: Vec<Fraction> = gens.into_iter().map(|p| r.fraction(p).unwrap()).collect();
        ideal_from_generators(r, &g)
    }

    fn six_z_times_zero(r: &RingDesc) -> FracIdeal {
        FracIdeal::from_parts(r, vec![AtomIdeal::Int(BigRational::from_integer(6.into())), AtomIdeal::Zero]).unwrap()
    }

    #[test]
    fn idempotent_principal_ideal() {
        let r = zq();
        let e = ideal(&r, vec![vec![int(1), int(0)]]);
        assert!(closure(StarOp::V, &e).is_unit());
        assert!(closure(StarOp::T, &e).is_unit());
        assert_eq!(closure(StarOp::U, &e), e);
        assert!(is_star_invertible(&e, StarOp::V));
        assert!(!is_star_invertible(&e, StarOp::U));
    }

    #[test]
    fn w_prime_differs_from_u_on_non_regular_ideal() {
        let r = zq();
        let i = six_z_times_zero(&r);
        let wp = closure(StarOp::WPrime, &i);
        assert_eq!(wp.parts(), &[AtomIdeal::Int(BigRational::from_integer(6.into())), AtomIdeal::Whole]);
        assert_eq!(closure(StarOp::U, &i), i);
        assert_eq!(closure(StarOp::W, &i), i);
    }

    #[test]
    fn u_closure_in_polynomial_ring_is_gcd() {
        let f2 = RingDesc::new(vec![Atom::poly(2).unwrap()]).unwrap();
        let (x, y) = (Poly::var(2, VAR_X), Poly::var(2, VAR_Y));
        let i = ideal(&f2, vec![vec![poly(x.pow(2))], vec![poly(x.mul(&y))]]);
        assert_eq!(closure(StarOp::U, &i), ideal(&f2, vec![vec![poly(x.clone())]]));
        let m = ideal(&f2, vec![vec![poly(x)], vec![poly(y)]]);
        assert!(is_rgv(&m).is_member());
        assert!(is_gv(&m));
    }

    #[test]
    fn rgv_examples() {
        let r = zq();
        let i = FracIdeal::from_parts(&r, vec![AtomIdeal::Int(BigRational::from_integer(1.into())), AtomIdeal::Zero]).unwrap();
        let cert = is_rgv(&i);
        assert!(cert.inverse_is_r && !cert.is_regular && !cert.is_member());
        assert!(!is_gv(&i));
        assert!(is_rgv(&FracIdeal::unit(&r)).is_member());
        let z = RingDesc::new(vec![Atom::Integer]).unwrap();
        assert!(!is_gv(&ideal(&z, vec![vec![int(2)]])));
    }

    #[test]
    fn quadratic_prime_is_u_invertible() {
        let o = RingDesc::new(vec![Atom::quadratic(-5).unwrap()]).unwrap();
        let p = ideal(&o, vec![vec![quad(2, 0)], vec![quad(1, 1)]]);
        assert!(is_star_invertible(&p, StarOp::U));
        assert!(is_invertible(&p));
        assert!(is_star_invertible(&FracIdeal::unit(&o), StarOp::D));
    }

    #[test]
    fn maximal_u_ideals() {
        let r = RingDesc::new(vec![Atom::Integer, Atom::mod_prime_power(2, 2).unwrap()]).unwrap();
        let i = ideal(&r, vec![vec![int(6), Scalar::Res(2)]]);
        let UMaxOver::Primes(ps) = maximal_u_ideals_over(&i).unwrap() else { panic!() };
        assert_eq!(
            ps,
            vec![
                PrimeRef::new(0, AtomPrime::IntegerPrime(2)),
                PrimeRef::new(0, AtomPrime::IntegerPrime(3)),
                PrimeRef::new(1, AtomPrime::SprMax)
            ]
        );
        let q = zq();
        let UMaxOver::Primes(ps) = maximal_u_ideals_over(&six_z_times_zero(&q)).unwrap() else { panic!() };
        assert_eq!(
            ps,
            vec![
                PrimeRef::new(0, AtomPrime::IntegerPrime(2)),
                PrimeRef::new(0, AtomPrime::IntegerPrime(3)),
                PrimeRef::new(1, AtomPrime::ZeroPrime)
            ]
        );
        let z = FracIdeal::from_parts(&q, vec![AtomIdeal::Zero, AtomIdeal::Whole]).unwrap();
        assert_eq!(maximal_u_ideals_over(&z).unwrap(), UMaxOver::InfiniteFamily);
        assert_eq!(maximal_u_ideals_over(&FracIdeal::unit(&q)), Err(Error::IdealIsWholeRing));
    }

    #[test]
    fn stability_examples() {
        let r = zq();
        let i = six_z_times_zero(&r);
        assert!(!in_u_closure_via_stability(&i, &r.fraction(vec![int(6), int(1)]).unwrap()).unwrap());
        assert!(in_u_closure_via_stability(&i, &r.fraction(vec![int(6), int(0)]).unwrap()).unwrap());
        let f2 = RingDesc::new(vec![Atom::poly(2).unwrap()]).unwrap();
        let x = Poly::var(2, VAR_X);
        let xi = ideal(&f2, vec![vec![poly(x.clone())]]);
        assert!(in_u_closure_via_stability(&xi, &f2.fraction(vec![poly(x)]).unwrap()).unwrap());
    }

    #[test]
    fn spr_closures() {
        let z4 = RingDesc::new(vec![Atom::mod_prime_power(2, 2).unwrap()]).unwrap();
        let two = ideal(&z4, vec![vec![Scalar::Res(2)]]);
        assert_eq!(closure(StarOp::U, &two), two);
        assert!(closure(StarOp::V, &two).is_unit());
        assert!(closure(StarOp::WPrime, &two).is_unit());
        // P^2 = P^3 = (0)
        assert!(two.pow(2).is_zero());
        assert_eq!(two.pow(2), two.pow(3));
    }
}
