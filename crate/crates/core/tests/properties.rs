use krullstar::factor::factor_principal;
use krullstar::ideal::{AtomIdeal, AtomPrime, FracIdeal};
use krullstar::intutil::factor_u64;
use krullstar::poly::{Mono, Poly};
use krullstar::polyfactor::factor;
use krullstar::polyideal::{PolyIdeal, RatFun};
use krullstar::quad::{QuadIdeal, QuadInt, QuadNum, QuadRing};
use krullstar::ring::{int, Atom, RingDesc, Scalar};
use krullstar::star::{closure, StarOp};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn poly_strategy(p: u32, max_deg: u16) -> impl Strategy<Value = Poly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, 1..p as i64), 1..5).prop_map(move |ts| {
        let terms: Vec<(Mono, i64)> = ts
            .into_iter()
            .map(|(i, j, c)| {
                let j = j.min(max_deg - i.min(max_deg));
                ([i, j, 0], c)
            })
            .collect();
        Poly::from_terms(p, terms)
    })
}

fn all_polys_up_to(p: u32, deg: u16) -> Vec<Poly> {
    let monos: Vec<Mono> = (0..=deg).flat_map(|d| (0..=d).map(move |i| [i, d - i, 0])).collect();
    let mut out = vec![Poly::zero(p)];
    for m in monos {
        let mut next = Vec::new();
        for f in &out {
            for c in 0..p as i64 {
                next.push(f.add(&Poly::monomial(p, m, c)));
            }
        }
        out = next;
    }
    out
}

fn quad_ideal(r: QuadRing, gens: &[(i64, i64)]) -> Option<QuadIdeal> {
    let gens: Vec<QuadNum> = gens.iter().map(|(a, b)| QuadNum::from_int(&QuadInt::new(*a, *b))).collect();
    QuadIdeal::from_generators(r, &gens)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn residue_arithmetic_matches_machine_integers(p in prop::sample::select(vec![2u64, 3, 5, 7]), k in 1u32..4, a in 0u64..400, b in 0u64..400) {
        let at = Atom::mod_prime_power(p, k).unwrap();
        let m = p.pow(k);
        let (x, y) = (Scalar::Res(a % m), Scalar::Res(b % m));
        prop_assert_eq!(at.mul(&x, &y), Scalar::Res(a * b % m));
        prop_assert_eq!(at.add(&x, &y), Scalar::Res((a + b) % m));
        prop_assert_eq!(at.is_unit(&x), a % p != 0);
    }

    #[test]
    fn integer_factorization_multiplies_back(n in 2u64..1_000_000) {
        let f = factor_u64(n);
        prop_assert_eq!(f.iter().map(|(p, e)| p.pow(*e)).product::<u64>(), n);
        for (p, _) in &f {
            prop_assert!((2..*p).take_while(|d| d * d <= *p).all(|d| p % d != 0));
        }
    }

    #[test]
    fn principal_factorization_over_z_counts_prime_factors(n in 2i64..50_000) {
        let r = RingDesc::new(vec![Atom::Integer]).unwrap();
        let cert = factor_principal(&r, &r.element(vec![int(n)]).unwrap()).unwrap();
        prop_assert!(cert.verified);
        let mut m = n;
        let mut count = 0u32;
        let mut d = 2;
        while m > 1 {
            while m % d == 0 {
                m /= d;
                count += 1;
            }
            d += 1;
        }
        prop_assert_eq!(cert.factors.iter().map(|(_, e)| *e).sum::<u32>(), count);
        prop_assert!(cert.factors.iter().all(|(p, _)| matches!(p.prime, AtomPrime::IntegerPrime(_))));
    }

    #[test]
    fn quadratic_norms_are_multiplicative(
        d in prop::sample::select(vec![-1i64, -2, -3, -5, -6, -7, -15, -23]),
        g in prop::collection::vec((-9i64..10, -9i64..10), 1..3),
        h in prop::collection::vec((-9i64..10, -9i64..10), 1..3),
    ) {
        let r = QuadRing::new(d).unwrap();
        let (Some(i), Some(j)) = (quad_ideal(r, &g), quad_ideal(r, &h)) else { return Ok(()) };
        prop_assert_eq!(i.mul(&j).norm(), i.norm() * j.norm());
        prop_assert!(i.mul(&i.inverse()).is_one());
        let n = QuadNum::from_rational(i.norm());
        prop_assert_eq!(i.mul(&i.conj()), QuadIdeal::principal(r, &n).unwrap());
        prop_assert!(i.add(&j).contains_ideal(&i));
        if j.is_integral() {
            prop_assert!(i.contains_ideal(&i.mul(&j)));
        }
    }

    #[test]
    fn bivariate_factorization_recombines_into_irreducibles(f in poly_strategy(2, 4)) {
        prop_assume!(!f.is_constant());
        let fac = factor(&f, 8).unwrap();
        let mut prod = Poly::constant(2, fac.unit as i64);
        for (g, e) in &fac.factors {
            prod = prod.mul(&g.pow(*e));
        }
        prop_assert_eq!(&prod, &f);
        // brute force: no factor has a divisor of degree at most half its own
        let small = all_polys_up_to(2, 2);
        for (g, _) in &fac.factors {
            let dg = g.degree().unwrap();
            for h in &small {
                let Some(dh) = h.degree() else { continue };
                if dh == 0 || 2 * dh > dg {
                    continue;
                }
                prop_assert!(g.div_exact(h).is_none(), "{} divides the factor {}", h, g);
            }
        }
    }

    #[test]
    fn polynomial_ideal_lattice_laws(f in poly_strategy(3, 2), g in poly_strategy(3, 2), h in poly_strategy(3, 2)) {
        prop_assume!(!f.is_zero() && !h.is_zero());
        let one = Poly::one(3);
        let i = PolyIdeal::new(one.clone(), &[f.clone(), g.clone()]).unwrap();
        let j = PolyIdeal::new(one, &[h.clone()]).unwrap();
        prop_assert!(i.contains(&RatFun::from_poly(f.clone())) && i.contains(&RatFun::from_poly(g)));
        let meet = i.intersect(&j);
        prop_assert!(i.contains_ideal(&meet) && j.contains_ideal(&meet));
        prop_assert!(meet.contains_ideal(&i.mul(&j)));
        prop_assert!(i.add(&j).contains_ideal(&i));
        prop_assert!(i.colon(&j).mul(&j).is_integral());
        prop_assert!(i.contains_ideal(&i.colon(&j).mul(&j)));
    }

    #[test]
    fn closures_are_idempotent_and_extensive(a in -30i64..30, b in 0u64..4, c in -30i64..30) {
        let r = RingDesc::new(vec![Atom::Integer, Atom::mod_prime_power(2, 2).unwrap(), Atom::Rational]).unwrap();
        let x = r.fraction(vec![int(a), Scalar::Res(b), Scalar::Rat(BigRational::from_integer(BigInt::from(c)))]).unwrap();
        let i = FracIdeal::principal(&r, &x);
        for op in StarOp::ALL {
            let ci = closure(op, &i);
            prop_assert_eq!(closure(op, &ci), ci.clone());
            prop_assert!(ci.contains_ideal(&i).unwrap());
        }
        let iu = closure(StarOp::U, &i);
        prop_assert_eq!(iu.part(1), i.part(1));
        if a == 0 {
            prop_assert_eq!(iu.part(0), &AtomIdeal::Zero);
            // (Z : Q) = 0, so zero stays zero in Z
            let iv = closure(StarOp::V, &i);
            prop_assert_eq!(iv.part(0), &AtomIdeal::Zero);
        }
        if c == 0 {
            let iv = closure(StarOp::V, &i);
            prop_assert_eq!(iv.part(2), &AtomIdeal::Whole);
        }
    }
}
