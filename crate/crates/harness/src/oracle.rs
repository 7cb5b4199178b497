//! Reference computations that avoid the code paths they check.

use krullstar::ideal::{AtomIdeal, FracIdeal};
use krullstar::poly::Poly;
use krullstar::polyideal::{PolyIdeal, RatFun};
use krullstar::quad::{QuadIdeal, QuadRing};
use krullstar::ring::Atom;
use krullstar::upoly::poly_gcd;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

/// `(g / D)` where `D` is the lcm of the generator denominators and `g` the gcd
/// of the cleared numerators: the divisorial hull of a nonzero ideal of a UFD.
pub fn gcd_hull(gens: &[RatFun]) -> Option<PolyIdeal> {
    let nonzero: Vec<&RatFun> = gens.iter().filter(|g| !g.is_zero()).collect();
    let p = nonzero.first()?.modulus();
    let mut den = Poly::one(p);
    for g in &nonzero {
        let d = g.den();
        let c = poly_gcd(&den, d);
        den = den.mul(&d.div_exact(&c).unwrap());
    }
    let mut g = Poly::zero(p);
    for f in &nonzero {
        let cleared = f.num().mul(&den.div_exact(f.den()).unwrap());
        g = poly_gcd(&g, &cleared);
    }
    PolyIdeal::new(den, &[g])
}

fn int_divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Every integral ideal of `O_d` containing `I`, by scanning HNF triples
/// `(a, b, c)` with `ac | N(I)`.
pub fn quad_ideals_containing(i: &QuadIdeal) -> Vec<QuadIdeal> {
    let n = i.norm().to_integer().to_u64().expect("small norm");
    let mut out = Vec::new();
    for a in int_divisors(n) {
        for c in int_divisors(a) {
            if n % (a * c) != 0 {
                continue;
            }
            for b in 0..a {
                let Ok(j) = QuadIdeal::from_hnf(i.ring, BigInt::one(), a.into(), b.into(), c.into()) else { continue };
                if j.den.is_one() && j.a == BigInt::from(a) && j.c == BigInt::from(c) && j.contains_ideal(i) {
                    out.push(j);
                }
            }
        }
    }
    out
}

/// Brute-force list of the u-ideals containing an integral u-ideal, for rings
/// without polynomial components. `None` if a component is not supported.
pub fn brute_u_divisors(i: &FracIdeal) -> Option<Vec<FracIdeal>> {
    let r = i.ring();
    let mut per: Vec<Vec<AtomIdeal>> = Vec::new();
    for (a, part) in r.atoms().iter().zip(i.parts()) {
        let opts = match (a, part) {
            (Atom::Integer, AtomIdeal::Int(q)) => {
                let n = q.to_integer().abs().to_u64()?;
                if n > 100_000 {
                    return None;
                }
                int_divisors(n)
                    .into_iter()
                    .map(|d| AtomIdeal::Int(num_rational::BigRational::from_integer(d.into())))
                    .collect()
            }
            (Atom::Rational, AtomIdeal::Zero) => vec![AtomIdeal::Zero, AtomIdeal::Whole],
            (Atom::Rational, AtomIdeal::Whole) => vec![AtomIdeal::Whole],
            (Atom::ModPrimePower { .. }, AtomIdeal::Spr(j)) => (0..=*j).map(AtomIdeal::Spr).collect(),
            (Atom::Quadratic(_), AtomIdeal::Quad(q)) => {
                if q.norm().to_integer() > BigInt::from(2000) {
                    return None;
                }
                quad_ideals_containing(q).into_iter().map(AtomIdeal::Quad).collect()
            }
            _ => return None,
        };
        per.push(opts);
    }
    let mut out = vec![Vec::new()];
    for opts in per {
        let mut next = Vec::new();
        for prefix in &out {
            for o in &opts {
                let mut v: Vec<AtomIdeal> = prefix.clone();
                v.push(o.clone());
                next.push(v);
            }
        }
        out = next;
    }
    Some(out.into_iter().map(|parts| FracIdeal::from_parts(r, parts).unwrap()).collect())
}

/// Number of ideal classes of `O_d`, counting reduced primitive forms of
/// discriminant `D`.
pub fn class_number_by_forms(d: i64) -> u64 {
    let disc = QuadRing::new(d).unwrap().discriminant();
    let mut h = 0;
    let mut a = 1i64;
    while 3 * a * a <= -disc {
        for b in -a + 1..=a {
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (b < 0 && a == c) {
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

/// Integral ideals of norm `n` counted by enumerating HNF triples.
pub fn ideals_of_norm(d: i64, n: u64) -> u64 {
    let r = QuadRing::new(d).unwrap();
    let mut count = 0;
    for a in int_divisors(n) {
        let c = n / a;
        if a % c != 0 {
            continue;
        }
        for b in 0..a {
            if b % c != 0 {
                continue;
            }
            if let Ok(j) = QuadIdeal::from_hnf(r, BigInt::one(), a.into(), b.into(), c.into()) {
                if j.a == BigInt::from(a) && j.c == BigInt::from(c) && j.b == BigInt::from(b) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Longest strictly increasing chain in a finite family ordered by containment,
/// counted in steps.
pub fn longest_chain(family: &[FracIdeal]) -> usize {
    let mut order: Vec<usize> = (0..family.len()).collect();
    // larger ideals have fewer ideals containing them; sort by that count
    let above: Vec<usize> = family
        .iter()
        .map(|i| family.iter().filter(|j| j.contains_ideal(i).unwrap()).count())
        .collect();
    order.sort_by_key(|&k| above[k]);
    let mut best = vec![0usize; family.len()];
    for (pos, &k) in order.iter().enumerate() {
        for &j in &order[..pos] {
            if family[j] != family[k] && family[j].contains_ideal(&family[k]).unwrap() {
                best[k] = best[k].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use krullstar::quad;

    #[test]
    fn class_numbers_agree_with_the_class_group() {
        for d in [-1, -2, -3, -5, -6, -14, -21, -23, -47, -71] {
            let g = quad::class_group(d, 200).unwrap();
            assert_eq!(g.group.order(), class_number_by_forms(d), "d = {d}");
        }
    }

    #[test]
    fn norm_counts_match_prime_splitting() {
        // p split: 2 ideals of norm p; inert: 0; ramified: 1
        assert_eq!(ideals_of_norm(-5, 2), 1);
        assert_eq!(ideals_of_norm(-5, 3), 2);
        assert_eq!(ideals_of_norm(-5, 11), 0);
        assert_eq!(ideals_of_norm(-1, 5), 2);
        assert_eq!(ideals_of_norm(-1, 4), 1);
    }

    #[test]
    fn divisors_of_six_in_quadratic_order() {
        let r = QuadRing::new(-5).unwrap();
        let six = QuadIdeal::from_hnf(r, 1.into(), 6.into(), 0.into(), 6.into()).unwrap();
        // P2^2 P3 P3': 3·2·2 divisors
        assert_eq!(quad_ideals_containing(&six).len(), 12);
    }
}
