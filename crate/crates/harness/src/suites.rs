use std::collections::BTreeSet;

use krullstar::classify::{check_general_krull, classify_ring, localize_classify, LocalKind};
use krullstar::dsl;
use krullstar::factor::{
    canonicalize, divisor_count, factor_principal, factor_u_ideal, find_u_invertible_prime_below, recombine,
    split_regular_zero, u_divisors,
};
use krullstar::ideal::{AtomIdeal, AtomPrime, FracIdeal, PrimeRef};
use krullstar::json::{ideal_from_json, ideal_to_json};
use krullstar::nagata::{content, dedekind_mertens_n, in_nagata_extension, in_nu, in_nv, is_mccoy_regular};
use krullstar::polyideal::PolyIdeal;
use krullstar::quad::AbelianGroup;
use krullstar::ring::{Atom, Fraction, RingDesc};
use krullstar::star::{
    closure, in_u_closure_via_stability, is_invertible, is_star_invertible, maximal_u_ideals_over, StarOp, UMaxOver,
};

use crate::gen::Gen;
use crate::oracle::{brute_u_divisors, class_number_by_forms, gcd_hull, longest_chain};
use crate::{CaseResult, GenConfig, Suite};

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn e<T>(r: krullstar::Result<T>, what: &str) -> Result<T, String> {
    r.map_err(|err| format!("{what}: {err}"))
}

fn keep(_: &mut GenConfig) {}

pub(crate) static ALL: &[Suite] = &[
    Suite { name: "ring-axioms", about: "ring axioms, regularity, fraction canonical forms", case: ring_axioms, prepare: keep },
    Suite { name: "ideal-laws", about: "componentwise ideal arithmetic and containments", case: ideal_laws, prepare: keep },
    Suite { name: "star-axioms", about: "closure axioms for all six operations, u <= w <= w' <= v", case: star_axioms, prepare: keep },
    Suite { name: "star-laws", about: "(IJ*)* = (IJ)*, invertibility agreement, distribution over intersections, finite type", case: star_laws, prepare: keep },
    Suite { name: "closure-chain", about: "u = t = v = w' on regular ideals of Dedekind and factorial atoms", case: closure_chain, prepare: pin_chain_rings },
    Suite { name: "stability", about: "Nagata contraction against direct u-closure membership", case: stability, prepare: keep },
    Suite { name: "umax-primes", about: "maximal u-ideals over an ideal are prime, maximal and localize correctly", case: umax_primes, prepare: keep },
    Suite { name: "factor-roundtrip", about: "principal factorization round trip, uniqueness, multiplicativity", case: factor_roundtrip, prepare: keep },
    Suite { name: "u-divisors", about: "u-divisor enumeration against the exponent formula and brute force", case: u_divisor_family, prepare: keep },
    Suite { name: "kaplansky", about: "u-invertible primes below nonprincipal primes", case: kaplansky, prepare: pin_kaplansky_rings },
    Suite { name: "dm-bound", about: "Dedekind-Mertens exponent bound and minimality", case: dm_bound, prepare: keep },
    Suite { name: "nagata-sets", about: "N_u saturation, McCoy regularity, N_u = N_v^r", case: nagata_sets, prepare: keep },
    Suite { name: "classify", about: "flag implications, class group additivity and class numbers", case: classify, prepare: keep },
    Suite { name: "json-roundtrip", about: "JSON and DSL round trips of ideals and rings", case: json_roundtrip, prepare: keep },
];

fn ring_of(atoms: Vec<Atom>) -> RingDesc {
    RingDesc::new(atoms).expect("valid ring")
}

fn pin_chain_rings(cfg: &mut GenConfig) {
    if cfg.fixed_rings.is_empty() {
        cfg.fixed_rings = vec![
            ring_of(vec![Atom::quadratic(-5).unwrap()]),
            ring_of(vec![Atom::poly(2).unwrap()]),
        ];
    }
}

fn pin_kaplansky_rings(cfg: &mut GenConfig) {
    if cfg.fixed_rings.is_empty() {
        cfg.fixed_rings = vec![
            ring_of(vec![Atom::quadratic(-5).unwrap(), Atom::Integer]),
            ring_of(vec![Atom::poly(2).unwrap(), Atom::mod_prime_power(2, 2).unwrap()]),
        ];
    }
}

fn principal(r: &RingDesc, x: &Fraction) -> FracIdeal {
    FracIdeal::principal(r, x)
}

fn subset(a: &FracIdeal, b: &FracIdeal) -> Result<bool, String> {
    e(b.contains_ideal(a), "containment")
}

fn ring_axioms(g: &mut Gen) -> CaseResult {
    let r = g.gen_ring();
    let (a, b, c) = (g.gen_element(&r), g.gen_element(&r), g.gen_element(&r));
    ensure!(r.mul(&r.mul(&a, &b), &c) == r.mul(&a, &r.mul(&b, &c)), "associativity fails for {a}, {b}, {c} in {r}");
    ensure!(
        r.mul(&a, &r.add(&b, &c)) == r.add(&r.mul(&a, &b), &r.mul(&a, &c)),
        "distributivity fails for {a}, {b}, {c} in {r}"
    );
    ensure!(r.mul(&r.one(), &a) == a, "1·a != a for {a}");
    ensure!(r.mul(&a, &b) == r.mul(&b, &a), "ab != ba for {a}, {b}");
    let ab = r.mul(&a, &b);
    if r.is_regular(&a) && r.is_regular(&b) {
        ensure!(r.is_regular(&ab), "product of regular {a} and {b} is not regular");
    }
    if r.is_regular(&a) && !r.is_regular(&b) {
        ensure!(!r.is_regular(&ab), "regular {a} times zero divisor {b} is regular");
    }
    let x = g.gen_fraction(&r);
    let again = e(r.fraction(x.parts().to_vec()), "canonical form")?;
    ensure!(again == x, "canonical form of {x} is not idempotent: {again}");
    let y = g.gen_regular_fraction(&r);
    let inv = e(r.frac_inv(&y), "inverse")?;
    ensure!(r.frac_mul(&y, &inv) == r.one().to_fraction(), "{y} times its inverse is not 1");
    Ok(())
}

fn ideal_laws(g: &mut Gen) -> CaseResult {
    let r = g.gen_ring();
    let (a, b) = (g.gen_ideal(&r), g.gen_ideal(&r));
    let ops: [(&str, FracIdeal, fn(&AtomIdeal, &AtomIdeal, &Atom) -> AtomIdeal); 4] = [
        ("sum", e(a.sum(&b), "sum")?, AtomIdeal::add),
        ("product", e(a.product(&b), "product")?, AtomIdeal::mul),
        ("intersect", e(a.intersect(&b), "intersect")?, AtomIdeal::intersect),
        ("colon", e(a.colon(&b), "colon")?, AtomIdeal::colon),
    ];
    for (name, whole, f) in &ops {
        for (c, at) in r.atoms().iter().enumerate() {
            ensure!(
                whole.part(c) == &f(a.part(c), b.part(c), at),
                "{name} is not componentwise at component {c} for {a} and {b}"
            );
        }
    }
    let inv = a.inverse();
    for (c, at) in r.atoms().iter().enumerate() {
        ensure!(inv.part(c) == &a.part(c).inverse(at), "inverse is not componentwise for {a}");
    }
    let [(_, sum, _), (_, prod, _), (_, meet, _), (_, colon, _)] = ops;
    ensure!(subset(&a, &sum)?, "{a} is not inside {a} + {b}");
    if a.is_integral() && b.is_integral() {
        ensure!(subset(&prod, &meet)?, "AB is not inside A ∩ B for {a}, {b}");
    }
    ensure!(subset(&e(colon.product(&b), "product")?, &a)?, "(A : B)B is not inside A for {a}, {b}");
    ensure!(subset(&a, &inv.inverse())?, "{a} is not inside its double inverse");
    ensure!(inv.inverse().inverse() == inv, "triple inverse differs from inverse for {a}");
    let by_parts = r.atoms().iter().zip(a.parts()).all(|(at, p)| match at {
        Atom::ModPrimePower { .. } => *p == AtomIdeal::Spr(0) || *p == AtomIdeal::Whole,
        _ => !p.is_zero(at),
    });
    ensure!(a.is_regular() == by_parts, "regularity of {a} disagrees with its parts");
    for (c, at) in r.atoms().iter().enumerate() {
        let (Atom::Poly { p }, AtomIdeal::Poly(part)) = (at, a.part(c)) else { continue };
        let gens: Vec<_> = part.generators();
        let hull = gcd_hull(&gens).ok_or("empty generator list")?;
        let gen = hull.principal_generator().ok_or("gcd hull is not principal")?;
        let expected = PolyIdeal::from_generators(*p, &[gen.inv().ok_or("zero gcd")?]).ok_or("zero ideal")?;
        ensure!(
            inv.part(c) == &AtomIdeal::Poly(expected.clone()),
            "inverse of {part} is {} but the gcd oracle gives {expected}",
            inv.part(c).display(at)
        );
    }
    Ok(())
}

fn star_axioms(g: &mut Gen) -> CaseResult {
    let r = g.gen_ring();
    let i = g.gen_ideal(&r);
    let k = g.gen_ideal(&r);
    let a = g.gen_fraction(&r);
    let reg = g.gen_regular_fraction(&r);
    let unit = FracIdeal::unit(&r);
    let j = e(i.sum(&k), "sum")?;
    for op in StarOp::ALL {
        let ci = closure(op, &i);
        ensure!(closure(op, &unit) == unit, "R_{op} != R over {r}");
        ensure!(subset(&i, &ci)?, "{i} is not inside its {op}-closure {ci}");
        ensure!(closure(op, &ci) == ci, "{op}-closure of {i} is not idempotent");
        ensure!(subset(&ci, &closure(op, &j))?, "{op}-closure is not monotone on {i} inside {j}");
        let lhs = e(principal(&r, &a).product(&ci), "product")?;
        let rhs = closure(op, &e(principal(&r, &a).product(&i), "product")?);
        ensure!(subset(&lhs, &rhs)?, "a·I_{op} is not inside (aI)_{op} for a = {a}, I = {i}");
        let lhs = e(principal(&r, &reg).product(&ci), "product")?;
        let rhs = closure(op, &e(principal(&r, &reg).product(&i), "product")?);
        ensure!(lhs == rhs, "a·I_{op} != (aI)_{op} for regular a = {reg}, I = {i}");
    }
    let zero = FracIdeal::zero(&r);
    ensure!(closure(StarOp::U, &zero) == zero, "(0)_u != (0) over {r}");
    let chain: Vec<FracIdeal> = [StarOp::U, StarOp::W, StarOp::WPrime, StarOp::V].iter().map(|op| closure(*op, &i)).collect();
    for w in chain.windows(2) {
        ensure!(subset(&w[0], &w[1])?, "closure chain u <= w <= w' <= v breaks on {i}: {} vs {}", w[0], w[1]);
    }
    let ri = g.gen_regular_ideal(&r);
    let (u, w, wp) = (closure(StarOp::U, &ri), closure(StarOp::W, &ri), closure(StarOp::WPrime, &ri));
    ensure!(u == w && w == wp, "u, w, w' differ on regular {ri}: {u}, {w}, {wp}");
    Ok(())
}

fn star_laws(g: &mut Gen) -> CaseResult {
    let r = g.gen_ring();
    let (i, j) = (g.gen_ideal(&r), g.gen_ideal(&r));
    for op in StarOp::ALL {
        let lhs = closure(op, &e(i.product(&closure(op, &j)), "product")?);
        let rhs = closure(op, &e(i.product(&j), "product")?);
        ensure!(lhs == rhs, "(I·J_{op})_{op} != (IJ)_{op} for I = {i}, J = {j}");
    }
    let ri = g.gen_regular_ideal(&r);
    let verdicts: Vec<bool> =
        [StarOp::U, StarOp::W, StarOp::WPrime, StarOp::T].iter().map(|op| is_star_invertible(&ri, *op)).collect();
    ensure!(verdicts.iter().all(|v| *v == verdicts[0]), "u, w, w', t invertibility disagree on {ri}: {verdicts:?}");
    if is_star_invertible(&i, StarOp::U) {
        ensure!(i.is_regular(), "{i} is u-invertible but not regular");
    }
    let lhs = closure(StarOp::U, &e(i.intersect(&j), "intersect")?);
    let rhs = e(closure(StarOp::U, &i).intersect(&closure(StarOp::U, &j)), "intersect")?;
    ensure!(lhs == rhs, "(A ∩ B)_u != A_u ∩ B_u for {i}, {j}");
    if let Some(gens) = i.generators() {
        let mut prev = closure(StarOp::U, &FracIdeal::zero(&r));
        let mut acc = FracIdeal::zero(&r);
        for x in &gens {
            acc = e(acc.sum(&principal(&r, x)), "sum")?;
            let cur = closure(StarOp::U, &acc);
            ensure!(subset(&prev, &cur)?, "closures of generator prefixes of {i} are not monotone");
            prev = cur;
        }
        ensure!(prev == closure(StarOp::U, &i), "closure of all generators of {i} differs from its closure");
    }
    Ok(())
}

fn closure_chain(g: &mut Gen) -> CaseResult {
    let r = g.gen_ring();
    let i = g.gen_regular_ideal(&r);
    let u = closure(StarOp::U, &i);
    for op in [StarOp::T, StarOp::V, StarOp::WPrime] {
        let c = closure(op, &i);
        ensure!(c == u, "u-closure {u} and {op}-closure {c} of {i} differ");
    }
    for (c, at) in r.atoms().iter().enumerate() {
        if let (Atom::Poly { .. }, AtomIdeal::Poly(part)) = (at, i.part(c)) {
            let hull = gcd_hull(&part.generators()).ok_or("empty generator list")?;
            ensure!(u.part(c) == &AtomIdeal::Poly(hull.clone()), "u-closure of {i} is {u}, the gcd oracle gives {hull}");
        }
    }
    Ok(())
}

fn stability(g: &mut Gen) -> CaseResult {
    let r = g.gen_ring();
    let i = g.gen_ideal(&r);
    let iu = closure(StarOp::U, &i);
    let x = match iu.generators() {
        Some(gens) if !gens.is_empty() && g.chance(1, 2) => {
            let k = g.rng_index(gens.len());
            r.frac_mul(&gens[k], &g.gen_element(&r).to_fraction())
        }
        _ => g.gen_fraction(&r),
    };
    let direct = e(iu.contains(&x), "membership")?;
    let nagata = e(in_nagata_extension(&i, &x), "nagata extension")?;
    ensure!(nagata == direct, "x = {x}, I = {i}: Nagata membership {nagata}, u-closure membership {direct}");
    let stable = e(in_u_closure_via_stability(&i, &x), "stability")?;
    ensure!(stable == direct, "x = {x}, I = {i}: stability test {stable}, u-closure membership {direct}");
    let again = e(in_nagata_extension(&iu, &x), "nagata extension")?;
    ensure!(again == nagata, "x = {x}: Nagata membership differs between {i} and its u-closure");
    Ok(())
}

fn umax_primes(g: &mut Gen) -> CaseResult {
    let r = g.gen_ring();
    let i = g.gen_proper_ideal(&r);
    let whole = closure(StarOp::U, &i).is_unit();
    let ps = match maximal_u_ideals_over(&i) {
        Err(err) => return Err(format!("maximal u-ideals over {i}: {err}")),
        Ok(UMaxOver::InfiniteFamily) => {
            let has_zero = r.atoms().iter().zip(i.parts()).any(|(a, p)| a.krull_dim() > 0 && *p == AtomIdeal::Zero);
            ensure!(has_zero, "infinite family reported for {i}");
            return Ok(());
        }
        Ok(UMaxOver::Primes(ps)) => ps,
    };
    // a u-ideal containing I contains I_u, so none is proper when I_u = R
    ensure!(ps.is_empty() == whole, "{i} has u-closure {} but {} maximal u-ideals", closure(StarOp::U, &i), ps.len());
    for p in &ps {
        let pi = p.to_ideal(&r);
        ensure!(subset(&i, &pi)?, "{pi} does not contain {i}");
        ensure!(closure(StarOp::U, &pi) == pi, "{pi} is not a u-ideal");
        ensure!(!pi.is_unit(), "maximal u-ideal is the whole ring");
        match maximal_u_ideals_over(&pi) {
            Ok(UMaxOver::Primes(over)) => ensure!(over == vec![p.clone()], "{pi} is not maximal among u-ideals"),
            other => return Err(format!("maximal u-ideals over {pi}: {other:?}")),
        }
        for _ in 0..6 {
            let (a, b) = (g.gen_element(&r), g.gen_element(&r));
            let ab = r.mul(&a, &b);
            if e(pi.contains(&ab.to_fraction()), "membership")? {
                let (ina, inb) = (e(pi.contains(&a.to_fraction()), "membership")?, e(pi.contains(&b.to_fraction()), "membership")?);
                ensure!(ina || inb, "{pi} contains {ab} but neither {a} nor {b}");
            }
        }
        let local = e(localize_classify(&r, p), "localize")?;
        let minimal = matches!(p.prime, AtomPrime::ZeroPrime | AtomPrime::SprMax);
        match local.kind {
            LocalKind::Dvr { .. } => ensure!(p.is_height_one(), "DVR reported at {pi}, which is not height one"),
            LocalKind::Spr { .. } | LocalKind::Field => ensure!(minimal, "SPR or field reported at non-minimal {pi}"),
        }
    }
    Ok(())
}

fn expand(factors: &[(PrimeRef, u32)]) -> Vec<PrimeRef> {
    factors.iter().flat_map(|(p, e)| std::iter::repeat(p.clone()).take(*e as usize)).collect()
}

fn factor_roundtrip(g: &mut Gen) -> CaseResult {
    let r = g.gen_ring();
    let a = g.gen_nonunit(&r);
    let cert = e(factor_principal(&r, &a), "factor")?;
    let ideal = principal(&r, &a.to_fraction());
    ensure!(cert.verified, "certificate of {a} is not verified");
    ensure!(recombine(&r, &cert.factors, cert.product_op) == ideal, "factors of {a} do not recombine to (a)");
    let mut primes = expand(&cert.factors);
    g.shuffle(&mut primes);
    let mut prod = FracIdeal::unit(&r);
    for p in &primes {
        prod = e(prod.product(&p.to_ideal(&r)), "product")?;
    }
    let prod = closure(cert.product_op, &prod);
    ensure!(prod == ideal, "permuted product of the factors of {a} is {prod}");
    let again = e(factor_u_ideal(&prod), "refactor")?;
    ensure!(again.factors == cert.factors, "refactoring the permuted product of {a} changes the certificate");
    let b = g.gen_nonunit(&r);
    let cb = e(factor_principal(&r, &b), "factor")?;
    let ab = r.mul(&a, &b);
    let cab = e(factor_principal(&r, &ab), "factor")?;
    let merged = canonicalize(&r, cert.factors.iter().chain(&cb.factors).cloned().collect());
    ensure!(merged == cab.factors, "factor({a}) + factor({b}) != factor({ab})");
    let split = split_regular_zero(&r, &a);
    ensure!(r.mul(&split.regular_part, &split.zerodiv_part) == a, "regular and zero-divisor parts of {a} do not multiply back");
    let mut from_split: Vec<(PrimeRef, u32)> = Vec::new();
    for (pe, k) in &split.prime_elements {
        let p = PrimeRef::from_ideal(&principal(&r, &pe.to_fraction())).ok_or(format!("{pe} does not generate a prime"))?;
        from_split.push((p, *k));
    }
    let from_split = canonicalize(&r, from_split);
    let minimal: Vec<(PrimeRef, u32)> = cert
        .factors
        .iter()
        .filter(|(p, _)| matches!(p.prime, AtomPrime::ZeroPrime | AtomPrime::SprMax))
        .cloned()
        .collect();
    ensure!(from_split == minimal, "minimal primes of {a} differ from its zero-divisor split");
    for (p, _) in &cert.factors {
        let minimal = matches!(p.prime, AtomPrime::ZeroPrime | AtomPrime::SprMax);
        ensure!(
            p.is_height_one() || (minimal && p.is_principal(&r)),
            "factor {} of {a} is neither height one nor a principal minimal prime",
            p.display(&r)
        );
    }
    Ok(())
}

fn u_divisor_family(g: &mut Gen) -> CaseResult {
    let r = g.gen_ring();
    let i = g.gen_u_ideal(&r);
    let cert = e(factor_u_ideal(&i), "factor")?;
    ensure!(cert.verified, "certificate of {i} is not verified");
    let divs = e(u_divisors(&i), "u-divisors")?;
    let mut formula = 1u64;
    for (p, k) in &cert.factors {
        match p.prime {
            AtomPrime::ZeroPrime => {
                ensure!(*k == 1, "zero prime with exponent {k}");
                formula *= 2;
            }
            _ => formula *= u64::from(*k) + 1,
        }
    }
    ensure!(formula == divisor_count(&cert), "divisor count disagrees with the exponent formula");
    ensure!(divs.len() as u64 == formula, "{i} has {} u-divisors, the exponent formula gives {formula}", divs.len());
    let distinct: BTreeSet<String> = divs.iter().map(|d| d.to_string()).collect();
    ensure!(distinct.len() == divs.len(), "u-divisors of {i} repeat");
    for d in &divs {
        ensure!(closure(StarOp::U, d) == *d, "u-divisor {d} is not u-closed");
        ensure!(d.is_integral() && subset(&i, d)?, "u-divisor {d} does not contain {i}");
    }
    if let Some(brute) = brute_u_divisors(&i) {
        ensure!(brute.len() == divs.len(), "brute force finds {} ideals over {i}, enumeration {}", brute.len(), divs.len());
        for b in &brute {
            ensure!(divs.contains(b), "{b} contains {i} but is not enumerated");
        }
    }
    let total: u32 = cert.factors.iter().map(|(_, k)| *k).sum();
    if divs.len() <= 64 {
        let chain = longest_chain(&divs);
        ensure!(chain <= total as usize, "chain of length {chain} above {i} exceeds the exponent sum {total}");
    }
    for (p, _) in &cert.factors {
        let pi = p.to_ideal(&r);
        if !is_star_invertible(&pi, StarOp::U) {
            continue;
        }
        ensure!(closure(StarOp::T, &pi) == pi, "u-invertible prime {pi} is not a t-ideal");
        let over = e(u_divisors(&pi), "u-divisors")?;
        let unit = FracIdeal::unit(&r);
        for d in &over {
            ensure!(*d == pi || *d == unit, "{d} lies strictly between the u-invertible prime {pi} and R");
        }
    }
    Ok(())
}

fn kaplansky(g: &mut Gen) -> CaseResult {
    let mut found = None;
    for _ in 0..20 {
        let r = g.gen_ring();
        if let Some(p) = g.gen_nonprincipal_prime(&r) {
            found = Some((r, p));
            break;
        }
    }
    let (r, p) = match found {
        Some(x) => x,
        None => {
            let r = ring_of(vec![Atom::quadratic(-5).unwrap()]);
            let p = g.gen_nonprincipal_prime(&r).expect("O_-5 has nonprincipal primes");
            (r, p)
        }
    };
    let pi = p.to_ideal(&r);
    let q = e(find_u_invertible_prime_below(&r, &p), "u-invertible prime below")?;
    let qi = q.to_ideal(&r);
    ensure!(PrimeRef::from_ideal(&qi).as_ref() == Some(&q), "{qi} is not a prime");
    ensure!(subset(&qi, &pi)?, "{qi} is not inside {pi}");
    ensure!(is_star_invertible(&qi, StarOp::U), "{qi} is not u-invertible");
    Ok(())
}

fn dm_bound(g: &mut Gen) -> CaseResult {
    let r = g.gen_ring();
    let f = g.gen_poly_over(&r);
    let h = g.gen_poly_over(&r);
    let n = e(dedekind_mertens_n(&f, &h), "Dedekind-Mertens")?;
    let deg = h.degree().unwrap_or(0);
    ensure!(n <= deg, "n = {n} exceeds deg g = {deg} for f = {f}, g = {h}");
    let (cf, cg, cfg) = (content(&f), content(&h), content(&f.mul(&h)));
    let holds = |m: u32| -> Result<bool, String> {
        let lhs = e(cf.pow(m + 1).product(&cg), "product")?;
        let rhs = e(cf.pow(m).product(&cfg), "product")?;
        Ok(lhs == rhs)
    };
    ensure!(holds(n)?, "identity fails at the returned n = {n} for f = {f}, g = {h}");
    if n >= 1 {
        ensure!(!holds(n - 1)?, "identity already holds at n - 1 = {} for f = {f}, g = {h}", n - 1);
    }
    Ok(())
}

fn nagata_sets(g: &mut Gen) -> CaseResult {
    let r = g.gen_ring();
    let f = g.gen_poly_over(&r);
    let h = g.gen_poly_over(&r);
    let fh = f.mul(&h);
    ensure!(
        (in_nu(&f) && in_nu(&h)) == in_nu(&fh),
        "N_u is not saturated multiplicative at f = {f}, g = {h}"
    );
    if in_nu(&f) {
        ensure!(is_mccoy_regular(&f), "{f} is in N_u but not McCoy regular");
    }
    ensure!(in_nu(&f) == (content(&f).is_regular() && in_nv(&f)), "N_u != N_v^r at {f}");
    Ok(())
}

fn classify(g: &mut Gen) -> CaseResult {
    let r = g.gen_ring();
    let rep = e(classify_ring(&r), "classify")?;
    ensure!(rep.flags.implications_hold(), "flag implications fail on {r}: {:?}", rep.flags);
    let mut total = AbelianGroup::trivial();
    for (c, a) in r.atoms().iter().enumerate() {
        let single = e(classify_ring(&ring_of(vec![a.clone()])), "classify")?;
        ensure!(single.class_group_total == rep.class_group[c], "class group of component {c} of {r} differs from {a} alone");
        total = total.direct_sum(&single.class_group_total);
        if let Atom::Quadratic(q) = a {
            let h = class_number_by_forms(q.d);
            ensure!(rep.class_group[c].order() == h, "class group of {a} has order {}, forms give {h}", rep.class_group[c].order());
        }
    }
    ensure!(total == rep.class_group_total, "Cl({r}) = {} is not the sum of the components' groups {total}", rep.class_group_total);
    let krull = e(check_general_krull(&r), "general Krull")?;
    ensure!(krull.pass == rep.flags.general_krull, "general Krull flag disagrees with its certificate on {r}");
    let mut height_one = Vec::new();
    for _ in 0..3 {
        let a = g.gen_regular_element(&r);
        if r.is_unit(&a) {
            continue;
        }
        let cert = e(factor_principal(&r, &a), "factor")?;
        height_one.extend(cert.factors.into_iter().map(|(p, _)| p).filter(|p| p.is_height_one()));
    }
    if rep.flags.pi_ring {
        for p in &height_one {
            ensure!(is_invertible(&p.to_ideal(&r)), "{} is not invertible in the π-ring {r}", p.display(&r));
        }
    }
    if !height_one.is_empty() && height_one.iter().all(|p| is_invertible(&p.to_ideal(&r))) {
        ensure!(rep.flags.pi_ring, "every sampled height-one prime of {r} is invertible but the π-ring flag is unset");
    }
    Ok(())
}

fn json_roundtrip(g: &mut Gen) -> CaseResult {
    let r = g.gen_ring();
    let i = g.gen_ideal(&r);
    let text = serde_json::to_string(&ideal_to_json(&i)).map_err(|x| x.to_string())?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|x| x.to_string())?;
    let back = ideal_from_json(&v).map_err(|x| format!("reading {text}: {x}"))?;
    ensure!(back == i, "JSON round trip changes {i} into {back}");
    let rr = dsl::parse_ring(&r.to_string()).map_err(|x| format!("reparsing ring {r}: {x}"))?;
    ensure!(rr == r, "ring {r} reparses as {rr}");
    if let Some(lit) = dsl::ideal_literal(&i) {
        let parsed = dsl::parse_ideal(&r, &lit).map_err(|x| format!("reparsing {lit}: {x}"))?;
        ensure!(parsed == i, "literal {lit} of {i} reparses as {parsed}");
    }
    let x = g.gen_fraction(&r);
    let lit = format!(
        "[{}]",
        x.parts().iter().map(|s| format!("{s}")).collect::<Vec<_>>().join(", ")
    );
    let parsed = dsl::parse_fraction(&r, &lit).map_err(|err| format!("reparsing {lit}: {err}"))?;
    ensure!(parsed == x, "element literal {lit} reparses as {parsed}");
    Ok(())
}
