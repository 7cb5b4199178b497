//! Buchberger's algorithm and the integral-ideal operations built on it.
//!
//! An integral ideal of `F_p[X,Y]` is represented by its reduced Gröbner basis
//! (monic, inter-reduced, sorted by ascending leading monomial). The empty
//! basis is the zero ideal and `[1]` is the unit ideal; both representations
//! are unique, so ideal equality is basis equality.

use crate::poly::{mono_cmp, mono_degree, mono_divides, mono_div, mono_lcm, Poly, VAR_T};

fn s_poly(f: &Poly, g: &Poly) -> Poly {
    let l = mono_lcm(&f.leading_mono(), &g.leading_mono());
    let p = f.modulus();
    let a = f.mul_term(&mono_div(&l, &f.leading_mono()), crate::poly::inv_mod(f.leading_coeff(), p));
    let b = g.mul_term(&mono_div(&l, &g.leading_mono()), crate::poly::inv_mod(g.leading_coeff(), p));
    a.sub(&b)
}

fn coprime_monos(a: &[u16; 3], b: &[u16; 3]) -> bool {
    (0..3).all(|i| a[i] == 0 || b[i] == 0)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner(gens: &[Poly]) -> Vec<Poly> {
    let mut basis: Vec<Poly> = Vec::new();
    for g in gens {
        let r = g.reduce(&basis);
        if !r.is_zero() {
            if r.is_constant() {
                return vec![Poly::one(r.modulus())];
            }
            basis.push(r.monic());
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // normal selection strategy: smallest lcm first
        let (k, _) = pairs
            .iter()
            .enumerate()
            .min_by(|a, b| {
                let la = mono_lcm(&basis[a.1 .0].leading_mono(), &basis[a.1 .1].leading_mono());
                let lb = mono_lcm(&basis[b.1 .0].leading_mono(), &basis[b.1 .1].leading_mono());
                mono_cmp(&la, &lb)
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(k);
        let (fi, fj) = (&basis[i], &basis[j]);
        if coprime_monos(&fi.leading_mono(), &fj.leading_mono()) {
            continue;
        }
        let lij = mono_lcm(&fi.leading_mono(), &fj.leading_mono());
        // chain criterion
        let chain = (0..basis.len()).any(|m| {
            m != i
                && m != j
                && mono_divides(&basis[m].leading_mono(), &lij)
                && !pairs.contains(&(i.min(m), i.max(m)))
                && !pairs.contains(&(j.min(m), j.max(m)))
        });
        if chain {
            continue;
        }
        let r = s_poly(fi, fj).reduce(&basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![Poly::one(r.modulus())];
        }
        let idx = basis.len();
        basis.push(r.monic());
        for m in 0..idx {
            pairs.push((m, idx));
        }
    }
    reduce_basis(basis)
}

fn reduce_basis(mut basis: Vec<Poly>) -> Vec<Poly> {
    // drop elements whose leading monomial is divisible by another's
    basis.sort_by(|a, b| mono_cmp(&a.leading_mono(), &b.leading_mono()));
    let mut minimal: Vec<Poly> = Vec::new();
    for g in basis {
        if !minimal
            .iter()
            .any(|h| mono_divides(&h.leading_mono(), &g.leading_mono()))
        {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|(m, _)| *m != k)
            .map(|(_, g)| g.clone())
            .collect();
        let lt = minimal[k].leading_term().unwrap();
        let tail = Poly::from_terms(minimal[k].modulus(), minimal[k].terms()[1..].iter().map(|&(m, c)| (m, c as i64)));
        let tail = tail.reduce(&others);
        let head = Poly::monomial(minimal[k].modulus(), lt.0, lt.1 as i64);
        reduced.push(head.add(&tail).monic());
    }
    reduced.sort_by(|a, b| mono_cmp(&a.leading_mono(), &b.leading_mono()));
    reduced
}

pub fn is_unit_ideal(gb: &[Poly]) -> bool {
    gb.len() == 1 && gb[0].is_one()
}

pub fn contains(gb: &[Poly], f: &Poly) -> bool {
    f.reduce(gb).is_zero()
}

pub fn contains_ideal(gb: &[Poly], other: &[Poly]) -> bool {
    other.iter().all(|g| contains(gb, g))
}

pub fn sum(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let all: Vec<Poly> = a.iter().chain(b.iter()).cloned().collect();
    groebner(&all)
}

pub fn product(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut gens = Vec::with_capacity(a.len() * b.len());
    for f in a {
        for g in b {
            gens.push(f.mul(g));
        }
    }
    groebner(&gens)
}

/// `I ∩ J` by eliminating `T` from `T·I + (1 - T)·J`.
pub fn intersect(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if is_unit_ideal(a) {
        return b.to_vec();
    }
    if is_unit_ideal(b) {
        return a.to_vec();
    }
    let p = a[0].modulus();
    let t = Poly::var(p, VAR_T);
    let one_minus_t = Poly::one(p).sub(&t);
    let mut gens: Vec<Poly> = a.iter().map(|f| f.mul(&t)).collect();
    gens.extend(b.iter().map(|g| g.mul(&one_minus_t)));
    groebner(&gens)
        .into_iter()
        .filter(|g| !g.involves(VAR_T))
        .collect()
}

/// `(I : f) = {g : g f ∈ I}` for a nonzero polynomial `f`.
pub fn quotient_by(a: &[Poly], f: &Poly) -> Vec<Poly> {
    assert!(!f.is_zero());
    let inter = intersect(a, &[f.monic()]);
    let gens: Vec<Poly> = inter
        .iter()
        .map(|g| g.div_exact(f).expect("intersection element divisible by f"))
        .collect();
    groebner(&gens)
}

/// Principal generator of a principal ideal given by a reduced basis.
pub fn principal_generator(gb: &[Poly]) -> Option<&Poly> {
    if gb.len() == 1 {
        Some(&gb[0])
    } else {
        None
    }
}

/// Number of standard monomials when the quotient is finite-dimensional.
pub fn quotient_dimension(gb: &[Poly]) -> Option<usize> {
    if gb.is_empty() {
        return None;
    }
    let lms: Vec<[u16; 3]> = gb.iter().map(|g| g.leading_mono()).collect();
    let px = lms.iter().filter(|m| m[1] == 0 && m[2] == 0).map(|m| m[0]).min()?;
    let py = lms.iter().filter(|m| m[0] == 0 && m[2] == 0).map(|m| m[1]).min()?;
    let mut count = 0;
    for i in 0..px {
        for j in 0..py {
            let m = [i, j, 0];
            if !lms.iter().any(|l| mono_divides(l, &m)) {
                count += 1;
            }
        }
    }
    Some(count)
}

/// Standard monomials of a zero-dimensional ideal, ascending.
pub fn standard_monomials(gb: &[Poly]) -> Vec<[u16; 3]> {
    let lms: Vec<[u16; 3]> = gb.iter().map(|g| g.leading_mono()).collect();
    let bound = gb.iter().map(|g| mono_degree(&g.leading_mono())).max().unwrap_or(0) as u16;
    let mut out = Vec::new();
    for i in 0..=bound {
        for j in 0..=bound {
            let m = [i, j, 0];
            if !lms.iter().any(|l| mono_divides(l, &m)) {
                out.push(m);
            }
        }
    }
    out.sort_by(mono_cmp);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{VAR_X, VAR_Y};

    fn x(p: u32) -> Poly {
        Poly::var(p, VAR_X)
    }
    fn y(p: u32) -> Poly {
        Poly::var(p, VAR_Y)
    }

    #[test]
    fn reduced_basis_of_x2_xy() {
        let gb = groebner(&[x(2).pow(2), x(2).mul(&y(2))]);
        assert_eq!(gb.len(), 2);
        assert_eq!(gb[0], x(2).mul(&y(2)));
        assert_eq!(gb[1], x(2).pow(2));
    }

    #[test]
    fn unit_ideal_detection() {
        let gb = groebner(&[x(3), x(3).add(&Poly::one(3))]);
        assert!(is_unit_ideal(&gb));
    }

    #[test]
    fn intersection_of_principal_ideals_is_lcm() {
        let p = 2;
        let a = x(p).mul(&y(p));
        let b = x(p).pow(2);
        let i = intersect(&[a], &[b]);
        assert_eq!(i, vec![x(p).pow(2).mul(&y(p))]);
    }

    #[test]
    fn quotient_of_maximal_ideal() {
        let p = 2;
        let m = groebner(&[x(p), y(p)]);
        let q = quotient_by(&m, &x(p));
        assert!(is_unit_ideal(&q));
        let q2 = quotient_by(&groebner(&[x(p).pow(2), x(p).mul(&y(p))]), &x(p));
        assert_eq!(q2, groebner(&[x(p), y(p)]));
    }

    #[test]
    fn basis_is_canonical_regardless_of_generators() {
        let p = 3;
        let g1 = groebner(&[x(p).add(&y(p)), y(p).pow(2)]);
        let g2 = groebner(&[x(p).add(&y(p)).add(&y(p).pow(2)), x(p).pow(2), y(p).pow(2).scale(2)]);
        assert_eq!(g1, g2);
        assert_eq!(quotient_dimension(&g1), Some(2));
    }
}
