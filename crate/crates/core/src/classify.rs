//! Placement of a ring in the hierarchy of factorization rings, with certificates.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{factor_principal, FactorCert};
use crate::ideal::{AtomPrime, FracIdeal, PrimeRef};
use crate::poly::{Poly, VAR_X, VAR_Y};
use crate::quad::{self, AbelianGroup, ClassGroup, QuadNum, DEFAULT_CLASS_GROUP_BOUND};
use crate::ring::{poly, Atom, Element, RingDesc, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Dims {
    pub krull_dim: u32,
    /// Largest dimension among the non-field domain components; 0 when `R = T(R)`.
    pub reg_dim: u32,
    pub dim_t: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub krull: bool,
    pub general_krull: bool,
    pub pi_ring: bool,
    pub ufr: bool,
    pub general_zpi: bool,
    pub pir: bool,
    pub dedekind_ring: bool,
    pub factorial_ring: bool,
    pub regular_pir: bool,
    pub almost_ufr: bool,
    pub reduced: bool,
}

impl Flags {
    pub fn pairs(&self) -> [(&'static str, bool); 11] {
        [
            ("krull", self.krull),
            ("general_krull", self.general_krull),
            ("pi_ring", self.pi_ring),
            ("ufr", self.ufr),
            ("general_zpi", self.general_zpi),
            ("pir", self.pir),
            ("dedekind_ring", self.dedekind_ring),
            ("factorial_ring", self.factorial_ring),
            ("regular_pir", self.regular_pir),
            ("almost_ufr", self.almost_ufr),
            ("reduced", self.reduced),
        ]
    }

    /// Implications among the classes: PIR ⟹ UFR ∧ general ZPI ⟹ π-ring ⟹
    /// general Krull ⟹ Krull, and the regular variants.
    pub fn implications_hold(&self) -> bool {
        let imp = |a: bool, b: bool| !a || b;
        imp(self.pir, self.ufr && self.general_zpi)
            && imp(self.ufr, self.pi_ring)
            && imp(self.general_zpi, self.pi_ring)
            && imp(self.pi_ring, self.general_krull)
            && imp(self.general_krull, self.krull)
            && imp(self.regular_pir, self.dedekind_ring && self.factorial_ring)
            && imp(self.ufr, self.almost_ufr)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub dims: Dims,
    /// One group per component.
    pub class_group: Vec<AbelianGroup>,
    pub class_group_total: AbelianGroup,
    pub picard_group: Vec<AbelianGroup>,
    pub picard_group_total: AbelianGroup,
    pub flags: Flags,
    /// Nonprincipal primes generating the class group.
    pub witnesses: Vec<PrimeRef>,
    /// `R = T(R)`: every flag is set by the structure theorem for such rings.
    pub total_quotient_ring: bool,
}

pub fn class_group_quadratic(d: i64) -> Result<ClassGroup> {
    quad::class_group(d, DEFAULT_CLASS_GROUP_BOUND)
}

pub fn classify_ring(r: &RingDesc) -> Result<ClassReport> {
    classify_ring_bounded(r, DEFAULT_CLASS_GROUP_BOUND)
}

pub fn classify_ring_bounded(r: &RingDesc, bound: u64) -> Result<ClassReport> {
    let mut cl = Vec::new();
    let mut witnesses = Vec::new();
    for (c, a) in r.atoms().iter().enumerate() {
        match a {
            Atom::Quadratic(q) => {
                let g = quad::class_group(q.d, bound)?;
                witnesses.extend(g.generators.iter().map(|p| PrimeRef::new(c, AtomPrime::QuadPrime(p.clone()))));
                cl.push(g.group);
            }
            _ => cl.push(AbelianGroup::trivial()),
        }
    }
    // Pic = Cl on Dedekind atoms, trivial elsewhere, so the two agree componentwise.
    let pic = cl.clone();
    let total = cl.iter().fold(AbelianGroup::trivial(), |acc, g| acc.direct_sum(g));
    let pic_total = pic.iter().fold(AbelianGroup::trivial(), |acc, g| acc.direct_sum(g));
    let tq = r.is_total_quotient_ring();
    let dims = Dims {
        krull_dim: r.krull_dim(),
        reg_dim: r.atoms().iter().filter(|a| a.is_domain() && !a.is_field()).map(|a| a.krull_dim()).max().unwrap_or(0),
        dim_t: r.total_quotient().krull_dim,
    };
    let gk = check_general_krull(r)?;
    let cl0 = total.is_trivial();
    let flags = if tq {
        Flags {
            krull: true,
            general_krull: gk.pass,
            pi_ring: true,
            ufr: true,
            general_zpi: true,
            pir: true,
            dedekind_ring: true,
            factorial_ring: true,
            regular_pir: true,
            almost_ufr: true,
            reduced: reduced(r),
        }
    } else {
        let dim1 = dims.krull_dim <= 1;
        Flags {
            krull: gk.krull_clause,
            general_krull: gk.pass,
            pi_ring: total == pic_total,
            ufr: cl0,
            general_zpi: dim1,
            pir: cl0 && dim1,
            dedekind_ring: dims.reg_dim == 1,
            factorial_ring: cl0,
            regular_pir: dims.reg_dim == 1 && cl0,
            almost_ufr: true,
            reduced: reduced(r),
        }
    };
    Ok(ClassReport {
        dims,
        class_group: cl,
        class_group_total: total,
        picard_group: pic,
        picard_group_total: pic_total,
        flags,
        witnesses,
        total_quotient_ring: tq,
    })
}

fn reduced(r: &RingDesc) -> bool {
    r.atoms().iter().all(|a| !matches!(a, Atom::ModPrimePower { k, .. } if *k >= 2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalKind {
    Dvr { uniformizer: Element },
    Spr { nilpotency: u32 },
    Field,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalClass {
    pub at: PrimeRef,
    pub kind: LocalKind,
}

/// Structure of `R_P` at a maximal u-ideal `P`.
pub fn localize_classify(r: &RingDesc, p: &PrimeRef) -> Result<LocalClass> {
    let c = p.component;
    let a = r.atom(c);
    let kind = match (&p.prime, a) {
        (AtomPrime::IntegerPrime(q), _) => LocalKind::Dvr { uniformizer: r.embed(c, crate::ring::int(*q as i64), true) },
        (AtomPrime::QuadPrime(q), _) => {
            let u = quad::uniformizer(q);
            LocalKind::Dvr { uniformizer: r.embed(c, Scalar::Quad(QuadNum::from_int(&u)), true) }
        }
        (AtomPrime::PolyPrime(f), _) => LocalKind::Dvr { uniformizer: r.embed(c, poly(f.clone()), true) },
        (AtomPrime::SprMax, Atom::ModPrimePower { k, .. }) => LocalKind::Spr { nilpotency: *k },
        (AtomPrime::ZeroPrime, Atom::Rational) => LocalKind::Field,
        _ => return Err(Error::NotMaximalUIdeal),
    };
    Ok(LocalClass { at: p.clone(), kind })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPrimeWitness {
    pub prime: PrimeRef,
    pub generator: Element,
    pub generates: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralKrullCert {
    pub dim_t: u32,
    pub minimal_primes: Vec<MinimalPrimeWitness>,
    pub samples: Vec<FactorCert>,
    pub krull_clause: bool,
    pub pass: bool,
}

fn sample_nonunits(a: &Atom) -> Vec<Scalar> {
    match a {
        Atom::Integer => [2, 6, 12].iter().map(|n| crate::ring::int(*n)).collect(),
        Atom::Quadratic(_) => vec![crate::ring::quad(2, 0), crate::ring::quad(6, 0), crate::ring::quad(1, 1)],
        Atom::Poly { p } => {
            let (x, y) = (Poly::var(*p, VAR_X), Poly::var(*p, VAR_Y));
            vec![poly(x.clone()), poly(x.mul(&y).add(&Poly::one(*p))), poly(x.pow(2).mul(&y))]
        }
        _ => Vec::new(),
    }
}

/// Checks `dim T(R) = 0`, principal minimal primes and factorization of sampled
/// regular principal ideals.
pub fn check_general_krull(r: &RingDesc) -> Result<GeneralKrullCert> {
    let dim_t = r.total_quotient().krull_dim;
    let mut minimal_primes = Vec::new();
    for (c, a) in r.atoms().iter().enumerate() {
        let (prime, generator) = match a {
            Atom::ModPrimePower { p, .. } => (PrimeRef::new(c, AtomPrime::SprMax), r.embed(c, Scalar::Res(*p), true)),
            _ => (PrimeRef::new(c, AtomPrime::ZeroPrime), r.embed(c, a.zero(), true)),
        };
        let generates = FracIdeal::principal(r, &generator.to_fraction()) == prime.to_ideal(r);
        minimal_primes.push(MinimalPrimeWitness { prime, generator, generates });
    }
    let mut samples = Vec::new();
    for (c, a) in r.atoms().iter().enumerate() {
        for x in sample_nonunits(a) {
            samples.push(factor_principal(r, &r.embed(c, x, true))?);
        }
    }
    let all: Vec<Scalar> = r
        .atoms()
        .iter()
        .map(|a| sample_nonunits(a).into_iter().next().unwrap_or_else(|| a.one()))
        .collect();
    let all = r.element(all)?;
    if !r.is_unit(&all) {
        samples.push(factor_principal(r, &all)?);
    }
    let krull_clause = samples.iter().all(|s| s.verified && s.factors.iter().all(|(p, _)| p.is_height_one()));
    let pass = dim_t == 0 && minimal_primes.iter().all(|m| m.generates) && krull_clause;
    Ok(GeneralKrullCert { dim_t, minimal_primes, samples, krull_clause, pass })
}
