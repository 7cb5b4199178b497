//! Polynomials over a ring of the universe: content ideals, the multiplicative
//! sets `N_u` and `N_v`, McCoy regularity and the Dedekind–Mertens exponent.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::{ideal_from_generators, FracIdeal};
use crate::ring::{Element, Fraction, RingDesc};
use crate::star::{closure, in_u_closure_via_stability, StarOp};

pub const DEFAULT_POLY_DEGREE_CAP: u32 = 16;

/// Dense polynomial in one variable `t` over `R`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyOverR {
    ring: RingDesc,
    coeffs: Vec<Element>,
}

impl PolyOverR {
    pub fn new(ring: &RingDesc, mut coeffs: Vec<Element>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        PolyOverR { ring: ring.clone(), coeffs }
    }

    pub fn zero(ring: &RingDesc) -> Self {
        PolyOverR { ring: ring.clone(), coeffs: Vec::new() }
    }

    pub fn ring(&self) -> &RingDesc {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.len().checked_sub(1).map(|d| d as u32)
    }

    pub fn mul(&self, o: &PolyOverR) -> PolyOverR {
        if self.is_zero() || o.is_zero() {
            return PolyOverR::zero(&self.ring);
        }
        let r = &self.ring;
        let mut out = vec![r.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = r.add(&out[i + j], &r.mul(a, b));
            }
        }
        PolyOverR::new(r, out)
    }
}

impl fmt::Display for PolyOverR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "poly: {}", self.ring.zero());
        }
        let cs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "poly: {}", cs.join(", "))
    }
}

/// The ideal generated by the coefficients; `c(0) = (0)`.
pub fn content(f: &PolyOverR) -> FracIdeal {
    let gens: Vec<Fraction> = f.coeffs.iter().map(|c| c.to_fraction()).collect();
    ideal_from_generators(&f.ring, &gens)
}

pub fn in_nu(f: &PolyOverR) -> bool {
    closure(StarOp::U, &content(f)).is_unit()
}

pub fn in_nv(f: &PolyOverR) -> bool {
    !f.is_zero() && closure(StarOp::V, &content(f)).is_unit()
}

/// `N_v` restricted to polynomials with regular content.
pub fn in_nvr(f: &PolyOverR) -> bool {
    content(f).is_regular() && in_nv(f)
}

pub fn is_mccoy_regular(f: &PolyOverR) -> bool {
    content(f).annihilator().is_zero()
}

pub fn dedekind_mertens_n(f: &PolyOverR, g: &PolyOverR) -> Result<u32> {
    dedekind_mertens_n_capped(f, g, DEFAULT_POLY_DEGREE_CAP)
}

/// Smallest `n` with `c(f)^(n+1) c(g) = c(f)^n c(fg)`.
pub fn dedekind_mertens_n_capped(f: &PolyOverR, g: &PolyOverR, cap: u32) -> Result<u32> {
    if f.ring != g.ring {
        return Err(Error::RingMismatch);
    }
    for p in [f, g] {
        if let Some(d) = p.degree().filter(|d| *d > cap) {
            return Err(Error::DegreeCapExceeded { degree: d, cap });
        }
    }
    let (cf, cg, cfg) = (content(f), content(g), content(&f.mul(g)));
    let top = g.degree().unwrap_or(0);
    let mut pow = FracIdeal::unit(&f.ring);
    for n in 0..=top {
        let next = pow.product(&cf)?;
        if next.product(&cg)? == pow.product(&cfg)? {
            return Ok(n);
        }
        pow = next;
    }
    unreachable!("the identity holds at n = deg g")
}

/// Membership of `x` in `I R[X]_{N_u} ∩ T(R)`, decided through stability.
pub fn in_nagata_extension(i: &FracIdeal, x: &Fraction) -> Result<bool> {
    in_u_closure_via_stability(i, x)
}
