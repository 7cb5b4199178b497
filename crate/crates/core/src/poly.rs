//! Sparse polynomials over a small prime field `F_p`.
//!
//! Variables are `X`, `Y` and an auxiliary elimination variable `T`. Terms are
//! kept sorted in a single monomial order: a block order in which the `T`
//! exponent dominates, followed by graded lexicographic order with `X > Y`.
//! On `T`-free polynomials this is plain grlex, so every `T`-free Gröbner basis
//! computed here is a grlex basis, while the same order eliminates `T`.

use std::cmp::Ordering;
use std::fmt;

/// Exponent vector `[x, y, t]`.
pub type Mono = [u16; 3];

pub const VAR_X: usize = 0;
pub const VAR_Y: usize = 1;
pub const VAR_T: usize = 2;

pub fn mono_cmp(a: &Mono, b: &Mono) -> Ordering {
    a[2].cmp(&b[2])
        .then((a[0] + a[1]).cmp(&(b[0] + b[1])))
        .then(a[0].cmp(&b[0]))
}

pub fn mono_divides(a: &Mono, b: &Mono) -> bool {
    a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]
}

pub fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn mono_div(a: &Mono, b: &Mono) -> Mono {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn mono_lcm(a: &Mono, b: &Mono) -> Mono {
    [a[0].max(b[0]), a[1].max(b[1]), a[2].max(b[2])]
}

pub fn mono_degree(a: &Mono) -> u32 {
    a[0] as u32 + a[1] as u32 + a[2] as u32
}

pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    p: u32,
    /// Nonzero terms, strictly descending in `mono_cmp` order.
    terms: Vec<(Mono, u32)>,
}

impl Poly {
    pub fn zero(p: u32) -> Self {
        Poly { p, terms: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u32, c: i64) -> Self {
        Self::monomial(p, [0, 0, 0], c)
    }

    pub fn var(p: u32, i: usize) -> Self {
        let mut m = [0, 0, 0];
        m[i] = 1;
        Self::monomial(p, m, 1)
    }

    pub fn monomial(p: u32, m: Mono, c: i64) -> Self {
        let c = c.rem_euclid(p as i64) as u32;
        if c == 0 {
            Self::zero(p)
        } else {
            Poly { p, terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unreduced) terms.
    pub fn from_terms(p: u32, terms: impl IntoIterator<Item = (Mono, i64)>) -> Self {
        let mut v: Vec<(Mono, u32)> = terms
            .into_iter()
            .map(|(m, c)| (m, c.rem_euclid(p as i64) as u32))
            .collect();
        v.sort_by(|a, b| mono_cmp(&b.0, &a.0));
        let mut out: Vec<(Mono, u32)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = (last.1 + c) % p,
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Poly { p, terms: out }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn terms(&self) -> &[(Mono, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0] == ([0, 0, 0], 1)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == [0, 0, 0])
    }

    pub fn leading_term(&self) -> Option<(Mono, u32)> {
        self.terms.first().copied()
    }

    pub fn leading_mono(&self) -> Mono {
        self.terms[0].0
    }

    pub fn leading_coeff(&self) -> u32 {
        self.terms.first().map(|t| t.1).unwrap_or(0)
    }

    pub fn coeff(&self, m: &Mono) -> u32 {
        self.terms
            .iter()
            .find(|t| &t.0 == m)
            .map(|t| t.1)
            .unwrap_or(0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| mono_degree(&t.0)).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|t| t.0[var] as u32).max()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.0[var] > 0)
    }

    pub fn scale(&self, c: u32) -> Poly {
        let c = c % self.p;
        if c == 0 {
            return Poly::zero(self.p);
        }
        Poly {
            p: self.p,
            terms: self
                .terms
                .iter()
                .map(|&(m, a)| (m, mul_mod(a, c, self.p)))
                .collect(),
        }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading_coeff(), self.p))
    }

    pub fn mul_term(&self, m: &Mono, c: u32) -> Poly {
        let c = c % self.p;
        if c == 0 {
            return Poly::zero(self.p);
        }
        Poly {
            p: self.p,
            terms: self
                .terms
                .iter()
                .map(|&(t, a)| (mono_mul(&t, m), mul_mod(a, c, self.p)))
                .collect(),
        }
    }

    /// `self - c * x^m * g`, computed by a sorted merge.
    pub fn sub_scaled(&self, g: &Poly, m: &Mono, c: u32) -> Poly {
        let p = self.p;
        let neg = (p - c % p) % p;
        if neg == 0 {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() || j < g.terms.len() {
            if j == g.terms.len() {
                out.push(self.terms[i]);
                i += 1;
                continue;
            }
            let gm = mono_mul(&g.terms[j].0, m);
            let gc = mul_mod(g.terms[j].1, neg, p);
            if i == self.terms.len() {
                out.push((gm, gc));
                j += 1;
                continue;
            }
            match mono_cmp(&self.terms[i].0, &gm) {
                Ordering::Greater => {
                    out.push(self.terms[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm, gc));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = (self.terms[i].1 + gc) % p;
                    if s != 0 {
                        out.push((gm, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { p, terms: out }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.sub_scaled(other, &[0, 0, 0], self.p - 1)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.sub_scaled(other, &[0, 0, 0], 1)
    }

    pub fn neg(&self) -> Poly {
        self.scale(self.p - 1)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.p);
        }
        let mut acc: Vec<(Mono, i64)> = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(a, ca) in &self.terms {
            for &(b, cb) in &other.terms {
                acc.push((mono_mul(&a, &b), mul_mod(ca, cb, self.p) as i64));
            }
        }
        Poly::from_terms(self.p, acc)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut r = Poly::one(self.p);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Full reduction modulo a list of polynomials (multivariate division remainder).
    pub fn reduce(&self, basis: &[Poly]) -> Poly {
        let mut f = self.clone();
        let mut rem: Vec<(Mono, u32)> = Vec::new();
        while let Some((m, c)) = f.leading_term() {
            match basis
                .iter()
                .find(|g| !g.is_zero() && mono_divides(&g.leading_mono(), &m))
            {
                Some(g) => {
                    let factor = mul_mod(c, inv_mod(g.leading_coeff(), self.p), self.p);
                    f = f.sub_scaled(g, &mono_div(&m, &g.leading_mono()), factor);
                }
                None => {
                    rem.push((m, c));
                    f.terms.remove(0);
                }
            }
        }
        Poly { p: self.p, terms: rem }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (dm, dc) = d.leading_term().unwrap();
        let dinv = inv_mod(dc, self.p);
        let mut f = self.clone();
        let mut q: Vec<(Mono, i64)> = Vec::new();
        while let Some((m, c)) = f.leading_term() {
            if !mono_divides(&dm, &m) {
                return None;
            }
            let qm = mono_div(&m, &dm);
            let qc = mul_mod(c, dinv, self.p);
            q.push((qm, qc as i64));
            f = f.sub_scaled(d, &qm, qc);
        }
        Some(Poly::from_terms(self.p, q))
    }

    /// The homogeneous component of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> Poly {
        Poly {
            p: self.p,
            terms: self
                .terms
                .iter()
                .filter(|t| mono_degree(&t.0) == k)
                .copied()
                .collect(),
        }
    }

    /// Grlex comparison of term lists, used for canonical orderings.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        for (a, b) in self.terms.iter().zip(other.terms.iter()) {
            let o = mono_cmp(&a.0, &b.0).then(a.1.cmp(&b.1));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }

    /// Evaluates at `X = x`, `Y = y` (no `T` allowed).
    pub fn eval(&self, x: u32, y: u32) -> u32 {
        let p = self.p as u64;
        let mut s = 0u64;
        for &(m, c) in &self.terms {
            let mut v = c as u64;
            for _ in 0..m[0] {
                v = v * x as u64 % p;
            }
            for _ in 0..m[1] {
                v = v * y as u64 % p;
            }
            s = (s + v) % p;
        }
        s as u32
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.p.cmp(&other.p).then(self.canonical_cmp(other))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = ["X", "Y", "T"];
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if *c != 1 || *m == [0, 0, 0] {
                factors.push(c.to_string());
            }
            for v in 0..3 {
                match m[v] {
                    0 => {}
                    1 => factors.push(names[v].to_string()),
                    e => factors.push(format!("{}^{}", names[v], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[F_{}]({})", self.p, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(p: u32) -> Poly {
        Poly::var(p, VAR_X)
    }
    fn y(p: u32) -> Poly {
        Poly::var(p, VAR_Y)
    }

    #[test]
    fn square_in_characteristic_two() {
        let s = x(2).add(&y(2));
        assert_eq!(s.mul(&s), x(2).pow(2).add(&y(2).pow(2)));
    }

    #[test]
    fn grlex_leading_term() {
        let f = x(3).mul(&y(3)).add(&y(3).pow(3)).add(&x(3));
        assert_eq!(f.leading_mono(), [0, 3, 0]);
        let g = x(3).pow(2).add(&x(3).mul(&y(3)));
        assert_eq!(g.leading_mono(), [2, 0, 0]);
    }

    #[test]
    fn exact_division() {
        let p = 5;
        let a = x(p).add(&y(p).scale(2)).add(&Poly::one(p));
        let b = x(p).mul(&y(p)).sub(&Poly::constant(p, 3));
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.add(&Poly::one(p)).div_exact(&a), None);
    }

    #[test]
    fn elimination_variable_dominates() {
        let t = Poly::var(2, VAR_T);
        let f = t.add(&x(2).pow(5));
        assert_eq!(f.leading_mono(), [0, 0, 1]);
    }
}
