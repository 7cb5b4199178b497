//! Dense univariate polynomials over `F_p` and the bivariate gcd built on them.
//!
//! The bivariate gcd views `F_p[X,Y]` as `(F_p[Y])[X]` and runs a primitive
//! pseudo-remainder sequence. It is the fast path used for canonicalizing
//! rational functions; the Gröbner route (`lcm` by ideal intersection) is kept
//! as an independent check in the tests.

use crate::poly::{inv_mod, mul_mod, Poly, VAR_X, VAR_Y};

/// Coefficients low to high, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    pub p: u32,
    pub c: Vec<u32>,
}

impl UPoly {
    pub fn new(p: u32, mut c: Vec<u32>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        UPoly { p, c }
    }

    pub fn zero(p: u32) -> Self {
        UPoly { p, c: vec![] }
    }

    pub fn one(p: u32) -> Self {
        UPoly { p, c: vec![1] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> u32 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| (self.c.get(i).copied().unwrap_or(0) + o.c.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        UPoly::new(self.p, v)
    }

    pub fn scale(&self, k: u32) -> UPoly {
        UPoly::new(self.p, self.c.iter().map(|&a| mul_mod(a, k % self.p, self.p)).collect())
    }

    pub fn neg(&self) -> UPoly {
        self.scale(self.p - 1)
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero(self.p);
        }
        let mut v = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] = (v[i + j] + a as u64 * b as u64) % self.p as u64;
            }
        }
        UPoly::new(self.p, v.into_iter().map(|x| x as u32).collect())
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero());
        let p = self.p;
        let mut r = self.c.clone();
        let dd = d.c.len() - 1;
        let inv = inv_mod(d.lead(), p);
        if r.len() < d.c.len() {
            return (UPoly::zero(p), self.clone());
        }
        let mut q = vec![0u32; r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = mul_mod(r[k + dd], inv, p);
            q[k] = coef;
            if coef != 0 {
                for (j, &b) in d.c.iter().enumerate() {
                    r[k + j] = (r[k + j] + p - mul_mod(coef, b, p)) % p;
                }
            }
        }
        (UPoly::new(p, q), UPoly::new(p, r))
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lead(), self.p))
    }

    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: u32) -> u32 {
        let mut s = 0u64;
        for &a in self.c.iter().rev() {
            s = (s * x as u64 + a as u64) % self.p as u64;
        }
        s as u32
    }

    /// Irreducibility by trial division against every monic polynomial of
    /// degree at most half the degree (inputs are tiny).
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(n) => n,
        };
        for d in 1..=n / 2 {
            let mut found = false;
            for_each_monic(self.p, d, |cand| {
                if !found && self.divrem(cand).1.is_zero() {
                    found = true;
                }
            });
            if found {
                return false;
            }
        }
        true
    }
}

/// Calls `f` on every monic polynomial of exact degree `d`.
pub fn for_each_monic(p: u32, d: usize, mut f: impl FnMut(&UPoly)) {
    let total = (p as u64).pow(d as u32);
    for code in 0..total {
        let mut c = Vec::with_capacity(d + 1);
        let mut k = code;
        for _ in 0..d {
            c.push((k % p as u64) as u32);
            k /= p as u64;
        }
        c.push(1);
        f(&UPoly { p, c });
    }
}

fn univariate_in(f: &Poly, var: usize) -> UPoly {
    let n = f.degree_in(var).unwrap_or(0) as usize;
    let mut c = vec![0u32; n + 1];
    for &(m, a) in f.terms() {
        c[m[var] as usize] = a;
    }
    UPoly::new(f.modulus(), c)
}

fn from_univariate(u: &UPoly, var: usize) -> Poly {
    Poly::from_terms(
        u.p,
        u.c.iter().enumerate().map(|(i, &a)| {
            let mut m = [0u16; 3];
            m[var] = i as u16;
            (m, a as i64)
        }),
    )
}

/// `f` as a polynomial in `X` with coefficients in `F_p[Y]`.
fn to_rec(f: &Poly) -> Vec<UPoly> {
    let p = f.modulus();
    let n = f.degree_in(VAR_X).unwrap_or(0) as usize;
    let mut coeffs: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for &(m, a) in f.terms() {
        let row = &mut coeffs[m[0] as usize];
        let j = m[1] as usize;
        if row.len() <= j {
            row.resize(j + 1, 0);
        }
        row[j] = a;
    }
    let mut v: Vec<UPoly> = coeffs.into_iter().map(|c| UPoly::new(p, c)).collect();
    while v.last().map(|u| u.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn from_rec(p: u32, v: &[UPoly]) -> Poly {
    let mut terms = Vec::new();
    for (i, u) in v.iter().enumerate() {
        for (j, &a) in u.c.iter().enumerate() {
            terms.push(([i as u16, j as u16, 0], a as i64));
        }
    }
    Poly::from_terms(p, terms)
}

fn rec_content(v: &[UPoly]) -> UPoly {
    let p = v[0].p;
    v.iter().fold(UPoly::zero(p), |g, c| g.gcd(c))
}

fn rec_div_scalar(v: &[UPoly], c: &UPoly) -> Vec<UPoly> {
    v.iter()
        .map(|u| {
            let (q, r) = u.divrem(c);
            debug_assert!(r.is_zero());
            q
        })
        .collect()
}

fn rec_prem(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    // lc(b)^(deg a - deg b + 1) * a mod b, over F_p[Y]
    let p = b[0].p;
    let mut r: Vec<UPoly> = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    let steps = a.len() as isize - b.len() as isize + 1;
    if steps <= 0 {
        return r;
    }
    for _ in 0..steps {
        if r.len() < b.len() {
            for c in r.iter_mut() {
                *c = c.mul(&lb);
            }
            continue;
        }
        let lr = r[r.len() - 1].clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c = c.mul(&lb);
        }
        for (j, bc) in b.iter().enumerate() {
            r[j + shift] = r[j + shift].sub(&bc.mul(&lr));
        }
        while r.last().map(|u| u.is_zero()).unwrap_or(false) {
            r.pop();
        }
    }
    let _ = p;
    r
}

/// Monic (grlex) gcd of two bivariate polynomials. `gcd(0, 0) = 0`.
pub fn poly_gcd(f: &Poly, g: &Poly) -> Poly {
    let p = f.modulus();
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    if !f.involves(VAR_X) && !g.involves(VAR_X) {
        let u = univariate_in(f, VAR_Y).gcd(&univariate_in(g, VAR_Y));
        return from_univariate(&u, VAR_Y).monic();
    }
    let a = to_rec(f);
    let b = to_rec(g);
    let ca = rec_content(&a);
    let cb = rec_content(&b);
    let c = ca.gcd(&cb);
    let mut a = rec_div_scalar(&a, &ca);
    let mut b = rec_div_scalar(&b, &cb);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            // b is a nonzero element of F_p[Y] and primitive, hence a unit
            a = vec![UPoly::one(p)];
            break;
        }
        let r = rec_prem(&a, &b);
        a = b;
        if r.is_empty() {
            b = Vec::new();
        } else {
            let cr = rec_content(&r);
            b = rec_div_scalar(&r, &cr);
        }
    }
    let cont = rec_content(&a);
    let prim = rec_div_scalar(&a, &cont);
    let prim = from_rec(p, &prim);
    prim.mul(&from_univariate(&c, VAR_Y)).monic()
}
