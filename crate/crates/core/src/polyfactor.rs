//! Exhaustive factorization in `F_p[X,Y]` for small `p` and small degree.
//!
//! A factor `h` of total degree `t` of `f` (degree `n`) is searched for
//! component by component in the grading by total degree. The top components
//! satisfy `f_n = h_t · c_s`, so `h_t` ranges over the monic homogeneous
//! divisors of `f_n`. Each lower component pair `(h_{t-k}, c_{s-k})` is then
//! pinned down by a linear system over `F_p`, and every solution of that
//! system is explored. The search is exhaustive: any true factor satisfies
//! every level equation, so it is reached. Candidates are confirmed by exact
//! division.

use crate::error::{Error, Result};
use crate::poly::{inv_mod, mul_mod, Poly};

pub const DEFAULT_DEGREE_CAP: u32 = 8;

/// `f = unit · Π factors[i].0 ^ factors[i].1` with monic irreducible, sorted factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFactorization {
    pub unit: u32,
    pub factors: Vec<(Poly, u32)>,
}

/// Coefficients of a homogeneous polynomial of degree `e`: index `j` holds the
/// coefficient of `X^(e-j) Y^j`.
fn homog_coeffs(f: &Poly, e: u32) -> Vec<u32> {
    let mut v = vec![0u32; e as usize + 1];
    for &(m, c) in f.terms() {
        if (m[0] + m[1]) as u32 == e {
            v[m[1] as usize] = c;
        }
    }
    v
}

fn homog_poly(p: u32, v: &[u32]) -> Poly {
    let e = v.len() as u16 - 1;
    Poly::from_terms(
        p,
        v.iter()
            .enumerate()
            .map(|(j, &c)| ([e - j as u16, j as u16, 0], c as i64)),
    )
}

fn homog_mul(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut v = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            v[i + j] = (v[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    v
}

/// Solves `A z = b` over `F_p`; returns a particular solution and a kernel basis.
fn solve_mod_p(p: u32, a: &[Vec<u32>], b: &[u32], ncols: usize) -> Option<(Vec<u32>, Vec<Vec<u32>>)> {
    let nrows = a.len();
    let mut m: Vec<Vec<u32>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..nrows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..=ncols {
                    let sub = mul_mod(f, m[r][j], p);
                    m[i][j] = (m[i][j] + p - sub) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| row[ncols] != 0) {
        return None;
    }
    let mut particular = vec![0u32; ncols];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = m[i][ncols];
    }
    let mut kernel = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut z = vec![0u32; ncols];
        z[free] = 1;
        for (i, &c) in pivots.iter().enumerate() {
            z[c] = (p - m[i][free]) % p;
        }
        kernel.push(z);
    }
    Some((particular, kernel))
}

struct Search<'a> {
    p: u32,
    f: &'a Poly,
    comps: Vec<Vec<u32>>, // comps[k] = coefficients of f's degree-k part
    n: u32,
    t: u32,
    s: u32,
}

impl Search<'_> {
    /// `hs[i]` is `h_{t-i}`, `cs[i]` is `c_{s-i}`.
    fn dfs(&self, k: u32, hs: &mut Vec<Vec<u32>>, cs: &mut Vec<Vec<u32>>) -> Option<Poly> {
        let p = self.p;
        if k > self.t {
            let h = hs
                .iter()
                .fold(Poly::zero(p), |acc, v| acc.add(&homog_poly(p, v)));
            return if self.f.div_exact(&h).is_some() { Some(h) } else { None };
        }
        let deg = (self.n - k) as usize;
        let mut rhs = self.comps[deg].clone();
        for i in 1..k as usize {
            let prod = homog_mul(p, &hs[i], &cs[k as usize - i]);
            for (r, x) in rhs.iter_mut().zip(prod) {
                *r = (*r + p - x) % p;
            }
        }
        let hdeg = (self.t - k) as usize;
        let cdeg = (self.s - k) as usize;
        let ncols = (hdeg + 1) + (cdeg + 1);
        let mut a = vec![vec![0u32; ncols]; deg + 1];
        // columns for h_{t-k}: c_s * X^(hdeg-j) Y^j
        for j in 0..=hdeg {
            for (i, &c) in cs[0].iter().enumerate() {
                a[i + j][j] = c;
            }
        }
        for j in 0..=cdeg {
            for (i, &c) in hs[0].iter().enumerate() {
                a[i + j][hdeg + 1 + j] = c;
            }
        }
        let (part, kernel) = solve_mod_p(p, &a, &rhs, ncols)?;
        let dim = kernel.len() as u32;
        let total = (p as u64).pow(dim);
        for code in 0..total {
            let mut z = part.clone();
            let mut rem = code;
            for kv in &kernel {
                let coef = (rem % p as u64) as u32;
                rem /= p as u64;
                if coef != 0 {
                    for (zi, &ki) in z.iter_mut().zip(kv) {
                        *zi = (*zi + mul_mod(coef, ki, p)) % p;
                    }
                }
            }
            hs.push(z[..=hdeg].to_vec());
            cs.push(z[hdeg + 1..].to_vec());
            if let Some(h) = self.dfs(k + 1, hs, cs) {
                return Some(h);
            }
            hs.pop();
            cs.pop();
        }
        None
    }
}

/// Some monic factor of `f` with total degree exactly `t`, if one exists.
pub fn factor_of_degree(f: &Poly, t: u32) -> Option<Poly> {
    let p = f.modulus();
    let n = f.degree()?;
    if t == 0 || t > n {
        return None;
    }
    let s = n - t;
    let comps: Vec<Vec<u32>> = (0..=n).map(|k| homog_coeffs(f, k)).collect();
    let top = f.homogeneous_part(n);
    let search = Search { p, f, comps, n, t, s };
    // monic homogeneous candidates for h_t, leading coefficient at index `lead`
    for lead in 0..=t as usize {
        let free = t as usize - lead;
        let total = (p as u64).pow(free as u32);
        for code in 0..total {
            let mut v = vec![0u32; t as usize + 1];
            v[lead] = 1;
            let mut rem = code;
            for j in lead + 1..=t as usize {
                v[j] = (rem % p as u64) as u32;
                rem /= p as u64;
            }
            let ht = homog_poly(p, &v);
            let Some(cs_poly) = top.div_exact(&ht) else {
                continue;
            };
            let cs0 = homog_coeffs(&cs_poly, s);
            let mut hs = vec![v.clone()];
            let mut cs = vec![cs0];
            if let Some(h) = search.dfs(1, &mut hs, &mut cs) {
                return Some(h);
            }
        }
    }
    None
}

/// Complete factorization into monic irreducibles.
pub fn factor(f: &Poly, degree_cap: u32) -> Result<PolyFactorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.degree().unwrap();
    if n > degree_cap {
        return Err(Error::DegreeCapExceeded { degree: n, cap: degree_cap });
    }
    let unit = f.leading_coeff();
    let mut rest = f.monic();
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    let mut t = 1;
    while !rest.is_constant() {
        let deg = rest.degree().unwrap();
        let mut found = None;
        while t <= deg / 2 {
            if let Some(h) = factor_of_degree(&rest, t) {
                found = Some(h);
                break;
            }
            t += 1;
        }
        let h = found.unwrap_or_else(|| rest.clone());
        let mut e = 0;
        while let Some(q) = rest.div_exact(&h) {
            rest = q;
            e += 1;
        }
        factors.push((h, e));
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(PolyFactorization { unit, factors })
}

pub fn is_irreducible(f: &Poly, degree_cap: u32) -> Result<bool> {
    if f.is_constant() {
        return Ok(false);
    }
    let fac = factor(f, degree_cap)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}
