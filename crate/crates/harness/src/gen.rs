//! Seeded generators for rings, elements, ideals and polynomials.

use krullstar::ideal::{ideal_from_generators, AtomIdeal, AtomPrime, FracIdeal, PrimeRef};
use krullstar::nagata::PolyOverR;
use krullstar::poly::{Mono, Poly, VAR_X, VAR_Y};
use krullstar::polyideal::{PolyIdeal, RatFun};
use krullstar::quad::{self, QuadIdeal, QuadInt, QuadNum, QuadRing};
use krullstar::ring::{Atom, Element, Fraction, RingDesc, Scalar};
use krullstar::star::{closure, StarOp};
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Squarefree `d < 0` sampled for quadratic atoms.
pub const QUAD_DS: [i64; 12] = [-1, -2, -3, -5, -6, -7, -10, -11, -14, -15, -19, -23];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AtomWeights {
    pub integer: u32,
    pub rational: u32,
    pub spr: u32,
    pub quad: u32,
    pub poly: u32,
}

impl Default for AtomWeights {
    fn default() -> Self {
        AtomWeights { integer: 3, rational: 2, spr: 3, quad: 3, poly: 2 }
    }
}

#[derive(Clone, Debug)]
pub struct GenConfig {
    pub max_components: usize,
    pub weights: AtomWeights,
    /// Bound on integer coefficients.
    pub coeff_bound: i64,
    /// Total-degree bound for sampled polynomials in `F_p[X,Y]`.
    pub poly_degree: u32,
    /// Degree bound for polynomials over `R` in the Nagata suites.
    pub nagata_degree: u32,
    pub max_generators: usize,
    /// When nonzero, every n-th ideal sample is the zero ideal.
    pub degenerate_every: u32,
    /// When nonempty, rings are drawn from this list instead of being built from atoms.
    pub fixed_rings: Vec<RingDesc>,
    pub seed: u64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_components: 3,
            weights: AtomWeights::default(),
            coeff_bound: 12,
            poly_degree: 3,
            nagata_degree: 3,
            max_generators: 3,
            degenerate_every: 0,
            fixed_rings: Vec::new(),
            seed: 0,
        }
    }
}

pub struct Gen {
    pub cfg: GenConfig,
    pub rng: ChaCha8Rng,
    ideal_count: u32,
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of case `i` in a run seeded with `seed`.
pub fn case_seed(seed: u64, i: usize) -> u64 {
    splitmix(seed ^ splitmix(i as u64))
}

impl Gen {
    pub fn new(cfg: GenConfig) -> Self {
        let rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        Gen { cfg, rng, ideal_count: 0 }
    }

    pub fn for_case(cfg: &GenConfig, i: usize) -> Self {
        let mut c = cfg.clone();
        c.seed = case_seed(cfg.seed, i);
        Gen::new(c)
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.rng.gen_range(0..den) < num
    }

    pub fn int(&mut self) -> i64 {
        let b = self.cfg.coeff_bound.max(1);
        self.rng.gen_range(-b..=b)
    }

    pub fn gen_atom(&mut self) -> Atom {
        let w = self.cfg.weights;
        let total = w.integer + w.rational + w.spr + w.quad + w.poly;
        let mut t = self.rng.gen_range(0..total.max(1));
        let pick = |t: &mut u32, wt: u32| {
            if *t < wt {
                true
            } else {
                *t -= wt;
                false
            }
        };
        if pick(&mut t, w.integer) {
            Atom::Integer
        } else if pick(&mut t, w.rational) {
            Atom::Rational
        } else if pick(&mut t, w.spr) {
            let p = *[2u64, 3, 5].choose(&mut self.rng).unwrap();
            Atom::mod_prime_power(p, self.rng.gen_range(1..=3)).unwrap()
        } else if pick(&mut t, w.quad) {
            Atom::quadratic(*QUAD_DS.choose(&mut self.rng).unwrap()).unwrap()
        } else {
            let p = if self.chance(3, 4) { 2 } else { 3 };
            Atom::poly(p).unwrap()
        }
    }

    pub fn gen_ring(&mut self) -> RingDesc {
        if !self.cfg.fixed_rings.is_empty() {
            return self.cfg.fixed_rings.choose(&mut self.rng).unwrap().clone();
        }
        let n = self.rng.gen_range(1..=self.cfg.max_components.max(1));
        RingDesc::new((0..n).map(|_| self.gen_atom()).collect()).unwrap()
    }

    pub fn gen_poly(&mut self, p: u32) -> Poly {
        let deg = self.cfg.poly_degree;
        let n = self.rng.gen_range(1..=4);
        let terms: Vec<(Mono, i64)> = (0..n)
            .map(|_| {
                let d = self.rng.gen_range(0..=deg) as u16;
                let i = self.rng.gen_range(0..=d);
                ([i, d - i, 0], self.rng.gen_range(1..p as i64))
            })
            .collect();
        Poly::from_terms(p, terms)
    }

    fn nonzero_poly(&mut self, p: u32) -> Poly {
        loop {
            let f = self.gen_poly(p);
            if !f.is_zero() {
                return f;
            }
        }
    }

    /// An integral scalar; zero with small probability.
    pub fn gen_scalar(&mut self, a: &Atom) -> Scalar {
        if self.chance(1, 8) {
            return a.zero();
        }
        if self.chance(1, 12) {
            return a.one();
        }
        match a {
            Atom::Integer => a.from_int(self.int()),
            Atom::Rational => {
                let d = self.rng.gen_range(1..=4);
                Scalar::Rat(BigRational::new(self.int().into(), d.into()))
            }
            Atom::ModPrimePower { .. } => Scalar::Res(self.rng.gen_range(0..a.modulus())),
            Atom::Quadratic(_) => {
                let b = self.cfg.coeff_bound.clamp(1, 6);
                let (x, y) = (self.rng.gen_range(-b..=b), self.rng.gen_range(-b..=b));
                Scalar::Quad(QuadNum::from_int(&QuadInt::new(x, y)))
            }
            Atom::Poly { p } => Scalar::Fun(RatFun::from_poly(self.gen_poly(*p))),
        }
    }

    /// A regular integral scalar.
    pub fn gen_regular_scalar(&mut self, a: &Atom) -> Scalar {
        loop {
            let x = match a {
                Atom::ModPrimePower { .. } => Scalar::Res(self.rng.gen_range(0..a.modulus())),
                _ => self.gen_scalar(a),
            };
            if a.is_regular(&x) {
                return x;
            }
        }
    }

    pub fn gen_element(&mut self, r: &RingDesc) -> Element {
        let parts = r.atoms().iter().map(|a| self.gen_scalar(a)).collect();
        r.element(parts).unwrap()
    }

    pub fn gen_regular_element(&mut self, r: &RingDesc) -> Element {
        let parts = r.atoms().iter().map(|a| self.gen_regular_scalar(a)).collect();
        r.element(parts).unwrap()
    }

    pub fn gen_nonunit(&mut self, r: &RingDesc) -> Element {
        loop {
            let e = self.gen_element(r);
            if !r.is_unit(&e) {
                return e;
            }
        }
    }

    fn small_denominator(&mut self, a: &Atom) -> Scalar {
        match a {
            Atom::Integer | Atom::Rational => a.from_int(self.rng.gen_range(1..=4)),
            Atom::Quadratic(_) => {
                if self.chance(1, 2) {
                    a.from_int(self.rng.gen_range(1..=3))
                } else {
                    Scalar::Quad(QuadNum::from_int(&QuadInt::new(self.rng.gen_range(1..=2), 1)))
                }
            }
            Atom::Poly { p } => {
                let save = self.cfg.poly_degree;
                self.cfg.poly_degree = 1;
                let f = self.nonzero_poly(*p);
                self.cfg.poly_degree = save;
                Scalar::Fun(RatFun::from_poly(f))
            }
            Atom::ModPrimePower { .. } => a.one(),
        }
    }

    /// An element of `T(R)`.
    pub fn gen_fraction(&mut self, r: &RingDesc) -> Fraction {
        let parts = r
            .atoms()
            .iter()
            .map(|a| {
                let x = self.gen_scalar(a);
                if self.chance(1, 2) {
                    x
                } else {
                    let d = self.small_denominator(a);
                    a.mul(&x, &a.inv(&d).unwrap())
                }
            })
            .collect();
        r.fraction(parts).unwrap()
    }

    pub fn gen_regular_fraction(&mut self, r: &RingDesc) -> Fraction {
        loop {
            let x = self.gen_fraction(r);
            if r.frac_is_regular(&x) {
                return x;
            }
        }
    }

    fn generator_count(&mut self) -> usize {
        self.rng.gen_range(1..=self.cfg.max_generators.max(1))
    }

    fn degenerate_due(&mut self) -> bool {
        self.ideal_count += 1;
        self.cfg.degenerate_every > 0 && self.ideal_count % self.cfg.degenerate_every == 1
    }

    /// A fractional ideal, occasionally degenerate (zero, unit, total ring).
    pub fn gen_ideal(&mut self, r: &RingDesc) -> FracIdeal {
        if self.degenerate_due() {
            return FracIdeal::zero(r);
        }
        match self.rng.gen_range(0..24) {
            0 => FracIdeal::zero(r),
            1 => FracIdeal::unit(r),
            2 => FracIdeal::total(r),
            _ => {
                let n = self.generator_count();
                let gens: Vec<Fraction> = (0..n).map(|_| self.gen_fraction(r)).collect();
                ideal_from_generators(r, &gens)
            }
        }
    }

    pub fn gen_integral_ideal(&mut self, r: &RingDesc) -> FracIdeal {
        if self.degenerate_due() {
            return FracIdeal::zero(r);
        }
        if self.chance(1, 20) {
            return FracIdeal::unit(r);
        }
        let n = self.generator_count();
        let gens: Vec<Fraction> = (0..n).map(|_| self.gen_element(r).to_fraction()).collect();
        ideal_from_generators(r, &gens)
    }

    /// A proper integral ideal.
    pub fn gen_proper_ideal(&mut self, r: &RingDesc) -> FracIdeal {
        loop {
            let i = self.gen_integral_ideal(r);
            if !i.is_unit() {
                return i;
            }
        }
    }

    pub fn gen_regular_ideal(&mut self, r: &RingDesc) -> FracIdeal {
        let n = self.generator_count();
        let mut gens = vec![self.gen_regular_fraction(r)];
        gens.extend((1..n).map(|_| self.gen_fraction(r)));
        ideal_from_generators(r, &gens)
    }

    /// A proper integral u-ideal whose divisor family is finite: no zero part in
    /// a domain component of positive dimension.
    pub fn gen_u_ideal(&mut self, r: &RingDesc) -> FracIdeal {
        loop {
            let mut parts = Vec::new();
            for a in r.atoms() {
                let x = if a.krull_dim() > 0 { self.gen_regular_scalar(a) } else { self.gen_scalar(a) };
                parts.push(x);
            }
            let e = r.element(parts).unwrap();
            let i = FracIdeal::principal(r, &e.to_fraction());
            let i = if self.chance(1, 3) {
                let extra = self.gen_element(r);
                i.sum(&FracIdeal::principal(r, &extra.to_fraction())).unwrap()
            } else {
                i
            };
            let i = closure(StarOp::U, &i);
            if !i.is_unit() && i.parts().iter().zip(r.atoms()).all(|(p, a)| a.krull_dim() == 0 || *p != AtomIdeal::Zero) {
                return i;
            }
        }
    }

    pub fn gen_poly_over(&mut self, r: &RingDesc) -> PolyOverR {
        let d = self.rng.gen_range(0..=self.cfg.nagata_degree) as usize;
        let coeffs = (0..=d).map(|_| self.gen_element(r)).collect();
        PolyOverR::new(r, coeffs)
    }

    /// A nonprincipal prime: a nonprincipal quadratic prime or a maximal ideal of
    /// `F_p[X,Y]`, in a component that admits one. `None` if no component does.
    pub fn gen_nonprincipal_prime(&mut self, r: &RingDesc) -> Option<PrimeRef> {
        let candidates: Vec<usize> = (0..r.len())
            .filter(|&c| match r.atom(c) {
                Atom::Poly { .. } => true,
                Atom::Quadratic(q) => !quad::class_group(q.d, quad::DEFAULT_CLASS_GROUP_BOUND).unwrap().group.is_trivial(),
                _ => false,
            })
            .collect();
        let c = *candidates.choose(&mut self.rng)?;
        Some(match r.atom(c) {
            Atom::Quadratic(q) => PrimeRef::new(c, AtomPrime::QuadPrime(self.nonprincipal_quad_prime(*q))),
            Atom::Poly { p } => {
                let m = self.maximal_poly_ideal(*p);
                PrimeRef::new(c, AtomPrime::PolyMaximal(m))
            }
            _ => unreachable!(),
        })
    }

    fn nonprincipal_quad_prime(&mut self, q: QuadRing) -> QuadIdeal {
        let mut all = Vec::new();
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
            all.extend(quad::primes_above(&q, p).into_iter().filter(|i| !i.is_principal()));
        }
        all.choose(&mut self.rng).expect("nontrivial class group has nonprincipal primes").clone()
    }

    /// `(f(X), Y - h(X))` with `f` irreducible, a maximal ideal.
    fn maximal_poly_ideal(&mut self, p: u32) -> PolyIdeal {
        let deg = self.rng.gen_range(1..=2u32);
        let x = Poly::var(p, VAR_X);
        let f = loop {
            let mut f = x.pow(deg);
            for i in 0..deg {
                let c = self.rng.gen_range(0..p as i64);
                f = f.add(&Poly::constant(p, c).mul(&x.pow(i)));
            }
            if krullstar::polyfactor::is_irreducible(&f, 8).unwrap() {
                break f;
            }
        };
        let mut h = Poly::zero(p);
        for i in 0..deg {
            let c = self.rng.gen_range(0..p as i64);
            h = h.add(&Poly::constant(p, c).mul(&x.pow(i)));
        }
        let g = Poly::var(p, VAR_Y).sub(&h);
        PolyIdeal::new(Poly::one(p), &[f, g]).unwrap()
    }

    pub fn rng_index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    pub fn shuffle<T>(&mut self, v: &mut [T]) {
        v.shuffle(&mut self.rng);
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn bigint(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn replay_is_deterministic() {
        let cfg = GenConfig { seed: 1, ..GenConfig::default() };
        let run = |cfg: &GenConfig| {
            let mut g = Gen::new(cfg.clone());
            (0..20)
                .map(|_| {
                    let r = g.gen_ring();
                    let i = g.gen_ideal(&r);
                    format!("{r}: {i}")
                })
                .collect::<Vec<_>>()
        };
        assert_eq!(run(&cfg), run(&cfg));
    }

    #[test]
    fn forced_degenerate_mode_emits_zero_ideals() {
        let cfg = GenConfig { seed: 7, degenerate_every: 20, ..GenConfig::default() };
        let mut g = Gen::new(cfg);
        let r = g.gen_ring();
        let samples: Vec<FracIdeal> = (0..60).map(|_| g.gen_ideal(&r)).collect();
        for chunk in samples.chunks(20) {
            assert!(chunk.iter().any(|i| i.is_zero()));
        }
    }

    #[test]
    fn quadratic_ideals_are_in_hnf() {
        let r = RingDesc::new(vec![Atom::quadratic(-5).unwrap()]).unwrap();
        let mut g = Gen::new(GenConfig { seed: 3, ..GenConfig::default() });
        for _ in 0..100 {
            if let AtomIdeal::Quad(q) = g.gen_ideal(&r).part(0) {
                assert!(q.a > bigint(0) && q.c > bigint(0) && q.b >= bigint(0) && q.b < q.a);
                assert!(&q.a % &q.c == bigint(0));
                let again = QuadIdeal::from_hnf(q.ring, q.den.clone(), q.a.clone(), q.b.clone(), q.c.clone()).unwrap();
                assert_eq!(&again, q);
            }
        }
    }

    #[test]
    fn generated_primes_are_prime_and_nonprincipal() {
        let r = RingDesc::new(vec![Atom::quadratic(-5).unwrap(), Atom::poly(2).unwrap()]).unwrap();
        let mut g = Gen::new(GenConfig { seed: 11, ..GenConfig::default() });
        for _ in 0..20 {
            let p = g.gen_nonprincipal_prime(&r).unwrap();
            assert_eq!(PrimeRef::from_ideal(&p.to_ideal(&r)), Some(p.clone()));
            assert!(!p.is_principal(&r));
        }
    }
}
