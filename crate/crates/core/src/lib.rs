//! Star operations, u-factorization and ring classification on finite direct
//! sums of `Z`, `Q`, `Z/p^k`, imaginary quadratic maximal orders and `F_p[X,Y]`.

pub mod error;

pub mod groebner;
pub mod intutil;
pub mod poly;
pub mod polyfactor;
pub mod polyideal;
pub mod quad;
pub mod upoly;

pub mod ideal;
pub mod ring;

pub mod classify;
pub mod factor;
pub mod nagata;
pub mod star;

pub mod dsl;
pub mod json;

pub use error::{Error, Result};
pub use ideal::{ideal_from_generators, AtomIdeal, AtomPrime, FracIdeal, PrimeRef};
pub use ring::{Atom, Element, Fraction, RingDesc, Scalar};
pub use star::{closure, StarOp};
