//! Exact arithmetic kernel.
//!
//! Big integers and rationals come from `num-bigint` / `num-rational`; everything
//! built on top of them (the field Q(√−3), polynomials, rational functions,
//! resultants, squarefree profiles, Kronecker symbols) lives here.

mod arith;
mod poly;
mod qsqrt3;
mod ratfunc;
mod ring;

pub use arith::{factor, gcd_i64, is_prime, kronecker, primes_up_to};
pub use poly::{resultant, squarefree_profile, Poly};
pub use qsqrt3::QSqrt3;
pub use ratfunc::{Extended, RationalFunction};
pub use ring::{Field, Ring};

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

/// Rational number from a pair of machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
