use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::ring::{Field, Ring};
use super::{int, rat, Rational};

/// An element `a + b·√−3` of the imaginary quadratic field Q(√−3).
///
/// The square root is fixed once: `s = √−3` is the formal symbol with `s² = −3`.
/// Conjugation ([`QSqrt3::conj`]) sends `s` to `−s`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QSqrt3 {
    pub a: Rational,
    pub b: Rational,
}

impl QSqrt3 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QSqrt3 { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        QSqrt3 { a, b: Rational::zero() }
    }

    /// √−3.
    pub fn sqrt_m3() -> Self {
        QSqrt3 { a: Rational::zero(), b: Rational::one() }
    }

    /// ρ = (−1 + √−3)/2, a primitive cube root of unity.
    pub fn rho() -> Self {
        QSqrt3 { a: rat(-1, 2), b: rat(1, 2) }
    }

    /// ρ⁻¹ = ρ² = (−1 − √−3)/2.
    pub fn rho_inv() -> Self {
        QSqrt3 { a: rat(-1, 2), b: rat(-1, 2) }
    }

    /// Galois conjugation √−3 ↦ −√−3.
    pub fn conj(&self) -> Self {
        QSqrt3 { a: self.a.clone(), b: -&self.b }
    }

    /// Norm a² + 3b².
    pub fn norm(&self) -> Rational {
        &self.a * &self.a + int(3) * &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }
}

impl From<Rational> for QSqrt3 {
    fn from(a: Rational) -> Self {
        QSqrt3::from_rational(a)
    }
}

impl From<i64> for QSqrt3 {
    fn from(a: i64) -> Self {
        QSqrt3::from_rational(int(a))
    }
}

impl Ring for QSqrt3 {
    fn zero() -> Self {
        QSqrt3 { a: Rational::zero(), b: Rational::zero() }
    }
    fn one() -> Self {
        QSqrt3 { a: Rational::one(), b: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn from_i64(n: i64) -> Self {
        n.into()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        QSqrt3 { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        QSqrt3 { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        // (a + bs)(c + ds) = ac − 3bd + (ad + bc)s
        QSqrt3 { a: &self.a * &rhs.a - int(3) * &self.b * &rhs.b, b: &self.a * &rhs.b + &self.b * &rhs.a }
    }
    fn neg_ref(&self) -> Self {
        QSqrt3 { a: -&self.a, b: -&self.b }
    }
}

impl Field for QSqrt3 {
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(QSqrt3 { a: &self.a / &n, b: -&self.b / &n })
    }
}

impl Add for &QSqrt3 {
    type Output = QSqrt3;
    fn add(self, rhs: &QSqrt3) -> QSqrt3 {
        self.add_ref(rhs)
    }
}

impl Sub for &QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, rhs: &QSqrt3) -> QSqrt3 {
        self.sub_ref(rhs)
    }
}

impl Mul for &QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, rhs: &QSqrt3) -> QSqrt3 {
        self.mul_ref(rhs)
    }
}

impl Neg for &QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        self.neg_ref()
    }
}

impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√-3", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}√-3", self.a, sign, self.b.abs())
            }
        }
    }
}
