use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::Poly;
use super::ring::Field;
use crate::{Error, Result};

/// A value on the projective line: finite or the point at infinity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Extended<T> {
    Finite(T),
    Infinity,
}

impl<T> Extended<T> {
    pub fn finite(self) -> Option<T> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinity => None,
        }
    }

    pub fn as_finite(&self) -> Option<&T> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinity)
    }
}

/// Quotient `num / den` of coprime polynomials with monic denominator.
///
/// The normal form is unique, so structural equality is equality of
/// functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RationalFunction<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (num, den) =
            if g.degree() == Some(0) { (num, den) } else { (num.exact_div(&g)?, den.exact_div(&g)?) };
        let lc_inv = den.leading().unwrap().inv().unwrap();
        Ok(RationalFunction { num: num.scale(&lc_inv), den: den.scale(&lc_inv) })
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The identity function `x`.
    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `max(deg num, deg den)`; zero for constants.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    /// Multiplicative inverse; `None` for the zero function.
    pub fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::new(self.den.clone(), self.num.clone()).expect("nonzero numerator"))
    }

    pub fn pow(&self, exp: u32) -> Self {
        // coprimality is preserved by powers
        RationalFunction { num: self.num.pow(exp), den: self.den.pow(exp) }
    }

    pub fn eval(&self, x: &F) -> Extended<F> {
        let d = self.den.eval(x);
        match d.inv() {
            Some(di) => Extended::Finite(self.num.eval(x).mul_ref(&di)),
            None => Extended::Infinity,
        }
    }

    /// Value at `x = ∞`: ratio of leading coefficients when the degrees agree,
    /// zero when the denominator dominates, infinity otherwise.
    pub fn eval_at_infinity(&self) -> Extended<F> {
        let dn = self.num.degree();
        let dd = self.den.degree().unwrap();
        match dn {
            None => Extended::Finite(F::zero()),
            Some(dn) if dn < dd => Extended::Finite(F::zero()),
            Some(dn) if dn == dd => {
                Extended::Finite(self.num.leading().unwrap().div_ref(self.den.leading().unwrap()))
            }
            Some(_) => Extended::Infinity,
        }
    }

    /// Evaluation on the projective line.
    pub fn eval_extended(&self, x: &Extended<F>) -> Extended<F> {
        match x {
            Extended::Finite(v) => self.eval(v),
            Extended::Infinity => self.eval_at_infinity(),
        }
    }

    /// Composite `self ∘ g`.
    ///
    /// With `g = p/q` and `n = deg self`, both numerator and denominator are
    /// homogenized to degree `n` in `(p, q)` so no intermediate division is
    /// needed. If `g` is a constant at a pole of `self`, the result is
    /// [`Extended::Infinity`].
    pub fn compose(&self, g: &RationalFunction<F>) -> Extended<RationalFunction<F>> {
        let n = self.degree();
        let homogenize = |f: &Poly<F>| {
            let mut acc = Poly::zero();
            let q_pows: Vec<Poly<F>> = (0..=n).map(|k| g.den.pow(k as u32)).collect();
            let mut p_pow = Poly::one();
            for k in 0..=n {
                let c = f.coeff(k);
                if !c.is_zero() {
                    acc = &acc + &(&p_pow * &q_pows[n - k]).scale(&c);
                }
                p_pow = &p_pow * &g.num;
            }
            acc
        };
        let num = homogenize(&self.num);
        let den = homogenize(&self.den);
        if den.is_zero() {
            return Extended::Infinity;
        }
        Extended::Finite(Self::new(num, den).expect("nonzero denominator"))
    }

    /// Coefficient-wise map, e.g. Galois conjugation.
    pub fn map(&self, f: impl Fn(&F) -> F) -> Self {
        Self::new(self.num.map(&f), self.den.map(&f)).expect("map must be a field automorphism")
    }

    /// Coefficient-wise fallible map into another field (descent to a subfield).
    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<RationalFunction<G>> {
        let num = self.num.try_map(&f)?;
        let den = self.den.try_map(&f)?;
        RationalFunction::new(num, den).ok()
    }
}

impl<F: Field> From<Poly<F>> for RationalFunction<F> {
    fn from(p: Poly<F>) -> Self {
        Self::from_poly(p)
    }
}

impl<F: Field> Add for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn add(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).unwrap()
    }
}

impl<F: Field> Sub for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn sub(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).unwrap()
    }
}

impl<F: Field> Mul for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn mul(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl<F: Field> Div for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    /// Panics on division by the zero function.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        self * &rhs.inv().expect("division by the zero function")
    }
}

impl<F: Field> Neg for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn neg(self) -> RationalFunction<F> {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl<F: Field + fmt::Display> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat, Rational};
    use proptest::prelude::*;

    type RF = RationalFunction<Rational>;

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::from_i64s(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RF {
        RF::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn normal_form_is_reduced_with_monic_denominator() {
        // (2x² − 2) / (4x − 4) = (x + 1)/2
        let f = rf(&[-2, 0, 2], &[-4, 4]);
        assert_eq!(f.num(), &Poly::new(vec![rat(1, 2), rat(1, 2)]));
        assert_eq!(f.den(), &p(&[1]));
        assert_eq!(RF::new(p(&[1]), Poly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn compose_cube_with_shift() {
        let f = RF::from_poly(p(&[0, 0, 0, 1]));
        let g = RF::from_poly(p(&[1, 1]));
        assert_eq!(f.compose(&g).finite().unwrap(), RF::from_poly(p(&[1, 3, 3, 1])));
    }

    #[test]
    fn reciprocal_is_an_involution() {
        let f = rf(&[1], &[0, 1]);
        assert_eq!(f.compose(&f).finite().unwrap(), RF::x());
    }

    #[test]
    fn compose_into_a_pole_gives_infinity() {
        let f = rf(&[1], &[-2, 1]);
        let g = RF::constant(int(2));
        assert_eq!(f.compose(&g), Extended::Infinity);
        assert_eq!(f.compose(&RF::constant(int(3))).finite().unwrap(), RF::constant(int(1)));
    }

    #[test]
    fn evaluation_at_infinity() {
        assert_eq!(rf(&[1, 6], &[5, 3]).eval_at_infinity(), Extended::Finite(int(2)));
        assert_eq!(rf(&[1], &[0, 1]).eval_at_infinity(), Extended::Finite(int(0)));
        assert_eq!(rf(&[0, 0, 1], &[1, 1]).eval_at_infinity(), Extended::Infinity);
        assert_eq!(rf(&[1], &[0, 1]).eval(&int(0)), Extended::Infinity);
    }

    fn arb_rf() -> impl Strategy<Value = RF> {
        (proptest::collection::vec(-4i64..4, 1..4), proptest::collection::vec(-4i64..4, 1..4))
            .prop_filter_map("nonzero den", |(n, d)| RF::new(p(&n), p(&d)).ok())
    }

    proptest! {
        #[test]
        fn independent_representations_agree(f in arb_rf(), k in proptest::collection::vec(-3i64..3, 1..3), c in 1i64..5) {
            // multiply numerator and denominator by a common nonzero polynomial and scalar
            let common = p(&k);
            prop_assume!(!common.is_zero());
            let scaled = Poly::constant(int(c));
            let other = RF::new(&(f.num() * &common) * &scaled, &(f.den() * &common) * &scaled).unwrap();
            prop_assert_eq!(other, f);
        }

        #[test]
        fn composite_degree_is_multiplicative(f in arb_rf(), g in arb_rf()) {
            prop_assume!(f.degree() > 0 && g.degree() > 0);
            let h = f.compose(&g).finite().unwrap();
            prop_assert_eq!(h.degree(), f.degree() * g.degree());
        }

        #[test]
        fn composite_evaluates_pointwise(f in arb_rf(), g in arb_rf(), x in -20i64..20) {
            let h = f.compose(&g);
            let x = int(x);
            if let (Extended::Finite(h), Extended::Finite(gx)) = (&h, g.eval(&x)) {
                if let (Extended::Finite(fx), Extended::Finite(hx)) = (f.eval(&gx), h.eval(&x)) {
                    prop_assert_eq!(fx, hx);
                }
            }
        }

        #[test]
        fn field_operations_round_trip(f in arb_rf(), g in arb_rf()) {
            prop_assert_eq!(&(&f + &g) - &g, f.clone());
            if !g.is_zero() {
                prop_assert_eq!(&(&f * &g) / &g, f);
            }
        }
    }
}
