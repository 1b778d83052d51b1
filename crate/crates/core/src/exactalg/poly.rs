use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::{Field, Ring};
use crate::{Error, Result};

/// Dense univariate polynomial, coefficients stored from the constant term up.
///
/// The leading coefficient is always nonzero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Poly::new(vec![R::zero(), R::one()])
    }

    /// `c·x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `x − r`.
    pub fn linear_root(r: &R) -> Self {
        Poly::new(vec![r.neg_ref(), R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.mul_ref(&R::from_i64(k as i64))).collect(),
        )
    }

    pub fn pow(&self, exp: u32) -> Self {
        Ring::pow(self, exp)
    }

    /// Substitution `self(g)`.
    pub fn compose(&self, g: &Poly<R>) -> Self {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| &(&acc * g) + &Poly::constant(c.clone()))
    }

    /// Coefficient-wise map into another ring.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Coefficient-wise fallible map, e.g. to descend to a subfield.
    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Option<S>) -> Option<Poly<S>> {
        self.coeffs.iter().map(f).collect::<Option<Vec<_>>>().map(Poly::new)
    }

    /// `x^k · self`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly<F>) -> Result<(Poly<F>, Poly<F>)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lc_inv = d.leading().unwrap().inv().expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if sd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = rem[k + dd].mul_ref(&lc_inv);
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].sub_ref(&c.mul_ref(di));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Quotient of an exact division; errors if `d` is zero, panics on a remainder.
    pub fn exact_div(&self, d: &Poly<F>) -> Result<Poly<F>> {
        let (q, r) = self.div_rem(d)?;
        assert!(r.is_zero(), "inexact polynomial division");
        Ok(q)
    }

    pub fn divides(&self, other: &Poly<F>) -> bool {
        other.div_rem(self).is_ok_and(|(_, r)| r.is_zero())
    }

    /// Scales to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly<F>) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k).add_ref(&rhs.coeff(k))).collect())
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k).sub_ref(&rhs.coeff(k))).collect())
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::new(out)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::new(self.coeffs.iter().map(Ring::neg_ref).collect())
    }
}

/// Polynomials over a ring form a ring, which gives bivariate polynomials as
/// `Poly<Poly<R>>`.
impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_i64(n: i64) -> Self {
        Poly::constant(R::from_i64(n))
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Resultant with the convention `Res(f, g) = lc(f)^deg(g) · ∏_{f(α)=0} g(α)`.
///
/// Computed by Euclidean elimination: for `r = g mod f`,
/// `Res(f, g) = lc(f)^(deg g − deg r) · Res(f, r)` and
/// `Res(f, g) = (−1)^(deg f · deg g) · Res(g, f)`.
/// If exactly one input is zero the resultant is zero unless the other is a
/// nonzero constant, in which case the empty product gives one.
pub fn resultant<F: Field>(f: &Poly<F>, g: &Poly<F>) -> Result<F> {
    match (f.degree(), g.degree()) {
        (None, None) => Err(Error::ResultantOfZeros),
        (Some(0), None) | (None, Some(0)) => Ok(F::one()),
        (None, _) | (_, None) => Ok(F::zero()),
        (Some(_), Some(_)) => Ok(resultant_nonzero(f, g)),
    }
}

fn resultant_nonzero<F: Field>(f: &Poly<F>, g: &Poly<F>) -> F {
    let (mut f, mut g) = (f.clone(), g.clone());
    let mut acc = F::one();
    loop {
        let df = f.degree().unwrap();
        let dg = g.degree().unwrap();
        if df == 0 {
            // Res(c, g) = c^deg g
            return acc.mul_ref(&f.leading().unwrap().pow(dg as u32));
        }
        if dg == 0 {
            // Res(f, c) = c^deg f
            return acc.mul_ref(&g.leading().unwrap().pow(df as u32));
        }
        if df > dg {
            if (df * dg) % 2 == 1 {
                acc = acc.neg_ref();
            }
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        // deg f <= deg g: reduce g modulo f
        let (_, r) = g.div_rem(&f).expect("f is nonzero");
        let Some(dr) = r.degree() else {
            return F::zero();
        };
        acc = acc.mul_ref(&f.leading().unwrap().pow((dg - dr) as u32));
        g = r;
    }
}

/// Multiplicity profile of the roots of `f` over an algebraic closure.
///
/// Returns `multiplicity -> number of distinct roots with that multiplicity`,
/// obtained by Yun's squarefree decomposition (characteristic zero). The
/// profile satisfies `Σ k · count_k = deg f`.
pub fn squarefree_profile<F: Field>(f: &Poly<F>) -> Result<BTreeMap<usize, usize>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut profile = BTreeMap::new();
    if f.degree() == Some(0) {
        return Ok(profile);
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0)?;
    let c = df.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    let mut k = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let count = a.degree().unwrap_or(0);
        if count > 0 {
            profile.insert(k, count);
        }
        b = b.exact_div(&a)?;
        let c = d.exact_div(&a)?;
        d = &c - &b.derivative();
        k += 1;
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat, Rational};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::from_i64s(c)
    }

    /// Sylvester-matrix determinant by Gaussian elimination over Q; independent
    /// of the Euclidean route.
    #[allow(clippy::needless_range_loop)]
    fn sylvester_resultant(f: &Poly<Rational>, g: &Poly<Rational>) -> Rational {
        let m = f.degree().unwrap();
        let n = g.degree().unwrap();
        let size = m + n;
        if size == 0 {
            return int(1);
        }
        let mut mat = vec![vec![int(0); size]; size];
        let fc: Vec<_> = f.coeffs().iter().rev().cloned().collect();
        let gc: Vec<_> = g.coeffs().iter().rev().cloned().collect();
        for row in 0..n {
            for (j, c) in fc.iter().enumerate() {
                mat[row][row + j] = c.clone();
            }
        }
        for row in 0..m {
            for (j, c) in gc.iter().enumerate() {
                mat[n + row][row + j] = c.clone();
            }
        }
        let mut det = int(1);
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| mat[r][col] != int(0)) else {
                return int(0);
            };
            if piv != col {
                mat.swap(piv, col);
                det = -det;
            }
            let pv = mat[col][col].clone();
            det *= &pv;
            for r in col + 1..size {
                let factor = &mat[r][col] / &pv;
                for c in col..size {
                    let sub = &factor * &mat[col][c];
                    mat[r][c] -= sub;
                }
            }
        }
        det
    }

    fn t_numerator() -> Poly<Rational> {
        &(&p(&[4, -6, 3, 1]) * &p(&[4, 3, 3, 1])) * &p(&[2, -3, -3, 5])
    }

    #[test]
    fn resultant_of_the_cusp_cubic_is_three_to_the_fifteenth() {
        let r = resultant(&t_numerator(), &p(&[1, -3, 0, 1])).unwrap();
        assert_eq!(r, int(14_348_907));
        assert_eq!(r, int(3).pow(15));
        assert_eq!(sylvester_resultant(&t_numerator(), &p(&[1, -3, 0, 1])), r);
    }

    #[test]
    fn resultant_of_linear_factors_follows_fixed_convention() {
        // lc(f)^1 · g(3) = 3 − 5
        assert_eq!(resultant(&p(&[-3, 1]), &p(&[-5, 1])).unwrap(), int(-2));
        assert_eq!(resultant(&p(&[-5, 1]), &p(&[-3, 1])).unwrap(), int(2));
    }

    #[test]
    fn resultant_vanishes_on_common_roots() {
        let f = p(&[1, -3, 0, 1]);
        assert_eq!(resultant(&f, &f).unwrap(), int(0));
    }

    #[test]
    fn resultant_rejects_two_zeros() {
        assert_eq!(resultant(&Poly::<Rational>::zero(), &Poly::zero()), Err(Error::ResultantOfZeros));
    }

    #[test]
    fn resultant_with_constants() {
        assert_eq!(resultant(&p(&[2]), &p(&[1, 0, 1])).unwrap(), int(4));
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[3])).unwrap(), int(9));
        assert_eq!(resultant(&p(&[1, 0, 1]), &Poly::zero()).unwrap(), int(0));
    }

    #[test]
    fn division_identity() {
        let a = p(&[5, -3, 0, 2, 7]);
        let b = p(&[1, 2, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
        assert_eq!(a.div_rem(&Poly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn squarefree_profile_of_constructed_inputs() {
        // (x − 1)²(x + 2)
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        assert_eq!(squarefree_profile(&f).unwrap(), BTreeMap::from([(1, 1), (2, 1)]));
        assert_eq!(squarefree_profile(&p(&[1, -3, 0, 1])).unwrap(), BTreeMap::from([(1, 3)]));
        assert_eq!(squarefree_profile(&Poly::<Rational>::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn cubic_discriminant_oracle() {
        // y³ + py + q has discriminant −4p³ − 27q²; for p = −3, q = 1 it is 81.
        let (pp, qq) = (int(-3), int(1));
        let disc = int(-4) * &pp * &pp * &pp - int(27) * &qq * &qq;
        assert_eq!(disc, int(81));
    }

    /// Integer roots with multiplicities by trial division over the divisors of
    /// the (integral, nonzero) constant term.
    fn integer_root_profile(f: &Poly<Rational>) -> BTreeMap<usize, usize> {
        let mut f = f.clone();
        let mut zero_mult = 0;
        while f.coeff(0) == int(0) {
            f = f.exact_div(&Poly::x()).unwrap();
            zero_mult += 1;
        }
        let c0 = f.coeff(0).to_integer();
        let c0: i64 = c0.try_into().unwrap();
        let mut profile = BTreeMap::new();
        if zero_mult > 0 {
            *profile.entry(zero_mult).or_insert(0) += 1;
        }
        for cand in 1..=c0.abs() {
            if c0 % cand != 0 {
                continue;
            }
            for r in [cand, -cand] {
                let lin = p(&[-r, 1]);
                let mut mult = 0;
                while lin.divides(&f) {
                    f = f.exact_div(&lin).unwrap();
                    mult += 1;
                }
                if mult > 0 {
                    *profile.entry(mult).or_insert(0) += 1;
                }
            }
        }
        profile
    }

    proptest! {
        #[test]
        fn squarefree_profile_matches_root_finding(
            roots in proptest::collection::btree_map(-6i64..6, 1usize..4, 1..4)
        ) {
            let mut f = p(&[1]);
            for (&r, &k) in &roots {
                f = &f * &p(&[-r, 1]).pow(k as u32);
            }
            let profile = squarefree_profile(&f).unwrap();
            prop_assert_eq!(&profile, &integer_root_profile(&f));
            let weighted: usize = profile.iter().map(|(k, c)| k * c).sum();
            prop_assert_eq!(weighted, f.degree().unwrap());
        }

        #[test]
        fn resultant_is_multiplicative(
            a in proptest::collection::vec(-5i64..5, 2..4),
            b in proptest::collection::vec(-5i64..5, 2..4),
            c in proptest::collection::vec(-5i64..5, 2..4),
        ) {
            let (f, g, h) = (p(&a), p(&b), p(&c));
            prop_assume!(f.degree().unwrap_or(0) > 0 && g.degree().unwrap_or(0) > 0 && h.degree().unwrap_or(0) > 0);
            let lhs = resultant(&(&f * &g), &h).unwrap();
            let rhs = resultant(&f, &h).unwrap() * resultant(&g, &h).unwrap();
            prop_assert_eq!(&lhs, &rhs);
            prop_assert_eq!(lhs, sylvester_resultant(&(&f * &g), &h));
        }

        #[test]
        fn degree_is_additive(
            a in proptest::collection::vec(-5i64..5, 1..5),
            b in proptest::collection::vec(-5i64..5, 1..5),
        ) {
            let (f, g) = (p(&a), p(&b));
            prop_assume!(!f.is_zero() && !g.is_zero());
            prop_assert_eq!((&f * &g).degree().unwrap(), f.degree().unwrap() + g.degree().unwrap());
        }

        #[test]
        fn gcd_with_derivative_sees_exactly_the_repeated_factors(
            roots in proptest::collection::btree_map(-6i64..6, 1usize..4, 1..4)
        ) {
            let mut f = p(&[1]);
            let mut repeated = p(&[1]);
            for (&r, &k) in &roots {
                f = &f * &p(&[-r, 1]).pow(k as u32);
                if k > 1 {
                    repeated = &repeated * &p(&[-r, 1]).pow(k as u32 - 1);
                }
            }
            prop_assert_eq!(f.gcd(&f.derivative()), repeated);
        }

        #[test]
        fn rational_round_trip(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = rat(a, b);
            let y = rat(c, d);
            prop_assert_eq!(&(&x + &y) - &y, x);
        }
    }
}
