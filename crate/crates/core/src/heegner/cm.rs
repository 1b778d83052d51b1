//! High-precision values of j at CM points, from the q-expansion.
//!
//! All real arithmetic is binary fixed point: a value `x` is the integer
//! `round(x · 2^bits)`.

use std::fmt;

use num_bigint::Sign;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::forms::check_discriminant;
use crate::exactalg::BigInt;
use crate::{Error, Result};

/// Absolute tolerance the truncated series must meet.
pub const TAIL_TOLERANCE: f64 = 1e-12;
const GUARD_BITS: u32 = 64;
pub const MIN_DIGITS: u32 = 30;

#[derive(Clone, Copy, Debug)]
struct Fixed {
    bits: u32,
}

impl Fixed {
    fn one(&self) -> BigInt {
        BigInt::one() << self.bits
    }

    fn int(&self, n: i64) -> BigInt {
        BigInt::from(n) << self.bits
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) >> self.bits
    }

    fn div(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a << self.bits) / b
    }

    fn sqrt(&self, a: &BigInt) -> BigInt {
        (a << self.bits).sqrt()
    }

    /// `atan(1/k)` by its alternating series.
    fn atan_inv(&self, k: i64) -> BigInt {
        let k2 = BigInt::from(k * k);
        let mut power = self.one() / k;
        let mut sum = BigInt::zero();
        let mut i = 0i64;
        while !power.is_zero() {
            let term = &power / (2 * i + 1);
            if i % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
            power /= &k2;
            i += 1;
        }
        sum
    }

    /// `π = 16·atan(1/5) − 4·atan(1/239)`
    fn pi(&self) -> BigInt {
        self.atan_inv(5) * 16 - self.atan_inv(239) * 4
    }

    /// `e^x` for `x ≥ 0`: halve until below 2⁻⁸, sum the Taylor series, square back.
    fn exp(&self, x: &BigInt) -> BigInt {
        assert!(!x.is_negative());
        let threshold = self.one() >> 8;
        let mut r = x.clone();
        let mut halvings = 0;
        while r > threshold {
            r >>= 1;
            halvings += 1;
        }
        let mut sum = self.one();
        let mut term = self.one();
        let mut k = 1i64;
        loop {
            term = self.mul(&term, &r) / k;
            if term.is_zero() {
                break;
            }
            sum += &term;
            k += 1;
        }
        for _ in 0..halvings {
            sum = self.mul(&sum, &sum);
        }
        sum
    }

    fn to_f64(self, a: &BigInt) -> f64 {
        let shift = self.bits.saturating_sub(60);
        let top = (a >> shift).to_f64().unwrap_or(f64::NAN);
        top / 2f64.powi((self.bits - shift) as i32)
    }
}

/// Coefficients `a_k` of `q·j(q) = Σ a_k q^k` for `k = 0..=n`, from
/// `j = E₄³ / (q·∏(1 − qⁿ)²⁴)` with `E₄ = 1 + 240·Σ σ₃(n)qⁿ`.
pub fn j_coefficients(n: usize) -> Vec<BigInt> {
    let len = n + 1;
    let mut e4 = vec![BigInt::zero(); len];
    e4[0] = BigInt::one();
    for (k, c) in e4.iter_mut().enumerate().skip(1) {
        let k = k as u64;
        let sigma3: u64 = (1..=k).filter(|d| k.is_multiple_of(*d)).map(|d| d * d * d).sum();
        *c = BigInt::from(240 * sigma3);
    }
    let mul = |a: &[BigInt], b: &[BigInt]| {
        let mut out = vec![BigInt::zero(); len];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(len - i) {
                out[i + j] += x * y;
            }
        }
        out
    };
    let e4_cubed = mul(&mul(&e4, &e4), &e4);
    // ∏(1 − qⁿ)²⁴ truncated
    let mut eta24 = vec![BigInt::zero(); len];
    eta24[0] = BigInt::one();
    for k in 1..len {
        for _ in 0..24 {
            for i in (k..len).rev() {
                let sub = eta24[i - k].clone();
                eta24[i] -= sub;
            }
        }
    }
    // inverse series, leading coefficient 1
    let mut inv = vec![BigInt::zero(); len];
    inv[0] = BigInt::one();
    for i in 1..len {
        let mut acc = BigInt::zero();
        for k in 1..=i {
            acc += &eta24[k] * &inv[i - k];
        }
        inv[i] = -acc;
    }
    mul(&e4_cubed, &inv)
}

/// `j(τ_d)` at `digits` decimal digits, with the truncation data that
/// certify it.
#[derive(Clone, Debug)]
pub struct CmValue {
    pub d: i64,
    pub digits: u32,
    /// Highest power of q kept.
    pub terms: usize,
    /// Upper bound for the omitted part of the series.
    pub tail_bound: f64,
    fixed: BigInt,
    bits: u32,
}

impl CmValue {
    pub fn to_f64(&self) -> f64 {
        Fixed { bits: self.bits }.to_f64(&self.fixed)
    }

    pub fn nearest_integer(&self) -> BigInt {
        let half = BigInt::one() << (self.bits - 1);
        (&self.fixed + half) >> self.bits
    }

    /// `|j(τ_d) − n|`
    pub fn distance_to(&self, n: &BigInt) -> f64 {
        let f = Fixed { bits: self.bits };
        f.to_f64(&(&self.fixed - (n << self.bits)).abs())
    }
}

impl fmt::Display for CmValue {
    /// Fixed decimal notation with ten digits after the point.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scale = BigInt::from(10u64.pow(10));
        let scaled = (&self.fixed * &scale + (BigInt::one() << (self.bits - 1))) >> self.bits;
        let (sign, mag) = (scaled.sign(), scaled.abs());
        let int_part = &mag / &scale;
        let frac = &mag % &scale;
        let minus = if sign == Sign::Minus { "-" } else { "" };
        write!(f, "{minus}{int_part}.{frac:0>10}")
    }
}

/// Bound for `Σ_{n>N} c_n |q|ⁿ` using `c_n ≤ e^{4π√n}`, or `None` while the
/// terms are still not decreasing geometrically at rate ≤ 1/2.
fn tail_after(n: usize, log_q: f64) -> Option<f64> {
    let log_term = |k: f64| 4.0 * std::f64::consts::PI * k.sqrt() + k * log_q;
    let first = log_term(n as f64 + 1.0);
    let ratio = (log_term(n as f64 + 2.0) - first).exp();
    if ratio > 0.5 {
        return None;
    }
    // the ratio of consecutive bounds only decreases from here on
    Some(first.exp() / (1.0 - ratio))
}

/// Smallest truncation order (at least 4) whose tail bound meets `TAIL_TOLERANCE`.
pub fn truncation_order(d: i64) -> (usize, f64) {
    let log_q = -std::f64::consts::PI * ((-d) as f64).sqrt();
    let mut n = 4;
    loop {
        if let Some(t) = tail_after(n, log_q) {
            if t < TAIL_TOLERANCE {
                return (n, t);
            }
        }
        n += 1;
    }
}

/// `j((−b₀ + √d)/2)` with `b₀ = d mod 2`, so `q = (−1)^{b₀}·e^{−π√|d|}`.
pub fn cm_j(d: i64, digits: u32) -> Result<CmValue> {
    check_discriminant(d)?;
    let abs_d = (-d) as f64;
    // bits needed to carry e^{π√|d|} and still resolve the tolerance
    let magnitude_bits = (std::f64::consts::PI * abs_d.sqrt() / std::f64::consts::LN_2).ceil() as u32;
    let requested_bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32;
    let needed = magnitude_bits + (-TAIL_TOLERANCE.log2()).ceil() as u32;
    if digits < MIN_DIGITS || requested_bits < needed {
        return Err(Error::InsufficientPrecision(digits, d));
    }
    let f = Fixed { bits: requested_bits + GUARD_BITS + magnitude_bits };
    let (terms, tail_bound) = truncation_order(d);

    let pi = f.pi();
    let root = f.sqrt(&f.int(-d));
    let inv_q_abs = f.exp(&f.mul(&pi, &root));
    let q_abs = f.div(&f.one(), &inv_q_abs);
    let odd = d.rem_euclid(2) == 1;
    let (inv_q, q) = if odd { (-inv_q_abs, -q_abs) } else { (inv_q_abs, q_abs) };

    let coeffs = j_coefficients(terms + 1);
    let mut value = inv_q + &coeffs[1] * f.one();
    let mut q_pow = f.one();
    for c in &coeffs[2..] {
        q_pow = f.mul(&q_pow, &q);
        value += c * &q_pow;
    }
    // report at the requested precision
    let out_bits = requested_bits + GUARD_BITS / 2;
    let fixed = value >> (f.bits - out_bits);
    Ok(CmValue { d, digits, terms, tail_bound, fixed, bits: out_bits })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_coefficients() {
        let c = j_coefficients(4);
        let expect: Vec<BigInt> =
            [1i64, 744, 196884, 21493760, 864299970].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(c, expect);
    }

    #[test]
    fn later_coefficients() {
        let c = j_coefficients(6);
        assert_eq!(c[5], BigInt::from(20245856256i64));
        assert_eq!(c[6], BigInt::from(333202640600i64));
    }

    #[test]
    fn coefficient_growth_bound_holds() {
        let c = j_coefficients(60);
        for (k, a) in c.iter().enumerate().skip(2) {
            let n = (k - 1) as f64;
            let log_c = a.to_f64().unwrap().ln();
            assert!(log_c <= 4.0 * std::f64::consts::PI * n.sqrt(), "c_{n}");
        }
    }

    #[test]
    fn pi_and_exp() {
        let f = Fixed { bits: 200 };
        let pi = f.to_f64(&f.pi());
        assert!((pi - std::f64::consts::PI).abs() < 1e-15);
        let e = f.to_f64(&f.exp(&f.one()));
        assert!((e - std::f64::consts::E).abs() < 1e-15);
        let big = f.to_f64(&f.exp(&f.int(40)));
        assert!((big / 40f64.exp() - 1.0).abs() < 1e-14);
        let root = f.to_f64(&f.sqrt(&f.int(163)));
        assert!((root - 163f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn j_at_i_is_1728() {
        let v = cm_j(-4, 40).unwrap();
        assert!(v.distance_to(&BigInt::from(1728)) < 1e-5);
        assert_eq!(v.nearest_integer(), BigInt::from(1728));
    }

    #[test]
    fn j_at_rho_is_zero() {
        let v = cm_j(-3, 40).unwrap();
        assert!(v.distance_to(&BigInt::zero()) < 1e-5, "{v}");
    }

    #[test]
    fn j_at_163() {
        let v = cm_j(-163, 40).unwrap();
        let expect = -BigInt::from(640320).pow(3);
        assert!(v.distance_to(&expect) < 1e-5, "{v}");
    }

    #[test]
    fn class_number_one_values() {
        let table: [(i64, i64); 13] = [
            (-3, 0),
            (-4, 1728),
            (-7, -3375),
            (-8, 8000),
            (-11, -32768),
            (-12, 54000),
            (-16, 287496),
            (-19, -884736),
            (-27, -12288000),
            (-28, 16581375),
            (-43, -884736000),
            (-67, -147197952000),
            (-163, -262537412640768000),
        ];
        for (d, j) in table {
            let v = cm_j(d, 40).unwrap();
            assert!(v.distance_to(&BigInt::from(j)) < 1e-5, "d = {d}: {v}");
        }
    }

    #[test]
    fn precision_floor() {
        assert_eq!(cm_j(-4, 20).unwrap_err(), Error::InsufficientPrecision(20, -4));
        assert_eq!(cm_j(-3511, 30).unwrap_err(), Error::InsufficientPrecision(30, -3511));
        assert!(cm_j(-163, 30).is_ok());
    }

    #[test]
    fn truncation_covers_small_discriminants() {
        let (n3, t3) = truncation_order(-3);
        assert!(n3 > 4 && t3 < TAIL_TOLERANCE);
        let (n163, _) = truncation_order(-163);
        assert_eq!(n163, 4);
    }

    #[test]
    fn display_is_fixed_point() {
        let v = cm_j(-4, 40).unwrap();
        assert!(v.to_string().starts_with("1728.0000000000") || v.to_string().starts_with("1727.9999999999"));
    }
}
