//! Weierstrass invariants and point counts over prime fields.

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::exactalg::{is_prime, kronecker, primes_up_to, BigInt, Rational};
use crate::{Error, Result};

/// `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6`
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeierstrassCurve {
    pub a1: BigInt,
    pub a2: BigInt,
    pub a3: BigInt,
    pub a4: BigInt,
    pub a6: BigInt,
}

impl WeierstrassCurve {
    pub fn new(a1: i64, a2: i64, a3: i64, a4: i64, a6: i64) -> Self {
        WeierstrassCurve { a1: a1.into(), a2: a2.into(), a3: a3.into(), a4: a4.into(), a6: a6.into() }
    }

    /// `y² + xy + y = x³ − x² − 408865825x − 3182038133498`, with
    /// `j = 1117947³`.
    pub fn non_cm_curve() -> Self {
        Self::new(1, -1, 1, -408_865_825, -3_182_038_133_498)
    }

    pub fn coefficients(&self) -> [&BigInt; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Invariants {
    pub b2: BigInt,
    pub b4: BigInt,
    pub b6: BigInt,
    pub b8: BigInt,
    pub c4: BigInt,
    pub c6: BigInt,
    pub discriminant: BigInt,
    pub j: Rational,
}

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `(b2, b4, b6, b8, c4, c6)`
fn b_and_c(e: &WeierstrassCurve) -> [BigInt; 6] {
    let WeierstrassCurve { a1, a2, a3, a4, a6 } = e;
    let b2 = a1 * a1 + int(4) * a2;
    let b4 = int(2) * a4 + a1 * a3;
    let b6 = a3 * a3 + int(4) * a6;
    let b8 = a1 * a1 * a6 + int(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    let c4 = &b2 * &b2 - int(24) * &b4;
    let c6 = -(&b2 * &b2 * &b2) + int(36) * &b2 * &b4 - int(216) * &b6;
    [b2, b4, b6, b8, c4, c6]
}

pub fn invariants(e: &WeierstrassCurve) -> Result<Invariants> {
    let [b2, b4, b6, b8, c4, c6] = b_and_c(e);
    assert_eq!(int(4) * &b8, &b2 * &b6 - &b4 * &b4);
    let discriminant =
        -(&b2 * &b2 * &b8) - int(8) * &b4 * &b4 * &b4 - int(27) * &b6 * &b6 + int(9) * &b2 * &b4 * &b6;
    debug_assert_eq!(int(1728) * &discriminant, &c4 * &c4 * &c4 - &c6 * &c6);
    if discriminant.is_zero() {
        return Err(Error::Singular);
    }
    let j = Rational::new(&c4 * &c4 * &c4, discriminant.clone());
    Ok(Invariants { b2, b4, b6, b8, c4, c6, discriminant, j })
}

fn residue(x: &BigInt, p: u64) -> u64 {
    let r = x % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u64().expect("residue fits")
}

/// `|E(F_p)|` by trying every affine `(x, y)`; works for every prime, including 2 and 3.
pub fn count_points_naive(e: &WeierstrassCurve, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let [a1, a2, a3, a4, a6] = e.coefficients().map(|a| residue(a, p) as u128);
    let p = p as u128;
    let mut count = 1u64;
    for x in 0..p {
        let rhs = (((x + a2) * x % p + a4) * x + a6) % p;
        for y in 0..p {
            let lhs = (y * y + a1 * x * y + a3 * y) % p;
            if lhs == rhs {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `|E(F_p)|`. For `p > 3` via the short model `y² = x³ − 27c₄x − 54c₆` and
/// `1 + Σ_x (1 + (f(x)/p))`; for `p ≤ 3` by enumeration.
pub fn count_points(e: &WeierstrassCurve, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 3 {
        return count_points_naive(e, p);
    }
    let [.., c4, c6] = b_and_c(e);
    let a = residue(&(int(-27) * c4), p) as u128;
    let b = residue(&(int(-54) * c6), p) as u128;
    let pp = p as u128;
    let mut count = 1u64;
    for x in 0..pp {
        let f = ((x * x % pp + a) * x + b) % pp;
        let chi = kronecker(f as i64, p as i64)?;
        count += (1 + chi) as u64;
    }
    Ok(count)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ApRecord {
    pub p: u64,
    pub count: u64,
    pub a_p: i64,
    /// `kronecker(disc, p) = −1` for the chosen quadratic discriminant.
    pub inert: bool,
    /// `p ∤ Δ`
    pub good: bool,
}

impl ApRecord {
    pub fn within_hasse_bound(&self) -> bool {
        let a = self.a_p as i128;
        a * a <= 4 * self.p as i128
    }
}

/// One record per prime `p ≤ pmax`, ordered by `p`.
pub fn ap_table(e: &WeierstrassCurve, pmax: u64, inert_disc: i64) -> Result<Vec<ApRecord>> {
    let disc = invariants(e)?.discriminant;
    primes_up_to(pmax)
        .into_iter()
        .map(|p| {
            let count = count_points(e, p)?;
            Ok(ApRecord {
                p,
                count,
                a_p: p as i64 + 1 - count as i64,
                inert: kronecker(inert_disc, p as i64)? == -1,
                good: residue(&disc, p) != 0,
            })
        })
        .collect()
}
