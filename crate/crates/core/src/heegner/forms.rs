//! Reduced binary quadratic forms and class numbers of imaginary quadratic orders.

use serde::Serialize;

use crate::exactalg::{gcd_i64, kronecker};
use crate::{Error, Result};

/// `a·x² + b·xy + c·y²`
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        QuadForm { a, b, c }
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// `|b| ≤ a ≤ c`, `a > 0`, and `b ≥ 0` when `|b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        self.a > 0
            && self.b.abs() <= self.a
            && self.a <= self.c
            && (self.b >= 0 || (self.b.abs() != self.a && self.a != self.c))
    }

    pub fn is_primitive(&self) -> bool {
        gcd_i64(gcd_i64(self.a, self.b), self.c) == 1
    }
}

pub fn check_discriminant(d: i64) -> Result<()> {
    if d >= 0 || !matches!(d.rem_euclid(4), 0 | 1) {
        return Err(Error::BadDiscriminant(d));
    }
    Ok(())
}

/// Primitive reduced forms of discriminant `d`, with `b` ranging over
/// `|b| ≤ window · √(|d|/3)`. Any window ≥ 1 gives the same list.
pub fn reduced_forms_in_window(d: i64, window: i64) -> Result<Vec<QuadForm>> {
    check_discriminant(d)?;
    let n = -d;
    let b_max = window * (((n / 3) as f64).sqrt() as i64 + 1);
    let mut out = Vec::new();
    let mut b = -b_max;
    while b <= b_max {
        if (b - d).rem_euclid(2) == 0 {
            // 4ac = b² − d
            let ac = (b * b + n) / 4;
            let mut a = b.abs().max(1);
            while a * a <= ac {
                if ac % a == 0 {
                    let f = QuadForm::new(a, b, ac / a);
                    if f.is_reduced() && f.is_primitive() {
                        out.push(f);
                    }
                }
                a += 1;
            }
        }
        b += 1;
    }
    out.sort();
    Ok(out)
}

pub fn reduced_forms(d: i64) -> Result<Vec<QuadForm>> {
    reduced_forms_in_window(d, 1)
}

/// Class number of the order of discriminant `d`: the number of primitive
/// reduced forms.
pub fn class_number(d: i64) -> Result<u64> {
    Ok(reduced_forms(d)?.len() as u64)
}

/// `h(d)` recomputed with a doubled `b` window.
pub fn class_number_wide(d: i64) -> Result<u64> {
    Ok(reduced_forms_in_window(d, 2)?.len() as u64)
}

/// Discriminants `d` with `|d| ≤ bound` and `h(d) = 1`, and the sublist in
/// which 3 is inert.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ClassNumberOne {
    pub bound: i64,
    pub all: Vec<i64>,
    pub three_inert: Vec<i64>,
}

pub fn class_number_one_list(bound: i64) -> Result<ClassNumberOne> {
    if bound < 163 {
        return Err(Error::BadBound);
    }
    let mut all = Vec::new();
    for n in 3..=bound {
        let d = -n;
        if check_discriminant(d).is_ok() && class_number(d)? == 1 {
            all.push(d);
        }
    }
    let three_inert = all.iter().copied().filter(|&d| kronecker(d, 3) == Ok(-1)).collect();
    Ok(ClassNumberOne { bound, all, three_inert })
}

fn is_squarefree(n: i64) -> bool {
    let n = n.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Discriminant of the maximal order of an imaginary quadratic field.
pub fn is_fundamental(d: i64) -> bool {
    if check_discriminant(d).is_err() {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d),
        _ => matches!((d / 4).rem_euclid(4), 2 | 3) && is_squarefree(d / 4),
    }
}
