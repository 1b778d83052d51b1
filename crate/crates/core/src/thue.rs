//! The cubic Thue equations m³ − 3mn² + n³ = ±1, ±3 solved exhaustively inside a
//! box, and the mod-9 obstruction that reduces integral points to them.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::json;

use crate::exactalg::{factor, gcd_i64, resultant, BigInt, Rational};
use crate::param::{cusp_cubic, rho_factor_1, rho_factor_2, rho_factor_3};
use crate::report::{Check, CheckReport};
use crate::{Error, Result};

/// `a·X³ + b·X²Y + c·XY² + d·Y³`
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct BinaryCubicForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl BinaryCubicForm {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        BinaryCubicForm { a, b, c, d }
    }

    /// `m³ − 3mn² + n³`, the homogenized cusp polynomial.
    pub const fn cusp_form() -> Self {
        Self::new(1, 0, -3, 1)
    }

    pub fn value(&self, m: &BigInt, n: &BigInt) -> BigInt {
        let (a, b, c, d) =
            (BigInt::from(self.a), BigInt::from(self.b), BigInt::from(self.c), BigInt::from(self.d));
        a * m * m * m + b * m * m * n + c * m * n * n + d * n * n * n
    }

    fn value_i128(&self, m: i64, n: i64) -> i128 {
        let (m, n) = (m as i128, n as i128);
        ((self.a as i128 * m + self.b as i128 * n) * m + self.c as i128 * n * n) * m
            + self.d as i128 * n * n * n
    }

    /// Largest `B` for which every value on `|m|, |n| ≤ B` fits comfortably in an i128.
    fn max_bound(&self) -> i64 {
        let h =
            (self.a.unsigned_abs() + self.b.unsigned_abs() + self.c.unsigned_abs() + self.d.unsigned_abs())
                as f64;
        ((i128::MAX as f64 / 8.0 / h).cbrt() as i64).min(i64::MAX / 4)
    }
}

pub fn form_value(form: &BinaryCubicForm, m: &BigInt, n: &BigInt) -> BigInt {
    form.value(m, n)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct ThueSolution {
    pub m: i64,
    pub n: i64,
    pub value: i64,
}

impl ThueSolution {
    fn sort_key(&self) -> (i64, i64, i64) {
        (self.value, self.m, self.n)
    }
}

fn validate(form: &BinaryCubicForm, targets: &[i64], bound: i64) -> Result<()> {
    if targets.is_empty() {
        return Err(Error::EmptyTargets);
    }
    if form.a == 0 {
        return Err(Error::DegenerateForm);
    }
    if bound < 1 || bound > form.max_bound() {
        return Err(Error::BadBound);
    }
    Ok(())
}

/// Integer points of `[lo, hi]` where `m ↦ F(m, n)` is monotone, with small
/// windows around the real critical points searched exhaustively.
fn split_monotone(form: &BinaryCubicForm, n: i64, lo: i64, hi: i64) -> (Vec<(i64, i64)>, Vec<i64>) {
    // F_m = 3a·m² + 2b·n·m + c·n²
    let (qa, qb, qc) =
        (3.0 * form.a as f64, 2.0 * form.b as f64 * n as f64, form.c as f64 * (n as f64).powi(2));
    let disc = qb * qb - 4.0 * qa * qc;
    let mut crit: Vec<f64> = Vec::new();
    if disc >= 0.0 {
        let r = disc.sqrt();
        crit.push((-qb - r) / (2.0 * qa));
        crit.push((-qb + r) / (2.0 * qa));
        crit.sort_by(|x, y| x.partial_cmp(y).unwrap());
    }
    let mut windows = Vec::new();
    let mut pieces = Vec::new();
    let mut start = lo;
    for c in crit {
        let centre = c.round();
        if centre < (lo - 3) as f64 || centre > (hi + 3) as f64 {
            continue;
        }
        let (wl, wh) = ((centre as i64 - 2).max(lo), (centre as i64 + 2).min(hi));
        if wl > wh {
            continue;
        }
        if start < wl {
            pieces.push((start, wl - 1));
        }
        windows.extend(wl.max(start)..=wh);
        start = start.max(wh + 1);
    }
    if start <= hi {
        pieces.push((start, hi));
    }
    (pieces, windows)
}

/// Finds `m ∈ [lo, hi]` with `F(m, n) = target` on a monotone piece.
fn search_piece(form: &BinaryCubicForm, n: i64, (lo, hi): (i64, i64), target: i128) -> Option<i64> {
    let (flo, fhi) = (form.value_i128(lo, n), form.value_i128(hi, n));
    let increasing = flo <= fhi;
    let (mut l, mut h) = (lo, hi);
    while l <= h {
        let mid = l + (h - l) / 2;
        let v = form.value_i128(mid, n);
        if v == target {
            return Some(mid);
        }
        if (v < target) == increasing {
            l = mid + 1;
        } else {
            h = mid - 1;
        }
    }
    None
}

fn solve_range(
    form: &BinaryCubicForm,
    targets: &BTreeSet<i64>,
    bound: i64,
    ns: std::ops::RangeInclusive<i64>,
) -> Vec<ThueSolution> {
    let signed: BTreeSet<i128> = targets.iter().flat_map(|&t| [t as i128, -(t as i128)]).collect();
    let mut out = Vec::new();
    let mut record = |m: i64, n: i64, v: i128| {
        if gcd_i64(m, n) != 1 {
            return;
        }
        if targets.contains(&(v as i64)) {
            out.push(ThueSolution { m, n, value: v as i64 });
        }
        // F(−m, −n) = −F(m, n) covers the half-plane n < 0
        if n > 0 && targets.contains(&(-v as i64)) {
            out.push(ThueSolution { m: -m, n: -n, value: -v as i64 });
        }
    };
    for n in ns {
        let (pieces, windows) = split_monotone(form, n, -bound, bound);
        let mut hits = BTreeSet::new();
        for m in windows {
            let v = form.value_i128(m, n);
            if signed.contains(&v) {
                hits.insert((m, v));
            }
        }
        for &piece in &pieces {
            for &t in &signed {
                if let Some(m) = search_piece(form, n, piece, t) {
                    hits.insert((m, t));
                }
            }
        }
        for (m, v) in hits {
            record(m, n, v);
        }
    }
    out
}

fn finish(mut sols: Vec<ThueSolution>) -> Vec<ThueSolution> {
    sols.sort_by_key(ThueSolution::sort_key);
    sols.dedup();
    sols
}

/// All coprime `(m, n)` with `|m|, |n| ≤ bound` and `F(m, n)` in `targets`,
/// sorted by value, then `m`, then `n`.
pub fn solve_bounded(form: &BinaryCubicForm, targets: &[i64], bound: i64) -> Result<Vec<ThueSolution>> {
    validate(form, targets, bound)?;
    let targets: BTreeSet<i64> = targets.iter().copied().collect();
    Ok(finish(solve_range(form, &targets, bound, 0..=bound)))
}

/// Same result as [`solve_bounded`], with the range of `n` split across
/// `workers` threads.
pub fn solve_bounded_parallel(
    form: &BinaryCubicForm,
    targets: &[i64],
    bound: i64,
    workers: usize,
) -> Result<Vec<ThueSolution>> {
    validate(form, targets, bound)?;
    let targets: BTreeSet<i64> = targets.iter().copied().collect();
    let workers = workers.max(1) as i64;
    let chunk = (bound + 1 + workers - 1) / workers;
    let parts: Vec<Vec<ThueSolution>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let (lo, hi) = (w * chunk, ((w + 1) * chunk - 1).min(bound));
                let targets = &targets;
                scope.spawn(
                    move || if lo > hi { Vec::new() } else { solve_range(form, targets, bound, lo..=hi) },
                )
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    Ok(finish(parts.into_iter().flatten().collect()))
}

/// `(m, n) ↦ (−n, m − n)`, an order-3 automorphism of the cusp form.
pub fn rotate(m: i64, n: i64) -> (i64, i64) {
    (-n, m - n)
}

/// Congruence facts that confine `m³ − 3mn² + n³` to `±1, ±3` at integral points.
pub fn mod9_obstruction() -> CheckReport {
    let mut report = CheckReport::new("mod 9 obstruction");
    let f = |y: i64| y * y * y - 3 * y + 1;
    let residues: Vec<(i64, i64)> = (0..9).map(|y| (y, f(y).rem_euclid(9))).collect();
    report.push(
        Check::new(
            "(a) y^3 - 3y + 1 has no root mod 9",
            residues.iter().all(|&(_, v)| v != 0),
            residues.iter().map(|(y, v)| format!("{y}->{v}")).collect::<Vec<_>>().join(" "),
        )
        .with_witness(json!(residues)),
    );
    let roots3: Vec<i64> = (0..3).filter(|&y| f(y).rem_euclid(3) == 0).collect();
    report.push(Check::new(
        "(b) y^3 - 3y + 1 has a root mod 3",
        roots3 == [2],
        format!("roots mod 3: {roots3:?}"),
    ));
    let numerator = &(&rho_factor_1() * &rho_factor_2()) * &rho_factor_3();
    let res = resultant(&numerator, &cusp_cubic());
    let (ok, detail, witness) = match res {
        Ok(r) if r.is_integer() => {
            let r_int = r.to_integer();
            let expected = BigInt::from(3).pow(15);
            let primes = small_prime_support(&r_int);
            (
                r_int == expected && primes == Some(vec![3]),
                format!("resultant = {r_int}, prime support {primes:?}"),
                json!(r_int.to_string()),
            )
        }
        Ok(r) => (false, format!("non-integral resultant {r}"), json!(null)),
        Err(e) => (false, e.to_string(), json!(null)),
    };
    report.push(Check::new("(c) resultant is 3^15", ok, detail).with_witness(witness));
    report
}

fn small_prime_support(n: &BigInt) -> Option<Vec<u64>> {
    let v: u64 = n.magnitude().try_into().ok()?;
    Some(factor(v).into_iter().map(|(p, _)| p).collect())
}

/// Exact value of `t` at `y = m/n` as a rational number (`None` at a cusp).
pub fn t_at(m: i64, n: i64) -> Option<Rational> {
    crate::param::t_from_pair(&m.into(), &n.into()).finite()
}
