//! Integral points of X_ns⁺(9) and the imaginary quadratic orders of class
//! number one they come from.

mod cm;
mod forms;

pub use cm::{cm_j, j_coefficients, truncation_order, CmValue, MIN_DIGITS, TAIL_TOLERANCE};
pub use forms::{
    class_number, class_number_one_list, class_number_wide, is_fundamental, reduced_forms,
    reduced_forms_in_window, ClassNumberOne, QuadForm,
};

use crate::exactalg::{factor, kronecker, primes_up_to, BigInt, Extended};
use crate::param::t_from_pair;
use crate::report::{Check, CheckReport};
use crate::thue::{solve_bounded, BinaryCubicForm};
use crate::{Error, Result};

/// Discriminant bound for the class-number-one search used in matching.
pub const DISCRIMINANT_BOUND: i64 = 10_000;

/// A rational point `y = m/n` with integral `t`, hence integral `j = t³`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegralPoint {
    pub m: i64,
    pub n: i64,
    /// `m³ − 3mn² + n³`, one of 1 or 3 for the chosen sign of `(m, n)`.
    pub form_value: i64,
    pub t: BigInt,
    pub j: BigInt,
    pub matched_discriminant: Option<i64>,
}

impl IntegralPoint {
    /// Prime factorization of `|j|`, from that of `|t|`.
    pub fn j_factorization(&self) -> Vec<(u64, u32)> {
        let t: u64 = match self.t.magnitude().try_into() {
            Ok(t) => t,
            Err(_) => return Vec::new(),
        };
        if t == 0 {
            return Vec::new();
        }
        factor(t).into_iter().map(|(p, e)| (p, 3 * e)).collect()
    }

    pub fn j_is_negative(&self) -> bool {
        self.j < BigInt::from(0)
    }
}

/// The points with integral `t` among the solutions of `m³ − 3mn² + n³ ∈ {±1, ±3}`
/// in the box `|m|, |n| ≤ bound`, one per `y = m/n`, sorted by `|j|`.
pub fn integral_points(bound: i64) -> Result<Vec<IntegralPoint>> {
    let sols = solve_bounded(&BinaryCubicForm::cusp_form(), &[1, -1, 3, -3], bound)?;
    let mut points = Vec::new();
    // (m, n) and (−m, −n) give the same y; keep the sign with positive form value
    for s in sols.into_iter().filter(|s| s.value > 0) {
        let Extended::Finite(t) = t_from_pair(&s.m.into(), &s.n.into()) else {
            continue;
        };
        if !t.is_integer() {
            continue;
        }
        let t = t.to_integer();
        let j = t.pow(3);
        points.push(IntegralPoint { m: s.m, n: s.n, form_value: s.value, t, j, matched_discriminant: None });
    }
    points.sort_by(|a, b| a.j.magnitude().cmp(b.j.magnitude()).then((a.m, a.n).cmp(&(b.m, b.n))));
    Ok(points)
}

/// `j(τ_d)` for every order of class number one in which 3 is inert.
#[derive(Clone, Debug)]
pub struct CmTable {
    pub list: ClassNumberOne,
    pub values: Vec<CmValue>,
}

impl CmTable {
    pub fn new(bound: i64, digits: u32) -> Result<Self> {
        let list = class_number_one_list(bound)?;
        let values = list.three_inert.iter().map(|&d| cm_j(d, digits)).collect::<Result<_>>()?;
        Ok(CmTable { list, values })
    }

    /// The unique `d` with `|j(τ_d) − j| < 0.5`, if any.
    pub fn match_j(&self, j: &BigInt) -> Result<Option<i64>> {
        let hits: Vec<i64> = self.values.iter().filter(|v| v.distance_to(j) < 0.5).map(|v| v.d).collect();
        match hits.len() {
            0 => Ok(None),
            1 => Ok(Some(hits[0])),
            _ => Err(Error::AmbiguousMatch(hits)),
        }
    }
}

pub fn match_point(point: &IntegralPoint, bound: i64, digits: u32) -> Result<Option<i64>> {
    CmTable::new(bound, digits)?.match_j(&point.j)
}

/// Integral points with their matched discriminants.
pub fn matched_points(thue_bound: i64, digits: u32) -> Result<Vec<IntegralPoint>> {
    let table = CmTable::new(DISCRIMINANT_BOUND, digits)?;
    let mut points = integral_points(thue_bound)?;
    for p in &mut points {
        p.matched_discriminant = table.match_j(&p.j)?;
    }
    Ok(points)
}

/// `kronecker(d, p) = −1` for every prime `p < (1 + |d|)/4` not dividing `d`.
pub fn inertness_criterion(d: i64) -> Result<CheckReport> {
    forms::check_discriminant(d)?;
    if !is_fundamental(d) {
        return Err(Error::NotFundamental(d));
    }
    let mut report = CheckReport::new(format!("primes below (1 + |d|)/4 inert for d = {d}"));
    let limit = (1 + d.unsigned_abs()) / 4;
    let primes: Vec<u64> =
        primes_up_to(limit).into_iter().filter(|&p| p * 4 < 1 + d.unsigned_abs()).collect();
    if primes.is_empty() {
        report.push(Check::new("no primes below the limit", true, format!("(1 + |d|)/4 = {limit}")));
    }
    for p in primes {
        if d % p as i64 == 0 {
            continue;
        }
        let k = kronecker(d, p as i64)?;
        report.push(Check::new(format!("p = {p}"), k == -1, format!("kronecker({d}, {p}) = {k}")));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Rows of the table of integral points: (m, n), factored |j| with sign, d.
    #[allow(clippy::type_complexity)]
    const TABLE: [((i64, i64), i8, &[(u64, u32)], Option<i64>); 9] = [
        ((-1, 1), 1, &[(2, 6), (3, 3)], Some(-4)),
        ((1, 0), -1, &[(3, 3), (5, 3)], Some(-7)),
        ((-1, -1), 1, &[(2, 3), (3, 3), (11, 3)], Some(-16)),
        ((0, 1), -1, &[(2, 15), (3, 3)], Some(-19)),
        ((-1, -2), 1, &[(3, 3), (5, 3), (17, 3)], Some(-28)),
        ((2, 1), -1, &[(2, 18), (3, 3), (5, 3)], Some(-43)),
        ((2, -1), -1, &[(2, 15), (3, 3), (5, 3), (11, 3)], Some(-67)),
        ((1, 3), -1, &[(2, 18), (3, 3), (5, 3), (23, 3), (29, 3)], Some(-163)),
        ((-3, -2), 1, &[(3, 3), (41, 3), (61, 3), (149, 3)], None),
    ];

    #[test]
    fn nine_points_in_table_order() {
        let points = matched_points(10_000, 40).unwrap();
        assert_eq!(points.len(), 9);
        for (p, (mn, sign, fac, d)) in points.iter().zip(TABLE) {
            assert_eq!((p.m, p.n), mn);
            assert_eq!(p.j_is_negative(), sign < 0);
            assert_eq!(p.j_factorization(), fac.to_vec());
            assert_eq!(p.matched_discriminant, d);
        }
    }

    #[test]
    fn small_bound_already_has_all_points() {
        assert_eq!(integral_points(4).unwrap().len(), 9);
        assert_eq!(integral_points(4).unwrap(), integral_points(1000).unwrap());
    }

    #[test]
    fn named_rows() {
        let points = integral_points(100).unwrap();
        let row = |m, n| points.iter().find(|p| (p.m, p.n) == (m, n)).unwrap();
        assert_eq!(row(1, 0).t, BigInt::from(-15));
        assert_eq!(row(1, 0).j, BigInt::from(-3375));
        assert_eq!(row(1, 3).j, -BigInt::from(640320).pow(3));
        assert_eq!(row(-3, -2).j, BigInt::from(1117947).pow(3));
    }

    #[test]
    fn every_j_is_a_cube_of_t() {
        for p in integral_points(100).unwrap() {
            assert_eq!(p.j, p.t.pow(3));
            assert!(matches!(p.form_value, 1 | 3));
        }
    }

    #[test]
    fn matching_examples() {
        let table = CmTable::new(DISCRIMINANT_BOUND, 40).unwrap();
        assert_eq!(table.match_j(&BigInt::from(-3375)).unwrap(), Some(-7));
        assert_eq!(table.match_j(&BigInt::from(287496)).unwrap(), Some(-16));
        assert_eq!(table.match_j(&BigInt::from(1117947).pow(3)).unwrap(), None);
        // j = 0 belongs to d = −3, where 3 ramifies
        assert_eq!(table.match_j(&BigInt::from(0)).unwrap(), None);
    }

    #[test]
    fn non_cm_point_is_far_from_every_class_number_one_value() {
        let j = BigInt::from(1117947).pow(3);
        for n in 3..=DISCRIMINANT_BOUND {
            let d = -n;
            if class_number(d).map(|h| h == 1).unwrap_or(false) {
                assert!(cm_j(d, 40).unwrap().distance_to(&j) > 1.0);
            }
        }
    }

    #[test]
    fn inertness_for_163() {
        let report = inertness_criterion(-163).unwrap();
        assert!(report.passed(), "{report}");
        let primes: Vec<u64> = primes_up_to(40);
        assert_eq!(report.checks.len(), primes.len());
    }

    #[test]
    fn inertness_is_vacuous_for_7() {
        let report = inertness_criterion(-7).unwrap();
        assert!(report.passed());
        assert_eq!(report.checks.len(), 1);
    }

    #[test]
    fn inertness_fails_for_15_at_two() {
        let report = inertness_criterion(-15).unwrap();
        let failures: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        assert_eq!(failures, vec!["p = 2".to_string()]);
    }

    #[test]
    fn inertness_needs_a_fundamental_discriminant() {
        assert_eq!(inertness_criterion(-16).unwrap_err(), Error::NotFundamental(-16));
    }

    #[test]
    fn inertness_holds_for_the_nine_fields() {
        for d in [-3, -4, -7, -8, -11, -19, -43, -67, -163] {
            assert!(inertness_criterion(d).unwrap().passed(), "{d}");
        }
    }
}
