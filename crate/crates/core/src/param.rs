//! The uniformizer tower j = t³, t = ρ⁻¹(w³ + 9w − 6), w(u), u = (y + ρ)/(ρy + 1)
//! and its descent to a rational function t(y) over Q.

use num_traits::Zero;
use serde_json::json;

use crate::cartan::LevelNineGroups;
use crate::covering::{relative_fibers, BasePoint};
use crate::exactalg::{
    int, squarefree_profile, BigInt, Extended, Field, Poly, QSqrt3, Rational, RationalFunction, Ring,
};
use crate::report::{Check, CheckReport};
use crate::{Error, Result};

type K = QSqrt3;
type KFn = RationalFunction<K>;
type QFn = RationalFunction<Rational>;
/// Polynomials in τ whose coefficients are polynomials in a second variable.
type Bivariate = Poly<Poly<K>>;

fn s() -> K {
    K::sqrt_m3()
}

fn k(n: i64) -> K {
    K::from(n)
}

/// `y³ + 3y² − 6y + 4`
pub fn rho_factor_1() -> Poly<Rational> {
    Poly::from_i64s(&[4, -6, 3, 1])
}

/// `y³ + 3y² + 3y + 4`
pub fn rho_factor_2() -> Poly<Rational> {
    Poly::from_i64s(&[4, 3, 3, 1])
}

/// `5y³ − 3y² − 3y + 2`
pub fn rho_factor_3() -> Poly<Rational> {
    Poly::from_i64s(&[2, -3, -3, 5])
}

/// `y³ − 3y + 1`, vanishing at the three cusps.
pub fn cusp_cubic() -> Poly<Rational> {
    Poly::from_i64s(&[1, -3, 0, 1])
}

/// `t(y) = −3·(y³+3y²−6y+4)(y³+3y²+3y+4)(5y³−3y²−3y+2) / (y³−3y+1)³`
pub fn t_formula() -> QFn {
    let num = (&(&rho_factor_1() * &rho_factor_2()) * &rho_factor_3()).scale(&int(-3));
    QFn::new(num, cusp_cubic().pow(3)).expect("nonzero denominator")
}

/// Value of `t` at `y = m/n`, computed from the homogenized formula in `(m, n)`.
/// Infinite exactly when `m³ − 3mn² + n³ = 0`.
pub fn t_from_pair(m: &BigInt, n: &BigInt) -> Extended<Rational> {
    let hom = |p: Poly<Rational>| -> BigInt {
        let c = p.coeffs();
        (0..4).map(|i| c[i].to_integer() * m.pow(i as u32) * n.pow(3 - i as u32)).sum()
    };
    let num: BigInt = BigInt::from(-3) * hom(rho_factor_1()) * hom(rho_factor_2()) * hom(rho_factor_3());
    let den = hom(cusp_cubic()).pow(3);
    if den.is_zero() {
        return Extended::Infinity;
    }
    Extended::Finite(Rational::new(num, den))
}

/// Every layer of the tower as an exact rational function.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamTower {
    pub t_of_w: KFn,
    pub w_of_u: KFn,
    pub t_of_u: KFn,
    pub u_of_y: KFn,
    pub t_of_y: QFn,
    pub j_of_y: QFn,
}

/// `ρ⁻¹(w³ + 9w − 6)`
pub fn t_of_w_poly() -> Poly<K> {
    Poly::new(vec![k(-6), k(9), k(0), k(1)]).scale(&K::rho_inv())
}

/// `w = 3u√−3·(−u² − ρ⁻¹)/(u³ − ρ⁻¹) + √−3`
pub fn w_of_u_formula() -> KFn {
    let num = Poly::new(vec![k(0), K::rho_inv().neg_ref(), k(0), k(-1)]).scale(&(&k(3) * &s()));
    let den = Poly::new(vec![K::rho_inv().neg_ref(), k(0), k(0), k(1)]);
    let frac = KFn::new(num, den).expect("nonzero denominator");
    &frac + &KFn::constant(s())
}

/// `u = (y + ρ)/(ρy + 1)`
pub fn u_of_y_formula() -> KFn {
    KFn::new(Poly::new(vec![K::rho(), k(1)]), Poly::new(vec![k(1), K::rho()])).expect("nonzero denominator")
}

fn compose(outer: &KFn, inner: &KFn, layer: &'static str) -> Result<KFn> {
    outer.compose(inner).finite().ok_or(Error::Identity(layer))
}

fn descend(f: &KFn) -> Option<QFn> {
    f.try_map(|c| c.to_rational())
}

pub fn build_tower() -> Result<ParamTower> {
    let t_of_w = KFn::from_poly(t_of_w_poly());
    let w_of_u = w_of_u_formula();
    let u_of_y = u_of_y_formula();
    let t_of_u = compose(&t_of_w, &w_of_u, "t(u) = t(w(u))")?;
    let t_of_y_k = compose(&t_of_u, &u_of_y, "t(y) = t(u(y))")?;
    let t_of_y = descend(&t_of_y_k).ok_or(Error::Identity("t(y) has a √−3 part"))?;
    if t_of_y != t_formula() {
        return Err(Error::Identity("t(y) differs from the closed form"));
    }
    let j_of_y = t_of_y.pow(3);
    let degrees = [
        t_of_w.degree(),
        w_of_u.degree(),
        t_of_u.degree(),
        u_of_y.degree(),
        t_of_y.degree(),
        j_of_y.degree(),
    ];
    if degrees != [3, 3, 9, 1, 9, 27] {
        return Err(Error::Identity("layer degrees"));
    }
    Ok(ParamTower { t_of_w, w_of_u, t_of_u, u_of_y, t_of_y, j_of_y })
}

impl ParamTower {
    /// `(t(y), j(y))` on the projective line.
    pub fn eval(&self, y: &Extended<Rational>) -> (Extended<Rational>, Extended<Rational>) {
        let t = self.t_of_y.eval_extended(y);
        let j = match &t {
            Extended::Finite(t) => Extended::Finite(t.pow(3)),
            Extended::Infinity => Extended::Infinity,
        };
        (t, j)
    }

    /// `t(y)` computed through `u`, `w` and `t` in Q(√−3), one layer at a time.
    pub fn eval_layered(&self, y: &Extended<Rational>) -> Extended<K> {
        let y = match y {
            Extended::Finite(v) => Extended::Finite(K::from(v.clone())),
            Extended::Infinity => Extended::Infinity,
        };
        let u = self.u_of_y.eval_extended(&y);
        let w = self.w_of_u.eval_extended(&u);
        self.t_of_w.eval_extended(&w)
    }
}

fn bi_const(c: K) -> Bivariate {
    Poly::constant(Poly::constant(c))
}

fn cubic_relation(x: &Bivariate) -> Bivariate {
    &(&x.pow(3) + &(x * &bi_const(k(9)))) - &bi_const(k(6))
}

/// `ρ·(λ·F(ϑ + √−3) − ρ·F(τ − √−3))` with `F(x) = x³ + 9x − 6`; the correct
/// twist is `λ = ρ⁻¹`. Outer variable τ, inner ϑ.
fn twisted_relation(lambda: &K) -> Bivariate {
    let theta_plus_s = Poly::constant(Poly::new(vec![s(), k(1)]));
    let tau_minus_s = Poly::new(vec![Poly::constant(s().neg_ref()), Poly::one()]);
    let lhs = &cubic_relation(&theta_plus_s) * &bi_const(lambda.clone());
    let rhs = &cubic_relation(&tau_minus_s) * &bi_const(K::rho());
    &(&lhs - &rhs) * &bi_const(K::rho())
}

fn half_coefficient() -> K {
    // (−9 + 3√−3)/2
    K::new(Rational::new((-9).into(), 2.into()), Rational::new(3.into(), 2.into()))
}

/// `ϑ³ + 3√−3·ϑ² − ρ⁻¹τ³ − ((−9 + 3√−3)/2)·τ²`
fn simplified_relation() -> Bivariate {
    let theta_part = Poly::new(vec![k(0), k(0), &k(3) * &s(), k(1)]);
    Poly::new(vec![
        theta_part,
        Poly::zero(),
        Poly::constant(half_coefficient().neg_ref()),
        Poly::constant(K::rho_inv().neg_ref()),
    ])
}

/// Substitutes `ϑ = u·τ`; the result has outer variable τ and inner u.
fn substitute_slope(p: &Bivariate) -> Bivariate {
    let deg = p.coeffs().iter().enumerate().map(|(j, c)| j + c.coeffs().len()).max().unwrap_or(0);
    let mut out = vec![Poly::<K>::zero(); deg + 1];
    for (j, c) in p.coeffs().iter().enumerate() {
        for (i, a) in c.coeffs().iter().enumerate() {
            out[i + j] = &out[i + j] + &Poly::monomial(a.clone(), i);
        }
    }
    Poly::new(out)
}

fn check_relation_simplifies() -> Vec<Check> {
    let target = simplified_relation();
    let good = twisted_relation(&K::rho_inv());
    let bad = twisted_relation(&K::rho());
    vec![
        Check::new(
            "(a) relation in theta, tau",
            good == target,
            "rho*(rho^-1 F(theta+s) - rho F(tau-s)) = theta^3 + 3s theta^2 - rho^-1 tau^3 - ((-9+3s)/2) tau^2",
        ),
        Check::new(
            "(a) negative control",
            bad != target,
            "the same reduction with rho in place of rho^-1 does not give the relation",
        ),
    ]
}

fn check_slope_substitution(tower: &ParamTower) -> Check {
    let r = substitute_slope(&simplified_relation());
    let low_vanish = r.coeff(0).is_zero() && r.coeff(1).is_zero() && r.degree() == Some(3);
    let a = r.coeff(3);
    let b = r.coeff(2);
    let solved = (!a.is_zero()).then(|| {
        let tau = &(-&KFn::from_poly(b)) / &KFn::from_poly(a);
        &(&KFn::x() * &tau) + &KFn::constant(s())
    });
    let ok = low_vanish && solved.as_ref() == Some(&tower.w_of_u);
    Check::new(
        "(b) slope substitution gives w(u)",
        ok,
        match solved {
            Some(w) => format!("w = u tau + s = {w}"),
            None => "relation is degenerate in tau".into(),
        },
    )
}

fn check_t_of_u(tower: &ParamTower) -> Check {
    let w = &tower.w_of_u;
    let cubic = &(&w.pow(3) + &(w * &KFn::constant(k(9)))) - &KFn::constant(k(6));
    let direct = &cubic * &KFn::constant(K::rho_inv());
    Check::new(
        "(c) t(u) = rho^-1 (w(u)^3 + 9 w(u) - 6)",
        direct == tower.t_of_u,
        format!("degree {}", direct.degree()),
    )
}

fn check_sigma_twist(tower: &ParamTower) -> Check {
    let u = &tower.u_of_y;
    let product = &u.map(K::conj) * u;
    Check::new("(d) sigma(u) u = 1", product == KFn::constant(k(1)), format!("sigma(u) * u = {product}"))
}

fn check_values_over_i3() -> Vec<Check> {
    let t = t_of_w_poly();
    let twelve_rho = &k(12) * &K::rho();
    let at_1 = t.eval(&(&k(2) * &s()));
    let at_2 = t.eval(&s().neg_ref());
    let shifted = &Poly::new(vec![k(-6), k(9), k(0), k(1)]) - &Poly::constant(&k(12) * &K::rho().pow(2));
    let square = Poly::new(vec![s(), k(1)]).pow(2);
    // t = λ(η³ − η² + C) with λ = 81(ρ − 1), C = −4(ρ − 1)/81, and w = 3√−3·η − √−3
    let rho_m1 = &K::rho() - &k(1);
    let lambda = &k(81) * &rho_m1;
    let c = (&k(-4) * &rho_m1).div_ref(&k(81));
    let (d, e) = (k(-1).div_ref(&k(3)), k(2).div_ref(&k(3)));
    let system = [
        &lambda * &(&(&k(-1) + &(&k(2) * &e)) + &d),
        &lambda * &(&(&e * &e) + &(&(&k(2) * &d) * &e)),
        &(&(&lambda * &c) - &k(12)) + &(&(&lambda * &d) * &(&e * &e)),
    ];
    let eta_of_w = Poly::new(vec![k(1).div_ref(&k(3)), k(1).div_ref(&(&k(3) * &s()))]);
    let eta_form = Poly::new(vec![c.clone(), k(0), k(-1), k(1)]).scale(&lambda);
    vec![
        Check::new(
            "(e) t(2s) = 12 rho",
            at_1 == twelve_rho,
            format!("t(2s) = {at_1}, 12 rho = {twelve_rho}"),
        ),
        Check::new("(e) t(-s) = 12 rho", at_2 == twelve_rho, format!("t(-s) = {at_2}")),
        Check::new(
            "(e) double zero at w = -s",
            square.divides(&shifted),
            "(w + s)^2 divides w^3 + 9w - 6 - 12 rho^2",
        ),
        Check::new(
            "(e) branching system at i3",
            system.iter().all(Ring::is_zero) && &lambda * &c == twelve_rho,
            "lambda = 81(rho-1), C = -4(rho-1)/81, D = -1/3, E = 2/3",
        ),
        Check::new(
            "(e) eta form",
            eta_form.compose(&eta_of_w) == t,
            "81(rho-1)(eta^3 - eta^2 - 4(rho-1)/81) with w = 3s eta - s",
        ),
    ]
}

fn check_fiber_over_i() -> Check {
    let f = Poly::new(vec![k(-1728), k(0), k(0), k(1)]);
    let roots = [k(12), &k(12) * &K::rho(), &k(12) * &K::rho_inv()];
    let vanish = roots.iter().all(|r| f.eval(r).is_zero());
    let distinct = roots[0] != roots[1] && roots[1] != roots[2] && roots[0] != roots[2];
    Check::new(
        "(f) roots of T^3 - 1728",
        vanish && distinct,
        format!("{}, {}, {}", roots[0], roots[1], roots[2]),
    )
}

/// The symbolic identities that build the tower, each as a named check.
pub fn verify_section4() -> Result<CheckReport> {
    let tower = build_tower()?;
    let mut report = CheckReport::new("uniformizer tower");
    report.checks.extend(check_relation_simplifies());
    report.push(check_slope_substitution(&tower));
    report.push(check_t_of_u(&tower));
    report.push(check_sigma_twist(&tower));
    report.checks.extend(check_values_over_i3());
    report.push(check_fiber_over_i());
    report.push(Check::new(
        "t(y) descends to Q",
        tower.t_of_y == t_formula(),
        format!("t(y) = {}", tower.t_of_y),
    ));
    report.push(Check::new(
        "j = t^3",
        tower.j_of_y == tower.t_of_y.pow(3) && tower.j_of_y.degree() == 27,
        format!("deg j = {}", tower.j_of_y.degree()),
    ));
    Ok(report)
}

fn profile_json(p: &std::collections::BTreeMap<usize, usize>) -> serde_json::Value {
    json!(p.iter().map(|(m, c)| [m, c]).collect::<Vec<_>>())
}

/// Multiplicity profile of an absolute fiber of X_ns⁺(9) → X_ns⁺(3) as
/// `relative index -> count`.
fn absolute_profiles(base: BasePoint) -> Result<Vec<std::collections::BTreeMap<usize, usize>>> {
    let groups = LevelNineGroups::build()?;
    let fibers = relative_fibers(&groups.c9, &groups.c3_preimage, base)?;
    Ok(fibers
        .iter()
        .map(|f| {
            let mut m = std::collections::BTreeMap::new();
            for &e in &f.indices {
                *m.entry(e).or_insert(0) += 1;
            }
            m
        })
        .collect())
}

/// Root multiplicities of `t(y)` compared with the branching of
/// X_ns⁺(9) → X_ns⁺(3) computed from the groups.
pub fn fiber_checks(tower: &ParamTower) -> Result<CheckReport> {
    let mut report = CheckReport::new("fibers of t(y)");
    let cusp_profile = squarefree_profile(&cusp_cubic())?;
    let cusp_fibers = absolute_profiles(BasePoint::Cusp)?;
    let cube_profile: std::collections::BTreeMap<usize, usize> =
        cusp_profile.iter().map(|(&m, &c)| (3 * m, c)).collect();
    report.push(
        Check::new(
            "(a) poles: y^3 - 3y + 1 squarefree",
            cusp_profile == [(1, 3)].into_iter().collect()
                && tower.t_of_y.den() == &cusp_cubic().pow(3)
                && cusp_fibers == vec![cube_profile.clone()],
            format!("profile {cusp_profile:?}; denominator profile {cube_profile:?}"),
        )
        .with_witness(profile_json(&cusp_profile)),
    );

    let factors = [rho_factor_1(), rho_factor_2(), rho_factor_3()];
    let squarefree = factors
        .iter()
        .all(|f| squarefree_profile(f).map(|p| p == [(1, 3)].into_iter().collect()).unwrap_or(false));
    let coprime = (0..3).all(|a| (a + 1..3).all(|b| factors[a].gcd(&factors[b]).degree() == Some(0)));
    let zero_profile = squarefree_profile(tower.t_of_y.num())?;
    let rho_fibers = absolute_profiles(BasePoint::Rho)?;
    report.push(
        Check::new(
            "(b) zeros: nine simple zeros",
            squarefree
                && coprime
                && zero_profile == [(1, 9)].into_iter().collect()
                && rho_fibers == vec![zero_profile.clone()],
            format!("cubics squarefree: {squarefree}, pairwise coprime: {coprime}, profile {zero_profile:?}"),
        )
        .with_witness(profile_json(&zero_profile)),
    );

    let shifted = (&tower.t_of_y - &QFn::constant(int(12))).num().clone();
    let i_profile = squarefree_profile(&shifted)?;
    let i_fibers = absolute_profiles(BasePoint::I)?;
    let expected: std::collections::BTreeMap<usize, usize> = [(1, 1), (2, 4)].into_iter().collect();
    report.push(
        Check::new(
            "(c) t - 12: one simple and four double zeros",
            i_profile == expected && i_fibers.contains(&i_profile),
            format!("profile {i_profile:?}; fibers over i from the groups {i_fibers:?}"),
        )
        .with_witness(profile_json(&i_profile)),
    );

    let degrees = (tower.t_of_y.degree(), tower.j_of_y.degree());
    report.push(Check::new(
        "(d) degrees of t and j",
        degrees == (9, 27),
        format!("deg t = {}, deg j = {}", degrees.0, degrees.1),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use proptest::prelude::*;

    fn tower() -> ParamTower {
        build_tower().unwrap()
    }

    fn fin(x: Rational) -> Extended<Rational> {
        Extended::Finite(x)
    }

    #[test]
    fn tower_builds_with_expected_degrees() {
        let t = tower();
        assert_eq!(t.t_of_w.degree(), 3);
        assert_eq!(t.w_of_u.degree(), 3);
        assert_eq!(t.t_of_u.degree(), 9);
        assert_eq!(t.u_of_y.degree(), 1);
        assert_eq!(t.t_of_y.degree(), 9);
        assert_eq!(t.j_of_y.degree(), 27);
    }

    #[test]
    fn special_values() {
        let t = tower();
        assert_eq!(t.eval(&fin(int(0))).0, fin(int(-96)));
        assert_eq!(t.eval(&fin(int(0))).1, fin(int(-884736)));
        assert_eq!(t.eval(&Extended::Infinity).0, fin(int(-15)));
        assert_eq!(t.eval(&fin(int(-1))), (fin(int(12)), fin(int(1728))));
    }

    #[test]
    fn t_at_zero_from_the_factors() {
        // −3 · 4 · 4 · 2 / 1³
        assert_eq!(t_formula().eval(&int(0)), fin(int(-3 * 4 * 4 * 2)));
        assert_eq!(int(-96).pow(3), -(int(2).pow(15) * int(27)));
    }

    #[test]
    fn cusps_are_poles() {
        let t = tower();
        for y in [-3, -2, -1, 0, 1, 2, 3] {
            assert_ne!(cusp_cubic().eval(&int(y)), int(0));
        }
        assert_eq!(t.t_of_y.den(), &cusp_cubic().pow(3));
        assert_eq!(squarefree_profile(&cusp_cubic()).unwrap().get(&1), Some(&3));
    }

    #[test]
    fn section4_checks_pass() {
        let report = verify_section4().unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.checks.len() >= 10);
    }

    #[test]
    fn negative_control_fails() {
        assert_ne!(twisted_relation(&K::rho()), simplified_relation());
        assert_eq!(twisted_relation(&K::rho_inv()), simplified_relation());
    }

    #[test]
    fn twelve_rho_value() {
        let v = t_of_w_poly().eval(&(&k(2) * &s()));
        assert_eq!(v, K::new(int(-6), int(6)));
    }

    #[test]
    fn sigma_twist_by_direct_expansion() {
        // (y + ρ)(y + ρ̄) = y² − y + 1 = (ρy + 1)(ρ̄y + 1)
        let r = K::rho();
        let rb = r.conj();
        let lhs = &Poly::new(vec![r.clone(), k(1)]) * &Poly::new(vec![rb.clone(), k(1)]);
        let rhs = &Poly::new(vec![k(1), r]) * &Poly::new(vec![k(1), rb]);
        assert_eq!(lhs, Poly::new(vec![k(1), k(-1), k(1)]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fiber_checks_pass() {
        let report = fiber_checks(&tower()).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn t_minus_twelve_profile() {
        let shifted = (&tower().t_of_y - &QFn::constant(int(12))).num().clone();
        let p = squarefree_profile(&shifted).unwrap();
        assert_eq!(p, [(1, 1), (2, 4)].into_iter().collect());
    }

    #[test]
    fn pair_formula_matches_at_infinity_and_zero() {
        assert_eq!(t_from_pair(&1.into(), &0.into()), fin(int(-15)));
        assert_eq!(t_from_pair(&0.into(), &1.into()), fin(int(-96)));
        assert_eq!(t_from_pair(&(-1).into(), &1.into()), fin(int(12)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn layered_evaluation_agrees(num in -1000i64..1000, den in 1i64..1000) {
            let t = tower();
            let y = fin(rat(num, den));
            let direct = t.eval(&y).0;
            let layered = t.eval_layered(&y);
            let direct_k = match direct {
                Extended::Finite(v) => Extended::Finite(K::from(v)),
                Extended::Infinity => Extended::Infinity,
            };
            prop_assert_eq!(layered, direct_k);
        }

        #[test]
        fn homogenized_formula_agrees(m in -10_000i64..10_000, n in -10_000i64..10_000) {
            prop_assume!(crate::exactalg::gcd_i64(m, n) == 1);
            let y = if n == 0 { Extended::Infinity } else { fin(rat(m, n)) };
            prop_assert_eq!(tower().eval(&y).0, t_from_pair(&m.into(), &n.into()));
        }
    }
}
