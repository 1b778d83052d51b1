//! Cusps, elliptic points, ramification and genus of modular curves attached to
//! subgroups of SL₂(Z/nZ) containing −I.
//!
//! For a congruence subgroup Γ_H of level n, membership of an integral matrix
//! depends only on its reduction mod n, and reduction SL₂(Z) → SL₂(Z/nZ) is
//! onto. The right cosets Γ_H\SL₂(Z) are therefore in bijection with H\SL₂(Z/nZ),
//! compatibly with right multiplication. The points of X_H above a point of
//! X(1) with stabilizer ⟨g⟩ are the orbits of ⟨g⟩ on these cosets, and the
//! ramification index of such a point is the orbit size measured in
//! PSL₂ (−I acts trivially because it lies in H). All stabilizer indices
//! [Γ′_z : Γ_w] are thus orbit-size ratios in a finite permutation action.

use std::collections::HashMap;

use serde::Serialize;
use serde_json::json;

use crate::cartan::{sl2, GroupTable, LevelNineGroups, Mat2};
use crate::report::{Check, CheckReport};
use crate::{Error, Result};

/// Right cosets `H·x` of a subgroup of SL₂(Z/nZ).
#[derive(Clone, Debug)]
pub struct CosetSpace {
    /// Smallest element of each coset.
    reps: Vec<Mat2>,
    lookup: HashMap<Mat2, usize>,
}

impl CosetSpace {
    pub fn new(sub: &GroupTable) -> Result<Self> {
        let ambient = sl2(sub.modulus());
        if !sub.is_subgroup_of(&ambient) {
            return Err(Error::NotASubgroup);
        }
        let mut elements = ambient.elements().to_vec();
        elements.sort();
        let mut reps = Vec::new();
        let mut lookup = HashMap::with_capacity(elements.len());
        for x in elements {
            if lookup.contains_key(&x) {
                continue;
            }
            let idx = reps.len();
            reps.push(x);
            for h in sub.elements() {
                lookup.insert(h.mul(&x), idx);
            }
        }
        debug_assert_eq!(reps.len() * sub.order(), ambient.order());
        Ok(CosetSpace { reps, lookup })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn representatives(&self) -> &[Mat2] {
        &self.reps
    }

    pub fn index_of(&self, x: &Mat2) -> usize {
        self.lookup[x]
    }

    /// `H·x ↦ H·x·g`.
    pub fn act(&self, coset: usize, g: &Mat2) -> usize {
        self.lookup[&self.reps[coset].mul(g)]
    }

    /// Orbits of `⟨g⟩`, each sorted, ordered by smallest coset index.
    pub fn orbits(&self, g: &Mat2) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut cur = self.act(start, g);
            while cur != start {
                seen[cur] = true;
                orbit.push(cur);
                cur = self.act(cur, g);
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }
}

/// The three branch points of X(1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasePoint {
    Cusp,
    I,
    Rho,
}

impl BasePoint {
    pub const ALL: [BasePoint; 3] = [BasePoint::Cusp, BasePoint::I, BasePoint::Rho];

    /// Generator of the stabilizer in SL₂(Z), reduced mod n.
    pub fn generator(self, n: u32) -> Mat2 {
        match self {
            BasePoint::Cusp => Mat2::t(n),
            BasePoint::I => Mat2::s(n),
            BasePoint::Rho => Mat2::st(n),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BasePoint::Cusp => "cusp",
            BasePoint::I => "i",
            BasePoint::Rho => "rho",
        }
    }
}

/// Branching of X_H → X(1).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RamificationProfile {
    pub degree: usize,
    /// Widths of the cusps, largest first.
    pub cusp_widths: Vec<usize>,
    /// Ramification indices of the points above i, largest first.
    pub i_indices: Vec<usize>,
    /// Ramification indices of the points above ρ, largest first.
    pub rho_indices: Vec<usize>,
    /// Elliptic points of order 2 (unramified points above i).
    pub e2: usize,
    /// Elliptic points of order 3 (unramified points above ρ).
    pub e3: usize,
    pub genus: u32,
}

impl RamificationProfile {
    pub fn cusps(&self) -> usize {
        self.cusp_widths.len()
    }

    /// `(2g − 2, −2·deg + Σ(e − 1))` over all points above ∞, i, ρ.
    pub fn riemann_hurwitz(&self) -> (i64, i64) {
        let defect: usize = [&self.cusp_widths, &self.i_indices, &self.rho_indices]
            .iter()
            .flat_map(|v| v.iter())
            .map(|e| e - 1)
            .sum();
        (2 * self.genus as i64 - 2, -2 * self.degree as i64 + defect as i64)
    }
}

fn contains_minus_identity(g: &GroupTable) -> bool {
    g.contains(&Mat2::minus_identity(g.modulus()))
}

/// Size of an orbit as a ramification index, i.e. measured in PSL₂. With −I in
/// the subgroup the orbit size already is the projective one.
fn orbit_sizes(space: &CosetSpace, g: &Mat2) -> Vec<usize> {
    let mut sizes: Vec<usize> = space.orbits(g).iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

pub fn curve_profile(sub: &GroupTable) -> Result<RamificationProfile> {
    if !contains_minus_identity(sub) {
        return Err(Error::MissingMinusIdentity);
    }
    let n = sub.modulus();
    let space = CosetSpace::new(sub)?;
    let degree = space.len();
    let cusp_widths = orbit_sizes(&space, &BasePoint::Cusp.generator(n));
    let i_indices = orbit_sizes(&space, &BasePoint::I.generator(n));
    let rho_indices = orbit_sizes(&space, &BasePoint::Rho.generator(n));
    let e2 = i_indices.iter().filter(|&&e| e == 1).count();
    let e3 = rho_indices.iter().filter(|&&e| e == 1).count();
    // 12g = 12 + d − 3·e2 − 4·e3 − 6·c
    let twelve_g = 12 + degree as i64 - 3 * e2 as i64 - 4 * e3 as i64 - 6 * cusp_widths.len() as i64;
    if twelve_g < 0 || twelve_g % 12 != 0 {
        return Err(Error::BadGenus(twelve_g));
    }
    Ok(RamificationProfile {
        degree,
        cusp_widths,
        i_indices,
        rho_indices,
        e2,
        e3,
        genus: (twelve_g / 12) as u32,
    })
}

/// One point of the lower curve above a base point, with the relative
/// ramification indices of the upper-curve points above it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Fiber {
    /// Ramification index of the lower point over X(1).
    pub outer_index: usize,
    /// Relative indices, largest first.
    pub indices: Vec<usize>,
}

/// Fibers of X_inner → X_outer above every point of X_outer lying over `base`.
///
/// Each outer point is an orbit O of the base stabilizer on outer cosets; the
/// inner orbits projecting into O lie above it, with relative index
/// `|inner orbit| / |O|`. Fibers are sorted, so the result is a canonical
/// multiset of multisets.
pub fn relative_fibers(inner: &GroupTable, outer: &GroupTable, base: BasePoint) -> Result<Vec<Fiber>> {
    if inner.modulus() != outer.modulus() || !inner.is_subgroup_of(outer) {
        return Err(Error::NotASubgroup);
    }
    if !contains_minus_identity(inner) {
        return Err(Error::MissingMinusIdentity);
    }
    let g = base.generator(inner.modulus());
    let inner_space = CosetSpace::new(inner)?;
    let outer_space = CosetSpace::new(outer)?;
    let outer_orbits = outer_space.orbits(&g);
    let mut orbit_of = vec![0; outer_space.len()];
    for (k, orbit) in outer_orbits.iter().enumerate() {
        for &c in orbit {
            orbit_of[c] = k;
        }
    }
    let mut fibers: Vec<Fiber> =
        outer_orbits.iter().map(|o| Fiber { outer_index: o.len(), indices: Vec::new() }).collect();
    for orbit in inner_space.orbits(&g) {
        // Inner·x ⊂ Outer·x
        let projected = outer_space.index_of(&inner_space.representatives()[orbit[0]]);
        let k = orbit_of[projected];
        let outer_size = outer_orbits[k].len();
        debug_assert_eq!(orbit.len() % outer_size, 0);
        fibers[k].indices.push(orbit.len() / outer_size);
    }
    for f in &mut fibers {
        f.indices.sort_unstable_by(|a, b| b.cmp(a));
    }
    fibers.sort();
    Ok(fibers)
}

/// `(2g_in − 2, k·(2g_out − 2) + Σ(e − 1))` for the relative covering of degree k.
pub fn relative_riemann_hurwitz(inner: &GroupTable, outer: &GroupTable) -> Result<(i64, i64)> {
    let gi = curve_profile(inner)?.genus as i64;
    let go = curve_profile(outer)?.genus as i64;
    let k = (outer.order() / inner.order()) as i64;
    let mut defect = 0i64;
    for base in BasePoint::ALL {
        for fiber in relative_fibers(inner, outer, base)? {
            defect += fiber.indices.iter().map(|&e| e as i64 - 1).sum::<i64>();
        }
    }
    Ok((2 * gi - 2, k * (2 * go - 2) + defect))
}

/// Fibers of one covering map above one base point.
#[derive(Clone, Debug, Serialize)]
pub struct CoveringFibers {
    pub covering: &'static str,
    pub source: &'static str,
    pub target: &'static str,
    pub base: BasePoint,
    pub fibers: Vec<Fiber>,
}

/// The branching figure: the three coverings π₁: X_ns⁺(9) → X_B,
/// π₂: X_B → X_ns⁺(3), π₃: X_ns⁺(3) → X(1) over ∞, i and ρ, plus the absolute
/// profile of each curve.
#[derive(Clone, Debug, Serialize)]
pub struct BranchingFigure {
    pub coverings: Vec<CoveringFibers>,
    pub curves: Vec<(&'static str, RamificationProfile)>,
}

pub fn branching_figure(groups: &LevelNineGroups) -> Result<BranchingFigure> {
    let steps: [(&str, &str, &str, &GroupTable, &GroupTable); 3] = [
        ("pi1", "X_ns+(9)", "X_B", &groups.c9, &groups.b),
        ("pi2", "X_B", "X_ns+(3)", &groups.b, &groups.c3_preimage),
        ("pi3", "X_ns+(3)", "X(1)", &groups.c3, &groups.sl2_3),
    ];
    let mut coverings = Vec::new();
    for (covering, source, target, inner, outer) in steps {
        for base in BasePoint::ALL {
            coverings.push(CoveringFibers {
                covering,
                source,
                target,
                base,
                fibers: relative_fibers(inner, outer, base)?,
            });
        }
    }
    let curves = vec![
        ("X_ns+(3)", curve_profile(&groups.c3)?),
        ("X_B", curve_profile(&groups.b)?),
        ("X_ns+(9)", curve_profile(&groups.c9)?),
    ];
    Ok(BranchingFigure { coverings, curves })
}

impl BranchingFigure {
    pub fn fibers(&self, covering: &str, base: BasePoint) -> &[Fiber] {
        self.coverings
            .iter()
            .find(|c| c.covering == covering && c.base == base)
            .map(|c| c.fibers.as_slice())
            .unwrap_or(&[])
    }

    pub fn curve(&self, name: &str) -> Option<&RamificationProfile> {
        self.curves.iter().find(|(n, _)| *n == name).map(|(_, p)| p)
    }
}

/// Multiset of fibers as sorted lists of sorted index lists.
pub fn fiber_multiset(fibers: &[Fiber]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = fibers.iter().map(|f| f.indices.clone()).collect();
    out.sort();
    out
}

fn multiset(lists: &[&[usize]]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = lists
        .iter()
        .map(|l| {
            let mut v = l.to_vec();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        })
        .collect();
    out.sort();
    out
}

fn expect_fibers(name: &str, got: &[Fiber], expected: Vec<Vec<usize>>) -> Check {
    let actual = fiber_multiset(got);
    Check::new(name, actual == expected, format!("fibers {actual:?}, expected {expected:?}"))
        .with_witness(json!(actual))
}

/// Reconstructs the branching figure and checks it against the stated data:
/// cusp widths, elliptic points, genus, the relative fibers over i and ρ, the
/// membership facts used for them, and Riemann–Hurwitz for every curve and
/// covering.
pub fn verify_covering() -> Result<(CheckReport, BranchingFigure)> {
    let groups = LevelNineGroups::build()?;
    let figure = branching_figure(&groups)?;
    let mut report = CheckReport::new("coverings X_ns+(9) -> X_B -> X_ns+(3) -> X(1)");

    let expected: [(&str, usize, &[usize], usize, usize); 3] =
        [("X_ns+(3)", 3, &[3], 3, 0), ("X_B", 9, &[9], 5, 0), ("X_ns+(9)", 27, &[9, 9, 9], 7, 0)];
    for (name, degree, widths, e2, e3) in expected {
        let p = figure.curve(name).expect("curve is in the figure");
        let ok = p.degree == degree && p.cusp_widths == widths && p.e2 == e2 && p.e3 == e3 && p.genus == 0;
        report.push(
            Check::new(
                format!("profile {name}"),
                ok,
                format!(
                    "degree {}, cusp widths {:?}, e2 = {}, e3 = {}, genus {}",
                    p.degree, p.cusp_widths, p.e2, p.e3, p.genus
                ),
            )
            .with_witness(serde_json::to_value(p).expect("profile serializes")),
        );
        let (lhs, rhs) = p.riemann_hurwitz();
        report.push(Check::new(
            format!("riemann-hurwitz {name}"),
            lhs == rhs,
            format!("2g - 2 = {lhs}, -2d + sum(e - 1) = {rhs}"),
        ));
    }

    // over ∞: every covering is totally ramified at the single cusp of X_ns+(3)
    // and X_B, and unramified from X_B up
    report.push(expect_fibers("pi3 over cusp", figure.fibers("pi3", BasePoint::Cusp), multiset(&[&[3]])));
    report.push(expect_fibers("pi2 over cusp", figure.fibers("pi2", BasePoint::Cusp), multiset(&[&[3]])));
    report.push(expect_fibers(
        "pi1 over cusp",
        figure.fibers("pi1", BasePoint::Cusp),
        multiset(&[&[1, 1, 1]]),
    ));

    // over ρ: totally ramified at the bottom, unramified above
    report.push(expect_fibers("pi3 over rho", figure.fibers("pi3", BasePoint::Rho), multiset(&[&[3]])));
    report.push(expect_fibers("pi2 over rho", figure.fibers("pi2", BasePoint::Rho), multiset(&[&[1, 1, 1]])));
    report.push(expect_fibers(
        "pi1 over rho",
        figure.fibers("pi1", BasePoint::Rho),
        multiset(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]),
    ));

    // over i
    report.push(expect_fibers("pi3 over i", figure.fibers("pi3", BasePoint::I), multiset(&[&[1, 1, 1]])));
    report.push(expect_fibers(
        "pi2 over i",
        figure.fibers("pi2", BasePoint::I),
        multiset(&[&[1, 2], &[1, 1, 1], &[2, 1]]),
    ));
    let pi1_i = figure.fibers("pi1", BasePoint::I);
    let unramified: Vec<Fiber> = pi1_i.iter().filter(|f| f.outer_index == 1).cloned().collect();
    let ramified: Vec<Fiber> = pi1_i.iter().filter(|f| f.outer_index == 2).cloned().collect();
    report.push(expect_fibers(
        "pi1 over unramified points above i",
        &unramified,
        multiset(&[&[1, 2], &[1, 2], &[1, 2], &[1, 2], &[1, 1, 1]]),
    ));
    report.push(expect_fibers(
        "pi1 over ramified points above i",
        &ramified,
        multiset(&[&[1, 1, 1], &[1, 1, 1]]),
    ));

    // membership facts behind the fibers
    let members = [
        ("(0,-1;1,0) in C(9)", groups.c9.contains(&Mat2::new(9, 0, -1, 1, 0)), true),
        ("(0,-1;1,0) in B", groups.b.contains(&Mat2::new(9, 0, -1, 1, 0)), true),
        ("(3,-1;1,-3) in B", groups.b.contains(&Mat2::new(9, 3, -1, 1, -3)), false),
        ("(-3,-4;-2,3) in C(9)", groups.c9.contains(&Mat2::new(9, -3, -4, -2, 3)), false),
    ];
    for (name, got, want) in members {
        report.push(Check::new(
            format!("membership {name}"),
            got == want,
            format!("{got} (expected {want})"),
        ));
    }
    let conj = |a: Mat2, b: Mat2, c: Mat2| a.mul(&b).mul(&c);
    let products = [
        (
            "T^3 S T^-3",
            conj(Mat2::new(9, 1, 3, 0, 1), Mat2::s(9), Mat2::new(9, 1, -3, 0, 1)),
            Mat2::new(9, 3, -1, 1, -3),
        ),
        (
            "coset conjugate of S in B",
            conj(Mat2::new(9, -2, 3, 3, 4), Mat2::s(9), Mat2::new(9, 4, -3, -3, -2)),
            Mat2::new(9, -3, -4, -2, 3),
        ),
    ];
    for (name, got, want) in products {
        report.push(Check::new(format!("product {name}"), got == want, format!("{got}")));
    }

    // degree bookkeeping and relative Riemann–Hurwitz
    let degrees: Vec<usize> = ["pi1", "pi2", "pi3"]
        .iter()
        .map(|c| {
            figure
                .fibers(c, BasePoint::Cusp)
                .iter()
                .map(|f| f.indices.iter().sum::<usize>())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let total: usize = degrees.iter().product();
    report.push(Check::new(
        "degree chain",
        degrees == [3, 3, 3] && total == 27,
        format!("covering degrees {degrees:?}, product {total}"),
    ));
    for (name, inner, outer) in [
        ("pi1", &groups.c9, &groups.b),
        ("pi2", &groups.b, &groups.c3_preimage),
        ("pi3", &groups.c3, &groups.sl2_3),
    ] {
        let (lhs, rhs) = relative_riemann_hurwitz(inner, outer)?;
        report.push(Check::new(
            format!("relative riemann-hurwitz {name}"),
            lhs == rhs,
            format!("2g - 2 = {lhs}, k(2g' - 2) + sum(e - 1) = {rhs}"),
        ));
    }
    Ok((report, figure))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::closure;

    fn groups() -> LevelNineGroups {
        LevelNineGroups::build().unwrap()
    }

    #[test]
    fn coset_space_sizes() {
        let g = groups();
        assert_eq!(CosetSpace::new(&g.c9).unwrap().len(), 27);
        assert_eq!(CosetSpace::new(&g.b).unwrap().len(), 9);
        assert_eq!(CosetSpace::new(&g.c3).unwrap().len(), 3);
    }

    #[test]
    fn right_multiplication_permutes_cosets() {
        let g = groups();
        let space = CosetSpace::new(&g.b).unwrap();
        for x in [Mat2::t(9), Mat2::s(9), Mat2::new(9, 2, 5, 1, 3)] {
            let mut images: Vec<usize> = (0..space.len()).map(|c| space.act(c, &x)).collect();
            images.sort_unstable();
            assert_eq!(images, (0..space.len()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn profile_of_c9() {
        let p = curve_profile(&groups().c9).unwrap();
        assert_eq!(p.degree, 27);
        assert_eq!(p.cusp_widths, vec![9, 9, 9]);
        assert_eq!(p.e3, 0);
        assert_eq!(p.e2, 7);
        assert_eq!(p.genus, 0);
    }

    #[test]
    fn e2_of_c9_is_forced_by_the_genus_formula() {
        // 12g = 12 + d − 3e2 − 4e3 − 6c with g = 0, d = 27, e3 = 0, c = 3
        let e2 = (12 + 27 - 6 * 3) / 3;
        assert_eq!(e2, 7);
        assert_eq!(curve_profile(&groups().c9).unwrap().e2, e2);
    }

    #[test]
    fn profile_of_c3() {
        let p = curve_profile(&groups().c3).unwrap();
        assert_eq!((p.degree, p.cusp_widths.clone(), p.e2, p.e3, p.genus), (3, vec![3], 3, 0, 0));
    }

    #[test]
    fn profile_of_b() {
        let p = curve_profile(&groups().b).unwrap();
        assert_eq!((p.degree, p.cusp_widths.clone(), p.e2, p.e3, p.genus), (9, vec![9], 5, 0, 0));
    }

    #[test]
    fn profile_of_the_full_group_is_x1() {
        let p = curve_profile(&sl2(9)).unwrap();
        assert_eq!((p.degree, p.cusp_widths.clone(), p.e2, p.e3, p.genus), (1, vec![1], 1, 1, 0));
    }

    #[test]
    fn groups_without_minus_identity_are_rejected() {
        let n_prime = closure(&[Mat2::new(9, 1, -3, 3, 1)]).unwrap();
        assert_eq!(curve_profile(&n_prime).unwrap_err(), Error::MissingMinusIdentity);
    }

    #[test]
    fn pi2_fibers_over_i() {
        let g = groups();
        let fibers = relative_fibers(&g.b, &g.c3_preimage, BasePoint::I).unwrap();
        assert_eq!(fiber_multiset(&fibers), vec![vec![1, 1, 1], vec![2, 1], vec![2, 1]]);
    }

    #[test]
    fn pi1_fibers_over_rho() {
        let g = groups();
        let fibers = relative_fibers(&g.c9, &g.b, BasePoint::Rho).unwrap();
        assert_eq!(fiber_multiset(&fibers), vec![vec![1, 1, 1]; 3]);
    }

    #[test]
    fn identity_covering_has_trivial_fibers() {
        let g = groups();
        for base in BasePoint::ALL {
            for f in relative_fibers(&g.b, &g.b, base).unwrap() {
                assert_eq!(f.indices, vec![1]);
            }
        }
    }

    #[test]
    fn non_inclusion_is_rejected() {
        let g = groups();
        assert_eq!(relative_fibers(&g.b, &g.c9, BasePoint::I).unwrap_err(), Error::NotASubgroup);
    }

    #[test]
    fn degree_bookkeeping_over_every_base_point() {
        let g = groups();
        for (inner, outer) in [(&g.c9, &g.b), (&g.b, &g.c3_preimage), (&g.c3, &g.sl2_3)] {
            let k = outer.order() / inner.order();
            for base in BasePoint::ALL {
                for f in relative_fibers(inner, outer, base).unwrap() {
                    assert_eq!(f.indices.iter().sum::<usize>(), k);
                }
            }
        }
    }

    #[test]
    fn riemann_hurwitz_balances_for_every_curve() {
        let g = groups();
        for sub in [&g.c3, &g.b, &g.c9, &g.c3_preimage, &g.sl2_9] {
            let (lhs, rhs) = curve_profile(sub).unwrap().riemann_hurwitz();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn the_whole_figure_verifies() {
        let (report, figure) = verify_covering().unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(figure.coverings.len(), 9);
    }
}
