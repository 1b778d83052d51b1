//! Matrix groups over Z/3Z and Z/9Z.
//!
//! The non-split Cartan subgroup of level n is the image of the unit group of
//! A = (Z/nZ)[i] acting on itself by multiplication in the basis {1, i}; for
//! n = 3, 9 the polynomial x² + 1 is irreducible mod 3, so A is non-split.
//! Its normalizer adds the matrix of i ↦ −i. The groups N, N′, N″, H, B of the
//! level-9 construction are built from explicit generators and checked against
//! each other.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde_json::json;

use crate::report::{Check, CheckReport};
use crate::{Error, Result};

/// A 2×2 matrix `(a, b; c, d)` over Z/nZ with entries in `[0, n)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mat2 {
    pub n: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

fn reduce(x: i64, n: u32) -> u32 {
    x.rem_euclid(n as i64) as u32
}

impl Mat2 {
    /// Reduces signed entries into `[0, n)`.
    pub fn new(n: u32, a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2 { n, a: reduce(a, n), b: reduce(b, n), c: reduce(c, n), d: reduce(d, n) }
    }

    pub fn identity(n: u32) -> Self {
        Mat2::new(n, 1, 0, 0, 1)
    }

    pub fn minus_identity(n: u32) -> Self {
        Mat2::new(n, -1, 0, 0, -1)
    }

    /// T = (1, 1; 0, 1), generator of the stabilizer of ∞.
    pub fn t(n: u32) -> Self {
        Mat2::new(n, 1, 1, 0, 1)
    }

    /// S = (0, −1; 1, 0), stabilizer of i.
    pub fn s(n: u32) -> Self {
        Mat2::new(n, 0, -1, 1, 0)
    }

    /// ST = (0, −1; 1, 1), stabilizer of ρ; order 6.
    pub fn st(n: u32) -> Self {
        Mat2::s(n).mul(&Mat2::t(n))
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        debug_assert_eq!(self.n, o.n);
        let n = self.n as u64;
        let (a, b, c, d) = (self.a as u64, self.b as u64, self.c as u64, self.d as u64);
        let (e, f, g, h) = (o.a as u64, o.b as u64, o.c as u64, o.d as u64);
        Mat2 {
            n: self.n,
            a: ((a * e + b * g) % n) as u32,
            b: ((a * f + b * h) % n) as u32,
            c: ((c * e + d * g) % n) as u32,
            d: ((c * f + d * h) % n) as u32,
        }
    }

    pub fn det(&self) -> u32 {
        let n = self.n as i64;
        reduce(self.a as i64 * self.d as i64 - self.b as i64 * self.c as i64, n as u32)
    }

    pub fn is_invertible(&self) -> bool {
        gcd(self.det(), self.n) == 1
    }

    pub fn inverse(&self) -> Option<Mat2> {
        let det_inv = inverse_mod(self.det(), self.n)? as i64;
        let (a, b, c, d) = (self.a as i64, self.b as i64, self.c as i64, self.d as i64);
        Some(Mat2::new(self.n, d * det_inv, -b * det_inv, -c * det_inv, a * det_inv))
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity(self.n)
    }

    /// Entrywise reduction to a divisor `m` of the modulus.
    pub fn reduce_to(&self, m: u32) -> Mat2 {
        debug_assert_eq!(self.n % m, 0);
        Mat2 { n: m, a: self.a % m, b: self.b % m, c: self.c % m, d: self.d % m }
    }

    /// Multiplicative order.
    pub fn order(&self) -> u32 {
        let mut x = *self;
        let mut k = 1;
        while !x.is_identity() {
            x = x.mul(self);
            k += 1;
        }
        k
    }

    /// Canonical integer key `((a·n + b)·n + c)·n + d`.
    pub fn encode(&self) -> u32 {
        ((self.a * self.n + self.b) * self.n + self.c) * self.n + self.d
    }

    fn signed(x: u32, n: u32) -> i64 {
        let x = x as i64;
        if x > n as i64 / 2 {
            x - n as i64
        } else {
            x
        }
    }

    /// Entries as balanced residues in `(−n/2, n/2]`.
    pub fn balanced(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d].map(|x| Mat2::signed(x, self.n))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.balanced();
        write!(f, "({a},{b};{c},{d}) mod {}", self.n)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn inverse_mod(x: u32, n: u32) -> Option<u32> {
    (1..n).find(|&y| (x as u64 * y as u64) % n as u64 == 1)
}

/// A finite subgroup of GL₂(Z/nZ) stored as its full element list.
#[derive(Clone, Debug)]
pub struct GroupTable {
    modulus: u32,
    generators: Vec<Mat2>,
    elements: Vec<Mat2>,
    members: HashSet<Mat2>,
}

impl GroupTable {
    fn from_elements(modulus: u32, generators: Vec<Mat2>, elements: Vec<Mat2>) -> Self {
        let members = elements.iter().copied().collect();
        GroupTable { modulus, generators, elements, members }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn generators(&self) -> &[Mat2] {
        &self.generators
    }

    pub fn elements(&self) -> &[Mat2] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Mat2) -> bool {
        self.members.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &GroupTable) -> bool {
        self.modulus == other.modulus && self.elements.iter().all(|g| other.contains(g))
    }

    pub fn same_set(&self, other: &GroupTable) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// `[other : self]` when `self ⊆ other`.
    pub fn index_in(&self, other: &GroupTable) -> Option<usize> {
        self.is_subgroup_of(other).then(|| other.order() / self.order())
    }

    pub fn is_abelian(&self) -> bool {
        self.elements.iter().all(|g| self.elements.iter().all(|h| g.mul(h) == h.mul(g)))
    }

    /// `g·self·g⁻¹ = self` for every `g` in `by`.
    pub fn is_normalized_by(&self, by: &GroupTable) -> bool {
        by.elements.iter().all(|g| {
            let gi = g.inverse().expect("group elements are invertible");
            self.elements.iter().all(|x| self.contains(&g.mul(x).mul(&gi)))
        })
    }

    /// Number of elements of each order, sorted by order.
    pub fn order_profile(&self) -> Vec<(u32, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for g in &self.elements {
            *counts.entry(g.order()).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    /// Image under entrywise reduction to a divisor `m` of the modulus.
    pub fn reduce_to(&self, m: u32) -> GroupTable {
        let mut seen = HashSet::new();
        let elements: Vec<Mat2> =
            self.elements.iter().map(|g| g.reduce_to(m)).filter(|g| seen.insert(*g)).collect();
        let generators = self.generators.iter().map(|g| g.reduce_to(m)).collect();
        GroupTable::from_elements(m, generators, elements)
    }

    /// The set `{x·y : x ∈ self, y ∈ other}` as a sorted, deduplicated list.
    pub fn product_set(&self, other: &GroupTable) -> Vec<Mat2> {
        let mut out: Vec<Mat2> = self
            .elements
            .iter()
            .flat_map(|x| other.elements.iter().map(move |y| x.mul(y)))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        out.sort();
        out
    }

    /// True when the element sets coincide.
    pub fn equals_set(&self, elements: &[Mat2]) -> bool {
        let set: HashSet<&Mat2> = elements.iter().collect();
        set.len() == self.order() && set.iter().all(|g| self.contains(g))
    }
}

/// Least subgroup containing `gens`, by breadth-first right multiplication
/// starting from the identity. Finite groups need no explicit inverses.
pub fn closure(gens: &[Mat2]) -> Result<GroupTable> {
    let Some(first) = gens.first() else {
        return Err(Error::NotInvertible("empty generator list".into()));
    };
    let n = first.n;
    for g in gens {
        if g.n != n {
            return Err(Error::MixedModuli(n, g.n));
        }
        if !g.is_invertible() {
            return Err(Error::NotInvertible(g.to_string()));
        }
    }
    let id = Mat2::identity(n);
    let mut members = HashSet::from([id]);
    let mut elements = vec![id];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if members.insert(y) {
                elements.push(y);
                queue.push_back(y);
            }
        }
    }
    Ok(GroupTable { modulus: n, generators: gens.to_vec(), elements, members })
}

/// SL₂(Z/nZ) by direct enumeration of determinant-one matrices.
pub fn sl2(n: u32) -> GroupTable {
    let mut elements = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let m = Mat2 { n, a, b, c, d };
                    if m.det() == 1 % n {
                        elements.push(m);
                    }
                }
            }
        }
    }
    GroupTable::from_elements(n, vec![Mat2::t(n), Mat2::s(n)], elements)
}

/// `|SL₂(Z/p^k Z)| = p^{3k}(1 − p⁻²)`.
pub fn sl2_order_formula(p: u64, k: u32) -> u64 {
    p.pow(3 * k - 2) * (p * p - 1)
}

/// The Cartan subgroup, its normalizer and `C(n)` = normalizer ∩ SL₂.
#[derive(Clone, Debug)]
pub struct CartanGroups {
    pub cartan: GroupTable,
    pub normalizer: GroupTable,
    pub c_n: GroupTable,
}

/// Matrix of multiplication by `a + b·i` in the basis {1, i}.
pub fn multiplication_matrix(n: u32, a: i64, b: i64) -> Mat2 {
    // 1 ↦ a + b i, i ↦ −b + a i
    Mat2::new(n, a, -b, b, a)
}

/// Matrix of the conjugation i ↦ −i in the basis {1, i}.
pub fn conjugation_matrix(n: u32) -> Mat2 {
    Mat2::new(n, 1, 0, 0, -1)
}

pub fn build_cartan(n: u32) -> Result<CartanGroups> {
    if n != 3 && n != 9 {
        return Err(Error::UnsupportedModulus(n));
    }
    let mut units = Vec::new();
    for a in 0..n as i64 {
        for b in 0..n as i64 {
            // a + bi is a unit iff its norm a² + b² is prime to 3
            if (a * a + b * b) % 3 != 0 {
                units.push(multiplication_matrix(n, a, b));
            }
        }
    }
    let cartan = GroupTable::from_elements(n, units.clone(), units);
    let sigma = conjugation_matrix(n);
    let mut norm_elems = cartan.elements.clone();
    norm_elems.extend(cartan.elements.iter().map(|c| c.mul(&sigma)));
    let mut norm_gens = cartan.generators.clone();
    norm_gens.push(sigma);
    let normalizer = GroupTable::from_elements(n, norm_gens, norm_elems);
    let sl: Vec<Mat2> = normalizer.elements.iter().copied().filter(|g| g.det() == 1).collect();
    let c_n = GroupTable::from_elements(n, sl.clone(), sl);
    Ok(CartanGroups { cartan, normalizer, c_n })
}

/// Full preimage of a level-3 group under reduction SL₂(Z/9Z) → SL₂(Z/3Z).
pub fn preimage_mod9(target: &GroupTable) -> GroupTable {
    let elements: Vec<Mat2> =
        sl2(9).elements.into_iter().filter(|g| target.contains(&g.reduce_to(3))).collect();
    GroupTable::from_elements(9, elements.clone(), elements)
}

/// Kernel of reduction SL₂(Z/9Z) → SL₂(Z/3Z).
pub fn reduction_kernel() -> GroupTable {
    let id3 = Mat2::identity(3);
    let elements: Vec<Mat2> = sl2(9).elements.into_iter().filter(|g| g.reduce_to(3) == id3).collect();
    GroupTable::from_elements(9, elements.clone(), elements)
}

pub fn n_generators() -> [Mat2; 3] {
    [Mat2::new(9, 1, -3, 3, 1), Mat2::new(9, -2, 3, 3, 4), Mat2::new(9, 1, 0, 3, 1)]
}

pub fn h_generators() -> [Mat2; 2] {
    [Mat2::new(9, 0, -1, 1, 0), Mat2::new(9, -1, -4, -4, 1)]
}

/// All named groups of the level-9 construction.
#[derive(Clone, Debug)]
pub struct LevelNineGroups {
    pub sl2_9: GroupTable,
    pub sl2_3: GroupTable,
    /// Kernel of reduction mod 3.
    pub n: GroupTable,
    pub n_prime: GroupTable,
    pub n_double_prime: GroupTable,
    /// Quaternion 2-Sylow subgroup of C(9).
    pub h: GroupTable,
    pub c3: GroupTable,
    pub c9: GroupTable,
    /// N″H, between C(9) and r⁻¹(C(3)).
    pub b: GroupTable,
    pub c3_preimage: GroupTable,
}

impl LevelNineGroups {
    pub fn build() -> Result<Self> {
        let [n1, n2, _] = n_generators();
        let [h1, h2] = h_generators();
        let c3 = build_cartan(3)?.c_n;
        let c9 = build_cartan(9)?.c_n;
        Ok(LevelNineGroups {
            sl2_9: sl2(9),
            sl2_3: sl2(3),
            n: closure(&n_generators())?,
            n_prime: closure(&[n1])?,
            n_double_prime: closure(&[n1, n2])?,
            h: closure(&[h1, h2])?,
            b: closure(&[n1, n2, h1, h2])?,
            c3_preimage: preimage_mod9(&c3),
            c3,
            c9,
        })
    }
}

fn set_check(name: &str, group: &GroupTable, product: &[Mat2], label: &str) -> Check {
    let ok = group.equals_set(product);
    let detail = format!("|{label}| = {}, group order {}", product.len(), group.order());
    let mut check = Check::new(name, ok, detail);
    if !ok {
        let witness = product
            .iter()
            .find(|g| !group.contains(g))
            .or_else(|| group.elements().iter().find(|g| !product.contains(g)));
        if let Some(w) = witness {
            check = check.with_witness(json!(w.to_string()));
        }
    }
    check
}

/// Check that reducing `group` mod 3 gives exactly `target`.
pub fn check_reduction_image(name: &str, group: &GroupTable, target: &GroupTable) -> Check {
    let image = group.reduce_to(3);
    let ok = image.same_set(target);
    let mut check =
        Check::new(name, ok, format!("|r(G)| = {}, |target| = {}", image.order(), target.order()));
    if !ok {
        if let Some(w) = image.elements().iter().find(|g| !target.contains(g)) {
            check = check.with_witness(json!(w.to_string()));
        }
    }
    check
}

fn normalizes_check(name: &str, h: &GroupTable, k: &GroupTable) -> Check {
    let ok = k.is_normalized_by(h);
    let mut check = Check::new(name, ok, format!("H normalizes a group of order {}", k.order()));
    if !ok {
        let witness = h.elements().iter().find(|g| {
            let gi = g.inverse().unwrap();
            k.elements().iter().any(|x| !k.contains(&g.mul(x).mul(&gi)))
        });
        if let Some(w) = witness {
            check = check.with_witness(json!(w.to_string()));
        }
    }
    check
}

/// Structure checks for the level-9 groups: the kernel N, the quaternion group
/// H, the factorizations C(9) = N′H, B = N″H, r⁻¹(C(3)) = NH, the index-3
/// chain and the reduction images.
pub fn verify_groups() -> Result<CheckReport> {
    let g = LevelNineGroups::build()?;
    let mut report = CheckReport::new("level-9 group structure");

    // (a) kernel of reduction
    let kernel = reduction_kernel();
    let profile = g.n.order_profile();
    let exponent_three = profile.iter().all(|&(o, _)| o == 1 || o == 3);
    let ok = g.n.order() == 27 && g.n.same_set(&kernel) && g.n.is_abelian() && exponent_three;
    report.push(
        Check::new(
            "kernel-N",
            ok,
            format!(
                "|N| = {}, equals ker r: {}, abelian: {}, elementary abelian 3-group: {}",
                g.n.order(),
                g.n.same_set(&kernel),
                g.n.is_abelian(),
                exponent_three
            ),
        )
        .with_witness(json!({ "order": g.n.order() })),
    );

    // (b) H is quaternion of order 8 and maps isomorphically onto C(3)
    let h_profile = g.h.order_profile();
    let quaternion = g.h.order() == 8 && h_profile == vec![(1, 1), (2, 1), (4, 6)];
    let bijective = g.h.reduce_to(3).same_set(&g.c3) && g.c3.order() == g.h.order();
    report.push(Check::new(
        "quaternion-H",
        quaternion && bijective,
        format!(
            "|H| = {}, order profile {:?}, r|H bijective onto C(3): {}",
            g.h.order(),
            h_profile,
            bijective
        ),
    ));

    // (c) C(9) = N′H
    report.push(Check::new("order-N'", g.n_prime.order() == 3, format!("|N'| = {}", g.n_prime.order())));
    report.push(set_check("C9-equals-N'H", &g.c9, &g.n_prime.product_set(&g.h), "N'H"));

    // (d) B = N″H and the chain C(9) ⊂ B ⊂ r⁻¹(C(3))
    report.push(Check::new(
        "order-N''",
        g.n_double_prime.order() == 9,
        format!("|N''| = {}", g.n_double_prime.order()),
    ));
    report.push(set_check("B-equals-N''H", &g.b, &g.n_double_prime.product_set(&g.h), "N''H"));
    report.push(set_check("preimage-equals-NH", &g.c3_preimage, &g.n.product_set(&g.h), "NH"));
    let lower = g.c9.index_in(&g.b);
    let upper = g.b.index_in(&g.c3_preimage);
    report.push(
        Check::new(
            "index-chain",
            lower == Some(3) && upper == Some(3),
            format!("[B : C(9)] = {lower:?}, [r^-1(C(3)) : B] = {upper:?}"),
        )
        .with_witness(json!([lower, upper])),
    );

    // (e) H normalizes N′, N″, N
    report.push(normalizes_check("H-normalizes-N'", &g.h, &g.n_prime));
    report.push(normalizes_check("H-normalizes-N''", &g.h, &g.n_double_prime));
    report.push(normalizes_check("H-normalizes-N", &g.h, &g.n));

    // (f) reduction images
    report.push(check_reduction_image("r(C9)-equals-C3", &g.c9, &g.c3));
    report.push(check_reduction_image("r(B)-equals-C3", &g.b, &g.c3));

    // sizes used downstream
    let sizes_ok = g.sl2_9.order() == 648
        && g.sl2_3.order() == 24
        && g.c9.order() == 24
        && g.c3.order() == 8
        && g.b.order() == 72
        && g.c3_preimage.order() == 216;
    report.push(Check::new(
        "orders",
        sizes_ok,
        format!(
            "|SL2(Z/9)| = {}, |SL2(Z/3)| = {}, |C(9)| = {}, |C(3)| = {}, |B| = {}, |r^-1(C(3))| = {}",
            g.sl2_9.order(),
            g.sl2_3.order(),
            g.c9.order(),
            g.c3.order(),
            g.b.order(),
            g.c3_preimage.order()
        ),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_identity_is_trivial() {
        assert_eq!(closure(&[Mat2::identity(9)]).unwrap().order(), 1);
    }

    #[test]
    fn closure_of_h_generators_is_quaternion() {
        let h = closure(&h_generators()).unwrap();
        assert_eq!(h.order(), 8);
        let involutions: Vec<_> = h.elements().iter().filter(|g| g.order() == 2).collect();
        assert_eq!(involutions, vec![&Mat2::minus_identity(9)]);
        // a unique involution forces every proper subgroup to be cyclic
        assert_eq!(h.order_profile(), vec![(1, 1), (2, 1), (4, 6)]);
    }

    #[test]
    fn closure_of_t_and_s_is_sl2() {
        let g = closure(&[Mat2::t(9), Mat2::s(9)]).unwrap();
        assert_eq!(g.order() as u64, sl2_order_formula(3, 2));
        assert_eq!(g.order(), 648);
        assert!(g.same_set(&sl2(9)));
        assert_eq!(sl2(3).order() as u64, sl2_order_formula(3, 1));
    }

    #[test]
    fn closure_rejects_bad_generators() {
        assert_eq!(closure(&[Mat2::identity(9), Mat2::identity(3)]).unwrap_err(), Error::MixedModuli(9, 3));
        assert!(matches!(closure(&[Mat2::new(9, 3, 0, 0, 3)]), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn cartan_orders_and_indices() {
        let c3 = build_cartan(3).unwrap();
        assert_eq!(c3.cartan.order(), 8);
        assert_eq!(c3.normalizer.order(), 16);
        assert_eq!(c3.c_n.order(), 8);
        assert_eq!(sl2(3).order() / c3.c_n.order(), 3);
        let c9 = build_cartan(9).unwrap();
        assert_eq!(c9.cartan.order(), 72);
        assert_eq!(c9.normalizer.order(), 144);
        assert_eq!(c9.c_n.order(), 24);
        assert_eq!(sl2(9).order() / c9.c_n.order(), 27);
        assert_eq!(build_cartan(5).unwrap_err(), Error::UnsupportedModulus(5));
    }

    #[test]
    fn constructed_groups_are_closed() {
        for n in [3, 9] {
            let g = build_cartan(n).unwrap();
            // |GL2(Z/nZ)| = |SL2(Z/nZ)| · φ(n)
            let gl2_order = sl2(n).order() * (n as usize * 2 / 3);
            for table in [&g.cartan, &g.normalizer, &g.c_n] {
                let regenerated = closure(table.elements()).unwrap();
                assert!(regenerated.same_set(table));
                assert_eq!(gl2_order % table.order(), 0);
            }
            assert_eq!(sl2(n).order() % g.c_n.order(), 0);
        }
    }

    #[test]
    fn conjugation_normalizes_cartan() {
        for n in [3, 9] {
            let g = build_cartan(n).unwrap();
            let s = conjugation_matrix(n);
            let si = s.inverse().unwrap();
            assert!(g.cartan.elements().iter().all(|c| g.cartan.contains(&s.mul(c).mul(&si))));
            assert!(g.cartan.is_normalized_by(&g.normalizer));
        }
    }

    #[test]
    fn cartan_structures_are_compatible_under_reduction() {
        let c9 = build_cartan(9).unwrap();
        let c3 = build_cartan(3).unwrap();
        assert!(c9.cartan.reduce_to(3).same_set(&c3.cartan));
        assert!(c9.normalizer.reduce_to(3).same_set(&c3.normalizer));
        assert!(c9.c_n.reduce_to(3).same_set(&c3.c_n));
    }

    #[test]
    fn c9_is_generated_by_h_and_one_more_matrix() {
        let [h1, h2] = h_generators();
        let g = closure(&[h1, h2, Mat2::new(9, 1, -3, 3, 1)]).unwrap();
        assert!(g.same_set(&build_cartan(9).unwrap().c_n));
    }

    #[test]
    fn lagrange_holds_for_every_named_group() {
        let g = LevelNineGroups::build().unwrap();
        for t in [&g.n, &g.n_prime, &g.n_double_prime, &g.h, &g.c9, &g.b, &g.c3_preimage] {
            assert_eq!(648 % t.order(), 0);
        }
        assert_eq!(24 % g.c3.order(), 0);
    }

    #[test]
    fn all_group_checks_pass() {
        let report = verify_groups().unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.get("kernel-N").unwrap().witness, Some(json!({"order": 27})));
        assert_eq!(report.get("index-chain").unwrap().witness, Some(json!([3, 3])));
    }

    #[test]
    fn reduction_check_fails_for_all_of_sl2() {
        let g = LevelNineGroups::build().unwrap();
        let check = check_reduction_image("r(SL2)-equals-C3", &g.sl2_9, &g.c3);
        assert!(!check.passed);
        assert!(check.witness.is_some());
    }

    #[test]
    fn matrix_arithmetic() {
        let m = Mat2::new(9, 2, 5, 1, 3);
        assert_eq!(m.det(), 1);
        assert!(m.mul(&m.inverse().unwrap()).is_identity());
        assert_eq!(Mat2::st(9).order(), 6);
        assert_eq!(Mat2::s(9).order(), 4);
        assert_eq!(Mat2::st(9), Mat2::new(9, 0, -1, 1, 1));
    }
}
