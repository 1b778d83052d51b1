//! Published values the `report` command compares against.

/// Integral points: `(m, n)`, sign of `j`, factorization of `|j|`, discriminant.
#[allow(clippy::type_complexity)]
pub const INTEGRAL_POINTS: [((i64, i64), bool, &[(u64, u32)], Option<i64>); 9] = [
    ((-1, 1), false, &[(2, 6), (3, 3)], Some(-4)),
    ((1, 0), true, &[(3, 3), (5, 3)], Some(-7)),
    ((-1, -1), false, &[(2, 3), (3, 3), (11, 3)], Some(-16)),
    ((0, 1), true, &[(2, 15), (3, 3)], Some(-19)),
    ((-1, -2), false, &[(3, 3), (5, 3), (17, 3)], Some(-28)),
    ((2, 1), true, &[(2, 18), (3, 3), (5, 3)], Some(-43)),
    ((2, -1), true, &[(2, 15), (3, 3), (5, 3), (11, 3)], Some(-67)),
    ((1, 3), true, &[(2, 18), (3, 3), (5, 3), (23, 3), (29, 3)], Some(-163)),
    ((-3, -2), false, &[(3, 3), (41, 3), (61, 3), (149, 3)], None),
];

/// Good primes below 100 with the published a_p of the non-CM curve.
#[rustfmt::skip]
pub const AP_ROW: [(u64, i64); 24] = [
    (2, -1), (3, 0), (7, 0), (11, -2), (13, 0), (17, -2), (19, 0), (23, -1),
    (29, 0), (31, -9), (37, -2), (41, 0), (43, 1), (47, -7), (53, -8), (59, -10),
    (61, 0), (67, -4), (71, 9), (73, 9), (79, 8), (83, -18), (89, -11), (97, -9),
];

pub const UNIT_SOLUTIONS: [(i64, i64); 6] = [(2, -1), (-3, -2), (-1, -1), (1, 0), (1, 3), (0, 1)];
pub const THREE_SOLUTIONS: [(i64, i64); 3] = [(-1, -2), (-1, 1), (2, 1)];

pub const CLASS_NUMBER_3511: u64 = 41;
