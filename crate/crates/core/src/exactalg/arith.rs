use crate::{Error, Result};

/// Non-negative gcd with `gcd(0, k) = |k|`.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Deterministic trial division; inputs here stay far below 10^10.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Prime factorization of `|n|` by trial division, as `(prime, exponent)` in
/// increasing order. `factor(0)` and `factor(±1)` are empty.
pub fn factor(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    let mut d = 2;
    while n > 1 && d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Kronecker symbol `(a | n)`.
///
/// Extends the Jacobi symbol by `(a | −1) = sign(a)` (with `(0 | −1) = 1`) and
/// `(a | 2) = 0` for even `a`, `1` for `a ≡ ±1 (mod 8)`, `−1` for `a ≡ ±3 (mod 8)`.
pub fn kronecker(a: i64, n: i64) -> Result<i32> {
    if n == 0 {
        return Err(Error::KroneckerZero);
    }
    let mut sign = 1;
    let mut n = n as i128;
    let a = a as i128;
    if n < 0 {
        n = -n;
        if a < 0 {
            sign = -1;
        }
    }
    let twos = n.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return Ok(0);
        }
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            sign = -sign;
        }
        n >>= twos;
    }
    Ok(sign * jacobi(a.rem_euclid(n), n))
}

/// Jacobi symbol for odd positive `n` and `0 <= a < n`.
fn jacobi(mut a: i128, mut n: i128) -> i32 {
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Legendre symbol from an exhaustive table of squares mod an odd prime.
    fn legendre_by_table(a: i64, p: i64) -> i32 {
        let a = a.rem_euclid(p);
        if a == 0 {
            return 0;
        }
        if (1..p).any(|x| (x * x) % p == a) {
            1
        } else {
            -1
        }
    }

    #[test]
    fn spec_values() {
        assert_eq!(kronecker(-3511, 3).unwrap(), -1);
        assert_eq!(legendre_by_table(-3511, 3), -1);
        assert_eq!(kronecker(5, 1).unwrap(), 1);
        assert_eq!(kronecker(-3, 7).unwrap(), 1);
        assert_eq!(legendre_by_table(-3, 7), 1);
        assert_eq!(kronecker(3, 0), Err(Error::KroneckerZero));
    }

    #[test]
    fn two_and_minus_one_rules() {
        assert_eq!(kronecker(-15, 2).unwrap(), 1);
        assert_eq!(kronecker(-11, 2).unwrap(), -1);
        assert_eq!(kronecker(-4, 2).unwrap(), 0);
        assert_eq!(kronecker(-7, -1).unwrap(), -1);
        assert_eq!(kronecker(7, -1).unwrap(), 1);
        assert_eq!(kronecker(-163, 8).unwrap(), -1);
    }

    #[test]
    fn primes_and_factors() {
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(primes_up_to(1000).iter().all(|&p| is_prime(p)));
        assert_eq!(primes_up_to(1000).len(), 168);
        assert_eq!(factor(14_348_907), vec![(3, 15)]);
        assert_eq!(factor(640_320), vec![(2, 6), (3, 1), (5, 1), (23, 1), (29, 1)]);
        assert_eq!(factor(1), vec![]);
        assert_eq!(gcd_i64(0, -7), 7);
        assert_eq!(gcd_i64(12, -18), 6);
    }

    proptest! {
        #[test]
        fn matches_square_table_on_odd_primes(a in -500i64..500, idx in 1usize..40) {
            let p = primes_up_to(200)[idx] as i64;
            prop_assert_eq!(kronecker(a, p).unwrap(), legendre_by_table(a, p));
        }

        #[test]
        fn multiplicative_in_the_modulus(a in -300i64..300, m in -60i64..60, n in -60i64..60) {
            prop_assume!(m != 0 && n != 0);
            prop_assert_eq!(
                kronecker(a, m * n).unwrap(),
                kronecker(a, m).unwrap() * kronecker(a, n).unwrap()
            );
        }
    }
}
