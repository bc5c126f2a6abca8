//! Small shared integer arithmetic: trial-division factorization and
//! primality for the modest magnitudes this crate handles (element orders,
//! conductors, class counts — nothing near 2⁶⁴).

/// Distinct prime divisors of `n`, ascending. Empty for `n ≤ 1`.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Factorization of `n` as `(prime, multiplicity)` pairs, ascending primes.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Factorization of `n` as `(prime, full prime power)` pairs.
pub(crate) fn prime_power_factors(n: u64) -> Vec<(u64, u64)> {
    factorize(n)
        .into_iter()
        .map(|(p, e)| (p, p.pow(e)))
        .collect()
}

/// Trial-division primality.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
