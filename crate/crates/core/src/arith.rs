//! Small exact integer helpers: gcd, factorization, CRT.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Extended Euclid on signed integers: returns `(g, x, y)` with `g = x*a + y*b`, `g >= 0`.
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
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

/// Returns `(p, e)` when `n = p^e` with `p` prime and `e >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

/// Number of distinct prime divisors.
pub fn omega(n: u64) -> usize {
    factorize(n).len()
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// Smallest non-negative `x` with `x = a mod m1` and `x = b mod m2`, for coprime moduli.
pub fn crt_pair(a: u64, m1: u64, b: u64, m2: u64) -> Option<u64> {
    let (g, s, _) = egcd(m1 as i128, m2 as i128);
    if g != 1 {
        return None;
    }
    let m = m1 as i128 * m2 as i128;
    // x = a + m1 * ((b - a) * s mod m2)
    let k = ((b as i128 - a as i128) * s).rem_euclid(m2 as i128);
    let x = (a as i128 + m1 as i128 * k).rem_euclid(m);
    Some(x as u64)
}

/// `(q^rho - 1) / (q - 1)`, the number of hyperplanes of an `rho`-dimensional space over `F_q`.
pub fn hyperplane_count(q: u64, rho: u32) -> u128 {
    (0..rho).map(|i| (q as u128).pow(i)).sum()
}
