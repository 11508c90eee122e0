//! Dense polynomials over `F_p` (coefficient vectors, lowest degree first),
//! used to pick defining polynomials for Galois rings.

use crate::arith::factorize;

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (_, x, _) = crate::arith::egcd(a as i128, p as i128);
    x.rem_euclid(p as i128) as u64
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo a nonzero `b`.
pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * lead_inv % p;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
        }
        r = trim(r);
    }
    r
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    // make monic
    if let Some(&lead) = a.last() {
        let inv = inv_mod(lead, p);
        a = a.into_iter().map(|c| c * inv % p).collect();
    }
    a
}

/// `x^(p^k) mod f`.
fn frobenius_power_of_x(f: &[u64], p: u64, k: u32) -> Vec<u64> {
    let mut h = rem(&[0, 1], f, p);
    for _ in 0..k {
        // h <- h^p mod f
        let mut acc = vec![1u64];
        let mut base = h.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &base, p), f, p);
            }
            base = rem(&mul(&base, &base, p), f, p);
            e >>= 1;
        }
        h = acc;
    }
    h
}

/// Rabin's test: a degree-`n` polynomial `f` is irreducible over `F_p` iff
/// `f | x^(p^n) - x` and `gcd(f, x^(p^(n/l)) - x) = 1` for each prime `l | n`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let n = (f.len() - 1) as u32;
    let x = vec![0, 1];
    let full = sub(&frobenius_power_of_x(&f, p, n), &x, p);
    if !rem(&full, &f, p).is_empty() {
        return false;
    }
    factorize(n as u64).iter().all(|&(l, _)| {
        let h = sub(&frobenius_power_of_x(&f, p, n / l as u32), &x, p);
        gcd(&f, &h, p) == vec![1]
    })
}

/// The monic degree-`n` irreducible polynomial over `F_p` whose lower
/// coefficients `(c_0, .., c_{n-1})`, read as base-`p` digits with `c_{n-1}`
/// most significant, form the smallest number.
pub fn least_irreducible(p: u64, n: u32) -> Vec<u64> {
    let count = p.pow(n);
    for code in 0..count {
        let mut f = Vec::with_capacity(n as usize + 1);
        let mut c = code;
        for _ in 0..n {
            f.push(c % p);
            c /= p;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
