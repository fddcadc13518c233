//! Dense polynomials over Z/pZ, used to validate defining polynomials.

use crate::arith::mulmod;

/// Drops leading zero coefficients.
fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    crate::arith::powmod(a, p - 2, p)
}

/// Remainder of `a` modulo the nonzero polynomial `f`.
pub(crate) fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p);
    while r.len() > df {
        let k = r.len() - 1;
        let c = mulmod(r[k], lead_inv, p);
        let shift = k - df;
        for (i, &fi) in f.iter().enumerate() {
            let t = mulmod(c, fi, p);
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        trim(&mut r);
    }
    r
}

fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

fn mulmod_poly(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), f, p)
}

fn powmod_poly(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod_poly(&result, &b, f, p);
        }
        b = mulmod_poly(&b, &b, f, p);
        e >>= 1;
    }
    result
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// X^(p^k) mod f.
fn x_pow_p_pow(k: u32, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[0, 1], f, p);
    for _ in 0..k {
        acc = powmod_poly(&acc, p, f, p);
    }
    acc
}

/// Rabin's test for a monic `f` of degree n over Z/pZ.
pub(crate) fn is_irreducible_rabin(f: &[u64], p: u64) -> bool {
    let n = (f.len() - 1) as u32;
    if n == 0 {
        return false;
    }
    let x = rem(&[0, 1], f, p);
    if x_pow_p_pow(n, f, p) != x {
        return false;
    }
    for d in crate::arith::distinct_prime_factors(n as u64) {
        let h = sub(&x_pow_p_pow(n / d as u32, f, p), &[0, 1], p);
        let g = gcd(f, &h, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Exhaustive test: no monic factor of degree 1..=n/2 divides `f`.
pub(crate) fn is_irreducible_exhaustive(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    if n == 0 {
        return false;
    }
    for d in 1..=n / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push(c % p);
                c /= p;
            }
            g.push(1);
            if rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}
