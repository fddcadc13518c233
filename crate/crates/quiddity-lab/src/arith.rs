//! Integer number theory and quadratic residues.
//!
//! The integer half (primality, factorization, totient, Möbius) works on
//! 64-bit values. The field half decides squares through the Euler criterion,
//! reducing extension fields to their prime field with a norm-like power.

use thiserror::Error;

use crate::ring_core::{Element, FiniteRing, RingError, RingKind};

/// Trial division bound used before switching to Pollard-Brent.
const TRIAL_LIMIT: u64 = 1_000_000;

/// Largest field for which square tables are materialized.
pub const SQUARE_TABLE_LIMIT: u64 = 1_000_000;

/// Largest field accepted by [`szymiczek_sum_check`].
pub const SZYMICZEK_LIMIT: u64 = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("p must be odd")]
    PEven,
    #[error("{0} is not prime")]
    PNotPrime(u64),
    #[error("argument out of range")]
    OutOfRange,
    #[error("field too large for this operation")]
    TooLarge,
    #[error("operation requires odd characteristic")]
    CharTwo,
    #[error("shift must be nonzero")]
    AZero,
    #[error("operation requires characteristic 2")]
    WrongCharacteristic,
    #[error(transparent)]
    Ring(#[from] RingError),
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Returns `(g, s, t)` with `s a + t b = g = gcd(a, b)`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0, s0, t0)
}

pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub value: u64,
    pub pairs: Vec<(u64, u32)>,
}

impl Factorization {
    fn from_primes(value: u64, mut primes: Vec<u64>) -> Self {
        primes.sort_unstable();
        let mut pairs: Vec<(u64, u32)> = Vec::new();
        for p in primes {
            match pairs.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => pairs.push((p, 1)),
            }
        }
        Factorization { value, pairs }
    }

    /// Factorization of the product of two factored numbers.
    pub fn merge(&self, other: &Factorization) -> Factorization {
        let mut primes = Vec::new();
        for f in [self, other] {
            for &(p, e) in &f.pairs {
                primes.extend(std::iter::repeat_n(p, e as usize));
            }
        }
        Factorization::from_primes(self.value.wrapping_mul(other.value), primes)
    }

    /// phi of the factored value, as u128 to allow products of factorizations.
    pub fn phi(&self) -> u128 {
        self.pairs
            .iter()
            .map(|&(p, e)| (p as u128 - 1) * (p as u128).pow(e - 1))
            .product()
    }

    pub fn moebius(&self) -> i8 {
        if self.pairs.iter().any(|&(_, e)| e > 1) {
            0
        } else if self.pairs.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|&(_, e)| e == 1)
    }
}

fn pollard_brent(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let (mut y, m) = (2u64, 128u64);
        let (mut g, mut r, mut q) = (1u64, 1u64, 1u64);
        let (mut x, mut ys) = (0u64, 0u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mulmod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_into(d, out);
    split_into(n / d, out);
}

pub fn factorize(n: u64) -> Result<Factorization, ArithError> {
    if n < 2 {
        return Err(ArithError::OutOfRange);
    }
    let mut primes = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d <= TRIAL_LIMIT && d * d <= m {
        while m.is_multiple_of(d) {
            primes.push(d);
            m /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        split_into(m, &mut primes);
    }
    Ok(Factorization::from_primes(n, primes))
}

/// Distinct primes dividing `n` (empty for n <= 1).
pub fn distinct_prime_factors(n: u64) -> Vec<u64> {
    match factorize(n) {
        Ok(f) => f.pairs.into_iter().map(|(p, _)| p).collect(),
        Err(_) => Vec::new(),
    }
}

/// `(p, k)` with `q = p^k`, if q is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factorize(q).ok()?;
    match f.pairs.as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

pub fn euler_phi(n: u64) -> Result<u64, ArithError> {
    match n {
        0 => Err(ArithError::OutOfRange),
        1 => Ok(1),
        _ => Ok(factorize(n)?.phi() as u64),
    }
}

pub fn moebius(n: u64) -> Result<i8, ArithError> {
    match n {
        0 => Err(ArithError::OutOfRange),
        1 => Ok(1),
        _ => Ok(factorize(n)?.moebius()),
    }
}

/// Factorization of 2^n - 1 through 2^n - 1 = (2^d - 1)(2^n - 1)/(2^d - 1),
/// with d = n / (smallest prime factor of n).
pub fn mersenne_factorization(n: u32) -> Result<Factorization, ArithError> {
    if !(2..=64).contains(&n) {
        return Err(ArithError::OutOfRange);
    }
    let value = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let spf = distinct_prime_factors(n as u64)[0] as u32;
    let d = n / spf;
    if d == 1 {
        return factorize(value);
    }
    let low = mersenne_factorization_any(d)?;
    let cofactor = value / ((1u64 << d) - 1);
    let high = factorize(cofactor)?;
    let mut merged = low.merge(&high);
    merged.value = value;
    Ok(merged)
}

fn mersenne_factorization_any(d: u32) -> Result<Factorization, ArithError> {
    if d == 1 {
        return Ok(Factorization { value: 1, pairs: Vec::new() });
    }
    mersenne_factorization(d)
}

/// All n in [a, b] with phi(2^n - 1) < 2^(n-1).
pub fn mersenne_phi_deficit(a: u32, b: u32) -> Result<Vec<u32>, ArithError> {
    if a < 2 || a > b || b > 64 {
        return Err(ArithError::OutOfRange);
    }
    let mut out = Vec::new();
    for n in a..=b {
        let phi = mersenne_factorization(n)?.phi();
        if phi < 1u128 << (n - 1) {
            out.push(n);
        }
    }
    Ok(out)
}

/// Legendre symbol value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolValue {
    MinusOne,
    Zero,
    PlusOne,
}

impl SymbolValue {
    pub fn as_i8(self) -> i8 {
        match self {
            SymbolValue::MinusOne => -1,
            SymbolValue::Zero => 0,
            SymbolValue::PlusOne => 1,
        }
    }
}

/// Legendre symbol (a/p) by the Euler criterion.
pub fn legendre(a: i128, p: u64) -> Result<SymbolValue, ArithError> {
    if p.is_multiple_of(2) {
        return Err(ArithError::PEven);
    }
    if !is_prime(p) {
        return Err(ArithError::PNotPrime(p));
    }
    let a = a.rem_euclid(p as i128) as u64;
    Ok(euler(a, p))
}

fn euler(a: u64, p: u64) -> SymbolValue {
    if a.is_multiple_of(p) {
        return SymbolValue::Zero;
    }
    if powmod(a, (p - 1) / 2, p) == 1 {
        SymbolValue::PlusOne
    } else {
        SymbolValue::MinusOne
    }
}

fn require_field(field: &FiniteRing) -> Result<(), ArithError> {
    if field.is_field() {
        Ok(())
    } else {
        Err(RingError::NotAField.into())
    }
}

/// Whether `x` is a square in the field.
pub fn is_square(field: &FiniteRing, x: Element) -> Result<bool, ArithError> {
    require_field(field)?;
    field.check(&[x])?;
    let p = field.characteristic();
    if x == field.zero() || p == 2 {
        return Ok(true);
    }
    let q = field.cardinality();
    let norm = match field.kind() {
        RingKind::ZMod { .. } => x,
        RingKind::Gf { .. } => field.pow(x, (q - 1) / (p - 1)),
    };
    let c = field.coeffs(norm);
    debug_assert!(c.iter().skip(1).all(|&d| d == 0));
    Ok(euler(c[0], p) == SymbolValue::PlusOne)
}

/// The set of squares, in enumeration order.
pub fn square_table(field: &FiniteRing) -> Result<Vec<Element>, ArithError> {
    require_field(field)?;
    if field.cardinality() > SQUARE_TABLE_LIMIT {
        return Err(ArithError::TooLarge);
    }
    let mut seen = vec![false; field.cardinality() as usize];
    for y in field.elements() {
        seen[field.mul(y, y).code() as usize] = true;
    }
    Ok(field.elements().filter(|x| seen[x.code() as usize]).collect())
}

/// Number of x with x^2 + a a square.
pub fn count_x_with_square_shift(field: &FiniteRing, a: Element) -> Result<u64, ArithError> {
    require_field(field)?;
    field.check(&[a])?;
    if field.characteristic() == 2 {
        return Err(ArithError::CharTwo);
    }
    if a == field.zero() {
        return Err(ArithError::AZero);
    }
    let mut count = 0;
    for x in field.elements() {
        if is_square(field, field.add(field.mul(x, x), a))? {
            count += 1;
        }
    }
    Ok(count)
}

fn gf2_degree(field: &FiniteRing) -> Result<u32, ArithError> {
    match field.kind() {
        RingKind::Gf { p: 2, n, .. } => Ok(*n),
        RingKind::ZMod { n: 2 } => Ok(1),
        _ => Err(ArithError::WrongCharacteristic),
    }
}

/// Absolute trace T(x) = x + x^2 + ... + x^(2^(n-1)) of GF(2^n), as a bit.
pub fn trace_char2(field: &FiniteRing, x: Element) -> Result<u8, ArithError> {
    let n = gf2_degree(field)?;
    field.check(&[x])?;
    let mut acc = field.zero();
    let mut term = x;
    for _ in 0..n {
        acc = field.add(acc, term);
        term = field.mul(term, term);
    }
    assert!(acc == field.zero() || acc == field.one(), "trace left the prime field");
    Ok(acc.code() as u8)
}

/// Whether X^2 + aX + b splits over GF(2^n), for a != 0.
pub fn splits_char2(field: &FiniteRing, a: Element, b: Element) -> Result<bool, ArithError> {
    gf2_degree(field)?;
    let a_inv = field.inv(a)?;
    let t = field.mul(b, field.mul(a_inv, a_inv));
    Ok(trace_char2(field, t)? == 0)
}

/// Compares the sum of m-th powers of all generators with mu(e) phi(q-1) / phi(e),
/// where e = (q-1) / gcd(m, q-1).
pub fn szymiczek_sum_check(field: &FiniteRing, m: u64) -> Result<bool, ArithError> {
    require_field(field)?;
    let q = field.cardinality();
    if q > SZYMICZEK_LIMIT {
        return Err(ArithError::TooLarge);
    }
    let gens = field.generators()?;
    let lhs = gens.iter().fold(field.zero(), |acc, &g| field.add(acc, field.pow(g, m)));
    Ok(lhs == szymiczek_formula(field, m)?)
}

/// The closed form mu(e) phi(q-1) / phi(e) reduced into the field.
pub fn szymiczek_formula(field: &FiniteRing, m: u64) -> Result<Element, ArithError> {
    let q1 = field.cardinality() - 1;
    let e = q1 / gcd(m, q1);
    let value = moebius(e)? as i128 * (euler_phi(q1)? / euler_phi(e)?) as i128;
    Ok(field.from_int(value))
}
