//! Exact arithmetic in Z/NZ and GF(p^n).
//!
//! Elements are packed into a single `u64` code. For Z/NZ the code is the
//! least nonnegative residue; for GF(p^n) it is `c0 + c1 p + ... + c_{n-1} p^{n-1}`
//! where `c_i` are the ascending coefficients. Ordering codes numerically gives
//! the lexicographic order on `(c_{n-1}, ..., c_0)`.

mod poly;

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::arith;

/// Default cap on iterative order searches (matrix powers, size scans).
pub const DEFAULT_ITERATION_CAP: u64 = 10_000_000;

/// GF rings up to this cardinality use precomputed addition/multiplication tables.
const TABLE_LIMIT: u64 = 256;

/// Degree up to which modulus irreducibility is checked by exhaustive factor search.
const EXHAUSTIVE_DEGREE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("malformed ring spec `{0}`")]
    MalformedSpec(String),
    #[error("{0} is not prime")]
    CompositeP(u64),
    #[error("defining polynomial is reducible over Z/{0}")]
    ReduciblePolynomial(u64),
    #[error("modulus must be at least 2, got {0}")]
    NTooSmall(u64),
    #[error("element is not a unit")]
    NotAUnit,
    #[error("element does not belong to this ring")]
    RingMismatch,
    #[error("iteration cap of {0} exceeded")]
    OrderCapExceeded(u64),
    #[error("ring is not a field")]
    NotAField,
    #[error("malformed element `{0}`")]
    MalformedElement(String),
    #[error("cardinality does not fit in 64 bits")]
    TooLarge,
}

/// A canonical ring element, see the module docs for the encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(u64);

impl Element {
    pub fn code(self) -> u64 {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingKind {
    ZMod { n: u64 },
    Gf { p: u64, n: u32, modpoly: Vec<u64> },
}

#[derive(Debug)]
struct Inner {
    kind: RingKind,
    card: u64,
    unit_count: OnceLock<u64>,
    unit_primes: OnceLock<Vec<u64>>,
    tables: OnceLock<Tables>,
}

#[derive(Debug)]
struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
}

/// A finite commutative ring: Z/NZ or GF(p^n).
///
/// Cloning is cheap. The iteration cap bounds the searches in
/// [`pm_order`] and is not part of ring equality.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    inner: Arc<Inner>,
    cap: u64,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.kind == other.inner.kind
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    fn from_kind(kind: RingKind, card: u64) -> Self {
        FiniteRing {
            inner: Arc::new(Inner {
                kind,
                card,
                unit_count: OnceLock::new(),
                unit_primes: OnceLock::new(),
                tables: OnceLock::new(),
            }),
            cap: DEFAULT_ITERATION_CAP,
        }
    }

    pub fn zmod(n: u64) -> Result<Self, RingError> {
        if n < 2 {
            return Err(RingError::NTooSmall(n));
        }
        Ok(Self::from_kind(RingKind::ZMod { n }, n))
    }

    /// GF(p^n) from ascending coefficients of a monic modulus of degree n.
    pub fn gf(p: u64, modpoly: &[u64]) -> Result<Self, RingError> {
        if !arith::is_prime(p) {
            return Err(RingError::CompositeP(p));
        }
        if modpoly.len() < 2 {
            return Err(RingError::MalformedSpec(format!("{modpoly:?}")));
        }
        let n = modpoly.len() - 1;
        if modpoly[n] != 1 || modpoly.iter().any(|&c| c >= p) {
            return Err(RingError::MalformedSpec(format!("{modpoly:?}")));
        }
        let card = (p as u128).checked_pow(n as u32).filter(|&c| c <= u64::MAX as u128);
        let card = card.ok_or(RingError::TooLarge)? as u64;
        let small = n <= EXHAUSTIVE_DEGREE && (p as u128).pow((n / 2) as u32) <= 1 << 20;
        let irreducible = if small {
            poly::is_irreducible_exhaustive(modpoly, p)
        } else {
            poly::is_irreducible_rabin(modpoly, p)
        };
        if !irreducible {
            return Err(RingError::ReduciblePolynomial(p));
        }
        let kind = RingKind::Gf { p, n: n as u32, modpoly: modpoly.to_vec() };
        Ok(Self::from_kind(kind, card))
    }

    /// GF(p^n) with the first irreducible monic modulus in enumeration order.
    pub fn gf_default(p: u64, n: u32) -> Result<Self, RingError> {
        if !arith::is_prime(p) {
            return Err(RingError::CompositeP(p));
        }
        let count = (p as u128).checked_pow(n).ok_or(RingError::TooLarge)?;
        for code in 0..count {
            let mut f = Vec::with_capacity(n as usize + 1);
            let mut c = code;
            for _ in 0..n {
                f.push((c % p as u128) as u64);
                c /= p as u128;
            }
            f.push(1);
            if let Ok(ring) = Self::gf(p, &f) {
                return Ok(ring);
            }
        }
        Err(RingError::ReduciblePolynomial(p))
    }

    /// The field with q elements: Z/qZ when q is prime, else [`FiniteRing::gf_default`].
    pub fn field(q: u64) -> Result<Self, RingError> {
        match arith::prime_power(q) {
            Some((p, 1)) => Self::zmod(p),
            Some((p, n)) => Self::gf_default(p, n),
            None => Err(RingError::NotAField),
        }
    }

    /// Parses `Z/<N>` or `GF(<p>^<n>):<c0>,...,<cn>`.
    pub fn parse(spec: &str) -> Result<Self, RingError> {
        let bad = || RingError::MalformedSpec(spec.to_string());
        if let Some(rest) = spec.strip_prefix("Z/") {
            let n: u64 = rest.parse().map_err(|_| bad())?;
            return Self::zmod(n);
        }
        let rest = spec.strip_prefix("GF(").ok_or_else(bad)?;
        let (pn, coeffs) = rest.split_once("):").ok_or_else(bad)?;
        let (p, n) = pn.split_once('^').ok_or_else(bad)?;
        let p: u64 = p.parse().map_err(|_| bad())?;
        let n: usize = n.parse().map_err(|_| bad())?;
        let coeffs: Vec<u64> = coeffs
            .split(',')
            .map(|c| c.parse::<u64>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        if n == 0 || coeffs.len() != n + 1 {
            return Err(bad());
        }
        if !arith::is_prime(p) {
            return Err(RingError::CompositeP(p));
        }
        Self::gf(p, &coeffs)
    }

    /// Same ring with a different iteration cap.
    pub fn with_iteration_cap(&self, cap: u64) -> Self {
        FiniteRing { inner: Arc::clone(&self.inner), cap }
    }

    pub fn iteration_cap(&self) -> u64 {
        self.cap
    }

    pub fn kind(&self) -> &RingKind {
        &self.inner.kind
    }

    pub fn cardinality(&self) -> u64 {
        self.inner.card
    }

    pub fn characteristic(&self) -> u64 {
        match self.inner.kind {
            RingKind::ZMod { n } => n,
            RingKind::Gf { p, .. } => p,
        }
    }

    pub fn is_field(&self) -> bool {
        match self.inner.kind {
            RingKind::ZMod { n } => arith::is_prime(n),
            RingKind::Gf { .. } => true,
        }
    }

    /// Canonical spec string, parseable by [`FiniteRing::parse`].
    pub fn spec(&self) -> String {
        match &self.inner.kind {
            RingKind::ZMod { n } => format!("Z/{n}"),
            RingKind::Gf { p, n, modpoly } => {
                let cs: Vec<String> = modpoly.iter().map(u64::to_string).collect();
                format!("GF({p}^{n}):{}", cs.join(","))
            }
        }
    }

    pub fn zero(&self) -> Element {
        Element(0)
    }

    pub fn one(&self) -> Element {
        Element(1)
    }

    pub fn minus_one(&self) -> Element {
        self.neg(self.one())
    }

    /// Image of an integer in the ring.
    pub fn from_int(&self, v: i128) -> Element {
        let m = self.characteristic() as i128;
        Element(v.rem_euclid(m) as u64)
    }

    /// Element with the given ascending coefficients (reduced mod p).
    /// For Z/NZ only a single coefficient is accepted.
    pub fn from_coeffs(&self, coeffs: &[i128]) -> Result<Element, RingError> {
        match &self.inner.kind {
            RingKind::ZMod { .. } => match coeffs {
                [] => Ok(self.zero()),
                [c] => Ok(self.from_int(*c)),
                _ => Err(RingError::MalformedElement(format!("{coeffs:?}"))),
            },
            RingKind::Gf { p, n, .. } => {
                if coeffs.len() > *n as usize {
                    return Err(RingError::MalformedElement(format!("{coeffs:?}")));
                }
                let mut code = 0u64;
                for &c in coeffs.iter().rev() {
                    code = code * p + c.rem_euclid(*p as i128) as u64;
                }
                Ok(Element(code))
            }
        }
    }

    /// The generator X of GF(p^n) (or 0 in Z/NZ when n is not defined).
    pub fn x(&self) -> Element {
        match &self.inner.kind {
            RingKind::Gf { p, n, .. } if *n > 1 => Element(*p),
            RingKind::Gf { modpoly, p, .. } => Element((p - modpoly[0]) % p),
            RingKind::ZMod { .. } => self.zero(),
        }
    }

    /// Ascending coefficients (length n for GF, length 1 for Z/NZ).
    pub fn coeffs(&self, x: Element) -> Vec<u64> {
        match &self.inner.kind {
            RingKind::ZMod { .. } => vec![x.0],
            RingKind::Gf { p, n, .. } => {
                let mut c = x.0;
                (0..*n)
                    .map(|_| {
                        let d = c % p;
                        c /= p;
                        d
                    })
                    .collect()
            }
        }
    }

    /// Checks that `x` is a valid element of this ring.
    pub fn element(&self, code: u64) -> Result<Element, RingError> {
        if code < self.inner.card {
            Ok(Element(code))
        } else {
            Err(RingError::RingMismatch)
        }
    }

    pub fn check(&self, xs: &[Element]) -> Result<(), RingError> {
        if xs.iter().all(|x| x.0 < self.inner.card) {
            Ok(())
        } else {
            Err(RingError::RingMismatch)
        }
    }

    /// All elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + Clone {
        (0..self.inner.card).map(Element)
    }

    pub fn units(&self) -> impl Iterator<Item = Element> + '_ {
        self.elements().filter(move |&x| self.is_unit(x))
    }

    fn tables(&self) -> Option<&Tables> {
        match &self.inner.kind {
            RingKind::Gf { .. } if self.inner.card <= TABLE_LIMIT => {
                Some(self.inner.tables.get_or_init(|| self.build_tables()))
            }
            _ => None,
        }
    }

    fn build_tables(&self) -> Tables {
        let q = self.inner.card as usize;
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = self.add_raw(Element(a as u64), Element(b as u64)).0 as u16;
                mul[a * q + b] = self.mul_raw(Element(a as u64), Element(b as u64)).0 as u16;
            }
        }
        Tables { add, mul }
    }

    fn add_raw(&self, x: Element, y: Element) -> Element {
        match &self.inner.kind {
            RingKind::ZMod { n } => {
                let s = x.0 as u128 + y.0 as u128;
                Element((s % *n as u128) as u64)
            }
            RingKind::Gf { p: 2, .. } => Element(x.0 ^ y.0),
            RingKind::Gf { p, n, .. } => {
                let (mut a, mut b) = (x.0, y.0);
                let mut out = 0u64;
                let mut place = 1u64;
                for i in 0..*n {
                    let d = (a % p + b % p) % p;
                    out += d * place;
                    a /= p;
                    b /= p;
                    if i + 1 < *n {
                        place *= p;
                    }
                }
                Element(out)
            }
        }
    }

    fn mul_raw(&self, x: Element, y: Element) -> Element {
        match &self.inner.kind {
            RingKind::ZMod { n } => Element(arith::mulmod(x.0, y.0, *n)),
            RingKind::Gf { p: 2, n, modpoly } => {
                let mut prod: u128 = 0;
                let b = y.0 as u128;
                let mut a = x.0;
                let mut shift = 0;
                while a != 0 {
                    if a & 1 == 1 {
                        prod ^= b << shift;
                    }
                    a >>= 1;
                    shift += 1;
                }
                let n = *n as usize;
                let mut f: u128 = 0;
                for (i, &c) in modpoly.iter().enumerate() {
                    f |= (c as u128) << i;
                }
                for k in (n..2 * n).rev() {
                    if prod >> k & 1 == 1 {
                        prod ^= f << (k - n);
                    }
                }
                Element(prod as u64)
            }
            RingKind::Gf { p, n, modpoly } => {
                let n = *n as usize;
                let p = *p;
                let a = self.coeffs(x);
                let b = self.coeffs(y);
                let mut prod = [0u64; 128];
                for i in 0..n {
                    if a[i] == 0 {
                        continue;
                    }
                    for j in 0..n {
                        let t = arith::mulmod(a[i], b[j], p);
                        prod[i + j] = (prod[i + j] + t) % p;
                    }
                }
                for k in (n..2 * n - 1).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    for i in 0..n {
                        let t = arith::mulmod(c, modpoly[i], p);
                        prod[k - n + i] = (prod[k - n + i] + p - t) % p;
                    }
                }
                let mut code = 0u64;
                for i in (0..n).rev() {
                    code = code * p + prod[i];
                }
                Element(code)
            }
        }
    }

    pub fn add(&self, x: Element, y: Element) -> Element {
        if let Some(t) = self.tables() {
            let q = self.inner.card as usize;
            return Element(t.add[x.0 as usize * q + y.0 as usize] as u64);
        }
        self.add_raw(x, y)
    }

    pub fn mul(&self, x: Element, y: Element) -> Element {
        if let Some(t) = self.tables() {
            let q = self.inner.card as usize;
            return Element(t.mul[x.0 as usize * q + y.0 as usize] as u64);
        }
        self.mul_raw(x, y)
    }

    pub fn neg(&self, x: Element) -> Element {
        match &self.inner.kind {
            RingKind::ZMod { n } => Element((n - x.0) % n),
            RingKind::Gf { p: 2, .. } => x,
            RingKind::Gf { p, .. } => {
                let cs = self.coeffs(x);
                let mut code = 0u64;
                for &c in cs.iter().rev() {
                    code = code * p + (p - c) % p;
                }
                Element(code)
            }
        }
    }

    pub fn sub(&self, x: Element, y: Element) -> Element {
        self.add(x, self.neg(y))
    }

    pub fn pow(&self, x: Element, mut k: u64) -> Element {
        let mut result = self.one();
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    pub fn is_unit(&self, x: Element) -> bool {
        match self.inner.kind {
            RingKind::ZMod { n } => arith::gcd(x.0, n) == 1,
            RingKind::Gf { .. } => x.0 != 0,
        }
    }

    pub fn inv(&self, x: Element) -> Result<Element, RingError> {
        match self.inner.kind {
            RingKind::ZMod { n } => {
                let (g, s, _) = arith::ext_gcd(x.0 as i128, n as i128);
                if g != 1 {
                    return Err(RingError::NotAUnit);
                }
                Ok(Element(s.rem_euclid(n as i128) as u64))
            }
            RingKind::Gf { .. } => {
                if x.0 == 0 {
                    return Err(RingError::NotAUnit);
                }
                Ok(self.pow(x, self.inner.card - 2))
            }
        }
    }

    /// Order of the unit group: phi(N) or q-1.
    pub fn unit_count(&self) -> u64 {
        *self.inner.unit_count.get_or_init(|| match self.inner.kind {
            RingKind::ZMod { n } => arith::euler_phi(n).expect("n >= 2"),
            RingKind::Gf { .. } => self.inner.card - 1,
        })
    }

    fn unit_primes(&self) -> &[u64] {
        self.inner.unit_primes.get_or_init(|| arith::distinct_prime_factors(self.unit_count()))
    }

    /// Smallest k >= 1 with x^k = 1.
    pub fn element_order(&self, x: Element) -> Result<u64, RingError> {
        self.check(&[x])?;
        if !self.is_unit(x) {
            return Err(RingError::NotAUnit);
        }
        let mut e = self.unit_count();
        for &r in self.unit_primes() {
            while e.is_multiple_of(r) && self.pow(x, e / r) == self.one() {
                e /= r;
            }
        }
        debug_assert_eq!(self.pow(x, e), self.one());
        Ok(e)
    }

    /// Whether `x` generates the multiplicative group of a field.
    pub fn is_generator(&self, x: Element) -> Result<bool, RingError> {
        if !self.is_field() {
            return Err(RingError::NotAField);
        }
        self.check(&[x])?;
        if x == self.zero() {
            return Ok(false);
        }
        let q1 = self.unit_count();
        Ok(self.unit_primes().iter().all(|&r| self.pow(x, q1 / r) != self.one()))
    }

    /// Generators of the multiplicative group, in enumeration order.
    pub fn generators(&self) -> Result<Vec<Element>, RingError> {
        if !self.is_field() {
            return Err(RingError::NotAField);
        }
        Ok(self.elements().filter(|&x| self.is_generator(x).unwrap_or(false)).collect())
    }

    /// Serialized form: decimal for Z/NZ, `[c0,c1,...]` for GF.
    pub fn format(&self, x: Element) -> String {
        match self.inner.kind {
            RingKind::ZMod { .. } => x.0.to_string(),
            RingKind::Gf { .. } => {
                let cs: Vec<String> = self.coeffs(x).iter().map(u64::to_string).collect();
                format!("[{}]", cs.join(","))
            }
        }
    }

    /// Polynomial notation such as `2X^2+X+1`.
    pub fn display(&self, x: Element) -> String {
        if let RingKind::ZMod { .. } = self.inner.kind {
            return x.0.to_string();
        }
        let cs = self.coeffs(x);
        let mut terms = Vec::new();
        for (i, &c) in cs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}X"),
                _ => format!("{coef}X^{i}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Inverse of [`FiniteRing::format`]; also accepts a bare integer for GF.
    pub fn parse_element(&self, s: &str) -> Result<Element, RingError> {
        let bad = || RingError::MalformedElement(s.to_string());
        let s = s.trim();
        if let Some(body) = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            if let RingKind::ZMod { .. } = self.inner.kind {
                return Err(bad());
            }
            let coeffs: Vec<i128> = if body.trim().is_empty() {
                Vec::new()
            } else {
                body.split(',')
                    .map(|c| c.trim().parse::<i128>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| bad())?
            };
            return self.from_coeffs(&coeffs).map_err(|_| bad());
        }
        let v: i128 = s.parse().map_err(|_| bad())?;
        Ok(self.from_int(v))
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

/// The sign of a solution: `M_n = sign * Id`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn to_element(self, ring: &FiniteRing) -> Element {
        match self {
            Sign::Plus => ring.one(),
            Sign::Minus => ring.minus_one(),
        }
    }
}

/// A 2x2 matrix over a [`FiniteRing`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mat2 {
    pub a11: Element,
    pub a12: Element,
    pub a21: Element,
    pub a22: Element,
}

impl Mat2 {
    pub fn identity(ring: &FiniteRing) -> Mat2 {
        Mat2 { a11: ring.one(), a12: ring.zero(), a21: ring.zero(), a22: ring.one() }
    }

    pub fn scalar(ring: &FiniteRing, s: Element) -> Mat2 {
        Mat2 { a11: s, a12: ring.zero(), a21: ring.zero(), a22: s }
    }

    /// `M_1(a) = [[a, -1], [1, 0]]`.
    pub fn m1(ring: &FiniteRing, a: Element) -> Mat2 {
        Mat2 { a11: a, a12: ring.minus_one(), a21: ring.one(), a22: ring.zero() }
    }

    pub fn mul(&self, ring: &FiniteRing, o: &Mat2) -> Mat2 {
        let r = ring;
        Mat2 {
            a11: r.add(r.mul(self.a11, o.a11), r.mul(self.a12, o.a21)),
            a12: r.add(r.mul(self.a11, o.a12), r.mul(self.a12, o.a22)),
            a21: r.add(r.mul(self.a21, o.a11), r.mul(self.a22, o.a21)),
            a22: r.add(r.mul(self.a21, o.a12), r.mul(self.a22, o.a22)),
        }
    }

    /// Left multiplication by `M_1(a)`, i.e. `M_1(a) * self`.
    pub fn push(&self, ring: &FiniteRing, a: Element) -> Mat2 {
        let r = ring;
        Mat2 {
            a11: r.sub(r.mul(a, self.a11), self.a21),
            a12: r.sub(r.mul(a, self.a12), self.a22),
            a21: self.a11,
            a22: self.a12,
        }
    }

    pub fn pow(&self, ring: &FiniteRing, mut k: u64) -> Mat2 {
        let mut result = Mat2::identity(ring);
        let mut base = *self;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(ring, &base);
            }
            base = base.mul(ring, &base);
            k >>= 1;
        }
        result
    }

    pub fn det(&self, ring: &FiniteRing) -> Element {
        ring.sub(ring.mul(self.a11, self.a22), ring.mul(self.a12, self.a21))
    }

    /// `Some(sign)` when the matrix is `sign * Id`. In characteristic 2 this is `Plus`.
    pub fn pm_identity(&self, ring: &FiniteRing) -> Option<Sign> {
        if self.a12 != ring.zero() || self.a21 != ring.zero() || self.a11 != self.a22 {
            return None;
        }
        if self.a11 == ring.one() {
            Some(Sign::Plus)
        } else if self.a11 == ring.minus_one() {
            Some(Sign::Minus)
        } else {
            None
        }
    }
}

/// Smallest k >= 1 with `m^k = ±Id`, bounded by the ring's iteration cap.
pub fn pm_order(ring: &FiniteRing, m: &Mat2) -> Result<(u64, Sign), RingError> {
    let mut acc = *m;
    for k in 1..=ring.iteration_cap() {
        if let Some(s) = acc.pm_identity(ring) {
            return Ok((k, s));
        }
        acc = acc.mul(ring, m);
    }
    Err(RingError::OrderCapExceeded(ring.iteration_cap()))
}
