//! Brute-force reference arithmetic shared by the integration tests.
//!
//! Nothing here calls into the library's arithmetic: elements are plain
//! coefficient vectors, products are schoolbook polynomial products reduced
//! by long division, and every decision is made by exhaustive enumeration.

#![allow(dead_code)]

use quiddity_lab::ring_core::{Element, FiniteRing, RingKind};

/// A ring described independently of the library: Z/NZ (`deg = 1`, `m = N`)
/// or F_p[X]/(f) with `f` monic of degree `deg`.
#[derive(Debug, Clone)]
pub struct Oracle {
    pub m: u64,
    pub deg: usize,
    pub modpoly: Vec<u64>,
}

pub type OElt = Vec<u64>;

impl Oracle {
    pub fn of(ring: &FiniteRing) -> Oracle {
        match ring.kind() {
            RingKind::ZMod { n } => Oracle { m: *n, deg: 1, modpoly: vec![0, 1] },
            RingKind::Gf { p, n, modpoly } => Oracle { m: *p, deg: *n as usize, modpoly: modpoly.clone() },
        }
    }

    pub fn card(&self) -> u64 {
        self.m.pow(self.deg as u32)
    }

    pub fn zero(&self) -> OElt {
        vec![0; self.deg]
    }

    pub fn one(&self) -> OElt {
        let mut v = self.zero();
        v[0] = 1 % self.m;
        v
    }

    pub fn int(&self, k: i64) -> OElt {
        let mut v = self.zero();
        v[0] = k.rem_euclid(self.m as i64) as u64;
        v
    }

    pub fn add(&self, a: &OElt, b: &OElt) -> OElt {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.m).collect()
    }

    pub fn neg(&self, a: &OElt) -> OElt {
        a.iter().map(|x| (self.m - x) % self.m).collect()
    }

    pub fn sub(&self, a: &OElt, b: &OElt) -> OElt {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &OElt, b: &OElt) -> OElt {
        let m = self.m as u128;
        let mut prod = vec![0u128; 2 * self.deg];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + *x as u128 * *y as u128) % m;
            }
        }
        // Long division by the monic modulus, highest degree first.
        for k in (self.deg..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (i, f) in self.modpoly.iter().enumerate() {
                let idx = k - self.deg + i;
                prod[idx] = (prod[idx] + m * m - c * *f as u128 % m) % m;
            }
        }
        prod[..self.deg].iter().map(|&c| c as u64).collect()
    }

    pub fn pow(&self, a: &OElt, k: u64) -> OElt {
        let mut r = self.one();
        for _ in 0..k {
            r = self.mul(&r, a);
        }
        r
    }

    /// All elements, in the same order as the library enumerates them.
    pub fn elements(&self) -> Vec<OElt> {
        (0..self.card())
            .map(|mut c| {
                (0..self.deg)
                    .map(|_| {
                        let d = c % self.m;
                        c /= self.m;
                        d
                    })
                    .collect()
            })
            .collect()
    }

    pub fn to_lib(&self, ring: &FiniteRing, a: &OElt) -> Element {
        let cs: Vec<i128> = a.iter().map(|&c| c as i128).collect();
        ring.from_coeffs(&cs).unwrap()
    }

    pub fn from_lib(&self, ring: &FiniteRing, x: Element) -> OElt {
        ring.coeffs(x)
    }

    pub fn is_unit(&self, a: &OElt) -> bool {
        self.elements().iter().any(|b| self.mul(a, b) == self.one())
    }

    pub fn inv(&self, a: &OElt) -> Option<OElt> {
        self.elements().into_iter().find(|b| self.mul(a, b) == self.one())
    }

    /// Multiplicative order by repeated multiplication.
    pub fn order(&self, a: &OElt) -> u64 {
        let mut x = a.clone();
        let mut k = 1;
        while x != self.one() {
            x = self.mul(&x, a);
            k += 1;
            assert!(k <= self.card(), "not a unit");
        }
        k
    }

    pub fn squares(&self) -> Vec<OElt> {
        let mut s: Vec<OElt> = self.elements().iter().map(|y| self.mul(y, y)).collect();
        s.sort_by_key(|v| v.iter().rev().copied().collect::<Vec<_>>());
        s.dedup();
        s
    }

    pub fn is_square(&self, a: &OElt) -> bool {
        self.elements().iter().any(|y| &self.mul(y, y) == a)
    }
}

/// 2x2 matrix as `[a11, a12, a21, a22]`.
pub type OMat = [OElt; 4];

impl Oracle {
    pub fn mat_mul(&self, x: &OMat, y: &OMat) -> OMat {
        let e = |a: &OElt, b: &OElt, c: &OElt, d: &OElt| self.add(&self.mul(a, b), &self.mul(c, d));
        [
            e(&x[0], &y[0], &x[1], &y[2]),
            e(&x[0], &y[1], &x[1], &y[3]),
            e(&x[2], &y[0], &x[3], &y[2]),
            e(&x[2], &y[1], &x[3], &y[3]),
        ]
    }

    pub fn m1(&self, a: &OElt) -> OMat {
        [a.clone(), self.neg(&self.one()), self.one(), self.zero()]
    }

    /// `M_1(a_n) ... M_1(a_1)` as a literal matrix product.
    pub fn m_matrix(&self, t: &[OElt]) -> OMat {
        let mut acc = [self.one(), self.zero(), self.zero(), self.one()];
        for a in t {
            acc = self.mat_mul(&self.m1(a), &acc);
        }
        acc
    }

    /// Continuant as the top-left entry of the matrix product.
    pub fn continuant(&self, t: &[OElt]) -> OElt {
        self.m_matrix(t)[0].clone()
    }

    /// `Some(+1)` / `Some(-1)` when `M_n = ±Id` (+1 preferred in char 2).
    pub fn solution_sign(&self, t: &[OElt]) -> Option<i8> {
        if t.is_empty() {
            return None;
        }
        let m = self.m_matrix(t);
        let (z, one, mone) = (self.zero(), self.one(), self.neg(&self.one()));
        if m[1] != z || m[2] != z || m[0] != m[3] {
            return None;
        }
        if m[0] == one {
            Some(1)
        } else if m[0] == mone {
            Some(-1)
        } else {
            None
        }
    }

    pub fn is_solution(&self, t: &[OElt]) -> bool {
        self.solution_sign(t).is_some()
    }

    /// Every rotation of `t` and of its reversal.
    pub fn rotations(&self, t: &[OElt]) -> Vec<Vec<OElt>> {
        let n = t.len();
        let rev: Vec<OElt> = t.iter().rev().cloned().collect();
        let mut out = Vec::new();
        for src in [t.to_vec(), rev] {
            for s in 0..n {
                out.push((0..n).map(|i| src[(s + i) % n].clone()).collect());
            }
        }
        out
    }

    /// Brute-force reducibility: is `t ~ a ⊕ b` for solutions a, b of size >= 3?
    ///
    /// For a fixed rotation r and summand size l the interior entries of both
    /// parts are read off r; the two free boundary entries b_1, b_l are tried
    /// exhaustively.
    pub fn reducible_brute(&self, t: &[OElt]) -> bool {
        let n = t.len();
        if n < 4 {
            return false;
        }
        let els = self.elements();
        for r in self.rotations(t) {
            for l in 3..=n - 1 {
                let m = n + 2 - l;
                for b1 in &els {
                    for bl in &els {
                        let mut b = vec![b1.clone()];
                        b.extend_from_slice(&r[m..n]);
                        b.push(bl.clone());
                        if !self.is_solution(&b) {
                            continue;
                        }
                        let mut a = vec![self.sub(&r[0], bl)];
                        a.extend_from_slice(&r[1..m - 1]);
                        a.push(self.sub(&r[m - 1], b1));
                        if self.is_solution(&a) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Smallest k >= 1 with `M^k = ±Id`, by repeated multiplication.
    pub fn pm_order(&self, m: &OMat) -> u64 {
        let (z, one, mone) = (self.zero(), self.one(), self.neg(&self.one()));
        let mut acc = m.clone();
        let mut k = 1;
        loop {
            if acc[1] == z && acc[2] == z && acc[0] == acc[3] && (acc[0] == one || acc[0] == mone) {
                return k;
            }
            acc = self.mat_mul(&acc, m);
            k += 1;
            assert!(k < 1_000_000);
        }
    }
}

/// Every tuple of length n over the oracle's elements.
pub fn all_tuples(o: &Oracle, n: usize) -> Vec<Vec<OElt>> {
    let els = o.elements();
    let mut out: Vec<Vec<OElt>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                els.iter().map(move |e| {
                    let mut u = t.clone();
                    u.push(e.clone());
                    u
                })
            })
            .collect();
    }
    out
}

pub fn lib_tuple(o: &Oracle, ring: &FiniteRing, t: &[OElt]) -> Vec<Element> {
    t.iter().map(|a| o.to_lib(ring, a)).collect()
}

pub fn ints(ring: &FiniteRing, xs: &[i64]) -> Vec<Element> {
    xs.iter().map(|&x| ring.from_int(x as i128)).collect()
}

/// Legendre symbol by quadratic reciprocity, for odd prime p.
pub fn legendre_reciprocity(a: i64, p: i64) -> i8 {
    let mut a = a.rem_euclid(p);
    let mut p = p;
    let mut sign = 1i8;
    if a == 0 {
        return 0;
    }
    // Jacobi-style reduction; p stays odd and the symbols agree for prime p.
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if p % 8 == 3 || p % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut p);
        if a % 4 == 3 && p % 4 == 3 {
            sign = -sign;
        }
        a %= p;
    }
    if p == 1 {
        sign
    } else {
        0
    }
}

pub fn is_prime_naive(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn gcd_naive(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_naive(b, a % b)
    }
}

pub fn phi_naive(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd_naive(k, n) == 1).count() as u64
}

pub fn moebius_naive(n: u64) -> i8 {
    let mut m = n;
    let mut k = 0;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return 0;
            }
            k += 1;
        }
        d += 1;
    }
    if m > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Fields of cardinality at most `qmax`, one per cardinality, with the
/// library's default modulus.
pub fn fields_up_to(qmax: u64) -> Vec<FiniteRing> {
    (2..=qmax).filter_map(|q| FiniteRing::field(q).ok()).collect()
}

/// Rings of cardinality at most `qmax`: every Z/N plus every non-prime field.
pub fn rings_up_to(qmax: u64) -> Vec<FiniteRing> {
    let mut out: Vec<FiniteRing> = (2..=qmax).map(|n| FiniteRing::zmod(n).unwrap()).collect();
    for q in 2..=qmax {
        if let Ok(f) = FiniteRing::field(q) {
            if !matches!(f.kind(), RingKind::ZMod { .. }) {
                out.push(f);
            }
        }
    }
    out
}

/// Operation tables built from the oracle's arithmetic, for exhaustive runs.
/// Elements are indices in enumeration order.
#[derive(Debug, Clone)]
pub struct Tab {
    pub q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    pub one: u16,
    pub mone: u16,
}

impl Oracle {
    pub fn index(&self, a: &OElt) -> u16 {
        a.iter().rev().fold(0u64, |acc, &c| acc * self.m + c) as u16
    }

    pub fn tab(&self) -> Tab {
        let els = self.elements();
        let q = els.len();
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for (i, a) in els.iter().enumerate() {
            for (j, b) in els.iter().enumerate() {
                add[i * q + j] = self.index(&self.add(a, b));
                mul[i * q + j] = self.index(&self.mul(a, b));
            }
        }
        let neg = els.iter().map(|a| self.index(&self.neg(a))).collect();
        let one = self.index(&self.one());
        let mone = self.index(&self.neg(&self.one()));
        Tab { q, add, mul, neg, one, mone }
    }
}

impl Tab {
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg[b as usize])
    }

    /// `M_1(a_n) ... M_1(a_1)` as `[a11, a12, a21, a22]`.
    pub fn mat(&self, t: &[u16]) -> [u16; 4] {
        let mut m = [self.one, 0, 0, self.one];
        for &a in t {
            // [[a, -1], [1, 0]] * m
            m = [
                self.sub(self.mul(a, m[0]), m[2]),
                self.sub(self.mul(a, m[1]), m[3]),
                m[0],
                m[1],
            ];
        }
        m
    }

    pub fn sign(&self, t: &[u16]) -> Option<i8> {
        let m = self.mat(t);
        if t.is_empty() || m[1] != 0 || m[2] != 0 || m[0] != m[3] {
            return None;
        }
        if m[0] == self.one {
            Some(1)
        } else if m[0] == self.mone {
            Some(-1)
        } else {
            None
        }
    }

    /// All solutions of size n, by enumerating all q^n tuples.
    pub fn solutions(&self, n: usize) -> Vec<Vec<u16>> {
        let total = (self.q as u64).pow(n as u32);
        let mut out = Vec::new();
        let mut t = vec![0u16; n];
        for mut c in 0..total {
            for slot in t.iter_mut() {
                *slot = (c % self.q as u64) as u16;
                c /= self.q as u64;
            }
            if self.sign(&t).is_some() {
                out.push(t.clone());
            }
        }
        out
    }
}

/// Decides reducibility by trying every decomposition against precomputed
/// solution sets of every smaller size.
pub struct BruteReducer {
    tab: Tab,
    sets: Vec<std::collections::HashSet<Vec<u16>>>,
}

impl BruteReducer {
    pub fn new(tab: &Tab, nmax: usize) -> BruteReducer {
        let mut sets = vec![std::collections::HashSet::new(); nmax];
        for (l, set) in sets.iter_mut().enumerate().skip(3) {
            set.extend(tab.solutions(l));
        }
        BruteReducer { tab: tab.clone(), sets }
    }

    pub fn reducible(&self, t: &[u16]) -> bool {
        let n = t.len();
        if n < 4 {
            return false;
        }
        let q = self.tab.q as u16;
        let rev: Vec<u16> = t.iter().rev().copied().collect();
        for src in [t, rev.as_slice()] {
            for s in 0..n {
                let r: Vec<u16> = (0..n).map(|i| src[(s + i) % n]).collect();
                for l in 3..n {
                    let m = n + 2 - l;
                    for b1 in 0..q {
                        for bl in 0..q {
                            let mut b = vec![b1];
                            b.extend_from_slice(&r[m..n]);
                            b.push(bl);
                            if !self.sets[l].contains(&b) {
                                continue;
                            }
                            let mut a = vec![self.tab.sub(r[0], bl)];
                            a.extend_from_slice(&r[1..m - 1]);
                            a.push(self.tab.sub(r[m - 1], b1));
                            if self.sets[m].contains(&a) {
                                return true;
                            }
                        }
                    }
                }
            }
        }
        false
    }
}
