//! Bounds on ℓ, the maximal size of an irreducible solution, and the
//! prime-indexed scans behind them.

use rayon::prelude::*;
use thiserror::Error;

use crate::arith::{self, ArithError};
use crate::families::{
    self, monomial_bound_witness, monomial_minimal, quadrinomial_minimal, trinomial_minimal,
    trinomial_root, trinomial_size, FamilyError, FamilyReport,
};
use crate::ring_core::{Element, FiniteRing, RingError, RingKind};

/// Largest field handled by [`ell_lower_bound`].
pub const LOWER_BOUND_LIMIT: u64 = 1 << 20;

/// Default survivor budget for [`ell_upper_bound_search`].
pub const DEFAULT_SURVIVOR_CAP: usize = 10_000_000;

/// Upper end of [`verify_generator_conjecture`] ranges.
pub const CONJECTURE_LIMIT: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("field too large")]
    TooLarge,
    #[error("{0} is not prime")]
    PNotPrime(u64),
    #[error("range exceeds the supported bound")]
    RangeTooLarge,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Strategy that produced a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerStrategy {
    MonomialWitness,
    Trinomial,
    TwoMonomial,
    Floor,
}

impl LowerStrategy {
    pub fn label(self) -> &'static str {
        match self {
            LowerStrategy::MonomialWitness => "monomial-witness",
            LowerStrategy::Trinomial => "trinomial",
            LowerStrategy::TwoMonomial => "two-monomial",
            LowerStrategy::Floor => "floor",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllBound {
    pub ring: FiniteRing,
    pub lower: u64,
    pub strategy: LowerStrategy,
    pub lower_witness: FamilyReport,
    pub upper: Option<u64>,
}

fn consider(best: &mut Option<(LowerStrategy, FamilyReport)>, s: LowerStrategy, rep: FamilyReport) {
    if !rep.irreducible {
        return;
    }
    if best.as_ref().is_none_or(|(_, b)| rep.size > b.size) {
        *best = Some((s, rep));
    }
}

/// Best lower bound on ℓ over a field from the family witnesses.
pub fn ell_lower_bound(field: &FiniteRing) -> Result<EllBound, BoundsError> {
    if !field.is_field() {
        return Err(RingError::NotAField.into());
    }
    let q = field.cardinality();
    if q > LOWER_BOUND_LIMIT {
        return Err(BoundsError::TooLarge);
    }
    let mut best: Option<(LowerStrategy, FamilyReport)> = None;

    let floor = quadrinomial_minimal(field, field.zero(), field.zero())?;
    consider(&mut best, LowerStrategy::Floor, floor);

    let (y, _) = monomial_bound_witness(field)?;
    consider(&mut best, LowerStrategy::MonomialWitness, monomial_minimal(field, y)?);

    if field.characteristic() > 2 {
        let two = monomial_minimal(field, field.from_int(2))?;
        consider(&mut best, LowerStrategy::TwoMonomial, two);
    }

    if let Some(u) = best_trinomial(field)? {
        consider(&mut best, LowerStrategy::Trinomial, trinomial_minimal(field, u)?);
    }

    let (strategy, witness) = best.expect("the floor witness is irreducible");
    Ok(EllBound { ring: field.clone(), lower: witness.size as u64, strategy, lower_witness: witness, upper: None })
}

/// Unit u of order q-1 or (q-1)/2 with the largest irreducible trinomial solution.
fn best_trinomial(field: &FiniteRing) -> Result<Option<Element>, BoundsError> {
    let q1 = field.cardinality() - 1;
    let top = trinomial_size(field, q1);
    let mut best: Option<(u64, Element)> = None;
    for u in field.elements().skip(1) {
        if u == field.one() || u == field.minus_one() {
            continue;
        }
        let o = field.element_order(u)?;
        if o != q1 && 2 * o != q1 {
            continue;
        }
        let m = trinomial_size(field, o);
        if best.is_some_and(|(s, _)| s >= m) {
            continue;
        }
        if trinomial_root(field, u, m / 6).is_none() {
            best = Some((m, u));
            if m == top {
                break;
            }
        }
    }
    Ok(best.map(|(_, u)| u))
}

/// Result of the survivor search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperSearch {
    /// `counts[n]` is the number of length-n survivors (index 0 unused).
    pub counts: Vec<u64>,
    /// Smallest length with no survivors.
    pub cutoff: Option<usize>,
    /// `cutoff + 2` when the search completed.
    pub upper: Option<u64>,
    /// Set when the survivor budget stopped the search.
    pub budget_exhausted: bool,
}

/// Length-`len` tuples over the elements outside {0, 1, -1} none of whose
/// contiguous windows has continuant ±1, in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurvivorSet {
    pub len: usize,
    pub tuples: Vec<Vec<Element>>,
}

/// Largest field accepted by the survivor search; entries are stored as
/// one-byte alphabet indices.
pub const SURVIVOR_FIELD_LIMIT: u64 = 256;

/// Parents handed to the worker pool per round, so the cap is checked
/// before a level can grow far past it.
const CHUNK: usize = 1 << 14;

/// One level of the search: tuples of a fixed width stored back to back as
/// indices into the alphabet.
struct Level {
    width: usize,
    data: Vec<u8>,
}

impl Level {
    fn len(&self) -> usize {
        self.data.len().checked_div(self.width).unwrap_or(0)
    }
}

struct Searcher<'a> {
    field: &'a FiniteRing,
    alphabet: Vec<Element>,
}

impl<'a> Searcher<'a> {
    fn new(field: &'a FiniteRing) -> Result<Self, BoundsError> {
        if !field.is_field() {
            return Err(RingError::NotAField.into());
        }
        if field.cardinality() > SURVIVOR_FIELD_LIMIT {
            return Err(BoundsError::TooLarge);
        }
        Ok(Searcher { field, alphabet: upper_alphabet(field) })
    }

    fn first(&self) -> Level {
        Level { width: 1, data: (0..self.alphabet.len() as u8).collect() }
    }

    /// Extends every survivor by one letter, or `None` once more than `cap`
    /// survivors are produced.
    fn extend(&self, level: &Level, cap: usize) -> Option<Level> {
        let w = level.width;
        let mut data = Vec::new();
        for chunk in level.data.chunks(CHUNK * w) {
            let parts: Vec<Vec<u8>> = chunk
                .par_chunks(w)
                .map(|t| {
                    let mut out = Vec::new();
                    for (i, &a) in self.alphabet.iter().enumerate() {
                        if !self.suffix_hits_unit_sign(t, a) {
                            out.extend_from_slice(t);
                            out.push(i as u8);
                        }
                    }
                    out
                })
                .collect();
            for p in parts {
                data.extend_from_slice(&p);
            }
            if data.len() / (w + 1) > cap {
                return None;
            }
        }
        Some(Level { width: w + 1, data })
    }

    /// Whether some suffix of `t` followed by `last` has continuant ±1.
    fn suffix_hits_unit_sign(&self, t: &[u8], last: Element) -> bool {
        let f = self.field;
        let (one, minus_one) = (f.one(), f.minus_one());
        let (mut prev, mut cur) = (f.one(), last);
        if cur == one || cur == minus_one {
            return true;
        }
        for &i in t.iter().rev() {
            (prev, cur) = (cur, f.sub(f.mul(self.alphabet[i as usize], cur), prev));
            if cur == one || cur == minus_one {
                return true;
            }
        }
        false
    }

    fn decode(&self, level: &Level) -> Vec<Vec<Element>> {
        level
            .data
            .chunks(level.width)
            .map(|t| t.iter().map(|&i| self.alphabet[i as usize]).collect())
            .collect()
    }
}

/// Iterative deepening over the survivor sets until a length has none.
pub fn ell_upper_bound_search(field: &FiniteRing, n_max: usize, survivor_cap: usize) -> Result<UpperSearch, BoundsError> {
    let s = Searcher::new(field)?;
    let mut counts = vec![0u64];
    let mut level = s.first();
    let mut n = 1;
    loop {
        counts.push(level.len() as u64);
        if level.len() == 0 {
            let upper = if n >= 2 { Some(n as u64 + 2) } else { None };
            return Ok(UpperSearch { counts, cutoff: Some(n), upper, budget_exhausted: false });
        }
        if n >= n_max {
            return Ok(UpperSearch { counts, cutoff: None, upper: None, budget_exhausted: false });
        }
        match s.extend(&level, survivor_cap) {
            Some(next) => level = next,
            None => return Ok(UpperSearch { counts, cutoff: None, upper: None, budget_exhausted: true }),
        }
        n += 1;
    }
}

/// The survivor set of length `len`, or `None` when some level exceeds `survivor_cap`.
pub fn survivor_set(field: &FiniteRing, len: usize, survivor_cap: usize) -> Result<Option<SurvivorSet>, BoundsError> {
    let s = Searcher::new(field)?;
    if len == 0 {
        return Ok(Some(SurvivorSet { len, tuples: vec![Vec::new()] }));
    }
    let mut level = s.first();
    while level.width < len && level.len() > 0 {
        match s.extend(&level, survivor_cap) {
            Some(next) => level = next,
            None => return Ok(None),
        }
    }
    let tuples = if level.width == len { s.decode(&level) } else { Vec::new() };
    Ok(Some(SurvivorSet { len, tuples }))
}

/// Elements outside {0, 1, -1}, in enumeration order.
pub fn upper_alphabet(field: &FiniteRing) -> Vec<Element> {
    let excluded = [field.zero(), field.one(), field.minus_one()];
    field.elements().filter(|x| !excluded.contains(x)).collect()
}

fn require_odd_prime(p: u64) -> Result<FiniteRing, BoundsError> {
    if p < 3 || !arith::is_prime(p) {
        return Err(BoundsError::PNotPrime(p));
    }
    Ok(FiniteRing::zmod(p)?)
}

/// Pairs `1 < a < b < p-1` with both Δ₁ and Δ₂ non-squares mod p.
pub fn scan_dynomial_pairs(p: u64) -> Result<Vec<(u64, u64)>, BoundsError> {
    let field = require_odd_prime(p)?;
    let rows: Vec<Vec<(u64, u64)>> = (2..p.saturating_sub(2))
        .into_par_iter()
        .map(|a| {
            let mut row = Vec::new();
            for b in a + 1..p - 1 {
                let (ea, eb) = (field.from_int(a as i128), field.from_int(b as i128));
                let (d1, d2) = families::dynomial_deltas(&field, ea, eb).expect("units");
                let non_square = |d: Element| {
                    arith::legendre(d.code() as i128, p).map(|s| s.as_i8() == -1).unwrap_or(false)
                };
                if non_square(d1) && non_square(d2) {
                    row.push((a, b));
                }
            }
            row
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}

/// `x ∈ [2, (p-1)/2]` whose x-trinomial minimal solution is irreducible.
pub fn scan_trinomial(p: u64) -> Result<Vec<u64>, BoundsError> {
    let field = require_odd_prime(p)?;
    if p < 5 {
        return Ok(Vec::new());
    }
    let xs: Vec<u64> = (2..=(p - 1) / 2).collect();
    let keep: Vec<bool> = xs
        .par_iter()
        .map(|&x| {
            let u = field.from_int(x as i128);
            let o = field.element_order(u).expect("nonzero mod p");
            trinomial_root(&field, u, trinomial_size(&field, o) / 6).is_none()
        })
        .collect();
    Ok(xs.into_iter().zip(keep).filter_map(|(x, k)| k.then_some(x)).collect())
}

/// First generator `j >= 2` of (Z/pZ)* with `j² + 4` a non-square.
pub fn conjecture_witness(p: u64) -> Result<Option<u64>, BoundsError> {
    let field = require_odd_prime(p)?;
    for j in 2..p.saturating_sub(1) {
        let u = field.from_int(j as i128);
        if !field.is_generator(u)? {
            continue;
        }
        let v = (j as u128 * j as u128 + 4) % p as u128;
        if arith::legendre(v as i128, p)?.as_i8() == -1 {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

/// Witness for every prime in (a, b], ascending.
pub fn conjecture_witnesses(a: u64, b: u64) -> Result<Vec<(u64, Option<u64>)>, BoundsError> {
    if a < 2 || a >= b || b > CONJECTURE_LIMIT {
        return Err(BoundsError::RangeTooLarge);
    }
    let primes: Vec<u64> = (a + 1..=b).filter(|&p| p > 2 && arith::is_prime(p)).collect();
    primes
        .par_iter()
        .map(|&p| Ok((p, conjecture_witness(p)?)))
        .collect()
}

/// Primes in (a, b] with no generator j such that j² + 4 is a non-square.
pub fn verify_generator_conjecture(a: u64, b: u64) -> Result<Vec<u64>, BoundsError> {
    Ok(conjecture_witnesses(a, b)?
        .into_iter()
        .filter_map(|(p, w)| w.is_none().then_some(p))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Char2Bound {
    pub n: u32,
    pub generator: Option<Element>,
    pub size: Option<u64>,
    /// n odd, n != 1 and 2^n - 1 squarefree.
    pub odd_squarefree: bool,
    /// phi(2^n - 1) >= 2^(n-1).
    pub phi_condition: bool,
}

/// First generator of GF(2^n)* whose trinomial solution is irreducible.
pub fn char2_generator_bound(n: u32, modpoly: &[u64]) -> Result<Char2Bound, BoundsError> {
    if !(2..=16).contains(&n) || modpoly.len() != n as usize + 1 {
        return Err(BoundsError::TooLarge);
    }
    let field = FiniteRing::gf(2, modpoly)?;
    let q1 = field.cardinality() - 1;
    let f = arith::mersenne_factorization(n)?;
    let odd_squarefree = n % 2 == 1 && f.is_squarefree();
    let phi_condition = f.phi() >= 1u128 << (n - 1);
    let m = trinomial_size(&field, q1);
    let mut generator = None;
    for u in field.elements().skip(2) {
        if field.is_generator(u)? && trinomial_root(&field, u, m / 6).is_none() {
            generator = Some(u);
            break;
        }
    }
    let size = generator.map(|_| m);
    Ok(Char2Bound { n, generator, size, odd_squarefree, phi_condition })
}

/// Upper bound from the group order: |SL₂(A)|/|A| + 2 in characteristic 2,
/// |SL₂(A)|/(2|A|) + 2 otherwise.
pub fn ell_theoretic_upper(ring: &FiniteRing) -> u128 {
    let card = ring.cardinality() as u128;
    let sl2 = match ring.kind() {
        RingKind::Gf { .. } => card * (card * card - 1),
        RingKind::ZMod { n } => {
            let mut s = card * card * card;
            for p in arith::distinct_prime_factors(*n) {
                let p = p as u128;
                s = s / (p * p) * (p * p - 1);
            }
            s
        }
    };
    if ring.characteristic() == 2 {
        sl2 / card + 2
    } else {
        sl2 / (2 * card) + 2
    }
}
