//! Solutions of `M_n(a_1..a_n) = ±Id`, the sum `⊕`, the equivalence `~`,
//! and the decision procedure for reducibility.
//!
//! A solution of size n >= 4 is reducible exactly when some cyclic window of
//! length j, `1 <= j <= (n-2)/2`, has continuant ±1. Such a window is the
//! interior of a summand `(x, window, y)` obtained from
//! [`extend_to_solution`](crate::continuant::extend_to_solution).

use thiserror::Error;

use crate::continuant::{continuant_unchecked, extend_to_solution, m_matrix_unchecked};
use crate::ring_core::{Element, FiniteRing, RingError, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiddityError {
    #[error("tuple is not a solution")]
    NotASolution,
    #[error("tuples must have at least two entries")]
    TooShort,
    #[error("reducibility is not defined for size {0}")]
    NotApplicable(usize),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A verified solution together with its sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiddityTuple {
    ring: FiniteRing,
    entries: Vec<Element>,
    sign: Sign,
}

impl QuiddityTuple {
    pub fn new(ring: &FiniteRing, entries: Vec<Element>) -> Result<Self, QuiddityError> {
        let sign = is_quiddity(ring, &entries)?.ok_or(QuiddityError::NotASolution)?;
        Ok(QuiddityTuple { ring: ring.clone(), entries, sign })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn reducibility(&self) -> Reducibility {
        classify(self)
    }
}

/// The sign ε when `M_n(tuple) = ε Id`.
pub fn is_quiddity(ring: &FiniteRing, tuple: &[Element]) -> Result<Option<Sign>, QuiddityError> {
    ring.check(tuple)?;
    if tuple.is_empty() {
        return Ok(None);
    }
    Ok(m_matrix_unchecked(ring, tuple).pm_identity(ring))
}

/// `(a_1..a_m) ⊕ (b_1..b_l) = (a_1 + b_l, a_2..a_{m-1}, a_m + b_1, b_2..b_{l-1})`.
pub fn oplus(ring: &FiniteRing, a: &[Element], b: &[Element]) -> Result<Vec<Element>, QuiddityError> {
    ring.check(a)?;
    ring.check(b)?;
    if a.len() < 2 || b.len() < 2 {
        return Err(QuiddityError::TooShort);
    }
    let (m, l) = (a.len(), b.len());
    let mut out = Vec::with_capacity(m + l - 2);
    out.push(ring.add(a[0], b[l - 1]));
    out.extend_from_slice(&a[1..m - 1]);
    out.push(ring.add(a[m - 1], b[0]));
    out.extend_from_slice(&b[1..l - 1]);
    Ok(out)
}

/// Equality up to cyclic rotation and reversal.
pub fn equivalent(ring: &FiniteRing, a: &[Element], b: &[Element]) -> Result<bool, QuiddityError> {
    ring.check(a)?;
    ring.check(b)?;
    if a.len() != b.len() {
        return Ok(false);
    }
    let n = a.len();
    if n == 0 {
        return Ok(true);
    }
    let rev: Vec<Element> = a.iter().rev().copied().collect();
    for src in [a, rev.as_slice()] {
        for s in 0..n {
            if (0..n).all(|i| src[(s + i) % n] == b[i]) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// A decomposition `solution ~ complement ⊕ summand`.
///
/// The summand is `(x, c_start, ..., c_{start+window_len-1}, y)` (indices mod n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionWitness {
    pub start: usize,
    pub window_len: usize,
    pub summand: QuiddityTuple,
    pub complement: QuiddityTuple,
}

/// Outcome of the reducibility decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reducibility {
    /// Sizes 1 and 2; the only such solution is `(0, 0)`, never irreducible.
    NotApplicable,
    Irreducible,
    Reducible(ReductionWitness),
}

impl Reducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Reducibility::Irreducible)
    }
}

pub fn classify(solution: &QuiddityTuple) -> Reducibility {
    if solution.len() < 3 {
        return Reducibility::NotApplicable;
    }
    match find_window(solution.ring(), solution.entries()) {
        None => Reducibility::Irreducible,
        Some((start, j)) => Reducibility::Reducible(build_witness(solution, start, j)),
    }
}

/// Reducibility of a tuple of size n >= 3; `None` means irreducible.
pub fn is_reducible(ring: &FiniteRing, tuple: &[Element]) -> Result<Option<ReductionWitness>, QuiddityError> {
    let solution = QuiddityTuple::new(ring, tuple.to_vec())?;
    match classify(&solution) {
        Reducibility::NotApplicable => Err(QuiddityError::NotApplicable(tuple.len())),
        Reducibility::Irreducible => Ok(None),
        Reducibility::Reducible(w) => Ok(Some(w)),
    }
}

/// First window `(start, j)` in the order (j ascending, start ascending)
/// whose continuant is ±1, with `1 <= j <= (n-2)/2`.
pub(crate) fn find_window(ring: &FiniteRing, c: &[Element]) -> Option<(usize, usize)> {
    let n = c.len();
    if n < 4 {
        return None;
    }
    let jmax = (n - 2) / 2;
    let (one, minus_one) = (ring.one(), ring.minus_one());
    let mut best: Option<(usize, usize)> = None;
    for start in 0..n {
        let limit = best.map_or(jmax, |(_, j)| (j - 1).min(jmax));
        let (mut prev, mut cur) = (ring.zero(), ring.one());
        for j in 1..=limit {
            let a = c[(start + j - 1) % n];
            (prev, cur) = (cur, ring.sub(ring.mul(a, cur), prev));
            if cur == one || cur == minus_one {
                best = Some((start, j));
                break;
            }
        }
        if best.map(|(_, j)| j) == Some(1) {
            break;
        }
    }
    best
}

fn build_witness(solution: &QuiddityTuple, start: usize, j: usize) -> ReductionWitness {
    let ring = solution.ring();
    let c = solution.entries();
    let n = c.len();
    let window: Vec<Element> = (0..j).map(|k| c[(start + k) % n]).collect();
    let summand = extend_to_solution(ring, &window).expect("window continuant is ±1");
    let b = summand.entries();
    let (x, y) = (b[0], b[b.len() - 1]);
    // Rotation of c with the window in the last j positions.
    let r: Vec<Element> = (0..n).map(|k| c[(start + j + k) % n]).collect();
    let m = n - j;
    let mut a = r[..m].to_vec();
    a[0] = ring.sub(a[0], y);
    a[m - 1] = ring.sub(a[m - 1], x);
    let complement = QuiddityTuple::new(ring, a).expect("complement of a solution is a solution");
    ReductionWitness { start, window_len: j, summand, complement }
}

/// Checks that a witness really decomposes the solution.
pub fn verify_witness(solution: &QuiddityTuple, witness: &ReductionWitness) -> bool {
    let ring = solution.ring();
    let (a, b) = (witness.complement.entries(), witness.summand.entries());
    if a.len() < 3 || b.len() < 3 || a.len() + b.len() != solution.len() + 2 {
        return false;
    }
    if !matches!(is_quiddity(ring, a), Ok(Some(_))) || !matches!(is_quiddity(ring, b), Ok(Some(_))) {
        return false;
    }
    let n = solution.len();
    let window: Vec<Element> = (0..witness.window_len)
        .map(|k| solution.entries()[(witness.start + k) % n])
        .collect();
    if b[1..b.len() - 1] != window[..] {
        return false;
    }
    match oplus(ring, a, b) {
        Ok(sum) => equivalent(ring, &sum, solution.entries()).unwrap_or(false),
        Err(_) => false,
    }
}

/// Continuant of the cyclic window of length j starting at `start`.
pub fn window_continuant(ring: &FiniteRing, c: &[Element], start: usize, j: usize) -> Element {
    let n = c.len();
    let w: Vec<Element> = (0..j).map(|k| c[(start + k) % n]).collect();
    continuant_unchecked(ring, &w)
}
