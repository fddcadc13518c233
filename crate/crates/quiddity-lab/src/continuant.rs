//! Continuants and the matrices `M_n`.
//!
//! `K_{-1} = 0`, `K_0 = 1` and `K_n(a_1..a_n) = a_n K_{n-1} - K_{n-2}`.
//! `M_n(a_1..a_n) = M_1(a_n) ... M_1(a_1)` has entries
//! `[[K_n(a_1..a_n), -K_{n-1}(a_2..a_n)], [K_{n-1}(a_1..a_{n-1}), -K_{n-2}(a_2..a_{n-1})]]`.

use thiserror::Error;

use crate::quiddity::QuiddityTuple;
use crate::ring_core::{Element, FiniteRing, Mat2, RingError, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContinuantError {
    #[error("continuant is not ±1")]
    ContinuantNotUnitSign,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// `K_n` of a tuple. The empty tuple gives 1.
pub fn continuant(ring: &FiniteRing, tuple: &[Element]) -> Result<Element, ContinuantError> {
    ring.check(tuple)?;
    Ok(continuant_unchecked(ring, tuple))
}

pub(crate) fn continuant_unchecked(ring: &FiniteRing, tuple: &[Element]) -> Element {
    let (mut prev, mut cur) = (ring.zero(), ring.one());
    for &a in tuple {
        (prev, cur) = (cur, ring.sub(ring.mul(a, cur), prev));
    }
    cur
}

/// `M_n(a_1..a_n)`; the empty tuple gives the identity.
pub fn m_matrix(ring: &FiniteRing, tuple: &[Element]) -> Result<Mat2, ContinuantError> {
    ring.check(tuple)?;
    let m = m_matrix_unchecked(ring, tuple);
    debug_assert_eq!(m.det(ring), ring.one());
    Ok(m)
}

pub(crate) fn m_matrix_unchecked(ring: &FiniteRing, tuple: &[Element]) -> Mat2 {
    tuple.iter().fold(Mat2::identity(ring), |acc, &a| acc.push(ring, a))
}

/// The three continuants `K_n(a_1..a_n)`, `K_{n-1}(a_1..a_{n-1})`, `K_{n-1}(a_2..a_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContinuantTriple {
    pub k_n: Element,
    pub k_n1_left: Element,
    pub k_n1_right: Element,
}

pub fn continuant_triple(ring: &FiniteRing, tuple: &[Element]) -> Result<ContinuantTriple, ContinuantError> {
    ring.check(tuple)?;
    let n = tuple.len();
    let (left, right) = if n == 0 {
        (ring.zero(), ring.zero())
    } else {
        (continuant_unchecked(ring, &tuple[..n - 1]), continuant_unchecked(ring, &tuple[1..]))
    };
    Ok(ContinuantTriple { k_n: continuant_unchecked(ring, tuple), k_n1_left: left, k_n1_right: right })
}

/// `K_n(x, ..., x)` from the closed form `sum_i (-1)^i C(n-i, i) x^(n-2i)`,
/// with binomials built by Pascal's rule inside the ring.
pub fn constant_continuant(ring: &FiniteRing, x: Element, n: usize) -> Element {
    let mut row = vec![ring.one()];
    let mut rows = vec![row.clone()];
    for _ in 0..n {
        let mut next = vec![ring.one(); row.len() + 1];
        for k in 1..row.len() {
            next[k] = ring.add(row[k - 1], row[k]);
        }
        row = next;
        rows.push(row.clone());
    }
    let mut sum = ring.zero();
    for i in 0..=n / 2 {
        let mut term = ring.mul(rows[n - i][i], ring.pow(x, (n - 2 * i) as u64));
        if i % 2 == 1 {
            term = ring.neg(term);
        }
        sum = ring.add(sum, term);
    }
    sum
}

/// Completes a tuple whose continuant is `ε = ±1` into the solution
/// `(x, a_1..a_n, y)` with `x = ε K_{n-1}(a_2..a_n)`, `y = ε K_{n-1}(a_1..a_{n-1})`.
/// The resulting matrix is `-ε Id`.
pub fn extend_to_solution(ring: &FiniteRing, tuple: &[Element]) -> Result<QuiddityTuple, ContinuantError> {
    let t = continuant_triple(ring, tuple)?;
    let eps = if t.k_n == ring.one() {
        ring.one()
    } else if t.k_n == ring.minus_one() {
        ring.minus_one()
    } else {
        return Err(ContinuantError::ContinuantNotUnitSign);
    };
    let (x, y) = if tuple.is_empty() {
        (ring.zero(), ring.zero())
    } else {
        (ring.mul(eps, t.k_n1_right), ring.mul(eps, t.k_n1_left))
    };
    let mut entries = Vec::with_capacity(tuple.len() + 2);
    entries.push(x);
    entries.extend_from_slice(tuple);
    entries.push(y);
    let sign = if eps == ring.one() { Sign::Minus } else { Sign::Plus };
    let sign = if ring.one() == ring.minus_one() { Sign::Plus } else { sign };
    let solution = QuiddityTuple::new(ring, entries).expect("extension is a solution");
    debug_assert_eq!(solution.sign(), sign);
    Ok(solution)
}
