//! Special families of solutions, their minimal sizes and irreducibility.
//!
//! | kind           | shape                              |
//! |----------------|------------------------------------|
//! | monomial       | `(x, ..., x)`                      |
//! | dynomial       | `(a, b, ..., a, b)`                |
//! | trinomial      | `(u, u^-1, u^-1, ...)`             |
//! | quadrinomial   | `(α, a, b, β, ...)`                |
//! | quasi_monomial | `(a, x, ..., x, a)`                |
//! | towed          | `(x, b, 2, ..., 2, y)` over Z/pZ   |
//! | polarized      | `(x, ..., x, -x, ..., -x)`         |
//!
//! Each constructor returns a [`FamilyReport`]. When a closed criterion is
//! available it decides irreducibility; otherwise the window scan of
//! [`crate::quiddity`] does.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::arith::{self, ArithError};
use crate::continuant::m_matrix_unchecked;
use crate::quiddity::{classify, QuiddityError, QuiddityTuple, Reducibility, ReductionWitness};
use crate::ring_core::{pm_order, Element, FiniteRing, Mat2, RingError};

/// Largest quadrinomial size explored before giving up.
pub const QUADRINOMIAL_SIZE_CAP: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("operation requires odd characteristic")]
    CharTwo,
    #[error("parameters must be units")]
    NotUnits,
    #[error("u must be a unit outside {{1, -1}} with u != u^-1")]
    BadU,
    #[error("x must be nonzero")]
    XZero,
    #[error("ab - 1 is not invertible")]
    ABNotInvertible,
    #[error("size cap of {0} exceeded")]
    SizeCapExceeded(u64),
    #[error("{0} is not prime")]
    PNotPrime(u64),
    #[error("p = {0} is too small, need p >= 5")]
    PTooSmall(u64),
    #[error("no witness of the expected size")]
    WitnessNotFound,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Quiddity(#[from] QuiddityError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Monomial,
    Dynomial,
    Trinomial,
    Quadrinomial,
    QuasiMonomial,
    Towed,
    Polarized,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::Monomial,
        FamilyKind::Dynomial,
        FamilyKind::Trinomial,
        FamilyKind::Quadrinomial,
        FamilyKind::QuasiMonomial,
        FamilyKind::Towed,
        FamilyKind::Polarized,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Monomial => "monomial",
            FamilyKind::Dynomial => "dynomial",
            FamilyKind::Trinomial => "trinomial",
            FamilyKind::Quadrinomial => "quadrinomial",
            FamilyKind::QuasiMonomial => "quasi_monomial",
            FamilyKind::Towed => "towed",
            FamilyKind::Polarized => "polarized",
        }
    }

    pub fn from_name(s: &str) -> Option<FamilyKind> {
        let s = s.replace('-', "_");
        FamilyKind::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Number of parameters taken by the constructor.
    pub fn arity(self) -> usize {
        match self {
            FamilyKind::Dynomial | FamilyKind::Quadrinomial => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What settled the irreducibility verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecidedBy {
    Criterion(&'static str),
    GeneralScan,
    /// Size below 3: the tuple is `(0, 0)`.
    NotApplicable,
}

impl DecidedBy {
    pub fn label(self) -> &'static str {
        match self {
            DecidedBy::Criterion(name) => name,
            DecidedBy::GeneralScan => "general-scan",
            DecidedBy::NotApplicable => "not-applicable",
        }
    }
}

/// A named value attached to a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Datum {
    Element(Element),
    Bool(bool),
    Int(i64),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub kind: FamilyKind,
    pub params: Vec<Element>,
    pub size: usize,
    pub tuple: QuiddityTuple,
    pub irreducible: bool,
    pub decided_by: DecidedBy,
    pub criterion_data: Vec<(String, Datum)>,
    /// Present when the general scan found a decomposition.
    pub witness: Option<ReductionWitness>,
}

impl FamilyReport {
    pub fn datum(&self, name: &str) -> Option<&Datum> {
        self.criterion_data.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    /// The verdict of the general scan, independent of `decided_by`.
    pub fn scan_verdict(&self) -> Reducibility {
        classify(&self.tuple)
    }
}

enum Decision {
    Criterion(&'static str, bool),
    Scan,
}

fn build(
    kind: FamilyKind,
    ring: &FiniteRing,
    params: Vec<Element>,
    entries: Vec<Element>,
    decision: Decision,
    criterion_data: Vec<(String, Datum)>,
) -> Result<FamilyReport, FamilyError> {
    let tuple = QuiddityTuple::new(ring, entries)?;
    let size = tuple.len();
    let (irreducible, decided_by, witness) = if size < 3 {
        (false, DecidedBy::NotApplicable, None)
    } else {
        match decision {
            Decision::Criterion(name, verdict) => (verdict, DecidedBy::Criterion(name), None),
            Decision::Scan => match classify(&tuple) {
                Reducibility::Reducible(w) => (false, DecidedBy::GeneralScan, Some(w)),
                Reducibility::Irreducible => (true, DecidedBy::GeneralScan, None),
                Reducibility::NotApplicable => (false, DecidedBy::NotApplicable, None),
            },
        }
    };
    Ok(FamilyReport { kind, params, size, tuple, irreducible, decided_by, criterion_data, witness })
}

fn repeat(pattern: &[Element], times: u64) -> Vec<Element> {
    let mut out = Vec::with_capacity(pattern.len() * times as usize);
    for _ in 0..times {
        out.extend_from_slice(pattern);
    }
    out
}

fn is_pm_one(ring: &FiniteRing, x: Element) -> bool {
    x == ring.one() || x == ring.minus_one()
}

/// Shortest `(x, ..., x)` solution.
pub fn monomial_minimal(ring: &FiniteRing, x: Element) -> Result<FamilyReport, FamilyError> {
    ring.check(&[x])?;
    let (k, _) = pm_order(ring, &Mat2::m1(ring, x))?;
    let decision = if ring.is_field() && x != ring.zero() {
        Decision::Criterion("nonzero-monomial-over-field", true)
    } else {
        Decision::Scan
    };
    build(FamilyKind::Monomial, ring, vec![x], repeat(&[x], k), decision, Vec::new())
}

/// An element whose monomial minimal solution has size q+1 (char 2) or (q+1)/2.
pub fn monomial_bound_witness(field: &FiniteRing) -> Result<(Element, u64), FamilyError> {
    if !field.is_field() {
        return Err(RingError::NotAField.into());
    }
    let q = field.cardinality();
    let target = if field.characteristic() == 2 { q + 1 } else { q.div_ceil(2) };
    for y in field.elements() {
        let (k, _) = pm_order(field, &Mat2::m1(field, y))?;
        if k == target {
            return Ok((y, k));
        }
    }
    Err(FamilyError::WitnessNotFound)
}

/// `Δ₁ = a² + 4ab⁻¹(ab⁻¹ - 1)` and `Δ₂ = b² + 4a⁻¹b(a⁻¹b - 1)`.
pub fn dynomial_deltas(ring: &FiniteRing, a: Element, b: Element) -> Result<(Element, Element), FamilyError> {
    let r = ring;
    let four = r.from_int(4);
    let delta = |x: Element, y: Element| -> Result<Element, FamilyError> {
        let t = r.mul(x, r.inv(y)?);
        Ok(r.add(r.mul(x, x), r.mul(four, r.mul(t, r.sub(t, r.one())))))
    };
    Ok((delta(a, b)?, delta(b, a)?))
}

/// Shortest `(a, b, ..., a, b)` solution, decided by the general scan.
pub fn dynomial_minimal(ring: &FiniteRing, a: Element, b: Element) -> Result<FamilyReport, FamilyError> {
    ring.check(&[a, b])?;
    if a == b {
        return Err(FamilyError::InvalidParams("a must differ from b".into()));
    }
    let m2 = Mat2::m1(ring, b).mul(ring, &Mat2::m1(ring, a));
    let (k, _) = pm_order(ring, &m2)?;
    let mut data = Vec::new();
    if ring.is_field() && ring.characteristic() != 2 && ring.is_unit(a) && ring.is_unit(b) {
        let (d1, d2) = dynomial_deltas(ring, a, b)?;
        data.push(("delta1".into(), Datum::Element(d1)));
        data.push(("delta2".into(), Datum::Element(d2)));
        data.push(("delta1_square".into(), Datum::Bool(arith::is_square(ring, d1)?)));
        data.push(("delta2_square".into(), Datum::Bool(arith::is_square(ring, d2)?)));
    }
    build(FamilyKind::Dynomial, ring, vec![a, b], repeat(&[a, b], k), Decision::Scan, data)
}

/// The `(u, u⁻¹)` dynomial solution, irreducible of size 6.
pub fn dynomial_inverse_pair(ring: &FiniteRing, u: Element) -> Result<FamilyReport, FamilyError> {
    ring.check(&[u])?;
    let v = ring.inv(u).map_err(|_| FamilyError::BadU)?;
    if is_pm_one(ring, u) || u == v {
        return Err(FamilyError::BadU);
    }
    let m2 = Mat2::m1(ring, v).mul(ring, &Mat2::m1(ring, u));
    let (k, _) = pm_order(ring, &m2)?;
    assert_eq!(k, 3, "inverse-pair dynomial must have size 6");
    let decision = Decision::Criterion("inverse-pair", true);
    build(FamilyKind::Dynomial, ring, vec![u, v], repeat(&[u, v], k), decision, Vec::new())
}

/// Verdict of a sufficient (or exact) criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    IrreducibleCertified,
    ReducibleCertified,
    Inconclusive,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::IrreducibleCertified => "irreducible-certified",
            Verdict::ReducibleCertified => "reducible-certified",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynomialCriterion {
    pub delta1: Element,
    pub delta2: Element,
    pub delta1_square: bool,
    pub delta2_square: bool,
    pub verdict: Verdict,
}

/// Both Δ non-squares certifies irreducibility; anything else is inconclusive.
pub fn dynomial_criterion(field: &FiniteRing, a: Element, b: Element) -> Result<DynomialCriterion, FamilyError> {
    if !field.is_field() {
        return Err(RingError::NotAField.into());
    }
    field.check(&[a, b])?;
    if field.characteristic() == 2 {
        return Err(FamilyError::CharTwo);
    }
    if !field.is_unit(a) || !field.is_unit(b) {
        return Err(FamilyError::NotUnits);
    }
    if is_pm_one(field, a) || is_pm_one(field, b) || a == b {
        return Err(FamilyError::InvalidParams("need a, b outside {1, -1} and a != b".into()));
    }
    let (delta1, delta2) = dynomial_deltas(field, a, b)?;
    let delta1_square = arith::is_square(field, delta1)?;
    let delta2_square = arith::is_square(field, delta2)?;
    let verdict = if !delta1_square && !delta2_square {
        Verdict::IrreducibleCertified
    } else {
        Verdict::Inconclusive
    };
    Ok(DynomialCriterion { delta1, delta2, delta1_square, delta2_square, verdict })
}

/// Size of the u-trinomial minimal solution from the order of u.
pub fn trinomial_size(field: &FiniteRing, order: u64) -> u64 {
    if field.characteristic() == 2 || order % 2 == 1 {
        3 * order
    } else {
        3 * order / 2
    }
}

/// First `l` in `1..=lmax` with `u^(2l) ± u^(l+1) - 1 = 0`, with the sign used.
pub fn trinomial_root(field: &FiniteRing, u: Element, lmax: u64) -> Option<(u64, i8)> {
    let u2 = field.mul(u, u);
    let mut p2l = field.one();
    let mut pl1 = u;
    for l in 1..=lmax {
        p2l = field.mul(p2l, u2);
        pl1 = field.mul(pl1, u);
        let base = field.sub(p2l, field.one());
        if field.add(base, pl1) == field.zero() {
            return Some((l, 1));
        }
        if field.sub(base, pl1) == field.zero() {
            return Some((l, -1));
        }
    }
    None
}

/// Shortest `(u, u⁻¹, u⁻¹, ...)` solution over a field, decided by the root test.
pub fn trinomial_minimal(field: &FiniteRing, u: Element) -> Result<FamilyReport, FamilyError> {
    if !field.is_field() {
        return Err(RingError::NotAField.into());
    }
    field.check(&[u])?;
    let v = field.inv(u)?;
    let order = field.element_order(u)?;
    let m = trinomial_size(field, order);
    let block = [u, v, v];
    let (k, _) = pm_order(field, &m_matrix_unchecked(field, &block))?;
    assert_eq!(3 * k, m, "trinomial size formula disagrees with the matrix order");
    let mut data = vec![("order".to_string(), Datum::Int(order as i64))];
    let decision = if is_pm_one(field, u) {
        Decision::Criterion("size-three", true)
    } else {
        let root = trinomial_root(field, u, m / 6);
        if let Some((l, s)) = root {
            data.push(("root_l".into(), Datum::Int(l as i64)));
            data.push(("root_sign".into(), Datum::Int(s as i64)));
        }
        Decision::Criterion("trinomial-root-test", root.is_none())
    };
    build(FamilyKind::Trinomial, field, vec![u], repeat(&block, m / 3), decision, data)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrinomialSquareCriterion {
    pub value: Element,
    pub is_square: bool,
    pub generator: bool,
    pub verdict: Verdict,
}

/// `u² + 4` a non-square certifies irreducibility; exact when u or -u generates.
pub fn trinomial_square_criterion(field: &FiniteRing, u: Element) -> Result<TrinomialSquareCriterion, FamilyError> {
    if !field.is_field() {
        return Err(RingError::NotAField.into());
    }
    field.check(&[u])?;
    if field.characteristic() == 2 {
        return Err(FamilyError::CharTwo);
    }
    if !field.is_unit(u) {
        return Err(RingError::NotAUnit.into());
    }
    if is_pm_one(field, u) {
        return Err(FamilyError::InvalidParams("u must lie outside {1, -1}".into()));
    }
    let value = field.add(field.mul(u, u), field.from_int(4));
    let is_square = arith::is_square(field, value)?;
    let generator = field.is_generator(u)? || field.is_generator(field.neg(u))?;
    let verdict = match (is_square, generator) {
        (false, _) => Verdict::IrreducibleCertified,
        (true, true) => Verdict::ReducibleCertified,
        (true, false) => Verdict::Inconclusive,
    };
    Ok(TrinomialSquareCriterion { value, is_square, generator, verdict })
}

/// Shortest `(α, a, b, β, ...)` solution with `α = b(ab-1)⁻¹`, `β = a(ab-1)⁻¹`.
pub fn quadrinomial_minimal(ring: &FiniteRing, a: Element, b: Element) -> Result<FamilyReport, FamilyError> {
    ring.check(&[a, b])?;
    let d = ring.sub(ring.mul(a, b), ring.one());
    let d_inv = ring.inv(d).map_err(|_| FamilyError::ABNotInvertible)?;
    let alpha = ring.mul(b, d_inv);
    let beta = ring.mul(a, d_inv);
    let block = [alpha, a, b, beta];
    let capped = ring.with_iteration_cap(QUADRINOMIAL_SIZE_CAP / 4);
    let (k, _) = pm_order(&capped, &m_matrix_unchecked(ring, &block)).map_err(|e| match e {
        RingError::OrderCapExceeded(_) => FamilyError::SizeCapExceeded(QUADRINOMIAL_SIZE_CAP),
        other => other.into(),
    })?;
    let data = vec![("alpha".into(), Datum::Element(alpha)), ("beta".into(), Datum::Element(beta))];
    build(FamilyKind::Quadrinomial, ring, vec![a, b], repeat(&block, k), Decision::Scan, data)
}

/// Shortest `(a, x, ..., x, a)` solution.
pub fn quasi_monomial_minimal(ring: &FiniteRing, x: Element) -> Result<FamilyReport, FamilyError> {
    ring.check(&[x])?;
    let (mut prev, mut cur) = (ring.zero(), ring.one());
    let mut k = 0u64;
    loop {
        (prev, cur) = (cur, ring.sub(ring.mul(x, cur), prev));
        k += 1;
        if is_pm_one(ring, cur) {
            break;
        }
        if k >= ring.iteration_cap() {
            return Err(RingError::OrderCapExceeded(ring.iteration_cap()).into());
        }
    }
    // cur = K_k(x..x) = ε, prev = K_{k-1}(x..x).
    let a = ring.mul(cur, prev);
    let mut entries = vec![a];
    entries.extend(std::iter::repeat_n(x, k as usize));
    entries.push(a);
    let monomial = monomial_minimal(ring, x)?;
    let coincides = monomial.tuple.entries() == entries.as_slice();
    let data = vec![
        ("end".into(), Datum::Element(a)),
        ("coincides_with_monomial".into(), Datum::Bool(coincides)),
    ];
    let decision = if x != ring.zero() {
        Decision::Criterion("quasi-monomial", true)
    } else {
        Decision::Scan
    };
    build(FamilyKind::QuasiMonomial, ring, vec![x], entries, decision, data)
}

/// Shortest `(x, b, 2, ..., 2, y)` solution over Z/pZ, p >= 5 prime.
pub fn towed_minimal(p: u64, b: Element) -> Result<FamilyReport, FamilyError> {
    if !arith::is_prime(p) {
        return Err(FamilyError::PNotPrime(p));
    }
    if p < 5 {
        return Err(FamilyError::PTooSmall(p));
    }
    let ring = FiniteRing::zmod(p)?;
    ring.check(&[b])?;
    let r = &ring;
    let two = r.from_int(2);
    let (one, minus_one) = (r.one(), r.minus_one());
    let (entries, l) = if b == one {
        (vec![two, one, two, one], 1)
    } else if b == minus_one {
        let mut e = vec![r.zero(), minus_one];
        e.extend(std::iter::repeat_n(two, (p - 1) as usize));
        e.push(r.from_int(3));
        (e, p - 1)
    } else {
        let lval = r.neg(r.mul(r.add(b, one), r.inv(r.sub(b, one))?));
        let l = if lval == r.zero() { p } else { lval.code() };
        let mut e = vec![r.from_int(-(l as i128) - 1), b];
        e.extend(std::iter::repeat_n(two, l as usize));
        e.push(b);
        (e, l)
    };
    let irreducible = ![minus_one, one, r.from_int(3)].contains(&b);
    let data = vec![("twos".into(), Datum::Int(l as i64))];
    build(FamilyKind::Towed, r, vec![b], entries, Decision::Criterion("towed", irreducible), data)
}

/// Shortest `(x × l, -x × l)` solution, odd characteristic, x != 0.
pub fn polarized_minimal(ring: &FiniteRing, x: Element) -> Result<FamilyReport, FamilyError> {
    ring.check(&[x])?;
    if ring.characteristic() == 2 {
        return Err(FamilyError::CharTwo);
    }
    if x == ring.zero() {
        return Err(FamilyError::XZero);
    }
    let mx = ring.neg(x);
    let (step_p, step_m) = (Mat2::m1(ring, x), Mat2::m1(ring, mx));
    let (mut acc_p, mut acc_m) = (step_p, step_m);
    let mut l = 1u64;
    while acc_m.mul(ring, &acc_p).pm_identity(ring).is_none() {
        if l >= ring.iteration_cap() {
            return Err(RingError::OrderCapExceeded(ring.iteration_cap()).into());
        }
        acc_p = step_p.mul(ring, &acc_p);
        acc_m = step_m.mul(ring, &acc_m);
        l += 1;
    }
    let mut entries = repeat(&[x], l);
    entries.extend(repeat(&[mx], l));
    let closed = polarized_closed_form(ring, x, l);
    let data = vec![("closed_form_matches".into(), Datum::Bool(closed == acc_m.mul(ring, &acc_p)))];
    let decision = if ring.is_field() {
        let m = monomial_minimal(ring, x)?.size as u64;
        assert_eq!(2 * l, 2 * m, "polarized size over a field must be twice the monomial size");
        Decision::Criterion("polarized-over-field", false)
    } else {
        Decision::Scan
    };
    build(FamilyKind::Polarized, ring, vec![x], entries, decision, data)
}

/// `(-1)^l [[K_l² + K_{l-1}², -x K_{l-1}²], [-x K_{l-1}², K_{l-1}² + K_{l-2}²]]`
/// with `K_i = K_i(x, ..., x)`.
pub fn polarized_closed_form(ring: &FiniteRing, x: Element, l: u64) -> Mat2 {
    let r = ring;
    let (mut k2, mut k1, mut k0) = (r.neg(r.one()), r.zero(), r.one());
    // Invariant: (k2, k1, k0) = (K_{i-2}, K_{i-1}, K_i) starting from i = 0 with K_{-2} = -1.
    for _ in 0..l {
        (k2, k1, k0) = (k1, k0, r.sub(r.mul(x, k0), k1));
    }
    let sq = |e: Element| r.mul(e, e);
    let off = r.neg(r.mul(x, sq(k1)));
    let m = Mat2 { a11: r.add(sq(k0), sq(k1)), a12: off, a21: off, a22: r.add(sq(k1), sq(k2)) };
    if l % 2 == 1 {
        Mat2 { a11: r.neg(m.a11), a12: r.neg(m.a12), a21: r.neg(m.a21), a22: r.neg(m.a22) }
    } else {
        m
    }
}

/// Reports for every valid parameter in enumeration order. Parameters the
/// constructor rejects are skipped.
pub fn enumerate_family(ring: &FiniteRing, kind: FamilyKind) -> Result<Vec<FamilyReport>, FamilyError> {
    let elems: Vec<Element> = ring.elements().collect();
    let params: Vec<Vec<Element>> = match kind.arity() {
        1 => elems.iter().map(|&x| vec![x]).collect(),
        _ => elems.iter().flat_map(|&a| elems.iter().map(move |&b| vec![a, b])).collect(),
    };
    if kind == FamilyKind::Towed && (!ring.is_field() || ring.characteristic() < 5) {
        return Err(FamilyError::InvalidParams("towed solutions need Z/pZ with p >= 5".into()));
    }
    let results: Vec<Result<FamilyReport, FamilyError>> =
        params.par_iter().map(|ps| construct(ring, kind, ps)).collect();
    let mut out = Vec::new();
    for r in results {
        match r {
            Ok(rep) => out.push(rep),
            Err(FamilyError::Ring(RingError::OrderCapExceeded(c))) => {
                return Err(RingError::OrderCapExceeded(c).into())
            }
            Err(FamilyError::SizeCapExceeded(c)) => return Err(FamilyError::SizeCapExceeded(c)),
            Err(_) => {}
        }
    }
    Ok(out)
}

/// Dispatches to the constructor of `kind` with positional parameters.
pub fn construct(ring: &FiniteRing, kind: FamilyKind, params: &[Element]) -> Result<FamilyReport, FamilyError> {
    if params.len() != kind.arity() {
        return Err(FamilyError::InvalidParams(format!("{kind} takes {} parameter(s)", kind.arity())));
    }
    match kind {
        FamilyKind::Monomial => monomial_minimal(ring, params[0]),
        FamilyKind::Dynomial => dynomial_minimal(ring, params[0], params[1]),
        FamilyKind::Trinomial => trinomial_minimal(ring, params[0]),
        FamilyKind::Quadrinomial => quadrinomial_minimal(ring, params[0], params[1]),
        FamilyKind::QuasiMonomial => quasi_monomial_minimal(ring, params[0]),
        FamilyKind::Towed => {
            if !matches!(ring.kind(), crate::ring_core::RingKind::ZMod { .. }) {
                return Err(FamilyError::InvalidParams("towed solutions live over Z/pZ".into()));
            }
            towed_minimal(ring.cardinality(), params[0])
        }
        FamilyKind::Polarized => polarized_minimal(ring, params[0]),
    }
}
