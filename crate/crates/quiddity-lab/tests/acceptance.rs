//! End-to-end acceptance gate: one line per criterion, then a hard assert.
//!
//! Every check is exact (integer or ring equality); the only numeric
//! tolerances are the run budgets pinned below.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use common::{ints, BruteReducer, Oracle};
use quiddity_lab::arith;
use quiddity_lab::bounds::{self, DEFAULT_SURVIVOR_CAP};
use quiddity_lab::cli;
use quiddity_lab::continuant::{continuant, m_matrix};
use quiddity_lab::families::{self, Verdict};
use quiddity_lab::quiddity::{classify, verify_witness, QuiddityTuple, Reducibility};
use quiddity_lab::ring_core::{Element, FiniteRing, Mat2, RingKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random tuples drawn for the continuant identities.
const RANDOM_TUPLES: usize = 10_000;
const RANDOM_SEED: u64 = 0x5eed_0002;
/// Largest ring and tuple size in the exhaustive oracle comparison.
const ORACLE_MAX_CARD: u64 = 7;
const ORACLE_MAX_SIZE: usize = 7;
/// Upper end of the generator conjecture range.
const CONJECTURE_TO: u64 = 100_000;
/// Wall-clock budget per criterion; the slowest gates are allowed 10 minutes.
const BUDGET_DEFAULT: Duration = Duration::from_secs(60);
const BUDGET_LONG: Duration = Duration::from_secs(600);

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Runs the CLI with `--golden` and returns its exit code and stdout.
fn cli_golden(args: &[&str], file: &str) -> (i32, String) {
    let path = golden(file);
    let mut argv = vec!["quiddity-lab".to_string(), "--golden".into(), path.display().to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn minus_id(ring: &FiniteRing) -> Mat2 {
    Mat2::scalar(ring, ring.minus_one())
}

fn c1_identity_solutions() -> Outcome {
    for n in [5, 7, 11] {
        let ring = FiniteRing::zmod(n).unwrap();
        for t in [&[1, 1, 1][..], &[1, 2, 1, 2][..]] {
            let m = m_matrix(&ring, &ints(&ring, t)).unwrap();
            ensure(m == minus_id(&ring), || format!("M({t:?}) != -Id over Z/{n}"))?;
        }
    }
    Ok("M_3(1,1,1) = M_4(1,2,1,2) = -Id over Z/5, Z/7, Z/11".into())
}

fn c2_continuant_identities() -> Outcome {
    let mut rings: Vec<FiniteRing> = (2..=64).map(|n| FiniteRing::zmod(n).unwrap()).collect();
    for (p, n) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        rings.push(FiniteRing::gf_default(p, n).unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    for i in 0..RANDOM_TUPLES {
        let ring = &rings[i % rings.len()];
        let oracle = Oracle::of(ring);
        let q = ring.cardinality();
        let n = rng.gen_range(0..=12);
        let t: Vec<Element> = (0..n).map(|_| ring.element(rng.gen_range(0..q)).unwrap()).collect();
        let k = continuant(ring, &t).unwrap();
        let ot: Vec<_> = t.iter().map(|&x| oracle.from_lib(ring, x)).collect();
        ensure(oracle.to_lib(ring, &oracle.continuant(&ot)) == k, || {
            format!("continuant differs from the matrix oracle over {ring} for {t:?}")
        })?;
        let rev: Vec<Element> = t.iter().rev().copied().collect();
        ensure(continuant(ring, &rev).unwrap() == k, || format!("palindrome fails over {ring}"))?;
        let units: Vec<Element> = ring.units().collect();
        let u = units[rng.gen_range(0..units.len())];
        let v = ring.inv(u).unwrap();
        let scaled: Vec<Element> =
            t.iter().enumerate().map(|(j, &a)| ring.mul(if j % 2 == 0 { u } else { v }, a)).collect();
        let ks = continuant(ring, &scaled).unwrap();
        let expected = if n % 2 == 0 { k } else { ring.mul(u, k) };
        ensure(ks == expected, || format!("unit scaling fails over {ring} (n = {n})"))?;
    }
    Ok(format!("{RANDOM_TUPLES} tuples over {} rings, zero failures", rings.len()))
}

fn c3_oracle_equivalence() -> Outcome {
    let rings = common::rings_up_to(ORACLE_MAX_CARD);
    let mut solutions = 0usize;
    let mut irreducible = 0usize;
    for ring in &rings {
        let oracle = Oracle::of(ring);
        let tab = oracle.tab();
        let brute = BruteReducer::new(&tab, ORACLE_MAX_SIZE);
        for n in 3..=ORACLE_MAX_SIZE {
            for t in tab.solutions(n) {
                solutions += 1;
                let elems: Vec<Element> = t.iter().map(|&c| ring.element(c as u64).unwrap()).collect();
                let sol = QuiddityTuple::new(ring, elems.clone())
                    .map_err(|_| format!("library rejects oracle solution {t:?} over {ring}"))?;
                let scan = classify(&sol);
                let oracle_red = brute.reducible(&t);
                match &scan {
                    Reducibility::Reducible(w) => {
                        ensure(oracle_red, || format!("scan reducible, oracle irreducible: {t:?} over {ring}"))?;
                        ensure(verify_witness(&sol, w), || format!("bad witness for {t:?} over {ring}"))?;
                    }
                    Reducibility::Irreducible => {
                        irreducible += 1;
                        ensure(!oracle_red, || format!("scan irreducible, oracle reducible: {t:?} over {ring}"))?;
                    }
                    Reducibility::NotApplicable => return Err("size >= 3 reported not applicable".into()),
                }
            }
        }
    }
    Ok(format!("{solutions} solutions over {} rings, {irreducible} irreducible, zero disagreements", rings.len()))
}

fn c4_monomial_witnesses() -> Outcome {
    for q in [4u64, 8, 9, 16, 25, 27, 49] {
        let field = FiniteRing::field(q).unwrap();
        let (y, size) = families::monomial_bound_witness(&field).map_err(|e| format!("q = {q}: {e}"))?;
        let expected = if q % 2 == 0 { q + 1 } else { q.div_ceil(2) };
        ensure(size == expected, || format!("q = {q}: size {size} != {expected}"))?;
        let report = families::monomial_minimal(&field, y).unwrap();
        ensure(report.size as u64 == expected, || format!("q = {q}: monomial report size {}", report.size))?;
        ensure(report.scan_verdict().is_irreducible(), || format!("q = {q}: witness reducible by scan"))?;
    }
    Ok("q in {4,8,9,16,25,27,49}: sizes q+1 / (q+1)/2, all irreducible by scan".into())
}

fn c5_dynomial_goldens() -> Outcome {
    let dyn_report = |n: u64, a: i64, b: i64| {
        let ring = FiniteRing::zmod(n).unwrap();
        families::dynomial_minimal(&ring, ring.from_int(a as i128), ring.from_int(b as i128)).unwrap()
    };
    let r = dyn_report(7, 3, 4);
    ensure(r.size == 8, || format!("(3,4) mod 7: size {}", r.size))?;
    let r = dyn_report(49, 2, 3);
    ensure(r.size == 56 && r.irreducible, || format!("(2,3) mod 49: size {} irr {}", r.size, r.irreducible))?;
    for (n, a, b, size) in [(7u64, 2i64, 3i64, 8usize), (77, 2, 5, 30)] {
        let r = dyn_report(n, a, b);
        ensure(r.size == size && !r.irreducible, || format!("({a},{b}) mod {n}: size {} irr {}", r.size, r.irreducible))?;
        let w = r.witness.as_ref().ok_or_else(|| format!("({a},{b}) mod {n}: no witness"))?;
        ensure(verify_witness(&r.tuple, w), || format!("({a},{b}) mod {n}: witness rejected"))?;
    }
    for (p, a, b, d1, d2) in [(23u64, 2i128, 5i128, 15i128, 17i128), (47, 3, 4, 20, 23)] {
        let f = FiniteRing::zmod(p).unwrap();
        let c = families::dynomial_criterion(&f, f.from_int(a), f.from_int(b)).unwrap();
        ensure(c.delta1 == f.from_int(d1) && c.delta2 == f.from_int(d2), || {
            format!("({a},{b}) mod {p}: deltas {:?} {:?}", c.delta1, c.delta2)
        })?;
        ensure(c.verdict == Verdict::IrreducibleCertified, || format!("({a},{b}) mod {p}: {}", c.verdict.label()))?;
    }
    Ok("sizes 8/56/8/30, verdicts and deltas (15,17), (20,23) exact".into())
}

fn c6_trinomial_goldens() -> Outcome {
    // (p, u, expected size or 0 when unchecked, expected irreducible)
    for (p, u, size, irr) in [(7u64, 2i128, 0usize, false), (7, 4, 9, true), (31, 3, 45, true), (13, 5, 6, true)] {
        let f = FiniteRing::zmod(p).unwrap();
        let r = families::trinomial_minimal(&f, f.from_int(u)).unwrap();
        ensure(size == 0 || r.size == size, || format!("u = {u} mod {p}: size {}", r.size))?;
        ensure(r.irreducible == irr, || format!("u = {u} mod {p}: criterion says {}", r.irreducible))?;
        ensure(r.scan_verdict().is_irreducible() == irr, || format!("u = {u} mod {p}: scan disagrees"))?;
    }
    let f = FiniteRing::zmod(13).unwrap();
    let c = families::trinomial_square_criterion(&f, f.from_int(5)).unwrap();
    ensure(c.is_square && c.value == f.from_int(3), || "5^2 + 4 mod 13 should be the square 3".into())?;
    Ok("u=2 mod 7 reducible; sizes 9, 45, 6 irreducible; 5^2+4 = 3 square mod 13".into())
}

fn c7_appendix_b() -> Outcome {
    let (code, _) = cli_golden(&["scan-dynomial", "-p", "17"], "scan_dynomial_17.json");
    ensure(code == 0, || format!("p = 17 golden mismatch (exit {code})"))?;
    let list = bounds::scan_dynomial_pairs(17).unwrap();
    ensure(list.len() == 32, || format!("p = 17: {} pairs", list.len()))?;
    for (p, len) in [(79u64, 760usize), (163, 3240)] {
        let got = bounds::scan_dynomial_pairs(p).unwrap().len();
        ensure(got == len, || format!("p = {p}: {got} pairs, expected {len}"))?;
    }
    Ok("p=17 list exact (32 pairs); lengths 760, 3240".into())
}

fn c8_appendix_c() -> Outcome {
    for p in [17u64, 31, 43, 79, 163, 389] {
        let p_str = p.to_string();
        let (code, _) = cli_golden(&["scan-trinomial", "-p", &p_str], &format!("scan_trinomial_{p}.json"));
        ensure(code == 0, || format!("p = {p} golden mismatch (exit {code})"))?;
    }
    for (p, len) in [(79u64, 23usize), (163, 52), (389, 123)] {
        let got = bounds::scan_trinomial(p).unwrap().len();
        ensure(got == len, || format!("p = {p}: length {got}, expected {len}"))?;
    }
    Ok("lists for 17, 31, 43, 79, 163, 389 exact; lengths 23/52/123".into())
}

fn c9_appendix_d() -> Outcome {
    let bad = bounds::verify_generator_conjecture(3, CONJECTURE_TO).unwrap();
    ensure(bad.is_empty(), || format!("counterexamples: {bad:?}"))?;
    Ok(format!("no counterexample for primes in (3, {CONJECTURE_TO}]"))
}

fn c10_appendix_e() -> Outcome {
    let got = arith::mersenne_phi_deficit(2, 64).unwrap();
    let expected = vec![12, 20, 24, 28, 30, 36, 40, 48, 56, 60, 64];
    ensure(got == expected, || format!("got {got:?}"))?;
    let (code, _) = cli_golden(&["mersenne-phi", "2", "64"], "mersenne_phi_2_64.json");
    ensure(code == 0, || format!("golden mismatch (exit {code})"))?;
    Ok(format!("{got:?}"))
}

fn c11_appendix_f() -> Outcome {
    let f9 = FiniteRing::parse("GF(3^2):1,0,1").unwrap();
    let search = bounds::ell_upper_bound_search(&f9, 13, DEFAULT_SURVIVOR_CAP).unwrap();
    ensure(search.counts[12] == 124, || format!("counts[12] = {}", search.counts[12]))?;
    ensure(search.counts[13] == 0, || format!("counts[13] = {}", search.counts[13]))?;
    ensure(search.upper == Some(15), || format!("upper = {:?}", search.upper))?;
    let lower = bounds::ell_lower_bound(&f9).unwrap();
    ensure(lower.lower == 12, || format!("lower = {}", lower.lower))?;
    let u = f9.from_coeffs(&[1, 1]).unwrap();
    let r = families::trinomial_minimal(&f9, u).unwrap();
    ensure(r.size == 12 && r.irreducible, || "X+1 trinomial is not an irreducible size-12 solution".into())?;
    Ok("counts[12] = 124, counts[13] = 0, 12 <= l(F_9) <= 15".into())
}

fn c12_lower_bounds() -> Outcome {
    let mut checked = 0;
    for field in common::fields_up_to(50) {
        let q = field.cardinality();
        let need = if q % 2 == 0 { 3 * (q - 1) } else { 3 * (q - 1) / 2 };
        let b = bounds::ell_lower_bound(&field).unwrap();
        ensure(b.lower >= need, || format!("{field}: lower {} < {need}", b.lower))?;
        ensure(b.lower_witness.size as u64 == b.lower && b.lower_witness.irreducible, || {
            format!("{field}: witness inconsistent")
        })?;
        ensure(b.lower_witness.scan_verdict().is_irreducible(), || format!("{field}: witness reducible by scan"))?;
        checked += 1;
    }
    // The specific witnesses on the moduli they are stated for.
    for (spec, coeffs, size) in [
        ("GF(3^2):1,0,1", &[1i128, 1][..], 12usize),
        ("GF(5^2):1,1,1", &[2, 1][..], 36),
        ("GF(3^3):2,0,1,1", &[-1, 0, 1][..], 39),
        ("GF(7^2):1,0,1", &[3, 1][..], 72),
        ("Z/41", &[7][..], 60),
    ] {
        let f = FiniteRing::parse(spec).unwrap();
        let u = f.from_coeffs(coeffs).unwrap();
        ensure(f.is_generator(u).unwrap(), || format!("{spec}: {coeffs:?} is not a generator"))?;
        let r = families::trinomial_minimal(&f, u).unwrap();
        ensure(r.size == size && r.irreducible, || format!("{spec}: size {} irr {}", r.size, r.irreducible))?;
    }
    Ok(format!("{checked} fields meet 3(q-1) / 3(q-1)/2; stated witnesses accepted"))
}

fn c13_szymiczek_trace() -> Outcome {
    let mut cases = 0;
    for field in common::fields_up_to(128) {
        let q = field.cardinality();
        for m in 0..=2 * (q - 1) {
            ensure(arith::szymiczek_sum_check(&field, m).unwrap(), || format!("{field}, m = {m}"))?;
            cases += 1;
        }
    }
    for n in 1..=8u32 {
        let field = FiniteRing::gf_default(2, n).unwrap();
        let t = |x: Element| arith::trace_char2(&field, x).unwrap();
        let mut kernel = 0u64;
        for x in field.elements() {
            ensure(t(field.mul(x, x)) == t(x), || format!("n = {n}: T(x^2) != T(x)"))?;
            if t(x) == 0 {
                kernel += 1;
            }
            for y in field.elements() {
                ensure(t(field.add(x, y)) == t(x) ^ t(y), || format!("n = {n}: T not additive"))?;
            }
        }
        ensure(kernel == 1 << (n - 1), || format!("n = {n}: kernel size {kernel}"))?;
    }
    Ok(format!("{cases} Szymiczek cases; trace checks for n <= 8"))
}

fn c14_char2_bounds() -> Outcome {
    let mut sizes = Vec::new();
    for n in [2u32, 3, 4, 5, 6, 8, 9, 10] {
        let field = FiniteRing::gf_default(2, n).unwrap();
        let RingKind::Gf { modpoly, .. } = field.kind() else { unreachable!() };
        let b = bounds::char2_generator_bound(n, modpoly).unwrap();
        let expected = 3 * ((1u64 << n) - 1);
        ensure(b.generator.is_some() && b.size == Some(expected), || format!("n = {n}: {b:?}"))?;
        sizes.push(expected);
    }
    for (n, size) in [(6, 189), (8, 765), (9, 1533), (10, 3069)] {
        let i = [2u32, 3, 4, 5, 6, 8, 9, 10].iter().position(|&k| k == n).unwrap();
        ensure(sizes[i] == size, || format!("n = {n}: {} != {size}", sizes[i]))?;
    }
    Ok(format!("bounds {sizes:?}"))
}

#[test]
fn acceptance() {
    let criteria: Vec<(u32, &str, fn() -> Outcome, Duration)> = vec![
        (1, "identity solutions", c1_identity_solutions, BUDGET_DEFAULT),
        (2, "continuant identities", c2_continuant_identities, BUDGET_DEFAULT),
        (3, "reducibility oracle equivalence", c3_oracle_equivalence, BUDGET_LONG),
        (4, "monomial bound witnesses", c4_monomial_witnesses, BUDGET_DEFAULT),
        (5, "dynomial goldens", c5_dynomial_goldens, BUDGET_DEFAULT),
        (6, "trinomial goldens", c6_trinomial_goldens, BUDGET_DEFAULT),
        (7, "dynomial pair scan", c7_appendix_b, BUDGET_LONG),
        (8, "trinomial scan", c8_appendix_c, BUDGET_DEFAULT),
        (9, "generator conjecture", c9_appendix_d, BUDGET_LONG),
        (10, "Mersenne totient deficit", c10_appendix_e, BUDGET_DEFAULT),
        (11, "F_9 upper-bound search", c11_appendix_f, BUDGET_DEFAULT),
        (12, "lower bounds q <= 50", c12_lower_bounds, BUDGET_DEFAULT),
        (13, "Szymiczek and trace", c13_szymiczek_trace, BUDGET_DEFAULT),
        (14, "char 2 generator bounds", c14_char2_bounds, BUDGET_DEFAULT),
    ];
    let mut failed = Vec::new();
    for (id, name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("{detail}; over budget ({elapsed:.1?} > {budget:?})")),
            other => other,
        };
        match &outcome {
            Ok(detail) => println!("criterion {id:>2}: PASS  {name}: {detail} [{elapsed:.1?}]"),
            Err(why) => {
                println!("criterion {id:>2}: FAIL  {name}: {why} [{elapsed:.1?}]");
                failed.push(id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
