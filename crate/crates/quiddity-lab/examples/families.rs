//! Minimal solutions of the seven special shapes, with the verdict and what decided it.

use quiddity_lab::families::{construct, FamilyKind, FamilyReport};
use quiddity_lab::ring_core::FiniteRing;

fn report(spec: &str, kind: FamilyKind, params: &[&str]) {
    let ring = FiniteRing::parse(spec).unwrap();
    let ps: Vec<_> = params.iter().map(|p| ring.parse_element(p).unwrap()).collect();
    match construct(&ring, kind, &ps) {
        Ok(r) => print_report(&ring, &r),
        Err(e) => println!("{kind:<14} {spec:<16} {params:?}: {e}"),
    }
}

fn print_report(ring: &FiniteRing, r: &FamilyReport) {
    let params: Vec<String> = r.params.iter().map(|&x| ring.display(x)).collect();
    let verdict = if r.irreducible { "irreducible" } else { "reducible" };
    println!(
        "{:<14} {:<16} ({:<8}) size {:>4}  {:<11} by {}",
        r.kind.name(),
        ring.spec(),
        params.join(", "),
        r.size,
        verdict,
        r.decided_by.label()
    );
}

fn main() {
    report("GF(2^2):1,1,1", FamilyKind::Monomial, &["[0,1]"]);
    report("Z/6", FamilyKind::Monomial, &["3"]);
    report("Z/7", FamilyKind::Dynomial, &["3", "4"]);
    report("Z/49", FamilyKind::Dynomial, &["2", "3"]);
    report("Z/77", FamilyKind::Dynomial, &["2", "5"]);
    report("Z/7", FamilyKind::Trinomial, &["4"]);
    report("Z/7", FamilyKind::Trinomial, &["2"]);
    report("Z/31", FamilyKind::Trinomial, &["3"]);
    report("Z/43", FamilyKind::Quadrinomial, &["2", "4"]);
    report("Z/21", FamilyKind::QuasiMonomial, &["4"]);
    report("Z/11", FamilyKind::Towed, &["8"]);
    report("Z/11", FamilyKind::Towed, &["3"]);
    report("GF(3^2):1,0,1", FamilyKind::Polarized, &["[0,1]"]);
    report("Z/7", FamilyKind::Dynomial, &["2", "2"]);
}
