//! Pairs (a, b) mod p whose two discriminants are both non-squares; each such
//! pair gives an irreducible (a, b)-dynomial solution.
//!
//! `cargo run --release --example dynomial_scan -- 17`

use quiddity_lab::bounds::scan_dynomial_pairs;
use quiddity_lab::families::dynomial_minimal;
use quiddity_lab::ring_core::FiniteRing;

fn main() {
    let p: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(17);
    let pairs = match scan_dynomial_pairs(p) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!("{} pairs for p = {p}", pairs.len());
    let field = FiniteRing::zmod(p).unwrap();
    for &(a, b) in pairs.iter().take(12) {
        let r = dynomial_minimal(&field, field.from_int(a as i128), field.from_int(b as i128)).unwrap();
        println!("({a:>3}, {b:>3})  size {:>4}  irreducible by scan: {}", r.size, r.irreducible);
    }
}
