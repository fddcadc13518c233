//! Elements x in [2, (p-1)/2] whose x-trinomial minimal solution is irreducible.
//!
//! `cargo run --release --example trinomial_scan -- 17 31 43 79`

use quiddity_lab::bounds::scan_trinomial;
use quiddity_lab::families::trinomial_minimal;
use quiddity_lab::ring_core::FiniteRing;

fn main() {
    let mut primes: Vec<u64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    if primes.is_empty() {
        primes = vec![17, 31, 43, 79, 163];
    }
    for p in primes {
        match scan_trinomial(p) {
            Ok(xs) => {
                let field = FiniteRing::zmod(p).unwrap();
                let sizes: Vec<usize> = xs
                    .iter()
                    .map(|&x| trinomial_minimal(&field, field.from_int(x as i128)).unwrap().size)
                    .collect();
                println!("p = {p}: {} survivors {:?}", xs.len(), xs);
                println!("  sizes {sizes:?}");
            }
            Err(e) => println!("p = {p}: {e}"),
        }
    }
}
