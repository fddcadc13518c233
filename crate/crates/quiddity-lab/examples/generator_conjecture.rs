//! For each prime p, the first generator j of (Z/pZ)* with j^2 + 4 a non-square.
//!
//! `cargo run --release --example generator_conjecture -- 3 100000`

use quiddity_lab::bounds::conjecture_witnesses;

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().expect("integer"));
    let a = args.next().unwrap_or(3);
    let b = args.next().unwrap_or(10_000);
    let witnesses = conjecture_witnesses(a, b).unwrap();
    for (p, w) in witnesses.iter().take(15) {
        println!("p = {p:>5}: j = {}", w.map_or("none".into(), |j| j.to_string()));
    }
    let largest = witnesses.iter().filter_map(|(p, w)| w.map(|j| (j, *p))).max();
    let failures: Vec<u64> = witnesses.iter().filter(|(_, w)| w.is_none()).map(|(p, _)| *p).collect();
    println!("{} primes in ({a}, {b}], counterexamples {failures:?}", witnesses.len());
    if let Some((j, p)) = largest {
        println!("largest first witness: j = {j} for p = {p}");
    }
}
