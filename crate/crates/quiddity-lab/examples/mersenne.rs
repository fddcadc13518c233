//! Factorizations of 2^n - 1 and the exponents where phi(2^n - 1) < 2^(n-1).
//!
//! `cargo run --example mersenne -- 2 64`

use quiddity_lab::arith::{mersenne_factorization, mersenne_phi_deficit};

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u32>().expect("integer"));
    let a = args.next().unwrap_or(2);
    let b = args.next().unwrap_or(64);

    for n in a..=b.min(24) {
        let f = mersenne_factorization(n).unwrap();
        let parts: Vec<String> = f
            .pairs
            .iter()
            .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        println!("2^{n:<2} - 1 = {:<10} = {:<24} phi = {}", f.value, parts.join(" * "), f.phi());
    }
    println!("deficient exponents in [{a}, {b}]: {:?}", mersenne_phi_deficit(a, b).unwrap());
}
