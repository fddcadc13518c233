//! Continuants, the matrix product M_n and completing a tuple to a solution.
//!
//! `cargo run --example continuants -- 11 2,2,2,2,2,2,2,2,2`

use quiddity_lab::cli::parse_tuple;
use quiddity_lab::continuant::{continuant, continuant_triple, extend_to_solution, m_matrix};
use quiddity_lab::ring_core::FiniteRing;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(11);
    let text = args.next().unwrap_or_else(|| "2,2,2,2,2,2,2,2,2".into());
    let ring = FiniteRing::zmod(n).expect("modulus >= 2");
    let t = parse_tuple(&ring, &text).expect("comma separated integers");

    let k = continuant(&ring, &t).unwrap();
    let m = m_matrix(&ring, &t).unwrap();
    let triple = continuant_triple(&ring, &t).unwrap();
    println!("tuple        {text} over {ring}");
    println!("K_n          {}", k.code());
    println!("K_(n-1) left {}  right {}", triple.k_n1_left.code(), triple.k_n1_right.code());
    println!("M_n          [[{}, {}], [{}, {}]]", m.a11.code(), m.a12.code(), m.a21.code(), m.a22.code());

    match extend_to_solution(&ring, &t) {
        Ok(s) => {
            let codes: Vec<String> = s.entries().iter().map(|x| x.code().to_string()).collect();
            println!("solution     ({}) with sign {}", codes.join(","), s.sign().as_i8());
        }
        Err(e) => println!("no completion: {e}"),
    }
}
