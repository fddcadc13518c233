//! Squares in finite fields, Legendre symbols, traces in characteristic 2 and
//! power sums over generators.

use quiddity_lab::arith::{legendre, splits_char2, square_table, szymiczek_formula, szymiczek_sum_check, trace_char2};
use quiddity_lab::ring_core::FiniteRing;

fn main() {
    for spec in ["GF(3^2):1,0,1", "GF(5^2):2,1,1", "Z/23"] {
        let f = FiniteRing::parse(spec).unwrap();
        let sq: Vec<String> = square_table(&f).unwrap().iter().map(|&x| f.display(x)).collect();
        println!("squares of {spec}: {}", sq.join(", "));
    }

    let row: Vec<String> = (0..13).map(|a| legendre(a, 13).unwrap().as_i8().to_string()).collect();
    println!("(a/13) for a = 0..12: {}", row.join(" "));

    let f16 = FiniteRing::parse("GF(2^4):1,1,0,0,1").unwrap();
    let traces: Vec<String> = f16.elements().map(|x| trace_char2(&f16, x).unwrap().to_string()).collect();
    println!("traces over {f16}: {}", traces.join(""));
    let (a, b) = (f16.one(), f16.x());
    println!("X^2 + aX + b with a = 1, b = X splits over {f16}: {}", splits_char2(&f16, a, b).unwrap());

    let f = FiniteRing::zmod(11).unwrap();
    for m in [0, 1, 5, 10] {
        let value = szymiczek_formula(&f, m).unwrap();
        println!("sum of g^{m} over generators of {f}: {} (check {})", value.code(), szymiczek_sum_check(&f, m).unwrap());
    }
}
