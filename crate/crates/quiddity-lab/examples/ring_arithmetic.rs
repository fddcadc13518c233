//! Arithmetic in Z/NZ and GF(p^n): parsing, inverses, orders and generators.
//!
//! `cargo run --example ring_arithmetic -- "GF(3^2):1,0,1"`

use quiddity_lab::ring_core::FiniteRing;

fn main() {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "GF(3^2):1,0,1".into());
    let ring = match FiniteRing::parse(&spec) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{spec}: {e}");
            std::process::exit(1);
        }
    };
    println!("{ring}: {} elements, characteristic {}, field: {}", ring.cardinality(), ring.characteristic(), ring.is_field());

    for x in ring.elements() {
        let inv = ring.inv(x).map(|y| ring.display(y)).unwrap_or_else(|_| "-".into());
        let order = ring.element_order(x).map(|o| o.to_string()).unwrap_or_else(|_| "-".into());
        println!("{:>8}  inverse {:>8}  order {:>4}  square {:>8}", ring.display(x), inv, order, ring.display(ring.mul(x, x)));
    }

    if ring.is_field() {
        let gens: Vec<String> = ring.generators().unwrap().iter().map(|&g| ring.display(g)).collect();
        println!("generators of the unit group: {}", gens.join(", "));
    }
}
