//! Generators of GF(2^n)* whose trinomial solution is irreducible, giving
//! irreducible solutions of size 3(2^n - 1).
//!
//! `cargo run --release --example char2_bounds -- 12`

use quiddity_lab::bounds::char2_generator_bound;
use quiddity_lab::ring_core::{FiniteRing, RingKind};

fn main() {
    let top: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    for n in 2..=top.min(16) {
        let field = FiniteRing::gf_default(2, n).unwrap();
        let RingKind::Gf { modpoly, .. } = field.kind() else { unreachable!() };
        let b = char2_generator_bound(n, modpoly).unwrap();
        let g = b.generator.map_or("none".into(), |g| field.display(g));
        let size = b.size.map_or("-".into(), |s| s.to_string());
        println!(
            "{:<32} generator {:<12} size {:>6}  n odd and 2^n-1 squarefree: {:<5}  phi condition: {}",
            field.spec(),
            g,
            size,
            b.odd_squarefree,
            b.phi_condition
        );
    }
}
