//! Lower and upper bounds on the largest irreducible solution over small fields.
//! The upper bound comes from the survivor search: tuples with no window whose
//! continuant is ±1.
//!
//! `cargo run --release --example ell_bounds -- "GF(3^2):1,0,1"`

use quiddity_lab::bounds::{ell_lower_bound, ell_theoretic_upper, ell_upper_bound_search, DEFAULT_SURVIVOR_CAP};
use quiddity_lab::ring_core::FiniteRing;

fn main() {
    let specs: Vec<String> = std::env::args().skip(1).collect();
    let specs = if specs.is_empty() {
        vec!["GF(2^2):1,1,1".to_string(), "Z/5".into(), "Z/7".into(), "GF(3^2):1,0,1".into(), "Z/11".into()]
    } else {
        specs
    };
    for spec in specs {
        let f = FiniteRing::parse(&spec).unwrap();
        let lower = ell_lower_bound(&f).unwrap();
        let search = ell_upper_bound_search(&f, 40, DEFAULT_SURVIVOR_CAP).unwrap();
        let witness: Vec<String> = lower.lower_witness.params.iter().map(|&x| f.display(x)).collect();
        println!("{spec}");
        println!("  lower {} from {} ({})", lower.lower, lower.strategy.label(), witness.join(", "));
        match search.upper {
            Some(u) => println!("  upper {u}, no survivors of length {}", search.cutoff.unwrap()),
            None => println!("  survivor search stopped, budget exhausted: {}", search.budget_exhausted),
        }
        println!("  survivors per length {:?}", &search.counts[1..]);
        println!("  group-order bound {}", ell_theoretic_upper(&f));
    }
}
