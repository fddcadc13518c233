//! Solutions, the sum of two tuples, and deciding irreducibility with a witness.

use quiddity_lab::quiddity::{classify, equivalent, oplus, verify_witness, QuiddityTuple, Reducibility};
use quiddity_lab::ring_core::{Element, FiniteRing};

fn ints(r: &FiniteRing, xs: &[i128]) -> Vec<Element> {
    xs.iter().map(|&x| r.from_int(x)).collect()
}

fn show(r: &FiniteRing, xs: &[Element]) -> String {
    let s: Vec<String> = xs.iter().map(|&x| r.format(x)).collect();
    format!("({})", s.join(","))
}

fn main() {
    let r = FiniteRing::zmod(7).unwrap();

    let a = ints(&r, &[5, 2, 3, 2, 5]);
    let b = ints(&r, &[2; 7]);
    let sum = oplus(&r, &a, &b).unwrap();
    println!("{} + {} = {}", show(&r, &a), show(&r, &b), show(&r, &sum));

    for t in [ints(&r, &[2; 7]), ints(&r, &[2, 3, 2, 3, 2, 3, 2, 3]), sum] {
        let s = match QuiddityTuple::new(&r, t.clone()) {
            Ok(s) => s,
            Err(_) => {
                println!("{} is not a solution", show(&r, &t));
                continue;
            }
        };
        match classify(&s) {
            Reducibility::Irreducible => println!("{} irreducible", show(&r, &t)),
            Reducibility::NotApplicable => println!("{} too short to decide", show(&r, &t)),
            Reducibility::Reducible(w) => {
                assert!(verify_witness(&s, &w));
                println!(
                    "{} reducible: window {} at {}, {} ~ {} + {}",
                    show(&r, &t),
                    w.window_len,
                    w.start,
                    show(&r, &t),
                    show(&r, w.complement.entries()),
                    show(&r, w.summand.entries()),
                );
            }
        }
    }

    let x = ints(&r, &[1, 2, 3, 4]);
    let y = ints(&r, &[3, 2, 1, 4]);
    println!("{} ~ {}: {}", show(&r, &x), show(&r, &y), equivalent(&r, &x, &y).unwrap());
}
