//! Continuants and λ-quiddities over finite rings.
//!
//! A λ-quiddity of size n over a commutative ring A is a tuple
//! `(a_1, ..., a_n)` with `M_n(a_1, ..., a_n) = ±Id`, where `M_n` is the
//! product of the matrices `[[a_i, -1], [1, 0]]`. This crate works over
//! Z/NZ and GF(p^n) and covers:
//!
//! - [`ring_core`]: exact arithmetic, element orders, generators;
//! - [`arith`]: Legendre symbols, square tests, factorization, φ and μ;
//! - [`continuant`]: continuants, `M_n`, completion of a ±1 continuant to a solution;
//! - [`quiddity`]: the sum `⊕`, the equivalence `~`, and reducibility with witnesses;
//! - [`families`]: monomial, dynomial, trinomial, quadrinomial, quasi-monomial,
//!   towed and polarized solutions;
//! - [`bounds`]: bounds on the largest irreducible size and prime scans;
//! - [`cli`]: the `quiddity-lab` command line.
//!
//! ```
//! use quiddity_lab::ring_core::FiniteRing;
//! use quiddity_lab::quiddity::{QuiddityTuple, Reducibility};
//!
//! let ring = FiniteRing::parse("Z/7").unwrap();
//! let twos = vec![ring.from_int(2); 7];
//! let sol = QuiddityTuple::new(&ring, twos).unwrap();
//! assert_eq!(sol.reducibility(), Reducibility::Irreducible);
//! ```

pub mod arith;
pub mod bounds;
pub mod cli;
pub mod continuant;
pub mod families;
pub mod quiddity;
pub mod ring_core;
