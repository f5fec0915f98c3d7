//! Exact computer algebra for double Schubert polynomials of the classical
//! types and the multi-Schur Pfaffian formulas attached to vexillary
//! (signed) permutations.
//!
//! The crate is organised bottom-up:
//!
//! * [`polycore`] – dyadic scalars and sparse polynomials,
//! * [`gamma`] – the ring generated by `Q_1, Q_2, …` modulo `Q·Q* = 1`,
//! * [`weyl`] – signed permutations and Coxeter combinatorics,
//! * [`triples`] – the `(k, p, q)` data indexing vexillary elements,
//! * [`multischur`] – Pfaffians and determinants of coefficient series,
//! * [`schubert`] – divided differences and Schubert polynomials,
//! * [`appendix`] – the operator calculus behind the Pfaffian pushforward,
//! * [`io`] and [`verify`] – serialisation and the verification suites.

pub mod appendix;
pub mod gamma;
pub mod io;
pub mod multischur;
pub mod polycore;
pub mod schubert;
pub mod triples;
pub mod verify;
pub mod weyl;

pub use polycore::{Dyadic, Family, Monomial, Polynomial, Var};
pub use gamma::{GammaElement, GeneratorSeries, SeriesUnit, StrictPartition};
pub use schubert::SchubertPolynomial;
pub use triples::{Triple, TripleClass};
pub use weyl::{Generator, SignedPermutation, WeylType};
