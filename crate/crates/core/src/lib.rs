//! Degree-sequence predicates, Nash-Williams sequence construction, and an
//! exhaustive verifier for forcibly hamiltonian degree sequences.
//!
//! A graphical sequence is *forcibly hamiltonian* when every simple graph
//! realizing it has a spanning cycle. The crate provides:
//!
//! - [`degseq`]: graphicality (Erdős–Gallai), Chvátal's condition, and
//!   recognition of the Nash-Williams `(n, k)` shape and its exceptional case.
//! - [`nwgen`]: the foundational `(n, k)`-sequences and the generator that
//!   turns each admissible modifier `π′` into a Nash-Williams sequence.
//! - [`graph`]: small labeled simple graphs, the extremal witness graphs,
//!   Bondy–Chvátal closure, hamiltonicity, circumference and 2-connectivity.
//! - [`realize`]: exhaustive enumeration of labeled realizations.
//! - [`verify`]: the verdict engine combining all of the above.
//! - [`cli`]: the `forcible` command-line front end.

pub mod cli;
pub mod degseq;
mod error;
pub mod graph;
pub mod nwgen;
pub mod realize;
pub mod verify;

pub use degseq::{ChvatalResult, DegreeSequence};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use nwgen::{NwParams, PiPrime};
pub use verify::{Verdict, VerificationReport};
