//! A workbench for finite ccpBa's (pseudo-Boolean algebras with an extra
//! minimal negation), K_im-algebras, their relational frames, the
//! translations and dualities between them, and proof checking for the
//! matching Hilbert and sequent systems.

pub mod algebra;
pub mod bridge;
pub mod formula;
pub mod frames;
pub mod proofs;
pub mod text;
pub mod translate;

pub use algebra::classify::{classify, classify_algebra, ClassReport};
pub use algebra::eval::{algebra_valid, evaluate, sequent_valid, EvalError, Interpretation, Valuation, Verdict};
pub use algebra::kite::{classify_negation_pair, KiteReport, Witness};
pub use algebra::{Algebra, AlgebraError, Elem, FiniteLattice, HeytingAlgebra, KimAlgebra, LatticeError};
pub use formula::{atoms, match_scheme, parse, render, Formula, ParseError, Scheme, Sequent, Substitution};
