//! Relative commutators of ideals in finite groups and loops.
//!
//! Algebras are Cayley tables on `{0..n-1}` with `0` as the unit. On top of
//! congruences, ideals, quotients, kernel pairs and pullbacks the crate
//! provides verbal subobjects for subvarieties presented by identity words,
//! the extension-level tests (trivial, central, double central), and three
//! independent computations of the commutator `[M,N]_B`: from word values,
//! from loop associators, and as the least ideal whose quotient makes the
//! square on `M` and `N` double central.

pub mod algebra;
pub mod budget;
pub mod commutators;
pub mod congruence;
pub mod corpus;
pub mod error;
pub mod format;
pub mod galois;
pub mod hom;
pub mod ideal;
pub mod loops;
pub mod varieties;

pub use algebra::{AlgebraRef, Elem, FiniteAlgebra, Kind, RawTables, Subalgebra, ONE};
pub use budget::Budget;
pub use congruence::{congruence_generated, Congruence};
pub use corpus::{CorpusEntry, Source};
pub use error::{Error, Result};
pub use hom::{homomorphisms, is_pullback_square, kernel, kernel_pair, pullback, quotient, Homomorphism, PairAlgebra};
pub use ideal::{ideal_closure, product_ideal, Ideal};
pub use varieties::{verbal_subobject, VarietyDescriptor, Word};
