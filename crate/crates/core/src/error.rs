use thiserror::Error;

use crate::algebra::{Elem, Kind};

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table `{table}` has shape mismatch: expected {expected}, got {got}")]
    Shape {
        table: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("table `{table}` entry ({row},{col}) = {value} is outside 0..{order}")]
    EntryOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: Elem,
        order: usize,
    },

    #[error("multiplication table is not a Latin square: value {value} repeats in {line} {index}")]
    NotLatinSquare {
        line: &'static str,
        index: usize,
        value: Elem,
    },

    #[error("element 0 is not a two-sided unit (0*{witness} or {witness}*0 differs from {witness})")]
    NoUnit { witness: Elem },

    #[error("multiplication is not associative: ({0}*{1})*{2} != {0}*({1}*{2})", .witness.0, .witness.1, .witness.2)]
    NotAssociative { witness: (Elem, Elem, Elem) },

    #[error("axiom `{axiom}` fails at {witness:?}")]
    AxiomViolation {
        axiom: &'static str,
        witness: (Elem, Elem, Elem),
    },

    #[error("word has arity {expected} but {got} arguments were supplied")]
    ArityMismatch { expected: usize, got: usize },

    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),

    #[error("operation is not available for {kind:?}-kind algebras: {what}")]
    KindUnsupported { kind: Kind, what: &'static str },

    #[error("work estimate {estimate} exceeds budget {budget} ({context}, arity {arity})")]
    BudgetExceeded {
        context: &'static str,
        arity: usize,
        estimate: u128,
        budget: u64,
    },

    #[error("square does not commute at apex element {witness}")]
    NonCommutingSquare { witness: Elem },

    #[error("relation is not an equivalence relation: {0}")]
    NotEquivalenceRelation(&'static str),

    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("homomorphism is not surjective")]
    NotSurjective,

    #[error("objects live over different parent algebras")]
    ParentMismatch,

    #[error("subset is not closed under the operations")]
    NotClosed,

    #[error("no centralising ideal passed the double-centrality test")]
    NoCentralizingIdeal,

    #[error("the four induced pullback squares disagree: {verdicts:?}")]
    SquareDisagreement { verdicts: [bool; 4] },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
