use thiserror::Error;

use crate::lattice::Elem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("diagram has no elements")]
    Empty,
    #[error("upper-cover table has {up} rows but lower-cover table has {down}")]
    LengthMismatch { up: usize, down: usize },
    #[error("element {element} out of range for a diagram with {len} elements")]
    OutOfRange { element: Elem, len: usize },
    #[error("element {element} lists cover {cover} twice (or itself)")]
    DuplicateCover { element: Elem, cover: Elem },
    #[error("cover lists disagree on {lower} < {upper}")]
    Inconsistent { lower: Elem, upper: Elem },
    #[error("cover graph has a cycle")]
    Cyclic,
    #[error("expected one minimum and one maximum, found {minima} and {maxima}")]
    NoBounds { minima: usize, maxima: usize },
    #[error("edge {lower} -> {upper} is implied by transitivity")]
    NotReduced { lower: Elem, upper: Elem },
    #[error("elements {x} and {y} have no {missing}")]
    NotALattice {
        x: Elem,
        y: Elem,
        missing: &'static str,
    },
    #[error("not rectangular: {0}")]
    NotRectangular(String),
    #[error("left/right boundary traced from the top differs from the one traced from the bottom")]
    BoundaryMismatch,
    #[error("cell under {top} between {left} and {right} is not a 4-cell")]
    NonQuadCell { top: Elem, left: Elem, right: Elem },
    #[error("element {element} is neither upper-boundary, meet-reducible nor middle")]
    ClassificationGap { element: Elem },
    #[error("claimed property `{0}` does not hold")]
    ClaimFailed(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("grid dimensions must be at least 2, got {p} x {q}")]
    BadDims { p: usize, q: usize },
    #[error("{0:?} is not a 4-cell of the lattice")]
    NotAFourCell([Elem; 4]),
    #[error("fork site (t = {t}, k = {k}) does not address a 4-cell")]
    BadForkSite { t: Elem, k: usize },
    #[error("fork insertion needs a slim rectangular lattice: {0}")]
    InputNotSlimRectangular(String),
    #[error("fork leg walk failed: {0}")]
    LegWalk(String),
    #[error("fork postcondition failed: {0}")]
    Postcondition(String),
    #[error("step {step}: {source}")]
    Replay {
        step: usize,
        #[source]
        source: Box<ConstructionError>,
    },
    #[error("bounds exceed the safety cap: {0}")]
    BoundsTooLarge(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("congruence lattice too large to enumerate: {0}")]
    TooLarge(String),
    #[error("not a prime ideal: {0}")]
    NotPrimeIdeal(String),
    #[error("the two routes to the least distributive congruence disagree")]
    RouteMismatch,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
