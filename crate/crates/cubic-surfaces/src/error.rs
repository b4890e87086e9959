//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    // field construction
    #[error("minimal polynomial is not squarefree")]
    NotSquarefree,
    #[error("minimal polynomial of degree >= 2 has the rational root {0}")]
    RationalRootFound(String),
    #[error("minimal polynomial must be monic of degree >= 1")]
    BadMinimalPolynomial,

    // scalar arithmetic
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible modulo the minimal polynomial")]
    NotInvertible,
    #[error("operands belong to different fields")]
    FieldMismatch,

    // parsing
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    // projective geometry
    #[error("the two points coincide")]
    CoincidentPoints,
    #[error("the lines are skew")]
    SkewLines,
    #[error("the lines are equal")]
    EqualLines,
    #[error("linear system has kernel of dimension != 1")]
    NonUniqueSolution,
    #[error("solved projectivity fails to map a line of the L-set")]
    PostCheckFailed,
    #[error("the six Plücker coordinates do not satisfy the quadric relation")]
    NotAPluckerVector,
    #[error("degenerate L-set frame")]
    DegenerateFrame,
    #[error("the five lines do not form an L-set")]
    InvalidLSet,

    // abstract combinatorics
    #[error("labels are not incident")]
    NotIncident,
    #[error("not a valid extended L-set")]
    InvalidExtendedLSet,

    // surfaces
    #[error("line does not lie on the surface")]
    NotOnSurface,
    #[error("exact division failed while computing a residue line")]
    DivisionFailed,
    #[error("three lines of a tritangent triple are not coplanar")]
    NotCoplanar,
    #[error("sixth-line coordinates vanish at these parameters")]
    DegenerateParameters,
    #[error("constructed lines are not pairwise distinct")]
    DuplicateLines,

    // families
    #[error("parameters lie on the singular locus: factor {0} vanishes")]
    SingularMember(String),
    #[error("missing parameter `{0}`")]
    MissingParameter(String),
    #[error("a substitution denominator vanishes: {0}")]
    DenominatorVanishes(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    // stabilizer
    #[error("stabilizer candidate set is not closed under composition")]
    ClosureViolation,
    #[error("unknown structure label `{0}`")]
    UnknownLabel(String),

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
