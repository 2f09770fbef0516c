//! Error type shared by every construction in the crate.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building or checking a finite structure.
///
/// Semantic variants carry a concrete witness (element indices) so that the
/// failing instance can be reproduced by hand.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier must have at least one element")]
    EmptyCarrier,
    #[error("carrier names must be distinct and non-empty (offending name {0:?})")]
    BadName(String),
    #[error("carrier mismatch: {left} elements vs {right} elements")]
    CarrierMismatch { left: usize, right: usize },
    #[error("meet of an empty family of relations")]
    EmptyMeet,
    #[error("{what}: size {size} exceeds the enumeration guard {limit}")]
    GuardTripped { what: &'static str, size: u64, limit: u64 },
    #[error("index {index} out of range for carrier of size {size}")]
    OutOfRange { index: usize, size: usize },
    #[error("join table must be {expected}x{expected}")]
    TableShape { expected: usize },
    #[error("idempotence fails at {a}: {a} v {a} = {got}")]
    Idempotence { a: usize, got: usize },
    #[error("commutativity fails at ({a}, {b}): {a} v {b} = {ab} but {b} v {a} = {ba}")]
    Commutativity { a: usize, b: usize, ab: usize, ba: usize },
    #[error("associativity fails at ({a}, {b}, {c}): (a v b) v c = {left} but a v (b v c) = {right}")]
    Associativity { a: usize, b: usize, c: usize, left: usize, right: usize },
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not transitive: ({a}, {b}) and ({b}, {c}) present but ({a}, {c}) absent")]
    NotTransitive { a: usize, b: usize, c: usize },
    #[error("relation is not antisymmetric: ({a}, {b}) and ({b}, {a}) both present")]
    NotAntisymmetric { a: usize, b: usize },
    #[error("relation is not symmetric: ({a}, {b}) present but ({b}, {a}) absent")]
    NotSymmetric { a: usize, b: usize },
    #[error("preorder is not coarser than the order: {a} <= {b} but ({a}, {b}) absent")]
    NotCoarser { a: usize, b: usize },
    #[error("compatibility fails at ({a}, {a1}, {b}): {a} and {a1} are below {b} but {a} v {a1} is not")]
    JoinCompatibility { a: usize, a1: usize, b: usize },
    #[error("congruence fails at ({a}, {b}, {c}): {a} ~ {b} but {a} v {c} !~ {b} v {c}")]
    NotCongruence { a: usize, b: usize, c: usize },
    #[error("pair of elements {a}, {b} has no least upper bound")]
    NoJoin { a: usize, b: usize },
    #[error("map has length {got}, expected {expected}")]
    MapLength { got: usize, expected: usize },
    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("map is not surjective: {0} has no preimage")]
    NotSurjective(usize),
    #[error("map is not order preserving: {a} <= {b} but image {fa} !<= {fb}")]
    NotMonotone { a: usize, b: usize, fa: usize, fb: usize },
    #[error("structures have different sources")]
    SourceMismatch,
    #[error("signature error: {0}")]
    Signature(String),
    #[error("signature mismatch between domain and codomain")]
    SignatureMismatch,
    #[error("function table for {name} is not total: missing argument tuple {args:?}")]
    PartialFunction { name: String, args: Vec<usize> },
    #[error("{rel}* does not contain {rel}: {tuple:?} in {rel} but not in {rel}*")]
    StarNotSuperset { rel: String, tuple: Vec<usize> },
    #[error("theta is not compatible with {fun}: arguments {xs:?} ~ {ys:?} but images are not related")]
    ThetaNotFunctionCongruence { fun: String, xs: Vec<usize>, ys: Vec<usize> },
    #[error("{rel}* is not theta-saturated: {xs:?} holds, {ys:?} is related but does not hold")]
    StarNotSaturated { rel: String, xs: Vec<usize>, ys: Vec<usize> },
    #[error("partition does not cover the carrier exactly once: {0}")]
    BadPartition(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{0}")]
    CheckFailed(String),
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// True for errors caused by malformed input rather than a failed semantic check.
    pub fn is_syntactic(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Usage(_))
    }
}
