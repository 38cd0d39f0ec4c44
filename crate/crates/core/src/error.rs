use alloc::string::String;

use thiserror::Error;

use crate::groups::GroupType;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("extension degree {0} outside 1..=24")]
    DegreeOutOfRange(usize),
    #[error("field of order {p}^{m} is too large")]
    FieldTooLarge { p: u64, m: usize },
    #[error("no irreducible polynomial of degree {m} found over F_{p}")]
    NoIrreducible { p: u64, m: usize },
    #[error("modulus is not a monic irreducible polynomial over F_{0}")]
    ReducibleModulus(u64),
    #[error("incompatible fields: {0}")]
    IncompatibleFields(String),
    #[error("sqrt({d}) has no residue in F_{p}^{m}; enlarge the field")]
    NoSqrtResidue { d: i64, p: u64, m: usize },
    #[error("{0} is not squarefree")]
    NotSquarefreeParameter(i64),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("splitting degree {needed} exceeds the bound {bound}")]
    SplittingBound { needed: usize, bound: usize },
    #[error("characteristic 2 curves are not supported")]
    CharacteristicTwo,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("genus {0} is below 2")]
    GenusTooSmall(usize),
    #[error("Moebius map does not scale the branch form")]
    MissingMultiplier,
    #[error("element set is not closed under the operation")]
    NotClosed,
    #[error("element set has no identity")]
    NoIdentity,
    #[error("element set has an element without inverse")]
    NoInverse,
    #[error("group of order {order} exceeds the bound {bound}")]
    GroupTooLarge { order: usize, bound: usize },
    #[error("{0} is known by presentation only")]
    NotConstructible(GroupType),
    #[error("group type {0} is not covered by this table")]
    NotInTable(GroupType),
    #[error("coset enumeration exceeded {0} cosets")]
    CosetLimit(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// True for errors caused by a size bound rather than by bad input.
    pub fn is_resource_bound(&self) -> bool {
        matches!(
            self,
            Error::SplittingBound { .. }
                | Error::GroupTooLarge { .. }
                | Error::CosetLimit(_)
                | Error::FieldTooLarge { .. }
        )
    }
}
