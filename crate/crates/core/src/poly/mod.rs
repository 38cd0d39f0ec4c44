//! Univariate polynomials over `F_{p^m}` and over `Z[sqrt(d)]`, with
//! squarefree decomposition and root finding over extension fields.

mod fq;
mod roots;
mod squarefree;
mod zpoly;

pub use fq::FqPoly;
pub use roots::{
    ddf_profile, roots_in_field, roots_over_extensions, splitting_degree, Root, SplitRoots,
};
pub use squarefree::{
    expand_claimed_factorization, squarefree_decompose, FactoredForm, MatchReport,
};
pub use zpoly::CharZeroPoly;
