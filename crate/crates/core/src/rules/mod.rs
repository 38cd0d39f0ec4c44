//! Decision tables: which finite subgroups of `PGL_2` embed in
//! characteristic 0, which full groups sit over a given reduced group, when
//! a hyperelliptic automorphism group lifts, and Oort status.

mod oort;
mod structure;
mod tables;

pub use oort::{oort_status, OortStatus};
pub use structure::{check_structure, StructureReport};
pub use tables::{
    consistency_checks, embeddable_char0, extension_match, hyperelliptic_liftable,
    hyperelliptic_liftable_group, large_p_verdict, quotient_extensions, quotient_group_candidates,
    CandidateFamily, CheckEntry, ConsistencyReport, EmbedVerdict, LiftFlags, LiftVerdict,
};
