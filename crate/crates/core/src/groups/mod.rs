//! Finite groups as Cayley tables: construction, named reference groups,
//! isomorphism testing, presentations, identification and subgroups.

mod identify;
mod iso;
mod present;
mod reference;
mod subgroups;
mod table;
mod types;

pub use identify::{identify, MAX_IDENTIFY_ORDER};
pub use iso::{is_isomorphic, is_isomorphism, small_generating_set, Fingerprint};
pub use present::{
    find_presentation_pair, presentation_holds, presentation_of, realize_presentation,
    realize_type, Word, DEFAULT_COSET_LIMIT,
};
pub use reference::{
    cyclic_group, dihedral_group, elementary_abelian, permutation_group, quaternion_group,
    reference_group,
};
pub use subgroups::{cyclic_by_p_subgroups, is_cyclic_by_p, subgroups, MAX_SUBGROUP_SCAN_ORDER};
pub use table::{FiniteGroup, MAX_GROUP_ORDER};
pub use types::GroupType;
