//! Hyperelliptic curves `y^2 = f(x)` in odd characteristic, their branch
//! loci and automorphism groups.

mod aut;
mod form;
mod hyper;
mod moebius;

pub use aut::{
    automorphism_groups, lift_to_full, reduced_autgroup, reduced_autgroup_exhaustive,
    AutomorphismGroups, CurveAut, FullAutGroup, ReducedAutGroup,
};
pub use form::{moebius_act_form, BinaryForm};
pub use hyper::{branch_locus, BranchLocus, HyperCurve};
pub use moebius::{pgl_element_order, Moebius, P1Point};
