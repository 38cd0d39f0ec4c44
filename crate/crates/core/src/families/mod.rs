//! The explicit invariant families for reduced groups `A5`, `A4` and `S4`,
//! their reductions modulo 3 and 5, and the cyclic curve equation shapes.

mod claims;
mod cyclic;
mod polys;
mod reduction;

pub use claims::{
    claim_form, claim_summary, claims_for, find_result, verify_paper_claims, ClaimOutcome,
    ClaimResult, ClaimVerdict, Expect, PaperClaim, Target, CLAIMS, CLAIM_LAMBDAS,
};
pub use cyclic::{
    cyclic_curve_equation, shaska_u_invariants, CyclicEquation, CyclicKind, Z2pShape,
};
pub use polys::{build_f, build_family_polys, FWord, FamilyCase, FamilyPolys, FamilySpec, Variant};
pub use reduction::{
    allowed_f_words, paper_word_list, reduction_report, ClaimMatch, ClaimStatus, ReductionReport,
    WordOutcome, WordsReport,
};
