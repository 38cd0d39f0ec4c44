use crate::error::{Error, Result};
use crate::groups::{identify, is_isomorphic, FiniteGroup, GroupType};

use super::extension_match;

/// Structural facts that every computed pair (reduced group `H`, full group
/// `G`) has to satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub reduced_order: usize,
    pub full_order: usize,
    pub reduced_type: GroupType,
    pub full_type: GroupType,
    /// `|G| = 2 |H|`.
    pub order_doubles: bool,
    pub sigma_central: bool,
    /// `G / <sigma>` is isomorphic to `H`.
    pub quotient_isomorphic: bool,
    /// `G` is isomorphic to one of the extensions allowed over the type of
    /// `H`, or `H` is outside the extension table.
    pub extension_consistent: bool,
    pub associative: bool,
}

impl StructureReport {
    pub fn all_passed(&self) -> bool {
        self.order_doubles
            && self.sigma_central
            && self.quotient_isomorphic
            && self.extension_consistent
            && self.associative
    }
}

pub fn check_structure(
    reduced: &FiniteGroup,
    full: &FiniteGroup,
    sigma: usize,
) -> Result<StructureReport> {
    let reduced_type = identify(reduced);
    let full_type = identify(full);
    let sigma_central = full.element_order(sigma) == 2 && full.center().contains(&sigma);
    let quotient_isomorphic = sigma_central && {
        let q = full.quotient(&full.closure(&[sigma]))?;
        is_isomorphic(&q, reduced).is_some()
    };
    // Reduced groups outside the extension table (p-semidirect products,
    // PSL2, PGL2) only get the order check.
    let extension_consistent = match extension_match(full, &reduced_type) {
        Ok(m) => m.is_some(),
        Err(Error::NotInTable(_)) => true,
        Err(e) => return Err(e),
    };
    Ok(StructureReport {
        reduced_order: reduced.order(),
        full_order: full.order(),
        order_doubles: full.order() == 2 * reduced.order(),
        sigma_central,
        quotient_isomorphic,
        extension_consistent,
        associative: reduced.is_associative() && full.is_associative(),
        reduced_type,
        full_type,
    })
}
