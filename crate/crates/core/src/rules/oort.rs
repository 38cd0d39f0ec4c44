use core::fmt;

use crate::error::Result;
use crate::groups::{
    cyclic_by_p_subgroups, dihedral_group, is_isomorphic, reference_group, FiniteGroup, GroupType,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OortStatus {
    Oort,
    NotOort,
    /// Every cyclic-by-p subgroup is cyclic or `D(p^n)`, and some is
    /// `D(p^n)` with `n > 1`, a case that is not settled.
    ConjecturalDpn,
}

impl OortStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            OortStatus::Oort => "OORT",
            OortStatus::NotOort => "NOT_OORT",
            OortStatus::ConjecturalDpn => "CONJECTURAL_Dpn",
        }
    }
}

impl fmt::Display for OortStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `Some(n)` when `m = p^n` with `n >= 1`.
fn p_power_exponent(mut m: usize, p: usize) -> Option<u32> {
    let mut n = 0;
    while m > 1 && m.is_multiple_of(p) {
        m /= p;
        n += 1;
    }
    (m == 1 && n > 0).then_some(n)
}

/// Oort status from the cyclic-by-p subgroups of `g`: each must be cyclic,
/// dihedral `D(p^n)`, or `A4` when `p = 2`.
pub fn oort_status(g: &FiniteGroup, p: u64) -> Result<OortStatus> {
    let p = p as usize;
    let mut status = OortStatus::Oort;
    for elems in cyclic_by_p_subgroups(g, p)? {
        let h = g.induced(&elems)?;
        if h.is_cyclic() {
            continue;
        }
        let n = h.order();
        if p == 2 && n == 12 && is_isomorphic(&h, &reference_group(&GroupType::A4)?).is_some() {
            continue;
        }
        if n % 2 == 0 {
            if let Some(k) = p_power_exponent(n / 2, p) {
                if n / 2 >= 2 && is_isomorphic(&h, &dihedral_group(n / 2)?).is_some() {
                    if k > 1 {
                        status = OortStatus::ConjecturalDpn;
                    }
                    continue;
                }
            }
        }
        return Ok(OortStatus::NotOort);
    }
    Ok(status)
}
