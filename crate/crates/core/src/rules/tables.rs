use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{oort_status, OortStatus};
use crate::algebra::is_prime;
use crate::error::{Error, Result};
use crate::groups::{identify, is_isomorphic, realize_type, FiniteGroup, GroupType};

/// Whether a finite subgroup of `PGL_2` in characteristic `p` also occurs
/// in characteristic 0, with the clause that decided it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbedVerdict {
    pub embeddable: bool,
    pub clause: String,
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

pub fn embeddable_char0(h: &GroupType, p: u64) -> Result<EmbedVerdict> {
    use GroupType::*;
    check_prime(p)?;
    if h.is_unknown() {
        return Err(Error::NotInTable(h.clone()));
    }
    let pu = p as usize;
    let yes = |clause: &str| {
        Ok(EmbedVerdict {
            embeddable: true,
            clause: clause.into(),
        })
    };
    if !h.order().is_multiple_of(pu) {
        return yes("p does not divide |H|");
    }
    match h.canonical() {
        Cyclic(n) if n == pu => yes("H = Z(p)"),
        Dihedral(n) if n == pu && p != 2 => yes("H = D(p), p odd"),
        A4 if p == 2 => yes("H = A4, p = 2"),
        Dihedral(n) if p == 2 && n % 2 == 1 => yes("H = D(n), n odd, p = 2"),
        A5 if p <= 5 => yes("H = A5, p <= 5"),
        A4 | S4 if p == 3 => yes("H = A4 or S4, p = 3"),
        _ => Ok(EmbedVerdict {
            embeddable: false,
            clause: "p divides |H| and H is not one of the embeddable exceptions".into(),
        }),
    }
}

/// Full groups `G` with `G / <sigma>` isomorphic to `h`, for reduced groups
/// in characteristic 0.
pub fn quotient_extensions(h: &GroupType) -> Result<Vec<GroupType>> {
    use GroupType::*;
    let list = match h.canonical() {
        Cyclic(n) => vec![GroupType::z2(Cyclic(n)), Cyclic(2 * n)],
        Dihedral(n) => vec![
            GroupType::z2(Dihedral(n)),
            Vn(n),
            Dihedral(2 * n),
            Hn(n),
            Un(n),
            Gn(n),
        ],
        A4 => vec![GroupType::z2(A4), SL2_3],
        S4 => vec![GroupType::z2(S4), GL2_3, W2, W3],
        A5 => vec![GroupType::z2(A5), SL2_5],
        _ => return Err(Error::NotInTable(h.clone())),
    };
    let mut out: Vec<GroupType> = Vec::new();
    for t in list.into_iter().map(|t| t.canonical()) {
        if !out.contains(&t) {
            out.push(t);
        }
    }
    Ok(out)
}

/// The entry of `quotient_extensions(h)` isomorphic to `g`, if any.
pub fn extension_match(g: &FiniteGroup, h: &GroupType) -> Result<Option<GroupType>> {
    for t in quotient_extensions(h)? {
        if t.order() != g.order() {
            continue;
        }
        let r = realize_type(&t)?;
        if is_isomorphic(g, &r).is_some() {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LiftFlags {
    pub p_divides_order: bool,
    pub p_squared_divides_order: bool,
    /// Only known when a genus is supplied.
    pub p_le_2g_plus_1: Option<bool>,
}

impl LiftFlags {
    pub fn new(order: usize, p: u64, genus: Option<usize>) -> Self {
        let p = p as usize;
        LiftFlags {
            p_divides_order: order.is_multiple_of(p),
            p_squared_divides_order: order.is_multiple_of(p * p),
            p_le_2g_plus_1: genus.map(|g| p <= 2 * g + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftVerdict {
    pub liftable: bool,
    pub rule: String,
    /// `None` when the group itself is not available.
    pub oort: Option<OortStatus>,
    pub flags: LiftFlags,
}

pub const RULE_PRIME_TO_P: &str = "p does not divide |G|: tame action, always liftable";
const RULE_NOT_LISTED: &str = "p divides |G| and G is not in the liftable list";

fn liftable_rule(t: &GroupType, p: u64) -> Option<&'static str> {
    use GroupType::*;
    let pu = p as usize;
    match t.canonical() {
        Cyclic(n) if n == 2 * pu => Some("G = Z(2p)"),
        Dihedral(n) if n == 2 * pu => Some("G = D(2p)"),
        DirectZ2(inner) if p == 5 && *inner == A5 => Some("p = 5: G = Z2xA5 or SL2(5)"),
        SL2_5 if p == 5 => Some("p = 5: G = Z2xA5 or SL2(5)"),
        DirectZ2(inner) if p == 3 && matches!(*inner, A4 | S4 | A5) => {
            Some("p = 3: G = Z2xA4, Z2xS4, Z2xA5, SL2(3) or GL2(3)")
        }
        SL2_3 | GL2_3 if p == 3 => Some("p = 3: G = Z2xA4, Z2xS4, Z2xA5, SL2(3) or GL2(3)"),
        _ => None,
    }
}

fn liftable_decision(t: &GroupType, order: usize, p: u64) -> Result<(bool, String)> {
    if p == 2 {
        return Err(Error::CharacteristicTwo);
    }
    check_prime(p)?;
    if !order.is_multiple_of(p as usize) {
        return Ok((true, RULE_PRIME_TO_P.into()));
    }
    Ok(match liftable_rule(t, p) {
        Some(rule) => (true, rule.into()),
        None => (false, RULE_NOT_LISTED.into()),
    })
}

/// Liftability of a hyperelliptic automorphism group given by name.
///
/// The Oort status is computed on a realization of the type; it is `None`
/// only for `Unknown` types of order divisible by `p`.
pub fn hyperelliptic_liftable(t: &GroupType, p: u64) -> Result<LiftVerdict> {
    let order = t.order();
    let (liftable, rule) = liftable_decision(t, order, p)?;
    let oort = if !order.is_multiple_of(p as usize) {
        Some(OortStatus::Oort)
    } else if t.is_unknown() {
        None
    } else {
        Some(oort_status(&realize_type(t)?, p)?)
    };
    Ok(LiftVerdict {
        liftable,
        rule,
        oort,
        flags: LiftFlags::new(order, p, None),
    })
}

/// Liftability of a concrete group (identified first), with genus flags.
pub fn hyperelliptic_liftable_group(
    g: &FiniteGroup,
    p: u64,
    genus: Option<usize>,
) -> Result<(GroupType, LiftVerdict)> {
    let t = identify(g);
    let (liftable, rule) = liftable_decision(&t, g.order(), p)?;
    let oort = Some(oort_status(g, p)?);
    Ok((
        t,
        LiftVerdict {
            liftable,
            rule,
            oort,
            flags: LiftFlags::new(g.order(), p, genus),
        },
    ))
}

/// For `p > 2g + 1`: liftable iff `p` does not divide the group order.
pub fn large_p_verdict(genus: usize, p: u64, order: usize) -> Result<LiftVerdict> {
    check_prime(p)?;
    if genus < 2 {
        return Err(Error::GenusTooSmall(genus));
    }
    if p as usize <= 2 * genus + 1 {
        return Err(Error::Precondition(format!(
            "p = {p} is not larger than 2g+1 = {}",
            2 * genus + 1
        )));
    }
    let liftable = !order.is_multiple_of(p as usize);
    Ok(LiftVerdict {
        liftable,
        rule: "p > 2g+1: liftable iff p does not divide |G|".into(),
        oort: liftable.then_some(OortStatus::Oort),
        flags: LiftFlags::new(order, p, Some(genus)),
    })
}

/// Families of reduced groups possible in characteristic `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateFamily {
    Exact(GroupType),
    /// `Z(m)` for every `m` prime to `p`.
    CyclicPrimeTo(u64),
    /// `D(m)` for every `m` prime to `p`.
    DihedralPrimeTo(u64),
    /// `D(m)` for every odd `m`.
    DihedralOdd,
}

impl fmt::Display for CandidateFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CandidateFamily::Exact(t) => write!(f, "{t}"),
            CandidateFamily::CyclicPrimeTo(p) => write!(f, "Z(m), gcd(m,{p})=1"),
            CandidateFamily::DihedralPrimeTo(p) => write!(f, "D(m), gcd(m,{p})=1"),
            CandidateFamily::DihedralOdd => f.write_str("D(m), m odd"),
        }
    }
}

/// Possible quotients `G / N` with `N` the normal subgroup attached to a
/// cyclic cover, depending on whether `p` divides `|N|`.
pub fn quotient_group_candidates(p: u64, p_divides_n: bool) -> Result<Vec<CandidateFamily>> {
    use CandidateFamily::*;
    use GroupType::*;
    check_prime(p)?;
    let pu = p as usize;
    let mut out = vec![Exact(Cyclic(pu))];
    if p != 2 {
        out.push(Exact(Dihedral(pu)));
    }
    if p == 2 {
        out.push(Exact(A4));
        out.push(DihedralOdd);
    }
    if p <= 5 {
        out.push(Exact(A5));
    }
    if p == 3 {
        out.push(Exact(A4));
        out.push(Exact(S4));
    }
    if p_divides_n {
        out.push(CyclicPrimeTo(p));
        out.push(DihedralPrimeTo(p));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ConsistencyReport {
    pub entries: Vec<CheckEntry>,
}

impl ConsistencyReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Observations that must hold for a group of order divisible by `p`: a
/// liftable group has `p || |G|`, `p <= 2g+1` and is an Oort group, and a
/// non-liftable one is not known to be Oort.
pub fn consistency_checks(
    verdict: &LiftVerdict,
    order: usize,
    p: u64,
    genus: Option<usize>,
) -> ConsistencyReport {
    let pu = p as usize;
    let mut entries = Vec::new();
    // the divisibility checks only make sense under the hypothesis p | |G|
    if verdict.liftable && order.is_multiple_of(pu) {
        entries.push(CheckEntry {
            name: "p_divides_order",
            passed: true,
            detail: format!("{p} | {order}"),
        });
        entries.push(CheckEntry {
            name: "p_squared_not_dividing_order",
            passed: !order.is_multiple_of(pu * pu),
            detail: format!("{} does not divide {order}", pu * pu),
        });
        if let Some(g) = genus {
            entries.push(CheckEntry {
                name: "p_le_2g_plus_1",
                passed: pu <= 2 * g + 1,
                detail: format!("{p} <= {}", 2 * g + 1),
            });
        }
    }
    // without a group type there is no Oort status to compare against
    if let Some(oort) = verdict.oort {
        let (passed, lift) = if verdict.liftable {
            (oort == OortStatus::Oort, "liftable")
        } else {
            (oort != OortStatus::Oort, "not liftable")
        };
        entries.push(CheckEntry {
            name: "oort_equivalence",
            passed,
            detail: format!("{lift} and oort status {oort}"),
        });
    }
    ConsistencyReport { entries }
}
