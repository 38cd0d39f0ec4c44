use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::polys::{build_family_polys, FWord, FamilyCase, Variant};
use crate::algebra::{FqCtx, QuadInt};
use crate::error::{Error, Result};
use crate::poly::{
    expand_claimed_factorization, squarefree_decompose, CharZeroPoly, FactoredForm, FqPoly,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClaimStatus {
    Equal,
    Unequal,
    NotClaimed,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::Equal => "equal",
            ClaimStatus::Unequal => "unequal",
            ClaimStatus::NotClaimed => "not-claimed",
        }
    }
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimMatch {
    pub claim: String,
    pub status: ClaimStatus,
}

/// What happens to `y^2 = F(x)` modulo `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub f: CharZeroPoly,
    pub p: u64,
    /// `F_p`, or `F_{p^2}` when a square root in the coefficients needs it.
    pub field: FqCtx,
    pub fbar: FqPoly,
    pub factored: FactoredForm,
    pub genus: usize,
    pub residual_genus: usize,
    pub branch_points: usize,
    pub residual_branch_points: usize,
    pub good_reduction: bool,
    pub claim_matches: Vec<ClaimMatch>,
}

impl ReductionReport {
    /// Compares `claim` with the reduction and records the outcome.
    pub fn check_claim(&mut self, name: impl Into<String>, claim: &FactoredForm) -> bool {
        let equal = claim.unit.ctx() == &self.field
            && expand_claimed_factorization(claim, &self.fbar).equal;
        self.claim_matches.push(ClaimMatch {
            claim: name.into(),
            status: if equal {
                ClaimStatus::Equal
            } else {
                ClaimStatus::Unequal
            },
        });
        equal
    }

    pub fn note_unclaimed(&mut self, name: impl Into<String>) {
        self.claim_matches.push(ClaimMatch {
            claim: name.into(),
            status: ClaimStatus::NotClaimed,
        });
    }
}

/// Branch points of `y^2 = h` for a polynomial of degree `n` with distinct
/// roots: the roots, plus infinity when `n` is odd.
fn branch_count(n: usize) -> usize {
    n + n % 2
}

fn genus_of(branch: usize) -> usize {
    branch.saturating_sub(2) / 2
}

/// Reduces `F` modulo `p` and compares the genus of `y^2 = F` with that of
/// `y^2 = rad(F mod p)`.
pub fn reduction_report(f: &CharZeroPoly, p: u64) -> Result<ReductionReport> {
    if p == 2 {
        return Err(Error::CharacteristicTwo);
    }
    if !f.is_squarefree_char0() {
        return Err(Error::NotSquarefree);
    }
    let field = f.reduction_field(p)?;
    let fbar = f.reduce_mod_p(&field)?;
    let factored = squarefree_decompose(&fbar)?;
    let n = f.degree().unwrap_or(0);
    let branch_points = branch_count(n);
    let residual_branch_points = branch_count(factored.radical().degree().unwrap_or(0));
    let genus = genus_of(branch_points);
    let residual_genus = genus_of(residual_branch_points);
    let good_reduction = factored.is_squarefree() && residual_branch_points == branch_points;
    Ok(ReductionReport {
        f: f.clone(),
        p,
        field,
        fbar,
        factored,
        genus,
        residual_genus,
        branch_points,
        residual_branch_points,
        good_reduction,
        claim_matches: Vec::new(),
    })
}

/// The published list of admissible words for `(case, p)`, if there is one.
pub fn paper_word_list(case: FamilyCase, p: u64) -> Option<&'static [&'static str]> {
    match (case, p) {
        (FamilyCase::A5, 3) => Some(&["L", "SL", "T"]),
        (FamilyCase::A5, 5) => Some(&["L", "SL", "TL", "STL", "RL", "RSG"]),
        (FamilyCase::A4, 3) => Some(&["L", "RL", "TL", "TRL"]),
        (FamilyCase::S4, 3) => Some(&["L", "TL"]),
        _ => None,
    }
}

/// Outcome of one candidate word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordOutcome {
    pub word: FWord,
    pub good_reduction: bool,
    pub genus: usize,
    pub residual_genus: usize,
    /// Set when `F` could not be formed or reduced.
    pub error: Option<String>,
}

/// Computed admissible words next to the published list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordsReport {
    pub case: FamilyCase,
    pub p: u64,
    pub variant: Variant,
    pub outcomes: Vec<WordOutcome>,
    /// Words with good reduction, in the case's listing order.
    pub computed: Vec<FWord>,
    pub paper: Option<Vec<String>>,
    pub only_computed: Vec<FWord>,
    pub only_paper: Vec<FWord>,
    /// Published entries that are not words over `R, S, T, L`.
    pub unparseable: Vec<String>,
    /// Published entries that parse but are not forms of this case.
    pub outside_case: Vec<String>,
}

impl WordsReport {
    pub fn agrees(&self) -> bool {
        self.paper.is_some()
            && self.only_computed.is_empty()
            && self.only_paper.is_empty()
            && self.unparseable.is_empty()
            && self.outside_case.is_empty()
    }
}

/// All forms of the case whose `F` has good reduction at `p`, diffed against
/// the published list.
pub fn allowed_f_words(
    case: FamilyCase,
    p: u64,
    variant: Variant,
    lambdas: &[QuadInt],
) -> Result<WordsReport> {
    if p != 3 && p != 5 {
        return Err(Error::Precondition(format!(
            "p = {p}: only 3 and 5 are covered"
        )));
    }
    let polys = build_family_polys(case, variant, lambdas)?;
    let words = case.words();
    let mut outcomes = Vec::new();
    for &w in &words {
        let f = polys.product(w);
        match reduction_report(&f, p) {
            Ok(rep) => outcomes.push(WordOutcome {
                word: w,
                good_reduction: rep.good_reduction,
                genus: rep.genus,
                residual_genus: rep.residual_genus,
                error: None,
            }),
            Err(e) => outcomes.push(WordOutcome {
                word: w,
                good_reduction: false,
                genus: 0,
                residual_genus: 0,
                error: Some(e.to_string()),
            }),
        }
    }
    let computed: Vec<FWord> = outcomes
        .iter()
        .filter(|o| o.good_reduction)
        .map(|o| o.word)
        .collect();
    let mut unparseable = Vec::new();
    let mut outside_case = Vec::new();
    let mut listed = Vec::new();
    let paper = paper_word_list(case, p).map(|l| l.iter().map(|s| s.to_string()).collect());
    if let Some(list) = paper_word_list(case, p) {
        for &entry in list {
            match entry.parse::<FWord>() {
                Err(_) => unparseable.push(entry.to_string()),
                Ok(w) if !words.contains(&w) => outside_case.push(entry.to_string()),
                Ok(w) => listed.push(w),
            }
        }
    }
    let only_computed = if paper.is_some() {
        computed
            .iter()
            .filter(|w| !listed.contains(w))
            .copied()
            .collect()
    } else {
        Vec::new()
    };
    let only_paper = listed
        .iter()
        .filter(|w| !computed.contains(w))
        .copied()
        .collect();
    Ok(WordsReport {
        case,
        p,
        variant,
        outcomes,
        computed,
        paper,
        only_computed,
        only_paper,
        unparseable,
        outside_case,
    })
}
