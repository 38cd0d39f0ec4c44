use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::polys::{build_family_polys, FamilyCase, FamilyPolys, Variant};
use crate::algebra::QuadInt;
use crate::error::{Error, Result};
use crate::poly::{
    ddf_profile, expand_claimed_factorization, squarefree_decompose, CharZeroPoly, FactoredForm,
    FqPoly,
};

/// Which member of a family a claim is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    R,
    S,
    T,
    G,
}

impl Target {
    fn pick(self, polys: &FamilyPolys) -> &CharZeroPoly {
        match self {
            Target::R => &polys.r,
            Target::S => &polys.s,
            Target::T => &polys.t,
            Target::G => &polys.gs[0],
        }
    }
}

/// Expected shape of a reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    /// `unit * prod f_i^{e_i}`; the unit is `lambda - 1` when the flag is
    /// set and 1 otherwise. Factors are integer coefficient lists, low first.
    Factored {
        lambda_unit: bool,
        factors: &'static [(&'static [i64], usize)],
    },
    Squarefree,
    /// Equal to the given polynomial, which must also be squarefree.
    SquarefreeEqual(&'static [i64]),
}

/// One published statement about a reduction modulo `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PaperClaim {
    pub name: &'static str,
    pub case: FamilyCase,
    pub target: Target,
    pub p: u64,
    pub expect: Expect,
}

const X10_PLUS_1: &[i64] = &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1];
const X4_PLUS_1: &[i64] = &[1, 0, 0, 0, 1];
const GOLDEN: &[i64] = &[-1, 1, 1];

/// Every reduction statement made for the A5, A4 and S4 families.
pub const CLAIMS: &[PaperClaim] = &[
    PaperClaim {
        name: "A5 G_i mod 3 = (lambda-1)(x^10+1)^6",
        case: FamilyCase::A5,
        target: Target::G,
        p: 3,
        expect: Expect::Factored {
            lambda_unit: true,
            factors: &[(X10_PLUS_1, 6)],
        },
    },
    PaperClaim {
        name: "A5 R mod 3 = (x^10+1)^3",
        case: FamilyCase::A5,
        target: Target::R,
        p: 3,
        expect: Expect::Factored {
            lambda_unit: false,
            factors: &[(X10_PLUS_1, 3)],
        },
    },
    PaperClaim {
        name: "A5 S mod 3 = (x^10+1)^2",
        case: FamilyCase::A5,
        target: Target::S,
        p: 3,
        expect: Expect::Factored {
            lambda_unit: false,
            factors: &[(X10_PLUS_1, 2)],
        },
    },
    PaperClaim {
        name: "A5 T mod 3 squarefree",
        case: FamilyCase::A5,
        target: Target::T,
        p: 3,
        expect: Expect::Squarefree,
    },
    PaperClaim {
        name: "A4 S mod 3 = (x^4+1)^2",
        case: FamilyCase::A4,
        target: Target::S,
        p: 3,
        expect: Expect::Factored {
            lambda_unit: false,
            factors: &[(X4_PLUS_1, 2)],
        },
    },
    PaperClaim {
        name: "A4 R mod 3 = x^4+1 squarefree",
        case: FamilyCase::A4,
        target: Target::R,
        p: 3,
        expect: Expect::SquarefreeEqual(X4_PLUS_1),
    },
    PaperClaim {
        name: "S4 R mod 3 = (x^4+1)^3",
        case: FamilyCase::S4,
        target: Target::R,
        p: 3,
        expect: Expect::Factored {
            lambda_unit: false,
            factors: &[(X4_PLUS_1, 3)],
        },
    },
    PaperClaim {
        name: "S4 S mod 3 = (x^4+1)^2",
        case: FamilyCase::S4,
        target: Target::S,
        p: 3,
        expect: Expect::Factored {
            lambda_unit: false,
            factors: &[(X4_PLUS_1, 2)],
        },
    },
    PaperClaim {
        name: "A5 G_i mod 5 = (lambda-1)(x^2+x-1)^30",
        case: FamilyCase::A5,
        target: Target::G,
        p: 5,
        expect: Expect::Factored {
            lambda_unit: true,
            factors: &[(GOLDEN, 30)],
        },
    },
    PaperClaim {
        name: "A5 R mod 5 = (x+2)^5(x-2)^25",
        case: FamilyCase::A5,
        target: Target::R,
        p: 5,
        expect: Expect::Factored {
            lambda_unit: false,
            factors: &[(&[2, 1], 5), (&[-2, 1], 25)],
        },
    },
    PaperClaim {
        name: "A5 S mod 5 = (x^2+x-1)^10",
        case: FamilyCase::A5,
        target: Target::S,
        p: 5,
        expect: Expect::Factored {
            lambda_unit: false,
            factors: &[(GOLDEN, 10)],
        },
    },
    PaperClaim {
        name: "A5 T mod 5 = (x^2-1)^5",
        case: FamilyCase::A5,
        target: Target::T,
        p: 5,
        expect: Expect::Factored {
            lambda_unit: false,
            factors: &[(&[-1, 0, 1], 5)],
        },
    },
];

/// Parameter values at which claims involving `lambda` are tested.
pub const CLAIM_LAMBDAS: [i64; 2] = [2, 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClaimOutcome {
    Pass,
    Fail,
}

impl ClaimOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimOutcome::Pass => "pass",
            ClaimOutcome::Fail => "fail",
        }
    }
}

impl fmt::Display for ClaimOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A claim checked against one variant of the polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub claim: String,
    pub source: Variant,
    pub status: ClaimOutcome,
    /// The computed squarefree decomposition(s), and irreducible factor
    /// degrees where squarefreeness is the question.
    pub detail: String,
}

/// Combined verdict over both variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClaimVerdict {
    Pass,
    Fail,
    VariantDependent,
}

impl ClaimVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimVerdict::Pass => "pass",
            ClaimVerdict::Fail => "fail",
            ClaimVerdict::VariantDependent => "variant-dependent",
        }
    }
}

fn claimed_form(
    ctx: &crate::algebra::FqCtx,
    lambda_unit: bool,
    factors: &[(&[i64], usize)],
    lambda: i64,
) -> FactoredForm {
    let unit = if lambda_unit {
        ctx.from_i64(lambda - 1)
    } else {
        ctx.one()
    };
    FactoredForm::new(
        unit,
        factors
            .iter()
            .map(|&(c, e)| (FqPoly::from_i64s(ctx, c), e))
            .collect(),
    )
}

fn check_one(claim: &PaperClaim, polys: &FamilyPolys, lambda: i64) -> Result<(bool, String)> {
    let f = claim.target.pick(polys);
    let ctx = f.reduction_field(claim.p)?;
    let fbar = f.reduce_mod_p(&ctx)?;
    let computed = squarefree_decompose(&fbar)?;
    let mut detail = format!("{computed}");
    let ok = match claim.expect {
        Expect::Factored {
            lambda_unit,
            factors,
        } => {
            let form = claimed_form(&ctx, lambda_unit, factors, lambda);
            expand_claimed_factorization(&form, &fbar).equal
        }
        Expect::Squarefree => {
            let profile = ddf_profile(&fbar)?;
            detail = format!("{detail}; irreducible factor degrees {profile:?}");
            fbar.is_squarefree()
        }
        Expect::SquarefreeEqual(c) => fbar.is_squarefree() && fbar == FqPoly::from_i64s(&ctx, c),
    };
    Ok((ok, detail))
}

/// Checks every claim at `p` under both variants.
pub fn verify_paper_claims(p: u64) -> Result<Vec<ClaimResult>> {
    if p != 3 && p != 5 {
        return Err(Error::Precondition(format!(
            "p = {p}: only 3 and 5 are covered"
        )));
    }
    let mut out = Vec::new();
    for claim in CLAIMS.iter().filter(|c| c.p == p) {
        for variant in Variant::ALL {
            let lambdas: &[i64] = match claim.expect {
                Expect::Factored {
                    lambda_unit: true, ..
                } => &CLAIM_LAMBDAS,
                _ => &CLAIM_LAMBDAS[..1],
            };
            let mut pass = true;
            let mut details = Vec::new();
            for &lambda in lambdas {
                let polys = build_family_polys(claim.case, variant, &[QuadInt::integer(lambda)])?;
                let (ok, detail) = check_one(claim, &polys, lambda)?;
                pass &= ok;
                if lambdas.len() > 1 {
                    details.push(format!("lambda={lambda}: {detail}"));
                } else {
                    details.push(detail);
                }
            }
            out.push(ClaimResult {
                claim: claim.name.to_string(),
                source: variant,
                status: if pass {
                    ClaimOutcome::Pass
                } else {
                    ClaimOutcome::Fail
                },
                detail: format!("computed {}", details.join("; ")),
            });
        }
    }
    Ok(out)
}

/// Folds per-variant results into one verdict per claim, in input order.
pub fn claim_summary(results: &[ClaimResult]) -> Vec<(String, ClaimVerdict)> {
    let mut names: Vec<&str> = Vec::new();
    for r in results {
        if !names.contains(&r.claim.as_str()) {
            names.push(&r.claim);
        }
    }
    names
        .into_iter()
        .map(|n| {
            let statuses: Vec<ClaimOutcome> = results
                .iter()
                .filter(|r| r.claim == n)
                .map(|r| r.status)
                .collect();
            let verdict = if statuses.iter().all(|&s| s == ClaimOutcome::Pass) {
                ClaimVerdict::Pass
            } else if statuses.iter().all(|&s| s == ClaimOutcome::Fail) {
                ClaimVerdict::Fail
            } else {
                ClaimVerdict::VariantDependent
            };
            (n.to_string(), verdict)
        })
        .collect()
}

/// Looks up the result of `claim` under `variant`.
pub fn find_result<'a>(
    results: &'a [ClaimResult],
    claim: &str,
    variant: Variant,
) -> Option<&'a ClaimResult> {
    results
        .iter()
        .find(|r| r.claim == claim && r.source == variant)
}

/// Claims about a single family member, for annotating reduction reports.
pub fn claims_for(case: FamilyCase, target: Target, p: u64) -> Vec<&'static PaperClaim> {
    CLAIMS
        .iter()
        .filter(|c| c.case == case && c.target == target && c.p == p)
        .collect()
}

/// The claimed factorization for `claim` over `ctx`, if it has one.
pub fn claim_form(
    claim: &PaperClaim,
    ctx: &crate::algebra::FqCtx,
    lambda: i64,
) -> Option<FactoredForm> {
    match claim.expect {
        Expect::Factored {
            lambda_unit,
            factors,
        } => Some(claimed_form(ctx, lambda_unit, factors, lambda)),
        Expect::SquarefreeEqual(c) => Some(FactoredForm::new(
            ctx.one(),
            vec![(FqPoly::from_i64s(ctx, c), 1)],
        )),
        Expect::Squarefree => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_3_corpus() {
        let res = verify_paper_claims(3).unwrap();
        let summary = claim_summary(&res);
        let get = |n: &str| summary.iter().find(|(c, _)| c == n).unwrap().1;
        assert_eq!(get("A5 S mod 3 = (x^10+1)^2"), ClaimVerdict::Pass);
        assert_eq!(get("A5 R mod 3 = (x^10+1)^3"), ClaimVerdict::Pass);
        assert_eq!(get("A4 S mod 3 = (x^4+1)^2"), ClaimVerdict::Pass);
        assert_eq!(get("S4 R mod 3 = (x^4+1)^3"), ClaimVerdict::Pass);
    }

    #[test]
    fn mod_5_t_claim_fails_both_ways() {
        let res = verify_paper_claims(5).unwrap();
        let stated = find_result(&res, "A5 T mod 5 = (x^2-1)^5", Variant::Stated).unwrap();
        let classical = find_result(&res, "A5 T mod 5 = (x^2-1)^5", Variant::Classical).unwrap();
        assert_eq!(stated.status, ClaimOutcome::Fail);
        assert_eq!(classical.status, ClaimOutcome::Fail);
        assert!(stated.detail.contains("(x^2+1)^5"));
        assert!(
            classical.detail.contains("(x+3)^10"),
            "{}",
            classical.detail
        );
    }

    #[test]
    fn s_mod_5_depends_on_variant() {
        let res = verify_paper_claims(5).unwrap();
        let summary = claim_summary(&res);
        let v = summary
            .iter()
            .find(|(c, _)| c == "A5 S mod 5 = (x^2+x-1)^10")
            .unwrap()
            .1;
        assert_eq!(v, ClaimVerdict::VariantDependent);
    }
}
