//! Serializable views of core results. Field elements, big integers and
//! `Z[sqrt(d)]` values are rendered as strings.

use serde::Serialize;

use hyperlift_core::poly::{CharZeroPoly, FactoredForm, FqPoly};
use hyperlift_core::rules::{ConsistencyReport, LiftFlags, LiftVerdict, StructureReport};
use hyperlift_core::Error;

use crate::CliError;

pub const TOOL_NAME: &str = "hyperlift";

#[derive(Debug, Clone, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

pub fn tool() -> Tool {
    Tool {
        name: TOOL_NAME,
        version: env!("CARGO_PKG_VERSION"),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: i32,
}

/// Machine-readable error emitted instead of a report.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorRecord {
    pub error: ErrorBody,
}

impl ErrorRecord {
    pub fn new(e: &CliError) -> Self {
        ErrorRecord {
            error: ErrorBody {
                kind: e.kind(),
                message: e.to_string(),
                exit_code: e.exit_code(),
            },
        }
    }
}

pub fn core_error_kind(e: &Error) -> &'static str {
    match e {
        Error::NotPrime(_) => "not_prime",
        Error::DegreeOutOfRange(_) => "degree_out_of_range",
        Error::FieldTooLarge { .. } => "field_too_large",
        Error::NoIrreducible { .. } => "no_irreducible",
        Error::ReducibleModulus(_) => "reducible_modulus",
        Error::IncompatibleFields(_) => "incompatible_fields",
        Error::NoSqrtResidue { .. } => "no_sqrt_residue",
        Error::NotSquarefreeParameter(_) => "not_squarefree_parameter",
        Error::ZeroPolynomial => "zero_polynomial",
        Error::SplittingBound { .. } => "splitting_bound",
        Error::CharacteristicTwo => "characteristic_two",
        Error::NotSquarefree => "not_squarefree",
        Error::GenusTooSmall(_) => "genus_too_small",
        Error::MissingMultiplier => "missing_multiplier",
        Error::NotClosed => "not_closed",
        Error::NoIdentity => "no_identity",
        Error::NoInverse => "no_inverse",
        Error::GroupTooLarge { .. } => "group_too_large",
        Error::NotConstructible(_) => "not_constructible",
        Error::NotInTable(_) => "not_in_table",
        Error::CosetLimit(_) => "coset_limit",
        Error::Parse(_) => "parse",
        Error::Precondition(_) => "precondition",
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PolyDto {
    pub display: String,
    pub degree: Option<usize>,
    /// Lowest degree first.
    pub coeffs: Vec<String>,
}

impl From<&FqPoly> for PolyDto {
    fn from(f: &FqPoly) -> Self {
        PolyDto {
            display: f.to_string(),
            degree: f.degree(),
            coeffs: f.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl From<&CharZeroPoly> for PolyDto {
    fn from(f: &CharZeroPoly) -> Self {
        PolyDto {
            display: f.to_string(),
            degree: f.degree(),
            coeffs: f.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorDto {
    pub factor: String,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactoredDto {
    pub display: String,
    pub unit: String,
    pub factors: Vec<FactorDto>,
    pub squarefree: bool,
}

impl From<&FactoredForm> for FactoredDto {
    fn from(f: &FactoredForm) -> Self {
        FactoredDto {
            display: f.to_string(),
            unit: f.unit.to_string(),
            factors: f
                .factors
                .iter()
                .map(|(g, e)| FactorDto {
                    factor: g.to_string(),
                    multiplicity: *e,
                })
                .collect(),
            squarefree: f.is_squarefree(),
        }
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FlagsDto {
    pub p_divides_order: bool,
    pub p_squared_divides_order: bool,
    pub p_le_2g_plus_1: Option<bool>,
}

impl From<&LiftFlags> for FlagsDto {
    fn from(f: &LiftFlags) -> Self {
        FlagsDto {
            p_divides_order: f.p_divides_order,
            p_squared_divides_order: f.p_squared_divides_order,
            p_le_2g_plus_1: f.p_le_2g_plus_1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckDto {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub fn checks(r: &ConsistencyReport) -> Vec<CheckDto> {
    r.entries
        .iter()
        .map(|e| CheckDto {
            name: e.name,
            passed: e.passed,
            detail: e.detail.clone(),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictDto {
    pub liftable: &'static str,
    pub rule: String,
    pub oort: Option<&'static str>,
    pub flags: FlagsDto,
}

impl From<&LiftVerdict> for VerdictDto {
    fn from(v: &LiftVerdict) -> Self {
        VerdictDto {
            liftable: yes_no(v.liftable),
            rule: v.rule.clone(),
            oort: v.oort.map(|o| o.as_str()),
            flags: (&v.flags).into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureDto {
    pub order_doubles: bool,
    pub sigma_central: bool,
    pub quotient_isomorphic: bool,
    pub extension_consistent: bool,
    pub associative: bool,
}

impl From<&StructureReport> for StructureDto {
    fn from(s: &StructureReport) -> Self {
        StructureDto {
            order_doubles: s.order_doubles,
            sigma_central: s.sigma_central,
            quotient_isomorphic: s.quotient_isomorphic,
            extension_consistent: s.extension_consistent,
            associative: s.associative,
        }
    }
}
