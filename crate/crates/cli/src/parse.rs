use num_bigint::BigInt;
use serde::Deserialize;

use hyperlift_core::algebra::{FqCtx, QuadInt};
use hyperlift_core::curve::HyperCurve;
use hyperlift_core::groups::{
    elementary_abelian, quaternion_group, realize_type, FiniteGroup, GroupType,
};
use hyperlift_core::poly::FqPoly;

use crate::{CliError, CliResult};

/// Integer given either as a JSON number or as a decimal string, so
/// coefficients beyond 64 bits can be passed.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Num(i64),
    Str(String),
}

impl JsonInt {
    fn to_bigint(&self) -> CliResult<BigInt> {
        match self {
            JsonInt::Num(v) => Ok(BigInt::from(*v)),
            JsonInt::Str(s) => parse_bigint(s),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPayload {
    p: u64,
    m: Option<usize>,
    f: Vec<JsonInt>,
}

/// A curve request: field `F_{p^m}` and integer coefficients of `f`, lowest
/// degree first. Coefficients are reduced into the field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePayload {
    pub p: u64,
    pub m: usize,
    pub f: Vec<BigInt>,
}

impl CurvePayload {
    pub fn from_json(s: &str) -> CliResult<Self> {
        let raw: RawPayload = serde_json::from_str(s)
            .map_err(|e| CliError::Usage(format!("bad curve payload: {e}")))?;
        Ok(CurvePayload {
            p: raw.p,
            m: raw.m.unwrap_or(1),
            f: raw
                .f
                .iter()
                .map(JsonInt::to_bigint)
                .collect::<CliResult<_>>()?,
        })
    }
}

pub fn parse_curve(payload: &CurvePayload) -> CliResult<HyperCurve> {
    if payload.p == 2 {
        return Err(hyperlift_core::Error::CharacteristicTwo.into());
    }
    let ctx = FqCtx::new(payload.p, payload.m)?;
    let coeffs = payload.f.iter().map(|c| ctx.from_bigint(c)).collect();
    Ok(HyperCurve::new(FqPoly::from_coeffs(&ctx, coeffs))?)
}

pub(crate) fn parse_bigint(s: &str) -> CliResult<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("`{s}` is not an integer")))
}

pub(crate) fn parse_int_list(s: &str) -> CliResult<Vec<BigInt>> {
    let items: Vec<&str> = s.split(',').filter(|t| !t.trim().is_empty()).collect();
    if items.is_empty() {
        return Err(CliError::Usage("empty coefficient list".into()));
    }
    items.into_iter().map(parse_bigint).collect()
}

/// Parses `7`, `sqrt(-3)`, `-2*sqrt(5)`, `1+2*sqrt(-3)` and similar.
pub fn parse_quad(s: &str) -> CliResult<QuadInt> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::Usage(format!("`{s}` is not an integer or a+b*sqrt(d)"));
    let Some(at) = t.find("sqrt(") else {
        return Ok(QuadInt::integer(parse_bigint(&t)?));
    };
    let inner = t[at + 5..].strip_suffix(')').ok_or_else(bad)?;
    let d: i64 = inner.parse().map_err(|_| bad())?;
    let prefix = t[..at].strip_suffix('*').unwrap_or(&t[..at]);
    let split = prefix
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    let (a, b) = match split {
        Some(i) => (&prefix[..i], &prefix[i..]),
        None => ("0", prefix),
    };
    let a = parse_bigint(a)?;
    let b = match b {
        "" | "+" => BigInt::from(1),
        "-" => BigInt::from(-1),
        b => parse_bigint(b.strip_prefix('+').unwrap_or(b))?,
    };
    Ok(QuadInt::new(a, b, d)?)
}

pub fn parse_lambdas(s: &str) -> CliResult<Vec<QuadInt>> {
    let items: Vec<&str> = s.split(',').filter(|t| !t.trim().is_empty()).collect();
    if items.is_empty() {
        return Err(CliError::Usage("no lambda values given".into()));
    }
    items.into_iter().map(parse_quad).collect()
}

/// Group names accepted by `oort`: every table type, plus `Q8` and the
/// elementary abelian groups written `(Z/p)^n`.
pub fn parse_abstract_group(s: &str) -> CliResult<(String, FiniteGroup)> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.eq_ignore_ascii_case("Q8") {
        return Ok(("Q8".into(), quaternion_group()?));
    }
    if let Some(rest) = t.strip_prefix("(Z/") {
        let bad = || CliError::Usage(format!("`{s}` is not of the form (Z/p)^n"));
        let (p, n) = rest.split_once(")^").ok_or_else(bad)?;
        let p: usize = p.trim_end_matches('Z').parse().map_err(|_| bad())?;
        let n: u32 = n.parse().map_err(|_| bad())?;
        if !hyperlift_core::algebra::is_prime(p as u64) || n == 0 {
            return Err(bad());
        }
        return Ok((format!("(Z/{p})^{n}"), elementary_abelian(p, n)?));
    }
    let ty: GroupType = t.parse()?;
    Ok((ty.to_string(), realize_type(&ty)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quad_forms() {
        assert_eq!(parse_quad("7").unwrap(), QuadInt::integer(7));
        assert_eq!(parse_quad("sqrt(-3)").unwrap(), QuadInt::sqrt(-3).unwrap());
        assert_eq!(
            parse_quad("1+2*sqrt(-3)").unwrap(),
            QuadInt::new(1, 2, -3).unwrap()
        );
        assert_eq!(
            parse_quad("-1-sqrt(5)").unwrap(),
            QuadInt::new(-1, -1, 5).unwrap()
        );
        assert!(parse_quad("sqrt(4)").is_err());
        assert!(parse_quad("x").is_err());
    }

    #[test]
    fn abstract_groups() {
        assert_eq!(parse_abstract_group("Q8").unwrap().1.order(), 8);
        let (name, g) = parse_abstract_group("(Z/3)^2").unwrap();
        assert_eq!((name.as_str(), g.order()), ("(Z/3)^2", 9));
        assert_eq!(parse_abstract_group("D(9)").unwrap().1.order(), 18);
        assert!(parse_abstract_group("(Z/4)^2").is_err());
    }

    #[test]
    fn payload() {
        let p = CurvePayload::from_json(r#"{"p":3,"f":[1,0,1,0,1,0,"1"]}"#).unwrap();
        assert_eq!(p.m, 1);
        assert_eq!(p.f.len(), 7);
        assert!(parse_curve(&p).is_ok());
        assert!(CurvePayload::from_json(r#"{"p":3}"#).is_err());
    }
}
