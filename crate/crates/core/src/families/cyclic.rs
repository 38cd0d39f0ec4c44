use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::algebra::QuadInt;
use crate::error::{Error, Result};
use crate::poly::CharZeroPoly;

/// `(u1, u2) = (a1^3 + a2^3, 2 a1 a2)` for the genus 2 curve
/// `y^2 = x^6 + a1 x^4 + a2 x^2 + 1`.
pub fn shaska_u_invariants(a1: &BigInt, a2: &BigInt) -> (BigInt, BigInt) {
    let u1 = a1 * a1 * a1 + a2 * a2 * a2;
    let u2 = BigInt::from(2) * a1 * a2;
    (u1, u2)
}

/// Which multiple of `p` fixes `t` in the `Z/2p` equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Z2pShape {
    /// `p | 2g+2`, `t = (2g+2)/p`.
    TwoGPlusTwo,
    /// `p | 2g+1`, `t = (2g+1)/p`.
    TwoGPlusOne,
    /// `p | 2g`, `t = 2g/p`, with an extra factor `x`.
    TwoG,
}

impl Z2pShape {
    pub const ALL: [Z2pShape; 3] = [Z2pShape::TwoGPlusTwo, Z2pShape::TwoGPlusOne, Z2pShape::TwoG];

    fn numerator(self, g: u64) -> u64 {
        match self {
            Z2pShape::TwoGPlusTwo => 2 * g + 2,
            Z2pShape::TwoGPlusOne => 2 * g + 1,
            Z2pShape::TwoG => 2 * g,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Z2pShape::TwoGPlusTwo => "2g+2",
            Z2pShape::TwoGPlusOne => "2g+1",
            Z2pShape::TwoG => "2g",
        }
    }

    /// The first shape admissible for `(g, p)`.
    pub fn detect(g: u64, p: u64) -> Option<Z2pShape> {
        Self::ALL
            .into_iter()
            .find(|s| s.numerator(g) % p == 0 && s.numerator(g) > 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CyclicKind {
    Z2p(Z2pShape),
    D2p,
    /// Normal cyclic subgroup of order `n`, with the integer `t` given.
    CyclicN {
        n: u64,
        t: u64,
    },
}

impl fmt::Display for CyclicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicKind::Z2p(s) => write!(f, "Z2p[{}]", s.name()),
            CyclicKind::D2p => f.write_str("D2p"),
            CyclicKind::CyclicN { n, t } => write!(f, "cyclic-{n}[t={t}]"),
        }
    }
}

/// An equation shape instantiated for concrete `g` and `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicEquation {
    pub kind: CyclicKind,
    pub p: u64,
    pub requested_genus: u64,
    pub t: u64,
    /// The shape with symbolic parameters, e.g. `x^6+a1*x^3+1`.
    pub template: String,
    /// `None` for the cyclic-n genus constraint, which has no equation.
    pub poly: Option<CharZeroPoly>,
    /// Genus of `y^2 = poly` read off from its degree.
    pub produced_genus: Option<u64>,
    pub squarefree: Option<bool>,
    /// Genera allowed by the cyclic-n constraint.
    pub constraint_genera: Vec<u64>,
    pub genus_mismatch: bool,
}

fn monomial_term(c: &str, k: u64) -> String {
    match k {
        0 => String::from(c),
        1 => format!("{c}*x"),
        _ => format!("{c}*x^{k}"),
    }
}

fn param(params: &[BigInt], i: usize) -> QuadInt {
    QuadInt::integer(params[i].clone())
}

fn no_t(what: &str, p: u64) -> Error {
    Error::Precondition(format!("no admissible t: {p} does not divide {what}"))
}

fn check_len(params: &[BigInt], need: usize) -> Result<()> {
    if params.len() != need {
        return Err(Error::Precondition(format!(
            "{need} parameters needed, {} given",
            params.len()
        )));
    }
    Ok(())
}

/// Builds the equation of the requested shape with the symbolic
/// coefficients replaced by `params` (in order `a1, a2, ...` or
/// `lambda1, lambda2, ...`).
pub fn cyclic_curve_equation(
    kind: CyclicKind,
    g: u64,
    p: u64,
    params: &[BigInt],
) -> Result<CyclicEquation> {
    if p < 2 {
        return Err(Error::NotPrime(p));
    }
    match kind {
        CyclicKind::Z2p(shape) => {
            let num = shape.numerator(g);
            if num == 0 || num % p != 0 {
                return Err(no_t(shape.name(), p));
            }
            let t = num / p;
            check_len(params, (t - 1) as usize)?;
            // inner = x^{lead} + sum_{j=1}^{t-1} a_j x^{p(t-j)} + 1
            let lead = match shape {
                Z2pShape::TwoG => p * t,
                _ => 2 * g + 2,
            };
            let mut inner = CharZeroPoly::from_terms(&[(lead as usize, 1), (0, 1)]);
            let mut terms = vec![monomial_term("", lead).trim_start_matches('*').into()];
            for j in 1..t {
                let k = p * (t - j);
                inner =
                    &inner + &CharZeroPoly::monomial(param(params, (j - 1) as usize), k as usize);
                terms.push(monomial_term(&format!("a{j}"), k));
            }
            terms.push(String::from("1"));
            let mut template = terms.join("+");
            let poly = if shape == Z2pShape::TwoG {
                template = format!("x*({template})");
                &inner * &CharZeroPoly::x()
            } else {
                inner
            };
            Ok(finish(kind, p, g, t, template, poly))
        }
        CyclicKind::D2p => {
            if !(g + 1).is_multiple_of(p) {
                return Err(no_t("g+1", p));
            }
            let t = (g + 1) / p;
            check_len(params, t as usize)?;
            let mut poly = CharZeroPoly::x();
            let mut factors = Vec::new();
            for i in 0..t as usize {
                let f = &CharZeroPoly::from_terms(&[(2 * p as usize, 1), (0, 1)])
                    + &CharZeroPoly::monomial(param(params, i), p as usize);
                poly = &poly * &f;
                factors.push(format!("(x^{}+lambda{}*x^{}+1)", 2 * p, i + 1, p));
            }
            let template = format!("x*{}", factors.join("*"));
            Ok(finish(kind, p, g, t, template, poly))
        }
        CyclicKind::CyclicN { n, t } => {
            if n < 2 || t == 0 {
                return Err(Error::Precondition("need n >= 2 and t >= 1".into()));
            }
            let base = p * t - 1;
            let mut constraint_genera = Vec::new();
            if (n - 1) % 2 == 0 {
                constraint_genera.push((n - 1) / 2 * base);
            }
            constraint_genera.push((n - 1) * base);
            constraint_genera.dedup();
            let genus_mismatch = !constraint_genera.contains(&g);
            Ok(CyclicEquation {
                kind,
                p,
                requested_genus: g,
                t,
                template: format!("g = (n-1)/2*(p*t-1) or (n-1)*(p*t-1), n={n}, t={t}"),
                poly: None,
                produced_genus: None,
                squarefree: None,
                constraint_genera,
                genus_mismatch,
            })
        }
    }
}

fn finish(
    kind: CyclicKind,
    p: u64,
    g: u64,
    t: u64,
    template: String,
    poly: CharZeroPoly,
) -> CyclicEquation {
    let deg = poly.degree().unwrap_or(0) as u64;
    let produced = (deg + deg % 2).saturating_sub(2) / 2;
    CyclicEquation {
        kind,
        p,
        requested_genus: g,
        t,
        template,
        squarefree: Some(poly.is_squarefree_char0()),
        poly: Some(poly),
        produced_genus: Some(produced),
        constraint_genera: Vec::new(),
        genus_mismatch: produced != g,
    }
}
