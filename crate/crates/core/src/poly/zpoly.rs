use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::FqPoly;
use crate::algebra::{is_prime, quad_reduce_mod_p, sqrt_residue, FqCtx, QuadInt};
use crate::error::Result;

/// Polynomial with coefficients in `Z` or `Z[sqrt(d)]`, low-to-high.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharZeroPoly {
    coeffs: Vec<QuadInt>,
}

/// Primes tried by the modular squarefree certificate.
const CERTIFICATE_PRIME_LIMIT: u64 = 1000;

impl CharZeroPoly {
    pub fn zero() -> Self {
        CharZeroPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(QuadInt::integer(1))
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant(c: QuadInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: QuadInt, k: usize) -> Self {
        let mut coeffs = vec![QuadInt::integer(0); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<QuadInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        CharZeroPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| QuadInt::integer(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(QuadInt::integer).collect())
    }

    /// Builds `sum c_k x^k` from sparse `(k, c_k)` terms.
    pub fn from_terms(terms: &[(usize, i64)]) -> Self {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut coeffs = vec![QuadInt::integer(0); deg + 1];
        for &(k, c) in terms {
            coeffs[k] = &coeffs[k] + &QuadInt::integer(c);
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[QuadInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> QuadInt {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| QuadInt::integer(0))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Option<&QuadInt> {
        self.coeffs.last()
    }

    /// The radicand in use, 0 for integer polynomials.
    pub fn d(&self) -> i64 {
        self.coeffs
            .iter()
            .map(QuadInt::d)
            .find(|&d| d != 0)
            .unwrap_or(0)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(QuadInt::is_integer)
    }

    pub fn scale(&self, c: &QuadInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn compose(&self, g: &CharZeroPoly) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * g) + &Self::constant(c.clone())
        })
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &QuadInt::integer(i as i64))
                .collect(),
        )
    }

    /// Coefficient-wise reduction into `ctx`.
    pub fn reduce_mod_p(&self, ctx: &FqCtx) -> Result<FqPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| quad_reduce_mod_p(c, ctx))
            .collect::<Result<Vec<_>>>()?;
        Ok(FqPoly::from_coeffs(ctx, coeffs))
    }

    /// Field in which this polynomial can be reduced mod `p`: `F_p`, or
    /// `F_{p^2}` when `sqrt(d)` has no residue in `F_p`.
    pub fn reduction_field(&self, p: u64) -> Result<FqCtx> {
        let base = FqCtx::new(p, 1)?;
        let d = self.d();
        if d == 0 || sqrt_residue(d, &base).is_some() {
            Ok(base)
        } else {
            FqCtx::new(p, 2)
        }
    }

    /// Squarefreeness over the algebraic closure of `Q`.
    ///
    /// Decided by a modular certificate: if the reduction at some odd prime
    /// keeps the degree and is squarefree, the discriminant is nonzero. If
    /// every prime below 1000 fails, the polynomial is reported as not
    /// squarefree.
    pub fn is_squarefree_char0(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return true;
        }
        (3..CERTIFICATE_PRIME_LIMIT)
            .filter(|&p| is_prime(p))
            .any(|p| {
                let Ok(ctx) = self.reduction_field(p) else {
                    return false;
                };
                let Ok(fbar) = self.reduce_mod_p(&ctx) else {
                    return false;
                };
                fbar.degree() == Some(n) && fbar.is_squarefree()
            })
    }
}

impl Add for &CharZeroPoly {
    type Output = CharZeroPoly;
    fn add(self, rhs: &CharZeroPoly) -> CharZeroPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        CharZeroPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &CharZeroPoly {
    type Output = CharZeroPoly;
    fn sub(self, rhs: &CharZeroPoly) -> CharZeroPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        CharZeroPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &CharZeroPoly {
    type Output = CharZeroPoly;
    fn neg(self) -> CharZeroPoly {
        CharZeroPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &CharZeroPoly {
    type Output = CharZeroPoly;
    fn mul(self, rhs: &CharZeroPoly) -> CharZeroPoly {
        if self.is_zero() || rhs.is_zero() {
            return CharZeroPoly::zero();
        }
        let mut out = vec![QuadInt::integer(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        CharZeroPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<CharZeroPoly> for CharZeroPoly {
            type Output = CharZeroPoly;
            fn $method(self, rhs: CharZeroPoly) -> CharZeroPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CharZeroPoly> for CharZeroPoly {
            type Output = CharZeroPoly;
            fn $method(self, rhs: &CharZeroPoly) -> CharZeroPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for CharZeroPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_integer() && c.a().is_negative() {
                (true, QuadInt::integer(-c.a().clone()))
            } else {
                (false, c.clone())
            };
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let unit = mag.is_integer() && mag.a().is_one();
            match i {
                0 => write!(f, "{mag}")?,
                _ if unit => {}
                _ => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl From<Vec<BigInt>> for CharZeroPoly {
    fn from(v: Vec<BigInt>) -> Self {
        Self::from_bigints(&v)
    }
}
