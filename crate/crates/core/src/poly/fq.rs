use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{FieldEmbedding, FqCtx, FqElem};

/// Polynomial over `F_{p^m}`, coefficients low-to-high with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqPoly {
    ctx: FqCtx,
    coeffs: Vec<FqElem>,
}

impl FqPoly {
    pub fn zero(ctx: &FqCtx) -> Self {
        FqPoly {
            ctx: ctx.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: &FqCtx) -> Self {
        Self::constant(ctx.one())
    }

    pub fn constant(c: FqElem) -> Self {
        let ctx = c.ctx().clone();
        Self::from_coeffs(&ctx, vec![c])
    }

    pub fn x(ctx: &FqCtx) -> Self {
        Self::monomial(ctx.one(), 1)
    }

    pub fn monomial(c: FqElem, k: usize) -> Self {
        let ctx = c.ctx().clone();
        let mut coeffs = vec![ctx.zero(); k];
        coeffs.push(c);
        Self::from_coeffs(&ctx, coeffs)
    }

    pub fn from_coeffs(ctx: &FqCtx, mut coeffs: Vec<FqElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FqPoly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    /// Prime-field coefficients given as integers, low-to-high.
    pub fn from_u64s(ctx: &FqCtx, coeffs: &[u64]) -> Self {
        Self::from_coeffs(ctx, coeffs.iter().map(|&c| ctx.from_u64(c)).collect())
    }

    pub fn from_i64s(ctx: &FqCtx, coeffs: &[i64]) -> Self {
        Self::from_coeffs(ctx, coeffs.iter().map(|&c| ctx.from_i64(c)).collect())
    }

    pub fn ctx(&self) -> &FqCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ctx.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn lead(&self) -> Option<&FqElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &FqElem) -> FqPoly {
        Self::from_coeffs(&self.ctx, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Monic associate; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> FqPoly {
        match self.lead() {
            Some(l) if !l.is_one() => self.scale(&l.inv().expect("nonzero lead")),
            _ => self.clone(),
        }
    }

    fn check_ctx(&self, other: &FqPoly) {
        assert!(self.ctx == other.ctx, "polynomials over different fields");
    }

    /// Euclidean division. Panics on division by zero.
    pub fn div_rem(&self, d: &FqPoly) -> (FqPoly, FqPoly) {
        self.check_ctx(d);
        let dd = d.degree().expect("division by the zero polynomial");
        let Some(nd) = self.degree() else {
            return (self.clone(), self.clone());
        };
        if nd < dd {
            return (FqPoly::zero(&self.ctx), self.clone());
        }
        let inv_lead = d.lead().unwrap().inv().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![self.ctx.zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &r[k + dd] * &inv_lead;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dj);
            }
            q[k] = c;
        }
        r.truncate(dd);
        (
            FqPoly::from_coeffs(&self.ctx, q),
            FqPoly::from_coeffs(&self.ctx, r),
        )
    }

    pub fn rem(&self, d: &FqPoly) -> FqPoly {
        self.div_rem(d).1
    }

    /// Exact quotient; panics when `d` does not divide `self`.
    pub fn exact_div(&self, d: &FqPoly) -> FqPoly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &FqPoly, b: &FqPoly) -> FqPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> FqPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.ctx.from_u64(i as u64))
            .collect();
        Self::from_coeffs(&self.ctx, coeffs)
    }

    pub fn eval(&self, x: &FqElem) -> FqElem {
        self.coeffs
            .iter()
            .rev()
            .fold(self.ctx.zero(), |acc, c| &(&acc * x) + c)
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &FqPoly) -> FqPoly {
        self.check_ctx(g);
        self.coeffs
            .iter()
            .rev()
            .fold(FqPoly::zero(&self.ctx), |acc, c| {
                &(&acc * g) + &FqPoly::constant(c.clone())
            })
    }

    pub fn pow(&self, mut e: u64) -> FqPoly {
        let mut base = self.clone();
        let mut acc = FqPoly::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u128, m: &FqPoly) -> FqPoly {
        let mut base = self.rem(m);
        let mut acc = FqPoly::one(&self.ctx).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(m);
            }
        }
        acc
    }

    /// Whether `gcd(f, f') = 1`. Constants count as squarefree; zero does not.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => FqPoly::gcd(self, &self.derivative()).degree() == Some(0),
        }
    }

    /// For `f` with `f' = 0`, the polynomial `g` with `g^p = f`.
    pub fn pth_root(&self) -> FqPoly {
        let p = self.ctx.p() as usize;
        // x -> x^{p^{m-1}} inverts Frobenius on F_{p^m}
        let e = self.ctx.order() / self.ctx.p() as u128;
        let coeffs = self.coeffs.iter().step_by(p).map(|c| c.pow(e)).collect();
        debug_assert!(self
            .coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i % p == 0 || c.is_zero()));
        Self::from_coeffs(&self.ctx, coeffs)
    }

    /// Image under a field embedding.
    pub fn embed(&self, e: &FieldEmbedding) -> FqPoly {
        e.apply_poly(self)
    }
}

impl Add for &FqPoly {
    type Output = FqPoly;
    fn add(self, rhs: &FqPoly) -> FqPoly {
        self.check_ctx(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        FqPoly::from_coeffs(&self.ctx, coeffs)
    }
}

impl Sub for &FqPoly {
    type Output = FqPoly;
    fn sub(self, rhs: &FqPoly) -> FqPoly {
        self.check_ctx(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        FqPoly::from_coeffs(&self.ctx, coeffs)
    }
}

impl Neg for &FqPoly {
    type Output = FqPoly;
    fn neg(self) -> FqPoly {
        FqPoly::from_coeffs(&self.ctx, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &FqPoly {
    type Output = FqPoly;
    fn mul(self, rhs: &FqPoly) -> FqPoly {
        self.check_ctx(rhs);
        if self.is_zero() || rhs.is_zero() {
            return FqPoly::zero(&self.ctx);
        }
        let mut out = vec![self.ctx.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        FqPoly::from_coeffs(&self.ctx, out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<FqPoly> for FqPoly {
            type Output = FqPoly;
            fn $method(self, rhs: FqPoly) -> FqPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FqPoly> for FqPoly {
            type Output = FqPoly;
            fn $method(self, rhs: &FqPoly) -> FqPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let simple = c.is_prime_field();
            match (i, c.is_one()) {
                (0, _) if simple => write!(f, "{c}")?,
                (0, _) => write!(f, "({c})")?,
                (_, true) => {}
                _ if simple => write!(f, "{c}*")?,
                _ => write!(f, "({c})*")?,
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

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn f3() -> FqCtx {
        FqCtx::new(3, 1).unwrap()
    }

    #[test]
    fn compose_square() {
        let k = f3();
        let f = FqPoly::from_u64s(&k, &[0, 0, 1]);
        let g = FqPoly::from_u64s(&k, &[1, 1]);
        assert_eq!(f.compose(&g), FqPoly::from_u64s(&k, &[1, 2, 1]));
        assert_eq!(FqPoly::x(&k).compose(&g), g);
    }

    #[test]
    fn division_identity() {
        let k = FqCtx::new(5, 2).unwrap();
        let a = FqPoly::from_coeffs(&k, (0..9).map(|i| k.from_index(i * 3 + 1)).collect());
        let b = FqPoly::from_coeffs(&k, (0..4).map(|i| k.from_index(i * 7 + 2)).collect());
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < b.degree().unwrap());
    }

    #[test]
    fn gcd_is_monic() {
        let k = f3();
        let a = FqPoly::from_u64s(&k, &[2, 0, 2]); // 2(x^2+1)
        let b = FqPoly::from_u64s(&k, &[2, 0, 0, 0, 2]); // 2(x^4+1)
        assert!(FqPoly::gcd(&a, &b).is_one());
        let c = &a * &FqPoly::from_u64s(&k, &[1, 1]);
        assert_eq!(FqPoly::gcd(&a, &c), FqPoly::from_u64s(&k, &[1, 0, 1]));
    }

    #[test]
    fn pth_root_of_cube() {
        let k = FqCtx::new(3, 2).unwrap();
        let g = FqPoly::from_coeffs(&k, vec![k.generator(), k.one(), k.from_u64(2)]);
        let f = g.pow(3);
        assert!(f.derivative().is_zero());
        assert_eq!(f.pth_root(), g);
    }

    #[test]
    fn display() {
        let k = f3();
        assert_eq!(
            format!("{}", FqPoly::from_u64s(&k, &[1, 0, 2, 1])),
            "x^3+2*x^2+1"
        );
        let k9 = FqCtx::new(3, 2).unwrap();
        let p = FqPoly::from_coeffs(&k9, vec![k9.generator(), k9.one()]);
        assert_eq!(format!("{p}"), "x+(t)");
    }
}
