use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{FqCtx, FqElem};
use crate::error::{Error, Result};

fn is_squarefree(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let n = d.unsigned_abs();
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

/// An element `a + b*sqrt(d)` of `Z[sqrt(d)]`.
///
/// Whenever `b = 0` the stored `d` is reset to 0, so plain integers compare
/// equal regardless of the ring they were produced in. Arithmetic between two
/// elements with different nonzero `d` is a logic error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    a: BigInt,
    b: BigInt,
    d: i64,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, d: i64) -> Result<Self> {
        let b = b.into();
        if !b.is_zero() && !is_squarefree(d) {
            return Err(Error::NotSquarefreeParameter(d));
        }
        Ok(Self::normalized(a.into(), b, d))
    }

    pub fn integer(a: impl Into<BigInt>) -> Self {
        QuadInt {
            a: a.into(),
            b: BigInt::zero(),
            d: 0,
        }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: i64) -> Result<Self> {
        Self::new(0, 1, d)
    }

    fn normalized(a: BigInt, b: BigInt, d: i64) -> Self {
        if d == 1 {
            return Self::integer(a + b);
        }
        if b.is_zero() || d == 0 {
            return Self::integer(a);
        }
        QuadInt { a, b, d }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero()
    }

    fn common_d(&self, other: &QuadInt) -> i64 {
        match (self.d, other.d) {
            (0, d) | (d, 0) => d,
            (d, e) => {
                assert_eq!(d, e, "mixing Z[sqrt({d})] with Z[sqrt({e})]");
                d
            }
        }
    }
}

impl From<i64> for QuadInt {
    fn from(v: i64) -> Self {
        QuadInt::integer(v)
    }
}

impl From<BigInt> for QuadInt {
    fn from(v: BigInt) -> Self {
        QuadInt::integer(v)
    }
}

impl Add for &QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        let d = self.common_d(rhs);
        QuadInt::normalized(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl Sub for &QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        let d = self.common_d(rhs);
        QuadInt::normalized(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl Mul for &QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        let d = self.common_d(rhs);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * BigInt::from(d);
        let b = &self.a * &rhs.b + &rhs.a * &self.b;
        QuadInt::normalized(a, b, d)
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt::normalized(-&self.a, -&self.b, self.d)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<QuadInt> for QuadInt {
            type Output = QuadInt;
            fn $method(self, rhs: QuadInt) -> QuadInt {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QuadInt> for QuadInt {
            type Output = QuadInt;
            fn $method(self, rhs: &QuadInt) -> QuadInt {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let root = alloc::format!("sqrt({})", self.d);
        let b_part = if self.b.is_one() {
            root
        } else if self.b == -BigInt::one() {
            alloc::format!("-{root}")
        } else {
            alloc::format!("{}*{root}", self.b)
        };
        if self.a.is_zero() {
            f.write_str(&b_part)
        } else if self.b.is_negative() {
            write!(f, "({}{})", self.a, b_part)
        } else {
            write!(f, "({}+{})", self.a, b_part)
        }
    }
}

/// The canonical (smaller) root of `t^2 - d` in `ctx`, if there is one.
pub fn sqrt_residue(d: i64, ctx: &FqCtx) -> Option<FqElem> {
    ctx.from_i64(d).sqrt().map(|(r, _)| r)
}

/// Reduce `a + b*sqrt(d)` to `a + b*r` where `r` is the canonical root of
/// `t^2 - d` in `ctx`. Integers need no root.
pub fn quad_reduce_mod_p(x: &QuadInt, ctx: &FqCtx) -> Result<FqElem> {
    let a = ctx.from_bigint(&x.a);
    if x.b.is_zero() {
        return Ok(a);
    }
    let r = sqrt_residue(x.d, ctx).ok_or(Error::NoSqrtResidue {
        d: x.d,
        p: ctx.p(),
        m: ctx.m(),
    })?;
    Ok(a + ctx.from_bigint(&x.b) * r)
}
