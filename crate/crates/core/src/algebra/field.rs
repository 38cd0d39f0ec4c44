use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::poly::FqPoly;

/// Largest extension degree accepted by [`FqCtx::new`].
pub const MAX_EXTENSION_DEGREE: usize = 24;

/// Field orders must stay below this so that `(q - 1) / 2` style exponents fit in `u128`.
const MAX_FIELD_ORDER: u128 = 1 << 120;

/// Trial division primality test, sufficient for characteristics below 2^32.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Debug)]
struct CtxInner {
    p: u64,
    m: usize,
    /// Monic modulus, low-to-high, length `m + 1`.
    modulus: Vec<u64>,
    order: u128,
}

/// The finite field `F_p[t]/(modulus)` of order `p^m`.
///
/// Cloning is cheap: the context is reference counted and immutable.
#[derive(Clone)]
pub struct FqCtx(Arc<CtxInner>);

impl PartialEq for FqCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FqCtx {}

impl Hash for FqCtx {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for FqCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}[t]/({:?})", self.0.p, self.0.m, self.0.modulus)
    }
}

fn checked_order(p: u64, m: usize) -> Result<u128> {
    let mut q: u128 = 1;
    for _ in 0..m {
        q = q
            .checked_mul(p as u128)
            .filter(|&q| q < MAX_FIELD_ORDER)
            .ok_or(Error::FieldTooLarge { p, m })?;
    }
    Ok(q)
}

impl FqCtx {
    /// The field of order `p^m` whose modulus is the smallest monic
    /// irreducible polynomial of degree `m`, where candidates are compared
    /// as base-`p` integers `sum c_i p^i` (the constant term is the least
    /// significant digit).
    pub fn new(p: u64, m: usize) -> Result<Self> {
        if !(1..=MAX_EXTENSION_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        Self::new_unbounded(p, m)
    }

    pub(crate) fn new_unbounded(p: u64, m: usize) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let order = checked_order(p, m)?;
        if m == 1 {
            return Ok(Self::from_parts(p, vec![0, 1], order));
        }
        let base = Self::prime_unchecked(p);
        let count = order;
        for idx in 0..count {
            let mut coeffs = digits(idx, p, m);
            if coeffs[0] == 0 {
                continue;
            }
            coeffs.push(1);
            if is_irreducible_over(&base, &coeffs) {
                return Ok(Self::from_parts(p, coeffs, order));
            }
        }
        Err(Error::NoIrreducible { p, m })
    }

    /// A field with an explicitly chosen modulus (monic, low-to-high).
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let m = modulus.len().saturating_sub(1);
        if !(1..=MAX_EXTENSION_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        if modulus.iter().any(|&c| c >= p) || modulus[m] != 1 {
            return Err(Error::ReducibleModulus(p));
        }
        let order = checked_order(p, m)?;
        let base = Self::prime_unchecked(p);
        if m > 1 && !is_irreducible_over(&base, &modulus) {
            return Err(Error::ReducibleModulus(p));
        }
        Ok(Self::from_parts(p, modulus, order))
    }

    fn prime_unchecked(p: u64) -> Self {
        Self::from_parts(p, vec![0, 1], p as u128)
    }

    fn from_parts(p: u64, modulus: Vec<u64>, order: u128) -> Self {
        let m = modulus.len() - 1;
        FqCtx(Arc::new(CtxInner {
            p,
            m,
            modulus,
            order,
        }))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn m(&self) -> usize {
        self.0.m
    }

    /// Monic modulus coefficients, low-to-high.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn order(&self) -> u128 {
        self.0.order
    }

    pub fn zero(&self) -> FqElem {
        FqElem {
            ctx: self.clone(),
            c: vec![0; self.m()],
        }
    }

    pub fn one(&self) -> FqElem {
        self.from_u64(1)
    }

    /// The class of `t`, a root of the modulus.
    pub fn generator(&self) -> FqElem {
        if self.m() == 1 {
            // modulus is t itself, so t = 0
            return self.zero();
        }
        let mut c = vec![0; self.m()];
        c[1] = 1;
        FqElem {
            ctx: self.clone(),
            c,
        }
    }

    pub fn from_u64(&self, v: u64) -> FqElem {
        let mut c = vec![0; self.m()];
        c[0] = v % self.p();
        FqElem {
            ctx: self.clone(),
            c,
        }
    }

    pub fn from_i64(&self, v: i64) -> FqElem {
        let p = self.p() as i128;
        self.from_u64((v as i128).rem_euclid(p) as u64)
    }

    pub fn from_bigint(&self, v: &BigInt) -> FqElem {
        let r = v.mod_floor(&BigInt::from(self.p()));
        self.from_u64(r.to_u64().expect("residue fits in u64"))
    }

    /// Element from a coefficient vector in the basis `1, t, ..., t^{m-1}`.
    /// Shorter vectors are zero padded; entries are reduced mod `p`.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FqElem> {
        if coeffs.len() > self.m() {
            return Err(Error::Precondition(alloc::format!(
                "{} coefficients for a degree {} field",
                coeffs.len(),
                self.m()
            )));
        }
        let mut c = vec![0; self.m()];
        for (slot, &v) in c.iter_mut().zip(coeffs) {
            *slot = v % self.p();
        }
        Ok(FqElem {
            ctx: self.clone(),
            c,
        })
    }

    /// Inverse of [`FqElem::index`].
    pub fn from_index(&self, idx: u128) -> FqElem {
        FqElem {
            ctx: self.clone(),
            c: digits(idx % self.order(), self.p(), self.m()),
        }
    }

    /// All field elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.order()).map(move |i| self.from_index(i))
    }

    fn first_nonresidue(&self) -> FqElem {
        let half = (self.order() - 1) / 2;
        (1..self.order())
            .map(|i| self.from_index(i))
            .find(|z| !z.pow(half).is_one())
            .expect("odd order field has a nonresidue")
    }

    fn mul_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let m = self.m();
        let p = self.p() as u128;
        if m == 1 {
            return vec![((a[0] as u128 * b[0] as u128) % p) as u64];
        }
        let mut tmp = vec![0u128; 2 * m - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                tmp[i + j] = (tmp[i + j] + x as u128 * y as u128) % p;
            }
        }
        let modulus = &self.0.modulus;
        for i in (m..2 * m - 1).rev() {
            let c = tmp[i] % p;
            if c == 0 {
                continue;
            }
            tmp[i] = 0;
            for j in 0..m {
                let sub = c * modulus[j] as u128 % p;
                tmp[i - m + j] = (tmp[i - m + j] + p - sub) % p;
            }
        }
        tmp.truncate(m);
        tmp.into_iter().map(|v| (v % p) as u64).collect()
    }
}

fn digits(mut idx: u128, p: u64, m: usize) -> Vec<u64> {
    let mut c = vec![0u64; m];
    for slot in c.iter_mut() {
        *slot = (idx % p as u128) as u64;
        idx /= p as u128;
    }
    c
}

/// Rabin's test over the prime field `base`.
fn is_irreducible_over(base: &FqCtx, coeffs: &[u64]) -> bool {
    let m = coeffs.len() - 1;
    if m == 1 {
        return true;
    }
    let f = FqPoly::from_u64s(base, coeffs);
    let x = FqPoly::x(base);
    let p = base.p() as u128;
    let mut frob = Vec::with_capacity(m + 1);
    let mut cur = x.clone();
    frob.push(cur.clone());
    for _ in 0..m {
        cur = cur.powmod(p, &f);
        frob.push(cur.clone());
    }
    if frob[m] != x.rem(&f) {
        return false;
    }
    prime_factors(m).into_iter().all(|r| {
        let g = FqPoly::gcd(&(&frob[m / r] - &x), &f);
        g.degree() == Some(0)
    })
}

/// An element of `F_{p^m}`, stored as `m` coefficients in `[0, p)` with
/// respect to the basis `1, t, ..., t^{m-1}`.
///
/// Elements are ordered by their integer index `sum c_i p^i`, which is the
/// canonical order used wherever a deterministic choice is needed.
#[derive(Clone)]
pub struct FqElem {
    ctx: FqCtx,
    c: Vec<u64>,
}

impl FqElem {
    pub fn ctx(&self) -> &FqCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&v| v == 0)
    }

    pub fn is_one(&self) -> bool {
        self.c[0] == 1 && self.c[1..].iter().all(|&v| v == 0)
    }

    /// Integer encoding `sum c_i p^i`.
    pub fn index(&self) -> u128 {
        self.c
            .iter()
            .rev()
            .fold(0u128, |acc, &v| acc * self.ctx.p() as u128 + v as u128)
    }

    /// Whether the element lies in the prime field.
    pub fn is_prime_field(&self) -> bool {
        self.c[1..].iter().all(|&v| v == 0)
    }

    pub fn pow(&self, mut e: u128) -> FqElem {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
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

    pub fn frobenius(&self) -> FqElem {
        self.pow(self.ctx.p() as u128)
    }

    pub fn inv(&self) -> Option<FqElem> {
        if self.is_zero() {
            return None;
        }
        if self.ctx.m() == 1 {
            let p = self.ctx.p() as i128;
            let (mut r0, mut r1) = (p, self.c[0] as i128);
            let (mut s0, mut s1) = (0i128, 1i128);
            while r1 != 0 {
                let q = r0 / r1;
                (r0, r1) = (r1, r0 - q * r1);
                (s0, s1) = (s1, s0 - q * s1);
            }
            return Some(self.ctx.from_u64(s0.rem_euclid(p) as u64));
        }
        Some(self.pow(self.ctx.order() - 2))
    }

    pub fn is_square(&self) -> bool {
        if self.is_zero() || self.ctx.p() == 2 {
            return true;
        }
        self.pow((self.ctx.order() - 1) / 2).is_one()
    }

    /// Both square roots `(r, -r)`, smaller first; `None` for non-squares.
    /// In characteristic 2 the unique root is returned twice.
    pub fn sqrt(&self) -> Option<(FqElem, FqElem)> {
        let r = self.sqrt_one()?;
        let s = -&r;
        Some(if s < r { (s, r) } else { (r, s) })
    }

    fn sqrt_one(&self) -> Option<FqElem> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let q = self.ctx.order();
        if self.ctx.p() == 2 {
            return Some(self.pow(q / 2));
        }
        if !self.is_square() {
            return None;
        }
        // Tonelli-Shanks
        let mut s = 0u32;
        let mut t = q - 1;
        while t.is_multiple_of(2) {
            t /= 2;
            s += 1;
        }
        let z = self.ctx.first_nonresidue();
        let mut m = s;
        let mut c = z.pow(t);
        let mut tt = self.pow(t);
        let mut r = self.pow(t.div_ceil(2));
        while !tt.is_one() {
            let mut i = 0u32;
            let mut probe = tt.clone();
            while !probe.is_one() {
                probe = &probe * &probe;
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = &b * &b;
            }
            m = i;
            c = &b * &b;
            tt = &tt * &c;
            r = &r * &b;
        }
        Some(r)
    }

    /// Smallest `d` with `x^{p^d} = x`, i.e. the degree over `F_p` of the
    /// subfield generated by the element.
    pub fn degree(&self) -> usize {
        let mut cur = self.frobenius();
        let mut d = 1;
        while cur != *self {
            cur = cur.frobenius();
            d += 1;
        }
        d
    }

    fn check_ctx(&self, other: &FqElem) {
        assert!(
            self.ctx == other.ctx,
            "field mismatch: {:?} vs {:?}",
            self.ctx,
            other.ctx
        );
    }
}

impl PartialEq for FqElem {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c && self.ctx == other.ctx
    }
}

impl Eq for FqElem {}

impl Hash for FqElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

impl Ord for FqElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.c.iter().rev().cmp(other.c.iter().rev())
    }
}

impl PartialOrd for FqElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_prime_field() {
            return write!(f, "{}", self.c[0]);
        }
        let mut first = true;
        for (i, &v) in self.c.iter().enumerate().rev() {
            if v == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (i, v) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => f.write_str("t")?,
                (1, v) => write!(f, "{v}t")?,
                (i, 1) => write!(f, "t^{i}")?,
                (i, v) => write!(f, "{v}t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &FqElem {
    type Output = FqElem;
    fn add(self, rhs: &FqElem) -> FqElem {
        self.check_ctx(rhs);
        let p = self.ctx.p();
        let c = self
            .c
            .iter()
            .zip(&rhs.c)
            .map(|(&a, &b)| ((a as u128 + b as u128) % p as u128) as u64)
            .collect();
        FqElem {
            ctx: self.ctx.clone(),
            c,
        }
    }
}

impl Sub for &FqElem {
    type Output = FqElem;
    fn sub(self, rhs: &FqElem) -> FqElem {
        self + &(-rhs)
    }
}

impl Neg for &FqElem {
    type Output = FqElem;
    fn neg(self) -> FqElem {
        let p = self.ctx.p();
        let c = self
            .c
            .iter()
            .map(|&a| if a == 0 { 0 } else { p - a })
            .collect();
        FqElem {
            ctx: self.ctx.clone(),
            c,
        }
    }
}

impl Neg for FqElem {
    type Output = FqElem;
    fn neg(self) -> FqElem {
        -&self
    }
}

impl Mul for &FqElem {
    type Output = FqElem;
    fn mul(self, rhs: &FqElem) -> FqElem {
        self.check_ctx(rhs);
        FqElem {
            ctx: self.ctx.clone(),
            c: self.ctx.mul_raw(&self.c, &rhs.c),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<FqElem> for FqElem {
            type Output = FqElem;
            fn $method(self, rhs: FqElem) -> FqElem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FqElem> for FqElem {
            type Output = FqElem;
            fn $method(self, rhs: &FqElem) -> FqElem {
                (&self).$method(rhs)
            }
        }
        impl $tr<FqElem> for &FqElem {
            type Output = FqElem;
            fn $method(self, rhs: FqElem) -> FqElem {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
