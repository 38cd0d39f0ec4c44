use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{Moebius, P1Point};
use crate::algebra::{FieldEmbedding, FqElem};
use crate::poly::FqPoly;

/// The binary form `F(X, Z) = Z^n f(X / Z)` of degree `n >= deg f`.
///
/// It vanishes at infinity with multiplicity `n - deg f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    degree: usize,
    poly: FqPoly,
}

impl BinaryForm {
    pub fn new(poly: FqPoly, degree: usize) -> Self {
        assert!(
            poly.degree().unwrap_or(0) <= degree,
            "form degree below polynomial degree"
        );
        BinaryForm { degree, poly }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The dehomogenization `F(x, 1)`.
    pub fn poly(&self) -> &FqPoly {
        &self.poly
    }

    /// `F(aX + bZ, cX + dZ)`.
    pub fn act(&self, h: &Moebius) -> BinaryForm {
        let ctx = self.poly.ctx();
        let [a, b, c, d] = h.entries();
        let num = FqPoly::from_coeffs(ctx, vec![b.clone(), a.clone()]);
        let den = FqPoly::from_coeffs(ctx, vec![d.clone(), c.clone()]);
        let n = self.degree;
        let mut num_pows = Vec::with_capacity(n + 1);
        let mut den_pows = Vec::with_capacity(n + 1);
        num_pows.push(FqPoly::one(ctx));
        den_pows.push(FqPoly::one(ctx));
        for i in 1..=n {
            num_pows.push(&num_pows[i - 1] * &num);
            den_pows.push(&den_pows[i - 1] * &den);
        }
        let mut out = FqPoly::zero(ctx);
        for (i, fi) in self.poly.coeffs().iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            out = &out + &(&num_pows[i] * &den_pows[n - i]).scale(fi);
        }
        BinaryForm::new(out, n)
    }

    /// The scalar `c` with `other = c * self`, if any.
    pub fn ratio(&self, other: &BinaryForm) -> Option<FqElem> {
        if self.degree != other.degree || self.poly.is_zero() {
            return None;
        }
        let k = self.poly.coeffs().iter().position(|c| !c.is_zero())?;
        let c = &other.poly.coeff(k) * &self.poly.coeff(k).inv()?;
        (self.poly.scale(&c) == other.poly).then_some(c)
    }

    pub fn embed(&self, e: &FieldEmbedding) -> BinaryForm {
        BinaryForm::new(self.poly.embed(e), self.degree)
    }

    /// Value at a point of `P^1` with the representative `(x : 1)` or `(1 : 0)`.
    pub fn eval(&self, p: &P1Point) -> FqElem {
        match p {
            P1Point::Affine(x) => self.poly.eval(x),
            P1Point::Infinity => self.poly.coeff(self.degree),
        }
    }
}

/// `F(aX + bZ, cX + dZ)` together with the multiplier `c_h` when that form
/// equals `c_h * F`.
pub fn moebius_act_form(h: &Moebius, form: &BinaryForm) -> (BinaryForm, Option<FqElem>) {
    let image = form.act(h);
    let c = form.ratio(&image);
    (image, c)
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (degree {})", self.poly, self.degree)
    }
}
