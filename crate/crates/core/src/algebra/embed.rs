use alloc::format;

use super::{FqCtx, FqElem};
use crate::error::{Error, Result};
use crate::poly::{roots_in_field, FqPoly};

/// The ring embedding `F_{p^k} -> F_{p^n}` (k | n) sending the generator of
/// the source to the smallest root of its modulus in the target.
#[derive(Clone, Debug)]
pub struct FieldEmbedding {
    src: FqCtx,
    dst: FqCtx,
    image: FqElem,
}

impl FieldEmbedding {
    pub fn new(src: &FqCtx, dst: &FqCtx) -> Result<Self> {
        if src.p() != dst.p() || !dst.m().is_multiple_of(src.m()) {
            return Err(Error::IncompatibleFields(format!(
                "cannot embed F_{}^{} into F_{}^{}",
                src.p(),
                src.m(),
                dst.p(),
                dst.m()
            )));
        }
        let modulus = FqPoly::from_u64s(dst, src.modulus());
        let image = roots_in_field(&modulus)
            .into_iter()
            .next()
            .ok_or_else(|| Error::IncompatibleFields(format!("no root of {modulus} in target")))?;
        Ok(FieldEmbedding {
            src: src.clone(),
            dst: dst.clone(),
            image,
        })
    }

    pub fn source(&self) -> &FqCtx {
        &self.src
    }

    pub fn target(&self) -> &FqCtx {
        &self.dst
    }

    /// Image of the source generator.
    pub fn generator_image(&self) -> &FqElem {
        &self.image
    }

    pub fn apply(&self, x: &FqElem) -> FqElem {
        assert!(x.ctx() == &self.src, "element is not in the source field");
        let mut acc = self.dst.zero();
        for &c in x.coeffs().iter().rev() {
            acc = &acc * &self.image + self.dst.from_u64(c);
        }
        acc
    }

    pub fn apply_poly(&self, f: &FqPoly) -> FqPoly {
        FqPoly::from_coeffs(
            &self.dst,
            f.coeffs().iter().map(|c| self.apply(c)).collect(),
        )
    }
}

/// One-shot embedding of a single element.
pub fn fq_embed(src: &FqCtx, dst: &FqCtx, x: &FqElem) -> Result<FqElem> {
    Ok(FieldEmbedding::new(src, dst)?.apply(x))
}
