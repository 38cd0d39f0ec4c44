use alloc::vec::Vec;

use super::{BinaryForm, P1Point};
use crate::algebra::{FieldEmbedding, FqCtx};
use crate::error::{Error, Result};
use crate::poly::{roots_over_extensions, FqPoly};

/// The curve `y^2 = f(x)` over `F_{p^m}`, `p` odd, `f` squarefree of
/// degree at least 5.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperCurve {
    f: FqPoly,
    genus: usize,
    form: BinaryForm,
}

impl HyperCurve {
    pub fn new(f: FqPoly) -> Result<Self> {
        if f.ctx().p() == 2 {
            return Err(Error::CharacteristicTwo);
        }
        let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
        let genus = deg.saturating_sub(1) / 2;
        if deg < 5 {
            return Err(Error::GenusTooSmall(genus));
        }
        if !f.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let form = BinaryForm::new(f.clone(), 2 * genus + 2);
        Ok(HyperCurve { f, genus, form })
    }

    pub fn ctx(&self) -> &FqCtx {
        self.f.ctx()
    }

    pub fn f(&self) -> &FqPoly {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Degree `2g + 2` form; vanishes at infinity iff `deg f` is odd.
    pub fn form(&self) -> &BinaryForm {
        &self.form
    }
}

/// The `2g + 2` branch points over the splitting field of `f`.
#[derive(Clone, Debug)]
pub struct BranchLocus {
    pub field: FqCtx,
    /// Embedding of the curve's field into `field`.
    pub embedding: FieldEmbedding,
    /// Sorted; infinity last when present.
    pub points: Vec<P1Point>,
}

impl BranchLocus {
    /// Degree over `F_p` of the field holding the points.
    pub fn field_degree(&self) -> usize {
        self.field.m()
    }
}

pub fn branch_locus(curve: &HyperCurve, max_degree: usize) -> Result<BranchLocus> {
    let split = roots_over_extensions(curve.f(), max_degree)?;
    let mut points: Vec<P1Point> = split
        .roots
        .into_iter()
        .map(|r| P1Point::Affine(r.value))
        .collect();
    if curve.f().degree().unwrap() % 2 == 1 {
        points.push(P1Point::Infinity);
    }
    debug_assert_eq!(points.len(), 2 * curve.genus() + 2);
    Ok(BranchLocus {
        field: split.field,
        embedding: split.embedding,
        points,
    })
}
