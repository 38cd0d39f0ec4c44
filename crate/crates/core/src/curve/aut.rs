use alloc::vec::Vec;
use core::fmt;

use super::{
    branch_locus, moebius_act_form, BinaryForm, BranchLocus, HyperCurve, Moebius, P1Point,
};
use crate::algebra::{FieldEmbedding, FqCtx, FqElem};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// The reduced automorphism group: Moebius maps over the splitting field
/// that permute the branch points.
#[derive(Clone, Debug)]
pub struct ReducedAutGroup {
    pub locus: BranchLocus,
    /// The curve's form over `locus.field`.
    pub form: BinaryForm,
    /// Sorted, identity included.
    pub elements: Vec<Moebius>,
}

impl ReducedAutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn field(&self) -> &FqCtx {
        &self.locus.field
    }
}

fn stabilizes(h: &Moebius, points: &[P1Point]) -> bool {
    let mut image: Vec<P1Point> = points.iter().map(|p| h.apply(p)).collect();
    image.sort();
    image == points
}

/// All `h` in `PGL_2(F_{p^M})` stabilizing the branch locus, `M` the
/// splitting degree.
///
/// A Moebius map is determined by the images of three points, so every
/// stabilizer element is the map sending the first three branch points to
/// some ordered triple of distinct branch points.
pub fn reduced_autgroup(curve: &HyperCurve, max_degree: usize) -> Result<ReducedAutGroup> {
    let locus = branch_locus(curve, max_degree)?;
    let form = curve.form().embed(&locus.embedding);
    let pts = &locus.points;
    let src = [&pts[0], &pts[1], &pts[2]];
    let n = pts.len();
    let mut elements = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                let h = Moebius::from_triples(src, [&pts[i], &pts[j], &pts[k]])
                    .expect("distinct branch points");
                if stabilizes(&h, pts) {
                    elements.push(h);
                }
            }
        }
    }
    elements.sort();
    elements.dedup();
    Ok(ReducedAutGroup {
        locus,
        form,
        elements,
    })
}

/// Brute-force stabilizer scan over all of `PGL_2(F_q)`; used as a cross
/// check for small `q`.
pub fn reduced_autgroup_exhaustive(curve: &HyperCurve, max_degree: usize) -> Result<Vec<Moebius>> {
    let locus = branch_locus(curve, max_degree)?;
    let k = &locus.field;
    let mut out = Vec::new();
    let one = k.one();
    let zero = k.zero();
    // normalized representatives: (1, b, c, d) and (0, 1, c, d)
    for b in k.elements() {
        for c in k.elements() {
            for d in k.elements() {
                if let Ok(h) = Moebius::new(one.clone(), b.clone(), c.clone(), d.clone()) {
                    if stabilizes(&h, &locus.points) {
                        out.push(h);
                    }
                }
            }
        }
    }
    for c in k.elements() {
        for d in k.elements() {
            if let Ok(h) = Moebius::new(zero.clone(), one.clone(), c.clone(), d.clone()) {
                if stabilizes(&h, &locus.points) {
                    out.push(h);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// A curve automorphism `(x, y) -> (h(x), e y / (c x + d)^{g+1})`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurveAut {
    pub h: Moebius,
    pub e: FqElem,
}

impl CurveAut {
    /// `self o other`: apply `other` first.
    ///
    /// Substituting one action into the other gives
    /// `(M1 M2, e1 e2 / (c'' x + d'')^{g+1})` with the unnormalized product
    /// `M1 M2 = lambda N`, hence `e = e1 e2 / lambda^{g+1}` on `N`.
    pub fn compose(&self, other: &CurveAut, genus: usize) -> CurveAut {
        let (h, lambda) = self.h.compose_scaled(&other.h);
        let scale = lambda.pow(genus as u128 + 1).inv().expect("nonzero");
        CurveAut {
            h,
            e: &(&self.e * &other.e) * &scale,
        }
    }

    /// Image of an affine point `(x, y)`; `None` when it lands at infinity.
    pub fn apply_point(&self, x: &FqElem, y: &FqElem, genus: usize) -> Option<(FqElem, FqElem)> {
        let [a, b, c, d] = self.h.entries();
        let den = &(c * x) + d;
        let inv = den.inv()?;
        let nx = &(&(a * x) + b) * &inv;
        let ny = &(&self.e * y) * &inv.pow(genus as u128 + 1);
        Some((nx, ny))
    }

    pub fn is_hyperelliptic_involution(&self) -> bool {
        self.h.is_identity() && (&self.e + &self.e.ctx().one()).is_zero()
    }
}

impl fmt::Display for CurveAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, e={})", self.h, self.e)
    }
}

/// The full automorphism group, all elements over one field.
#[derive(Clone, Debug)]
pub struct FullAutGroup {
    pub field: FqCtx,
    pub genus: usize,
    /// Sorted.
    pub elements: Vec<CurveAut>,
    /// Set when a quadratic extension was needed for the multipliers.
    pub extended: bool,
}

impl FullAutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn sigma(&self) -> usize {
        self.elements
            .iter()
            .position(CurveAut::is_hyperelliptic_involution)
            .expect("hyperelliptic involution is always present")
    }
}

/// Lifts every reduced element `h` to the two automorphisms `(h, +-e)` with
/// `e^2 = c_h`. If some multiplier is not a square, everything is moved to
/// the quadratic extension first.
pub fn lift_to_full(curve: &HyperCurve, reduced: &ReducedAutGroup) -> Result<FullAutGroup> {
    let mut field = reduced.field().clone();
    let mut multipliers = Vec::with_capacity(reduced.order());
    for h in &reduced.elements {
        let (_, c) = moebius_act_form(h, &reduced.form);
        multipliers.push(c.ok_or(Error::MissingMultiplier)?);
    }
    let mut hs = reduced.elements.clone();
    let extended = multipliers.iter().any(|c| !c.is_square());
    if extended {
        let big = FqCtx::new_unbounded(field.p(), 2 * field.m())?;
        let e = FieldEmbedding::new(&field, &big)?;
        hs = hs.iter().map(|h| h.embed(&e)).collect();
        multipliers = multipliers.iter().map(|c| e.apply(c)).collect();
        field = big;
    }
    let mut elements = Vec::with_capacity(2 * hs.len());
    for (h, c) in hs.into_iter().zip(multipliers) {
        let (r, s) = c.sqrt().expect("multiplier is a square here");
        elements.push(CurveAut { h: h.clone(), e: r });
        elements.push(CurveAut { h, e: s });
    }
    elements.sort();
    Ok(FullAutGroup {
        field,
        genus: curve.genus(),
        elements,
        extended,
    })
}

/// Reduced and full automorphism groups with their Cayley tables.
#[derive(Clone, Debug)]
pub struct AutomorphismGroups {
    pub reduced: ReducedAutGroup,
    pub full: FullAutGroup,
    pub reduced_table: FiniteGroup,
    pub full_table: FiniteGroup,
    /// Index of the hyperelliptic involution in `full_table`.
    pub sigma: usize,
}

pub fn automorphism_groups(curve: &HyperCurve, max_degree: usize) -> Result<AutomorphismGroups> {
    let reduced = reduced_autgroup(curve, max_degree)?;
    let full = lift_to_full(curve, &reduced)?;
    let reduced_table = FiniteGroup::cayley_from_elements(&reduced.elements, |a, b| a.compose(b))?
        .with_labels(
            reduced
                .elements
                .iter()
                .map(|h| alloc::format!("{h}"))
                .collect(),
        );
    let g = curve.genus();
    let full_table = FiniteGroup::cayley_from_elements(&full.elements, |a, b| a.compose(b, g))?
        .with_labels(
            full.elements
                .iter()
                .map(|a| alloc::format!("{a}"))
                .collect(),
        );
    let sigma = full.sigma();
    Ok(AutomorphismGroups {
        reduced,
        full,
        reduced_table,
        full_table,
        sigma,
    })
}
