use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use super::{squarefree_decompose, FqPoly};
use crate::algebra::{FieldEmbedding, FqCtx, FqElem, MAX_EXTENSION_DEGREE};
use crate::error::{Error, Result};

/// Distinct-degree profile of the squarefree part of `f`: pairs
/// `(d, k)` meaning `k` irreducible factors of degree `d` over the base field.
pub fn ddf_profile(f: &FqPoly) -> Result<Vec<(usize, usize)>> {
    let sqf = squarefree_decompose(f)?;
    let mut g = sqf.radical();
    let ctx = f.ctx();
    let q = ctx.order();
    let x = FqPoly::x(ctx);
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 1;
    while g.degree().unwrap_or(0) >= 2 * d {
        h = h.powmod(q, &g);
        let fac = FqPoly::gcd(&g, &(&h - &x));
        let k = fac.degree().unwrap_or(0);
        if k > 0 {
            out.push((d, k / d));
            g = g.exact_div(&fac);
            h = h.rem(&g);
        }
        d += 1;
    }
    if let Some(k) = g.degree().filter(|&k| k > 0) {
        out.push((k, 1));
    }
    Ok(out)
}

/// Degree over `F_p` of the splitting field of `f` (a multiple of the base
/// field degree).
pub fn splitting_degree(f: &FqPoly) -> Result<usize> {
    let lcm = ddf_profile(f)?
        .into_iter()
        .fold(1usize, |acc, (d, _)| acc.lcm(&d));
    Ok(lcm * f.ctx().m())
}

/// The distinct roots of `f` lying in its own coefficient field, in
/// canonical order.
pub fn roots_in_field(f: &FqPoly) -> Vec<FqElem> {
    let Some(deg) = f.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let ctx = f.ctx();
    let x = FqPoly::x(ctx);
    let frob = x.powmod(ctx.order(), f);
    let g = FqPoly::gcd(f, &(&frob - &x));
    let mut out = Vec::new();
    split_linear(&g, &mut out);
    out.sort();
    out
}

/// Splits a monic product of distinct linear factors.
fn split_linear(g: &FqPoly, out: &mut Vec<FqElem>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(-&g.coeffs()[0]),
        Some(_) => {
            let ctx = g.ctx();
            for a in ctx.elements() {
                let probe = if ctx.p() == 2 {
                    trace_poly(&a, g)
                } else {
                    let shifted = FqPoly::from_coeffs(ctx, vec![a, ctx.one()]);
                    &shifted.powmod((ctx.order() - 1) / 2, g) - &FqPoly::one(ctx)
                };
                let h = FqPoly::gcd(g, &probe);
                let k = h.degree().unwrap_or(0);
                if k > 0 && Some(k) < g.degree() {
                    split_linear(&h, out);
                    split_linear(&g.exact_div(&h), out);
                    return;
                }
            }
            unreachable!("equal-degree split failed on a product of distinct linears");
        }
    }
}

/// `sum_{i<m} (a x)^{2^i} mod g` over `F_{2^m}`.
fn trace_poly(a: &FqElem, g: &FqPoly) -> FqPoly {
    let ctx = g.ctx();
    let mut term = FqPoly::monomial(a.clone(), 1).rem(g);
    let mut acc = term.clone();
    for _ in 1..ctx.m() {
        term = (&term * &term).rem(g);
        acc = &acc + &term;
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub value: FqElem,
    pub multiplicity: usize,
    /// Degree over `F_p` of the smallest field containing the root.
    pub degree: usize,
}

/// All roots of a polynomial inside its splitting field.
#[derive(Clone, Debug)]
pub struct SplitRoots {
    pub field: FqCtx,
    /// Embedding of the coefficient field into `field`.
    pub embedding: FieldEmbedding,
    pub roots: Vec<Root>,
}

impl SplitRoots {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

/// Roots with multiplicity over the splitting field `F_{p^M}`.
///
/// When `M` equals the degree of the coefficient field that field is kept,
/// otherwise the canonical field of degree `M` is built and `f` is embedded.
pub fn roots_over_extensions(f: &FqPoly, max_total_degree: usize) -> Result<SplitRoots> {
    if max_total_degree > MAX_EXTENSION_DEGREE {
        return Err(Error::DegreeOutOfRange(max_total_degree));
    }
    let sqf = squarefree_decompose(f)?;
    let big_m = splitting_degree(f)?;
    if big_m > max_total_degree {
        return Err(Error::SplittingBound {
            needed: big_m,
            bound: max_total_degree,
        });
    }
    let base = f.ctx();
    let field = if big_m == base.m() {
        base.clone()
    } else {
        FqCtx::new(base.p(), big_m)?
    };
    let embedding = FieldEmbedding::new(base, &field)?;
    let mut roots = Vec::new();
    for (g, e) in &sqf.factors {
        for value in roots_in_field(&g.embed(&embedding)) {
            let degree = value.degree();
            roots.push(Root {
                value,
                multiplicity: *e,
                degree,
            });
        }
    }
    roots.sort_by(|a, b| a.value.cmp(&b.value));
    Ok(SplitRoots {
        field,
        embedding,
        roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let k = FqCtx::new(3, 1).unwrap();
        let r = roots_over_extensions(&FqPoly::from_i64s(&k, &[-1, 1]), 24).unwrap();
        assert_eq!(r.field.m(), 1);
        assert_eq!(r.roots.len(), 1);
        assert_eq!(r.roots[0].value, k.one());

        let x2p1 = FqPoly::from_u64s(&k, &[1, 0, 1]);
        assert!(roots_in_field(&x2p1).is_empty());
        let r = roots_over_extensions(&x2p1, 24).unwrap();
        assert_eq!(r.field.m(), 2);
        assert_eq!(r.roots.len(), 2);
        assert!(r.roots.iter().all(|x| x.degree == 2));

        let x4p1 = FqPoly::from_u64s(&k, &[1, 0, 0, 0, 1]);
        let r = roots_over_extensions(&x4p1, 24).unwrap();
        assert_eq!((r.field.m(), r.roots.len()), (2, 4));
    }

    #[test]
    fn bound_enforced() {
        let k = FqCtx::new(3, 1).unwrap();
        // x^3 - x - 1 is irreducible over F_3
        let f = FqPoly::from_i64s(&k, &[-1, -1, 0, 1]);
        assert_eq!(
            roots_over_extensions(&f, 2).unwrap_err(),
            Error::SplittingBound {
                needed: 3,
                bound: 2
            }
        );
        assert_eq!(ddf_profile(&f).unwrap(), vec![(3, 1)]);
    }

    #[test]
    fn multiplicities_and_exhaustive_agreement() {
        let k = FqCtx::new(7, 1).unwrap();
        let f =
            &FqPoly::from_i64s(&k, &[-1, 1]).pow(3) * &FqPoly::from_i64s(&k, &[0, -1, 0, 0, 0, 1]);
        let r = roots_over_extensions(&f, 24).unwrap();
        assert_eq!(r.total_multiplicity(), 8);
        let ext = &r.field;
        let g = f.embed(&r.embedding);
        let brute: Vec<FqElem> = ext.elements().filter(|z| g.eval(z).is_zero()).collect();
        let found: Vec<FqElem> = r.roots.iter().map(|x| x.value.clone()).collect();
        assert_eq!(brute, found);
    }

    #[test]
    fn characteristic_two_roots() {
        let k = FqCtx::new(2, 4).unwrap();
        let f = FqPoly::from_u64s(&k, &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(roots_in_field(&f).len(), 16);
    }
}
