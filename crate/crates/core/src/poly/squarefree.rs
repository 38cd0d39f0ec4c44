use alloc::vec::Vec;
use core::fmt;

use super::FqPoly;
use crate::algebra::FqElem;
use crate::error::{Error, Result};

/// `unit * prod f_i^{e_i}` with monic, pairwise coprime `f_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredForm {
    pub unit: FqElem,
    pub factors: Vec<(FqPoly, usize)>,
}

impl FactoredForm {
    pub fn new(unit: FqElem, factors: Vec<(FqPoly, usize)>) -> Self {
        FactoredForm { unit, factors }
    }

    pub fn expand(&self) -> FqPoly {
        self.factors
            .iter()
            .fold(FqPoly::constant(self.unit.clone()), |acc, (f, e)| {
                &acc * &f.pow(*e as u64)
            })
    }

    /// Product of the distinct factors (the radical, up to the unit).
    pub fn radical(&self) -> FqPoly {
        let ctx = self.unit.ctx();
        self.factors
            .iter()
            .fold(FqPoly::one(ctx), |acc, (f, _)| &acc * f)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }
}

impl fmt::Display for FactoredForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() || self.factors.is_empty() {
            parts.push(alloc::format!("{}", self.unit));
        }
        for (g, e) in &self.factors {
            let base =
                if g.coeffs().len() > 1 && g.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                    alloc::format!("({g})")
                } else {
                    alloc::format!("{g}")
                };
            if *e == 1 {
                parts.push(base);
            } else {
                parts.push(alloc::format!("{base}^{e}"));
            }
        }
        f.write_str(&parts.join("*"))
    }
}

/// Squarefree decomposition `f = unit * prod g_i^i`.
///
/// Works in characteristic `p` where the derivative may vanish: the part of
/// `f` made of `p`-th powers is peeled off by taking a `p`-th root and
/// decomposed recursively.
pub fn squarefree_decompose(f: &FqPoly) -> Result<FactoredForm> {
    let unit = f.lead().cloned().ok_or(Error::ZeroPolynomial)?;
    let mut factors = Vec::new();
    sqf_monic(&f.monic(), 1, &mut factors);
    factors.sort_by(|(a, e), (b, f)| e.cmp(f).then_with(|| a.degree().cmp(&b.degree())));
    // merge equal multiplicities so the output is canonical
    let mut merged: Vec<(FqPoly, usize)> = Vec::new();
    for (g, e) in factors {
        match merged.last_mut() {
            Some((h, k)) if *k == e => *h = &*h * &g,
            _ => merged.push((g, e)),
        }
    }
    Ok(FactoredForm::new(unit, merged))
}

fn sqf_monic(f: &FqPoly, scale: usize, out: &mut Vec<(FqPoly, usize)>) {
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    let p = f.ctx().p() as usize;
    let mut c = FqPoly::gcd(f, &f.derivative());
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = FqPoly::gcd(&w, &c);
        let z = w.exact_div(&y);
        if z.degree() > Some(0) {
            out.push((z, i * scale));
        }
        i += 1;
        c = c.exact_div(&y);
        w = y;
    }
    if c.degree() > Some(0) {
        sqf_monic(&c.pth_root(), scale * p, out);
    }
}

/// Outcome of comparing a claimed factorization against a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchReport {
    pub equal: bool,
    pub expanded: FqPoly,
    /// `target - expand(claim)`.
    pub difference: FqPoly,
}

pub fn expand_claimed_factorization(claim: &FactoredForm, target: &FqPoly) -> MatchReport {
    let expanded = claim.expand();
    let difference = target - &expanded;
    MatchReport {
        equal: difference.is_zero(),
        expanded,
        difference,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FqCtx;

    #[test]
    fn known_decompositions() {
        let k = FqCtx::new(3, 1).unwrap();
        let x4p1 = FqPoly::from_u64s(&k, &[1, 0, 0, 0, 1]);
        let s = FqPoly::from_u64s(&k, &[1, 0, 0, 0, 2, 0, 0, 0, 1]);
        let d = squarefree_decompose(&s).unwrap();
        assert_eq!(d.factors, alloc::vec![(x4p1.clone(), 2)]);
        let r = FqPoly::from_u64s(&k, &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let d = squarefree_decompose(&r).unwrap();
        assert_eq!(d.factors, alloc::vec![(x4p1, 3)]);
        let q = FqPoly::from_i64s(&k, &[0, -1, 0, 0, 0, 1]);
        let d = squarefree_decompose(&q).unwrap();
        assert_eq!(d.factors.len(), 1);
        assert_eq!(d.factors[0].1, 1);
        assert!(d.is_squarefree());
    }

    #[test]
    fn mixed_multiplicities_round_trip() {
        let k = FqCtx::new(3, 2).unwrap();
        let a = FqPoly::from_coeffs(&k, alloc::vec![k.generator(), k.one()]);
        let b = FqPoly::from_u64s(&k, &[2, 1]);
        let c = FqPoly::from_u64s(&k, &[1, 2, 0, 1]);
        let f = (&(&a.pow(4) * &b.pow(3)) * &c.pow(6)).scale(&k.from_u64(2));
        let d = squarefree_decompose(&f).unwrap();
        assert_eq!(d.expand(), f);
        let mults: Vec<usize> = d.factors.iter().map(|x| x.1).collect();
        assert_eq!(mults, alloc::vec![3, 4, 6]);
    }

    #[test]
    fn zero_rejected() {
        let k = FqCtx::new(5, 1).unwrap();
        assert_eq!(
            squarefree_decompose(&FqPoly::zero(&k)).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn claim_difference() {
        let k = FqCtx::new(5, 1).unwrap();
        let target = FqPoly::from_u64s(&k, &[1, 10, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let claim = FactoredForm::new(
            k.one(),
            alloc::vec![(FqPoly::from_i64s(&k, &[-1, 0, 1]), 5)],
        );
        let rep = expand_claimed_factorization(&claim, &target);
        assert!(!rep.equal);
        assert_eq!(rep.difference, FqPoly::from_u64s(&k, &[2]));
    }
}
