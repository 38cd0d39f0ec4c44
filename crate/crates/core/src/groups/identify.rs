use alloc::vec::Vec;

use super::{
    is_isomorphic, presentation_holds, presentation_of, reference_group, Fingerprint, FiniteGroup,
    GroupType,
};

/// Largest order handled by [`identify`].
pub const MAX_IDENTIFY_ORDER: usize = 256;

/// Candidate names of order `n`, constructible ones first.
fn candidates(n: usize) -> Vec<GroupType> {
    use GroupType::*;
    let mut out = Vec::new();
    let mut base = Vec::new();
    if n >= 1 {
        base.push(Cyclic(n));
    }
    if n.is_multiple_of(2) && n >= 4 {
        base.push(Dihedral(n / 2));
    }
    for t in [A4, S4, A5, SL2_3, GL2_3, SL2_5] {
        if t.order() == n {
            base.push(t);
        }
    }
    out.extend(base);
    if n.is_multiple_of(2) {
        let half = n / 2;
        let mut inner = Vec::new();
        if half.is_multiple_of(2) {
            inner.push(Cyclic(half));
        }
        if half.is_multiple_of(4) && half >= 4 {
            inner.push(Dihedral(half / 2));
        }
        for t in [A4, S4, A5] {
            if t.order() == half {
                inner.push(t);
            }
        }
        out.extend(inner.into_iter().map(GroupType::z2));
    }
    if n.is_multiple_of(4) {
        let k = n / 4;
        out.extend([Vn(k), Hn(k), Un(k), Gn(k)]);
    }
    if n.is_multiple_of(2) && (n / 2) % 2 == 1 {
        let k = n / 2;
        out.extend([Vn(k), Un(k)]);
    }
    if n == 48 {
        out.extend([W2, W3]);
    }
    out.retain(|t| t.order() == n);
    out
}

/// Names `g` from the catalog, or returns `Unknown` with its fingerprint.
pub fn identify(g: &FiniteGroup) -> GroupType {
    let n = g.order();
    let fp = Fingerprint::of(g);
    if n <= MAX_IDENTIFY_ORDER {
        for t in candidates(n) {
            if let Some(rels) = presentation_of(&t) {
                if presentation_holds(g, &rels, t.order()) {
                    return t;
                }
                continue;
            }
            let Ok(r) = reference_group(&t) else { continue };
            if Fingerprint::of(&r) == fp && is_isomorphic(g, &r).is_some() {
                return t.canonical();
            }
        }
    }
    GroupType::Unknown {
        order: n,
        fingerprint: alloc::format!("{fp}"),
    }
}
