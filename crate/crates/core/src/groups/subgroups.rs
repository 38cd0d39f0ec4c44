use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Subgroup enumeration is limited to groups of at most this order.
pub const MAX_SUBGROUP_SCAN_ORDER: usize = 256;

fn bits(n: usize, elems: &[usize]) -> Vec<u64> {
    let mut b = vec![0u64; n.div_ceil(64)];
    for &e in elems {
        b[e / 64] |= 1 << (e % 64);
    }
    b
}

fn contains(b: &[u64], e: usize) -> bool {
    b[e / 64] >> (e % 64) & 1 == 1
}

/// All subgroups as sorted element lists, sorted by (order, elements).
///
/// Starts from the cyclic subgroups and joins each new subgroup with every
/// cyclic subgroup until nothing new appears.
pub fn subgroups(g: &FiniteGroup) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    if n > MAX_SUBGROUP_SCAN_ORDER {
        return Err(Error::GroupTooLarge {
            order: n,
            bound: MAX_SUBGROUP_SCAN_ORDER,
        });
    }
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut cyclic: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut all: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for a in 0..n {
        let c = g.closure(&[a]);
        let key = bits(n, &c);
        if seen.insert(key.clone()) {
            cyclic.push((a, key));
            all.push((vec![a], c));
        }
    }
    let mut frontier: Vec<usize> = (0..all.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for idx in frontier {
            let (gens, elems) = all[idx].clone();
            let hb = bits(n, &elems);
            for (a, _) in &cyclic {
                if contains(&hb, *a) {
                    continue;
                }
                let mut gs = gens.clone();
                gs.push(*a);
                let j = g.closure(&gs);
                let key = bits(n, &j);
                if seen.insert(key) {
                    next.push(all.len());
                    all.push((gs, j));
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Vec<usize>> = all.into_iter().map(|(_, e)| e).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn p_part(mut n: usize, p: usize) -> usize {
    let mut q = 1;
    while n.is_multiple_of(p) {
        n /= p;
        q *= p;
    }
    q
}

/// Whether the subgroup on `elems` is cyclic-by-`p` with `p | |H|`: a
/// normal Sylow `p`-subgroup with cyclic quotient.
pub fn is_cyclic_by_p(g: &FiniteGroup, elems: &[usize], p: usize) -> bool {
    let h = elems.len();
    if !h.is_multiple_of(p) {
        return false;
    }
    let pa = p_part(h, p);
    let sylow: Vec<usize> = elems
        .iter()
        .copied()
        .filter(|&a| pa.is_multiple_of(g.element_order(a)))
        .collect();
    // the p-elements form a subgroup of order p^a exactly when the Sylow
    // p-subgroup is unique, i.e. normal
    if sylow.len() != pa {
        return false;
    }
    let inside = bits(g.order(), &sylow);
    let m = h / pa;
    elems.iter().any(|&a| {
        let mut x = a;
        let mut k = 1;
        while !contains(&inside, x) {
            x = g.mul(x, a);
            k += 1;
        }
        k == m
    })
}

/// Subgroups `H` with `p | |H|` that are cyclic-by-`p`.
pub fn cyclic_by_p_subgroups(g: &FiniteGroup, p: usize) -> Result<Vec<Vec<usize>>> {
    Ok(subgroups(g)?
        .into_iter()
        .filter(|h| is_cyclic_by_p(g, h, p))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{quaternion_group, reference_group, GroupType};

    #[test]
    fn subgroup_counts() {
        assert_eq!(
            subgroups(&reference_group(&GroupType::Cyclic(6)).unwrap())
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            subgroups(&reference_group(&GroupType::Dihedral(3)).unwrap())
                .unwrap()
                .len(),
            6
        );
        assert_eq!(subgroups(&quaternion_group().unwrap()).unwrap().len(), 6);
        assert_eq!(
            subgroups(&reference_group(&GroupType::A4).unwrap())
                .unwrap()
                .len(),
            10
        );
        assert_eq!(
            subgroups(&reference_group(&GroupType::S4).unwrap())
                .unwrap()
                .len(),
            30
        );
    }

    #[test]
    fn cyclic_by_p() {
        let a4 = reference_group(&GroupType::A4).unwrap();
        let cbp = cyclic_by_p_subgroups(&a4, 2).unwrap();
        assert!(cbp.iter().any(|h| h.len() == 12));
        let z6 = reference_group(&GroupType::Cyclic(6)).unwrap();
        let cbp = cyclic_by_p_subgroups(&z6, 3).unwrap();
        assert_eq!(cbp.len(), 2);
        let z5 = reference_group(&GroupType::Cyclic(5)).unwrap();
        assert!(cyclic_by_p_subgroups(&z5, 3).unwrap().is_empty());
    }
}
