use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::FiniteGroup;

/// Cheap isomorphism invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub order_histogram: BTreeMap<usize, usize>,
    pub center_order: usize,
    pub derived_order: usize,
}

impl Fingerprint {
    pub fn of(g: &FiniteGroup) -> Self {
        Fingerprint {
            order: g.order(),
            abelian: g.is_abelian(),
            order_histogram: g.order_histogram(),
            center_order: g.center().len(),
            derived_order: g.derived_subgroup().len(),
        }
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hist: Vec<String> = self
            .order_histogram
            .iter()
            .map(|(o, c)| format!("{o}:{c}"))
            .collect();
        write!(
            f,
            "{};orders={};center={};derived={}",
            if self.abelian {
                "abelian"
            } else {
                "nonabelian"
            },
            hist.join(","),
            self.center_order,
            self.derived_order
        )
    }
}

/// A generating set of minimal size among those tried: a single element if
/// the group is cyclic, else a pair when one exists, else the greedy set.
pub fn small_generating_set(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    if n == 1 {
        return Vec::new();
    }
    let orders: Vec<usize> = (0..n).map(|a| g.element_order(a)).collect();
    let mut by_order: Vec<usize> = (0..n).collect();
    by_order.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
    if orders[by_order[0]] == n {
        return vec![by_order[0]];
    }
    for &a in &by_order {
        for &b in &by_order {
            if a < b && g.closure(&[a, b]).len() == n {
                return vec![a, b];
            }
        }
        if orders[a] < 2 {
            break;
        }
    }
    g.generators()
}

/// Search for an isomorphism `g1 -> g2`, returned as the image table
/// `phi[a]` for each element index `a` of `g1`.
pub fn is_isomorphic(g1: &FiniteGroup, g2: &FiniteGroup) -> Option<Vec<usize>> {
    if g1.order() != g2.order() {
        return None;
    }
    if Fingerprint::of(g1) != Fingerprint::of(g2) {
        return None;
    }
    let gens = small_generating_set(g1);
    let orders2: Vec<usize> = (0..g2.order()).map(|a| g2.element_order(a)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let o = g1.element_order(x);
            (0..g2.order()).filter(|&y| orders2[y] == o).collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search(g1, g2, &gens, &candidates, &mut images)
}

fn search(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let k = images.len();
    if k == gens.len() {
        return extend(g1, g2, gens, images);
    }
    for &y in &candidates[k] {
        if images.contains(&y) {
            continue;
        }
        // products with earlier generators must have matching orders
        let ok = (0..k).all(|i| {
            g1.element_order(g1.mul(gens[i], gens[k])) == g2.element_order(g2.mul(images[i], y))
        });
        if !ok {
            continue;
        }
        images.push(y);
        if let Some(phi) = search(g1, g2, gens, candidates, images) {
            return Some(phi);
        }
        images.pop();
    }
    None
}

/// Extends generator images to a map by breadth-first search, checking
/// `phi(a*s) = phi(a)*phi(s)` for every element `a` and generator `s` and
/// that the result is a bijection.
fn extend(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let n = g1.order();
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    phi[g1.identity()] = g2.identity();
    used[g2.identity()] = true;
    let mut queue = vec![g1.identity()];
    let mut i = 0;
    while i < queue.len() {
        let a = queue[i];
        i += 1;
        for (s, &t) in gens.iter().zip(images) {
            let b = g1.mul(a, *s);
            let img = g2.mul(phi[a], t);
            if phi[b] == usize::MAX {
                if used[img] {
                    return None;
                }
                phi[b] = img;
                used[img] = true;
                queue.push(b);
            } else if phi[b] != img {
                return None;
            }
        }
    }
    (queue.len() == n).then_some(phi)
}

/// Checks that `phi` is a bijective homomorphism.
pub fn is_isomorphism(g1: &FiniteGroup, g2: &FiniteGroup, phi: &[usize]) -> bool {
    let n = g1.order();
    if phi.len() != n || g2.order() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in phi {
        if y >= n || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    (0..n).all(|a| (0..n).all(|b| phi[g1.mul(a, b)] == g2.mul(phi[a], phi[b])))
}
