use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{FiniteGroup, GroupType};
use crate::error::{Error, Result};

type Perm = Vec<u8>;

fn perm_compose(a: &Perm, b: &Perm) -> Perm {
    // (a*b)(i) = a(b(i))
    b.iter().map(|&i| a[i as usize]).collect()
}

fn perm_label(p: &Perm) -> String {
    let n = p.len();
    let mut seen = alloc::vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        let mut first = true;
        while !seen[i] {
            seen[i] = true;
            if !first {
                out.push(' ');
            }
            first = false;
            out.push_str(&format!("{i}"));
            i = p[i] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Permutation group on `0..n` generated by the given images.
pub fn permutation_group(n: usize, gens: &[Perm]) -> Result<FiniteGroup> {
    let id: Perm = (0..n as u8).collect();
    let (elems, g) = FiniteGroup::generate(gens, id, perm_compose)?;
    Ok(g.with_labels(elems.iter().map(perm_label).collect()))
}

type Mat = [u8; 4];

fn matrix_group(p: u8, keep: impl Fn(u8) -> bool) -> Result<FiniteGroup> {
    let mut elems: Vec<Mat> = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let det = (a as u16 * d as u16 + (p as u16 - (b as u16 * c as u16) % p as u16))
                        % p as u16;
                    if det != 0 && keep(det as u8) {
                        elems.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let mul = |x: &Mat, y: &Mat| -> Mat {
        let m = |i: usize, j: usize, k: usize, l: usize| {
            ((x[i] as u16 * y[j] as u16 + x[k] as u16 * y[l] as u16) % p as u16) as u8
        };
        [m(0, 0, 1, 2), m(0, 1, 1, 3), m(2, 0, 3, 2), m(2, 1, 3, 3)]
    };
    let g = FiniteGroup::cayley_from_elements(&elems, mul)?;
    let labels = elems
        .iter()
        .map(|m| format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3]))
        .collect();
    Ok(g.with_labels(labels))
}

pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    let elems: Vec<usize> = (0..n).collect();
    let g = FiniteGroup::cayley_from_elements(&elems, |a, b| (a + b) % n)?;
    Ok(g.with_labels(elems.iter().map(|k| format!("{k}")).collect()))
}

/// Dihedral group of order `2n`, elements `r^k s^e`.
pub fn dihedral_group(n: usize) -> Result<FiniteGroup> {
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|e| (0..n).map(move |k| (k, e))).collect();
    let mul = |&(k1, e1): &(usize, usize), &(k2, e2): &(usize, usize)| {
        let k = if e1 == 0 { k1 + k2 } else { k1 + n - k2 };
        (k % n, (e1 + e2) % 2)
    };
    let g = FiniteGroup::cayley_from_elements(&elems, mul)?;
    let labels = elems
        .iter()
        .map(|&(k, e)| {
            if e == 0 {
                format!("r^{k}")
            } else {
                format!("r^{k}s")
            }
        })
        .collect();
    Ok(g.with_labels(labels))
}

/// Quaternion group of order 8 as the units `+-1, +-i, +-j, +-k`.
pub fn quaternion_group() -> Result<FiniteGroup> {
    // encode +-e as (sign, e) with e in {1, i, j, k} = 0..4
    let basis = |a: usize, b: usize| -> (usize, usize) {
        const T: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        T[a][b]
    };
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|s| (0..4).map(move |e| (s, e))).collect();
    let g = FiniteGroup::cayley_from_elements(&elems, |&(s1, e1), &(s2, e2)| {
        let (s, e) = basis(e1, e2);
        ((s + s1 + s2) % 2, e)
    })?;
    let names = ["1", "i", "j", "k"];
    let labels = elems
        .iter()
        .map(|&(s, e)| format!("{}{}", if s == 1 { "-" } else { "" }, names[e]))
        .collect();
    Ok(g.with_labels(labels))
}

/// `(Z/p)^k`.
pub fn elementary_abelian(p: usize, k: u32) -> Result<FiniteGroup> {
    let base = cyclic_group(p)?;
    let mut g = FiniteGroup::trivial();
    for _ in 0..k {
        g = FiniteGroup::direct_product(&g, &base)?;
    }
    Ok(g)
}

/// Concrete Cayley table for a constructible group type.
///
/// The presented families `V(n)`, `H(n)`, `U(n)`, `G(n)`, `W2`, `W3` are
/// not built here; see [`super::realize_presentation`].
pub fn reference_group(t: &GroupType) -> Result<FiniteGroup> {
    use GroupType::*;
    match t {
        Cyclic(0) => Err(Error::NotConstructible(t.clone())),
        Cyclic(n) => cyclic_group(*n),
        Dihedral(n) if *n >= 2 => dihedral_group(*n),
        Dihedral(_) => Err(Error::NotConstructible(t.clone())),
        A4 => permutation_group(4, &[alloc::vec![1, 2, 0, 3], alloc::vec![1, 0, 3, 2]]),
        S4 => permutation_group(4, &[alloc::vec![1, 0, 2, 3], alloc::vec![1, 2, 3, 0]]),
        A5 => permutation_group(5, &[alloc::vec![1, 2, 3, 4, 0], alloc::vec![1, 2, 0, 3, 4]]),
        SL2_3 => matrix_group(3, |det| det == 1),
        GL2_3 => matrix_group(3, |_| true),
        SL2_5 => matrix_group(5, |det| det == 1),
        DirectZ2(inner) => FiniteGroup::direct_product(&cyclic_group(2)?, &reference_group(inner)?),
        Vn(_) | Hn(_) | Un(_) | Gn(_) | W2 | W3 | Unknown { .. } => {
            Err(Error::NotConstructible(t.clone()))
        }
    }
}
