use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest group accepted anywhere in the crate.
pub const MAX_GROUP_ORDER: usize = 512;

/// A finite group given by its full multiplication table.
///
/// Elements are the indices `0..n`; `mul(a, b)` is the product `a*b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u16>,
    identity: usize,
    inverses: Vec<u16>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Group from a row-major table, checking the Latin square property,
    /// the identity and inverses. Associativity is checked separately by
    /// [`FiniteGroup::is_associative`].
    pub fn from_table(n: usize, table: Vec<u16>) -> Result<Self> {
        if n == 0 || table.len() != n * n {
            return Err(Error::Precondition(format!(
                "table of length {} for order {n}",
                table.len()
            )));
        }
        if n > MAX_GROUP_ORDER {
            return Err(Error::GroupTooLarge {
                order: n,
                bound: MAX_GROUP_ORDER,
            });
        }
        if table.iter().any(|&v| v as usize >= n) {
            return Err(Error::NotClosed);
        }
        let identity = (0..n)
            .find(|&e| {
                (0..n).all(|a| table[e * n + a] as usize == a && table[a * n + e] as usize == a)
            })
            .ok_or(Error::NoIdentity)?;
        let mut inverses = vec![0u16; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a * n + b] as usize == identity)
                .ok_or(Error::NoInverse)?;
            if table[b * n + a] as usize != identity {
                return Err(Error::NoInverse);
            }
            inverses[a] = b as u16;
        }
        let g = FiniteGroup {
            n,
            table,
            identity,
            inverses,
            labels: (0..n).map(|i| format!("g{i}")).collect(),
        };
        if !g.is_latin_square() {
            return Err(Error::Precondition("table is not a Latin square".into()));
        }
        Ok(g)
    }

    /// Cayley table of a finite set closed under `op`.
    pub fn cayley_from_elements<T: Ord + Clone>(
        elems: &[T],
        op: impl Fn(&T, &T) -> T,
    ) -> Result<Self> {
        let n = elems.len();
        if n > MAX_GROUP_ORDER {
            return Err(Error::GroupTooLarge {
                order: n,
                bound: MAX_GROUP_ORDER,
            });
        }
        let index: BTreeMap<&T, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        if index.len() != n {
            return Err(Error::Precondition("repeated elements".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for a in elems {
            for b in elems {
                let c = op(a, b);
                let &k = index.get(&c).ok_or(Error::NotClosed)?;
                table.push(k as u16);
            }
        }
        Self::from_table(n, table)
    }

    /// Closure of `gens` under `op`, returned as the element list (in
    /// discovery order, identity first) together with its Cayley table.
    pub fn generate<T: Ord + Clone>(
        gens: &[T],
        identity: T,
        op: impl Fn(&T, &T) -> T,
    ) -> Result<(Vec<T>, Self)> {
        let mut elems = vec![identity.clone()];
        let mut seen: BTreeMap<T, usize> = BTreeMap::new();
        seen.insert(identity, 0);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let c = op(&elems[i], g);
                if !seen.contains_key(&c) {
                    if elems.len() >= MAX_GROUP_ORDER {
                        return Err(Error::GroupTooLarge {
                            order: elems.len() + 1,
                            bound: MAX_GROUP_ORDER,
                        });
                    }
                    seen.insert(c.clone(), elems.len());
                    elems.push(c);
                }
            }
            i += 1;
        }
        let g = Self::cayley_from_elements(&elems, op)?;
        Ok((elems, g))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = labels;
        self
    }

    pub fn trivial() -> Self {
        Self::from_table(1, vec![0]).unwrap()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    /// Row-major table entries.
    pub fn table(&self) -> &[u16] {
        &self.table
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `order -> number of elements of that order`.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for a in 0..self.n {
            *h.entry(self.element_order(a)).or_insert(0) += 1;
        }
        h
    }

    pub fn is_latin_square(&self) -> bool {
        let n = self.n;
        let mut seen = vec![0usize; n];
        for stamp in 1..=n {
            let r = stamp - 1;
            for c in 0..n {
                let v = self.table[r * n + c] as usize;
                if seen[v] == stamp {
                    return false;
                }
                seen[v] = stamp;
            }
        }
        let mut seen = vec![0usize; n];
        for stamp in 1..=n {
            let c = stamp - 1;
            for r in 0..n {
                let v = self.table[r * n + c] as usize;
                if seen[v] == stamp {
                    return false;
                }
                seen[v] = stamp;
            }
        }
        true
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.closure(&[]);
        for a in 0..self.n {
            if span.len() == self.n {
                break;
            }
            if span.binary_search(&a).is_err() {
                gens.push(a);
                span = self.closure(&gens);
            }
        }
        gens
    }

    /// Associativity by Light's test: `(x g) y = x (g y)` for all `x, y` and
    /// every `g` in a generating set. This is equivalent to full
    /// associativity for a Latin square with identity.
    pub fn is_associative(&self) -> bool {
        let gens = self.generators();
        self.associative_on(&gens)
    }

    /// Exhaustive `n^3` associativity check.
    pub fn is_associative_exhaustive(&self) -> bool {
        let all: Vec<usize> = (0..self.n).collect();
        self.associative_on(&all)
    }

    fn associative_on(&self, middle: &[usize]) -> bool {
        middle.iter().all(|&g| {
            (0..self.n).all(|x| {
                let xg = self.mul(x, g);
                (0..self.n).all(|y| self.mul(xg, y) == self.mul(x, self.mul(g, y)))
            })
        })
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.n).any(|a| self.element_order(a) == self.n)
    }

    /// Sorted element indices of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        inside[self.identity] = true;
        let mut elems = vec![self.identity];
        let mut i = 0;
        while i < elems.len() {
            for &g in gens {
                let c = self.mul(elems[i], g);
                if !inside[c] {
                    inside[c] = true;
                    elems.push(c);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut comms = Vec::new();
        let mut seen = vec![false; self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                let c = self.commutator(a, b);
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        self.closure(&comms)
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let mut inside = vec![false; self.n];
        for &e in elems {
            inside[e] = true;
        }
        inside[self.identity]
            && elems
                .iter()
                .all(|&a| inside[self.inv(a)] && elems.iter().all(|&b| inside[self.mul(a, b)]))
    }

    pub fn is_normal(&self, elems: &[usize]) -> bool {
        let mut inside = vec![false; self.n];
        for &e in elems {
            inside[e] = true;
        }
        (0..self.n).all(|g| {
            elems
                .iter()
                .all(|&h| inside[self.mul(self.mul(g, h), self.inv(g))])
        })
    }

    /// The subgroup on `elems` (any order) as a group in its own right;
    /// element `i` of the result is `elems[i]`.
    pub fn induced(&self, elems: &[usize]) -> Result<FiniteGroup> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i;
        }
        let k = elems.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in elems {
            for &b in elems {
                let c = pos[self.mul(a, b)];
                if c == usize::MAX {
                    return Err(Error::NotClosed);
                }
                table.push(c as u16);
            }
        }
        let labels = elems.iter().map(|&e| self.labels[e].clone()).collect();
        Ok(FiniteGroup::from_table(k, table)?.with_labels(labels))
    }

    /// Quotient by a normal subgroup; cosets are numbered by their
    /// smallest element.
    pub fn quotient(&self, normal: &[usize]) -> Result<FiniteGroup> {
        if !self.is_subgroup(normal) || !self.is_normal(normal) {
            return Err(Error::Precondition("not a normal subgroup".into()));
        }
        let mut coset = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for a in 0..self.n {
            if coset[a] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(a);
            for &h in normal {
                coset[self.mul(a, h)] = id;
            }
        }
        let k = reps.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                table.push(coset[self.mul(a, b)] as u16);
            }
        }
        let labels = reps
            .iter()
            .map(|&r| format!("{}N", self.labels[r]))
            .collect();
        Ok(FiniteGroup::from_table(k, table)?.with_labels(labels))
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
        let n = a.n * b.n;
        if n > MAX_GROUP_ORDER {
            return Err(Error::GroupTooLarge {
                order: n,
                bound: MAX_GROUP_ORDER,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let (x1, x2) = (x / b.n, x % b.n);
            for y in 0..n {
                let (y1, y2) = (y / b.n, y % b.n);
                table.push((a.mul(x1, y1) * b.n + b.mul(x2, y2)) as u16);
            }
        }
        let labels = (0..n)
            .map(|x| format!("({},{})", a.labels[x / b.n], b.labels[x % b.n]))
            .collect();
        Ok(FiniteGroup::from_table(n, table)?.with_labels(labels))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteGroup {
        let elems: Vec<usize> = (0..n).collect();
        FiniteGroup::cayley_from_elements(&elems, |a, b| (a + b) % n).unwrap()
    }

    #[test]
    fn cyclic_basics() {
        let g = cyclic(6);
        assert!(g.is_abelian() && g.is_cyclic() && g.is_associative());
        assert_eq!(
            g.order_histogram().into_iter().collect::<Vec<_>>(),
            vec![(1, 1), (2, 1), (3, 2), (6, 2)]
        );
        assert_eq!(g.closure(&[2]), vec![0, 2, 4]);
        let q = g.quotient(&[0, 3]).unwrap();
        assert_eq!(q.order(), 3);
        assert!(q.is_cyclic());
    }

    #[test]
    fn rejects_non_groups() {
        let elems: Vec<usize> = (0..4).collect();
        assert_eq!(
            FiniteGroup::cayley_from_elements(&elems, |a, b| (a + b) % 5).unwrap_err(),
            Error::NotClosed
        );
        assert_eq!(
            FiniteGroup::cayley_from_elements(&elems, |a, b| (a * b) % 4).unwrap_err(),
            Error::NoInverse
        );
    }

    #[test]
    fn non_associative_latin_square() {
        // a loop of order 5 with identity 0 that is not a group
        let rows = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        let table = rows.iter().flatten().map(|&v| v as u16).collect();
        let g = FiniteGroup::from_table(5, table).unwrap();
        assert!(!g.is_associative());
        assert!(!g.is_associative_exhaustive());
    }

    #[test]
    fn generate_symmetric_group() {
        type P = [u8; 3];
        let compose =
            |a: &P, b: &P| -> P { [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize]] };
        let (elems, g) =
            FiniteGroup::generate(&[[1, 0, 2], [1, 2, 0]], [0, 1, 2], compose).unwrap();
        assert_eq!(elems.len(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.center(), vec![g.identity()]);
        assert_eq!(g.derived_subgroup().len(), 3);
    }
}
