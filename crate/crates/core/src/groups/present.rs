use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{FiniteGroup, GroupType};
use crate::error::{Error, Result};

/// A word in `x`, `y` and their inverses, stored letter by letter:
/// `0 = x`, `1 = x^-1`, `2 = y`, `3 = y^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(pub Vec<u8>);

const NAMES: [&str; 4] = ["x", "X", "y", "Y"];

#[inline]
fn inverse_letter(l: u8) -> u8 {
    l ^ 1
}

impl Word {
    /// Parses words such as `x^4`, `(xy)^2`, `(x^-1y)^2`, `yx^2y^-1x^2` or
    /// `x^2(xy)^4`. Exponents may be negative and may be wrapped in braces.
    pub fn parse(s: &str) -> Result<Word> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let w = parse_seq(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!(
                "unexpected {:?} in word {s:?}",
                chars[pos]
            )));
        }
        Ok(w)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&l| inverse_letter(l)).collect())
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Vec::with_capacity(base.0.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            out.extend_from_slice(&base.0);
        }
        Word(out)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// Value of the word in `g` with `x -> gx`, `y -> gy`.
    pub fn eval(&self, g: &FiniteGroup, gx: usize, gy: usize) -> usize {
        let imgs = [gx, g.inv(gx), gy, g.inv(gy)];
        self.0
            .iter()
            .fold(g.identity(), |acc, &l| g.mul(acc, imgs[l as usize]))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.0 {
            f.write_str(NAMES[l as usize])?;
        }
        Ok(())
    }
}

fn parse_seq(c: &[char], pos: &mut usize) -> Result<Word> {
    let mut out = Vec::new();
    while *pos < c.len() && c[*pos] != ')' {
        let atom = match c[*pos] {
            'x' => {
                *pos += 1;
                Word(vec![0])
            }
            'y' => {
                *pos += 1;
                Word(vec![2])
            }
            '(' => {
                *pos += 1;
                let w = parse_seq(c, pos)?;
                if c.get(*pos) != Some(&')') {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                *pos += 1;
                w
            }
            ch => return Err(Error::Parse(format!("unexpected {ch:?} in word"))),
        };
        let w = if c.get(*pos) == Some(&'^') {
            *pos += 1;
            atom.pow(parse_exponent(c, pos)?)
        } else {
            atom
        };
        out.extend(w.0);
    }
    Ok(Word(out))
}

fn parse_exponent(c: &[char], pos: &mut usize) -> Result<i64> {
    let braced = c.get(*pos) == Some(&'{');
    if braced {
        *pos += 1;
    }
    let start = *pos;
    if c.get(*pos) == Some(&'-') {
        *pos += 1;
    }
    while c.get(*pos).is_some_and(|ch| ch.is_ascii_digit()) {
        *pos += 1;
    }
    let text: String = c[start..*pos].iter().collect();
    let e = text
        .parse::<i64>()
        .map_err(|_| Error::Parse(format!("bad exponent {text:?}")))?;
    if braced {
        if c.get(*pos) != Some(&'}') {
            return Err(Error::Parse("unclosed exponent brace".into()));
        }
        *pos += 1;
    }
    Ok(e)
}

fn words(list: &[String]) -> Vec<Word> {
    list.iter()
        .map(|s| Word::parse(s).expect("built-in relation parses"))
        .collect()
}

/// Defining relations of the presented families, in `x`, `y`.
pub fn presentation_of(t: &GroupType) -> Option<Vec<Word>> {
    use GroupType::*;
    let rels: Vec<String> = match t {
        Vn(n) => vec![
            "x^4".into(),
            format!("y^{n}"),
            "(xy)^2".into(),
            "(x^-1y)^2".into(),
        ],
        Hn(n) => vec!["x^4".into(), format!("(xy)^{n}"), "x^2y^2".into()],
        Un(n) => vec![
            "x^2".into(),
            format!("y^{}", 2 * n),
            format!("xyxy^{}", n + 1),
        ],
        Gn(n) => vec![
            format!("x^2y^{n}"),
            format!("y^{}", 2 * n),
            "x^-1yxy".into(),
        ],
        W2 => vec![
            "x^4".into(),
            "y^3".into(),
            "yx^2y^-1x^2".into(),
            "(xy)^4".into(),
        ],
        W3 => vec![
            "x^4".into(),
            "y^3".into(),
            "x^2(xy)^4".into(),
            "(xy)^8".into(),
        ],
        _ => return None,
    };
    Some(words(&rels))
}

/// Whether some generating pair of `g` satisfies all relations. With
/// `|g|` equal to the order of the presented group this certifies that
/// `g` is isomorphic to it.
pub fn presentation_holds(g: &FiniteGroup, relations: &[Word], required_order: usize) -> bool {
    find_presentation_pair(g, relations, required_order).is_some()
}

/// The first generating pair `(x, y)` satisfying the relations.
pub fn find_presentation_pair(
    g: &FiniteGroup,
    relations: &[Word],
    required_order: usize,
) -> Option<(usize, usize)> {
    let n = g.order();
    if n != required_order {
        return None;
    }
    let e = g.identity();
    for x in 0..n {
        for y in 0..n {
            if relations.iter().all(|r| r.eval(g, x, y) == e) && g.closure(&[x, y]).len() == n {
                return Some((x, y));
            }
        }
    }
    None
}

const UNDEF: usize = usize::MAX;

/// Coset table for the action of `<x, y | relations>` on the cosets of the
/// trivial subgroup (HLT strategy with coincidence processing).
struct CosetTable {
    table: Vec<[usize; 4]>,
    parent: Vec<usize>,
    limit: usize,
    queue: Vec<usize>,
}

impl CosetTable {
    fn new(limit: usize) -> Self {
        CosetTable {
            table: vec![[UNDEF; 4]],
            parent: vec![0],
            limit,
            queue: Vec::new(),
        }
    }

    fn define(&mut self, c: usize, l: u8) -> Result<()> {
        if self.table.len() >= self.limit {
            return Err(Error::CosetLimit(self.limit));
        }
        let d = self.table.len();
        self.table.push([UNDEF; 4]);
        self.parent.push(d);
        self.table[c][l as usize] = d;
        self.table[d][inverse_letter(l) as usize] = c;
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut k = c;
        while self.parent[k] != r {
            let next = self.parent[k];
            self.parent[k] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for l in 0..4u8 {
                let d = self.table[g][l as usize];
                if d == UNDEF {
                    continue;
                }
                let li = inverse_letter(l) as usize;
                self.table[d][li] = UNDEF;
                let mu = self.rep(g);
                let nu = self.rep(d);
                if self.table[mu][l as usize] != UNDEF {
                    let t = self.table[mu][l as usize];
                    self.merge(nu, t);
                } else if self.table[nu][li] != UNDEF {
                    let t = self.table[nu][li];
                    self.merge(mu, t);
                } else {
                    self.table[mu][l as usize] = nu;
                    self.table[nu][li] = mu;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[u8]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while i as isize <= j && self.table[f][w[i] as usize] != UNDEF {
                f = self.table[f][w[i] as usize];
                i += 1;
            }
            if i as isize > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.table[b][inverse_letter(w[j as usize]) as usize] != UNDEF
            {
                b = self.table[b][inverse_letter(w[j as usize]) as usize];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            } else if i as isize == j {
                self.table[f][w[i] as usize] = b;
                self.table[b][inverse_letter(w[i]) as usize] = f;
                return Ok(());
            } else {
                self.define(f, w[i])?;
            }
        }
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn enumerate(&mut self, relators: &[Word]) -> Result<()> {
        let mut c = 0;
        while c < self.table.len() {
            for r in relators {
                if !self.live(c) {
                    break;
                }
                self.scan_and_fill(c, &r.0)?;
            }
            if self.live(c) {
                for l in 0..4u8 {
                    if self.table[c][l as usize] == UNDEF {
                        self.define(c, l)?;
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }
}

/// Builds the group `<x, y | relations>` by coset enumeration over the
/// trivial subgroup, giving up after `max_cosets` coset definitions.
///
/// Element labels are shortest words found by breadth-first search, with
/// `X`, `Y` standing for inverses.
pub fn realize_presentation(relations: &[Word], max_cosets: usize) -> Result<FiniteGroup> {
    let mut ct = CosetTable::new(max_cosets);
    ct.enumerate(relations)?;
    let live: Vec<usize> = (0..ct.table.len()).filter(|&c| ct.live(c)).collect();
    let n = live.len();
    if n > super::MAX_GROUP_ORDER {
        return Err(Error::GroupTooLarge {
            order: n,
            bound: super::MAX_GROUP_ORDER,
        });
    }
    let mut index = vec![UNDEF; ct.table.len()];
    for (i, &c) in live.iter().enumerate() {
        index[c] = i;
    }
    let mut act = vec![[0usize; 4]; n];
    for (i, &c) in live.iter().enumerate() {
        for l in 0..4 {
            let d = ct.table[c][l];
            let d = ct.rep(d);
            act[i][l] = index[d];
        }
    }
    // spanning tree from the trivial coset
    let mut order = vec![0usize];
    let mut via = vec![(UNDEF, 0u8); n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut k = 0;
    while k < order.len() {
        let c = order[k];
        k += 1;
        for l in 0..4u8 {
            let d = act[c][l as usize];
            if !seen[d] {
                seen[d] = true;
                via[d] = (c, l);
                order.push(d);
            }
        }
    }
    let mut table = vec![0u16; n * n];
    for i in 0..n {
        table[i * n] = i as u16;
    }
    for &j in order.iter().skip(1) {
        let (pj, l) = via[j];
        for i in 0..n {
            table[i * n + j] = act[table[i * n + pj] as usize][l as usize] as u16;
        }
    }
    let mut labels = vec![String::new(); n];
    for &j in order.iter().skip(1) {
        let (pj, l) = via[j];
        labels[j] = format!("{}{}", labels[pj], NAMES[l as usize]);
    }
    labels[0] = "1".into();
    Ok(FiniteGroup::from_table(n, table)?.with_labels(labels))
}

/// Coset definitions allowed when realizing a presented type.
pub const DEFAULT_COSET_LIMIT: usize = 200_000;

/// A Cayley table for any named type: the reference construction, or coset
/// enumeration for the presented families.
pub fn realize_type(t: &GroupType) -> Result<FiniteGroup> {
    match presentation_of(t) {
        Some(rels) => realize_presentation(&rels, DEFAULT_COSET_LIMIT),
        None => super::reference_group(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::reference_group;
    use alloc::string::ToString;

    #[test]
    fn parse_words() {
        assert_eq!(Word::parse("x^4").unwrap().0, vec![0, 0, 0, 0]);
        assert_eq!(Word::parse("(x^-1y)^2").unwrap().0, vec![1, 2, 1, 2]);
        assert_eq!(Word::parse("yx^2y^-1x^2").unwrap().to_string(), "yxxYxx");
        assert_eq!(Word::parse("x^2(xy)^4").unwrap().0.len(), 10);
        assert_eq!(Word::parse("y^{-2}").unwrap().to_string(), "YY");
        assert!(Word::parse("(xy").is_err());
        assert!(Word::parse("xz").is_err());
    }

    #[test]
    fn dihedral_presentation() {
        let rels = words(&["x^2".into(), "y^3".into(), "(xy)^2".into()]);
        let d3 = reference_group(&GroupType::Dihedral(3)).unwrap();
        assert!(presentation_holds(&d3, &rels, 6));
        let z6 = reference_group(&GroupType::Cyclic(6)).unwrap();
        assert!(!presentation_holds(&z6, &rels, 6));
        let g = realize_presentation(&rels, 1000).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_associative());
    }

    #[test]
    fn w2_relations_fail_on_gl23() {
        let gl = reference_group(&GroupType::GL2_3).unwrap();
        assert!(!presentation_holds(
            &gl,
            &presentation_of(&GroupType::W2).unwrap(),
            48
        ));
    }

    #[test]
    fn coset_limit() {
        // free product Z2 * Z3 is infinite
        let rels = words(&["x^2".into(), "y^3".into()]);
        assert_eq!(
            realize_presentation(&rels, 500).unwrap_err(),
            Error::CosetLimit(500)
        );
    }
}
