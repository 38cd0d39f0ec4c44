use core::fmt;

use crate::algebra::{FieldEmbedding, FqCtx, FqElem};
use crate::error::{Error, Result};

/// A point of the projective line over some `F_{p^M}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum P1Point {
    Affine(FqElem),
    Infinity,
}

impl P1Point {
    pub fn embed(&self, e: &FieldEmbedding) -> P1Point {
        match self {
            P1Point::Affine(x) => P1Point::Affine(e.apply(x)),
            P1Point::Infinity => P1Point::Infinity,
        }
    }
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Point::Affine(x) => write!(f, "{x}"),
            P1Point::Infinity => f.write_str("inf"),
        }
    }
}

/// An element of `PGL_2(F_q)`, `x -> (a x + b) / (c x + d)`, stored with
/// the first nonzero entry of `(a, b, c, d)` equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Moebius {
    a: FqElem,
    b: FqElem,
    c: FqElem,
    d: FqElem,
}

impl Moebius {
    pub fn new(a: FqElem, b: FqElem, c: FqElem, d: FqElem) -> Result<Self> {
        Self::normalized(a, b, c, d)
            .map(|(m, _)| m)
            .ok_or_else(|| Error::Precondition("singular matrix".into()))
    }

    pub fn from_i64s(ctx: &FqCtx, m: [i64; 4]) -> Result<Self> {
        let [a, b, c, d] = m.map(|v| ctx.from_i64(v));
        Self::new(a, b, c, d)
    }

    pub fn identity(ctx: &FqCtx) -> Self {
        Moebius {
            a: ctx.one(),
            b: ctx.zero(),
            c: ctx.zero(),
            d: ctx.one(),
        }
    }

    /// Normalized map together with the scalar `lambda` removed, so that
    /// the input matrix equals `lambda` times the result.
    fn normalized(a: FqElem, b: FqElem, c: FqElem, d: FqElem) -> Option<(Self, FqElem)> {
        if (&(&a * &d) - &(&b * &c)).is_zero() {
            return None;
        }
        let lambda = [&a, &b, &c, &d]
            .into_iter()
            .find(|x| !x.is_zero())
            .cloned()
            .expect("nonsingular matrix has a nonzero entry");
        let s = lambda.inv().expect("nonzero");
        Some((
            Moebius {
                a: &a * &s,
                b: &b * &s,
                c: &c * &s,
                d: &d * &s,
            },
            lambda,
        ))
    }

    pub fn ctx(&self) -> &FqCtx {
        self.a.ctx()
    }

    pub fn entries(&self) -> [&FqElem; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn det(&self) -> FqElem {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// `self o other` (apply `other` first) together with the scalar
    /// `lambda` with `M_self M_other = lambda * M_result`.
    pub fn compose_scaled(&self, other: &Moebius) -> (Moebius, FqElem) {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&other.a, &other.b, &other.c, &other.d);
        Self::normalized(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
            .expect("product of invertible matrices")
    }

    pub fn compose(&self, other: &Moebius) -> Moebius {
        self.compose_scaled(other).0
    }

    pub fn inverse(&self) -> Moebius {
        Self::new(self.d.clone(), -&self.b, -&self.c, self.a.clone()).expect("invertible")
    }

    pub fn apply(&self, p: &P1Point) -> P1Point {
        match p {
            P1Point::Affine(x) => {
                let den = &(&self.c * x) + &self.d;
                if den.is_zero() {
                    P1Point::Infinity
                } else {
                    let num = &(&self.a * x) + &self.b;
                    P1Point::Affine(num * den.inv().unwrap())
                }
            }
            P1Point::Infinity => {
                if self.c.is_zero() {
                    P1Point::Infinity
                } else {
                    P1Point::Affine(&self.a * &self.c.inv().unwrap())
                }
            }
        }
    }

    /// The map sending `z1, z2, z3` to `0, 1, inf`.
    fn to_standard_frame(z: [&P1Point; 3]) -> Option<Moebius> {
        use P1Point::*;
        let ctx = z.iter().find_map(|p| match p {
            Affine(x) => Some(x.ctx().clone()),
            Infinity => None,
        })?;
        let (one, zero) = (ctx.one(), ctx.zero());
        let m = match z {
            [Infinity, Affine(z2), Affine(z3)] => [zero, z2 - z3, one, -z3],
            [Affine(z1), Infinity, Affine(z3)] => [one.clone(), -z1, one, -z3],
            [Affine(z1), Affine(z2), Infinity] => [one, -z1, zero, z2 - z1],
            [Affine(z1), Affine(z2), Affine(z3)] => {
                let u = z2 - z3;
                let v = z2 - z1;
                [u.clone(), -&(z1 * &u), v.clone(), -&(z3 * &v)]
            }
            _ => return None,
        };
        let [a, b, c, d] = m;
        Self::new(a, b, c, d).ok()
    }

    /// The unique map with `src[i] -> dst[i]`, given distinct points.
    pub fn from_triples(src: [&P1Point; 3], dst: [&P1Point; 3]) -> Option<Moebius> {
        let s = Self::to_standard_frame(src)?;
        let t = Self::to_standard_frame(dst)?;
        Some(t.inverse().compose(&s))
    }

    /// Least `n >= 1` with `self^n` the identity in `PGL_2`.
    pub fn order(&self) -> usize {
        let mut cur = self.clone();
        let mut n = 1;
        while !cur.is_identity() {
            cur = cur.compose(self);
            n += 1;
        }
        n
    }

    pub fn embed(&self, e: &FieldEmbedding) -> Moebius {
        Moebius {
            a: e.apply(&self.a),
            b: e.apply(&self.b),
            c: e.apply(&self.c),
            d: e.apply(&self.d),
        }
    }
}

/// Order of `h` in `PGL_2`.
pub fn pgl_element_order(h: &Moebius) -> usize {
    h.order()
}

impl fmt::Display for Moebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let k = FqCtx::new(5, 1).unwrap();
        let h = Moebius::from_i64s(&k, [3, -1, 1, 1]).unwrap();
        assert!(h.entries()[0].is_one());
        let g = Moebius::from_i64s(&k, [0, 2, 3, 0]).unwrap();
        assert_eq!(g, Moebius::from_i64s(&k, [0, 1, 4, 0]).unwrap());
        assert!(Moebius::from_i64s(&k, [1, 2, 2, 4]).is_err());
    }

    #[test]
    fn order_p_element() {
        for p in [3u64, 5, 7, 11, 13] {
            let k = FqCtx::new(p, 1).unwrap();
            let h = Moebius::from_i64s(&k, [3, -1, 1, 1]).unwrap();
            assert_eq!(pgl_element_order(&h), p as usize);
        }
        let k = FqCtx::new(7, 1).unwrap();
        assert_eq!(Moebius::identity(&k).order(), 1);
    }

    #[test]
    fn triples() {
        let k = FqCtx::new(7, 1).unwrap();
        let pts: alloc::vec::Vec<P1Point> = [0u64, 1, 3, 5]
            .iter()
            .map(|&v| P1Point::Affine(k.from_u64(v)))
            .chain([P1Point::Infinity])
            .collect();
        let src = [&pts[0], &pts[4], &pts[2]];
        let dst = [&pts[3], &pts[1], &pts[4]];
        let h = Moebius::from_triples(src, dst).unwrap();
        for i in 0..3 {
            assert_eq!(h.apply(src[i]), *dst[i]);
        }
        let hi = h.inverse();
        assert!(h.compose(&hi).is_identity());
        for p in &pts {
            assert_eq!(hi.apply(&h.apply(p)), *p);
        }
    }
}
