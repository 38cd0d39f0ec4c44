use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::QuadInt;
use crate::error::{Error, Result};
use crate::poly::CharZeroPoly;

/// Reduced automorphism group of the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyCase {
    A5,
    A4,
    S4,
}

impl FamilyCase {
    pub const ALL: [FamilyCase; 3] = [FamilyCase::A5, FamilyCase::A4, FamilyCase::S4];

    pub fn name(self) -> &'static str {
        match self {
            FamilyCase::A5 => "A5",
            FamilyCase::A4 => "A4",
            FamilyCase::S4 => "S4",
        }
    }

    /// The admissible right-hand sides `F` for this case.
    pub fn words(self) -> Vec<FWord> {
        let list: &[&str] = match self {
            FamilyCase::A4 => &["L", "RL", "SL", "TL", "TRL", "TSL"],
            FamilyCase::A5 | FamilyCase::S4 => {
                &["L", "SL", "TL", "STL", "RL", "RSL", "RTL", "RSTL"]
            }
        };
        list.iter()
            .map(|w| w.parse().expect("static word"))
            .collect()
    }

    pub fn g_degree(self) -> usize {
        match self {
            FamilyCase::A5 => 60,
            FamilyCase::A4 => 12,
            FamilyCase::S4 => 24,
        }
    }
}

impl fmt::Display for FamilyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A5" => Ok(FamilyCase::A5),
            "A4" => Ok(FamilyCase::A4),
            "S4" => Ok(FamilyCase::S4),
            _ => Err(Error::Parse(format!("unknown family case `{s}`"))),
        }
    }
}

/// Which transcription of the invariant polynomials to use.
///
/// `Stated` copies the published formulas character for character.
/// `Classical` uses the textbook icosahedral and octahedral invariants where
/// the published ones contain slips.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Stated,
    Classical,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Stated, Variant::Classical];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Stated => "stated",
            Variant::Classical => "classical",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "stated" => Ok(Variant::Stated),
            "classical" => Ok(Variant::Classical),
            _ => Err(Error::Parse(format!("unknown variant `{s}`"))),
        }
    }
}

/// A product of some of `R`, `S`, `T` and `L`, each used at most once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FWord {
    pub r: bool,
    pub s: bool,
    pub t: bool,
    pub l: bool,
}

impl fmt::Display for FWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (on, c) in [(self.r, 'R'), (self.s, 'S'), (self.t, 'T'), (self.l, 'L')] {
            if on {
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for FWord {
    type Err = Error;

    /// Letters may come in any order (`TRL` and `RTL` are the same word).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty word".into()));
        }
        let mut w = FWord {
            r: false,
            s: false,
            t: false,
            l: false,
        };
        for c in s.chars() {
            let slot = match c.to_ascii_uppercase() {
                'R' => &mut w.r,
                'S' => &mut w.s,
                'T' => &mut w.t,
                'L' => &mut w.l,
                _ => return Err(Error::Parse(format!("letter `{c}` in word `{s}`"))),
            };
            if *slot {
                return Err(Error::Parse(format!("repeated letter `{c}` in word `{s}`")));
            }
            *slot = true;
        }
        Ok(w)
    }
}

/// The named polynomials of one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyPolys {
    pub case: FamilyCase,
    pub variant: Variant,
    pub lambdas: Vec<QuadInt>,
    pub r: CharZeroPoly,
    pub s: CharZeroPoly,
    pub t: CharZeroPoly,
    pub gs: Vec<CharZeroPoly>,
    pub l: CharZeroPoly,
}

impl FamilyPolys {
    /// Named entries in display order: R, S, T, G1.., L.
    pub fn named(&self) -> Vec<(String, &CharZeroPoly)> {
        let mut out = vec![
            ("R".to_string(), &self.r),
            ("S".to_string(), &self.s),
            ("T".to_string(), &self.t),
        ];
        for (i, g) in self.gs.iter().enumerate() {
            out.push((format!("G{}", i + 1), g));
        }
        out.push(("L".to_string(), &self.l));
        out
    }

    /// Product of the factors named by `w`.
    pub fn product(&self, w: FWord) -> CharZeroPoly {
        let mut f = CharZeroPoly::one();
        for (on, g) in [
            (w.r, &self.r),
            (w.s, &self.s),
            (w.t, &self.t),
            (w.l, &self.l),
        ] {
            if on {
                f = &f * g;
            }
        }
        f
    }

    /// Irregularities in the transcribed formulas worth reporting.
    pub fn notes(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.case == FamilyCase::S4 {
            for (i, g) in self.gs.iter().enumerate() {
                let odd: Vec<usize> = (0..g.coeffs().len())
                    .filter(|&k| k % 4 != 0 && !g.coeff(k).is_zero())
                    .collect();
                if !odd.is_empty() {
                    out.push(format!(
                        "G{} has terms in degrees {:?}, outside the x^4 pattern of the other terms",
                        i + 1,
                        odd
                    ));
                }
            }
        }
        out
    }
}

/// `sum (alpha_k * lambda + beta_k) x^k`.
fn linear_in_lambda(terms: &[(usize, i64, i64)], lambda: &QuadInt) -> CharZeroPoly {
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut coeffs = vec![QuadInt::integer(0); deg + 1];
    for &(k, alpha, beta) in terms {
        let c = &(lambda * &QuadInt::integer(alpha)) + &QuadInt::integer(beta);
        coeffs[k] = &coeffs[k] + &c;
    }
    CharZeroPoly::new(coeffs)
}

/// `m * (a * lambda + b)` as an `(alpha, beta)` pair.
const fn scaled(m: i64, a: i64, b: i64) -> (i64, i64) {
    (m * a, m * b)
}

fn a5_g_terms() -> Vec<(usize, i64, i64)> {
    let rows: [(usize, (i64, i64)); 13] = [
        (60, (1, -1)),
        (55, scaled(-36, 19, 29)),
        (50, scaled(6, 26239, -42079)),
        (45, scaled(-540, 23199, -19343)),
        (40, scaled(105, 737719, -953143)),
        (35, scaled(-72, 1815127, -145087)),
        (30, scaled(-4, 8302981, 49913771)),
        (25, scaled(72, 1815127, -145087)),
        (20, scaled(105, 737719, -953143)),
        (15, scaled(540, 23199, -19343)),
        (10, scaled(6, 26239, -42079)),
        (5, scaled(36, 19, 29)),
        (0, (1, -1)),
    ];
    rows.iter().map(|&(k, (a, b))| (k, a, b)).collect()
}

const A4_G: [(usize, i64, i64); 7] = [
    (12, 0, 1),
    (10, -1, 0),
    (8, 0, -33),
    (6, 2, 0),
    (4, 0, -33),
    (2, -1, 0),
    (0, 0, 1),
];

const S4_G_STATED: [(usize, i64, i64); 8] = [
    (24, 0, 1),
    (20, 1, 0),
    (16, -4, 759),
    (12, 6, 2576),
    (8, -4, 759),
    (6, 2, 0),
    (4, 1, -33),
    (0, 0, 1),
];

const S4_G_CLASSICAL: [(usize, i64, i64); 7] = [
    (24, 0, 1),
    (20, 1, 0),
    (16, -4, 759),
    (12, 6, 2576),
    (8, -4, 759),
    (4, 1, 0),
    (0, 0, 1),
];

fn check_lambdas(case: FamilyCase, lambdas: &[QuadInt]) -> Result<()> {
    if lambdas.is_empty() {
        return Err(Error::Precondition(
            "at least one lambda is required".into(),
        ));
    }
    let mut ring = if case == FamilyCase::A4 { -3 } else { 0 };
    for l in lambdas {
        if l.d() == 0 {
            continue;
        }
        if ring != 0 && ring != l.d() {
            return Err(Error::Precondition(format!(
                "lambda {l} does not live in Z[sqrt({ring})]"
            )));
        }
        ring = l.d();
    }
    Ok(())
}

/// The polynomials `R, S, T, G_1..G_delta, L` of a family, one `G_i` per
/// entry of `lambdas`.
pub fn build_family_polys(
    case: FamilyCase,
    variant: Variant,
    lambdas: &[QuadInt],
) -> Result<FamilyPolys> {
    check_lambdas(case, lambdas)?;
    let (r, s, t) = match (case, variant) {
        (FamilyCase::A5, Variant::Stated) => (
            CharZeroPoly::from_terms(&[
                (30, 1),
                (25, 522),
                (20, -10005),
                (15, -10005),
                (5, -522),
                (0, 1),
            ]),
            CharZeroPoly::from_terms(&[(20, 1), (15, -228), (10, 494), (4, 228), (0, 1)]),
            CharZeroPoly::from_terms(&[(10, 1), (1, 10), (0, 1)]),
        ),
        (FamilyCase::A5, Variant::Classical) => (
            CharZeroPoly::from_terms(&[
                (30, 1),
                (25, 522),
                (20, -10005),
                (10, -10005),
                (5, -522),
                (0, 1),
            ]),
            CharZeroPoly::from_terms(&[(20, 1), (15, -228), (10, 494), (5, 228), (0, 1)]),
            CharZeroPoly::from_terms(&[(10, 1), (5, 11), (0, -1)]),
        ),
        (FamilyCase::A4, _) => {
            let two_sqrt = QuadInt::new(0, 2, -3)?;
            let r = CharZeroPoly::new(vec![
                QuadInt::integer(1),
                QuadInt::integer(0),
                two_sqrt,
                QuadInt::integer(0),
                QuadInt::integer(1),
            ]);
            (
                r,
                CharZeroPoly::from_terms(&[(8, 1), (4, 14), (0, 1)]),
                CharZeroPoly::from_terms(&[(5, 1), (1, -1)]),
            )
        }
        (FamilyCase::S4, v) => (
            CharZeroPoly::from_terms(&[(12, 1), (8, -33), (4, -33), (0, 1)]),
            CharZeroPoly::from_terms(&[(8, 1), (4, 14), (0, 1)]),
            match v {
                Variant::Stated => CharZeroPoly::from_terms(&[(4, 1), (0, -1)]),
                Variant::Classical => CharZeroPoly::from_terms(&[(5, 1), (1, -1)]),
            },
        ),
    };
    let g_terms: Vec<(usize, i64, i64)> = match (case, variant) {
        (FamilyCase::A5, _) => a5_g_terms(),
        (FamilyCase::A4, _) => A4_G.to_vec(),
        (FamilyCase::S4, Variant::Stated) => S4_G_STATED.to_vec(),
        (FamilyCase::S4, Variant::Classical) => S4_G_CLASSICAL.to_vec(),
    };
    let mut gs = Vec::with_capacity(lambdas.len());
    for (i, lambda) in lambdas.iter().enumerate() {
        let g = linear_in_lambda(&g_terms, lambda);
        if g.degree() != Some(case.g_degree()) {
            return Err(Error::Precondition(format!(
                "lambda_{} = {lambda} makes the leading coefficient of G{} vanish",
                i + 1,
                i + 1
            )));
        }
        gs.push(g);
    }
    let l = gs.iter().fold(CharZeroPoly::one(), |acc, g| &acc * g);
    Ok(FamilyPolys {
        case,
        variant,
        lambdas: lambdas.to_vec(),
        r,
        s,
        t,
        gs,
        l,
    })
}

/// Input for [`build_f`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub case: FamilyCase,
    pub variant: Variant,
    pub lambdas: Vec<QuadInt>,
    pub word: FWord,
}

impl FamilySpec {
    /// One parameter `lambda_1 = 2`, the default used throughout.
    pub fn new(case: FamilyCase, variant: Variant, word: FWord) -> Self {
        FamilySpec {
            case,
            variant,
            lambdas: vec![QuadInt::integer(2)],
            word,
        }
    }
}

/// The right-hand side `F` named by `spec.word`, checked to be squarefree.
pub fn build_f(spec: &FamilySpec) -> Result<CharZeroPoly> {
    if !spec.case.words().contains(&spec.word) {
        return Err(Error::Precondition(format!(
            "word {} is not among the forms of the {} case",
            spec.word, spec.case
        )));
    }
    let polys = build_family_polys(spec.case, spec.variant, &spec.lambdas)?;
    let f = polys.product(spec.word);
    if !f.is_squarefree_char0() {
        return Err(Error::NotSquarefree);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(v: i64) -> Vec<QuadInt> {
        vec![QuadInt::integer(v)]
    }

    #[test]
    fn a5_degrees() {
        let p = build_family_polys(FamilyCase::A5, Variant::Stated, &lam(2)).unwrap();
        assert_eq!(p.r.degree(), Some(30));
        assert_eq!(p.s.degree(), Some(20));
        assert_eq!(p.t.degree(), Some(10));
        assert_eq!(p.gs[0].degree(), Some(60));
    }

    #[test]
    fn a4_r_has_sqrt_minus_three() {
        let p = build_family_polys(FamilyCase::A4, Variant::Stated, &lam(2)).unwrap();
        assert_eq!(p.r.to_string(), "x^4+2*sqrt(-3)*x^2+1");
    }

    #[test]
    fn s4_stated_t() {
        let p = build_family_polys(FamilyCase::S4, Variant::Stated, &lam(2)).unwrap();
        assert_eq!(p.t.to_string(), "x^4-1");
        assert_eq!(p.notes().len(), 1);
        let c = build_family_polys(FamilyCase::S4, Variant::Classical, &lam(2)).unwrap();
        assert!(c.notes().is_empty());
    }

    #[test]
    fn classical_a5_invariants_satisfy_the_syzygy() {
        // R^2 = S^3 + 1728 f^5 with f = x * T the degree 12 vertex form
        let p = build_family_polys(FamilyCase::A5, Variant::Classical, &lam(2)).unwrap();
        let f = &p.t * &CharZeroPoly::x();
        let lhs = &p.r.pow(2) - &f.pow(5).scale(&QuadInt::integer(1728));
        assert_eq!(lhs, p.s.pow(3));
    }

    #[test]
    fn words() {
        let w: FWord = "TRL".parse().unwrap();
        assert_eq!(w.to_string(), "RTL");
        assert!("RSG".parse::<FWord>().is_err());
        assert!("LL".parse::<FWord>().is_err());
    }

    #[test]
    fn build_f_degrees() {
        let spec = FamilySpec::new(FamilyCase::A5, Variant::Stated, "SL".parse().unwrap());
        assert_eq!(build_f(&spec).unwrap().degree(), Some(80));
        let spec = FamilySpec::new(FamilyCase::A4, Variant::Stated, "TRL".parse().unwrap());
        assert_eq!(build_f(&spec).unwrap().degree(), Some(21));
        let mut spec = FamilySpec::new(FamilyCase::A5, Variant::Stated, "L".parse().unwrap());
        spec.lambdas = lam(1);
        assert!(matches!(build_f(&spec), Err(Error::Precondition(_))));
    }
}
