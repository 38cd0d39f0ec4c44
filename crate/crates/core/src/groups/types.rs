use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// Names for the groups that occur as (reduced) automorphism groups of
/// hyperelliptic curves.
///
/// `Dihedral(n)` has order `2n`. The presented families `Vn`, `Hn`, `Un`,
/// `Gn`, `W2`, `W3` are given by two-generator relations (see
/// [`super::presentation_of`]).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupType {
    Cyclic(usize),
    Dihedral(usize),
    A4,
    S4,
    A5,
    DirectZ2(Box<GroupType>),
    SL2_3,
    GL2_3,
    SL2_5,
    Vn(usize),
    Hn(usize),
    Un(usize),
    Gn(usize),
    W2,
    W3,
    Unknown { order: usize, fingerprint: String },
}

impl GroupType {
    pub fn z2(inner: GroupType) -> Self {
        GroupType::DirectZ2(Box::new(inner))
    }

    /// Group order. `Vn`/`Un` have order `4n` for even `n` and `2n` for odd
    /// `n` (the relations collapse for odd `n`); `Hn`/`Gn` have order `4n`;
    /// `W2` and `W3` have order 48.
    pub fn order(&self) -> usize {
        use GroupType::*;
        match self {
            Cyclic(n) => *n,
            Dihedral(n) => 2 * n,
            A4 => 12,
            S4 => 24,
            A5 => 60,
            DirectZ2(t) => 2 * t.order(),
            SL2_3 => 24,
            GL2_3 => 48,
            SL2_5 => 120,
            Vn(n) | Un(n) => {
                if n % 2 == 0 {
                    4 * n
                } else {
                    2 * n
                }
            }
            Hn(n) | Gn(n) => 4 * n,
            W2 | W3 => 48,
            Unknown { order, .. } => *order,
        }
    }

    pub fn is_presented(&self) -> bool {
        use GroupType::*;
        matches!(self, Vn(_) | Hn(_) | Un(_) | Gn(_) | W2 | W3)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, GroupType::Unknown { .. })
    }

    /// Standard name for types with several spellings:
    /// `Z2 x Z(odd n)` is `Z(2n)` and `Z2 x D(odd n)` is `D(2n)`;
    /// `D(1)` is `Z(2)` and `Z2 x Z(1)` is `Z(2)`.
    pub fn canonical(&self) -> GroupType {
        use GroupType::*;
        match self {
            Dihedral(1) => Cyclic(2),
            DirectZ2(inner) => match inner.canonical() {
                Cyclic(n) if n % 2 == 1 => Cyclic(2 * n),
                Dihedral(n) if n % 2 == 1 => Dihedral(2 * n),
                t => DirectZ2(Box::new(t)),
            },
            t => t.clone(),
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupType::*;
        match self {
            Cyclic(n) => write!(f, "Z({n})"),
            Dihedral(n) => write!(f, "D({n})"),
            A4 => f.write_str("A4"),
            S4 => f.write_str("S4"),
            A5 => f.write_str("A5"),
            DirectZ2(t) => write!(f, "Z2x{t}"),
            SL2_3 => f.write_str("SL2(3)"),
            GL2_3 => f.write_str("GL2(3)"),
            SL2_5 => f.write_str("SL2(5)"),
            Vn(n) => write!(f, "V({n})"),
            Hn(n) => write!(f, "H({n})"),
            Un(n) => write!(f, "U({n})"),
            Gn(n) => write!(f, "G({n})"),
            W2 => f.write_str("W2"),
            W3 => f.write_str("W3"),
            Unknown { order, fingerprint } => write!(f, "Unknown[{order};{fingerprint}]"),
        }
    }
}

fn parse_index(s: &str, prefix: &str) -> Option<usize> {
    let rest = s.strip_prefix(prefix)?;
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(rest);
    inner.trim().parse().ok()
}

impl FromStr for GroupType {
    type Err = Error;

    /// Accepts the display form (`Z(10)`, `D(14)`, `Z2xA5`, `GL2(3)`,
    /// `V(4)`, ...) plus the unparenthesized spellings `Z10`, `D7`, `C5`.
    fn from_str(s: &str) -> Result<Self, Error> {
        use GroupType::*;
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("unknown group type {s:?}"));
        if let Some(rest) = t.strip_prefix("Z2x") {
            return Ok(DirectZ2(Box::new(rest.parse()?)));
        }
        let fixed = match t.to_ascii_uppercase().as_str() {
            "A4" => Some(A4),
            "S4" => Some(S4),
            "A5" => Some(A5),
            "SL2(3)" | "SL(2,3)" | "SL2_3" => Some(SL2_3),
            "GL2(3)" | "GL(2,3)" | "GL2_3" => Some(GL2_3),
            "SL2(5)" | "SL(2,5)" | "SL2_5" => Some(SL2_5),
            "W2" => Some(W2),
            "W3" => Some(W3),
            _ => None,
        };
        if let Some(g) = fixed {
            return Ok(g);
        }
        let ctors: [(&str, fn(usize) -> GroupType); 7] = [
            ("Z", Cyclic),
            ("C", Cyclic),
            ("D", Dihedral),
            ("V", Vn),
            ("H", Hn),
            ("U", Un),
            ("G", Gn),
        ];
        for (prefix, ctor) in ctors {
            if let Some(n) = parse_index(&t, prefix) {
                if n == 0 || (prefix == "D" && n < 2) {
                    return Err(Error::Parse(format!("invalid index in {s:?}")));
                }
                return Ok(ctor(n));
            }
        }
        Err(bad())
    }
}

impl GroupType {
    pub fn name(&self) -> String {
        self.to_string()
    }
}
