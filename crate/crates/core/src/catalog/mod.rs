//! The universe of classifiable group identifiers: parsing and printing of
//! the textual grammar, parameter validation, exact order formulas and the
//! exceptional-isomorphism rewrites.
//!
//! # Grammar
//!
//! ```text
//! A<n>  S<n>  C<n>                      alternating / symmetric / cyclic
//! GL(n,q)  SL(n,q)  PSL(n,q)            linear (n >= 2, q a prime power)
//! Sp(2m,q)  PSp(2m,q)                   symplectic (first argument is the dimension 2m)
//! GU(n,f)  SU(n,f)  PSU(n,f)            unitary; f is the field size q^2 when f is a
//!                                       perfect square of a prime power, otherwise f = q
//! GO(2m+1,q)  SO(2m+1,q)  Omega(2m+1,q) odd-dimensional orthogonal
//! GO(s,2m,q)  SO(s,2m,q)  Omega(s,2m,q) even-dimensional orthogonal, s in {+,-}
//! POmega(s,2m,q)  CSO(s,2m,q)
//! E6(q) 2E6(q) E7(q) E8(q) F4(q) G2(q) 3D4(q)
//! 2F4(q)    q = 2^(2n+1), n >= 0
//! 2F4(2)'   the Tits group
//! Sz(q)     q = 2^(2n+1), n >= 1
//! 2G2(q)    q = 3^(2n+1), n >= 1
//! G2(2)'    accepted as an alias of PSU(3,9)
//! M11 ... M  the 26 sporadic groups (O'N may be written ON)
//! ```
//!
//! The unitary display form always uses the field size (`PSU(3,9)` for the
//! group with q = 3), which round-trips because field sizes are perfect
//! squares.

mod normalize;
mod orders;
mod parse;
mod sporadic;

pub use normalize::{normalize, simplicity_note, Simplicity, SimplicityNote};
pub use orders::order;
pub use sporadic::{sporadic_order_table, SporadicName, ALL_SPORADIC};

use crate::arith;
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("parameter violation: {0}")]
    Parameter(String),
    #[error("arithmetic failure: {0}")]
    Arith(#[from] arith::ArithError),
}

/// Which of GL / SL / PSL (and the symplectic, unitary, orthogonal analogues)
/// a classical identifier denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsometryKind {
    General,
    Special,
    ProjectiveSpecial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrthKind {
    GO,
    SO,
    Omega,
    POmega,
    CSO,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExceptionalKind {
    E6,
    TwistedE6,
    E7,
    E8,
    F4,
    G2,
    ThreeD4,
}

/// A validated group identifier. Parameters follow the order formulas:
/// symplectic and orthogonal groups store the rank `m` (dimension 2m or
/// 2m+1), unitary groups store the `q` with field of q^2 elements, and the
/// Suzuki / Ree / twisted F4 families store the exponent `n` of
/// q = 2^(2n+1) resp. q^2 = 3^(2n+1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    Cyclic(u64),
    Alternating(u32),
    Symmetric(u32),
    Linear { kind: IsometryKind, n: u32, q: u64 },
    Symplectic { projective: bool, m: u32, q: u64 },
    Unitary { kind: IsometryKind, n: u32, q: u64 },
    OrthOdd { kind: OrthKind, m: u32, q: u64 },
    OrthEven { kind: OrthKind, m: u32, q: u64, sign: Sign },
    Exceptional { kind: ExceptionalKind, q: u64 },
    Suzuki { exp: u32 },
    Ree { exp: u32 },
    TwistedF4 { exp: u32 },
    Tits,
    Sporadic(SporadicName),
}

impl GroupId {
    /// Parses the canonical grammar; see the module docs.
    pub fn parse(text: &str) -> Result<GroupId, CatalogError> {
        parse::parse_group(text)
    }

    /// Field parameter of the defining module, when there is one. For the
    /// unitary families this is the q with |F| = q^2; for the Suzuki, Ree
    /// and twisted F4 families it is the full field size (2^(2n+1) or
    /// 3^(2n+1)).
    pub fn field_q(&self) -> Option<u64> {
        match self {
            GroupId::Linear { q, .. }
            | GroupId::Symplectic { q, .. }
            | GroupId::Unitary { q, .. }
            | GroupId::OrthOdd { q, .. }
            | GroupId::OrthEven { q, .. }
            | GroupId::Exceptional { q, .. } => Some(*q),
            GroupId::Suzuki { exp } => Some(1u64 << (2 * exp + 1)),
            GroupId::TwistedF4 { exp } => Some(1u64 << (2 * exp + 1)),
            GroupId::Ree { exp } => Some(3u64.pow(2 * exp + 1)),
            _ => None,
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupId::*;
        match self {
            Cyclic(n) => write!(f, "C{n}"),
            Alternating(n) => write!(f, "A{n}"),
            Symmetric(n) => write!(f, "S{n}"),
            Linear { kind, n, q } => {
                let name = match kind {
                    IsometryKind::General => "GL",
                    IsometryKind::Special => "SL",
                    IsometryKind::ProjectiveSpecial => "PSL",
                };
                write!(f, "{name}({n},{q})")
            }
            Symplectic { projective, m, q } => {
                write!(f, "{}({},{q})", if *projective { "PSp" } else { "Sp" }, 2 * m)
            }
            Unitary { kind, n, q } => {
                let name = match kind {
                    IsometryKind::General => "GU",
                    IsometryKind::Special => "SU",
                    IsometryKind::ProjectiveSpecial => "PSU",
                };
                write!(f, "{name}({n},{})", q * q)
            }
            OrthOdd { kind, m, q } => {
                let name = match kind {
                    OrthKind::GO => "GO",
                    OrthKind::SO => "SO",
                    OrthKind::Omega => "Omega",
                    k => unreachable!("{k:?} is even-dimensional only"),
                };
                write!(f, "{name}({},{q})", 2 * m + 1)
            }
            OrthEven { kind, m, q, sign } => {
                let name = match kind {
                    OrthKind::GO => "GO",
                    OrthKind::SO => "SO",
                    OrthKind::Omega => "Omega",
                    OrthKind::POmega => "POmega",
                    OrthKind::CSO => "CSO",
                };
                let s = match sign {
                    Sign::Plus => '+',
                    Sign::Minus => '-',
                };
                write!(f, "{name}({s},{},{q})", 2 * m)
            }
            Exceptional { kind, q } => {
                let name = match kind {
                    ExceptionalKind::E6 => "E6",
                    ExceptionalKind::TwistedE6 => "2E6",
                    ExceptionalKind::E7 => "E7",
                    ExceptionalKind::E8 => "E8",
                    ExceptionalKind::F4 => "F4",
                    ExceptionalKind::G2 => "G2",
                    ExceptionalKind::ThreeD4 => "3D4",
                };
                write!(f, "{name}({q})")
            }
            Suzuki { exp } => write!(f, "Sz({})", 1u64 << (2 * exp + 1)),
            Ree { exp } => write!(f, "2G2({})", 3u64.pow(2 * exp + 1)),
            TwistedF4 { exp } => write!(f, "2F4({})", 1u64 << (2 * exp + 1)),
            Tits => write!(f, "2F4(2)'"),
            Sporadic(name) => write!(f, "{name}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_parse_roundtrip() {
        for text in [
            "C13", "A5", "S6", "GL(2,3)", "SL(2,5)", "PSL(3,4)", "Sp(6,3)", "PSp(4,2)",
            "GU(3,9)", "SU(3,9)", "PSU(3,25)", "GO(7,3)", "SO(7,3)", "Omega(7,3)",
            "GO(+,8,2)", "SO(-,10,3)", "Omega(+,8,2)", "POmega(-,8,2)", "CSO(+,8,3)",
            "E6(2)", "2E6(2)", "E7(2)", "E8(2)", "F4(2)", "G2(4)", "3D4(2)", "2F4(8)",
            "2F4(2)'", "Sz(8)", "2G2(27)", "M11", "Fi24'", "O'N", "B", "M",
        ] {
            let g = GroupId::parse(text).unwrap();
            assert_eq!(g.to_string(), text, "round-trip failed for {text}");
            assert_eq!(GroupId::parse(&g.to_string()).unwrap(), g);
        }
    }
}
