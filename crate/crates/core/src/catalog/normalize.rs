//! Exceptional-isomorphism rewrites and simplicity bookkeeping.
//!
//! `normalize` rewrites an identifier to a canonical representative along
//! the classical low-rank isomorphisms, so every downstream rule handles
//! each group once. Orders are preserved exactly by every rewrite (tested).

use super::{GroupId, IsometryKind, OrthKind, Sign};

/// Rewrites the identifier to its canonical representative, returning the
/// chain of applied isomorphisms as human-readable notes.
pub fn normalize(g: &GroupId) -> (GroupId, Vec<String>) {
    let mut current = g.clone();
    let mut notes = Vec::new();
    loop {
        let step = normalize_step(&current);
        match step {
            Some((next, note)) => {
                notes.push(note);
                current = next;
            }
            None => return (current, notes),
        }
    }
}

fn psl(n: u32, q: u64) -> GroupId {
    GroupId::Linear { kind: IsometryKind::ProjectiveSpecial, n, q }
}

fn normalize_step(g: &GroupId) -> Option<(GroupId, String)> {
    use GroupId::*;
    match g {
        // Odd-dimensional orthogonal: even characteristic collapses onto the
        // symplectic group; Omega_3 and Omega_5 are PSL_2 and PSp_4.
        OrthOdd { kind: OrthKind::Omega, m, q } if q % 2 == 0 => Some((
            Symplectic { projective: true, m: *m, q: *q },
            format!("Omega({},{q}) = PSp({},{q}) in even characteristic", 2 * m + 1, 2 * m),
        )),
        OrthOdd { kind: OrthKind::Omega, m: 1, q } => {
            Some((psl(2, *q), format!("Omega(3,{q}) = PSL(2,{q})")))
        }
        OrthOdd { kind: OrthKind::Omega, m: 2, q } => Some((
            Symplectic { projective: true, m: 2, q: *q },
            format!("Omega(5,{q}) = PSp(4,{q})"),
        )),
        // Rank-1 symplectic groups are (P)SL_2.
        Symplectic { projective: false, m: 1, q } => Some((
            Linear { kind: IsometryKind::Special, n: 2, q: *q },
            format!("Sp(2,{q}) = SL(2,{q})"),
        )),
        Symplectic { projective: true, m: 1, q } => {
            Some((psl(2, *q), format!("PSp(2,{q}) = PSL(2,{q})")))
        }
        // Sp_4(2) = PSp_4(2) = S_6.
        Symplectic { m: 2, q: 2, .. } => {
            Some((Symmetric(6), "Sp(4,2) = S6".to_string()))
        }
        // PSU_2 over q^2 is PSL_2 over q.
        Unitary { kind: IsometryKind::ProjectiveSpecial, n: 2, q } => {
            Some((psl(2, *q), format!("PSU(2,{}) = PSL(2,{q})", q * q)))
        }
        // Low-rank projective even orthogonal groups.
        OrthEven { kind: OrthKind::POmega, m: 2, q, sign: Sign::Minus } => Some((
            psl(2, q * q),
            format!("POmega(-,4,{q}) = PSL(2,{})", q * q),
        )),
        OrthEven { kind: OrthKind::POmega, m: 3, q, sign: Sign::Plus } => {
            Some((psl(4, *q), format!("POmega(+,6,{q}) = PSL(4,{q})")))
        }
        OrthEven { kind: OrthKind::POmega, m: 3, q, sign: Sign::Minus } => Some((
            Unitary { kind: IsometryKind::ProjectiveSpecial, n: 4, q: *q },
            format!("POmega(-,6,{q}) = PSU(4,{})", q * q),
        )),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Simplicity {
    Simple,
    NotSimple,
}

/// Simplicity of the (normalized) group, plus the stated exceptions of its
/// family where there are any. A `Simple` verdict with a non-empty
/// exception list means: this member is simple, but the family has the
/// listed non-simple members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicityNote {
    pub simplicity: Simplicity,
    pub family_exceptions: Vec<&'static str>,
    pub note: Option<String>,
}

fn simple() -> SimplicityNote {
    SimplicityNote { simplicity: Simplicity::Simple, family_exceptions: vec![], note: None }
}

fn not_simple() -> SimplicityNote {
    SimplicityNote { simplicity: Simplicity::NotSimple, family_exceptions: vec![], note: None }
}

fn with_exceptions(mut n: SimplicityNote, exceptions: Vec<&'static str>) -> SimplicityNote {
    n.family_exceptions = exceptions;
    n
}

fn with_note(mut n: SimplicityNote, note: impl Into<String>) -> SimplicityNote {
    n.note = Some(note.into());
    n
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Whether the group is treated as simple, with the family's stated
/// exceptions. The identifier is normalized first.
pub fn simplicity_note(g: &GroupId) -> SimplicityNote {
    use GroupId::*;
    let (g, _) = normalize(g);
    match &g {
        Cyclic(n) => {
            if crate::arith::is_prime_u64(*n) {
                simple()
            } else {
                not_simple()
            }
        }
        Alternating(3) => with_note(simple(), "abelian; coincides with C3"),
        Alternating(4) => not_simple(),
        Alternating(_) => simple(),
        Symmetric(2) => with_note(simple(), "abelian; coincides with C2"),
        Symmetric(_) => not_simple(),
        Linear { kind, n, q } => match kind {
            IsometryKind::General => not_simple(),
            IsometryKind::Special => {
                if gcd_u64(*n as u64, q - 1) == 1 && !(*n == 2 && *q <= 3) {
                    with_note(simple(), "trivial center; coincides with the projective group")
                } else {
                    not_simple()
                }
            }
            IsometryKind::ProjectiveSpecial => {
                let exceptions = vec!["PSL(2,2)", "PSL(2,3)"];
                if *n == 2 && *q <= 3 {
                    with_exceptions(not_simple(), exceptions)
                } else {
                    with_exceptions(simple(), exceptions)
                }
            }
        },
        Symplectic { projective, m, q } => {
            let exceptions = vec!["PSp(4,2)"];
            if *m < 2 || (*m == 2 && *q == 2) {
                with_exceptions(not_simple(), exceptions)
            } else if *projective || q % 2 == 0 {
                with_exceptions(simple(), exceptions)
            } else {
                with_note(not_simple(), "center of order 2")
            }
        }
        Unitary { kind, n, q } => match kind {
            IsometryKind::General => not_simple(),
            IsometryKind::Special => {
                if gcd_u64(*n as u64, q + 1) == 1 && !(*n == 3 && *q == 2) && !(*n == 2 && *q <= 3)
                {
                    with_note(simple(), "trivial center; coincides with the projective group")
                } else {
                    not_simple()
                }
            }
            IsometryKind::ProjectiveSpecial => {
                let exceptions = vec!["PSU(3,4)"];
                if *n == 3 && *q == 2 {
                    with_exceptions(not_simple(), exceptions)
                } else if *n == 2 {
                    // normalized away unless q <= 3
                    not_simple()
                } else {
                    with_exceptions(simple(), exceptions)
                }
            }
        },
        OrthOdd { kind, m, q } => match kind {
            OrthKind::Omega => {
                if *m >= 3 {
                    simple()
                } else {
                    not_simple()
                }
            }
            _ if q % 2 == 0 => with_note(
                simplicity_note(&Symplectic { projective: true, m: *m, q: *q }),
                "coincides with the symplectic group in even characteristic",
            ),
            _ => not_simple(),
        },
        OrthEven { kind, m, q, sign } => {
            let center4 = match sign {
                Sign::Plus => gcd_u64(4, pow_mod4(*q, *m).wrapping_sub(1) & 3),
                Sign::Minus => gcd_u64(4, (pow_mod4(*q, *m) + 1) & 3),
            };
            // center4 = gcd(4, q^m -+ 1) computed mod 4; gcd(4, x) only
            // depends on x mod 4 except x = 0 mod 4, where gcd is 4.
            let center4 = if center4 == 0 { 4 } else { center4 };
            match kind {
                OrthKind::Omega | OrthKind::POmega => {
                    if *m >= 3 && (*kind == OrthKind::POmega || center4 <= 2) {
                        simple()
                    } else {
                        not_simple()
                    }
                }
                _ => not_simple(),
            }
        }
        Exceptional { kind, q } => match kind {
            super::ExceptionalKind::G2 => {
                let exceptions = vec!["G2(2)"];
                if *q == 2 {
                    with_note(
                        with_exceptions(not_simple(), exceptions),
                        "derived subgroup of index 2 is PSU(3,9)",
                    )
                } else {
                    with_exceptions(simple(), exceptions)
                }
            }
            _ => simple(),
        },
        Suzuki { .. } | Ree { .. } | Tits | Sporadic(_) => simple(),
        TwistedF4 { exp } => {
            let exceptions = vec!["2F4(2)"];
            if *exp == 0 {
                with_note(
                    with_exceptions(not_simple(), exceptions),
                    "derived subgroup of index 2 is the Tits group 2F4(2)'",
                )
            } else {
                with_exceptions(simple(), exceptions)
            }
        }
    }
}

fn pow_mod4(q: u64, m: u32) -> u64 {
    let mut acc = 1u64;
    for _ in 0..m {
        acc = (acc * (q & 3)) & 3;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::order;

    #[test]
    fn normalize_examples() {
        let (g, notes) = normalize(&GroupId::parse("Omega(3,7)").unwrap());
        assert_eq!(g, GroupId::parse("PSL(2,7)").unwrap());
        assert!(!notes.is_empty());

        let (g, _) = normalize(&GroupId::parse("PSp(4,2)").unwrap());
        assert_eq!(g, GroupId::Symmetric(6));

        let (g, notes) = normalize(&GroupId::parse("A7").unwrap());
        assert_eq!(g, GroupId::Alternating(7));
        assert!(notes.is_empty());

        let (g, _) = normalize(&GroupId::parse("POmega(-,4,3)").unwrap());
        assert_eq!(g, GroupId::parse("PSL(2,9)").unwrap());

        let (g, _) = normalize(&GroupId::parse("POmega(+,6,3)").unwrap());
        assert_eq!(g, GroupId::parse("PSL(4,3)").unwrap());

        let (g, _) = normalize(&GroupId::parse("POmega(-,6,2)").unwrap());
        assert_eq!(g, GroupId::parse("PSU(4,4)").unwrap());

        // Chained: Omega(5, 4) -> PSp(4, 4) stays; Omega(5,2) -> PSp(4,2) -> S6.
        let (g, notes) = normalize(&GroupId::parse("Omega(5,2)").unwrap());
        assert_eq!(g, GroupId::Symmetric(6));
        assert_eq!(notes.len(), 2);
    }

    #[test]
    fn normalize_preserves_orders() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            for text in [
                format!("Omega(3,{q})"),
                format!("Omega(5,{q})"),
                format!("Omega(7,{q})"),
                format!("Sp(2,{q})"),
                format!("PSp(2,{q})"),
                format!("PSU(2,{})", q * q),
                format!("POmega(-,4,{q})"),
                format!("POmega(+,6,{q})"),
                format!("POmega(-,6,{q})"),
            ] {
                let g = GroupId::parse(&text).unwrap();
                let (n, _) = normalize(&g);
                assert_eq!(
                    order(&g).unwrap().value(),
                    order(&n).unwrap().value(),
                    "order changed normalizing {text} -> {n}"
                );
            }
        }
        let (g, _) = normalize(&GroupId::parse("PSp(4,2)").unwrap());
        assert_eq!(order(&g).unwrap().value(), order(&GroupId::Symmetric(6)).unwrap().value());
    }

    #[test]
    fn simplicity_examples() {
        assert_eq!(
            simplicity_note(&GroupId::parse("PSU(3,4)").unwrap()).simplicity,
            Simplicity::NotSimple
        );
        assert_eq!(
            simplicity_note(&GroupId::parse("PSp(6,3)").unwrap()).simplicity,
            Simplicity::Simple
        );
        assert_eq!(
            simplicity_note(&GroupId::parse("GL(3,5)").unwrap()).simplicity,
            Simplicity::NotSimple
        );
        assert_eq!(
            simplicity_note(&GroupId::parse("SL(2,4)").unwrap()).simplicity,
            Simplicity::Simple
        );
        assert_eq!(
            simplicity_note(&GroupId::parse("2F4(2)").unwrap()).simplicity,
            Simplicity::NotSimple
        );
        assert_eq!(simplicity_note(&GroupId::Tits).simplicity, Simplicity::Simple);
    }
}
