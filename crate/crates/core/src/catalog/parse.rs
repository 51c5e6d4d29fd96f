//! Hand-rolled parser for the group grammar. Errors carry the byte position
//! of the offending token.

use super::sporadic::SporadicName;
use super::{CatalogError, ExceptionalKind, GroupId, IsometryKind, OrthKind, Sign};
use crate::arith::{prime_power_split, valuation_u64};

fn syntax(position: usize, message: impl Into<String>) -> CatalogError {
    CatalogError::Syntax { position, message: message.into() }
}

fn parameter(message: impl Into<String>) -> CatalogError {
    CatalogError::Parameter(message.into())
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64, CatalogError> {
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(syntax(self.pos, "expected a number"));
        }
        self.pos += digits.len();
        digits.parse().map_err(|_| syntax(self.pos, "number out of range"))
    }

    fn expect(&mut self, token: &str) -> Result<(), CatalogError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(syntax(self.pos, format!("expected `{token}`")))
        }
    }

    fn sign(&mut self) -> Result<Sign, CatalogError> {
        if self.eat("+") {
            Ok(Sign::Plus)
        } else if self.eat("-") {
            Ok(Sign::Minus)
        } else {
            Err(syntax(self.pos, "expected `+` or `-`"))
        }
    }

    fn done(&self) -> bool {
        self.pos == self.text.len()
    }
}

fn checked_prime_power(q: u64) -> Result<(u64, u32), CatalogError> {
    prime_power_split(q).ok_or_else(|| parameter(format!("{q} is not a prime power")))
}

/// f is read as the field size q^2 when it is a perfect square of a prime
/// power, and as q itself otherwise.
fn unitary_q(f: u64) -> Result<u64, CatalogError> {
    let (r, k) = checked_prime_power(f)?;
    if k % 2 == 0 {
        Ok(r.pow(k / 2))
    } else {
        Ok(f)
    }
}

pub fn parse_group(text: &str) -> Result<GroupId, CatalogError> {
    let text = text.trim();
    let mut c = Cursor { text, pos: 0 };

    // Sporadic names first: they are fixed tokens and several start with
    // letters that also open a parameterised family (M, S, J...).
    if let Some(name) = SporadicName::from_token(text) {
        return Ok(GroupId::Sporadic(name));
    }

    let g = parse_inner(&mut c)?;
    if !c.done() {
        return Err(syntax(c.pos, "trailing input"));
    }
    Ok(g)
}

fn parse_inner(c: &mut Cursor) -> Result<GroupId, CatalogError> {
    // Longest match first within each leading letter.
    if c.eat("PSL") {
        return classical_linear(c, IsometryKind::ProjectiveSpecial);
    }
    if c.eat("PSU") {
        return classical_unitary(c, IsometryKind::ProjectiveSpecial);
    }
    if c.eat("PSp") {
        return symplectic(c, true);
    }
    if c.eat("POmega") {
        return orth_even_only(c, OrthKind::POmega);
    }
    if c.eat("CSO") {
        return orth_even_only(c, OrthKind::CSO);
    }
    if c.eat("GL") {
        return classical_linear(c, IsometryKind::General);
    }
    if c.eat("SL") {
        return classical_linear(c, IsometryKind::Special);
    }
    if c.eat("GU") {
        return classical_unitary(c, IsometryKind::General);
    }
    if c.eat("SU") {
        return classical_unitary(c, IsometryKind::Special);
    }
    if c.eat("Sp") {
        return symplectic(c, false);
    }
    if c.eat("GO") {
        return orthogonal(c, OrthKind::GO);
    }
    if c.eat("SO") {
        return orthogonal(c, OrthKind::SO);
    }
    if c.eat("Omega") {
        return orthogonal(c, OrthKind::Omega);
    }
    if c.eat("Sz") {
        c.expect("(")?;
        let q = c.number()?;
        c.expect(")")?;
        return suzuki_style(q, 2, 1).map(|exp| GroupId::Suzuki { exp });
    }
    if c.eat("2G2") {
        c.expect("(")?;
        let q = c.number()?;
        c.expect(")")?;
        return suzuki_style(q, 3, 1).map(|exp| GroupId::Ree { exp });
    }
    if c.eat("2F4") {
        c.expect("(")?;
        let q = c.number()?;
        c.expect(")")?;
        let exp = suzuki_style(q, 2, 0)?;
        if c.eat("'") {
            if exp != 0 {
                return Err(parameter("the derived-subgroup form is only defined at field size 2"));
            }
            return Ok(GroupId::Tits);
        }
        return Ok(GroupId::TwistedF4 { exp });
    }
    if c.eat("2E6") {
        return exceptional(c, ExceptionalKind::TwistedE6);
    }
    if c.eat("3D4") {
        return exceptional(c, ExceptionalKind::ThreeD4);
    }
    if c.eat("E6") {
        return exceptional(c, ExceptionalKind::E6);
    }
    if c.eat("E7") {
        return exceptional(c, ExceptionalKind::E7);
    }
    if c.eat("E8") {
        return exceptional(c, ExceptionalKind::E8);
    }
    if c.eat("F4") {
        return exceptional(c, ExceptionalKind::F4);
    }
    if c.eat("G2") {
        let g = exceptional(c, ExceptionalKind::G2)?;
        if c.eat("'") {
            // G2(2)' is the simple derived subgroup, isomorphic to PSU(3,9).
            if g != (GroupId::Exceptional { kind: ExceptionalKind::G2, q: 2 }) {
                return Err(parameter("the derived-subgroup form is only defined at field size 2"));
            }
            return Ok(GroupId::Unitary { kind: IsometryKind::ProjectiveSpecial, n: 3, q: 3 });
        }
        return Ok(g);
    }
    if c.eat("A") {
        let n = c.number()?;
        if n < 3 {
            return Err(parameter("alternating groups need degree >= 3"));
        }
        return Ok(GroupId::Alternating(degree32(n)?));
    }
    if c.eat("S") {
        let n = c.number()?;
        if n < 2 {
            return Err(parameter("symmetric groups need degree >= 2"));
        }
        return Ok(GroupId::Symmetric(degree32(n)?));
    }
    if c.eat("C") {
        let n = c.number()?;
        if n < 2 {
            return Err(parameter("the trivial group is not classifiable"));
        }
        return Ok(GroupId::Cyclic(n));
    }
    Err(syntax(c.pos, "unknown group name"))
}

fn degree32(n: u64) -> Result<u32, CatalogError> {
    u32::try_from(n).map_err(|_| parameter("degree out of range"))
}

fn classical_linear(c: &mut Cursor, kind: IsometryKind) -> Result<GroupId, CatalogError> {
    c.expect("(")?;
    let n = degree32(c.number()?)?;
    c.expect(",")?;
    let q = c.number()?;
    c.expect(")")?;
    if n < 2 {
        return Err(parameter("linear groups need n >= 2"));
    }
    checked_prime_power(q)?;
    Ok(GroupId::Linear { kind, n, q })
}

fn classical_unitary(c: &mut Cursor, kind: IsometryKind) -> Result<GroupId, CatalogError> {
    c.expect("(")?;
    let n = degree32(c.number()?)?;
    c.expect(",")?;
    let f = c.number()?;
    c.expect(")")?;
    if n < 2 {
        return Err(parameter("unitary groups need n >= 2"));
    }
    let q = unitary_q(f)?;
    Ok(GroupId::Unitary { kind, n, q })
}

fn symplectic(c: &mut Cursor, projective: bool) -> Result<GroupId, CatalogError> {
    c.expect("(")?;
    let dim = c.number()?;
    c.expect(",")?;
    let q = c.number()?;
    c.expect(")")?;
    if dim < 2 || dim % 2 != 0 {
        return Err(parameter("symplectic groups need an even dimension >= 2"));
    }
    checked_prime_power(q)?;
    Ok(GroupId::Symplectic { projective, m: degree32(dim / 2)?, q })
}

fn orthogonal(c: &mut Cursor, kind: OrthKind) -> Result<GroupId, CatalogError> {
    c.expect("(")?;
    if let Ok(sign) = {
        let save = c.pos;
        let s = c.sign();
        if s.is_err() {
            c.pos = save;
        }
        s
    } {
        c.expect(",")?;
        let dim = c.number()?;
        c.expect(",")?;
        let q = c.number()?;
        c.expect(")")?;
        return orth_even(kind, sign, dim, q);
    }
    let dim = c.number()?;
    c.expect(",")?;
    let q = c.number()?;
    c.expect(")")?;
    if dim % 2 != 0 {
        if dim < 3 {
            return Err(parameter("odd orthogonal groups need dimension >= 3"));
        }
        checked_prime_power(q)?;
        return Ok(GroupId::OrthOdd { kind, m: degree32((dim - 1) / 2)?, q });
    }
    Err(parameter("even-dimensional orthogonal groups need a sign: e.g. GO(+,8,2)"))
}

fn orth_even_only(c: &mut Cursor, kind: OrthKind) -> Result<GroupId, CatalogError> {
    c.expect("(")?;
    let sign = c.sign()?;
    c.expect(",")?;
    let dim = c.number()?;
    c.expect(",")?;
    let q = c.number()?;
    c.expect(")")?;
    orth_even(kind, sign, dim, q)
}

fn orth_even(kind: OrthKind, sign: Sign, dim: u64, q: u64) -> Result<GroupId, CatalogError> {
    if dim < 2 || dim % 2 != 0 {
        return Err(parameter("even orthogonal groups need an even dimension >= 2"));
    }
    checked_prime_power(q)?;
    Ok(GroupId::OrthEven { kind, m: degree32(dim / 2)?, q, sign })
}

fn exceptional(c: &mut Cursor, kind: ExceptionalKind) -> Result<GroupId, CatalogError> {
    c.expect("(")?;
    let q = c.number()?;
    c.expect(")")?;
    checked_prime_power(q)?;
    Ok(GroupId::Exceptional { kind, q })
}

/// Validates `q = base^(2n+1)` with `n >= min_exp` and returns n.
fn suzuki_style(q: u64, base: u64, min_exp: u32) -> Result<u32, CatalogError> {
    let v = valuation_u64(q, base);
    if q != base.pow(v) || v % 2 == 0 || (v - 1) / 2 < min_exp {
        return Err(parameter(format!(
            "field size must be {base}^(2n+1) with n >= {min_exp}, got {q}"
        )));
    }
    Ok((v - 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_from_the_grammar() {
        assert_eq!(parse_group("A5").unwrap(), GroupId::Alternating(5));
        assert_eq!(parse_group("Sz(8)").unwrap(), GroupId::Suzuki { exp: 1 });
        assert!(matches!(parse_group("GL(2,6)"), Err(CatalogError::Parameter(_))));
        assert!(matches!(parse_group("Sz(4)"), Err(CatalogError::Parameter(_))));
        assert!(matches!(parse_group("Sz(2)"), Err(CatalogError::Parameter(_))));
        assert!(matches!(parse_group("2G2(3)"), Err(CatalogError::Parameter(_))));
        assert!(matches!(parse_group("C1"), Err(CatalogError::Parameter(_))));
        assert!(matches!(parse_group("nonsense"), Err(CatalogError::Syntax { .. })));
        assert!(matches!(parse_group("A5junk"), Err(CatalogError::Syntax { .. })));
    }

    #[test]
    fn unitary_field_size_convention() {
        // Perfect-square argument: field size reading.
        assert_eq!(
            parse_group("PSU(3,4)").unwrap(),
            GroupId::Unitary { kind: IsometryKind::ProjectiveSpecial, n: 3, q: 2 }
        );
        // Non-square argument: plain q reading.
        assert_eq!(
            parse_group("PSU(3,5)").unwrap(),
            GroupId::Unitary { kind: IsometryKind::ProjectiveSpecial, n: 3, q: 5 }
        );
        assert_eq!(
            parse_group("SU(3,3)").unwrap(),
            GroupId::Unitary { kind: IsometryKind::Special, n: 3, q: 3 }
        );
    }

    #[test]
    fn derived_subgroup_aliases() {
        assert_eq!(parse_group("2F4(2)'").unwrap(), GroupId::Tits);
        assert_eq!(
            parse_group("G2(2)'").unwrap(),
            GroupId::Unitary { kind: IsometryKind::ProjectiveSpecial, n: 3, q: 3 }
        );
        assert!(parse_group("2F4(8)'").is_err());
    }

    #[test]
    fn sporadic_tokens() {
        assert_eq!(parse_group("M11").unwrap(), GroupId::Sporadic(SporadicName::M11));
        assert_eq!(parse_group("O'N").unwrap(), GroupId::Sporadic(SporadicName::ON));
        assert_eq!(parse_group("ON").unwrap(), GroupId::Sporadic(SporadicName::ON));
        assert_eq!(parse_group("M").unwrap(), GroupId::Sporadic(SporadicName::Monster));
        assert_eq!(parse_group("B").unwrap(), GroupId::Sporadic(SporadicName::BabyMonster));
    }

    #[test]
    fn symplectic_dimension_is_first_argument() {
        assert_eq!(
            parse_group("Sp(6,3)").unwrap(),
            GroupId::Symplectic { projective: false, m: 3, q: 3 }
        );
        assert!(parse_group("Sp(5,3)").is_err());
    }
}
