//! Exact group orders, evaluated in factored form.
//!
//! Each formula is a product of small atoms (a prime-power q^e, a value
//! q^k - 1 or q^k + 1, a constant) which are factorized individually and
//! merged, so p-parts of group orders never require refactorizing a huge
//! product. Division by center/determinant indices is exact subtraction of
//! exponents.

use super::sporadic::sporadic_order;
use super::{CatalogError, ExceptionalKind, GroupId, IsometryKind, OrthKind, Sign};
use crate::arith::{factorize, factorize_u64, prime_power_split, Factored};
use num_bigint::BigUint;

fn q_pow(q: u64, e: u32) -> Factored {
    let (r, k) = prime_power_split(q).expect("validated prime power");
    if e == 0 {
        return Factored::one();
    }
    Factored::from_factors(vec![(BigUint::from(r), k * e)])
}

fn qk_minus_1(q: u64, k: u32) -> Result<Factored, CatalogError> {
    let v = BigUint::from(q).pow(k) - 1u32;
    Ok(factorize(&v)?)
}

fn qk_plus_1(q: u64, k: u32) -> Result<Factored, CatalogError> {
    let v = BigUint::from(q).pow(k) + 1u32;
    Ok(factorize(&v)?)
}

fn constant(c: u64) -> Factored {
    factorize_u64(c).expect("nonzero constant")
}

fn factorial(n: u32) -> Factored {
    // Exponent of p in n! by Legendre's formula.
    let mut factors = Vec::new();
    for p in crate::arith::primes_up_to(n as u64) {
        let mut e = 0u32;
        let mut pk = p;
        while pk <= n as u64 {
            e += (n as u64 / pk) as u32;
            match pk.checked_mul(p) {
                Some(next) => pk = next,
                None => break,
            }
        }
        factors.push((BigUint::from(p), e));
    }
    Factored::from_factors(factors)
}

fn product(parts: Vec<Factored>) -> Factored {
    parts.iter().fold(Factored::one(), |acc, f| acc.mul(f))
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// gcd(c, q^k - 1) for small c; the second argument never needs full
/// factorization.
fn gcd_with_qk_minus_1(c: u64, q: u64, k: u32) -> u64 {
    let m = BigUint::from(q).pow(k) - 1u32;
    let r: BigUint = m % BigUint::from(c);
    let r = u64::try_from(r).expect("remainder below c");
    gcd_u64(c, r)
}

fn gcd_with_qk_plus_1(c: u64, q: u64, k: u32) -> u64 {
    let m = BigUint::from(q).pow(k) + 1u32;
    let r: BigUint = m % BigUint::from(c);
    let r = u64::try_from(r).expect("remainder below c");
    gcd_u64(c, r)
}

/// Exact order of a catalog group.
pub fn order(g: &GroupId) -> Result<Factored, CatalogError> {
    use GroupId::*;
    Ok(match g {
        Cyclic(n) => factorize_u64(*n)?,
        Symmetric(n) => factorial(*n),
        Alternating(n) => factorial(*n).div_exact(&constant(2)),
        Linear { kind, n, q } => {
            // q^(n(n-1)/2) * (q-1)(q^2-1)...(q^n-1), then the determinant
            // and center divisors for SL and PSL.
            let mut parts = vec![q_pow(*q, n * (n - 1) / 2)];
            for i in 1..=*n {
                parts.push(qk_minus_1(*q, i)?);
            }
            let gl = product(parts);
            match kind {
                IsometryKind::General => gl,
                IsometryKind::Special => gl.div_exact(&qk_minus_1(*q, 1)?),
                IsometryKind::ProjectiveSpecial => {
                    let sl = gl.div_exact(&qk_minus_1(*q, 1)?);
                    sl.div_exact(&constant(gcd_with_qk_minus_1(*n as u64, *q, 1)))
                }
            }
        }
        Unitary { kind, n, q } => {
            // q^(n(n-1)/2) * prod_{i<=n} (q^i - (-1)^i)
            let mut parts = vec![q_pow(*q, n * (n - 1) / 2)];
            for i in 1..=*n {
                if i % 2 == 0 {
                    parts.push(qk_minus_1(*q, i)?);
                } else {
                    parts.push(qk_plus_1(*q, i)?);
                }
            }
            let gu = product(parts);
            match kind {
                IsometryKind::General => gu,
                IsometryKind::Special => gu.div_exact(&qk_plus_1(*q, 1)?),
                IsometryKind::ProjectiveSpecial => {
                    let su = gu.div_exact(&qk_plus_1(*q, 1)?);
                    su.div_exact(&constant(gcd_with_qk_plus_1(*n as u64, *q, 1)))
                }
            }
        }
        Symplectic { projective, m, q } => {
            let mut parts = vec![q_pow(*q, m * m)];
            for i in 1..=*m {
                parts.push(qk_minus_1(*q, 2 * i)?);
            }
            let sp = product(parts);
            if *projective {
                sp.div_exact(&constant(gcd_u64(2, q - 1)))
            } else {
                sp
            }
        }
        OrthOdd { kind, m, q } => {
            // Same polynomial part as the symplectic group of rank m.
            let mut parts = vec![q_pow(*q, m * m)];
            for i in 1..=*m {
                parts.push(qk_minus_1(*q, 2 * i)?);
            }
            let x = product(parts);
            let q_odd = q % 2 == 1;
            match (kind, q_odd) {
                (OrthKind::GO, true) => x.mul(&constant(2)),
                (OrthKind::SO, true) => x,
                (OrthKind::Omega, true) => x.div_exact(&constant(2)),
                // In even characteristic GO = SO and Omega coincides with
                // the symplectic group of the same rank.
                (_, false) => x,
                (k, _) => unreachable!("{k:?} odd-dimensional"),
            }
        }
        OrthEven { kind, m, q, sign } => {
            let mut parts = vec![q_pow(*q, m * (m - 1))];
            match sign {
                Sign::Plus => parts.push(qk_minus_1(*q, *m)?),
                Sign::Minus => parts.push(qk_plus_1(*q, *m)?),
            }
            for i in 1..=m.saturating_sub(1) {
                parts.push(qk_minus_1(*q, 2 * i)?);
            }
            let b = product(parts);
            let q_odd = q % 2 == 1;
            let center4 = match sign {
                Sign::Plus => gcd_with_qk_minus_1(4, *q, *m),
                Sign::Minus => gcd_with_qk_plus_1(4, *q, *m),
            };
            match (kind, q_odd) {
                (OrthKind::GO, _) => b.mul(&constant(2)),
                (OrthKind::SO, true) => b,
                (OrthKind::SO, false) => b.mul(&constant(2)),
                (OrthKind::Omega, true) => b.div_exact(&constant(2)),
                (OrthKind::Omega, false) => b,
                (OrthKind::POmega, _) => b.div_exact(&constant(center4)),
                (OrthKind::CSO, true) => b.mul(&qk_minus_1(*q, 1)?),
                (OrthKind::CSO, false) => b.mul(&constant(2)).mul(&qk_minus_1(*q, 1)?),
            }
        }
        Exceptional { kind, q } => {
            let (power, minus_exps, plus_exps, center): (u32, &[u32], &[u32], u64) = match kind {
                ExceptionalKind::E6 => {
                    (36, &[2, 5, 6, 8, 9, 12], &[], gcd_with_qk_minus_1(3, *q, 1))
                }
                ExceptionalKind::TwistedE6 => {
                    (36, &[2, 6, 8, 12], &[5, 9], gcd_with_qk_plus_1(3, *q, 1))
                }
                ExceptionalKind::E7 => {
                    (63, &[2, 6, 8, 10, 12, 14, 18], &[], gcd_u64(2, q - 1))
                }
                ExceptionalKind::E8 => (120, &[2, 8, 12, 14, 18, 20, 24, 30], &[], 1),
                ExceptionalKind::F4 => (24, &[2, 6, 8, 12], &[], 1),
                ExceptionalKind::G2 => (6, &[2, 6], &[], 1),
                ExceptionalKind::ThreeD4 => {
                    // q^12 (q^2-1)^2 (q^4-q^2+1) (q^4+q^2+1)^2
                    let f = product(vec![
                        q_pow(*q, 12),
                        qk_minus_1(*q, 2)?,
                        qk_minus_1(*q, 2)?,
                        factorize(&(BigUint::from(*q).pow(4) - BigUint::from(*q).pow(2) + 1u32))?,
                        factorize(&(BigUint::from(*q).pow(4) + BigUint::from(*q).pow(2) + 1u32))?,
                        factorize(&(BigUint::from(*q).pow(4) + BigUint::from(*q).pow(2) + 1u32))?,
                    ]);
                    return Ok(f);
                }
            };
            let mut parts = vec![q_pow(*q, power)];
            for &k in minus_exps {
                parts.push(qk_minus_1(*q, k)?);
            }
            for &k in plus_exps {
                parts.push(qk_plus_1(*q, k)?);
            }
            let f = product(parts);
            if center > 1 {
                f.div_exact(&constant(center))
            } else {
                f
            }
        }
        Suzuki { exp } => {
            // q^2 (q-1) (q+r+1) (q-r+1) with q = 2^(2n+1), r = 2^(n+1).
            let (q, r) = suzuki_pair(*exp);
            product(vec![
                q_pow(q, 2),
                constant(q - 1),
                constant(q + r + 1),
                constant(q - r + 1),
            ])
        }
        Ree { exp } => {
            // Q^3 (Q-1) (Q+1) (Q+R+1) (Q-R+1) with Q = 3^(2n+1), R = 3^(n+1);
            // the last two factors are the exact integer values of
            // Q +- sqrt(3Q) + 1.
            let (q, r) = ree_pair(*exp);
            product(vec![
                q_pow(q, 3),
                constant(q - 1),
                constant(q + 1),
                constant(q + r + 1),
                constant(q - r + 1),
            ])
        }
        TwistedF4 { exp } => {
            // Q^12 (Q-1)^2 (Q+1)^2 (Q^2-Q+1) (Q^2+1)^2 (Q^2+QR+Q+R+1)(Q^2-QR+Q-R+1)
            let (q, r) = suzuki_pair(*exp);
            product(vec![
                q_pow(q, 12),
                constant(q - 1),
                constant(q - 1),
                constant(q + 1),
                constant(q + 1),
                constant(q * q - q + 1),
                constant(q * q + 1),
                constant(q * q + 1),
                factorize(&(BigUint::from(q) * q + BigUint::from(q) * r + q + r + 1u64))?,
                factorize(&(BigUint::from(q) * q - BigUint::from(q) * r + q - r + 1u64))?,
            ])
        }
        Tits => Factored::from_factors(vec![
            (BigUint::from(2u32), 11),
            (BigUint::from(3u32), 3),
            (BigUint::from(5u32), 2),
            (BigUint::from(13u32), 1),
        ]),
        Sporadic(name) => sporadic_order(*name),
    })
}

/// (q, r) = (2^(2n+1), 2^(n+1)) for the Suzuki and twisted F4 families.
pub fn suzuki_pair(exp: u32) -> (u64, u64) {
    (1u64 << (2 * exp + 1), 1u64 << (exp + 1))
}

/// (Q, R) = (3^(2n+1), 3^(n+1)) for the Ree family; Q +- R + 1 realize the
/// factors Q +- sqrt(3Q) + 1 as exact integers.
pub fn ree_pair(exp: u32) -> (u64, u64) {
    (3u64.pow(2 * exp + 1), 3u64.pow(exp + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn order_of(text: &str) -> u64 {
        order(&GroupId::parse(text).unwrap()).unwrap().value().to_u64().unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(order_of("A5"), 60);
        assert_eq!(order_of("S6"), 720);
        assert_eq!(order_of("C13"), 13);
        assert_eq!(order_of("GL(2,3)"), 48);
        assert_eq!(order_of("SL(2,5)"), 120);
        assert_eq!(order_of("PSL(2,7)"), 168);
        assert_eq!(order_of("PSL(2,11)"), 660);
        assert_eq!(order_of("PSL(3,4)"), 20160);
        assert_eq!(order_of("PSL(4,2)"), 20160);
        assert_eq!(order_of("Sp(4,2)"), 720);
        assert_eq!(order_of("PSp(4,3)"), 25920);
        assert_eq!(order_of("SU(3,9)"), 6048);
        assert_eq!(order_of("PSU(3,9)"), 6048);
        assert_eq!(order_of("PSU(3,4)"), 72);
        assert_eq!(order_of("PSU(4,4)"), 25920);
        assert_eq!(order_of("GU(2,4)"), 18);
    }

    #[test]
    fn suzuki_ree_tits_orders() {
        assert_eq!(order_of("Sz(8)"), 29120);
        assert_eq!(order_of("Sz(32)"), 32537600);
        assert_eq!(order_of("2G2(27)"), 10073444472);
        assert_eq!(order_of("2F4(2)'"), 17971200);
        assert_eq!(order_of("2F4(2)"), 35942400);
        assert_eq!(order_of("3D4(2)"), 211341312);
        assert_eq!(order_of("G2(2)"), 12096);
        assert_eq!(order_of("G2(3)"), 4245696);
        assert_eq!(order_of("G2(2)'"), 6048);
    }

    #[test]
    fn orthogonal_orders() {
        // POmega(+,8,2) and POmega(-,8,2) are the D4 / 2D4 groups at q = 2.
        assert_eq!(order_of("POmega(+,8,2)"), 174182400);
        assert_eq!(order_of("POmega(-,8,2)"), 197406720);
        assert_eq!(order_of("Omega(7,3)"), 4585351680);
        assert_eq!(order_of("SO(7,3)"), 9170703360);
        assert_eq!(order_of("GO(7,3)"), 2 * 9170703360);
    }

    #[test]
    fn exceptional_orders_spot_checks() {
        // |G2(4)| = 4^6 (4^6-1)(4^2-1)
        assert_eq!(order_of("G2(4)"), 4096u64 * 4095 * 15);
        // |F4(2)| = 2^24 (2^2-1)(2^6-1)(2^8-1)(2^12-1)
        assert_eq!(
            order_of("F4(2)"),
            (1u64 << 24) * 3 * 63 * 255 * 4095
        );
        // E6(2): compare against the expanded formula directly.
        let e6 = order(&GroupId::parse("E6(2)").unwrap()).unwrap();
        let expected = BigUint::from(2u32).pow(36)
            * BigUint::from(3u32)
            * BigUint::from(31u32)
            * BigUint::from(63u32)
            * BigUint::from(255u32)
            * BigUint::from(511u32)
            * BigUint::from(4095u32);
        assert_eq!(e6.value(), &expected);
    }

    #[test]
    fn factored_invariant_holds() {
        for text in [
            "A9", "S7", "PSL(5,2)", "PSU(5,4)", "PSp(6,2)", "POmega(+,8,2)", "Omega(9,3)",
            "E7(2)", "E8(2)", "2E6(2)", "2F4(8)", "Sz(32)", "2G2(27)", "CSO(+,8,3)",
        ] {
            let f = order(&GroupId::parse(text).unwrap()).unwrap();
            let mut prod = BigUint::from(1u32);
            for (p, e) in f.factors() {
                assert!(crate::arith::is_prime(p), "{text}: {p} not prime");
                prod *= p.pow(*e);
            }
            assert_eq!(&prod, f.value(), "product mismatch for {text}");
        }
    }
}
