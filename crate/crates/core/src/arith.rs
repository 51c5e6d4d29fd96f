//! Exact integer arithmetic shared by every other module: factorization,
//! multiplicative orders, p-adic valuations and prime-power recognition.
//!
//! Group orders are carried around in factored form (see [`Factored`]) so
//! that p-parts and divisibility tests never have to refactorize anything.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;

/// Trial division is run up to this bound before Pollard rho takes over.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Total Pollard-rho iteration budget per `factorize` call. Inputs whose
/// co-factors resist this budget (for example semiprimes with two prime
/// factors well beyond 2^64) are rejected with
/// [`ArithError::FactorizationBudget`] instead of spinning forever.
/// Numbers up to 2^128 with no more than ~50-bit prime factors are well
/// within the budget.
pub const RHO_ITERATION_BUDGET: u64 = 50_000_000;

/// Miller-Rabin witnesses. For inputs below 2^64 this set is a proven
/// deterministic primality test (Sinclair's base set); above 2^64 the same
/// bases plus the primes up to 97 are used as a fixed, documented witness
/// set.
pub const MR_WITNESSES_U64: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("factorization budget exceeded for {0}")]
    FactorizationBudget(BigUint),
    #[error("multiplicative order undefined: {p} divides {q}")]
    OrderUndefined { q: u64, p: u64 },
    #[error("multiplicative order requires an odd prime, got p = {0}")]
    OrderEvenPrime(u64),
    #[error("zero is not factorizable")]
    Zero,
}

/// An arbitrary-precision natural number together with its full prime
/// factorization. `factors` is sorted by prime and the product of
/// `prime^exponent` always equals `value`; the empty factor list encodes 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factored {
    value: BigUint,
    factors: Vec<(BigUint, u32)>,
}

impl Factored {
    pub fn one() -> Self {
        Factored { value: BigUint::one(), factors: Vec::new() }
    }

    /// Builds a `Factored` from a factor list, computing the value.
    /// Callers must pass genuine primes in strictly increasing order;
    /// this is debug-asserted and re-checked by the catalog tests.
    pub fn from_factors(factors: Vec<(BigUint, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(factors.iter().all(|(_, e)| *e >= 1));
        let mut value = BigUint::one();
        for (p, e) in &factors {
            value *= p.pow(*e);
        }
        Factored { value, factors }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    /// Multiplies two factored values, merging the factor lists exactly.
    pub fn mul(&self, other: &Factored) -> Factored {
        let mut merged = self.factors.clone();
        for (p, e) in &other.factors {
            match merged.binary_search_by(|(q, _)| q.cmp(p)) {
                Ok(i) => merged[i].1 += e,
                Err(i) => merged.insert(i, (p.clone(), *e)),
            }
        }
        Factored { value: &self.value * &other.value, factors: merged }
    }

    /// Divides exactly by `other`. Panics if the quotient is not exact;
    /// the order formulas only ever divide by genuine divisors.
    pub fn div_exact(&self, other: &Factored) -> Factored {
        let mut merged = self.factors.clone();
        for (p, e) in &other.factors {
            let i = merged
                .binary_search_by(|(q, _)| q.cmp(p))
                .unwrap_or_else(|_| panic!("non-exact division by {p}"));
            assert!(merged[i].1 >= *e, "non-exact division by {p}^{e}");
            merged[i].1 -= e;
            if merged[i].1 == 0 {
                merged.remove(i);
            }
        }
        Factored { value: &self.value / &other.value, factors: merged }
    }

    /// The exact p-part `(p^a, a)` of the value; `(1, 0)` when p does not
    /// divide it.
    pub fn p_part(&self, p: u64) -> (BigUint, u32) {
        let pb = BigUint::from(p);
        match self.factors.binary_search_by(|(q, _)| q.cmp(&pb)) {
            Ok(i) => {
                let a = self.factors[i].1;
                (pb.pow(a), a)
            }
            Err(_) => (BigUint::one(), 0),
        }
    }

    pub fn divisible_by(&self, p: u64) -> bool {
        self.p_part(p).1 > 0
    }
}

impl fmt::Display for Factored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{} = {}", self.value, parts.join(" * "))
    }
}

fn mulmod_u128(a: u128, b: u128, m: u128) -> u128 {
    // Schoolbook double-and-add; m < 2^127 here.
    let mut result = 0u128;
    let mut a = a % m;
    let mut b = b % m;
    while b > 0 {
        if b & 1 == 1 {
            result = (result + a) % m;
        }
        a = (a << 1) % m;
        b >>= 1;
    }
    result
}

fn powmod_u128(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u128(acc, base, m);
        }
        base = mulmod_u128(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for &a in &MR_WITNESSES_U64 {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = powmod_u128(a as u128, d as u128, n as u128);
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u128(x, x, n as u128);
            if x == (n - 1) as u128 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin primality for arbitrary-size inputs: deterministic below
/// 2^64, fixed documented witness set above.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(n64) = n.to_u64() {
        return is_prime_u64(n64);
    }
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if n.is_even() {
        return false;
    }
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let small_primes: Vec<u64> = (2..=97).filter(|&k| is_prime_u64(k)).collect();
    let mut witnesses: Vec<u64> = MR_WITNESSES_U64.to_vec();
    witnesses.extend(small_primes);
    'witness: for &a in &witnesses {
        let a = BigUint::from(a) % n;
        if a.is_zero() || a.is_one() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard rho (Brent variant) for one non-trivial factor of an odd
/// composite. Returns `None` when the iteration budget runs out.
fn pollard_rho(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    let one = BigUint::one();
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let mut c = BigUint::from(1u32);
    loop {
        if *budget == 0 {
            return None;
        }
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = BigUint::one();
        let f = |v: &BigUint| (v * v + &c) % n;
        let mut iter_left: u64 = (*budget).min(4_000_000);
        *budget -= iter_left;
        while d.is_one() && iter_left > 0 {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break; // cycle without factor, retry with new c
            }
            d = diff.gcd(n);
            iter_left -= 1;
        }
        *budget += iter_left;
        if !d.is_one() && !d.is_zero() && &d != n {
            return Some(d);
        }
        c += &one;
        if c == BigUint::from(20u32) {
            return None;
        }
    }
}

/// Factorizes `n >= 1` exactly: trial division up to
/// [`TRIAL_DIVISION_BOUND`], then recursive Pollard rho with Miller-Rabin
/// primality certificates on every remaining co-factor.
pub fn factorize(n: &BigUint) -> Result<Factored, ArithError> {
    if n.is_zero() {
        return Err(ArithError::Zero);
    }
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut push = |p: BigUint, e: u32, factors: &mut Vec<(BigUint, u32)>| {
        match factors.binary_search_by(|(q, _)| q.cmp(&p)) {
            Ok(i) => factors[i].1 += e,
            Err(i) => factors.insert(i, (p, e)),
        }
    };

    // Trial division by 2, 3, then the 6k±1 wheel.
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_BOUND {
        let db = BigUint::from(d);
        if &db * &db > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &db).is_zero() {
            rest /= &db;
            e += 1;
        }
        if e > 0 {
            push(db, e, &mut factors);
        }
        d = match d {
            2 => 3,
            3 => 5,
            _ => {
                if d % 6 == 5 {
                    d + 2
                } else {
                    d + 4
                }
            }
        };
    }
    if rest.is_one() {
        return Ok(Factored { value: n.clone(), factors });
    }

    // Recursive rho on the remaining part.
    let mut budget = RHO_ITERATION_BUDGET;
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            push(m, 1, &mut factors);
            continue;
        }
        // Perfect powers of a prime slip through rho slowly; peel them first.
        if let Some((root, k)) = perfect_power(&m) {
            for _ in 0..k {
                stack.push(root.clone());
            }
            continue;
        }
        match pollard_rho(&m, &mut budget) {
            Some(f) => {
                stack.push(&m / &f);
                stack.push(f);
            }
            None => return Err(ArithError::FactorizationBudget(n.clone())),
        }
    }
    Ok(Factored { value: n.clone(), factors })
}

/// Convenience u64 front end.
pub fn factorize_u64(n: u64) -> Result<Factored, ArithError> {
    factorize(&BigUint::from(n))
}

/// Writes `m = b^k` with k maximal >= 2 if possible.
fn perfect_power(m: &BigUint) -> Option<(BigUint, u32)> {
    let bits = m.bits();
    for k in (2..=bits.min(64) as u32).rev() {
        let root = m.nth_root(k);
        if root.pow(k) == *m {
            return Some((root, k));
        }
    }
    None
}

/// Smallest d >= 1 with `q^d = 1 (mod p)` for an odd prime p not dividing
/// q. Calling with p = 2 is an error by design: every consumer excludes 2.
pub fn mult_order(q: u64, p: u64) -> Result<u64, ArithError> {
    if p == 2 {
        return Err(ArithError::OrderEvenPrime(p));
    }
    debug_assert!(is_prime_u64(p), "mult_order wants a prime modulus");
    if q % p == 0 {
        return Err(ArithError::OrderUndefined { q, p });
    }
    // d divides p - 1; scan divisors in increasing order.
    let group = p - 1;
    let mut divisors: Vec<u64> = Vec::new();
    let mut i = 1;
    while i * i <= group {
        if group % i == 0 {
            divisors.push(i);
            divisors.push(group / i);
        }
        i += 1;
    }
    divisors.sort_unstable();
    divisors.dedup();
    for d in divisors {
        if powmod_u128(q as u128 % p as u128, d as u128, p as u128) == 1 {
            return Ok(d);
        }
    }
    unreachable!("Fermat guarantees an order dividing p - 1");
}

/// p-adic valuation of a u64.
pub fn valuation_u64(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n % p == 0 && n > 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Splits `q = r^k` with r prime, if q is a prime power (k >= 1).
pub fn prime_power_split(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factorize_u64(q).ok()?;
    if f.factors().len() == 1 {
        let (p, e) = &f.factors()[0];
        Some((p.to_u64().expect("u64 input has u64 factors"), *e))
    } else {
        None
    }
}

/// All primes up to `bound` inclusive, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i as u64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_identity_case() {
        let f = factorize_u64(1).unwrap();
        assert_eq!(f.value(), &BigUint::one());
        assert!(f.factors().is_empty());
    }

    #[test]
    fn factorize_suzuki_order() {
        // 29120 = 2^6 * 5 * 7 * 13
        let f = factorize_u64(29120).unwrap();
        let got: Vec<(u64, u32)> =
            f.factors().iter().map(|(p, e)| (p.to_u64().unwrap(), *e)).collect();
        assert_eq!(got, vec![(2, 6), (5, 1), (7, 1), (13, 1)]);
    }

    #[test]
    fn factorize_j1_order() {
        // 175560 = 2^3 * 3 * 5 * 7 * 11 * 19
        let f = factorize_u64(175560).unwrap();
        let got: Vec<(u64, u32)> =
            f.factors().iter().map(|(p, e)| (p.to_u64().unwrap(), *e)).collect();
        assert_eq!(got, vec![(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1)]);
    }

    #[test]
    fn factorize_large_with_rho() {
        // A 2^96-scale value with moderate prime factors.
        let n = BigUint::parse_bytes(b"79228162514264337593543950335", 10).unwrap(); // 2^96 - 1
        let f = factorize(&n).unwrap();
        let mut prod = BigUint::one();
        for (p, e) in f.factors() {
            assert!(is_prime(p));
            prod *= p.pow(*e);
        }
        assert_eq!(&prod, f.value());
        assert_eq!(f.value(), &n);
    }

    #[test]
    fn mult_order_examples() {
        assert_eq!(mult_order(4, 3).unwrap(), 1);
        assert_eq!(mult_order(5, 3).unwrap(), 2);
        assert_eq!(mult_order(2, 7).unwrap(), 3);
        assert!(matches!(mult_order(14, 7), Err(ArithError::OrderUndefined { .. })));
        assert!(matches!(mult_order(3, 2), Err(ArithError::OrderEvenPrime(2))));
    }

    #[test]
    fn mult_order_divides_p_minus_1() {
        for p in primes_up_to(200).into_iter().filter(|&p| p > 2) {
            for q in 2..p {
                let d = mult_order(q, p).unwrap();
                assert_eq!((p - 1) % d, 0, "ord_{p}({q}) = {d} must divide p - 1");
            }
        }
    }

    #[test]
    fn p_part_examples() {
        let f = factorize_u64(60).unwrap();
        assert_eq!(f.p_part(5), (BigUint::from(5u32), 1));
        let f = factorize_u64(7920).unwrap();
        assert_eq!(f.p_part(2), (BigUint::from(16u32), 4));
        let f = factorize_u64(48).unwrap();
        assert_eq!(f.p_part(7), (BigUint::one(), 0));
    }

    #[test]
    fn p_part_complement_is_coprime() {
        for n in [60u64, 7920, 29120, 175560, 95040] {
            let f = factorize_u64(n).unwrap();
            for p in [2u64, 3, 5, 7, 11, 13] {
                let (pp, _) = f.p_part(p);
                let rest = f.value() / &pp;
                assert_eq!(&rest * &pp, *f.value());
                assert!(!(&rest % BigUint::from(p)).is_zero() || pp.is_one() && rest.is_one());
            }
        }
    }

    #[test]
    fn prime_power_split_examples() {
        assert_eq!(prime_power_split(9), Some((3, 2)));
        assert_eq!(prime_power_split(12), None);
        assert_eq!(prime_power_split(128), Some((2, 7)));
        assert_eq!(prime_power_split(1), None);
    }

    #[test]
    fn mr_agrees_with_sieve() {
        let primes = primes_up_to(10_000);
        for n in 2..10_000u64 {
            assert_eq!(is_prime_u64(n), primes.binary_search(&n).is_ok(), "n = {n}");
        }
    }

    #[test]
    fn factored_mul_div_roundtrip() {
        let a = factorize_u64(720).unwrap();
        let b = factorize_u64(29120).unwrap();
        let prod = a.mul(&b);
        assert_eq!(prod.value(), &(BigUint::from(720u32) * BigUint::from(29120u32)));
        assert_eq!(prod.div_exact(&b), a);
    }
}
