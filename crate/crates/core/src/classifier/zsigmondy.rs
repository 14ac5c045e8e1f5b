//! Primitive prime divisors of `q^d - 1`.
//!
//! A prime `r` is primitive for `(q, d)` when `r | q^d - 1` and `r` divides no
//! `q^i - 1` with `i < d`, i.e. the multiplicative order of `q` mod `r` is `d`.
//! The definition is applied verbatim for `d = 1` (every prime factor of
//! `q - 1`) and `d = 2` (prime factors of `q + 1` not dividing `q - 1`).

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::arith::{factor, is_prime_power};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZsigmondyResult {
    pub q: u64,
    pub d: u32,
    /// Sorted primitive primes.
    pub primitive_primes: Vec<BigUint>,
    /// Largest divisor of `q^d - 1` built only from primitive primes.
    pub primitive_part: BigUint,
}

impl ZsigmondyResult {
    /// Zsigmondy's exceptions for `d >= 2`: `(2, 6)` and `d = 2` with `q + 1`
    /// a power of two.
    pub fn is_zsigmondy_exception(&self) -> bool {
        (self.q == 2 && self.d == 6) || (self.d == 2 && (self.q + 1).is_power_of_two())
    }
}

fn check_base(q: u64) -> Result<()> {
    if is_prime_power(q).is_none() {
        return Err(Error::InvalidBase(q.to_string()));
    }
    Ok(())
}

/// Least `i` dividing `d` with `q^i = 1 (mod r)`; `r` must divide `q^d - 1`.
fn order_dividing(q: &BigUint, d: u32, r: &BigUint) -> u32 {
    (1..=d)
        .filter(|i| d.is_multiple_of(*i))
        .find(|&i| q.modpow(&BigUint::from(i), r).is_one())
        .expect("r divides q^d - 1")
}

pub fn primitive_prime_divisors(q: u64, d: u32) -> Result<ZsigmondyResult> {
    check_base(q)?;
    if d == 0 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    let qb = BigUint::from(q);
    let value = qb.pow(d) - BigUint::one();
    let mut primes = Vec::new();
    let mut part = BigUint::one();
    for (r, k) in factor(&value)? {
        if order_dividing(&qb, d, &r) == d {
            part *= r.pow(k);
            primes.push(r);
        }
    }
    Ok(ZsigmondyResult {
        q,
        d,
        primitive_primes: primes,
        primitive_part: part,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QdPlusOne {
    pub q: u64,
    pub d: u32,
    /// Primitive primes of `q^(2d) - 1`.
    pub z_primes: Vec<BigUint>,
    /// Some `z_{q,2d}` exists and divides `q^d + 1`.
    pub divides: bool,
}

/// Whether `q^d + 1` is divisible by a primitive prime of `q^(2d) - 1`.
pub fn zsigmondy_divides_qd_plus_1(q: u64, d: u32) -> Result<QdPlusOne> {
    let z = primitive_prime_divisors(q, 2 * d)?;
    let plus = BigUint::from(q).pow(d) + BigUint::one();
    let divides = !z.primitive_primes.is_empty() && z.primitive_primes.iter().all(|r| (&plus % r).is_zero());
    Ok(QdPlusOne {
        q,
        d,
        z_primes: z.primitive_primes,
        divides,
    })
}

/// `r | q^m - 1`.
pub fn divides_q_pow_minus_1(r: &BigUint, q: u64, m: u32) -> bool {
    ((BigUint::from(q).pow(m) - BigUint::one()) % r).is_zero()
}
