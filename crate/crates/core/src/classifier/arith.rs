//! Primality, prime powers and integer factorization.
//!
//! Primality verdicts are deterministic: Miller-Rabin with the first thirteen
//! prime bases is exact below `MR_DETERMINISTIC_BOUND` (Sorenson-Webster).
//! Above that bound a number that passes every base is reported as an error
//! instead of "probably prime".

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// 3317044064679887385961981: every odd composite below it fails Miller-Rabin
/// for one of the bases 2, 3, ..., 41.
pub const MR_DETERMINISTIC_BOUND: u128 = 3_317_044_064_679_887_385_961_981;

const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, a, m);
        }
        a = mul_mod_u64(a, a, m);
        e >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Strong probable-prime test to all thirteen bases.
fn passes_miller_rabin(n: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for &a in &MR_BASES {
        let a = BigUint::from(a);
        if &a % n == BigUint::zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Certified primality for arbitrary-size input; errors when the input is
/// beyond the deterministic range and not refuted by any base.
pub fn is_prime_big(n: &BigUint) -> Result<bool> {
    if let Some(small) = n.to_u64() {
        return Ok(is_prime(small));
    }
    if n.is_even() {
        return Ok(false);
    }
    for &p in &MR_BASES {
        if (n % p).is_zero() {
            return Ok(false);
        }
    }
    let passes = passes_miller_rabin(n);
    if !passes {
        return Ok(false);
    }
    if n < &BigUint::from(MR_DETERMINISTIC_BOUND) {
        Ok(true)
    } else {
        Err(Error::PrimalityOutOfRange(n.to_string()))
    }
}

/// `Some((p, k))` with `m = p^k`, `k >= 1`.
pub fn is_prime_power(m: u64) -> Option<(u64, u32)> {
    if m < 2 {
        return None;
    }
    let p = smallest_prime_factor(m);
    let mut k = 0;
    let mut r = m;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

fn smallest_prime_factor(m: u64) -> u64 {
    if m.is_multiple_of(2) {
        return 2;
    }
    if is_prime(m) {
        return m;
    }
    let mut f = factor_u64(m);
    f.sort_unstable();
    f[0]
}

fn is_power_of_two(m: u64) -> bool {
    m != 0 && m & (m - 1) == 0
}

/// Prime `m` with `m - 1` a power of two.
pub fn is_fermat_prime(m: u64) -> bool {
    m >= 2 && is_power_of_two(m - 1) && is_prime(m)
}

/// Prime `m` with `m + 1` a power of two.
pub fn is_mersenne_prime(m: u64) -> bool {
    is_power_of_two(m + 1) && is_prime(m)
}

fn pollard_brent_u64(n: u64, c: u64) -> Option<u64> {
    let f = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
    let (mut y, mut r, m) = (2u64, 1u64, 128u64);
    let (mut g, mut q, mut x, mut ys) = (1u64, 1u64, 0u64, 0u64);
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = f(y);
                q = mul_mod_u64(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += m;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

/// Prime factors of `n` with multiplicity (unsorted).
fn factor_u64(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if let Some(p) = [2u64, 3, 5, 7, 11, 13].into_iter().find(|p| m % p == 0) {
            out.push(p);
            stack.push(m / p);
            continue;
        }
        if is_prime(m) {
            out.push(m);
            continue;
        }
        let d = (1..).find_map(|c| pollard_brent_u64(m, c)).unwrap();
        stack.push(d);
        stack.push(m / d);
    }
    out
}

fn pollard_brent_big(n: &BigUint, c: u64) -> Option<BigUint> {
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let one = BigUint::one();
    let mut y = BigUint::from(2u32);
    let mut r: u64 = 1;
    let m: u64 = 128;
    let mut g = one.clone();
    let mut q = one.clone();
    let mut x = BigUint::zero();
    let mut ys = BigUint::zero();
    let absdiff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                q = (&q * absdiff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = absdiff(&x, &ys).gcd(n);
            if g > one {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}

/// Factorization as sorted `(prime, exponent)` pairs. `factor(1)` is empty.
pub fn factor(n: &BigUint) -> Result<Vec<(BigUint, u32)>> {
    if n.is_zero() {
        return Err(Error::InvalidParameter("cannot factor 0".into()));
    }
    let mut primes: Vec<BigUint> = Vec::new();
    let mut rest = n.clone();
    for p in 2u32..1000 {
        while (&rest % p).is_zero() {
            primes.push(BigUint::from(p));
            rest /= p;
        }
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(small) = m.to_u64() {
            primes.extend(factor_u64(small).into_iter().map(BigUint::from));
            continue;
        }
        let prime = match is_prime_big(&m) {
            Ok(v) => v,
            Err(e) => {
                // Beyond the certified range: only proceed if rho splits it.
                match (1..=8).find_map(|c| pollard_brent_big(&m, c)) {
                    Some(d) => {
                        stack.push(&m / &d);
                        stack.push(d);
                        continue;
                    }
                    None => return Err(e),
                }
            }
        };
        if prime {
            primes.push(m);
            continue;
        }
        let d = (1..).find_map(|c| pollard_brent_big(&m, c)).unwrap();
        stack.push(&m / &d);
        stack.push(d);
    }
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, k)) if *q == p => *k += 1,
            _ => out.push((p, 1)),
        }
    }
    Ok(out)
}

pub fn factor_u64_sorted(n: u64) -> Vec<(u64, u32)> {
    factor(&BigUint::from(n))
        .expect("u64 factorization is always certified")
        .into_iter()
        .map(|(p, k)| (p.to_u64().unwrap(), k))
        .collect()
}

/// Multiplicative order of `a` modulo a prime `r` not dividing `a`.
pub fn multiplicative_order_mod_prime(a: &BigUint, r: &BigUint) -> Result<BigUint> {
    let one = BigUint::one();
    if (a % r).is_zero() {
        return Err(Error::InvalidParameter(format!("{r} divides {a}")));
    }
    let mut order = r - &one;
    for (p, _) in factor(&order)? {
        while (&order % &p).is_zero() && a.modpow(&(&order / &p), r).is_one() {
            order /= &p;
        }
    }
    Ok(order)
}
