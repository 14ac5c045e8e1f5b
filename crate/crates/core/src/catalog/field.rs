//! Small finite fields `GF(p^n)` with table-driven arithmetic.
//!
//! An element is encoded as the integer `sum c_i p^i`, where `c_i` is the
//! coefficient of `a^i` and `a` is a root of the defining polynomial. The
//! defining polynomial is the least monic irreducible of degree `n`, ordering
//! monic polynomials by the encoding of their lower coefficients.

use crate::classifier::arith::is_prime_power;
use crate::error::{Error, Result};

/// Largest field order accepted; tables are `q^2` entries.
pub const MAX_FIELD_ORDER: u32 = 1 << 12;

#[derive(Debug, Clone)]
pub struct GaloisField {
    p: u32,
    n: u32,
    q: u32,
    /// Coefficients `c_0..c_{n-1}` of `x^n + c_{n-1} x^{n-1} + ... + c_0`.
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

fn digits(mut v: u32, p: u32, n: u32) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `f` modulo monic `g` over `F_p` (coefficients low to high).
fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for (i, &c) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = f.len() as u32 - 1;
    for d in 1..=n / 2 {
        for low in 0..p.pow(d) {
            let mut g = digits(low, p, d);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl GaloisField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, n) =
            is_prime_power(q as u64).ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::InvalidParameter(format!(
                "field order {q} exceeds {MAX_FIELD_ORDER}"
            )));
        }
        let (p, n) = (p as u32, n);
        let modulus = if n == 1 {
            vec![0]
        } else {
            (0..q)
                .map(|low| {
                    let mut f = digits(low, p, n);
                    f.push(1);
                    f
                })
                .find(|f| is_irreducible(f, p))
                .map(|mut f| {
                    f.pop();
                    f
                })
                .expect("an irreducible polynomial of every degree exists")
        };
        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        let mut full_mod = modulus.clone();
        full_mod.push(1);
        for a in 0..q {
            let da = digits(a, p, n);
            for b in 0..q {
                let db = digits(b, p, n);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&sum, p);
                let mut prod = vec![0u32; (2 * n - 1) as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = if n == 1 { prod } else { poly_rem(&prod, &full_mod, p) };
                r.resize(n as usize, 0);
                mul[(a * q + b) as usize] = undigits(&r, p);
            }
        }
        let mut neg = vec![0; qs];
        let mut inv = vec![0; qs];
        for a in 0..q {
            for b in 0..q {
                if add[(a * q + b) as usize] == 0 {
                    neg[a as usize] = b;
                }
                if mul[(a * q + b) as usize] == 1 {
                    inv[a as usize] = b;
                }
            }
        }
        let modulus = if n == 1 { Vec::new() } else { modulus };
        Ok(GaloisField {
            p,
            n,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Human-readable defining polynomial, e.g. `x^3 + x + 1`; `x` for prime fields.
    pub fn modulus_string(&self) -> String {
        if self.n == 1 {
            return "x".to_string();
        }
        let mut terms = vec![format!("x^{}", self.n)];
        for i in (0..self.n as usize).rev() {
            let c = self.modulus[i];
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            terms.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}{mono}"),
            });
        }
        terms.join(" + ")
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    /// Multiplicative inverse; `inv(0)` is 0.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn multiplicative_order(&self, a: u32) -> u64 {
        assert_ne!(a, 0);
        let mut k = 1;
        let mut x = a;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least generator of the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        (1..self.q)
            .find(|&a| self.multiplicative_order(a) == (self.q - 1) as u64)
            .expect("multiplicative group is cyclic")
    }

    /// Additive basis `1, a, a^2, ...` as encodings `p^i`.
    pub fn additive_basis(&self) -> Vec<u32> {
        (0..self.n).map(|i| self.p.pow(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = GaloisField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1, "q={q} a={a}");
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)), "q={q}");
                    }
                }
            }
            assert_eq!(f.multiplicative_order(f.primitive_element()), (q - 1) as u64);
        }
    }

    #[test]
    fn least_irreducible_moduli() {
        assert_eq!(GaloisField::new(4).unwrap().modulus_string(), "x^2 + x + 1");
        assert_eq!(GaloisField::new(8).unwrap().modulus_string(), "x^3 + x + 1");
        assert_eq!(GaloisField::new(9).unwrap().modulus_string(), "x^2 + 1");
        assert_eq!(GaloisField::new(16).unwrap().modulus_string(), "x^4 + x + 1");
        assert_eq!(GaloisField::new(7).unwrap().modulus_string(), "x");
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(GaloisField::new(6).is_err());
        assert!(GaloisField::new(1).is_err());
    }
}
