//! Named group families realized as permutation groups.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::cycles::parse_cycles;
use super::field::GaloisField;
use crate::classifier::arith::{is_prime, is_prime_power};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Generators of `PSL(3,2)` acting on the seven points of the Fano plane.
pub const PSL3_2_GENERATORS: [&str; 2] = ["(1,2,3,4,5,6,7)", "(1,2)(3,6)"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Alternating(u32),
    Symmetric(u32),
    Cyclic(u32),
    /// Symmetries of the regular `n`-gon, order `2n`.
    Dihedral(u32),
    /// Affine maps `t -> at + b` on `GF(q)`, `a != 0`.
    Agl1(u32),
    /// `PSL(2,q)` on the `q + 1` points of the projective line.
    Psl2(u32),
    /// `SL(2,q)` on the `q^2 - 1` nonzero vectors of `GF(q)^2`.
    Sl2(u32),
    Psl3_2,
    /// `C_q : C_p` as maps `t -> at + b` on `GF(q)` with `a^p = 1`.
    FrobeniusPq {
        p: u32,
        q: u32,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            FamilySpec::Alternating(n) | FamilySpec::Symmetric(n) | FamilySpec::Cyclic(n) | FamilySpec::Dihedral(n)
                if n == 0 =>
            {
                bad(format!("{self:?}: parameter must be positive"))
            }
            FamilySpec::Agl1(q) | FamilySpec::Sl2(q) if is_prime_power(q as u64).is_none() => {
                bad(format!("{q} is not a prime power"))
            }
            FamilySpec::Psl2(q) if is_prime_power(q as u64).is_none() || q < 4 => {
                bad(format!("psl2 needs a prime power q >= 4, got {q}"))
            }
            FamilySpec::FrobeniusPq { p, q } => {
                if !is_prime(p as u64) || !is_prime(q as u64) {
                    bad(format!("frobenius_pq needs primes, got ({p}, {q})"))
                } else if (q - 1) % p != 0 {
                    bad(format!("{p} does not divide {q} - 1"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Closed-form group order.
    pub fn expected_order(&self) -> u128 {
        let fact = |n: u32| (1..=n as u128).product::<u128>();
        match *self {
            FamilySpec::Alternating(n) => {
                if n < 2 {
                    1
                } else {
                    fact(n) / 2
                }
            }
            FamilySpec::Symmetric(n) => fact(n),
            FamilySpec::Cyclic(n) => n as u128,
            FamilySpec::Dihedral(n) => {
                if n == 1 {
                    2
                } else {
                    2 * n as u128
                }
            }
            FamilySpec::Agl1(q) => q as u128 * (q as u128 - 1),
            FamilySpec::Psl2(q) => {
                let q = q as u128;
                q * (q * q - 1) / (q - 1).gcd(&2)
            }
            FamilySpec::Sl2(q) => {
                let q = q as u128;
                q * (q * q - 1)
            }
            FamilySpec::Psl3_2 => 168,
            FamilySpec::FrobeniusPq { p, q } => p as u128 * q as u128,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            FamilySpec::Alternating(n) => format!("A{n}"),
            FamilySpec::Symmetric(n) => format!("S{n}"),
            FamilySpec::Cyclic(n) => format!("C{n}"),
            FamilySpec::Dihedral(_) => format!("D{}", self.expected_order()),
            FamilySpec::Agl1(q) => format!("AGL(1,{q})"),
            FamilySpec::Psl2(q) => format!("PSL(2,{q})"),
            FamilySpec::Sl2(q) => format!("SL(2,{q})"),
            FamilySpec::Psl3_2 => "PSL(3,2)".to_string(),
            FamilySpec::FrobeniusPq { p, q } => format!("C{q}:C{p}"),
        }
    }

    /// Field model used, when the family is built over `GF(q)`.
    pub fn field_model(&self) -> Option<String> {
        match *self {
            FamilySpec::Agl1(q) | FamilySpec::Psl2(q) | FamilySpec::Sl2(q) | FamilySpec::FrobeniusPq { q, .. } => {
                GaloisField::new(q)
                    .ok()
                    .map(|f| format!("GF({q}) = F_{}[x]/({})", f.characteristic(), f.modulus_string()))
            }
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Alternating(n) => write!(f, "alternating:{n}"),
            FamilySpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            FamilySpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            FamilySpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            FamilySpec::Agl1(q) => write!(f, "agl1:{q}"),
            FamilySpec::Psl2(q) => write!(f, "psl2:{q}"),
            FamilySpec::Sl2(q) => write!(f, "sl2:{q}"),
            FamilySpec::Psl3_2 => write!(f, "psl3_2"),
            FamilySpec::FrobeniusPq { p, q } => write!(f, "frobenius_pq:{p},{q}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `family:params` such as `a:5`, `psl2:7`, `frobenius_pq:11,23`, `psl3_2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<u32> = if params.trim().is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidParameter(format!("bad parameter {t:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        let one = || match nums.as_slice() {
            [n] => Ok(*n),
            _ => Err(Error::InvalidParameter(format!("{s:?} needs exactly one parameter"))),
        };
        let spec = match name.to_ascii_lowercase().as_str() {
            "a" | "alt" | "alternating" => FamilySpec::Alternating(one()?),
            "s" | "sym" | "symmetric" => FamilySpec::Symmetric(one()?),
            "c" | "cyclic" => FamilySpec::Cyclic(one()?),
            "d" | "dihedral" => FamilySpec::Dihedral(one()?),
            "agl1" => FamilySpec::Agl1(one()?),
            "psl2" => FamilySpec::Psl2(one()?),
            "sl2" => FamilySpec::Sl2(one()?),
            "psl3_2" if nums.is_empty() => FamilySpec::Psl3_2,
            "frobenius_pq" | "frob" => match nums.as_slice() {
                [p, q] => FamilySpec::FrobeniusPq { p: *p, q: *q },
                _ => return Err(Error::InvalidParameter(format!("{s:?} needs p,q"))),
            },
            _ => return Err(Error::InvalidParameter(format!("unknown family {s:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn perm_from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Permutation {
    Permutation::from_images((0..degree).map(|i| f(i) as u32).collect()).expect("family generator is a bijection")
}

pub fn make_family(spec: FamilySpec) -> Result<PermGroup> {
    spec.validate()?;
    match spec {
        FamilySpec::Symmetric(n) => {
            let n = n as usize;
            if n == 1 {
                return Ok(PermGroup::trivial(1));
            }
            PermGroup::new(
                n,
                vec![
                    perm_from_fn(n, |i| (i + 1) % n),
                    perm_from_fn(n, |i| match i {
                        0 => 1,
                        1 => 0,
                        _ => i,
                    }),
                ],
            )
        }
        FamilySpec::Alternating(n) => {
            let n = n as usize;
            let gens = (2..n)
                .map(|k| {
                    perm_from_fn(n, |i| match i {
                        0 => 1,
                        1 => k,
                        _ if i == k => 0,
                        _ => i,
                    })
                })
                .collect();
            PermGroup::new(n, gens)
        }
        FamilySpec::Cyclic(n) => {
            let n = n as usize;
            PermGroup::new(n, vec![perm_from_fn(n, |i| (i + 1) % n)])
        }
        FamilySpec::Dihedral(n) => {
            let n = n as usize;
            match n {
                1 => PermGroup::new(2, vec![perm_from_fn(2, |i| 1 - i)]),
                2 => PermGroup::new(4, vec![perm_from_fn(4, |i| i ^ 1), perm_from_fn(4, |i| i ^ 2)]),
                _ => PermGroup::new(
                    n,
                    vec![perm_from_fn(n, |i| (i + 1) % n), perm_from_fn(n, |i| (n - i) % n)],
                ),
            }
        }
        FamilySpec::Agl1(q) => {
            let f = GaloisField::new(q)?;
            let lambda = f.primitive_element();
            let mut gens: Vec<Permutation> = f
                .additive_basis()
                .into_iter()
                .map(|b| perm_from_fn(q as usize, |t| f.add(t as u32, b) as usize))
                .collect();
            gens.push(perm_from_fn(q as usize, |t| f.mul(t as u32, lambda) as usize));
            PermGroup::new(q as usize, gens)
        }
        FamilySpec::FrobeniusPq { p, q } => {
            let f = GaloisField::new(q)?;
            let a = f.pow(f.primitive_element(), ((q - 1) / p) as u64);
            PermGroup::new(
                q as usize,
                vec![
                    perm_from_fn(q as usize, |t| f.add(t as u32, 1) as usize),
                    perm_from_fn(q as usize, |t| f.mul(t as u32, a) as usize),
                ],
            )
        }
        FamilySpec::Psl2(q) => {
            let f = GaloisField::new(q)?;
            let inf = q as usize;
            let degree = inf + 1;
            let lambda = f.primitive_element();
            let square = f.mul(lambda, lambda);
            let mut gens: Vec<Permutation> = f
                .additive_basis()
                .into_iter()
                .map(|b| perm_from_fn(degree, |t| if t == inf { inf } else { f.add(t as u32, b) as usize }))
                .collect();
            gens.push(perm_from_fn(degree, |t| {
                if t == inf {
                    inf
                } else {
                    f.mul(t as u32, square) as usize
                }
            }));
            // t -> -1/t, exchanging 0 and infinity.
            gens.push(perm_from_fn(degree, |t| {
                if t == inf {
                    0
                } else if t == 0 {
                    inf
                } else {
                    f.neg(f.inv(t as u32)) as usize
                }
            }));
            PermGroup::new(degree, gens)
        }
        FamilySpec::Sl2(q) => {
            let f = GaloisField::new(q)?;
            let qs = q as usize;
            let degree = qs * qs - 1;
            // Nonzero vector (a, b) is point a*q + b - 1; matrices act on row vectors.
            let point = |a: u32, b: u32| (a as usize) * qs + b as usize - 1;
            let coords = |i: usize| (((i + 1) / qs) as u32, ((i + 1) % qs) as u32);
            let mut gens = Vec::new();
            for c in f.additive_basis() {
                // (a, b) [[1, c], [0, 1]] = (a, ac + b)
                gens.push(perm_from_fn(degree, |i| {
                    let (a, b) = coords(i);
                    point(a, f.add(f.mul(a, c), b))
                }));
                // (a, b) [[1, 0], [c, 1]] = (a + bc, b)
                gens.push(perm_from_fn(degree, |i| {
                    let (a, b) = coords(i);
                    point(f.add(a, f.mul(b, c)), b)
                }));
            }
            PermGroup::new(degree, gens)
        }
        FamilySpec::Psl3_2 => {
            let gens = PSL3_2_GENERATORS
                .iter()
                .map(|g| parse_cycles(g, 7))
                .collect::<Result<Vec<_>>>()?;
            PermGroup::new(7, gens)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_formulas() {
        let specs = [
            FamilySpec::Alternating(5),
            FamilySpec::Alternating(1),
            FamilySpec::Symmetric(4),
            FamilySpec::Symmetric(1),
            FamilySpec::Cyclic(12),
            FamilySpec::Dihedral(1),
            FamilySpec::Dihedral(2),
            FamilySpec::Dihedral(7),
            FamilySpec::Agl1(7),
            FamilySpec::Agl1(8),
            FamilySpec::Psl2(4),
            FamilySpec::Psl2(7),
            FamilySpec::Psl2(8),
            FamilySpec::Psl2(9),
            FamilySpec::Sl2(5),
            FamilySpec::Sl2(4),
            FamilySpec::Psl3_2,
            FamilySpec::FrobeniusPq { p: 11, q: 23 },
        ];
        for s in specs {
            let g = make_family(s).unwrap();
            assert_eq!(g.order(), s.expected_order(), "{s}");
        }
        assert_eq!(make_family(FamilySpec::Psl2(4)).unwrap().degree(), 5);
        assert_eq!(make_family(FamilySpec::Psl2(7)).unwrap().degree(), 8);
        assert_eq!(
            make_family(FamilySpec::FrobeniusPq { p: 11, q: 23 }).unwrap().order(),
            253
        );
    }

    #[test]
    fn parses_family_strings() {
        assert_eq!("psl2:7".parse::<FamilySpec>().unwrap(), FamilySpec::Psl2(7));
        assert_eq!("a:5".parse::<FamilySpec>().unwrap(), FamilySpec::Alternating(5));
        assert_eq!("psl3_2".parse::<FamilySpec>().unwrap(), FamilySpec::Psl3_2);
        assert_eq!(
            "frobenius_pq:11,23".parse::<FamilySpec>().unwrap(),
            FamilySpec::FrobeniusPq { p: 11, q: 23 }
        );
        let round = FamilySpec::Psl2(9).to_string().parse::<FamilySpec>().unwrap();
        assert_eq!(round, FamilySpec::Psl2(9));
    }

    #[test]
    fn invalid_parameters() {
        assert!("psl2:6".parse::<FamilySpec>().is_err());
        assert!("psl2:3".parse::<FamilySpec>().is_err());
        assert!("frobenius_pq:3,23".parse::<FamilySpec>().is_err());
        assert!("frobenius_pq:11,22".parse::<FamilySpec>().is_err());
        assert!("s:0".parse::<FamilySpec>().is_err());
        assert!("q:3".parse::<FamilySpec>().is_err());
        assert!(make_family(FamilySpec::Agl1(6)).is_err());
    }
}
