//! Simple groups with a maximal subgroup of order `pq`, enumerated from the
//! arithmetic conditions on their parameters, and the sub-list in which that
//! subgroup is a solubilizer.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::arith::{is_fermat_prime, is_mersenne_prime, is_prime, is_prime_power};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowFamily {
    Psl2Fermat,
    Psl2Mersenne,
    Psl2Cpct,
    Psl2DihedralPlus,
    Psl2DihedralMinus,
    PslD,
    PsuD,
    Suzuki,
    M23,
    BabyMonster,
    Monster,
}

impl RowFamily {
    pub const ALL: [RowFamily; 11] = [
        RowFamily::Psl2Fermat,
        RowFamily::Psl2Mersenne,
        RowFamily::Psl2Cpct,
        RowFamily::Psl2DihedralPlus,
        RowFamily::Psl2DihedralMinus,
        RowFamily::PslD,
        RowFamily::PsuD,
        RowFamily::Suzuki,
        RowFamily::M23,
        RowFamily::BabyMonster,
        RowFamily::Monster,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RowFamily::Psl2Fermat => "psl2_fermat",
            RowFamily::Psl2Mersenne => "psl2_mersenne",
            RowFamily::Psl2Cpct => "psl2_cpct",
            RowFamily::Psl2DihedralPlus => "psl2_dihedral_plus",
            RowFamily::Psl2DihedralMinus => "psl2_dihedral_minus",
            RowFamily::PslD => "psl_d",
            RowFamily::PsuD => "psu_d",
            RowFamily::Suzuki => "suzuki",
            RowFamily::M23 => "m23",
            RowFamily::BabyMonster => "baby_monster",
            RowFamily::Monster => "monster",
        }
    }

    pub fn is_sporadic(self) -> bool {
        matches!(self, RowFamily::M23 | RowFamily::BabyMonster | RowFamily::Monster)
    }
}

impl fmt::Display for RowFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RowFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RowFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown row family {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MaximalStructure {
    /// `D_2q`.
    Dihedral { q: u64 },
    /// `C_q : C_p`.
    Metacyclic { q: u64, p: u64 },
}

impl fmt::Display for MaximalStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaximalStructure::Dihedral { q } => write!(f, "D_{}", 2 * q),
            MaximalStructure::Metacyclic { q, p } => write!(f, "C_{q}:C_{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifierRow {
    pub family: RowFamily,
    /// Order of the defining field (`None` for sporadic rows).
    pub r: Option<u64>,
    /// Characteristic and exponent with `r = char^n`.
    pub characteristic: Option<u64>,
    pub n: Option<u32>,
    /// Dimension for the linear and unitary families.
    pub d: Option<u32>,
    pub q_prime: u64,
    pub p_prime: u64,
    pub maximal_structure: MaximalStructure,
    pub in_theorem44: bool,
    /// Known disagreements between the row's conditions and subgroup data.
    pub flags: Vec<String>,
}

impl ClassifierRow {
    fn field_row(family: RowFamily, r: u64, d: Option<u32>, q: u64, p: u64, structure: MaximalStructure) -> Self {
        let (characteristic, n) = is_prime_power(r).expect("field orders are prime powers");
        ClassifierRow {
            family,
            r: Some(r),
            characteristic: Some(characteristic),
            n: Some(n),
            d,
            q_prime: q,
            p_prime: p,
            maximal_structure: structure,
            in_theorem44: false,
            flags: Vec::new(),
        }
    }

    fn sporadic(family: RowFamily, q: u64, p: u64) -> Self {
        ClassifierRow {
            family,
            r: None,
            characteristic: None,
            n: None,
            d: None,
            q_prime: q,
            p_prime: p,
            maximal_structure: MaximalStructure::Metacyclic { q, p },
            in_theorem44: false,
            flags: Vec::new(),
        }
    }

    /// Name of the simple group, e.g. `PSL(2,16)` or `M23`.
    pub fn group_name(&self) -> String {
        let r = self.r.unwrap_or(0);
        let d = self.d.unwrap_or(2);
        match self.family {
            RowFamily::Psl2Fermat
            | RowFamily::Psl2Mersenne
            | RowFamily::Psl2Cpct
            | RowFamily::Psl2DihedralPlus
            | RowFamily::Psl2DihedralMinus => format!("PSL(2,{r})"),
            RowFamily::PslD => format!("PSL({d},{r})"),
            RowFamily::PsuD => format!("PSU({d},{r})"),
            RowFamily::Suzuki => format!("Sz({r})"),
            RowFamily::M23 => "M23".into(),
            RowFamily::BabyMonster => "B".into(),
            RowFamily::Monster => "M".into(),
        }
    }

    /// `(family, d, r, p, q)` with absent parameters as 0; the identity of a row.
    pub fn key(&self) -> (RowFamily, u32, u64, u64, u64) {
        (
            self.family,
            self.d.unwrap_or(0),
            self.r.unwrap_or(0),
            self.p_prime,
            self.q_prime,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_r: u64,
    pub max_d: u32,
    pub max_q: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_r: 32,
            max_d: 5,
            max_q: 1_000_000,
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `(r^d - eta) / ((r - eta) * gcd(r - eta, d))` for `eta = 1` (linear) or
/// `eta = -1` (unitary); `None` on overflow or a non-integral quotient.
fn torus_prime(r: u64, d: u32, unitary: bool) -> Option<u64> {
    let rd = (r as u128).checked_pow(d)?;
    let (num, base) = if unitary {
        (rd.checked_add(1)?, r as u128 + 1)
    } else {
        (rd - 1, r as u128 - 1)
    };
    let den = base * gcd(base as u64, d as u64) as u128;
    (num % den == 0).then(|| num / den).and_then(|v| u64::try_from(v).ok())
}

/// A proper subfield `GF(s)` of `GF(r)` with `q` dividing `|PSL(d, s)|`, which
/// places a `C_q` inside a subfield subgroup.
fn subfield_witness(r: u64, d: u32, q: u64) -> Option<u64> {
    let (p, n) = is_prime_power(r)?;
    (1..n).filter(|m| n % m == 0).map(|m| p.pow(m)).find(|&s| {
        (2..=d).any(|i| {
            let mut acc = 1u64;
            for _ in 0..i {
                acc = acc * (s % q) % q;
            }
            acc == 1
        })
    })
}

fn in_bounds(q: u64, b: &Bounds) -> bool {
    q <= b.max_q && is_prime(q)
}

/// Every row whose parameters satisfy the family conditions within `bounds`,
/// ordered by family and then by `(d, r)`.
pub fn table2_enumerate(bounds: &Bounds) -> Vec<ClassifierRow> {
    let mut rows = Vec::new();
    let field_orders: Vec<u64> = (2..=bounds.max_r).filter(|&r| is_prime_power(r).is_some()).collect();

    for &r in &field_orders {
        if !r.is_power_of_two() || r < 4 {
            continue;
        }
        if is_fermat_prime(r + 1) && in_bounds(r + 1, bounds) {
            rows.push(ClassifierRow::field_row(
                RowFamily::Psl2Fermat,
                r,
                None,
                r + 1,
                2,
                MaximalStructure::Dihedral { q: r + 1 },
            ));
        }
    }
    for &r in &field_orders {
        if r.is_power_of_two() && r >= 4 && is_mersenne_prime(r - 1) && in_bounds(r - 1, bounds) {
            rows.push(ClassifierRow::field_row(
                RowFamily::Psl2Mersenne,
                r,
                None,
                r - 1,
                2,
                MaximalStructure::Dihedral { q: r - 1 },
            ));
        }
    }
    for &r in &field_orders {
        if r >= 5 && r % 2 == 1 && is_prime(r) && is_prime((r - 1) / 2) && in_bounds(r, bounds) {
            let t = (r - 1) / 2;
            rows.push(ClassifierRow::field_row(
                RowFamily::Psl2Cpct,
                r,
                None,
                r,
                t,
                MaximalStructure::Metacyclic { q: r, p: t },
            ));
        }
    }
    for &r in &field_orders {
        let q = r.div_ceil(2);
        if r >= 5 && r % 2 == 1 && r != 7 && r != 9 && in_bounds(q, bounds) {
            rows.push(ClassifierRow::field_row(
                RowFamily::Psl2DihedralPlus,
                r,
                None,
                q,
                2,
                MaximalStructure::Dihedral { q },
            ));
        }
    }
    for &r in &field_orders {
        let q = (r.saturating_sub(1)) / 2;
        if r >= 13 && r % 2 == 1 && in_bounds(q, bounds) {
            rows.push(ClassifierRow::field_row(
                RowFamily::Psl2DihedralMinus,
                r,
                None,
                q,
                2,
                MaximalStructure::Dihedral { q },
            ));
        }
    }
    for (family, unitary) in [(RowFamily::PslD, false), (RowFamily::PsuD, true)] {
        for d in (3..=bounds.max_d).filter(|&d| is_prime(d as u64)) {
            for &r in &field_orders {
                if unitary && (d, r) == (3, 5) {
                    continue;
                }
                let Some(q) = torus_prime(r, d, unitary) else {
                    continue;
                };
                if in_bounds(q, bounds) && q % d as u64 == 1 {
                    let mut row = ClassifierRow::field_row(
                        family,
                        r,
                        Some(d),
                        q,
                        d as u64,
                        MaximalStructure::Metacyclic { q, p: d as u64 },
                    );
                    if !unitary {
                        if let Some(s) = subfield_witness(r, d, q) {
                            row.flags.push(format!(
                                "{q} divides |PSL({d},{s})|, so C_{q} also lies in a subfield subgroup"
                            ));
                        }
                    } else if (d, r) == (3, 3) {
                        row.flags
                            .push("7:3 lies inside a maximal PSL(2,7) of PSU(3,3), so it is not itself maximal".into());
                    }
                    rows.push(row);
                }
            }
        }
    }
    for &r in &field_orders {
        let n = r.trailing_zeros();
        if r.is_power_of_two() && n % 2 == 1 && n >= 5 && is_mersenne_prime(r - 1) && in_bounds(r - 1, bounds) {
            rows.push(ClassifierRow::field_row(
                RowFamily::Suzuki,
                r,
                None,
                r - 1,
                2,
                MaximalStructure::Dihedral { q: r - 1 },
            ));
        }
    }
    rows.push(ClassifierRow::sporadic(RowFamily::M23, 23, 11));
    rows.push(ClassifierRow::sporadic(RowFamily::BabyMonster, 47, 23));
    rows.push(ClassifierRow::sporadic(RowFamily::Monster, 59, 29));

    for row in &mut rows {
        row.in_theorem44 = survives_theorem44(row);
    }
    rows
}

fn survives_theorem44(row: &ClassifierRow) -> bool {
    match row.family {
        RowFamily::Psl2Fermat | RowFamily::Psl2Cpct | RowFamily::PslD | RowFamily::PsuD => true,
        RowFamily::Psl2DihedralPlus => row.q_prime >= 7,
        RowFamily::Psl2Mersenne | RowFamily::Psl2DihedralMinus | RowFamily::Suzuki => false,
        RowFamily::M23 | RowFamily::BabyMonster | RowFamily::Monster => true,
    }
}

/// Rows of [`table2_enumerate`] in which the maximal subgroup is a solubilizer.
pub fn theorem44_enumerate(bounds: &Bounds) -> Vec<ClassifierRow> {
    table2_enumerate(bounds)
        .into_iter()
        .filter(|r| r.in_theorem44)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn keys(rows: &[ClassifierRow], family: RowFamily) -> Vec<(u32, u64, u64)> {
        rows.iter()
            .filter(|r| r.family == family)
            .map(|r| (r.d.unwrap_or(0), r.r.unwrap_or(0), r.q_prime))
            .collect()
    }

    #[test]
    fn psl2_families_at_default_bounds() {
        let rows = table2_enumerate(&Bounds::default());
        assert_eq!(keys(&rows, RowFamily::Psl2Fermat), vec![(0, 4, 5), (0, 16, 17)]);
        assert_eq!(
            keys(&rows, RowFamily::Psl2Mersenne),
            vec![(0, 4, 3), (0, 8, 7), (0, 32, 31)]
        );
        assert_eq!(
            keys(&rows, RowFamily::Psl2Cpct),
            vec![(0, 5, 5), (0, 7, 7), (0, 11, 11), (0, 23, 23)]
        );
        assert_eq!(
            keys(&rows, RowFamily::Psl2DihedralPlus),
            vec![(0, 5, 3), (0, 13, 7), (0, 25, 13)]
        );
        assert_eq!(
            keys(&rows, RowFamily::Psl2DihedralMinus),
            vec![(0, 23, 11), (0, 27, 13)]
        );
        assert_eq!(keys(&rows, RowFamily::Suzuki), vec![(0, 32, 31)]);
    }

    #[test]
    fn linear_and_unitary_rows() {
        let rows = table2_enumerate(&Bounds::default());
        let psl = keys(&rows, RowFamily::PslD);
        for k in [(3, 2, 7), (3, 3, 13), (3, 4, 7), (5, 2, 31)] {
            assert!(psl.contains(&k), "{k:?}");
        }
        let psu = keys(&rows, RowFamily::PsuD);
        assert!(psu.contains(&(3, 3, 7)));
        assert!(!psu.iter().any(|&(d, r, _)| (d, r) == (3, 5)));
        let psu33 = rows
            .iter()
            .find(|r| r.family == RowFamily::PsuD && r.r == Some(3) && r.d == Some(3))
            .unwrap();
        assert!(!psu33.flags.is_empty());
        let psl34 = rows
            .iter()
            .find(|r| r.family == RowFamily::PslD && r.r == Some(4) && r.d == Some(3))
            .unwrap();
        assert!(!psl34.flags.is_empty());
        let psl32 = rows
            .iter()
            .find(|r| r.family == RowFamily::PslD && r.r == Some(2) && r.d == Some(3))
            .unwrap();
        assert!(psl32.flags.is_empty());
    }

    #[test]
    fn theorem44_filter() {
        let b = Bounds::default();
        let all = table2_enumerate(&b);
        let kept = theorem44_enumerate(&b);
        assert!(kept.iter().all(|r| all.contains(r)));
        assert!(!kept.iter().any(|r| matches!(
            r.family,
            RowFamily::Suzuki | RowFamily::Psl2Mersenne | RowFamily::Psl2DihedralMinus
        )));
        assert!(!kept
            .iter()
            .any(|r| r.family == RowFamily::Psl2DihedralPlus && r.r == Some(5)));
        assert_eq!(kept.iter().filter(|r| r.family.is_sporadic()).count(), 3);
        for r in &kept {
            assert_eq!((r.q_prime - 1) % r.p_prime, 0, "{r:?}");
            assert!(is_prime(r.p_prime) && is_prime(r.q_prime) && r.p_prime <= r.q_prime);
        }
    }

    #[test]
    fn enumeration_is_monotone_in_bounds() {
        let small = table2_enumerate(&Bounds {
            max_r: 16,
            max_d: 3,
            max_q: 1000,
        });
        let large = table2_enumerate(&Bounds::default());
        for r in &small {
            assert!(large.iter().any(|l| l.key() == r.key()), "{r:?}");
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in RowFamily::ALL {
            assert_eq!(f.name().parse::<RowFamily>().unwrap(), f);
        }
        assert_eq!(MaximalStructure::Dihedral { q: 7 }.to_string(), "D_14");
        assert_eq!(MaximalStructure::Metacyclic { q: 7, p: 3 }.to_string(), "C_7:C_3");
    }
}
