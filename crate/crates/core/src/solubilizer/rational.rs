use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalValue(BigRational);

impl RationalValue {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Self {
        RationalValue(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        RationalValue(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        RationalValue(BigRational::zero())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.denom().is_one()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl std::ops::Add for RationalValue {
    type Output = RationalValue;

    fn add(self, rhs: RationalValue) -> RationalValue {
        RationalValue(self.0 + rhs.0)
    }
}

impl std::ops::Mul<&BigInt> for &RationalValue {
    type Output = RationalValue;

    fn mul(self, rhs: &BigInt) -> RationalValue {
        RationalValue(&self.0 * BigRational::from_integer(rhs.clone()))
    }
}

impl std::iter::Sum for RationalValue {
    fn sum<I: Iterator<Item = RationalValue>>(iter: I) -> Self {
        iter.fold(RationalValue::zero(), |a, b| a + b)
    }
}

/// Always `num/den`, including `n/1` for integers.
impl fmt::Display for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
