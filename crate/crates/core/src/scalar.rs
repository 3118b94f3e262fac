//! Coefficient scalars.
//!
//! All polynomial code is generic over [`Scalar`]. The exact rational
//! instantiation ([`BigRational`]) is the one Groebner computations are meant
//! for; the bounded rationals and floats exist for cheap experiments and give
//! exact answers only while no rounding or overflow occurs.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

/// Field-like coefficient type usable in polynomials.
pub trait Scalar: Signed + Clone + PartialOrd + Debug + Send + Sync + 'static {
    /// Build the scalar `numer / denom`, or `None` if it is not representable.
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self>;

    /// Exact rational value of this scalar, if it has one.
    fn to_ratio(&self) -> Option<BigRational>;
}

impl Scalar for BigRational {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self> {
        if denom.is_zero() {
            return None;
        }
        Some(Ratio::new(numer.clone(), denom.clone()))
    }

    fn to_ratio(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

impl Scalar for Ratio<i64> {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self> {
        let r = BigRational::from_ratio(numer, denom)?;
        Some(Ratio::new(r.numer().to_i64()?, r.denom().to_i64()?))
    }

    fn to_ratio(&self) -> Option<BigRational> {
        Some(Ratio::new(BigInt::from(*self.numer()), BigInt::from(*self.denom())))
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self> {
                let r = BigRational::from_ratio(numer, denom)?;
                r.to_f64().map(|v| v as $t)
            }

            fn to_ratio(&self) -> Option<BigRational> {
                BigRational::from_f64(*self as f64)
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);
