use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive, ToPrimitive};
use rand::distributions::Open01;
use rand::Rng;
use rand_distr::StandardNormal;

/// Scalar type the numeric core is generic over.
///
/// Beyond float arithmetic this bundles the two primitive draws every
/// sampler is built from (standard normal, open-unit uniform) and the
/// log-gamma function, so downstream generic code never needs `rand`
/// trait bounds of its own.
pub trait Real:
    Float
    + FromPrimitive
    + ToPrimitive
    + Sum<Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Display
    + Debug
    + Send
    + Sync
    + 'static
{
    /// Draw from N(0, 1).
    fn standard_normal<G: Rng + ?Sized>(rng: &mut G) -> Self;

    /// Draw from the open interval (0, 1).
    fn standard_uniform<G: Rng + ?Sized>(rng: &mut G) -> Self;

    /// Natural log of the gamma function.
    fn ln_gamma(self) -> Self;

    /// Shorthand for lossy conversion of an `f64` constant.
    #[inline]
    fn c(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 constant converts to any Real")
    }
}

impl Real for f64 {
    #[inline]
    fn standard_normal<G: Rng + ?Sized>(rng: &mut G) -> Self {
        rng.sample(StandardNormal)
    }

    #[inline]
    fn standard_uniform<G: Rng + ?Sized>(rng: &mut G) -> Self {
        rng.sample(Open01)
    }

    #[inline]
    fn ln_gamma(self) -> Self {
        libm::lgamma(self)
    }
}

impl Real for f32 {
    #[inline]
    fn standard_normal<G: Rng + ?Sized>(rng: &mut G) -> Self {
        rng.sample(StandardNormal)
    }

    #[inline]
    fn standard_uniform<G: Rng + ?Sized>(rng: &mut G) -> Self {
        rng.sample(Open01)
    }

    #[inline]
    fn ln_gamma(self) -> Self {
        libm::lgammaf(self)
    }
}
