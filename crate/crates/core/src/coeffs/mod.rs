//! Exact scalar domains: rationals, polynomials in the loop parameter `N`,
//! sums of square roots, and truncated series in `u^{-1}`.

mod npoly;
mod rational;
mod series;
mod surd;

pub use npoly::NPoly;
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use series::{series_from_fraction, USeries};
pub use surd::{sqrt_of_rational, squarefree_decompose, SurdSum};

use std::fmt::Debug;

pub use num_traits::{One, Zero};

/// Commutative ring operations shared by every coefficient domain.
///
/// The `_ref` methods take references so that big-number scalars are not
/// cloned on every operation.
pub trait Ring: Clone + PartialEq + Debug + Zero + One {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(v.into()))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

impl Ring for Rational {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

/// Implements `Zero`, `One` and the arithmetic operators for a type with
/// `add_ref`, `sub_ref`, `mul_ref`, `neg_ref`, `zero_value`, `one_value`
/// and `is_zero_value`.
macro_rules! ring_ops {
    ($t:ty) => {
        impl num_traits::Zero for $t {
            fn zero() -> Self {
                <$t>::zero_value()
            }
            fn is_zero(&self) -> bool {
                self.is_zero_value()
            }
        }
        impl num_traits::One for $t {
            fn one() -> Self {
                <$t>::one_value()
            }
        }
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                $crate::coeffs::Ring::add_ref(&self, &o)
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                $crate::coeffs::Ring::sub_ref(&self, &o)
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                $crate::coeffs::Ring::mul_ref(&self, &o)
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::coeffs::Ring::neg_ref(&self)
            }
        }
        impl<'a> std::ops::Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                $crate::coeffs::Ring::add_ref(self, o)
            }
        }
        impl<'a> std::ops::Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                $crate::coeffs::Ring::sub_ref(self, o)
            }
        }
        impl<'a> std::ops::Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t {
                $crate::coeffs::Ring::mul_ref(self, o)
            }
        }
    };
}
pub(crate) use ring_ops;
