use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ArithError, Rational};

/// The number types identity evaluators are generic over: plain rationals,
/// and [`Jet2`] for exact parameter derivatives.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: Rational) -> Self;

    /// The constant (base-point) part.
    fn value(&self) -> &Rational;

    /// True when no infinitesimal part is present.
    fn is_exact_constant(&self) -> bool;

    fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError>;

    fn scale(&self, r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(n))
    }

    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    fn powu(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// `self(self-1)...(self-k+1)/k!`; callers go through
    /// [`binom_poly`](super::binom_poly).
    fn falling_binom(&self, k: u64) -> Self {
        let mut acc = Self::one();
        for i in 0..k {
            acc = acc * (self.clone() - Self::from_int(i as i64));
        }
        acc.scale(&super::factorial(k).recip().expect("k! > 0"))
    }
}

impl Scalar for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn value(&self) -> &Rational {
        self
    }

    fn is_exact_constant(&self) -> bool {
        true
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Rational::checked_div(self, rhs)
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }

    fn powu(&self, e: u32) -> Self {
        self.pow(e as i32).expect("nonnegative exponent")
    }

    // Accumulate numerator and denominator as integers and reduce once.
    fn falling_binom(&self, k: u64) -> Self {
        let p = self.numer();
        let q = self.denom();
        let mut num = BigInt::one();
        let mut step = p.clone();
        for _ in 0..k {
            if step.is_zero() {
                return Rational::zero();
            }
            num *= &step;
            step -= q;
        }
        let mut den = num_traits::pow(q.clone(), k as usize);
        for i in 2..=k {
            den *= i;
        }
        Rational::new(num, den).expect("positive denominator")
    }
}
