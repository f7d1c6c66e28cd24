use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ArithError, Rational, Scalar};

/// Truncated Taylor expansion in two nilpotent infinitesimals, kept to
/// total degree 2.
///
/// Coefficient layout: `[1, e1, e2, e1^2, e1*e2, e2^2]`. For a function
/// `f` lifted at `(s0 + e1, t0 + e2)` the coefficients are
/// `f, f_s, f_t, f_ss/2, f_st, f_tt/2`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Jet2 {
    c: [Rational; 6],
}

const C0: usize = 0;
const E1: usize = 1;
const E2: usize = 2;
const E11: usize = 3;
const E12: usize = 4;
const E22: usize = 5;

impl Jet2 {
    pub fn constant(v: Rational) -> Self {
        let mut j = Jet2::default();
        j.c[C0] = v;
        j
    }

    /// `v + e1`
    pub fn var1(v: Rational) -> Self {
        let mut j = Jet2::constant(v);
        j.c[E1] = Rational::one();
        j
    }

    /// `v + e2`
    pub fn var2(v: Rational) -> Self {
        let mut j = Jet2::constant(v);
        j.c[E2] = Rational::one();
        j
    }

    pub fn from_coefficients(c: [Rational; 6]) -> Self {
        Jet2 { c }
    }

    pub fn coefficients(&self) -> &[Rational; 6] {
        &self.c
    }

    pub fn d1(&self) -> &Rational {
        &self.c[E1]
    }

    pub fn d2(&self) -> &Rational {
        &self.c[E2]
    }

    /// Coefficient of `e1^2`, i.e. half the second derivative.
    pub fn c11(&self) -> &Rational {
        &self.c[E11]
    }

    /// Coefficient of `e1*e2`, the mixed partial.
    pub fn c12(&self) -> &Rational {
        &self.c[E12]
    }

    /// Coefficient of `e2^2`.
    pub fn c22(&self) -> &Rational {
        &self.c[E22]
    }

    /// Second derivative in the first direction.
    pub fn d11(&self) -> Rational {
        &self.c[E11] * &Rational::from(2i64)
    }

    pub fn d22(&self) -> Rational {
        &self.c[E22] * &Rational::from(2i64)
    }

    fn infinitesimal_part(&self) -> Jet2 {
        let mut j = self.clone();
        j.c[C0] = Rational::zero();
        j
    }

    pub fn recip(&self) -> Result<Jet2, ArithError> {
        let a0 = &self.c[C0];
        if a0.is_zero() {
            return Err(ArithError::JetDivisionPole);
        }
        let inv0 = a0.recip()?;
        // 1/(a0 (1+u)) = (1/a0)(1 - u + u^2), u nilpotent of order 3
        let u = self.infinitesimal_part().scale(&inv0);
        let series = Jet2::constant(Rational::one()) - u.clone() + u.clone() * u;
        Ok(series.scale(&inv0))
    }
}

impl fmt::Debug for Jet2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} | e1 {} | e2 {} | e1^2 {} | e1e2 {} | e2^2 {}]",
            self.c[0], self.c[1], self.c[2], self.c[3], self.c[4], self.c[5]
        )
    }
}

impl Add for Jet2 {
    type Output = Jet2;
    fn add(mut self, rhs: Jet2) -> Jet2 {
        for (a, b) in self.c.iter_mut().zip(rhs.c) {
            *a += b;
        }
        self
    }
}

impl Sub for Jet2 {
    type Output = Jet2;
    fn sub(mut self, rhs: Jet2) -> Jet2 {
        for (a, b) in self.c.iter_mut().zip(rhs.c) {
            *a -= b;
        }
        self
    }
}

impl Neg for Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        Jet2 { c: self.c.map(|x| -x) }
    }
}

fn mul_nz(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() || b.is_zero() {
        Rational::zero()
    } else {
        a * b
    }
}

impl Mul for Jet2 {
    type Output = Jet2;
    fn mul(self, b: Jet2) -> Jet2 {
        let a = &self.c;
        let b = &b.c;
        let m = mul_nz;
        Jet2 {
            c: [
                m(&a[C0], &b[C0]),
                m(&a[C0], &b[E1]) + m(&a[E1], &b[C0]),
                m(&a[C0], &b[E2]) + m(&a[E2], &b[C0]),
                m(&a[C0], &b[E11]) + m(&a[E1], &b[E1]) + m(&a[E11], &b[C0]),
                m(&a[C0], &b[E12]) + m(&a[E1], &b[E2]) + m(&a[E2], &b[E1]) + m(&a[E12], &b[C0]),
                m(&a[C0], &b[E22]) + m(&a[E2], &b[E2]) + m(&a[E22], &b[C0]),
            ],
        }
    }
}

impl Scalar for Jet2 {
    fn from_rational(r: Rational) -> Self {
        Jet2::constant(r)
    }

    fn value(&self) -> &Rational {
        &self.c[C0]
    }

    fn is_exact_constant(&self) -> bool {
        self.c[1..].iter().all(Rational::is_zero)
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.clone() * rhs.recip()?)
    }

    fn scale(&self, r: &Rational) -> Self {
        Jet2 { c: self.c.clone().map(|x| mul_nz(&x, r)) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::binom_poly;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn jet(c: [&str; 6]) -> Jet2 {
        Jet2::from_coefficients(c.map(q))
    }

    #[test]
    fn square_of_shifted_variable() {
        let s = Jet2::var1(q("3"));
        assert_eq!(s.powu(2), jet(["9", "6", "0", "1", "0", "0"]));
    }

    #[test]
    fn binom_poly_lifts_to_derivatives() {
        let s = Jet2::var1(q("3"));
        assert_eq!(binom_poly(&s, 2), jet(["3", "5/2", "0", "1/2", "0", "0"]));
    }

    #[test]
    fn geometric_series_truncation() {
        let x = Jet2::var1(q("1"));
        assert_eq!(x.recip().unwrap(), jet(["1", "-1", "0", "1", "0", "0"]));
    }

    #[test]
    fn mixed_product_truncates_at_degree_two() {
        let s = Jet2::var1(q("2"));
        let t = Jet2::var2(q("5"));
        let p = s.clone() * t.clone() * s * t;
        // (2+e1)^2 (5+e2)^2 = 100 + 100 e1 + 40 e2 + 25 e1^2 + 40 e1e2 + 4 e2^2 + ...
        assert_eq!(p, jet(["100", "100", "40", "25", "40", "4"]));
    }

    #[test]
    fn division_by_pure_infinitesimal_is_a_pole() {
        let e = Jet2::var1(Rational::zero());
        assert_eq!(Jet2::one().checked_div(&e), Err(ArithError::JetDivisionPole));
    }

    #[test]
    fn recip_roundtrip() {
        let a = jet(["3/2", "1", "-2", "1/3", "5", "7"]);
        let one = a.clone() * a.recip().unwrap();
        assert_eq!(one, Jet2::one());
    }
}
