use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::{gcd, Expr, MultiPoly, Var};
use crate::exact::Rational;

/// Values for the variables of a rational function.
pub type Assignment = BTreeMap<Var, Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatFuncError {
    #[error("zero denominator expression")]
    ZeroDenominator,
    #[error("pole at assignment")]
    PoleAtAssignment,
    #[error("variable {0} is not assigned")]
    Unassigned(Var),
}

/// Rational function in lowest terms with a monic denominator.
///
/// Two rational functions are equal as functions exactly when their stored
/// numerators and denominators are equal, so zero-testing a difference is a
/// data comparison.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, RatFuncError> {
        if den.is_zero() {
            return Err(RatFuncError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = gcd(&num, &den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lc_inv = den.leading_coefficient().recip().expect("nonzero");
        Ok(RatFunc { num: num.scale(&lc_inv), den: den.scale(&lc_inv) })
    }

    pub fn zero() -> Self {
        RatFunc { num: MultiPoly::zero(), den: MultiPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(MultiPoly::constant(c))
    }

    pub fn var(v: impl Into<Var>) -> Self {
        RatFunc::from_poly(MultiPoly::var(v))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc { num: p, den: MultiPoly::one() }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    /// Decides whether this is the zero function.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Builds `num/den` from parts already known to be coprime.
    fn coprime(num: MultiPoly, den: MultiPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let lc_inv = den.leading_coefficient().recip().expect("nonzero");
        RatFunc { num: num.scale(&lc_inv), den: den.scale(&lc_inv) }
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero den");
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_constant() {
            return RatFunc::coprime(
                &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                &self.den * &rhs.den,
            );
        }
        let b = self.den.exact_div(&g).expect("gcd divides");
        let d = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        let h = gcd(&num, &g);
        let num = num.exact_div(&h).expect("gcd divides");
        let g = g.exact_div(&h).expect("gcd divides");
        RatFunc::coprime(num, &(&b * &d) * &g)
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let a = self.num.exact_div(&g1).expect("gcd divides");
        let d = rhs.den.exact_div(&g1).expect("gcd divides");
        let c = rhs.num.exact_div(&g2).expect("gcd divides");
        let b = self.den.exact_div(&g2).expect("gcd divides");
        RatFunc::coprime(&a * &c, &b * &d)
    }

    pub fn recip(&self) -> Result<RatFunc, RatFuncError> {
        if self.is_zero() {
            return Err(RatFuncError::ZeroDenominator);
        }
        Ok(RatFunc::coprime(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc, RatFuncError> {
        Ok(self.mul(&rhs.recip()?))
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        RatFunc::coprime(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        // coprime parts stay coprime
        RatFunc { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// `self` with `v` replaced by `v + delta`.
    pub fn shift(&self, v: &Var, delta: &Rational) -> RatFunc {
        RatFunc::coprime(self.num.shift(v, delta), self.den.shift(v, delta))
    }

    pub fn eval(&self, values: &Assignment) -> Result<Rational, RatFuncError> {
        let num = self.num.eval(values).map_err(RatFuncError::Unassigned)?;
        let den = self.den.eval(values).map_err(RatFuncError::Unassigned)?;
        num.checked_div(&den).map_err(|_| RatFuncError::PoleAtAssignment)
    }

    pub fn vars(&self) -> std::collections::BTreeSet<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }
}

/// Converts an expression tree to its canonical rational function.
pub fn to_ratfunc(e: &Expr) -> Result<RatFunc, RatFuncError> {
    Ok(match e {
        Expr::Int(i) => RatFunc::constant(Rational::from_integer(i.clone())),
        Expr::Var(v) => RatFunc::var(v.as_str()),
        Expr::Neg(a) => to_ratfunc(a)?.neg(),
        Expr::Add(a, b) => to_ratfunc(a)?.add(&to_ratfunc(b)?),
        Expr::Sub(a, b) => to_ratfunc(a)?.sub(&to_ratfunc(b)?),
        Expr::Mul(a, b) => to_ratfunc(a)?.mul(&to_ratfunc(b)?),
        Expr::Div(a, b) => to_ratfunc(a)?.div(&to_ratfunc(b)?)?,
        Expr::Pow(a, e) => to_ratfunc(a)?.pow(*e),
    })
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.as_constant() == Some(Rational::one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyrat::parse_expr;

    fn rf(text: &str) -> RatFunc {
        to_ratfunc(&parse_expr(text).unwrap()).unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn assign(pairs: &[(&str, &str)]) -> Assignment {
        pairs.iter().map(|(v, x)| (Var::new(v), q(x))).collect()
    }

    #[test]
    fn cancellation() {
        assert_eq!(rf("(n^2-1)/(n-1)"), rf("n+1"));
        assert_eq!(rf("1/2"), RatFunc::constant(q("1/2")));
        assert_eq!(rf("(n+1)/(2*n+2)"), rf("1/2"));
    }

    #[test]
    fn denominator_is_monic() {
        let r = rf("1/(2 - 4*n)");
        assert_eq!(r.den().leading_coefficient(), Rational::one());
        assert_eq!(r.to_string(), "(-1/4)/(n - 1/2)");
    }

    #[test]
    fn zero_tests() {
        assert!(rf("(n+1) - (n+1)").is_zero());
        assert!(rf("(n+k)^2 - n^2 - 2*n*k - k^2").is_zero());
        assert!(!rf("1/(n+1) - 1/(n+2)").is_zero());
    }

    #[test]
    fn zero_denominator_expression() {
        let e = parse_expr("n/(k-k)").unwrap();
        assert_eq!(to_ratfunc(&e), Err(RatFuncError::ZeroDenominator));
    }

    #[test]
    fn evaluation() {
        assert_eq!(rf("(n+1)/(k+2)").eval(&assign(&[("n", "1"), ("k", "0")])).unwrap(), q("1"));
        let cert = rf("(k-j)*(alpha+k-n)/((k-n-1)*(alpha-beta-n-1))");
        let a = assign(&[("j", "0"), ("k", "1"), ("n", "1"), ("alpha", "1/2"), ("beta", "1/3")]);
        // (1)(1/2) / ((-1)(-11/6))
        assert_eq!(cert.eval(&a).unwrap(), q("3/11"));
        assert_eq!(rf("n/(n-1)").eval(&assign(&[("n", "1")])), Err(RatFuncError::PoleAtAssignment));
        assert!(matches!(rf("n+k").eval(&assign(&[("n", "1")])), Err(RatFuncError::Unassigned(_))));
    }

    #[test]
    fn shift_matches_substitution() {
        let r = rf("k/(k+n+1)");
        assert_eq!(r.shift(&Var::new("k"), &q("1")), rf("(k+1)/(k+n+2)"));
    }
}
