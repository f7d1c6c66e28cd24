use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use super::TermError;
use crate::exact::Rational;
use crate::polyrat::{parse_expr, to_ratfunc, Assignment, MultiPoly, Var};

/// `constant + sum_v coeff_v * v` with integer variable coefficients, so a
/// unit shift of any variable moves the form by an integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineForm {
    constant: Rational,
    coeffs: BTreeMap<Var, i64>,
}

impl AffineForm {
    pub fn constant(c: Rational) -> Self {
        AffineForm { constant: c, coeffs: BTreeMap::new() }
    }

    pub fn var(v: impl Into<Var>) -> Self {
        AffineForm { constant: Rational::zero(), coeffs: [(v.into(), 1)].into_iter().collect() }
    }

    pub fn parse(text: &str) -> Result<Self, TermError> {
        let e = parse_expr(text)
            .map_err(|e| TermError::Syntax { offset: e.offset, message: e.message })?;
        let r = to_ratfunc(&e).map_err(|e| TermError::NotAffine(e.to_string()))?;
        let den = r.den().as_constant().ok_or_else(|| TermError::NotAffine(text.to_string()))?;
        let p = r.num().scale(&den.recip().expect("nonzero"));
        AffineForm::from_poly(&p).map_err(|_| TermError::NotAffine(text.to_string()))
    }

    pub fn from_poly(p: &MultiPoly) -> Result<Self, TermError> {
        let mut constant = Rational::zero();
        let mut coeffs = BTreeMap::new();
        for (m, c) in p.terms() {
            match m.factors() {
                [] => constant = c.clone(),
                [(v, 1)] => {
                    let i =
                        c.to_i64().ok_or_else(|| TermError::NonIntegerCoefficient(v.clone()))?;
                    coeffs.insert(v.clone(), i);
                }
                _ => return Err(TermError::NotAffine(p.to_string())),
            }
        }
        Ok(AffineForm { constant, coeffs })
    }

    pub fn constant_part(&self) -> &Rational {
        &self.constant
    }

    pub fn coeff(&self, v: &Var) -> i64 {
        self.coeffs.get(v).copied().unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = &Var> {
        self.coeffs.keys()
    }

    pub fn to_poly(&self) -> MultiPoly {
        let mut p = MultiPoly::constant(self.constant.clone());
        for (v, c) in &self.coeffs {
            p = &p + &MultiPoly::var(v.clone()).scale(&Rational::from(*c));
        }
        p
    }

    pub fn eval(&self, values: &Assignment) -> Result<Rational, TermError> {
        let mut num = self.constant.numer().clone();
        let mut den = self.constant.denom().clone();
        for (v, c) in &self.coeffs {
            let x = values.get(v).ok_or_else(|| TermError::Unassigned(v.clone()))?;
            if x.denom().is_one() {
                num += x.numer() * &den * *c;
            } else {
                num = num * x.denom() + x.numer() * &den * *c;
                den *= x.denom();
            }
        }
        Ok(Rational::new(num, den).expect("positive denominator"))
    }

    pub fn sub(&self, other: &AffineForm) -> AffineForm {
        let mut coeffs = self.coeffs.clone();
        for (v, c) in &other.coeffs {
            let e = coeffs.entry(v.clone()).or_insert(0);
            *e -= c;
            if *e == 0 {
                coeffs.remove(v);
            }
        }
        AffineForm { constant: &self.constant - &other.constant, coeffs }
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}
