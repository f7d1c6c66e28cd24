use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use super::AffineForm;
use crate::exact::{factorial, Rational};
use crate::polyrat::{Assignment, MultiPoly, RatFunc, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("not an affine form: {0}")]
    NotAffine(String),
    #[error("coefficient of {0} is not an integer")]
    NonIntegerCoefficient(Var),
    #[error("sign exponent is not an integer at this assignment")]
    NonIntegerSign,
    #[error("non-hypergeometric shift in {0}")]
    NonHypergeometricShift(Var),
    #[error("pole")]
    Pole,
    #[error("term value is not rational at this assignment")]
    NonRationalValue,
    #[error("variable {0} is not assigned")]
    Unassigned(Var),
}

/// `binom(top, bottom)^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomFactor {
    pub top: AffineForm,
    pub bottom: AffineForm,
    pub exponent: i32,
}

impl BinomFactor {
    pub fn new(top: AffineForm, bottom: AffineForm, exponent: i32) -> Self {
        BinomFactor { top, bottom, exponent }
    }
}

/// `constant * (-1)^sign * prod binom(top_i, bottom_i)^{e_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperTerm {
    pub constant: Rational,
    pub sign: AffineForm,
    pub factors: Vec<BinomFactor>,
}

/// `Gamma(x + m) / Gamma(x)` as a rational function of the affine `x`.
fn gamma_shift(x: &MultiPoly, m: i64) -> RatFunc {
    let mut acc = MultiPoly::one();
    if m >= 0 {
        for i in 0..m {
            acc = &acc * &(x + &MultiPoly::constant(Rational::from(i)));
        }
        RatFunc::from_poly(acc)
    } else {
        for i in 1..=-m {
            acc = &acc * &(x - &MultiPoly::constant(Rational::from(i)));
        }
        RatFunc::one().div(&RatFunc::from_poly(acc)).expect("nonzero product")
    }
}

/// `Gamma(b)/Gamma(a)` for `b - a` a nonnegative integer.
/// Unreduced product of rational powers, normalized once at the end.
struct Product {
    num: BigInt,
    den: BigInt,
}

impl Product {
    fn new(c: &Rational) -> Self {
        Product { num: c.numer().clone(), den: c.denom().clone() }
    }

    /// Multiplies by `(num/den)^e`.
    fn mul_raw(&mut self, num: &BigInt, den: &BigInt, e: i32) -> Result<(), TermError> {
        let (top, bottom) = if e >= 0 { (num, den) } else { (den, num) };
        if bottom.is_zero() {
            return Err(TermError::Pole);
        }
        let k = e.unsigned_abs() as usize;
        self.num *= num_traits::pow(top.clone(), k);
        self.den *= num_traits::pow(bottom.clone(), k);
        Ok(())
    }

    fn mul(&mut self, r: &Rational, e: i32) -> Result<(), TermError> {
        self.mul_raw(r.numer(), r.denom(), e)
    }

    fn finish(self) -> Rational {
        Rational::new(self.num, self.den).expect("nonzero denominator")
    }
}

/// `a (a+1) ... (a+steps-1)` as an unreduced numerator/denominator pair.
fn pochhammer(a: &Rational, steps: u64) -> (BigInt, BigInt) {
    let q = a.denom();
    let mut num = BigInt::one();
    let mut x = a.numer().clone();
    for _ in 0..steps {
        num *= &x;
        x += q;
    }
    (num, num_traits::pow(q.clone(), steps as usize))
}

/// `binom(top, k)` in falling-product form, unreduced; zero for `k < 0`.
fn falling(top: &Rational, k: i64) -> (BigInt, BigInt) {
    if k < 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let q = top.denom();
    let mut num = BigInt::one();
    let mut x = top.numer().clone();
    for _ in 0..k {
        num *= &x;
        x -= q;
    }
    let mut den = num_traits::pow(q.clone(), k as usize);
    for i in 2..=k as u64 {
        den *= i;
    }
    (num, den)
}

impl HyperTerm {
    pub fn new(constant: Rational, sign: AffineForm, factors: Vec<BinomFactor>) -> Self {
        HyperTerm { constant, sign, factors }
    }

    /// Exact value at a concrete assignment.
    ///
    /// Binomials with an integer lower index, or whose top exceeds the lower
    /// index by an integer, are evaluated in product form (zero for a
    /// negative lower index). Any remaining binomials are expanded into
    /// gamma functions, which must cancel in pairs whose arguments differ by
    /// integers for the term to be rational.
    pub fn eval(&self, values: &Assignment) -> Result<Rational, TermError> {
        let sign = self.sign.eval(values)?;
        let sign = sign.to_i64().ok_or(TermError::NonIntegerSign)?;
        let mut value = Product::new(&if sign.rem_euclid(2) == 0 {
            self.constant.clone()
        } else {
            -&self.constant
        });
        let mut zero = false;
        let mut gammas: Vec<(Rational, i32)> = Vec::new();
        for f in &self.factors {
            let top = f.top.eval(values)?;
            let bottom = f.bottom.eval(values)?;
            let diff = &top - &bottom;
            let (num, den) = if let Some(k) = bottom.to_i64() {
                falling(&top, k)
            } else if let Some(m) = diff.to_i64() {
                falling(&top, m)
            } else {
                let one = Rational::one();
                gammas.push((&top + &one, f.exponent));
                gammas.push((&bottom + &one, -f.exponent));
                gammas.push((&diff + &one, -f.exponent));
                continue;
            };
            if num.is_zero() && f.exponent > 0 {
                zero = true;
                continue;
            }
            value.mul_raw(&num, &den, f.exponent)?;
        }
        resolve_gammas(gammas, &mut value)?;
        if zero {
            return Ok(Rational::zero());
        }
        Ok(value.finish())
    }

    /// `T(v+1)/T(v)` as a canonical rational function.
    pub fn shift_ratio(&self, v: &Var) -> Result<RatFunc, TermError> {
        let mut ratio = if self.sign.coeff(v).rem_euclid(2) == 0 {
            RatFunc::one()
        } else {
            RatFunc::constant(-Rational::one())
        };
        for f in &self.factors {
            let dt = f.top.coeff(v);
            let db = f.bottom.coeff(v);
            let diff = f.top.sub(&f.bottom);
            let one = MultiPoly::one();
            let r = gamma_shift(&(&f.top.to_poly() + &one), dt)
                .div(&gamma_shift(&(&f.bottom.to_poly() + &one), db))
                .and_then(|r| r.div(&gamma_shift(&(&diff.to_poly() + &one), dt - db)))
                .map_err(|_| TermError::NonHypergeometricShift(v.clone()))?;
            let r = if f.exponent >= 0 {
                r.pow(f.exponent as u32)
            } else {
                RatFunc::one()
                    .div(&r.pow(f.exponent.unsigned_abs()))
                    .map_err(|_| TermError::NonHypergeometricShift(v.clone()))?
            };
            ratio = ratio.mul(&r);
        }
        Ok(ratio)
    }

    pub fn vars(&self) -> std::collections::BTreeSet<Var> {
        let mut out: std::collections::BTreeSet<Var> = self.sign.vars().cloned().collect();
        for f in &self.factors {
            out.extend(f.top.vars().cloned());
            out.extend(f.bottom.vars().cloned());
        }
        out
    }

    /// Whether any factor or the sign moves when `v` does.
    pub fn depends_on(&self, v: &Var) -> bool {
        self.sign.coeff(v) != 0
            || self.factors.iter().any(|f| f.top.coeff(v) != 0 || f.bottom.coeff(v) != 0)
    }
}

/// Multiplies out a product of gamma powers that is known to be rational.
fn resolve_gammas(gammas: Vec<(Rational, i32)>, value: &mut Product) -> Result<(), TermError> {
    let mut classes: BTreeMap<Rational, Vec<(Rational, i32)>> = BTreeMap::new();
    for (x, e) in gammas {
        if x.is_integer() {
            if x.is_negative() || x.is_zero() {
                if e > 0 {
                    return Err(TermError::Pole);
                }
                value.num = BigInt::zero();
                continue;
            }
            let n = x.numer().to_u64().ok_or(TermError::NonRationalValue)?;
            value.mul(&factorial(n - 1), e)?;
        } else {
            classes.entry(x.fract()).or_default().push((x, e));
        }
    }
    for members in classes.into_values() {
        if members.iter().map(|(_, e)| e).sum::<i32>() != 0 {
            return Err(TermError::NonRationalValue);
        }
        let base = members.iter().map(|(x, _)| x).min().expect("nonempty").clone();
        for (x, e) in &members {
            let steps = (x - &base).numer().to_u64().expect("nonnegative integer offset");
            let (num, den) = pochhammer(&base, steps);
            value.mul_raw(&num, &den, *e)?;
        }
    }
    Ok(())
}

impl fmt::Display for HyperTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sign({}) * {}", self.sign, self.constant)?;
        for b in &self.factors {
            write!(f, " * binom({}, {})^{}", b.top, b.bottom, b.exponent)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::binom_int;
    use crate::polyrat::{parse_expr, to_ratfunc};

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn af(s: &str) -> AffineForm {
        AffineForm::parse(s).unwrap()
    }

    fn rf(s: &str) -> RatFunc {
        to_ratfunc(&parse_expr(s).unwrap()).unwrap()
    }

    fn assign(pairs: &[(&str, &str)]) -> Assignment {
        pairs.iter().map(|(v, x)| (Var::new(v), q(x))).collect()
    }

    fn binom_nk() -> HyperTerm {
        HyperTerm::new(Rational::one(), af("0"), vec![BinomFactor::new(af("n"), af("k"), 1)])
    }

    #[test]
    fn shift_ratio_examples() {
        let t = binom_nk();
        assert_eq!(t.shift_ratio(&Var::new("n")).unwrap(), rf("(n+1)/(n+1-k)"));
        assert_eq!(t.shift_ratio(&Var::new("k")).unwrap(), rf("(n-k)/(k+1)"));

        let t = HyperTerm::new(
            Rational::one(),
            af("n + k"),
            vec![BinomFactor::new(af("beta + k"), af("k"), 1)],
        );
        assert_eq!(t.shift_ratio(&Var::new("k")).unwrap(), rf("-(beta+k+1)/(k+1)"));
    }

    #[test]
    fn eval_uses_product_form_conventions() {
        let t = binom_nk();
        assert_eq!(t.eval(&assign(&[("n", "5"), ("k", "2")])).unwrap(), binom_int(5, 2));
        assert_eq!(t.eval(&assign(&[("n", "5"), ("k", "-1")])).unwrap(), q("0"));
        assert_eq!(t.eval(&assign(&[("n", "5"), ("k", "7")])).unwrap(), q("0"));
        assert_eq!(t.eval(&assign(&[("n", "1/2"), ("k", "2")])).unwrap(), q("-1/8"));
    }

    #[test]
    fn eval_cancels_gamma_pairs() {
        // binom(s+t, t) / binom(n+s+t, s) = prod_{i=1}^{n} (t+i)/(s+t+i)
        let t = HyperTerm::new(
            Rational::one(),
            af("0"),
            vec![
                BinomFactor::new(af("s + t"), af("t"), 1),
                BinomFactor::new(af("n + s + t"), af("s"), -1),
            ],
        );
        let v = t.eval(&assign(&[("n", "2"), ("s", "1/2"), ("t", "1/3")])).unwrap();
        // (4/3)(7/3) / ((11/6)(17/6))
        assert_eq!(v, q("112/187"));

        // a lone binom(s + t, t) is transcendental
        let lone = HyperTerm::new(
            Rational::one(),
            af("0"),
            vec![BinomFactor::new(af("s + t"), af("t"), 1)],
        );
        assert_eq!(
            lone.eval(&assign(&[("s", "1/2"), ("t", "1/3")])),
            Err(TermError::NonRationalValue)
        );
    }

    #[test]
    fn eval_integer_top_parameter_bottom() {
        // binom(k, p) / binom(n, p) at non-integer p: k! Gamma(n-p+1) / (n! Gamma(k-p+1))
        let t = HyperTerm::new(
            Rational::one(),
            af("0"),
            vec![BinomFactor::new(af("k"), af("p"), 1), BinomFactor::new(af("n"), af("p"), -1)],
        );
        let v = t.eval(&assign(&[("n", "3"), ("k", "1"), ("p", "1/2")])).unwrap();
        // 1! (5/2)(3/2) / 3! = 15/24
        assert_eq!(v, q("5/8"));
    }

    #[test]
    fn shift_ratio_agrees_with_direct_evaluation() {
        let t = HyperTerm::new(
            q("3/2"),
            af("n + k"),
            vec![
                BinomFactor::new(af("beta + k"), af("k"), 1),
                BinomFactor::new(af("alpha"), af("n - k"), 1),
                BinomFactor::new(af("-alpha + beta + n"), af("n - 1"), -1),
            ],
        );
        let base = assign(&[("n", "4"), ("k", "2"), ("alpha", "2/7"), ("beta", "-5/3")]);
        for v in ["n", "k"] {
            let var = Var::new(v);
            let r = t.shift_ratio(&var).unwrap().eval(&base).unwrap();
            let mut next = base.clone();
            *next.get_mut(&var).unwrap() += Rational::one();
            assert_eq!(&r * &t.eval(&base).unwrap(), t.eval(&next).unwrap(), "{v}");
        }
    }

    #[test]
    fn sign_requires_integer() {
        let t = HyperTerm::new(Rational::one(), af("n"), vec![]);
        assert_eq!(t.eval(&assign(&[("n", "1/2")])), Err(TermError::NonIntegerSign));
        assert_eq!(t.eval(&assign(&[("n", "3")])).unwrap(), q("-1"));
    }
}
