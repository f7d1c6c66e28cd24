use num_bigint::BigInt;
use num_traits::One;

use super::{ArithError, Rational, Scalar};

pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Rational::from_integer(acc)
}

/// `binom(s, k)` in product form `s(s-1)...(s-k+1)/k!`, zero for `k < 0`.
///
/// Polynomial in `s`, so it lifts to jets unchanged.
pub fn binom_poly<S: Scalar>(s: &S, k: i64) -> S {
    if k < 0 {
        return S::zero();
    }
    s.falling_binom(k as u64)
}

/// Ordinary binomial of integers with the same conventions as
/// [`binom_poly`] (negative `n` allowed, negative `k` gives zero).
pub fn binom_int(n: i64, k: i64) -> Rational {
    binom_poly(&Rational::from(n), k)
}

/// `binom(b + m, m) = (b+1)(b+2)...(b+m)/m!`, the shape taken by binomials
/// whose lower index is a parameter but whose top exceeds it by an integer.
pub fn binom_upper_shift<S: Scalar>(b: &S, m: u64) -> S {
    let mut acc = S::one();
    for i in 1..=m {
        acc = acc * (b.clone() + S::from_int(i as i64));
    }
    acc.scale(&factorial(m).recip().expect("m! > 0"))
}

/// `psi(s+1) - psi(s-n+1) = sum_{i=0}^{n-1} 1/(s-i)`.
pub fn digamma_diff<S: Scalar>(s: &S, n: u64) -> Result<S, ArithError> {
    let mut acc = S::zero();
    for i in 0..n {
        let d = s.clone() - S::from_int(i as i64);
        if d.value().is_zero() {
            return Err(ArithError::DigammaPole { index: i });
        }
        acc = acc + S::one().checked_div(&d)?;
    }
    Ok(acc)
}

/// `psi'(s+1) - psi'(s-n+1) = -sum_{i=0}^{n-1} 1/(s-i)^2`.
pub fn trigamma_diff<S: Scalar>(s: &S, n: u64) -> Result<S, ArithError> {
    let mut acc = S::zero();
    for i in 0..n {
        let d = s.clone() - S::from_int(i as i64);
        if d.value().is_zero() {
            return Err(ArithError::TrigammaPole { index: i });
        }
        acc = acc - S::one().checked_div(&(d.clone() * d))?;
    }
    Ok(acc)
}

/// How `binom(m, p)` with integer top and parameter lower index is
/// represented.
///
/// For an integer `p` it is an ordinary binomial. Otherwise it carries the
/// transcendental factor `1/(Gamma(1+p) Gamma(1-p))`; identities in which
/// every such binomial appears once on each side are compared after
/// dividing that common factor out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerParamMode {
    Plain(i64),
    Reflected,
}

pub fn lower_param_mode<S: Scalar>(p: &S) -> LowerParamMode {
    match p.value().to_i64() {
        Some(v) if p.is_exact_constant() => LowerParamMode::Plain(v),
        _ => LowerParamMode::Reflected,
    }
}

/// `binom(m, p)` in the given mode. In reflected mode this is
/// `binom(m, p) * Gamma(1+p) Gamma(1-p) = m! / prod_{i=1}^{m} (i - p)`.
pub fn binom_lower_param<S: Scalar>(m: u64, p: &S, mode: LowerParamMode) -> Result<S, ArithError> {
    match mode {
        LowerParamMode::Plain(k) => Ok(S::from_rational(binom_int(m as i64, k))),
        LowerParamMode::Reflected => {
            let mut den = S::one();
            for i in 1..=m {
                let d = S::from_int(i as i64) - p.clone();
                if d.value().is_zero() {
                    return Err(ArithError::ReflectionPole { index: i });
                }
                den = den * d;
            }
            S::from_rational(factorial(m)).checked_div(&den)
        }
    }
}

/// `[binom(s, 0), binom(s, 1), ..., binom(s, k_max)]`.
pub fn binom_poly_seq<S: Scalar>(s: &S, k_max: u64) -> Vec<S> {
    let mut out = Vec::with_capacity(k_max as usize + 1);
    let mut cur = S::one();
    for k in 0..=k_max {
        out.push(cur.clone());
        if k < k_max {
            let step = Rational::from(k + 1).recip().expect("k+1 > 0");
            cur = (cur * (s.clone() - S::from_int(k as i64))).scale(&step);
        }
    }
    out
}

/// `[binom(b, 0), binom(b+1, 1), ..., binom(b+m_max, m_max)]`.
pub fn binom_upper_shift_seq<S: Scalar>(b: &S, m_max: u64) -> Vec<S> {
    let mut out = Vec::with_capacity(m_max as usize + 1);
    let mut cur = S::one();
    for m in 0..=m_max {
        out.push(cur.clone());
        if m < m_max {
            let step = Rational::from(m + 1).recip().expect("m+1 > 0");
            cur = (cur * (b.clone() + S::from_int(m as i64 + 1))).scale(&step);
        }
    }
    out
}

/// `[binom(0, p), binom(1, p), ..., binom(m_max, p)]` in the given mode.
pub fn binom_lower_param_seq<S: Scalar>(
    m_max: u64,
    p: &S,
    mode: LowerParamMode,
) -> Result<Vec<S>, ArithError> {
    match mode {
        LowerParamMode::Plain(k) => {
            Ok((0..=m_max).map(|m| S::from_rational(binom_int(m as i64, k))).collect())
        }
        LowerParamMode::Reflected => {
            let mut out = Vec::with_capacity(m_max as usize + 1);
            let mut den = S::one();
            let mut fact = Rational::one();
            out.push(S::one());
            for i in 1..=m_max {
                let d = S::from_int(i as i64) - p.clone();
                if d.value().is_zero() {
                    return Err(ArithError::ReflectionPole { index: i });
                }
                den = den * d;
                fact *= Rational::from(i);
                out.push(S::from_rational(fact.clone()).checked_div(&den)?);
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Jet2;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn binom_poly_examples() {
        assert_eq!(binom_poly(&q("1/2"), 1), q("1/2"));
        assert_eq!(binom_poly(&q("17/5"), 0), q("1"));
        assert_eq!(binom_poly(&q("3/2"), 2), q("3/8"));
        // half-integer cross-check: binom(4,2)/4^2
        assert_eq!(binom_poly(&q("3/2"), 2), binom_int(4, 2) * q("1/16") * q("1"));
        assert_eq!(binom_poly(&q("5"), -2), q("0"));
        assert_eq!(binom_int(3, 5), q("0"));
        assert_eq!(binom_int(-1, 3), q("-1"));
    }

    #[test]
    fn sequences_match_pointwise_forms() {
        let s = q("-7/3");
        let a = binom_poly_seq(&s, 6);
        let b = binom_upper_shift_seq(&s, 6);
        for k in 0..=6u64 {
            assert_eq!(a[k as usize], binom_poly(&s, k as i64));
            assert_eq!(b[k as usize], binom_upper_shift(&s, k));
        }
        for p in [q("2/5"), q("3")] {
            let mode = lower_param_mode(&p);
            let c = binom_lower_param_seq(6, &p, mode).unwrap();
            for m in 0..=6u64 {
                assert_eq!(c[m as usize], binom_lower_param(m, &p, mode).unwrap());
            }
        }
        let j = Jet2::var1(q("1/2"));
        let c = binom_upper_shift_seq(&j, 4);
        assert_eq!(c[4], binom_upper_shift(&j, 4));
    }

    #[test]
    fn binom_upper_shift_examples() {
        assert_eq!(binom_upper_shift(&q("7/3"), 0), q("1"));
        assert_eq!(binom_upper_shift(&q("1/3"), 2), q("14/9"));
        // 2s+1 at s = 0, m = 2: binom(3, 2)
        assert_eq!(binom_upper_shift(&q("1"), 2), q("3"));
    }

    #[test]
    fn digamma_diff_examples() {
        assert_eq!(digamma_diff(&q("2/7"), 0).unwrap(), q("0"));
        assert_eq!(digamma_diff(&q("3"), 3).unwrap(), q("11/6"));
        assert_eq!(digamma_diff(&q("1/2"), 2).unwrap(), q("0"));
        assert_eq!(digamma_diff(&q("1"), 3), Err(ArithError::DigammaPole { index: 1 }));
    }

    #[test]
    fn trigamma_diff_examples() {
        assert_eq!(trigamma_diff(&q("2/7"), 0).unwrap(), q("0"));
        assert_eq!(trigamma_diff(&q("2"), 2).unwrap(), q("-5/4"));
        assert_eq!(trigamma_diff(&q("1/2"), 1).unwrap(), q("-4"));
        assert_eq!(trigamma_diff(&q("0"), 1), Err(ArithError::TrigammaPole { index: 0 }));
    }

    #[test]
    fn reflected_lower_param_derivatives() {
        // binom(k, p) Gamma(1+p) Gamma(1-p) = 1 + p H_k + p^2 (H_k^2 + H_k^(2))/2 + ...
        let p = Jet2::var1(q("0"));
        let b = binom_lower_param(3, &p, LowerParamMode::Reflected).unwrap();
        let h = q("11/6");
        let h2 = q("49/36");
        assert_eq!(b.value(), &q("1"));
        assert_eq!(b.d1(), &h);
        assert_eq!(b.c11(), &((&h * &h + h2) * q("1/2")));
    }

    #[test]
    fn lower_param_mode_selection() {
        assert_eq!(lower_param_mode(&q("2")), LowerParamMode::Plain(2));
        assert_eq!(lower_param_mode(&q("1/2")), LowerParamMode::Reflected);
        assert_eq!(lower_param_mode(&Jet2::var1(q("0"))), LowerParamMode::Reflected);
        assert_eq!(lower_param_mode(&Jet2::constant(q("0"))), LowerParamMode::Plain(0));
    }
}
