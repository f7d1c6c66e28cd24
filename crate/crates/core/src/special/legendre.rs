use thiserror::Error;

use super::halfint::CentralBinomials;
use crate::exact::{binom_int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("t must be nonzero")]
    ZeroT,
}

/// `P_0(x), ..., P_n(x)` from the three-term recurrence.
pub fn legendre_table(n: u64, x: &Rational) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(Rational::one());
    if n >= 1 {
        out.push(x.clone());
    }
    for m in 1..n {
        let a = Rational::from(2 * m as i64 + 1) * x * &out[m as usize];
        let b = Rational::from(m as i64) * &out[m as usize - 1];
        let next = (a - b).checked_div(&Rational::from(m as i64 + 1)).expect("positive divisor");
        out.push(next);
    }
    out
}

pub fn legendre(n: u64, x: &Rational) -> Rational {
    legendre_table(n, x).pop().expect("nonempty")
}

fn check_t(t: &Rational) -> Result<(), DomainError> {
    if t.is_zero() {
        Err(DomainError::ZeroT)
    } else {
        Ok(())
    }
}

fn quarter() -> Rational {
    Rational::from_ratio(1, 4).expect("nonzero")
}

/// `4^-n sum_k binom(2k,k) binom(2n-2k,n-k) t^(2k)`, which equals
/// `t^n P_n((t^2+1)/(2t))`.
pub fn legendre_product_form(n: u64, t: &Rational) -> Result<Rational, DomainError> {
    check_t(t)?;
    let c = CentralBinomials::new(n);
    let t2 = t * t;
    let mut sum = Rational::zero();
    let mut tp = Rational::one();
    for k in 0..=n {
        sum += c.get(k) * c.get(n - k) * &tp;
        tp *= &t2;
    }
    Ok(sum * quarter().pow(n as i32).expect("nonzero"))
}

/// `t^-n sum_k binom(n,k) binom(2k,k) ((t^2-1)/4)^k`.
pub fn legendre_new_repr(n: u64, t: &Rational) -> Result<Rational, DomainError> {
    check_t(t)?;
    let c = CentralBinomials::new(n);
    let y = (t * t - Rational::one()) * quarter();
    let mut sum = Rational::zero();
    let mut yp = Rational::one();
    for k in 0..=n {
        sum += binom_int(n as i64, k as i64) * c.get(k) * &yp;
        yp *= &y;
    }
    Ok(sum * t.pow(-(n as i32)).expect("t nonzero"))
}

/// Both sides of
/// `sum_k (-1)^k binom(n,k) P_k((t^2+1)/(2t)) t^k = binom(2n,n) ((1-t^2)/4)^n`,
/// with the Legendre values taken from the recurrence.
pub fn legendre_inversion_check(n: u64, t: &Rational) -> Result<(Rational, Rational), DomainError> {
    check_t(t)?;
    let x = (t * t + Rational::one()).checked_div(&(t + t)).expect("t nonzero");
    let p = legendre_table(n, &x);
    let mut lhs = Rational::zero();
    let mut tp = Rational::one();
    for k in 0..=n {
        let term = binom_int(n as i64, k as i64) * &p[k as usize] * &tp;
        if k % 2 == 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
        tp *= t;
    }
    Ok((lhs, legendre_inversion_rhs(n, t)?))
}

/// `binom(2n,n) ((1-t^2)/4)^n`.
pub fn legendre_inversion_rhs(n: u64, t: &Rational) -> Result<Rational, DomainError> {
    check_t(t)?;
    Ok(binom_int(2 * n as i64, n as i64)
        * ((Rational::one() - t * t) * quarter()).pow(n as i32).expect("power"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::draw::{draw_rational, rng_for};

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn arg(t: &Rational) -> Rational {
        (t * t + Rational::one()).checked_div(&(t + t)).unwrap()
    }

    #[test]
    fn recurrence_values() {
        assert_eq!(legendre(0, &q("7/3")), q("1"));
        assert_eq!(legendre(1, &q("7/3")), q("7/3"));
        assert_eq!(legendre(2, &q("5/4")), q("59/32"));
        assert_eq!(legendre(3, &q("1/2")), q("-7/16"));
        assert_eq!(legendre(17, &q("1")), q("1"));
    }

    #[test]
    fn product_form_values() {
        assert_eq!(legendre_product_form(1, &q("2")).unwrap(), q("5/2"));
        assert_eq!(legendre_product_form(0, &q("-3/7")).unwrap(), q("1"));
        assert_eq!(legendre_product_form(2, &q("2")).unwrap(), q("59/8"));
    }

    #[test]
    fn new_repr_values() {
        assert_eq!(legendre_new_repr(1, &q("2")).unwrap(), q("5/4"));
        assert_eq!(legendre_new_repr(2, &q("2")).unwrap(), q("59/32"));
        for n in 0..10 {
            assert_eq!(legendre_new_repr(n, &q("1")).unwrap(), q("1"));
        }
    }

    #[test]
    fn inversion_values() {
        assert_eq!(legendre_inversion_check(1, &q("2")).unwrap(), (q("-3/2"), q("-3/2")));
        assert_eq!(legendre_inversion_check(0, &q("5")).unwrap(), (q("1"), q("1")));
        assert_eq!(legendre_inversion_check(2, &q("2")).unwrap(), (q("27/8"), q("27/8")));
    }

    #[test]
    fn zero_t_is_rejected() {
        assert_eq!(legendre_product_form(2, &q("0")), Err(DomainError::ZeroT));
        assert_eq!(legendre_new_repr(2, &q("0")), Err(DomainError::ZeroT));
        assert_eq!(legendre_inversion_check(2, &q("0")), Err(DomainError::ZeroT));
    }

    #[test]
    fn seeded_grid() {
        let mut rng = rng_for(0, &[11]);
        for _ in 0..5 {
            let mut t = draw_rational(&mut rng);
            while t.is_zero() {
                t = draw_rational(&mut rng);
            }
            let p = legendre_table(25, &arg(&t));
            for n in 0..=25u64 {
                assert_eq!(legendre_new_repr(n, &t).unwrap(), p[n as usize]);
                assert_eq!(
                    legendre_product_form(n, &t).unwrap(),
                    t.pow(n as i32).unwrap() * &p[n as usize]
                );
                let (l, r) = legendre_inversion_check(n, &t).unwrap();
                assert_eq!(l, r);
                assert_eq!(legendre_new_repr(n, &t.recip().unwrap()).unwrap(), p[n as usize]);
            }
        }
    }
}
