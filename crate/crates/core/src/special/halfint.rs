use num_bigint::BigInt;

use crate::exact::{binom_int, Rational};

/// Central binomial coefficients `binom(2k, k)`, grown on demand.
#[derive(Debug, Clone)]
pub struct CentralBinomials {
    values: Vec<BigInt>,
}

impl Default for CentralBinomials {
    fn default() -> Self {
        CentralBinomials { values: vec![BigInt::from(1)] }
    }
}

impl CentralBinomials {
    pub fn new(k_max: u64) -> Self {
        let mut c = CentralBinomials::default();
        c.ensure(k_max);
        c
    }

    pub fn ensure(&mut self, k_max: u64) {
        while (self.values.len() as u64) <= k_max {
            let k = self.values.len() as u64 - 1;
            let next = self.values[k as usize].clone() * BigInt::from(2 * (2 * k + 1))
                / BigInt::from(k + 1);
            self.values.push(next);
        }
    }

    /// Panics if `k` exceeds the warmed range.
    pub fn get(&self, k: u64) -> Rational {
        Rational::from(self.values[k as usize].clone())
    }
}

pub fn central_binomial(k: u64) -> Rational {
    binom_int(2 * k as i64, k as i64)
}

/// `binom(k - 1/2, k) = binom(2k, k) / 4^k`.
pub fn half_shift_diag(k: u64) -> Rational {
    central_binomial(k) * Rational::from(4i64).pow(-(k as i32)).expect("nonzero base")
}

/// `binom(k - 1/2, n)` for `0 <= k <= n`, via
/// `(-1)^(n+k) binom(2k,k) binom(2n-2k,n-k) / (4^n binom(n,k))`.
pub fn half_shift_binom(k: u64, n: u64) -> Rational {
    assert!(k <= n, "k must not exceed n");
    let num = central_binomial(k) * central_binomial(n - k);
    let den =
        Rational::from(4i64).pow(n as i32).expect("nonzero base") * binom_int(n as i64, k as i64);
    let v = num.checked_div(&den).expect("positive denominator");
    if (n + k).is_multiple_of(2) {
        v
    } else {
        -v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binom_poly, digamma_diff, harmonic};
    use proptest::prelude::*;

    fn half(k: u64) -> Rational {
        Rational::from(k as i64) - "1/2".parse::<Rational>().unwrap()
    }

    #[test]
    fn table_matches_closed_form() {
        let t = CentralBinomials::new(40);
        for k in 0..=40 {
            assert_eq!(t.get(k), central_binomial(k));
        }
        assert_eq!(t.get(3), Rational::from(20i64));
    }

    #[test]
    fn small_values() {
        assert_eq!(half_shift_diag(2), "3/8".parse().unwrap());
        // binom(1/2, 2) = -1/8
        assert_eq!(half_shift_binom(1, 2), "-1/8".parse().unwrap());
    }

    proptest! {
        #[test]
        fn diag_lemma(k in 0u64..60) {
            prop_assert_eq!(binom_poly(&half(k), k as i64), half_shift_diag(k));
        }

        #[test]
        fn off_diag_lemma(n in 0u64..40, k in 0u64..40) {
            prop_assume!(k <= n);
            prop_assert_eq!(binom_poly(&half(k), n as i64), half_shift_binom(k, n));
        }

        #[test]
        fn half_integer_digamma(n in 0u64..80) {
            let lhs = digamma_diff(&half(n), n).unwrap();
            let h2n = harmonic(2 * n, 1);
            let rhs = &h2n + &h2n - harmonic(n, 1);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
