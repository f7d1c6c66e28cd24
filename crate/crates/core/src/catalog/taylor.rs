//! Expansion of `f(x) = sum_k C(alpha,n-k) C(beta+k,k) x^k` around `x = -1`.

use crate::exact::{binom_poly, binom_upper_shift, Rational};

/// Coefficients of `f(y - 1)` in powers of `y`, by Horner's rule on the
/// coefficient list of `f`.
pub fn shifted_coefficients(n: u64, alpha: &Rational, beta: &Rational) -> Vec<Rational> {
    let coeffs: Vec<Rational> =
        (0..=n).map(|k| binom_poly(alpha, (n - k) as i64) * binom_upper_shift(beta, k)).collect();
    let mut acc: Vec<Rational> = Vec::new();
    for a in coeffs.into_iter().rev() {
        // acc <- acc * (y - 1) + a
        let mut next = vec![Rational::zero(); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i + 1] += c.clone();
            next[i] = &next[i] - c;
        }
        next[0] += a;
        acc = next;
    }
    acc
}

/// `(-1)^(n+j) C(beta+j, j) C(beta-alpha+n, n-j)` for `j = 0..=n`.
pub fn expected_coefficients(n: u64, alpha: &Rational, beta: &Rational) -> Vec<Rational> {
    let top = &(beta - alpha) + &Rational::from(n);
    (0..=n)
        .map(|j| {
            let v = binom_upper_shift(beta, j) * binom_poly(&top, (n - j) as i64);
            if (n + j) % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect()
}

/// True iff every Taylor coefficient of `f` at `x = -1` matches.
pub fn taylor_route_check(n: u64, alpha: &Rational, beta: &Rational) -> bool {
    shifted_coefficients(n, alpha, beta) == expected_coefficients(n, alpha, beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let c = shifted_coefficients(1, &q("1/2"), &q("1/3"));
        assert_eq!(c[0], q("-5/6"));
        assert!(taylor_route_check(1, &q("1/2"), &q("1/3")));
        assert!(taylor_route_check(0, &q("7/5"), &q("-2/9")));
        assert_eq!(shifted_coefficients(0, &q("7/5"), &q("-2/9")), vec![q("1")]);
        assert!(taylor_route_check(2, &q("2"), &q("2")));
    }

    #[test]
    fn corrupted_beta_fails() {
        let mut e = expected_coefficients(3, &q("1/2"), &q("1/3"));
        e[1] = &e[1] + &q("1");
        assert_ne!(shifted_coefficients(3, &q("1/2"), &q("1/3")), e);
    }
}
