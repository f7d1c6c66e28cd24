//! Right-hand sides, written directly from each display.

use super::{CatalogMutation, EntryId, Point, Skip};
use crate::exact::{
    binom_int, binom_lower_param, binom_poly, binom_poly_seq, binom_upper_shift,
    binom_upper_shift_seq, digamma_diff, lower_param_mode, trigamma_diff, ArithError, Harmonics,
    Rational, Scalar,
};
use crate::special::{legendre_inversion_rhs, legendre_new_repr, legendre_product_form};

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn sign(odd: bool) -> Rational {
    if odd {
        q(-1)
    } else {
        q(1)
    }
}

fn signed<S: Scalar>(v: S, odd: bool) -> S {
    if odd {
        -v
    } else {
        v
    }
}

fn half() -> Rational {
    Rational::from_ratio(1, 2).expect("nonzero")
}

fn quarter_pow(n: u64) -> Rational {
    q(4).pow(-(n as i32)).expect("power")
}

/// `sum_j (-1)^(n+j) C(beta-alpha+n, n-j) C(beta+j, j) (x+1)^j`.
pub fn id03<S: Scalar>(n: u64, alpha: &S, beta: &S, x: &S) -> S {
    let top = beta.clone() - alpha.clone() + S::from_int(n as i64);
    let x1 = x.clone() + S::one();
    let tn = binom_poly_seq(&top, n);
    let bj = binom_upper_shift_seq(beta, n);
    let mut sum = S::zero();
    let mut xp = S::one();
    for j in 0..=n {
        let t = tn[(n - j) as usize].clone() * bj[j as usize].clone() * xp.clone();
        sum = sum + signed(t, (n + j) % 2 == 1);
        xp = xp * x1.clone();
    }
    sum
}

/// `C(n+s+t, s) / C(s+t, s)` as `prod_{i=1}^{n} (s+t+i)/(t+i)`.
pub fn id06<S: Scalar>(n: u64, s: &S, t: &S) -> Result<S, ArithError> {
    let mut acc = S::one();
    for i in 1..=n as i64 {
        let num = s.clone() + t.clone() + S::from_int(i);
        acc = (acc * num).checked_div(&(t.clone() + S::from_int(i)))?;
    }
    Ok(acc)
}

/// `C(n,p) C(s+p,n)`, with `C(n,p)` reflected as on the left.
pub fn id07<S: Scalar>(n: u64, s: &S, p: &S) -> Result<S, ArithError> {
    let mode = lower_param_mode(p);
    Ok(binom_lower_param(n, p, mode)? * binom_poly(&(s.clone() + p.clone()), n as i64))
}

/// `sum_k (-1)^(n+k) C(n,k) C(beta+k, n) (1+x)^k`.
pub fn alpha_n<S: Scalar>(n: u64, beta: &S, x: &S) -> S {
    let x1 = S::one() + x.clone();
    let mut sum = S::zero();
    let mut xp = S::one();
    for k in 0..=n {
        if xp.is_exact_constant() && xp.value().is_zero() {
            break;
        }
        let t = (binom_poly(&(beta.clone() + S::from_int(k as i64)), n as i64) * xp.clone())
            .scale(&binom_int(n as i64, k as i64));
        sum = sum + signed(t, (n + k) % 2 == 1);
        xp = xp * x1.clone();
    }
    sum
}

/// `C(2n,n) C(2n+2s+1, 2s+1) / C(n+s, n)`.
pub fn half_shift<S: Scalar>(n: u64, s: &S) -> Result<S, ArithError> {
    let two_s1 = s.clone() + s.clone() + S::one();
    let num = binom_upper_shift(&two_s1, 2 * n).scale(&binom_int(2 * n as i64, n as i64));
    num.checked_div(&binom_upper_shift(s, n))
}

fn sq(x: &Rational) -> Rational {
    x * x
}

pub fn eval(
    id: EntryId,
    p: &Point,
    h: &Harmonics,
    mutation: Option<CatalogMutation>,
) -> Result<Rational, Skip> {
    let n = p.n;
    let ni = n as i64;
    let c = |a: i64, b: i64| binom_int(a, b);
    let central = c(2 * ni, ni);
    Ok(match id {
        EntryId::Id01 => {
            let x1 = p.get("x") + &q(1);
            (0..=n)
                .map(|k| {
                    sign((n + k) % 2 == 1)
                        * c(ni, k as i64)
                        * c(ni + k as i64, k as i64)
                        * x1.pow(k as i32).expect("power")
                })
                .sum()
        }
        EntryId::Id02 => {
            let (a, b, x, y) = (p.get("alpha"), p.get("beta"), p.get("x"), p.get("y"));
            let top = &(b - a) + &q(ni);
            let xy = x + y;
            let (tn, bk) = (binom_poly_seq(&top, n), binom_upper_shift_seq(b, n));
            (0..=n)
                .map(|k| {
                    sign((n + k) % 2 == 1)
                        * &tn[(n - k) as usize]
                        * &bk[k as usize]
                        * xy.pow(k as i32).expect("power")
                        * y.pow((n - k) as i32).expect("power")
                })
                .sum()
        }
        EntryId::Id02R => {
            let (x, y) = (p.get("x"), p.get("y"));
            let ratio = x.checked_div(y)?;
            y.pow(ni as i32)? * id03(n, p.get("alpha"), p.get("beta"), &ratio)
        }
        EntryId::Id03 => id03(n, p.get("alpha"), p.get("beta"), p.get("x")),
        EntryId::Id04 => {
            let j = p.index();
            let (a, b) = (p.get("alpha"), p.get("beta"));
            let top = &(b - a) + &q(ni);
            sign((n + j) % 2 == 1) * binom_upper_shift(b, j) * binom_poly(&top, (n - j) as i64)
        }
        EntryId::Id05 => {
            let lam = p.get("lambda");
            let top = binom_poly_seq(&(&(q(ni) - lam) - &half()), n);
            let mut sum = Rational::zero();
            for k in 0..=n {
                let num = c(ni, k as i64) * &top[k as usize];
                sum += num.checked_div(&binom_poly(&(&(q(k as i64) - lam) - &half()), k as i64))?;
            }
            binom_poly(&(lam + lam), ni) * sum
        }
        EntryId::Id05S => {
            let lam = p.get("lambda");
            let s = &(q(ni) - lam) - &half();
            let t = &(-lam) - &half();
            let (sk, tk) = (binom_poly_seq(&s, n), binom_upper_shift_seq(&t, n));
            let mut sum = Rational::zero();
            for k in 0..=n {
                let num = c(ni, k as i64) * &sk[k as usize];
                sum += num.checked_div(&tk[k as usize])?;
            }
            sum
        }
        EntryId::Id06 => id06(n, p.get("s"), p.get("t"))?,
        EntryId::Id07 => id07(n, p.get("s"), p.get("p"))?,
        EntryId::Id08 => alpha_n(n, p.get("beta"), p.get("x")),
        EntryId::Id08A => {
            let k = p.index() as i64;
            let b = p.get("beta");
            c(ni, k) * binom_poly(&(b + &q(k)), ni)
        }
        EntryId::Id09 => sign(n % 2 == 1),
        EntryId::Id10 => sign(n % 2 == 1) * binom_poly(p.get("beta"), ni),
        EntryId::Id11 => {
            let sum: Rational = (0..=n)
                .map(|k| {
                    sign((n + k) % 2 == 1)
                        * c(ni, k as i64)
                        * c(ni + k as i64, k as i64)
                        * h.h(n + k)
                })
                .sum();
            half() * sum
        }
        EntryId::Id12 => {
            let x1 = p.get("x") + &q(1);
            let sum: Rational = (0..=n)
                .map(|k| {
                    c(2 * k as i64, k as i64)
                        * c(2 * (ni - k as i64), ni - k as i64)
                        * x1.pow(k as i32).expect("power")
                })
                .sum();
            quarter_pow(n) * sum
        }
        EntryId::Id13 => legendre_new_repr(n, p.get("t")).map_err(|e| Skip(e.to_string()))?,
        EntryId::Id13P => legendre_product_form(n, p.get("t")).map_err(|e| Skip(e.to_string()))?,
        EntryId::Id14 => legendre_inversion_rhs(n, p.get("t")).map_err(|e| Skip(e.to_string()))?,
        EntryId::Id15 => {
            let s = p.get("s");
            binom_poly(s, ni) * (h.h(n) + &digamma_diff(s, n)?)
        }
        EntryId::Id16 => {
            let sum: Rational = (1..=n)
                .map(|k| {
                    sign((n + k) % 2 == 1) * c(ni, k as i64) * c(ni + k as i64, k as i64) * h.h(k)
                })
                .sum();
            half() * sum
        }
        EntryId::Id17 => {
            let scale = q(2).pow(1 - 2 * ni as i32)?;
            scale * central * (h.h(n) - h.h(2 * n))
        }
        EntryId::Id18 => {
            let sum: Rational = (0..=n)
                .map(|k| {
                    sign((n + k) % 2 == 1)
                        * c(ni, k as i64)
                        * c(ni + k as i64, k as i64)
                        * (sq(h.h(k)) + h.h2(k))
                })
                .sum();
            Rational::from_ratio(1, 4)? * sum
        }
        EntryId::Id18G => {
            let s = p.get("s");
            let d = digamma_diff(s, n)?;
            let t = trigamma_diff(s, n)?;
            binom_poly(s, ni) * (sq(&(h.h(n) + &d)) + h.h2(n) + t)
        }
        EntryId::Id19 => {
            let (s, pp) = (p.get("s"), p.get("p"));
            let mode = lower_param_mode(pp);
            binom_lower_param(n, pp, mode)? * binom_upper_shift(s, n)
        }
        EntryId::Id20 => c(4 * ni, 2 * ni).checked_div(&central)?,
        EntryId::Id20E => c(4 * ni, 2 * ni),
        EntryId::Id21 => half_shift(n, p.get("s"))?,
        EntryId::Id22 => {
            let inner = q(2) * h.h(2 * n + 1) - h.h(n) - q(2);
            q(2 * ni + 1) * quarter_pow(n) * central * inner
        }
        EntryId::Id23 => Rational::from_ratio(ni, 2)? * central,
        EntryId::Id24 => {
            let h2n = if mutation == Some(CatalogMutation::FlipH2nSign) {
                -h.h(2 * n)
            } else {
                h.h(2 * n).clone()
            };
            central * (q(2) * h.h(n) - h2n)
        }
        EntryId::Id25 => {
            let d = h.h(2 * n) - &(q(2) * h.h(n));
            central * (sq(&d) + h.h2(n) - h.h2(2 * n))
        }
        EntryId::Id26 => {
            let d = h.h(2 * n) - &(q(2) * h.h(n));
            central * (sq(&d) + q(2) * h.h2(n) - h.h2(2 * n))
        }
    })
}
