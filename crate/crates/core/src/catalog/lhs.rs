//! Left-hand sides, written directly from each display.

use super::{EntryId, Point, Skip};
use crate::exact::{
    binom_int, binom_lower_param_seq, binom_poly, binom_poly_seq, binom_upper_shift,
    binom_upper_shift_seq, lower_param_mode, ArithError, Harmonics, Rational, Scalar,
};
use crate::special::legendre_table;

fn alt<S: Scalar>(v: S, odd: bool) -> S {
    if odd {
        -v
    } else {
        v
    }
}

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn half() -> Rational {
    Rational::from_ratio(1, 2).expect("nonzero")
}

/// `sum_k C(alpha, n-k) C(beta+k, k) x^k`.
pub fn id03<S: Scalar>(n: u64, alpha: &S, beta: &S, x: &S) -> S {
    let a = binom_poly_seq(alpha, n);
    let b = binom_upper_shift_seq(beta, n);
    let mut sum = S::zero();
    let mut xp = S::one();
    for k in 0..=n as usize {
        sum = sum + a[n as usize - k].clone() * b[k].clone() * xp.clone();
        xp = xp * x.clone();
    }
    sum
}

/// `sum_k C(n,k) C(s,k) / C(t+k,k)`.
pub fn id06<S: Scalar>(n: u64, s: &S, t: &S) -> Result<S, ArithError> {
    let sk = binom_poly_seq(s, n);
    let tk = binom_upper_shift_seq(t, n);
    let mut sum = S::zero();
    for k in 0..=n {
        let num = sk[k as usize].scale(&binom_int(n as i64, k as i64));
        sum = sum + num.checked_div(&tk[k as usize])?;
    }
    Ok(sum)
}

/// `sum_k (-1)^(n+k) C(n,k) C(s+k,k) C(k,p)`; with a non-integer `p` every
/// `C(k,p)` carries the factor `1/(Gamma(1+p) Gamma(1-p))`, removed here.
pub fn id07<S: Scalar>(n: u64, s: &S, p: &S) -> Result<S, ArithError> {
    let mode = lower_param_mode(p);
    let sk = binom_upper_shift_seq(s, n);
    let kp = binom_lower_param_seq(n, p, mode)?;
    let mut sum = S::zero();
    for k in 0..=n {
        let term =
            (sk[k as usize].clone() * kp[k as usize].clone()).scale(&binom_int(n as i64, k as i64));
        sum = sum + alt(term, (n + k) % 2 == 1);
    }
    Ok(sum)
}

/// `sum_k C(n,k) C(beta+k,k) x^k`.
pub fn alpha_n<S: Scalar>(n: u64, beta: &S, x: &S) -> S {
    let b = binom_upper_shift_seq(beta, n);
    let mut sum = S::zero();
    let mut xp = S::one();
    for k in 0..=n {
        sum = sum + (b[k as usize].clone() * xp.clone()).scale(&binom_int(n as i64, k as i64));
        xp = xp * x.clone();
    }
    sum
}

/// `sum_k C(s+k,k) C(2n-2k,n-k) 4^k`.
pub fn half_shift<S: Scalar>(n: u64, s: &S) -> S {
    let sk = binom_upper_shift_seq(s, n);
    let mut sum = S::zero();
    for k in 0..=n {
        let c = binom_int(2 * (n - k) as i64, (n - k) as i64) * q(4).pow(k as i32).expect("power");
        sum = sum + sk[k as usize].scale(&c);
    }
    sum
}

fn sq(x: &Rational) -> Rational {
    x * x
}

pub fn eval(id: EntryId, p: &Point, h: &Harmonics) -> Result<Rational, Skip> {
    let n = p.n;
    let ni = n as i64;
    let c = |a: i64, b: i64| binom_int(a, b);
    let range = 0..=n;
    Ok(match id {
        EntryId::Id01 => {
            let x = p.get("x");
            range
                .map(|k| {
                    c(ni, k as i64) * c(ni + k as i64, k as i64) * x.pow(k as i32).expect("power")
                })
                .sum()
        }
        EntryId::Id02 | EntryId::Id02R => {
            let (a, b, x, y) = (p.get("alpha"), p.get("beta"), p.get("x"), p.get("y"));
            let (an, bk) = (binom_poly_seq(a, n), binom_upper_shift_seq(b, n));
            range
                .map(|k| {
                    an[(n - k) as usize].clone()
                        * &bk[k as usize]
                        * x.pow(k as i32).expect("power")
                        * y.pow((n - k) as i32).expect("power")
                })
                .sum()
        }
        EntryId::Id03 => id03(n, p.get("alpha"), p.get("beta"), p.get("x")),
        EntryId::Id04 => {
            let j = p.index() as i64;
            let (a, b) = (p.get("alpha"), p.get("beta"));
            let (an, bk) = (binom_poly_seq(a, n), binom_upper_shift_seq(b, n));
            range
                .map(|k| {
                    let t = bk[k as usize].clone() * c(k as i64, j) * &an[(n - k) as usize];
                    alt(t, (k as i64 + j) % 2 == 1)
                })
                .sum()
        }
        EntryId::Id05 => q(4).pow(n as i32).expect("power") * binom_poly(p.get("lambda"), ni),
        EntryId::Id05S => {
            let lam = p.get("lambda");
            let mut sum = Rational::zero();
            for k in range {
                let top = &(q(ni) - lam) - &half();
                let den = binom_poly(&(&(q(k as i64) - lam) - &half()), k as i64);
                sum += (c(ni, k as i64) * binom_poly(&top, k as i64)).checked_div(&den)?;
            }
            sum
        }
        EntryId::Id06 => id06(n, p.get("s"), p.get("t"))?,
        EntryId::Id07 => id07(n, p.get("s"), p.get("p"))?,
        EntryId::Id08 => alpha_n(n, p.get("beta"), p.get("x")),
        EntryId::Id08A => {
            let k = p.index() as i64;
            let b = p.get("beta");
            binom_poly(b, ni - k) * binom_upper_shift(b, k as u64)
        }
        EntryId::Id09 => {
            let b = p.get("beta");
            range
                .map(|k| alt(c(ni, k as i64) * binom_poly(&(b + &q(k as i64)), ni), k % 2 == 1))
                .sum()
        }
        EntryId::Id10 => {
            let b = p.get("beta");
            let bk = binom_upper_shift_seq(b, n);
            range.map(|k| alt(c(ni, k as i64) * &bk[k as usize], k % 2 == 1)).sum()
        }
        EntryId::Id11 | EntryId::Id16 => h.h(n).clone(),
        EntryId::Id12 => {
            let x = p.get("x");
            let quarter_x = x * &Rational::from_ratio(1, 4).expect("nonzero");
            range
                .map(|k| {
                    c(ni, k as i64)
                        * c(2 * k as i64, k as i64)
                        * quarter_x.pow(k as i32).expect("power")
                })
                .sum()
        }
        EntryId::Id13 | EntryId::Id13P => {
            let t = p.get("t");
            let x = (t * t + q(1)).checked_div(&(t + t))?;
            let v = legendre_table(n, &x).pop().expect("nonempty");
            if id == EntryId::Id13P {
                t.pow(ni as i32)? * v
            } else {
                v
            }
        }
        EntryId::Id14 => {
            let t = p.get("t");
            let x = (t * t + q(1)).checked_div(&(t + t))?;
            let pk = legendre_table(n, &x);
            range
                .map(|k| {
                    alt(
                        c(ni, k as i64) * &pk[k as usize] * t.pow(k as i32).expect("t nonzero"),
                        k % 2 == 1,
                    )
                })
                .sum()
        }
        EntryId::Id15 => {
            let sk = binom_upper_shift_seq(p.get("s"), n);
            range.map(|k| alt(c(ni, k as i64) * &sk[k as usize] * h.h(k), (n + k) % 2 == 1)).sum()
        }
        EntryId::Id17 => (1..=n)
            .map(|k| {
                let t = c(ni, k as i64)
                    * c(2 * k as i64, k as i64)
                    * h.h(k)
                    * q(4).pow(-(k as i32)).expect("power");
                alt(t, k % 2 == 1)
            })
            .sum(),
        EntryId::Id18 => sq(h.h(n)),
        EntryId::Id18G => {
            let sk = binom_upper_shift_seq(p.get("s"), n);
            range
                .map(|k| {
                    let w = sq(h.h(k)) + h.h2(k);
                    alt(c(ni, k as i64) * &sk[k as usize] * w, (n + k) % 2 == 1)
                })
                .sum()
        }
        EntryId::Id19 => {
            let (s, pp) = (p.get("s"), p.get("p"));
            let mode = lower_param_mode(pp);
            let spk = binom_poly_seq(&(s + pp), n);
            let kp = binom_lower_param_seq(n, pp, mode)?;
            range.map(|k| c(ni, k as i64) * &spk[k as usize] * &kp[k as usize]).sum()
        }
        EntryId::Id20 => {
            let mut sum = Rational::zero();
            for k in range {
                let num = q(4).pow(k as i32).expect("power") * sq(&c(ni, k as i64));
                sum += num.checked_div(&c(2 * k as i64, k as i64))?;
            }
            sum
        }
        EntryId::Id20E => range
            .map(|k| {
                c(2 * ni, 2 * k as i64)
                    * c(2 * (ni - k as i64), ni - k as i64)
                    * q(4).pow(k as i32).expect("power")
            })
            .sum(),
        EntryId::Id21 => half_shift(n, p.get("s")),
        EntryId::Id22 => range
            .map(|k| c(2 * k as i64, k as i64) * h.h(n - k) * q(4).pow(-(k as i32)).expect("power"))
            .sum(),
        EntryId::Id23 => range.map(|k| q(k as i64) * sq(&c(ni, k as i64))).sum(),
        EntryId::Id24 => range.map(|k| sq(&c(ni, k as i64)) * h.h(k)).sum(),
        EntryId::Id25 => range.map(|k| sq(&c(ni, k as i64)) * h.h(k) * h.h(n - k)).sum(),
        EntryId::Id26 => range.map(|k| sq(&c(ni, k as i64)) * (sq(h.h(k)) + h.h2(k))).sum(),
    })
}
