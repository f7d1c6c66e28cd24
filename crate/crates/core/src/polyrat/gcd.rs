//! Multivariate GCD by recursive content/primitive-part decomposition and a
//! primitive pseudo-remainder sequence in the variable of lowest degree.
//!
//! The polynomials met here have a handful of variables and total degree
//! below ten, where this recursion is plenty fast.

use super::{MultiPoly, Var};
use crate::exact::Rational;

/// Greatest common divisor, normalized to leading coefficient 1. The gcd of
/// two zero polynomials is zero.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return monic(b);
    }
    if b.is_zero() {
        return monic(a);
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    let (va, vb) = (a.vars(), b.vars());
    if let Some(v) = va.difference(&vb).next() {
        return gcd(&content_and_primitive(a, v).0, b);
    }
    if let Some(v) = vb.difference(&va).next() {
        return gcd(a, &content_and_primitive(b, v).0);
    }
    let v =
        va.iter().min_by_key(|v| a.degree_in(v).max(b.degree_in(v))).expect("nonconstant").clone();

    let (ca, pa) = content_and_primitive(a, &v);
    let (cb, pb) = content_and_primitive(b, &v);
    let g_content = gcd(&ca, &cb);
    let g_prim = primitive_gcd(pa, pb, &v);
    monic(&(&g_content * &g_prim))
}

fn monic(p: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return MultiPoly::zero();
    }
    let lc = p.leading_coefficient();
    p.scale(&lc.recip().expect("nonzero leading coefficient"))
}

/// Content in `v` (gcd of the coefficients as polynomials in the other
/// variables) and the matching primitive part.
fn content_and_primitive(p: &MultiPoly, v: &Var) -> (MultiPoly, MultiPoly) {
    let coeffs = p.coefficients_in(v);
    let mut content = MultiPoly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        content = gcd(&content, c);
        if content.is_constant() {
            break;
        }
    }
    let prim = p.exact_div(&content).expect("content divides polynomial");
    (content, monic(&prim))
}

fn primitive_part(p: &MultiPoly, v: &Var) -> MultiPoly {
    content_and_primitive(p, v).1
}

/// Pseudo-remainder of `a` by `b` as polynomials in `v`.
fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, v: &Var) -> MultiPoly {
    let db = b.degree_in(v);
    let lb = b.lc_in(v);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.lc_in(v);
        let shift = super::Monomial::var(v.clone(), dr - db);
        let t = (&lr * b).mul_monomial(&shift, &Rational::one());
        r = &(&r * &lb) - &t;
    }
    r
}

fn primitive_gcd(a: MultiPoly, b: MultiPoly, v: &Var) -> MultiPoly {
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    loop {
        if b.is_zero() {
            return a;
        }
        if b.degree_in(v) == 0 {
            // primitive and free of v: a unit in the v-direction
            return MultiPoly::one();
        }
        let r = pseudo_rem(&a, &b, v);
        a = b;
        b = if r.is_zero() { r } else { primitive_part(&r, v) };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyrat::{parse_expr, to_ratfunc};

    fn poly(text: &str) -> MultiPoly {
        let r = to_ratfunc(&parse_expr(text).unwrap()).unwrap();
        assert!(r.den().is_constant());
        r.num().scale(&r.den().as_constant().unwrap().recip().unwrap())
    }

    #[test]
    fn univariate() {
        assert_eq!(gcd(&poly("n^2 - 1"), &poly("n^2 + 2*n + 1")), poly("n + 1"));
        assert_eq!(gcd(&poly("n^2 + 1"), &poly("n + 1")), poly("1"));
    }

    #[test]
    fn multivariate_common_factor() {
        let f = poly("(k - n - 1)*(alpha - beta - n - 1)");
        let a = &f * &poly("(j - k)*(alpha + k - n)");
        let b = &f * &poly("(k + 1)*(beta + 2)");
        assert_eq!(gcd(&a, &b), poly("(k - n - 1)*(alpha - beta - n - 1)"));
    }

    #[test]
    fn content_in_other_variables() {
        let a = poly("(s + t)*(n + k)");
        let b = poly("(s + t)*(n - k)");
        assert_eq!(gcd(&a, &b), poly("s + t"));
    }

    #[test]
    fn zero_and_constants() {
        assert_eq!(gcd(&MultiPoly::zero(), &poly("2*n + 4")), poly("n + 2"));
        assert_eq!(gcd(&poly("3"), &poly("5/7")), MultiPoly::one());
    }
}
