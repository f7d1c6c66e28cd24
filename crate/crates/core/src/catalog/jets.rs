//! The jet oracle: harmonic-number identities obtained by differentiating a
//! parametric base identity, computed by evaluating both sides of the base
//! at [`Jet2`] arguments.

use super::{lhs, rhs, EntryId, Point, Skip};
use crate::exact::{Harmonics, Jet2, Rational, Scalar};

/// Which derivative of the base identity to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeSpec {
    Value,
    First(&'static str),
    Second(&'static str),
    Mixed(&'static str, &'static str),
}

impl DerivativeSpec {
    fn lift(&self, name: &str, v: &Rational) -> Jet2 {
        match *self {
            DerivativeSpec::First(a) | DerivativeSpec::Second(a) if a == name => {
                Jet2::var1(v.clone())
            }
            DerivativeSpec::Mixed(a, _) if a == name => Jet2::var1(v.clone()),
            DerivativeSpec::Mixed(_, b) if b == name => Jet2::var2(v.clone()),
            _ => Jet2::constant(v.clone()),
        }
    }

    fn extract(&self, j: &Jet2) -> Rational {
        match self {
            DerivativeSpec::Value => j.value().clone(),
            DerivativeSpec::First(_) => j.d1().clone(),
            DerivativeSpec::Second(_) => j.d11(),
            DerivativeSpec::Mixed(..) => j.c12().clone(),
        }
    }
}

fn base_pair(base: EntryId, spec: &DerivativeSpec, p: &Point) -> Result<(Jet2, Jet2), Skip> {
    let n = p.n;
    let arg = |name: &str| -> Result<Jet2, Skip> {
        p.values
            .get(name)
            .map(|v| spec.lift(name, v))
            .ok_or_else(|| Skip(format!("missing parameter {name}")))
    };
    Ok(match base {
        EntryId::Id06 => {
            let (s, t) = (arg("s")?, arg("t")?);
            (lhs::id06(n, &s, &t)?, rhs::id06(n, &s, &t)?)
        }
        EntryId::Id07 => {
            let (s, pp) = (arg("s")?, arg("p")?);
            (lhs::id07(n, &s, &pp)?, rhs::id07(n, &s, &pp)?)
        }
        EntryId::Id08 => {
            let (b, x) = (arg("beta")?, arg("x")?);
            (lhs::alpha_n(n, &b, &x), rhs::alpha_n(n, &b, &x))
        }
        EntryId::Id21 => {
            let s = arg("s")?;
            (lhs::half_shift(n, &s), rhs::half_shift(n, &s)?)
        }
        other => return Err(Skip(format!("{other} is not a jet base"))),
    })
}

/// The requested derivative of both sides of `base` at `point`.
pub fn derived_identity_via_jets(
    base: EntryId,
    spec: DerivativeSpec,
    point: &Point,
) -> Result<(Rational, Rational), Skip> {
    let (l, r) = base_pair(base, &spec, point)?;
    Ok((spec.extract(&l), spec.extract(&r)))
}

fn q(s: &str) -> Rational {
    s.parse().expect("literal")
}

fn neg_pow(n: u64) -> Rational {
    if n % 2 == 1 {
        q("-1")
    } else {
        q("1")
    }
}

/// Both sides of a derived catalog entry, obtained through the jet oracle.
pub fn jet_target(id: EntryId, point: &Point, h: &Harmonics) -> Result<(Rational, Rational), Skip> {
    use DerivativeSpec::*;
    let n = point.n;
    let nq = Rational::from(n);
    let at = |pairs: &[(&str, Rational)]| {
        let mut p = Point::new(n);
        for (k, v) in pairs {
            p = p.with(k, v.clone());
        }
        p
    };
    let half = q("1/2");
    let quarter = q("1/4");
    let sign = neg_pow(n);
    Ok(match id {
        EntryId::Id11 => {
            let p = at(&[("beta", nq), ("x", q("-1"))]);
            let (l, r) = derived_identity_via_jets(EntryId::Id08, First("beta"), &p)?;
            let (l0, _) = derived_identity_via_jets(EntryId::Id08, Value, &p)?;
            (&sign * &r, &half * &sign * (l + h.h(n) * &l0))
        }
        EntryId::Id15 => {
            let p = at(&[("s", point.get("s").clone()), ("p", q("0"))]);
            derived_identity_via_jets(EntryId::Id07, First("p"), &p)?
        }
        EntryId::Id16 => {
            let p = at(&[("s", nq), ("p", q("0"))]);
            let (l, r) = derived_identity_via_jets(EntryId::Id07, First("p"), &p)?;
            (&half * &r, &half * &l)
        }
        EntryId::Id17 => {
            let p = at(&[("s", q("-1/2")), ("p", q("0"))]);
            let (l, r) = derived_identity_via_jets(EntryId::Id07, First("p"), &p)?;
            (&sign * &l, &sign * &r)
        }
        EntryId::Id18 => {
            let p = at(&[("s", nq), ("p", q("0"))]);
            let (l, r) = derived_identity_via_jets(EntryId::Id07, Second("p"), &p)?;
            (&quarter * &r, &quarter * &l)
        }
        EntryId::Id18G => {
            let p = at(&[("s", point.get("s").clone()), ("p", q("0"))]);
            derived_identity_via_jets(EntryId::Id07, Second("p"), &p)?
        }
        EntryId::Id22 => {
            let p = at(&[("s", q("0"))]);
            let (l, r) = derived_identity_via_jets(EntryId::Id21, First("s"), &p)?;
            let scale = Rational::from(4i64).pow(-(n as i32))?;
            (&scale * &l, &scale * &r)
        }
        EntryId::Id24 => {
            let p = at(&[("s", nq), ("t", q("0"))]);
            let (l, r) = derived_identity_via_jets(EntryId::Id06, First("t"), &p)?;
            (-l, -r)
        }
        EntryId::Id25 => {
            let p = at(&[("s", nq), ("t", q("0"))]);
            let (lm, rm) = derived_identity_via_jets(EntryId::Id06, Mixed("s", "t"), &p)?;
            let (lt, rt) = derived_identity_via_jets(EntryId::Id06, First("t"), &p)?;
            (lm - h.h(n) * &lt, rm - h.h(n) * &rt)
        }
        EntryId::Id26 => {
            let p = at(&[("s", nq), ("t", q("0"))]);
            derived_identity_via_jets(EntryId::Id06, Second("t"), &p)?
        }
        other => return Err(Skip(format!("{other} has no jet derivation"))),
    })
}
