//! The identity catalog.
//!
//! Every entry has a left-hand and a right-hand evaluator, kept in separate
//! source files ([`lhs`] and [`rhs`]) that share nothing beyond
//! [`crate::exact`] and [`crate::special`]. The harmonic-number entries are
//! additionally re-derived by lifting a parametric base identity to
//! [`Jet2`](crate::exact::Jet2) values ([`jets`]).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exact::{ArithError, Harmonics, Rational};

pub mod jets;
pub mod lhs;
pub mod rhs;
mod suite;
pub mod taylor;

pub use jets::{derived_identity_via_jets, jet_target, DerivativeSpec};
pub use suite::{run_suite, CatalogMutation, SuiteConfig};
pub use taylor::taylor_route_check;

macro_rules! entry_ids {
    ($($v:ident => $s:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum EntryId { $($v),* }

        impl EntryId {
            pub const ALL: &'static [EntryId] = &[$(EntryId::$v),*];

            pub fn as_str(self) -> &'static str {
                match self { $(EntryId::$v => $s),* }
            }
        }

        impl FromStr for EntryId {
            type Err = String;
            fn from_str(s: &str) -> Result<Self, String> {
                match s.to_ascii_uppercase().as_str() {
                    $($s => Ok(EntryId::$v),)*
                    _ => Err(format!("unknown identity {s:?}")),
                }
            }
        }
    };
}

entry_ids! {
    Id01 => "ID01", Id02 => "ID02", Id02R => "ID02R", Id03 => "ID03", Id04 => "ID04",
    Id05 => "ID05", Id05S => "ID05S", Id06 => "ID06", Id07 => "ID07", Id08 => "ID08",
    Id08A => "ID08A", Id09 => "ID09", Id10 => "ID10", Id11 => "ID11", Id12 => "ID12",
    Id13 => "ID13", Id13P => "ID13P", Id14 => "ID14", Id15 => "ID15", Id16 => "ID16",
    Id17 => "ID17", Id18 => "ID18", Id18G => "ID18G", Id19 => "ID19", Id20 => "ID20",
    Id20E => "ID20E", Id21 => "ID21", Id22 => "ID22", Id23 => "ID23", Id24 => "ID24",
    Id25 => "ID25", Id26 => "ID26",
}

impl fmt::Display for EntryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Admissible values of a continuous parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Any,
    NotNegativeInteger,
    NonZero,
}

impl Domain {
    pub fn admits(self, v: &Rational) -> bool {
        match self {
            Domain::Any => true,
            Domain::NotNegativeInteger => !v.is_negative_integer(),
            Domain::NonZero => !v.is_zero(),
        }
    }

    fn describe(self) -> &'static str {
        match self {
            Domain::Any => "any rational",
            Domain::NotNegativeInteger => "not a negative integer",
            Domain::NonZero => "nonzero",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub params: &'static [(&'static str, Domain)],
    /// An integer index that ranges over `0..=n` in addition to `n`.
    pub inner: Option<&'static str>,
}

impl ParamSpec {
    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.params.iter().map(|(n, _)| *n)
    }

    /// `Some(reason)` when the point lies outside the domain.
    pub fn reject(&self, point: &Point) -> Option<String> {
        for (name, dom) in self.params {
            match point.values.get(*name) {
                None => return Some(format!("missing parameter {name}")),
                Some(v) if !dom.admits(v) => {
                    return Some(format!("{name} = {v} excluded ({})", dom.describe()))
                }
                _ => {}
            }
        }
        match (self.inner, point.j) {
            (Some(name), None) => Some(format!("missing index {name}")),
            (Some(name), Some(j)) if j > point.n => Some(format!("{name} = {j} exceeds n")),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Entry {
    pub id: EntryId,
    pub title: &'static str,
    pub source: &'static str,
    pub spec: ParamSpec,
    pub n_max: u64,
    /// Whether the jet oracle re-derives this entry.
    pub jet: bool,
}

use Domain::{Any, NonZero, NotNegativeInteger as NotNegInt};

const fn spec(params: &'static [(&'static str, Domain)]) -> ParamSpec {
    ParamSpec { params, inner: None }
}

const NONE: ParamSpec = spec(&[]);

const fn e(
    id: EntryId,
    title: &'static str,
    source: &'static str,
    spec: ParamSpec,
    n_max: u64,
    jet: bool,
) -> Entry {
    Entry { id, title, source, spec, n_max, jet }
}

#[rustfmt::skip]
pub const CATALOG: &[Entry] = &[
    e(EntryId::Id01, "sum C(n,k)C(n+k,k)x^k = sum (-1)^(n+k)C(n,k)C(n+k,k)(x+1)^k", "Simons' curious identity", spec(&[("x", Any)]), 30, false),
    e(EntryId::Id02, "two-variable generalization with y", "Munarini's generalization", spec(&[("alpha", NotNegInt), ("beta", NotNegInt), ("x", Any), ("y", Any)]), 30, false),
    e(EntryId::Id02R, "ID02 equals y^n times ID03 at x/y", "replacing x by x/y", spec(&[("alpha", NotNegInt), ("beta", NotNegInt), ("x", Any), ("y", NonZero)]), 30, false),
    e(EntryId::Id03, "sum C(alpha,n-k)C(beta+k,k)x^k = sum (-1)^(n+j)C(beta-alpha+n,n-j)C(beta+j,j)(x+1)^j", "WZ pair thm1", spec(&[("alpha", NotNegInt), ("beta", NotNegInt), ("x", Any)]), 30, false),
    e(EntryId::Id04, "coefficient of (x+1)^j in ID03", "comparing coefficients", ParamSpec { params: &[("alpha", NotNegInt), ("beta", NotNegInt)], inner: Some("j") }, 30, false),
    e(EntryId::Id05, "4^n C(lambda,n) = C(2 lambda,n) sum C(n,k)C(n-lambda-1/2,k)/C(k-lambda-1/2,k)", "Alzer-Kouba identity", spec(&[("lambda", Any)]), 30, false),
    e(EntryId::Id05S, "Alzer-Kouba sum equals the ID06 sum at s=n-lambda-1/2, t=-lambda-1/2", "substitution into ID06", spec(&[("lambda", Any)]), 30, false),
    e(EntryId::Id06, "sum C(n,k)C(s,k)/C(t+k,k) = prod (s+t+i)/(t+i)", "WZ pair thm2", spec(&[("s", NotNegInt), ("t", NotNegInt)]), 30, false),
    e(EntryId::Id07, "sum (-1)^(n+k)C(n,k)C(s+k,k)C(k,p) = C(n,p)C(s+p,n)", "WZ pair thm3", spec(&[("s", NotNegInt), ("p", NotNegInt)]), 30, false),
    e(EntryId::Id08, "sum C(n,k)C(beta+k,k)x^k = sum (-1)^(n+k)C(n,k)C(beta+k,n)(1+x)^k", "ID03 at alpha = n", spec(&[("beta", NotNegInt), ("x", Any)]), 30, false),
    e(EntryId::Id08A, "C(beta,n-k)C(beta+k,k) = C(n,k)C(beta+k,n)", "auxiliary product identity", ParamSpec { params: &[("beta", NotNegInt)], inner: Some("k") }, 30, false),
    e(EntryId::Id09, "sum (-1)^k C(n,k)C(beta+k,n) = (-1)^n", "ID08 at x = 0", spec(&[("beta", NotNegInt)]), 30, false),
    e(EntryId::Id10, "sum (-1)^k C(n,k)C(beta+k,k) = (-1)^n C(beta,n)", "ID08 at x = -1", spec(&[("beta", NotNegInt)]), 30, false),
    e(EntryId::Id11, "H_n = 1/2 sum (-1)^(n+k)C(n,k)C(n+k,k)H_(n+k)", "beta-derivative of ID08", NONE, 100, true),
    e(EntryId::Id12, "sum C(n,k)C(2k,k)x^k/4^k = 4^-n sum C(2k,k)C(2n-2k,n-k)(1+x)^k", "ID08 at beta = -1/2", spec(&[("x", Any)]), 30, false),
    e(EntryId::Id13, "P_n((t^2+1)/(2t)) = t^-n sum C(n,k)C(2k,k)((t^2-1)/4)^k", "Legendre representation", spec(&[("t", NonZero)]), 50, false),
    e(EntryId::Id13P, "t^n P_n((t^2+1)/(2t)) = 4^-n sum C(2k,k)C(2n-2k,n-k)t^(2k)", "Legendre product form", spec(&[("t", NonZero)]), 50, false),
    e(EntryId::Id14, "sum (-1)^k C(n,k)P_k((t^2+1)/(2t))t^k = C(2n,n)((1-t^2)/4)^n", "Legendre inversion", spec(&[("t", NonZero)]), 50, false),
    e(EntryId::Id15, "sum (-1)^(n+k)C(n,k)C(s+k,k)H_k = C(s,n)(H_n + psi(s+1) - psi(s-n+1))", "p-derivative of ID07", spec(&[("s", NotNegInt)]), 50, true),
    e(EntryId::Id16, "H_n = 1/2 sum (-1)^(n+k)C(n,k)C(n+k,k)H_k", "ID15 at s = n", NONE, 100, true),
    e(EntryId::Id17, "sum (-1)^k C(n,k)C(2k,k)H_k/4^k = 2^(1-2n)C(2n,n)(H_n - H_2n)", "ID15 at a half-integer s", NONE, 100, true),
    e(EntryId::Id18, "H_n^2 = 1/4 sum (-1)^(n+k)C(n,k)C(n+k,k)(H_k^2 + H_k^(2))", "second p-derivative of ID07 at s = n", NONE, 100, true),
    e(EntryId::Id18G, "sum (-1)^(n+k)C(n,k)C(s+k,k)(H_k^2 + H_k^(2)) = C(s,n)((H_n + D)^2 + H_n^(2) + T)", "second p-derivative of ID07", spec(&[("s", NotNegInt)]), 30, true),
    e(EntryId::Id19, "sum C(n,k)C(s+p,k)C(k,p) = C(n,p)C(s+n,n)", "binomial inversion of ID07", spec(&[("s", NotNegInt), ("p", NotNegInt)]), 30, false),
    e(EntryId::Id20, "sum 4^k C(n,k)^2/C(2k,k) = C(4n,2n)/C(2n,n)", "ID19 at s = n-1/2, p = 1/2", NONE, 100, false),
    e(EntryId::Id20E, "sum C(2n,2k)C(2n-2k,n-k)4^k = C(4n,2n)", "rewritten form of ID20", NONE, 100, false),
    e(EntryId::Id21, "sum C(s+k,k)C(2n-2k,n-k)4^k = C(2n,n)C(2n+2s+1,2s+1)/C(n+s,n)", "half-integer specialization", spec(&[("s", NotNegInt)]), 30, false),
    e(EntryId::Id22, "sum C(2k,k)H_(n-k)/4^k = (2n+1)4^-n C(2n,n)(2H_(2n+1) - H_n - 2)", "s-derivative of ID21", NONE, 100, true),
    e(EntryId::Id23, "sum k C(n,k)^2 = n/2 C(2n,n)", "ID06 at s = n, t = 1", NONE, 100, false),
    e(EntryId::Id24, "sum C(n,k)^2 H_k = C(2n,n)(2H_n - H_2n)", "t-derivative of ID06", NONE, 100, true),
    e(EntryId::Id25, "sum C(n,k)^2 H_k H_(n-k) = C(2n,n)((H_2n - 2H_n)^2 + H_n^(2) - H_2n^(2))", "mixed s,t-derivative of ID06", NONE, 50, true),
    e(EntryId::Id26, "sum C(n,k)^2 (H_k^2 + H_k^(2)) = C(2n,n)((H_2n - 2H_n)^2 + 2H_n^(2) - H_2n^(2))", "second t-derivative of ID06", NONE, 50, true),
];

pub fn entry(id: EntryId) -> &'static Entry {
    CATALOG.iter().find(|e| e.id == id).expect("every id has an entry")
}

/// A concrete evaluation point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub n: u64,
    pub j: Option<u64>,
    pub values: BTreeMap<String, Rational>,
}

impl Point {
    pub fn new(n: u64) -> Self {
        Point { n, j: None, values: BTreeMap::new() }
    }

    pub fn with(mut self, name: &str, v: Rational) -> Self {
        self.values.insert(name.to_string(), v);
        self
    }

    pub fn with_index(mut self, j: u64) -> Self {
        self.j = Some(j);
        self
    }

    /// Panics if the parameter is missing; evaluators run after
    /// [`ParamSpec::reject`].
    pub fn get(&self, name: &str) -> &Rational {
        &self.values[name]
    }

    pub fn index(&self) -> u64 {
        self.j.expect("entry has an inner index")
    }
}

/// Why a side could not be evaluated at a point.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct Skip(pub String);

impl From<ArithError> for Skip {
    fn from(e: ArithError) -> Self {
        Skip(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

/// Harmonic numbers large enough for every entry at `n <= n_max`.
pub fn harmonics_for(n_max: u64) -> Harmonics {
    Harmonics::new(2 * n_max + 2)
}

pub fn evaluate_side(
    id: EntryId,
    side: Side,
    point: &Point,
    h: &Harmonics,
) -> Result<Rational, Skip> {
    evaluate_side_with(id, side, point, h, None)
}

pub(crate) fn evaluate_side_with(
    id: EntryId,
    side: Side,
    point: &Point,
    h: &Harmonics,
    mutation: Option<CatalogMutation>,
) -> Result<Rational, Skip> {
    if let Some(reason) = entry(id).spec.reject(point) {
        return Err(Skip(reason));
    }
    match side {
        Side::Lhs => lhs::eval(id, point, h),
        Side::Rhs => rhs::eval(id, point, h, mutation),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub id: EntryId,
    pub point: Point,
    pub outcome: Result<(Rational, Rational), Skip>,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        matches!(&self.outcome, Ok((l, r)) if l == r)
    }
}

pub fn check_identity(id: EntryId, point: &Point) -> CheckRecord {
    let h = harmonics_for(point.n);
    check_identity_with(id, point, &h, None)
}

pub(crate) fn check_identity_with(
    id: EntryId,
    point: &Point,
    h: &Harmonics,
    mutation: Option<CatalogMutation>,
) -> CheckRecord {
    let outcome = evaluate_side_with(id, Side::Lhs, point, h, mutation)
        .and_then(|l| evaluate_side_with(id, Side::Rhs, point, h, mutation).map(|r| (l, r)));
    CheckRecord { id, point: point.clone(), outcome }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn values(id: EntryId, p: &Point) -> (Rational, Rational) {
        let r = check_identity(id, p);
        r.outcome.unwrap()
    }

    #[test]
    fn ids_round_trip_and_catalog_is_complete() {
        for id in EntryId::ALL {
            assert_eq!(id.as_str().parse::<EntryId>().unwrap(), *id);
            assert_eq!(entry(*id).id, *id);
        }
        assert_eq!(CATALOG.len(), EntryId::ALL.len());
        assert!("ID99".parse::<EntryId>().is_err());
    }

    #[test]
    fn spot_values() {
        let p = Point::new(1).with("alpha", q("1/2")).with("beta", q("1/3")).with("x", q("2"));
        assert_eq!(values(EntryId::Id03, &p), (q("19/6"), q("19/6")));
        let p = Point::new(2).with("s", q("1/2")).with("t", q("1/3"));
        assert_eq!(values(EntryId::Id06, &p).1, q("187/112"));
        let p = Point::new(2).with("s", q("1/2")).with("p", q("1"));
        assert_eq!(values(EntryId::Id07, &p), (q("3/4"), q("3/4")));
        assert_eq!(values(EntryId::Id01, &Point::new(1).with("x", q("1"))), (q("3"), q("3")));
        assert_eq!(values(EntryId::Id16, &Point::new(2)), (q("3/2"), q("3/2")));
        let p = Point::new(2).with("s", q("1/2"));
        assert_eq!(values(EntryId::Id15, &p), (q("-3/16"), q("-3/16")));
        assert_eq!(values(EntryId::Id18, &Point::new(2)), (q("9/4"), q("9/4")));
        assert_eq!(values(EntryId::Id25, &Point::new(2)), (q("4"), q("4")));
        assert_eq!(values(EntryId::Id24, &Point::new(2)), (q("11/2"), q("11/2")));
        assert_eq!(values(EntryId::Id05, &Point::new(1).with("lambda", q("1"))), (q("4"), q("4")));
        assert_eq!(values(EntryId::Id09, &Point::new(2).with("beta", q("1/3"))), (q("1"), q("1")));
        assert_eq!(values(EntryId::Id20E, &Point::new(1)), (q("6"), q("6")));
        assert_eq!(values(EntryId::Id21, &Point::new(2).with("s", q("1/2"))), (q("48"), q("48")));
        assert_eq!(values(EntryId::Id22, &Point::new(2)), (q("2"), q("2")));
        assert_eq!(values(EntryId::Id26, &Point::new(1)), (q("2"), q("2")));
        assert_eq!(values(EntryId::Id01, &Point::new(0).with("x", q("5"))), (q("1"), q("1")));
        let p = Point::new(1).with("alpha", q("1/2")).with("beta", q("1/3")).with_index(0);
        assert_eq!(values(EntryId::Id04, &p), (q("-5/6"), q("-5/6")));
    }

    #[test]
    fn exclusions_skip() {
        let p = Point::new(2).with("s", q("-3")).with("t", q("1/3"));
        assert!(check_identity(EntryId::Id06, &p).outcome.is_err());
        let p = Point::new(3).with("s", q("1"));
        let r = check_identity(EntryId::Id15, &p);
        assert!(matches!(r.outcome, Err(Skip(ref m)) if m.contains("digamma")), "{r:?}");
        let p = Point::new(3).with("t", q("0"));
        assert!(check_identity(EntryId::Id13, &p).outcome.is_err());
        let p = Point::new(3).with("beta", q("1/2"));
        assert!(check_identity(EntryId::Id08A, &p).outcome.is_err());
    }
}
