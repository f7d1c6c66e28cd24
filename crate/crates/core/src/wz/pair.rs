use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{HyperTerm, TermError};
use crate::draw::{draw_admissible, rng_for, tag, MAX_ATTEMPTS};
use crate::exact::Rational;
use crate::polyrat::{parse_expr, to_ratfunc, Assignment, RatFunc, Var};
use crate::report::{Row, Status};

/// A hypergeometric term together with its WZ certificate `c = G / T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WZPair {
    pub name: String,
    pub term: HyperTerm,
    pub certificate: RatFunc,
    /// `sigma` in `sigma * (T(n+1,k) - T(n,k)) = G(n,k+1) - G(n,k)`.
    pub orientation: i8,
    /// Continuous parameters, drawn at random during verification.
    pub params: Vec<Var>,
    /// Extra integer indices ranging over `0..=n`.
    pub indices: Vec<Var>,
}

fn n_var() -> Var {
    Var::new("n")
}

fn k_var() -> Var {
    Var::new("k")
}

/// The WZ difference equation divided by `T(n,k)`, in canonical form.
pub fn certificate_residual(pair: &WZPair) -> Result<RatFunc, TermError> {
    let (n, k) = (n_var(), k_var());
    let r_n = pair.term.shift_ratio(&n)?;
    let r_k = pair.term.shift_ratio(&k)?;
    let c = &pair.certificate;
    let c_next = c.shift(&k, &Rational::one());
    let sigma = Rational::from(pair.orientation as i64);
    Ok(r_n.sub(&RatFunc::one()).scale(&sigma).sub(&c_next.mul(&r_k)).add(c))
}

/// Corruptions used as negative controls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WzMutation {
    ScaleCertificate(Rational),
    AddToCertificate(RatFunc),
    FlipExponent(usize),
    FlipOrientation,
}

impl WzMutation {
    pub fn apply(&self, pair: &WZPair) -> Result<WZPair, String> {
        let mut out = pair.clone();
        match self {
            WzMutation::ScaleCertificate(q) => out.certificate = out.certificate.scale(q),
            WzMutation::AddToCertificate(r) => out.certificate = out.certificate.add(r),
            WzMutation::FlipExponent(i) => {
                let f = out
                    .term
                    .factors
                    .get_mut(*i)
                    .ok_or_else(|| format!("factor index {i} out of range"))?;
                f.exponent = -f.exponent;
            }
            WzMutation::FlipOrientation => out.orientation = -out.orientation,
        }
        Ok(out)
    }
}

impl FromStr for WzMutation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
        match kind {
            "scale-cert" => arg
                .parse()
                .map(WzMutation::ScaleCertificate)
                .map_err(|e| format!("bad scale factor {arg:?}: {e}")),
            "add-cert" => {
                let e = parse_expr(arg).map_err(|e| e.to_string())?;
                to_ratfunc(&e).map(WzMutation::AddToCertificate).map_err(|e| e.to_string())
            }
            "flip-exp" => arg
                .parse()
                .map(WzMutation::FlipExponent)
                .map_err(|_| format!("bad factor index {arg:?}")),
            "flip-orientation" if arg.is_empty() => Ok(WzMutation::FlipOrientation),
            _ => Err(format!("unknown wz mutation {s:?}")),
        }
    }
}

impl fmt::Display for WzMutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WzMutation::ScaleCertificate(q) => write!(f, "scale-cert:{q}"),
            WzMutation::AddToCertificate(r) => write!(f, "add-cert:{r}"),
            WzMutation::FlipExponent(i) => write!(f, "flip-exp:{i}"),
            WzMutation::FlipOrientation => write!(f, "flip-orientation"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DrawOutcome {
    Pass,
    Fail { n: u64, index: Vec<(Var, i64)>, sum: Rational },
    Skipped(String),
}

/// Every assignment of `indices` with values in `0..=n`.
fn index_grid(indices: &[Var], n: i64) -> Vec<Vec<(Var, i64)>> {
    let mut grid = vec![Vec::new()];
    for v in indices {
        grid = grid
            .into_iter()
            .flat_map(|prefix| {
                (0..=n).map(move |j| {
                    let mut p = prefix.clone();
                    p.push((v.clone(), j));
                    p
                })
            })
            .collect();
    }
    grid
}

fn point(params: &Assignment, index: &[(Var, i64)], n: i64, k: i64) -> Assignment {
    let mut a = params.clone();
    for (v, j) in index {
        a.insert(v.clone(), Rational::from(*j));
    }
    a.insert(n_var(), Rational::from(n));
    a.insert(k_var(), Rational::from(k));
    a
}

/// `sum_{k=0..n} T(n,k)` at the given parameters and extra indices.
pub fn sum_over_k(
    term: &HyperTerm,
    params: &Assignment,
    index: &[(Var, i64)],
    n: i64,
) -> Result<Rational, TermError> {
    let mut total = Rational::zero();
    for k in 0..=n {
        total += term.eval(&point(params, index, n, k))?;
    }
    Ok(total)
}

fn telescoping_one(
    term: &HyperTerm,
    indices: &[Var],
    n_max: u64,
    params: &Assignment,
) -> Result<DrawOutcome, TermError> {
    for n in 0..=n_max as i64 {
        for index in index_grid(indices, n) {
            let sum = sum_over_k(term, params, &index, n)?;
            if !sum.is_one() {
                return Ok(DrawOutcome::Fail { n: n as u64, index, sum });
            }
        }
    }
    Ok(DrawOutcome::Pass)
}

/// Checks `sum_{k=0..n} T(n,k) = 1` exactly for every `n <= n_max`, every
/// value of the extra indices in `0..=n`, and every parameter draw.
pub fn telescoping_sum_check(
    term: &HyperTerm,
    indices: &[Var],
    n_max: u64,
    draws: &[Assignment],
) -> Vec<DrawOutcome> {
    draws
        .par_iter()
        .map(|params| match telescoping_one(term, indices, n_max, params) {
            Ok(o) => o,
            Err(TermError::Pole) => DrawOutcome::Skipped("pole".into()),
            Err(e) => DrawOutcome::Skipped(e.to_string()),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub pair: String,
    pub rows: Vec<Row>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.status != Status::Fail)
    }

    pub fn symbolic_passed(&self) -> bool {
        self.rows.iter().any(|r| r.id.ends_with("/symbolic") && r.status == Status::Pass)
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.status == Status::Fail).count()
    }
}

/// `G(n,k) = c(n,k) * T(n,k)`, taken to vanish wherever `T` does.
fn companion(pair: &WZPair, at: &Assignment) -> Result<Rational, TermError> {
    let t = pair.term.eval(at)?;
    if t.is_zero() {
        return Ok(t);
    }
    let c = pair.certificate.eval(at).map_err(|_| TermError::Pole)?;
    Ok(c * t)
}

const CHECKS: [&str; 5] = ["base", "edge", "boundary-low", "boundary-high", "sum"];

fn render(params: &Assignment) -> BTreeMap<String, String> {
    params.iter().map(|(v, x)| (v.name().to_string(), x.to_string())).collect()
}

/// Direct-evaluation checks for one parameter draw, one entry per
/// `(n, check)`; the first offending index assignment is reported.
fn draw_checks(
    pair: &WZPair,
    n_max: u64,
    params: &Assignment,
) -> Result<Vec<(u64, usize, String, String)>, TermError> {
    let mut out = Vec::new();
    for n in 0..=n_max as i64 {
        let grid = index_grid(&pair.indices, n);
        let mut found = [None, None, None, None, None];
        for index in &grid {
            let vals = [
                if n == 0 {
                    Some((pair.term.eval(&point(params, index, 0, 0))?, Rational::one()))
                } else {
                    None
                },
                Some((pair.term.eval(&point(params, index, n, n + 1))?, Rational::zero())),
                Some((companion(pair, &point(params, index, n, 0))?, Rational::zero())),
                Some((companion(pair, &point(params, index, n, n + 2))?, Rational::zero())),
                Some((sum_over_k(&pair.term, params, index, n)?, Rational::one())),
            ];
            for (slot, v) in found.iter_mut().zip(vals) {
                if let Some((got, want)) = v {
                    if slot.is_none() || (got != want && slot.as_ref().is_some_and(|(g, w)| g == w))
                    {
                        *slot = Some((got, want));
                    }
                }
            }
        }
        for (i, slot) in found.into_iter().enumerate() {
            if let Some((got, want)) = slot {
                out.push((n as u64, i, got.to_string(), want.to_string()));
            }
        }
    }
    Ok(out)
}

/// Draws pole-free parameters for slot `draw`, redrawing on poles.
pub fn draw_pair_params(pair: &WZPair, n_max: u64, seed: u64, draw: u64) -> Option<Assignment> {
    draw_pair_checked(pair, n_max, seed, draw).map(|(p, _)| p)
}

type CheckedDraw = (Assignment, Vec<(u64, usize, String, String)>);

fn draw_pair_checked(pair: &WZPair, n_max: u64, seed: u64, draw: u64) -> Option<CheckedDraw> {
    let mut rng = rng_for(seed, &[tag("wz"), tag(&pair.name), draw]);
    for _ in 0..MAX_ATTEMPTS {
        let params: Assignment =
            pair.params.iter().map(|v| (v.clone(), draw_admissible(&mut rng))).collect();
        if let Ok(rows) = draw_checks(pair, n_max, &params) {
            return Some((params, rows));
        }
    }
    None
}

/// Symbolic certificate check plus exact base, edge, boundary and
/// telescoping checks over `samples` seeded parameter draws.
pub fn verify_wz_pair(
    pair: &WZPair,
    n_max: u64,
    samples: usize,
    seed: u64,
) -> Result<VerificationReport, TermError> {
    let residual = certificate_residual(pair)?;
    let mut rows = vec![Row::compare(
        format!("{}/symbolic", pair.name),
        BTreeMap::new(),
        None,
        residual.to_string(),
        "0".into(),
    )];

    let per_draw: Vec<Option<CheckedDraw>> = (0..samples as u64)
        .into_par_iter()
        .map(|d| draw_pair_checked(pair, n_max, seed, d))
        .collect();

    let mut keyed = Vec::new();
    for (d, outcome) in per_draw.into_iter().enumerate() {
        match outcome {
            Some((params, checks)) => {
                let shown = render(&params);
                for (n, check, got, want) in checks {
                    let row = Row::compare(
                        format!("{}/{}", pair.name, CHECKS[check]),
                        shown.clone(),
                        Some(n),
                        got,
                        want,
                    );
                    keyed.push(((n, d, check), row));
                }
            }
            None => {
                let row = Row::skipped(
                    format!("{}/draw", pair.name),
                    BTreeMap::new(),
                    None,
                    format!("no pole-free draw in {MAX_ATTEMPTS} attempts"),
                );
                keyed.push(((0, d, 0), row));
            }
        }
    }
    keyed.sort_by_key(|(key, _)| *key);
    rows.extend(keyed.into_iter().map(|(_, r)| r));
    Ok(VerificationReport { pair: pair.name.clone(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wz::builtin_pair;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn rf(s: &str) -> RatFunc {
        to_ratfunc(&parse_expr(s).unwrap()).unwrap()
    }

    fn params(pairs: &[(&str, &str)]) -> Assignment {
        pairs.iter().map(|(v, x)| (Var::new(v), q(x))).collect()
    }

    #[test]
    fn builtin_residuals_vanish() {
        for name in ["thm1", "thm2", "thm3"] {
            let p = builtin_pair(name).unwrap();
            assert!(certificate_residual(&p).unwrap().is_zero(), "{name}");
        }
    }

    #[test]
    fn corrupted_certificates_leave_a_residual() {
        let p = builtin_pair("thm1").unwrap();
        let bad = WzMutation::ScaleCertificate(q("2")).apply(&p).unwrap();
        let r = certificate_residual(&bad).unwrap();
        assert!(!r.is_zero());
        let at = params(&[("n", "3"), ("k", "1"), ("j", "2"), ("alpha", "1/2"), ("beta", "1/3")]);
        assert_ne!(r.eval(&at).unwrap(), Rational::zero());

        let p = builtin_pair("thm2").unwrap();
        let bad = WzMutation::AddToCertificate(rf("1/(n+1)")).apply(&p).unwrap();
        let report = verify_wz_pair(&bad, 3, 2, 0).unwrap();
        assert!(!report.symbolic_passed());
        assert!(!report.passed());
    }

    #[test]
    fn literal_three_term_certificate_fails_pointwise() {
        // The same rational function with the last denominator factor
        // written as (n - p - s) needs the opposite orientation.
        let mut p = builtin_pair("thm3").unwrap();
        p.certificate = rf("k*(k-p)/((k-n-1)*(n-p-s))");
        let r = certificate_residual(&p).unwrap();
        let at = params(&[("n", "3"), ("k", "1"), ("s", "1/2"), ("p", "1/3")]);
        assert_ne!(r.eval(&at).unwrap(), Rational::zero());
        p.orientation = 1;
        assert!(certificate_residual(&p).unwrap().is_zero());
    }

    #[test]
    fn telescoping_spot_values() {
        let thm1 = builtin_pair("thm1").unwrap();
        let out = telescoping_sum_check(
            &thm1.term,
            &thm1.indices,
            1,
            &[params(&[("alpha", "1/2"), ("beta", "1/3")])],
        );
        assert_eq!(out, vec![DrawOutcome::Pass]);

        let thm2 = builtin_pair("thm2").unwrap();
        let out =
            telescoping_sum_check(&thm2.term, &[], 5, &[params(&[("s", "1/2"), ("t", "1/3")])]);
        assert_eq!(out, vec![DrawOutcome::Pass]);

        // With an integer p the normalizer vanishes for n < p, so only n = 2
        // is summed here.
        let thm3 = builtin_pair("thm3").unwrap();
        let at = params(&[("s", "1/2"), ("p", "1")]);
        assert_eq!(sum_over_k(&thm3.term, &at, &[], 2).unwrap(), Rational::one());
        let out = telescoping_sum_check(&thm3.term, &[], 2, &[at]);
        assert_eq!(out, vec![DrawOutcome::Skipped("pole".into())]);
    }

    #[test]
    fn telescoping_marks_poles_as_skipped() {
        let thm2 = builtin_pair("thm2").unwrap();
        // binom(t + k, k) vanishes at k = 2 when t = -2.
        let out =
            telescoping_sum_check(&thm2.term, &[], 3, &[params(&[("s", "1/2"), ("t", "-2")])]);
        assert_eq!(out, vec![DrawOutcome::Skipped("pole".into())]);
    }

    #[test]
    fn verification_reports_pass() {
        for name in ["thm1", "thm2", "thm3"] {
            let p = builtin_pair(name).unwrap();
            let report = verify_wz_pair(&p, 6, 4, 0).unwrap();
            assert!(
                report.passed(),
                "{name}: {:?}",
                report.rows.iter().find(|r| r.status == Status::Fail)
            );
            assert!(report.rows.iter().all(|r| r.status != Status::Skipped));
            assert!(report.rows.iter().any(|r| r.id.ends_with("/edge")));
        }
    }

    #[test]
    fn verification_is_deterministic() {
        let p = builtin_pair("thm3").unwrap();
        assert_eq!(verify_wz_pair(&p, 4, 3, 9).unwrap(), verify_wz_pair(&p, 4, 3, 9).unwrap());
    }

    #[test]
    fn mutation_specs_round_trip() {
        for s in ["scale-cert:2", "flip-exp:3", "flip-orientation", "add-cert:1/(n + 1)"] {
            let m: WzMutation = s.parse().unwrap();
            assert_eq!(m.to_string().parse::<WzMutation>().unwrap(), m);
        }
        assert!("scale".parse::<WzMutation>().is_err());
    }
}
