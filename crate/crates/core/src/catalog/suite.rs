use std::collections::BTreeMap;
use std::str::FromStr;

use rayon::prelude::*;

use super::taylor::{expected_coefficients, shifted_coefficients};
use super::{
    check_identity_with, harmonics_for, jet_target, Domain, Entry, EntryId, Point, CATALOG,
};
use crate::draw::{draw_admissible, draw_rational, rng_for, tag, MAX_ATTEMPTS};
use crate::exact::{Harmonics, Rational};
use crate::report::{Row, Status};

/// Deliberate corruptions used as negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogMutation {
    /// Replaces `-H_2n` by `+H_2n` on the right of ID24.
    FlipH2nSign,
}

impl FromStr for CatalogMutation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "flip-h2n-sign" => Ok(CatalogMutation::FlipH2nSign),
            _ => Err(format!("unknown catalog mutation {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Overrides every entry's default `n_max`.
    pub n_max: Option<u64>,
    pub samples: usize,
    pub seed: u64,
    /// Entries to run, in catalog order; `None` runs all of them.
    pub filter: Option<Vec<EntryId>>,
    pub mutation: Option<CatalogMutation>,
    /// Adds jet-oracle rows for the derived entries.
    pub jets: bool,
    /// Adds Taylor-route rows after ID04.
    pub taylor: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: None,
            samples: 20,
            seed: 0,
            filter: None,
            mutation: None,
            jets: true,
            taylor: true,
        }
    }
}

/// Default `n_max` for the Taylor-route rows.
pub const TAYLOR_N_MAX: u64 = 20;

#[derive(Debug, Clone, Copy)]
enum Kind {
    Direct,
    Jet,
    Taylor,
}

#[derive(Debug, Clone, Copy)]
struct Task {
    entry: &'static Entry,
    kind: Kind,
    n: u64,
    draw: u64,
}

fn draw_value(dom: Domain, rng: &mut impl rand::Rng) -> Rational {
    match dom {
        Domain::NotNegativeInteger => draw_admissible(rng),
        Domain::NonZero => loop {
            let v = draw_rational(rng);
            if !v.is_zero() {
                return v;
            }
        },
        Domain::Any => draw_rational(rng),
    }
}

fn row_params(p: &Point, inner: Option<&str>) -> BTreeMap<String, String> {
    let mut m: BTreeMap<String, String> =
        p.values.iter().map(|(k, v)| (k.clone(), v.to_string())).collect();
    if let (Some(name), Some(j)) = (inner, p.j) {
        m.insert(name.to_string(), j.to_string());
    }
    m
}

fn join(v: &[Rational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

/// Rows for one task at fixed parameters, or the reason they are unavailable.
fn attempt(
    task: &Task,
    params: &Point,
    h: &Harmonics,
    cfg: &SuiteConfig,
) -> Result<Vec<Row>, String> {
    let e = task.entry;
    match task.kind {
        Kind::Direct => {
            let js: Vec<Option<u64>> = match e.spec.inner {
                Some(_) => (0..=task.n).map(Some).collect(),
                None => vec![None],
            };
            let mut rows = Vec::with_capacity(js.len());
            for j in js {
                let mut p = params.clone();
                p.j = j;
                let rec = check_identity_with(e.id, &p, h, cfg.mutation);
                let (l, r) = rec.outcome.map_err(|s| s.0)?;
                rows.push(Row::compare(
                    e.id.as_str(),
                    row_params(&p, e.spec.inner),
                    Some(task.n),
                    l.to_string(),
                    r.to_string(),
                ));
            }
            Ok(rows)
        }
        Kind::Jet => {
            let (jl, jr) = jet_target(e.id, params, h).map_err(|s| s.0)?;
            let (dl, dr) =
                check_identity_with(e.id, params, h, cfg.mutation).outcome.map_err(|s| s.0)?;
            let mut row = Row::compare(
                format!("{}/jet", e.id),
                row_params(params, None),
                Some(task.n),
                jl.to_string(),
                jr.to_string(),
            );
            if jl != dl || jr != dr {
                row.status = Status::Fail;
                row.reason = Some(format!("direct evaluation gives {dl} = {dr}"));
            }
            Ok(vec![row])
        }
        Kind::Taylor => {
            let (a, b) = (params.get("alpha"), params.get("beta"));
            Ok(vec![Row::compare(
                format!("{}/taylor", e.id),
                row_params(params, None),
                Some(task.n),
                join(&shifted_coefficients(task.n, a, b)),
                join(&expected_coefficients(task.n, a, b)),
            )])
        }
    }
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Direct => "direct",
        Kind::Jet => "jet",
        Kind::Taylor => "taylor",
    }
}

fn run_task(task: &Task, h: &Harmonics, cfg: &SuiteConfig) -> Vec<Row> {
    let e = task.entry;
    let params: &[(&str, Domain)] = match task.kind {
        Kind::Taylor => {
            &[("alpha", Domain::NotNegativeInteger), ("beta", Domain::NotNegativeInteger)]
        }
        _ => e.spec.params,
    };
    let stream = [tag(e.id.as_str()), tag(kind_name(task.kind)), task.n, task.draw];
    let mut rng = rng_for(cfg.seed, &stream);
    let mut last = String::new();
    for _ in 0..MAX_ATTEMPTS {
        let mut p = Point::new(task.n);
        for (name, dom) in params {
            p = p.with(name, draw_value(*dom, &mut rng));
        }
        match attempt(task, &p, h, cfg) {
            Ok(rows) => return rows,
            Err(reason) if params.is_empty() => {
                return vec![Row::skipped(e.id.as_str(), BTreeMap::new(), Some(task.n), reason)]
            }
            Err(reason) => last = reason,
        }
    }
    vec![Row::skipped(
        e.id.as_str(),
        BTreeMap::new(),
        Some(task.n),
        format!("no admissible draw in {MAX_ATTEMPTS} attempts (last: {last})"),
    )]
}

fn tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut out = Vec::new();
    for e in CATALOG {
        if let Some(f) = &cfg.filter {
            if !f.contains(&e.id) {
                continue;
            }
        }
        let n_max = cfg.n_max.unwrap_or(e.n_max);
        let draws = if e.spec.params.is_empty() { 1 } else { cfg.samples as u64 };
        let mut push = |kind: Kind, n_max: u64, draws: u64| {
            for n in 0..=n_max {
                for draw in 0..draws {
                    out.push(Task { entry: e, kind, n, draw });
                }
            }
        };
        push(Kind::Direct, n_max, draws);
        if cfg.jets && e.jet {
            push(Kind::Jet, n_max, draws);
        }
        if cfg.taylor && e.id == EntryId::Id04 {
            push(Kind::Taylor, cfg.n_max.unwrap_or(TAYLOR_N_MAX), cfg.samples as u64);
        }
    }
    out
}

/// Runs the selected entries over their grids. Rows come back ordered by
/// entry, check kind, `n`, draw and inner index regardless of scheduling.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<Row> {
    let tasks = tasks(cfg);
    let n_top = tasks.iter().map(|t| t.n).max().unwrap_or(0);
    let h = harmonics_for(n_top);
    tasks
        .par_iter()
        .map(|t| run_task(t, &h, cfg))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}
