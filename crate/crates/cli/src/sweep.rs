use std::collections::BTreeMap;
use std::io::Write;

use qstate_core::random::positive_unit_vector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use three_qubit_analytic::{lambda_sq_fourterm, lambda_sq_wtype, ww_superposition_cubic, FourTerm, WType3};
use variational::{oracle_lambda_max, OracleConfig};
use w_duality::{lambda_max_w, large_n_lambda_sq, two_block_closed_form, Branch, WStateN};

use crate::methods::entanglement_class;
use crate::{CliError, Result};

/// Environment variable capping the number of sweep worker threads.
pub const THREADS_ENV: &str = "GEMKIT_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
pub enum Family {
    #[value(name = "wtype3")]
    WType3,
    #[value(name = "fourterm")]
    FourTerm,
    #[value(name = "wN-two-block")]
    WnTwoBlock,
    #[value(name = "wN-interpolation")]
    WnInterpolation,
    #[value(name = "ww-superposition")]
    WwSuperposition,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::WType3 => "wtype3",
            Self::FourTerm => "fourterm",
            Self::WnTwoBlock => "wN-two-block",
            Self::WnInterpolation => "wN-interpolation",
            Self::WwSuperposition => "ww-superposition",
        }
    }

    /// Parameters that may be swept.
    pub fn sweepable(self) -> &'static [&'static str] {
        match self {
            Self::WType3 => &["theta", "phi"],
            Self::FourTerm => &["d"],
            Self::WnTwoBlock => &["theta"],
            Self::WnInterpolation => &["bz"],
            Self::WwSuperposition => &["theta"],
        }
    }

    /// Parameters that must be given, swept or fixed.
    pub fn required(self) -> &'static [&'static str] {
        match self {
            Self::WType3 => &["theta", "phi"],
            Self::FourTerm => &["d"],
            Self::WnTwoBlock => &["m", "k", "theta"],
            Self::WnInterpolation => &["n", "seed", "bz"],
            Self::WwSuperposition => &["theta"],
        }
    }

    fn extra_columns(self) -> &'static [&'static str] {
        match self {
            Self::WnTwoBlock => &["r_closed"],
            Self::WnInterpolation => &["bz_actual", "lambda_sq_interp", "lambda_sq_oracle", "rel_gap"],
            _ => &[],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub family: Family,
    pub param: String,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub fixed: BTreeMap<String, f64>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        let f = self.family;
        if self.count < 2 {
            return Err(CliError::Input(format!("grid count must be at least 2, got {}", self.count)));
        }
        if !self.start.is_finite() || !self.stop.is_finite() {
            return Err(CliError::Input("grid bounds must be finite".into()));
        }
        if !f.sweepable().contains(&self.param.as_str()) {
            return Err(CliError::Input(format!(
                "family {} sweeps {:?}, not '{}'",
                f.as_str(),
                f.sweepable(),
                self.param
            )));
        }
        if self.fixed.contains_key(&self.param) {
            return Err(CliError::Input(format!("'{}' is both swept and fixed", self.param)));
        }
        for k in self.fixed.keys() {
            if !f.required().contains(&k.as_str()) {
                return Err(CliError::Input(format!("family {} has no parameter '{k}'", f.as_str())));
            }
        }
        for k in f.required() {
            if *k != self.param && !self.fixed.contains_key(*k) {
                return Err(CliError::Input(format!("family {} needs a value for '{k}'", f.as_str())));
            }
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count).map(|i| if i + 1 == self.count { self.stop } else { self.start + step * i as f64 }).collect()
    }

    fn value(&self, name: &str, x: f64) -> f64 {
        if name == self.param {
            x
        } else {
            self.fixed[name]
        }
    }

    fn integer(&self, name: &str, min: usize) -> Result<usize> {
        let v = self.fixed[name];
        if v.fract() != 0.0 || v < min as f64 {
            return Err(CliError::Input(format!("'{name}' must be an integer >= {min}, got {v}")));
        }
        Ok(v as usize)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub x: f64,
    pub lambda_sq: f64,
    pub r: Option<f64>,
    pub region: String,
    pub method: String,
    pub extra: Vec<Option<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GapSummary {
    pub max_rel_gap: f64,
    pub median_rel_gap: f64,
    pub points: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepOutput {
    pub header: Vec<String>,
    pub rows: Vec<SweepRow>,
    pub summary: Option<GapSummary>,
}

fn point_error(family: Family, x: f64, e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{} at {x}: {e}", family.as_str()))
}

/// Per-sweep state shared by all points.
enum Prepared {
    Plain,
    TwoBlock { m: usize, k: usize },
    Interpolation { direction: Vec<f64>, oracle: OracleConfig },
}

fn prepare(spec: &SweepSpec, oracle: &OracleConfig) -> Result<Prepared> {
    Ok(match spec.family {
        Family::WnTwoBlock => Prepared::TwoBlock { m: spec.integer("m", 1)?, k: spec.integer("k", 1)? },
        Family::WnInterpolation => {
            let n = spec.integer("n", 3)?;
            let seed = spec.integer("seed", 0)? as u64;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Prepared::Interpolation { direction: positive_unit_vector(n - 1, &mut rng), oracle: *oracle }
        }
        _ => Prepared::Plain,
    })
}

/// W state whose last coefficient has Bloch `z` component `bz`, the others along `direction`.
pub fn interpolation_state(direction: &[f64], bz: f64) -> Result<WStateN> {
    let cn_sq = 0.5 * (1.0 - bz);
    if !(0.0..=1.0).contains(&cn_sq) {
        return Err(CliError::Input(format!("bz must lie in [-1, 1], got {bz}")));
    }
    let rest = (1.0 - cn_sq).sqrt();
    let mut c: Vec<f64> = direction.iter().map(|x| x * rest).collect();
    c.push(cn_sq.sqrt());
    WStateN::normalized(&c).map_err(|e| CliError::Input(e.to_string()))
}

fn evaluate(spec: &SweepSpec, prep: &Prepared, x: f64) -> Result<SweepRow> {
    let f = spec.family;
    let err = |e: &dyn std::fmt::Display| point_error(f, x, e);
    let plain = |lambda_sq: f64, region: &str, method: &str| SweepRow {
        x,
        lambda_sq,
        r: None,
        region: region.to_string(),
        method: method.to_string(),
        extra: Vec::new(),
    };
    match (f, prep) {
        (Family::WType3, _) => {
            let (theta, phi) = (spec.value("theta", x), spec.value("phi", x));
            let s = WType3::new(theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()).map_err(|e| err(&e))?;
            let (l2, label) = lambda_sq_wtype(&s);
            Ok(plain(l2, label.as_str(), "analytic(wtype)"))
        }
        (Family::FourTerm, _) => {
            let d = spec.value("d", x);
            if !(0.0..=1.0).contains(&d) {
                return Err(err(&"d must lie in [0, 1]"));
            }
            let a = ((1.0 - d * d) / 3.0).max(0.0).sqrt();
            let s = FourTerm::new(a, a, a, d).map_err(|e| err(&e))?;
            let (l2, label) = lambda_sq_fourterm(&s);
            Ok(plain(l2, label.as_str(), "analytic(fourterm)"))
        }
        (Family::WwSuperposition, _) => {
            let sol = ww_superposition_cubic(x).map_err(|e| err(&e))?;
            Ok(plain(sol.lambda_sq, entanglement_class(sol.lambda_sq), "analytic(ww-cubic)"))
        }
        (Family::WnTwoBlock, Prepared::TwoBlock { m, k }) => {
            let w = WStateN::two_block(*m, *k, x).map_err(|e| err(&e))?;
            let o = lambda_max_w(&w).map_err(|e| err(&e))?;
            let r = o.diameter.as_ref().filter(|d| d.branch != Branch::None).map(|d| d.r);
            let closed = match r {
                Some(_) => Some(two_block_closed_form(*m, *k, x).map_err(|e| err(&e))?.sqrt()),
                None => None,
            };
            Ok(SweepRow {
                x,
                lambda_sq: o.lambda_sq(),
                r,
                region: o.region.label.as_str().to_string(),
                method: "analytic(w-n)".into(),
                extra: vec![closed],
            })
        }
        (Family::WnInterpolation, Prepared::Interpolation { direction, oracle }) => {
            let w = interpolation_state(direction, x)?;
            let o = lambda_max_w(&w).map_err(|e| err(&e))?;
            let bz = w.bz();
            let interp = large_n_lambda_sq(bz).map_err(|e| err(&e))?;
            let best = oracle_lambda_max(&w.to_state(), oracle).map_err(|e| err(&e))?;
            if !best.converged {
                return Err(CliError::Convergence(format!("oracle did not converge at bz = {x}")));
            }
            let rel = (interp.sqrt() - best.lambda).abs() / best.lambda;
            let r = o.diameter.as_ref().filter(|d| d.branch != Branch::None).map(|d| d.r);
            Ok(SweepRow {
                x,
                lambda_sq: o.lambda_sq(),
                r,
                region: o.region.label.as_str().to_string(),
                method: "analytic(w-n)".into(),
                extra: vec![Some(bz), Some(interp), Some(best.lambda * best.lambda), Some(rel)],
            })
        }
        _ => unreachable!("prepared state matches the family"),
    }
}

/// Worker count from [`THREADS_ENV`], if set to a positive integer.
pub fn thread_cap() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Input(format!("{THREADS_ENV} must be a positive integer, got '{v}'"))),
        },
        Err(_) => Ok(None),
    }
}

/// Evaluates every grid point; rows come back in grid order.
pub fn run_sweep(spec: &SweepSpec, oracle: &OracleConfig) -> Result<SweepOutput> {
    spec.validate()?;
    let prep = prepare(spec, oracle)?;
    let grid = spec.grid();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_cap()? {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| CliError::Output(e.to_string()))?;
    let rows: Vec<SweepRow> =
        pool.install(|| grid.par_iter().map(|&x| evaluate(spec, &prep, x)).collect::<Result<Vec<_>>>())?;
    let mut header: Vec<String> =
        vec![spec.param.clone(), "lambda_sq".into(), "r".into(), "region".into(), "method".into()];
    header.extend(spec.family.extra_columns().iter().map(|s| s.to_string()));
    let summary = (spec.family == Family::WnInterpolation).then(|| gap_summary(&rows));
    Ok(SweepOutput { header, rows, summary })
}

fn gap_summary(rows: &[SweepRow]) -> GapSummary {
    let mut gaps: Vec<f64> = rows.iter().filter_map(|r| r.extra.last().copied().flatten()).collect();
    gaps.sort_by(f64::total_cmp);
    let n = gaps.len();
    let median = if n == 0 {
        f64::NAN
    } else if n % 2 == 1 {
        gaps[n / 2]
    } else {
        0.5 * (gaps[n / 2 - 1] + gaps[n / 2])
    };
    GapSummary { max_rel_gap: gaps.last().copied().unwrap_or(f64::NAN), median_rel_gap: median, points: n }
}

/// Seventeen significant digits, independent of locale.
pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv<W: Write>(out: W, output: &SweepOutput) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&output.header)?;
    let opt = |v: Option<f64>| v.map(format_number).unwrap_or_default();
    for row in &output.rows {
        let mut record = vec![
            format_number(row.x),
            format_number(row.lambda_sq),
            opt(row.r),
            row.region.clone(),
            row.method.clone(),
        ];
        record.extend(row.extra.iter().map(|v| opt(*v)));
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}
