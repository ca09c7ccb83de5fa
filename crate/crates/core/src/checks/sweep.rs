//! Randomized sweeps over `F_p`.
//!
//! # Random model
//!
//! Sample `i` of a sweep with seed `s` draws from its own SplitMix64 stream
//! whose initial state is the `i`-th output of a SplitMix64 stream started at
//! `s`. Samples are therefore independent of evaluation order and can run in
//! parallel.
//!
//! A random polynomial walks the admissible monomials in a fixed order: by
//! increasing degree (only degree `d` when homogeneous, else `0..=d`), and
//! within one degree lexicographically descending in the exponent vector.
//! For each monomial one 64-bit draw `u` decides inclusion (`u >> 63 == 1`);
//! an included monomial takes a second draw `v` and the coefficient
//! `1 + v mod (p - 1)`. Entries required to lie in `m` skip the constant
//! monomial without drawing.
//! Matrices are drawn row-major, followed by any vector.

use std::collections::BTreeMap;

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{FreeModuleElement, Ideal};
use crate::matrix::PolyMatrix;
use crate::modules::{equidim_certificate, sym_presentation};
use crate::poly::{
    Coeff, CoefficientField, Monomial, MonomialOrder, PolyRing, Polynomial, ResourceLimits,
};

use super::report::{BoundReport, HypothesisStatus, TheoremId};
use super::theorems::{self, PrimeWitness};

pub const CSV_HEADER: [&str; 13] = [
    "sample_index",
    "rows",
    "cols",
    "char",
    "theorem",
    "lhs",
    "rhs",
    "slack",
    "holds",
    "vacuous",
    "exactness",
    "hypotheses_status",
    "seed",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub theorem: TheoremId,
    pub rows: usize,
    pub cols: usize,
    pub characteristic: u32,
    /// Largest entry degree; the exact degree when `homogeneous`.
    pub max_degree: u32,
    pub homogeneous: bool,
    pub samples: usize,
    pub seed: u64,
    /// `t` for the determinantal bounds, `i` for the Fitting-ideal bounds.
    pub param: Option<usize>,
    pub nvars: usize,
    #[serde(skip)]
    pub limits: ResourceLimits,
}

impl SweepConfig {
    /// 200 homogeneous linear samples over `F_5` in four variables, seed 42.
    pub fn new(theorem: TheoremId, rows: usize, cols: usize) -> Self {
        SweepConfig {
            theorem,
            rows,
            cols,
            characteristic: 5,
            max_degree: 1,
            homogeneous: true,
            samples: 200,
            seed: 42,
            param: None,
            nvars: 4,
            limits: ResourceLimits::default(),
        }
    }

    /// `param` or the per-theorem default: `t = 2` for Bruns, `t = cols + 1`
    /// for Macaulay/Eisenbud-Evans (so `I_t(A) = 0` holds trivially),
    /// `i = rows` for the Fitting-ideal bounds.
    pub fn effective_param(&self) -> Option<usize> {
        match self.theorem {
            TheoremId::Bruns => Some(self.param.unwrap_or(2)),
            TheoremId::MacaulayEe => Some(self.param.unwrap_or(self.cols + 1)),
            TheoremId::Kwiecinski | TheoremId::KwiecinskiRefined => {
                Some(self.param.unwrap_or(self.rows))
            }
            _ => None,
        }
    }

    fn validate(&self) -> Result<PolyRing> {
        if self.samples == 0 {
            return Err(Error::Config("sample count must be at least 1".into()));
        }
        if self.nvars == 0 {
            return Err(Error::Config("at least one variable is required".into()));
        }
        if self.theorem == TheoremId::Serre && self.rows < 2 {
            return Err(Error::Config(
                "serre sweeps take I and J from the first two rows".into(),
            ));
        }
        let field = CoefficientField::prime(self.characteristic as u64)
            .map_err(|e| Error::Config(e.to_string()))?;
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        Ok(PolyRing::new(&names, field, MonomialOrder::GrevLex)?.with_limits(self.limits))
    }
}

/// One sampled instance: the matrix and, for some bounds, a vector.
#[derive(Clone, Debug)]
pub struct Sample {
    pub matrix: PolyMatrix,
    pub vector: Option<Vec<Polynomial>>,
}

impl Sample {
    /// Session-format text reproducing the instance.
    pub fn to_session(&self, config: &SweepConfig, index: usize) -> String {
        let ring = self.matrix.ring();
        let mut s = format!(
            "# theorem {}, seed {}, sample {index}",
            config.theorem, config.seed
        );
        if let Some(p) = config.effective_param() {
            s.push_str(&format!(", param {p}"));
        }
        s.push_str(&format!(
            "\n[ring]\nvars = {}\nfield = {}\norder = grevlex\n\n[matrix A]\nshape = {}x{}\n",
            ring.variables().join(", "),
            ring.field(),
            self.matrix.rows(),
            self.matrix.cols()
        ));
        if self.matrix.cols() > 0 {
            for row in self.matrix.row_strings() {
                s.push_str(&row);
                s.push('\n');
            }
        }
        if let Some(v) = &self.vector {
            let entries: Vec<String> = v.iter().map(|e| e.to_string()).collect();
            s.push_str(&format!("\n[vector v]\n{}\n", entries.join("; ")));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SampleOutcome {
    Report(BoundReport),
    ResourceLimited { message: String },
    /// A checked hypothesis (e.g. vanishing minors) fails for this sample.
    HypothesisViolated { message: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub samples: usize,
    pub holds: usize,
    pub vacuous: usize,
    /// Reports with some hypothesis left unverified.
    pub hypothesis_unverified: usize,
    pub hypothesis_violated: usize,
    pub resource_limited: usize,
    /// Failing reports whose hypotheses were not all verified.
    pub unverified_failures: usize,
    /// Slack of non-vacuous reports.
    pub slack_histogram: BTreeMap<i64, usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepResult {
    pub config: SweepConfig,
    pub outcomes: Vec<SampleOutcome>,
    pub summary: SweepSummary,
    pub csv: String,
}

struct Sampler {
    rng: SplitMix64,
    ring: PolyRing,
    /// Admissible monomials, degree 0 first when present.
    monomials: Vec<Monomial>,
    p: u64,
}

fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(nvars - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn admissible_monomials(config: &SweepConfig) -> Vec<Monomial> {
    let degrees = if config.homogeneous {
        config.max_degree..=config.max_degree
    } else {
        0..=config.max_degree
    };
    degrees
        .flat_map(|d| monomials_of_degree(config.nvars, d))
        .map(Monomial::new)
        .collect()
}

/// State of the stream for sample `index`: output `index` of a SplitMix64
/// stream seeded with `seed`.
pub fn sample_state(seed: u64, index: usize) -> u64 {
    const GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;
    SplitMix64::seed_from_u64(seed.wrapping_add((index as u64).wrapping_mul(GAMMA))).next_u64()
}

impl Sampler {
    fn new(config: &SweepConfig, ring: &PolyRing, monomials: Vec<Monomial>, index: usize) -> Self {
        Sampler {
            rng: SplitMix64::seed_from_u64(sample_state(config.seed, index)),
            ring: ring.clone(),
            monomials,
            p: config.characteristic as u64,
        }
    }

    fn poly(&mut self, in_m: bool) -> Polynomial {
        let mut terms = Vec::new();
        for m in &self.monomials {
            if in_m && m.is_one() {
                continue;
            }
            if self.rng.next_u64() >> 63 == 1 {
                let c = 1 + self.rng.next_u64() % (self.p - 1);
                terms.push((m.clone(), Coeff::Modular(c as u32)));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    fn matrix(&mut self, rows: usize, cols: usize, in_m: bool) -> PolyMatrix {
        let entries = (0..rows * cols).map(|_| self.poly(in_m)).collect();
        PolyMatrix::new(&self.ring, rows, cols, entries).expect("shape is consistent")
    }

    fn vector(&mut self, n: usize, in_m: bool) -> Vec<Polynomial> {
        (0..n).map(|_| self.poly(in_m)).collect()
    }
}

fn draw(config: &SweepConfig, ring: &PolyRing, monomials: &[Monomial], index: usize) -> Sample {
    let mut s = Sampler::new(config, ring, monomials.to_vec(), index);
    let (r, c) = (config.rows, config.cols);
    match config.theorem {
        TheoremId::Gpit => Sample {
            matrix: s.matrix(r, c, true),
            vector: Some(s.vector(r, true)),
        },
        TheoremId::MuInequality => Sample {
            matrix: s.matrix(r, c, true),
            vector: None,
        },
        TheoremId::RowIdealDim | TheoremId::RowIdealHeight | TheoremId::MacaulayEe => Sample {
            matrix: s.matrix(r, c, false),
            vector: Some(s.vector(r, true)),
        },
        _ => Sample {
            matrix: s.matrix(r, c, false),
            vector: None,
        },
    }
}

fn evaluate(config: &SweepConfig, sample: &Sample) -> Result<BoundReport> {
    let a = &sample.matrix;
    let ring = a.ring();
    let vector = || {
        FreeModuleElement::new(ring, sample.vector.clone().expect("sample carries a vector"))
    };
    let certificate = || equidim_certificate(&sym_presentation(a), None);
    let param = config.effective_param();
    match config.theorem {
        TheoremId::RowIdealDim => theorems::check_row_ideal_dim(a, &vector()?),
        TheoremId::Gpit => theorems::check_gpit(a, &vector()?),
        TheoremId::MacaulayEe => {
            theorems::check_macaulay_ee(a, sample.vector.as_ref().unwrap(), param.unwrap())
        }
        TheoremId::Bruns => theorems::check_bruns(a, param.unwrap()),
        TheoremId::RowIdealHeight => theorems::check_row_ideal_height(
            a,
            &vector()?,
            certificate()?.as_ref(),
            &PrimeWitness::zero(ring),
        ),
        TheoremId::Kwiecinski => {
            theorems::check_kwiecinski(a, param.unwrap(), certificate()?.as_ref())
        }
        TheoremId::KwiecinskiRefined => {
            theorems::check_kwiecinski_refined(a, param.unwrap(), certificate()?.as_ref(), None)
        }
        TheoremId::HunekeRossi => theorems::check_huneke_rossi(a, &[]),
        TheoremId::Serre => {
            let i = Ideal::new(ring, a.row(0).to_vec())?;
            let j = Ideal::new(ring, a.row(1).to_vec())?;
            theorems::check_serre(&i, &j)
        }
        TheoremId::MuInequality => theorems::check_mu_inequality(a),
    }
}

fn outcome(result: Result<BoundReport>) -> Result<SampleOutcome> {
    match result {
        Ok(r) => Ok(SampleOutcome::Report(r)),
        Err(Error::ResourceLimit(message)) => Ok(SampleOutcome::ResourceLimited { message }),
        Err(Error::HypothesisViolated(message)) => {
            Ok(SampleOutcome::HypothesisViolated { message })
        }
        Err(e) => Err(e),
    }
}

fn csv_text(config: &SweepConfig, outcomes: &[SampleOutcome]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Config(format!("csv output: {e}"));
    w.write_record(CSV_HEADER).map_err(io)?;
    for (index, o) in outcomes.iter().enumerate() {
        let mut rec = vec![
            index.to_string(),
            config.rows.to_string(),
            config.cols.to_string(),
            config.characteristic.to_string(),
            config.theorem.to_string(),
        ];
        match o {
            SampleOutcome::Report(r) => rec.extend([
                r.lhs.to_string(),
                r.rhs.to_string(),
                r.slack.to_string(),
                r.holds.to_string(),
                r.vacuous.to_string(),
                r.exactness.as_str().to_string(),
                r.overall_status().to_string(),
            ]),
            SampleOutcome::ResourceLimited { .. } => {
                rec.extend(["", "", "", "", "", "", "resource_limited"].map(String::from))
            }
            SampleOutcome::HypothesisViolated { .. } => {
                rec.extend(["", "", "", "", "", "", "violated"].map(String::from))
            }
        }
        rec.push(config.seed.to_string());
        w.write_record(&rec).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Config(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn summarize(outcomes: &[SampleOutcome]) -> SweepSummary {
    let mut s = SweepSummary {
        samples: outcomes.len(),
        ..SweepSummary::default()
    };
    for o in outcomes {
        match o {
            SampleOutcome::Report(r) => {
                s.holds += r.holds as usize;
                s.vacuous += r.vacuous as usize;
                if r.overall_status() >= HypothesisStatus::Unverified {
                    s.hypothesis_unverified += 1;
                }
                if !r.holds {
                    s.unverified_failures += 1;
                }
                if !r.vacuous {
                    *s.slack_histogram.entry(r.slack).or_default() += 1;
                }
            }
            SampleOutcome::ResourceLimited { .. } => s.resource_limited += 1,
            SampleOutcome::HypothesisViolated { .. } => s.hypothesis_violated += 1,
        }
    }
    s
}

/// Runs the configured check on every sample.
///
/// Fails with [`Error::Counterexample`] at the first sample (by index) whose
/// hypotheses are all verified but whose bound fails.
pub fn sweep(config: &SweepConfig) -> Result<SweepResult> {
    let ring = config.validate()?;
    let monomials = admissible_monomials(config);
    let results: Vec<(Sample, Result<SampleOutcome>)> = (0..config.samples)
        .into_par_iter()
        .map(|index| {
            let sample = draw(config, &ring, &monomials, index);
            let o = outcome(evaluate(config, &sample));
            (sample, o)
        })
        .collect();
    let mut outcomes = Vec::with_capacity(results.len());
    for (index, (sample, o)) in results.into_iter().enumerate() {
        let o = o?;
        if let SampleOutcome::Report(r) = &o {
            if r.is_counterexample() {
                return Err(Error::Counterexample {
                    seed: config.seed,
                    index,
                    bundle: sample.to_session(config, index),
                });
            }
        }
        outcomes.push(o);
    }
    let summary = summarize(&outcomes);
    let csv = csv_text(config, &outcomes)?;
    Ok(SweepResult {
        config: config.clone(),
        outcomes,
        summary,
        csv,
    })
}

/// Draws sample `index` without evaluating it.
pub fn sample(config: &SweepConfig, index: usize) -> Result<Sample> {
    let ring = config.validate()?;
    Ok(draw(config, &ring, &admissible_monomials(config), index))
}
