//! Seeded verification suites. Each suite draws its cases from a master
//! seed; every case records its own seed and, when it fails, the inputs it
//! was run on.

mod functors;
mod pools;
mod weights;

pub use pools::{cofibration_pool, fibration_pool, flexible_fixtures, FlexFixture};

use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::corpus::{rng, Caps, Rng64};
use crate::error::Error;
use crate::fincat::FinFunctor;
use crate::model::{classify_with, ClassReport};
use crate::search::SearchLimits;
use crate::weights::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    ModelAxioms,
    Enrichment,
    Generators,
    PseudolimitCriterion,
    Pseudocolimit,
    WeightsClosure,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::ModelAxioms,
        Suite::Enrichment,
        Suite::Generators,
        Suite::PseudolimitCriterion,
        Suite::Pseudocolimit,
        Suite::WeightsClosure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ModelAxioms => "model-axioms",
            Suite::Enrichment => "enrichment",
            Suite::Generators => "generators",
            Suite::PseudolimitCriterion => "pseudolimit-criterion",
            Suite::Pseudocolimit => "pseudocolimit",
            Suite::WeightsClosure => "weights-closure",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub seed: u64,
    pub count: usize,
    pub max_objects: usize,
    pub max_morphisms: usize,
    /// Largest number of objects in a probe category.
    pub probe_size: usize,
    /// Record wall time. Off by default so reports are reproducible byte
    /// for byte.
    #[serde(skip)]
    pub timing: bool,
}

impl SuiteConfig {
    pub fn new(suite: Suite, seed: u64, count: usize) -> SuiteConfig {
        SuiteConfig {
            suite,
            seed,
            count,
            max_objects: 5,
            max_morphisms: 15,
            probe_size: 2,
            timing: false,
        }
    }

    pub fn caps(&self) -> Caps {
        Caps {
            max_objects: self.max_objects,
            max_morphisms: self.max_morphisms,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// The inputs of a case, enough to replay it through the library.
#[derive(Debug, Clone, Default, Serialize)]
pub struct CaseInput {
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub functors: Vec<FinFunctor>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub weights: Vec<Weight>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub index: usize,
    pub seed: u64,
    pub verdict: Verdict,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<CaseInput>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub config: SuiteConfig,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Functors classified while running the suite.
    pub classified: u64,
    /// Disagreements between the independent trivial-fibration routes.
    pub consistency_faults: u64,
    pub cases: Vec<CaseReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.consistency_faults == 0
    }

    /// Number of checks with the given name, and how many held.
    pub fn tally(&self, check: &str) -> (usize, usize) {
        let mut total = 0;
        let mut ok = 0;
        for c in self.cases.iter().flat_map(|c| &c.checks) {
            if c.name == check {
                total += 1;
                ok += c.ok as usize;
            }
        }
        (total, ok)
    }
}

/// Per-case state shared with the suite bodies.
pub(crate) struct Ctx {
    pub rng: Rng64,
    pub caps: Caps,
    pub limits: SearchLimits,
    pub probe_size: usize,
    pub index: usize,
    pub checks: Vec<Check>,
    pub input: CaseInput,
    pub classified: u64,
}

impl Ctx {
    pub fn check(&mut self, name: &str, ok: bool) {
        self.checks.push(Check {
            name: name.into(),
            ok,
            note: None,
        });
    }

    pub fn check_with(&mut self, name: &str, ok: bool, note: impl FnOnce() -> String) {
        self.checks.push(Check {
            name: name.into(),
            ok,
            note: if ok { None } else { Some(note()) },
        });
    }

    /// Classify through both trivial-fibration routes; a disagreement
    /// surfaces as a consistency error.
    pub fn classify(&mut self, f: &FinFunctor) -> crate::Result<ClassReport> {
        self.classified += 1;
        classify_with(f, self.limits)
    }

    pub fn record(&mut self, f: &FinFunctor) {
        self.input.functors.push(f.clone());
    }

    pub fn record_weight(&mut self, w: &Weight) {
        self.input.weights.push(w.clone());
    }
}

pub fn default_limits() -> SearchLimits {
    SearchLimits {
        max_object_maps: 200_000,
        max_nodes: 5_000_000,
        max_functors: 5_000,
        max_transforms: 50_000,
    }
}

pub fn run_suite(config: &SuiteConfig) -> Report {
    let start = Instant::now();
    let mut master = rng(config.seed);
    let mut cases = Vec::with_capacity(config.count);
    let (mut passed, mut failed, mut skipped) = (0, 0, 0);
    let mut classified = 0;
    let mut faults = 0;
    for index in 0..config.count {
        let seed: u64 = master.gen();
        let mut ctx = Ctx {
            rng: rng(seed),
            caps: config.caps(),
            limits: default_limits(),
            probe_size: config.probe_size,
            index,
            checks: Vec::new(),
            input: CaseInput::default(),
            classified: 0,
        };
        let outcome = match config.suite {
            Suite::ModelAxioms => functors::model_axioms(&mut ctx),
            Suite::Enrichment => functors::enrichment(&mut ctx),
            Suite::Generators => functors::generators(&mut ctx),
            Suite::PseudolimitCriterion => functors::pseudolimit_criterion(&mut ctx),
            Suite::Pseudocolimit => functors::pseudocolimit(&mut ctx),
            Suite::WeightsClosure => weights::weights_closure(&mut ctx),
        };
        classified += ctx.classified;
        let (verdict, detail) = match outcome {
            Ok(()) if ctx.checks.iter().all(|c| c.ok) => (Verdict::Pass, None),
            Ok(()) => (Verdict::Fail, None),
            Err(Error::Resource(e)) => (Verdict::Skipped, Some(format!("resource guard: {e}"))),
            Err(Error::Consistency(msg)) => {
                faults += 1;
                (Verdict::Fail, Some(format!("consistency fault: {msg}")))
            }
            Err(e) => (Verdict::Fail, Some(e.to_string())),
        };
        match verdict {
            Verdict::Pass => passed += 1,
            Verdict::Fail => failed += 1,
            Verdict::Skipped => skipped += 1,
        }
        cases.push(CaseReport {
            index,
            seed,
            verdict,
            checks: ctx.checks,
            detail,
            input: (verdict == Verdict::Fail).then_some(ctx.input),
        });
    }
    Report {
        tool: "catmodel".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        config: config.clone(),
        passed,
        failed,
        skipped,
        classified,
        consistency_faults: faults,
        cases,
        wall_time_ms: config.timing.then(|| start.elapsed().as_millis() as u64),
    }
}
