//! Exhaustive duality checking over all small digraphs.

use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::enumerate::{enumerate_ids, GraphId, MAX_ENUMERATION_VERTICES};
use crate::digraph::{hom_exists, DiGraph, VertexMap};
use crate::families::{family_hits, FamilyDescriptor, FamilyWitness};

/// Environment variable read for the worker count when none is given.
pub const JOBS_ENV: &str = "HOMDUAL_JOBS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Left,
    Right,
    Both,
    Neither,
}

impl Verdict {
    pub fn new(left: bool, right: bool) -> Verdict {
        match (left, right) {
            (true, false) => Verdict::Left,
            (false, true) => Verdict::Right,
            (true, true) => Verdict::Both,
            (false, false) => Verdict::Neither,
        }
    }

    pub fn is_violation(self) -> bool {
        matches!(self, Verdict::Both | Verdict::Neither)
    }

    pub fn left(self) -> bool {
        matches!(self, Verdict::Left | Verdict::Both)
    }

    pub fn right(self) -> bool {
        matches!(self, Verdict::Right | Verdict::Both)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Left => "LEFT",
            Verdict::Right => "RIGHT",
            Verdict::Both => "BOTH",
            Verdict::Neither => "NEITHER",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportKind {
    /// Every member of the left family was decided exactly.
    Certificate,
    /// The left family was cut off at a finite bound.
    Evidence,
}

impl fmt::Display for ReportKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportKind::Certificate => "certificate",
            ReportKind::Evidence => "evidence",
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub n_min: usize,
    pub n_max: usize,
    /// One graph per isomorphism class instead of every labeling.
    pub dedup: bool,
    /// Worker threads; falls back to the environment, then to rayon's default.
    pub jobs: Option<usize>,
    /// Witnesses kept per side and per vertex count.
    pub samples: usize,
    /// Forces the evidence label even for an exact family.
    pub truncated: bool,
}

impl VerifyOptions {
    pub fn up_to(n_max: usize) -> VerifyOptions {
        VerifyOptions { n_min: 0, n_max, dedup: false, jobs: None, samples: 2, truncated: false }
    }

    pub fn exactly(n: usize) -> VerifyOptions {
        VerifyOptions { n_min: n, ..VerifyOptions::up_to(n) }
    }

    pub fn dedup(mut self, dedup: bool) -> Self {
        self.dedup = dedup;
        self
    }

    pub fn jobs(mut self, jobs: Option<usize>) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn truncated(mut self, truncated: bool) -> Self {
        self.truncated = truncated;
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LevelCounts {
    pub n: usize,
    pub tested: usize,
    pub left_hits: usize,
    pub right_hits: usize,
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub id: GraphId,
    pub graph: DiGraph,
    pub left: bool,
    pub right: bool,
}

#[derive(Clone, Debug)]
pub enum Sample {
    Left { id: GraphId, witness: FamilyWitness },
    Right { id: GraphId, dual: usize, map: VertexMap },
}

#[derive(Clone, Debug)]
pub struct DualityReport {
    pub pair: String,
    pub kind: ReportKind,
    pub n_min: usize,
    pub n_max: usize,
    pub dedup: bool,
    pub levels: Vec<LevelCounts>,
    pub verdicts: Vec<(GraphId, Verdict)>,
    pub violations: Vec<Violation>,
    pub samples: Vec<Sample>,
    pub elapsed: Duration,
}

impl DualityReport {
    pub fn tested(&self) -> usize {
        self.levels.iter().map(|l| l.tested).sum()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// The report as stable text. Wall time is left out so that repeated
    /// runs compare equal.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "PAIR {}", self.pair);
        let _ = writeln!(out, "KIND {}", self.kind);
        let _ =
            writeln!(out, "RANGE {}..{} {}", self.n_min, self.n_max, if self.dedup { "classes" } else { "labeled" });
        for (id, v) in &self.verdicts {
            let _ = writeln!(out, "VERDICT {id} {v}");
        }
        for l in &self.levels {
            let _ = writeln!(out, "COUNT n={} tested={} left={} right={}", l.n, l.tested, l.left_hits, l.right_hits);
        }
        for s in &self.samples {
            match s {
                Sample::Left { id, witness } => {
                    let _ = writeln!(out, "SAMPLE {id} LEFT {} map={}", witness.member, show_map(&witness.map));
                }
                Sample::Right { id, dual, map } => {
                    let _ = writeln!(out, "SAMPLE {id} RIGHT dual={dual} map={}", show_map(map));
                }
            }
        }
        for v in &self.violations {
            let _ = writeln!(out, "VIOLATION {} left={} right={}", v.id, v.left, v.right);
        }
        let _ = writeln!(out, "RESULT {}", if self.is_ok() { "ok" } else { "violation" });
        out
    }
}

fn show_map(m: &VertexMap) -> String {
    m.images().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

struct Evaluation {
    verdict: Verdict,
    left: Option<FamilyWitness>,
    right: Option<(usize, VertexMap)>,
}

fn evaluate(family: &FamilyDescriptor, duals: &[DiGraph], g: &DiGraph) -> Evaluation {
    let left = family_hits(family, g);
    let right = duals.iter().enumerate().find_map(|(i, d)| hom_exists(g, d).map(|m| (i, m)));
    Evaluation { verdict: Verdict::new(left.is_some(), right.is_some()), left, right }
}

/// Resolves the worker count: explicit value, then the environment.
pub fn resolve_jobs(jobs: Option<usize>) -> Option<usize> {
    jobs.or_else(|| std::env::var(JOBS_ENV).ok()?.trim().parse().ok()).filter(|&j| j > 0)
}

/// Checks the pair on every graph with `n_min..=n_max` vertices.
pub fn verify_duality(family: &FamilyDescriptor, duals: &[DiGraph], options: &VerifyOptions) -> DualityReport {
    assert!(
        options.n_max <= MAX_ENUMERATION_VERTICES,
        "exhaustive verification covers at most {MAX_ENUMERATION_VERTICES} vertices"
    );
    let start = Instant::now();
    let run = || {
        let mut report = DualityReport {
            pair: pair_name(family, duals),
            kind: if family.is_exact() && !options.truncated { ReportKind::Certificate } else { ReportKind::Evidence },
            n_min: options.n_min,
            n_max: options.n_max,
            dedup: options.dedup,
            levels: Vec::new(),
            verdicts: Vec::new(),
            violations: Vec::new(),
            samples: Vec::new(),
            elapsed: Duration::ZERO,
        };
        for n in options.n_min..=options.n_max {
            let ids = enumerate_ids(n, options.dedup);
            let results: Vec<Evaluation> = ids.par_iter().map(|id| evaluate(family, duals, &id.graph())).collect();
            let mut level = LevelCounts { n, ..LevelCounts::default() };
            let (mut left_samples, mut right_samples) = (0, 0);
            for (id, e) in ids.iter().zip(results) {
                level.tested += 1;
                level.left_hits += e.verdict.left() as usize;
                level.right_hits += e.verdict.right() as usize;
                report.verdicts.push((*id, e.verdict));
                if e.verdict.is_violation() {
                    report.violations.push(Violation {
                        id: *id,
                        graph: id.graph(),
                        left: e.verdict.left(),
                        right: e.verdict.right(),
                    });
                }
                if let Some(witness) = e.left.filter(|_| left_samples < options.samples) {
                    left_samples += 1;
                    report.samples.push(Sample::Left { id: *id, witness });
                }
                if let Some((dual, map)) = e.right.filter(|_| right_samples < options.samples) {
                    right_samples += 1;
                    report.samples.push(Sample::Right { id: *id, dual, map });
                }
            }
            report.levels.push(level);
        }
        report
    };
    let mut report = match resolve_jobs(options.jobs) {
        Some(j) => {
            rayon::ThreadPoolBuilder::new().num_threads(j).build().expect("failed to start worker pool").install(run)
        }
        None => run(),
    };
    report.elapsed = start.elapsed();
    report
}

fn pair_name(family: &FamilyDescriptor, duals: &[DiGraph]) -> String {
    let duals: Vec<String> = duals.iter().map(|d| format!("{}v{}e", d.n(), d.edge_count())).collect();
    format!("{family} | {}", duals.join(","))
}
