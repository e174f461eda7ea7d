//! Forcible-hamiltonicity verdicts.
//!
//! [`classify`] decides from degree-sequence theory alone (Chvátal's
//! condition and the Nash-Williams shape). [`verify_forcibly_hamiltonian`]
//! decides by exhausting the labeled realizations, accepting each one whose
//! closure is complete and otherwise testing the closure for a Hamilton
//! cycle. A negative verdict always carries a nonhamiltonian realization.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::degseq::{
    chvatal_condition, is_exception_sequence, is_graphical, nw_shape_k, ChvatalResult,
    DegreeSequence,
};
use crate::error::{Error, Result};
use crate::graph::{circumference, closure, is_biconnected, is_hamiltonian, SimpleGraph};
use crate::nwgen::{enumerate_nw_sequences, NwParams};
use crate::realize::{Branch, Realizations};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    ForciblyHamiltonian,
    NotForciblyHamiltonian,
    NotGraphical,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::ForciblyHamiltonian => "FORCIBLY_HAMILTONIAN",
            Verdict::NotForciblyHamiltonian => "NOT_FORCIBLY_HAMILTONIAN",
            Verdict::NotGraphical => "NOT_GRAPHICAL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

/// What a verdict rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    Chvatal,
    NashWilliams,
    Exhaustive,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub sequence: DegreeSequence,
    pub graphical: bool,
    pub chvatal: ChvatalResult,
    pub nw_shape_k: Option<usize>,
    pub exception: bool,
    pub verdict: Verdict,
    pub basis: Option<Basis>,
    /// A nonhamiltonian realization; present iff the verdict is negative.
    pub counterexample: Option<SimpleGraph>,
    /// Labeled realizations examined. With several workers and an early
    /// exit this may vary between runs; the verdict does not.
    pub realizations_checked: u64,
    /// Realizations accepted because their closure is complete.
    pub closure_accepts: u64,
}

/// Realization cap for [`verify_forcibly_hamiltonian`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Budget {
    /// Unlimited for `n ≤ 9`, otherwise [`DEFAULT_CAP`].
    #[default]
    Auto,
    Unlimited,
    Cap(u64),
}

pub const DEFAULT_CAP: u64 = 10_000_000;

impl Budget {
    pub fn cap_for(self, n: usize) -> Option<u64> {
        match self {
            Budget::Auto if n <= 9 => None,
            Budget::Auto => Some(DEFAULT_CAP),
            Budget::Unlimited => None,
            Budget::Cap(c) => Some(c),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub budget: Budget,
    /// Worker threads; 1 runs the search on the calling thread.
    pub jobs: usize,
    /// Accept complete closures and search the closure instead of the
    /// realization. Disabling it never changes a verdict.
    pub closure_fast_path: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            budget: Budget::Auto,
            jobs: 1,
            closure_fast_path: true,
        }
    }
}

fn require_three(seq: &DegreeSequence) -> Result<()> {
    if seq.len() < 3 {
        return Err(Error::TooSmall {
            n: seq.len(),
            min: 3,
        });
    }
    Ok(())
}

/// Theory-only verdict: forcibly hamiltonian when Chvátal's condition holds
/// or the sequence has the Nash-Williams shape without being exceptional;
/// inconclusive otherwise. Never returns a negative verdict.
pub fn classify(seq: &DegreeSequence) -> Result<VerificationReport> {
    require_three(seq)?;
    let graphical = is_graphical(seq);
    let chvatal = chvatal_condition(seq)?;
    let shape = nw_shape_k(seq);
    let exception = match shape {
        Some(k) => is_exception_sequence(seq, k)?,
        None => false,
    };
    let (verdict, basis) = if !graphical {
        (Verdict::NotGraphical, None)
    } else if chvatal.satisfied {
        (Verdict::ForciblyHamiltonian, Some(Basis::Chvatal))
    } else if shape.is_some() && !exception {
        (Verdict::ForciblyHamiltonian, Some(Basis::NashWilliams))
    } else {
        (Verdict::Inconclusive, None)
    };
    Ok(VerificationReport {
        sequence: seq.clone(),
        graphical,
        chvatal,
        nw_shape_k: shape,
        exception,
        verdict,
        basis,
        counterexample: None,
        realizations_checked: 0,
        closure_accepts: 0,
    })
}

#[derive(Default)]
struct Tally {
    checked: u64,
    accepts: u64,
    counterexample: Option<SimpleGraph>,
}

/// Shared state between workers.
struct Shared {
    cap: Option<u64>,
    visited: AtomicU64,
    exhausted: AtomicBool,
    /// Lowest branch index holding a counterexample so far.
    first_hit: AtomicUsize,
    fast_path: bool,
}

impl Shared {
    fn hamiltonian(&self, g: &SimpleGraph, tally: &mut Tally) -> bool {
        if !self.fast_path {
            return is_hamiltonian(g);
        }
        let cl = closure(g);
        if cl.is_complete() {
            tally.accepts += 1;
            return true;
        }
        is_hamiltonian(&cl)
    }

    fn run(&self, index: usize, branch: &Branch) -> Tally {
        let mut tally = Tally::default();
        let _ = branch.for_each(|g| {
            if self.first_hit.load(Ordering::Relaxed) < index {
                return ControlFlow::Break(());
            }
            if let Some(cap) = self.cap {
                if self.visited.fetch_add(1, Ordering::Relaxed) >= cap {
                    self.exhausted.store(true, Ordering::Relaxed);
                    return ControlFlow::Break(());
                }
            }
            tally.checked += 1;
            if self.hamiltonian(g, &mut tally) {
                ControlFlow::Continue(())
            } else {
                tally.counterexample = Some(g.clone());
                self.first_hit.fetch_min(index, Ordering::Relaxed);
                ControlFlow::Break(())
            }
        });
        tally
    }
}

/// Decides forcible hamiltonicity by exhausting the realizations of `seq`.
pub fn verify_forcibly_hamiltonian(
    seq: &DegreeSequence,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    let mut report = classify(seq)?;
    report.basis = None;
    if !report.graphical {
        return Ok(report);
    }
    let realizations = Realizations::new(seq)?;
    let branches = realizations.branches();
    let shared = Shared {
        cap: options.budget.cap_for(seq.len()),
        visited: AtomicU64::new(0),
        exhausted: AtomicBool::new(false),
        first_hit: AtomicUsize::new(usize::MAX),
        fast_path: options.closure_fast_path,
    };

    let tallies: Vec<Tally> = if options.jobs <= 1 {
        let mut out = Vec::with_capacity(branches.len());
        for (i, b) in branches.iter().enumerate() {
            let t = shared.run(i, b);
            let stop = t.counterexample.is_some() || shared.exhausted.load(Ordering::Relaxed);
            out.push(t);
            if stop {
                break;
            }
        }
        out
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .map_err(|e| {
                Error::InvalidParams(format!("cannot start {} workers: {e}", options.jobs))
            })?;
        pool.install(|| {
            branches
                .par_iter()
                .enumerate()
                .map(|(i, b)| shared.run(i, b))
                .collect()
        })
    };

    report.realizations_checked = tallies.iter().map(|t| t.checked).sum();
    report.closure_accepts = tallies.iter().map(|t| t.accepts).sum();
    report.counterexample = tallies.into_iter().find_map(|t| t.counterexample);
    report.verdict = if report.counterexample.is_some() {
        Verdict::NotForciblyHamiltonian
    } else if shared.exhausted.load(Ordering::Relaxed) {
        Verdict::Inconclusive
    } else {
        Verdict::ForciblyHamiltonian
    };
    if report.verdict != Verdict::Inconclusive {
        report.basis = Some(Basis::Exhaustive);
    }
    Ok(report)
}

/// Verifies every constructed Nash-Williams `(n, k)`-sequence.
pub fn check_nw_theorem(p: NwParams, options: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    enumerate_nw_sequences(p)
        .iter()
        .map(|seq| verify_forcibly_hamiltonian(seq, options))
        .collect()
}

/// Dirac's bound `cir(G) ≥ min(n, 2δ(G))`, vacuously true unless `g` is
/// 2-connected.
pub fn dirac_property_check(g: &SimpleGraph) -> bool {
    !is_biconnected(g) || circumference(g) >= g.n().min(2 * g.min_degree())
}
