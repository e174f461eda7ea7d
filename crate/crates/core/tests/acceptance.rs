//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All checks are exact.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use forcible::degseq::{
    chvatal_condition, chvatal_extremal_sequence, exception_sequence, is_exception_sequence,
    is_graphical, majorizes,
};
use forcible::graph::{
    build_cnk, build_exception_graph, circumference, closure, is_biconnected, is_hamiltonian,
    SimpleGraph,
};
use forcible::nwgen::{enumerate_nw_sequences, nw_fibers, pi_prime_count, NwParams};
use forcible::realize::{havel_hakimi_realize, Realizations};
use forcible::verify::{verify_forcibly_hamiltonian, Budget, Verdict, VerifyOptions};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exhaustive() -> VerifyOptions {
    VerifyOptions {
        budget: Budget::Unlimited,
        ..VerifyOptions::default()
    }
}

/// Every constructed Nash-Williams sequence for 5 ≤ n ≤ 9 is graphical,
/// fails Chvátal's condition exactly at k, and survives exhaustive search.
fn nash_williams_soundness() -> Outcome {
    let mut sequences = 0;
    let mut realizations = 0;
    for n in 5..=9 {
        for p in NwParams::all_for(n) {
            for seq in enumerate_nw_sequences(p) {
                ensure(is_graphical(&seq), || format!("{seq} not graphical"))?;
                let failing = chvatal_condition(&seq).unwrap().failing_k;
                ensure(failing == Some(p.k()), || {
                    format!("{seq}: failing_k {failing:?}, expected {}", p.k())
                })?;
                let r = verify_forcibly_hamiltonian(&seq, &exhaustive()).unwrap();
                ensure(r.verdict == Verdict::ForciblyHamiltonian, || {
                    format!("{seq}: verdict {}", r.verdict.as_str())
                })?;
                sequences += 1;
                realizations += r.realizations_checked;
            }
        }
    }
    Ok(format!(
        "{sequences} sequences, {realizations} realizations"
    ))
}

/// The exceptional sequence is refuted with a matching counterexample, and
/// `K_1 ∨ (K_k ∪ K_{n−k−1})` realizes it without a Hamilton cycle.
fn exception_refutation() -> Outcome {
    let mut cases = 0;
    for n in 5..=9 {
        for p in NwParams::all_for(n) {
            let seq = exception_sequence(n, p.k()).unwrap();
            ensure(is_exception_sequence(&seq, p.k()).unwrap(), || {
                format!("{seq} not recognized as exceptional")
            })?;
            let r = verify_forcibly_hamiltonian(&seq, &exhaustive()).unwrap();
            ensure(r.verdict == Verdict::NotForciblyHamiltonian, || {
                format!("{seq}: verdict {}", r.verdict.as_str())
            })?;
            let cx = r.counterexample.as_ref().unwrap();
            ensure(cx.degree_sequence() == seq && !is_hamiltonian(cx), || {
                format!("{seq}: bad counterexample {cx:?}")
            })?;
            let witness = build_exception_graph(n, p.k(), 1).unwrap();
            ensure(witness.degree_sequence() == seq, || {
                format!(
                    "({n},{}): witness degree sequence {}",
                    p.k(),
                    witness.degree_sequence()
                )
            })?;
            ensure(!is_hamiltonian(&witness), || {
                format!("({n},{}): witness is hamiltonian", p.k())
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (n,k) pairs"))
}

/// Every graphical sequence with 3 ≤ n ≤ 7 satisfying Chvátal's condition
/// is forcibly hamiltonian by exhaustion.
fn chvatal_soundness() -> Outcome {
    let mut sequences = 0;
    for n in 3..=7 {
        for seq in all_sequences(n).into_iter().filter(is_graphical) {
            if !chvatal_condition(&seq).unwrap().satisfied {
                continue;
            }
            let r = verify_forcibly_hamiltonian(&seq, &exhaustive()).unwrap();
            ensure(r.verdict == Verdict::ForciblyHamiltonian, || {
                format!("{seq}: verdict {}", r.verdict.as_str())
            })?;
            sequences += 1;
        }
    }
    Ok(format!("{sequences} sequences"))
}

/// Chvátal's extremal sequence majorizes every graphical sequence failing at
/// k, and C_{n,k} realizes it without a Hamilton cycle.
fn chvatal_sharpness() -> Outcome {
    let mut failing = 0;
    for n in 3..=8 {
        for seq in all_sequences(n).into_iter().filter(is_graphical) {
            if let Some(k) = chvatal_condition(&seq).unwrap().failing_k {
                let extremal = chvatal_extremal_sequence(n, k).unwrap();
                ensure(majorizes(&extremal, &seq).unwrap(), || {
                    format!("{extremal} does not majorize {seq}")
                })?;
                failing += 1;
            }
        }
        for k in (1..).take_while(|k| 2 * k < n) {
            let g = build_cnk(n, k).unwrap();
            let d = chvatal_extremal_sequence(n, k).unwrap();
            ensure(g.degree_sequence() == d, || format!("C_({n},{k}) degrees"))?;
            ensure(!is_hamiltonian(&g), || {
                format!("C_({n},{k}) is hamiltonian")
            })?;
        }
    }
    Ok(format!("{failing} failing sequences"))
}

fn closure_checks(g: &SimpleGraph, rng: &mut StdRng) -> Result<(), String> {
    let cl = closure(g);
    ensure(is_hamiltonian(g) == is_hamiltonian(&cl), || {
        format!("hamiltonicity differs: {g:?}")
    })?;
    ensure(closure(&cl) == cl, || format!("not idempotent: {g:?}"))?;
    for _ in 0..10 {
        ensure(closure_random_order(g, rng) == cl, || {
            format!("order dependent: {g:?}")
        })?;
    }
    Ok(())
}

/// Closure preserves hamiltonicity, is idempotent, and does not depend on
/// the join order.
fn closure_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_c105);
    let mut graphs = 0;
    for n in 1..=6 {
        for g in all_graphs(n) {
            closure_checks(&g, &mut rng)?;
            graphs += 1;
        }
    }
    for _ in 0..10_000 {
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(7, p, &mut rng);
        closure_checks(&g, &mut rng)?;
        graphs += 1;
    }
    Ok(format!("{graphs} graphs, 10 random join orders each"))
}

/// Dirac: 2-connected graphs have circumference at least min(n, 2δ).
fn dirac_bound() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xd1_7ac);
    let mut checked = 0;
    let mut check = |g: &SimpleGraph| -> Result<(), String> {
        if is_biconnected(g) {
            let bound = g.n().min(2 * g.min_degree());
            let c = circumference(g);
            ensure(c >= bound, || format!("circumference {c} < {bound}: {g:?}"))?;
            checked += 1;
        }
        Ok(())
    };
    for n in 3..=6 {
        for g in all_graphs(n) {
            check(&g)?;
        }
    }
    for _ in 0..10_000 {
        let p = rng.gen_range(0.3..0.9);
        check(&random_graph(7, p, &mut rng))?;
    }
    Ok(format!("{checked} 2-connected graphs"))
}

/// Erdős–Gallai agrees with Havel–Hakimi on every sequence with n ≤ 7.
fn graphicality_oracle() -> Outcome {
    let mut total = 0;
    for n in 1..=7 {
        for seq in all_sequences(n) {
            let hh = havel_hakimi_realize(&seq);
            ensure(is_graphical(&seq) == hh.is_some(), || {
                format!("disagree on {seq}")
            })?;
            if let Some(g) = hh {
                ensure(g.degree_sequence() == seq, || {
                    format!("bad realization of {seq}")
                })?;
            }
            total += 1;
        }
    }
    Ok(format!("{total} sequences"))
}

/// Sequence counts against the lower bound, exact small values, fiber sizes.
fn counting() -> Outcome {
    let exact = [((5, 2), 1), ((7, 2), 1), ((7, 3), 3), ((9, 3), 3)];
    for ((n, k), want) in exact {
        let got = enumerate_nw_sequences(NwParams::new(n, k).unwrap()).len();
        ensure(got == want, || {
            format!("({n},{k}): {got} sequences, expected {want}")
        })?;
    }
    let mut pairs = 0;
    for n in 5..=12 {
        for p in NwParams::all_for(n) {
            let fibers = nw_fibers(p);
            let count = fibers.len() as u128;
            let modifiers = pi_prime_count(p.k()).unwrap();
            ensure(2 * count >= modifiers, || {
                format!("({n},{}): 2*{count} < {modifiers}", p.k())
            })?;
            let widest = fibers.values().map(Vec::len).max().unwrap_or(0);
            ensure(widest <= 2, || {
                format!("({n},{}): fiber of size {widest}", p.k())
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (n,k) pairs"))
}

/// The realization enumerator matches the edge-subset filter for n ≤ 5.
fn realization_oracle() -> Outcome {
    let mut sequences = 0;
    for n in 1..=5 {
        for seq in all_sequences(n).into_iter().filter(is_graphical) {
            let got = Realizations::new(&seq).unwrap().collect();
            let distinct: BTreeSet<_> = got.iter().cloned().collect();
            ensure(distinct.len() == got.len(), || {
                format!("duplicates for {seq}")
            })?;
            let want: BTreeSet<_> = brute_realizations(&seq.nonincreasing())
                .into_iter()
                .collect();
            ensure(distinct == want, || {
                format!(
                    "{seq}: {} enumerated vs {} brute force",
                    distinct.len(),
                    want.len()
                )
            })?;
            sequences += 1;
        }
    }
    Ok(format!("{sequences} graphical sequences"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("Nash-Williams soundness", nash_williams_soundness),
        ("Exception refutation", exception_refutation),
        ("Chvatal soundness", chvatal_soundness),
        ("Chvatal sharpness", chvatal_sharpness),
        ("Closure equivalence", closure_equivalence),
        ("Dirac bound", dirac_bound),
        ("Graphicality oracle agreement", graphicality_oracle),
        ("Counting", counting),
        ("Realization-enumeration oracle", realization_oracle),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {}. {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
