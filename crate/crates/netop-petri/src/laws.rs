//! Randomized law suites over generated nets: catalyst conservation along
//! executions, grade additivity under the parallel tensor, endpoint
//! soundness, and the premonoidal interchange-failure witness.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exec::{premonoidal_tensor, Execution, TensorOrder};
use crate::net::{Marking, PetriNet, Transition};
use crate::Result;

/// One failed check with reproduction detail.
#[derive(Debug, Clone)]
pub struct LawFailure {
    pub law: String,
    pub details: String,
}

/// Outcome of a suite run.
#[derive(Debug, Clone)]
pub struct LawReport {
    pub name: String,
    pub cases: usize,
    pub checks: usize,
    pub failures: Vec<LawFailure>,
}

impl LawReport {
    fn new(name: impl Into<String>) -> Self {
        LawReport {
            name: name.into(),
            cases: 0,
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            format!(
                "{} ... PASS ({} cases, {} checks)",
                self.name, self.cases, self.checks
            )
        } else {
            format!(
                "{} ... FAIL ({} of {} checks failed)",
                self.name,
                self.failures.len(),
                self.checks
            )
        }
    }

    fn fail(&mut self, law: &str, details: String) {
        self.failures.push(LawFailure {
            law: law.to_string(),
            details,
        });
    }
}

/// Generates a random net over `species_count` species in which the first
/// `catalyst_count` species are forced to be catalysts: every transition
/// touches them with equal source and target coefficients.
pub fn random_net_with_catalysts<R: Rng + ?Sized>(
    species_count: usize,
    catalyst_count: usize,
    transition_count: usize,
    rng: &mut R,
) -> PetriNet {
    let species: Vec<String> = (0..species_count).map(|i| format!("s{i}")).collect();
    let transitions: Vec<Transition> = (0..transition_count)
        .map(|t| {
            let mut source = vec![0u64; species_count];
            let mut target = vec![0u64; species_count];
            for s in 0..species_count {
                if s < catalyst_count {
                    let held = rng.random_range(0..=1);
                    source[s] = held;
                    target[s] = held;
                } else {
                    source[s] = rng.random_range(0..=2);
                    target[s] = rng.random_range(0..=2);
                }
            }
            Transition {
                name: format!("t{t}"),
                source: Marking::from_coeffs(source),
                target: Marking::from_coeffs(target),
            }
        })
        .collect();
    PetriNet::new(species, transitions).expect("generated names are unique")
}

fn random_marking<R: Rng + ?Sized>(species_count: usize, rng: &mut R) -> Marking {
    Marking::from_coeffs(
        (0..species_count)
            .map(|_| rng.random_range(0..=2))
            .collect(),
    )
}

/// Random execution of at most `max_len` steps from a random marking.
fn random_execution<R: Rng + ?Sized>(
    net: &PetriNet,
    start: Marking,
    max_len: usize,
    rng: &mut R,
) -> Result<Execution> {
    let mut exec = Execution::identity(start);
    for _ in 0..max_len {
        let enabled = net.enabled(exec.end());
        if enabled.is_empty() {
            break;
        }
        let t = enabled[rng.random_range(0..enabled.len())];
        exec = exec.then_fire(net, t)?;
    }
    Ok(exec)
}

/// Catalyst conservation, endpoint soundness, and grade additivity on
/// randomized nets with designated catalysts.
pub fn check_petri_laws(cases: usize, max_len: usize, seed: u64) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::new("catalyst grading");
    for case in 0..cases {
        report.cases += 1;
        let species_count = rng.random_range(2..=5);
        let catalyst_count = rng.random_range(1..=species_count.min(3));
        let transition_count = rng.random_range(1..=3);
        let net =
            random_net_with_catalysts(species_count, catalyst_count, transition_count, &mut rng);
        let designated: BTreeSet<usize> = (0..catalyst_count).collect();

        // designated species really are catalysts
        report.checks += 1;
        let detected = net.catalysts();
        if !designated.is_subset(&detected) {
            report.fail(
                "designated catalysts detected",
                format!("case {case}: designated {designated:?}, detected {detected:?}"),
            );
            continue;
        }

        let start = random_marking(species_count, &mut rng);
        let exec = match random_execution(&net, start, max_len, &mut rng) {
            Ok(e) => e,
            Err(err) => {
                report.fail("execution generation", format!("case {case}: {err}"));
                continue;
            }
        };

        // grade is invariant across every intermediate marking
        report.checks += 1;
        let start_grade = net.grade(&designated, exec.start());
        let trajectory = exec.trajectory(&net);
        match (start_grade, trajectory) {
            (Ok(grade), Ok(markings)) => {
                for m in &markings {
                    if net.grade(&designated, m).ok().as_ref() != Some(&grade) {
                        report.fail(
                            "grade invariance",
                            format!("case {case}: net {net:?} execution {exec:?}"),
                        );
                        break;
                    }
                }
            }
            (g, t) => report.fail(
                "grade invariance",
                format!("case {case}: grade {g:?} trajectory {t:?}"),
            ),
        }

        // the stored end agrees with the recomputed one
        report.checks += 1;
        if let Err(err) = exec.validate(&net) {
            report.fail("endpoint soundness", format!("case {case}: {err}"));
        }

        // tensoring adds grades
        report.checks += 1;
        let other_start = random_marking(species_count, &mut rng);
        let other = match random_execution(&net, other_start, max_len, &mut rng) {
            Ok(e) => e,
            Err(err) => {
                report.fail("execution generation", format!("case {case}: {err}"));
                continue;
            }
        };
        let tensored = exec.tensor(&other);
        let sum = exec
            .grade(&net, &designated)
            .and_then(|g| other.grade(&net, &designated).and_then(|h| g.add(&h)));
        match (tensored, sum) {
            (Ok(t), Ok(s)) => {
                if t.grade(&net, &designated).ok() != Some(s) {
                    report.fail(
                        "grade additivity",
                        format!("case {case}: {exec:?} ⊗ {other:?}"),
                    );
                } else if let Err(err) = t.validate(&net) {
                    report.fail("tensor endpoint soundness", format!("case {case}: {err}"));
                }
            }
            (t, s) => report.fail(
                "grade additivity",
                format!("case {case}: tensor {t:?} sum {s:?}"),
            ),
        }
    }
    report
}

/// The interchange-failure witness on the transport net: serializing a jeep
/// trip and a boat trip at equal grade in the two orders yields different
/// step sequences with equal endpoints and Parikh vectors.
pub fn interchange_failure_witness() -> Result<(Execution, Execution)> {
    let (net, chosen) =
        crate::net::parse_petri("catalysts: a b\ntau1: a + 2c -> a + 2d\ntau2: b + d -> b + e\n")?;
    let chosen = chosen.expect("declared");
    let jeep = Execution::single(&net, net.parse_marking("a + 2c")?, 0)?
        .whisker(&net.parse_marking("b")?)?;
    let boat = Execution::single(&net, net.parse_marking("b + d")?, 1)?
        .whisker(&net.parse_marking("a")?)?;
    let lf = premonoidal_tensor(&net, &chosen, &jeep, &boat, TensorOrder::LeftFirst)?;
    let rf = premonoidal_tensor(&net, &chosen, &jeep, &boat, TensorOrder::RightFirst)?;
    Ok((lf, rf))
}

/// Premonoidal checks: the witness above, plus agreement of endpoints and
/// Parikh vectors between the two orders on randomized same-grade pairs.
pub fn check_premonoidal_laws(cases: usize, seed: u64) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::new("premonoidal tensor");

    report.cases += 1;
    report.checks += 1;
    match interchange_failure_witness() {
        Ok((lf, rf)) => {
            let (net, _) = crate::net::parse_petri(
                "catalysts: a b\ntau1: a + 2c -> a + 2d\ntau2: b + d -> b + e\n",
            )
            .expect("parses");
            if lf.steps() == rf.steps() {
                report.fail(
                    "interchange failure",
                    "the two serializations coincide".into(),
                );
            }
            if lf.start() != rf.start()
                || lf.end() != rf.end()
                || lf.parikh_vector(&net) != rf.parikh_vector(&net)
            {
                report.fail(
                    "interchange coarse agreement",
                    format!("lf={lf:?} rf={rf:?}"),
                );
            }
        }
        Err(err) => report.fail("interchange failure", err.to_string()),
    }

    for case in 0..cases {
        report.cases += 1;
        let species_count = rng.random_range(2..=4);
        let catalyst_count = rng.random_range(1..=species_count.min(2));
        let net = random_net_with_catalysts(species_count, catalyst_count, 2, &mut rng);
        let designated: BTreeSet<usize> = (0..catalyst_count).collect();

        // build two executions sharing a start's catalyst part
        let shared: Vec<u64> = (0..species_count)
            .map(|s| {
                if s < catalyst_count {
                    rng.random_range(0..=2)
                } else {
                    0
                }
            })
            .collect();
        let shared = Marking::from_coeffs(shared);
        let pad = |rng: &mut ChaCha8Rng| {
            let extra: Vec<u64> = (0..species_count)
                .map(|s| {
                    if s < catalyst_count {
                        0
                    } else {
                        rng.random_range(0..=2)
                    }
                })
                .collect();
            Marking::from_coeffs(extra)
        };
        let left_start = shared.add(&pad(&mut rng)).expect("no overflow");
        let right_start = shared.add(&pad(&mut rng)).expect("no overflow");
        let left = random_execution(&net, left_start, 3, &mut rng);
        let right = random_execution(&net, right_start, 3, &mut rng);
        let (Ok(left), Ok(right)) = (left, right) else {
            report.fail("execution generation", format!("case {case}"));
            continue;
        };

        report.checks += 1;
        let lf = premonoidal_tensor(&net, &designated, &left, &right, TensorOrder::LeftFirst);
        let rf = premonoidal_tensor(&net, &designated, &left, &right, TensorOrder::RightFirst);
        match (lf, rf) {
            (Ok(lf), Ok(rf)) => {
                let coarse_ok = lf.start() == rf.start()
                    && lf.end() == rf.end()
                    && lf.parikh_vector(&net) == rf.parikh_vector(&net)
                    && lf.validate(&net).is_ok()
                    && rf.validate(&net).is_ok();
                if !coarse_ok {
                    report.fail(
                        "serializations agree on coarse certificates",
                        format!("case {case}: lf={lf:?} rf={rf:?}"),
                    );
                }
            }
            (lf, rf) => report.fail(
                "premonoidal tensor construction",
                format!("case {case}: lf={lf:?} rf={rf:?}"),
            ),
        }
    }
    report
}
