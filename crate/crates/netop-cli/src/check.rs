//! The `check` subcommand: runs the invariant suites with a fixed seed and
//! prints one line per suite.

use netop_core::green::kneser_graph;
use netop_core::laws::{
    self, check_algebra_laws, check_green_laws, check_label_morphism, check_model_laws,
    check_operad_laws, check_operad_laws_with, check_sg_gamma_iso, check_total_category_laws,
    standard_free_models, standard_models,
};
use netop_core::monoid::{MonoidHom, MonoidSpec};
use netop_core::Model;
use netop_petri::laws::{check_petri_laws, check_premonoidal_laws};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Models,
    Operad,
    Green,
    Petri,
    All,
}

/// Known fault injections for exercising the checker itself.
pub const FAULTS: &[&str] = &["operad-skip-act"];

pub struct CheckOutcome {
    pub lines: Vec<String>,
    pub failed: usize,
}

fn push_core(lines: &mut Vec<String>, failed: &mut usize, report: netop_core::laws::LawReport) {
    lines.push(report.summary());
    if !report.passed() {
        *failed += 1;
        for failure in report.failures.iter().take(3) {
            lines.push(format!("    law: {}", failure.law));
            for l in failure.details.lines() {
                lines.push(format!("    {l}"));
            }
        }
    }
}

fn push_petri(lines: &mut Vec<String>, failed: &mut usize, report: netop_petri::laws::LawReport) {
    lines.push(report.summary());
    if !report.passed() {
        *failed += 1;
        for failure in report.failures.iter().take(3) {
            lines.push(format!("    law: {}", failure.law));
            for l in failure.details.lines() {
                lines.push(format!("    {l}"));
            }
        }
    }
}

pub fn run_check(suite: Suite, seed: u64, cases: usize, fault: Option<&str>) -> CheckOutcome {
    let mut lines = Vec::new();
    let mut failed = 0usize;
    lines.push(format!("running suite with seed {seed}, {cases} cases"));

    if matches!(suite, Suite::Models | Suite::All) {
        for model in standard_models() {
            push_core(
                &mut lines,
                &mut failed,
                check_model_laws(&model, cases, 6, 18, seed),
            );
        }
        for family in standard_free_models() {
            push_core(
                &mut lines,
                &mut failed,
                check_model_laws(&family, cases.min(150), 5, 8, seed),
            );
        }
        push_core(
            &mut lines,
            &mut failed,
            check_sg_gamma_iso(3, &[4, 5], cases.min(100), seed),
        );
        push_core(
            &mut lines,
            &mut failed,
            check_label_morphism(&MonoidHom::cutoff(2), cases.min(200), 5, seed),
        );
    }

    if matches!(suite, Suite::Operad | Suite::All) {
        let gamma_nat = Model::Gamma {
            monoid: MonoidSpec::NatAdd,
        };
        for model in [Model::Sg, gamma_nat.clone()] {
            let report = match fault {
                Some("operad-skip-act") => check_operad_laws_with(
                    &model,
                    cases.min(100),
                    8,
                    seed,
                    Some(&laws::compose_skipping_action),
                ),
                _ => check_operad_laws(&model, cases.min(300), 8, seed),
            };
            push_core(&mut lines, &mut failed, report);
        }
        push_core(
            &mut lines,
            &mut failed,
            check_algebra_laws(&Model::Sg, cases.min(200), 8, seed),
        );
        push_core(
            &mut lines,
            &mut failed,
            check_total_category_laws(&gamma_nat, cases.min(300), 6, seed),
        );
    }

    if matches!(suite, Suite::Green | Suite::All) {
        push_core(
            &mut lines,
            &mut failed,
            check_green_laws(cases.min(120), seed),
        );
        // fixed Kneser facts
        let mut kneser_line = String::from("Kneser graphs KG(3..5,2) ... ");
        let kg52 = kneser_graph(5, 2).expect("valid");
        let kg42 = kneser_graph(4, 2).expect("valid");
        let kg32 = kneser_graph(3, 2).expect("valid");
        let ok = kg52.vertex_count() == 10
            && kg52.edge_count() == 15
            && (0..10).all(|v| kg52.degree(v) == 3)
            && kg42.edge_count() == 3
            && kg32.edge_count() == 0;
        if ok {
            kneser_line.push_str("PASS");
        } else {
            kneser_line.push_str("FAIL");
            failed += 1;
        }
        lines.push(kneser_line);
    }

    if matches!(suite, Suite::Petri | Suite::All) {
        push_petri(
            &mut lines,
            &mut failed,
            check_petri_laws(cases.min(200), 6, seed),
        );
        push_petri(
            &mut lines,
            &mut failed,
            check_premonoidal_laws(cases.min(100), seed),
        );
    }

    if failed == 0 {
        lines.push("ALL SUITES PASS".to_string());
    } else {
        lines.push(format!("{failed} SUITE(S) FAILED"));
    }
    CheckOutcome { lines, failed }
}
