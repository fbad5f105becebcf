//! Randomized suites over generated nets, plus end-to-end runs through the
//! transport example: grading, whiskering, the two serializations, and
//! individual-token pairings.

use std::collections::BTreeSet;

use netop_core::perm::Permutation;
use netop_petri::exec::{premonoidal_tensor, TensorOrder};
use netop_petri::laws::{check_petri_laws, check_premonoidal_laws, random_net_with_catalysts};
use netop_petri::net::parse_petri;
use netop_petri::{Execution, IntGMorphism};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn grading_suite_passes_at_full_size() {
    let report = check_petri_laws(100, 6, 1);
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn premonoidal_suite_passes_at_full_size() {
    let report = check_premonoidal_laws(100, 1);
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn generated_nets_have_the_designated_catalysts() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        let net = random_net_with_catalysts(5, 2, 3, &mut rng);
        let catalysts = net.catalysts();
        assert!(catalysts.contains(&0) && catalysts.contains(&1));
    }
}

#[test]
fn executions_compose_associatively() {
    let (net, _) = parse_petri("t: a -> a + x\n").unwrap();
    let start = net.parse_marking("a").unwrap();
    let e1 = Execution::single(&net, start, 0).unwrap();
    let e2 = Execution::single(&net, e1.end().clone(), 0).unwrap();
    let e3 = Execution::single(&net, e2.end().clone(), 0).unwrap();
    let left = e1.compose(&e2).unwrap().compose(&e3).unwrap();
    let right = e1.compose(&e2.compose(&e3).unwrap()).unwrap();
    assert_eq!(left, right);
    assert_eq!(left.len(), 3);
    // identities are units
    let id = Execution::identity(left.start().clone());
    assert_eq!(id.compose(&left).unwrap(), left);
    let id_end = Execution::identity(left.end().clone());
    assert_eq!(left.compose(&id_end).unwrap(), left);
}

#[test]
fn premonoidal_tensor_is_associative_per_order() {
    let (net, chosen) =
        parse_petri("catalysts: a\ntau1: a + x -> a + y\ntau2: a + y -> a + z\n").unwrap();
    let chosen: BTreeSet<usize> = chosen.unwrap();
    let mk = |text: &str, t: usize| {
        Execution::single(&net, net.parse_marking(text).unwrap(), t).unwrap()
    };
    let e1 = mk("a + x", 0);
    let e2 = mk("a + x", 0);
    let e3 = mk("a + y", 1);
    for order in [TensorOrder::LeftFirst, TensorOrder::RightFirst] {
        let left = premonoidal_tensor(
            &net,
            &chosen,
            &premonoidal_tensor(&net, &chosen, &e1, &e2, order).unwrap(),
            &e3,
            order,
        )
        .unwrap();
        let right = premonoidal_tensor(
            &net,
            &chosen,
            &e1,
            &premonoidal_tensor(&net, &chosen, &e2, &e3, order).unwrap(),
            order,
        )
        .unwrap();
        assert_eq!(left, right, "order {order:?}");
    }
}

#[test]
fn individual_token_pairings_compose_along_the_transport_story() {
    let (net, chosen) =
        parse_petri("catalysts: a b\ntau1: a + 2c -> a + 2d\ntau2: b + d -> b + e\n").unwrap();
    let chosen = chosen.unwrap();
    let a = net.species_index("a").unwrap();
    let b = net.species_index("b").unwrap();

    // drive a pair to the shore, then boat one across while the jeep idles
    let drive = Execution::single(&net, net.parse_marking("a + b + 2c").unwrap(), 0).unwrap();
    let boat = Execution::single(&net, drive.end().clone(), 1).unwrap();
    let m1 = IntGMorphism::plain(&net, &chosen, vec![a, b], drive).unwrap();
    let m2 = IntGMorphism::plain(&net, &chosen, vec![a, b], boat).unwrap();
    let story = m1.compose(&net, &chosen, &m2).unwrap();
    assert_eq!(story.execution().len(), 2);
    assert_eq!(
        net.marking_to_text(story.execution().end()),
        "a + d + b + e"
    );

    // permuting two equal catalysts is recorded even though the execution
    // component is symmetric
    let two_boats =
        Execution::from_firings(&net, net.parse_marking("2b + 2d").unwrap(), &[1, 1]).unwrap();
    let swap = Permutation::transposition(2, 1, 2).unwrap();
    let crossed = IntGMorphism::new(
        &net,
        &chosen,
        vec![b, b],
        vec![b, b],
        swap,
        two_boats.clone(),
    )
    .unwrap();
    let parallel = IntGMorphism::plain(&net, &chosen, vec![b, b], two_boats).unwrap();
    assert_ne!(crossed, parallel);
}

#[test]
fn random_walks_conserve_every_declared_catalyst_subset() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let net = random_net_with_catalysts(4, 2, 2, &mut rng);
        let start =
            netop_petri::Marking::from_coeffs((0..4).map(|_| rng.random_range(0..=2)).collect());
        let mut exec = Execution::identity(start);
        for _ in 0..6 {
            let enabled = net.enabled(exec.end());
            if enabled.is_empty() {
                break;
            }
            let t = enabled[rng.random_range(0..enabled.len())];
            exec = exec.then_fire(&net, t).unwrap();
        }
        // every subset of the detected catalysts is conserved
        let catalysts: Vec<usize> = net.catalysts().into_iter().collect();
        for mask in 0..(1u32 << catalysts.len().min(4)) {
            let subset: BTreeSet<usize> = catalysts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &s)| s)
                .collect();
            let expected = net.grade(&subset, exec.start()).unwrap();
            for marking in exec.trajectory(&net).unwrap() {
                assert_eq!(net.grade(&subset, &marking).unwrap(), expected);
            }
        }
    }
}
