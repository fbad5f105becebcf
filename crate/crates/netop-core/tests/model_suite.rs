//! The structural law suite across every registered model family, plus the
//! morphism and isomorphism checks that tie the families together.

use netop_core::laws::{
    check_label_morphism, check_model_laws, check_sg_gamma_iso, check_total_category_laws,
    standard_free_models, standard_models,
};
use netop_core::monoid::MonoidHom;
use netop_core::total::decompose_total;
use netop_core::Model;

#[test]
fn twelve_equations_hold_for_every_model() {
    for model in standard_models() {
        let report = check_model_laws(&model, 150, 6, 18, 42);
        assert!(report.passed(), "{}", report.summary());
    }
}

#[test]
fn twelve_equations_hold_for_graph_product_families() {
    for family in standard_free_models() {
        let report = check_model_laws(&family, 60, 5, 8, 42);
        assert!(report.passed(), "{}", report.summary());
    }
}

#[test]
fn simple_graphs_are_boolean_labellings() {
    let report = check_sg_gamma_iso(3, &[4, 5], 40, 42);
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn cutoff_is_a_model_morphism() {
    for hom in [MonoidHom::cutoff(1), MonoidHom::cutoff(3)] {
        let report = check_label_morphism(&hom, 120, 5, 42);
        assert!(report.passed(), "{}", report.summary());
    }
}

#[test]
fn total_category_laws_hold() {
    for model in [
        Model::Sg,
        Model::Gamma {
            monoid: netop_core::monoid::MonoidSpec::NatAdd,
        },
    ] {
        let report = check_total_category_laws(&model, 120, 6, 42);
        assert!(report.passed(), "{}", report.summary());
    }
}

#[test]
fn colored_wrappers_satisfy_the_structural_equations() {
    // word-level spot suite for the colored wrappers and the Petri-valued
    // model: overlay unit/associativity, disjoint-union associativity and
    // units, naturality, and the block-swap symmetry
    use netop_core::laws::random_permutation;
    use netop_core::model::{
        ColorWord, ColoredModel, ColoredNetwork, PetriValued, SPECIES, TRANSITION,
    };
    use netop_core::perm::Permutation;
    use rand::{Rng, SeedableRng};
    use std::collections::BTreeMap;

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(51);
    let forgetful = ColoredModel::Forgetful {
        colors: vec!["a".into(), "b".into()],
        model: Model::Sg,
    };
    let mut per_color_models = BTreeMap::new();
    per_color_models.insert("a".to_string(), Model::Sg);
    per_color_models.insert("b".to_string(), Model::Dg);
    let per_color = ColoredModel::PerColor {
        models: per_color_models,
    };

    let random_word =
        |rng: &mut rand_chacha::ChaCha8Rng, len: usize, alphabet: &[&str]| -> ColorWord {
            (0..len)
                .map(|_| alphabet[rng.random_range(0..alphabet.len())].to_string())
                .collect()
        };
    let random_element =
        |model: &ColoredModel, word: &ColorWord, rng: &mut rand_chacha::ChaCha8Rng| match model {
            ColoredModel::Forgetful { colors, model } => ColoredNetwork::from_forgetful(
                colors.clone(),
                word.clone(),
                model.sample(word.len(), rng),
            )
            .unwrap(),
            ColoredModel::PerColor { models } => {
                let mut nets = BTreeMap::new();
                for (color, inner) in models {
                    let count = word.iter().filter(|c| *c == color).count();
                    nets.insert(color.clone(), inner.sample(count, rng));
                }
                ColoredNetwork::from_per_color(word.clone(), nets).unwrap()
            }
            ColoredModel::PetriValued => {
                let m = word.iter().filter(|c| *c == SPECIES).count();
                let n = word.iter().filter(|c| *c == TRANSITION).count();
                let mut input = BTreeMap::new();
                let mut output = BTreeMap::new();
                for s in 0..m {
                    for t in 0..n {
                        if rng.random_bool(0.3) {
                            input.insert((s, t), rng.random_range(1..=2));
                        }
                        if rng.random_bool(0.3) {
                            output.insert((s, t), rng.random_range(1..=2));
                        }
                    }
                }
                ColoredNetwork::petri_valued(word.clone(), PetriValued { input, output }).unwrap()
            }
        };

    for (model, alphabet) in [
        (forgetful, vec!["a", "b"]),
        (per_color, vec!["a", "b"]),
        (ColoredModel::PetriValued, vec![SPECIES, TRANSITION]),
    ] {
        for _ in 0..60 {
            let len1 = rng.random_range(0..=4);
            let len2 = rng.random_range(0..=4);
            let w1 = random_word(&mut rng, len1, &alphabet);
            let w2 = random_word(&mut rng, len2, &alphabet);
            let g1 = random_element(&model, &w1, &mut rng);
            let g2 = random_element(&model, &w1, &mut rng);
            let g3 = random_element(&model, &w1, &mut rng);
            let h = random_element(&model, &w2, &mut rng);
            let e1 = ColoredNetwork::empty(model.clone(), w1.clone()).unwrap();

            // overlay unit and associativity
            assert_eq!(g1.overlay(&e1).unwrap(), g1);
            assert_eq!(e1.overlay(&g1).unwrap(), g1);
            assert_eq!(
                g1.overlay(&g2.overlay(&g3).unwrap()).unwrap(),
                g1.overlay(&g2).unwrap().overlay(&g3).unwrap()
            );

            // units add across disjoint union
            let e2 = ColoredNetwork::empty(model.clone(), w2.clone()).unwrap();
            let mut joined = w1.clone();
            joined.extend(w2.iter().cloned());
            assert_eq!(
                e1.disjoint_union(&e2).unwrap(),
                ColoredNetwork::empty(model.clone(), joined).unwrap()
            );

            // interchange
            let h2 = random_element(&model, &w2, &mut rng);
            assert_eq!(
                g1.overlay(&g2)
                    .unwrap()
                    .disjoint_union(&h.overlay(&h2).unwrap())
                    .unwrap(),
                g1.disjoint_union(&h)
                    .unwrap()
                    .overlay(&g2.disjoint_union(&h2).unwrap())
                    .unwrap()
            );

            // naturality and symmetry
            let sigma = random_permutation(w1.len(), &mut rng);
            let tau = random_permutation(w2.len(), &mut rng);
            assert_eq!(
                g1.act(&sigma)
                    .unwrap()
                    .disjoint_union(&h.act(&tau).unwrap())
                    .unwrap(),
                g1.disjoint_union(&h)
                    .unwrap()
                    .act(&sigma.block_sum(&tau))
                    .unwrap()
            );
            let swap = Permutation::block_swap(w2.len(), w1.len());
            assert_eq!(
                h.disjoint_union(&g1).unwrap().act(&swap).unwrap(),
                g1.disjoint_union(&h).unwrap()
            );
        }
    }
}

#[test]
fn action_is_pointwise_preimage() {
    // independent of the law suite: the relabelled network assigns to every
    // edge slot exactly the label the original assigned to its preimage
    use netop_core::laws::random_permutation;
    use netop_core::model::Payload;
    use netop_core::perm::all_edges;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
    let model = Model::Gamma {
        monoid: netop_core::monoid::MonoidSpec::NatAdd,
    };
    for _ in 0..200 {
        let n = 6;
        let g = model.sample(n, &mut rng);
        let sigma = random_permutation(n, &mut rng);
        let acted = g.act(&sigma).unwrap();
        let (Payload::Labels(before), Payload::Labels(after)) = (g.payload(), acted.payload())
        else {
            panic!("labelled payloads")
        };
        let inv = sigma.invert();
        for e in all_edges(n) {
            let preimage = inv.act_on_edge(e).unwrap();
            assert_eq!(after.get(&e), before.get(&preimage), "σ={sigma} e={e:?}");
        }
    }
}

#[test]
fn endomorphism_counts_factor_through_the_fibre() {
    // |hom(n, n)| = |F(n)| · n!
    let summary = decompose_total(&Model::Sg, 3).unwrap();
    assert_eq!(summary.fibre_size, 8);
    assert_eq!(summary.group_order, 6);
    assert_eq!(summary.hom_size, 48);
    assert_eq!(decompose_total(&Model::Dg, 2).unwrap().hom_size, 8);
}
