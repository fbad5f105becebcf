//! Operad axioms and algebra laws across models, plus the degree-bounded
//! action's independence of word representatives.

use netop_core::algebra::{fold_degree_bounded, max_degree, word_edges, DegreeBoundedOp};
use netop_core::green::{FreeModel, GreenWord, KneserSpec, Letter, Variety};
use netop_core::laws::{check_algebra_laws, check_operad_laws, mutation_probe, random_permutation};
use netop_core::monoid::{MonoidElement, MonoidSpec};
use netop_core::perm::Permutation;
use netop_core::{Model, Network};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

#[test]
fn operad_laws_hold_for_several_models() {
    let models = [
        Model::Sg,
        Model::Gamma {
            monoid: MonoidSpec::NatAdd,
        },
        Model::Hg,
        Model::PartitionJoin,
    ];
    for model in models {
        let report = check_operad_laws(&model, 100, 8, 17);
        assert!(report.passed(), "{}", report.summary());
    }
}

#[test]
fn predicate_algebra_acts_associatively() {
    // acting by a composite equals acting in stages, with the filter
    // applied at every level
    use netop_core::algebra::{act_predicate, AttributedNetwork, EdgePredicate};
    use netop_core::laws::random_operation;
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let p = EdgePredicate::MaxDist { l: 3.0 };
    for _ in 0..100 {
        let n = rng.random_range(0..=6);
        let f = random_operation(&Model::Sg, n, &mut rng);
        let args: Vec<_> = f
            .profile()
            .iter()
            .map(|&s| random_operation(&Model::Sg, s, &mut rng))
            .collect();
        let leaves: Vec<Vec<AttributedNetwork>> = args
            .iter()
            .map(|a| {
                a.profile()
                    .iter()
                    .map(|&s| {
                        let attrs = (0..s)
                            .map(|_| {
                                netop_core::algebra::Attr::Point(
                                    rng.random_range(-3..=3) as f64,
                                    rng.random_range(-3..=3) as f64,
                                )
                            })
                            .collect();
                        // an edgeless start trivially satisfies the predicate
                        AttributedNetwork::new(Network::simple_graph(s, &[]).unwrap(), attrs)
                            .unwrap()
                    })
                    .collect()
            })
            .collect();
        let staged = args
            .iter()
            .zip(&leaves)
            .map(|(a, ls)| act_predicate(a, ls, &p).unwrap())
            .collect::<Vec<_>>();
        let staged = act_predicate(&f, &staged, &p).unwrap();
        let flat: Vec<AttributedNetwork> = leaves.into_iter().flatten().collect();
        let direct = act_predicate(&f.compose(&args).unwrap(), &flat, &p).unwrap();
        assert_eq!(staged, direct);
    }
}

#[test]
fn commutative_boolean_fibres_are_simple_graphs() {
    // the commutative-variety Boolean fibres identify with simple graphs:
    // evaluation is a bijection on each fibre and turns overlay, disjoint
    // union, and the action into their graph counterparts
    use netop_core::green::evaluate_word;
    let model = FreeModel::new(MonoidSpec::BoolOr, Variety::CMon).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for n in 0..=4usize {
        // bijectivity: every simple graph arises from exactly one normal form
        let mut seen = std::collections::BTreeSet::new();
        for graph in Model::Sg.enumerate_fibre(n).unwrap() {
            let letters: Vec<(usize, usize, MonoidElement)> = graph
                .edges_one_indexed()
                .unwrap()
                .into_iter()
                .map(|(i, j)| (i, j, MonoidElement::Bool(true)))
                .collect();
            let word = model.word(n, &letters).unwrap();
            assert_eq!(evaluate_word(&word, &Model::Sg, n).unwrap(), graph);
            assert!(seen.insert(word.letters().to_vec()), "fibre words collide");
        }
    }
    for _ in 0..200 {
        let n = rng.random_range(0..=4);
        let m = rng.random_range(0..=4);
        let a = model.sample(n, &mut rng).unwrap();
        let b = model.sample(n, &mut rng).unwrap();
        let c = model.sample(m, &mut rng).unwrap();
        let sigma = random_permutation(n, &mut rng);
        let eval = |w: &GreenWord, k: usize| evaluate_word(w, &Model::Sg, k).unwrap();
        assert_eq!(
            eval(&model.overlay(&a, &b).unwrap(), n),
            eval(&a, n).overlay(&eval(&b, n)).unwrap()
        );
        assert_eq!(
            eval(&model.disjoint_union(&a, n, &c, m).unwrap(), n + m),
            eval(&a, n).disjoint_union(&eval(&c, m)).unwrap()
        );
        assert_eq!(
            eval(&model.act(&sigma, &a, n).unwrap(), n),
            eval(&a, n).act(&sigma).unwrap()
        );
    }
}

#[test]
fn label_homomorphisms_induce_operad_morphisms() {
    // mapping labels pointwise commutes with operadic composition
    use netop_core::laws::random_operation;
    use netop_core::monoid::MonoidHom;
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let source = Model::Gamma {
        monoid: MonoidSpec::NatAdd,
    };
    let hom = MonoidHom::cutoff(2);
    for _ in 0..100 {
        let n = rng.random_range(0..=6);
        let f = random_operation(&source, n, &mut rng);
        let args: Vec<_> = f
            .profile()
            .iter()
            .map(|&s| random_operation(&source, s, &mut rng))
            .collect();
        let mapped_then_composed = f
            .map_labels(&hom)
            .unwrap()
            .compose(
                &args
                    .iter()
                    .map(|a| a.map_labels(&hom).unwrap())
                    .collect::<Vec<_>>(),
            )
            .unwrap();
        let composed_then_mapped = f.compose(&args).unwrap().map_labels(&hom).unwrap();
        assert_eq!(mapped_then_composed, composed_then_mapped);
    }
}

#[test]
fn corrupted_compose_fails_the_suite() {
    mutation_probe(&Model::Sg, 17).unwrap();
    mutation_probe(
        &Model::Gamma {
            monoid: MonoidSpec::NatAdd,
        },
        17,
    )
    .unwrap();
}

#[test]
fn algebra_laws_hold() {
    for model in [Model::Sg, Model::MgPlus] {
        let report = check_algebra_laws(&model, 100, 8, 19);
        assert!(report.passed(), "{}", report.summary());
    }
}

fn random_gmon_word(
    n: usize,
    len: usize,
    rng: &mut ChaCha8Rng,
) -> (
    GreenWord,
    Vec<Letter>,
    Arc<netop_core::green::CommutationGraph>,
) {
    let kneser = KneserSpec::new(n, 2).unwrap();
    let graph = Arc::new(kneser.graph());
    let components = kneser.vertices().len();
    let letters: Vec<Letter> = (0..len)
        .map(|_| Letter {
            component: rng.random_range(0..components),
            value: MonoidElement::Bool(true),
        })
        .collect();
    let word = GreenWord::new(graph.clone(), MonoidSpec::BoolOr, letters.clone()).unwrap();
    (word, letters, graph)
}

#[test]
fn degree_bounded_action_is_representative_independent() {
    // folding the edges of shuffle-equivalent words gives the same graph
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut distinct_pairs = 0;
    for _ in 0..100 {
        let n = rng.random_range(4..=5);
        let len = rng.random_range(2..=7);
        let (word, letters, graph) = random_gmon_word(n, len, &mut rng);
        let kneser = KneserSpec::new(n, 2).unwrap();

        // a legal reshuffling of the same word
        let mut shuffled = letters.clone();
        for _ in 0..12 {
            if shuffled.len() < 2 {
                break;
            }
            let i = rng.random_range(0..shuffled.len() - 1);
            if graph.adjacent(shuffled[i].component, shuffled[i + 1].component) {
                shuffled.swap(i, i + 1);
            }
        }
        if shuffled != letters {
            distinct_pairs += 1;
        }
        let shuffled_word = GreenWord::new(graph.clone(), MonoidSpec::BoolOr, shuffled).unwrap();
        assert!(
            word.graphic_normal_form()
                .unwrap()
                .words_equal(&shuffled_word.graphic_normal_form().unwrap())
                .unwrap(),
            "shuffles must stay in the class"
        );

        let k = rng.random_range(0..=3);
        let start = Network::empty(Model::Sg, n).unwrap();
        let via_word =
            fold_degree_bounded(&start, &word_edges(&word, &kneser).unwrap(), k).unwrap();
        let via_shuffled =
            fold_degree_bounded(&start, &word_edges(&shuffled_word, &kneser).unwrap(), k).unwrap();
        assert_eq!(via_word, via_shuffled, "word={word:?} k={k}");
        assert!(max_degree(&via_word).unwrap() <= k);

        // the canonical attempt order agrees with the raw representative
        let op = DegreeBoundedOp::new(vec![n], Permutation::identity(n), word.clone()).unwrap();
        let via_canonical = op.act(&[start], k).unwrap();
        assert_eq!(via_canonical, via_word, "word={word:?} k={k}");
    }
    assert!(
        distinct_pairs > 15,
        "the shuffle generator must produce real variety"
    );
}

#[test]
fn degree_bounded_action_commutes_with_permuted_assembly() {
    // the permutation part relocates argument vertices before edges are
    // attempted
    let model = FreeModel::new(MonoidSpec::BoolOr, Variety::GMon).unwrap();
    let word = model.word(3, &[(1, 2, MonoidElement::Bool(true))]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..50 {
        let sigma = random_permutation(3, &mut rng);
        let op = DegreeBoundedOp::new(vec![1, 2], sigma.clone(), word.clone()).unwrap();
        let args = [
            Network::simple_graph(1, &[]).unwrap(),
            Network::simple_graph(2, &[(1, 2)]).unwrap(),
        ];
        let out = op.act(&args, 2).unwrap();
        let placed = args[0]
            .disjoint_union(&args[1])
            .unwrap()
            .act(&sigma)
            .unwrap();
        let expected = fold_degree_bounded(
            &placed,
            &word_edges(&word, &KneserSpec::new(3, 2).unwrap()).unwrap(),
            2,
        )
        .unwrap();
        assert_eq!(out, expected);
    }
}
