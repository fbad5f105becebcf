//! Executable law suites: the twelve structural equations every network
//! model must satisfy, the operad axioms (associativity, units,
//! equivariance), algebra laws, and the word-problem cross-checks for graph
//! products. Used by the test suites and by the CLI checker.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::green::{oracle, FreeModel, GreenWord, Variety};
use crate::model::{gamma_bool_to_sg, sg_to_gamma_bool};
use crate::monoid::{MonoidHom, MonoidSpec};
use crate::operad::{profile_block_permutation, OperadOperation};
use crate::perm::Permutation;
use crate::{algebra, Error, Model, Network, Result};

/// One failed check, with enough detail to reproduce it.
#[derive(Debug, Clone)]
pub struct LawFailure {
    pub law: String,
    pub details: String,
}

/// Outcome of one suite run.
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

    fn check<T: PartialEq + std::fmt::Debug>(
        &mut self,
        law: &str,
        lhs: Result<T>,
        rhs: Result<T>,
        context: impl Fn() -> String,
    ) {
        self.checks += 1;
        let ok = match (&lhs, &rhs) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        };
        if !ok {
            self.failures.push(LawFailure {
                law: law.to_string(),
                details: format!("{}\n  lhs = {lhs:?}\n  rhs = {rhs:?}", context()),
            });
        }
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
}

/// A family of network monoids indexed by arity, with the three structure
/// maps. The law runner is generic over this, so plain models and
/// graph-product fibres share one suite.
pub trait NetworkFamily {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn family_name(&self) -> String;
    fn empty_at(&self, n: usize) -> Result<Self::Elem>;
    fn overlay_at(&self, n: usize, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn disjoint_at(&self, m: usize, n: usize, a: &Self::Elem, b: &Self::Elem)
        -> Result<Self::Elem>;
    fn act_at(&self, n: usize, sigma: &Permutation, a: &Self::Elem) -> Result<Self::Elem>;
    fn sample_at(&self, n: usize, rng: &mut dyn RngCore) -> Result<Self::Elem>;
}

impl NetworkFamily for Model {
    type Elem = Network;

    fn family_name(&self) -> String {
        self.to_string()
    }

    fn empty_at(&self, n: usize) -> Result<Network> {
        Network::empty(self.clone(), n)
    }

    fn overlay_at(&self, _n: usize, a: &Network, b: &Network) -> Result<Network> {
        a.overlay(b)
    }

    fn disjoint_at(&self, _m: usize, _n: usize, a: &Network, b: &Network) -> Result<Network> {
        a.disjoint_union(b)
    }

    fn act_at(&self, _n: usize, sigma: &Permutation, a: &Network) -> Result<Network> {
        a.act(sigma)
    }

    fn sample_at(&self, n: usize, rng: &mut dyn RngCore) -> Result<Network> {
        Ok(self.sample(n, rng))
    }
}

impl NetworkFamily for FreeModel {
    type Elem = GreenWord;

    fn family_name(&self) -> String {
        self.name()
    }

    fn empty_at(&self, n: usize) -> Result<GreenWord> {
        self.empty(n)
    }

    fn overlay_at(&self, _n: usize, a: &GreenWord, b: &GreenWord) -> Result<GreenWord> {
        self.overlay(a, b)
    }

    fn disjoint_at(&self, m: usize, n: usize, a: &GreenWord, b: &GreenWord) -> Result<GreenWord> {
        self.disjoint_union(a, m, b, n)
    }

    fn act_at(&self, n: usize, sigma: &Permutation, a: &GreenWord) -> Result<GreenWord> {
        self.act(sigma, a, n)
    }

    fn sample_at(&self, n: usize, rng: &mut dyn RngCore) -> Result<GreenWord> {
        self.sample(n, rng)
    }
}

pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut image: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        image.swap(i, rng.random_range(0..=i));
    }
    Permutation::from_image(image).expect("shuffled identity is a bijection")
}

/// The models exercised by the standard law suite.
pub fn standard_models() -> Vec<Model> {
    vec![
        Model::Sg,
        Model::Dg,
        Model::Mg,
        Model::MgPlus,
        Model::Hg,
        Model::PartitionJoin,
        Model::PartitionMeet,
        Model::Gamma {
            monoid: MonoidSpec::NatAdd,
        },
        Model::Gamma {
            monoid: MonoidSpec::TruncAdd { k: 1 },
        },
        Model::Gamma {
            monoid: MonoidSpec::TruncAdd { k: 2 },
        },
        Model::Tensor {
            left: Box::new(Model::Sg),
            right: Box::new(Model::Dg),
        },
    ]
}

/// The graph-product families exercised by the law suite.
pub fn standard_free_models() -> Vec<FreeModel> {
    vec![
        FreeModel::new(MonoidSpec::BoolOr, Variety::Mon).expect("valid"),
        FreeModel::new(MonoidSpec::BoolOr, Variety::GMon).expect("valid"),
        FreeModel::new(MonoidSpec::NatAdd, Variety::Mon).expect("valid"),
    ]
}

/// Runs the twelve structural equations (plus the disjoint-block commutation
/// consequence) on randomized elements: single arities up to `max_n`, and
/// arity sums across disjoint unions up to `max_sum`.
pub fn check_model_laws<F: NetworkFamily>(
    family: &F,
    cases: usize,
    max_n: usize,
    max_sum: usize,
    seed: u64,
) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::new(format!("model laws for {}", family.family_name()));
    for case in 0..cases {
        report.cases += 1;
        if let Err(err) = run_model_case(family, max_n, max_sum, &mut rng, &mut report) {
            report.failures.push(LawFailure {
                law: "sampling".into(),
                details: format!("case {case}: {err}"),
            });
        }
    }
    report
}

fn run_model_case<F: NetworkFamily>(
    family: &F,
    max_n: usize,
    max_sum: usize,
    rng: &mut ChaCha8Rng,
    report: &mut LawReport,
) -> Result<()> {
    let n = rng.random_range(0..=max_n.min(max_sum));
    let m = rng.random_range(0..=max_n.min(max_sum - n));
    let g = family.sample_at(n, rng)?;
    let g1 = family.sample_at(n, rng)?;
    let g2 = family.sample_at(n, rng)?;
    let g3 = family.sample_at(n, rng)?;
    let h = family.sample_at(m, rng)?;
    let h1 = family.sample_at(m, rng)?;
    let h2 = family.sample_at(m, rng)?;
    let e_n = family.empty_at(n)?;
    let e_m = family.empty_at(m)?;
    let sigma = random_permutation(n, rng);
    let sigma2 = random_permutation(n, rng);
    let tau = random_permutation(m, rng);

    let ctx = || format!("n={n} m={m} g={g:?} h={h:?} σ={sigma} τ={tau}");

    // 1: unit for overlay
    report.check(
        "overlay unit",
        family.overlay_at(n, &e_n, &g),
        Ok(g.clone()),
        ctx,
    );
    report.check(
        "overlay unit (right)",
        family.overlay_at(n, &g, &e_n),
        Ok(g.clone()),
        ctx,
    );
    // 2: associativity of overlay
    report.check(
        "overlay associativity",
        family
            .overlay_at(n, &g2, &g3)
            .and_then(|inner| family.overlay_at(n, &g1, &inner)),
        family
            .overlay_at(n, &g1, &g2)
            .and_then(|inner| family.overlay_at(n, &inner, &g3)),
        || format!("{} g1={g1:?} g2={g2:?} g3={g3:?}", ctx()),
    );
    // 3: the action distributes over overlay
    report.check(
        "action distributes over overlay",
        family
            .overlay_at(n, &g1, &g2)
            .and_then(|u| family.act_at(n, &sigma, &u)),
        {
            let a = family.act_at(n, &sigma, &g1);
            let b = family.act_at(n, &sigma, &g2);
            a.and_then(|a| b.and_then(|b| family.overlay_at(n, &a, &b)))
        },
        || format!("{} g1={g1:?} g2={g2:?}", ctx()),
    );
    // 4: the action fixes the unit
    report.check(
        "action fixes unit",
        family.act_at(n, &sigma, &e_n),
        Ok(e_n.clone()),
        ctx,
    );
    // 5: the action is multiplicative
    report.check(
        "action composes",
        sigma2
            .compose(&sigma)
            .and_then(|comp| family.act_at(n, &comp, &g)),
        family
            .act_at(n, &sigma, &g)
            .and_then(|mid| family.act_at(n, &sigma2, &mid)),
        || format!("{} σ2={sigma2}", ctx()),
    );
    // 6: interchange of overlay and disjoint union
    report.check(
        "interchange",
        {
            let gu = family.overlay_at(n, &g1, &g2);
            let hu = family.overlay_at(m, &h1, &h2);
            gu.and_then(|gu| hu.and_then(|hu| family.disjoint_at(n, m, &gu, &hu)))
        },
        {
            let a = family.disjoint_at(n, m, &g1, &h1);
            let b = family.disjoint_at(n, m, &g2, &h2);
            a.and_then(|a| b.and_then(|b| family.overlay_at(n + m, &a, &b)))
        },
        || format!("{} g1={g1:?} g2={g2:?} h1={h1:?} h2={h2:?}", ctx()),
    );
    // 7: identity acts trivially
    report.check(
        "identity action",
        family.act_at(n, &Permutation::identity(n), &g),
        Ok(g.clone()),
        ctx,
    );
    // 8: units are compatible with disjoint union
    report.check(
        "units add",
        family.disjoint_at(m, n, &e_m, &e_n),
        family.empty_at(m + n),
        ctx,
    );
    // 9: naturality of disjoint union
    report.check(
        "naturality",
        {
            let sg = family.act_at(n, &sigma, &g);
            let th = family.act_at(m, &tau, &h);
            sg.and_then(|sg| th.and_then(|th| family.disjoint_at(n, m, &sg, &th)))
        },
        family
            .disjoint_at(n, m, &g, &h)
            .and_then(|gh| family.act_at(n + m, &sigma.block_sum(&tau), &gh)),
        ctx,
    );
    // 10: associativity of disjoint union
    let n3 = rng.random_range(0..=max_n.min(max_sum - n - m));
    let k3 = family.sample_at(n3, rng)?;
    report.check(
        "disjoint associativity",
        family
            .disjoint_at(m, n3, &h, &k3)
            .and_then(|inner| family.disjoint_at(n, m + n3, &g, &inner)),
        family
            .disjoint_at(n, m, &g, &h)
            .and_then(|inner| family.disjoint_at(n + m, n3, &inner, &k3)),
        || format!("{} k={k3:?} (arity {n3})", ctx()),
    );
    // 11: the empty network at arity zero is a unit for disjoint union
    let e0 = family.empty_at(0)?;
    report.check(
        "nullary unit",
        family.disjoint_at(0, n, &e0, &g),
        Ok(g.clone()),
        ctx,
    );
    report.check(
        "nullary unit (right)",
        family.disjoint_at(n, 0, &g, &e0),
        Ok(g.clone()),
        ctx,
    );
    // 12: the block swap realizes the symmetry
    report.check(
        "symmetry",
        family
            .disjoint_at(m, n, &h, &g)
            .and_then(|hg| family.act_at(m + n, &Permutation::block_swap(m, n), &hg)),
        family.disjoint_at(n, m, &g, &h),
        ctx,
    );
    // consequence: blocks with disjoint support commute under overlay
    report.check(
        "disjoint blocks commute",
        {
            let a_pad = family.disjoint_at(m, n, &h, &e_n);
            let b_pad = family.disjoint_at(m, n, &e_m, &g);
            a_pad.and_then(|a| b_pad.and_then(|b| family.overlay_at(m + n, &a, &b)))
        },
        {
            let a_pad = family.disjoint_at(m, n, &h, &e_n);
            let b_pad = family.disjoint_at(m, n, &e_m, &g);
            b_pad.and_then(|b| a_pad.and_then(|a| family.overlay_at(m + n, &b, &a)))
        },
        ctx,
    );
    Ok(())
}

/// A deliberately wrong composition, for checking that the law suite
/// detects violations: it skips the permutation action on the assembled
/// arguments.
pub fn compose_skipping_action(
    f: &OperadOperation,
    args: &[OperadOperation],
) -> Result<OperadOperation> {
    let mut profile = Vec::new();
    let mut tau_sum = Permutation::identity(0);
    let mut network_sum: Option<Network> = None;
    for arg in args {
        profile.extend_from_slice(arg.profile());
        tau_sum = tau_sum.block_sum(arg.sigma());
        network_sum = Some(match network_sum {
            None => arg.network().clone(),
            Some(acc) => acc.disjoint_union(arg.network())?,
        });
    }
    let network_sum = match network_sum {
        Some(net) => net,
        None => Network::empty(f.model().clone(), 0)?,
    };
    let sigma = f.sigma().compose(&tau_sum)?;
    let network = f.network().overlay(&network_sum)?;
    OperadOperation::new(profile, sigma, network)
}

type Composer<'a> = &'a dyn Fn(&OperadOperation, &[OperadOperation]) -> Result<OperadOperation>;

fn random_profile<R: Rng + ?Sized>(target: usize, rng: &mut R) -> Vec<usize> {
    if target == 0 {
        return if rng.random_bool(0.5) {
            vec![]
        } else {
            vec![0]
        };
    }
    let mut profile = Vec::new();
    let mut left = target;
    while left > 0 {
        let part = rng.random_range(0..=left.min(3));
        profile.push(part);
        left -= part;
        if profile.len() > 4 {
            profile.push(left);
            break;
        }
    }
    profile
}

/// Random operation with the given target arity.
pub fn random_operation<R: Rng + ?Sized>(
    model: &Model,
    target: usize,
    rng: &mut R,
) -> OperadOperation {
    let profile = random_profile(target, rng);
    let sigma = random_permutation(target, rng);
    let network = model.sample(target, rng);
    OperadOperation::new(profile, sigma, network).expect("profile sums to target")
}

fn random_args<R: Rng + ?Sized>(
    model: &Model,
    profile: &[usize],
    rng: &mut R,
) -> Vec<OperadOperation> {
    profile
        .iter()
        .map(|&slot| random_operation(model, slot, rng))
        .collect()
}

/// Operad axioms on randomized composition trees with total arity at most
/// `max_arity`. The optional `composer` substitutes a (possibly corrupted)
/// composition for the mutation test.
pub fn check_operad_laws_with(
    model: &Model,
    cases: usize,
    max_arity: usize,
    seed: u64,
    composer: Option<Composer<'_>>,
) -> LawReport {
    let default_composer = |f: &OperadOperation, args: &[OperadOperation]| f.compose(args);
    let composer: Composer<'_> = composer.unwrap_or(&default_composer);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::new(format!("operad laws for {model}"));
    for _ in 0..cases {
        report.cases += 1;
        let n = rng.random_range(0..=max_arity);
        let f = random_operation(model, n, &mut rng);
        let args = random_args(model, f.profile(), &mut rng);

        // associativity: compose level-by-level in either order
        let inner_args: Vec<Vec<OperadOperation>> = args
            .iter()
            .map(|a| random_args(model, a.profile(), &mut rng))
            .collect();
        let left = composer(&f, &args).and_then(|fa| {
            let flat: Vec<OperadOperation> = inner_args.iter().flatten().cloned().collect();
            composer(&fa, &flat)
        });
        let right = args
            .iter()
            .zip(&inner_args)
            .map(|(a, b)| composer(a, b))
            .collect::<Result<Vec<_>>>()
            .and_then(|collapsed| composer(&f, &collapsed));
        report.check("operad associativity", left, right, || {
            format!("f={f:?} args={args:?} inner={inner_args:?}")
        });

        // unit laws
        let ids = f
            .profile()
            .iter()
            .map(|&slot| OperadOperation::identity(model.clone(), slot))
            .collect::<Result<Vec<_>>>();
        report.check(
            "right unit",
            ids.and_then(|ids| composer(&f, &ids)),
            Ok(f.clone()),
            || format!("f={f:?}"),
        );
        report.check(
            "left unit",
            OperadOperation::identity(model.clone(), n)
                .and_then(|id| composer(&id, std::slice::from_ref(&f))),
            Ok(f.clone()),
            || format!("f={f:?}"),
        );

        // equivariance in the operation slot
        let k = f.profile().len();
        let tau = random_permutation(k, &mut rng);
        let permuted_args: Vec<OperadOperation> =
            (0..k).map(|j| args[tau.apply(j)].clone()).collect();
        let group_sizes: Vec<usize> = args.iter().map(|a| a.profile().len()).collect();
        let lhs = f
            .right_act(&tau)
            .and_then(|ft| composer(&ft, &permuted_args));
        let rhs = composer(&f, &args)
            .and_then(|fa| fa.right_act(&profile_block_permutation(&group_sizes, &tau)));
        report.check("equivariance (operation)", lhs, rhs, || {
            format!("f={f:?} τ={tau} args={args:?}")
        });

        // equivariance in the argument slots
        let rhos: Vec<Permutation> = args
            .iter()
            .map(|a| random_permutation(a.profile().len(), &mut rng))
            .collect();
        let acted_args = args
            .iter()
            .zip(&rhos)
            .map(|(a, rho)| a.right_act(rho))
            .collect::<Result<Vec<_>>>();
        let mut rho_sum = Permutation::identity(0);
        for rho in &rhos {
            rho_sum = rho_sum.block_sum(rho);
        }
        let lhs = acted_args.and_then(|acted| composer(&f, &acted));
        let rhs = composer(&f, &args).and_then(|fa| fa.right_act(&rho_sum));
        report.check("equivariance (arguments)", lhs, rhs, || {
            format!("f={f:?} ρs={rhos:?} args={args:?}")
        });
    }
    report
}

pub fn check_operad_laws(model: &Model, cases: usize, max_arity: usize, seed: u64) -> LawReport {
    check_operad_laws_with(model, cases, max_arity, seed, None)
}

/// Algebra laws for the canonical and vertex-attribute algebras: acting by a
/// composite equals acting in stages.
pub fn check_algebra_laws(model: &Model, cases: usize, max_arity: usize, seed: u64) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::new(format!("algebra laws for {model}"));
    for _ in 0..cases {
        report.cases += 1;
        let n = rng.random_range(0..=max_arity);
        let f = random_operation(model, n, &mut rng);
        let args = random_args(model, f.profile(), &mut rng);
        let leaves: Vec<Vec<Network>> = args
            .iter()
            .map(|a| {
                a.profile()
                    .iter()
                    .map(|&s| model.sample(s, &mut rng))
                    .collect()
            })
            .collect();

        // associativity of the action
        let staged = args
            .iter()
            .zip(&leaves)
            .map(|(a, ls)| algebra::act_canonical(a, ls))
            .collect::<Result<Vec<_>>>()
            .and_then(|mids| algebra::act_canonical(&f, &mids));
        let flat: Vec<Network> = leaves.iter().flatten().cloned().collect();
        let direct = f
            .compose(&args)
            .and_then(|comp| algebra::act_canonical(&comp, &flat));
        report.check("canonical algebra associativity", staged, direct, || {
            format!("f={f:?} args={args:?} leaves={leaves:?}")
        });

        // unit law of the action
        let one = model.sample(n, &mut rng);
        report.check(
            "canonical algebra unit",
            OperadOperation::identity(model.clone(), n)
                .and_then(|id| algebra::act_canonical(&id, std::slice::from_ref(&one))),
            Ok(one.clone()),
            || format!("x={one:?}"),
        );

        // equivariance of the action
        let k = f.profile().len();
        let tau = random_permutation(k, &mut rng);
        let arg_nets: Vec<Network> = f
            .profile()
            .iter()
            .map(|&s| model.sample(s, &mut rng))
            .collect();
        let permuted: Vec<Network> = (0..k).map(|j| arg_nets[tau.apply(j)].clone()).collect();
        let lhs = f
            .right_act(&tau)
            .and_then(|ft| algebra::act_canonical(&ft, &permuted));
        let rhs = algebra::act_canonical(&f, &arg_nets);
        report.check("canonical algebra equivariance", lhs, rhs, || {
            format!("f={f:?} τ={tau} args={arg_nets:?}")
        });

        // the attribute projection is an algebra homomorphism
        let attributed: Vec<algebra::AttributedNetwork> = arg_nets
            .iter()
            .map(|net| {
                let attrs = (0..net.arity())
                    .map(|_| {
                        algebra::Attr::Point(
                            rng.random_range(-4..=4) as f64,
                            rng.random_range(-4..=4) as f64,
                        )
                    })
                    .collect();
                algebra::AttributedNetwork::new(net.clone(), attrs).expect("matching arity")
            })
            .collect();
        let via_attrs = algebra::act_vertex_attr(&f, &attributed).map(|a| a.network);
        report.check(
            "attribute projection is a homomorphism",
            via_attrs,
            algebra::act_canonical(&f, &arg_nets),
            || format!("f={f:?} args={arg_nets:?}"),
        );
    }
    report
}

/// Word-problem checks for graph products: normal forms are class
/// invariants (agreeing with the brute-force oracle), and the graphic
/// identity holds in the graphic variety.
pub fn check_green_laws(cases: usize, seed: u64) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::new("graph-product word problem");
    let mon = FreeModel::new(MonoidSpec::BoolOr, Variety::Mon).expect("valid");
    let nat = FreeModel::new(MonoidSpec::NatAdd, Variety::Mon).expect("valid");
    let gmon = FreeModel::new(MonoidSpec::BoolOr, Variety::GMon).expect("valid");

    for _ in 0..cases {
        report.cases += 1;
        let n = rng.random_range(2..=5);

        for family in [&mon, &nat] {
            let w = match family.sample_at(n, &mut rng) {
                Ok(w) => w,
                Err(err) => {
                    report.failures.push(LawFailure {
                        law: "sampling".into(),
                        details: err.to_string(),
                    });
                    continue;
                }
            };
            // every member of the brute-force class has the same normal form
            match oracle::shuffle_class(&w, 50_000) {
                Ok(class) => {
                    let nf = w.normal_form();
                    report.checks += 1;
                    let mut bad = None;
                    for letters in &class {
                        let member =
                            GreenWord::new(w.graph().clone(), w.monoid().clone(), letters.clone())
                                .expect("class members are valid");
                        if member.normal_form() != nf {
                            bad = Some(member);
                            break;
                        }
                    }
                    if let Some(member) = bad {
                        report.failures.push(LawFailure {
                            law: "normal form is a class invariant".into(),
                            details: format!("w={w:?} member={member:?}"),
                        });
                    }
                }
                Err(err) => report.failures.push(LawFailure {
                    law: "oracle".into(),
                    details: err.to_string(),
                }),
            }
        }

        // graphic identity wvw = wv, and idempotence
        let w = gmon.sample_at(n, &mut rng).expect("sampling succeeds");
        let v = gmon.sample_at(n, &mut rng).expect("sampling succeeds");
        let wv = gmon.overlay(&w, &v);
        let wvw = wv.clone().and_then(|wv| gmon.overlay(&wv, &w));
        report.check("graphic identity", wvw, wv, || format!("w={w:?} v={v:?}"));
        report.check(
            "graphic idempotence",
            gmon.overlay(&w, &w),
            Ok(w.clone()),
            || format!("w={w:?}"),
        );
    }
    report
}

/// Checks that the fibrewise bijection between simple graphs and
/// Boolean-labelled graphs commutes with overlay, disjoint union, and the
/// action: exhaustively for `n ≤ exhaustive_n`, randomized above.
pub fn check_sg_gamma_iso(
    exhaustive_n: usize,
    sampled: &[usize],
    cases: usize,
    seed: u64,
) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::new("SG ↔ Γ[bool-or] isomorphism");
    let check_pair = |report: &mut LawReport, a: &Network, b: &Network| {
        report.check(
            "bijection respects overlay",
            a.overlay(b).and_then(|u| sg_to_gamma_bool(&u)),
            {
                let ga = sg_to_gamma_bool(a);
                let gb = sg_to_gamma_bool(b);
                ga.and_then(|ga| gb.and_then(|gb| ga.overlay(&gb)))
            },
            || format!("a={a:?} b={b:?}"),
        );
    };
    let check_disjoint = |report: &mut LawReport, a: &Network, b: &Network| {
        report.check(
            "bijection respects disjoint union",
            a.disjoint_union(b).and_then(|u| sg_to_gamma_bool(&u)),
            {
                let ga = sg_to_gamma_bool(a);
                let gb = sg_to_gamma_bool(b);
                ga.and_then(|ga| gb.and_then(|gb| ga.disjoint_union(&gb)))
            },
            || format!("a={a:?} b={b:?}"),
        );
    };
    let check_act = |report: &mut LawReport, a: &Network, sigma: &Permutation| {
        report.check(
            "bijection respects the action",
            a.act(sigma).and_then(|u| sg_to_gamma_bool(&u)),
            sg_to_gamma_bool(a).and_then(|ga| ga.act(sigma)),
            || format!("a={a:?} σ={sigma}"),
        );
        report.check(
            "bijection inverts",
            sg_to_gamma_bool(a).and_then(|ga| gamma_bool_to_sg(&ga)),
            Ok(a.clone()),
            || format!("a={a:?}"),
        );
    };

    for n in 0..=exhaustive_n {
        report.cases += 1;
        let fibre = Model::Sg.enumerate_fibre(n).expect("small fibre");
        let perms = crate::total::all_permutations(n);
        for a in &fibre {
            for b in &fibre {
                check_pair(&mut report, a, b);
            }
            for sigma in &perms {
                check_act(&mut report, a, sigma);
            }
        }
        for m in 0..=exhaustive_n.saturating_sub(n) {
            let other = Model::Sg.enumerate_fibre(m).expect("small fibre");
            for a in &fibre {
                for b in &other {
                    check_disjoint(&mut report, a, b);
                }
            }
        }
    }
    for &n in sampled {
        for _ in 0..cases {
            report.cases += 1;
            let a = Model::Sg.sample(n, &mut rng);
            let b = Model::Sg.sample(n, &mut rng);
            let sigma = random_permutation(n, &mut rng);
            check_pair(&mut report, &a, &b);
            check_act(&mut report, &a, &sigma);
            let m = rng.random_range(0..=3);
            let c = Model::Sg.sample(m, &mut rng);
            check_disjoint(&mut report, &a, &c);
        }
    }
    report
}

/// Checks that applying a label homomorphism is a morphism of network
/// models: it commutes with all three structure maps.
pub fn check_label_morphism(hom: &MonoidHom, cases: usize, max_n: usize, seed: u64) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let source_model = Model::Gamma {
        monoid: hom.source.clone(),
    };
    let mut report = LawReport::new(format!(
        "label morphism Γ[{}] → Γ[{}]",
        hom.source.name(),
        hom.target.name()
    ));
    for _ in 0..cases {
        report.cases += 1;
        let n = rng.random_range(0..=max_n);
        let m = rng.random_range(0..=max_n);
        let a = source_model.sample(n, &mut rng);
        let b = source_model.sample(n, &mut rng);
        let c = source_model.sample(m, &mut rng);
        let sigma = random_permutation(n, &mut rng);
        report.check(
            "morphism respects overlay",
            a.overlay(&b).and_then(|u| u.map_labels(hom)),
            {
                let ma = a.map_labels(hom);
                let mb = b.map_labels(hom);
                ma.and_then(|ma| mb.and_then(|mb| ma.overlay(&mb)))
            },
            || format!("a={a:?} b={b:?}"),
        );
        report.check(
            "morphism respects disjoint union",
            a.disjoint_union(&c).and_then(|u| u.map_labels(hom)),
            {
                let ma = a.map_labels(hom);
                let mc = c.map_labels(hom);
                ma.and_then(|ma| mc.and_then(|mc| ma.disjoint_union(&mc)))
            },
            || format!("a={a:?} c={c:?}"),
        );
        report.check(
            "morphism respects the action",
            a.act(&sigma).and_then(|u| u.map_labels(hom)),
            a.map_labels(hom).and_then(|ma| ma.act(&sigma)),
            || format!("a={a:?} σ={sigma}"),
        );
    }
    report
}

/// Category and monoidal laws of the total category over a model:
/// associativity and units of composition, interchange of tensor and
/// composition, and braiding symmetry/naturality.
pub fn check_total_category_laws(
    model: &Model,
    cases: usize,
    max_n: usize,
    seed: u64,
) -> LawReport {
    use crate::total::TotalMorphism;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::new(format!("total category laws for {model}"));
    let random_morphism = |n: usize, rng: &mut ChaCha8Rng| {
        TotalMorphism::new(random_permutation(n, rng), model.sample(n, rng))
            .expect("matching arities")
    };
    for _ in 0..cases {
        report.cases += 1;
        let n = rng.random_range(0..=max_n);
        let m = rng.random_range(0..=max_n);
        let f = random_morphism(n, &mut rng);
        let g = random_morphism(n, &mut rng);
        let h = random_morphism(n, &mut rng);
        let f2 = random_morphism(m, &mut rng);
        let g2 = random_morphism(m, &mut rng);

        report.check(
            "composition associativity",
            h.compose(&g).and_then(|hg| hg.compose(&f)),
            g.compose(&f).and_then(|gf| h.compose(&gf)),
            || format!("f={f:?} g={g:?} h={h:?}"),
        );
        let id = TotalMorphism::identity(model.clone(), n).expect("empty exists");
        report.check("left identity", id.compose(&f), Ok(f.clone()), || {
            format!("f={f:?}")
        });
        report.check("right identity", f.compose(&id), Ok(f.clone()), || {
            format!("f={f:?}")
        });

        // interchange: (g ∘ f) ⊗ (g2 ∘ f2) = (g ⊗ g2) ∘ (f ⊗ f2)
        report.check(
            "tensor interchange",
            {
                let gf = g.compose(&f);
                let g2f2 = g2.compose(&f2);
                gf.and_then(|gf| g2f2.and_then(|g2f2| gf.tensor(&g2f2)))
            },
            {
                let gg2 = g.tensor(&g2);
                let ff2 = f.tensor(&f2);
                gg2.and_then(|gg2| ff2.and_then(|ff2| gg2.compose(&ff2)))
            },
            || format!("f={f:?} g={g:?} f2={f2:?} g2={g2:?}"),
        );

        // braiding symmetry and naturality
        let b = TotalMorphism::braiding(model.clone(), n, m).expect("empty exists");
        let b_back = TotalMorphism::braiding(model.clone(), m, n).expect("empty exists");
        report.check(
            "braiding symmetry",
            b_back.compose(&b),
            TotalMorphism::identity(model.clone(), n + m),
            || format!("n={n} m={m}"),
        );
        report.check(
            "braiding naturality",
            b.compose(&f.tensor(&f2).expect("tensor exists")),
            f2.tensor(&f).and_then(|swapped| swapped.compose(&b)),
            || format!("f={f:?} f2={f2:?}"),
        );
    }
    report
}

/// Confirms that a corrupted composition is caught by the operad suite;
/// returns an error if the suite fails to flag it.
pub fn mutation_probe(model: &Model, seed: u64) -> Result<()> {
    let corrupt = check_operad_laws_with(model, 40, 6, seed, Some(&compose_skipping_action));
    if corrupt.passed() {
        return Err(Error::SizeMismatch(
            "law suite failed to detect a corrupted composition".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_suite_passes_quickly() {
        for model in [Model::Sg, Model::PartitionMeet] {
            let report = check_model_laws(&model, 60, 4, 12, 7);
            assert!(report.passed(), "{}", report.summary());
        }
    }

    #[test]
    fn free_model_suite_passes_quickly() {
        for family in standard_free_models() {
            let report = check_model_laws(&family, 25, 4, 8, 7);
            assert!(report.passed(), "{}", report.summary());
        }
    }

    #[test]
    fn operad_suite_passes_quickly() {
        let report = check_operad_laws(&Model::Sg, 40, 6, 11);
        assert!(report.passed(), "{}", report.summary());
    }

    #[test]
    fn corrupted_compose_is_detected() {
        mutation_probe(&Model::Sg, 3).unwrap();
        let corrupt = check_operad_laws_with(&Model::Sg, 40, 6, 3, Some(&compose_skipping_action));
        assert!(!corrupt.passed());
        // the failure carries a concrete witness
        assert!(corrupt.failures[0].details.contains("f="));
    }

    #[test]
    fn green_suite_passes_quickly() {
        let report = check_green_laws(15, 5);
        assert!(report.passed(), "{}", report.summary());
    }

    #[test]
    fn iso_suite_passes_quickly() {
        let report = check_sg_gamma_iso(2, &[4], 10, 5);
        assert!(report.passed(), "{}", report.summary());
    }
}
