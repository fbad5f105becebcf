//! Algebras of network operads: the canonical algebra, vertex-attribute
//! enrichment, predicate and bound filters for range-limited networks, and
//! the degree-bounded algebra over the graphic-monoid model.

use serde::{Deserialize, Serialize};

use crate::green::{FreeModel, GreenWord, KneserSpec, Variety};
use crate::monoid::{MonoidElement, MonoidSpec};
use crate::operad::OperadOperation;
use crate::perm::{Edge, Permutation};
use crate::{Error, Model, Network, Result};

/// A vertex attribute: a point in the plane or an arbitrary token.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Attr {
    Point(f64, f64),
    Token(String),
}

const DIST_TOLERANCE: f64 = 1e-9;

/// Compares distance against a threshold with a weak inequality: within
/// range means `d ≤ limit`. Integer inputs are compared exactly on squared
/// distances; otherwise floating comparison with a small absolute tolerance
/// avoids boundary flips.
fn within_distance(a: &Attr, b: &Attr, limit: f64) -> Result<bool> {
    let (Attr::Point(x1, y1), Attr::Point(x2, y2)) = (a, b) else {
        return Err(Error::CarrierMismatch(
            "distance rules need point attributes".into(),
        ));
    };
    let ints = [x1, y1, x2, y2, &limit]
        .iter()
        .all(|v| v.fract() == 0.0 && v.abs() < 1e15);
    if ints {
        let dx = (*x1 as i128) - (*x2 as i128);
        let dy = (*y1 as i128) - (*y2 as i128);
        let l = limit as i128;
        Ok(dx * dx + dy * dy <= l * l)
    } else {
        let d = ((x1 - x2).powi(2) + (y1 - y2).powi(2)).sqrt();
        Ok(d <= limit + DIST_TOLERANCE)
    }
}

/// A symmetric Boolean rule on attribute pairs: which edges are permitted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum EdgePredicate {
    Always,
    /// Permit an edge only between attributes within Euclidean distance `L`.
    MaxDist {
        #[serde(rename = "L")]
        l: f64,
    },
}

impl EdgePredicate {
    pub fn allows(&self, a: &Attr, b: &Attr) -> Result<bool> {
        match self {
            EdgePredicate::Always => Ok(true),
            EdgePredicate::MaxDist { l } => within_distance(a, b, *l),
        }
    }
}

/// A symmetric nonnegative-integer rule on attribute pairs: how many
/// parallel edges are permitted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum EdgeBound {
    Const {
        k: u64,
    },
    /// Two communication tiers: capacity 2 within `L2`, 1 within `L1`, 0
    /// beyond (`L2 < L1`).
    TwoTier {
        #[serde(rename = "L1")]
        l1: f64,
        #[serde(rename = "L2")]
        l2: f64,
    },
}

impl EdgeBound {
    pub fn bound(&self, a: &Attr, b: &Attr) -> Result<u64> {
        match self {
            EdgeBound::Const { k } => Ok(*k),
            EdgeBound::TwoTier { l1, l2 } => {
                if within_distance(a, b, *l2)? {
                    Ok(2)
                } else if within_distance(a, b, *l1)? {
                    Ok(1)
                } else {
                    Ok(0)
                }
            }
        }
    }
}

/// A network whose vertices carry attributes; element of the
/// vertex-attribute algebra.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttributedNetwork {
    pub network: Network,
    pub attrs: Vec<Attr>,
}

impl AttributedNetwork {
    pub fn new(network: Network, attrs: Vec<Attr>) -> Result<AttributedNetwork> {
        if attrs.len() != network.arity() {
            return Err(Error::ArityMismatch(format!(
                "{} attributes for a network of arity {}",
                attrs.len(),
                network.arity()
            )));
        }
        Ok(AttributedNetwork { network, attrs })
    }
}

/// The canonical algebra: an operation acts on networks by
/// `g ∪ σ(h₁ ⊔ … ⊔ h_k)`.
pub fn act_canonical(op: &OperadOperation, args: &[Network]) -> Result<Network> {
    if args.len() != op.profile().len() {
        return Err(Error::BadProfile(format!(
            "operation with {} slots applied to {} networks",
            op.profile().len(),
            args.len()
        )));
    }
    let mut acc: Option<Network> = None;
    for (i, (arg, &slot)) in args.iter().zip(op.profile()).enumerate() {
        if arg.arity() != slot {
            return Err(Error::ArityMismatch(format!(
                "slot {} expects arity {slot}, network has arity {}",
                i + 1,
                arg.arity()
            )));
        }
        acc = Some(match acc {
            None => arg.clone(),
            Some(acc) => acc.disjoint_union(arg)?,
        });
    }
    let disjoint = match acc {
        Some(net) => net,
        None => Network::empty(op.model().clone(), 0)?,
    };
    op.network().overlay(&disjoint.act(op.sigma())?)
}

/// The vertex-attribute algebra: networks compose canonically while the
/// attribute lists concatenate and follow the permutation (position `i`
/// receives the attribute of `σ⁻¹(i)`).
pub fn act_vertex_attr(
    op: &OperadOperation,
    args: &[AttributedNetwork],
) -> Result<AttributedNetwork> {
    let networks: Vec<Network> = args.iter().map(|a| a.network.clone()).collect();
    let network = act_canonical(op, &networks)?;
    let concat: Vec<Attr> = args.iter().flat_map(|a| a.attrs.iter().cloned()).collect();
    let mut attrs = concat.clone();
    for (i, attr) in concat.into_iter().enumerate() {
        attrs[op.sigma().apply(i)] = attr;
    }
    AttributedNetwork::new(network, attrs)
}

/// Discards the attributes: the algebra homomorphism down to the canonical
/// algebra.
pub fn forget_attrs(a: &AttributedNetwork) -> Network {
    a.network.clone()
}

/// Keeps exactly the edges whose endpoint attributes satisfy the predicate.
/// The network must be a simple graph.
pub fn filter_predicate(a: &AttributedNetwork, p: &EdgePredicate) -> Result<AttributedNetwork> {
    if *a.network.model() != Model::Sg {
        return Err(Error::PayloadMismatch(format!(
            "predicate filtering needs a simple graph, got {}",
            a.network.model()
        )));
    }
    let mut kept = Vec::new();
    for (i, j) in a.network.edges_one_indexed()? {
        if p.allows(&a.attrs[i - 1], &a.attrs[j - 1])? {
            kept.push((i, j));
        }
    }
    AttributedNetwork::new(
        Network::simple_graph(a.network.arity(), &kept)?,
        a.attrs.clone(),
    )
}

/// Whether every edge of a simple graph satisfies the predicate.
pub fn satisfies_predicate(a: &AttributedNetwork, p: &EdgePredicate) -> Result<bool> {
    Ok(filter_predicate(a, p)?.network == a.network)
}

/// The predicate-filtered algebra: embed, act with attributes, then discard
/// forbidden edges. Arguments must already satisfy the predicate.
pub fn act_predicate(
    op: &OperadOperation,
    args: &[AttributedNetwork],
    p: &EdgePredicate,
) -> Result<AttributedNetwork> {
    for (i, arg) in args.iter().enumerate() {
        if !satisfies_predicate(arg, p)? {
            return Err(Error::BoundViolated(format!(
                "argument {} has an edge forbidden by the predicate",
                i + 1
            )));
        }
    }
    filter_predicate(&act_vertex_attr(op, args)?, p)
}

/// Clips each multiplicity of an additive multigraph to the bound of its
/// endpoints.
pub fn filter_bound(a: &AttributedNetwork, b: &EdgeBound) -> Result<AttributedNetwork> {
    if *a.network.model() != Model::MgPlus {
        return Err(Error::PayloadMismatch(format!(
            "bound filtering needs an additive multigraph, got {}",
            a.network.model()
        )));
    }
    let mut clipped = Vec::new();
    if let crate::model::Payload::Labels(labels) = a.network.payload() {
        for (e, v) in labels {
            let MonoidElement::Nat(mult) = v else {
                return Err(Error::CarrierMismatch(
                    "multigraph labels are naturals".into(),
                ));
            };
            let (i, j) = e.one_indexed();
            let cap = b.bound(&a.attrs[i - 1], &a.attrs[j - 1])?;
            clipped.push((i, j, (*mult).min(cap)));
        }
    }
    AttributedNetwork::new(
        Network::multigraph_plus(a.network.arity(), &clipped)?,
        a.attrs.clone(),
    )
}

/// Whether every multiplicity is within the bound.
pub fn satisfies_bound(a: &AttributedNetwork, b: &EdgeBound) -> Result<bool> {
    Ok(filter_bound(a, b)?.network == a.network)
}

/// The bound-limited algebra on additive multigraphs: act with attributes,
/// then clip.
pub fn act_bound(
    op: &OperadOperation,
    args: &[AttributedNetwork],
    b: &EdgeBound,
) -> Result<AttributedNetwork> {
    for (i, arg) in args.iter().enumerate() {
        if !satisfies_bound(arg, b)? {
            return Err(Error::BoundViolated(format!(
                "argument {} exceeds the edge bound",
                i + 1
            )));
        }
    }
    filter_bound(&act_vertex_attr(op, args)?, b)
}

/// Degree of a vertex (1-indexed) in a simple graph.
pub fn degree(net: &Network, vertex: usize) -> Result<usize> {
    let edges = net.edges_one_indexed()?;
    Ok(edges
        .iter()
        .filter(|&&(i, j)| i == vertex || j == vertex)
        .count())
}

/// Max vertex degree of a simple graph.
pub fn max_degree(net: &Network) -> Result<usize> {
    (1..=net.arity())
        .map(|v| degree(net, v))
        .try_fold(0, |acc, d| Ok(acc.max(d?)))
}

/// Attempts edges one at a time on top of `start`: an edge is accepted only
/// if the graph stays `k`-bounded afterwards.
pub fn fold_degree_bounded(start: &Network, edges: &[Edge], k: usize) -> Result<Network> {
    let mut current = start.clone();
    for &e in edges {
        let (i, j) = e.one_indexed();
        let candidate = current.overlay(&Network::simple_graph(current.arity(), &[(i, j)])?)?;
        if max_degree(&candidate)? <= k {
            current = candidate;
        }
    }
    Ok(current)
}

/// An operation of the operad over the free graphic-monoid model on the
/// Booleans: its network part is a word of edges rather than a plain graph.
#[derive(Debug, Clone)]
pub struct DegreeBoundedOp {
    profile: Vec<usize>,
    sigma: Permutation,
    word: GreenWord,
}

impl DegreeBoundedOp {
    pub fn new(profile: Vec<usize>, sigma: Permutation, word: GreenWord) -> Result<Self> {
        let n: usize = profile.iter().sum();
        if n != sigma.len() {
            return Err(Error::BadProfile(format!(
                "profile {profile:?} sums to {n}, permutation is on {}",
                sigma.len()
            )));
        }
        let model = FreeModel::new(MonoidSpec::BoolOr, Variety::GMon)?;
        let kneser = model.kneser(n)?;
        if word.graph().vertex_count() != kneser.vertices().len() {
            return Err(Error::AmbientMismatch(format!(
                "word has {} components, expected KG({n},2)",
                word.graph().vertex_count()
            )));
        }
        if *word.monoid() != MonoidSpec::BoolOr {
            return Err(Error::CarrierMismatch(
                "degree-bounded words are Boolean".into(),
            ));
        }
        Ok(DegreeBoundedOp {
            profile,
            sigma,
            word,
        })
    }

    pub fn target(&self) -> usize {
        self.sigma.len()
    }

    pub fn word(&self) -> &GreenWord {
        &self.word
    }

    /// The edge-attempt order: the canonical graphic normal form of the
    /// word, read as vertex pairs.
    pub fn edge_order(&self) -> Result<Vec<Edge>> {
        let kneser = KneserSpec::new(self.target(), 2)?;
        word_edges(&self.word.graphic_normal_form()?, &kneser)
    }

    /// Acts on `k`-bounded simple graphs: place the arguments disjointly,
    /// permute, then attempt the word's edges in canonical order, keeping an
    /// edge only when the result stays `k`-bounded.
    pub fn act(&self, args: &[Network], k: usize) -> Result<Network> {
        if args.len() != self.profile.len() {
            return Err(Error::BadProfile(format!(
                "operation with {} slots applied to {} graphs",
                self.profile.len(),
                args.len()
            )));
        }
        let mut acc: Option<Network> = None;
        for (i, (arg, &slot)) in args.iter().zip(&self.profile).enumerate() {
            if *arg.model() != Model::Sg {
                return Err(Error::ModelMismatch(
                    "degree-bounded arguments are simple graphs".into(),
                ));
            }
            if arg.arity() != slot {
                return Err(Error::ArityMismatch(format!(
                    "slot {} expects arity {slot}, graph has arity {}",
                    i + 1,
                    arg.arity()
                )));
            }
            if max_degree(arg)? > k {
                return Err(Error::BoundViolated(format!(
                    "argument {} has degree above {k}",
                    i + 1
                )));
            }
            acc = Some(match acc {
                None => arg.clone(),
                Some(acc) => acc.disjoint_union(arg)?,
            });
        }
        let placed = match acc {
            Some(net) => net,
            None => Network::empty(Model::Sg, 0)?,
        };
        let start = placed.act(&self.sigma)?;
        fold_degree_bounded(&start, &self.edge_order()?, k)
    }
}

/// Reads a Boolean word over `KG(n,2)` as a list of vertex pairs in word
/// order.
pub fn word_edges(word: &GreenWord, kneser: &KneserSpec) -> Result<Vec<Edge>> {
    word.letters()
        .iter()
        .map(|l| {
            let pair = kneser.vertex(l.component);
            Edge::new(pair[0], pair[1])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(n: usize, edges: &[(usize, usize)]) -> Network {
        Network::simple_graph(n, edges).unwrap()
    }

    fn plain_op(profile: &[usize], g: Network) -> OperadOperation {
        OperadOperation::new(profile.to_vec(), Permutation::identity(g.arity()), g).unwrap()
    }

    fn pts(coords: &[(f64, f64)]) -> Vec<Attr> {
        coords.iter().map(|&(x, y)| Attr::Point(x, y)).collect()
    }

    #[test]
    fn canonical_action_examples() {
        let f = plain_op(&[3, 4, 2], sg(9, &[(1, 2), (3, 6)]));
        let args = vec![
            sg(3, &[(2, 3)]),
            sg(4, &[(1, 2), (2, 3), (3, 4)]),
            sg(2, &[(1, 2)]),
        ];
        assert_eq!(
            act_canonical(&f, &args).unwrap(),
            sg(9, &[(1, 2), (2, 3), (3, 6), (4, 5), (5, 6), (6, 7), (8, 9)])
        );

        let id = OperadOperation::identity(Model::Sg, 3).unwrap();
        let arg = sg(3, &[(1, 3)]);
        assert_eq!(act_canonical(&id, std::slice::from_ref(&arg)).unwrap(), arg);

        // an empty overlay graph gives the pure disjoint union
        let f = plain_op(&[2, 2], sg(4, &[]));
        assert_eq!(
            act_canonical(&f, &[sg(2, &[(1, 2)]), sg(2, &[(1, 2)])]).unwrap(),
            sg(4, &[(1, 2), (3, 4)])
        );
    }

    #[test]
    fn vertex_attr_action_examples() {
        // identity permutation concatenates attributes
        let f = plain_op(&[1, 1], sg(2, &[]));
        let p = AttributedNetwork::new(sg(1, &[]), vec![Attr::Token("P".into())]).unwrap();
        let q = AttributedNetwork::new(sg(1, &[]), vec![Attr::Token("Q".into())]).unwrap();
        let out = act_vertex_attr(&f, &[p.clone(), q.clone()]).unwrap();
        assert_eq!(
            out.attrs,
            vec![Attr::Token("P".into()), Attr::Token("Q".into())]
        );

        // a transposition swaps them
        let swapped = OperadOperation::new(
            vec![1, 1],
            Permutation::transposition(2, 1, 2).unwrap(),
            sg(2, &[]),
        )
        .unwrap();
        let out = act_vertex_attr(&swapped, &[p.clone(), q.clone()]).unwrap();
        assert_eq!(
            out.attrs,
            vec![Attr::Token("Q".into()), Attr::Token("P".into())]
        );

        // forgetting attributes commutes with the action
        let nets = vec![p.network.clone(), q.network.clone()];
        assert_eq!(
            forget_attrs(&act_vertex_attr(&swapped, &[p, q]).unwrap()),
            act_canonical(&swapped, &nets).unwrap()
        );
    }

    #[test]
    fn filter_predicate_examples() {
        let p = EdgePredicate::MaxDist { l: 2.0 };
        let far = AttributedNetwork::new(sg(2, &[(1, 2)]), pts(&[(0.0, 0.0), (3.0, 0.0)])).unwrap();
        assert!(filter_predicate(&far, &p)
            .unwrap()
            .network
            .is_empty_network());

        let near =
            AttributedNetwork::new(sg(2, &[(1, 2)]), pts(&[(0.0, 0.0), (1.0, 0.0)])).unwrap();
        assert_eq!(filter_predicate(&near, &p).unwrap().network, near.network);

        assert_eq!(
            filter_predicate(&far, &EdgePredicate::Always)
                .unwrap()
                .network,
            far.network
        );
    }

    #[test]
    fn predicate_boundary_is_weak() {
        let p = EdgePredicate::MaxDist { l: 5.0 };
        // distance exactly 5 (3-4-5 triangle) stays within range
        let edge =
            AttributedNetwork::new(sg(2, &[(1, 2)]), pts(&[(0.0, 0.0), (3.0, 4.0)])).unwrap();
        assert_eq!(filter_predicate(&edge, &p).unwrap().network, edge.network);
    }

    #[test]
    fn act_predicate_drops_long_links() {
        let p = EdgePredicate::MaxDist { l: 2.0 };
        // two vertices near each other, one far away; g links 1-3 (far) and 1-2 (near)
        let f = plain_op(&[2, 1], sg(3, &[(1, 3), (1, 2)]));
        let a = AttributedNetwork::new(sg(2, &[]), pts(&[(0.0, 0.0), (1.0, 0.0)])).unwrap();
        let b = AttributedNetwork::new(sg(1, &[]), pts(&[(9.0, 0.0)])).unwrap();
        let out = act_predicate(&f, &[a.clone(), b.clone()], &p).unwrap();
        assert_eq!(out.network, sg(3, &[(1, 2)]));

        // all within range: agrees with the unfiltered action
        let c = AttributedNetwork::new(sg(1, &[]), pts(&[(0.0, 1.0)])).unwrap();
        let out = act_predicate(&f, &[a.clone(), c.clone()], &p).unwrap();
        assert_eq!(out, act_vertex_attr(&f, &[a, c]).unwrap());

        // violating arguments are rejected
        let bad = AttributedNetwork::new(sg(2, &[(1, 2)]), pts(&[(0.0, 0.0), (7.0, 0.0)])).unwrap();
        let g = plain_op(&[2], sg(2, &[]));
        assert!(act_predicate(&g, &[bad], &p).is_err());
    }

    #[test]
    fn filter_bound_examples() {
        let b = EdgeBound::Const { k: 1 };
        let g = AttributedNetwork::new(
            Network::multigraph_plus(2, &[(1, 2, 3)]).unwrap(),
            pts(&[(0.0, 0.0), (1.0, 0.0)]),
        )
        .unwrap();
        assert_eq!(
            filter_bound(&g, &b).unwrap().network,
            Network::multigraph_plus(2, &[(1, 2, 1)]).unwrap()
        );

        let fine = AttributedNetwork::new(
            Network::multigraph_plus(2, &[(1, 2, 1)]).unwrap(),
            pts(&[(0.0, 0.0), (1.0, 0.0)]),
        )
        .unwrap();
        assert_eq!(filter_bound(&fine, &b).unwrap().network, fine.network);

        // two-tier rule: a distance between L2 and L1 clips to one edge
        let two_tier = EdgeBound::TwoTier { l1: 10.0, l2: 2.0 };
        let mid = AttributedNetwork::new(
            Network::multigraph_plus(2, &[(1, 2, 5)]).unwrap(),
            pts(&[(0.0, 0.0), (6.0, 0.0)]),
        )
        .unwrap();
        assert_eq!(
            filter_bound(&mid, &two_tier).unwrap().network,
            Network::multigraph_plus(2, &[(1, 2, 1)]).unwrap()
        );
        let close = AttributedNetwork::new(
            Network::multigraph_plus(2, &[(1, 2, 5)]).unwrap(),
            pts(&[(0.0, 0.0), (1.0, 0.0)]),
        )
        .unwrap();
        assert_eq!(
            filter_bound(&close, &two_tier).unwrap().network,
            Network::multigraph_plus(2, &[(1, 2, 2)]).unwrap()
        );
        let far = AttributedNetwork::new(
            Network::multigraph_plus(2, &[(1, 2, 5)]).unwrap(),
            pts(&[(0.0, 0.0), (60.0, 0.0)]),
        )
        .unwrap();
        assert!(filter_bound(&far, &two_tier)
            .unwrap()
            .network
            .is_empty_network());
    }

    #[test]
    fn filters_are_idempotent() {
        let p = EdgePredicate::MaxDist { l: 2.0 };
        let a = AttributedNetwork::new(
            sg(3, &[(1, 2), (1, 3), (2, 3)]),
            pts(&[(0.0, 0.0), (1.0, 0.0), (5.0, 0.0)]),
        )
        .unwrap();
        let once = filter_predicate(&a, &p).unwrap();
        assert_eq!(filter_predicate(&once, &p).unwrap(), once);
        assert!(satisfies_predicate(&once, &p).unwrap());

        let b = EdgeBound::TwoTier { l1: 4.0, l2: 2.0 };
        let m = AttributedNetwork::new(
            Network::multigraph_plus(3, &[(1, 2, 9), (1, 3, 9)]).unwrap(),
            pts(&[(0.0, 0.0), (1.0, 0.0), (3.0, 0.0)]),
        )
        .unwrap();
        let once = filter_bound(&m, &b).unwrap();
        assert_eq!(filter_bound(&once, &b).unwrap(), once);
        assert!(satisfies_bound(&once, &b).unwrap());
    }

    fn bool_word(n: usize, pairs: &[(usize, usize)]) -> GreenWord {
        let model = FreeModel::new(MonoidSpec::BoolOr, Variety::GMon).unwrap();
        let letters: Vec<(usize, usize, MonoidElement)> = pairs
            .iter()
            .map(|&(i, j)| (i, j, MonoidElement::Bool(true)))
            .collect();
        model.word(n, &letters).unwrap()
    }

    #[test]
    fn degree_bounded_examples() {
        // one empty 3-vertex argument, word [e12, e13], bound 1: only the
        // first edge fits
        let op = DegreeBoundedOp::new(
            vec![3],
            Permutation::identity(3),
            bool_word(3, &[(1, 2), (1, 3)]),
        )
        .unwrap();
        assert_eq!(op.act(&[sg(3, &[])], 1).unwrap(), sg(3, &[(1, 2)]));
        // bound 2 admits both
        assert_eq!(op.act(&[sg(3, &[])], 2).unwrap(), sg(3, &[(1, 2), (1, 3)]));

        // an empty word gives the disjoint union of the arguments
        let empty =
            DegreeBoundedOp::new(vec![1, 2], Permutation::identity(3), bool_word(3, &[])).unwrap();
        assert_eq!(
            empty.act(&[sg(1, &[]), sg(2, &[(1, 2)])], 1).unwrap(),
            sg(3, &[(2, 3)])
        );

        // arguments violating the bound are rejected
        let star = sg(3, &[(1, 2), (1, 3)]);
        let id3 =
            DegreeBoundedOp::new(vec![3], Permutation::identity(3), bool_word(3, &[])).unwrap();
        assert!(id3.act(&[star], 1).is_err());
    }

    #[test]
    fn degree_bounded_output_is_bounded() {
        let op = DegreeBoundedOp::new(
            vec![2, 2],
            Permutation::identity(4),
            bool_word(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3), (2, 4)]),
        )
        .unwrap();
        for k in 0..4 {
            let out = op
                .act(&[sg(2, &[]), sg(2, &[(1, 2)])], k)
                .or_else(|_| op.act(&[sg(2, &[]), sg(2, &[])], k))
                .unwrap();
            assert!(max_degree(&out).unwrap() <= k);
        }
    }
}
