//! Network model instances: for each instance, the family `F(n)` with
//! overlay, disjoint union, and the symmetric-group action.
//!
//! A [`Network`] is an element of `F(n)` for a chosen [`Model`]. The payload
//! depends on the model: an edge set for simple graphs, an ordered-pair set
//! for directed graphs, a sparse edge labelling for monoid-weighted graphs
//! (which covers both multigraph flavours), a hyperedge set, a set partition,
//! or a pair of payloads for tensor models.

mod colored;
mod dot;
mod partition;

pub use colored::{
    word_morphism_ok, Color, ColorWord, ColoredModel, ColoredNetwork, PetriValued, SPECIES,
    TRANSITION,
};
pub use dot::to_dot;
pub use partition::Partition;

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::monoid::{MonoidElement, MonoidHom, MonoidSpec};
use crate::perm::{all_edges, Edge, Permutation};
use crate::{Error, Result, MAX_ARITY};

/// A directed edge: an ordered pair of distinct vertices, 0-indexed.
pub type Arc = (usize, usize);

/// A one-colored network model.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Model {
    /// Simple graphs: sets of 2-element subsets, overlay is union.
    Sg,
    /// Directed graphs: sets of ordered pairs `(i, j)`, `i ≠ j`.
    Dg,
    /// Multigraphs with max for overlaying (edge labels in `(ℕ, max)`).
    Mg,
    /// Multigraphs with addition for overlaying (edge labels in `(ℕ, +)`).
    MgPlus,
    /// Hypergraphs: sets of nonempty vertex subsets, overlay is union.
    Hg,
    /// Set partitions under lattice join; the unit is the discrete partition.
    PartitionJoin,
    /// Set partitions under lattice meet; the unit is the indiscrete
    /// partition.
    PartitionMeet,
    /// Complete-graph edge labellings valued in a monoid, overlaid pointwise.
    Gamma { monoid: MonoidSpec },
    /// Pointwise product of two models: payloads are pairs, all structure
    /// maps act componentwise.
    Tensor { left: Box<Model>, right: Box<Model> },
}

impl std::fmt::Display for Model {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Model::Sg => write!(f, "SG"),
            Model::Dg => write!(f, "DG"),
            Model::Mg => write!(f, "MG"),
            Model::MgPlus => write!(f, "MG+"),
            Model::Hg => write!(f, "HG"),
            Model::PartitionJoin => write!(f, "P∨"),
            Model::PartitionMeet => write!(f, "P∧"),
            Model::Gamma { monoid } => write!(f, "Γ[{}]", monoid.name()),
            Model::Tensor { left, right } => write!(f, "({left} ⊗ {right})"),
        }
    }
}

/// Payload of a network, matching its model kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Payload {
    Edges(BTreeSet<Edge>),
    Arcs(BTreeSet<Arc>),
    /// Sparse labelling: edges with unit labels are omitted, so structural
    /// equality is fibre equality.
    Labels(BTreeMap<Edge, MonoidElement>),
    Hyper(BTreeSet<BTreeSet<usize>>),
    Partition(Partition),
    Pair(Box<Payload>, Box<Payload>),
}

/// An element of `F(n)` for a one-colored network model.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Network {
    model: Model,
    arity: usize,
    payload: Payload,
}

impl Model {
    /// The label monoid for models whose payloads are edge labellings.
    pub fn label_monoid(&self) -> Option<MonoidSpec> {
        match self {
            Model::Mg => Some(MonoidSpec::NatMax),
            Model::MgPlus => Some(MonoidSpec::NatAdd),
            Model::Gamma { monoid } => Some(monoid.clone()),
            _ => None,
        }
    }

    fn check_arity(&self, n: usize) -> Result<()> {
        if n > MAX_ARITY {
            return Err(Error::ArityTooLarge(n));
        }
        Ok(())
    }

    fn empty_payload(&self, n: usize) -> Payload {
        match self {
            Model::Sg => Payload::Edges(BTreeSet::new()),
            Model::Dg => Payload::Arcs(BTreeSet::new()),
            Model::Mg | Model::MgPlus | Model::Gamma { .. } => Payload::Labels(BTreeMap::new()),
            Model::Hg => Payload::Hyper(BTreeSet::new()),
            Model::PartitionJoin => Payload::Partition(Partition::discrete(n)),
            Model::PartitionMeet => Payload::Partition(Partition::indiscrete(n)),
            Model::Tensor { left, right } => Payload::Pair(
                Box::new(left.empty_payload(n)),
                Box::new(right.empty_payload(n)),
            ),
        }
    }

    /// Number of elements of `F(n)`, when finite and representable.
    pub fn count_fibre(&self, n: usize) -> Result<u128> {
        self.check_arity(n)?;
        let pairs = (n * n.saturating_sub(1) / 2) as u32;
        let pow = |base: u128, exp: u32| -> Result<u128> {
            base.checked_pow(exp)
                .ok_or_else(|| Error::SizeMismatch("fibre size overflows".into()))
        };
        match self {
            Model::Sg => pow(2, pairs),
            Model::Dg => pow(2, (n * n.saturating_sub(1)) as u32),
            Model::Hg => {
                if n >= 8 {
                    return Err(Error::SizeMismatch("fibre size overflows".into()));
                }
                pow(2, (1u32 << n) - 1)
            }
            Model::PartitionJoin | Model::PartitionMeet => Ok(bell_number(n)?),
            Model::Mg | Model::MgPlus => Err(Error::InfiniteFibre(self.to_string(), n)),
            Model::Gamma { monoid } => match monoid.carrier_size() {
                Some(size) => pow(size as u128, pairs),
                None => Err(Error::InfiniteFibre(self.to_string(), n)),
            },
            Model::Tensor { left, right } => left
                .count_fibre(n)?
                .checked_mul(right.count_fibre(n)?)
                .ok_or_else(|| Error::SizeMismatch("fibre size overflows".into())),
        }
    }

    /// Enumerates `F(n)` for finite fibres of manageable size.
    pub fn enumerate_fibre(&self, n: usize) -> Result<Vec<Network>> {
        let count = self.count_fibre(n)?;
        if count > 1 << 20 {
            return Err(Error::SizeMismatch(format!(
                "fibre of {self} at {n} has {count} elements; too many to enumerate"
            )));
        }
        let payloads = self.enumerate_payloads(n)?;
        Ok(payloads
            .into_iter()
            .map(|payload| Network {
                model: self.clone(),
                arity: n,
                payload,
            })
            .collect())
    }

    fn enumerate_payloads(&self, n: usize) -> Result<Vec<Payload>> {
        Ok(match self {
            Model::Sg => subsets(&all_edges(n))
                .map(|s| Payload::Edges(s.into_iter().collect()))
                .collect(),
            Model::Dg => subsets(&all_arcs(n))
                .map(|s| Payload::Arcs(s.into_iter().collect()))
                .collect(),
            Model::Hg => subsets(&all_hyperedges(n))
                .map(|s| Payload::Hyper(s.into_iter().collect()))
                .collect(),
            Model::PartitionJoin | Model::PartitionMeet => Partition::enumerate(n)
                .into_iter()
                .map(Payload::Partition)
                .collect(),
            Model::Gamma { monoid } => {
                let values = monoid.enumerate(0);
                if !monoid.is_finite() {
                    return Err(Error::InfiniteFibre(self.to_string(), n));
                }
                let mut out = vec![BTreeMap::new()];
                for e in all_edges(n) {
                    let mut next = Vec::with_capacity(out.len() * values.len());
                    for labels in &out {
                        for &v in &values {
                            let mut labels = labels.clone();
                            if !monoid.is_unit(v) {
                                labels.insert(e, v);
                            }
                            next.push(labels);
                        }
                    }
                    out = next;
                }
                out.into_iter().map(Payload::Labels).collect()
            }
            Model::Mg | Model::MgPlus => return Err(Error::InfiniteFibre(self.to_string(), n)),
            Model::Tensor { left, right } => {
                let ls = left.enumerate_payloads(n)?;
                let rs = right.enumerate_payloads(n)?;
                let mut out = Vec::with_capacity(ls.len() * rs.len());
                for l in &ls {
                    for r in &rs {
                        out.push(Payload::Pair(Box::new(l.clone()), Box::new(r.clone())));
                    }
                }
                out
            }
        })
    }

    /// Draws a random element of `F(n)`; label values stay small so law
    /// failures print readably.
    pub fn sample<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Network {
        let payload = self.sample_payload(n, rng);
        Network {
            model: self.clone(),
            arity: n,
            payload,
        }
    }

    fn sample_payload<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Payload {
        match self {
            Model::Sg => Payload::Edges(
                all_edges(n)
                    .into_iter()
                    .filter(|_| rng.random_bool(0.4))
                    .collect(),
            ),
            Model::Dg => Payload::Arcs(
                all_arcs(n)
                    .into_iter()
                    .filter(|_| rng.random_bool(0.3))
                    .collect(),
            ),
            Model::Mg | Model::MgPlus | Model::Gamma { .. } => {
                let monoid = self.label_monoid().expect("labelled model");
                let mut labels = BTreeMap::new();
                for e in all_edges(n) {
                    if rng.random_bool(0.4) {
                        let v = monoid.sample(rng, 3);
                        if !monoid.is_unit(v) {
                            labels.insert(e, v);
                        }
                    }
                }
                Payload::Labels(labels)
            }
            Model::Hg => {
                let mut hyper = BTreeSet::new();
                if n > 0 {
                    for _ in 0..rng.random_range(0..=n) {
                        let mut he = BTreeSet::new();
                        for v in 0..n {
                            if rng.random_bool(0.5) {
                                he.insert(v);
                            }
                        }
                        if !he.is_empty() {
                            hyper.insert(he);
                        }
                    }
                }
                Payload::Hyper(hyper)
            }
            Model::PartitionJoin | Model::PartitionMeet => {
                let blocks = rng.random_range(1..=n.max(1));
                let class: Vec<usize> = (0..n).map(|_| rng.random_range(0..blocks)).collect();
                let mut grouped: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for (i, c) in class.into_iter().enumerate() {
                    grouped.entry(c).or_default().push(i);
                }
                let blocks: Vec<Vec<usize>> = grouped.into_values().collect();
                Payload::Partition(Partition::from_blocks(n, &blocks).expect("valid blocks"))
            }
            Model::Tensor { left, right } => Payload::Pair(
                Box::new(left.sample_payload(n, rng)),
                Box::new(right.sample_payload(n, rng)),
            ),
        }
    }
}

fn all_arcs(n: usize) -> Vec<Arc> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push((i, j));
            }
        }
    }
    out
}

fn all_hyperedges(n: usize) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        out.push((0..n).filter(|&v| mask & (1 << v) != 0).collect());
    }
    out
}

fn subsets<T: Clone>(items: &[T]) -> impl Iterator<Item = Vec<T>> + '_ {
    (0u64..(1 << items.len())).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, x)| x.clone())
            .collect()
    })
}

fn bell_number(n: usize) -> Result<u128> {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &v in &row {
            let last = *next.last().unwrap();
            next.push(
                last.checked_add(v)
                    .ok_or_else(|| Error::SizeMismatch("fibre size overflows".into()))?,
            );
        }
        row = next;
    }
    Ok(row[0])
}

impl Network {
    /// The identity element `e_n`: the unit for overlay at arity `n`.
    pub fn empty(model: Model, n: usize) -> Result<Network> {
        model.check_arity(n)?;
        let payload = model.empty_payload(n);
        Ok(Network {
            model,
            arity: n,
            payload,
        })
    }

    /// A simple graph from 1-indexed vertex pairs.
    pub fn simple_graph(n: usize, edges: &[(usize, usize)]) -> Result<Network> {
        Model::Sg.check_arity(n)?;
        let mut set = BTreeSet::new();
        for &(i, j) in edges {
            let e = Edge::new_one_indexed(i, j)?;
            if !e.within(n) {
                return Err(Error::EdgeOutOfRange(i, j, n));
            }
            set.insert(e);
        }
        Ok(Network {
            model: Model::Sg,
            arity: n,
            payload: Payload::Edges(set),
        })
    }

    /// A directed graph from 1-indexed ordered pairs.
    pub fn directed_graph(n: usize, arcs: &[(usize, usize)]) -> Result<Network> {
        Model::Dg.check_arity(n)?;
        let mut set = BTreeSet::new();
        for &(i, j) in arcs {
            if i == 0 || j == 0 {
                return Err(Error::Parse("vertices are 1-indexed".into()));
            }
            if i == j {
                return Err(Error::LoopEdge(i));
            }
            if i > n || j > n {
                return Err(Error::EdgeOutOfRange(i, j, n));
            }
            set.insert((i - 1, j - 1));
        }
        Ok(Network {
            model: Model::Dg,
            arity: n,
            payload: Payload::Arcs(set),
        })
    }

    /// An edge-labelled network (`Mg`, `MgPlus`, or `Gamma`) from 1-indexed
    /// pairs with labels. Unit labels are dropped.
    pub fn labelled(
        model: Model,
        n: usize,
        labels: &[(usize, usize, MonoidElement)],
    ) -> Result<Network> {
        model.check_arity(n)?;
        let monoid = model
            .label_monoid()
            .ok_or_else(|| Error::ModelMismatch(format!("{model} has no edge labels")))?;
        let mut map = BTreeMap::new();
        for &(i, j, v) in labels {
            let e = Edge::new_one_indexed(i, j)?;
            if !e.within(n) {
                return Err(Error::EdgeOutOfRange(i, j, n));
            }
            if !monoid.contains(v) {
                return Err(Error::CarrierMismatch(format!(
                    "label {v} is not in {}",
                    monoid.name()
                )));
            }
            if !monoid.is_unit(v) {
                map.insert(e, v);
            }
        }
        Ok(Network {
            model,
            arity: n,
            payload: Payload::Labels(map),
        })
    }

    /// A multigraph in the additive model, multiplicities from 1-indexed
    /// pairs.
    pub fn multigraph_plus(n: usize, mults: &[(usize, usize, u64)]) -> Result<Network> {
        let labels: Vec<_> = mults
            .iter()
            .map(|&(i, j, m)| (i, j, MonoidElement::Nat(m)))
            .collect();
        Network::labelled(Model::MgPlus, n, &labels)
    }

    /// A hypergraph from 1-indexed hyperedges (nonempty vertex subsets).
    pub fn hypergraph(n: usize, hyperedges: &[Vec<usize>]) -> Result<Network> {
        Model::Hg.check_arity(n)?;
        let mut set = BTreeSet::new();
        for he in hyperedges {
            if he.is_empty() {
                return Err(Error::Parse("hyperedges must be nonempty".into()));
            }
            let mut s = BTreeSet::new();
            for &v in he {
                if v == 0 || v > n {
                    return Err(Error::EdgeOutOfRange(v, v, n));
                }
                s.insert(v - 1);
            }
            set.insert(s);
        }
        Ok(Network {
            model: Model::Hg,
            arity: n,
            payload: Payload::Hyper(set),
        })
    }

    /// A partition network from 1-indexed blocks.
    pub fn partition(model: Model, n: usize, blocks: &[Vec<usize>]) -> Result<Network> {
        if !matches!(model, Model::PartitionJoin | Model::PartitionMeet) {
            return Err(Error::ModelMismatch(format!(
                "{model} is not a partition model"
            )));
        }
        model.check_arity(n)?;
        let zero_indexed: Vec<Vec<usize>> = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&v| {
                        if v == 0 {
                            Err(Error::Parse("vertices are 1-indexed".into()))
                        } else {
                            Ok(v - 1)
                        }
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Network {
            model,
            arity: n,
            payload: Payload::Partition(Partition::from_blocks(n, &zero_indexed)?),
        })
    }

    pub fn model(&self) -> &Model {
        &self.model
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    pub fn is_empty_network(&self) -> bool {
        self.payload == self.model.empty_payload(self.arity)
    }

    /// Edge set of a simple graph, 1-indexed.
    pub fn edges_one_indexed(&self) -> Result<Vec<(usize, usize)>> {
        match &self.payload {
            Payload::Edges(set) => Ok(set.iter().map(|e| e.one_indexed()).collect()),
            _ => Err(Error::PayloadMismatch(format!(
                "{} does not store a plain edge set",
                self.model
            ))),
        }
    }

    fn check_same_model(&self, other: &Network) -> Result<()> {
        if self.model != other.model {
            return Err(Error::ModelMismatch(format!(
                "{} vs {}",
                self.model, other.model
            )));
        }
        Ok(())
    }

    /// Overlay `g ∪ h`: the monoid product in `F(n)`.
    pub fn overlay(&self, other: &Network) -> Result<Network> {
        self.check_same_model(other)?;
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(format!(
                "overlay of arities {} and {}",
                self.arity, other.arity
            )));
        }
        let payload = overlay_payload(&self.model, &self.payload, &other.payload)?;
        Ok(Network {
            model: self.model.clone(),
            arity: self.arity,
            payload,
        })
    }

    /// Disjoint union `g ⊔ h`: `g` on `{1..m}`, `h` shifted up by `m`.
    pub fn disjoint_union(&self, other: &Network) -> Result<Network> {
        self.check_same_model(other)?;
        let n = self.arity + other.arity;
        self.model.check_arity(n)?;
        let payload = disjoint_payload(
            &self.model,
            self.arity,
            other.arity,
            &self.payload,
            &other.payload,
        )?;
        Ok(Network {
            model: self.model.clone(),
            arity: n,
            payload,
        })
    }

    /// The symmetric-group action relabelling vertices: `σ(g)(e) = g(σ⁻¹ e)`.
    pub fn act(&self, sigma: &Permutation) -> Result<Network> {
        if sigma.len() != self.arity {
            return Err(Error::ArityMismatch(format!(
                "permutation on {} acting on network of arity {}",
                sigma.len(),
                self.arity
            )));
        }
        let payload = act_payload(&self.model, sigma, &self.payload)?;
        Ok(Network {
            model: self.model.clone(),
            arity: self.arity,
            payload,
        })
    }

    /// Applies a monoid homomorphism to every edge label, giving a morphism
    /// of network models (it commutes with all three structure maps).
    pub fn map_labels(&self, hom: &MonoidHom) -> Result<Network> {
        let monoid = self.model.label_monoid().ok_or_else(|| {
            Error::ModelMismatch(format!("{} has no edge labels to map", self.model))
        })?;
        if monoid != hom.source {
            return Err(Error::CarrierMismatch(format!(
                "labels live in {}, homomorphism expects {}",
                monoid.name(),
                hom.source.name()
            )));
        }
        let Payload::Labels(labels) = &self.payload else {
            return Err(Error::PayloadMismatch("expected labelled payload".into()));
        };
        let mut out = BTreeMap::new();
        for (&e, &v) in labels {
            let w = hom.apply(v)?;
            if !hom.target.is_unit(w) {
                out.insert(e, w);
            }
        }
        Ok(Network {
            model: Model::Gamma {
                monoid: hom.target.clone(),
            },
            arity: self.arity,
            payload: Payload::Labels(out),
        })
    }

    /// Pairs two networks of equal arity into the tensor model.
    pub fn tensor_with(&self, other: &Network) -> Result<Network> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(format!(
                "tensor of arities {} and {}",
                self.arity, other.arity
            )));
        }
        Ok(Network {
            model: Model::Tensor {
                left: Box::new(self.model.clone()),
                right: Box::new(other.model.clone()),
            },
            arity: self.arity,
            payload: Payload::Pair(
                Box::new(self.payload.clone()),
                Box::new(other.payload.clone()),
            ),
        })
    }

    /// Components of a tensor-model network.
    pub fn split_tensor(&self) -> Result<(Network, Network)> {
        let Model::Tensor { left, right } = &self.model else {
            return Err(Error::ModelMismatch(format!(
                "{} is not a tensor model",
                self.model
            )));
        };
        let Payload::Pair(lp, rp) = &self.payload else {
            return Err(Error::PayloadMismatch("tensor payload expected".into()));
        };
        Ok((
            Network {
                model: (**left).clone(),
                arity: self.arity,
                payload: (**lp).clone(),
            },
            Network {
                model: (**right).clone(),
                arity: self.arity,
                payload: (**rp).clone(),
            },
        ))
    }

    /// Lattice join of two partition networks (overlay in the join model).
    pub fn partition_join(&self, other: &Network) -> Result<Network> {
        if self.model != Model::PartitionJoin {
            return Err(Error::ModelMismatch(format!(
                "partition_join on {}",
                self.model
            )));
        }
        self.overlay(other)
    }

    /// Lattice meet of two partition networks (overlay in the meet model).
    pub fn partition_meet(&self, other: &Network) -> Result<Network> {
        if self.model != Model::PartitionMeet {
            return Err(Error::ModelMismatch(format!(
                "partition_meet on {}",
                self.model
            )));
        }
        self.overlay(other)
    }
}

fn overlay_payload(model: &Model, a: &Payload, b: &Payload) -> Result<Payload> {
    Ok(match (model, a, b) {
        (Model::Sg, Payload::Edges(x), Payload::Edges(y)) => {
            Payload::Edges(x.union(y).copied().collect())
        }
        (Model::Dg, Payload::Arcs(x), Payload::Arcs(y)) => {
            Payload::Arcs(x.union(y).copied().collect())
        }
        (Model::Hg, Payload::Hyper(x), Payload::Hyper(y)) => {
            Payload::Hyper(x.union(y).cloned().collect())
        }
        (
            Model::Mg | Model::MgPlus | Model::Gamma { .. },
            Payload::Labels(x),
            Payload::Labels(y),
        ) => {
            let monoid = model.label_monoid().expect("labelled model");
            let mut out = x.clone();
            for (&e, &v) in y {
                let merged = match out.get(&e) {
                    Some(&u) => monoid.mul(u, v)?,
                    None => v,
                };
                if monoid.is_unit(merged) {
                    out.remove(&e);
                } else {
                    out.insert(e, merged);
                }
            }
            Payload::Labels(out)
        }
        (Model::PartitionJoin, Payload::Partition(x), Payload::Partition(y)) => {
            Payload::Partition(x.join(y)?)
        }
        (Model::PartitionMeet, Payload::Partition(x), Payload::Partition(y)) => {
            Payload::Partition(x.meet(y)?)
        }
        (Model::Tensor { left, right }, Payload::Pair(xl, xr), Payload::Pair(yl, yr)) => {
            Payload::Pair(
                Box::new(overlay_payload(left, xl, yl)?),
                Box::new(overlay_payload(right, xr, yr)?),
            )
        }
        _ => {
            return Err(Error::PayloadMismatch(format!(
                "overlay payload for {model}"
            )))
        }
    })
}

fn disjoint_payload(
    model: &Model,
    m: usize,
    n: usize,
    a: &Payload,
    b: &Payload,
) -> Result<Payload> {
    Ok(match (model, a, b) {
        (Model::Sg, Payload::Edges(x), Payload::Edges(y)) => {
            let mut out = x.clone();
            out.extend(y.iter().map(|e| e.shift(m)));
            Payload::Edges(out)
        }
        (Model::Dg, Payload::Arcs(x), Payload::Arcs(y)) => {
            let mut out = x.clone();
            out.extend(y.iter().map(|&(i, j)| (i + m, j + m)));
            Payload::Arcs(out)
        }
        (Model::Hg, Payload::Hyper(x), Payload::Hyper(y)) => {
            let mut out = x.clone();
            out.extend(
                y.iter()
                    .map(|he| he.iter().map(|&v| v + m).collect::<BTreeSet<_>>()),
            );
            Payload::Hyper(out)
        }
        (
            Model::Mg | Model::MgPlus | Model::Gamma { .. },
            Payload::Labels(x),
            Payload::Labels(y),
        ) => {
            let mut out = x.clone();
            out.extend(y.iter().map(|(&e, &v)| (e.shift(m), v)));
            Payload::Labels(out)
        }
        (Model::PartitionJoin, Payload::Partition(x), Payload::Partition(y)) => {
            Payload::Partition(x.side_by_side(y))
        }
        (Model::PartitionMeet, Payload::Partition(x), Payload::Partition(y)) => {
            // The unit here is the indiscrete partition, so the lax structure
            // map cannot be the plain side-by-side placement: it must send a
            // pair of units to the unit, be a homomorphism for meet in each
            // argument, and remain associative. Writing h(p,q) =
            // j(p) ∧ k(q) with j, k equivariant unit-preserving meet
            // homomorphisms forces the following form.
            let top_x = x.is_indiscrete();
            let top_y = y.is_indiscrete();
            let out = match (top_x, top_y) {
                (true, true) => Partition::indiscrete(m + n),
                (true, false) => Partition::discrete(m).side_by_side(y),
                (false, true) => x.side_by_side(&Partition::discrete(n)),
                (false, false) => Partition::discrete(m + n),
            };
            Payload::Partition(out)
        }
        (Model::Tensor { left, right }, Payload::Pair(xl, xr), Payload::Pair(yl, yr)) => {
            Payload::Pair(
                Box::new(disjoint_payload(left, m, n, xl, yl)?),
                Box::new(disjoint_payload(right, m, n, xr, yr)?),
            )
        }
        _ => {
            return Err(Error::PayloadMismatch(format!(
                "disjoint union payload for {model}"
            )))
        }
    })
}

fn act_payload(model: &Model, sigma: &Permutation, p: &Payload) -> Result<Payload> {
    Ok(match (model, p) {
        (Model::Sg, Payload::Edges(set)) => Payload::Edges(
            set.iter()
                .map(|&e| sigma.act_on_edge(e))
                .collect::<Result<_>>()?,
        ),
        (Model::Dg, Payload::Arcs(set)) => Payload::Arcs(
            set.iter()
                .map(|&(i, j)| (sigma.apply(i), sigma.apply(j)))
                .collect(),
        ),
        (Model::Hg, Payload::Hyper(set)) => Payload::Hyper(
            set.iter()
                .map(|he| he.iter().map(|&v| sigma.apply(v)).collect())
                .collect(),
        ),
        (Model::Mg | Model::MgPlus | Model::Gamma { .. }, Payload::Labels(map)) => Payload::Labels(
            map.iter()
                .map(|(&e, &v)| Ok((sigma.act_on_edge(e)?, v)))
                .collect::<Result<_>>()?,
        ),
        (Model::PartitionJoin | Model::PartitionMeet, Payload::Partition(part)) => {
            Payload::Partition(part.act(sigma)?)
        }
        (Model::Tensor { left, right }, Payload::Pair(l, r)) => Payload::Pair(
            Box::new(act_payload(left, sigma, l)?),
            Box::new(act_payload(right, sigma, r)?),
        ),
        _ => {
            return Err(Error::PayloadMismatch(format!(
                "action payload for {model}"
            )))
        }
    })
}

/// The fibrewise bijection between simple graphs and Boolean-labelled
/// complete graphs: an edge is present exactly where the label is `T`.
pub fn sg_to_gamma_bool(net: &Network) -> Result<Network> {
    let Payload::Edges(set) = &net.payload else {
        return Err(Error::ModelMismatch(format!("{} is not SG", net.model)));
    };
    let labels: Vec<(usize, usize, MonoidElement)> = set
        .iter()
        .map(|e| {
            let (i, j) = e.one_indexed();
            (i, j, MonoidElement::Bool(true))
        })
        .collect();
    Network::labelled(
        Model::Gamma {
            monoid: MonoidSpec::BoolOr,
        },
        net.arity,
        &labels,
    )
}

/// Inverse of [`sg_to_gamma_bool`].
pub fn gamma_bool_to_sg(net: &Network) -> Result<Network> {
    if net.model
        != (Model::Gamma {
            monoid: MonoidSpec::BoolOr,
        })
    {
        return Err(Error::ModelMismatch(format!(
            "{} is not Γ[bool-or]",
            net.model
        )));
    }
    let Payload::Labels(labels) = &net.payload else {
        return Err(Error::PayloadMismatch("labelled payload expected".into()));
    };
    let edges: Vec<(usize, usize)> = labels.keys().map(|e| e.one_indexed()).collect();
    Network::simple_graph(net.arity, &edges)
}

mod json;
pub use json::network_from_parts;
