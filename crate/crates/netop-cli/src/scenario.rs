//! Scenario files: a model, named networks (optionally with vertex
//! attributes), named operations, an optional edge rule, and a composition
//! tree to evaluate.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use netop_core::algebra::{
    act_bound, act_canonical, act_predicate, act_vertex_attr, Attr, AttributedNetwork, EdgeBound,
    EdgePredicate,
};
use netop_core::model::network_from_parts;
use netop_core::operad::OperadOperation;
use netop_core::perm::Permutation;
use netop_core::{Model, Network};

/// A named network: arity plus model-shaped payload.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NamedNetwork {
    pub name: String,
    pub n: usize,
    pub payload: Value,
}

/// A named operation: profile, optional permutation (identity when null),
/// and the overlay network.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NamedOperation {
    pub name: String,
    pub profile: Vec<usize>,
    #[serde(default)]
    pub sigma: Option<Permutation>,
    pub g: NetworkParts,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NetworkParts {
    pub n: usize,
    pub payload: Value,
}

/// Either kind of edge rule.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScenarioRule {
    Predicate(EdgePredicate),
    Bound(EdgeBound),
}

/// A composition tree: a leaf referencing a named network, or an operation
/// applied to subtrees.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Tree {
    Leaf { net: String },
    Node { op: String, args: Vec<Tree> },
}

/// The scenario file format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Scenario {
    pub model: Model,
    pub networks: Vec<NamedNetwork>,
    #[serde(default)]
    pub attributes: BTreeMap<String, Vec<Attr>>,
    #[serde(default)]
    pub operations: Vec<NamedOperation>,
    #[serde(default)]
    pub rule: Option<ScenarioRule>,
    pub tree: Tree,
}

/// The result of evaluating a scenario: attributed when attributes were
/// supplied.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Evaluated {
    Plain(Network),
    Attributed(AttributedNetwork),
}

impl Evaluated {
    pub fn network(&self) -> &Network {
        match self {
            Evaluated::Plain(net) => net,
            Evaluated::Attributed(a) => &a.network,
        }
    }
}

fn fail(node: &str, err: impl std::fmt::Display) -> String {
    format!("at node {node:?}: {err}")
}

impl Scenario {
    fn lookup_network(&self, name: &str) -> Result<Network, String> {
        let named = self
            .networks
            .iter()
            .find(|n| n.name == name)
            .ok_or_else(|| fail(name, "no network with this name"))?;
        network_from_parts(self.model.clone(), named.n, &named.payload)
            .map_err(|err| fail(name, err))
    }

    fn lookup_operation(&self, name: &str) -> Result<OperadOperation, String> {
        let named = self
            .operations
            .iter()
            .find(|o| o.name == name)
            .ok_or_else(|| fail(name, "no operation with this name"))?;
        let network = network_from_parts(self.model.clone(), named.g.n, &named.g.payload)
            .map_err(|err| fail(name, err))?;
        let sigma = named
            .sigma
            .clone()
            .unwrap_or_else(|| Permutation::identity(named.g.n));
        OperadOperation::new(named.profile.clone(), sigma, network).map_err(|err| fail(name, err))
    }

    fn attributed(&self, name: &str, network: Network) -> Result<AttributedNetwork, String> {
        let attrs = self
            .attributes
            .get(name)
            .ok_or_else(|| fail(name, "no attributes for this network"))?;
        AttributedNetwork::new(network, attrs.clone()).map_err(|err| fail(name, err))
    }

    /// Evaluates the composition tree. With attributes present the
    /// attributed algebra is used (filtered by the rule when one is given);
    /// otherwise the canonical algebra.
    pub fn evaluate(&self) -> Result<Evaluated, String> {
        if self.attributes.is_empty() {
            if self.rule.is_some() {
                return Err("a rule needs vertex attributes".to_string());
            }
            Ok(Evaluated::Plain(self.eval_plain(&self.tree)?))
        } else {
            Ok(Evaluated::Attributed(self.eval_attributed(&self.tree)?))
        }
    }

    fn eval_plain(&self, tree: &Tree) -> Result<Network, String> {
        match tree {
            Tree::Leaf { net } => self.lookup_network(net),
            Tree::Node { op, args } => {
                let operation = self.lookup_operation(op)?;
                let evaluated = args
                    .iter()
                    .map(|t| self.eval_plain(t))
                    .collect::<Result<Vec<_>, String>>()?;
                act_canonical(&operation, &evaluated).map_err(|err| fail(op, err))
            }
        }
    }

    fn eval_attributed(&self, tree: &Tree) -> Result<AttributedNetwork, String> {
        match tree {
            Tree::Leaf { net } => {
                let network = self.lookup_network(net)?;
                let attributed = self.attributed(net, network)?;
                // leaves must already satisfy the rule
                match &self.rule {
                    None => Ok(attributed),
                    Some(ScenarioRule::Predicate(p)) => {
                        act_predicate(&leaf_identity(&attributed)?, &[attributed], p)
                            .map_err(|err| fail(net, err))
                    }
                    Some(ScenarioRule::Bound(b)) => {
                        act_bound(&leaf_identity(&attributed)?, &[attributed], b)
                            .map_err(|err| fail(net, err))
                    }
                }
            }
            Tree::Node { op, args } => {
                let operation = self.lookup_operation(op)?;
                let evaluated = args
                    .iter()
                    .map(|t| self.eval_attributed(t))
                    .collect::<Result<Vec<_>, String>>()?;
                match &self.rule {
                    None => act_vertex_attr(&operation, &evaluated).map_err(|err| fail(op, err)),
                    Some(ScenarioRule::Predicate(p)) => {
                        act_predicate(&operation, &evaluated, p).map_err(|err| fail(op, err))
                    }
                    Some(ScenarioRule::Bound(b)) => {
                        act_bound(&operation, &evaluated, b).map_err(|err| fail(op, err))
                    }
                }
            }
        }
    }
}

fn leaf_identity(a: &AttributedNetwork) -> Result<OperadOperation, String> {
    OperadOperation::identity(a.network.model().clone(), a.network.arity())
        .map_err(|err| err.to_string())
}
