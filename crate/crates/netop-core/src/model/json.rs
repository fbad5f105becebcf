//! JSON encoding of networks: `{"model": …, "n": …, "payload": …}`.
//!
//! Payload shapes by model kind, all 1-indexed:
//! simple graphs `[[1,2],[3,4]]`; directed graphs `[[2,1]]`; labelled models
//! `[[1,2,5]]` (or `[[1,2,true]]` for Boolean labels); hypergraphs
//! `[[1,2,3],[2]]`; partitions as blocks `[[1,2],[3]]`; tensor payloads
//! `{"left": …, "right": …}`.

use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::monoid::MonoidElement;
use crate::{Error, Result};

use super::{Model, Network, Payload};

fn payload_to_value(model: &Model, payload: &Payload) -> Result<Value> {
    Ok(match payload {
        Payload::Edges(set) => Value::Array(
            set.iter()
                .map(|e| {
                    let (i, j) = e.one_indexed();
                    json!([i, j])
                })
                .collect(),
        ),
        Payload::Arcs(set) => {
            Value::Array(set.iter().map(|&(i, j)| json!([i + 1, j + 1])).collect())
        }
        Payload::Labels(map) => Value::Array(
            map.iter()
                .map(|(e, v)| {
                    let (i, j) = e.one_indexed();
                    match v {
                        MonoidElement::Bool(b) => json!([i, j, b]),
                        MonoidElement::Nat(n) => json!([i, j, n]),
                    }
                })
                .collect(),
        ),
        Payload::Hyper(set) => Value::Array(
            set.iter()
                .map(|he| Value::Array(he.iter().map(|&v| json!(v + 1)).collect()))
                .collect(),
        ),
        Payload::Partition(p) => Value::Array(
            p.blocks()
                .iter()
                .map(|b| Value::Array(b.iter().map(|&v| json!(v + 1)).collect()))
                .collect(),
        ),
        Payload::Pair(l, r) => {
            let Model::Tensor { left, right } = model else {
                return Err(Error::PayloadMismatch(
                    "pair payload outside tensor model".into(),
                ));
            };
            json!({
                "left": payload_to_value(left, l)?,
                "right": payload_to_value(right, r)?,
            })
        }
    })
}

fn pair_list(value: &Value) -> Result<Vec<(usize, usize)>> {
    let arr = value
        .as_array()
        .ok_or_else(|| Error::Parse("expected an array payload".into()))?;
    arr.iter()
        .map(|item| {
            let pair = item
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Parse(format!("expected [i, j], got {item}")))?;
            let i = pair[0]
                .as_u64()
                .ok_or_else(|| Error::Parse(format!("bad vertex {}", pair[0])))?;
            let j = pair[1]
                .as_u64()
                .ok_or_else(|| Error::Parse(format!("bad vertex {}", pair[1])))?;
            Ok((i as usize, j as usize))
        })
        .collect()
}

fn label_value(v: &Value) -> Result<MonoidElement> {
    if let Some(b) = v.as_bool() {
        return Ok(MonoidElement::Bool(b));
    }
    if let Some(n) = v.as_u64() {
        return Ok(MonoidElement::Nat(n));
    }
    Err(Error::Parse(format!("bad edge label {v}")))
}

/// Builds a network from a model, arity, and JSON payload.
pub fn network_from_parts(model: Model, n: usize, payload: &Value) -> Result<Network> {
    match &model {
        Model::Sg => Network::simple_graph(n, &pair_list(payload)?),
        Model::Dg => Network::directed_graph(n, &pair_list(payload)?),
        Model::Mg | Model::MgPlus | Model::Gamma { .. } => {
            let arr = payload
                .as_array()
                .ok_or_else(|| Error::Parse("expected an array payload".into()))?;
            let mut labels = Vec::new();
            for item in arr {
                let triple = item
                    .as_array()
                    .filter(|a| a.len() == 3)
                    .ok_or_else(|| Error::Parse(format!("expected [i, j, label], got {item}")))?;
                let i = triple[0]
                    .as_u64()
                    .ok_or_else(|| Error::Parse(format!("bad vertex {}", triple[0])))?;
                let j = triple[1]
                    .as_u64()
                    .ok_or_else(|| Error::Parse(format!("bad vertex {}", triple[1])))?;
                labels.push((i as usize, j as usize, label_value(&triple[2])?));
            }
            Network::labelled(model, n, &labels)
        }
        Model::Hg => {
            let arr = payload
                .as_array()
                .ok_or_else(|| Error::Parse("expected an array payload".into()))?;
            let mut hyperedges = Vec::new();
            for item in arr {
                let verts = item
                    .as_array()
                    .ok_or_else(|| Error::Parse(format!("expected a vertex list, got {item}")))?;
                hyperedges.push(
                    verts
                        .iter()
                        .map(|v| {
                            v.as_u64()
                                .map(|v| v as usize)
                                .ok_or_else(|| Error::Parse(format!("bad vertex {v}")))
                        })
                        .collect::<Result<Vec<usize>>>()?,
                );
            }
            Network::hypergraph(n, &hyperedges)
        }
        Model::PartitionJoin | Model::PartitionMeet => {
            let arr = payload
                .as_array()
                .ok_or_else(|| Error::Parse("expected an array payload".into()))?;
            let mut blocks = Vec::new();
            for item in arr {
                let verts = item
                    .as_array()
                    .ok_or_else(|| Error::Parse(format!("expected a block, got {item}")))?;
                blocks.push(
                    verts
                        .iter()
                        .map(|v| {
                            v.as_u64()
                                .map(|v| v as usize)
                                .ok_or_else(|| Error::Parse(format!("bad vertex {v}")))
                        })
                        .collect::<Result<Vec<usize>>>()?,
                );
            }
            Network::partition(model, n, &blocks)
        }
        Model::Tensor { left, right } => {
            let obj = payload
                .as_object()
                .ok_or_else(|| Error::Parse("tensor payload must be {left, right}".into()))?;
            let l = obj
                .get("left")
                .ok_or_else(|| Error::Parse("tensor payload missing \"left\"".into()))?;
            let r = obj
                .get("right")
                .ok_or_else(|| Error::Parse("tensor payload missing \"right\"".into()))?;
            let ln = network_from_parts((**left).clone(), n, l)?;
            let rn = network_from_parts((**right).clone(), n, r)?;
            ln.tensor_with(&rn)
        }
    }
}

impl Serialize for Network {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let payload = payload_to_value(&self.model, &self.payload).map_err(S::Error::custom)?;
        json!({
            "model": serde_json::to_value(&self.model).map_err(S::Error::custom)?,
            "n": self.arity,
            "payload": payload,
        })
        .serialize(serializer)
    }
}

#[derive(Deserialize)]
struct NetworkParts {
    model: Model,
    n: usize,
    payload: Value,
}

impl<'de> Deserialize<'de> for Network {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = NetworkParts::deserialize(deserializer)?;
        network_from_parts(parts.model, parts.n, &parts.payload).map_err(D::Error::custom)
    }
}
