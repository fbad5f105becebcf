//! Colored network models: fibres indexed by words of vertex colors rather
//! than bare arities.
//!
//! Two wrappers turn one-colored models into colored ones, mirroring the two
//! standard constructions:
//!
//! * [`ColoredModel::Forgetful`] forgets colors down to the arity via the
//!   unique map `C → 1`; edges across colors are permitted.
//! * [`ColoredModel::PerColor`] runs an independent model per color and takes
//!   the product; edges across colors are forbidden.
//!
//! [`PetriValued`] is the genuinely two-colored example: the fibre over a
//! word with `m` species positions and `n` transition positions is the monoid
//! of Petri nets `(m, n, i, o)` under entrywise addition of the input/output
//! matrices.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::perm::Permutation;
use crate::{Error, Model, Network, Result};

/// A vertex color. Colored words are sequences of these.
pub type Color = String;

/// An object of the free symmetric monoidal category on the color set: a
/// finite word of colors.
pub type ColorWord = Vec<Color>;

/// Checks that `sigma` is a morphism of colored words: `target[σ(i)] =
/// source[i]`.
pub fn word_morphism_ok(source: &[Color], target: &[Color], sigma: &Permutation) -> bool {
    source.len() == target.len()
        && sigma.len() == source.len()
        && (0..source.len()).all(|i| target[sigma.apply(i)] == source[i])
}

/// A colored network model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "colored-kind", rename_all = "kebab-case")]
pub enum ColoredModel {
    /// Forget colors to arity; one underlying model for every word.
    Forgetful { colors: Vec<Color>, model: Model },
    /// One model per color, vertices of different colors never linked.
    PerColor { models: BTreeMap<Color, Model> },
    /// Petri nets valued over the two-color alphabet {species, transition}.
    PetriValued,
}

/// Colors used by the Petri-valued model.
pub const SPECIES: &str = "s";
pub const TRANSITION: &str = "t";

/// Payload of the Petri-valued model: sparse input and output matrices over
/// (species position, transition position), entries in `ℕ`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PetriValued {
    pub input: BTreeMap<(usize, usize), u64>,
    pub output: BTreeMap<(usize, usize), u64>,
}

/// An element of a colored model's fibre over a color word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredNetwork {
    model: ColoredModel,
    word: ColorWord,
    payload: ColoredPayload,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum ColoredPayload {
    /// Forgetful wrapper: one network at the word's arity.
    One(Network),
    /// Per-color wrapper: one network per color, at that color's multiplicity.
    Many(BTreeMap<Color, Network>),
    Petri(PetriValued),
}

fn color_positions(word: &[Color], color: &Color) -> Vec<usize> {
    word.iter()
        .enumerate()
        .filter(|(_, c)| *c == color)
        .map(|(i, _)| i)
        .collect()
}

impl ColoredModel {
    fn check_word(&self, word: &[Color]) -> Result<()> {
        match self {
            ColoredModel::Forgetful { colors, .. } => {
                for c in word {
                    if !colors.contains(c) {
                        return Err(Error::ModelMismatch(format!("unknown color {c}")));
                    }
                }
            }
            ColoredModel::PerColor { models } => {
                for c in word {
                    if !models.contains_key(c) {
                        return Err(Error::ModelMismatch(format!("unknown color {c}")));
                    }
                }
            }
            ColoredModel::PetriValued => {
                for c in word {
                    if c != SPECIES && c != TRANSITION {
                        return Err(Error::ModelMismatch(format!(
                            "Petri-valued colors are {SPECIES} and {TRANSITION}, got {c}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

impl ColoredNetwork {
    pub fn empty(model: ColoredModel, word: ColorWord) -> Result<ColoredNetwork> {
        model.check_word(&word)?;
        let payload = match &model {
            ColoredModel::Forgetful { model: inner, .. } => {
                ColoredPayload::One(Network::empty(inner.clone(), word.len())?)
            }
            ColoredModel::PerColor { models } => {
                let mut many = BTreeMap::new();
                for (color, inner) in models {
                    let count = color_positions(&word, color).len();
                    many.insert(color.clone(), Network::empty(inner.clone(), count)?);
                }
                ColoredPayload::Many(many)
            }
            ColoredModel::PetriValued => ColoredPayload::Petri(PetriValued::default()),
        };
        Ok(ColoredNetwork {
            model,
            word,
            payload,
        })
    }

    /// Wraps a one-colored network as a forgetful-model element over `word`.
    pub fn from_forgetful(colors: Vec<Color>, word: ColorWord, net: Network) -> Result<Self> {
        if net.arity() != word.len() {
            return Err(Error::ArityMismatch(format!(
                "network arity {} vs word length {}",
                net.arity(),
                word.len()
            )));
        }
        let model = ColoredModel::Forgetful {
            colors,
            model: net.model().clone(),
        };
        model.check_word(&word)?;
        Ok(ColoredNetwork {
            model,
            word,
            payload: ColoredPayload::One(net),
        })
    }

    /// Wraps per-color networks; the network for color `c` must have arity
    /// equal to the number of `c` positions in the word.
    pub fn from_per_color(word: ColorWord, nets: BTreeMap<Color, Network>) -> Result<Self> {
        let mut models = BTreeMap::new();
        for (color, net) in &nets {
            let count = color_positions(&word, color).len();
            if net.arity() != count {
                return Err(Error::ArityMismatch(format!(
                    "color {color} occurs {count} times but its network has arity {}",
                    net.arity()
                )));
            }
            models.insert(color.clone(), net.model().clone());
        }
        let model = ColoredModel::PerColor { models };
        model.check_word(&word)?;
        Ok(ColoredNetwork {
            model,
            word,
            payload: ColoredPayload::Many(nets),
        })
    }

    /// A Petri-valued element: `input[(s, t)]`/`output[(s, t)]` give the arc
    /// multiplicities between the `s`-th species position and the `t`-th
    /// transition position (both 0-indexed within their color).
    pub fn petri_valued(word: ColorWord, payload: PetriValued) -> Result<Self> {
        let model = ColoredModel::PetriValued;
        model.check_word(&word)?;
        let m = color_positions(&word, &SPECIES.to_string()).len();
        let n = color_positions(&word, &TRANSITION.to_string()).len();
        for &(s, t) in payload.input.keys().chain(payload.output.keys()) {
            if s >= m || t >= n {
                return Err(Error::ArityMismatch(format!(
                    "matrix entry ({s}, {t}) outside {m}×{n}"
                )));
            }
        }
        Ok(ColoredNetwork {
            model,
            word,
            payload: ColoredPayload::Petri(payload),
        })
    }

    pub fn word(&self) -> &ColorWord {
        &self.word
    }

    pub fn model(&self) -> &ColoredModel {
        &self.model
    }

    /// The underlying one-colored network of a forgetful wrapper.
    pub fn inner(&self) -> Option<&Network> {
        match &self.payload {
            ColoredPayload::One(net) => Some(net),
            _ => None,
        }
    }

    pub fn inner_for_color(&self, color: &str) -> Option<&Network> {
        match &self.payload {
            ColoredPayload::Many(map) => map.get(color),
            _ => None,
        }
    }

    fn check_same_model(&self, other: &Self) -> Result<()> {
        if self.model != other.model {
            return Err(Error::ModelMismatch("colored model mismatch".into()));
        }
        Ok(())
    }

    pub fn overlay(&self, other: &Self) -> Result<ColoredNetwork> {
        self.check_same_model(other)?;
        if self.word != other.word {
            return Err(Error::ArityMismatch(
                "overlay needs equal color words".into(),
            ));
        }
        let payload = match (&self.payload, &other.payload) {
            (ColoredPayload::One(a), ColoredPayload::One(b)) => ColoredPayload::One(a.overlay(b)?),
            (ColoredPayload::Many(a), ColoredPayload::Many(b)) => {
                let mut out = BTreeMap::new();
                for (color, lhs) in a {
                    let rhs = b.get(color).ok_or_else(|| {
                        Error::ModelMismatch(format!("missing color {color} in overlay"))
                    })?;
                    out.insert(color.clone(), lhs.overlay(rhs)?);
                }
                ColoredPayload::Many(out)
            }
            (ColoredPayload::Petri(a), ColoredPayload::Petri(b)) => {
                let add = |x: &BTreeMap<(usize, usize), u64>, y: &BTreeMap<(usize, usize), u64>| {
                    let mut out = x.clone();
                    for (&k, &v) in y {
                        let entry = out.entry(k).or_insert(0);
                        *entry = entry.checked_add(v).ok_or(Error::Overflow)?;
                    }
                    Ok::<_, Error>(out)
                };
                ColoredPayload::Petri(PetriValued {
                    input: add(&a.input, &b.input)?,
                    output: add(&a.output, &b.output)?,
                })
            }
            _ => return Err(Error::PayloadMismatch("colored payload mismatch".into())),
        };
        Ok(ColoredNetwork {
            model: self.model.clone(),
            word: self.word.clone(),
            payload,
        })
    }

    pub fn disjoint_union(&self, other: &Self) -> Result<ColoredNetwork> {
        self.check_same_model(other)?;
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        let payload = match (&self.payload, &other.payload) {
            (ColoredPayload::One(a), ColoredPayload::One(b)) => {
                ColoredPayload::One(a.disjoint_union(b)?)
            }
            (ColoredPayload::Many(a), ColoredPayload::Many(b)) => {
                let mut out = BTreeMap::new();
                for (color, lhs) in a {
                    let rhs = b.get(color).ok_or_else(|| {
                        Error::ModelMismatch(format!("missing color {color} in disjoint union"))
                    })?;
                    out.insert(color.clone(), lhs.disjoint_union(rhs)?);
                }
                ColoredPayload::Many(out)
            }
            (ColoredPayload::Petri(a), ColoredPayload::Petri(b)) => {
                let m = color_positions(&self.word, &SPECIES.to_string()).len();
                let n = color_positions(&self.word, &TRANSITION.to_string()).len();
                let mut input = a.input.clone();
                let mut output = a.output.clone();
                for (&(s, t), &v) in &b.input {
                    input.insert((s + m, t + n), v);
                }
                for (&(s, t), &v) in &b.output {
                    output.insert((s + m, t + n), v);
                }
                ColoredPayload::Petri(PetriValued { input, output })
            }
            _ => return Err(Error::PayloadMismatch("colored payload mismatch".into())),
        };
        Ok(ColoredNetwork {
            model: self.model.clone(),
            word,
            payload,
        })
    }

    /// Acts by a color-preserving permutation, producing an element over the
    /// permuted word.
    pub fn act(&self, sigma: &Permutation) -> Result<ColoredNetwork> {
        if sigma.len() != self.word.len() {
            return Err(Error::ArityMismatch(format!(
                "permutation on {} acting on word of length {}",
                sigma.len(),
                self.word.len()
            )));
        }
        let mut word = self.word.clone();
        for (i, c) in self.word.iter().enumerate() {
            word[sigma.apply(i)] = c.clone();
        }
        let payload = match &self.payload {
            ColoredPayload::One(net) => ColoredPayload::One(net.act(sigma)?),
            ColoredPayload::Many(map) => {
                // restrict σ to each color's positions
                let mut out = BTreeMap::new();
                for (color, net) in map {
                    let src = color_positions(&self.word, color);
                    let tgt = color_positions(&word, color);
                    let mut image = vec![0usize; src.len()];
                    for (local, &global) in src.iter().enumerate() {
                        let moved = sigma.apply(global);
                        let local_tgt = tgt
                            .iter()
                            .position(|&p| p == moved)
                            .expect("color preserved by construction");
                        image[local] = local_tgt;
                    }
                    let restricted = Permutation::from_image(image)?;
                    out.insert(color.clone(), net.act(&restricted)?);
                }
                ColoredPayload::Many(out)
            }
            ColoredPayload::Petri(p) => {
                let src_s = color_positions(&self.word, &SPECIES.to_string());
                let tgt_s = color_positions(&word, &SPECIES.to_string());
                let src_t = color_positions(&self.word, &TRANSITION.to_string());
                let tgt_t = color_positions(&word, &TRANSITION.to_string());
                let relocal = |src: &[usize], tgt: &[usize], local: usize| -> usize {
                    let moved = sigma.apply(src[local]);
                    tgt.iter()
                        .position(|&p| p == moved)
                        .expect("color preserved")
                };
                let map_matrix = |mat: &BTreeMap<(usize, usize), u64>| {
                    mat.iter()
                        .map(|(&(s, t), &v)| {
                            ((relocal(&src_s, &tgt_s, s), relocal(&src_t, &tgt_t, t)), v)
                        })
                        .collect()
                };
                ColoredPayload::Petri(PetriValued {
                    input: map_matrix(&p.input),
                    output: map_matrix(&p.output),
                })
            }
        };
        Ok(ColoredNetwork {
            model: self.model.clone(),
            word,
            payload,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> ColorWord {
        s.chars().map(|c| c.to_string()).collect()
    }

    #[test]
    fn forgetful_allows_cross_color_edges() {
        let colors = vec!["a".to_string(), "b".to_string()];
        let net = Network::simple_graph(2, &[(1, 2)]).unwrap();
        let colored = ColoredNetwork::from_forgetful(colors, w("ab"), net).unwrap();
        assert_eq!(
            colored.inner().unwrap().edges_one_indexed().unwrap(),
            vec![(1, 2)]
        );
    }

    #[test]
    fn per_color_keeps_components_apart() {
        let mut nets = BTreeMap::new();
        nets.insert(
            "a".to_string(),
            Network::simple_graph(2, &[(1, 2)]).unwrap(),
        );
        nets.insert("b".to_string(), Network::simple_graph(1, &[]).unwrap());
        let colored = ColoredNetwork::from_per_color(w("aba"), nets).unwrap();
        // colorwise overlay is componentwise
        let doubled = colored.overlay(&colored).unwrap();
        assert_eq!(
            doubled.inner_for_color("a").unwrap(),
            colored.inner_for_color("a").unwrap()
        );
    }

    #[test]
    fn per_color_rejects_wrong_arity() {
        let mut nets = BTreeMap::new();
        nets.insert("a".to_string(), Network::simple_graph(3, &[]).unwrap());
        assert!(ColoredNetwork::from_per_color(w("aa"), nets).is_err());
    }

    #[test]
    fn act_preserves_colors() {
        let mut nets = BTreeMap::new();
        nets.insert(
            "a".to_string(),
            Network::simple_graph(2, &[(1, 2)]).unwrap(),
        );
        nets.insert("b".to_string(), Network::simple_graph(1, &[]).unwrap());
        let colored = ColoredNetwork::from_per_color(w("aab"), nets).unwrap();
        // swapping the two a-positions is color-preserving
        let swap = Permutation::transposition(3, 1, 2).unwrap();
        let acted = colored.act(&swap).unwrap();
        assert_eq!(acted.word(), &w("aab"));
        // a non-color-preserving permutation changes the word
        let move_b = Permutation::from_image_one_indexed(&[2, 3, 1]).unwrap();
        let acted = colored.act(&move_b).unwrap();
        assert_eq!(acted.word(), &w("baa"));
    }

    #[test]
    fn petri_valued_overlay_adds_matrices() {
        // one species position, one transition position
        let word = vec![SPECIES.to_string(), TRANSITION.to_string()];
        let mut input = BTreeMap::new();
        input.insert((0, 0), 1);
        let a = ColoredNetwork::petri_valued(
            word.clone(),
            PetriValued {
                input: input.clone(),
                output: BTreeMap::new(),
            },
        )
        .unwrap();
        let b = ColoredNetwork::petri_valued(
            word,
            PetriValued {
                input,
                output: BTreeMap::new(),
            },
        )
        .unwrap();
        let sum = a.overlay(&b).unwrap();
        let ColoredPayload::Petri(p) = &sum.payload else {
            panic!("petri payload")
        };
        assert_eq!(p.input.get(&(0, 0)), Some(&2));
    }

    #[test]
    fn petri_valued_disjoint_union_blocks() {
        let word = vec![SPECIES.to_string(), TRANSITION.to_string()];
        let mut input = BTreeMap::new();
        input.insert((0, 0), 1);
        let a = ColoredNetwork::petri_valued(
            word.clone(),
            PetriValued {
                input,
                output: BTreeMap::new(),
            },
        )
        .unwrap();
        let both = a.disjoint_union(&a).unwrap();
        let ColoredPayload::Petri(p) = &both.payload else {
            panic!("petri payload")
        };
        assert_eq!(p.input.get(&(0, 0)), Some(&1));
        assert_eq!(p.input.get(&(1, 1)), Some(&1));
        assert_eq!(both.word().len(), 4);
    }

    #[test]
    fn petri_valued_action_relabels_matrices() {
        // word s s t: the arc sits on the second species position
        let word = vec![
            SPECIES.to_string(),
            SPECIES.to_string(),
            TRANSITION.to_string(),
        ];
        let mut input = BTreeMap::new();
        input.insert((1, 0), 2);
        let net = ColoredNetwork::petri_valued(
            word.clone(),
            PetriValued {
                input,
                output: BTreeMap::new(),
            },
        )
        .unwrap();
        // swap the two species positions: color-preserving
        let swap = Permutation::transposition(3, 1, 2).unwrap();
        let acted = net.act(&swap).unwrap();
        assert_eq!(acted.word(), &word);
        let ColoredPayload::Petri(p) = &acted.payload else {
            panic!("petri payload")
        };
        assert_eq!(p.input.get(&(0, 0)), Some(&2));
        assert_eq!(p.input.get(&(1, 0)), None);
        // acting twice restores the original
        assert_eq!(acted.act(&swap).unwrap(), net);
    }
}
