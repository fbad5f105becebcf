//! The strict symmetric monoidal category generated by a network model: its
//! objects are arities (or colored words), and a morphism is a permutation
//! paired with a network at the target arity.
//!
//! Composition is `(σ, g) ∘ (τ, h) = (σ∘τ, g ∪ σ(h))`, tensor is block sum
//! paired with disjoint union, and the braiding is the block swap paired with
//! the empty network.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::json;

use crate::model::{word_morphism_ok, ColorWord, ColoredModel, ColoredNetwork};
use crate::perm::Permutation;
use crate::{Error, Model, Network, Result};

/// A morphism of the total category of a one-colored model. Source and
/// target are carried explicitly rather than inferred from the permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalMorphism {
    source: usize,
    target: usize,
    sigma: Permutation,
    network: Network,
}

impl TotalMorphism {
    pub fn new(sigma: Permutation, network: Network) -> Result<TotalMorphism> {
        if sigma.len() != network.arity() {
            return Err(Error::ArityMismatch(format!(
                "permutation on {} paired with network of arity {}",
                sigma.len(),
                network.arity()
            )));
        }
        Ok(TotalMorphism {
            source: sigma.len(),
            target: sigma.len(),
            sigma,
            network,
        })
    }

    /// The identity `(1, e_n)` at arity `n`.
    pub fn identity(model: Model, n: usize) -> Result<TotalMorphism> {
        TotalMorphism::new(Permutation::identity(n), Network::empty(model, n)?)
    }

    /// A pure network morphism `(1, g)`.
    pub fn from_network(network: Network) -> TotalMorphism {
        TotalMorphism {
            source: network.arity(),
            target: network.arity(),
            sigma: Permutation::identity(network.arity()),
            network,
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn network(&self) -> &Network {
        &self.network
    }

    pub fn model(&self) -> &Model {
        self.network.model()
    }

    /// `self ∘ first`: apply `first`, then `self`. The network part is
    /// `g ∪ σ(h)`.
    pub fn compose(&self, first: &TotalMorphism) -> Result<TotalMorphism> {
        if first.target != self.source {
            return Err(Error::BoundaryMismatch(format!(
                "composing target {} into source {}",
                first.target, self.source
            )));
        }
        let sigma = self.sigma.compose(&first.sigma)?;
        let network = self.network.overlay(&first.network.act(&self.sigma)?)?;
        Ok(TotalMorphism {
            source: first.source,
            target: self.target,
            sigma,
            network,
        })
    }

    /// Monoidal product: permutations block-sum, networks take disjoint
    /// union.
    pub fn tensor(&self, other: &TotalMorphism) -> Result<TotalMorphism> {
        if self.target + other.target > crate::MAX_ARITY {
            return Err(Error::ArityTooLarge(self.target + other.target));
        }
        let sigma = self.sigma.block_sum(&other.sigma);
        let network = self.network.disjoint_union(&other.network)?;
        Ok(TotalMorphism {
            source: self.source + other.source,
            target: self.target + other.target,
            sigma,
            network,
        })
    }

    /// The braiding `(B_{m,n}, e_{m+n})`.
    pub fn braiding(model: Model, m: usize, n: usize) -> Result<TotalMorphism> {
        Ok(TotalMorphism {
            source: m + n,
            target: m + n,
            sigma: Permutation::block_swap(m, n),
            network: Network::empty(model, m + n)?,
        })
    }
}

impl Serialize for TotalMorphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        json!({
            "sigma": self.sigma,
            "g": self.network,
            "src": self.source,
            "tgt": self.target,
        })
        .serialize(serializer)
    }
}

#[derive(Deserialize)]
struct TotalParts {
    sigma: Permutation,
    g: Network,
    src: usize,
    tgt: usize,
}

impl<'de> Deserialize<'de> for TotalMorphism {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = TotalParts::deserialize(deserializer)?;
        if parts.src != parts.tgt || parts.src != parts.sigma.len() {
            return Err(D::Error::custom("inconsistent source/target arities"));
        }
        TotalMorphism::new(parts.sigma, parts.g).map_err(D::Error::custom)
    }
}

/// Hom-set cardinality data for endomorphisms of the object `n`: the
/// hom-set factors as `F(n) × S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemidirectSummary {
    pub arity: usize,
    pub fibre_size: u128,
    pub group_order: u128,
    pub hom_size: u128,
}

/// Describes the endomorphisms of object `n` as the product of the fibre
/// with the symmetric group. Errors when the fibre is infinite.
pub fn decompose_total(model: &Model, n: usize) -> Result<SemidirectSummary> {
    let fibre_size = model.count_fibre(n)?;
    let group_order = (1..=n as u128).product::<u128>();
    let hom_size = fibre_size
        .checked_mul(group_order)
        .ok_or_else(|| Error::SizeMismatch("hom-set size overflows".into()))?;
    Ok(SemidirectSummary {
        arity: n,
        fibre_size,
        group_order,
        hom_size,
    })
}

/// Enumerates the endomorphism hom-set of object `n` when the fibre is
/// finite and small.
pub fn enumerate_hom(model: &Model, n: usize) -> Result<Vec<TotalMorphism>> {
    let fibre = model.enumerate_fibre(n)?;
    let perms = all_permutations(n);
    let mut out = Vec::with_capacity(fibre.len() * perms.len());
    for sigma in &perms {
        for net in &fibre {
            out.push(TotalMorphism::new(sigma.clone(), net.clone())?);
        }
    }
    Ok(out)
}

/// All of `S_n` in lexicographic order of image sequences.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut image: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation::from_image(image.clone()).expect("valid image"));
        // next lexicographic permutation
        let Some(i) = (0..image.len().saturating_sub(1))
            .rev()
            .find(|&i| image[i] < image[i + 1])
        else {
            break;
        };
        let j = (i + 1..image.len())
            .rev()
            .find(|&j| image[j] > image[i])
            .unwrap();
        image.swap(i, j);
        image[i + 1..].reverse();
    }
    out
}

/// A morphism of the total category of a colored model: the permutation must
/// map the source word to the target word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredTotalMorphism {
    source: ColorWord,
    target: ColorWord,
    sigma: Permutation,
    network: ColoredNetwork,
}

impl ColoredTotalMorphism {
    pub fn new(
        source: ColorWord,
        target: ColorWord,
        sigma: Permutation,
        network: ColoredNetwork,
    ) -> Result<ColoredTotalMorphism> {
        if !word_morphism_ok(&source, &target, &sigma) {
            return Err(Error::BoundaryMismatch(format!(
                "{sigma} does not map word {source:?} to {target:?}"
            )));
        }
        if network.word() != &target {
            return Err(Error::BoundaryMismatch(
                "network lives over a different word than the target".into(),
            ));
        }
        Ok(ColoredTotalMorphism {
            source,
            target,
            sigma,
            network,
        })
    }

    pub fn identity(model: ColoredModel, word: ColorWord) -> Result<Self> {
        let network = ColoredNetwork::empty(model, word.clone())?;
        let sigma = Permutation::identity(word.len());
        ColoredTotalMorphism::new(word.clone(), word, sigma, network)
    }

    pub fn source(&self) -> &ColorWord {
        &self.source
    }

    pub fn target(&self) -> &ColorWord {
        &self.target
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn network(&self) -> &ColoredNetwork {
        &self.network
    }

    pub fn compose(&self, first: &ColoredTotalMorphism) -> Result<ColoredTotalMorphism> {
        if first.target != self.source {
            return Err(Error::BoundaryMismatch(
                "colored word boundary mismatch".into(),
            ));
        }
        let sigma = self.sigma.compose(&first.sigma)?;
        let network = self.network.overlay(&first.network.act(&self.sigma)?)?;
        ColoredTotalMorphism::new(first.source.clone(), self.target.clone(), sigma, network)
    }

    pub fn tensor(&self, other: &ColoredTotalMorphism) -> Result<ColoredTotalMorphism> {
        let mut source = self.source.clone();
        source.extend(other.source.iter().cloned());
        let mut target = self.target.clone();
        target.extend(other.target.iter().cloned());
        let sigma = self.sigma.block_sum(&other.sigma);
        let network = self.network.disjoint_union(&other.network)?;
        ColoredTotalMorphism::new(source, target, sigma, network)
    }

    /// The braiding on a pair of colored words.
    pub fn braiding(model: ColoredModel, x: &ColorWord, y: &ColorWord) -> Result<Self> {
        let mut source = x.clone();
        source.extend(y.iter().cloned());
        let mut target = y.clone();
        target.extend(x.iter().cloned());
        let sigma = Permutation::block_swap(x.len(), y.len());
        let network = ColoredNetwork::empty(model, target.clone())?;
        ColoredTotalMorphism::new(source, target, sigma, network)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::MonoidSpec;

    fn sg(n: usize, edges: &[(usize, usize)]) -> Network {
        Network::simple_graph(n, edges).unwrap()
    }

    #[test]
    fn compose_examples() {
        let f1 = TotalMorphism::from_network(sg(3, &[(2, 3)]));
        let f2 = TotalMorphism::from_network(sg(3, &[(1, 2)]));
        let composite = f2.compose(&f1).unwrap();
        assert_eq!(composite.network(), &sg(3, &[(1, 2), (2, 3)]));
        assert!(composite.sigma().is_identity());

        // composing with the identity changes nothing
        let id = TotalMorphism::identity(Model::Sg, 3).unwrap();
        assert_eq!(f1.compose(&id).unwrap(), f1);
        assert_eq!(id.compose(&f1).unwrap(), f1);

        // a permutation part acts on the earlier network
        let swap23 = Permutation::transposition(3, 2, 3).unwrap();
        let g = TotalMorphism::new(swap23, Network::empty(Model::Sg, 3).unwrap()).unwrap();
        let h = TotalMorphism::from_network(sg(3, &[(1, 2)]));
        let composite = g.compose(&h).unwrap();
        assert_eq!(composite.network(), &sg(3, &[(1, 3)]));
    }

    #[test]
    fn compose_boundary_mismatch() {
        let f = TotalMorphism::from_network(sg(3, &[]));
        let g = TotalMorphism::from_network(sg(2, &[]));
        assert!(f.compose(&g).is_err());
    }

    #[test]
    fn tensor_examples() {
        let f = TotalMorphism::from_network(sg(2, &[(1, 2)]));
        let g = TotalMorphism::from_network(sg(1, &[]));
        let fg = f.tensor(&g).unwrap();
        assert_eq!(fg.network(), &sg(3, &[(1, 2)]));
        assert_eq!(fg.target(), 3);

        // tensoring with the unit-object identity changes nothing
        let unit = TotalMorphism::identity(Model::Sg, 0).unwrap();
        assert_eq!(f.tensor(&unit).unwrap(), f);

        let swap = Permutation::transposition(2, 1, 2).unwrap();
        let s = TotalMorphism::new(swap, Network::empty(Model::Sg, 2).unwrap()).unwrap();
        let ss = s.tensor(&s).unwrap();
        assert_eq!(
            ss.sigma(),
            &Permutation::from_image_one_indexed(&[2, 1, 4, 3]).unwrap()
        );
    }

    #[test]
    fn braiding_examples() {
        let b11 = TotalMorphism::braiding(Model::Sg, 1, 1).unwrap();
        assert_eq!(
            b11.sigma(),
            &Permutation::from_image_one_indexed(&[2, 1]).unwrap()
        );
        assert!(b11.network().is_empty_network());

        let b43 = TotalMorphism::braiding(Model::Sg, 4, 3).unwrap();
        assert_eq!(
            b43.sigma(),
            &Permutation::from_image_one_indexed(&[4, 5, 6, 7, 1, 2, 3]).unwrap()
        );

        let b0n = TotalMorphism::braiding(Model::Sg, 0, 4).unwrap();
        assert!(b0n.sigma().is_identity());
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose_total(&Model::Sg, 2).unwrap().hom_size, 4);
        assert_eq!(decompose_total(&Model::Sg, 3).unwrap().hom_size, 48);
        assert_eq!(decompose_total(&Model::Sg, 0).unwrap().hom_size, 1);
        assert!(decompose_total(&Model::MgPlus, 2).is_err());
        assert_eq!(enumerate_hom(&Model::Sg, 2).unwrap().len(), 4);
    }

    #[test]
    fn json_round_trip() {
        let f = TotalMorphism::new(
            Permutation::from_image_one_indexed(&[2, 3, 1]).unwrap(),
            sg(3, &[(1, 3)]),
        )
        .unwrap();
        let text = serde_json::to_string(&f).unwrap();
        let back: TotalMorphism = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn colored_morphisms_check_words() {
        let model = ColoredModel::Forgetful {
            colors: vec!["a".into(), "b".into()],
            model: Model::Gamma {
                monoid: MonoidSpec::NatAdd,
            },
        };
        let word: ColorWord = vec!["a".into(), "b".into()];
        let swapped: ColorWord = vec!["b".into(), "a".into()];
        let swap = Permutation::transposition(2, 1, 2).unwrap();
        let net = ColoredNetwork::empty(model.clone(), swapped.clone()).unwrap();
        // swapping an "ab" word yields a "ba" word
        assert!(ColoredTotalMorphism::new(
            word.clone(),
            swapped.clone(),
            swap.clone(),
            net.clone()
        )
        .is_ok());
        // the identity is not a morphism from "ab" to "ba"
        let id = Permutation::identity(2);
        assert!(ColoredTotalMorphism::new(word, swapped, id, net).is_err());
    }

    #[test]
    fn colored_braiding_symmetry() {
        let model = ColoredModel::Forgetful {
            colors: vec!["a".into(), "b".into()],
            model: Model::Sg,
        };
        let x: ColorWord = vec!["a".into()];
        let y: ColorWord = vec!["b".into(), "b".into()];
        let b = ColoredTotalMorphism::braiding(model.clone(), &x, &y).unwrap();
        let b_back = ColoredTotalMorphism::braiding(model, &y, &x).unwrap();
        let round = b_back.compose(&b).unwrap();
        assert!(round.sigma().is_identity());
        assert_eq!(round.source(), round.target());
    }
}
