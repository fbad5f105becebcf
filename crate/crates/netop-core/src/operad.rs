//! The network operad of a one-colored model: typed operations, the explicit
//! composition formula, identities, and the symmetric-group right action.
//!
//! An operation with profile `(n₁, …, n_k)` and target `n = n₁ + … + n_k` is
//! a pair `(σ, g)` with `σ ∈ S_n` and `g ∈ F(n)`. Composing it with
//! operations `(τᵢ, hᵢ)` gives
//!
//! ```text
//! (σ ∘ (τ₁ + … + τ_k),  g ∪ σ(h₁ ⊔ … ⊔ h_k))
//! ```
//!
//! so a network is itself an assembly instruction: overlay `g` on the
//! permuted disjoint union of the arguments.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::json;

use crate::perm::Permutation;
use crate::{Error, Model, Network, Result};

/// A typed operad operation `(σ, g)` with an arity profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperadOperation {
    profile: Vec<usize>,
    sigma: Permutation,
    network: Network,
}

impl OperadOperation {
    /// Validates that the profile sums to the arity of `σ` and `g`.
    pub fn new(profile: Vec<usize>, sigma: Permutation, network: Network) -> Result<Self> {
        let total: usize = profile.iter().sum();
        if total != sigma.len() || sigma.len() != network.arity() {
            return Err(Error::BadProfile(format!(
                "profile {profile:?} sums to {total}, permutation is on {}, network arity {}",
                sigma.len(),
                network.arity()
            )));
        }
        Ok(OperadOperation {
            profile,
            sigma,
            network,
        })
    }

    /// The identity operation `(1, e_n)` with profile `(n)`.
    pub fn identity(model: Model, n: usize) -> Result<Self> {
        OperadOperation::new(vec![n], Permutation::identity(n), Network::empty(model, n)?)
    }

    pub fn profile(&self) -> &[usize] {
        &self.profile
    }

    pub fn target(&self) -> usize {
        self.sigma.len()
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

    /// Operadic composition: plugs `args[i]` into the `i`-th slot.
    pub fn compose(&self, args: &[OperadOperation]) -> Result<OperadOperation> {
        if args.len() != self.profile.len() {
            return Err(Error::BadProfile(format!(
                "operation of profile length {} applied to {} arguments",
                self.profile.len(),
                args.len()
            )));
        }
        for (i, (arg, &slot)) in args.iter().zip(&self.profile).enumerate() {
            if arg.target() != slot {
                return Err(Error::ArityMismatch(format!(
                    "slot {} expects arity {slot}, argument has target {}",
                    i + 1,
                    arg.target()
                )));
            }
        }
        let mut profile = Vec::new();
        let mut tau_sum = Permutation::identity(0);
        let mut network_sum: Option<Network> = None;
        for arg in args {
            profile.extend_from_slice(&arg.profile);
            network_sum = Some(match network_sum {
                None => arg.network.clone(),
                Some(acc) => acc.disjoint_union(&arg.network)?,
            });
            tau_sum = tau_sum.block_sum(&arg.sigma);
        }
        let network_sum = match network_sum {
            Some(net) => net,
            None => Network::empty(self.model().clone(), 0)?,
        };
        let sigma = self.sigma.compose(&tau_sum)?;
        let network = self.network.overlay(&network_sum.act(&self.sigma)?)?;
        OperadOperation::new(profile, sigma, network)
    }

    /// Applies a label homomorphism to the network part, giving the
    /// operation of the target model's operad. Mapping operations pointwise
    /// like this commutes with composition, so it is an operad morphism.
    pub fn map_labels(&self, hom: &crate::monoid::MonoidHom) -> Result<OperadOperation> {
        OperadOperation::new(
            self.profile.clone(),
            self.sigma.clone(),
            self.network.map_labels(hom)?,
        )
    }

    /// The right action of `τ ∈ S_k` on a `k`-ary operation: the profile is
    /// permuted to `(n_{τ(1)}, …, n_{τ(k)})` and the permutation part is
    /// composed with the induced block permutation (source block `j`, of
    /// size `n_{τ(j)}`, lands in target block `τ(j)`). The network part is
    /// unchanged. This satisfies `(f·τ)·ρ = f·(τρ)` and both operad
    /// equivariance axioms.
    pub fn right_act(&self, tau: &Permutation) -> Result<OperadOperation> {
        if tau.len() != self.profile.len() {
            return Err(Error::SizeMismatch(format!(
                "action of S_{} on an operation with {} slots",
                tau.len(),
                self.profile.len()
            )));
        }
        let beta = profile_block_permutation(&self.profile, tau);
        let sigma = self.sigma.compose(&beta)?;
        let profile: Vec<usize> = (0..tau.len()).map(|j| self.profile[tau.apply(j)]).collect();
        OperadOperation::new(profile, sigma, self.network.clone())
    }
}

/// The block permutation induced by `τ ∈ S_k` on a profile of block sizes:
/// the result's source is arranged by blocks of sizes `(n_{τ(1)}, …,
/// n_{τ(k)})` and source block `j` maps onto target block `τ(j)` of the
/// original arrangement.
pub fn profile_block_permutation(profile: &[usize], tau: &Permutation) -> Permutation {
    let k = profile.len();
    let mut target_offsets = Vec::with_capacity(k);
    let mut acc = 0;
    for &size in profile {
        target_offsets.push(acc);
        acc += size;
    }
    let mut image = Vec::with_capacity(acc);
    for j in 0..k {
        let block = tau.apply(j);
        let size = profile[block];
        let offset = target_offsets[block];
        image.extend((0..size).map(|r| offset + r));
    }
    Permutation::from_image(image).expect("block permutations are bijections")
}

impl Serialize for OperadOperation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        json!({
            "profile": self.profile,
            "sigma": self.sigma,
            "g": self.network,
        })
        .serialize(serializer)
    }
}

#[derive(Deserialize)]
struct OperadParts {
    profile: Vec<usize>,
    sigma: Permutation,
    g: Network,
}

impl<'de> Deserialize<'de> for OperadOperation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = OperadParts::deserialize(deserializer)?;
        OperadOperation::new(parts.profile, parts.sigma, parts.g).map_err(D::Error::custom)
    }
}
