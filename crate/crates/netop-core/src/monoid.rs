//! The monoid abstraction and the concrete monoids used as edge-label
//! alphabets, plus homomorphisms between them.
//!
//! Every carrier here is either the Booleans or (a truncation of) the
//! nonnegative integers, so elements are plain values and a monoid is
//! described by an enum. Arithmetic is checked: overflow is an error, never
//! wraparound, since the law suites need exact algebra.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// One of the concrete monoids used for edge labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MonoidSpec {
    /// `({F, T}, ∨, F)`.
    BoolOr,
    /// `(ℕ, +, 0)`.
    NatAdd,
    /// `(ℕ, max, 0)`.
    NatMax,
    /// `({0..k}, (x + y) min k, 0)`.
    TruncAdd { k: u64 },
    /// The free monoid on one generator: powers of the generator under
    /// juxtaposition, i.e. `(ℕ, +, 0)` read multiplicatively.
    FreeOneGen,
}

/// An element of one of the carriers above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonoidElement {
    Bool(bool),
    Nat(u64),
}

impl std::fmt::Display for MonoidElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MonoidElement::Bool(true) => write!(f, "T"),
            MonoidElement::Bool(false) => write!(f, "F"),
            MonoidElement::Nat(v) => write!(f, "{v}"),
        }
    }
}

impl MonoidSpec {
    pub fn name(&self) -> String {
        match self {
            MonoidSpec::BoolOr => "bool-or".into(),
            MonoidSpec::NatAdd => "nat-add".into(),
            MonoidSpec::NatMax => "nat-max".into(),
            MonoidSpec::TruncAdd { k } => format!("trunc-add({k})"),
            MonoidSpec::FreeOneGen => "free-one-gen".into(),
        }
    }

    /// Membership test for the carrier.
    pub fn contains(&self, a: MonoidElement) -> bool {
        match (self, a) {
            (MonoidSpec::BoolOr, MonoidElement::Bool(_)) => true,
            (
                MonoidSpec::NatAdd | MonoidSpec::NatMax | MonoidSpec::FreeOneGen,
                MonoidElement::Nat(_),
            ) => true,
            (MonoidSpec::TruncAdd { k }, MonoidElement::Nat(v)) => v <= *k,
            _ => false,
        }
    }

    fn check_member(&self, a: MonoidElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::CarrierMismatch(format!(
                "{a} is not an element of {}",
                self.name()
            )))
        }
    }

    /// The two-sided identity.
    pub fn unit(&self) -> MonoidElement {
        match self {
            MonoidSpec::BoolOr => MonoidElement::Bool(false),
            _ => MonoidElement::Nat(0),
        }
    }

    /// The monoid operation.
    pub fn mul(&self, a: MonoidElement, b: MonoidElement) -> Result<MonoidElement> {
        self.check_member(a)?;
        self.check_member(b)?;
        Ok(match (self, a, b) {
            (MonoidSpec::BoolOr, MonoidElement::Bool(x), MonoidElement::Bool(y)) => {
                MonoidElement::Bool(x || y)
            }
            (
                MonoidSpec::NatAdd | MonoidSpec::FreeOneGen,
                MonoidElement::Nat(x),
                MonoidElement::Nat(y),
            ) => MonoidElement::Nat(x.checked_add(y).ok_or(Error::Overflow)?),
            (MonoidSpec::NatMax, MonoidElement::Nat(x), MonoidElement::Nat(y)) => {
                MonoidElement::Nat(x.max(y))
            }
            (MonoidSpec::TruncAdd { k }, MonoidElement::Nat(x), MonoidElement::Nat(y)) => {
                MonoidElement::Nat(x.checked_add(y).ok_or(Error::Overflow)?.min(*k))
            }
            _ => unreachable!("membership already checked"),
        })
    }

    pub fn is_unit(&self, a: MonoidElement) -> bool {
        a == self.unit()
    }

    /// Whether the operation is commutative. Derived from the kind rather
    /// than assumed: graph products downstream must know.
    pub fn is_commutative(&self) -> bool {
        match self {
            MonoidSpec::BoolOr
            | MonoidSpec::NatAdd
            | MonoidSpec::NatMax
            | MonoidSpec::TruncAdd { .. }
            | MonoidSpec::FreeOneGen => true,
        }
    }

    /// Whether the carrier is finite.
    pub fn is_finite(&self) -> bool {
        matches!(self, MonoidSpec::BoolOr | MonoidSpec::TruncAdd { .. })
    }

    /// The carrier if finite, otherwise an initial segment with values up to
    /// `bound`.
    pub fn enumerate(&self, bound: u64) -> Vec<MonoidElement> {
        match self {
            MonoidSpec::BoolOr => vec![MonoidElement::Bool(false), MonoidElement::Bool(true)],
            MonoidSpec::TruncAdd { k } => (0..=*k).map(MonoidElement::Nat).collect(),
            MonoidSpec::NatAdd | MonoidSpec::NatMax | MonoidSpec::FreeOneGen => {
                (0..=bound).map(MonoidElement::Nat).collect()
            }
        }
    }

    /// Carrier size for finite monoids.
    pub fn carrier_size(&self) -> Option<u64> {
        match self {
            MonoidSpec::BoolOr => Some(2),
            MonoidSpec::TruncAdd { k } => Some(k + 1),
            _ => None,
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, bound: u64) -> MonoidElement {
        match self {
            MonoidSpec::BoolOr => MonoidElement::Bool(rng.random()),
            MonoidSpec::TruncAdd { k } => MonoidElement::Nat(rng.random_range(0..=*k.min(&bound))),
            MonoidSpec::NatAdd | MonoidSpec::NatMax | MonoidSpec::FreeOneGen => {
                MonoidElement::Nat(rng.random_range(0..=bound))
            }
        }
    }

    /// Checks the graphic identity `aba = ab` over the carrier: exhaustively
    /// where the carrier is finite, otherwise over an initial segment of at
    /// least `samples` values. Returns the first counterexample pair on
    /// failure.
    pub fn is_graphic(&self, samples: u64) -> GraphicReport {
        let bound = samples.max(2);
        let elems = self.enumerate(bound);
        for &a in &elems {
            for &b in &elems {
                let ab = self.mul(a, b).expect("carrier elements");
                let aba = self.mul(ab, a).expect("carrier elements");
                if aba != ab {
                    return GraphicReport {
                        graphic: false,
                        witness: Some((a, b)),
                    };
                }
            }
        }
        GraphicReport {
            graphic: true,
            witness: None,
        }
    }
}

/// Outcome of a graphic-identity check, with a counterexample on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicReport {
    pub graphic: bool,
    pub witness: Option<(MonoidElement, MonoidElement)>,
}

/// A named monoid homomorphism rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum HomRule {
    Identity,
    /// `n ↦ n min k`, from `(ℕ,+)` onto the truncated monoid: imposes a
    /// cutoff on the number of edges.
    Cutoff,
    /// The bijection between the 1-truncated naturals and the Booleans.
    TruncOneToBool,
    BoolToTruncOne,
}

/// A monoid homomorphism: source, target, and a mapping rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidHom {
    pub source: MonoidSpec,
    pub target: MonoidSpec,
    #[serde(flatten)]
    pub rule: HomRule,
}

impl MonoidHom {
    pub fn identity(spec: MonoidSpec) -> Self {
        MonoidHom {
            source: spec.clone(),
            target: spec,
            rule: HomRule::Identity,
        }
    }

    /// The cutoff homomorphism `(ℕ,+) → ({0..k}, ⊕)`.
    pub fn cutoff(k: u64) -> Self {
        MonoidHom {
            source: MonoidSpec::NatAdd,
            target: MonoidSpec::TruncAdd { k },
            rule: HomRule::Cutoff,
        }
    }

    pub fn trunc_one_to_bool() -> Self {
        MonoidHom {
            source: MonoidSpec::TruncAdd { k: 1 },
            target: MonoidSpec::BoolOr,
            rule: HomRule::TruncOneToBool,
        }
    }

    pub fn bool_to_trunc_one() -> Self {
        MonoidHom {
            source: MonoidSpec::BoolOr,
            target: MonoidSpec::TruncAdd { k: 1 },
            rule: HomRule::BoolToTruncOne,
        }
    }

    pub fn apply(&self, a: MonoidElement) -> Result<MonoidElement> {
        if !self.source.contains(a) {
            return Err(Error::CarrierMismatch(format!(
                "{a} is not an element of {}",
                self.source.name()
            )));
        }
        Ok(match (&self.rule, a) {
            (HomRule::Identity, a) => a,
            (HomRule::Cutoff, MonoidElement::Nat(v)) => match &self.target {
                MonoidSpec::TruncAdd { k } => MonoidElement::Nat(v.min(*k)),
                other => {
                    return Err(Error::CarrierMismatch(format!(
                        "cutoff targets a truncated monoid, not {}",
                        other.name()
                    )))
                }
            },
            (HomRule::TruncOneToBool, MonoidElement::Nat(v)) => MonoidElement::Bool(v == 1),
            (HomRule::BoolToTruncOne, MonoidElement::Bool(x)) => MonoidElement::Nat(x as u64),
            _ => {
                return Err(Error::CarrierMismatch(format!(
                    "rule {:?} does not apply to {a}",
                    self.rule
                )))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: MonoidElement = MonoidElement::Bool(true);
    const F: MonoidElement = MonoidElement::Bool(false);

    fn nat(v: u64) -> MonoidElement {
        MonoidElement::Nat(v)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(MonoidSpec::BoolOr.mul(T, F).unwrap(), T);
        assert_eq!(
            MonoidSpec::TruncAdd { k: 2 }.mul(nat(1), nat(2)).unwrap(),
            nat(2)
        );
        assert_eq!(MonoidSpec::NatMax.mul(nat(3), nat(3)).unwrap(), nat(3));
        assert!(MonoidSpec::BoolOr.mul(T, nat(1)).is_err());
    }

    #[test]
    fn unit_examples() {
        assert_eq!(MonoidSpec::BoolOr.unit(), F);
        assert_eq!(MonoidSpec::NatAdd.unit(), nat(0));
        assert_eq!(MonoidSpec::TruncAdd { k: 7 }.unit(), nat(0));
    }

    #[test]
    fn overflow_is_an_error() {
        assert_eq!(
            MonoidSpec::NatAdd.mul(nat(u64::MAX), nat(1)),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn associativity_and_unit_on_sampled_carriers() {
        let specs = [
            MonoidSpec::BoolOr,
            MonoidSpec::NatAdd,
            MonoidSpec::NatMax,
            MonoidSpec::TruncAdd { k: 0 },
            MonoidSpec::TruncAdd { k: 3 },
            MonoidSpec::FreeOneGen,
        ];
        for spec in &specs {
            let elems = spec.enumerate(8);
            let e = spec.unit();
            for &a in &elems {
                assert_eq!(spec.mul(e, a).unwrap(), a, "{}", spec.name());
                assert_eq!(spec.mul(a, e).unwrap(), a, "{}", spec.name());
                for &b in &elems {
                    for &c in &elems {
                        let left = spec.mul(spec.mul(a, b).unwrap(), c).unwrap();
                        let right = spec.mul(a, spec.mul(b, c).unwrap()).unwrap();
                        assert_eq!(left, right, "{}", spec.name());
                    }
                }
            }
        }
    }

    #[test]
    fn hom_apply_examples() {
        let cutoff1 = MonoidHom::cutoff(1);
        assert_eq!(cutoff1.apply(nat(5)).unwrap(), nat(1));
        assert_eq!(cutoff1.apply(nat(0)).unwrap(), nat(0));
        let cutoff3 = MonoidHom::cutoff(3);
        assert_eq!(cutoff3.apply(nat(2)).unwrap(), nat(2));
        assert!(cutoff1.apply(T).is_err());
    }

    #[test]
    fn registered_homs_preserve_unit_and_mul() {
        let homs = [
            MonoidHom::cutoff(1),
            MonoidHom::cutoff(2),
            MonoidHom::cutoff(4),
            MonoidHom::identity(MonoidSpec::NatMax),
            MonoidHom::trunc_one_to_bool(),
            MonoidHom::bool_to_trunc_one(),
        ];
        for h in &homs {
            assert_eq!(h.apply(h.source.unit()).unwrap(), h.target.unit());
            for a in h.source.enumerate(8) {
                for b in h.source.enumerate(8) {
                    let lhs = h.apply(h.source.mul(a, b).unwrap()).unwrap();
                    let rhs = h
                        .target
                        .mul(h.apply(a).unwrap(), h.apply(b).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs, "{:?} at ({a}, {b})", h.rule);
                }
            }
        }
    }

    #[test]
    fn graphic_checks() {
        assert!(MonoidSpec::BoolOr.is_graphic(8).graphic);
        assert!(MonoidSpec::NatMax.is_graphic(8).graphic);
        assert!(MonoidSpec::TruncAdd { k: 1 }.is_graphic(8).graphic);
        assert!(MonoidSpec::TruncAdd { k: 0 }.is_graphic(8).graphic);
        let report = MonoidSpec::NatAdd.is_graphic(8);
        assert!(!report.graphic);
        // the counterexample found must actually violate the identity
        let (a, b) = report.witness.unwrap();
        let ab = MonoidSpec::NatAdd.mul(a, b).unwrap();
        let aba = MonoidSpec::NatAdd.mul(ab, a).unwrap();
        assert_ne!(aba, ab);
        assert!(!MonoidSpec::TruncAdd { k: 2 }.is_graphic(8).graphic);
    }

    #[test]
    fn nat_add_witness_is_small() {
        // a = b = 1 gives aba = 3 ≠ 2 = ab; the scan finds a witness no
        // larger than that
        let report = MonoidSpec::NatAdd.is_graphic(8);
        let (a, b) = report.witness.unwrap();
        assert!(a <= nat(1) && b <= nat(1));
    }

    #[test]
    fn trunc_zero_is_trivial_and_trunc_one_is_boolean() {
        assert_eq!(MonoidSpec::TruncAdd { k: 0 }.enumerate(8).len(), 1);
        // the explicit bijection 0 ↦ F, 1 ↦ T is a homomorphism both ways
        let fwd = MonoidHom::trunc_one_to_bool();
        let bwd = MonoidHom::bool_to_trunc_one();
        for a in (MonoidSpec::TruncAdd { k: 1 }).enumerate(8) {
            assert_eq!(bwd.apply(fwd.apply(a).unwrap()).unwrap(), a);
        }
        for a in MonoidSpec::BoolOr.enumerate(8) {
            assert_eq!(fwd.apply(bwd.apply(a).unwrap()).unwrap(), a);
        }
    }
}
