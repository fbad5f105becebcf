//! Individual-token morphisms: an execution paired with a permutation of a
//! catalyst word. Permuting catalyst tokens is recorded in the permutation
//! part, so two runs that merely swap which catalyst does what are distinct
//! morphisms even when their step sequences coincide.

use std::collections::BTreeSet;

use netop_core::perm::Permutation;
use serde::{Deserialize, Serialize};

use crate::exec::Execution;
use crate::net::PetriNet;
use crate::{Error, Result};

/// A word of catalyst species (indices into the net's species list).
pub type CatalystWord = Vec<usize>;

/// A morphism over a catalyst word: a word-permutation paired with an
/// execution whose catalyst grade matches the word's content.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntGMorphism {
    source_word: CatalystWord,
    target_word: CatalystWord,
    sigma: Permutation,
    execution: Execution,
}

fn word_multiset(word: &[usize], species_count: usize) -> Vec<u64> {
    let mut counts = vec![0u64; species_count];
    for &s in word {
        counts[s] += 1;
    }
    counts
}

impl IntGMorphism {
    /// Validates the pairing: every word entry is a chosen catalyst, `σ`
    /// maps the source word onto the target word, and the execution's
    /// catalyst grade equals the word's content.
    pub fn new(
        net: &PetriNet,
        chosen: &BTreeSet<usize>,
        source_word: CatalystWord,
        target_word: CatalystWord,
        sigma: Permutation,
        execution: Execution,
    ) -> Result<IntGMorphism> {
        for &s in source_word.iter().chain(&target_word) {
            if !chosen.contains(&s) {
                let name = net
                    .species()
                    .get(s)
                    .map(|n| n.as_str())
                    .unwrap_or("<out of range>");
                return Err(Error::NotACatalyst(name.to_string()));
            }
        }
        if sigma.len() != source_word.len() || source_word.len() != target_word.len() {
            return Err(Error::BoundaryMismatch(format!(
                "permutation on {} between words of lengths {} and {}",
                sigma.len(),
                source_word.len(),
                target_word.len()
            )));
        }
        for (i, &c) in source_word.iter().enumerate() {
            if target_word[sigma.apply(i)] != c {
                return Err(Error::BoundaryMismatch(format!(
                    "permutation does not map word {source_word:?} to {target_word:?}"
                )));
            }
        }
        // the word content must equal the catalyst part of the endpoints;
        // every word entry was checked to be chosen above, so comparing on
        // the chosen coordinates covers the whole word
        let content = word_multiset(&source_word, net.species_count());
        let start_grade = net.grade(chosen, execution.start())?;
        for &(s, c) in start_grade.coeffs() {
            if content[s] != c {
                return Err(Error::GradeMismatch(format!(
                    "word carries {} tokens of {}, execution starts with {c}",
                    content[s],
                    net.species()[s]
                )));
            }
        }
        Ok(IntGMorphism {
            source_word,
            target_word,
            sigma,
            execution,
        })
    }

    /// The identity-permutation pairing on a word.
    pub fn plain(
        net: &PetriNet,
        chosen: &BTreeSet<usize>,
        word: CatalystWord,
        execution: Execution,
    ) -> Result<IntGMorphism> {
        let sigma = Permutation::identity(word.len());
        IntGMorphism::new(net, chosen, word.clone(), word, sigma, execution)
    }

    pub fn source_word(&self) -> &CatalystWord {
        &self.source_word
    }

    pub fn target_word(&self) -> &CatalystWord {
        &self.target_word
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn execution(&self) -> &Execution {
        &self.execution
    }

    /// Componentwise composition: permutations compose, executions run in
    /// sequence.
    pub fn compose(
        &self,
        net: &PetriNet,
        chosen: &BTreeSet<usize>,
        second: &IntGMorphism,
    ) -> Result<IntGMorphism> {
        if self.target_word != second.source_word {
            return Err(Error::BoundaryMismatch("catalyst words do not meet".into()));
        }
        IntGMorphism::new(
            net,
            chosen,
            self.source_word.clone(),
            second.target_word.clone(),
            second.sigma.compose(&self.sigma)?,
            self.execution.compose(&second.execution)?,
        )
    }

    /// Componentwise tensor: words concatenate, permutations block-sum,
    /// executions run side by side.
    pub fn tensor(
        &self,
        net: &PetriNet,
        chosen: &BTreeSet<usize>,
        other: &IntGMorphism,
    ) -> Result<IntGMorphism> {
        if self.source_word.len() + other.source_word.len() > netop_core::MAX_ARITY {
            return Err(Error::BoundaryMismatch(format!(
                "combined catalyst word exceeds {} tokens",
                netop_core::MAX_ARITY
            )));
        }
        let mut source_word = self.source_word.clone();
        source_word.extend(&other.source_word);
        let mut target_word = self.target_word.clone();
        target_word.extend(&other.target_word);
        IntGMorphism::new(
            net,
            chosen,
            source_word,
            target_word,
            self.sigma.block_sum(&other.sigma),
            self.execution.tensor(&other.execution)?,
        )
    }
}
