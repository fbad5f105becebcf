//! Petri nets, markings, and firing semantics.
//!
//! A net is a finite set of species, a finite set of transitions, and per
//! transition a source and target multiset of species. A marking is a
//! multiset of tokens; a transition is enabled when its source fits under
//! the marking, and firing replaces the source by the target.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A multiset over the species of a fixed net, as dense coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Marking {
    coeffs: Vec<u64>,
}

impl std::fmt::Debug for Marking {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Marking{:?}", self.coeffs)
    }
}

impl Marking {
    pub fn zero(species_count: usize) -> Marking {
        Marking {
            coeffs: vec![0; species_count],
        }
    }

    pub fn from_coeffs(coeffs: Vec<u64>) -> Marking {
        Marking { coeffs }
    }

    pub fn coeff(&self, species: usize) -> u64 {
        self.coeffs[species]
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn species_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    fn check_len(&self, other: &Marking) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::SpeciesMismatch(format!(
                "markings over {} and {} species",
                self.coeffs.len(),
                other.coeffs.len()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Marking) -> Result<Marking> {
        self.check_len(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Marking { coeffs })
    }

    /// Componentwise subtraction; errors if any coefficient would go
    /// negative.
    pub fn sub(&self, other: &Marking) -> Result<Marking> {
        self.check_len(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| {
                a.checked_sub(b)
                    .ok_or_else(|| Error::NotEnabled(format!("cannot remove {b} tokens from {a}")))
            })
            .collect::<Result<_>>()?;
        Ok(Marking { coeffs })
    }

    /// Componentwise order: `self ≤ other`.
    pub fn leq(&self, other: &Marking) -> bool {
        self.coeffs.len() == other.coeffs.len()
            && self.coeffs.iter().zip(&other.coeffs).all(|(&a, &b)| a <= b)
    }

    /// Restriction to a subset of species.
    pub fn project(&self, keep: &BTreeSet<usize>) -> Vec<(usize, u64)> {
        keep.iter()
            .map(|&s| (s, self.coeffs.get(s).copied().unwrap_or(0)))
            .collect()
    }
}

/// A transition: a name plus source and target multisets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transition {
    pub name: String,
    pub source: Marking,
    pub target: Marking,
}

/// A Petri net with ordered species and transitions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PetriNet {
    species: Vec<String>,
    transitions: Vec<Transition>,
}

impl PetriNet {
    pub fn new(species: Vec<String>, transitions: Vec<Transition>) -> Result<PetriNet> {
        let mut seen = BTreeSet::new();
        for s in &species {
            if !seen.insert(s.clone()) {
                return Err(Error::Parse(format!("duplicate species {s}")));
            }
        }
        let mut names = BTreeSet::new();
        for t in &transitions {
            if !names.insert(t.name.clone()) {
                return Err(Error::Parse(format!("duplicate transition {}", t.name)));
            }
            if t.source.species_count() != species.len()
                || t.target.species_count() != species.len()
            {
                return Err(Error::SpeciesMismatch(format!(
                    "transition {} uses a different species count",
                    t.name
                )));
            }
        }
        Ok(PetriNet {
            species,
            transitions,
        })
    }

    pub fn species(&self) -> &[String] {
        &self.species
    }

    pub fn species_count(&self) -> usize {
        self.species.len()
    }

    pub fn species_index(&self, name: &str) -> Option<usize> {
        self.species.iter().position(|s| s == name)
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn transition_index(&self, name: &str) -> Option<usize> {
        self.transitions.iter().position(|t| t.name == name)
    }

    pub fn transition(&self, idx: usize) -> &Transition {
        &self.transitions[idx]
    }

    /// Transitions enabled at a marking: those whose source fits under it.
    pub fn enabled(&self, marking: &Marking) -> Vec<usize> {
        self.transitions
            .iter()
            .enumerate()
            .filter(|(_, t)| t.source.leq(marking))
            .map(|(i, _)| i)
            .collect()
    }

    /// Fires a transition: `m − source + target`. Errors when not enabled.
    pub fn fire(&self, marking: &Marking, transition: usize) -> Result<Marking> {
        let t = self
            .transitions
            .get(transition)
            .ok_or_else(|| Error::Parse(format!("no transition with index {transition}")))?;
        if !t.source.leq(marking) {
            return Err(Error::NotEnabled(format!(
                "{} is not enabled at {marking:?}",
                t.name
            )));
        }
        marking.sub(&t.source)?.add(&t.target)
    }

    /// Breadth-first closure under firing, up to `depth` steps, capped at
    /// `node_cap` distinct markings.
    pub fn reachable(
        &self,
        start: &Marking,
        depth: usize,
        node_cap: usize,
    ) -> Result<BTreeSet<Marking>> {
        let mut seen = BTreeSet::new();
        seen.insert(start.clone());
        let mut frontier = vec![start.clone()];
        for _ in 0..depth {
            let mut next = Vec::new();
            for marking in &frontier {
                for t in self.enabled(marking) {
                    let fired = self.fire(marking, t)?;
                    if seen.insert(fired.clone()) {
                        if seen.len() > node_cap {
                            return Err(Error::SizeCap(format!(
                                "reachability set exceeds {node_cap} markings"
                            )));
                        }
                        next.push(fired);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Ok(seen)
    }

    /// The catalysts: species whose coefficient is the same in the source
    /// and target of every transition. With no transitions every species is
    /// a catalyst.
    pub fn catalysts(&self) -> BTreeSet<usize> {
        (0..self.species.len())
            .filter(|&s| {
                self.transitions
                    .iter()
                    .all(|t| t.source.coeff(s) == t.target.coeff(s))
            })
            .collect()
    }

    /// Projects a marking onto a chosen catalyst subset. Errors if the
    /// subset contains a non-catalyst.
    pub fn grade(&self, chosen: &BTreeSet<usize>, marking: &Marking) -> Result<CatalystGrade> {
        let catalysts = self.catalysts();
        for &s in chosen {
            if !catalysts.contains(&s) {
                let name = self
                    .species
                    .get(s)
                    .map(|n| n.as_str())
                    .unwrap_or("<out of range>");
                return Err(Error::NotACatalyst(name.to_string()));
            }
        }
        Ok(CatalystGrade {
            coeffs: marking.project(chosen),
        })
    }

    /// Parses the marking syntax `2a + b`, `a+b+c`, or `0`.
    pub fn parse_marking(&self, text: &str) -> Result<Marking> {
        let mut marking = Marking::zero(self.species.len());
        let trimmed = text.trim();
        if trimmed == "0" || trimmed.is_empty() {
            return Ok(marking);
        }
        for term in trimmed.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in marking {text:?}")));
            }
            let split = term
                .find(|c: char| !c.is_ascii_digit())
                .ok_or_else(|| Error::Parse(format!("term {term:?} has no species name")))?;
            let (count_text, name) = term.split_at(split);
            let count: u64 = if count_text.is_empty() {
                1
            } else {
                count_text
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?
            };
            let name = name.trim();
            let idx = self
                .species_index(name)
                .ok_or_else(|| Error::Parse(format!("unknown species {name:?}")))?;
            marking.coeffs[idx] = marking.coeffs[idx]
                .checked_add(count)
                .ok_or(Error::Overflow)?;
        }
        Ok(marking)
    }

    /// Renders a marking as `2a + b` (or `0`).
    pub fn marking_to_text(&self, marking: &Marking) -> String {
        let terms: Vec<String> = marking
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(s, &c)| {
                if c == 1 {
                    self.species[s].clone()
                } else {
                    format!("{c}{}", self.species[s])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// The restriction of a marking to a catalyst subset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalystGrade {
    coeffs: Vec<(usize, u64)>,
}

impl CatalystGrade {
    pub fn coeffs(&self) -> &[(usize, u64)] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&(_, c)| c == 0)
    }

    /// Grades over the same subset add componentwise.
    pub fn add(&self, other: &CatalystGrade) -> Result<CatalystGrade> {
        if self.coeffs.len() != other.coeffs.len()
            || self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .any(|(&(s, _), &(t, _))| s != t)
        {
            return Err(Error::SpeciesMismatch(
                "grades over different catalyst subsets".into(),
            ));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&(s, a), &(_, b))| Ok((s, a.checked_add(b).ok_or(Error::Overflow)?)))
            .collect::<Result<_>>()?;
        Ok(CatalystGrade { coeffs })
    }
}

/// Parses the `.petri` text format: one transition per line,
/// `tau1: a + 2c -> a + 2d`, species inferred in order of first appearance.
/// An optional `catalysts: a b` line declares (and verifies) a catalyst
/// subset. `#` starts a comment.
pub fn parse_petri(text: &str) -> Result<(PetriNet, Option<BTreeSet<usize>>)> {
    struct RawTransition {
        name: String,
        source: Vec<(String, u64)>,
        target: Vec<(String, u64)>,
    }

    fn parse_side(text: &str) -> Result<Vec<(String, u64)>> {
        let trimmed = text.trim();
        if trimmed == "0" || trimmed.is_empty() {
            return Ok(Vec::new());
        }
        trimmed
            .split('+')
            .map(|term| {
                let term = term.trim();
                let split = term
                    .find(|c: char| !c.is_ascii_digit())
                    .ok_or_else(|| Error::Parse(format!("term {term:?} has no species name")))?;
                let (count_text, name) = term.split_at(split);
                let count: u64 = if count_text.is_empty() {
                    1
                } else {
                    count_text
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?
                };
                let name = name.trim();
                if name.is_empty()
                    || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                    || name.chars().next().is_some_and(|c| c.is_ascii_digit())
                {
                    return Err(Error::Parse(format!("bad species name {name:?}")));
                }
                Ok((name.to_string(), count))
            })
            .collect()
    }

    let mut raw = Vec::new();
    let mut declared_catalysts: Option<Vec<String>> = None;
    for (line_no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (head, rest) = line.split_once(':').ok_or_else(|| {
            Error::Parse(format!("line {}: expected `name: src -> tgt`", line_no + 1))
        })?;
        let head = head.trim();
        if head == "catalysts" {
            declared_catalysts = Some(
                rest.split([',', ' '])
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(str::to_string)
                    .collect(),
            );
            continue;
        }
        let (src, tgt) = rest
            .split_once("->")
            .ok_or_else(|| Error::Parse(format!("line {}: missing `->`", line_no + 1)))?;
        raw.push(RawTransition {
            name: head.to_string(),
            source: parse_side(src)?,
            target: parse_side(tgt)?,
        });
    }

    // species in order of first appearance
    let mut species: Vec<String> = Vec::new();
    for t in &raw {
        for (name, _) in t.source.iter().chain(&t.target) {
            if !species.contains(name) {
                species.push(name.clone());
            }
        }
    }
    if let Some(decls) = &declared_catalysts {
        for name in decls {
            if !species.contains(name) {
                species.push(name.clone());
            }
        }
    }

    let to_marking = |side: &[(String, u64)], species: &[String]| -> Result<Marking> {
        let mut m = Marking::zero(species.len());
        for (name, count) in side {
            let idx = species
                .iter()
                .position(|s| s == name)
                .expect("collected above");
            m.coeffs[idx] = m.coeffs[idx].checked_add(*count).ok_or(Error::Overflow)?;
        }
        Ok(m)
    };

    let transitions = raw
        .iter()
        .map(|t| {
            Ok(Transition {
                name: t.name.clone(),
                source: to_marking(&t.source, &species)?,
                target: to_marking(&t.target, &species)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let net = PetriNet::new(species, transitions)?;

    let chosen = match declared_catalysts {
        None => None,
        Some(decls) => {
            let catalysts = net.catalysts();
            let mut set = BTreeSet::new();
            for name in decls {
                let idx = net
                    .species_index(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown species {name:?}")))?;
                if !catalysts.contains(&idx) {
                    return Err(Error::NotACatalyst(name));
                }
                set.insert(idx);
            }
            Some(set)
        }
    };
    Ok((net, chosen))
}

/// DOT rendering of the net as a bipartite graph: species as circles,
/// transitions as squares, arc multiplicities as edge labels.
pub fn net_to_dot(net: &PetriNet) -> String {
    let mut out = String::from("digraph petri {\n");
    for s in net.species() {
        out.push_str(&format!("  \"{s}\" [shape=circle];\n"));
    }
    for t in net.transitions() {
        out.push_str(&format!("  \"{}\" [shape=box];\n", t.name));
    }
    for t in net.transitions() {
        for (s, &c) in t.source.coeffs().iter().enumerate() {
            if c > 0 {
                let label = if c == 1 {
                    String::new()
                } else {
                    format!(" [label=\"{c}\"]")
                };
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\"{label};\n",
                    net.species()[s],
                    t.name
                ));
            }
        }
        for (s, &c) in t.target.coeffs().iter().enumerate() {
            if c > 0 {
                let label = if c == 1 {
                    String::new()
                } else {
                    format!(" [label=\"{c}\"]")
                };
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\"{label};\n",
                    t.name,
                    net.species()[s]
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of a reachability set as a graph of markings with firing
/// edges.
pub fn reachability_to_dot(net: &PetriNet, markings: &BTreeSet<Marking>) -> String {
    let mut out = String::from("digraph reach {\n");
    for m in markings {
        out.push_str(&format!("  \"{}\";\n", net.marking_to_text(m)));
    }
    for m in markings {
        for t in net.enabled(m) {
            if let Ok(next) = net.fire(m, t) {
                if markings.contains(&next) {
                    out.push_str(&format!(
                        "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                        net.marking_to_text(m),
                        net.marking_to_text(&next),
                        net.transition(t).name
                    ));
                }
            }
        }
    }
    out.push_str("}\n");
    out
}
