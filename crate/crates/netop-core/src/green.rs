//! Graph products of monoids over a commutation graph, reduced expressions,
//! canonical normal forms for the word problem, Kneser graphs, and the free
//! varietal network models built from them.
//!
//! A [`GreenWord`] is a sequence of letters `(component, value)` over a
//! [`CommutationGraph`]: letters from components joined by an edge commute,
//! letters from the same component multiply in the component monoid, and unit
//! letters vanish. Two reduced words denote the same element exactly when
//! they differ by swaps of adjacent commuting letters, so equality is decided
//! by a canonical (greedy leftmost-minimal) representative.
//!
//! Instantiated over the Kneser graph `KG(n,2)` — whose vertices are the edge
//! slots of the complete graph on `n` and whose edges join disjoint slots —
//! the graph product becomes the fibre of the free network model on a monoid,
//! in a chosen variety ([`Variety::Mon`], [`Variety::CMon`], or
//! [`Variety::GMon`]).

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::monoid::{MonoidElement, MonoidSpec};
use crate::perm::Permutation;
use crate::{Error, Model, Network, Result, MAX_ARITY};

/// Word length cap; longer words would make oracle enumeration intractable.
pub const MAX_WORD_LEN: usize = 64;

/// Maximum `n` for Kneser-based models.
pub const MAX_KNESER_N: usize = 8;

/// A simple graph on component indices `0..n`; an edge means the two
/// components commute.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CommutationGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl CommutationGraph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<CommutationGraph> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u + 1));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::EdgeOutOfRange(u + 1, v + 1, vertex_count));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(CommutationGraph {
            vertex_count,
            edges: set,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == u || b == u)
            .count()
    }
}

/// One letter of a graph-product word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub component: usize,
    pub value: MonoidElement,
}

/// An element of a graph product of copies of one monoid, as a word of
/// letters. Unit letters are deleted on construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GreenWord {
    graph: Arc<CommutationGraph>,
    monoid: MonoidSpec,
    letters: Vec<Letter>,
}

impl std::fmt::Debug for GreenWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GreenWord[")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "c{}:{}", l.component + 1, l.value)?;
        }
        write!(f, "]")
    }
}

impl GreenWord {
    pub fn new(
        graph: Arc<CommutationGraph>,
        monoid: MonoidSpec,
        letters: Vec<Letter>,
    ) -> Result<GreenWord> {
        if letters.len() > MAX_WORD_LEN {
            return Err(Error::SizeMismatch(format!(
                "word length {} exceeds {MAX_WORD_LEN}",
                letters.len()
            )));
        }
        for l in &letters {
            if l.component >= graph.vertex_count() {
                return Err(Error::EdgeOutOfRange(
                    l.component + 1,
                    l.component + 1,
                    graph.vertex_count(),
                ));
            }
            if !monoid.contains(l.value) {
                return Err(Error::CarrierMismatch(format!(
                    "letter value {} is not in {}",
                    l.value,
                    monoid.name()
                )));
            }
        }
        let letters = letters
            .into_iter()
            .filter(|l| !monoid.is_unit(l.value))
            .collect();
        Ok(GreenWord {
            graph,
            monoid,
            letters,
        })
    }

    pub fn empty(graph: Arc<CommutationGraph>, monoid: MonoidSpec) -> GreenWord {
        GreenWord {
            graph,
            monoid,
            letters: Vec::new(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn graph(&self) -> &Arc<CommutationGraph> {
        &self.graph
    }

    pub fn monoid(&self) -> &MonoidSpec {
        &self.monoid
    }

    pub fn same_ambient(&self, other: &GreenWord) -> bool {
        *self.graph == *other.graph && self.monoid == other.monoid
    }

    fn check_ambient(&self, other: &GreenWord) -> Result<()> {
        if !self.same_ambient(other) {
            return Err(Error::AmbientMismatch(
                "words over different graphs or monoids".into(),
            ));
        }
        Ok(())
    }

    pub fn concat(&self, other: &GreenWord) -> Result<GreenWord> {
        self.check_ambient(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GreenWord::new(self.graph.clone(), self.monoid.clone(), letters)
    }

    fn with_letters(&self, letters: Vec<Letter>) -> GreenWord {
        GreenWord {
            graph: self.graph.clone(),
            monoid: self.monoid.clone(),
            letters,
        }
    }

    /// Finds a pair `(i, j)` of same-component letters that can be brought
    /// adjacent by shuffles: every letter strictly between commutes with the
    /// component.
    fn mergeable_pair(&self) -> Option<(usize, usize)> {
        for i in 0..self.letters.len() {
            let c = self.letters[i].component;
            for j in (i + 1)..self.letters.len() {
                if self.letters[j].component == c {
                    return Some((i, j));
                }
                if !self.graph.adjacent(self.letters[j].component, c) {
                    break;
                }
            }
        }
        None
    }

    /// Repeatedly merges shuffle-adjacent same-component letters (in the
    /// component monoid, left to right) and deletes units, until the word is
    /// reduced.
    pub fn reduce(&self) -> GreenWord {
        let mut letters = self.letters.clone();
        loop {
            let probe = self.with_letters(letters.clone());
            match probe.mergeable_pair() {
                None => return probe,
                Some((i, j)) => {
                    let merged = self
                        .monoid
                        .mul(letters[i].value, letters[j].value)
                        .expect("letters stay in the carrier");
                    letters.remove(j);
                    if self.monoid.is_unit(merged) {
                        letters.remove(i);
                    } else {
                        letters[i].value = merged;
                    }
                }
            }
        }
    }

    /// Whether the word is reduced: no unit letters and no mergeable pair.
    pub fn is_reduced(&self) -> bool {
        self.letters.iter().all(|l| !self.monoid.is_unit(l.value))
            && self.mergeable_pair().is_none()
    }

    /// The canonical normal form: the lexicographically least reduced word
    /// in the shuffle class, computed greedily by repeatedly emitting the
    /// least letter that shuffles can bring to the front. Two words denote
    /// the same graph-product element exactly when their normal forms agree.
    pub fn normal_form(&self) -> GreenWord {
        let reduced = self.reduce();
        let mut remaining = reduced.letters;
        let mut out = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let mut best: Option<usize> = None;
            'candidate: for (p, letter) in remaining.iter().enumerate() {
                for before in &remaining[..p] {
                    if !self.graph.adjacent(before.component, letter.component) {
                        continue 'candidate;
                    }
                }
                best = match best {
                    None => Some(p),
                    Some(q) if letter_key(letter) < letter_key(&remaining[q]) => Some(p),
                    other => other,
                };
            }
            let p = best.expect("the first letter is always front-movable");
            out.push(remaining.remove(p));
        }
        self.with_letters(out)
    }

    /// Equality in the graph product (all-monoids variety): canonical normal
    /// forms coincide.
    pub fn words_equal(&self, other: &GreenWord) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.normal_form().letters == other.normal_form().letters)
    }

    /// Normal form in the commutative-monoids variety: every pair of letters
    /// commutes, so letters sort by component and merge.
    pub fn cmon_normal_form(&self) -> Result<GreenWord> {
        if !self.monoid.is_commutative() {
            return Err(Error::VarietyMismatch(format!(
                "{} is not commutative",
                self.monoid.name()
            )));
        }
        let mut totals: std::collections::BTreeMap<usize, MonoidElement> = Default::default();
        for l in &self.letters {
            let entry = totals
                .entry(l.component)
                .or_insert_with(|| self.monoid.unit());
            *entry = self.monoid.mul(*entry, l.value)?;
        }
        let letters = totals
            .into_iter()
            .filter(|(_, v)| !self.monoid.is_unit(*v))
            .map(|(component, value)| Letter { component, value })
            .collect();
        Ok(self.with_letters(letters))
    }

    /// Normal form in the graphic-monoids variety. On top of reduction this
    /// deletes every letter absorbed by an earlier letter of the same
    /// component: in a graphic monoid `a·v·a = a·v` holds for all `v` with no
    /// commutation conditions, and more generally a later `(c, m)` vanishes
    /// after an earlier `(c, m′)` with `m′·m = m′`. Each rewrite strictly
    /// shortens the word, and the result is put in canonical order.
    pub fn graphic_normal_form(&self) -> Result<GreenWord> {
        let report = self.monoid.is_graphic(16);
        if !report.graphic {
            let (a, b) = report.witness.expect("failing check carries a witness");
            return Err(Error::VarietyMismatch(format!(
                "{} is not graphic: aba ≠ ab at a={a}, b={b}",
                self.monoid.name()
            )));
        }
        let mut word = self.reduce();
        'outer: loop {
            for j in 1..word.letters.len() {
                let later = word.letters[j];
                for i in 0..j {
                    let earlier = word.letters[i];
                    if earlier.component == later.component
                        && self.monoid.mul(earlier.value, later.value)? == earlier.value
                    {
                        let mut letters = word.letters.clone();
                        letters.remove(j);
                        word = self.with_letters(letters).reduce();
                        continue 'outer;
                    }
                }
            }
            break;
        }
        Ok(word.normal_form())
    }

    /// Normal form in a chosen variety.
    pub fn normal_form_in(&self, variety: Variety) -> Result<GreenWord> {
        match variety {
            Variety::Mon => Ok(self.normal_form()),
            Variety::CMon => self.cmon_normal_form(),
            Variety::GMon => self.graphic_normal_form(),
        }
    }
}

fn letter_key(l: &Letter) -> (usize, MonoidElement) {
    (l.component, l.value)
}

/// The varieties of monoids with implemented normal forms: all monoids,
/// commutative monoids, graphic monoids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variety {
    Mon,
    CMon,
    GMon,
}

impl std::fmt::Display for Variety {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variety::Mon => write!(f, "mon"),
            Variety::CMon => write!(f, "cmon"),
            Variety::GMon => write!(f, "gmon"),
        }
    }
}

/// The Kneser graph `KG(n,k)`: vertices are the `k`-subsets of `{1..n}` in
/// lexicographic order, edges join disjoint subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KneserSpec {
    n: usize,
    k: usize,
    vertices: Vec<Vec<usize>>,
}

impl KneserSpec {
    /// For `k > n` there are no `k`-subsets and the graph is empty.
    pub fn new(n: usize, k: usize) -> Result<KneserSpec> {
        if n > MAX_ARITY {
            return Err(Error::ArityTooLarge(n));
        }
        Ok(KneserSpec {
            n,
            k,
            vertices: k_subsets(n, k),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The `k`-subsets, 0-indexed and lexicographically ordered.
    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn vertex(&self, idx: usize) -> &[usize] {
        &self.vertices[idx]
    }

    pub fn vertex_index(&self, subset: &[usize]) -> Option<usize> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.k {
            return None;
        }
        self.vertices.binary_search(&sorted).ok()
    }

    /// The commutation graph: components commute exactly when their subsets
    /// are disjoint.
    pub fn graph(&self) -> CommutationGraph {
        let mut edges = Vec::new();
        for (i, u) in self.vertices.iter().enumerate() {
            for (j, v) in self.vertices.iter().enumerate().skip(i + 1) {
                if u.iter().all(|x| !v.contains(x)) {
                    edges.push((i, j));
                }
            }
        }
        CommutationGraph::new(self.vertices.len(), &edges).expect("indices in range")
    }

    /// The vertex map `KG(m,k) → KG(n,k)` induced by an injection, given as
    /// the 0-indexed image list of `{0..m-1}`. Preserves edges (disjoint
    /// subsets stay disjoint under injections).
    pub fn embed_from(&self, smaller: &KneserSpec, injection: &[usize]) -> Result<Vec<usize>> {
        if injection.len() != smaller.n {
            return Err(Error::SizeMismatch(format!(
                "injection lists {} images for n = {}",
                injection.len(),
                smaller.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &v in injection {
            if v >= self.n || seen[v] {
                return Err(Error::SizeMismatch(
                    "not an injection into the target".into(),
                ));
            }
            seen[v] = true;
        }
        if smaller.k != self.k {
            return Err(Error::SizeMismatch("subset sizes differ".into()));
        }
        smaller
            .vertices
            .iter()
            .map(|subset| {
                let image: Vec<usize> = subset.iter().map(|&x| injection[x]).collect();
                self.vertex_index(&image)
                    .ok_or_else(|| Error::SizeMismatch("image subset missing from target".into()))
            })
            .collect()
    }
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            rec(v + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Builds the Kneser graph `KG(n,k)` as a commutation graph.
pub fn kneser_graph(n: usize, k: usize) -> Result<CommutationGraph> {
    Ok(KneserSpec::new(n, k)?.graph())
}

/// The free varietal network model on a monoid: the fibre at `n` consists of
/// normal-form words over `KG(n,2)` with every component a copy of the
/// monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModel {
    monoid: MonoidSpec,
    variety: Variety,
}

impl FreeModel {
    pub fn new(monoid: MonoidSpec, variety: Variety) -> Result<FreeModel> {
        match variety {
            Variety::Mon => {}
            Variety::CMon => {
                if !monoid.is_commutative() {
                    return Err(Error::VarietyMismatch(format!(
                        "{} is not commutative",
                        monoid.name()
                    )));
                }
            }
            Variety::GMon => {
                let report = monoid.is_graphic(16);
                if !report.graphic {
                    return Err(Error::VarietyMismatch(format!(
                        "{} is not graphic",
                        monoid.name()
                    )));
                }
            }
        }
        Ok(FreeModel { monoid, variety })
    }

    pub fn monoid(&self) -> &MonoidSpec {
        &self.monoid
    }

    pub fn variety(&self) -> Variety {
        self.variety
    }

    pub fn name(&self) -> String {
        format!("Γ[{},{}]", self.monoid.name(), self.variety)
    }

    fn check_kneser_arity(&self, n: usize) -> Result<()> {
        if n > MAX_KNESER_N {
            return Err(Error::ArityTooLarge(n));
        }
        Ok(())
    }

    pub fn kneser(&self, n: usize) -> Result<KneserSpec> {
        self.check_kneser_arity(n)?;
        KneserSpec::new(n, 2)
    }

    pub fn empty(&self, n: usize) -> Result<GreenWord> {
        let graph = Arc::new(self.kneser(n)?.graph());
        Ok(GreenWord::empty(graph, self.monoid.clone()))
    }

    /// Builds a fibre element from `(edge pair, value)` letters, 1-indexed
    /// endpoints, normalized for the variety.
    pub fn word(&self, n: usize, letters: &[(usize, usize, MonoidElement)]) -> Result<GreenWord> {
        let kneser = self.kneser(n)?;
        let graph = Arc::new(kneser.graph());
        let letters = letters
            .iter()
            .map(|&(i, j, value)| {
                if i == 0 || j == 0 || i > n || j > n {
                    return Err(Error::EdgeOutOfRange(i, j, n));
                }
                if i == j {
                    return Err(Error::LoopEdge(i));
                }
                let component = kneser
                    .vertex_index(&[i - 1, j - 1])
                    .expect("2-subsets of n are vertices");
                Ok(Letter { component, value })
            })
            .collect::<Result<Vec<Letter>>>()?;
        let raw = GreenWord::new(graph, self.monoid.clone(), letters)?;
        raw.normal_form_in(self.variety)
    }

    /// Overlay: concatenate and normalize.
    pub fn overlay(&self, a: &GreenWord, b: &GreenWord) -> Result<GreenWord> {
        a.concat(b)?.normal_form_in(self.variety)
    }

    /// Disjoint union: embed the component indices of both sides into
    /// `KG(m+n,2)` (the right side shifted by `m`) and concatenate.
    pub fn disjoint_union(
        &self,
        a: &GreenWord,
        m: usize,
        b: &GreenWord,
        n: usize,
    ) -> Result<GreenWord> {
        let small_a = self.kneser(m)?;
        let small_b = self.kneser(n)?;
        let big = self.kneser(m + n)?;
        let graph = Arc::new(big.graph());
        let map_a = big.embed_from(&small_a, &(0..m).collect::<Vec<_>>())?;
        let map_b = big.embed_from(&small_b, &(m..m + n).collect::<Vec<_>>())?;
        let mut letters = Vec::with_capacity(a.len() + b.len());
        for l in a.letters() {
            letters.push(Letter {
                component: map_a[l.component],
                value: l.value,
            });
        }
        for l in b.letters() {
            letters.push(Letter {
                component: map_b[l.component],
                value: l.value,
            });
        }
        GreenWord::new(graph, self.monoid.clone(), letters)?.normal_form_in(self.variety)
    }

    /// The symmetric-group action: relabel each component's vertex pair.
    pub fn act(&self, sigma: &Permutation, w: &GreenWord, n: usize) -> Result<GreenWord> {
        let kneser = self.kneser(n)?;
        if sigma.len() != n {
            return Err(Error::ArityMismatch(format!(
                "permutation on {} acting on a word over KG({n},2)",
                sigma.len()
            )));
        }
        let letters = w
            .letters()
            .iter()
            .map(|l| {
                let pair = kneser.vertex(l.component);
                let image = [sigma.apply(pair[0]), sigma.apply(pair[1])];
                let component = kneser
                    .vertex_index(&image)
                    .expect("images of 2-subsets are 2-subsets");
                Letter {
                    component,
                    value: l.value,
                }
            })
            .collect();
        GreenWord::new(w.graph().clone(), self.monoid.clone(), letters)?
            .normal_form_in(self.variety)
    }

    /// Random fibre element (short words, small values), normalized.
    pub fn sample<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<GreenWord> {
        let kneser = self.kneser(n)?;
        let components = kneser.vertices().len();
        let graph = Arc::new(kneser.graph());
        if components == 0 {
            return Ok(GreenWord::empty(graph, self.monoid.clone()));
        }
        let len = rng.random_range(0..=4);
        let letters = (0..len)
            .map(|_| Letter {
                component: rng.random_range(0..components),
                value: self.monoid.sample(rng, 2),
            })
            .collect();
        GreenWord::new(graph, self.monoid.clone(), letters)?.normal_form_in(self.variety)
    }

    /// Equality of fibre elements in this variety.
    pub fn words_equal(&self, a: &GreenWord, b: &GreenWord) -> Result<bool> {
        if !a.same_ambient(b) {
            return Err(Error::AmbientMismatch(
                "fibre elements over different data".into(),
            ));
        }
        Ok(self.normal(a)?.letters() == self.normal(b)?.letters())
    }

    fn normal(&self, w: &GreenWord) -> Result<GreenWord> {
        w.normal_form_in(self.variety)
    }
}

/// Interprets a word over `KG(n,2)` in a network model whose fibre at 2 is
/// the word's component monoid: each letter becomes a one-edge network at its
/// vertex pair, and the letters are overlaid in word order.
pub fn evaluate_word(word: &GreenWord, model: &Model, n: usize) -> Result<Network> {
    let kneser = KneserSpec::new(n, 2)?;
    if kneser.vertices().len() != word.graph().vertex_count() {
        return Err(Error::AmbientMismatch(format!(
            "word has {} components, KG({n},2) has {}",
            word.graph().vertex_count(),
            kneser.vertices().len()
        )));
    }
    let expected = match model {
        Model::Sg => MonoidSpec::BoolOr,
        other => other.label_monoid().ok_or_else(|| {
            Error::ModelMismatch(format!(
                "{other} has no single-edge monoid to evaluate into"
            ))
        })?,
    };
    if *word.monoid() != expected {
        return Err(Error::CarrierMismatch(format!(
            "word monoid {} does not match the model's edge monoid {}",
            word.monoid().name(),
            expected.name()
        )));
    }
    let mut acc = Network::empty(model.clone(), n)?;
    for l in word.letters() {
        let pair = kneser.vertex(l.component);
        let (i, j) = (pair[0] + 1, pair[1] + 1);
        let one_edge = match model {
            Model::Sg => Network::simple_graph(n, &[(i, j)])?,
            _ => Network::labelled(model.clone(), n, &[(i, j, l.value)])?,
        };
        acc = acc.overlay(&one_edge)?;
    }
    Ok(acc)
}

/// Parses the text syntax for words: letters separated by whitespace, each
/// `e<i><j>` naming a vertex pair (single digits, 1-indexed) with an optional
/// `:value` suffix, or `c<idx>` naming a component directly. For Boolean
/// components the default value is `T`; for numeric ones it is `1`.
pub fn parse_word(
    text: &str,
    graph: Arc<CommutationGraph>,
    kneser: Option<&KneserSpec>,
    monoid: &MonoidSpec,
) -> Result<GreenWord> {
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        let (head, value_text) = match token.split_once(':') {
            Some((h, v)) => (h, Some(v)),
            None => (token, None),
        };
        let component = if let Some(rest) = head.strip_prefix('e') {
            let kneser = kneser.ok_or_else(|| {
                Error::Parse("edge-pair letters need a Kneser commutation graph".into())
            })?;
            let digits: Vec<usize> = rest
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad letter {token}")))
                })
                .collect::<Result<_>>()?;
            if digits.len() != 2 || digits.contains(&0) {
                return Err(Error::Parse(format!(
                    "letter {token} must name two 1-indexed vertices"
                )));
            }
            kneser
                .vertex_index(&[digits[0] - 1, digits[1] - 1])
                .ok_or_else(|| Error::Parse(format!("pair in {token} is out of range")))?
        } else if let Some(rest) = head.strip_prefix('c') {
            let idx: usize = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad component letter {token}")))?;
            if idx == 0 {
                return Err(Error::Parse("components are 1-indexed".into()));
            }
            idx - 1
        } else {
            return Err(Error::Parse(format!("unrecognized letter {token}")));
        };
        let value = match value_text {
            None => match monoid {
                MonoidSpec::BoolOr => MonoidElement::Bool(true),
                _ => MonoidElement::Nat(1),
            },
            Some("T") => MonoidElement::Bool(true),
            Some("F") => MonoidElement::Bool(false),
            Some(num) => MonoidElement::Nat(
                num.parse()
                    .map_err(|_| Error::Parse(format!("bad value in {token}")))?,
            ),
        };
        letters.push(Letter { component, value });
    }
    GreenWord::new(graph, monoid.clone(), letters)
}

/// Renders a word in the text syntax, using edge-pair names when a Kneser
/// spec is supplied.
pub fn word_to_text(word: &GreenWord, kneser: Option<&KneserSpec>) -> String {
    word.letters()
        .iter()
        .map(|l| {
            let name = match kneser {
                Some(k) => {
                    let pair = k.vertex(l.component);
                    format!("e{}{}", pair[0] + 1, pair[1] + 1)
                }
                None => format!("c{}", l.component + 1),
            };
            let default = match word.monoid() {
                MonoidSpec::BoolOr => MonoidElement::Bool(true),
                _ => MonoidElement::Nat(1),
            };
            if l.value == default {
                name
            } else {
                format!("{name}:{}", l.value)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub mod oracle {
    //! Brute-force word-problem oracle, independent of the normal-form code:
    //! the closure of a word under adjacent commuting swaps, in-component
    //! merges of adjacent letters, and unit deletions. All moves preserve or
    //! shorten length, so the closure is finite.

    use std::collections::BTreeSet;

    use super::{GreenWord, Letter};
    use crate::{Error, Result};

    fn neighbors(word: &GreenWord) -> Result<Vec<Vec<Letter>>> {
        let letters = word.letters();
        let mut out = Vec::new();
        for i in 0..letters.len() {
            if letters.len() > 1 && i + 1 < letters.len() {
                let (a, b) = (letters[i], letters[i + 1]);
                if word.graph().adjacent(a.component, b.component) {
                    let mut swapped = letters.to_vec();
                    swapped.swap(i, i + 1);
                    out.push(swapped);
                }
                if a.component == b.component {
                    let merged = word.monoid().mul(a.value, b.value)?;
                    let mut shorter = letters.to_vec();
                    shorter.remove(i + 1);
                    if word.monoid().is_unit(merged) {
                        shorter.remove(i);
                    } else {
                        shorter[i].value = merged;
                    }
                    out.push(shorter);
                }
            }
            if word.monoid().is_unit(letters[i].value) {
                let mut shorter = letters.to_vec();
                shorter.remove(i);
                out.push(shorter);
            }
        }
        Ok(out)
    }

    /// The full closure of `word` under the moves above, capped at `limit`
    /// states.
    pub fn shuffle_class(word: &GreenWord, limit: usize) -> Result<BTreeSet<Vec<Letter>>> {
        let mut seen: BTreeSet<Vec<Letter>> = BTreeSet::new();
        let mut frontier = vec![word.letters().to_vec()];
        seen.insert(word.letters().to_vec());
        while let Some(current) = frontier.pop() {
            if seen.len() > limit {
                return Err(Error::SizeMismatch(format!(
                    "shuffle class exceeds {limit} states"
                )));
            }
            let probe =
                GreenWord::new(word.graph().clone(), word.monoid().clone(), current.clone())?;
            for next in neighbors(&probe)? {
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        Ok(seen)
    }

    /// Brute-force equality: the closures intersect. (Each closure contains
    /// the full set of reduced representatives of its element, so two equal
    /// words always share one.)
    pub fn words_equal(a: &GreenWord, b: &GreenWord, limit: usize) -> Result<bool> {
        if !a.same_ambient(b) {
            return Err(Error::AmbientMismatch(
                "oracle over different ambient data".into(),
            ));
        }
        let class_a = shuffle_class(a, limit)?;
        if class_a.contains(b.letters()) {
            return Ok(true);
        }
        let class_b = shuffle_class(b, limit)?;
        Ok(class_a.intersection(&class_b).next().is_some())
    }
}
