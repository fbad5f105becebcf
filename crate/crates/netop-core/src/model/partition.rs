//! Set partitions of `{1..n}` and their lattice operations.

use serde::{Deserialize, Serialize};

use crate::{Error, Permutation, Result};

/// A set partition of `{1..n}`, stored canonically: `class[i]` is the block
/// index of element `i`, and blocks are numbered by first occurrence, so
/// structural equality is partition equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    class: Vec<usize>,
}

impl std::fmt::Debug for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let blocks: Vec<Vec<usize>> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&i| i + 1).collect())
            .collect();
        write!(f, "{blocks:?}")
    }
}

fn canonicalize(class: &mut [usize]) {
    let mut remap: Vec<Option<usize>> = vec![None; class.len() + 1];
    let mut next = 0;
    for c in class.iter_mut() {
        let id = match remap[*c] {
            Some(id) => id,
            None => {
                let id = next;
                remap[*c] = Some(id);
                next += 1;
                id
            }
        };
        *c = id;
    }
}

impl Partition {
    /// The finest partition: every element is its own block.
    pub fn discrete(n: usize) -> Partition {
        Partition {
            class: (0..n).collect(),
        }
    }

    /// The coarsest partition: a single block (empty when `n = 0`).
    pub fn indiscrete(n: usize) -> Partition {
        Partition { class: vec![0; n] }
    }

    /// Builds a partition from blocks of 0-indexed elements, which must
    /// partition `{0..n-1}` exactly.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Partition> {
        let mut class = vec![usize::MAX; n];
        for (id, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Parse("empty block in partition".into()));
            }
            for &i in block {
                if i >= n {
                    return Err(Error::Parse(format!("element {} outside 1..={n}", i + 1)));
                }
                if class[i] != usize::MAX {
                    return Err(Error::Parse(format!(
                        "element {} occurs in two blocks",
                        i + 1
                    )));
                }
                class[i] = id;
            }
        }
        if class.contains(&usize::MAX) {
            return Err(Error::Parse("blocks do not cover 1..=n".into()));
        }
        canonicalize(&mut class);
        Ok(Partition { class })
    }

    pub fn len(&self) -> usize {
        self.class.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.class.iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn is_indiscrete(&self) -> bool {
        self.block_count() <= 1
    }

    pub fn is_discrete(&self) -> bool {
        self.block_count() == self.len()
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.class[i] == self.class[j]
    }

    /// Blocks as sorted lists of 0-indexed elements, ordered by smallest
    /// element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); self.block_count()];
        for (i, &c) in self.class.iter().enumerate() {
            blocks[c].push(i);
        }
        blocks.sort_by_key(|b| b[0]);
        blocks
    }

    /// Lattice join in the refinement order: the transitive closure of the
    /// union of the two equivalence relations.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        self.check_len(other)?;
        let mut uf = UnionFind::new(self.len());
        for p in [self, other] {
            let mut first: Vec<Option<usize>> = vec![None; p.len()];
            for (i, &c) in p.class.iter().enumerate() {
                match first[c] {
                    None => first[c] = Some(i),
                    Some(root) => uf.union(root, i),
                }
            }
        }
        let mut class: Vec<usize> = (0..self.len()).map(|i| uf.find(i)).collect();
        canonicalize(&mut class);
        Ok(Partition { class })
    }

    /// Lattice meet: blockwise intersection of the two relations.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        self.check_len(other)?;
        let mut ids: std::collections::BTreeMap<(usize, usize), usize> = Default::default();
        let mut class = Vec::with_capacity(self.len());
        for i in 0..self.len() {
            let key = (self.class[i], other.class[i]);
            let next = ids.len();
            class.push(*ids.entry(key).or_insert(next));
        }
        canonicalize(&mut class);
        Ok(Partition { class })
    }

    /// Places two partitions side by side with no cross relations.
    pub fn side_by_side(&self, other: &Partition) -> Partition {
        let shift = self.block_count();
        let mut class = self.class.clone();
        class.extend(other.class.iter().map(|&c| c + shift));
        canonicalize(&mut class);
        Partition { class }
    }

    /// Vertex relabelling: `i ~ j` in the result iff `σ⁻¹(i) ~ σ⁻¹(j)` here.
    pub fn act(&self, sigma: &Permutation) -> Result<Partition> {
        if sigma.len() != self.len() {
            return Err(Error::ArityMismatch(format!(
                "permutation on {} applied to partition of {}",
                sigma.len(),
                self.len()
            )));
        }
        let mut class = vec![0; self.len()];
        for i in 0..self.len() {
            class[sigma.apply(i)] = self.class[i];
        }
        canonicalize(&mut class);
        Ok(Partition { class })
    }

    fn check_len(&self, other: &Partition) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::ArityMismatch(format!(
                "partitions of {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(())
    }

    /// All partitions of `{1..n}` (restricted growth strings).
    pub fn enumerate(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut class = vec![0usize; n];
        fn rec(class: &mut Vec<usize>, pos: usize, max_used: usize, out: &mut Vec<Partition>) {
            if pos == class.len() {
                out.push(Partition {
                    class: class.clone(),
                });
                return;
            }
            for c in 0..=max_used + 1 {
                class[pos] = c;
                rec(class, pos + 1, max_used.max(c), out);
            }
        }
        if n == 0 {
            return vec![Partition { class: vec![] }];
        }
        rec(&mut class, 1, 0, &mut out);
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            self.parent[ri.max(rj)] = ri.min(rj);
        }
    }
}
