//! Finite permutations, block sums, block swaps, and the action on vertex
//! pairs.
//!
//! A [`Permutation`] is a bijection on `{1..n}` stored in one-line image form.
//! Internally positions are 0-indexed; everything that crosses an API boundary
//! (JSON, text, `Display`) is 1-indexed.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result, MAX_ARITY};

/// A bijection on `{1..n}` in one-line image form.
///
/// Permutations are immutable values: all operations return fresh
/// permutations, so they can be shared freely between threads and reused in
/// law checks without aliasing surprises.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// `image[j] = σ(j)`, 0-indexed.
    image: Vec<usize>,
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Permutation{:?}", self.image_one_indexed())
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}]",
            self.image_one_indexed()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl Permutation {
    /// The identity on `{1..n}`.
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_ARITY, "arity above supported maximum");
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation from a 1-indexed image sequence, validating that
    /// it is a bijection on `1..=n`.
    pub fn from_image_one_indexed(image: &[usize]) -> Result<Self> {
        let n = image.len();
        if n > MAX_ARITY {
            return Err(Error::ArityTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &v in image {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotABijection(image.to_vec(), n));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            image: image.iter().map(|&v| v - 1).collect(),
        })
    }

    /// Builds a permutation from a 0-indexed image sequence.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n > MAX_ARITY {
            return Err(Error::ArityTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                let one: Vec<usize> = image.iter().map(|&x| x + 1).collect();
                return Err(Error::NotABijection(one, n));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    /// The transposition `(i j)` on `{1..n}`, with `i`, `j` 1-indexed.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::SizeMismatch(format!(
                "transposition ({i} {j}) does not fit in S_{n}"
            )));
        }
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(i - 1, j - 1);
        Self::from_image(image)
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(j, &v)| j == v)
    }

    /// Applies the permutation to a 0-indexed point.
    pub fn apply(&self, j: usize) -> usize {
        self.image[j]
    }

    /// The 1-indexed image sequence, as used in JSON and documentation.
    pub fn image_one_indexed(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v + 1).collect()
    }

    /// `self ∘ other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch(format!(
                "cannot compose permutations of sizes {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(Permutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        })
    }

    pub fn invert(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for (j, &v) in self.image.iter().enumerate() {
            image[v] = j;
        }
        Permutation { image }
    }

    /// `σ + τ`: acts as `σ` on the first block and as a shifted `τ` on the
    /// second, so `(σ + τ)(j) = τ(j − m) + m` for `j > m`.
    pub fn block_sum(&self, other: &Permutation) -> Permutation {
        let m = self.len();
        let mut image = Vec::with_capacity(m + other.len());
        image.extend_from_slice(&self.image);
        image.extend(other.image.iter().map(|&v| v + m));
        assert!(image.len() <= MAX_ARITY, "arity above supported maximum");
        Permutation { image }
    }

    /// The block permutation `B_{m,n}` on `{1..m+n}` swapping the first `m`
    /// points with the last `n`.
    pub fn block_swap(m: usize, n: usize) -> Permutation {
        assert!(m + n <= MAX_ARITY, "arity above supported maximum");
        let image = (0..m + n)
            .map(|j| if j < m { j + n } else { j - m })
            .collect();
        Permutation { image }
    }

    /// Applies the vertex relabelling to an edge: `σ{x,y} = {σ(x), σ(y)}`.
    pub fn act_on_edge(&self, e: Edge) -> Result<Edge> {
        if e.hi() >= self.len() {
            return Err(Error::EdgeOutOfRange(e.lo() + 1, e.hi() + 1, self.len()));
        }
        Edge::new(self.apply(e.lo()), self.apply(e.hi()))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.image_one_indexed().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let image = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_image_one_indexed(&image).map_err(D::Error::custom)
    }
}

/// An unordered pair of distinct vertices, stored canonically with the
/// smaller endpoint first. Endpoints are 0-indexed internally.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    lo: usize,
    hi: usize,
}

impl std::fmt::Debug for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{}}}", self.lo + 1, self.hi + 1)
    }
}

impl Edge {
    /// Builds an edge from 0-indexed endpoints, restoring canonical order.
    pub fn new(i: usize, j: usize) -> Result<Edge> {
        if i == j {
            return Err(Error::LoopEdge(i + 1));
        }
        Ok(Edge {
            lo: i.min(j),
            hi: i.max(j),
        })
    }

    /// Builds an edge from 1-indexed endpoints.
    pub fn new_one_indexed(i: usize, j: usize) -> Result<Edge> {
        if i == 0 || j == 0 {
            return Err(Error::Parse("vertices are 1-indexed".into()));
        }
        Edge::new(i - 1, j - 1)
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    /// Both endpoints, 1-indexed.
    pub fn one_indexed(&self) -> (usize, usize) {
        (self.lo + 1, self.hi + 1)
    }

    pub fn within(&self, n: usize) -> bool {
        self.hi < n
    }

    /// Shifts both endpoints by `m`, for disjoint-union embeddings.
    pub fn shift(&self, m: usize) -> Edge {
        Edge {
            lo: self.lo + m,
            hi: self.hi + m,
        }
    }
}

/// All 2-element subsets of `{1..n}` in lexicographic order.
pub fn all_edges(n: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(Edge { lo: i, hi: j });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(image: &[usize]) -> Permutation {
        Permutation::from_image_one_indexed(image).unwrap()
    }

    #[test]
    fn compose_examples() {
        // an involution composes with itself to the identity
        assert_eq!(p(&[2, 1]).compose(&p(&[2, 1])).unwrap(), p(&[1, 2]));
        // pointwise evaluation
        assert_eq!(
            p(&[2, 3, 1]).compose(&p(&[3, 1, 2])).unwrap(),
            p(&[1, 2, 3])
        );
        // identity law
        let sigma = p(&[3, 1, 4, 2]);
        assert_eq!(Permutation::identity(4).compose(&sigma).unwrap(), sigma);
        assert_eq!(sigma.compose(&Permutation::identity(4)).unwrap(), sigma);
    }

    #[test]
    fn compose_size_mismatch() {
        assert!(p(&[2, 1]).compose(&p(&[1, 2, 3])).is_err());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(p(&[2, 3, 1]).invert(), p(&[3, 1, 2]));
        assert_eq!(Permutation::identity(5).invert(), Permutation::identity(5));
        assert_eq!(p(&[2, 1]).invert(), p(&[2, 1]));
        let sigma = p(&[4, 2, 1, 3]);
        assert!(sigma.compose(&sigma.invert()).unwrap().is_identity());
    }

    #[test]
    fn block_sum_examples() {
        assert_eq!(p(&[2, 1]).block_sum(&p(&[1])), p(&[2, 1, 3]));
        assert_eq!(
            Permutation::identity(3).block_sum(&Permutation::identity(2)),
            Permutation::identity(5)
        );
        assert_eq!(p(&[1]).block_sum(&p(&[2, 1])), p(&[1, 3, 2]));
    }

    #[test]
    fn block_swap_examples() {
        // B_{4,3} is the 7-cycle (1 4 7 3 6 2 5)
        assert_eq!(Permutation::block_swap(4, 3), p(&[4, 5, 6, 7, 1, 2, 3]));
        assert_eq!(Permutation::block_swap(0, 4), Permutation::identity(4));
        assert_eq!(Permutation::block_swap(1, 1), p(&[2, 1]));
    }

    #[test]
    fn block_swap_involution() {
        for m in 0..5 {
            for n in 0..5 {
                let b = Permutation::block_swap(m, n);
                let b_rev = Permutation::block_swap(n, m);
                assert!(b_rev.compose(&b).unwrap().is_identity(), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn act_on_edge_examples() {
        let e = |i, j| Edge::new_one_indexed(i, j).unwrap();
        assert_eq!(p(&[2, 1, 3]).act_on_edge(e(1, 3)).unwrap(), e(2, 3));
        assert_eq!(
            Permutation::identity(4).act_on_edge(e(2, 4)).unwrap(),
            e(2, 4)
        );
        // the set image can be fixed even when the points move
        assert_eq!(p(&[1, 3, 2]).act_on_edge(e(2, 3)).unwrap(), e(2, 3));
        assert!(p(&[2, 1]).act_on_edge(e(1, 3)).is_err());
    }

    #[test]
    fn rejects_non_bijections_and_oversize() {
        assert!(Permutation::from_image_one_indexed(&[1, 1]).is_err());
        assert!(Permutation::from_image_one_indexed(&[0, 1]).is_err());
        assert!(Permutation::from_image_one_indexed(&[3, 1]).is_err());
        let big: Vec<usize> = (1..=MAX_ARITY + 1).collect();
        assert!(matches!(
            Permutation::from_image_one_indexed(&big),
            Err(Error::ArityTooLarge(_))
        ));
    }

    #[test]
    fn json_round_trip_is_one_indexed() {
        let sigma = p(&[2, 3, 1]);
        let text = serde_json::to_string(&sigma).unwrap();
        assert_eq!(text, "[2,3,1]");
        let back: Permutation = serde_json::from_str(&text).unwrap();
        assert_eq!(back, sigma);
    }

    #[test]
    fn edges_enumerate_lexicographically() {
        let names: Vec<(usize, usize)> = all_edges(4).iter().map(|e| e.one_indexed()).collect();
        assert_eq!(names, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
    }
}
