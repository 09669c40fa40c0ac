//! Combinatorial indexing for wedge bases.
//!
//! Canonical bases of exterior powers are enumerated as strictly increasing
//! index tuples in lexicographic order. The order is stable and is the
//! column/row order of every assembled matrix in the crate.

use itertools::Itertools;

/// Enumerates canonical pairs `(i, j)` with `i < j`, canonical triples, and
/// general strictly increasing `m`-tuples over a basis of the given
/// dimension, together with permutation signs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisIndexer {
    dim: usize,
}

impl BasisIndexer {
    pub fn new(dim: usize) -> Self {
        BasisIndexer { dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Lexicographically ordered canonical pairs.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.dim).tuple_combinations().collect()
    }

    /// Position of the canonical pair `(i, j)`, `i < j`, in [`pairs`](Self::pairs).
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.dim);
        // pairs (0,1)..(0,n-1) come first, then (1,2).., so offset by the
        // full blocks of smaller first components.
        let full: usize = (0..i).map(|a| self.dim - 1 - a).sum();
        full + (j - i - 1)
    }

    pub fn pair_count(&self) -> usize {
        self.dim * self.dim.saturating_sub(1) / 2
    }

    /// Lexicographically ordered canonical triples.
    pub fn triples(&self) -> Vec<[usize; 3]> {
        (0..self.dim)
            .tuple_combinations()
            .map(|(i, j, k)| [i, j, k])
            .collect()
    }

    pub fn triple_count(&self) -> usize {
        binomial(self.dim, 3)
    }

    /// Strictly increasing `m`-tuples in lexicographic order.
    pub fn tuples(&self, m: usize) -> Vec<Vec<usize>> {
        (0..self.dim).combinations(m).collect()
    }

    pub fn tuple_count(&self, m: usize) -> usize {
        binomial(self.dim, m)
    }

    /// Lexicographic rank of a strictly increasing tuple among all
    /// `m`-combinations of the basis.
    pub fn tuple_index(&self, tuple: &[usize]) -> usize {
        let m = tuple.len();
        let mut rank = 0usize;
        let mut prev: isize = -1;
        for (pos, &t) in tuple.iter().enumerate() {
            for v in (prev + 1) as usize..t {
                rank += binomial(self.dim - 1 - v, m - 1 - pos);
            }
            prev = t as isize;
        }
        rank
    }
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out = 1usize;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// Sorts an index tuple, returning the sorted tuple and the sign of the
/// sorting permutation, or `None` when an index repeats.
pub fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, i8)> {
    let mut v = indices.to_vec();
    let mut sign = 1i8;
    // insertion sort, counting swaps; tuples are tiny
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_enumeration_is_lex_and_indexable() {
        let ix = BasisIndexer::new(4);
        let pairs = ix.pairs();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(pairs.len(), ix.pair_count());
        for (pos, &(i, j)) in pairs.iter().enumerate() {
            assert_eq!(ix.pair_index(i, j), pos);
        }
    }

    #[test]
    fn tuple_index_matches_enumeration() {
        let ix = BasisIndexer::new(6);
        for m in 1..=4 {
            let tuples = ix.tuples(m);
            assert_eq!(tuples.len(), ix.tuple_count(m));
            for (pos, t) in tuples.iter().enumerate() {
                assert_eq!(ix.tuple_index(t), pos, "tuple {:?}", t);
            }
        }
    }

    #[test]
    fn signs() {
        assert_eq!(sort_with_sign(&[0, 1, 2]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_with_sign(&[1, 0, 2]), Some((vec![0, 1, 2], -1)));
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_with_sign(&[2, 1, 0]), Some((vec![0, 1, 2], -1)));
        assert_eq!(sort_with_sign(&[1, 1, 2]), None);
    }

    #[test]
    fn binomial_table() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(3, 3), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
