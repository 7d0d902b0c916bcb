//! Linear partitions: segmentations of a totally ordered set into consecutive
//! blocks, recorded by their block sizes (the equivalence "type").

use serde::{Deserialize, Serialize};

use crate::error::PlanarError;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LinearPartition(Vec<usize>);

impl LinearPartition {
    pub fn new(block_sizes: Vec<usize>) -> Result<Self, PlanarError> {
        if block_sizes.iter().any(|&s| s == 0) {
            return Err(PlanarError::InconsistentInput("zero-size block".into()));
        }
        Ok(LinearPartition(block_sizes))
    }

    /// Partition with no blocks, of the empty set.
    pub fn empty() -> Self {
        LinearPartition(Vec::new())
    }

    /// One block covering everything (empty when n = 0).
    pub fn trivial(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            LinearPartition(vec![n])
        }
    }

    /// Every block a singleton.
    pub fn finest(n: usize) -> Self {
        LinearPartition(vec![1; n])
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    /// Number of blocks, |P|.
    pub fn card(&self) -> usize {
        self.0.len()
    }

    /// Number of underlying elements, ||P||.
    pub fn len(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn is_finest(&self) -> bool {
        self.0.iter().all(|&s| s == 1)
    }

    /// Product: concatenation of the block sequences.
    pub fn product(&self, other: &LinearPartition) -> LinearPartition {
        LinearPartition(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    /// Composition P ◁ Q: regroup the blocks of Q into |P| super-blocks, the
    /// i-th spanning P's i-th size many Q-blocks. Requires ||P|| = |Q|.
    pub fn compose(&self, q: &LinearPartition) -> Result<LinearPartition, PlanarError> {
        if self.len() != q.card() {
            return Err(PlanarError::LengthMismatch { expected: self.len(), got: q.card() });
        }
        let mut out = Vec::with_capacity(self.card());
        let mut pos = 0;
        for &group in &self.0 {
            out.push(q.0[pos..pos + group].iter().sum());
            pos += group;
        }
        Ok(LinearPartition(out))
    }

    /// Block index of the k-th element (0-based both ways).
    pub fn block_of(&self, k: usize) -> usize {
        let mut acc = 0;
        for (i, &s) in self.0.iter().enumerate() {
            acc += s;
            if k < acc {
                return i;
            }
        }
        panic!("element index {k} out of range");
    }

    /// Consecutive index ranges of the blocks.
    pub fn ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut pos = 0;
        for &s in &self.0 {
            out.push(pos..pos + s);
            pos += s;
        }
        out
    }
}

/// Equivalence of linear partitions is equality of size sequences, which is
/// plain equality in this representation.
pub fn partition_equiv(p: &LinearPartition, q: &LinearPartition) -> bool {
    p == q
}

/// All linear partitions of an n-element linear set.
pub fn all_partitions(n: usize) -> Vec<LinearPartition> {
    if n == 0 {
        return vec![LinearPartition::empty()];
    }
    // compositions of n, by choosing cut points
    let mut out = Vec::new();
    for mask in 0..(1u32 << (n - 1)) {
        let mut sizes = Vec::new();
        let mut run = 1;
        for bit in 0..(n - 1) {
            if mask & (1 << bit) != 0 {
                sizes.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        sizes.push(run);
        out.push(LinearPartition(sizes));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardinal_and_length() {
        // (1 2)(3 4 5 6)(7)(8 9 10)
        let p = LinearPartition::new(vec![2, 4, 1, 3]).unwrap();
        assert_eq!(p.card(), 4);
        assert_eq!(p.len(), 10);
    }

    #[test]
    fn compose_hand_checked() {
        let p = LinearPartition::new(vec![2, 1]).unwrap();
        let q = LinearPartition::new(vec![1, 2, 3]).unwrap();
        assert_eq!(p.compose(&q).unwrap(), LinearPartition::new(vec![3, 3]).unwrap());
        assert!(p.compose(&LinearPartition::finest(4)).is_err());
    }

    #[test]
    fn degenerate_laws_exhaustive() {
        for n in 0..=8usize {
            for q in all_partitions(n) {
                // P finest of length |Q|  =>  P ◁ Q = Q
                let fin = LinearPartition::finest(q.card());
                assert_eq!(fin.compose(&q).unwrap(), q);
                // P trivial  =>  P ◁ Q trivial
                let tri = LinearPartition::trivial(q.card());
                assert!(tri.compose(&q).unwrap().is_trivial());
                // Q finest  =>  P ◁ Q = P for every P with ||P|| = n
                for p in all_partitions(q.card()) {
                    let c = p.compose(&q).unwrap();
                    if q.is_finest() {
                        assert_eq!(c, p);
                    }
                    if q.is_trivial() && !q.is_empty() {
                        assert!(c.is_trivial());
                    }
                }
            }
        }
    }
}
