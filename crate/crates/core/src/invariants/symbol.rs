//! Symbols of bipartitions: two rows of strictly increasing non-negative integers.

use std::fmt;

use crate::combinat::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

fn row(p: &Partition, len: usize) -> Vec<u32> {
    assert!(p.len() <= len, "padding too small for {p}");
    p.beta_set(len)
}

impl Symbol {
    /// Defect-1 symbol of `(λ, μ)` with `m + 1` entries on top and `m` below.
    pub fn type_b(lambda: &Partition, mu: &Partition, m: usize) -> Self {
        Symbol { top: row(lambda, m + 1), bottom: row(mu, m) }
    }

    /// Defect-0 symbol of `{λ, μ}` with `m` entries in each row.
    pub fn type_d(lambda: &Partition, mu: &Partition, m: usize) -> Self {
        Symbol { top: row(lambda, m), bottom: row(mu, m) }
    }

    /// Least padding that holds both partitions.
    pub fn padding_b(lambda: &Partition, mu: &Partition) -> usize {
        lambda.len().saturating_sub(1).max(mu.len())
    }

    pub fn padding_d(lambda: &Partition, mu: &Partition) -> usize {
        lambda.len().max(mu.len())
    }

    pub fn defect(&self) -> usize {
        self.top.len() - self.bottom.len()
    }

    /// Prepends 0 to both rows and raises every other entry by one.
    pub fn shift(&self) -> Self {
        let up = |r: &[u32]| std::iter::once(0).chain(r.iter().map(|x| x + 1)).collect();
        Symbol { top: up(&self.top), bottom: up(&self.bottom) }
    }

    /// The pair of partitions the symbol represents.
    pub fn bipartition(&self) -> (Partition, Partition) {
        (Partition::from_beta_set(&self.top), Partition::from_beta_set(&self.bottom))
    }

    pub fn entries(&self) -> Vec<u32> {
        let mut z: Vec<u32> = self.top.iter().chain(&self.bottom).copied().collect();
        z.sort_unstable();
        z
    }

    /// `Σ min(z, z')` over unordered pairs of entries of the multiset `Z`.
    pub fn pair_min_sum(&self) -> u64 {
        let z = self.entries();
        let k = z.len() as u64;
        z.iter().enumerate().map(|(i, &x)| x as u64 * (k - 1 - i as u64)).sum()
    }

    /// The symbol of the same shape whose rows are `0, 1, 2, ...`.
    pub fn zero_of_shape(&self) -> Self {
        Symbol {
            top: (0..self.top.len() as u32).collect(),
            bottom: (0..self.bottom.len() as u32).collect(),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "({} | {})", r(&self.top), r(&self.bottom))
    }
}
