//! Partitions and the combinatorics attached to them.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A partition stored with non-increasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let n = self.0.first().copied().unwrap_or(0);
        Partition((1..=n).map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32).collect())
    }

    /// `λ ⊴ μ`: all partial sums of `self` are at most those of `other` (equal sizes).
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a > b {
                return false;
            }
        }
        true
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_value(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    /// Multiplicity of each part size as `(part, count)`, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Order of the centralizer of an element of cycle type `self` in the symmetric group.
    pub fn z(&self) -> u128 {
        self.multiplicities()
            .iter()
            .map(|&(p, c)| (p as u128).pow(c) * factorial(c))
            .product()
    }

    /// Beta-set with `k` beads (`k ≥ len`): `λ_i + k - i` for `i = 1..k`, increasing.
    pub fn beta_set(&self, k: usize) -> Vec<u32> {
        assert!(k >= self.len());
        let mut b: Vec<u32> = (0..k)
            .map(|i| self.0.get(i).copied().unwrap_or(0) + (k - 1 - i) as u32)
            .collect();
        b.reverse();
        b
    }

    pub fn from_beta_set(beta: &[u32]) -> Self {
        let mut b = beta.to_vec();
        b.sort_unstable();
        Partition::new(b.iter().enumerate().map(|(i, &x)| x - i as u32).collect())
    }

    /// All ways of removing a rim hook of length `k`: `(remaining partition, leg length)`.
    pub fn remove_rim_hooks(&self, k: u32) -> Vec<(Partition, u32)> {
        let beta = self.beta_set(self.len());
        let mut out = Vec::new();
        for (idx, &b) in beta.iter().enumerate() {
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let leg = beta.iter().filter(|&&x| x > b - k && x < b).count() as u32;
            let mut nb = beta.clone();
            nb[idx] = b - k;
            out.push((Partition::from_beta_set(&nb), leg));
        }
        out
    }
}

pub fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// All partitions of `n`, in decreasing lexicographic order (`(n)` first).
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Ordered pairs of partitions with total size `n`.
pub fn bipartitions(n: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for l in partitions(a) {
            for m in partitions(n - a) {
                out.push((l.clone(), m));
            }
        }
    }
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let p: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(bipartitions(4).len(), 20);
    }

    #[test]
    fn conjugates_and_dominance() {
        let l = Partition::new(vec![3, 1]);
        assert_eq!(l.conjugate(), Partition::new(vec![2, 1, 1]));
        assert!(Partition::new(vec![2, 2]).dominated_by(&l));
        assert!(!l.dominated_by(&Partition::new(vec![2, 2])));
        assert_eq!(Partition::new(vec![2, 1]).n_value(), 1);
    }

    #[test]
    fn rim_hooks() {
        // hook lengths of (3,1) are 4,2,1,1
        let h = Partition::new(vec![3, 1]).remove_rim_hooks(2);
        assert_eq!(h, vec![(Partition::new(vec![1, 1]), 0)]);
        let h = Partition::new(vec![2, 2]).remove_rim_hooks(2);
        assert_eq!(h.len(), 2);
        assert!(Partition::new(vec![3, 1]).remove_rim_hooks(3).is_empty());
        let h4 = Partition::new(vec![3, 1]).remove_rim_hooks(4);
        assert_eq!(h4, vec![(Partition::empty(), 1)]);
    }

    #[test]
    fn beta_round_trip() {
        for p in partitions(6) {
            assert_eq!(Partition::from_beta_set(&p.beta_set(p.len() + 2)), p);
        }
    }
}
