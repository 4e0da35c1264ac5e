//! Signed permutation models of the classical factors.
//!
//! An element is stored as its list of images `w(i)` for `i = 1..=n`, a signed
//! integer each. Type `A(n)` acts on `n+1` letters without signs.

use crate::combinat::Partition;

use super::Factor;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm(pub Vec<i32>);

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm((1..=n as i32).collect())
    }

    /// Number of letters moved by the model of a classical factor.
    pub fn degree(f: Factor) -> usize {
        match f {
            Factor::A(n) => n as usize + 1,
            Factor::B(n) | Factor::D(n) => n as usize,
            _ => panic!("{f} has no signed permutation model"),
        }
    }

    /// Right multiplication by the generator at local node `s`.
    pub fn mul_gen(&mut self, f: Factor, s: usize) {
        let w = &mut self.0;
        match f {
            Factor::A(_) => w.swap(s, s + 1),
            Factor::B(_) => {
                if s == 0 {
                    w[0] = -w[0];
                } else {
                    w.swap(s - 1, s);
                }
            }
            Factor::D(_) => {
                if s == 0 {
                    let (a, b) = (w[0], w[1]);
                    w[0] = -b;
                    w[1] = -a;
                } else {
                    w.swap(s - 1, s);
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn from_word(f: Factor, word: &[usize]) -> Self {
        let mut w = Self::identity(Self::degree(f));
        for &s in word {
            w.mul_gen(f, s);
        }
        w
    }

    pub fn has_right_descent(&self, f: Factor, s: usize) -> bool {
        let w = &self.0;
        match f {
            Factor::A(_) => w[s] > w[s + 1],
            Factor::B(_) => {
                if s == 0 {
                    w[0] < 0
                } else {
                    w[s - 1] > w[s]
                }
            }
            Factor::D(_) => {
                if s == 0 {
                    w[0] + w[1] < 0
                } else {
                    w[s - 1] > w[s]
                }
            }
            _ => unreachable!(),
        }
    }

    /// A reduced word for the element.
    pub fn reduced_word(&self, f: Factor) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        'outer: loop {
            for s in 0..f.rank() {
                if w.has_right_descent(f, s) {
                    word.push(s);
                    w.mul_gen(f, s);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    /// Cycles of the underlying permutation, each with the product of its signs.
    pub fn signed_cycles(&self) -> Vec<(Vec<usize>, bool)> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut neg = false;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                cyc.push(j);
                let img = self.0[j];
                if img < 0 {
                    neg = !neg;
                }
                j = img.unsigned_abs() as usize - 1;
            }
            out.push((cyc, neg));
        }
        out
    }

    /// (positive cycle lengths, negative cycle lengths).
    pub fn signed_cycle_type(&self) -> (Partition, Partition) {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (c, n) in self.signed_cycles() {
            if n {
                neg.push(c.len() as u32);
            } else {
                pos.push(c.len() as u32);
            }
        }
        (Partition::new(pos), Partition::new(neg))
    }

    /// For an element whose cycles are all positive: true when it is conjugate to a
    /// sign-free permutation by a diagonal matrix with an even number of `-1`s.
    pub fn even_diagonal_conjugate(&self) -> bool {
        let mut odd = false;
        for (cyc, neg) in self.signed_cycles() {
            assert!(!neg);
            // d(i_{j+1}) = d(i_j)·ε_j with d(i_1) = 1
            let mut d = 1;
            for &i in &cyc[..cyc.len() - 1] {
                if self.0[i] < 0 {
                    d = -d;
                }
                if d < 0 {
                    odd = !odd;
                }
            }
        }
        !odd
    }

    /// Representative with the given cycle types on consecutive blocks, positive
    /// cycles first.
    pub fn with_cycle_type(pos: &Partition, neg: &Partition) -> Self {
        let mut w = Vec::new();
        let mut base = 0i32;
        for (k, negative) in pos.parts().iter().map(|&k| (k, false)).chain(neg.parts().iter().map(|&k| (k, true))) {
            let k = k as i32;
            for j in 1..k {
                w.push(base + j + 1);
            }
            w.push(if negative { -(base + 1) } else { base + 1 });
            base += k;
        }
        SignedPerm(w)
    }

    pub fn order(&self) -> u64 {
        let mut o = 1u64;
        for (c, neg) in self.signed_cycles() {
            let k = c.len() as u64 * if neg { 2 } else { 1 };
            o = num_integer::lcm(o, k);
        }
        o
    }
}
