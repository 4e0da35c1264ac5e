//! Square boolean relations on `0..n`.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation { n, bits: vec![false; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            r.set(i, i);
        }
        r
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.n + j] = true;
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| (0..self.n).filter(move |&j| self.get(i, j)).map(move |j| (i, j)))
    }

    /// Reflexive-transitive closure.
    pub fn closure(&self) -> Self {
        let mut r = self.clone();
        for i in 0..self.n {
            r.set(i, i);
        }
        let n = self.n;
        for k in 0..n {
            for i in 0..n {
                if r.get(i, k) {
                    for j in 0..n {
                        if r.get(k, j) {
                            r.bits[i * n + j] = true;
                        }
                    }
                }
            }
        }
        r
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i))
    }

    pub fn is_transitive(&self) -> bool {
        self.closure() == {
            let mut r = self.clone();
            for i in 0..self.n {
                r.set(i, i);
            }
            r
        }
    }

    /// Classes of mutual relatedness, each sorted, in order of least member.
    pub fn symmetric_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for i in 0..self.n {
            if seen[i] {
                continue;
            }
            let c: Vec<usize> = (0..self.n).filter(|&j| j == i || (self.get(i, j) && self.get(j, i))).collect();
            for &j in &c {
                seen[j] = true;
            }
            out.push(c);
        }
        out
    }

    /// Cover pairs `(i, j)`: `i < j` with nothing strictly between. `self` must be a
    /// partial order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.get(i, j) && !(0..n).any(|k| k != i && k != j && self.get(i, k) && self.get(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}
