use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An irreducible factor of the catalog.
///
/// Local node numbering:
/// - `A(n)`: chain `0 - 1 - … - n-1`.
/// - `B(n)`: node 0 is the sign change `t`, nodes `i ≥ 1` are `s_i = (i, i+1)`; the
///   bond `0 = 1` has label 4.
/// - `D(n)`: nodes 0 and 1 are both joined to node 2, then the chain `2 - … - n-1`.
/// - `I2(m)`, `H3`, `H4`: chain with label `m` (resp. 5) on the bond `0 - 1`.
/// - `F4`: chain with label 4 on the bond `1 - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Factor {
    A(u32),
    B(u32),
    D(u32),
    F4,
    H3,
    H4,
    I2(u32),
}

impl Factor {
    pub fn rank(&self) -> usize {
        match *self {
            Factor::A(n) | Factor::B(n) | Factor::D(n) => n as usize,
            Factor::I2(_) => 2,
            Factor::H3 => 3,
            Factor::H4 | Factor::F4 => 4,
        }
    }

    /// Bond label between local nodes `i` and `j`.
    pub fn coxeter_entry(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        let (i, j) = (i.min(j), i.max(j));
        match *self {
            Factor::A(_) => {
                if j == i + 1 {
                    3
                } else {
                    2
                }
            }
            Factor::B(_) => match (i, j) {
                (0, 1) => 4,
                _ if j == i + 1 => 3,
                _ => 2,
            },
            Factor::D(_) => match (i, j) {
                (0, 1) => 2,
                (0, 2) | (1, 2) => 3,
                _ if i >= 2 && j == i + 1 => 3,
                _ => 2,
            },
            Factor::I2(m) => m,
            Factor::H3 | Factor::H4 => match (i, j) {
                (0, 1) => 5,
                _ if j == i + 1 => 3,
                _ => 2,
            },
            Factor::F4 => match (i, j) {
                (1, 2) => 4,
                _ if j == i + 1 => 3,
                _ => 2,
            },
        }
    }

    pub fn degrees(&self) -> Vec<u32> {
        match *self {
            Factor::A(n) => (2..=n + 1).collect(),
            Factor::B(n) => (1..=n).map(|i| 2 * i).collect(),
            Factor::D(n) => {
                let mut d: Vec<u32> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
            Factor::I2(m) => vec![2, m],
            Factor::H3 => vec![2, 6, 10],
            Factor::H4 => vec![2, 12, 20, 30],
            Factor::F4 => vec![2, 6, 8, 12],
        }
    }

    pub fn order(&self) -> u64 {
        self.degrees().iter().map(|&d| d as u64).product()
    }

    pub fn num_positive_roots(&self) -> u32 {
        self.degrees().iter().map(|d| d - 1).sum()
    }

    fn validate(&self) -> std::result::Result<(), String> {
        match *self {
            Factor::A(0) => Err("A needs rank at least 1".into()),
            Factor::B(n) if n < 2 => Err("B needs rank at least 2".into()),
            Factor::D(n) if n < 4 => Err("D needs rank at least 4".into()),
            Factor::I2(m) if m < 3 => Err("I2(m) needs m at least 3".into()),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::A(n) => write!(f, "A{n}"),
            Factor::B(n) => write!(f, "B{n}"),
            Factor::D(n) => write!(f, "D{n}"),
            Factor::I2(m) => write!(f, "I2({m})"),
            Factor::H3 => write!(f, "H3"),
            Factor::H4 => write!(f, "H4"),
            Factor::F4 => write!(f, "F4"),
        }
    }
}

/// A finite Coxeter type in canonical form: factors sorted, global nodes numbered
/// factor by factor in that order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoxeterType {
    factors: Vec<Factor>,
}

impl CoxeterType {
    pub fn new(mut factors: Vec<Factor>) -> Result<Self> {
        for f in &factors {
            f.validate().map_err(Error::Domain)?;
        }
        factors.sort();
        Ok(CoxeterType { factors })
    }

    pub fn trivial() -> Self {
        CoxeterType { factors: Vec::new() }
    }

    pub fn irreducible(f: Factor) -> Self {
        Self::new(vec![f]).expect("catalogued factor")
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(Factor::rank).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }

    /// First global node of each factor.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.factors.len());
        let mut k = 0;
        for f in &self.factors {
            off.push(k);
            k += f.rank();
        }
        off
    }

    /// `(factor index, local node)` of a global node.
    pub fn locate(&self, node: usize) -> (usize, usize) {
        let mut k = node;
        for (i, f) in self.factors.iter().enumerate() {
            if k < f.rank() {
                return (i, k);
            }
            k -= f.rank();
        }
        panic!("node {node} out of range for {self}");
    }

    pub fn coxeter_entry(&self, i: usize, j: usize) -> u32 {
        let (fi, li) = self.locate(i);
        let (fj, lj) = self.locate(j);
        if fi != fj {
            return 2;
        }
        self.factors[fi].coxeter_entry(li, lj)
    }

    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| self.coxeter_entry(i, j)).collect()).collect()
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.factors.iter().flat_map(|f| f.degrees()).collect();
        d.sort_unstable();
        d
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().map(Factor::order).product()
    }

    pub fn num_positive_roots(&self) -> u32 {
        self.factors.iter().map(Factor::num_positive_roots).sum()
    }

    /// Parses strings such as `A4`, `I2(7)` or `A2xA1` (case-insensitive).
    pub fn parse(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        let mut factors = Vec::new();
        let mut pos = 0;
        let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
        let skip_ws = |pos: &mut usize| {
            while *pos < chars.len() && chars[*pos].is_whitespace() {
                *pos += 1;
            }
        };
        let number = |pos: &mut usize| -> Result<u32> {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if start == *pos {
                return Err(err(start, "expected a number"));
            }
            let digits: String = chars[start..*pos].iter().collect();
            digits.parse().map_err(|_| err(start, "number too large"))
        };
        loop {
            skip_ws(&mut pos);
            let start = pos;
            let Some(&c) = chars.get(pos) else {
                return Err(err(pos, "expected a factor"));
            };
            pos += 1;
            let factor = match c.to_ascii_uppercase() {
                'A' => Factor::A(number(&mut pos)?),
                'B' => Factor::B(number(&mut pos)?),
                'D' => Factor::D(number(&mut pos)?),
                'H' => match number(&mut pos)? {
                    3 => Factor::H3,
                    4 => Factor::H4,
                    _ => return Err(err(start, "only H3 and H4 are catalogued")),
                },
                'F' => match number(&mut pos)? {
                    4 => Factor::F4,
                    _ => return Err(err(start, "only F4 is catalogued")),
                },
                'I' => {
                    if chars.get(pos) != Some(&'2') {
                        return Err(err(pos, "expected I2(m)"));
                    }
                    pos += 1;
                    if chars.get(pos) != Some(&'(') {
                        return Err(err(pos, "expected '('"));
                    }
                    pos += 1;
                    let m = number(&mut pos)?;
                    if chars.get(pos) != Some(&')') {
                        return Err(err(pos, "expected ')'"));
                    }
                    pos += 1;
                    Factor::I2(m)
                }
                _ => return Err(err(start, "unknown factor letter")),
            };
            factor.validate().map_err(|m| err(start, &m))?;
            factors.push(factor);
            skip_ws(&mut pos);
            match chars.get(pos) {
                None => break,
                Some('x') | Some('X') | Some('×') => pos += 1,
                Some(_) => return Err(err(pos, "expected 'x' between factors")),
            }
        }
        Self::new(factors)
    }

    /// Isomorphism type of the parabolic subgroup generated by `subset`, together
    /// with the map from its canonical nodes to nodes of `self`.
    pub fn classify_parabolic(&self, subset: &[usize]) -> (CoxeterType, Vec<usize>) {
        let mut nodes: Vec<usize> = subset.to_vec();
        nodes.sort_unstable();
        nodes.dedup();
        let joined = |a: usize, b: usize| self.coxeter_entry(a, b) > 2;
        // connected components in order of their least node
        let mut seen = vec![false; nodes.len()];
        let mut comps: Vec<(Factor, Vec<usize>)> = Vec::new();
        for start in 0..nodes.len() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![nodes[start]];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let x = comp[k];
                for (j, &y) in nodes.iter().enumerate() {
                    if !seen[j] && joined(x, y) {
                        seen[j] = true;
                        comp.push(y);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            comps.push(self.identify_component(&comp));
        }
        comps.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        let ty = CoxeterType { factors: comps.iter().map(|c| c.0).collect() };
        let map = comps.into_iter().flat_map(|c| c.1).collect();
        (ty, map)
    }

    fn identify_component(&self, comp: &[usize]) -> (Factor, Vec<usize>) {
        let r = comp.len();
        let m = |a: usize, b: usize| self.coxeter_entry(a, b);
        if r == 1 {
            return (Factor::A(1), comp.to_vec());
        }
        if r == 2 {
            let f = match m(comp[0], comp[1]) {
                3 => Factor::A(2),
                4 => Factor::B(2),
                k => Factor::I2(k),
            };
            return (f, comp.to_vec());
        }
        let nbrs = |x: usize| -> Vec<usize> {
            comp.iter().copied().filter(|&y| y != x && m(x, y) > 2).collect()
        };
        if let Some(&branch) = comp.iter().find(|&&x| nbrs(x).len() == 3) {
            // D_r: two short arms become nodes 0 and 1
            let mut arms: Vec<Vec<usize>> = nbrs(branch)
                .into_iter()
                .map(|first| {
                    let mut arm = vec![first];
                    let mut prev = branch;
                    let mut cur = first;
                    loop {
                        let next: Vec<usize> =
                            nbrs(cur).into_iter().filter(|&y| y != prev).collect();
                        match next.first() {
                            Some(&y) => {
                                arm.push(y);
                                prev = cur;
                                cur = y;
                            }
                            None => break,
                        }
                    }
                    arm
                })
                .collect();
            arms.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a[0].cmp(&b[0])));
            assert!(arms[0].len() == 1 && arms[1].len() == 1, "branched diagram outside the catalog");
            let mut order = vec![arms[0][0], arms[1][0], branch];
            order.extend(&arms[2]);
            return (Factor::D(r as u32), order);
        }
        let ends: Vec<usize> = comp.iter().copied().filter(|&x| nbrs(x).len() == 1).collect();
        assert_eq!(ends.len(), 2, "diagram outside the catalog");
        let walk = |start: usize| -> Vec<usize> {
            let mut path = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while path.len() < r {
                let next = nbrs(cur).into_iter().find(|&y| y != prev).unwrap();
                path.push(next);
                prev = cur;
                cur = next;
            }
            path
        };
        let labels = |p: &[usize]| -> Vec<u32> { p.windows(2).map(|w| m(w[0], w[1])).collect() };
        let p0 = walk(ends[0]);
        let p1 = walk(ends[1]);
        let l0 = labels(&p0);
        let heavy = |l: &[u32]| l.iter().any(|&x| x > 3);
        if !heavy(&l0) {
            return (Factor::A(r as u32), p0);
        }
        for (p, l) in [(p0.clone(), l0.clone()), (p1.clone(), labels(&p1))] {
            if l[0] == 4 && l[1..].iter().all(|&x| x == 3) {
                return (Factor::B(r as u32), p);
            }
            if l[0] == 5 && l[1..].iter().all(|&x| x == 3) {
                match r {
                    3 => return (Factor::H3, p),
                    4 => return (Factor::H4, p),
                    _ => {}
                }
            }
        }
        if r == 4 && l0 == [3, 4, 3] {
            return (Factor::F4, p0);
        }
        panic!("diagram outside the catalog: labels {l0:?}");
    }

    pub fn maximal_parabolics(&self) -> Vec<ParabolicSubset> {
        let n = self.rank();
        (0..n)
            .map(|j| ParabolicSubset::new(self, (0..n).filter(|&i| i != j).collect()))
            .collect()
    }

    /// All subsets `I ⊊ S`, ordered by size and then lexicographically.
    pub fn proper_parabolics(&self) -> Vec<ParabolicSubset> {
        let n = self.rank();
        let mut subsets: Vec<Vec<usize>> = (0u32..(1 << n) - 1)
            .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
            .collect();
        subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        subsets.into_iter().map(|s| ParabolicSubset::new(self, s)).collect()
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        let names: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", names.join("x"))
    }
}

impl std::str::FromStr for CoxeterType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// A subset of the nodes of an ambient type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParabolicSubset {
    pub ambient: CoxeterType,
    pub nodes: Vec<usize>,
}

impl ParabolicSubset {
    pub fn new(ambient: &CoxeterType, mut nodes: Vec<usize>) -> Self {
        nodes.sort_unstable();
        nodes.dedup();
        assert!(nodes.iter().all(|&i| i < ambient.rank()));
        ParabolicSubset { ambient: ambient.clone(), nodes }
    }

    pub fn classify(&self) -> (CoxeterType, Vec<usize>) {
        self.ambient.classify_parabolic(&self.nodes)
    }

    pub fn is_proper(&self) -> bool {
        self.nodes.len() < self.ambient.rank()
    }
}

/// Per-node weights; constant on nodes joined by an odd bond.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    pub weights: Vec<u32>,
}

impl WeightFunction {
    pub fn new(t: &CoxeterType, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != t.rank() {
            return Err(Error::Domain(format!(
                "{} weights given for a type of rank {}",
                weights.len(),
                t.rank()
            )));
        }
        for i in 0..t.rank() {
            for j in i + 1..t.rank() {
                if t.coxeter_entry(i, j) % 2 == 1 && weights[i] != weights[j] {
                    return Err(Error::Domain(format!(
                        "nodes {i} and {j} are joined by an odd bond but have weights {} and {}",
                        weights[i], weights[j]
                    )));
                }
            }
        }
        Ok(WeightFunction { weights })
    }

    pub fn equal_parameter(t: &CoxeterType) -> Self {
        WeightFunction { weights: vec![1; t.rank()] }
    }

    pub fn is_equal_parameter(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> CoxeterType {
        CoxeterType::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(t("a2xA1").to_string(), "A1xA2");
        assert_eq!(t("I2(7)").to_string(), "I2(7)");
        assert_eq!(t("h4").to_string(), "H4");
        match CoxeterType::parse("A2xQ3") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
        assert!(CoxeterType::parse("D3").is_err());
        assert!(CoxeterType::parse("I2(2)").is_err());
        assert!(CoxeterType::parse("A2x").is_err());
    }

    #[test]
    fn matrices_are_symmetric() {
        for s in ["A4", "B5", "D6", "I2(7)", "H3", "H4", "F4", "A2xB3"] {
            let m = t(s).coxeter_matrix();
            for i in 0..m.len() {
                assert_eq!(m[i][i], 1);
                for j in 0..m.len() {
                    assert_eq!(m[i][j], m[j][i]);
                }
            }
        }
    }

    #[test]
    fn degree_products() {
        let orders = [("A3", 24), ("B3", 48), ("D4", 192), ("I2(5)", 10), ("H3", 120), ("H4", 14400), ("F4", 1152)];
        for (s, o) in orders {
            assert_eq!(t(s).order(), o, "{s}");
        }
    }

    #[test]
    fn parabolic_examples() {
        assert_eq!(t("A3").classify_parabolic(&[0, 2]).0, t("A1xA1"));
        assert_eq!(t("B4").classify_parabolic(&[1, 2, 3]).0, t("A3"));
        assert_eq!(t("D4").classify_parabolic(&[0, 1, 3]).0, t("A1xA1xA1"));
        let h3: Vec<CoxeterType> = t("H3").maximal_parabolics().iter().map(|p| p.classify().0).collect();
        assert_eq!(h3, vec![t("A2"), t("A1xA1"), t("I2(5)")]);
        let a2: Vec<Vec<usize>> = t("A2").maximal_parabolics().into_iter().map(|p| p.nodes).collect();
        assert_eq!(a2, vec![vec![1], vec![0]]);
        assert_eq!(t("A1").maximal_parabolics()[0].nodes, Vec::<usize>::new());
        assert_eq!(t("F4").classify_parabolic(&[0, 1, 2]).0, t("B3"));
        assert_eq!(t("F4").classify_parabolic(&[1, 2, 3]).0, t("B3"));
        assert_eq!(t("D5").classify_parabolic(&[0, 1, 2]).0, t("A3"));
        assert_eq!(t("B5").classify_parabolic(&[0, 1, 3, 4]).0, t("A2xB2"));
    }

    #[test]
    fn classification_is_idempotent_on_full_sets() {
        for s in ["A4", "B4", "D5", "I2(8)", "H4", "F4", "A1xB3xI2(5)"] {
            let ty = t(s);
            let all: Vec<usize> = (0..ty.rank()).collect();
            let (c, map) = ty.classify_parabolic(&all);
            assert_eq!(c, ty);
            assert_eq!(map, all);
        }
    }

    #[test]
    fn weight_functions() {
        let b2 = t("B2");
        assert!(WeightFunction::new(&b2, vec![2, 1]).is_ok());
        assert!(WeightFunction::new(&t("A2"), vec![2, 1]).is_err());
        assert!(WeightFunction::equal_parameter(&t("F4")).is_equal_parameter());
    }
}
