//! Kazhdan–Lusztig polynomials of a realized group.
//!
//! `P_{x,w}` is stored only for pairs where `x` has every left and right descent of
//! `w`; any other pair reduces to one of these by `P_{x,w} = P_{sx,w}` for left
//! descents `s` of `w` with `sx > x` (and symmetrically on the right), which also
//! decides the Bruhat order through the lifting property.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::config;
use crate::coxeter::RealizedGroup;
use crate::error::{Error, Result};
use crate::scalars::IntPoly;

pub struct KlPolys {
    pub group: Arc<RealizedGroup>,
    pub ldesc: Vec<u32>,
    pub rdesc: Vec<u32>,
    polys: Vec<Vec<i32>>,
    /// Per `w`: extremal `x ≤ w` sorted, with the index of `P_{x,w}` in `polys`.
    ext: Vec<Vec<(u32, u32)>>,
    /// Per `w`: every `z < w` with `μ(z, w) ≠ 0`.
    mu: Vec<Vec<(u32, i32)>>,
}

struct Row {
    ext: Vec<(u32, Vec<i32>)>,
    mu: Vec<(u32, i32)>,
}

fn trim(mut p: Vec<i32>) -> Vec<i32> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

impl KlPolys {
    /// Computes all polynomials; fails when `|W|` exceeds the oracle bound.
    pub fn compute(group: Arc<RealizedGroup>) -> Result<Self> {
        let bound = config::oracle_bound();
        if group.size() as u64 > bound {
            return Err(Error::SizeLimit { order: group.size() as u64, bound });
        }
        Ok(Self::compute_unbounded(group))
    }

    pub fn compute_unbounded(group: Arc<RealizedGroup>) -> Self {
        let n = group.size();
        let ldesc: Vec<u32> = (0..n as u32).map(|w| group.left_descents(w)).collect();
        let rdesc: Vec<u32> = (0..n as u32).map(|w| group.right_descents(w)).collect();
        let mut by_masks: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
        for w in 0..n as u32 {
            by_masks.entry((ldesc[w as usize], rdesc[w as usize])).or_default().push(w);
        }
        let mut groups: Vec<((u32, u32), Vec<u32>)> = by_masks.into_iter().collect();
        groups.sort();
        let mut kl = KlPolys {
            group: group.clone(),
            ldesc,
            rdesc,
            polys: vec![vec![1]],
            ext: vec![Vec::new(); n],
            mu: vec![Vec::new(); n],
        };
        let mut intern: HashMap<Vec<i32>, u32> = HashMap::new();
        intern.insert(vec![1], 0);
        kl.ext[0] = vec![(0, 0)];
        let maxlen = group.len(group.w0);
        let mut start = 1usize;
        for l in 1..=maxlen {
            let mut end = start;
            while end < n && group.len(end as u32) == l {
                end += 1;
            }
            let rows: Vec<Row> = (start..end).into_par_iter().map(|w| kl.row(w as u32, &groups)).collect();
            for (k, row) in rows.into_iter().enumerate() {
                let w = start + k;
                let mut ext = Vec::with_capacity(row.ext.len());
                for (x, p) in row.ext {
                    let next = kl.polys.len() as u32;
                    let id = *intern.entry(p.clone()).or_insert(next);
                    if id == next {
                        kl.polys.push(p);
                    }
                    ext.push((x, id));
                }
                kl.ext[w] = ext;
                kl.mu[w] = row.mu;
            }
            start = end;
        }
        kl
    }

    fn row(&self, w: u32, groups: &[((u32, u32), Vec<u32>)]) -> Row {
        let g = &self.group;
        let (lw, rw) = (self.ldesc[w as usize], self.rdesc[w as usize]);
        let s = lw.trailing_zeros() as usize;
        let v = g.mul_left(s, w);
        let lenw = g.len(w);
        let mut xs: Vec<u32> = Vec::new();
        for ((lm, rm), elems) in groups {
            if lm & lw != lw || rm & rw != rw {
                continue;
            }
            for &x in elems {
                if g.len(x) > lenw {
                    break;
                }
                if self.bruhat_leq(g.mul_left(s, x), v) {
                    xs.push(x);
                }
            }
        }
        xs.sort_unstable();
        let muv: Vec<(u32, i32)> = self.mu[v as usize]
            .iter()
            .copied()
            .filter(|&(z, _)| g.is_left_descent(z, s))
            .collect();
        let mut ext = Vec::with_capacity(xs.len());
        let mut mu = Vec::new();
        for x in xs {
            let mut p = vec![0i32; (lenw - g.len(x)) / 2 + 1];
            let a = self.poly_slice(g.mul_left(s, x), v);
            for (i, &c) in a.iter().enumerate() {
                p[i] += c;
            }
            let b = self.poly_slice(x, v);
            for (i, &c) in b.iter().enumerate() {
                p[i + 1] += c;
            }
            for &(z, m) in &muv {
                if g.len(z) < g.len(x) {
                    continue;
                }
                let c = self.poly_slice(x, z);
                if c.is_empty() {
                    continue;
                }
                let sh = (lenw - g.len(z)) / 2;
                for (i, &cz) in c.iter().enumerate() {
                    p[i + sh] -= m * cz;
                }
            }
            let p = trim(p);
            let d = lenw - g.len(x);
            if d % 2 == 1 && p.len() == (d - 1) / 2 + 1 {
                mu.push((x, p[(d - 1) / 2]));
            }
            ext.push((x, p));
        }
        for t in 0..g.rank {
            if lw >> t & 1 == 1 {
                mu.push((g.mul_left(t, w), 1));
            }
            if rw >> t & 1 == 1 {
                mu.push((g.mul_right(w, t), 1));
            }
        }
        mu.sort_unstable();
        mu.dedup();
        Row { ext, mu }
    }

    /// The extremal representative of `x` relative to `w`, if it does not exceed `w`
    /// in length.
    fn climb(&self, mut x: u32, w: u32) -> Option<u32> {
        let g = &self.group;
        let (lw, rw) = (self.ldesc[w as usize], self.rdesc[w as usize]);
        let lenw = g.len(w);
        loop {
            if g.len(x) > lenw {
                return None;
            }
            let a = lw & !self.ldesc[x as usize];
            if a != 0 {
                x = g.mul_left(a.trailing_zeros() as usize, x);
                continue;
            }
            let b = rw & !self.rdesc[x as usize];
            if b != 0 {
                x = g.mul_right(x, b.trailing_zeros() as usize);
                continue;
            }
            return Some(x);
        }
    }

    fn lookup(&self, x: u32, w: u32) -> Option<u32> {
        let x = self.climb(x, w)?;
        let e = &self.ext[w as usize];
        e.binary_search_by_key(&x, |p| p.0).ok().map(|i| e[i].1)
    }

    fn poly_slice(&self, x: u32, w: u32) -> &[i32] {
        match self.lookup(x, w) {
            Some(id) => &self.polys[id as usize],
            None => &[],
        }
    }

    /// Bruhat order `x ≤ w`.
    pub fn bruhat_leq(&self, x: u32, w: u32) -> bool {
        self.lookup(x, w).is_some()
    }

    /// `P_{x,w}` as a polynomial in `q`; zero unless `x ≤ w`.
    pub fn poly(&self, x: u32, w: u32) -> IntPoly {
        IntPoly::from_coeffs(0, self.poly_slice(x, w).iter().map(|&c| c as i64).collect())
    }

    /// `μ(x, w)` for `x < w`.
    pub fn mu(&self, x: u32, w: u32) -> i32 {
        let m = &self.mu[w as usize];
        m.binary_search_by_key(&x, |p| p.0).map(|i| m[i].1).unwrap_or(0)
    }

    /// Elements `z < w` with `μ(z, w) ≠ 0`.
    pub fn mu_list(&self, w: u32) -> &[(u32, i32)] {
        &self.mu[w as usize]
    }

    pub fn num_extremal_pairs(&self) -> usize {
        self.ext.iter().map(Vec::len).sum()
    }

    pub fn distinct_polys(&self) -> &[Vec<i32>] {
        &self.polys
    }

    /// Degree of `P_{e,w}`.
    pub fn degree_from_identity(&self, w: u32) -> usize {
        self.poly_slice(0, w).len() - 1
    }
}
