//! Explicit realization of a small Coxeter group as permutations of its roots.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use crate::config;
use crate::error::{Error, Result};
use crate::scalars::{CycPoly, CycRat, Golden, Q};

use super::{CoxeterType, Factor};

trait Coord: Clone + Eq + Hash {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn to_cyc(&self) -> CycRat;
}

impl Coord for Golden {
    fn zero() -> Self {
        Golden::int(0)
    }
    fn one() -> Self {
        Golden::int(1)
    }
    fn add(&self, o: &Self) -> Self {
        *self + *o
    }
    fn sub(&self, o: &Self) -> Self {
        *self - *o
    }
    fn mul(&self, o: &Self) -> Self {
        *self * *o
    }
    fn to_cyc(&self) -> CycRat {
        self.to_cycrat()
    }
}

impl Coord for CycRat {
    fn zero() -> Self {
        CycRat::zero()
    }
    fn one() -> Self {
        CycRat::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn to_cyc(&self) -> CycRat {
        self.clone()
    }
}

/// Positive roots of one factor (simple roots first) in the simple-root basis and the
/// generator permutations of `positive ++ negative`.
struct FactorRoots {
    pos: Vec<Vec<CycRat>>,
    perms: Vec<Vec<usize>>,
}

fn factor_roots<F: Coord>(r: usize, cartan: impl Fn(usize, usize) -> F) -> FactorRoots {
    let c: Vec<Vec<F>> = (0..r).map(|i| (0..r).map(|j| cartan(i, j)).collect()).collect();
    let reflect = |i: usize, v: &[F]| -> Vec<F> {
        let mut k = F::zero();
        for j in 0..r {
            k = k.add(&c[i][j].mul(&v[j]));
        }
        let mut out = v.to_vec();
        out[i] = out[i].sub(&k);
        out
    };
    let unit = |i: usize| -> Vec<F> { (0..r).map(|j| if i == j { F::one() } else { F::zero() }).collect() };
    let mut pos: Vec<Vec<F>> = (0..r).map(unit).collect();
    let mut index: HashMap<Vec<F>, usize> = pos.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let mut k = 0;
    while k < pos.len() {
        for i in 0..r {
            if k == i {
                continue;
            }
            let g = reflect(i, &pos[k]);
            if !index.contains_key(&g) {
                index.insert(g.clone(), pos.len());
                pos.push(g);
            }
        }
        k += 1;
    }
    let n = pos.len();
    let neg = |v: &[F]| -> Vec<F> { v.iter().map(|x| F::zero().sub(x)).collect() };
    let perms = (0..r)
        .map(|i| {
            (0..2 * n)
                .map(|k| {
                    let v = if k < n { pos[k].clone() } else { neg(&pos[k - n]) };
                    let img = reflect(i, &v);
                    match index.get(&img) {
                        Some(&j) => j,
                        None => index[&neg(&img)] + n,
                    }
                })
                .collect()
        })
        .collect();
    FactorRoots { pos: pos.iter().map(|v| v.iter().map(F::to_cyc).collect()).collect(), perms }
}

fn roots_of(f: Factor) -> FactorRoots {
    let r = f.rank();
    let g = Golden::g();
    match f {
        Factor::I2(m) if !matches!(m, 3..=6) => {
            let c = -CycRat::root_sum(2 * m, 1);
            factor_roots(r, move |i, j| if i == j { CycRat::from_int(2) } else { c.clone() })
        }
        _ => factor_roots(r, move |i, j| {
            if i == j {
                return Golden::int(2);
            }
            match f.coxeter_entry(i, j) {
                2 => Golden::int(0),
                3 => Golden::int(-1),
                4 => Golden::int(if i < j { -2 } else { -1 }),
                5 => -g,
                6 => Golden::int(if i < j { -3 } else { -1 }),
                m => unreachable!("bond {m}"),
            }
        }),
    }
}

/// A finite Coxeter group given by the action of its elements on the root system.
///
/// Elements are numbered in breadth-first order from the identity, so lengths are
/// non-decreasing along the numbering.
pub struct RealizedGroup {
    pub ty: CoxeterType,
    pub rank: usize,
    /// Coordinates of all roots in the simple-root basis; the first `npos` are positive
    /// and root `k + npos` is `-root k`.
    pub roots: Vec<Vec<CycRat>>,
    pub npos: usize,
    gens: Vec<Vec<u16>>,
    perms: Vec<Vec<u16>>,
    index: HashMap<u128, u32>,
    pub length: Vec<u16>,
    words: Vec<Vec<u8>>,
    right: Vec<Vec<u32>>,
    left: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    pub w0: u32,
    pub classes: Vec<Vec<u32>>,
    pub class_of: Vec<u32>,
    pub class_order: Vec<u32>,
}

impl RealizedGroup {
    pub fn new(ty: &CoxeterType, bound: u64) -> Result<Self> {
        let order = ty.order();
        if order > bound {
            return Err(Error::SizeLimit { order, bound });
        }
        let rank = ty.rank();
        assert!(rank <= 8, "realization supports rank at most 8");
        let fr: Vec<FactorRoots> = ty.factors().iter().map(|&f| roots_of(f)).collect();
        let npos: usize = fr.iter().map(|f| f.pos.len()).sum();
        // global positive order: all simple roots by node, then the rest factor by factor
        let offsets = ty.offsets();
        let mut local_to_global: Vec<Vec<usize>> = Vec::new();
        let mut next = rank;
        for (fi, f) in fr.iter().enumerate() {
            let r = ty.factors()[fi].rank();
            let mut map = Vec::with_capacity(f.pos.len());
            for k in 0..f.pos.len() {
                if k < r {
                    map.push(offsets[fi] + k);
                } else {
                    map.push(next);
                    next += 1;
                }
            }
            local_to_global.push(map);
        }
        let mut roots = vec![Vec::new(); 2 * npos];
        for (fi, f) in fr.iter().enumerate() {
            let r = ty.factors()[fi].rank();
            for (k, v) in f.pos.iter().enumerate() {
                let mut full = vec![CycRat::zero(); rank];
                for j in 0..r {
                    full[offsets[fi] + j] = v[j].clone();
                }
                let g = local_to_global[fi][k];
                roots[g + npos] = full.iter().map(|x| -x).collect();
                roots[g] = full;
            }
        }
        let mut gens = Vec::with_capacity(rank);
        for (fi, f) in fr.iter().enumerate() {
            let n = f.pos.len();
            let glob = |k: usize| -> usize {
                if k < n {
                    local_to_global[fi][k]
                } else {
                    local_to_global[fi][k - n] + npos
                }
            };
            for p in &f.perms {
                let mut perm: Vec<u16> = (0..2 * npos as u16).collect();
                for k in 0..2 * n {
                    perm[glob(k)] = glob(p[k]) as u16;
                }
                gens.push(perm);
            }
        }
        let key = |p: &[u16]| -> u128 {
            let mut k = 0u128;
            for &x in &p[..rank] {
                k = (k << 16) | x as u128;
            }
            k
        };
        let mut perms: Vec<Vec<u16>> = vec![(0..2 * npos as u16).collect()];
        let mut length = vec![0u16];
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut index = HashMap::new();
        index.insert(key(&perms[0]), 0u32);
        let mut i = 0;
        while i < perms.len() {
            for s in 0..rank {
                if perms[i][s] as usize >= npos {
                    continue;
                }
                let ws: Vec<u16> = gens[s].iter().map(|&r| perms[i][r as usize]).collect();
                let k = key(&ws);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(k) {
                    e.insert(perms.len() as u32);
                    length.push(length[i] + 1);
                    let mut w = words[i].clone();
                    w.push(s as u8);
                    words.push(w);
                    perms.push(ws);
                }
            }
            i += 1;
        }
        if perms.len() as u64 != order {
            return Err(Error::inconsistency(format!(
                "realization of {ty} produced {} elements, expected {order}",
                perms.len()
            )));
        }
        let lookup = |p: &[u16]| -> u32 { index[&key(p)] };
        let mut right = vec![Vec::with_capacity(perms.len()); rank];
        let mut left = vec![Vec::with_capacity(perms.len()); rank];
        for p in &perms {
            for s in 0..rank {
                let ws: Vec<u16> = (0..rank).map(|j| p[gens[s][j] as usize]).collect();
                right[s].push(index[&key(&ws)]);
                let sw: Vec<u16> = (0..rank).map(|j| gens[s][p[j] as usize]).collect();
                left[s].push(index[&key(&sw)]);
            }
        }
        let inverse: Vec<u32> = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0u16; p.len()];
                for (k, &x) in p.iter().enumerate() {
                    inv[x as usize] = k as u16;
                }
                lookup(&inv)
            })
            .collect();
        let maxlen = *length.iter().max().unwrap();
        let tops: Vec<u32> = (0..perms.len() as u32).filter(|&w| length[w as usize] == maxlen).collect();
        if tops.len() != 1 || maxlen as usize != npos {
            return Err(Error::inconsistency(format!("{ty}: longest element is not unique or l(w0) != N")));
        }
        let w0 = tops[0];
        let n = perms.len();
        let mut class_of = vec![u32::MAX; n];
        let mut classes: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let c = classes.len() as u32;
            let mut members = vec![start as u32];
            class_of[start] = c;
            let mut k = 0;
            while k < members.len() {
                let x = members[k] as usize;
                for s in 0..rank {
                    let y = left[s][right[s][x] as usize] as usize;
                    if class_of[y] == u32::MAX {
                        class_of[y] = c;
                        members.push(y as u32);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        let mut g = RealizedGroup {
            ty: ty.clone(),
            rank,
            roots,
            npos,
            gens,
            perms,
            index,
            length,
            words,
            right,
            left,
            inverse,
            w0,
            classes,
            class_of,
            class_order: Vec::new(),
        };
        g.class_order = g.classes.iter().map(|c| g.element_order(c[0])).collect();
        Ok(g)
    }

    pub fn size(&self) -> usize {
        self.perms.len()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn len(&self, w: u32) -> usize {
        self.length[w as usize] as usize
    }

    pub fn word(&self, w: u32) -> Vec<usize> {
        self.words[w as usize].iter().map(|&s| s as usize).collect()
    }

    pub fn mul_right(&self, w: u32, s: usize) -> u32 {
        self.right[s][w as usize]
    }

    pub fn mul_left(&self, s: usize, w: u32) -> u32 {
        self.left[s][w as usize]
    }

    pub fn inverse(&self, w: u32) -> u32 {
        self.inverse[w as usize]
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        let (px, py) = (&self.perms[x as usize], &self.perms[y as usize]);
        let img: Vec<u16> = (0..self.rank).map(|j| px[py[j] as usize]).collect();
        let mut k = 0u128;
        for &v in &img {
            k = (k << 16) | v as u128;
        }
        self.index[&k]
    }

    pub fn element_of_word(&self, word: &[usize]) -> u32 {
        word.iter().fold(0, |w, &s| self.mul_right(w, s))
    }

    pub fn is_right_descent(&self, w: u32, s: usize) -> bool {
        self.perms[w as usize][s] as usize >= self.npos
    }

    pub fn is_left_descent(&self, w: u32, s: usize) -> bool {
        self.is_right_descent(self.inverse(w), s)
    }

    pub fn right_descents(&self, w: u32) -> u32 {
        (0..self.rank).filter(|&s| self.is_right_descent(w, s)).fold(0, |m, s| m | 1 << s)
    }

    pub fn left_descents(&self, w: u32) -> u32 {
        self.right_descents(self.inverse(w))
    }

    pub fn element_order(&self, w: u32) -> u32 {
        let mut k = 1;
        let mut x = w;
        while x != 0 {
            x = self.mul(x, w);
            k += 1;
        }
        k
    }

    pub fn power(&self, w: u32, e: u32) -> u32 {
        (0..e).fold(0, |x, _| self.mul(x, w))
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    /// Trace of `w` on the reflection representation (simple-root basis).
    pub fn reflection_trace(&self, w: u32) -> CycRat {
        let p = &self.perms[w as usize];
        (0..self.rank).fold(CycRat::zero(), |acc, i| &acc + &self.roots[p[i] as usize][i])
    }

    /// `det(1 - q·ρ(w))` for the reflection representation, via the eigenvalue
    /// multiplicities read off from traces of powers.
    pub fn det_one_minus_q(&self, w: u32) -> CycPoly {
        let n = self.element_order(w);
        let traces: Vec<CycRat> = (0..n).map(|l| self.reflection_trace(self.power(w, l))).collect();
        let mut det = CycPoly::one();
        for t in 0..n {
            let mut m = CycRat::zero();
            for (l, tr) in traces.iter().enumerate() {
                let z = CycRat::root_of_unity(n, -((t as i64) * l as i64));
                m = &m + &(tr * &z);
            }
            let m = m.scale(Q::new(1, n as i128));
            let mult = m.as_integer().expect("eigenvalue multiplicity must be an integer");
            let factor = &CycPoly::one() - &CycPoly::monomial(CycRat::root_of_unity(n, t as i64), 1);
            for _ in 0..mult {
                det = &det * &factor;
            }
        }
        det
    }

    /// Minimal length representatives of the left cosets `w W_I`.
    pub fn coset_representatives(&self, subset: &[usize]) -> Vec<u32> {
        (0..self.size() as u32)
            .filter(|&w| subset.iter().all(|&s| !self.is_right_descent(w, s)))
            .collect()
    }

    /// Elements of the standard parabolic subgroup `W_I`.
    pub fn parabolic_elements(&self, subset: &[usize]) -> Vec<u32> {
        let mut seen = vec![false; self.size()];
        let mut out = vec![0u32];
        seen[0] = true;
        let mut k = 0;
        while k < out.len() {
            let w = out[k];
            for &s in subset {
                let y = self.mul_right(w, s);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
            k += 1;
        }
        out.sort_unstable();
        out
    }

    /// Generators actually occurring in reduced words of `w`.
    pub fn support(&self, w: u32) -> u32 {
        self.words[w as usize].iter().fold(0, |m, &s| m | 1 << s)
    }

    pub fn generator_perm(&self, s: usize) -> &[u16] {
        &self.gens[s]
    }
}

type Cache = Mutex<HashMap<CoxeterType, Arc<RealizedGroup>>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Realizes `t`, memoized; fails when `|W|` exceeds the configured bound.
pub fn realize(t: &CoxeterType) -> Result<Arc<RealizedGroup>> {
    realize_with_bound(t, config::max_group_order())
}

pub fn realize_with_bound(t: &CoxeterType, bound: u64) -> Result<Arc<RealizedGroup>> {
    if let Some(g) = cache().lock().unwrap().get(t) {
        return Ok(g.clone());
    }
    let g = Arc::new(RealizedGroup::new(t, bound)?);
    Ok(cache().lock().unwrap().entry(t.clone()).or_insert(g).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> CoxeterType {
        CoxeterType::parse(s).unwrap()
    }

    #[test]
    fn small_realizations() {
        let a2 = realize(&t("A2")).unwrap();
        assert_eq!(a2.size(), 6);
        let mut sizes: Vec<usize> = a2.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        let h3 = realize(&t("H3")).unwrap();
        assert_eq!(h3.size(), 120);
        assert_eq!(h3.npos, 15);
        assert_eq!(h3.len(h3.w0), 15);
        let i5 = realize(&t("I2(5)")).unwrap();
        assert_eq!(i5.size(), 10);
        assert_eq!(i5.classes.len(), 4);
    }

    #[test]
    fn size_limit_names_the_order() {
        match RealizedGroup::new(&t("B7"), 20_000) {
            Err(Error::SizeLimit { order, .. }) => assert_eq!(order, 645_120),
            _ => panic!(),
        }
    }

    #[test]
    fn generators_satisfy_the_braid_relations() {
        for s in ["B3", "D4", "H3", "F4", "I2(7)", "A1xI2(5)"] {
            let g = realize(&t(s)).unwrap();
            let ty = t(s);
            for i in 0..g.rank {
                for j in 0..g.rank {
                    let m = ty.coxeter_entry(i, j) as usize;
                    let word: Vec<usize> = (0..2 * m).map(|k| if k % 2 == 0 { i } else { j }).collect();
                    assert_eq!(g.element_of_word(&word), 0, "{s}: ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn w0_reverses_lengths() {
        for s in ["B3", "H3", "I2(8)"] {
            let g = realize(&t(s)).unwrap();
            for w in 0..g.size() as u32 {
                assert_eq!(g.len(g.mul(w, g.w0)), g.len(g.w0) - g.len(w));
            }
            // conjugation by w0 permutes classes
            for c in &g.classes {
                let img: Vec<u32> = c.iter().map(|&x| g.class_of[g.mul(g.mul(g.w0, x), g.w0) as usize]).collect();
                assert!(img.iter().all(|&k| k == img[0]));
            }
        }
    }

    #[test]
    fn coset_representatives() {
        let g = realize(&t("A2")).unwrap();
        let x = g.coset_representatives(&[0]);
        let mut lens: Vec<usize> = x.iter().map(|&w| g.len(w)).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![0, 1, 2]);
        assert_eq!(g.coset_representatives(&[]).len(), 6);
        assert_eq!(g.coset_representatives(&[0, 1]), vec![0]);
        let b3 = realize(&t("B3")).unwrap();
        let sub = [1, 2];
        let wi = b3.parabolic_elements(&sub);
        let xs = b3.coset_representatives(&sub);
        assert_eq!(xs.len() * wi.len(), b3.size());
        for &x in &xs {
            for &w in &wi {
                assert_eq!(b3.len(b3.mul(x, w)), b3.len(x) + b3.len(w));
            }
        }
    }
}
