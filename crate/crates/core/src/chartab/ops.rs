use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::coxeter::{CoxeterType, ParabolicSubset};
use crate::error::{Error, Result};
use crate::scalars::{cyc_poly_to_int, CycRat, IntPoly, Q};

use super::{character_table, CharacterTable, ClassFunction};

/// For each class of `W_I` (in the table of its canonical type), the class of `W`
/// containing it.
pub fn fuse_classes(p: &ParabolicSubset) -> Result<(Arc<CharacterTable>, Vec<usize>)> {
    let ambient = character_table(&p.ambient)?;
    let (sub_ty, map) = p.classify();
    let sub = character_table(&sub_ty)?;
    let fusion = sub
        .classes
        .iter()
        .map(|c| {
            let word: Vec<usize> = c.word.iter().map(|&s| map[s]).collect();
            ambient.class_of_word(&word)
        })
        .collect();
    Ok((sub, fusion))
}

/// `Ind_I^S(f)` for a class function on the parabolic subgroup.
pub fn induce(p: &ParabolicSubset, f: &ClassFunction) -> Result<ClassFunction> {
    let ambient = character_table(&p.ambient)?;
    let (sub, fusion) = fuse_classes(p)?;
    assert_eq!(f.ty, sub.ty);
    let mut acc = vec![CycRat::zero(); ambient.num_classes()];
    for (c, &d) in fusion.iter().enumerate() {
        acc[d] = &acc[d] + &f.values[c].scale(Q::from(sub.classes[c].size as i128));
    }
    let index = Q::new(ambient.order as i128, sub.order as i128);
    let values = acc
        .into_iter()
        .enumerate()
        .map(|(d, v)| v.scale(index / Q::from(ambient.classes[d].size as i128)))
        .collect();
    Ok(ambient.class_function(values))
}

/// Multiplicities `⟨Ind_I^S(M), E⟩` for all `M ∈ Irr(W_I)` and `E ∈ Irr(W)`.
pub struct InductionMatrix {
    pub subset: ParabolicSubset,
    pub sub: Arc<CharacterTable>,
    pub ambient: Arc<CharacterTable>,
    pub fusion: Vec<usize>,
    /// `mult[m][e]`.
    pub mult: Vec<Vec<u32>>,
}

impl InductionMatrix {
    fn compute(p: &ParabolicSubset) -> Result<Self> {
        let ambient = character_table(&p.ambient)?;
        let (sub, fusion) = fuse_classes(p)?;
        let nm = sub.num_irreps();
        let ne = ambient.num_irreps();
        let mut mult = vec![vec![0u32; ne]; nm];
        let bad = |m: usize, e: usize, v: String| {
            Error::inconsistency(format!(
                "multiplicity of {} in the induced character of {} is {v}",
                ambient.irreps[e], sub.irreps[m]
            ))
        };
        if let (Some(si), Some(ai)) = (sub.int_values(), ambient.int_values()) {
            for m in 0..nm {
                for e in 0..ne {
                    let s: i128 = fusion
                        .iter()
                        .enumerate()
                        .map(|(c, &d)| sub.classes[c].size as i128 * si[m][c] as i128 * ai[e][d] as i128)
                        .sum();
                    if s < 0 || s % sub.order as i128 != 0 {
                        return Err(bad(m, e, format!("{s}/{}", sub.order)));
                    }
                    mult[m][e] = (s / sub.order as i128) as u32;
                }
            }
        } else {
            for m in 0..nm {
                for e in 0..ne {
                    let res: Vec<CycRat> = fusion.iter().map(|&d| ambient.values[e][d].clone()).collect();
                    let s = sub.inner_product(&sub.values[m], &res);
                    match s.as_integer() {
                        Some(k) if k >= 0 => mult[m][e] = k as u32,
                        _ => return Err(bad(m, e, s.to_string())),
                    }
                }
            }
        }
        Ok(InductionMatrix { subset: p.clone(), sub, ambient, fusion, mult })
    }

    /// Constituents of `Ind(M)` with their multiplicities.
    pub fn constituents(&self, m: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.mult[m].iter().enumerate().filter(|(_, &k)| k > 0).map(|(e, &k)| (e, k))
    }
}

type IndMemo = Mutex<HashMap<(CoxeterType, Vec<usize>), Arc<InductionMatrix>>>;

/// The induction matrix of a parabolic subset, memoized per embedding.
pub fn induction_matrix(p: &ParabolicSubset) -> Result<Arc<InductionMatrix>> {
    static M: OnceLock<IndMemo> = OnceLock::new();
    let memo = M.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (p.ambient.clone(), p.nodes.clone());
    if let Some(m) = memo.lock().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let m = Arc::new(InductionMatrix::compute(p)?);
    Ok(memo.lock().unwrap().entry(key).or_insert(m).clone())
}

/// Fake degrees by the Molien formula
/// `R_E(q) = Π(1 - q^{d_i}) |W|^{-1} Σ_C |C| χ_E(C) / det(1 - q ρ(C))`.
pub(super) fn molien(t: &CharacterTable) -> Result<Vec<IntPoly>> {
    let n = t.ty.num_positive_roots() as usize;
    let len = n + 2;
    let mut prod = vec![0i128; len];
    prod[0] = 1;
    for d in t.ty.degrees() {
        let d = d as usize;
        for e in (d..len).rev() {
            prod[e] -= prod[e - d];
        }
    }
    let int_det: Option<Vec<IntPoly>> = t.det.iter().map(cyc_poly_to_int).collect();
    let series: Vec<Vec<CycRat>> = match (&int_det, t.int_values()) {
        (Some(dets), Some(iv)) => {
            let inv: Vec<Vec<i128>> = dets.iter().map(|d| invert_int(d, len)).collect();
            iv.iter()
                .map(|row| {
                    let mut s = vec![0i128; len];
                    for (c, info) in t.classes.iter().enumerate() {
                        let k = info.size as i128 * row[c] as i128;
                        if k != 0 {
                            for e in 0..len {
                                s[e] += k * inv[c][e];
                            }
                        }
                    }
                    s.into_iter().map(|x| CycRat::from_rational(Q::from(x))).collect()
                })
                .collect()
        }
        _ => {
            let inv: Vec<Vec<CycRat>> = t.det.iter().map(|d| invert_cyc(d, len)).collect();
            t.values
                .iter()
                .map(|row| {
                    let mut s = vec![CycRat::zero(); len];
                    for (c, info) in t.classes.iter().enumerate() {
                        if row[c].is_zero() {
                            continue;
                        }
                        let k = row[c].scale(Q::from(info.size as i128));
                        for e in 0..len {
                            s[e] = &s[e] + &(&k * &inv[c][e]);
                        }
                    }
                    s
                })
                .collect()
        }
    };
    let mut out = Vec::with_capacity(series.len());
    for (i, s) in series.iter().enumerate() {
        let mut coeffs = Vec::with_capacity(len);
        for e in 0..len {
            let mut acc = CycRat::zero();
            for k in 0..=e {
                if prod[k] != 0 && !s[e - k].is_zero() {
                    acc = &acc + &s[e - k].scale(Q::from(prod[k]));
                }
            }
            let c = acc.scale(Q::new(1, t.order as i128));
            match c.as_integer() {
                Some(x) if x >= 0 => coeffs.push(x),
                _ => {
                    return Err(Error::inconsistency(format!(
                        "fake degree of {} has coefficient {c} at q^{e}",
                        t.irreps[i]
                    )))
                }
            }
        }
        if coeffs[n + 1] != 0 {
            return Err(Error::inconsistency(format!("fake degree of {} exceeds degree N", t.irreps[i])));
        }
        let p = IntPoly::from_coeffs(0, coeffs);
        if p.eval_one() != t.dim(i) as i64 {
            return Err(Error::inconsistency(format!("fake degree of {} does not evaluate to its dimension", t.irreps[i])));
        }
        out.push(p);
    }
    Ok(out)
}

fn invert_int(d: &IntPoly, len: usize) -> Vec<i128> {
    assert_eq!(d.coeff(0), 1);
    let mut inv = vec![0i128; len];
    inv[0] = 1;
    for e in 1..len {
        let mut s = 0i128;
        for k in 1..=e {
            s -= d.coeff(k as i32) as i128 * inv[e - k];
        }
        inv[e] = s;
    }
    inv
}

fn invert_cyc(d: &crate::scalars::CycPoly, len: usize) -> Vec<CycRat> {
    assert_eq!(d.coeff(0), CycRat::one());
    let dc: Vec<CycRat> = (0..len).map(|k| d.coeff(k as i32)).collect();
    let mut inv = vec![CycRat::zero(); len];
    inv[0] = CycRat::one();
    for e in 1..len {
        let mut s = CycRat::zero();
        for k in 1..=e {
            if !dc[k].is_zero() {
                s = &s - &(&dc[k] * &inv[e - k]);
            }
        }
        inv[e] = s;
    }
    inv
}
