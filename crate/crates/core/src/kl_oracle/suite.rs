//! Cell-theoretic facts checked on the oracle data, and its comparison with the
//! truncated-induction side.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::chartab::induction_matrix;
use crate::coxeter::{realize, CoxeterType, ParabolicSubset, RealizedGroup};
use crate::error::Result;
use crate::invariants::a_values;
use crate::orders::{order_data, FamilyPoset};
use crate::report::VerificationReport;

use super::{cell_data, CellData};

/// Image in `W` of every element of the parabolic subgroup, numbered as in the
/// realization of its canonical type.
fn embed(g: &RealizedGroup, sub: &RealizedGroup, map: &[usize]) -> Vec<u32> {
    (0..sub.size() as u32)
        .map(|w| g.element_of_word(&sub.word(w).iter().map(|&s| map[s]).collect::<Vec<_>>()))
        .collect()
}

/// `x = d w` with `d ∈ X_I`, `w ∈ W_I`; returns a word for `w` in ambient nodes.
fn parabolic_part(g: &RealizedGroup, x: u32, nodes: &[usize]) -> Vec<usize> {
    let mut cur = x;
    let mut stripped = Vec::new();
    while let Some(&s) = nodes.iter().find(|&&s| g.is_right_descent(cur, s)) {
        cur = g.mul_right(cur, s);
        stripped.push(s);
    }
    stripped.reverse();
    stripped
}

/// `a` of each two-sided cell read off the KL polynomials.
fn cell_a(cd: &CellData) -> Vec<usize> {
    (0..cd.two_sided.len()).map(|c| cd.a_from_degrees(c)).collect()
}

/// Irreducibles `E` with `b_E = a(F_E)`.
fn oracle_specials(cd: &CellData) -> Result<Vec<bool>> {
    let a = cell_a(cd);
    let fake = cd.table.fake_degrees()?;
    Ok((0..cd.table.num_irreps())
        .map(|e| fake[e].valuation().map(|b| b as usize == a[cd.irr_cell[e]]).unwrap_or(false))
        .collect())
}

fn subsets(t: &CoxeterType) -> Vec<ParabolicSubset> {
    if t.rank() == 0 {
        Vec::new()
    } else {
        t.proper_parabolics()
    }
}

fn check_multiplicity_one(cd: &CellData) -> Result<Option<String>> {
    let special = oracle_specials(cd)?;
    for (c, module) in cd.left_cell_modules.iter().enumerate() {
        let two = cd.two_sided_of[cd.left_cells[c][0] as usize];
        for e in (0..special.len()).filter(|&e| special[e] && cd.irr_cell[e] == two) {
            if module[e] != 1 {
                return Ok(Some(format!(
                    "special {} occurs {} times in left cell {c}",
                    cd.table.irreps[e], module[e]
                )));
            }
        }
    }
    Ok(None)
}

/// Induction and cells, for every `I ⊊ S`: the decomposition lemma for
/// `x = dw`, `F_E ≤_LR F_M` for constituents, and `F_M ⊆ F_E` when `M ⇝_L E`.
fn check_induction(t: &CoxeterType, cd: &CellData) -> Result<Option<String>> {
    let g = &cd.kl.group;
    let a = cell_a(cd);
    for p in subsets(t) {
        let ind = induction_matrix(&p)?;
        let (sub_ty, map) = p.classify();
        let sub_cd = cell_data(&sub_ty)?;
        let sub_g = realize(&sub_ty)?;
        let sub_a = cell_a(&sub_cd);
        let image = embed(g, &sub_g, &map);
        let mut inverse = vec![usize::MAX; t.rank()];
        for (local, &node) in map.iter().enumerate() {
            inverse[node] = local;
        }
        let ns = sub_cd.two_sided.len();
        // ambient two-sided cells met by each embedded cell of W_I
        let met: Vec<BTreeSet<usize>> = (0..ns)
            .map(|c| sub_cd.two_sided[c].iter().map(|&w| cd.two_sided_of[image[w as usize] as usize]).collect())
            .collect();
        // irreducibles induced from some M with F_M = c
        let mut induced = vec![vec![false; cd.table.num_irreps()]; ns];
        for (m, row) in ind.mult.iter().enumerate() {
            let fm = sub_cd.irr_cell[m];
            for (e, &k) in row.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                induced[fm][e] = true;
                let fe = cd.irr_cell[e];
                if let Some(&y) = met[fm].iter().find(|&&y| !cd.lr_leq[fe][y]) {
                    return Ok(Some(format!(
                        "I = {:?}: {} in Ind({}) but F_E is not below the cell {y} met by F_M",
                        p.nodes, cd.table.irreps[e], sub_cd.table.irreps[m]
                    )));
                }
                if a[fe] == sub_a[fm] && met[fm] != BTreeSet::from([fe]) {
                    return Ok(Some(format!(
                        "I = {:?}: {} leads to {} but F_M is not inside F_E",
                        p.nodes, sub_cd.table.irreps[m], cd.table.irreps[e]
                    )));
                }
            }
        }
        for x in 0..g.size() as u32 {
            let word: Vec<usize> = parabolic_part(g, x, &p.nodes).iter().map(|&s| inverse[s]).collect();
            let w = sub_g.element_of_word(&word);
            let fw = sub_cd.two_sided_of[w as usize];
            let module = &cd.left_cell_modules[cd.left_cell_of[x as usize]];
            if let Some(e) = (0..module.len()).find(|&e| module[e] > 0 && !induced[fw][e]) {
                return Ok(Some(format!(
                    "I = {:?}, x = {:?}: no M with w in F_M induces {}",
                    p.nodes,
                    g.word(x),
                    cd.table.irreps[e]
                )));
            }
        }
    }
    Ok(None)
}

/// `x ≤_LR y` implies `x ≤_L z ∼_R y` for some `z`.
fn check_lusztig_xi(cd: &CellData) -> Option<String> {
    for (lc, lmembers) in cd.left_cells.iter().enumerate() {
        let lx = cd.two_sided_of[lmembers[0] as usize];
        for rmembers in &cd.right_cells {
            let ry = cd.two_sided_of[rmembers[0] as usize];
            if !cd.lr_leq[lx][ry] {
                continue;
            }
            if !rmembers.iter().any(|&z| cd.left_leq[lc][cd.left_cell_of[z as usize]]) {
                return Some(format!("x = {}, y = {}", lmembers[0], rmembers[0]));
            }
        }
    }
    None
}

/// `a(F w0) < a(F)` for two-sided cells meeting no proper parabolic subgroup.
fn check_w0_shift(cd: &CellData) -> Option<String> {
    let g = &cd.kl.group;
    let a = cell_a(cd);
    let full = (1u32 << g.rank) - 1;
    for (c, members) in cd.two_sided.iter().enumerate() {
        if g.rank == 0 || members.iter().any(|&w| g.support(w) != full) {
            continue;
        }
        let dual = cd.two_sided_of[g.mul(members[0], g.w0) as usize];
        if a[dual] >= a[c] {
            return Some(format!("cell of {:?}: a(F w0) = {} ≥ a(F) = {}", g.word(members[0]), a[dual], a[c]));
        }
    }
    None
}

/// `C w0` is a left cell and `[C w0]_1 ≅ [C]_1 ⊗ sgn`.
fn check_w0_duality(cd: &CellData) -> Option<String> {
    let g = &cd.kl.group;
    let sign = cd.table.tensor_sign_perm();
    for (c, members) in cd.left_cells.iter().enumerate() {
        let image: Vec<u32> = members.iter().map(|&x| g.mul(x, g.w0)).collect();
        let d = cd.left_cell_of[image[0] as usize];
        if image.iter().any(|&y| cd.left_cell_of[y as usize] != d) || cd.left_cells[d].len() != members.len() {
            return Some(format!("left cell {c} times w0 is not a left cell"));
        }
        let (m, n) = (&cd.left_cell_modules[c], &cd.left_cell_modules[d]);
        if (0..m.len()).any(|e| n[sign[e]] != m[e]) {
            return Some(format!("left cell {c}: [C w0] differs from [C] ⊗ sgn"));
        }
    }
    None
}

/// The cell-theoretic checks on the oracle data alone.
pub fn oracle_suite(t: &CoxeterType) -> VerificationReport {
    let mut r = VerificationReport::new(t);
    let cd = match cell_data(t) {
        Ok(cd) => cd,
        Err(e) => {
            r.run("cell data", || Err(e));
            return r;
        }
    };
    r.run("cell modules sum to the regular character", || {
        let mut total = vec![0u64; cd.table.num_irreps()];
        for m in &cd.left_cell_modules {
            for (e, &k) in m.iter().enumerate() {
                total[e] += k as u64;
            }
        }
        Ok((0..total.len())
            .find(|&e| total[e] != cd.table.dim(e))
            .map(|e| format!("{} occurs {} times", cd.table.irreps[e], total[e])))
    });
    r.run("{e} and {w0} are the top and bottom two-sided cells", || {
        let (top, bottom) = (cd.two_sided_of[0], cd.two_sided_of[cd.kl.group.w0 as usize]);
        let ok = cd.two_sided[top].len() == 1
            && cd.two_sided[bottom].len() == 1
            && (0..cd.two_sided.len()).all(|c| cd.lr_leq[c][top] && cd.lr_leq[bottom][c])
            && cd.irr_cell[cd.table.unit()] == top
            && cd.irr_cell[cd.table.sign()] == bottom;
        Ok((!ok).then(|| "extremal cells misplaced".to_string()))
    });
    r.run("a is constant on each two-sided cell", || {
        let a = a_values(t)?;
        let ca = cell_a(&cd);
        Ok((0..a.len())
            .find(|&e| a[e] as usize != ca[cd.irr_cell[e]])
            .map(|e| format!("{}: a = {}, cell a = {}", cd.table.irreps[e], a[e], ca[cd.irr_cell[e]])))
    });
    r.run("specials occur once in the left cells of their two-sided cell", || check_multiplicity_one(&cd));
    r.run("induction lemmas for every proper parabolic", || check_induction(t, &cd));
    r.run("x ≤_LR y gives x ≤_L z ∼_R y", || Ok(check_lusztig_xi(&cd)));
    r.run("a(F w0) < a(F) for cells meeting no proper parabolic", || Ok(check_w0_shift(&cd)));
    r.run("[C w0] ≅ [C] ⊗ sgn", || Ok(check_w0_duality(&cd)));
    r
}

/// Fibres of `E ↦ F_E` against families, and `≤_LR` against `⪯` on families.
pub fn compare_with_orders(t: &CoxeterType) -> VerificationReport {
    let mut r = VerificationReport::new(t);
    let data = match (cell_data(t), order_data(t)) {
        (Ok(cd), Ok(od)) => (cd, od),
        (Err(e), _) | (_, Err(e)) => {
            r.run("oracle and order data", || Err(e));
            return r;
        }
    };
    let (cd, od) = (&data.0, &data.1);
    r.run("fibres of E ↦ F_E are the families", || {
        let n = cd.table.num_irreps();
        for e in 0..n {
            for f in 0..n {
                let same_cell = cd.irr_cell[e] == cd.irr_cell[f];
                let same_family = od.families.family_of[e] == od.families.family_of[f];
                if same_cell != same_family {
                    return Ok(Some(format!("{} and {}", cd.table.irreps[e], cd.table.irreps[f])));
                }
            }
        }
        Ok(None)
    });
    r.run("≤_LR on families equals the order from ⪯", || {
        let n = cd.table.num_irreps();
        for e in 0..n {
            for f in 0..n {
                let lr = cd.lr_leq[cd.irr_cell[e]][cd.irr_cell[f]];
                if lr != od.preceq(e, f) {
                    return Ok(Some(format!(
                        "{} vs {}: ≤_LR {lr}, ⪯ {}",
                        cd.table.irreps[e],
                        cd.table.irreps[f],
                        od.preceq(e, f)
                    )));
                }
            }
        }
        Ok(None)
    });
    r
}

/// The order on families as read off the oracle, in the layout of [`FamilyPoset`].
pub fn oracle_poset(t: &CoxeterType) -> Result<FamilyPoset> {
    let cd = cell_data(t)?;
    let od = order_data(t)?;
    let mut p = FamilyPoset::from_data(&od);
    let fams = &od.families.families;
    let mut rel = crate::orders::Relation::empty(fams.len());
    for (i, fi) in fams.iter().enumerate() {
        for (j, fj) in fams.iter().enumerate() {
            if cd.lr_leq[cd.irr_cell[fi.members[0]]][cd.irr_cell[fj.members[0]]] {
                rel.set(i, j);
            }
        }
    }
    p.edges = rel
        .covers()
        .into_iter()
        .map(|(from, to)| crate::orders::PosetEdge { from, to })
        .collect();
    Ok(p)
}

/// W-graph and cell dump: descents and cell ids per element, and the module of
/// each left cell.
pub fn cell_dump(t: &CoxeterType) -> Result<Value> {
    let cd = cell_data(t)?;
    let g = &cd.kl.group;
    let elements: Vec<Value> = (0..g.size() as u32)
        .map(|w| {
            let i = w as usize;
            json!({
                "word": g.word(w),
                "left_descents": (0..g.rank).filter(|&s| cd.kl.ldesc[i] >> s & 1 == 1).collect::<Vec<_>>(),
                "right_descents": (0..g.rank).filter(|&s| cd.kl.rdesc[i] >> s & 1 == 1).collect::<Vec<_>>(),
                "left_cell": cd.left_cell_of[i],
                "right_cell": cd.right_cell_of[i],
                "two_sided_cell": cd.two_sided_of[i],
                "mu": cd.wgraph[i].iter().map(|&(x, m)| json!([x, m])).collect::<Vec<_>>(),
            })
        })
        .collect();
    let left_cells: Vec<Value> = cd
        .left_cell_modules
        .iter()
        .enumerate()
        .map(|(c, m)| {
            let module: Vec<Value> = m
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(e, &k)| json!([cd.table.irreps[e].to_string(), k]))
                .collect();
            json!({ "id": c, "size": cd.left_cells[c].len(), "module": module })
        })
        .collect();
    Ok(json!({
        "schema": "cellorder.cells/1",
        "type": t.to_string(),
        "elements": elements,
        "left_cells": left_cells,
    }))
}
