//! Invariants of the tables, `a`, families, `⪯` and `⪯_s` for one type.

use crate::chartab::{character_table, induction_matrix, IrrLabel};
use crate::coxeter::{CoxeterType, ParabolicSubset};
use crate::error::Result;
use crate::invariants::EqualParameter;
use crate::report::VerificationReport;
use crate::scalars::IntPoly;

use super::{
    check_spaltenstein, family_relation, order_data, order_data_with, preceq_s, verify_step, OrderData, Scope,
};

fn proper(t: &CoxeterType) -> Vec<ParabolicSubset> {
    if t.rank() == 0 {
        Vec::new()
    } else {
        t.proper_parabolics()
    }
}

fn pairs<F: Fn(usize, usize) -> Option<String>>(n: usize, f: F) -> Option<String> {
    (0..n).flat_map(|e| (0..n).map(move |g| (e, g))).find_map(|(e, g)| f(e, g))
}

fn table_checks(r: &mut VerificationReport, t: &CoxeterType) {
    r.run("orthogonality relations", || {
        character_table(t)?.validate()?;
        Ok(None)
    });
    r.run("R_E(1) = dim E", || {
        let tab = character_table(t)?;
        let fake = tab.fake_degrees()?;
        Ok((0..tab.num_irreps())
            .find(|&e| fake[e].eval_one() != tab.dim(e) as i64)
            .map(|e| format!("{}: R_E(1) = {}", tab.irreps[e], fake[e].eval_one())))
    });
    r.run("Σ dim(E) R_E = Π (1 + q + … + q^(d-1))", || {
        let tab = character_table(t)?;
        let fake = tab.fake_degrees()?;
        let lhs = (0..tab.num_irreps())
            .fold(IntPoly::zero(), |acc, e| &acc + &fake[e].scale(&(tab.dim(e) as i64)));
        let rhs = t
            .degrees()
            .iter()
            .fold(IntPoly::one(), |acc, &d| &acc * &IntPoly::from_coeffs(0, vec![1; d as usize]));
        Ok((lhs != rhs).then(|| format!("{lhs} ≠ {rhs}")))
    });
}

fn family_checks(r: &mut VerificationReport, d: &OrderData) {
    let n = d.table.num_irreps();
    r.run("a ≤ b", || {
        Ok((0..n).find(|&e| d.a[e] > d.b[e]).map(|e| format!("{}: a = {}, b = {}", d.label(e), d.a[e], d.b[e])))
    });
    r.run("one special per family, least b in a family equals its a", || {
        for f in &d.families.families {
            let specials = f.members.iter().filter(|&&e| d.is_special(e)).count();
            let least = f.members.iter().map(|&e| d.b[e]).min();
            if specials != 1 || least != Some(f.a) || f.members.iter().any(|&e| d.a[e] != f.a) {
                return Ok(Some(format!("family of {}", d.label(f.members[0]))));
            }
        }
        Ok(None)
    });
    r.run("a_E ≥ a_M on Ind(M), with equality attained", || {
        for p in proper(&d.ty) {
            let ind = induction_matrix(&p)?;
            let sub = order_data(&ind.sub.ty)?;
            for (m, row) in ind.mult.iter().enumerate() {
                let cons = (0..n).filter(|&e| row[e] > 0);
                let least = cons.clone().map(|e| d.a[e]).min();
                if cons.clone().any(|e| d.a[e] < sub.a[m]) || least != Some(sub.a[m]) {
                    return Ok(Some(format!("I = {:?}, M = {}", p.nodes, sub.label(m))));
                }
            }
        }
        Ok(None)
    });
    r.run("E ⪯ E' implies a_E' ≤ a_E", || {
        Ok(pairs(n, |e, f| {
            (d.preceq(e, f) && d.a[f] > d.a[e]).then(|| format!("{} ⪯ {}", d.label(e), d.label(f)))
        }))
    });
    r.run("mutual ⪯ iff same family", || {
        let fam = &d.families.family_of;
        Ok(pairs(n, |e, f| {
            ((d.preceq(e, f) && d.preceq(f, e)) != (fam[e] == fam[f])).then(|| format!("{} and {}", d.label(e), d.label(f)))
        }))
    });
    r.run("E ⪯ E' iff E' ⊗ sgn ⪯ E ⊗ sgn", || {
        Ok(pairs(n, |e, f| {
            (d.preceq(e, f) != d.preceq(d.sign[f], d.sign[e])).then(|| format!("{} and {}", d.label(e), d.label(f)))
        }))
    });
    r.run("⪯ is a partial order on families", || {
        let rel = family_relation(d);
        let k = rel.size();
        let antisym = (0..k).all(|i| (0..k).all(|j| i == j || !(rel.get(i, j) && rel.get(j, i))));
        Ok((!(rel.is_reflexive() && rel.is_transitive() && antisym)).then(|| "not a partial order".to_string()))
    });
    r.run("step witnesses recompute", || {
        for (e, f, w) in d.step_edges() {
            if !verify_step(d, e, f, w)? {
                return Ok(Some(format!("{} ⪯ {} via {:?}", d.label(e), d.label(f), w)));
            }
        }
        Ok(None)
    });
}

fn special_checks(r: &mut VerificationReport, t: &CoxeterType, d: &OrderData) {
    r.run("⪯ over all proper parabolics equals ⪯ over maximal ones", || {
        let all = order_data_with(t, &EqualParameter, Scope::AllProper)?;
        Ok((all.leq != d.leq).then(|| "relations differ".to_string()))
    });
    r.run("⪯_s is reflexive and transitive", || {
        let s = preceq_s(t, Scope::AllProper)?;
        Ok((!(s.leq.is_reflexive() && s.leq.is_transitive())).then(|| "not a preorder".to_string()))
    });
    r.run("E ⪯_s E' implies E ⪯ E'", || {
        let s = preceq_s(t, Scope::AllProper)?;
        for (i, j) in s.leq.pairs() {
            let (e, f) = (s.specials[i], s.specials[j]);
            if !d.preceq(e, f) {
                return Ok(Some(format!("{} ⪯_s {}", d.label(e), d.label(f))));
            }
        }
        Ok(None)
    });
    r.run("a(E ⊗ sgn) < a(E) for specials that are not j-induced", || {
        check_spaltenstein(t)?;
        Ok(None)
    });
}

/// Component indices of each irreducible of a product in its factor tables.
fn components(d: &OrderData) -> Result<Option<Vec<Vec<usize>>>> {
    let Some(factors) = d.table.factor_tables() else {
        return Ok(None);
    };
    let mut comps = Vec::new();
    for l in &d.table.irreps {
        let IrrLabel::Product(parts) = l else {
            return Ok(None);
        };
        match parts.iter().zip(factors).map(|(m, f)| f.irr_index(m)).collect::<Option<Vec<_>>>() {
            Some(c) => comps.push(c),
            None => return Ok(None),
        }
    }
    Ok(Some(comps))
}

fn product_checks(r: &mut VerificationReport, t: &CoxeterType, d: &OrderData) {
    if t.factors().len() < 2 {
        return;
    }
    let factor_data = || -> Result<_> {
        let factors = d.table.factor_tables().unwrap_or_default();
        factors.iter().map(|f| order_data(&f.ty)).collect::<Result<Vec<_>>>()
    };
    let n = d.table.num_irreps();
    r.run("families of a product are products of families, a adds", || {
        let (Some(comps), fdata) = (components(d)?, factor_data()?) else {
            return Ok(Some("irreducibles are not product labels".to_string()));
        };
        let fam = &d.families.family_of;
        if let Some(e) = (0..n).find(|&e| d.a[e] != (0..fdata.len()).map(|i| fdata[i].a[comps[e][i]]).sum::<u32>()) {
            return Ok(Some(format!("a of {}", d.label(e))));
        }
        Ok(pairs(n, |e, f| {
            let same = (0..fdata.len())
                .all(|i| fdata[i].families.family_of[comps[e][i]] == fdata[i].families.family_of[comps[f][i]]);
            (same != (fam[e] == fam[f])).then(|| format!("{} and {}", d.label(e), d.label(f)))
        }))
    });
    r.run("⪯ on a product is the product of the factor relations", || {
        let (Some(comps), fdata) = (components(d)?, factor_data()?) else {
            return Ok(Some("irreducibles are not product labels".to_string()));
        };
        Ok(pairs(n, |e, f| {
            let leq = (0..fdata.len()).all(|i| fdata[i].preceq(comps[e][i], comps[f][i]));
            (leq != d.preceq(e, f)).then(|| format!("{} and {}", d.label(e), d.label(f)))
        }))
    });
}

/// All table, family and order invariants for `t`.
pub fn invariant_suite(t: &CoxeterType) -> VerificationReport {
    let mut r = VerificationReport::new(t);
    table_checks(&mut r, t);
    let d = match order_data(t) {
        Ok(d) => d,
        Err(e) => {
            r.run("order data", || Err(e));
            return r;
        }
    };
    family_checks(&mut r, &d);
    special_checks(&mut r, t, &d);
    product_checks(&mut r, t, &d);
    r
}
