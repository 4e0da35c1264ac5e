//! One line per acceptance criterion: status, what was measured, time against its
//! limit. Runs without the test harness so the lines always reach the output.

use std::time::{Duration, Instant};

use cellorder::combinat::partitions;
use cellorder::chartab::IrrLabel;
use cellorder::coxeter::{realize, CoxeterType};
use cellorder::kl_oracle::suite::{compare_with_orders, oracle_poset, oracle_suite};
use cellorder::kl_oracle::{cell_data, kl_polys};
use cellorder::orders::suite::invariant_suite;
use cellorder::orders::{family_poset, family_relation, order_data};
use cellorder::report::VerificationReport;
use cellorder::scalars::IntPoly;
use cellorder::springer_a::check_fthm_a;
use cellorder::Result;

const MULTIPLICITY_ONE: &str = "specials occur once in the left cells of their two-sided cell";

fn t(s: &str) -> CoxeterType {
    CoxeterType::parse(s).unwrap()
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { passed, detail: detail.into() })
}

fn first_failure(reports: &[VerificationReport]) -> Option<String> {
    reports.iter().find_map(|r| {
        r.failures().first().map(|c| format!("{} {}: {}", r.ty, c.name, c.witness.clone().unwrap_or_default()))
    })
}

/// `limit` is the pinned runtime bound, where the criterion has one.
fn criterion(n: u32, limit: Option<Duration>, f: impl FnOnce() -> Result<Outcome>) -> bool {
    let start = Instant::now();
    let out = f().unwrap_or_else(|e| Outcome { passed: false, detail: format!("error: {e}") });
    let took = start.elapsed();
    let passed = out.passed && limit.is_none_or(|l| took <= l);
    let bound = limit.map_or("no limit".to_string(), |l| format!("limit {} s", l.as_secs()));
    println!(
        "criterion {n}: {}  {}  ({:.2} s, {bound})",
        if passed { "PASS" } else { "FAIL" },
        out.detail,
        took.as_secs_f64()
    );
    passed
}

fn h4_headline() -> Result<Outcome> {
    let ty = t("H4");
    let d = order_data(&ty)?;
    let n = d.table.num_irreps();
    let poset = family_poset(&ty)?;
    let by_a = (0..n).all(|e| (0..n).all(|f| d.preceq(e, f) == (d.a[f] <= d.a[e])));
    let k = d.families.families.len();
    outcome(
        n == 34 && k == 13 && poset.is_total() && by_a,
        format!("H4: {n} irreducibles, {k} families, total = {}, ⪯ ⇔ a-order on all pairs = {by_a}", poset.is_total()),
    )
}

fn f4_against_oracle() -> Result<Outcome> {
    let ty = t("F4");
    let d = order_data(&ty)?;
    let cd = cell_data(&ty)?;
    let cmp = compare_with_orders(&ty);
    let same_poset = oracle_poset(&ty)? == family_poset(&ty)?;
    let ok = d.table.num_irreps() == 25 && cmp.passed() && same_poset;
    outcome(
        ok,
        format!(
            "F4: {} irreducibles, {} families, oracle on {} elements: {} two-sided cells, fibres = families and orders agree = {}",
            d.table.num_irreps(),
            d.families.families.len(),
            cd.kl.group.size(),
            cd.two_sided.len(),
            cmp.passed() && same_poset
        ),
    )
}

fn type_a_dominance() -> Result<Outcome> {
    for n in 3..=6u32 {
        let ty = t(&format!("A{}", n - 1));
        let d = order_data(&ty)?;
        if d.families.families.iter().any(|f| f.members.len() != 1) {
            return outcome(false, format!("S_{n}: a family is not a singleton"));
        }
        let rel = family_relation(&d);
        let fams = &d.families.families;
        for (i, fi) in fams.iter().enumerate() {
            for (j, fj) in fams.iter().enumerate() {
                let (IrrLabel::Partition(l), IrrLabel::Partition(m)) = (d.label(fi.members[0]), d.label(fj.members[0])) else {
                    return outcome(false, "non-partition label");
                };
                if rel.get(i, j) != l.dominated_by(m) {
                    return outcome(false, format!("S_{n}: {l} vs {m}"));
                }
            }
        }
        if fams.len() != partitions(n).len() {
            return outcome(false, format!("S_{n}: family count"));
        }
    }
    outcome(true, "S_3..S_6: singleton families, poset = dominance on all pairs")
}

fn oracle_equivalence(multiplicity: &mut Vec<VerificationReport>) -> Result<Outcome> {
    let mut types: Vec<String> = ["A1", "A2", "A3", "A4", "B2", "B3", "D4", "H3"].map(String::from).to_vec();
    types.extend((3..=8).map(|m| format!("I2({m})")));
    let mut reports = Vec::new();
    for s in &types {
        let ty = t(s);
        let mut r = compare_with_orders(&ty);
        r.run("oracle poset equals the family poset", || {
            Ok((oracle_poset(&ty)? != family_poset(&ty)?).then(|| "posets differ".to_string()))
        });
        reports.push(r);
        multiplicity.push(oracle_suite(&ty));
    }
    let fail = first_failure(&reports);
    outcome(fail.is_none(), fail.unwrap_or_else(|| format!("{} types: fibres = families, ≤_LR = ⪯", types.len())))
}

fn invariant_catalog() -> Result<Outcome> {
    let mut types = Vec::new();
    types.extend((1..=7).map(|n| format!("A{n}")));
    types.extend((2..=7).map(|n| format!("B{n}")));
    types.extend((4..=7).map(|n| format!("D{n}")));
    types.extend((3..=30).map(|m| format!("I2({m})")));
    types.extend(["A1xA1", "H3", "H4", "F4"].map(String::from));
    let reports: Vec<_> = types.iter().map(|s| invariant_suite(&t(s))).collect();
    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    let fail = first_failure(&reports);
    outcome(fail.is_none(), fail.unwrap_or_else(|| format!("{} types, {checks} checks, 0 failures", types.len())))
}

fn springer() -> Result<Outcome> {
    let reports = (2..=6).map(check_fthm_a).collect::<Result<Vec<_>>>()?;
    let fail = first_failure(&reports);
    outcome(fail.is_none(), fail.unwrap_or_else(|| "S_2..S_6: family order and ⪯_s ⇔ closure order of Springer images".into()))
}

fn micro_facts(mut multiplicity: Vec<VerificationReport>) -> Result<Outcome> {
    let a2 = cell_data(&t("A2"))?;
    let k = a2.two_sided.len();
    let chain = (0..k).all(|i| (0..k).all(|j| a2.lr_leq[i][j] || a2.lr_leq[j][i]));
    if a2.left_cells.len() != 4 || k != 3 || !chain {
        return outcome(false, "A2 cells");
    }
    for m in 3..=12 {
        let ty = t(&format!("I2({m})"));
        let kl = kl_polys(&ty)?;
        let g = realize(&ty)?;
        let n = g.size() as u32;
        let trivial = (0..n).all(|w| (0..n).all(|y| !kl.bruhat_leq(y, w) || kl.poly(y, w) == IntPoly::one()));
        if !trivial || cell_data(&ty)?.two_sided.len() != 3 {
            return outcome(false, format!("I2({m})"));
        }
        multiplicity.push(oracle_suite(&ty));
    }
    multiplicity.push(oracle_suite(&t("F4")));
    let runs = multiplicity.len();
    let bad = multiplicity
        .iter()
        .find(|r| r.checks.iter().any(|c| c.name == MULTIPLICITY_ONE && !c.passed))
        .map(|r| r.ty.clone());
    let counted = multiplicity.iter().all(|r| r.checks.iter().any(|c| c.name == MULTIPLICITY_ONE));
    outcome(
        bad.is_none() && counted,
        match bad {
            Some(ty) => format!("multiplicity one fails in {ty}"),
            None => format!("A2: 4 left, 3 two-sided cells in a chain; I2(3..12) trivial KL, 3 cells; multiplicity one in {runs} oracle runs"),
        },
    )
}

fn main() {
    let mut multiplicity = Vec::new();
    let results = [
        criterion(1, Some(Duration::from_secs(60)), h4_headline),
        criterion(2, Some(Duration::from_secs(15 * 60)), f4_against_oracle),
        criterion(3, Some(Duration::from_secs(60)), type_a_dominance),
        criterion(4, Some(Duration::from_secs(10 * 60)), || oracle_equivalence(&mut multiplicity)),
        criterion(5, None, invariant_catalog),
        criterion(6, Some(Duration::from_secs(30)), springer),
        criterion(7, None, || micro_facts(multiplicity)),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
