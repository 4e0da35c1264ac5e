use cellorder::chartab::{character_table, IrrLabel};
use cellorder::combinat::{partitions, Partition};
use cellorder::coxeter::{CoxeterType, ParabolicSubset};
use cellorder::invariants::EqualParameter;
use cellorder::orders::suite::invariant_suite;
use cellorder::orders::{
    check_spaltenstein, families, family_poset, j_induce, leads_to, order_data, order_data_with, preceq_s,
    special_dual, verify_step, FamilyPoset, Relation, Scope,
};
use cellorder::Error;
use proptest::prelude::*;

fn t(s: &str) -> CoxeterType {
    CoxeterType::parse(s).unwrap()
}

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec())
}

fn part(v: &[u32]) -> IrrLabel {
    IrrLabel::Partition(p(v))
}

fn catalog() -> Vec<CoxeterType> {
    let mut v = Vec::new();
    for n in 1..=6 {
        v.push(t(&format!("A{n}")));
    }
    for n in 2..=6 {
        v.push(t(&format!("B{n}")));
    }
    for n in 4..=6 {
        v.push(t(&format!("D{n}")));
    }
    for m in 3..=10 {
        v.push(t(&format!("I2({m})")));
    }
    for s in ["H3", "H4", "F4", "A1xA1", "A1xA2", "A1xA1xA1", "A1xI2(5)"] {
        v.push(t(s));
    }
    v
}

#[test]
fn leads_to_examples() {
    let a3 = t("A3");
    for p in a3.proper_parabolics() {
        let (sub, _) = p.classify();
        let st = character_table(&sub).unwrap();
        assert!(leads_to(&a3, &p.nodes, &st.irreps[st.unit()], &part(&[4])).unwrap());
    }
    let a2 = t("A2");
    let sign = part(&[1, 1]);
    assert!(leads_to(&a2, &[0], &sign, &part(&[2, 1])).unwrap());
    assert!(!leads_to(&a2, &[0], &sign, &part(&[1, 1, 1])).unwrap());
}

#[test]
fn type_a_families_and_dominance() {
    for n in 2..=6u32 {
        let ty = t(&format!("A{}", n - 1));
        let d = order_data(&ty).unwrap();
        assert!(d.families.families.iter().all(|f| f.members.len() == 1));
        for l in partitions(n) {
            for m in partitions(n) {
                let (e, f) = (d.table.irr_index(&IrrLabel::Partition(l.clone())).unwrap(), d.table.irr_index(&IrrLabel::Partition(m.clone())).unwrap());
                assert_eq!(d.preceq(e, f), l.dominated_by(&m), "{l} {m}");
            }
        }
    }
    assert_eq!(families(&t("A1")).unwrap().families.len(), 2);
}

#[test]
fn a2_chain() {
    let p = family_poset(&t("A2")).unwrap();
    let members: Vec<&str> = p.nodes.iter().map(|n| n.members[0].as_str()).collect();
    assert_eq!(members, ["(3)", "(2,1)", "(1,1,1)"]);
    let mut edges: Vec<(usize, usize)> = p.edges.iter().map(|e| (e.from, e.to)).collect();
    edges.sort();
    assert_eq!(edges, [(1, 0), (2, 1)]);
    assert!(p.is_total());
}

#[test]
fn h4_is_a_chain_ordered_by_a() {
    let ty = t("H4");
    let d = order_data(&ty).unwrap();
    assert_eq!(d.table.num_irreps(), 34);
    assert_eq!(d.families.families.len(), 13);
    for e in 0..34 {
        for f in 0..34 {
            assert_eq!(d.preceq(e, f), d.a[f] <= d.a[e]);
        }
    }
    let p = family_poset(&ty).unwrap();
    assert!(p.is_total());
    assert_eq!(p.edges.len(), 12);
    assert_eq!(p.to_dot().matches("rank=same").count(), 13);
}

#[test]
fn unit_on_top_sign_at_the_bottom() {
    for ty in catalog() {
        let d = order_data(&ty).unwrap();
        let (u, s) = (d.table.unit(), d.table.sign());
        for e in 0..d.table.num_irreps() {
            assert!(d.preceq(e, u) && d.preceq(s, e), "{ty}");
        }
        let rel = FamilyPoset::from_data(&d).relation();
        let k = rel.size();
        let maxima = (0..k).filter(|&i| (0..k).all(|j| !rel.get(i, j) || i == j)).count();
        let minima = (0..k).filter(|&i| (0..k).all(|j| !rel.get(j, i) || i == j)).count();
        assert_eq!((maxima, minima), (1, 1), "{ty}");
    }
}

#[test]
fn a1xa1_is_a_square() {
    let p = family_poset(&t("A1xA1")).unwrap();
    assert_eq!(p.nodes.len(), 4);
    assert_eq!(p.edges.len(), 4);
    assert!(!p.is_total());
}

#[test]
fn j_induction_examples() {
    for ty in catalog() {
        let d = order_data(&ty).unwrap();
        for p in ty.proper_parabolics() {
            let (sub, _) = p.classify();
            let st = character_table(&sub).unwrap();
            assert_eq!(j_induce(&ty, &p.nodes, &st.irreps[st.unit()]).unwrap(), d.table.irreps[d.table.unit()]);
        }
    }
    assert_eq!(j_induce(&t("A2"), &[0], &part(&[1, 1])).unwrap(), part(&[2, 1]));
    // not special in W_I
    let b3 = t("B3");
    let d = order_data(&b3).unwrap();
    let n = (0..d.table.num_irreps()).find(|&e| !d.is_special(e)).unwrap();
    let b2 = ParabolicSubset::new(&b3, vec![0, 1]).classify().0;
    let sub = order_data(&b2).unwrap();
    let m = (0..sub.table.num_irreps()).find(|&e| !sub.is_special(e)).unwrap();
    assert!(matches!(j_induce(&b3, &[0, 1], sub.label(m)), Err(Error::Domain(_))));
    assert!(matches!(special_dual(&b3, d.label(n)), Err(Error::Domain(_))));
}

/// Sign of a Young subgroup `S_λ` j-induces to `E^{λ'}`.
#[test]
fn j_of_young_signs() {
    let n = 6u32;
    let ty = t(&format!("A{}", n - 1));
    for comp in [vec![3, 2, 1], vec![2, 2, 2], vec![1, 4, 1], vec![2, 4], vec![5, 1], vec![3, 3]] {
        let mut nodes = Vec::new();
        let mut start = 0;
        for &k in &comp {
            nodes.extend(start..start + k as usize - 1);
            start += k as usize;
        }
        let p = ParabolicSubset::new(&ty, nodes.clone());
        let (sub, _) = p.classify();
        let st = character_table(&sub).unwrap();
        let j = j_induce(&ty, &nodes, &st.irreps[st.sign()]).unwrap();
        assert_eq!(j, IrrLabel::Partition(Partition::new(comp.clone()).conjugate()), "{comp:?}");
    }
}

#[test]
fn special_duality() {
    for n in 2..=6u32 {
        let ty = t(&format!("A{}", n - 1));
        for l in partitions(n) {
            assert_eq!(special_dual(&ty, &IrrLabel::Partition(l.clone())).unwrap(), IrrLabel::Partition(l.conjugate()));
        }
    }
    for ty in catalog() {
        let d = order_data(&ty).unwrap();
        let (u, s) = (&d.table.irreps[d.table.unit()], &d.table.irreps[d.table.sign()]);
        assert_eq!(&special_dual(&ty, u).unwrap(), s);
        for e in (0..d.table.num_irreps()).filter(|&e| d.is_special(e)) {
            let l = &d.table.irreps[e];
            assert_eq!(&special_dual(&ty, &special_dual(&ty, l).unwrap()).unwrap(), l, "{ty}");
        }
    }
}

#[test]
fn special_order() {
    for ty in catalog() {
        let d = order_data(&ty).unwrap();
        let s = preceq_s(&ty, Scope::AllProper).unwrap();
        assert!(s.relates(d.table.sign(), d.table.unit()), "{ty}");
        for (i, j) in s.leq.pairs() {
            assert!(d.preceq(s.specials[i], s.specials[j]), "{ty}");
        }
    }
}

#[test]
fn spaltenstein_reports() {
    for ty in catalog() {
        let r = check_spaltenstein(&ty).unwrap();
        let d = order_data(&ty).unwrap();
        let unit = d.table.irreps[d.table.unit()].to_string();
        let sign = d.table.irreps[d.table.sign()].to_string();
        assert!(r.j_induced.contains(&unit), "{ty}");
        if ty.is_irreducible() {
            assert!(!r.j_induced.contains(&sign), "{ty}");
            assert!(r.others.iter().any(|(l, x, y)| *l == sign && *x == 0 && *y == ty.num_positive_roots()));
        }
    }
    for s in ["H3", "H4", "F4"] {
        let r = check_spaltenstein(&t(s)).unwrap();
        assert!(!r.others.is_empty());
        assert!(serde_json::to_string(&r).unwrap().contains("\"type\""));
    }
}

#[test]
fn maximal_and_all_proper_agree() {
    for s in ["A3", "B3", "H3", "D4", "F4"] {
        let ty = t(s);
        let m = order_data(&ty).unwrap();
        let a = order_data_with(&ty, &EqualParameter, Scope::AllProper).unwrap();
        assert_eq!(m.leq, a.leq, "{s}");
        assert_eq!(m.families, a.families, "{s}");
    }
}

#[test]
fn products() {
    for s in ["A1xA2", "A1xA1xA1", "A1xI2(5)"] {
        let r = invariant_suite(&t(s));
        assert!(r.checks.iter().any(|c| c.name.contains("product")));
        assert!(r.passed(), "{}", r.to_text());
    }
}

#[test]
fn witnesses_recompute_and_detect_tampering() {
    for s in ["B3", "H3", "D4", "A4"] {
        let d = order_data(&t(s)).unwrap();
        let edges = d.step_edges();
        for &(e, f, w) in &edges {
            assert!(verify_step(&d, e, f, w).unwrap());
        }
        // swapping the endpoints of a strict step must not verify
        let strict = edges.iter().find(|(e, f, _)| d.a[*e] != d.a[*f]).unwrap();
        assert!(!verify_step(&d, strict.1, strict.0, strict.2).unwrap());
    }
}

#[test]
fn json_round_trip() {
    for ty in catalog() {
        let p = family_poset(&ty).unwrap();
        let back = FamilyPoset::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.relation(), p.relation());
    }
    let bad = family_poset(&t("A2")).unwrap().to_json().replace("family-poset/1", "family-poset/9");
    assert!(FamilyPoset::from_json(&bad).is_err());
}

#[test]
fn suite_passes_on_catalog() {
    for ty in catalog() {
        let r = invariant_suite(&ty);
        assert!(r.passed(), "{}", r.to_text());
    }
}

fn relation(n: usize) -> impl Strategy<Value = Relation> {
    prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
        let mut r = Relation::empty(n);
        for i in 0..n {
            for j in 0..n {
                if bits[i * n + j] {
                    r.set(i, j);
                }
            }
        }
        r
    })
}

proptest! {
    #[test]
    fn closure_is_the_least_preorder(r in relation(7)) {
        let c = r.closure();
        prop_assert!(c.is_reflexive() && c.is_transitive());
        prop_assert_eq!(c.closure(), c.clone());
        for (i, j) in r.pairs() {
            prop_assert!(c.get(i, j));
        }
        // pairs i < j generate a partial order, recovered from its covers
        let mut up = Relation::empty(7);
        for (i, j) in r.pairs().filter(|(i, j)| i < j) {
            up.set(i, j);
        }
        let order = up.closure();
        prop_assert!(order.symmetric_classes().iter().all(|k| k.len() == 1));
        let mut h = Relation::empty(7);
        for (i, j) in order.covers() {
            h.set(i, j);
        }
        prop_assert_eq!(h.closure(), order);
    }
}
