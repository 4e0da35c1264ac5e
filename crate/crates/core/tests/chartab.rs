use cellorder::chartab::{self, character_table, dixon, induce, ClassLabel, IrrLabel};
use cellorder::combinat::Partition;
use cellorder::coxeter::{realize_with_bound, CoxeterType, ParabolicSubset};
use cellorder::scalars::{CycRat, IntPoly};

fn t(s: &str) -> CoxeterType {
    CoxeterType::parse(s).unwrap()
}

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec())
}

/// Rows of the combinatorial table agree, as a set, with the Dixon–Schneider rows
/// transported along class identification by representative words.
fn agrees_with_dixon(ty: &CoxeterType) {
    let g = realize_with_bound(ty, 50_000).unwrap();
    let comp = dixon::compute(&g).unwrap();
    let table = character_table(ty).unwrap();
    let r = table.num_classes();
    assert_eq!(comp.classes.len(), r, "{ty}");
    let map: Vec<usize> = comp.classes.iter().map(|c| table.class_of_word(&c.word)).collect();
    let mut seen = vec![false; r];
    for (k, c) in comp.classes.iter().enumerate() {
        assert!(!seen[map[k]], "{ty}: two classes fuse");
        seen[map[k]] = true;
        assert_eq!(table.classes[map[k]].size, c.size, "{ty}: size of {}", table.classes[map[k]].label);
    }
    let mut mine: Vec<Vec<CycRat>> = table.values.clone();
    let mut theirs: Vec<Vec<CycRat>> = comp
        .values
        .iter()
        .map(|row| {
            let mut v = vec![CycRat::zero(); r];
            for k in 0..r {
                v[map[k]] = row[k].clone();
            }
            v
        })
        .collect();
    let key = |v: &Vec<CycRat>| format!("{v:?}");
    mine.sort_by_key(key);
    theirs.sort_by_key(key);
    assert_eq!(mine, theirs, "{ty}");
}

#[test]
fn classical_tables_match_dixon() {
    for s in ["A1", "A3", "A4", "B2", "B3", "B4", "D4", "D5", "I2(5)", "I2(6)", "I2(8)", "A1xB2"] {
        agrees_with_dixon(&t(s));
    }
}

#[test]
fn split_classes_of_d6_match_dixon() {
    agrees_with_dixon(&t("D6"));
}

#[test]
fn degenerate_d4_labels_pinned() {
    // (λ,λ,+) takes the larger value on the class of sign-free permutations
    let table = character_table(&t("D4")).unwrap();
    let plus = table.irr_index(&IrrLabel::DDegenerate(p(&[1, 1]), true)).unwrap();
    let c = table
        .class_index(&ClassLabel::DSigned(p(&[2, 2]), Partition::empty(), Some(true)))
        .unwrap();
    let minus = table.irr_index(&IrrLabel::DDegenerate(p(&[1, 1]), false)).unwrap();
    let (x, y) = (table.values[plus][c].as_integer().unwrap(), table.values[minus][c].as_integer().unwrap());
    assert!(x > y);
}

#[test]
fn a2_values_and_fake_degrees() {
    let table = character_table(&t("A2")).unwrap();
    let i = table.irr_index(&IrrLabel::Partition(p(&[2, 1]))).unwrap();
    let at = |c: &[u32]| table.values[i][table.class_index(&ClassLabel::Partition(p(c))).unwrap()].clone();
    assert_eq!(at(&[1, 1, 1]), CycRat::from_int(2));
    assert_eq!(at(&[2, 1]), CycRat::from_int(0));
    assert_eq!(at(&[3]), CycRat::from_int(-1));
    assert_eq!(table.fake_degree(i).unwrap(), IntPoly::from_coeffs(1, vec![1, 1]));
}

#[test]
fn dihedral_phi_values() {
    let table = character_table(&t("I2(5)")).unwrap();
    let phi = table.irr_index(&IrrLabel::Dihedral(chartab::DihedralIrr::Phi(1))).unwrap();
    let r1 = table.class_index(&ClassLabel::Rotation(1)).unwrap();
    let r2 = table.class_index(&ClassLabel::Rotation(2)).unwrap();
    assert_eq!(table.values[phi][r1], CycRat::root_sum(5, 1));
    assert_eq!(table.values[phi][r2], CycRat::root_sum(5, 2));
    assert_eq!(table.num_irreps(), 4);
    assert_eq!(character_table(&t("I2(8)")).unwrap().num_irreps(), 7);
}

#[test]
fn label_counts() {
    let counts = [("A5", 11), ("B3", 10), ("B4", 20), ("D4", 13), ("D5", 18), ("D6", 37), ("I2(7)", 5)];
    for (s, n) in counts {
        assert_eq!(character_table(&t(s)).unwrap().num_irreps(), n, "{s}");
    }
}

#[test]
fn unit_sign_reflection_of_b() {
    let n = 4;
    let table = character_table(&t("B4")).unwrap();
    let unit = &table.irreps[table.unit()];
    let sign = &table.irreps[table.sign()];
    let refl = &table.irreps[table.reflection().unwrap()];
    assert_eq!(*unit, IrrLabel::BiPartition(p(&[n]), Partition::empty()));
    assert_eq!(*sign, IrrLabel::BiPartition(Partition::empty(), p(&[1; 4])));
    assert_eq!(*refl, IrrLabel::BiPartition(p(&[n - 1]), p(&[1])));
    assert_eq!(table.tensor_sign(unit).unwrap(), *sign);
}

#[test]
fn tensor_sign_is_an_involution_and_matches_values() {
    for s in ["A4", "B3", "D4", "D6", "I2(6)", "A1xI2(5)"] {
        let table = character_table(&t(s)).unwrap();
        let sg = table.sign_values();
        for (i, l) in table.irreps.iter().enumerate() {
            let m = table.tensor_sign(l).unwrap();
            assert_eq!(table.tensor_sign(&m).unwrap(), *l);
            let j = table.irr_index(&m).unwrap();
            for c in 0..table.num_classes() {
                assert_eq!(table.values[j][c], &table.values[i][c] * &CycRat::from_int(sg[c]));
            }
        }
    }
}

#[test]
fn fake_degree_identities() {
    for s in ["A3", "B3", "D4", "D5", "I2(5)", "I2(8)", "A2xB2"] {
        let ty = t(s);
        let table = character_table(&ty).unwrap();
        let fake = table.fake_degrees().unwrap();
        let n = ty.num_positive_roots() as i32;
        let mut sum = IntPoly::zero();
        for (i, r) in fake.iter().enumerate() {
            assert_eq!(r.eval_one(), table.dim(i) as i64);
            sum = &sum + &r.scale(&(table.dim(i) as i64));
            let j = table.tensor_sign_perm()[i];
            assert_eq!(fake[j], r.bar().shift(n), "{s} {}", table.irreps[i]);
        }
        let mut want = IntPoly::one();
        for d in ty.degrees() {
            want = &want * &IntPoly::from_coeffs(0, vec![1; d as usize]);
        }
        assert_eq!(sum, want, "{s}");
        assert_eq!(fake[table.unit()], IntPoly::one());
        assert_eq!(fake[table.sign()], IntPoly::monomial(1, n));
        if let Some(r) = table.reflection() {
            assert_eq!(fake[r].valuation().unwrap(), 1);
        }
    }
}

#[test]
fn signed_det_matches_realization() {
    for s in ["B2", "B3", "D4"] {
        let ty = t(s);
        let g = realize_with_bound(&ty, 50_000).unwrap();
        let table = character_table(&ty).unwrap();
        for (c, info) in table.classes.iter().enumerate() {
            let w = g.element_of_word(&info.word);
            assert_eq!(g.det_one_minus_q(w), table.det[c], "{s} {}", info.label);
        }
    }
}

#[test]
fn fusion_examples() {
    let a2 = t("A2");
    let (sub, f) = chartab::fuse_classes(&ParabolicSubset::new(&a2, vec![0])).unwrap();
    let amb = character_table(&a2).unwrap();
    let c2 = sub.class_index(&ClassLabel::Partition(p(&[2]))).unwrap();
    assert_eq!(amb.classes[f[c2]].label, ClassLabel::Partition(p(&[2, 1])));
    assert_eq!(f[0], 0);
    let b2 = t("B2");
    let (sub, f) = chartab::fuse_classes(&ParabolicSubset::new(&b2, vec![1])).unwrap();
    let amb = character_table(&b2).unwrap();
    let c2 = sub.class_index(&ClassLabel::Partition(p(&[2]))).unwrap();
    assert_eq!(amb.classes[f[c2]].label, ClassLabel::Signed(p(&[2]), Partition::empty()));
}

#[test]
fn induction_examples() {
    let a2 = t("A2");
    let amb = character_table(&a2).unwrap();
    let i = ParabolicSubset::new(&a2, vec![0]);
    let sub = character_table(&t("A1")).unwrap();
    let unit = induce(&i, &sub.irr_character(sub.unit())).unwrap();
    let d = amb.decompose(&unit).unwrap();
    assert_eq!(
        d,
        vec![(IrrLabel::Partition(p(&[3])), 1), (IrrLabel::Partition(p(&[2, 1])), 1)]
    );
    let sign = induce(&i, &sub.irr_character(sub.sign())).unwrap();
    let d = amb.decompose(&sign).unwrap();
    assert_eq!(
        d,
        vec![(IrrLabel::Partition(p(&[2, 1])), 1), (IrrLabel::Partition(p(&[1, 1, 1])), 1)]
    );
    // regular character from the trivial parabolic
    let triv = character_table(&CoxeterType::trivial()).unwrap();
    let reg = induce(&ParabolicSubset::new(&a2, vec![]), &triv.irr_character(0)).unwrap();
    assert_eq!(reg.values[0], CycRat::from_int(6));
    assert!(reg.values[1..].iter().all(CycRat::is_zero));
    for (l, m) in amb.decompose(&reg).unwrap() {
        assert_eq!(m as u64, amb.dim(amb.irr_index(&l).unwrap()));
    }
}

#[test]
fn induction_is_transitive() {
    // A1 (node 2) inside B2xA1... inside B4 via {1,2,3} ⊃ {2}
    for (s, big, small) in [("B4", vec![1, 2, 3], vec![2]), ("D5", vec![0, 2, 3], vec![0]), ("A4", vec![0, 1, 3], vec![1])] {
        let ty = t(s);
        let bigp = ParabolicSubset::new(&ty, big.clone());
        let (jty, jmap) = bigp.classify();
        let small_in_j: Vec<usize> = small.iter().map(|x| jmap.iter().position(|y| y == x).unwrap()).collect();
        let inner = ParabolicSubset::new(&jty, small_in_j);
        let (kty, _) = inner.classify();
        let kt = character_table(&kty).unwrap();
        for m in 0..kt.num_irreps() {
            let f = kt.irr_character(m);
            let two_step = induce(&bigp, &induce(&inner, &f).unwrap()).unwrap();
            let direct = induce(&ParabolicSubset::new(&ty, small.clone()), &f).unwrap();
            assert_eq!(two_step, direct, "{s}");
        }
    }
}
