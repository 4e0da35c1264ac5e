use cellorder::chartab::{character_table, IrrLabel};
use cellorder::combinat::Partition;
use cellorder::coxeter::{realize, CoxeterType};
use cellorder::kl_oracle::{cell_data, kl_basis_element, kl_polys, HeckeElement};
use cellorder::kl_oracle::suite::{cell_dump, compare_with_orders, oracle_poset, oracle_suite};
use cellorder::orders::family_poset;
use cellorder::scalars::{CycRat, IntPoly};

fn t(s: &str) -> CoxeterType {
    CoxeterType::parse(s).unwrap()
}

#[test]
fn bruhat_basics() {
    let a2 = t("A2");
    let kl = kl_polys(&a2).unwrap();
    let g = realize(&a2).unwrap();
    let s1 = g.element_of_word(&[0]);
    let s2 = g.element_of_word(&[1]);
    let s1s2 = g.element_of_word(&[0, 1]);
    assert!(kl.bruhat_leq(s1, s1s2));
    assert!(!kl.bruhat_leq(s1, s2));
    for w in 0..g.size() as u32 {
        assert!(kl.bruhat_leq(0, w));
    }
    assert_eq!((0..6).filter(|&y| kl.bruhat_leq(y, g.w0)).count(), 6);
}

#[test]
fn bruhat_matches_subword_criterion() {
    // x ≤ w iff some subword of a fixed reduced word of w is a word for x
    for s in ["A3", "B3", "I2(5)", "H3"] {
        let ty = t(s);
        let kl = kl_polys(&ty).unwrap();
        let g = realize(&ty).unwrap();
        for w in (0..g.size() as u32).step_by(7) {
            let word = g.word(w);
            let mut below = std::collections::HashSet::new();
            for mask in 0u32..(1 << word.len()) {
                let sub: Vec<usize> = (0..word.len()).filter(|i| mask >> i & 1 == 1).map(|i| word[i]).collect();
                below.insert(g.element_of_word(&sub));
            }
            for x in 0..g.size() as u32 {
                assert_eq!(kl.bruhat_leq(x, w), below.contains(&x), "{s} x={x} w={w}");
            }
        }
    }
}

#[test]
fn dihedral_polynomials_are_trivial() {
    for m in 3..=8 {
        let ty = t(&format!("I2({m})"));
        let kl = kl_polys(&ty).unwrap();
        let g = realize(&ty).unwrap();
        for w in 0..g.size() as u32 {
            for y in 0..g.size() as u32 {
                if kl.bruhat_leq(y, w) {
                    assert_eq!(kl.poly(y, w), IntPoly::one());
                }
            }
        }
        assert_eq!(cell_data(&ty).unwrap().two_sided.len(), 3);
    }
}

#[test]
fn a3_nontrivial_polynomials() {
    // the singular Schubert varieties of GL4/B are those of 3412 = s2s1s3s2 and
    // 4231 = s1s2s3s2s1; every nontrivial polynomial is 1 + q
    let ty = t("A3");
    let kl = kl_polys(&ty).unwrap();
    let g = realize(&ty).unwrap();
    let mut pairs = Vec::new();
    for w in 0..24u32 {
        for y in 0..24u32 {
            if kl.bruhat_leq(y, w) && kl.poly(y, w) != IntPoly::one() {
                assert_eq!(kl.poly(y, w), IntPoly::from_coeffs(0, vec![1, 1]));
                pairs.push((y, w));
            }
        }
    }
    let w1 = g.element_of_word(&[1, 0, 2, 1]);
    let w2 = g.element_of_word(&[0, 1, 2, 1, 0]);
    let ws: std::collections::BTreeSet<u32> = pairs.iter().map(|p| p.1).collect();
    assert_eq!(ws, [w1, w2].into_iter().collect());
    let below = |w: u32| -> Vec<u32> {
        let mut v: Vec<u32> = pairs.iter().filter(|p| p.1 == w).map(|p| p.0).collect();
        v.sort();
        v
    };
    let mut want1 = vec![0, g.element_of_word(&[1])];
    want1.sort();
    assert_eq!(below(w1), want1);
    let mut want2: Vec<u32> = [&[][..], &[0], &[2], &[0, 2]].iter().map(|w| g.element_of_word(w)).collect();
    want2.sort();
    assert_eq!(below(w2), want2);
}

#[test]
fn kl_basis_rank_one_and_bar_invariance() {
    let a1 = t("A1");
    let kl = kl_polys(&a1).unwrap();
    let g = realize(&a1).unwrap();
    let cs = kl_basis_element(&kl, 1);
    let mut want = HeckeElement::t(1);
    want = want.add(&HeckeElement::t(0).scale(&IntPoly::monomial(-1, 1)));
    assert_eq!(cs, want);
    assert_eq!(cs.bar(&g), cs);
    for s in ["A2", "A3", "B3", "I2(5)"] {
        let ty = t(s);
        let kl = kl_polys(&ty).unwrap();
        let g = realize(&ty).unwrap();
        for w in 0..g.size() as u32 {
            let c = kl_basis_element(&kl, w);
            assert_eq!(c.bar(&g), c, "{s} w={w}");
            // congruent to T_w modulo positive powers of v
            for (&y, p) in &c.terms {
                if y == w {
                    assert_eq!(*p, IntPoly::one());
                } else {
                    assert!(p.valuation().unwrap() > 0);
                }
            }
        }
    }
}

#[test]
fn left_multiplication_respects_left_preorder() {
    // C_s C_w only involves C_y with y ≤_L w
    let ty = t("B3");
    let kl = kl_polys(&ty).unwrap();
    let cd = cell_data(&ty).unwrap();
    let g = realize(&ty).unwrap();
    let basis: Vec<HeckeElement> = (0..g.size() as u32).map(|w| kl_basis_element(&kl, w)).collect();
    for w in 0..g.size() as u32 {
        for s in 0..g.rank {
            let mut prod = basis[w as usize].mul_s_left(&g, s);
            let cs0 = basis[w as usize].scale(&IntPoly::monomial(-1, 1));
            prod = prod.add(&cs0);
            // expand in the C basis by peeling off the longest term
            while let Some((&y, c)) = prod.terms.iter().next_back() {
                let lc = c.clone();
                let (ly, lw) = (cd.left_cell_of[y as usize], cd.left_cell_of[w as usize]);
                assert!(cd.left_leq[ly][lw], "w={w} s={s} y={y}");
                prod = prod.add(&basis[y as usize].scale(&lc.scale(&-1)));
            }
        }
    }
}

#[test]
fn a2_cells() {
    let cd = cell_data(&t("A2")).unwrap();
    assert_eq!(cd.left_cells.len(), 4);
    assert_eq!(cd.two_sided.len(), 3);
    let n = cd.two_sided.len();
    let total = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| cd.lr_leq[a][b]).count();
    assert_eq!(total, 6, "a chain of three");
    let g = realize(&t("A2")).unwrap();
    let s1 = g.element_of_word(&[0]);
    let s2s1 = g.element_of_word(&[1, 0]);
    assert_eq!(cd.left_cell_of[s1 as usize], cd.left_cell_of[s2s1 as usize]);
    let c = cd.left_cell_of[s1 as usize];
    let table = character_table(&t("A2")).unwrap();
    let chi = cd.left_cell_character(c);
    let i = table.irr_index(&IrrLabel::Partition(Partition::new(vec![2, 1]))).unwrap();
    assert_eq!(chi, table.values[i]);
    assert_eq!(cd.left_cell_character(cd.left_cell_of[0]), vec![CycRat::one(); 3]);
}

#[test]
fn cell_modules_sum_to_regular() {
    for s in ["A3", "B3", "D4", "H3", "I2(7)", "A1xA2"] {
        let ty = t(s);
        let cd = cell_data(&ty).unwrap();
        let table = &cd.table;
        let mut total = vec![0u64; table.num_irreps()];
        for m in &cd.left_cell_modules {
            for (i, &k) in m.iter().enumerate() {
                total[i] += k as u64;
            }
        }
        for i in 0..table.num_irreps() {
            assert_eq!(total[i], table.dim(i), "{s}");
        }
        assert_eq!(cd.irr_cell[table.unit()], cd.two_sided_of[0]);
        let g = realize(&ty).unwrap();
        assert_eq!(cd.irr_cell[table.sign()], cd.two_sided_of[g.w0 as usize]);
    }
}

#[test]
fn dihedral_cells() {
    for m in 3..=10 {
        let cd = cell_data(&t(&format!("I2({m})"))).unwrap();
        assert_eq!(cd.two_sided.len(), 3, "I2({m})");
        assert_eq!(cd.two_sided[cd.irr_cell[cd.table.unit()]].len(), 1);
        assert_eq!(cd.two_sided[cd.irr_cell[cd.table.sign()]].len(), 1);
    }
}

#[test]
fn a2_middle_cell() {
    let cd = cell_data(&t("A2")).unwrap();
    let i = cd.table.irr_index(&IrrLabel::Partition(Partition::new(vec![2, 1]))).unwrap();
    assert_eq!(cd.two_sided[cd.irr_cell[i]].len(), 4);
    let g = realize(&t("A2")).unwrap();
    let sign = cd.table.sign_values().into_iter().map(CycRat::from_int).collect::<Vec<_>>();
    assert_eq!(cd.left_cell_character(cd.left_cell_of[g.w0 as usize]), sign);
}

#[test]
fn oracle_suites_pass() {
    for s in ["A1", "A2", "A3", "B2", "B3", "D4", "H3", "I2(5)", "A1xA2", "A1xA1"] {
        let ty = t(s);
        let r = oracle_suite(&ty);
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.checks.len(), 8);
        let c = compare_with_orders(&ty);
        assert!(c.passed(), "{}", c.to_text());
        assert_eq!(oracle_poset(&ty).unwrap(), family_poset(&ty).unwrap(), "{s}");
    }
}

#[test]
fn oracle_bound_is_enforced() {
    assert!(matches!(cell_data(&t("H4")), Err(cellorder::Error::SizeLimit { order: 14400, .. })));
}

#[test]
fn cell_dump_layout() {
    let v = cell_dump(&t("A2")).unwrap();
    assert_eq!(v["schema"], "cellorder.cells/1");
    assert_eq!(v["elements"].as_array().unwrap().len(), 6);
    assert_eq!(v["left_cells"].as_array().unwrap().len(), 4);
    assert_eq!(v["elements"][0]["left_descents"].as_array().unwrap().len(), 0);
    let sizes: u64 = v["left_cells"].as_array().unwrap().iter().map(|c| c["size"].as_u64().unwrap()).sum();
    assert_eq!(sizes, 6);
}
