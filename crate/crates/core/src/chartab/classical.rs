//! Character tables of types A, B and D from the Murnaghan–Nakayama rule.

use std::collections::HashMap;

use crate::combinat::{bipartitions, factorial, partitions, Partition};
use crate::coxeter::{Factor, SignedPerm};
use crate::scalars::{CycPoly, CycRat, IntPoly, Q};

use super::{ClassInfo, ClassLabel, IrrLabel};

/// `χ^λ(α)` for the symmetric group.
pub fn sym_char(lambda: &Partition, alpha: &Partition, memo: &mut HashMap<(Partition, Partition), i64>) -> i64 {
    if alpha.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), alpha.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = alpha.parts()[0];
    let rest = Partition::new(alpha.parts()[1..].to_vec());
    let mut v = 0;
    for (mu, leg) in lambda.remove_rim_hooks(k) {
        let s = if leg % 2 == 0 { 1 } else { -1 };
        v += s * sym_char(&mu, &rest, memo);
    }
    memo.insert(key, v);
    v
}

type BKey = (Partition, Partition, Partition, Partition);

/// `χ^{(λ,μ)}(α, β)` for the hyperoctahedral group, `α` positive and `β` negative
/// cycle lengths.
pub fn hyp_char(lambda: &Partition, mu: &Partition, alpha: &Partition, beta: &Partition, memo: &mut HashMap<BKey, i64>) -> i64 {
    if alpha.is_empty() && beta.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone(), alpha.clone(), beta.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let (k, negative, alpha2, beta2) = if !alpha.is_empty() {
        (alpha.parts()[0], false, Partition::new(alpha.parts()[1..].to_vec()), beta.clone())
    } else {
        (beta.parts()[0], true, alpha.clone(), Partition::new(beta.parts()[1..].to_vec()))
    };
    let sgn = |leg: u32| if leg.is_multiple_of(2) { 1 } else { -1 };
    let mut v = 0;
    for (l2, leg) in lambda.remove_rim_hooks(k) {
        v += sgn(leg) * hyp_char(&l2, mu, &alpha2, &beta2, memo);
    }
    for (m2, leg) in mu.remove_rim_hooks(k) {
        let s = if negative { -sgn(leg) } else { sgn(leg) };
        v += s * hyp_char(lambda, &m2, &alpha2, &beta2, memo);
    }
    memo.insert(key, v);
    v
}

fn int_poly(p: IntPoly) -> CycPoly {
    p.map(|&c| CycRat::from_int(c))
}

fn one_minus_qk(k: u32, sign: i64) -> IntPoly {
    &IntPoly::one() - &IntPoly::monomial(sign, k as i32)
}

pub struct Built {
    pub irreps: Vec<IrrLabel>,
    pub classes: Vec<ClassInfo>,
    pub values: Vec<Vec<CycRat>>,
    pub det: Vec<CycPoly>,
}

impl Built {
    /// Moves the identity class to the front.
    pub fn identity_first(mut self) -> Self {
        let k = self.classes.iter().position(|c| c.word.is_empty()).unwrap();
        self.classes[..=k].rotate_right(1);
        for row in self.values.iter_mut() {
            row[..=k].rotate_right(1);
        }
        self.det[..=k].rotate_right(1);
        self
    }
}

pub fn type_a(n: u32) -> Built {
    let f = Factor::A(n);
    let parts = partitions(n + 1);
    let mut memo = HashMap::new();
    let total = factorial(n + 1);
    let classes: Vec<ClassInfo> = parts
        .iter()
        .map(|a| {
            let w = SignedPerm::with_cycle_type(a, &Partition::empty());
            ClassInfo {
                label: ClassLabel::Partition(a.clone()),
                size: (total / a.z()) as u64,
                order: w.order() as u32,
                word: w.reduced_word(f),
            }
        })
        .collect();
    let values = parts
        .iter()
        .map(|l| parts.iter().map(|a| CycRat::from_int(sym_char(l, a, &mut memo))).collect())
        .collect();
    let det = parts
        .iter()
        .map(|a| {
            let mut p = IntPoly::one();
            for &k in a.parts() {
                p = &p * &one_minus_qk(k, 1);
            }
            int_poly(divide_by_one_minus_q(&p))
        })
        .collect();
    Built { irreps: parts.into_iter().map(IrrLabel::Partition).collect(), classes, values, det }
}

fn divide_by_one_minus_q(p: &IntPoly) -> IntPoly {
    // p(q)/(1-q) with p(1) = 0: coefficients are partial sums
    let deg = p.degree().unwrap();
    let mut acc = 0;
    let mut out = Vec::new();
    for e in 0..deg {
        acc += p.coeff(e);
        out.push(acc);
    }
    assert_eq!(acc + p.coeff(deg), 0);
    IntPoly::from_coeffs(0, out)
}

fn b_class_size(n: u32, alpha: &Partition, beta: &Partition) -> u64 {
    let total = (1u128 << n) * factorial(n);
    let cent = (1u128 << (alpha.len() + beta.len())) * alpha.z() * beta.z();
    (total / cent) as u64
}

fn signed_det(alpha: &Partition, beta: &Partition) -> CycPoly {
    let mut p = IntPoly::one();
    for &k in alpha.parts() {
        p = &p * &one_minus_qk(k, 1);
    }
    for &k in beta.parts() {
        p = &p * &one_minus_qk(k, -1);
    }
    int_poly(p)
}

pub fn type_b(n: u32) -> Built {
    let f = Factor::B(n);
    let bips = bipartitions(n);
    let mut memo = HashMap::new();
    let classes: Vec<ClassInfo> = bips
        .iter()
        .map(|(a, b)| {
            let w = SignedPerm::with_cycle_type(a, b);
            ClassInfo {
                label: ClassLabel::Signed(a.clone(), b.clone()),
                size: b_class_size(n, a, b),
                order: w.order() as u32,
                word: w.reduced_word(f),
            }
        })
        .collect();
    let values = bips
        .iter()
        .map(|(l, m)| bips.iter().map(|(a, b)| CycRat::from_int(hyp_char(l, m, a, b, &mut memo))).collect())
        .collect();
    let det = bips.iter().map(|(a, b)| signed_det(a, b)).collect();
    Built {
        irreps: bips.into_iter().map(|(l, m)| IrrLabel::BiPartition(l, m)).collect(),
        classes,
        values,
        det,
    }
}

fn is_split(alpha: &Partition, beta: &Partition) -> bool {
    beta.is_empty() && alpha.parts().iter().all(|p| p % 2 == 0)
}

/// Conjugate by the sign change of the first coordinate.
fn twist(w: &SignedPerm) -> SignedPerm {
    let mut v = w.0.clone();
    v[0] = -v[0];
    for x in v.iter_mut() {
        if x.abs() == 1 {
            *x = -*x;
        }
    }
    SignedPerm(v)
}

pub fn type_d(n: u32) -> Built {
    let f = Factor::D(n);
    let mut classes = Vec::new();
    let mut class_b = Vec::new();
    for (a, b) in bipartitions(n) {
        if b.len() % 2 == 1 {
            continue;
        }
        let w = SignedPerm::with_cycle_type(&a, &b);
        let size = b_class_size(n, &a, &b);
        if is_split(&a, &b) {
            for plus in [true, false] {
                let rep = if plus { w.clone() } else { twist(&w) };
                debug_assert_eq!(rep.even_diagonal_conjugate(), plus);
                classes.push(ClassInfo {
                    label: ClassLabel::DSigned(a.clone(), b.clone(), Some(plus)),
                    size: size / 2,
                    order: rep.order() as u32,
                    word: rep.reduced_word(f),
                });
                class_b.push((a.clone(), b.clone(), Some(plus)));
            }
        } else {
            classes.push(ClassInfo {
                label: ClassLabel::DSigned(a.clone(), b.clone(), None),
                size,
                order: w.order() as u32,
                word: w.reduced_word(f),
            });
            class_b.push((a.clone(), b.clone(), None));
        }
    }
    let mut bmemo = HashMap::new();
    let mut smemo = HashMap::new();
    let mut irreps = Vec::new();
    let mut values = Vec::new();
    for (l, m) in bipartitions(n) {
        if l > m {
            irreps.push(IrrLabel::d_pair(l.clone(), m.clone()));
            values.push(
                class_b
                    .iter()
                    .map(|(a, b, _)| CycRat::from_int(hyp_char(&l, &m, a, b, &mut bmemo)))
                    .collect(),
            );
        } else if l == m {
            for plus in [true, false] {
                irreps.push(IrrLabel::DDegenerate(l.clone(), plus));
                let row = class_b
                    .iter()
                    .map(|(a, b, split)| {
                        let base = Q::from(hyp_char(&l, &l, a, b, &mut bmemo) as i128);
                        let delta = match split {
                            Some(cp) => {
                                let half = Partition::new(a.parts().iter().map(|p| p / 2).collect());
                                let d = (1i128 << a.len()) * sym_char(&l, &half, &mut smemo) as i128;
                                if *cp == plus {
                                    Q::from(d)
                                } else {
                                    Q::from(-d)
                                }
                            }
                            None => Q::from(0),
                        };
                        CycRat::from_rational((base + delta) / Q::from(2))
                    })
                    .collect();
                values.push(row);
            }
        }
    }
    let det = class_b.iter().map(|(a, b, _)| signed_det(a, b)).collect();
    Built { irreps, classes, values, det }
}

/// Class label of a signed permutation in the model of a classical factor.
pub fn label_of(f: Factor, w: &SignedPerm) -> ClassLabel {
    let (a, b) = w.signed_cycle_type();
    match f {
        Factor::A(_) => ClassLabel::Partition(a),
        Factor::B(_) => ClassLabel::Signed(a, b),
        Factor::D(_) => {
            let split = if is_split(&a, &b) { Some(w.even_diagonal_conjugate()) } else { None };
            ClassLabel::DSigned(a, b, split)
        }
        _ => unreachable!(),
    }
}
