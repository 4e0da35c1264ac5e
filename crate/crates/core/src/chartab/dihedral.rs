//! Dihedral groups `I2(m)` with generators `s` (node 0) and `t` (node 1), `r = st`.

use crate::scalars::{CycPoly, CycRat};

use super::classical::Built;
use super::{ClassInfo, ClassLabel, DihedralIrr, IrrLabel};

/// Normal form `r^j s^flip` of the element spelled by `word`.
pub fn normal_form(m: u32, word: &[usize]) -> (u32, bool) {
    let m = m as i64;
    let (mut j, mut flip) = (0i64, false);
    for &x in word {
        match (x, flip) {
            (0, f) => flip = !f,
            (_, false) => {
                j -= 1;
                flip = true;
            }
            (_, true) => {
                j += 1;
                flip = false;
            }
        }
    }
    (j.rem_euclid(m) as u32, flip)
}

pub fn label_of_word(m: u32, word: &[usize]) -> ClassLabel {
    match normal_form(m, word) {
        (j, false) => ClassLabel::Rotation(j.min(m - j)),
        (j, true) => {
            if m % 2 == 1 {
                ClassLabel::Reflection(0)
            } else {
                ClassLabel::Reflection((j % 2) as u8)
            }
        }
    }
}

pub fn irreps(m: u32) -> Vec<DihedralIrr> {
    let mut v = vec![DihedralIrr::Unit, DihedralIrr::Sign];
    if m.is_multiple_of(2) {
        v.push(DihedralIrr::Eps1);
        v.push(DihedralIrr::Eps2);
    }
    v.extend((1..m.div_ceil(2)).map(DihedralIrr::Phi));
    v
}

fn value(m: u32, chi: DihedralIrr, c: &ClassLabel) -> CycRat {
    let pm = |b: bool| CycRat::from_int(if b { 1 } else { -1 });
    match (chi, c) {
        (DihedralIrr::Unit, _) => CycRat::one(),
        (DihedralIrr::Sign, ClassLabel::Rotation(_)) => CycRat::one(),
        (DihedralIrr::Sign, _) => -CycRat::one(),
        (DihedralIrr::Eps1 | DihedralIrr::Eps2, ClassLabel::Rotation(j)) => pm(j % 2 == 0),
        (DihedralIrr::Eps1, ClassLabel::Reflection(k)) => pm(*k == 0),
        (DihedralIrr::Eps2, ClassLabel::Reflection(k)) => pm(*k == 1),
        (DihedralIrr::Phi(k), ClassLabel::Rotation(j)) => CycRat::root_sum(m, (j * k) as i64),
        (DihedralIrr::Phi(_), _) => CycRat::zero(),
        _ => unreachable!(),
    }
}

pub fn table(m: u32) -> Built {
    let mut classes = Vec::new();
    for j in 0..=m / 2 {
        let size = if j == 0 || 2 * j == m { 1 } else { 2 };
        let word: Vec<usize> = (0..j).flat_map(|_| [0, 1]).collect();
        classes.push(ClassInfo {
            label: ClassLabel::Rotation(j),
            size,
            order: m / num_integer::gcd(j, m),
            word,
        });
    }
    let refl = if m % 2 == 1 { 1 } else { 2 };
    for k in 0..refl {
        classes.push(ClassInfo {
            label: ClassLabel::Reflection(k as u8),
            size: (m / refl) as u64,
            order: 2,
            word: vec![k as usize],
        });
    }
    let irr = irreps(m);
    let values = irr.iter().map(|&chi| classes.iter().map(|c| value(m, chi, &c.label)).collect()).collect();
    let det = classes
        .iter()
        .map(|c| match c.label {
            ClassLabel::Rotation(j) => CycPoly::from_coeffs(
                0,
                vec![CycRat::one(), -CycRat::root_sum(m, j as i64), CycRat::one()],
            ),
            _ => CycPoly::from_coeffs(0, vec![CycRat::one(), CycRat::zero(), -CycRat::one()]),
        })
        .collect();
    Built { irreps: irr.into_iter().map(IrrLabel::Dihedral).collect(), classes, values, det }
}
