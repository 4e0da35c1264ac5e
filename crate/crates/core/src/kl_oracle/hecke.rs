//! Equal-parameter Iwahori–Hecke algebra in the `T` basis over `Z[v, v^{-1}]`.

use std::collections::BTreeMap;

use crate::coxeter::RealizedGroup;
use crate::scalars::IntPoly;

use super::KlPolys;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HeckeElement {
    pub terms: BTreeMap<u32, IntPoly>,
}

fn v_minus_inv() -> IntPoly {
    IntPoly::from_coeffs(-1, vec![-1, 0, 1])
}

impl HeckeElement {
    pub fn zero() -> Self {
        HeckeElement::default()
    }

    pub fn t(w: u32) -> Self {
        let mut e = Self::zero();
        e.terms.insert(w, IntPoly::one());
        e
    }

    fn add_term(&mut self, w: u32, c: &IntPoly) {
        let entry = self.terms.entry(w).or_insert_with(IntPoly::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, o: &HeckeElement) -> HeckeElement {
        let mut r = self.clone();
        for (&w, c) in &o.terms {
            r.add_term(w, c);
        }
        r
    }

    pub fn scale(&self, c: &IntPoly) -> HeckeElement {
        let mut r = Self::zero();
        for (&w, d) in &self.terms {
            r.add_term(w, &(d * c));
        }
        r
    }

    /// `T_s · self`.
    pub fn mul_s_left(&self, g: &RealizedGroup, s: usize) -> HeckeElement {
        let mut r = Self::zero();
        for (&w, c) in &self.terms {
            let sw = g.mul_left(s, w);
            r.add_term(sw, c);
            if g.len(sw) < g.len(w) {
                r.add_term(w, &(c * &v_minus_inv()));
            }
        }
        r
    }

    /// `self · T_s`.
    pub fn mul_s_right(&self, g: &RealizedGroup, s: usize) -> HeckeElement {
        let mut r = Self::zero();
        for (&w, c) in &self.terms {
            let ws = g.mul_right(w, s);
            r.add_term(ws, c);
            if g.len(ws) < g.len(w) {
                r.add_term(w, &(c * &v_minus_inv()));
            }
        }
        r
    }

    /// `T_s^{-1} · self`, using `T_s^{-1} = T_s - (v - v^{-1})`.
    pub fn mul_s_inv_left(&self, g: &RealizedGroup, s: usize) -> HeckeElement {
        self.mul_s_left(g, s).add(&self.scale(&(-&v_minus_inv())))
    }

    pub fn mul(&self, g: &RealizedGroup, o: &HeckeElement) -> HeckeElement {
        let mut r = Self::zero();
        for (&x, c) in &self.terms {
            let mut part = o.clone();
            for &s in g.word(x).iter().rev() {
                part = part.mul_s_left(g, s);
            }
            r = r.add(&part.scale(c));
        }
        r
    }

    /// The ring involution `v ↦ v^{-1}`, `T_w ↦ T_{w^{-1}}^{-1}`.
    pub fn bar(&self, g: &RealizedGroup) -> HeckeElement {
        let mut r = Self::zero();
        for (&w, c) in &self.terms {
            // T_{w^{-1}}^{-1} = T_{s_1}^{-1} ⋯ T_{s_k}^{-1} for w = s_1 ⋯ s_k
            let mut part = HeckeElement::t(0);
            for &s in g.word(w).iter().rev() {
                part = part.mul_s_inv_left(g, s);
            }
            r = r.add(&part.scale(&c.bar()));
        }
        r
    }
}

/// `C_w = Σ_y (-1)^{l(w)+l(y)} v^{l(w)-l(y)} P_{y,w}(v^{-2}) T_y`.
pub fn kl_basis_element(kl: &KlPolys, w: u32) -> HeckeElement {
    let g = &kl.group;
    let mut e = HeckeElement::zero();
    for y in 0..=w {
        let p = kl.poly(y, w);
        if p.is_zero() {
            continue;
        }
        let d = (g.len(w) - g.len(y)) as i32;
        let sign = if d % 2 == 0 { 1 } else { -1 };
        let c = p.subs_pow(-2).shift(d).scale(&sign);
        e.add_term(y, &c);
    }
    e
}
