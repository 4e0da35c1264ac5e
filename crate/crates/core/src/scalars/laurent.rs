use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Ring;
use crate::error::{Error, Result};

/// A Laurent polynomial `Σ c_e x^e`, stored densely from its valuation upwards.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    val: i32,
    c: Vec<C>,
}

impl<C: Ring> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { val: 0, c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: C, e: i32) -> Self {
        Self::from_coeffs(e, vec![c])
    }

    /// Builds `Σ_i coeffs[i] x^{val+i}`.
    pub fn from_coeffs(val: i32, coeffs: Vec<C>) -> Self {
        let mut p = LaurentPoly { val, c: coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|x| x.is_zero()).count();
        if lead > 0 {
            self.c.drain(..lead);
            self.val += lead as i32;
        }
        if self.c.is_empty() {
            self.val = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn valuation(&self) -> Result<i32> {
        if self.is_zero() {
            Err(Error::Domain("valuation of the zero polynomial".into()))
        } else {
            Ok(self.val)
        }
    }

    pub fn degree(&self) -> Result<i32> {
        if self.is_zero() {
            Err(Error::Domain("degree of the zero polynomial".into()))
        } else {
            Ok(self.val + self.c.len() as i32 - 1)
        }
    }

    pub fn coeff(&self, e: i32) -> C {
        let i = e - self.val;
        if i < 0 || i as usize >= self.c.len() {
            C::zero()
        } else {
            self.c[i as usize].clone()
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &C)> {
        let v = self.val;
        self.c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(i, x)| (v + i as i32, x))
    }

    pub fn eval_one(&self) -> C {
        self.c.iter().fold(C::zero(), |acc, x| acc.add_ref(x))
    }

    /// Substitutes `x ↦ x^k`; `k = -1` is the bar involution.
    pub fn subs_pow(&self, k: i32) -> Self {
        assert!(k != 0);
        let mut out = Self::zero();
        for (e, x) in self.terms() {
            out = &out + &Self::monomial(x.clone(), e * k);
        }
        out
    }

    pub fn bar(&self) -> Self {
        self.subs_pow(-1)
    }

    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { val: self.val + e, c: self.c.clone() }
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::from_coeffs(self.val, self.c.iter().map(|x| x.mul_ref(s)).collect())
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_coeffs(self.val, self.c.iter().map(f).collect())
    }

    /// Renders with the given variable name, lowest exponent first.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (e, x) in self.terms() {
            let body = x.to_string();
            let neg = body.starts_with('-');
            let simple = !body[neg as usize..].contains(['+', '-']);
            let (neg, coef) = if simple {
                (neg, body[neg as usize..].to_string())
            } else {
                (false, format!("({body})"))
            };
            if neg {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if e == 0 {
                s.push_str(&coef);
                continue;
            }
            if coef != "1" {
                s.push_str(&coef);
                s.push('*');
            }
            s.push_str(var);
            if e != 1 {
                s.push_str(&format!("^{e}"));
            }
        }
        s
    }
}

impl<C: Ring> Add<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, o: &LaurentPoly<C>) -> LaurentPoly<C> {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.val.min(o.val);
        let hi = (self.val + self.c.len() as i32).max(o.val + o.c.len() as i32);
        let mut v = vec![C::zero(); (hi - lo) as usize];
        for (i, x) in self.c.iter().enumerate() {
            let k = (self.val - lo) as usize + i;
            v[k] = v[k].add_ref(x);
        }
        for (i, x) in o.c.iter().enumerate() {
            let k = (o.val - lo) as usize + i;
            v[k] = v[k].add_ref(x);
        }
        LaurentPoly::from_coeffs(lo, v)
    }
}

impl<C: Ring> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { val: self.val, c: self.c.iter().map(|x| x.neg_ref()).collect() }
    }
}

impl<C: Ring> Sub<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, o: &LaurentPoly<C>) -> LaurentPoly<C> {
        self + &(-o)
    }
}

impl<C: Ring> Mul<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, o: &LaurentPoly<C>) -> LaurentPoly<C> {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        let mut v = vec![C::zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                v[i + j] = v[i + j].add_ref(&x.mul_ref(y));
            }
        }
        LaurentPoly::from_coeffs(self.val + o.val, v)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Ring> $tr<LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, o: LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Ring> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("q"))
    }
}

impl<C: Ring> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<i64>;

    #[test]
    fn valuations() {
        let p = &P::monomial(1, 3) + &P::monomial(1, 5);
        assert_eq!(p.valuation().unwrap(), 3);
        assert_eq!(P::one().valuation().unwrap(), 0);
        let r = &P::monomial(1, -2) + &P::one();
        assert_eq!(r.valuation().unwrap(), -2);
        assert!(P::zero().valuation().is_err());
    }

    #[test]
    fn display() {
        let p = P::from_coeffs(-1, vec![1, 0, -2, 3]);
        assert_eq!(p.display("v"), "v^-1-2*v+3*v^2");
        assert_eq!(P::from_coeffs(0, vec![0, 1, 1]).display("q"), "q+q^2");
    }
}
