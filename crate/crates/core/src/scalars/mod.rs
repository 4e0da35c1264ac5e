//! Exact scalars: rationals, cyclotomic numbers, Laurent polynomials and the
//! golden field used for the coordinates of the H-type root systems.

mod cyclotomic;
mod golden;
mod laurent;

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

pub use cyclotomic::{cyclotomic_poly, divisors, euler_phi, CycRat};
pub use golden::Golden;
pub use laurent::LaurentPoly;

pub type Q = Ratio<i128>;

/// Coefficient ring of a [`LaurentPoly`].
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Ring for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Ring for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Ring for CycRat {
    fn zero() -> Self {
        CycRat::zero()
    }
    fn one() -> Self {
        CycRat::one()
    }
    fn is_zero(&self) -> bool {
        CycRat::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

pub type IntPoly = LaurentPoly<i64>;
pub type RatPoly = LaurentPoly<Q>;
pub type CycPoly = LaurentPoly<CycRat>;

/// Converts a polynomial with rational integer coefficients to `i64` coefficients.
pub fn cyc_poly_to_int(p: &CycPoly) -> Option<IntPoly> {
    let mut coeffs = Vec::new();
    let val = match p.valuation() {
        Ok(v) => v,
        Err(_) => return Some(IntPoly::zero()),
    };
    for e in val..=p.degree().ok()? {
        coeffs.push(p.coeff(e).as_integer()?);
    }
    Some(IntPoly::from_coeffs(val, coeffs))
}
