use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::{CycRat, Q};

type R = Ratio<i64>;

/// `a + b·g` in `Q(√5)` where `g² = g + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Golden {
    pub a: R,
    pub b: R,
}

impl Golden {
    pub const fn int(a: i64) -> Self {
        Golden { a: R::new_raw(a, 1), b: R::new_raw(0, 1) }
    }

    pub const fn g() -> Self {
        Golden { a: R::new_raw(0, 1), b: R::new_raw(1, 1) }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Sign as a real number.
    pub fn signum(&self) -> Ordering {
        // a + b g = x + y√5 with x = a + b/2, y = b/2
        let x = self.a + self.b / 2;
        let y = self.b / 2;
        let sx = x.cmp(&R::zero());
        let sy = y.cmp(&R::zero());
        if sy == Ordering::Equal || sx == sy {
            return if sx == Ordering::Equal { sy } else { sx };
        }
        if sx == Ordering::Equal {
            return sy;
        }
        if x * x > y * y * 5 {
            sx
        } else {
            sy
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn to_cycrat(&self) -> CycRat {
        // g = -(ζ5² + ζ5³)
        let g = -(&CycRat::root_of_unity(5, 2) + &CycRat::root_of_unity(5, 3));
        let q = |r: R| Q::new(*r.numer() as i128, *r.denom() as i128);
        &CycRat::from_rational(q(self.a)) + &g.scale(q(self.b))
    }
}

impl Add for Golden {
    type Output = Golden;
    fn add(self, o: Golden) -> Golden {
        Golden { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for Golden {
    type Output = Golden;
    fn sub(self, o: Golden) -> Golden {
        Golden { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Mul for Golden {
    type Output = Golden;
    fn mul(self, o: Golden) -> Golden {
        let bd = self.b * o.b;
        Golden { a: self.a * o.a + bd, b: self.a * o.b + self.b * o.a + bd }
    }
}

impl Neg for Golden {
    type Output = Golden;
    fn neg(self) -> Golden {
        Golden { a: -self.a, b: -self.b }
    }
}

impl fmt::Debug for Golden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}g", self.a, self.b)
    }
}

impl fmt::Display for Golden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}g", self.a, sign, self.b.abs())
    }
}
