//! Elements of cyclotomic fields with rational coefficients.
//!
//! A non-rational value is stored in the power basis `1, ζ, …, ζ^{φ(n)-1}` of
//! `Q(ζ_n)` where `n` is the smallest conductor of a field containing it. Since
//! `Q(ζ_{2m}) = Q(ζ_m)` for odd `m`, conductors `≡ 2 (mod 4)` never occur, and the
//! pair (conductor, coordinates) is a unique representation of the value.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Q;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum CycRat {
    Rat(Q),
    Cyc { n: u32, c: Box<[Q]> },
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

struct Descent {
    pivots: Vec<usize>,
    inv: Vec<Vec<Q>>,
    emb: Vec<Vec<Q>>,
}

thread_local! {
    static CYCLO: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
    static DESCENT: RefCell<HashMap<(u32, u32), Rc<Descent>>> = RefCell::new(HashMap::new());
}

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_poly(n: u32) -> Rc<Vec<i64>> {
    if let Some(p) = CYCLO.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let f = cyclotomic_poly(d);
        p = exact_div(&p, &f);
    }
    let p = Rc::new(p);
    CYCLO.with(|c| c.borrow_mut().insert(n, p.clone()));
    p
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for i in (dd..r.len()).rev() {
        let c = r[i];
        if c != 0 {
            q[i - dd] = c;
            for (j, &f) in den.iter().enumerate() {
                r[i - dd + j] -= c * f;
            }
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Reduces a dense coefficient vector modulo the n-th cyclotomic polynomial.
fn reduce(n: u32, v: &mut Vec<Q>) {
    let f = cyclotomic_poly(n);
    let deg = f.len() - 1;
    for i in (deg..v.len()).rev() {
        let c = v[i];
        if !c.is_zero() {
            for (j, &fj) in f.iter().enumerate() {
                v[i - deg + j] -= c * Q::from(fj as i128);
            }
        }
    }
    v.truncate(deg);
    v.resize(deg, Q::zero());
}

fn descent(big: u32, small: u32) -> Rc<Descent> {
    if let Some(d) = DESCENT.with(|c| c.borrow().get(&(big, small)).cloned()) {
        return d;
    }
    let pb = euler_phi(big) as usize;
    let ps = euler_phi(small) as usize;
    let step = (big / small) as usize;
    let mut emb = vec![vec![Q::zero(); ps]; pb];
    for j in 0..ps {
        let mut v = vec![Q::zero(); big as usize];
        v[(j * step) % big as usize] = Q::one();
        reduce(big, &mut v);
        for r in 0..pb {
            emb[r][j] = v[r];
        }
    }
    // Greedy choice of independent rows.
    let mut pivots = Vec::new();
    let mut echelon: Vec<(usize, Vec<Q>)> = Vec::new();
    for (r, row) in emb.iter().enumerate() {
        if pivots.len() == ps {
            break;
        }
        let mut v = row.clone();
        for (col, e) in &echelon {
            let f = v[*col];
            if !f.is_zero() {
                for k in 0..ps {
                    v[k] -= f * e[k];
                }
            }
        }
        if let Some(col) = v.iter().position(|x| !x.is_zero()) {
            let piv = v[col];
            for x in v.iter_mut() {
                *x /= piv;
            }
            for (_, e) in echelon.iter_mut() {
                let f = e[col];
                if !f.is_zero() {
                    for k in 0..ps {
                        e[k] -= f * v[k];
                    }
                }
            }
            echelon.push((col, v));
            pivots.push(r);
        }
    }
    let m: Vec<Vec<Q>> = pivots.iter().map(|&r| emb[r].clone()).collect();
    let inv = invert(m);
    let d = Rc::new(Descent { pivots, inv, emb });
    DESCENT.with(|c| c.borrow_mut().insert((big, small), d.clone()));
    d
}

fn invert(mut m: Vec<Vec<Q>>) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero()).expect("singular embedding");
        m.swap(col, p);
        inv.swap(col, p);
        let piv = m[col][col];
        for k in 0..n {
            m[col][k] /= piv;
            inv[col][k] /= piv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for k in 0..n {
                    let a = m[col][k];
                    m[r][k] -= f * a;
                    let b = inv[col][k];
                    inv[r][k] -= f * b;
                }
            }
        }
    }
    inv
}

fn try_descend(big: u32, small: u32, x: &[Q]) -> Option<Vec<Q>> {
    let d = descent(big, small);
    let ps = d.inv.len();
    let y: Vec<Q> = (0..ps)
        .map(|j| {
            let mut s = Q::zero();
            for (k, &r) in d.pivots.iter().enumerate() {
                if !x[r].is_zero() {
                    s += d.inv[j][k] * x[r];
                }
            }
            s
        })
        .collect();
    for (r, row) in d.emb.iter().enumerate() {
        let mut s = Q::zero();
        for j in 0..ps {
            if !row[j].is_zero() && !y[j].is_zero() {
                s += row[j] * y[j];
            }
        }
        if s != x[r] {
            return None;
        }
    }
    Some(y)
}

fn canonical(n: u32, v: Vec<Q>) -> CycRat {
    if n == 1 || v[1..].iter().all(|x| x.is_zero()) {
        return CycRat::Rat(v[0]);
    }
    for d in divisors(n) {
        if d == 1 || d == n || d % 4 == 2 {
            continue;
        }
        if let Some(y) = try_descend(n, d, &v) {
            return CycRat::Cyc { n: d, c: y.into_boxed_slice() };
        }
    }
    CycRat::Cyc { n, c: v.into_boxed_slice() }
}

impl CycRat {
    pub fn zero() -> Self {
        CycRat::Rat(Q::zero())
    }

    pub fn one() -> Self {
        CycRat::Rat(Q::one())
    }

    pub fn from_int(k: i64) -> Self {
        CycRat::Rat(Q::from(k as i128))
    }

    pub fn from_rational(q: Q) -> Self {
        CycRat::Rat(q)
    }

    /// The root of unity `ζ_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as u32;
        let g = k.gcd(&n);
        let (mut n, mut k) = (n / g, k / g);
        if k == 0 {
            n = 1;
        }
        let mut sign = Q::one();
        if n % 4 == 2 {
            let m = n / 2;
            if k % 2 == 1 {
                sign = -sign;
            }
            k = ((k as u64 * (m as u64).div_ceil(2)) % m as u64) as u32;
            n = m;
        }
        if n == 1 {
            return CycRat::Rat(sign);
        }
        let mut v = vec![Q::zero(); n as usize];
        v[k as usize] = sign;
        reduce(n, &mut v);
        canonical(n, v)
    }

    /// `ζ_n^k + ζ_n^{-k}`.
    pub fn root_sum(n: u32, k: i64) -> Self {
        &Self::root_of_unity(n, k) + &Self::root_of_unity(n, -k)
    }

    pub fn conductor(&self) -> u32 {
        match self {
            CycRat::Rat(_) => 1,
            CycRat::Cyc { n, .. } => *n,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, CycRat::Rat(q) if q.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, CycRat::Rat(_))
    }

    pub fn as_rational(&self) -> Option<Q> {
        match self {
            CycRat::Rat(q) => Some(*q),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        match self {
            CycRat::Rat(q) if q.is_integer() => i64::try_from(q.to_integer()).ok(),
            _ => None,
        }
    }

    /// Coordinates in the power basis of `Q(ζ_n)` for a multiple `n` of the conductor.
    pub fn coords(&self, n: u32) -> Vec<Q> {
        let p = euler_phi(n) as usize;
        match self {
            CycRat::Rat(q) => {
                let mut v = vec![Q::zero(); p];
                v[0] = *q;
                v
            }
            CycRat::Cyc { n: m, c } => {
                assert!(n.is_multiple_of(*m), "conductor {m} does not divide {n}");
                if *m == n {
                    return c.to_vec();
                }
                let step = (n / m) as usize;
                let mut v = vec![Q::zero(); n as usize];
                for (j, x) in c.iter().enumerate() {
                    v[j * step] = *x;
                }
                reduce(n, &mut v);
                v
            }
        }
    }

    pub fn scale(&self, q: Q) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        match self {
            CycRat::Rat(r) => CycRat::Rat(*r * q),
            CycRat::Cyc { n, c } => CycRat::Cyc { n: *n, c: c.iter().map(|x| *x * q).collect() },
        }
    }

    /// Image under the Galois automorphism `ζ ↦ ζ^k` (k coprime to the conductor).
    pub fn galois(&self, k: i64) -> Self {
        match self {
            CycRat::Rat(_) => self.clone(),
            CycRat::Cyc { n, c } => {
                let n = *n;
                assert_eq!((k.rem_euclid(n as i64) as u32).gcd(&n), 1);
                let mut v = vec![Q::zero(); n as usize];
                for (j, x) in c.iter().enumerate() {
                    let e = (j as i64 * k).rem_euclid(n as i64) as usize;
                    v[e] += *x;
                }
                reduce(n, &mut v);
                canonical(n, v)
            }
        }
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    fn binary(&self, o: &Self, f: impl Fn(&[Q], &[Q], usize) -> Vec<Q>) -> Self {
        let n = self.conductor().lcm(&o.conductor());
        let a = self.coords(n);
        let b = o.coords(n);
        let mut v = f(&a, &b, a.len());
        reduce(n, &mut v);
        canonical(n, v)
    }

    /// Parses the textual form produced by `Display`, e.g. `-1/2+3*E(5)^2`.
    pub fn parse(s: &str) -> Result<Self> {
        Parser { s: s.as_bytes(), pos: 0 }.sum()
    }
}

impl Default for CycRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycRat {
    fn from(k: i64) -> Self {
        Self::from_int(k)
    }
}

impl From<Q> for CycRat {
    fn from(q: Q) -> Self {
        CycRat::Rat(q)
    }
}

impl Add<&CycRat> for &CycRat {
    type Output = CycRat;
    fn add(self, o: &CycRat) -> CycRat {
        match (self, o) {
            (CycRat::Rat(a), CycRat::Rat(b)) => CycRat::Rat(a + b),
            _ => self.binary(o, |a, b, _| a.iter().zip(b).map(|(x, y)| x + y).collect()),
        }
    }
}

impl Sub<&CycRat> for &CycRat {
    type Output = CycRat;
    fn sub(self, o: &CycRat) -> CycRat {
        match (self, o) {
            (CycRat::Rat(a), CycRat::Rat(b)) => CycRat::Rat(a - b),
            _ => self.binary(o, |a, b, _| a.iter().zip(b).map(|(x, y)| x - y).collect()),
        }
    }
}

impl Mul<&CycRat> for &CycRat {
    type Output = CycRat;
    fn mul(self, o: &CycRat) -> CycRat {
        match (self, o) {
            (CycRat::Rat(a), CycRat::Rat(b)) => CycRat::Rat(a * b),
            (CycRat::Rat(a), x) | (x, CycRat::Rat(a)) => x.scale(*a),
            _ => self.binary(o, |a, b, p| {
                let mut v = vec![Q::zero(); 2 * p - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if !y.is_zero() {
                            v[i + j] += x * y;
                        }
                    }
                }
                v
            }),
        }
    }
}

impl Neg for &CycRat {
    type Output = CycRat;
    fn neg(self) -> CycRat {
        self.scale(-Q::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycRat> for CycRat {
            type Output = CycRat;
            fn $m(self, o: CycRat) -> CycRat {
                (&self).$m(&o)
            }
        }
        impl $tr<&CycRat> for CycRat {
            type Output = CycRat;
            fn $m(self, o: &CycRat) -> CycRat {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycRat {
    type Output = CycRat;
    fn neg(self) -> CycRat {
        -&self
    }
}

fn fmt_q(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycRat::Rat(q) => write!(f, "{}", fmt_q(q)),
            CycRat::Cyc { n, c } => {
                let mut first = true;
                for (j, x) in c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let neg = x.is_negative();
                    let a = x.abs();
                    if neg {
                        write!(f, "-")?;
                    } else if !first {
                        write!(f, "+")?;
                    }
                    first = false;
                    if j == 0 {
                        write!(f, "{}", fmt_q(&a))?;
                        continue;
                    }
                    if !a.is_one() {
                        write!(f, "{}*", fmt_q(&a))?;
                    }
                    if j == 1 {
                        write!(f, "E({n})")?;
                    } else {
                        write!(f, "E({n})^{j}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for CycRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn int(&mut self) -> Result<i128> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer overflow"))
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn factor(&mut self) -> Result<CycRat> {
        match self.peek() {
            Some(b'E') => {
                self.pos += 1;
                self.expect(b'(')?;
                let n = self.int()?;
                self.expect(b')')?;
                let mut k = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    k = self.int()?;
                }
                if n < 1 || n > u32::MAX as i128 {
                    return Err(self.err("bad conductor"));
                }
                Ok(CycRat::root_of_unity(n as u32, k as i64))
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.int()?;
                let mut q = Q::from(p);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.int()?;
                    if d == 0 {
                        return Err(self.err("zero denominator"));
                    }
                    q /= Q::from(d);
                }
                Ok(CycRat::Rat(q))
            }
            _ => Err(self.err("expected number or E(n)")),
        }
    }

    fn sum(&mut self) -> Result<CycRat> {
        let mut total = CycRat::zero();
        let mut first = true;
        loop {
            let neg = match self.peek() {
                None if !first => break,
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') if !first => {
                    self.pos += 1;
                    false
                }
                _ if first => false,
                _ => return Err(self.err("expected '+' or '-'")),
            };
            let mut term = self.factor()?;
            while self.peek() == Some(b'*') {
                self.pos += 1;
                term = &term * &self.factor()?;
            }
            total = if neg { &total - &term } else { &total + &term };
            first = false;
        }
        Ok(total)
    }
}
