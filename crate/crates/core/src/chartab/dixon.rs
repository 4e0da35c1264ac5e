//! Dixon–Schneider computation of the irreducible characters of a realized group.
//!
//! Central characters are simultaneous eigenvectors of the class multiplication
//! matrices over `F_p` with `p ≡ 1` modulo the exponent; values are lifted to
//! characteristic zero through eigenvalue multiplicities on cyclic subgroups.

use std::collections::HashMap;
use std::sync::Arc;

use crate::coxeter::RealizedGroup;
use crate::error::{Error, Result};
use crate::scalars::CycRat;

use super::{ClassInfo, ClassLabel, CharacterTable, Identifier, IrrLabel};

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Reduced row echelon form; returns the nonzero rows.
fn rref(mut rows: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for k in 0..ncols {
                    rows[i][k] = (rows[i][k] + p - f * rows[r][k] % p) % p;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

fn pivots(basis: &[Vec<u64>]) -> Vec<usize> {
    basis.iter().map(|row| row.iter().position(|&x| x != 0).unwrap()).collect()
}

/// Null space of a square matrix, as row vectors.
fn null_space(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let red = rref(a.to_vec(), p);
    let piv = pivots(&red);
    let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in red.iter().zip(&piv) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

pub struct Computed {
    pub classes: Vec<ClassInfo>,
    /// Realized class index of each table class.
    pub realized: Vec<usize>,
    pub values: Vec<Vec<CycRat>>,
}

/// Classes of `g` ordered by element order, then length of a minimal representative,
/// then size, labelled `1a, 2a, 2b, …`.
pub fn ordered_classes(g: &RealizedGroup) -> (Vec<ClassInfo>, Vec<usize>) {
    let mut idx: Vec<usize> = (0..g.classes.len()).collect();
    idx.sort_by_key(|&c| (g.class_order[c], g.len(g.classes[c][0]), g.classes[c].len(), g.classes[c][0]));
    let mut count: HashMap<u32, u32> = HashMap::new();
    let infos = idx
        .iter()
        .map(|&c| {
            let o = g.class_order[c];
            let k = count.entry(o).or_insert(0);
            let label = format!("{o}{}", letters(*k));
            *k += 1;
            ClassInfo {
                label: ClassLabel::Table(label),
                size: g.classes[c].len() as u64,
                order: o,
                word: g.word(g.classes[c][0]),
            }
        })
        .collect();
    (infos, idx)
}

fn letters(mut k: u32) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'a' + (k % 26) as u8);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).unwrap()
}

/// Irreducible characters of `g`, as rows over the classes from [`ordered_classes`]
/// (unsorted).
pub fn compute(g: &RealizedGroup) -> Result<Computed> {
    let (classes, realized) = ordered_classes(g);
    let r = classes.len();
    let mut pos = vec![0usize; r];
    for (t, &c) in realized.iter().enumerate() {
        pos[c] = t;
    }
    let cls = |w: u32| pos[g.class_of[w as usize] as usize];
    let order = g.size() as u64;
    let exponent = classes.iter().fold(1u64, |e, c| num_integer::lcm(e, c.order as u64));
    let p = (1..)
        .map(|k| k * exponent + 1)
        .find(|&p| is_prime(p) && !order.is_multiple_of(p) && 2 * (order as f64).sqrt() as u64 + 1 < p)
        .unwrap();
    // structure constants: c[j][i][k] = #{x in C_j : x^{-1} z_k in C_i}
    let reps: Vec<u32> = realized.iter().map(|&c| g.classes[c][0]).collect();
    let mut cst = vec![vec![vec![0u64; r]; r]; r];
    for (k, &z) in reps.iter().enumerate() {
        for x in 0..g.size() as u32 {
            let y = g.mul(g.inverse(x), z);
            cst[cls(x)][cls(y)][k] += 1;
        }
    }
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    for j in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mj: Vec<Vec<u64>> = cst[j].iter().map(|row| row.iter().map(|&x| x % p).collect()).collect();
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let piv = pivots(&basis);
            let m = basis.len();
            // restricted matrix: column t holds the coordinates of M_j b_t
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|b| (0..r).map(|i| (0..r).map(|k| mj[i][k] * b[k] % p).sum::<u64>() % p).collect())
                .collect();
            let a: Vec<Vec<u64>> = (0..m).map(|s| (0..m).map(|t| images[t][piv[s]]).collect()).collect();
            let mut found = 0;
            for lambda in 0..p {
                let shifted: Vec<Vec<u64>> = (0..m)
                    .map(|s| (0..m).map(|t| if s == t { (a[s][t] + p - lambda) % p } else { a[s][t] }).collect())
                    .collect();
                let ns = null_space(&shifted, p);
                if ns.is_empty() {
                    continue;
                }
                found += ns.len();
                let sub: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|coef| (0..r).map(|i| (0..m).map(|t| coef[t] * basis[t][i] % p).sum::<u64>() % p).collect())
                    .collect();
                next.push(rref(sub, p));
            }
            if found != m {
                return Err(Error::inconsistency("class multiplication matrix is not diagonalizable mod p"));
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::inconsistency("central characters did not separate"));
    }
    // power maps
    let pow_class: Vec<Vec<usize>> = reps
        .iter()
        .zip(&classes)
        .map(|(&z, c)| {
            let mut x = 0u32;
            (0..c.order)
                .map(|_| {
                    let k = cls(x);
                    x = g.mul(x, z);
                    k
                })
                .collect()
        })
        .collect();
    let gen = (2..p).find(|&a| (1..p - 1).all(|e| (p - 1) % e != 0 || pow_mod(a, e, p) != 1)).unwrap();
    let big_z = pow_mod(gen, (p - 1) / exponent, p);
    let mut values = Vec::with_capacity(r);
    for s in spaces {
        let v = &s[0];
        let inv0 = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| x * inv0 % p).collect();
        let sum = (0..r).fold(0u64, |acc, k| {
            let kb = cls(g.inverse(reps[k]));
            (acc + omega[k] * omega[kb] % p * inv_mod(classes[k].size % p, p)) % p
        });
        let d2 = (order % p) * inv_mod(sum, p) % p;
        let d = (1..p / 2)
            .find(|&d| d * d % p == d2)
            .ok_or_else(|| Error::inconsistency("degree is not a square mod p"))?;
        let modv: Vec<u64> = (0..r).map(|k| d * omega[k] % p * inv_mod(classes[k].size % p, p) % p).collect();
        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let n = classes[k].order as u64;
            let zn = pow_mod(big_z, exponent / n, p);
            let inv_n = inv_mod(n % p, p);
            let mut val = CycRat::zero();
            let mut total = 0;
            for t in 0..n {
                let mut m = 0u64;
                for l in 0..n {
                    let e = (n - (t * l) % n) % n;
                    m = (m + modv[pow_class[k][l as usize]] * pow_mod(zn, e, p)) % p;
                }
                m = m * inv_n % p;
                if m > d {
                    return Err(Error::inconsistency("eigenvalue multiplicity out of range"));
                }
                total += m;
                if m > 0 {
                    val = &val + &CycRat::root_of_unity(n as u32, t as i64).scale((m as i128).into());
                }
            }
            if total != d {
                return Err(Error::inconsistency("eigenvalue multiplicities do not add up to the degree"));
            }
            row.push(val);
        }
        values.push(row);
    }
    Ok(Computed { classes, realized, values })
}

/// A validated table for `g` with irreducibles named `phi{d},{b}` and sorted by
/// `(b, d)`; names that would collide get primes appended.
pub fn table_of(g: Arc<RealizedGroup>) -> Result<CharacterTable> {
    let comp = compute(&g)?;
    let det = comp.realized.iter().map(|&c| g.det_one_minus_q(g.classes[c][0])).collect();
    let class_map = class_map(&comp.realized);
    let provisional: Vec<IrrLabel> = (0..comp.values.len()).map(|i| IrrLabel::Table(format!("#{i}"))).collect();
    let t = CharacterTable::assemble(
        g.ty.clone(),
        provisional,
        comp.classes.clone(),
        comp.values.clone(),
        det,
        None,
        Identifier::Realized { group: g.clone(), class_map: class_map.clone() },
    );
    t.validate()?;
    let fake = t.fake_degrees()?.to_vec();
    let mut order: Vec<usize> = (0..comp.values.len()).collect();
    let key = |i: usize| (fake[i].valuation().unwrap(), t.dim(i), format!("{:?}", comp.values[i]));
    order.sort_by_key(|&i| key(i));
    let mut names: Vec<String> = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();
    for &i in &order {
        let base = format!("phi{},{}", t.dim(i), fake[i].valuation().unwrap());
        let k = seen.entry(base.clone()).or_insert(0);
        *k += 1;
        names.push(base);
    }
    let mut used: HashMap<String, usize> = HashMap::new();
    let names: Vec<String> = names
        .into_iter()
        .map(|b| {
            if seen[&b] == 1 {
                return b;
            }
            let k = used.entry(b.clone()).or_insert(0);
            *k += 1;
            format!("{b}{}", "'".repeat(*k))
        })
        .collect();
    let values: Vec<Vec<CycRat>> = order.iter().map(|&i| comp.values[i].clone()).collect();
    let det = t.det.clone();
    let table = CharacterTable::assemble(
        g.ty.clone(),
        names.into_iter().map(IrrLabel::Table).collect(),
        comp.classes,
        values,
        det,
        None,
        Identifier::Realized { group: g, class_map },
    );
    table.validate()?;
    Ok(table)
}

fn class_map(realized: &[usize]) -> Vec<usize> {
    let mut m = vec![0usize; realized.len()];
    for (t, &c) in realized.iter().enumerate() {
        m[c] = t;
    }
    m
}
