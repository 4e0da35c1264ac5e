//! Character tables, class functions, fusion, induction and fake degrees.

mod classical;
mod dihedral;
pub mod dixon;
pub mod exceptional;
mod labels;
mod ops;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::coxeter::{CoxeterType, Factor, RealizedGroup, SignedPerm};
use crate::error::{Error, Result};
use crate::scalars::{CycPoly, CycRat, IntPoly, Q};

pub use classical::{hyp_char, sym_char};
pub use dihedral::normal_form as dihedral_normal_form;
pub use labels::{ClassLabel, DihedralIrr, IrrLabel};
pub use ops::{fuse_classes, induce, induction_matrix, InductionMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub label: ClassLabel,
    pub size: u64,
    pub order: u32,
    /// A reduced word of a representative, in the local node numbering of the type.
    pub word: Vec<usize>,
}

enum Identifier {
    Trivial,
    Classical(Factor),
    Dihedral(u32),
    Realized { group: Arc<RealizedGroup>, class_map: Vec<usize> },
    Product(Vec<Arc<CharacterTable>>),
}

pub struct CharacterTable {
    pub ty: CoxeterType,
    pub order: u64,
    pub irreps: Vec<IrrLabel>,
    pub classes: Vec<ClassInfo>,
    /// `values[i][c]` is the value of irreducible `i` on class `c`.
    pub values: Vec<Vec<CycRat>>,
    /// `det(1 - q ρ(w))` on each class for the reflection representation `ρ`.
    pub det: Vec<CycPoly>,
    /// `(a, b)` per irreducible when the table comes from bundled data.
    pub bundled_ab: Option<Vec<(u32, u32)>>,
    int_values: Option<Vec<Vec<i64>>>,
    ident: Identifier,
    class_index: HashMap<ClassLabel, usize>,
    irr_index: HashMap<IrrLabel, usize>,
    fake: OnceLock<Vec<IntPoly>>,
    sign_perm: OnceLock<Vec<usize>>,
}

impl std::fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CharacterTable({}, {} classes)", self.ty, self.classes.len())
    }
}

/// A class function on the classes of `character_table(ty)`, in table order.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    pub ty: CoxeterType,
    pub values: Vec<CycRat>,
}

type Memo = Mutex<HashMap<CoxeterType, Arc<CharacterTable>>>;

fn memo() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The validated character table of `t`, memoized.
pub fn character_table(t: &CoxeterType) -> Result<Arc<CharacterTable>> {
    if let Some(c) = memo().lock().unwrap().get(t) {
        return Ok(c.clone());
    }
    let table = Arc::new(build(t)?);
    Ok(memo().lock().unwrap().entry(t.clone()).or_insert(table).clone())
}

fn build(t: &CoxeterType) -> Result<CharacterTable> {
    match t.factors() {
        [] => Ok(CharacterTable::assemble(
            t.clone(),
            vec![IrrLabel::Product(vec![])],
            vec![ClassInfo { label: ClassLabel::Product(vec![]), size: 1, order: 1, word: vec![] }],
            vec![vec![CycRat::one()]],
            vec![CycPoly::one()],
            None,
            Identifier::Trivial,
        )),
        [f] => {
            let f = *f;
            let (b, ident) = match f {
                Factor::A(n) => (classical::type_a(n), Identifier::Classical(f)),
                Factor::B(n) => (classical::type_b(n), Identifier::Classical(f)),
                Factor::D(n) => (classical::type_d(n), Identifier::Classical(f)),
                Factor::I2(m) => (dihedral::table(m), Identifier::Dihedral(m)),
                Factor::H3 | Factor::H4 | Factor::F4 => return exceptional::load(f),
            };
            let b = b.identity_first();
            let table = CharacterTable::assemble(t.clone(), b.irreps, b.classes, b.values, b.det, None, ident);
            table.validate()?;
            Ok(table)
        }
        fs => {
            let parts = fs
                .iter()
                .map(|&f| character_table(&CoxeterType::irreducible(f)))
                .collect::<Result<Vec<_>>>()?;
            Ok(product(t, parts))
        }
    }
}

/// Outer tensor product; indices are mixed radix with the last factor fastest.
fn product(t: &CoxeterType, parts: Vec<Arc<CharacterTable>>) -> CharacterTable {
    let offsets = t.offsets();
    let mut irreps = vec![(Vec::new(), Vec::new())];
    let mut classes = vec![(Vec::new(), Vec::new(), 1u64, 1u32, Vec::new(), CycPoly::one())];
    for (fi, p) in parts.iter().enumerate() {
        let mut next = Vec::new();
        for (labels, idx) in &irreps {
            for (i, l) in p.irreps.iter().enumerate() {
                let mut labels: Vec<IrrLabel> = labels.clone();
                labels.push(l.clone());
                let mut idx: Vec<usize> = idx.clone();
                idx.push(i);
                next.push((labels, idx));
            }
        }
        irreps = next;
        let mut next = Vec::new();
        for (labels, idx, size, order, word, det) in &classes {
            for (c, info) in p.classes.iter().enumerate() {
                let mut labels: Vec<ClassLabel> = labels.clone();
                labels.push(info.label.clone());
                let mut idx: Vec<usize> = idx.clone();
                idx.push(c);
                let mut word: Vec<usize> = word.clone();
                word.extend(info.word.iter().map(|&s| s + offsets[fi]));
                let order = num_integer::lcm(*order, info.order);
                next.push((labels, idx, size * info.size, order, word, det * &p.det[c]));
            }
        }
        classes = next;
    }
    let values = irreps
        .iter()
        .map(|(_, ii)| {
            classes
                .iter()
                .map(|(_, ci, ..)| {
                    ii.iter().zip(ci).enumerate().fold(CycRat::one(), |acc, (k, (&i, &c))| &acc * &parts[k].values[i][c])
                })
                .collect()
        })
        .collect();
    let det = classes.iter().map(|c| c.5.clone()).collect();
    let infos = classes
        .into_iter()
        .map(|(labels, _, size, order, word, _)| ClassInfo { label: ClassLabel::Product(labels), size, order, word })
        .collect();
    let irr_labels = irreps.into_iter().map(|(l, _)| IrrLabel::Product(l)).collect();
    CharacterTable::assemble(t.clone(), irr_labels, infos, values, det, None, Identifier::Product(parts))
}

impl CharacterTable {
    fn assemble(
        ty: CoxeterType,
        irreps: Vec<IrrLabel>,
        classes: Vec<ClassInfo>,
        values: Vec<Vec<CycRat>>,
        det: Vec<CycPoly>,
        bundled_ab: Option<Vec<(u32, u32)>>,
        ident: Identifier,
    ) -> Self {
        let int_values = values
            .iter()
            .map(|row| row.iter().map(CycRat::as_integer).collect::<Option<Vec<i64>>>())
            .collect::<Option<Vec<_>>>();
        let class_index = classes.iter().enumerate().map(|(i, c)| (c.label.clone(), i)).collect();
        let irr_index = irreps.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        CharacterTable {
            order: ty.order(),
            ty,
            irreps,
            classes,
            values,
            det,
            bundled_ab,
            int_values,
            ident,
            class_index,
            irr_index,
            fake: OnceLock::new(),
            sign_perm: OnceLock::new(),
        }
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn num_irreps(&self) -> usize {
        self.irreps.len()
    }

    /// Integer values, when every value is a rational integer.
    pub fn int_values(&self) -> Option<&Vec<Vec<i64>>> {
        self.int_values.as_ref()
    }

    pub fn dim(&self, i: usize) -> u64 {
        self.values[i][0].as_integer().expect("dimensions are integers") as u64
    }

    pub fn irr_index(&self, l: &IrrLabel) -> Option<usize> {
        self.irr_index.get(l).copied()
    }

    pub fn class_index(&self, l: &ClassLabel) -> Option<usize> {
        self.class_index.get(l).copied()
    }

    pub fn irr_by_name(&self, name: &str) -> Option<usize> {
        self.irreps.iter().position(|l| l.to_string() == name)
    }

    pub fn unit(&self) -> usize {
        self.values
            .iter()
            .position(|row| row.iter().all(|v| *v == CycRat::one()))
            .expect("table has a unit character")
    }

    /// `(-1)^{l(w)}` on each class.
    pub fn sign_values(&self) -> Vec<i64> {
        self.classes.iter().map(|c| if c.word.len() % 2 == 0 { 1 } else { -1 }).collect()
    }

    pub fn sign(&self) -> usize {
        let s = self.sign_values();
        self.values
            .iter()
            .position(|row| row.iter().zip(&s).all(|(v, &x)| *v == CycRat::from_int(x)))
            .expect("table has a sign character")
    }

    /// Character of the reflection representation.
    pub fn reflection_values(&self) -> Vec<CycRat> {
        self.det.iter().map(|d| -d.coeff(1)).collect()
    }

    /// The reflection representation, for irreducible types of positive rank.
    pub fn reflection(&self) -> Option<usize> {
        if !self.ty.is_irreducible() {
            return None;
        }
        let r = self.reflection_values();
        self.values.iter().position(|row| *row == r)
    }

    /// Class of the element spelled by `word` (global nodes of the type).
    pub fn class_of_word(&self, word: &[usize]) -> usize {
        match &self.ident {
            Identifier::Trivial => 0,
            Identifier::Classical(f) => {
                let w = SignedPerm::from_word(*f, word);
                self.class_index[&classical::label_of(*f, &w)]
            }
            Identifier::Dihedral(m) => self.class_index[&dihedral::label_of_word(*m, word)],
            Identifier::Realized { group, class_map } => {
                class_map[group.class_of[group.element_of_word(word) as usize] as usize]
            }
            Identifier::Product(parts) => {
                let mut sub: Vec<Vec<usize>> = vec![Vec::new(); parts.len()];
                for &s in word {
                    let (fi, local) = self.ty.locate(s);
                    sub[fi].push(local);
                }
                parts.iter().zip(&sub).fold(0, |idx, (p, w)| idx * p.num_classes() + p.class_of_word(w))
            }
        }
    }

    /// Factor tables of a product type.
    pub fn factor_tables(&self) -> Option<&[Arc<CharacterTable>]> {
        match &self.ident {
            Identifier::Product(p) => Some(p),
            _ => None,
        }
    }

    pub fn class_function(&self, values: Vec<CycRat>) -> ClassFunction {
        assert_eq!(values.len(), self.num_classes());
        ClassFunction { ty: self.ty.clone(), values }
    }

    pub fn irr_character(&self, i: usize) -> ClassFunction {
        self.class_function(self.values[i].clone())
    }

    /// `⟨f, g⟩ = |W|^{-1} Σ_C |C| f(C) conj(g(C))`.
    pub fn inner_product(&self, f: &[CycRat], g: &[CycRat]) -> CycRat {
        let mut acc = CycRat::zero();
        for (c, info) in self.classes.iter().enumerate() {
            acc = &acc + &(&f[c] * &g[c].conj()).scale(Q::from(info.size as i128));
        }
        acc.scale(Q::new(1, self.order as i128))
    }

    /// Multiplicities of the irreducibles in a virtual character.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<(IrrLabel, i64)>> {
        let mut out = Vec::new();
        for (i, l) in self.irreps.iter().enumerate() {
            let m = self.inner_product(&f.values, &self.values[i]);
            let m = m
                .as_integer()
                .ok_or_else(|| Error::NotACharacter(format!("multiplicity of {l} is {m}")))?;
            if m != 0 {
                out.push((l.clone(), m));
            }
        }
        Ok(out)
    }

    /// Position of `E ⊗ sgn` for each irreducible `E`.
    pub fn tensor_sign_perm(&self) -> &[usize] {
        self.sign_perm.get_or_init(|| {
            let s = self.sign_values();
            let lookup: HashMap<Vec<CycRat>, usize> =
                self.values.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
            self.values
                .iter()
                .map(|row| {
                    let twisted: Vec<CycRat> = row.iter().zip(&s).map(|(v, &x)| v * &CycRat::from_int(x)).collect();
                    lookup[&twisted]
                })
                .collect()
        })
    }

    pub fn tensor_sign(&self, e: &IrrLabel) -> Option<IrrLabel> {
        match e {
            IrrLabel::Partition(l) => Some(IrrLabel::Partition(l.conjugate())),
            IrrLabel::BiPartition(l, m) => Some(IrrLabel::BiPartition(m.conjugate(), l.conjugate())),
            _ => self.irr_index(e).map(|i| self.irreps[self.tensor_sign_perm()[i]].clone()),
        }
    }

    /// Fake degrees of all irreducibles, in table order.
    pub fn fake_degrees(&self) -> Result<&[IntPoly]> {
        if let Some(f) = self.fake.get() {
            return Ok(f);
        }
        let f = ops::molien(self)?;
        Ok(self.fake.get_or_init(|| f))
    }

    pub fn fake_degree(&self, i: usize) -> Result<IntPoly> {
        Ok(self.fake_degrees()?[i].clone())
    }

    /// Both orthogonality relations, class sizes and the degree identity.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::DataIntegrity(format!("{}: {m}", self.ty)));
        let r = self.num_classes();
        if self.num_irreps() != r || self.values.iter().any(|row| row.len() != r) || self.det.len() != r {
            return bad("table is not square".into());
        }
        if self.classes.iter().map(|c| c.size).sum::<u64>() != self.order {
            return bad("class sizes do not sum to the group order".into());
        }
        if self.classes.first().map(|c| c.size) != Some(1) {
            return bad("first class is not the identity".into());
        }
        let mut sq = 0u64;
        for i in 0..r {
            match self.values[i][0].as_integer() {
                Some(d) if d > 0 => sq += (d * d) as u64,
                _ => return bad(format!("dimension of {} is not a positive integer", self.irreps[i])),
            }
        }
        if sq != self.order {
            return bad("squares of dimensions do not sum to the group order".into());
        }
        if let Some(iv) = &self.int_values {
            let sizes: Vec<i128> = self.classes.iter().map(|c| c.size as i128).collect();
            for i in 0..r {
                for j in i..r {
                    let s: i128 = (0..r).map(|c| sizes[c] * iv[i][c] as i128 * iv[j][c] as i128).sum();
                    if s != if i == j { self.order as i128 } else { 0 } {
                        return bad(format!("rows {} and {} are not orthogonal", self.irreps[i], self.irreps[j]));
                    }
                }
            }
            for c in 0..r {
                for d in c..r {
                    let s: i128 = (0..r).map(|i| iv[i][c] as i128 * iv[i][d] as i128).sum();
                    let want = if c == d { (self.order / self.classes[c].size) as i128 } else { 0 };
                    if s != want {
                        return bad(format!("columns {c} and {d} are not orthogonal"));
                    }
                }
            }
            return Ok(());
        }
        for i in 0..r {
            for j in i..r {
                let s = self.inner_product(&self.values[i], &self.values[j]);
                if s != CycRat::from_int((i == j) as i64) {
                    return bad(format!("rows {} and {} are not orthonormal", self.irreps[i], self.irreps[j]));
                }
            }
        }
        for c in 0..r {
            for d in c..r {
                let s = (0..r).fold(CycRat::zero(), |acc, i| &acc + &(&self.values[i][c] * &self.values[i][d].conj()));
                let want = if c == d { (self.order / self.classes[c].size) as i64 } else { 0 };
                if s != CycRat::from_int(want) {
                    return bad(format!("columns {c} and {d} are not orthogonal"));
                }
            }
        }
        Ok(())
    }
}

impl ClassFunction {
    pub fn add(&self, o: &ClassFunction) -> ClassFunction {
        assert_eq!(self.ty, o.ty);
        let values = self.values.iter().zip(&o.values).map(|(a, b)| a + b).collect();
        ClassFunction { ty: self.ty.clone(), values }
    }

    pub fn scale(&self, k: i64) -> ClassFunction {
        let k = CycRat::from_int(k);
        ClassFunction { ty: self.ty.clone(), values: self.values.iter().map(|a| a * &k).collect() }
    }

    pub fn degree(&self) -> CycRat {
        self.values[0].clone()
    }
}
