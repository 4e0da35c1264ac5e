//! Bundled tables of `H3`, `H4` and `F4`.
//!
//! File layout:
//!
//! ```text
//! cellorder-table 1
//! type H3
//! order 120
//! classes 10
//! irreps 10
//! sha256 <hex digest of every line below this one>
//! class <label> <size> <order> <reflection trace> <word, nodes joined by '.', or 'e'>
//! ...
//! irr <label> <a> <b> <value on each class>
//! ...
//! ```

use std::collections::HashSet;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::config;
use crate::coxeter::{realize, CoxeterType, Factor};
use crate::error::{Error, Result};
use crate::scalars::CycRat;

use super::{CharacterTable, ClassInfo, ClassLabel, Identifier, IrrLabel};

pub const FORMAT_VERSION: u32 = 1;

fn bundled(f: Factor) -> &'static str {
    match f {
        Factor::H3 => include_str!("../../data/H3.tbl"),
        Factor::H4 => include_str!("../../data/H4.tbl"),
        Factor::F4 => include_str!("../../data/F4.tbl"),
        _ => "",
    }
}

pub fn file_name(f: Factor) -> String {
    format!("{f}.tbl")
}

/// Text of the table for `f`: the data directory when set, else the bundled copy.
pub fn source(f: Factor) -> Result<String> {
    if let Some(dir) = config::data_dir() {
        let p = dir.join(file_name(f));
        if p.exists() {
            return std::fs::read_to_string(&p).map_err(|e| Error::Io(format!("{}: {e}", p.display())));
        }
    }
    Ok(bundled(f).to_string())
}

fn digest(body: &str) -> String {
    Sha256::digest(body.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

/// Serializes a table together with its `(a, b)` values.
pub fn render(t: &CharacterTable, ab: &[(u32, u32)]) -> String {
    let g = realize(&t.ty).expect("bundled types are realizable");
    let mut body = String::new();
    for c in &t.classes {
        let w = g.element_of_word(&c.word);
        let word = if c.word.is_empty() {
            "e".to_string()
        } else {
            c.word.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(".")
        };
        body.push_str(&format!("class {} {} {} {} {word}\n", c.label, c.size, c.order, g.reflection_trace(w)));
    }
    for (i, l) in t.irreps.iter().enumerate() {
        let vals: Vec<String> = t.values[i].iter().map(|v| v.to_string()).collect();
        body.push_str(&format!("irr {l} {} {} {}\n", ab[i].0, ab[i].1, vals.join(" ")));
    }
    format!(
        "cellorder-table {FORMAT_VERSION}\ntype {}\norder {}\nclasses {}\nirreps {}\nsha256 {}\n{body}",
        t.ty,
        t.order,
        t.num_classes(),
        t.num_irreps(),
        digest(&body)
    )
}

pub fn load(f: Factor) -> Result<CharacterTable> {
    parse(f, &source(f)?)
}

/// Parses and validates the table of `f` from `text`.
pub fn parse(f: Factor, text: &str) -> Result<CharacterTable> {
    let bad = |m: String| Error::DataIntegrity(format!("{f} table: {m}"));
    if text.trim().is_empty() {
        return Err(bad("no data".into()));
    }
    let mut lines = text.split_inclusive('\n');
    let mut header = |key: &str| -> Result<String> {
        let line = lines.next().ok_or_else(|| bad(format!("missing header line '{key}'")))?;
        let line = line.trim_end();
        line.strip_prefix(key)
            .and_then(|r| r.strip_prefix(' '))
            .map(str::to_string)
            .ok_or_else(|| bad(format!("expected header '{key}', found '{line}'")))
    };
    let version = header("cellorder-table")?;
    if version != FORMAT_VERSION.to_string() {
        return Err(bad(format!("unsupported format version {version}")));
    }
    let ty = CoxeterType::irreducible(f);
    if header("type")? != ty.to_string() {
        return Err(bad("type mismatch".into()));
    }
    let num = |s: String| s.parse::<u64>().map_err(|_| bad(format!("bad number '{s}'")));
    let order = num(header("order")?)?;
    let nclasses = num(header("classes")?)? as usize;
    let nirr = num(header("irreps")?)? as usize;
    let sum = header("sha256")?;
    let body: String = lines.collect();
    if digest(&body) != sum {
        return Err(bad("checksum mismatch".into()));
    }
    if order != ty.order() {
        return Err(bad(format!("order {order} differs from {}", ty.order())));
    }
    let mut classes = Vec::new();
    let mut traces = Vec::new();
    let mut irreps = Vec::new();
    let mut values = Vec::new();
    let mut ab = Vec::new();
    for line in body.lines() {
        let tok: Vec<&str> = line.split_whitespace().collect();
        match tok.first() {
            Some(&"class") if tok.len() == 6 => {
                let word = if tok[5] == "e" {
                    Vec::new()
                } else {
                    tok[5]
                        .split('.')
                        .map(|s| s.parse::<usize>().ok().filter(|&x| x < ty.rank()))
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(|| bad(format!("bad word '{}'", tok[5])))?
                };
                classes.push(ClassInfo {
                    label: ClassLabel::Table(tok[1].to_string()),
                    size: num(tok[2].to_string())?,
                    order: num(tok[3].to_string())? as u32,
                    word,
                });
                traces.push(CycRat::parse(tok[4]).map_err(|e| bad(e.to_string()))?);
            }
            Some(&"irr") if tok.len() == 4 + nclasses => {
                irreps.push(IrrLabel::Table(tok[1].to_string()));
                ab.push((num(tok[2].to_string())? as u32, num(tok[3].to_string())? as u32));
                values.push(
                    tok[4..]
                        .iter()
                        .map(|v| CycRat::parse(v).map_err(|e| bad(e.to_string())))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
            _ => return Err(bad(format!("malformed line '{line}'"))),
        }
    }
    if classes.len() != nclasses || irreps.len() != nirr {
        return Err(bad("class or irreducible count differs from the header".into()));
    }
    if irreps.iter().collect::<HashSet<_>>().len() != nirr
        || classes.iter().map(|c| &c.label).collect::<HashSet<_>>().len() != nclasses
    {
        return Err(bad("duplicate labels".into()));
    }
    let g = realize(&ty)?;
    let mut class_map = vec![usize::MAX; g.classes.len()];
    if g.classes.len() != nclasses {
        return Err(bad("class count differs from the realized group".into()));
    }
    let mut det = Vec::new();
    for (k, c) in classes.iter().enumerate() {
        let w = g.element_of_word(&c.word);
        let rc = g.class_of[w as usize] as usize;
        if class_map[rc] != usize::MAX {
            return Err(bad(format!("classes {} and {} coincide", classes[class_map[rc]].label, c.label)));
        }
        class_map[rc] = k;
        if g.classes[rc].len() as u64 != c.size || g.class_order[rc] != c.order || g.reflection_trace(w) != traces[k] {
            return Err(bad(format!("class {} disagrees with the realized group", c.label)));
        }
        det.push(g.det_one_minus_q(w));
    }
    let table = CharacterTable::assemble(
        ty,
        irreps,
        classes,
        values,
        det,
        Some(ab),
        Identifier::Realized { group: g, class_map },
    );
    table.validate()?;
    let fake = table.fake_degrees().map_err(|e| bad(e.to_string()))?;
    for (i, p) in fake.iter().enumerate() {
        if p.valuation().ok() != Some(table.bundled_ab.as_ref().unwrap()[i].1 as i32) {
            return Err(bad(format!("b-value of {} disagrees with its fake degree", table.irreps[i])));
        }
    }
    Ok(table)
}

/// Generates the table of `f` from scratch; `a` values are supplied by the caller.
pub fn generate(f: Factor) -> Result<Arc<CharacterTable>> {
    let g = realize(&CoxeterType::irreducible(f))?;
    Ok(Arc::new(super::dixon::table_of(g)?))
}

/// Text of a freshly generated data file for `f`. The `a`-value of each irreducible
/// is the least `b`-value over its two-sided cell, cross-checked against
/// `min (l(w) - 2 deg P_{e,w})` over the cell.
pub fn generate_file(f: Factor) -> Result<String> {
    use crate::kl_oracle::{CellData, KlPolys};
    let table = generate(f)?;
    let fake = table.fake_degrees()?.to_vec();
    let kl = Arc::new(KlPolys::compute_unbounded(realize(&table.ty)?));
    let cells = CellData::compute_with(kl, table.clone())?;
    let mut ab = vec![(0u32, 0u32); table.num_irreps()];
    for (cell, members) in cells.fibers().iter().enumerate() {
        let a = members.iter().map(|&i| fake[i].valuation().unwrap() as u32).min().unwrap();
        if a as usize != cells.a_from_degrees(cell) {
            return Err(Error::inconsistency(format!("{f}: a-values of cell {cell} disagree")));
        }
        for &i in members {
            ab[i] = (a, fake[i].valuation().unwrap() as u32);
        }
    }
    Ok(render(&table, &ab))
}
