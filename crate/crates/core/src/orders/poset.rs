//! The order on families, its Hasse diagram and its JSON and DOT forms.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::coxeter::CoxeterType;
use crate::error::{Error, Result};

use super::{order_data, OrderData, Relation};

pub const POSET_SCHEMA: &str = "cellorder.family-poset/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyNode {
    pub id: usize,
    pub a: u32,
    pub members: Vec<String>,
    pub special: String,
}

/// A cover `from < to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetEdge {
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyPoset {
    pub schema: String,
    #[serde(rename = "type")]
    pub ty: String,
    pub nodes: Vec<FamilyNode>,
    pub edges: Vec<PosetEdge>,
}

/// `leq.get(i, j)`: family `i` lies below family `j`.
pub fn family_relation(d: &OrderData) -> Relation {
    let fams = &d.families.families;
    let mut r = Relation::empty(fams.len());
    for (i, fi) in fams.iter().enumerate() {
        for (j, fj) in fams.iter().enumerate() {
            if d.preceq(fi.members[0], fj.members[0]) {
                r.set(i, j);
            }
        }
    }
    r
}

pub fn family_poset(t: &CoxeterType) -> Result<FamilyPoset> {
    Ok(FamilyPoset::from_data(&*order_data(t)?))
}

impl FamilyPoset {
    pub fn from_data(d: &OrderData) -> Self {
        let nodes = d
            .families
            .families
            .iter()
            .enumerate()
            .map(|(id, f)| FamilyNode {
                id,
                a: f.a,
                members: f.members.iter().map(|&e| d.label(e).to_string()).collect(),
                special: d.label(f.special).to_string(),
            })
            .collect();
        let edges = family_relation(d).covers().into_iter().map(|(from, to)| PosetEdge { from, to }).collect();
        FamilyPoset { schema: POSET_SCHEMA.to_string(), ty: d.ty.to_string(), nodes, edges }
    }

    /// Reflexive-transitive closure of the covers.
    pub fn relation(&self) -> Relation {
        let mut r = Relation::empty(self.nodes.len());
        for e in &self.edges {
            r.set(e.from, e.to);
        }
        r.closure()
    }

    pub fn is_total(&self) -> bool {
        let r = self.relation();
        (0..self.nodes.len()).all(|i| (0..self.nodes.len()).all(|j| r.get(i, j) || r.get(j, i)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("poset serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let p: FamilyPoset = serde_json::from_str(s).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
        if p.schema != POSET_SCHEMA {
            return Err(Error::Parse { pos: 0, msg: format!("unknown schema '{}'", p.schema) });
        }
        Ok(p)
    }

    /// Graphviz source; families with equal `a` share a rank.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        writeln!(s, "digraph \"{}\" {{", self.ty).unwrap();
        writeln!(s, "  rankdir=BT;").unwrap();
        writeln!(s, "  node [shape=box];").unwrap();
        for n in &self.nodes {
            let members = n.members.join(", ").replace('"', "\\\"");
            writeln!(s, "  f{} [label=\"a={}\\n{}\"];", n.id, n.a, members).unwrap();
        }
        let mut avals: Vec<u32> = self.nodes.iter().map(|n| n.a).collect();
        avals.sort_unstable();
        avals.dedup();
        for a in avals {
            let ids: Vec<String> = self.nodes.iter().filter(|n| n.a == a).map(|n| format!("f{}", n.id)).collect();
            writeln!(s, "  {{ rank=same; {}; }}", ids.join("; ")).unwrap();
        }
        for e in &self.edges {
            writeln!(s, "  f{} -> f{};", e.from, e.to).unwrap();
        }
        s.push_str("}\n");
        s
    }
}
