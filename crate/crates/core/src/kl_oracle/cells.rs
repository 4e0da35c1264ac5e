//! Left, right and two-sided cells, cell modules at `v = 1` and the map `E ↦ F_E`.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::chartab::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::scalars::CycRat;

use super::KlPolys;

pub struct CellData {
    pub kl: Arc<KlPolys>,
    pub table: Arc<CharacterTable>,
    /// Symmetrized `μ`: neighbours of each element in the W-graph.
    pub wgraph: Vec<Vec<(u32, i32)>>,
    pub left_cell_of: Vec<usize>,
    pub left_cells: Vec<Vec<u32>>,
    pub right_cell_of: Vec<usize>,
    pub right_cells: Vec<Vec<u32>>,
    pub two_sided_of: Vec<usize>,
    pub two_sided: Vec<Vec<u32>>,
    /// `lr_leq[a][b]`: two-sided cell `a ≤_LR b`.
    pub lr_leq: Vec<Vec<bool>>,
    /// Left preorder on left cells: `left_leq[a][b]` is `a ≤_L b`.
    pub left_leq: Vec<Vec<bool>>,
    pub right_leq: Vec<Vec<bool>>,
    /// Multiplicity of each irreducible in each left-cell module.
    pub left_cell_modules: Vec<Vec<u32>>,
    /// Two-sided cell of each irreducible.
    pub irr_cell: Vec<usize>,
}

fn scc(n: usize, edges: &[(u32, u32)]) -> (Vec<usize>, Vec<Vec<u32>>) {
    let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n, edges.len());
    for _ in 0..n {
        g.add_node(());
    }
    for &(a, b) in edges {
        g.add_edge(NodeIndex::new(a as usize), NodeIndex::new(b as usize), ());
    }
    let mut comps: Vec<Vec<u32>> = tarjan_scc(&g)
        .into_iter()
        .map(|c| {
            let mut v: Vec<u32> = c.into_iter().map(|x| x.index() as u32).collect();
            v.sort_unstable();
            v
        })
        .collect();
    comps.sort();
    let mut of = vec![0; n];
    for (i, c) in comps.iter().enumerate() {
        for &x in c {
            of[x as usize] = i;
        }
    }
    (of, comps)
}

/// Reflexive-transitive closure of the relation induced on components; `leq[a][b]`
/// holds when an edge path leads from component `b` down to component `a`.
fn closure(ncomp: usize, of: &[usize], edges: &[(u32, u32)]) -> Vec<Vec<bool>> {
    let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncomp];
    for &(a, b) in edges {
        let (ca, cb) = (of[a as usize], of[b as usize]);
        if ca != cb {
            succ[ca].insert(cb);
        }
    }
    let mut leq = vec![vec![false; ncomp]; ncomp];
    for (start, row) in leq.iter_mut().enumerate() {
        let mut stack = vec![start];
        row[start] = true;
        while let Some(c) = stack.pop() {
            for &d in &succ[c] {
                if !row[d] {
                    row[d] = true;
                    stack.push(d);
                }
            }
        }
    }
    // row[start][d]: d reachable from start, i.e. d ≤ start
    let mut out = vec![vec![false; ncomp]; ncomp];
    for a in 0..ncomp {
        for b in 0..ncomp {
            out[a][b] = leq[b][a];
        }
    }
    out
}

impl CellData {
    pub fn compute(kl: Arc<KlPolys>) -> Result<Self> {
        let table = character_table(&kl.group.ty)?;
        Self::compute_with(kl, table)
    }

    /// Cell data using `table` to decompose the cell modules.
    pub fn compute_with(kl: Arc<KlPolys>, table: Arc<CharacterTable>) -> Result<Self> {
        let n = kl.group.size();
        let mut wgraph: Vec<Vec<(u32, i32)>> = vec![Vec::new(); n];
        for w in 0..n as u32 {
            for &(z, m) in kl.mu_list(w) {
                wgraph[w as usize].push((z, m));
                wgraph[z as usize].push((w, m));
            }
        }
        for adj in wgraph.iter_mut() {
            adj.sort_unstable();
        }
        // edges y -> x mean x ≤ y
        let mut left_edges = Vec::new();
        let mut right_edges = Vec::new();
        for y in 0..n as u32 {
            for &(x, _) in &wgraph[y as usize] {
                if kl.ldesc[x as usize] & !kl.ldesc[y as usize] != 0 {
                    left_edges.push((y, x));
                }
                if kl.rdesc[x as usize] & !kl.rdesc[y as usize] != 0 {
                    right_edges.push((y, x));
                }
            }
        }
        let (left_cell_of, left_cells) = scc(n, &left_edges);
        let (right_cell_of, right_cells) = scc(n, &right_edges);
        let both: Vec<(u32, u32)> = left_edges.iter().chain(&right_edges).copied().collect();
        let (two_sided_of, two_sided) = scc(n, &both);
        let lr_leq = closure(two_sided.len(), &two_sided_of, &both);
        let left_leq = closure(left_cells.len(), &left_cell_of, &left_edges);
        let right_leq = closure(right_cells.len(), &right_cell_of, &right_edges);
        let mut data = CellData {
            kl,
            table,
            wgraph,
            left_cell_of,
            left_cells,
            right_cell_of,
            right_cells,
            two_sided_of,
            two_sided,
            lr_leq,
            left_leq,
            right_leq,
            left_cell_modules: Vec::new(),
            irr_cell: Vec::new(),
        };
        data.left_cell_modules = (0..data.left_cells.len())
            .map(|c| data.decompose_left_cell(c))
            .collect::<Result<Vec<_>>>()?;
        data.irr_cell = data.assign_irreducibles()?;
        Ok(data)
    }

    /// `s · e_y` in the left cell module: `-e_y` if `s ∈ L(y)`, otherwise
    /// `e_y + Σ μ̃(x, y) e_x` over `x` in the cell with `s ∈ L(x)`.
    fn act(&self, cell: usize, pos: &HashMap<u32, usize>, s: usize, vec: &[i64]) -> Vec<i64> {
        let kl = &self.kl;
        let members = &self.left_cells[cell];
        let mut out = vec![0i64; vec.len()];
        for (i, &y) in members.iter().enumerate() {
            let c = vec[i];
            if c == 0 {
                continue;
            }
            if kl.ldesc[y as usize] >> s & 1 == 1 {
                out[i] -= c;
                continue;
            }
            out[i] += c;
            for &(x, m) in &self.wgraph[y as usize] {
                if kl.ldesc[x as usize] >> s & 1 == 1 {
                    if let Some(&j) = pos.get(&x) {
                        out[j] += c * m as i64;
                    }
                }
            }
        }
        out
    }

    /// Character of the left cell module at `v = 1`, on the classes of the table.
    pub fn left_cell_character(&self, cell: usize) -> Vec<CycRat> {
        let members = &self.left_cells[cell];
        let pos: HashMap<u32, usize> = members.iter().enumerate().map(|(i, &y)| (y, i)).collect();
        self.table
            .classes
            .iter()
            .map(|c| {
                let mut tr = 0i64;
                for i in 0..members.len() {
                    let mut v = vec![0i64; members.len()];
                    v[i] = 1;
                    for &s in c.word.iter().rev() {
                        v = self.act(cell, &pos, s, &v);
                    }
                    tr += v[i];
                }
                CycRat::from_int(tr)
            })
            .collect()
    }

    fn decompose_left_cell(&self, cell: usize) -> Result<Vec<u32>> {
        let chi = self.left_cell_character(cell);
        let t = &self.table;
        (0..t.num_irreps())
            .map(|i| {
                let m = t.inner_product(&chi, &t.values[i]);
                match m.as_integer() {
                    Some(k) if k >= 0 => Ok(k as u32),
                    _ => Err(Error::inconsistency(format!("left cell {cell}: multiplicity {m} of {}", t.irreps[i]))),
                }
            })
            .collect()
    }

    fn assign_irreducibles(&self) -> Result<Vec<usize>> {
        let t = &self.table;
        let mut cell = vec![usize::MAX; t.num_irreps()];
        for (c, mult) in self.left_cell_modules.iter().enumerate() {
            let two = self.two_sided_of[self.left_cells[c][0] as usize];
            for (i, &m) in mult.iter().enumerate() {
                if m == 0 {
                    continue;
                }
                if cell[i] != usize::MAX && cell[i] != two {
                    return Err(Error::inconsistency(format!(
                        "{} occurs in two different two-sided cells",
                        t.irreps[i]
                    )));
                }
                cell[i] = two;
            }
        }
        if let Some(i) = cell.iter().position(|&c| c == usize::MAX) {
            return Err(Error::inconsistency(format!("{} occurs in no left cell", t.irreps[i])));
        }
        let mut hit = vec![false; self.two_sided.len()];
        for &c in &cell {
            hit[c] = true;
        }
        if hit.iter().any(|h| !h) {
            return Err(Error::inconsistency("E ↦ F_E is not surjective"));
        }
        Ok(cell)
    }

    /// Irreducibles grouped by two-sided cell.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut f = vec![Vec::new(); self.two_sided.len()];
        for (i, &c) in self.irr_cell.iter().enumerate() {
            f[c].push(i);
        }
        f
    }

    /// `min_w (l(w) - 2 deg P_{e,w})` over a two-sided cell; equals its `a`-value.
    pub fn a_from_degrees(&self, cell: usize) -> usize {
        let g = &self.kl.group;
        self.two_sided[cell]
            .iter()
            .map(|&w| g.len(w) - 2 * self.kl.degree_from_identity(w))
            .min()
            .unwrap()
    }
}
