//! Posets of fillings: relation matrices, Hasse diagrams, ranks,
//! gradedness, and the closed-form top and bottom elements.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Error;
use crate::partitions::Partition;
use crate::tableaux::{box_leq, dom_leq, enumerate_fillings, format_word, LrFilling, TableauType};

/// The two partial orders available on the fillings of a type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Dominance,
    Box,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Dominance => "dom",
            OrderKind::Box => "box",
        }
    }
}

/// The order data for all fillings of one type: the full relation, the
/// cover edges of the Hasse diagram, a rank for every node, and the
/// extreme elements.
///
/// Ranks count cover steps down from the maximal elements, so every
/// maximal node has rank zero.
#[derive(Clone, Debug)]
pub struct PosetGraph {
    ty: TableauType,
    order: OrderKind,
    nodes: Vec<LrFilling>,
    // leq[z * nodes.len() + x] holds when nodes[z] <= nodes[x]
    leq: Vec<bool>,
    // each entry is (upper, lower) with the lower node covered by the upper
    covers: Vec<(usize, usize)>,
    ranks: Vec<usize>,
    minimal: Vec<usize>,
    maximal: Vec<usize>,
}

impl PosetGraph {
    /// Builds the poset of all fillings of `ty` under `order`. The box
    /// order is only defined when the shape is a horizontal or vertical
    /// strip.
    pub fn build(ty: &TableauType, order: OrderKind) -> Result<Self, Error> {
        if order == OrderKind::Box && !ty.shape().strip_kind().is_strip() {
            return Err(Error::NotAStrip);
        }
        let nodes = enumerate_fillings(ty);
        let n = nodes.len();
        let mut leq = vec![false; n * n];
        match order {
            OrderKind::Dominance => {
                for z in 0..n {
                    for x in 0..n {
                        leq[z * n + x] = dom_leq(&nodes[z], &nodes[x])?;
                    }
                }
            }
            OrderKind::Box => {
                let down = move_targets(&nodes)?;
                for x in 0..n {
                    let mut stack = vec![x];
                    leq[x * n + x] = true;
                    while let Some(v) = stack.pop() {
                        for &w in &down[v] {
                            if !leq[w * n + x] {
                                leq[w * n + x] = true;
                                stack.push(w);
                            }
                        }
                    }
                }
            }
        }

        let strict = |lo: usize, hi: usize| lo != hi && leq[lo * n + hi];
        let mut covers = Vec::new();
        for hi in 0..n {
            for lo in 0..n {
                if strict(lo, hi) && !(0..n).any(|w| strict(lo, w) && strict(w, hi)) {
                    covers.push((hi, lo));
                }
            }
        }
        covers.sort_unstable();

        let maximal: Vec<usize> = (0..n).filter(|&v| !(0..n).any(|u| strict(v, u))).collect();
        let minimal: Vec<usize> = (0..n).filter(|&v| !(0..n).any(|u| strict(u, v))).collect();

        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(hi, lo) in &covers {
            children[hi].push(lo);
            indegree[lo] += 1;
        }
        let mut ranks = vec![0usize; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        while let Some(u) = queue.pop_front() {
            for &l in &children[u] {
                ranks[l] = ranks[l].max(ranks[u] + 1);
                indegree[l] -= 1;
                if indegree[l] == 0 {
                    queue.push_back(l);
                }
            }
        }

        Ok(PosetGraph {
            ty: ty.clone(),
            order,
            nodes,
            leq,
            covers,
            ranks,
            minimal,
            maximal,
        })
    }

    pub fn ty(&self) -> &TableauType {
        &self.ty
    }

    pub fn order(&self) -> OrderKind {
        self.order
    }

    pub fn nodes(&self) -> &[LrFilling] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Whether `nodes()[z] <= nodes()[x]` in the chosen order.
    pub fn leq(&self, z: usize, x: usize) -> bool {
        self.leq[z * self.nodes.len() + x]
    }

    /// Cover edges as `(upper, lower)` index pairs, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn minimal(&self) -> &[usize] {
        &self.minimal
    }

    pub fn maximal(&self) -> &[usize] {
        &self.maximal
    }

    pub fn index_of(&self, f: &LrFilling) -> Option<usize> {
        self.nodes.iter().position(|g| g == f)
    }

    /// Measures the shortest and the longest saturated chain from a
    /// maximal down to a minimal element and reports whether all such
    /// chains have one common length.
    pub fn gradedness(&self) -> GradednessReport {
        let n = self.nodes.len();
        if n == 0 {
            return GradednessReport {
                graded: true,
                chain_length: None,
                shortest: Vec::new(),
                longest: Vec::new(),
            };
        }
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut parents: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(hi, lo) in &self.covers {
            children[hi].push(lo);
            parents[lo].push(hi);
        }
        let mut short = vec![0usize; n];
        let mut long = vec![0usize; n];
        let mut remaining: Vec<usize> = (0..n).map(|v| children[v].len()).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| remaining[v] == 0).collect();
        while let Some(v) = queue.pop_front() {
            if !children[v].is_empty() {
                short[v] = 1 + children[v].iter().map(|&c| short[c]).min().unwrap();
                long[v] = 1 + children[v].iter().map(|&c| long[c]).max().unwrap();
            }
            for &p in &parents[v] {
                remaining[p] -= 1;
                if remaining[p] == 0 {
                    queue.push_back(p);
                }
            }
        }

        let walk = |measure: &[usize], pick_start: bool| -> Vec<usize> {
            let mut best = self.maximal[0];
            for &v in &self.maximal[1..] {
                let better = if pick_start {
                    measure[v] > measure[best]
                } else {
                    measure[v] < measure[best]
                };
                if better {
                    best = v;
                }
            }
            let mut path = vec![best];
            let mut cur = best;
            while !children[cur].is_empty() {
                let next = children[cur]
                    .iter()
                    .copied()
                    .find(|&c| measure[c] + 1 == measure[cur])
                    .expect("a child realizes the recorded chain measure");
                path.push(next);
                cur = next;
            }
            path
        };
        let shortest = walk(&short, false);
        let longest = walk(&long, true);
        let graded = longest.len() == shortest.len();
        GradednessReport {
            graded,
            chain_length: graded.then_some(longest.len() - 1),
            shortest,
            longest,
        }
    }

    /// The index of the greatest element, when there is exactly one.
    pub fn unique_max(&self) -> Option<usize> {
        match self.maximal.as_slice() {
            &[v] => Some(v),
            _ => None,
        }
    }

    /// The index of the least element, when there is exactly one.
    pub fn unique_min(&self) -> Option<usize> {
        match self.minimal.as_slice() {
            &[v] => Some(v),
            _ => None,
        }
    }

    /// Renders the Hasse diagram in DOT form, nodes labeled by column
    /// words and grouped level by level.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n");
        out.push_str("  rankdir=TB;\n  node [shape=box fontname=\"monospace\"];\n");
        let top = self.ranks.iter().copied().max().unwrap_or(0);
        for r in 0..=top {
            let level: Vec<usize> = (0..self.nodes.len())
                .filter(|&v| self.ranks[v] == r)
                .collect();
            if level.is_empty() {
                continue;
            }
            out.push_str("  { rank=same;");
            for v in level {
                write!(
                    out,
                    " n{} [label=\"{}\"];",
                    v,
                    format_word(&self.nodes[v].column_word())
                )
                .unwrap();
            }
            out.push_str(" }\n");
        }
        for &(hi, lo) in &self.covers {
            writeln!(out, "  n{hi} -> n{lo};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// Serializes the poset as a single JSON line covering the nodes
    /// with their ranks, the cover edges, the extreme elements, and the
    /// gradedness verdict.
    pub fn to_json_string(&self) -> String {
        let g = self.gradedness();
        let doc = PosetJson {
            order: self.order.name(),
            alpha: self.ty.alpha().to_string(),
            beta: self.ty.beta().to_string(),
            gamma: self.ty.gamma().to_string(),
            nodes: self
                .nodes
                .iter()
                .zip(self.ranks.iter())
                .map(|(f, &rank)| PosetNodeJson {
                    omega: format_word(&f.column_word()),
                    rows: f.rows().to_vec(),
                    rank,
                })
                .collect(),
            covers: self.covers.iter().map(|&(hi, lo)| [hi, lo]).collect(),
            minimal: self.minimal.clone(),
            maximal: self.maximal.clone(),
            graded: g.graded,
            chain_length: g.chain_length,
        };
        serde_json::to_string(&doc).expect("poset data serializes")
    }
}

/// Outcome of the saturated chain measurement of a poset. The witness
/// chains run from a maximal to a minimal node and are listed top down
/// by node index; they coincide in length exactly when the poset is
/// graded.
#[derive(Clone, Debug)]
pub struct GradednessReport {
    pub graded: bool,
    pub chain_length: Option<usize>,
    pub shortest: Vec<usize>,
    pub longest: Vec<usize>,
}

#[derive(Serialize)]
struct PosetJson {
    order: &'static str,
    alpha: String,
    beta: String,
    gamma: String,
    nodes: Vec<PosetNodeJson>,
    covers: Vec<[usize; 2]>,
    minimal: Vec<usize>,
    maximal: Vec<usize>,
    graded: bool,
    chain_length: Option<usize>,
}

#[derive(Serialize)]
struct PosetNodeJson {
    omega: String,
    rows: Vec<Vec<usize>>,
    rank: usize,
}

fn move_targets(nodes: &[LrFilling]) -> Result<Vec<Vec<usize>>, Error> {
    let mut index = std::collections::HashMap::with_capacity(nodes.len());
    for (i, f) in nodes.iter().enumerate() {
        index.insert(f.clone(), i);
    }
    let mut down = Vec::with_capacity(nodes.len());
    for f in nodes {
        let mut next: Vec<usize> = crate::tableaux::decreasing_box_moves(f)?
            .into_iter()
            .map(|(g, _)| index[&g])
            .collect();
        next.sort_unstable();
        next.dedup();
        down.push(next);
    }
    Ok(down)
}

/// The column word of the greatest filling of a rook strip type: the
/// letters of the content in weakly decreasing order.
pub fn descending_word(alpha: &Partition) -> Vec<usize> {
    let mut word = Vec::with_capacity(alpha.weight());
    for u in (1..=alpha.len()).rev() {
        word.extend(std::iter::repeat_n(u, alpha.part(u - 1)));
    }
    word
}

/// The column word of the least filling of a rook strip type: for each
/// column of the content diagram from rightmost to leftmost, a run
/// counting down from the column length to 1.
pub fn run_word(alpha: &Partition) -> Vec<usize> {
    let conjugate = alpha.transpose();
    let mut word = Vec::with_capacity(alpha.weight());
    for c in (1..=alpha.part(0)).rev() {
        for v in (1..=conjugate.part(c - 1)).rev() {
            word.push(v);
        }
    }
    word
}

/// The greatest filling of a rook strip type in both orders.
pub fn unique_max_filling(ty: &TableauType) -> Result<LrFilling, Error> {
    if !ty.shape().strip_kind().is_rook() {
        return Err(Error::NotARookStrip);
    }
    LrFilling::from_word(ty, &descending_word(ty.alpha()))
}

/// The least filling of a rook strip type in both orders.
pub fn unique_min_filling(ty: &TableauType) -> Result<LrFilling, Error> {
    if !ty.shape().strip_kind().is_rook() {
        return Err(Error::NotARookStrip);
    }
    LrFilling::from_word(ty, &run_word(ty.alpha()))
}

/// Convenience wrapper testing `z <= x` under the chosen order without
/// building the whole poset.
pub fn leq_in(order: OrderKind, z: &LrFilling, x: &LrFilling) -> Result<bool, Error> {
    match order {
        OrderKind::Dominance => dom_leq(z, x),
        OrderKind::Box => box_leq(z, x),
    }
}
