//! The decomposition read as a cyclic sl2 crystal.
//!
//! Letters are the crystal alphabet with 2 written as 0: bracketing `21`
//! pairs becomes the cyclic `01` matching, the lowering operator `f` is
//! [`chains::phi`] and the raising operator `e` is [`chains::phi_inverse`].
//! Strings of the crystal are the chains of the decomposition.

use std::fmt::Write as _;

use serde::Serialize;

use crate::chains;
use crate::error::Result;
use crate::exec::Exec;
use crate::matching::{cyclic_match, strictly_inside};
use crate::scd::{build_scd_with, Scd};
use crate::word::{canonical_starts, complement_reverse, Necklace, DEFAULT_MAX_N};

/// `#1's - #0's`, i.e. `2 * rank - n`.
pub fn weight(w: &Necklace) -> i64 {
    2 * w.rank() as i64 - w.len() as i64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrystalNode {
    pub necklace: Necklace,
    pub weight: i64,
    pub is_highest: bool,
    pub is_lowest: bool,
}

impl CrystalNode {
    pub fn new(w: &Necklace) -> CrystalNode {
        CrystalNode {
            necklace: *w,
            weight: weight(w),
            is_highest: e(w).is_none(),
            is_lowest: f(w).is_none(),
        }
    }
}

/// Lowering operator.
pub fn f(w: &Necklace) -> Option<Necklace> {
    chains::phi(w)
}

/// Raising operator.
pub fn e(w: &Necklace) -> Option<Necklace> {
    chains::phi_inverse(w)
}

/// Highest-weight test read directly off the word, without consulting the
/// raising operator.
///
/// `w` must have weight at least 0. Then for every pair `(z, q)` of its cyclic
/// bracketing that is not nested inside another pair, turn the 0 at `z` into
/// a 1 and look at the least rotations of the result. If one of them starts
/// inside the pair's arc `(z, q]`, the pair is bracketed cyclically in that
/// Lyndon frame with `z` as the rightmost unmatched 1, so lowering the raised
/// word gives back `w` and `w` is not highest weight. Otherwise the removal
/// breaks the Lyndon condition for that bracket, and `w` is highest weight
/// when this holds for every such pair.
pub fn is_highest_weight_lemma(w: &Necklace) -> bool {
    let n = w.len();
    if 2 * w.rank() < n {
        return false;
    }
    let m = cyclic_match(w.word());
    let pairs = m.pairs();
    for &(z, q) in pairs {
        let nested = pairs
            .iter()
            .any(|&(z2, q2)| z2 != z && strictly_inside(z2, q2, z, n));
        if nested {
            continue;
        }
        let raised = w.word().with_letter(z, 1);
        let in_arc = |s: usize| s == q || strictly_inside(z, q, s, n);
        if canonical_starts(&raised).into_iter().any(in_arc) {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalString {
    pub head: CrystalNode,
    /// Head first, then successive images under `f`.
    pub nodes: Vec<CrystalNode>,
    /// Weight of the head; the string has `string_weight + 1` nodes.
    pub string_weight: i64,
}

impl CrystalString {
    pub fn necklaces(&self) -> Vec<Necklace> {
        self.nodes.iter().map(|x| x.necklace).collect()
    }
}

/// The maximal e/f orbit through `w`.
pub fn string_of(w: &Necklace) -> CrystalString {
    let mut head = *w;
    while let Some(up) = e(&head) {
        head = up;
    }
    let mut members = vec![head];
    while let Some(down) = f(members.last().expect("non-empty")) {
        members.push(down);
    }
    let last = members.len() - 1;
    let nodes: Vec<CrystalNode> = members
        .iter()
        .enumerate()
        .map(|(i, x)| CrystalNode {
            necklace: *x,
            weight: weight(x),
            is_highest: i == 0,
            is_lowest: i == last,
        })
        .collect();
    CrystalString {
        head: nodes[0],
        string_weight: nodes[0].weight,
        nodes,
    }
}

/// Reverse-complement, canonicalized. Negates weight and swaps the roles of
/// `e` and `f`.
pub fn involution(w: &Necklace) -> Necklace {
    Necklace::from_word(&complement_reverse(w.word()))
}

/// Image of a decomposition under [`involution`]: every chain is mapped
/// elementwise and reversed so it again runs from high rank to low. Chains are
/// reordered by top rank descending, then top word.
pub fn dual_scd(s: &Scd) -> Scd {
    let mut chains: Vec<chains::Chain> = s
        .chains()
        .iter()
        .map(|c| {
            let elements: Vec<Necklace> = c.elements().iter().rev().map(involution).collect();
            chains::Chain::from_elements(elements).expect("non-empty")
        })
        .collect();
    chains.sort_by(|a, b| {
        b.top()
            .rank()
            .cmp(&a.top().rank())
            .then_with(|| a.top().cmp(b.top()))
    });
    Scd::from_chains(s.n(), chains)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    pub n: usize,
    /// Rank descending, then word.
    pub nodes: Vec<CrystalNode>,
    /// `(from, to)` node indices with `to = f(from)`.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct NodeDoc {
    word: String,
    weight: i64,
    highest: bool,
    lowest: bool,
}

#[derive(Serialize)]
struct GraphDoc {
    n: usize,
    nodes: Vec<NodeDoc>,
    edges: Vec<(String, String)>,
}

impl CrystalGraph {
    pub fn render_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph crystal_{} {{", self.n);
        let _ = writeln!(out, "  node [shape=circle, fontname=\"monospace\"];");
        for node in &self.nodes {
            let shape = if node.is_highest { ", shape=doublecircle" } else { "" };
            let _ = writeln!(
                out,
                "  \"{w}\" [label=\"{w} (wt={wt})\"{shape}];",
                w = node.necklace,
                wt = node.weight
            );
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"f\"];",
                self.nodes[a].necklace, self.nodes[b].necklace
            );
        }
        let _ = writeln!(out, "}}");
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n={} nodes={} edges={}", self.n, self.nodes.len(), self.edges.len());
        let mut target = vec![None; self.nodes.len()];
        for &(a, b) in &self.edges {
            target[a] = Some(b);
        }
        for (i, node) in self.nodes.iter().enumerate() {
            let mut flags = String::new();
            if node.is_highest {
                flags.push_str(" highest");
            }
            if node.is_lowest {
                flags.push_str(" lowest");
            }
            let arrow = match target[i] {
                Some(j) => format!(" -f-> {}", self.nodes[j].necklace),
                None => String::new(),
            };
            let _ = writeln!(out, "{} wt={}{flags}{arrow}", node.necklace, node.weight);
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = GraphDoc {
            n: self.n,
            nodes: self
                .nodes
                .iter()
                .map(|x| NodeDoc {
                    word: x.necklace.to_string(),
                    weight: x.weight,
                    highest: x.is_highest,
                    lowest: x.is_lowest,
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| {
                    (self.nodes[a].necklace.to_string(), self.nodes[b].necklace.to_string())
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("graph serializes")
    }
}

pub fn crystal_graph(n: usize) -> Result<CrystalGraph> {
    crystal_graph_with(n, DEFAULT_MAX_N, Exec::default())
}

/// Nodes and `f`-edges of all necklaces of length `n`. The edges are read off
/// the chains of the decomposition, whose successor map is `f`.
pub fn crystal_graph_with(n: usize, max_n: usize, exec: Exec) -> Result<CrystalGraph> {
    let scd = build_scd_with(n, max_n, exec)?;
    let mut nodes: Vec<CrystalNode> = scd
        .chains()
        .iter()
        .flat_map(|c| {
            let last = c.len() - 1;
            c.elements().iter().enumerate().map(move |(d, x)| CrystalNode {
                necklace: *x,
                weight: weight(x),
                is_highest: d == 0,
                is_lowest: d == last,
            })
        })
        .collect();
    nodes.sort_by(|a, b| {
        b.necklace
            .rank()
            .cmp(&a.necklace.rank())
            .then_with(|| a.necklace.cmp(&b.necklace))
    });
    let position: std::collections::HashMap<Necklace, usize> =
        nodes.iter().enumerate().map(|(i, x)| (x.necklace, i)).collect();
    let edges = scd
        .chains()
        .iter()
        .flat_map(|c| c.elements().windows(2).map(|p| (position[&p[0]], position[&p[1]])))
        .collect::<Vec<_>>();
    let mut edges = edges;
    edges.sort_unstable();
    Ok(CrystalGraph { n, nodes, edges })
}
