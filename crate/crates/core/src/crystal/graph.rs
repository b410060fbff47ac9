use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::node::{canonical_charges, CrystalNode};
use crate::cartan::{Rank, Weight};
use crate::error::{Error, Result};
use crate::fock::{ChargedPartition, ChargedPartitionRepr};

pub const DEFAULT_NODE_CAP: usize = 5_000_000;

/// Knobs for crystal generation. Neither field affects the resulting graph,
/// only whether it can be produced and how fast.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenerationConfig {
    pub node_cap: usize,
    /// Worker threads for frontier expansion; `None` uses the global pool,
    /// `Some(1)` expands sequentially.
    pub threads: Option<usize>,
}

impl Default for GenerationConfig {
    fn default() -> Self {
        GenerationConfig { node_cap: DEFAULT_NODE_CAP, threads: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub i: usize,
    pub to: usize,
}

/// The part of `B(lambda)` whose lowering vectors lie under `budget`.
///
/// Nodes are numbered level by level (total height), and inside a level by
/// `(lowering vector, word)`, so numbering and edges depend only on
/// `(lambda, budget)`.
#[derive(Debug, Clone)]
pub struct CrystalGraph {
    lambda: Weight,
    budget: Vec<i64>,
    nodes: Vec<CrystalNode>,
    lowering: Vec<Vec<i64>>,
    index: HashMap<CrystalNode, usize>,
    edges: Vec<Edge>,
    targets: Vec<Vec<Option<usize>>>,
}

type Child = (usize, usize, CrystalNode, Vec<i64>);

fn expand(frontier: &[(usize, CrystalNode, Vec<i64>)], budget: &[i64], n: usize) -> Vec<Child> {
    let mut out = Vec::new();
    for (id, node, c) in frontier {
        for i in 0..n {
            if c[i] >= budget[i] {
                continue;
            }
            if let Some(child) = node.lower(i) {
                let mut cc = c.clone();
                cc[i] += 1;
                out.push((*id, i, child, cc));
            }
        }
    }
    out
}

fn expand_parallel(
    frontier: &[(usize, CrystalNode, Vec<i64>)],
    budget: &[i64],
    n: usize,
) -> Vec<Child> {
    frontier
        .par_chunks(64)
        .flat_map_iter(|chunk| expand(chunk, budget, n))
        .collect()
}

impl CrystalGraph {
    pub fn generate(lambda: &Weight, budget: &[i64], config: &GenerationConfig) -> Result<Self> {
        let n = lambda.rank();
        if !lambda.is_dominant() || lambda.c().iter().any(|&x| x != 0) {
            return Err(Error::domain("highest weight must be dominant with zero lowering"));
        }
        if lambda.level() == 0 {
            return Err(Error::NoHighestWeight);
        }
        if budget.len() != n.get() || budget.iter().any(|&b| b < 0) {
            return Err(Error::domain(format!(
                "budget must be {} nonnegative integers, got {budget:?}",
                n.get()
            )));
        }
        match config.threads {
            Some(1) => Self::build(lambda, budget, config, false),
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::domain(format!("thread pool: {e}")))?
                .install(|| Self::build(lambda, budget, config, true)),
            None => Self::build(lambda, budget, config, true),
        }
    }

    fn build(lambda: &Weight, budget: &[i64], config: &GenerationConfig, parallel: bool) -> Result<Self> {
        let n = lambda.rank().get();
        let charges = canonical_charges(lambda)?;
        let root = CrystalNode::vacuum(&charges, lambda.rank());
        let mut nodes = vec![root.clone()];
        let mut lowering = vec![vec![0i64; n]];
        let mut index = HashMap::from([(root.clone(), 0usize)]);
        let mut edges = Vec::new();
        let mut frontier = vec![(0usize, root, vec![0i64; n])];

        // f_i raises the height by exactly one, so levels are closed under dedup.
        while !frontier.is_empty() {
            let children = if parallel && frontier.len() > 64 {
                expand_parallel(&frontier, budget, n)
            } else {
                expand(&frontier, budget, n)
            };
            let mut level: Vec<(Vec<i64>, CrystalNode)> =
                children.iter().map(|(_, _, node, c)| (c.clone(), node.clone())).collect();
            if parallel {
                level.par_sort_unstable();
            } else {
                level.sort_unstable();
            }
            level.dedup();
            if nodes.len() + level.len() > config.node_cap {
                return Err(Error::Resource { cap: config.node_cap, budget: budget.to_vec() });
            }
            let mut next = Vec::with_capacity(level.len());
            for (c, node) in level {
                let id = nodes.len();
                index.insert(node.clone(), id);
                nodes.push(node.clone());
                lowering.push(c.clone());
                next.push((id, node, c));
            }
            for (from, i, node, _) in &children {
                edges.push(Edge { from: *from, i: *i, to: index[node] });
            }
            frontier = next;
        }
        edges.sort_unstable();
        Ok(Self::assemble(lambda.clone(), budget.to_vec(), nodes, lowering, index, edges))
    }

    fn assemble(
        lambda: Weight,
        budget: Vec<i64>,
        nodes: Vec<CrystalNode>,
        lowering: Vec<Vec<i64>>,
        index: HashMap<CrystalNode, usize>,
        edges: Vec<Edge>,
    ) -> Self {
        let n = lambda.rank().get();
        let mut targets = vec![vec![None; n]; nodes.len()];
        for e in &edges {
            targets[e.from][e.i] = Some(e.to);
        }
        CrystalGraph { lambda, budget, nodes, lowering, index, edges, targets }
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn rank(&self) -> Rank {
        self.lambda.rank()
    }

    pub fn budget(&self) -> &[i64] {
        &self.budget
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[CrystalNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &CrystalNode {
        &self.nodes[id]
    }

    pub fn id_of(&self, node: &CrystalNode) -> Option<usize> {
        self.index.get(node).copied()
    }

    pub fn lowering(&self, id: usize) -> &[i64] {
        &self.lowering[id]
    }

    pub fn weight(&self, id: usize) -> Weight {
        self.lambda.with_lowering(self.lowering[id].clone()).expect("lengths match rank")
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Target of the `f_i` edge out of `id`, if it lies in the graph.
    pub fn target(&self, id: usize, i: usize) -> Option<usize> {
        self.targets[id][i]
    }

    /// True when the lowering vector `c` is inside the budget.
    pub fn covers(&self, c: &[i64]) -> bool {
        c.len() == self.budget.len() && c.iter().zip(&self.budget).all(|(a, b)| 0 <= *a && a <= b)
    }

    /// Node count per lowering vector.
    pub fn weight_counts(&self) -> BTreeMap<Vec<i64>, u64> {
        let mut counts = BTreeMap::new();
        for c in &self.lowering {
            *counts.entry(c.clone()).or_insert(0) += 1;
        }
        counts
    }

    pub fn multiplicity(&self, c: &[i64]) -> u64 {
        self.lowering.iter().filter(|x| x.as_slice() == c).count() as u64
    }

    /// Nodes with `eps_i = 0`, counted per lowering vector.
    pub fn i_highest_counts(&self, i: usize) -> BTreeMap<Vec<i64>, u64> {
        let mut counts = BTreeMap::new();
        for (node, c) in self.nodes.iter().zip(&self.lowering) {
            if node.eps_phi(i).eps == 0 {
                *counts.entry(c.clone()).or_insert(0) += 1;
            }
        }
        counts
    }

    /// Checks the crystal axioms and budget closure on every node; returns one
    /// message per violation.
    pub fn axiom_violations(&self) -> Vec<String> {
        let n = self.rank().get();
        let mut bad = Vec::new();
        for (id, node) in self.nodes.iter().enumerate() {
            let wt = self.weight(id);
            if node.weight() != wt {
                bad.push(format!("node {id}: stored weight differs from word weight"));
            }
            for i in 0..n {
                let ep = node.eps_phi(i);
                if ep.phi as i64 - ep.eps as i64 != wt.pairing(i) {
                    bad.push(format!("node {id}, i={i}: phi - eps != <wt, h_i>"));
                }
                let lowered = node.lower(i);
                match (self.target(id, i), &lowered) {
                    (Some(to), Some(f)) => {
                        if &self.nodes[to] != f {
                            bad.push(format!("node {id}, i={i}: edge target is not f_i"));
                        }
                        if self.weight(to) != wt.lower(i) {
                            bad.push(format!("node {id}, i={i}: wt(f_i b) != wt(b) - alpha_i"));
                        }
                        if f.raise(i).as_ref() != Some(node) {
                            bad.push(format!("node {id}, i={i}: e_i f_i b != b"));
                        }
                        if f.eps_phi(i).eps != ep.eps + 1 {
                            bad.push(format!("node {id}, i={i}: eps_i(f_i b) != eps_i(b) + 1"));
                        }
                    }
                    (None, Some(_)) => {
                        if self.covers(wt.lower(i).c()) {
                            bad.push(format!("node {id}, i={i}: f_i b inside budget but missing"));
                        }
                    }
                    (Some(_), None) => bad.push(format!("node {id}, i={i}: edge where f_i b = 0")),
                    (None, None) => {}
                }
                if let Some(e) = node.raise(i) {
                    if e.lower(i).as_ref() != Some(node) {
                        bad.push(format!("node {id}, i={i}: f_i e_i b != b"));
                    }
                }
            }
        }
        bad
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            lambda: self.lambda.clone(),
            budget: self.budget.clone(),
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(id, node)| NodeDocument {
                    id,
                    word: node.word().iter().map(ChargedPartition::to_repr).collect(),
                    weight: self.weight(id),
                })
                .collect(),
            edges: self.edges.clone(),
        }
    }

    /// Rebuilds a graph from its document, validating ids and weights.
    pub fn from_document(doc: GraphDocument) -> Result<Self> {
        let n = doc.lambda.rank();
        let mut nodes = Vec::with_capacity(doc.nodes.len());
        let mut lowering = Vec::with_capacity(doc.nodes.len());
        let mut index = HashMap::with_capacity(doc.nodes.len());
        for (k, nd) in doc.nodes.into_iter().enumerate() {
            if nd.id != k {
                return Err(Error::domain(format!("node ids must be sequential, found {} at {k}", nd.id)));
            }
            let word = nd
                .word
                .into_iter()
                .map(|b| ChargedPartition::from_repr(b, n))
                .collect::<Result<Vec<_>>>()?;
            let node = CrystalNode::from_word(word)?;
            if node.weight() != nd.weight || nd.weight.w() != doc.lambda.w() {
                return Err(Error::domain(format!("node {k}: weight does not match its word")));
            }
            lowering.push(nd.weight.c().to_vec());
            index.insert(node.clone(), k);
            nodes.push(node);
        }
        if doc.edges.iter().any(|e| e.from >= nodes.len() || e.to >= nodes.len() || e.i >= n.get()) {
            return Err(Error::domain("edge refers to a missing node"));
        }
        Ok(Self::assemble(doc.lambda, doc.budget, nodes, lowering, index, doc.edges))
    }

    /// Compact canonical JSON; the digest is taken over these bytes.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("graph documents serialize")
    }

    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_json().as_bytes()))
    }

    /// Graphviz rendering: nodes labeled by lowering vector and pairings,
    /// `f_i` edges labeled by `i` and colored by residue.
    pub fn to_dot(&self) -> String {
        const PALETTE: [&str; 8] =
            ["red", "blue", "darkgreen", "orange", "purple", "brown", "deeppink", "cyan4"];
        let mut out = String::new();
        let _ = writeln!(out, "digraph crystal {{");
        let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
        for id in 0..self.len() {
            let wt = self.weight(id);
            let _ = writeln!(
                out,
                "  n{id} [label=\"c={}\\n<h>={}\"];",
                join(wt.c()),
                join(&wt.pairings())
            );
        }
        for e in &self.edges {
            let color = PALETTE[(e.i % self.rank().get()) % PALETTE.len()];
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"{}\", color={color}, fontcolor={color}];",
                e.from, e.to, e.i
            );
        }
        out.push_str("}\n");
        out
    }
}

fn join(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NodeDocument {
    pub id: usize,
    pub word: Vec<ChargedPartitionRepr>,
    pub weight: Weight,
}

/// JSON interchange form of a [`CrystalGraph`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDocument {
    pub lambda: Weight,
    pub budget: Vec<i64>,
    pub nodes: Vec<NodeDocument>,
    pub edges: Vec<Edge>,
}

pub fn generate_crystal(lambda: &Weight, budget: &[i64]) -> Result<CrystalGraph> {
    CrystalGraph::generate(lambda, budget, &GenerationConfig::default())
}
