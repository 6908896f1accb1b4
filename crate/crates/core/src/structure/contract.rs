use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{components_without, is_k_connected, separation_pair_at, Graph, SeparationPair};

use super::st::{pseudo_path, PseudoPath};

/// Quotient edge: `weight` contracted nodes laid out along `path` (from the
/// lower kept endpoint to the higher one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedEdge {
    pub weight: usize,
    pub path: PseudoPath,
}

/// Quotient of a 2-connected graph in which separation components have been
/// replaced by weighted edges. Quotient node `i` is original node `kept[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedGraph {
    pub kept: Vec<usize>,
    pub quotient: Graph,
    /// Keyed by quotient edge `(i, j)` with `i < j`; every quotient edge has an entry.
    pub edges: BTreeMap<(usize, usize), ContractedEdge>,
    /// Node count of the original graph.
    pub total: usize,
}

impl ContractedGraph {
    /// The uncontracted view of a graph.
    pub fn identity(g: &Graph) -> Self {
        let edges = g
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let path = PseudoPath { u: a, v: b, interior: Vec::new() };
                ((a, b), ContractedEdge { weight: 0, path })
            })
            .collect();
        ContractedGraph {
            kept: (0..g.n()).collect(),
            quotient: g.clone(),
            edges,
            total: g.n(),
        }
    }

    pub fn local(&self, v: usize) -> Option<usize> {
        self.kept.binary_search(&v).ok()
    }

    pub fn weight(&self, i: usize, j: usize) -> usize {
        self.edges.get(&(i.min(j), i.max(j))).map_or(0, |e| e.weight)
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<&ContractedEdge> {
        self.edges.get(&(i.min(j), i.max(j)))
    }

    pub fn max_weight(&self) -> usize {
        self.edges.values().map(|e| e.weight).max().unwrap_or(0)
    }

    /// `|V*| + sum of edge weights`, which equals the original node count.
    pub fn conserved_total(&self) -> usize {
        self.kept.len() + self.edges.values().map(|e| e.weight).sum::<usize>()
    }

    /// Original nodes represented by the quotient nodes in `local` together
    /// with the interiors of quotient edges that have both ends in `local`.
    pub fn expand(&self, local: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.kept.len()];
        for &i in local {
            inside[i] = true;
        }
        let mut out: Vec<usize> = local.iter().map(|&i| self.kept[i]).collect();
        for (&(i, j), e) in &self.edges {
            if inside[i] && inside[j] {
                out.extend_from_slice(&e.path.interior);
            }
        }
        out.sort_unstable();
        out
    }

    /// Weighted size of a quotient node set: nodes plus weights of edges inside it.
    pub fn weighted_size(&self, local: &[usize]) -> usize {
        let mut inside = vec![false; self.kept.len()];
        for &i in local {
            inside[i] = true;
        }
        local.len()
            + self
                .edges
                .iter()
                .filter(|(&(i, j), _)| inside[i] && inside[j])
                .map(|(_, e)| e.weight)
                .sum::<usize>()
    }
}

/// Outcome of the contraction dichotomy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    /// A separation pair of the original graph with every component smaller
    /// than `(q-1)|V|/q`.
    Balanced(SeparationPair),
    /// A 3-connected quotient with every edge weight below `|V|/q`.
    Contracted(ContractedGraph),
}

/// Either finds a separation pair with all components small, or contracts the
/// small side of every separation pair until the quotient is 3-connected.
pub fn decompose_q(g: &Graph, q: usize) -> Result<Decomposition> {
    if q < 3 {
        return Err(Error::pre("decomposition needs q >= 3"));
    }
    if !is_k_connected(g, 2)? {
        return Err(Error::pre("decomposition requires a 2-connected graph"));
    }
    let n = g.n();
    let small = |size: usize| size * q < (q - 1) * n;
    let mut cg = ContractedGraph::identity(g);
    loop {
        let k = cg.kept.len();
        let mut first_split: Option<(usize, usize, Vec<Vec<usize>>)> = None;
        for a in 0..k {
            for b in a + 1..k {
                let comps = components_without(&cg.quotient, &[a, b]);
                let ab = cg.weight(a, b);
                if comps.len() < 2 && ab == 0 {
                    continue;
                }
                let sizes: Vec<usize> = comps.iter().map(|c| quotient_component_size(&cg, c, a, b)).collect();
                if sizes.iter().all(|&s| small(s)) && small(ab) {
                    let (u, v) = (cg.kept[a], cg.kept[b]);
                    let pair = separation_pair_at(g, u, v)
                        .ok_or_else(|| Error::internal("quotient pair does not separate the graph"))?;
                    return Ok(Decomposition::Balanced(pair));
                }
                if comps.len() >= 2 && first_split.is_none() {
                    first_split = Some((a, b, comps));
                }
            }
        }
        let Some((a, b, comps)) = first_split else {
            if !is_k_connected(&cg.quotient, 3)? {
                return Err(Error::internal("quotient without separation pairs is not 3-connected"));
            }
            return Ok(Decomposition::Contracted(cg));
        };
        let sizes: Vec<usize> = comps.iter().map(|c| quotient_component_size(&cg, c, a, b)).collect();
        let big = (0..comps.len()).max_by_key(|&i| (sizes[i], std::cmp::Reverse(i))).unwrap();
        let mut drop: Vec<usize> = Vec::new();
        let mut extra = Vec::new();
        for (i, c) in comps.iter().enumerate() {
            if i == big {
                continue;
            }
            let expanded = expand_component(&cg, c, a, b);
            let pp = pseudo_path(g, &expanded, cg.kept[a], cg.kept[b])?;
            extra.extend(pp.interior);
            drop.extend_from_slice(c);
        }
        cg = contract(cg, a, b, &drop, extra);
    }
}

// Quotient component plus the weights of every edge touching it (other than a-b).
fn quotient_component_size(cg: &ContractedGraph, comp: &[usize], a: usize, b: usize) -> usize {
    let mut inside = vec![false; cg.kept.len()];
    for &i in comp {
        inside[i] = true;
    }
    comp.len()
        + cg
            .edges
            .iter()
            .filter(|(&(i, j), _)| (inside[i] || inside[j]) && !(i == a && j == b))
            .map(|(_, e)| e.weight)
            .sum::<usize>()
}

fn expand_component(cg: &ContractedGraph, comp: &[usize], a: usize, b: usize) -> Vec<usize> {
    let mut inside = vec![false; cg.kept.len()];
    for &i in comp {
        inside[i] = true;
    }
    let mut out: Vec<usize> = comp.iter().map(|&i| cg.kept[i]).collect();
    for (&(i, j), e) in &cg.edges {
        if (inside[i] || inside[j]) && !(i == a && j == b) {
            out.extend_from_slice(&e.path.interior);
        }
    }
    out.sort_unstable();
    out
}

// Removes `drop` from the quotient and appends `extra` to the a-b edge's path.
fn contract(cg: ContractedGraph, a: usize, b: usize, drop: &[usize], extra: Vec<usize>) -> ContractedGraph {
    let old = cg.kept.len();
    let mut gone = vec![false; old];
    for &i in drop {
        gone[i] = true;
    }
    let mut remap = vec![usize::MAX; old];
    let mut kept = Vec::new();
    for i in 0..old {
        if !gone[i] {
            remap[i] = kept.len();
            kept.push(cg.kept[i]);
        }
    }
    let (ua, ub) = (cg.kept[a], cg.kept[b]);
    let mut edges = BTreeMap::new();
    for ((i, j), e) in cg.edges {
        if !gone[i] && !gone[j] {
            edges.insert((remap[i], remap[j]), e);
        }
    }
    let key = (remap[a], remap[b]);
    let entry = edges.entry(key).or_insert_with(|| ContractedEdge {
        weight: 0,
        path: PseudoPath { u: ua, v: ub, interior: Vec::new() },
    });
    entry.weight += extra.len();
    entry.path.interior.extend(extra);
    let quotient = Graph::new(kept.len(), edges.keys().copied()).expect("quotient edges are simple");
    ContractedGraph { kept, quotient, edges, total: cg.total }
}
