use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{find_separation_pairs, is_k_connected, separation_pair_at, Graph, SeparationPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Leaf,
    /// Children and the shared middle vertex.
    Series(usize, usize, usize),
    Parallel(usize, usize),
}

/// Node of a series-parallel derivation tree: a two-terminal subgraph with
/// terminals `s`, `t` and `count` nodes.
#[derive(Debug, Clone, Copy)]
struct SpNode {
    kind: Kind,
    s: usize,
    t: usize,
    count: usize,
}

/// Reduces `g` to a single edge by series and parallel steps, returning the
/// derivation tree (root last) or `None` if `g` is not series-parallel.
fn derivation(g: &Graph) -> Option<Vec<SpNode>> {
    let mut tree: Vec<SpNode> = Vec::new();
    // live edge id -> (a, b, tree node)
    let mut live: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
    for (a, b) in g.edges() {
        let id = tree.len();
        tree.push(SpNode { kind: Kind::Leaf, s: a, t: b, count: 2 });
        live.insert(id, (a, b, id));
    }
    let mut next_id = tree.len();
    while live.len() > 1 {
        // Parallel step on the first repeated endpoint pair.
        let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (&id, &(a, b, _)) in &live {
            by_pair.entry((a.min(b), a.max(b))).or_default().push(id);
        }
        if let Some((&(a, b), ids)) = by_pair.iter().find(|(_, ids)| ids.len() >= 2) {
            let (x, y) = (live[&ids[0]].2, live[&ids[1]].2);
            live.remove(&ids[0]);
            live.remove(&ids[1]);
            let count = tree[x].count + tree[y].count - 2;
            tree.push(SpNode { kind: Kind::Parallel(x, y), s: a, t: b, count });
            live.insert(next_id, (a, b, tree.len() - 1));
            next_id += 1;
            continue;
        }
        // Series step at the smallest vertex of degree two.
        let mut incident: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (&id, &(a, b, _)) in &live {
            incident.entry(a).or_default().push(id);
            incident.entry(b).or_default().push(id);
        }
        let (&v, ids) = incident.iter().find(|(_, ids)| ids.len() == 2)?;
        let (e1, e2) = (live[&ids[0]], live[&ids[1]]);
        let x = if e1.0 == v { e1.1 } else { e1.0 };
        let y = if e2.0 == v { e2.1 } else { e2.0 };
        live.remove(&ids[0]);
        live.remove(&ids[1]);
        let count = tree[e1.2].count + tree[e2.2].count - 1;
        tree.push(SpNode { kind: Kind::Series(e1.2, e2.2, v), s: x, t: y, count });
        live.insert(next_id, (x, y, tree.len() - 1));
        next_id += 1;
    }
    Some(tree)
}

pub fn is_series_parallel(g: &Graph) -> bool {
    g.m() > 0 && derivation(g).is_some()
}

/// A separation pair of a 2-connected series-parallel graph whose components
/// all have fewer than `2|V|/3` nodes, found by walking the derivation tree
/// towards the largest child.
pub fn series_parallel_separation_pair(g: &Graph) -> Result<SeparationPair> {
    if !is_k_connected(g, 2)? {
        return Err(Error::pre("series-parallel pair search requires a 2-connected graph"));
    }
    let tree = derivation(g).ok_or_else(|| Error::pre("graph is not series-parallel"))?;
    let n = g.n();
    let small = |pair: &SeparationPair| pair.components.iter().all(|c| 3 * c.len() < 2 * n);

    let mut cur = tree.len() - 1;
    let candidate = loop {
        let node = tree[cur];
        let (x, y) = match node.kind {
            Kind::Leaf => break None,
            Kind::Series(x, y, _) | Kind::Parallel(x, y) => (x, y),
        };
        let big = if tree[x].count >= tree[y].count { x } else { y };
        if 3 * tree[big].count > 2 * n {
            cur = big;
            continue;
        }
        break match node.kind {
            Kind::Parallel(..) => Some((node.s, node.t)),
            Kind::Series(_, _, m) => {
                let b = tree[big];
                Some(if b.s == m { (m, b.t) } else { (b.s, m) })
            }
            Kind::Leaf => None,
        };
    };
    if let Some((a, b)) = candidate {
        if let Some(pair) = separation_pair_at(g, a, b) {
            if small(&pair) {
                return Ok(pair);
            }
        }
    }
    find_separation_pairs(g)?
        .into_iter()
        .find(|p| small(p))
        .ok_or_else(|| Error::pre("no separation pair with all components below 2|V|/3"))
}
