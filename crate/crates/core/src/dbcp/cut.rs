//! Cut triples: a split `(V1', V2')` with `w` on the first side, two of its
//! neighbors `u`, `v` on the second, both sides connected and the second
//! side at most half of the (weighted) node count.

use crate::error::{Error, Result};
use crate::graph::{connected_induced, is_k_connected, mask_connected, Graph};
use crate::structure::{nonseparating_induced_cycle, ContractedGraph};

/// Which construction produced the split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CutCase {
    /// The cycle is short: `V2'` is the cycle minus `w`.
    Short,
    /// `V2'` is an arc of the cycle between two neighbors of `w`.
    Arc,
    /// `V1'` is the cycle plus a pendant node `w` that is not a cut point
    /// of the remainder.
    Leaf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutTriple {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub case: CutCase,
    /// The nonseparating cycle the split was built from.
    pub cycle: Vec<usize>,
}

impl CutTriple {
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.u, self.v, self.w)
    }
}

/// Checks the structural clauses: disjoint cover, both sides connected,
/// `{u,w}, {v,w}` edges, `w` in `V1'` and `u, v` in `V2'`, and
/// `|V2'| <= ceil(n/2)`.
pub fn cut_clauses_hold(g: &Graph, c: &CutTriple) -> bool {
    let n = g.n();
    let mut seen = vec![0u8; n];
    for &x in c.v1.iter().chain(&c.v2) {
        if x >= n {
            return false;
        }
        seen[x] += 1;
    }
    seen.iter().all(|&k| k == 1)
        && connected_induced(g, &c.v1).unwrap_or(false)
        && connected_induced(g, &c.v2).unwrap_or(false)
        && g.has_edge(c.u, c.w)
        && g.has_edge(c.v, c.w)
        && c.v1.contains(&c.w)
        && c.v2.contains(&c.u)
        && c.v2.contains(&c.v)
        && 2 * c.v2.len() <= n + n % 2
}

/// Structural clauses on the quotient plus the weighted bound
/// `|V2*| + sum of weights inside V2* <= total_n / 2`.
pub fn weighted_cut_holds(cg: &ContractedGraph, c: &CutTriple, total_n: usize) -> bool {
    let q = &cg.quotient;
    let mut all = c.v1.clone();
    all.extend_from_slice(&c.v2);
    all.sort_unstable();
    let cover = all == (0..q.n()).collect::<Vec<_>>();
    cover
        && connected_induced(q, &c.v1).unwrap_or(false)
        && connected_induced(q, &c.v2).unwrap_or(false)
        && q.has_edge(c.u, c.w)
        && q.has_edge(c.v, c.w)
        && c.v1.contains(&c.w)
        && c.v2.contains(&c.u)
        && c.v2.contains(&c.v)
        && 2 * cg.weighted_size(&c.v2) <= total_n
}

/// Plain cut triple of a 3-connected graph.
pub fn cut_triple(g: &Graph) -> Result<CutTriple> {
    if !is_k_connected(g, 3)? {
        return Err(Error::pre("cut triple requires a 3-connected graph"));
    }
    let cg = ContractedGraph::identity(g);
    let bound = g.n() + g.n() % 2;
    search(&cg, bound, |c| cut_clauses_hold(g, c))
}

/// Cut triple of a contracted graph whose second side respects the edge
/// weights: `|V2*| + sum of w(e) inside V2* <= total_n / 2`.
pub fn cut_triple_weighted(cg: &ContractedGraph, total_n: usize) -> Result<CutTriple> {
    let q = &cg.quotient;
    if !is_k_connected(q, 3)? {
        return Err(Error::pre("weighted cut triple requires a 3-connected quotient"));
    }
    if cg.edges.values().any(|e| 4 * e.weight >= total_n) {
        return Err(Error::pre("every contracted edge must carry less than a quarter of the nodes"));
    }
    search(cg, total_n, |c| weighted_cut_holds(cg, c, total_n))
}

/// Tries nonseparating cycles through each edge in order until one yields a
/// split that passes `ok`. `bound` is twice the allowed weighted size of `V2`.
fn search(cg: &ContractedGraph, bound: usize, ok: impl Fn(&CutTriple) -> bool) -> Result<CutTriple> {
    let q = &cg.quotient;
    let n = q.n();
    let mut tried = std::collections::BTreeSet::new();
    for (a, b) in q.edges() {
        let Some(avoid) = (0..n).find(|&x| x != a && x != b) else {
            continue;
        };
        let Ok(cycle) = nonseparating_induced_cycle(q, (a, b), avoid) else {
            continue;
        };
        let mut key = cycle.clone();
        key.sort_unstable();
        if !tried.insert(key) {
            continue;
        }
        if let Some(c) = from_cycle(cg, &cycle, bound) {
            if ok(&c) {
                return Ok(c);
            }
        }
    }
    Err(Error::internal("no nonseparating cycle produced a valid cut triple"))
}

fn from_cycle(cg: &ContractedGraph, cycle: &[usize], bound: usize) -> Option<CutTriple> {
    let q = &cg.quotient;
    let n = q.n();
    let len = cycle.len();
    let mut on = vec![false; n];
    for &x in cycle {
        on[x] = true;
    }
    let complement = |side: &[usize]| -> Vec<usize> {
        let mut mask = vec![false; n];
        for &x in side {
            mask[x] = true;
        }
        (0..n).filter(|&x| !mask[x]).collect()
    };
    let make = |u, v, w, v2: Vec<usize>, case| {
        let mut v2 = v2;
        v2.sort_unstable();
        Some(CutTriple { u, v, w, v1: complement(&v2), v2, case, cycle: cycle.to_vec() })
    };

    if 2 * cg.weighted_size(cycle) <= bound + 2 {
        // Consecutive (u, w, v) with the lightest remainder.
        let best = (0..len)
            .map(|i| {
                let rest: Vec<usize> = (1..len).map(|k| cycle[(i + k) % len]).collect();
                (cg.weighted_size(&rest), i, rest)
            })
            .min_by_key(|(s, i, _)| (*s, *i))?;
        let (_, i, rest) = best;
        let (u, w, v) = (cycle[(i + len - 1) % len], cycle[i], cycle[(i + 1) % len]);
        return make(u, v, w, rest, CutCase::Short);
    }

    // Arcs between two cycle neighbors of an outside node.
    let mut best: Option<(usize, usize, usize, usize, Vec<usize>)> = None;
    for w in (0..n).filter(|&x| !on[x]) {
        let hits: Vec<usize> = (0..len).filter(|&i| q.has_edge(w, cycle[i])).collect();
        for (ai, &i) in hits.iter().enumerate() {
            for &j in &hits[ai + 1..] {
                for arc in [
                    (i..=j).map(|k| cycle[k]).collect::<Vec<_>>(),
                    (j..=i + len).map(|k| cycle[k % len]).collect::<Vec<_>>(),
                ] {
                    let s = cg.weighted_size(&arc);
                    if best.as_ref().map_or(true, |b| s < b.0) {
                        best = Some((s, cycle[i], cycle[j], w, arc));
                    }
                }
            }
        }
    }
    if let Some((s, u, v, w, arc)) = best {
        if 2 * s <= bound {
            return make(u, v, w, arc, CutCase::Arc);
        }
        return None;
    }

    // No outside node sees two cycle nodes: find a pendant non-cut node.
    let w = pendant_noncut(q, &on)?;
    let outside: Vec<usize> = q.neighbors(w).iter().copied().filter(|&x| !on[x]).collect();
    if outside.len() < 2 {
        return None;
    }
    let mut v1 = cycle.to_vec();
    v1.push(w);
    make(outside[0], outside[1], w, complement(&v1), CutCase::Leaf)
}

/// Among outside nodes with exactly one cycle neighbor, one that does not
/// disconnect the outside. Leaves of a BFS tree of the outside work; if no
/// such node is a leaf, the two candidates farthest apart in the tree work.
fn pendant_noncut(q: &Graph, on: &[bool]) -> Option<usize> {
    let n = q.n();
    let outside: Vec<bool> = on.iter().map(|&b| !b).collect();
    let cands: Vec<usize> = (0..n)
        .filter(|&x| outside[x] && q.neighbors(x).iter().filter(|&&y| on[y]).count() == 1)
        .collect();
    let root = (0..n).find(|&x| outside[x])?;
    // BFS tree of the outside.
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut children = vec![0usize; n];
    let mut queue = std::collections::VecDeque::from([root]);
    parent[root] = root;
    while let Some(x) = queue.pop_front() {
        for &y in q.neighbors(x) {
            if outside[y] && parent[y] == usize::MAX {
                parent[y] = x;
                depth[y] = depth[x] + 1;
                children[x] += 1;
                queue.push_back(y);
            }
        }
    }
    let is_leaf = |x: usize| children[x] == 0 || (x == root && children[x] == 1);
    let noncut = |x: usize| {
        let mut rest = outside.clone();
        rest[x] = false;
        rest.iter().all(|&b| !b) || mask_connected(q, &rest)
    };
    if let Some(&x) = cands.iter().find(|&&x| is_leaf(x)) {
        return noncut(x).then_some(x);
    }
    let dist = |mut a: usize, mut b: usize| {
        let mut d = 0;
        while a != b {
            if depth[a] >= depth[b] {
                a = parent[a];
            } else {
                b = parent[b];
            }
            d += 1;
        }
        d
    };
    let mut far = None;
    for (i, &a) in cands.iter().enumerate() {
        for &b in &cands[i + 1..] {
            let d = dist(a, b);
            if far.map_or(true, |(best, _, _)| d > best) {
                far = Some((d, a, b));
            }
        }
    }
    let (_, a, b) = far?;
    [a, b].into_iter().find(|&x| noncut(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn k4_short_cycle() {
        let k4 = complete(4);
        let c = cut_triple(&k4).unwrap();
        assert_eq!(c.case, CutCase::Short);
        assert_eq!(c.cycle.len(), 3);
        assert_eq!(c.v2.len(), 2);
        assert!(cut_clauses_hold(&k4, &c));
    }

    #[test]
    fn families_pass_clauses() {
        for g in [octahedron(), prism(3), prism(4), prism(6), wheel(5), wheel(9), complete(6)] {
            let c = cut_triple(&g).unwrap();
            assert!(cut_clauses_hold(&g, &c), "{g:?}");
            assert!(2 * c.v2.len() <= g.n());
        }
    }

    #[test]
    fn weighted_identity_matches_plain() {
        let k4 = complete(4);
        let cg = ContractedGraph::identity(&k4);
        let c = cut_triple_weighted(&cg, 4).unwrap();
        assert!(weighted_cut_holds(&cg, &c, 4));
        assert_eq!(c, cut_triple(&k4).unwrap());
    }

    /// Quotient `q` with integer weights on some edges; interiors get fresh ids.
    fn weighted(q: Graph, weights: &[((usize, usize), usize)]) -> ContractedGraph {
        use crate::structure::{ContractedEdge, PseudoPath};
        let mut cg = ContractedGraph::identity(&q);
        let mut next = q.n();
        for &((a, b), wt) in weights {
            let interior: Vec<usize> = (next..next + wt).collect();
            next += wt;
            cg.edges.insert((a, b), ContractedEdge { weight: wt, path: PseudoPath { u: a, v: b, interior } });
        }
        cg.total = cg.conserved_total();
        cg
    }

    #[test]
    fn k4_with_heavy_edge() {
        // A weight of 3 with 7 nodes in total breaks the quarter bound.
        let cg = weighted(complete(4), &[((0, 1), 3)]);
        assert!(cut_triple_weighted(&cg, 7).is_err());
        let cg = weighted(complete(4), &[((0, 1), 1)]);
        let c = cut_triple_weighted(&cg, 5).unwrap();
        assert!(weighted_cut_holds(&cg, &c, 5));
        assert!(2 * cg.weighted_size(&c.v2) <= 5);
    }

    #[test]
    fn random_wheel_weightings() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut cases = std::collections::BTreeSet::new();
        for round in 0..100 {
            let q = if round % 2 == 0 { wheel(6 + round % 5) } else { prism(3 + round % 4) };
            let edges = q.edges();
            let mut ws: Vec<((usize, usize), usize)> = Vec::new();
            for &e in &edges {
                if rng.gen_bool(0.4) {
                    ws.push((e, rng.gen_range(1..=4)));
                }
            }
            // Enforce the quarter bound by shrinking heavy edges.
            loop {
                let total = q.n() + ws.iter().map(|x| x.1).sum::<usize>();
                match ws.iter_mut().find(|x| 4 * x.1 >= total) {
                    Some(x) => x.1 -= 1,
                    None => break,
                }
            }
            ws.retain(|x| x.1 > 0);
            let cg = weighted(q, &ws);
            let total = cg.total;
            let c = cut_triple_weighted(&cg, total).unwrap();
            assert!(weighted_cut_holds(&cg, &c, total));
            cases.insert(format!("{:?}", c.case));
        }
        assert!(cases.contains("Short"));
    }

    #[test]
    fn long_rim_uses_an_arc() {
        // The rim of a wheel is nonseparating and longer than half the nodes.
        let g = wheel(8);
        let cg = ContractedGraph::identity(&g);
        let rim: Vec<usize> = (1..=8).collect();
        let c = from_cycle(&cg, &rim, g.n() + 1).unwrap();
        assert_eq!(c.case, CutCase::Arc);
        assert_eq!(c.w, 0);
        assert_eq!(c.v2.len(), 2);
        assert!(cut_clauses_hold(&g, &c));
    }
}
