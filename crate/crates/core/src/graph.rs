//! Simple undirected graphs over contiguous node ids, plus the connectivity
//! queries every construction in the crate leans on.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Simple undirected graph on nodes `0..n`. Adjacency lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and bad ids.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (a, b) in edges {
            if a >= n {
                return Err(Error::NodeOutOfRange { id: a, n });
            }
            if b >= n {
                return Err(Error::NodeOutOfRange { id: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
            m += 1;
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(v.min(w[0]), v.max(w[0])));
            }
        }
        Ok(Graph { adj, m })
    }

    /// Like [`Graph::new`] but silently drops repeated edges.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        list.sort_unstable();
        list.dedup();
        Graph::new(n, list)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (a, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    pub fn check_node(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { id: v, n: self.n() })
        }
    }

    /// Returns a copy with `{a, b}` added (no-op when already present).
    pub fn with_edge(&self, a: usize, b: usize) -> Graph {
        if self.has_edge(a, b) || a == b {
            return self.clone();
        }
        let mut g = self.clone();
        let pos = g.adj[a].binary_search(&b).unwrap_err();
        g.adj[a].insert(pos, b);
        let pos = g.adj[b].binary_search(&a).unwrap_err();
        g.adj[b].insert(pos, a);
        g.m += 1;
        g
    }

    /// Induced subgraph on `nodes`; local id `i` corresponds to `nodes[i]`.
    pub fn induced(&self, nodes: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in nodes.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = vec![Vec::new(); nodes.len()];
        let mut m = 0;
        for (i, &v) in nodes.iter().enumerate() {
            for &w in &self.adj[v] {
                if local[w] != usize::MAX {
                    adj[i].push(local[w]);
                    if i < local[w] {
                        m += 1;
                    }
                }
            }
            adj[i].sort_unstable();
        }
        Graph { adj, m }
    }

    /// Lexicographically first triangle `(a, b, c)` with `a < b < c`.
    pub fn first_triangle(&self) -> Option<(usize, usize, usize)> {
        for (a, b) in self.edges() {
            let common = self.adj[b].iter().find(|&&c| c > b && self.has_edge(a, c));
            if let Some(&c) = common {
                return Some((a, b, c));
            }
        }
        None
    }
}

pub(crate) fn mask_of(n: usize, nodes: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &v in nodes {
        mask[v] = true;
    }
    mask
}

/// Connectivity of the subgraph induced by the nodes flagged in `mask`.
pub(crate) fn mask_connected(g: &Graph, mask: &[bool]) -> bool {
    let Some(start) = mask.iter().position(|&b| b) else {
        return true;
    };
    let total = mask.iter().filter(|&&b| b).count();
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if mask[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == total
}

/// True iff `G[S]` is connected; the empty set counts as connected.
pub fn connected_induced(g: &Graph, s: &[usize]) -> Result<bool> {
    for &v in s {
        g.check_node(v)?;
    }
    Ok(mask_connected(g, &mask_of(g.n(), s)))
}

pub fn is_connected(g: &Graph) -> bool {
    mask_connected(g, &vec![true; g.n()])
}

/// Connected components of `G - removed`, each sorted, ordered by smallest id.
pub fn components_without(g: &Graph, removed: &[usize]) -> Vec<Vec<usize>> {
    let mut alive = vec![true; g.n()];
    for &r in removed {
        alive[r] = false;
    }
    components_of_mask(g, &alive)
}

pub(crate) fn components_of_mask(g: &Graph, alive: &[bool]) -> Vec<Vec<usize>> {
    let mut comp = vec![usize::MAX; g.n()];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for s in 0..g.n() {
        if !alive[s] || comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        let mut members = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if alive[w] && comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// True iff the graph has more than `k` nodes and no set of fewer than `k`
/// nodes disconnects it. Checked by exhaustive removal, `k` in `1..=3`.
pub fn is_k_connected(g: &Graph, k: usize) -> Result<bool> {
    if !(1..=3).contains(&k) {
        return Err(Error::pre(format!("connectivity level {k} outside 1..=3")));
    }
    let n = g.n();
    if n <= k {
        return Ok(false);
    }
    if !is_connected(g) {
        return Ok(false);
    }
    let mut alive = vec![true; n];
    if k >= 2 {
        for a in 0..n {
            alive[a] = false;
            if !mask_connected(g, &alive) {
                return Ok(false);
            }
            if k == 3 {
                for b in a + 1..n {
                    alive[b] = false;
                    let ok = mask_connected(g, &alive);
                    alive[b] = true;
                    if !ok {
                        alive[a] = true;
                        return Ok(false);
                    }
                }
            }
            alive[a] = true;
        }
    }
    Ok(true)
}

/// Largest `k <= 3` for which the graph is `k`-connected (0 when disconnected).
pub fn connectivity_level(g: &Graph) -> u8 {
    let mut level = 0;
    for k in 1..=3u8 {
        if is_k_connected(g, k as usize).unwrap_or(false) {
            level = k;
        } else {
            break;
        }
    }
    level
}

/// A pair of nodes whose removal leaves at least two components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationPair {
    pub u: usize,
    pub v: usize,
    pub components: Vec<Vec<usize>>,
}

impl SeparationPair {
    /// Size of the largest component.
    pub fn max_component(&self) -> usize {
        self.components.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// All separation pairs of a 2-connected graph, in lexicographic order.
pub fn find_separation_pairs(g: &Graph) -> Result<Vec<SeparationPair>> {
    if !is_k_connected(g, 2)? {
        return Err(Error::pre("separation pairs are defined here for 2-connected graphs"));
    }
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let components = components_without(g, &[u, v]);
            if components.len() >= 2 {
                out.push(SeparationPair { u, v, components });
            }
        }
    }
    Ok(out)
}

/// Separation pair `{u, v}` of `g` if removing both leaves several components.
pub fn separation_pair_at(g: &Graph, u: usize, v: usize) -> Option<SeparationPair> {
    let components = components_without(g, &[u, v]);
    (components.len() >= 2).then(|| SeparationPair {
        u: u.min(v),
        v: u.max(v),
        components,
    })
}

/// Small named graph families used by generators and tests.
pub mod families {
    use super::Graph;

    pub fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    /// Terminals 0 and 1 joined by `paths` internally disjoint paths with
    /// `inner` interior nodes each.
    pub fn theta(paths: usize, inner: usize) -> Graph {
        let mut edges = Vec::new();
        let mut next = 2;
        for _ in 0..paths {
            let mut prev = 0;
            for _ in 0..inner {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, 1));
        }
        Graph::new(next, edges).unwrap()
    }

    /// Wheel with hub 0 and rim `1..=rim`.
    pub fn wheel(rim: usize) -> Graph {
        let mut edges: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
        edges.extend((1..=rim).map(|i| (i, i % rim + 1)));
        Graph::new(rim + 1, edges).unwrap()
    }

    /// Prism over a `k`-cycle: nodes `0..k` and `k..2k`.
    pub fn prism(k: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..k {
            edges.push((i, (i + 1) % k));
            edges.push((k + i, k + (i + 1) % k));
            edges.push((i, k + i));
        }
        Graph::new(2 * k, edges).unwrap()
    }

    /// Icosahedron: apex 0, upper ring `1..=5`, lower ring `6..=10`, apex 11.
    pub fn icosahedron() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            let (up, up_next) = (1 + i, 1 + (i + 1) % 5);
            let (low, low_next) = (6 + i, 6 + (i + 1) % 5);
            edges.extend([(0, up), (up, up_next), (low, low_next), (low, 11), (up, low), (up, low_next)]);
        }
        Graph::new(12, edges).unwrap()
    }

    pub fn octahedron() -> Graph {
        let mut edges = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                if b != a + 3 {
                    edges.push((a, b));
                }
            }
        }
        Graph::new(6, edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::new(2, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::NodeOutOfRange { id: 2, n: 2 })
        );
    }

    #[test]
    fn induced_connectivity_examples() {
        let c4 = cycle(4);
        assert!(connected_induced(&c4, &[0, 1]).unwrap());
        assert!(!connected_induced(&c4, &[0, 2]).unwrap());
        assert!(connected_induced(&c4, &[]).unwrap());
        assert!(connected_induced(&c4, &[3]).unwrap());
        assert!(connected_induced(&c4, &[7]).is_err());
        let k4 = complete(4);
        for mask in 0u32..16 {
            let s: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
            assert!(connected_induced(&k4, &s).unwrap());
        }
    }

    #[test]
    fn k_connectivity_examples() {
        assert!(is_k_connected(&complete(4), 3).unwrap());
        assert!(is_k_connected(&cycle(5), 2).unwrap());
        assert!(!is_k_connected(&cycle(5), 3).unwrap());
        assert!(!is_k_connected(&path(3), 2).unwrap());
        assert!(is_k_connected(&path(3), 1).unwrap());
        assert!(is_k_connected(&complete(4), 0).is_err());
        assert!(is_k_connected(&complete(4), 4).is_err());
        assert_eq!(connectivity_level(&octahedron()), 3);
        assert_eq!(connectivity_level(&theta(3, 2)), 2);
    }

    #[test]
    fn separation_pair_examples() {
        let theta = theta(3, 1);
        let pairs = find_separation_pairs(&theta).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!((pairs[0].u, pairs[0].v), (0, 1));
        assert_eq!(pairs[0].components.len(), 3);

        assert!(find_separation_pairs(&complete(4)).unwrap().is_empty());

        // triangles {0,1,2} and {0,1,3} sharing edge {0,1}
        let diamond = Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let pairs = find_separation_pairs(&diamond).unwrap();
        let shared = pairs.iter().find(|p| (p.u, p.v) == (0, 1)).unwrap();
        assert_eq!(shared.components, vec![vec![2], vec![3]]);

        assert!(find_separation_pairs(&path(4)).is_err());
    }

    #[test]
    fn octahedron_is_four_regular() {
        let g = octahedron();
        assert_eq!(g.m(), 12);
        assert!((0..6).all(|v| g.degree(v) == 4));
        assert_eq!(g.first_triangle(), Some((0, 1, 2)));
    }
}
