use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{components_without, is_k_connected, Graph};

/// Vertex order `s = v_1, ..., v_n = t` where every interior vertex has an
/// earlier and a later neighbor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StNumbering {
    pub order: Vec<usize>,
    pub s: usize,
    pub t: usize,
}

impl StNumbering {
    /// `position[v]` is the index of `v` in `order`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Checks the st-numbering conditions for `order` against `g`.
pub fn is_st_numbering(g: &Graph, order: &[usize], s: usize, t: usize) -> bool {
    let n = g.n();
    if order.len() != n || n < 2 || order[0] != s || order[n - 1] != t {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    order[1..n - 1].iter().all(|&v| {
        let nb = g.neighbors(v);
        nb.iter().any(|&u| pos[u] < pos[v]) && nb.iter().any(|&u| pos[u] > pos[v])
    })
}

/// Builds an st-numbering from an open ear decomposition rooted at `{s, t}`.
/// The edge `{s, t}` is added virtually when absent; `g` plus that edge must
/// be 2-connected.
pub fn st_numbering(g: &Graph, s: usize, t: usize) -> Result<StNumbering> {
    g.check_node(s)?;
    g.check_node(t)?;
    if s == t {
        return Err(Error::pre("st-numbering needs s != t"));
    }
    let n = g.n();
    if n == 2 {
        return Ok(StNumbering { order: vec![s, t], s, t });
    }
    let h = if g.has_edge(s, t) { g.clone() } else { g.with_edge(s, t) };
    if !is_k_connected(&h, 2)? {
        return Err(Error::pre("st-numbering requires a 2-connected graph"));
    }

    // First ear: an s-t path that does not use the edge {s, t}.
    let first = bfs_path(&h, &[s], |v| v == t, |a, b| !((a == s && b == t) || (a == t && b == s)), &vec![false; n])
        .ok_or_else(|| Error::internal("no s-t path besides the edge"))?;
    let mut order = first;
    let mut inside = vec![false; n];
    for &v in &order {
        inside[v] = true;
    }

    while order.len() < n {
        let (a, x) = (0..n)
            .filter(|&a| inside[a])
            .find_map(|a| h.neighbors(a).iter().find(|&&x| !inside[x]).map(|&x| (a, x)))
            .ok_or_else(|| Error::internal("graph is not connected"))?;
        // Walk outside the current set from x until reaching a set vertex other than a.
        let mut blocked = inside.clone();
        blocked[a] = true;
        let tail = bfs_path(
            &h,
            &[x],
            |v| inside[v] && v != a,
            |_, _| true,
            &blocked,
        )
        .ok_or_else(|| Error::internal("no ear found in a 2-connected graph"))?;
        let b = *tail.last().unwrap();
        let interior = &tail[..tail.len() - 1];
        let pa = order.iter().position(|&v| v == a).unwrap();
        let pb = order.iter().position(|&v| v == b).unwrap();
        let (at, seq): (usize, Vec<usize>) = if pa < pb {
            (pa + 1, interior.to_vec())
        } else {
            (pb + 1, interior.iter().rev().copied().collect())
        };
        for &v in interior {
            inside[v] = true;
        }
        order.splice(at..at, seq);
    }
    Ok(StNumbering { order, s, t })
}

/// BFS from `starts`; stops at the first vertex satisfying `done`. Vertices in
/// `blocked` can be entered only if they are `done`. Returns the path from a
/// start vertex to the target, with ties broken by smallest ids.
pub(crate) fn bfs_path(
    g: &Graph,
    starts: &[usize],
    done: impl Fn(usize) -> bool,
    edge_ok: impl Fn(usize, usize) -> bool,
    blocked: &[bool],
) -> Option<Vec<usize>> {
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &s in starts {
        seen[s] = true;
        queue.push_back(s);
    }
    while let Some(a) = queue.pop_front() {
        for &b in g.neighbors(a) {
            if seen[b] || !edge_ok(a, b) {
                continue;
            }
            if done(b) {
                let mut path = vec![b, a];
                let mut cur = a;
                while prev[cur] != usize::MAX {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            if blocked[b] {
                continue;
            }
            seen[b] = true;
            prev[b] = a;
            queue.push_back(b);
        }
    }
    None
}

/// Interior ordering of a separation component between `u` and `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoPath {
    pub u: usize,
    pub v: usize,
    pub interior: Vec<usize>,
}

impl PseudoPath {
    pub fn len(&self) -> usize {
        self.interior.len()
    }

    pub fn is_empty(&self) -> bool {
        self.interior.is_empty()
    }

    /// `u, interior..., v`.
    pub fn full(&self) -> Vec<usize> {
        let mut seq = Vec::with_capacity(self.interior.len() + 2);
        seq.push(self.u);
        seq.extend_from_slice(&self.interior);
        seq.push(self.v);
        seq
    }

    pub fn reversed(&self) -> PseudoPath {
        PseudoPath {
            u: self.v,
            v: self.u,
            interior: self.interior.iter().rev().copied().collect(),
        }
    }
}

/// Every interior vertex of `u, interior..., v` has a neighbor before and after it.
pub fn is_pseudo_path(g: &Graph, path: &PseudoPath) -> bool {
    let seq = path.full();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in seq.iter().enumerate() {
        if pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    seq[1..seq.len() - 1].iter().all(|&v| {
        let nb = g.neighbors(v);
        nb.iter().any(|&w| pos[w] < pos[v]) && nb.iter().any(|&w| pos[w] != usize::MAX && pos[w] > pos[v])
    })
}

/// Orders a component of `G - {u, v}` as a pseudo-path from `u` to `v`.
pub fn pseudo_path(g: &Graph, component: &[usize], u: usize, v: usize) -> Result<PseudoPath> {
    g.check_node(u)?;
    g.check_node(v)?;
    let mut comp = component.to_vec();
    comp.sort_unstable();
    if !components_without(g, &[u, v]).contains(&comp) {
        return Err(Error::pre("not a connected component of G minus the pair"));
    }
    let touches = |x: usize| comp.iter().any(|&c| g.has_edge(c, x));
    if !touches(u) || !touches(v) {
        return Err(Error::pre("separation component must attach to both nodes of the pair"));
    }
    let mut nodes = vec![u, v];
    nodes.extend_from_slice(&comp);
    let h = g.induced(&nodes);
    let st = st_numbering(&h, 0, 1)
        .map_err(|_| Error::pre("component plus the pair is not 2-connected"))?;
    let interior = st.order[1..st.order.len() - 1].iter().map(|&i| nodes[i]).collect();
    Ok(PseudoPath { u, v, interior })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn small_st_numberings() {
        let tri = complete(3);
        assert_eq!(st_numbering(&tri, 0, 2).unwrap().order, vec![0, 1, 2]);
        let c4 = cycle(4);
        let st = st_numbering(&c4, 0, 2).unwrap();
        assert!(st.order == vec![0, 1, 3, 2] || st.order == vec![0, 3, 1, 2]);
        let th = theta(3, 3);
        let st = st_numbering(&th, 0, 1).unwrap();
        assert!(is_st_numbering(&th, &st.order, 0, 1));
    }

    #[test]
    fn virtual_edge_and_rejection() {
        // A path is 2-connected only once its endpoints are joined.
        let p = path(5);
        let st = st_numbering(&p, 0, 4).unwrap();
        assert_eq!(st.order, vec![0, 1, 2, 3, 4]);
        assert!(st_numbering(&p, 0, 2).is_err());
    }

    #[test]
    fn every_pair_of_prism_and_wheel() {
        for g in [prism(4), wheel(5), octahedron()] {
            for s in 0..g.n() {
                for t in 0..g.n() {
                    if s != t {
                        let st = st_numbering(&g, s, t).unwrap();
                        assert!(is_st_numbering(&g, &st.order, s, t));
                    }
                }
            }
        }
    }

    #[test]
    fn pseudo_paths() {
        let th = theta(3, 1);
        let pp = pseudo_path(&th, &[3], 0, 1).unwrap();
        assert_eq!(pp.interior, vec![3]);

        // u=0, v=1, hanging path 2-3-4 plus a parallel edge 0-1... via another path 5.
        let g = Graph::new(6, [(0, 2), (2, 3), (3, 4), (4, 1), (0, 5), (5, 1)]).unwrap();
        let pp = pseudo_path(&g, &[2, 3, 4], 0, 1).unwrap();
        assert_eq!(pp.interior, vec![2, 3, 4]);
        assert!(is_pseudo_path(&g, &pp));

        // A 4-cycle fan hung between u and v.
        let g = Graph::new(
            7,
            [(0, 2), (0, 3), (2, 3), (3, 4), (4, 5), (5, 2), (5, 1), (4, 1), (0, 6), (6, 1)],
        )
        .unwrap();
        let pp = pseudo_path(&g, &[2, 3, 4, 5], 0, 1).unwrap();
        assert!(is_pseudo_path(&g, &pp));
        assert!(pseudo_path(&g, &[2, 3], 0, 1).is_err());
    }
}
