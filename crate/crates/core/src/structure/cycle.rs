use crate::error::{Error, Result};
use crate::graph::{components_of_mask, is_k_connected, Graph};

use super::st::bfs_path;

/// Checks that `cycle` is a chordless cycle through the edge `{t, r}` that
/// avoids `u` and whose removal leaves a connected, nonempty remainder.
pub fn is_nonseparating_induced_cycle(g: &Graph, cycle: &[usize], t: usize, r: usize, u: usize) -> bool {
    let n = g.n();
    let len = cycle.len();
    if len < 3 || len >= n {
        return false;
    }
    let mut on = vec![false; n];
    for &v in cycle {
        if v >= n || on[v] {
            return false;
        }
        on[v] = true;
    }
    if on[u] || !on[t] || !on[r] {
        return false;
    }
    let closes = (0..len).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % len]));
    let through = (0..len).any(|i| {
        let (a, b) = (cycle[i], cycle[(i + 1) % len]);
        (a == t && b == r) || (a == r && b == t)
    });
    let inner_edges: usize = cycle
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| on[w]).count())
        .sum::<usize>()
        / 2;
    let rest: Vec<bool> = on.iter().map(|&b| !b).collect();
    closes && through && inner_edges == len && components_of_mask(g, &rest).len() == 1
}

/// A nonseparating induced cycle through `{t, r}` avoiding `u`, returned as
/// `[t, r, ...]` in cycle order.
///
/// Starts from a shortest `r`-`t` path in `G - u`, then reroutes the cycle
/// through other components of `G - C` while the component holding `u`
/// grows. Falls back to enumerating induced paths if the reroutes stall.
pub fn nonseparating_induced_cycle(g: &Graph, through: (usize, usize), u: usize) -> Result<Vec<usize>> {
    let (t, r) = through;
    for v in [t, r, u] {
        g.check_node(v)?;
    }
    if !g.has_edge(t, r) {
        return Err(Error::pre("the through pair must be an edge"));
    }
    if u == t || u == r {
        return Err(Error::pre("avoided node must not be an endpoint of the through edge"));
    }
    if !is_k_connected(g, 3)? {
        return Err(Error::pre("nonseparating induced cycle requires a 3-connected graph"));
    }
    let n = g.n();

    let mut blocked = vec![false; n];
    blocked[u] = true;
    let path = shortest_induced(g, r, t, &blocked, &vec![true; n])
        .ok_or_else(|| Error::internal("no r-t path avoiding u"))?;
    let mut path = path;
    loop {
        let (h_size, others) = split_components(g, &path, u);
        if others.is_empty() {
            let cycle = to_cycle(&path);
            if is_nonseparating_induced_cycle(g, &cycle, t, r, u) {
                return Ok(cycle);
            }
            break;
        }
        match best_reroute(g, &path, &others, u, h_size) {
            Some(next) => path = next,
            None => break,
        }
    }
    enumerate_cycle(g, t, r, u, 2_000_000)
        .ok_or_else(|| Error::internal("no nonseparating induced cycle found"))
}

// `path` runs r..t; the cycle closes with the edge t-r.
fn to_cycle(path: &[usize]) -> Vec<usize> {
    let mut c = vec![*path.last().unwrap()];
    c.extend_from_slice(&path[..path.len() - 1]);
    c
}

/// Shortest path `a -> b` through vertices allowed by `alive` and not blocked,
/// never using the edge `{a, b}`. Shortest paths are induced apart from that edge.
fn shortest_induced(g: &Graph, a: usize, b: usize, blocked: &[bool], alive: &[bool]) -> Option<Vec<usize>> {
    let mut bl: Vec<bool> = blocked.iter().zip(alive.iter()).map(|(&x, &y)| x || !y).collect();
    bl[b] = false;
    bfs_path(g, &[a], |v| v == b, |x, y| !((x == a && y == b) || (x == b && y == a)), &bl)
}

// Size of the component of G - C containing u, and the other components.
fn split_components(g: &Graph, path: &[usize], u: usize) -> (usize, Vec<Vec<usize>>) {
    let mut alive = vec![true; g.n()];
    for &v in path {
        alive[v] = false;
    }
    let comps = components_of_mask(g, &alive);
    let mut h = 0;
    let mut others = Vec::new();
    for c in comps {
        if c.contains(&u) {
            h = c.len();
        } else {
            others.push(c);
        }
    }
    (h, others)
}

fn best_reroute(g: &Graph, path: &[usize], others: &[Vec<usize>], u: usize, h_size: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let len = path.len();
    let r = path[0];
    let t = path[len - 1];
    let mut best: Option<(usize, Vec<usize>)> = None;
    for k in others {
        let mut in_k = vec![false; n];
        for &v in k {
            in_k[v] = true;
        }
        let attach: Vec<usize> = (0..len)
            .filter(|&i| g.neighbors(path[i]).iter().any(|&w| in_k[w]))
            .collect();
        for (x, &i) in attach.iter().enumerate() {
            for &j in &attach[x + 1..] {
                // Replace path[i+1..j] with a route through K.
                let (a, b) = (path[i], path[j]);
                let mut bl = vec![true; n];
                for &v in k {
                    bl[v] = false;
                }
                let Some(mid) = bfs_path(g, &[a], |v| v == b, |x, y| in_k[y] || (x != a && y == b), &bl) else {
                    continue;
                };
                let mut cand: Vec<usize> = path[..i].to_vec();
                cand.extend_from_slice(&mid);
                cand.extend_from_slice(&path[j + 1..]);
                // Remove chords while keeping the ends r and t.
                let mut alive = vec![false; n];
                for &v in &cand {
                    alive[v] = true;
                }
                let mut blocked = vec![false; n];
                blocked[u] = true;
                let Some(tight) = shortest_induced(g, r, t, &blocked, &alive) else {
                    continue;
                };
                let (h, _) = split_components(g, &tight, u);
                if h > h_size && best.as_ref().map_or(true, |(bh, _)| h > *bh) {
                    best = Some((h, tight));
                }
            }
        }
    }
    best.map(|(_, p)| p)
}

/// Exhaustive search over induced `r`-`t` paths avoiding `u`, stopping at the
/// first that closes into a nonseparating cycle. `budget` bounds the number of
/// extension steps.
pub(crate) fn enumerate_cycle(g: &Graph, t: usize, r: usize, u: usize, budget: usize) -> Option<Vec<usize>> {
    let mut path = vec![r];
    let mut on = vec![false; g.n()];
    on[r] = true;
    let mut steps = 0;
    let mut found = None;
    extend(g, t, r, u, &mut path, &mut on, &mut steps, budget, &mut |cyc| {
        found = Some(cyc.to_vec());
        true
    });
    found
}

/// Every induced cycle through `{t, r}` avoiding `u` (test oracle, small graphs).
pub fn all_induced_cycles(g: &Graph, t: usize, r: usize, u: usize) -> Vec<Vec<usize>> {
    let mut path = vec![r];
    let mut on = vec![false; g.n()];
    on[r] = true;
    let mut out = Vec::new();
    extend_all(g, t, r, u, &mut path, &mut on, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    t: usize,
    r: usize,
    u: usize,
    path: &mut Vec<usize>,
    on: &mut Vec<bool>,
    steps: &mut usize,
    budget: usize,
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let last = *path.last().unwrap();
    for &x in g.neighbors(last) {
        *steps += 1;
        if *steps > budget {
            return true;
        }
        if on[x] || x == u || (last == r && x == t) {
            continue;
        }
        // x may touch only `last` among the path, except t closing back to r.
        let clash = g.neighbors(x).iter().any(|&w| on[w] && w != last && !(x == t && w == r));
        if clash {
            continue;
        }
        path.push(x);
        on[x] = true;
        if x == t {
            let cyc = to_cycle(path);
            if is_nonseparating_induced_cycle(g, &cyc, t, r, u) && accept(&cyc) {
                return true;
            }
        } else if extend(g, t, r, u, path, on, steps, budget, accept) {
            return true;
        }
        on[x] = false;
        path.pop();
    }
    false
}

fn extend_all(
    g: &Graph,
    t: usize,
    r: usize,
    u: usize,
    path: &mut Vec<usize>,
    on: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    for &x in g.neighbors(last) {
        if on[x] || x == u || (last == r && x == t) {
            continue;
        }
        if g.neighbors(x).iter().any(|&w| on[w] && w != last && !(x == t && w == r)) {
            continue;
        }
        path.push(x);
        on[x] = true;
        if x == t {
            out.push(to_cycle(path));
        } else {
            extend_all(g, t, r, u, path, on, out);
        }
        on[x] = false;
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn k4_examples() {
        let k4 = complete(4);
        assert_eq!(nonseparating_induced_cycle(&k4, (0, 1), 3).unwrap(), vec![0, 1, 2]);
        assert_eq!(nonseparating_induced_cycle(&k4, (0, 1), 2).unwrap(), vec![0, 1, 3]);
    }

    #[test]
    fn wheel_rim() {
        let w = wheel(5);
        let c = nonseparating_induced_cycle(&w, (1, 2), 0).unwrap();
        assert_eq!(c.len(), 5);
        assert!(!c.contains(&0));
    }

    #[test]
    fn agrees_with_enumeration_oracle() {
        for g in [prism(3), prism(4), prism(5), octahedron(), wheel(6), complete(5)] {
            for (t, r) in g.edges() {
                for u in 0..g.n() {
                    if u == t || u == r {
                        continue;
                    }
                    let c = nonseparating_induced_cycle(&g, (t, r), u).unwrap();
                    assert!(is_nonseparating_induced_cycle(&g, &c, t, r, u));
                    let valid: Vec<_> = all_induced_cycles(&g, t, r, u)
                        .into_iter()
                        .filter(|c| is_nonseparating_induced_cycle(&g, c, t, r, u))
                        .collect();
                    assert!(valid.contains(&c));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let c5 = cycle(5);
        assert!(nonseparating_induced_cycle(&c5, (0, 1), 3).is_err());
        assert!(nonseparating_induced_cycle(&complete(4), (0, 1), 1).is_err());
    }
}
