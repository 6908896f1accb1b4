use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{components_of_mask, Graph};

use super::cycle::nonseparating_induced_cycle;

/// Ears `Q_0, ..., Q_r`: `Q_0` is a cycle (closing edge implied), every later
/// ear is a path `[a, q_1, ..., q_k, b]` whose interior is new. Ears without
/// interior vertices are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarDecomposition {
    pub ears: Vec<Vec<usize>>,
    pub through: (usize, usize),
    pub avoided: usize,
}

impl EarDecomposition {
    /// New vertices contributed by ear `i`.
    pub fn interior(&self, i: usize) -> &[usize] {
        let e = &self.ears[i];
        if i == 0 {
            e
        } else {
            &e[1..e.len() - 1]
        }
    }

    /// Index of the ear whose interior contains `v`.
    pub fn ear_of(&self, v: usize) -> Option<usize> {
        (0..self.ears.len()).find(|&i| self.interior(i).contains(&v))
    }
}

/// Checks all structural conditions of a nonseparating ear decomposition.
pub fn is_nonseparating_ear_decomposition(g: &Graph, d: &EarDecomposition) -> bool {
    let n = g.n();
    let (t, r) = d.through;
    let u = d.avoided;
    let Some(q0) = d.ears.first() else {
        return false;
    };
    let len = q0.len();
    if len < 3 || q0.contains(&u) {
        return false;
    }
    if !(0..len).all(|i| g.has_edge(q0[i], q0[(i + 1) % len])) {
        return false;
    }
    if !(0..len).any(|i| {
        let (a, b) = (q0[i], q0[(i + 1) % len]);
        (a == t && b == r) || (a == r && b == t)
    }) {
        return false;
    }
    let mut inside = vec![false; n];
    let last = d.ears.len() - 1;
    for (i, ear) in d.ears.iter().enumerate() {
        let interior = d.interior(i);
        if interior.is_empty() || interior.iter().any(|&v| v >= n || inside[v]) {
            return false;
        }
        if i > 0 {
            let (a, b) = (ear[0], ear[ear.len() - 1]);
            if a == b || a >= n || b >= n || !inside[a] || !inside[b] {
                return false;
            }
            if !ear.windows(2).all(|w| g.has_edge(w[0], w[1])) {
                return false;
            }
        }
        let mut seen = BTreeSet::new();
        if !interior.iter().all(|&v| seen.insert(v)) {
            return false;
        }
        for &v in interior {
            inside[v] = true;
        }
        if i < last {
            if interior.contains(&u) {
                return false;
            }
            let rest: Vec<bool> = inside.iter().map(|&b| !b).collect();
            if components_of_mask(g, &rest).len() != 1 {
                return false;
            }
            if !interior.iter().all(|&v| g.neighbors(v).iter().any(|&w| !inside[w])) {
                return false;
            }
        } else if interior != [u] {
            return false;
        }
    }
    inside.iter().all(|&b| b)
}

/// Nonseparating ear decomposition of a 3-connected graph through the edge
/// `{t, r}`, with `u` as the only interior vertex of the last ear.
///
/// Greedy: the shortest admissible ear is added first, lexicographically
/// smallest among equals, with backtracking when a choice dead-ends.
pub fn nonseparating_ear_decomposition(g: &Graph, through: (usize, usize), u: usize) -> Result<EarDecomposition> {
    let q0 = nonseparating_induced_cycle(g, through, u)?;
    let n = g.n();
    let mut inside = vec![false; n];
    for &v in &q0 {
        inside[v] = true;
    }
    let mut ears = vec![q0];
    let mut budget = 200_000usize;
    if !grow(g, u, &mut inside, &mut ears, &mut budget) {
        return Err(Error::internal("ear search exhausted"));
    }
    let d = EarDecomposition { ears, through, avoided: u };
    if !is_nonseparating_ear_decomposition(g, &d) {
        return Err(Error::internal("ear decomposition failed validation"));
    }
    Ok(d)
}

fn grow(g: &Graph, u: usize, inside: &mut Vec<bool>, ears: &mut Vec<Vec<usize>>, budget: &mut usize) -> bool {
    let n = g.n();
    let remaining: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
    if remaining == [u] {
        let nb: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| inside[w]).collect();
        if nb.len() < 2 {
            return false;
        }
        ears.push(vec![nb[0], u, nb[1]]);
        return true;
    }
    for len in 1..remaining.len() {
        let mut cands = Vec::new();
        let mut seen_interiors = BTreeSet::new();
        let mut path = Vec::new();
        for a in 0..n {
            if inside[a] {
                path.push(a);
                paths_of(g, u, inside, len, &mut path, &mut cands);
                path.pop();
            }
        }
        cands.sort();
        for ear in cands {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            let interior = &ear[1..ear.len() - 1];
            let mut key = interior.to_vec();
            key.sort_unstable();
            if !seen_interiors.insert(key) || !admissible(g, inside, interior) {
                continue;
            }
            for &v in interior {
                inside[v] = true;
            }
            ears.push(ear.clone());
            if grow(g, u, inside, ears, budget) {
                return true;
            }
            ears.pop();
            for &v in interior {
                inside[v] = false;
            }
        }
    }
    false
}

// Paths a, q_1..q_len, b with interior outside the prefix and avoiding u.
fn paths_of(g: &Graph, u: usize, inside: &[bool], len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let last = *path.last().unwrap();
    let interior_len = path.len() - 1;
    if interior_len == len {
        for &b in g.neighbors(last) {
            if inside[b] && b != path[0] {
                let mut ear = path.clone();
                ear.push(b);
                out.push(ear);
            }
        }
        return;
    }
    for &x in g.neighbors(last) {
        if inside[x] || x == u || path.contains(&x) {
            continue;
        }
        path.push(x);
        paths_of(g, u, inside, len, path, out);
        path.pop();
    }
}

// The remainder stays connected and every new vertex keeps an outside neighbor.
fn admissible(g: &Graph, inside: &[bool], interior: &[usize]) -> bool {
    let mut after = inside.to_vec();
    for &v in interior {
        after[v] = true;
    }
    let rest: Vec<bool> = after.iter().map(|&b| !b).collect();
    components_of_mask(g, &rest).len() == 1
        && interior.iter().all(|&v| g.neighbors(v).iter().any(|&w| !after[w]))
}
