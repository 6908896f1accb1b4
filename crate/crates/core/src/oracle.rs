//! Brute-force ground truth for small graphs and instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::families::{prism, theta, wheel};
use crate::graph::{is_k_connected, Graph};
use crate::scalar::Scalar;
use crate::weights::{Partition, WeightAssignment};

/// Largest graph the enumeration accepts unless raised explicitly.
pub const DEFAULT_CAP: usize = 16;
/// Hard limit of the bitmask representation.
const MASK_BITS: usize = 63;

fn neighbor_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect()
}

fn mask_connected(adj: &[u64], set: u64) -> bool {
    if set == 0 {
        return false;
    }
    let mut seen = set & set.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        next &= set & !seen;
        seen |= next;
        frontier = next;
    }
    seen == set
}

fn mask_nodes(set: u64) -> Vec<usize> {
    (0..64).filter(|&i| set >> i & 1 == 1).collect()
}

/// Sides containing node 0 of every split into two nonempty connected parts,
/// each split exactly once.
pub struct ConnectedSplits {
    sides: std::vec::IntoIter<u64>,
}

impl Iterator for ConnectedSplits {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.sides.next().map(mask_nodes)
    }
}

/// Every connected 2-partition of `g`, as the side holding node 0, in
/// increasing bitmask order. Grows connected sets from node 0 by extension,
/// so sparse graphs well past the cap stay cheap once it is raised.
pub fn enumerate_connected_partitions(g: &Graph, cap: usize) -> Result<ConnectedSplits> {
    let n = g.n();
    if n > cap.min(MASK_BITS) {
        return Err(Error::CapExceeded { n, cap: cap.min(MASK_BITS) });
    }
    if n < 2 {
        return Err(Error::pre("need at least two nodes"));
    }
    let adj = neighbor_masks(g);
    let full = (1u64 << n) - 1;
    let mut sides = Vec::new();
    // Each frame: current set, extension candidates, banned nodes.
    let mut stack = vec![(1u64, adj[0], 0u64)];
    while let Some((set, mut ext, mut banned)) = stack.pop() {
        if set != full && mask_connected(&adj, full & !set) {
            sides.push(set);
        }
        while ext != 0 {
            let v = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let grown = set | (1 << v);
            let fresh = adj[v] & !grown & !banned & !ext;
            stack.push((grown, ext | fresh, banned));
            banned |= 1 << v;
        }
    }
    sides.sort_unstable();
    Ok(ConnectedSplits { sides: sides.into_iter() })
}

/// A non-dominated `(imbalance, ratio)` pair with a partition attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontierPoint<S> {
    pub imbalance: S,
    pub ratio: S,
    pub witness: Partition<S>,
}

/// Pareto-minimal `(imbalance, size ratio)` pairs over all connected
/// 2-partitions, sorted by increasing imbalance.
pub fn best_frontier<S: Scalar>(g: &Graph, p: &WeightAssignment<S>, centered: bool, cap: usize) -> Result<Vec<FrontierPoint<S>>> {
    let n = g.n();
    if p.len() != n {
        return Err(Error::pre("weights must be given for every node"));
    }
    // Best imbalance for each size of the side holding node 0.
    let mut best: Vec<Option<(S, Vec<usize>)>> = vec![None; n];
    for side in enumerate_connected_partitions(g, cap)? {
        let pt = Partition::from_side(n, p, &side)?;
        let imb = pt.imbalance(p, centered);
        let k = side.len();
        if best[k].as_ref().is_none_or(|(b, _)| imb < *b) {
            best[k] = Some((imb, side));
        }
    }
    let mut points: Vec<FrontierPoint<S>> = Vec::new();
    for (imb, side) in best.into_iter().flatten() {
        let witness = Partition::from_side(n, p, &side)?;
        points.push(FrontierPoint { imbalance: imb, ratio: witness.size_ratio(), witness });
    }
    points.sort_by(|a, b| a.imbalance.partial_cmp(&b.imbalance).unwrap().then(a.ratio.partial_cmp(&b.ratio).unwrap()));
    let mut frontier: Vec<FrontierPoint<S>> = Vec::new();
    for pt in points {
        if frontier.last().is_none_or(|last| pt.ratio < last.ratio) {
            frontier.push(pt);
        }
    }
    Ok(frontier)
}

/// True when neither point is at least as good in both coordinates and
/// strictly better in one.
pub fn is_antichain<S: Scalar>(front: &[FrontierPoint<S>]) -> bool {
    front.iter().enumerate().all(|(i, a)| {
        front.iter().enumerate().all(|(j, b)| {
            i == j || !(b.imbalance <= a.imbalance && b.ratio <= a.ratio && (b.imbalance < a.imbalance || b.ratio < a.ratio))
        })
    })
}

/// Both sides connected, imbalance at most `c_p` and size ratio at most `c_s`.
pub fn verify_partition<S: Scalar>(
    g: &Graph,
    p: &WeightAssignment<S>,
    part: &Partition<S>,
    c_p: &S,
    c_s: &S,
    centered: bool,
) -> Result<bool> {
    let n = g.n();
    if p.len() != n || part.len() != 2 {
        return Err(Error::pre("partition must have two parts over the weighted graph"));
    }
    let mut seen = vec![false; n];
    for part_nodes in part.parts() {
        for &v in part_nodes {
            g.check_node(v)?;
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::pre("partition parts overlap"));
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::pre("partition does not cover every node"));
    }
    if !part.sums_consistent(p) {
        return Err(Error::pre("partition sums disagree with the weights"));
    }
    Ok(part.all_connected(g) && part.imbalance(p, centered) <= *c_p && part.size_ratio() <= *c_s)
}

/// Terminals 0 (`+1`) and 1 (`-1`) joined by `2s+1` paths of `4t+2` interior
/// nodes. Walking from node 0, each path carries `2t+1` nodes of `+1` and
/// then `2t+1` of `-1`.
pub fn gen_fig1<S: Scalar>(s: usize, t: usize) -> (Graph, WeightAssignment<S>) {
    let inner = 4 * t + 2;
    let g = theta(2 * s + 1, inner);
    let mut vals = vec![S::one(), -S::one()];
    for _ in 0..2 * s + 1 {
        for k in 0..inner {
            vals.push(if k < inner / 2 { S::one() } else { -S::one() });
        }
    }
    (g, WeightAssignment::new(vals))
}

/// Random graph at connectivity level 2 or 3 with balanced `+1/-1` weights,
/// fixed by `seed`. Level 3 starts from a wheel or prism and adds chords;
/// level 2 grows a cycle by random ears.
pub fn gen_random<S: Scalar>(n: usize, connectivity: u8, seed: u64) -> Result<(Graph, WeightAssignment<S>)> {
    if n < 4 {
        return Err(Error::pre("need at least 4 nodes"));
    }
    if n % 2 == 1 {
        return Err(Error::pre("balanced +1/-1 weights need an even node count"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = match connectivity {
        3 => {
            let base = if n >= 6 && rng.gen_bool(0.5) { prism(n / 2) } else { wheel(n - 1) };
            base.edges()
        }
        2 => random_ears(n, &mut rng),
        _ => return Err(Error::pre("connectivity must be 2 or 3")),
    };
    let chords = rng.gen_range(0..=n / 2);
    for _ in 0..chords {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let e = (a.min(b), a.max(b));
        if a != b && !edges.contains(&e) {
            edges.push(e);
        }
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut rng);
    let g = Graph::new(n, edges.into_iter().map(|(a, b)| (label[a], label[b])))?;
    debug_assert!(is_k_connected(&g, connectivity as usize)?);
    let mut vals: Vec<S> = (0..n).map(|i| if i < n / 2 { S::one() } else { -S::one() }).collect();
    vals.shuffle(&mut rng);
    Ok((g, WeightAssignment::new(vals)))
}

fn random_ears(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let first = rng.gen_range(3..=n.min(n / 2 + 2));
    let mut edges: Vec<(usize, usize)> = (0..first).map(|i| (i.min((i + 1) % first), i.max((i + 1) % first))).collect();
    let mut next = first;
    while next < n {
        let len = rng.gen_range(1..=(n - next).min(4));
        let a = rng.gen_range(0..next);
        let mut b = rng.gen_range(0..next - 1);
        if b >= a {
            b += 1;
        }
        let mut prev = a;
        for _ in 0..len {
            edges.push((prev.min(next), prev.max(next)));
            prev = next;
            next += 1;
        }
        edges.push((prev.min(b), prev.max(b)));
    }
    edges
}
