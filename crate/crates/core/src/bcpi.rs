//! Single-objective balanced connected partitions: two parts through an
//! st-numbering scan, three parts through a nonseparating ear decomposition.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{is_k_connected, Graph};
use crate::scalar::Scalar;
use crate::structure::{nonseparating_ear_decomposition, st_numbering, StNumbering};
use crate::weights::{Partition, WeightAssignment};

/// Two-part result together with the numbering whose prefix was taken.
#[derive(Debug, Clone)]
pub struct Bcpi2<S> {
    pub partition: Partition<S>,
    pub numbering: StNumbering,
    /// Length of the prefix that became `V1`.
    pub cut: usize,
}

/// Split of a weighted st-sequence `s_1..s_L` into a prefix and a suffix
/// that each carry at most half of the boundary node's weight.
fn half_bound<S: Scalar>(p: &WeightAssignment<S>, v: usize) -> S {
    p.get(v).abs() * S::half()
}

/// `u` in the first part, `v` in the second, both connected, and
/// `|p(V1)| = |p(V2)| <= max |p| / 2`.
pub fn bcpi_2<S: Scalar>(g: &Graph, p: &WeightAssignment<S>, u: usize, v: usize) -> Result<Bcpi2<S>> {
    g.check_node(u)?;
    g.check_node(v)?;
    if p.len() != g.n() {
        return Err(Error::pre("weights must be given for every node"));
    }
    if u == v {
        return Err(Error::pre("u and v must differ"));
    }
    if !is_k_connected(g, 2)? {
        return Err(Error::pre("two-part balancing requires a 2-connected graph"));
    }
    if !p.total().is_zero() {
        return Err(Error::pre("weights must sum to zero"));
    }
    let sign = p.get(u).clone() * p.get(v).clone();
    if sign <= S::zero() {
        return Err(Error::pre("p(u) and p(v) must have the same strict sign"));
    }
    let q = if *p.get(u) > S::zero() { p.clone() } else { p.negated() };
    let st = st_numbering(g, u, v)?;
    let order = &st.order;
    let mut pre = S::zero();
    let mut cut = None;
    for i in 0..order.len() - 1 {
        pre = pre + q.get(order[i]).clone();
        let next = pre.clone() + q.get(order[i + 1]).clone();
        if pre > S::zero() && next <= S::zero() {
            cut = Some(if pre <= half_bound(&q, order[i + 1]) { i + 1 } else { i + 2 });
            break;
        }
    }
    let cut = cut.ok_or_else(|| Error::internal("prefix sums never change sign"))?;
    let partition = Partition::new(g.n(), p, vec![order[..cut].to_vec(), order[cut..].to_vec()])?;
    Ok(Bcpi2 { partition, numbering: st, cut })
}

/// Which branch of the three-part construction produced the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bcpi3Case {
    /// First ear already non-positive; one crossing, both ends within half.
    Ia1,
    /// First ear, one crossing, prefix extended by the crossing node.
    Ia2,
    /// First ear, one crossing, suffix extended by the crossing node.
    Ia3,
    /// First ear, two distinct crossings.
    Ib,
    /// Crossing inside the st-order, the complement is already balanced.
    IIa1,
    /// Crossing inside the st-order, the complement absorbs part of the next ear.
    IIa2,
    /// Crossing taken one node late, the complement absorbs part of the next ear.
    IIa3,
    /// Crossings fall inside the next ear.
    IIb(InnerCase),
}

/// Sub-case of the sequence split reused inside [`Bcpi3Case::IIb`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InnerCase {
    A1,
    A2,
    A3,
    B,
}

impl fmt::Display for Bcpi3Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bcpi3Case::IIb(inner) => write!(f, "IIb-{inner:?}"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl Bcpi3Case {
    /// All labels the construction can report at the top level.
    pub const LABELS: [&'static str; 8] = ["Ia1", "Ia2", "Ia3", "Ib", "IIa1", "IIa2", "IIa3", "IIb"];

    pub fn label(&self) -> &'static str {
        match self {
            Bcpi3Case::Ia1 => "Ia1",
            Bcpi3Case::Ia2 => "Ia2",
            Bcpi3Case::Ia3 => "Ia3",
            Bcpi3Case::Ib => "Ib",
            Bcpi3Case::IIa1 => "IIa1",
            Bcpi3Case::IIa2 => "IIa2",
            Bcpi3Case::IIa3 => "IIa3",
            Bcpi3Case::IIb(_) => "IIb",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Bcpi3<S> {
    pub partition: Partition<S>,
    pub case: Bcpi3Case,
    /// The mirrored variant (roles of `u` and `v` swapped) was used.
    pub mirrored: bool,
}

/// Prefix/suffix split of `seq` (first and last weights positive, total
/// non-positive). Returns the prefix length, the suffix start, and the case.
fn split_sequence<S: Scalar>(seq: &[usize], p: &WeightAssignment<S>) -> Result<(usize, usize, InnerCase)> {
    let len = seq.len();
    let pre: Vec<S> = seq
        .iter()
        .scan(S::zero(), |acc, &v| {
            *acc = acc.clone() + p.get(v).clone();
            Some(acc.clone())
        })
        .collect();
    // suf[i] = p(seq[i..]), suf[len] = 0.
    let mut suf = vec![S::zero(); len + 1];
    for i in (0..len).rev() {
        suf[i] = suf[i + 1].clone() + p.get(seq[i]).clone();
    }
    // First crossing: pre[i] > 0 >= pre[i+1] (0-based lengths i+1 -> i+2).
    let i_star = (0..len - 1)
        .find(|&i| pre[i] > S::zero() && pre[i + 1] <= S::zero())
        .ok_or_else(|| Error::internal("prefix sums do not cross zero"))?;
    // Last crossing: suf[j+1] > 0 >= suf[j].
    let j_star = (0..len - 1)
        .rev()
        .find(|&j| suf[j + 1] > S::zero() && suf[j] <= S::zero())
        .ok_or_else(|| Error::internal("suffix sums do not cross zero"))?;
    if j_star <= i_star {
        return Err(Error::internal("crossings out of order"));
    }
    if j_star == i_star + 1 {
        // A single crossing node m.
        let m = seq[i_star + 1];
        let c = half_bound(p, m);
        let a = pre[i_star].clone();
        let b = suf[i_star + 2].clone();
        return Ok(if a <= c && b <= c {
            (i_star + 1, i_star + 2, InnerCase::A1)
        } else if b <= c {
            (i_star + 2, i_star + 2, InnerCase::A2)
        } else if a <= c {
            (i_star + 1, i_star + 1, InnerCase::A3)
        } else {
            return Err(Error::internal("both sides exceed half of the crossing weight"));
        });
    }
    let first = if pre[i_star] <= half_bound(p, seq[i_star + 1]) { i_star + 1 } else { i_star + 2 };
    let last = if suf[j_star + 1] <= half_bound(p, seq[j_star]) { j_star + 1 } else { j_star };
    Ok((first, last, InnerCase::B))
}

/// Three connected parts with `u`, `v`, `w` in parts 1, 2, 3 and
/// `|p(V1)|, |p(V2)| <= max|p|/2`, `|p(V3)| <= max|p|`.
pub fn bcpi_3<S: Scalar>(g: &Graph, p: &WeightAssignment<S>, u: usize, v: usize, w: usize) -> Result<Bcpi3<S>> {
    for x in [u, v, w] {
        g.check_node(x)?;
    }
    if p.len() != g.n() {
        return Err(Error::pre("weights must be given for every node"));
    }
    if u == v || v == w || u == w {
        return Err(Error::pre("u, v, w must be distinct"));
    }
    if !is_k_connected(g, 3)? {
        return Err(Error::pre("three-part balancing requires a 3-connected graph"));
    }
    if !p.total().is_zero() {
        return Err(Error::pre("weights must sum to zero"));
    }
    let zero = S::zero();
    let q = if [u, v, w].iter().all(|&x| *p.get(x) > zero) {
        p.clone()
    } else if [u, v, w].iter().all(|&x| *p.get(x) < zero) {
        p.negated()
    } else {
        return Err(Error::pre("p(u), p(v), p(w) must share one strict sign"));
    };
    let h = if g.has_edge(u, v) { g.clone() } else { g.with_edge(u, v) };
    let dec = nonseparating_ear_decomposition(&h, (u, v), w)?;
    let n = g.n();
    let r = dec.ears.len() - 1;

    let finish = |v1: Vec<usize>, v2: Vec<usize>, case: Bcpi3Case, mirrored: bool| -> Result<Bcpi3<S>> {
        let (v1, v2) = if mirrored { (v2, v1) } else { (v1, v2) };
        let mut taken = vec![false; n];
        for &x in v1.iter().chain(&v2) {
            taken[x] = true;
        }
        let v3 = (0..n).filter(|&x| !taken[x]).collect();
        let partition = Partition::new(n, p, vec![v1, v2, v3])?;
        Ok(Bcpi3 { partition, case, mirrored })
    };

    // Prefix sets V_i of the ear decomposition.
    let mut prefix_sum = Vec::with_capacity(r + 1);
    let mut acc = S::zero();
    for i in 0..=r {
        acc = acc + q.sum_of(dec.interior(i));
        prefix_sum.push(acc.clone());
    }

    if prefix_sum[0] <= zero {
        // Case (i): the cycle through {u, v}, walked from u to v.
        let cyc = &dec.ears[0];
        let seq = cycle_path(cyc, u, v);
        let (a, b, inner) = split_sequence(&seq, &q)?;
        let case = match inner {
            InnerCase::A1 => Bcpi3Case::Ia1,
            InnerCase::A2 => Bcpi3Case::Ia2,
            InnerCase::A3 => Bcpi3Case::Ia3,
            InnerCase::B => Bcpi3Case::Ib,
        };
        return finish(seq[..a].to_vec(), seq[b..].to_vec(), case, false);
    }

    // Case (ii): first j with p(V_j) > 0 >= p(V_{j+1}).
    let j = (0..r.saturating_sub(1))
        .find(|&j| prefix_sum[j] > zero && prefix_sum[j + 1] <= zero)
        .ok_or_else(|| Error::internal("ear prefix sums never turn non-positive"))?;
    let mut in_vj = vec![false; n];
    let mut vj = Vec::new();
    for i in 0..=j {
        for &x in dec.interior(i) {
            in_vj[x] = true;
            vj.push(x);
        }
    }
    vj.sort_unstable();
    let sub = h.induced(&vj);
    let local = |x: usize| vj.binary_search(&x).unwrap();
    let st = st_numbering(&sub, local(u), local(v))?;
    let order: Vec<usize> = st.order.iter().map(|&i| vj[i]).collect();
    let ear = &dec.ears[j + 1];
    let (ea, eb) = (ear[0], ear[ear.len() - 1]);
    let pos = |x: usize| order.iter().position(|&y| y == x).unwrap();
    let mut qs: Vec<usize> = ear[1..ear.len() - 1].to_vec();
    let (mut x, mut y) = (pos(ea), pos(eb));
    if x > y {
        qs.reverse();
        std::mem::swap(&mut x, &mut y);
    }

    for mirrored in [false, true] {
        let (ord, qq, yy) = if mirrored {
            let ord: Vec<usize> = order.iter().rev().copied().collect();
            let qq: Vec<usize> = qs.iter().rev().copied().collect();
            (ord, qq, order.len() - 1 - x)
        } else {
            (order.clone(), qs.clone(), y)
        };
        if let Some(found) = case_iia(&ord, &qq, yy, &q, prefix_sum[j].clone())? {
            let (v1, v2, case) = found;
            return finish(v1, v2, case, mirrored);
        }
    }

    // Case (ii)(b): [v_1..v_{y-1}, q_1..q_t, v_y..v_s].
    let mut seq: Vec<usize> = order[..y].to_vec();
    seq.extend_from_slice(&qs);
    seq.extend_from_slice(&order[y..]);
    let (a, b, inner) = split_sequence(&seq, &q)?;
    finish(seq[..a].to_vec(), seq[b..].to_vec(), Bcpi3Case::IIb(inner), false)
}

/// The cycle `cyc` (containing the edge `{u, v}`) as a path from `u` to `v`
/// that avoids that edge.
fn cycle_path(cyc: &[usize], u: usize, v: usize) -> Vec<usize> {
    let len = cyc.len();
    let iu = cyc.iter().position(|&x| x == u).unwrap();
    let forward: Vec<usize> = (0..len).map(|k| cyc[(iu + k) % len]).collect();
    if forward[len - 1] == v {
        forward
    } else {
        (0..len).map(|k| cyc[(iu + len - k) % len]).collect()
    }
}

/// Case (ii)(a) on st-order `ord` of `V_j` with the next ear `qs` attached
/// at 0-based positions `x < y` (`q_1` next to `ord[x]`). Returns `None`
/// when no prefix crossing ends before `ord[y - 1]`.
#[allow(clippy::type_complexity)]
fn case_iia<S: Scalar>(
    ord: &[usize],
    qs: &[usize],
    y: usize,
    p: &WeightAssignment<S>,
    total_vj: S,
) -> Result<Option<(Vec<usize>, Vec<usize>, Bcpi3Case)>> {
    let zero = S::zero();
    // 1-based i* with i* + 1 <= y - 1 (1-based y) means prefix lengths up to y - 1.
    let mut pre = S::zero();
    let mut found = None;
    for i in 0..ord.len() - 1 {
        pre = pre + p.get(ord[i]).clone();
        let next = pre.clone() + p.get(ord[i + 1]).clone();
        // Prefix of length i + 2 must stay within ord[..y].
        if i + 2 > y {
            break;
        }
        if pre > zero && next <= zero {
            found = Some((i, pre.clone(), next));
            break;
        }
    }
    let Some((i, pre_i, _)) = found else {
        return Ok(None);
    };
    let c = half_bound(p, ord[i + 1]);
    let late = pre_i > c;
    let cut = if late { i + 2 } else { i + 1 };
    let v1 = ord[..cut].to_vec();
    let v2p = ord[cut..].to_vec();
    let p_v1 = p.sum_of(&v1);
    let p_v2p = total_vj - p_v1;
    if !late && p_v2p <= zero {
        return Ok(Some((v1, v2p, Bcpi3Case::IIa1)));
    }
    let case = if late { Bcpi3Case::IIa3 } else { Bcpi3Case::IIa2 };
    // Grow V2' by ear nodes from q_t backwards until the sum turns non-positive.
    let mut acc = p_v2p;
    let mut taken = None;
    for k in (0..qs.len()).rev() {
        let before = acc.clone();
        acc = acc + p.get(qs[k]).clone();
        if before > zero && acc <= zero {
            let from = if before <= half_bound(p, qs[k]) { k + 1 } else { k };
            taken = Some(from);
            break;
        }
    }
    let from = match taken {
        Some(from) => from,
        // The whole ear keeps the sum positive; it is then at most -p(V1) <= c.
        None if late && acc <= c => 0,
        None => return Err(Error::internal("no ear index balances the second part")),
    };
    let mut v2 = v2p;
    v2.extend_from_slice(&qs[from..]);
    Ok(Some((v1, v2, case)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::connected_induced;
    use crate::Rational;
    use num_traits::{Signed, Zero};

    fn w(v: &[i64]) -> WeightAssignment<Rational> {
        WeightAssignment::from_ints(v)
    }

    #[test]
    fn four_cycle_tightness() {
        // v1..v4 = nodes 0..3 with p = (-4, -2, 4, 2); u = v3, v = v4.
        let c4 = cycle(4);
        let p = w(&[-4, -2, 4, 2]);
        let r = bcpi_2(&c4, &p, 2, 3).unwrap();
        let s = r.partition.sums();
        assert_eq!(s[0].abs(), Rational::from_integer(2.into()));
        assert_eq!(s[0].abs() + s[1].abs(), Rational::from_integer(4.into()));
        assert!(r.partition.all_connected(&c4));
    }

    #[test]
    fn pm1_cycles_are_exact() {
        let c4 = cycle(4);
        let r = bcpi_2(&c4, &w(&[1, -1, 1, -1]), 0, 2).unwrap();
        assert!(r.partition.sums().iter().all(|s| s.is_zero()));
        let c6 = cycle(6);
        let p = w(&[1, -1, 1, -1, 1, -1]);
        for (u, v) in [(0, 2), (0, 4), (1, 3), (1, 5)] {
            let r = bcpi_2(&c6, &p, u, v).unwrap();
            assert!(r.partition.sums().iter().all(|s| s.is_zero()));
            assert!(r.partition.all_connected(&c6));
            assert_eq!(r.partition.part_of(u), Some(0));
            assert_eq!(r.partition.part_of(v), Some(1));
        }
        assert!(bcpi_2(&c6, &p, 0, 1).is_err());
    }

    fn check3(g: &Graph, p: &WeightAssignment<Rational>, u: usize, v: usize, x: usize) -> Bcpi3Case {
        let r = bcpi_3(g, p, u, v, x).unwrap();
        let part = &r.partition;
        let half = p.max_abs() * Rational::half();
        assert!(part.sums()[0].abs() <= half && part.sums()[1].abs() <= half);
        assert!(part.sums()[2].abs() <= p.max_abs());
        for i in 0..3 {
            assert!(connected_induced(g, part.part(i)).unwrap() && !part.part(i).is_empty());
        }
        assert_eq!(part.part_of(u), Some(0));
        assert_eq!(part.part_of(v), Some(1));
        assert_eq!(part.part_of(x), Some(2));
        r.case
    }

    #[test]
    fn three_parts_examples() {
        let k4 = complete(4);
        check3(&k4, &w(&[1, 1, 1, -3]), 0, 1, 2);
        let oct = octahedron();
        let p = w(&[1, 1, 1, -1, -1, -1]);
        let r = bcpi_3(&oct, &p, 0, 1, 2).unwrap();
        assert!(r.partition.sums().iter().all(|s| s.is_zero()));
        check3(&oct, &p, 0, 1, 2);
        // Wheel with 7 rim nodes: hub -1, rim alternating starting with +1 (four +1, three -1).
        let wh = wheel(7);
        let p = w(&[-1, 1, -1, 1, -1, 1, -1, 1]);
        let r = bcpi_3(&wh, &p, 1, 3, 5).unwrap();
        assert!(r.partition.sums().iter().all(|s| s.is_zero()));
        check3(&wh, &p, 1, 3, 5);
    }

    #[test]
    fn sign_condition() {
        let k4 = complete(4);
        assert!(bcpi_3(&k4, &w(&[1, 1, -1, -1]), 0, 1, 2).is_err());
    }

    #[test]
    fn random_weights_reach_every_case() {
        use rand::{Rng, SeedableRng};
        use std::collections::BTreeSet;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let graphs = [complete(4), complete(5), octahedron(), prism(3), prism(4), prism(5), wheel(5), wheel(7)];
        let mut seen = BTreeSet::new();
        for round in 0..400 {
            let g = &graphs[round % graphs.len()];
            let n = g.n();
            let mut nodes: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                nodes.swap(i, rng.gen_range(0..=i));
            }
            let (u, v, x) = (nodes[0], nodes[1], nodes[2]);
            let mut vals: Vec<i64> = (0..n).map(|_| rng.gen_range(-6..=6)).collect();
            for t in [u, v, x] {
                vals[t] = rng.gen_range(1..=6);
            }
            let total: i64 = vals.iter().sum();
            // Push the excess onto one free node so the total is zero.
            vals[nodes[3]] -= total;
            let c = check3(g, &w(&vals), u, v, x);
            seen.insert(c.label());
        }
        let missing: Vec<_> = Bcpi3Case::LABELS.iter().filter(|l| !seen.contains(*l)).collect();
        assert!(missing.is_empty(), "missing cases {missing:?}, seen {seen:?}");
    }
}
