use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::weights::{Partition, WeightAssignment};

use num_bigint::BigInt;

use super::convex::{big_points, integer_points, Coord, Point};
use super::tailored::big_to_scalar;

/// A direction vector; compared by angle, never by length.
#[derive(Debug, Clone, PartialEq)]
pub struct Direction<S> {
    pub dx: S,
    pub dy: S,
}

impl<S: Coord> Direction<S> {
    pub fn new(dx: S, dy: S) -> Self {
        Direction { dx, dy }
    }

    /// Representative in the half-turn `[0, pi)`.
    pub fn normalized(self) -> Self {
        if self.dy < S::zero() || (self.dy.is_zero() && self.dx < S::zero()) {
            -self
        } else {
            self
        }
    }

    pub fn cross(&self, other: &Self) -> S {
        self.dx.clone() * other.dy.clone() - self.dy.clone() * other.dx.clone()
    }

    /// Angular order of two normalized directions.
    pub fn angle_cmp(&self, other: &Self) -> Ordering {
        let c = self.cross(other);
        if c > S::zero() {
            Ordering::Less
        } else if c < S::zero() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    }

    pub fn project(&self, p: &Point<S>) -> S {
        self.dx.clone() * p.0.clone() + self.dy.clone() * p.1.clone()
    }

    fn plus(&self, other: &Self) -> Self {
        Direction::new(self.dx.clone() + other.dx.clone(), self.dy.clone() + other.dy.clone())
    }
}

impl<S: Coord> std::ops::Neg for Direction<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Direction::new(-self.dx, -self.dy)
    }
}

/// A direction perpendicular to the segment between some pair of points,
/// with every pair that generates it.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalDirection<S> {
    pub dir: Direction<S>,
    pub pairs: Vec<(usize, usize)>,
}

/// Directions (in the half-turn, sorted by angle) at which the projection
/// order of `points` can change. Parallel directions are merged.
pub fn critical_directions<S: Coord>(points: &[Point<S>]) -> Result<Vec<CriticalDirection<S>>> {
    let n = points.len();
    let mut all: Vec<(Direction<S>, (usize, usize))> = Vec::with_capacity(n * n / 2);
    for i in 0..n {
        for j in i + 1..n {
            let (ex, ey) = (
                points[j].0.clone() - points[i].0.clone(),
                points[j].1.clone() - points[i].1.clone(),
            );
            if ex.is_zero() && ey.is_zero() {
                return Err(Error::CoincidentPoints(i, j));
            }
            all.push((Direction::new(-ey, ex).normalized(), (i, j)));
        }
    }
    all.sort_by(|a, b| a.0.angle_cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut out: Vec<CriticalDirection<S>> = Vec::new();
    for (dir, pair) in all {
        match out.last_mut() {
            Some(last) if last.dir.angle_cmp(&dir) == Ordering::Equal => last.pairs.push(pair),
            _ => out.push(CriticalDirection { dir, pairs: vec![pair] }),
        }
    }
    Ok(out)
}

/// One direction strictly inside every gap of the full turn, in angular
/// order: `gamma_0` lies just before the first critical direction and
/// `gamma_{K+i} = -gamma_i`. Crossing from `gamma_i` to `gamma_{i+1}` passes
/// critical direction `i mod K`.
pub fn gap_directions<S: Coord>(crit: &[CriticalDirection<S>]) -> Vec<Direction<S>> {
    let k = crit.len();
    if k == 0 {
        return vec![Direction::new(S::one(), S::zero()), Direction::new(-S::one(), S::zero())];
    }
    let first = &crit[0].dir;
    let last = &crit[k - 1].dir;
    let g0 = if k == 1 {
        Direction::new(first.dy.clone(), -first.dx.clone())
    } else {
        first.plus(&-last.clone())
    };
    let mut half = vec![g0];
    for i in 1..k {
        half.push(crit[i - 1].dir.plus(&crit[i].dir));
    }
    let mut full = half.clone();
    full.extend(half.into_iter().map(|d| -d));
    full
}

/// Nodes sorted by projection onto `dir`; fails on a tie.
pub fn projection_order<S: Coord>(points: &[Point<S>], dir: &Direction<S>) -> Result<Vec<usize>> {
    let proj: Vec<S> = points.iter().map(|p| dir.project(p)).collect();
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| proj[a].partial_cmp(&proj[b]).unwrap_or(Ordering::Equal).then(a.cmp(&b)));
    for w in order.windows(2) {
        if proj[w[0]] == proj[w[1]] {
            return Err(Error::ProjectionTie(w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    Ok(order)
}

/// The first `k` nodes along `dir` form part 0, the rest part 1.
pub fn sweep_split<S: Scalar>(
    points: &[Point<S>],
    weights: &WeightAssignment<S>,
    dir: &Direction<S>,
    k: usize,
) -> Result<Partition<S>> {
    let n = points.len();
    if k == 0 || k >= n {
        return Err(Error::pre("split index must satisfy 1 <= k < n"));
    }
    let order = projection_order(points, dir)?;
    Partition::new(n, weights, vec![order[..k].to_vec(), order[k..].to_vec()])
}

/// Projection orders and prefix sums at every gap of a full turn.
#[derive(Debug, Clone)]
pub struct SweepRecord<S> {
    pub critical: Vec<CriticalDirection<S>>,
    pub gaps: Vec<Direction<S>>,
    pub orders: Vec<Vec<usize>>,
    /// `p` of the first `k` nodes at each gap.
    pub values: Vec<S>,
    pub k: usize,
}

impl<S: Scalar> SweepRecord<S> {
    /// Number of critical directions in the half-turn.
    pub fn half(&self) -> usize {
        self.critical.len()
    }

    /// Pairs generating the critical direction crossed between gap `i` and `i + 1`.
    pub fn crossing_pairs(&self, i: usize) -> &[(usize, usize)] {
        &self.critical[i % self.critical.len()].pairs
    }

    /// Prefix sums along the half-turn `gamma_0, ..., gamma_K = -gamma_0`.
    pub fn half_turn_values(&self) -> &[S] {
        &self.values[..=self.half().min(self.values.len() - 1)]
    }

    pub fn prefix(&self, i: usize) -> &[usize] {
        &self.orders[i][..self.k]
    }
}

type Geometry<T> = (Vec<CriticalDirection<T>>, Vec<Direction<T>>, Vec<Vec<usize>>);

fn geometry<T: Coord>(points: &[Point<T>]) -> Result<Geometry<T>> {
    let critical = critical_directions(points)?;
    let gaps = gap_directions(&critical);
    let orders = gaps.iter().map(|d| projection_order(points, d)).collect::<Result<_>>()?;
    Ok((critical, gaps, orders))
}

fn dir_from_big<S: Scalar>(d: Direction<BigInt>) -> Direction<S> {
    Direction::new(big_to_scalar(&d.dx), big_to_scalar(&d.dy))
}

/// Evaluates the first `k` nodes at every gap of the full turn. Points are
/// rescaled to integer coordinates first, so recorded directions refer to
/// the rescaled picture.
pub fn run_sweep<S: Scalar>(points: &[Point<S>], weights: &WeightAssignment<S>, k: usize) -> Result<SweepRecord<S>> {
    let (critical, gaps, orders) = match big_points(points) {
        Some(b) => {
            let (c, g, o) = geometry(&b)?;
            let c = c
                .into_iter()
                .map(|cd| CriticalDirection { dir: dir_from_big(cd.dir), pairs: cd.pairs })
                .collect();
            (c, g.into_iter().map(dir_from_big).collect(), o)
        }
        None => geometry(&integer_points(points))?,
    };
    let values = orders.iter().map(|o: &Vec<usize>| weights.sum_of(&o[..k])).collect();
    Ok(SweepRecord { critical, gaps, orders, values, k })
}

/// True when `b` equals `a` or differs from it by swapping one adjacent pair.
pub fn differs_by_adjacent_swap(a: &[usize], b: &[usize]) -> bool {
    let diff: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
    match diff.as_slice() {
        [] => true,
        [i, j] => *j == i + 1 && a[*i] == b[*j] && a[*j] == b[*i],
        _ => false,
    }
}
