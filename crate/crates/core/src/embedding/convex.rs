use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Num, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph};
use crate::linalg::solve;
use crate::scalar::Scalar;

/// A point in the plane.
pub type Point<S> = (S, S);

/// Elasticity coefficient per edge `(a, b)` with `a < b`.
pub type Coefficients<S> = BTreeMap<(usize, usize), S>;

/// Placement of every node; anchors sit at `(0,0)`, `(1,0)`, `(0,1)` and every
/// other node is the coefficient-weighted average of its neighbors.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding<S> {
    pub points: Vec<Point<S>>,
    pub anchors: [usize; 3],
    pub coefficients: Coefficients<S>,
}

impl<S: Scalar> Embedding<S> {
    pub fn coefficient(&self, a: usize, b: usize) -> S {
        self.coefficients
            .get(&(a.min(b), a.max(b)))
            .cloned()
            .unwrap_or_else(S::one)
    }
}

pub fn anchor_points<S: Scalar>() -> [Point<S>; 3] {
    [(S::zero(), S::zero()), (S::one(), S::zero()), (S::zero(), S::one())]
}

/// Solves the harmonic system with the three anchors pinned. Edges missing
/// from `coefficients` get coefficient 1.
pub fn convex_embedding<S: Scalar>(
    g: &Graph,
    anchors: [usize; 3],
    coefficients: &Coefficients<S>,
) -> Result<Embedding<S>> {
    let n = g.n();
    for &a in &anchors {
        g.check_node(a)?;
    }
    if anchors[0] == anchors[1] || anchors[1] == anchors[2] || anchors[0] == anchors[2] {
        return Err(Error::pre("anchors must be three distinct nodes"));
    }
    if !is_connected(g) {
        return Err(Error::pre("convex embedding requires a connected graph"));
    }
    let mut coeff = Coefficients::new();
    for (a, b) in g.edges() {
        let c = coefficients.get(&(a, b)).cloned().unwrap_or_else(S::one);
        if c <= S::zero() {
            return Err(Error::NonPositiveCoefficient(a, b));
        }
        coeff.insert((a, b), c);
    }
    let c_of = |a: usize, b: usize| coeff[&(a.min(b), a.max(b))].clone();

    let fixed = anchor_points::<S>();
    let mut slot = vec![usize::MAX; n];
    let free: Vec<usize> = (0..n).filter(|v| !anchors.contains(v)).collect();
    for (i, &v) in free.iter().enumerate() {
        slot[v] = i;
    }
    let m = free.len();
    let mut a = vec![vec![S::zero(); m]; m];
    let mut rhs = vec![vec![S::zero(); 2]; m];
    for (i, &v) in free.iter().enumerate() {
        for &w in g.neighbors(v) {
            let c = c_of(v, w);
            a[i][i] = a[i][i].clone() + c.clone();
            if let Some(k) = anchors.iter().position(|&x| x == w) {
                rhs[i][0] = rhs[i][0].clone() + c.clone() * fixed[k].0.clone();
                rhs[i][1] = rhs[i][1].clone() + c * fixed[k].1.clone();
            } else {
                a[i][slot[w]] = a[i][slot[w]].clone() - c;
            }
        }
    }
    let x = if m == 0 { Vec::new() } else { solve(a, rhs)? };
    let mut points = vec![(S::zero(), S::zero()); n];
    for (k, &v) in anchors.iter().enumerate() {
        points[v] = fixed[k].clone();
    }
    for (i, &v) in free.iter().enumerate() {
        points[v] = (x[i][0].clone(), x[i][1].clone());
    }
    Ok(Embedding { points, anchors, coefficients: coeff })
}

/// Every non-anchor node satisfies `c_v f(v) = sum c_uv f(u)` exactly.
pub fn harmonic_residual_is_zero<S: Scalar>(g: &Graph, emb: &Embedding<S>) -> bool {
    (0..g.n()).filter(|v| !emb.anchors.contains(v)).all(|v| {
        let mut cv = S::zero();
        let mut sx = S::zero();
        let mut sy = S::zero();
        for &w in g.neighbors(v) {
            let c = emb.coefficient(v, w);
            cv = cv + c.clone();
            sx = sx + c.clone() * emb.points[w].0.clone();
            sy = sy + c * emb.points[w].1.clone();
        }
        let (px, py) = &emb.points[v];
        cv.clone() * px.clone() == sx && cv * py.clone() == sy
    })
}

/// Anchors sit exactly at `(0,0)`, `(1,0)`, `(0,1)`.
pub fn anchors_fixed<S: Scalar>(emb: &Embedding<S>) -> bool {
    let fixed = anchor_points::<S>();
    (0..3).all(|k| emb.points[emb.anchors[k]] == fixed[k])
}

/// The same points multiplied by one positive factor so that, for exact
/// types, every coordinate is an integer. Angles and orders are unchanged.
pub fn integer_points<S: Scalar>(points: &[Point<S>]) -> Vec<Point<S>> {
    let coords: Vec<S> = points.iter().flat_map(|(x, y)| [x.clone(), y.clone()]).collect();
    let k = S::integer_scale(&coords);
    points.iter().map(|(x, y)| (x.clone() * k.clone(), y.clone() * k.clone())).collect()
}

/// Rescaled points as big integers, when the scalar type allows it.
pub(crate) fn big_points<S: Scalar>(points: &[Point<S>]) -> Option<Vec<Point<BigInt>>> {
    integer_points(points)
        .iter()
        .map(|(x, y)| Some((x.to_bigint_exact()?, y.to_bigint_exact()?)))
        .collect()
}

/// All points distinct and no three collinear.
pub fn in_general_position<S: Scalar>(points: &[Point<S>]) -> bool {
    match big_points(points) {
        Some(b) => general_position_core(&b),
        None => general_position_core(points),
    }
}

fn general_position_core<T: Coord>(points: &[Point<T>]) -> bool {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return false;
            }
            for k in j + 1..n {
                if cross(&points[i], &points[j], &points[k]).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Coordinates the planar geometry runs over: any [`Scalar`], or a big
/// integer when exact points have been rescaled.
pub trait Coord: Clone + std::fmt::Debug + PartialOrd + Num + Signed {}

impl<T: Clone + std::fmt::Debug + PartialOrd + Num + Signed> Coord for T {}

/// `(b - a) x (c - a)`.
pub(crate) fn cross<T: Coord>(a: &Point<T>, b: &Point<T>, c: &Point<T>) -> T {
    let (ux, uy) = (b.0.clone() - a.0.clone(), b.1.clone() - a.1.clone());
    let (vx, vy) = (c.0.clone() - a.0.clone(), c.1.clone() - a.1.clone());
    ux * vy - uy * vx
}

/// Multiplies every coefficient by `1 + k/K` with `k` uniform in `0..K`,
/// `K = n^4`, drawn from a ChaCha stream seeded with `seed`.
pub fn perturb<S: Scalar>(g: &Graph, base: &Coefficients<S>, seed: u64) -> Coefficients<S> {
    let n = g.n().max(2) as i64;
    let big_k = n.pow(4);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    g.edges()
        .into_iter()
        .map(|(a, b)| {
            let c = base.get(&(a, b)).cloned().unwrap_or_else(S::one);
            let k: i64 = rng.gen_range(0..big_k);
            ((a, b), c * (S::one() + S::ratio(k, big_k)))
        })
        .collect()
}

/// Number of perturbation seeds tried before giving up on general position.
pub const PERTURBATION_ATTEMPTS: u64 = 64;

/// Convex embedding with randomly perturbed unit coefficients, re-drawn until
/// the points are in general position. Returns the embedding and the seed used.
pub fn general_position_embedding<S: Scalar>(
    g: &Graph,
    anchors: [usize; 3],
    seed: u64,
) -> Result<(Embedding<S>, u64)> {
    for attempt in 0..PERTURBATION_ATTEMPTS {
        let s = seed.wrapping_add(attempt);
        let coeff = perturb(g, &Coefficients::new(), s);
        let emb = convex_embedding(g, anchors, &coeff)?;
        if in_general_position(&emb.points) {
            return Ok((emb, s));
        }
    }
    Err(Error::internal("no perturbation produced a general-position embedding"))
}
