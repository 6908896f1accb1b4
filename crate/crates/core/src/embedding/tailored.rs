use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::{connected_induced, Graph};
use crate::scalar::Scalar;

use super::convex::{convex_embedding, in_general_position, perturb, Coefficients, Embedding, PERTURBATION_ATTEMPTS};

/// Convex embedding built for a split `(V1', V2')` and triple `(u, v, w)`:
/// `u`, `v`, `w` are pinned at `(0,0)`, `(1,0)`, `(0,1)` and edges inside
/// either side get elasticity `g`.
#[derive(Debug, Clone)]
pub struct TailoredEmbedding<S> {
    pub base: Embedding<S>,
    /// Elasticity magnitude that satisfied the placement predicates.
    pub g: BigInt,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub triple: (usize, usize, usize),
    /// Perturbation seed of the accepted coefficients.
    pub seed: u64,
}

/// `V1'` lies on or above `y = 1/2`; `V2'` lies on or below `x = y` and on or
/// below `x + 2y = 1`.
pub fn placement_holds<S: Scalar>(emb: &Embedding<S>, v1: &[usize], v2: &[usize]) -> bool {
    let half = S::half();
    v1.iter().all(|&i| emb.points[i].1 >= half)
        && v2.iter().all(|&i| {
            let (x, y) = &emb.points[i];
            x >= y && x.clone() + y.clone() + y.clone() <= S::one()
        })
}

/// Starting magnitude `4 n^2 m`.
pub fn initial_g(n: usize, m: usize) -> BigInt {
    BigInt::from(4u32) * BigInt::from(n) * BigInt::from(n) * BigInt::from(m)
}

/// Worst-case magnitude `4 n^(2n+2) m`.
pub fn g_ceiling(n: usize, m: usize) -> BigInt {
    BigInt::from(4u32) * num_traits::pow(BigInt::from(n), 2 * n + 2) * BigInt::from(m)
}

pub(crate) fn big_to_scalar<S: Scalar>(b: &BigInt) -> S {
    if let Some(v) = b.to_i64() {
        return S::of(v);
    }
    // Horner over base-2^32 digits, most significant first.
    let (sign, digits) = b.to_u32_digits();
    let base = S::of(1i64 << 32);
    let mut acc = S::zero();
    for d in digits.iter().rev() {
        acc = acc * base.clone() + S::of(*d as i64);
    }
    if sign == num_bigint::Sign::Minus {
        -acc
    } else {
        acc
    }
}

/// Builds the tailored embedding, raising `g` from `4n^2m` by `g <- g^2 m`
/// until the placement predicates hold. Each magnitude draws perturbed
/// coefficients until the points are in general position.
pub fn tailored_embedding<S: Scalar>(
    g: &Graph,
    v1: &[usize],
    v2: &[usize],
    triple: (usize, usize, usize),
    seed: u64,
) -> Result<TailoredEmbedding<S>> {
    check_split(g, v1, v2, triple)?;
    let n = g.n();
    let m = g.m();
    let (u, v, w) = triple;
    let mut side = vec![0u8; n];
    for &i in v2 {
        side[i] = 1;
    }
    let ceiling = g_ceiling(n, m);
    let mut mag = initial_g(n, m);
    let mut attempt_seed = seed;
    loop {
        let gs: S = big_to_scalar(&mag);
        let base: Coefficients<S> = g
            .edges()
            .into_iter()
            .map(|(a, b)| ((a, b), if side[a] == side[b] { gs.clone() } else { S::one() }))
            .collect();
        let mut placed = None;
        for _ in 0..PERTURBATION_ATTEMPTS {
            let coeff = perturb(g, &base, attempt_seed);
            let emb = convex_embedding(g, [u, v, w], &coeff)?;
            if in_general_position(&emb.points) {
                placed = Some(emb);
                break;
            }
            attempt_seed = attempt_seed.wrapping_add(1);
        }
        let emb = placed.ok_or_else(|| Error::internal("no general-position tailored embedding"))?;
        if placement_holds(&emb, v1, v2) {
            return Ok(TailoredEmbedding {
                base: emb,
                g: mag,
                v1: sorted(v1),
                v2: sorted(v2),
                triple,
                seed: attempt_seed,
            });
        }
        if mag >= ceiling {
            return Err(Error::internal("placement predicates fail at the ceiling magnitude"));
        }
        mag = (&mag * &mag * BigInt::from(m)).min(ceiling.clone());
    }
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// Structural clauses the tailored embedding relies on.
fn check_split(g: &Graph, v1: &[usize], v2: &[usize], (u, v, w): (usize, usize, usize)) -> Result<()> {
    let n = g.n();
    let mut seen = vec![0u8; n];
    for &i in v1.iter().chain(v2) {
        g.check_node(i)?;
        seen[i] += 1;
    }
    if seen.iter().any(|&c| c != 1) {
        return Err(Error::pre("split must cover every node exactly once"));
    }
    if !v1.contains(&w) || !v2.contains(&u) || !v2.contains(&v) {
        return Err(Error::pre("w must lie in V1' and u, v in V2'"));
    }
    if !g.has_edge(u, w) || !g.has_edge(v, w) {
        return Err(Error::pre("{u,w} and {v,w} must be edges"));
    }
    if !connected_induced(g, v1)? || !connected_induced(g, v2)? {
        return Err(Error::pre("both sides of the split must be connected"));
    }
    Ok(())
}
