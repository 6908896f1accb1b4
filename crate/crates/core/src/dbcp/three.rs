use crate::embedding::{general_position_embedding, tailored_embedding, Point, TailoredEmbedding};
use crate::error::{Error, Result};
use crate::graph::{is_k_connected, Graph};
use crate::scalar::Scalar;
use crate::weights::WeightAssignment;

use super::cut::{cut_triple, CutTriple};
use super::{select_gap, DbcpResult};

/// Size of the first part: `n/2` when `n = 0 mod 4`, `n/2 + 1` when
/// `n = 2 mod 4` in the unit regime, and `ceil(n/2)` otherwise.
pub fn dbcp_3_target_size(n: usize, unit: bool) -> usize {
    if unit && n % 4 == 2 {
        n / 2 + 1
    } else {
        n.div_ceil(2)
    }
}

type Placed<S> = (Vec<Point<S>>, Option<TailoredEmbedding<S>>, Option<CutTriple>, u64);

/// Triangle-anchored embedding when a triangle exists, tailored embedding
/// over a cut triple otherwise.
fn place<S: Scalar>(g: &Graph, seed: u64, trace: &mut Vec<String>) -> Result<Placed<S>> {
    if let Some((a, b, c)) = g.first_triangle() {
        let (emb, used) = general_position_embedding::<S>(g, [a, b, c], seed)?;
        trace.push(format!("triangle ({a},{b},{c})"));
        return Ok((emb.points, None, None, used));
    }
    let cut = cut_triple(g)?;
    trace.push(format!("cut triple {:?} (u={},v={},w={})", cut.case, cut.u, cut.v, cut.w));
    let t = tailored_embedding::<S>(g, &cut.v1, &cut.v2, cut.triple(), seed)?;
    trace.push(format!("tailored g={}", t.g));
    let used = t.seed;
    Ok((t.base.points.clone(), Some(t), Some(cut), used))
}

fn check_three_connected(g: &Graph, p: &WeightAssignment<impl Scalar>) -> Result<()> {
    if p.len() != g.n() {
        return Err(Error::pre("weights must be given for every node"));
    }
    if g.n() < 4 || !is_k_connected(g, 3)? {
        return Err(Error::pre("graph must be 3-connected"));
    }
    Ok(())
}

fn sweep<S: Scalar>(
    g: &Graph,
    p: &WeightAssignment<S>,
    k: usize,
    target: S,
    tol: S,
    seed: u64,
    mut trace: Vec<String>,
) -> Result<DbcpResult<S>> {
    let (points, tailored, cut, used) = place::<S>(g, seed, &mut trace)?;
    let (partition, choice) = select_gap(g, &points, p, k, &target, &tol)?;
    trace.push(format!("sweep gap {} of {}", choice.gap, choice.record.gaps.len()));
    let mut r = DbcpResult::new(partition, p, trace, used);
    r.points = Some(points);
    r.sweep = Some(choice);
    r.tailored = tailored;
    r.cut = cut;
    Ok(r)
}

/// Unit weights summing to zero on a 3-connected graph: both sums zero,
/// sizes equal (`n = 0 mod 4`) or differing by two (`n = 2 mod 4`).
pub fn dbcp_3<S: Scalar>(g: &Graph, p: &WeightAssignment<S>, seed: u64) -> Result<DbcpResult<S>> {
    check_three_connected(g, p)?;
    if !p.is_pm1() || !p.total().is_zero() {
        return Err(Error::pre("weights must be +1/-1 and sum to zero"));
    }
    let k = dbcp_3_target_size(g.n(), true);
    sweep(g, p, k, S::zero(), S::zero(), seed, vec!["dbcp3".into()])
}

/// Arbitrary weights on a 3-connected graph: `|p(V_i) - p(V)/2| <= max|p|`
/// with sizes `ceil(n/2)` and `floor(n/2)`.
pub fn dbcp_3_general<S: Scalar>(g: &Graph, p: &WeightAssignment<S>, seed: u64) -> Result<DbcpResult<S>> {
    check_three_connected(g, p)?;
    let k = dbcp_3_target_size(g.n(), false);
    let target = p.total().clone() * S::half();
    sweep(g, p, k, target, p.max_abs(), seed, vec!["dbcp3-general".into()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{harmonic_residual_is_zero, placement_holds};
    use crate::graph::families::*;
    use crate::Rational;
    use num_traits::Zero;

    fn w(v: &[i64]) -> WeightAssignment<Rational> {
        WeightAssignment::from_ints(v)
    }

    #[test]
    fn k4_even_split() {
        let k4 = complete(4);
        let p = w(&[1, 1, -1, -1]);
        let r = dbcp_3(&k4, &p, 0).unwrap();
        assert_eq!(r.partition.sizes(), vec![2, 2]);
        assert!(r.partition.sums().iter().all(Zero::is_zero));
        assert!(r.partition.all_connected(&k4));
        assert!(r.achieved_consistent(&p));
    }

    #[test]
    fn octahedron_parity() {
        let g = octahedron();
        let p = w(&[1, 1, 1, -1, -1, -1]);
        let r = dbcp_3(&g, &p, 0).unwrap();
        assert_eq!(r.partition.sizes(), vec![4, 2]);
        assert!(r.partition.sums().iter().all(Zero::is_zero));
        assert!(r.partition.all_connected(&g));
    }

    #[test]
    fn triangle_free_uses_tailored() {
        // The cube is 3-connected without triangles.
        let g = prism(4);
        let p = w(&[1, -1, 1, -1, -1, 1, -1, 1]);
        let r = dbcp_3(&g, &p, 3).unwrap();
        assert!(r.partition.sums().iter().all(Zero::is_zero));
        assert_eq!(r.partition.sizes(), vec![4, 4]);
        let t = r.tailored.as_ref().unwrap();
        assert!(harmonic_residual_is_zero(&g, &t.base));
        assert!(placement_holds(&t.base, &t.v1, &t.v2));
        let s = r.sweep.as_ref().unwrap();
        assert!(s.connected.iter().all(|&c| c));
    }

    #[test]
    fn general_weights() {
        let k4 = complete(4);
        let p = w(&[5, -5, 3, -3]);
        let r = dbcp_3_general(&k4, &p, 0).unwrap();
        assert!(r.c_p <= Rational::from_integer(5.into()));
        assert_eq!(r.partition.sizes(), vec![2, 2]);
        let p = w(&[1, 1, 1, 1]);
        let r = dbcp_3_general(&k4, &p, 0).unwrap();
        assert!(r.c_p <= Rational::from_integer(1.into()));
        let g = prism(3);
        let p = w(&[4, -7, 2, 9, -1, 3]);
        let r = dbcp_3_general(&g, &p, 1).unwrap();
        assert!(r.c_p <= Rational::from_integer(9.into()));
        assert!(r.partition.all_connected(&g));
        let g = wheel(6);
        let p = w(&[2, 3, -1, 4, 0, 5, -2]);
        let r = dbcp_3_general(&g, &p, 1).unwrap();
        assert_eq!(r.partition.sizes(), vec![4, 3]);
        assert!(r.c_p <= Rational::from_integer(5.into()));
    }
}
