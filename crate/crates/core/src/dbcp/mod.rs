//! Doubly balanced connected partitions: weight sums and part sizes bounded
//! at the same time.

mod color;
mod cut;
mod sep;
mod three;
mod two;

pub use color::{two_color_partition, TwoColorResult};
pub use cut::{cut_clauses_hold, cut_triple, cut_triple_weighted, weighted_cut_holds, CutCase, CutTriple};
pub use sep::dbcp_sep_case;
pub use three::{dbcp_3, dbcp_3_general, dbcp_3_target_size};
pub use two::{dbcp_2, dbcp_2_general, dbcp_series_parallel};

use crate::embedding::{run_sweep, Point, SweepRecord, TailoredEmbedding};
use crate::error::{Error, Result};
use crate::graph::{connected_induced, Graph};
use crate::scalar::Scalar;
use crate::weights::{Partition, WeightAssignment};

/// A sweep over a full turn and the gap it settled on.
#[derive(Debug, Clone)]
pub struct SweepChoice<S> {
    pub record: SweepRecord<S>,
    /// Both sides connected at each gap.
    pub connected: Vec<bool>,
    pub gap: usize,
}

/// A two-part partition with the bounds it achieves and how it was built.
#[derive(Debug, Clone)]
pub struct DbcpResult<S> {
    pub partition: Partition<S>,
    /// `max_i |p(V_i) - p(V)/2|`.
    pub c_p: S,
    /// `max(|V1|/|V2|, |V2|/|V1|)`.
    pub c_s: S,
    pub trace: Vec<String>,
    pub seed: u64,
    pub points: Option<Vec<Point<S>>>,
    pub sweep: Option<SweepChoice<S>>,
    pub tailored: Option<TailoredEmbedding<S>>,
    pub cut: Option<CutTriple>,
}

impl<S: Scalar> DbcpResult<S> {
    pub(crate) fn new(partition: Partition<S>, p: &WeightAssignment<S>, trace: Vec<String>, seed: u64) -> Self {
        let c_p = partition.imbalance(p, true);
        let c_s = partition.size_ratio();
        DbcpResult { partition, c_p, c_s, trace, seed, points: None, sweep: None, tailored: None, cut: None }
    }

    pub fn trace_string(&self) -> String {
        self.trace.join(" > ")
    }

    /// The stored bounds equal a recomputation from the partition.
    pub fn achieved_consistent(&self, p: &WeightAssignment<S>) -> bool {
        self.partition.sums_consistent(p)
            && self.c_p == self.partition.imbalance(p, true)
            && self.c_s == self.partition.size_ratio()
    }
}

/// Sweeps `points` over a full turn with the first `k` nodes as part one and
/// takes the first gap where `|p(V1) - target| <= tol` and both sides are
/// connected in `g`.
pub(crate) fn select_gap<S: Scalar>(
    g: &Graph,
    points: &[Point<S>],
    p: &WeightAssignment<S>,
    k: usize,
    target: &S,
    tol: &S,
) -> Result<(Partition<S>, SweepChoice<S>)> {
    let record = run_sweep(points, p, k)?;
    let connected: Vec<bool> = record
        .orders
        .iter()
        .map(|o| connected_induced(g, &o[..k]).unwrap_or(false) && connected_induced(g, &o[k..]).unwrap_or(false))
        .collect();
    let gap = (0..record.gaps.len())
        .find(|&i| connected[i] && (record.values[i].clone() - target.clone()).abs() <= *tol)
        .ok_or_else(|| Error::internal("no direction balances the sweep"))?;
    let order = &record.orders[gap];
    let partition = Partition::new(g.n(), p, vec![order[..k].to_vec(), order[k..].to_vec()])?;
    Ok((partition, SweepChoice { record, connected, gap }))
}
