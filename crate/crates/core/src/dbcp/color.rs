use crate::error::{Error, Result};
use crate::graph::{is_k_connected, Graph};
use crate::scalar::Scalar;
use crate::weights::WeightAssignment;

use super::{dbcp_2_general, dbcp_3_general, DbcpResult};

/// A split of red and blue nodes with per-part color counts.
#[derive(Debug, Clone)]
pub struct TwoColorResult<S> {
    pub result: DbcpResult<S>,
    pub red: [usize; 2],
    pub blue: [usize; 2],
    /// `minority_i - (n_min / n_maj) * majority_i` for each part, where
    /// minority is the smaller color class (red on ties).
    pub deviation: [S; 2],
}

impl<S: Scalar> TwoColorResult<S> {
    /// Both colors split exactly in half.
    pub fn even_split(&self) -> bool {
        self.red[0] == self.red[1] && self.blue[0] == self.blue[1]
    }
}

/// Splits a graph whose nodes are colored red or blue into two connected
/// parts that each keep about the global color ratio. 3-connected graphs get
/// equal sizes with `+1/-1` weights (an exact split of both colors when both
/// counts are even); 2-connected graphs use weights `1` and `-n_min/n_maj`.
pub fn two_color_partition<S: Scalar>(g: &Graph, red: &[usize], blue: &[usize], seed: u64) -> Result<TwoColorResult<S>> {
    let n = g.n();
    let mut color = vec![None; n];
    for (&v, c) in red.iter().map(|v| (v, true)).chain(blue.iter().map(|v| (v, false))) {
        g.check_node(v)?;
        if color[v].replace(c).is_some() {
            return Err(Error::pre("red and blue must be disjoint"));
        }
    }
    if color.iter().any(Option::is_none) {
        return Err(Error::pre("red and blue must cover every node"));
    }
    if red.is_empty() || blue.is_empty() {
        return Err(Error::pre("both colors must be present"));
    }
    let is_red: Vec<bool> = color.into_iter().map(Option::unwrap).collect();
    let (nr, nb) = (red.len(), blue.len());
    let red_minor = nr <= nb;
    let ratio = if red_minor { S::ratio(nr as i64, nb as i64) } else { S::ratio(nb as i64, nr as i64) };

    let result = if is_k_connected(g, 3)? {
        let p = WeightAssignment::new(is_red.iter().map(|&r| if r { S::one() } else { -S::one() }).collect());
        let mut r = dbcp_3_general(g, &p, seed)?;
        r.trace.insert(0, "two-color 3-connected".into());
        r
    } else {
        let p = WeightAssignment::new(
            is_red
                .iter()
                .map(|&r| if r == red_minor { S::one() } else { -ratio.clone() })
                .collect(),
        );
        let mut r = dbcp_2_general(g, &p, seed)?;
        r.trace.insert(0, "two-color 2-connected".into());
        r
    };

    let mut reds = [0; 2];
    let mut blues = [0; 2];
    for (i, part) in result.partition.parts().iter().enumerate() {
        reds[i] = part.iter().filter(|&&v| is_red[v]).count();
        blues[i] = part.len() - reds[i];
    }
    let deviation = [0, 1].map(|i| {
        let (minor, major) = if red_minor { (reds[i], blues[i]) } else { (blues[i], reds[i]) };
        S::of(minor as i64) - ratio.clone() * S::of(major as i64)
    });
    Ok(TwoColorResult { result, red: reds, blue: blues, deviation })
}
