//! Supply/demand weights, partitions, and instance diagnostics.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{connectivity_level, mask_connected, mask_of, Graph};
use crate::scalar::Scalar;

/// Signed node weight `p(i)` for every node, with the cached total `p(V)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightAssignment<S> {
    values: Vec<S>,
    total: S,
}

impl<S: Scalar> WeightAssignment<S> {
    pub fn new(values: Vec<S>) -> Self {
        let total = values.iter().cloned().fold(S::zero(), |acc, v| acc + v);
        WeightAssignment { values, total }
    }

    /// Builds from integers; handy for ±1 instances.
    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| S::of(v)).collect())
    }

    /// Fails unless there is exactly one weight per node of `g`.
    pub fn for_graph(g: &Graph, values: Vec<S>) -> Result<Self> {
        if values.len() != g.n() {
            return Err(Error::pre(format!(
                "weight assignment has {} entries for {} nodes",
                values.len(),
                g.n()
            )));
        }
        Ok(Self::new(values))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> &S {
        &self.values[v]
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn total(&self) -> &S {
        &self.total
    }

    /// Every value is exactly +1 or -1.
    pub fn is_pm1(&self) -> bool {
        let one = S::one();
        let minus = -S::one();
        self.values.iter().all(|v| *v == one || *v == minus)
    }

    /// `max_j |p(j)|`, zero for an empty assignment.
    pub fn max_abs(&self) -> S {
        self.values
            .iter()
            .map(|v| v.abs())
            .fold(S::zero(), crate::scalar::max_of)
    }

    pub fn sum_of(&self, nodes: &[usize]) -> S {
        nodes
            .iter()
            .fold(S::zero(), |acc, &v| acc + self.values[v].clone())
    }

    pub fn negated(&self) -> Self {
        Self::new(self.values.iter().map(|v| -v.clone()).collect())
    }
}

/// Split of the node set into 2 (or 3) disjoint parts with cached sums and sizes.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition<S> {
    parts: Vec<Vec<usize>>,
    sums: Vec<S>,
}

impl<S: Scalar> Partition<S> {
    /// Checks that `parts` cover `0..n` disjointly; sorts each part.
    pub fn new(n: usize, weights: &WeightAssignment<S>, parts: Vec<Vec<usize>>) -> Result<Self> {
        if weights.len() != n {
            return Err(Error::pre("weight assignment does not match node count"));
        }
        let mut owner = vec![usize::MAX; n];
        let mut parts = parts;
        for (i, part) in parts.iter_mut().enumerate() {
            part.sort_unstable();
            for &v in part.iter() {
                if v >= n {
                    return Err(Error::NodeOutOfRange { id: v, n });
                }
                if owner[v] != usize::MAX {
                    return Err(Error::pre(format!("node {v} appears in two parts")));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::pre(format!("node {v} is not covered by the partition")));
        }
        let sums = parts.iter().map(|p| weights.sum_of(p)).collect();
        Ok(Partition { parts, sums })
    }

    /// Two-way split with `side` as the first part and its complement second.
    pub fn from_side(n: usize, weights: &WeightAssignment<S>, side: &[usize]) -> Result<Self> {
        let mask = mask_of(n, side);
        let rest = (0..n).filter(|&v| !mask[v]).collect();
        Self::new(n, weights, vec![side.to_vec(), rest])
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &[usize] {
        &self.parts[i]
    }

    pub fn sums(&self) -> &[S] {
        &self.sums
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part index holding node `v`.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.binary_search(&v).is_ok())
    }

    /// Every part induces a connected subgraph.
    pub fn all_connected(&self, g: &Graph) -> bool {
        self.parts
            .iter()
            .all(|p| !p.is_empty() && mask_connected(g, &mask_of(g.n(), p)))
    }

    /// `max |V_i| / |V_j|` over ordered pairs of parts, as an exact ratio.
    pub fn size_ratio(&self) -> S {
        let sizes = self.sizes();
        let big = *sizes.iter().max().unwrap_or(&0);
        let small = *sizes.iter().min().unwrap_or(&0);
        if small == 0 {
            return S::of(i64::MAX);
        }
        S::ratio(big as i64, small as i64)
    }

    /// `max_i |p(V_i) - p(V)/k|`; with `centered == false` just `max_i |p(V_i)|`.
    pub fn imbalance(&self, weights: &WeightAssignment<S>, centered: bool) -> S {
        let shift = if centered {
            weights.total().clone() / S::of(self.parts.len() as i64)
        } else {
            S::zero()
        };
        self.sums
            .iter()
            .map(|s| (s.clone() - shift.clone()).abs())
            .fold(S::zero(), crate::scalar::max_of)
    }

    /// Cached sums equal a fresh recomputation.
    pub fn sums_consistent(&self, weights: &WeightAssignment<S>) -> bool {
        self.parts
            .iter()
            .zip(&self.sums)
            .all(|(p, s)| weights.sum_of(p) == *s)
    }

    /// Swaps the order of two parts.
    pub fn swapped(mut self, i: usize, j: usize) -> Self {
        self.parts.swap(i, j);
        self.sums.swap(i, j);
        self
    }
}

/// Requested weight regime for [`validate_instance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Pm1,
    General,
}

/// Read-only summary of an instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostics<S> {
    /// 0 (disconnected) up to 3.
    pub connectivity: u8,
    pub total: S,
    /// True when every weight is ±1.
    pub pm1: bool,
    pub regime_ok: bool,
    pub n_mod_4: usize,
    pub n: usize,
}

pub fn validate_instance<S: Scalar>(
    g: &Graph,
    p: &WeightAssignment<S>,
    regime: Regime,
) -> Result<Diagnostics<S>> {
    if p.len() != g.n() {
        return Err(Error::pre(format!(
            "weights given for {} of {} nodes",
            p.len(),
            g.n()
        )));
    }
    let pm1 = p.is_pm1();
    Ok(Diagnostics {
        connectivity: connectivity_level(g),
        total: p.total().clone(),
        pm1,
        regime_ok: match regime {
            Regime::Pm1 => pm1,
            Regime::General => true,
        },
        n_mod_4: g.n() % 4,
        n: g.n(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::Rational;

    fn w(v: &[i64]) -> WeightAssignment<Rational> {
        WeightAssignment::from_ints(v)
    }

    #[test]
    fn diagnostics_examples() {
        let d = validate_instance(&complete(4), &w(&[1, 1, -1, -1]), Regime::Pm1).unwrap();
        assert_eq!(d.connectivity, 3);
        assert_eq!(d.total, Rational::from_integer(0.into()));
        assert!(d.pm1 && d.regime_ok);
        assert_eq!(d.n_mod_4, 0);

        let d = validate_instance(&cycle(6), &w(&[1, -1, 1, -1, 1, -1]), Regime::Pm1).unwrap();
        assert_eq!((d.connectivity, d.n_mod_4, d.pm1), (2, 2, true));

        let d = validate_instance(&cycle(4), &w(&[-4, -2, 4, 2]), Regime::Pm1).unwrap();
        assert_eq!(d.connectivity, 2);
        assert!(!d.pm1 && !d.regime_ok);
        assert_eq!(d.total, Rational::from_integer(0.into()));

        assert!(validate_instance(&cycle(4), &w(&[1, -1]), Regime::General).is_err());
    }

    #[test]
    fn partition_rejects_overlap_and_gaps() {
        let p = w(&[1, -1, 1, -1]);
        assert!(Partition::new(4, &p, vec![vec![0, 1], vec![1, 2, 3]]).is_err());
        assert!(Partition::new(4, &p, vec![vec![0, 1], vec![2]]).is_err());
        let part = Partition::new(4, &p, vec![vec![1, 0], vec![3, 2]]).unwrap();
        assert_eq!(part.part(0), &[0, 1]);
        assert!(part.sums_consistent(&p));
        assert_eq!(part.size_ratio(), Rational::from_integer(1.into()));
        assert_eq!(part.part_of(3), Some(1));
    }
}
