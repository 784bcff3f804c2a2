//! Subdivision plans: every structure on `P_n` is the Laplacian structure
//! on some `P_m` subdivided at edges `b_1, b_2, ..`, and exactly one such
//! sequence is weakly increasing.

use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::structure::ArithmeticalStructure;
use crate::transforms::{smooth_path, subdivide_path};

/// Base length `m` and edge sequence `b`, with `1 <= b_i <= m + i - 2` and
/// `b` weakly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubdivisionPlan {
    m: usize,
    b: Vec<usize>,
}

fn check_range(m: usize, b: &[usize]) -> Result<()> {
    if m < 2 {
        return Err(Error::Plan(format!("base length m = {m} must be at least 2")));
    }
    for (idx, &x) in b.iter().enumerate() {
        let i = idx + 1;
        let hi = m + i - 2;
        if x < 1 || x > hi {
            return Err(Error::Plan(format!("b_{i} = {x} outside [1, {hi}]")));
        }
    }
    Ok(())
}

impl SubdivisionPlan {
    pub fn new(m: usize, b: Vec<usize>) -> Result<Self> {
        check_range(m, &b)?;
        if let Some(i) = b.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::Plan(format!(
                "b is not weakly increasing at positions {} and {}",
                i + 1,
                i + 2
            )));
        }
        Ok(SubdivisionPlan { m, b })
    }

    pub(crate) fn new_unchecked(m: usize, b: Vec<usize>) -> Self {
        debug_assert!(Self::new(m, b.clone()).is_ok());
        SubdivisionPlan { m, b }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    /// Length of the path the plan produces.
    pub fn n(&self) -> usize {
        self.m + self.b.len()
    }
}

/// Subdivides the Laplacian structure on `P_m` at the edges of `b` in
/// order, without requiring `b` to be monotone.
pub fn apply_sequence(m: usize, b: &[usize]) -> Result<ArithmeticalStructure> {
    check_range(m, b)?;
    let mut s = ArithmeticalStructure::laplacian(Graph::path(m)?);
    for &edge in b {
        // edge e of the current path sits between vertices e and e + 1
        s = subdivide_path(&s, edge + 1)?;
    }
    Ok(s)
}

/// `A_n(b)`.
pub fn apply_plan(plan: &SubdivisionPlan, n: usize) -> Result<ArithmeticalStructure> {
    if plan.n() != n {
        return Err(Error::Plan(format!(
            "plan with m = {} and {} steps builds P_{}, not P_{n}",
            plan.m,
            plan.b.len(),
            plan.n()
        )));
    }
    apply_sequence(plan.m, &plan.b)
}

/// Rewrites descents `(b_i, b_{i+1}) -> (b_{i+1}, b_i + 1)` until `b` is
/// weakly increasing. The resulting plan builds the same structure.
pub fn normalize_plan(m: usize, b: &[usize]) -> Result<SubdivisionPlan> {
    check_range(m, b)?;
    let mut b = b.to_vec();
    // Each rewrite raises the entry sum by one and the sum is bounded, so
    // this terminates.
    while let Some(i) = b.windows(2).position(|w| w[0] > w[1]) {
        let (hi, lo) = (b[i], b[i + 1]);
        b[i] = lo;
        b[i + 1] = hi + 1;
    }
    Ok(SubdivisionPlan::new_unchecked(m, b))
}

/// The unique weakly increasing plan producing `s`.
///
/// Smooths repeatedly at the greatest interior position with `d_i = 1`,
/// recording edges, until the Laplacian structure on `P_m` remains.
pub fn plan_from_structure(s: &ArithmeticalStructure) -> Result<SubdivisionPlan> {
    s.expect_kind(GraphKind::Path)?;
    let mut cur = s.clone();
    let mut edges = Vec::new();
    loop {
        let n = cur.n();
        let Some(pos) = (2..n).rev().find(|&p| cur.d()[p - 1].is_one()) else { break };
        edges.push(pos - 1);
        cur = smooth_path(&cur, pos)?;
    }
    edges.reverse();
    normalize_plan(cur.n(), &edges)
}
