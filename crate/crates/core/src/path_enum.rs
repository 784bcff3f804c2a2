//! Enumeration of every structure on `P_n`, and the censuses built on it.
//!
//! Structures are produced by applying each weakly increasing subdivision
//! plan to the Laplacian structure on `P_m`. Order: `m` ascending, then `b`
//! lexicographic. The enumerator keeps one partial structure per plan
//! prefix, so consecutive plans share work and nothing is materialised.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rayon::prelude::*;

use crate::combinatorics::CountTable;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::structure::ArithmeticalStructure;
use crate::transforms::subdivide_path;

pub use crate::bijections::SubdivisionPlan;

/// Plans with a fixed base `m` and, optionally, a fixed first step.
struct Subtree {
    m: usize,
    len: usize,
    pinned: bool,
    b: Vec<usize>,
    /// `stack[k]` is the structure after the first `k` steps.
    stack: Vec<ArithmeticalStructure>,
    fresh: bool,
    done: bool,
}

impl Subtree {
    fn new(n: usize, m: usize, first: Option<usize>) -> Self {
        let len = n - m;
        let mut b = vec![1; len];
        if let Some(x) = first {
            b.iter_mut().for_each(|v| *v = x);
        }
        let base = ArithmeticalStructure::laplacian(Graph::path(m).expect("m >= 2"));
        let mut t = Subtree {
            m,
            len,
            pinned: first.is_some(),
            b,
            stack: vec![base],
            fresh: true,
            done: false,
        };
        t.rebuild(0);
        t
    }

    /// Recomputes `stack[from + 1..]` from `b[from..]`.
    fn rebuild(&mut self, from: usize) {
        self.stack.truncate(from + 1);
        for k in from..self.len {
            let next = subdivide_path(&self.stack[k], self.b[k] + 1).expect("plan in range");
            self.stack.push(next);
        }
    }

    /// Lexicographic successor among weakly increasing sequences with
    /// `b_i <= m + i - 2` (1-based `i`).
    fn advance(&mut self) -> bool {
        let lo = usize::from(self.pinned);
        for k in (lo..self.len).rev() {
            if self.b[k] < self.m + k - 1 {
                let v = self.b[k] + 1;
                self.b[k..].iter_mut().for_each(|x| *x = v);
                self.rebuild(k);
                return true;
            }
        }
        false
    }
}

impl Iterator for Subtree {
    type Item = (SubdivisionPlan, ArithmeticalStructure);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.fresh && !self.advance() {
            self.done = true;
            return None;
        }
        self.fresh = false;
        let plan = SubdivisionPlan::new_unchecked(self.m, self.b.clone());
        Some((plan, self.stack[self.len].clone()))
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::GraphSize { kind: "path", n, min: 2 });
    }
    Ok(())
}

/// Every `(plan, structure)` pair on `P_n`, streamed in enumeration order.
pub fn enumerate_paths_with_plans(
    n: usize,
) -> Result<impl Iterator<Item = (SubdivisionPlan, ArithmeticalStructure)>> {
    check_n(n)?;
    Ok((2..=n).flat_map(move |m| Subtree::new(n, m, None)))
}

/// Every structure on `P_n`, streamed in enumeration order.
pub fn enumerate_paths(n: usize) -> Result<impl Iterator<Item = ArithmeticalStructure>> {
    Ok(enumerate_paths_with_plans(n)?.map(|(_, s)| s))
}

/// Work units `(m, b_1)`, listed in enumeration order.
fn partitions(n: usize) -> Vec<(usize, Option<usize>)> {
    let mut out = Vec::new();
    for m in 2..=n {
        if m == n {
            out.push((m, None));
        } else {
            out.extend((1..m).map(|x| (m, Some(x))));
        }
    }
    out
}

/// Same list as [`enumerate_paths`], built in parallel.
pub fn enumerate_paths_par(n: usize) -> Result<Vec<ArithmeticalStructure>> {
    check_n(n)?;
    let chunks: Vec<Vec<ArithmeticalStructure>> = partitions(n)
        .into_par_iter()
        .map(|(m, first)| Subtree::new(n, m, first).map(|(_, s)| s).collect())
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// Folds `key(s)` counts over all structures in parallel. Structures for
/// which `key` returns `None` are skipped.
pub fn census_by<F>(n: usize, key: F) -> Result<CountTable>
where
    F: Fn(&ArithmeticalStructure) -> Option<u64> + Sync,
{
    check_n(n)?;
    let table = partitions(n)
        .into_par_iter()
        .map(|(m, first)| {
            let mut t = CountTable::new(n as u64);
            for (_, s) in Subtree::new(n, m, first) {
                if let Some(k) = key(&s) {
                    t.bump(k);
                }
            }
            t
        })
        .reduce(
            || CountTable::new(n as u64),
            |mut a, b| {
                a.merge(&b);
                a
            },
        );
    Ok(table)
}

fn small(x: &BigUint) -> u64 {
    u64::try_from(x).expect("census key fits in u64")
}

/// Counts by `r(1)`.
pub fn census_by_r1(n: usize) -> Result<CountTable> {
    census_by(n, |s| Some(s.r_ones() as u64))
}

/// Counts by the value of `d_i`, `i` 1-based.
pub fn census_by_d_entry(n: usize, i: usize) -> Result<CountTable> {
    if i < 1 || i > n {
        return Err(Error::Position { pos: i as i64, lo: 1, hi: n as i64 });
    }
    census_by(n, |s| Some(small(&s.d()[i - 1])))
}

/// Counts by `sum(d)`.
pub fn census_by_dsum(n: usize) -> Result<CountTable> {
    census_by(n, |s| Some(small(&s.d_sum())))
}

/// Among structures with `r(1) = 2`, counts by the number of `d_i = 1`.
pub fn census_d_ones_given_two_r_ones(n: usize) -> Result<CountTable> {
    census_by(n, |s| (s.r_ones() == 2).then(|| s.d_ones() as u64))
}

/// `d_0 = 3n - 3 - sum(d)`, which equals `r(1) - 1`.
pub fn d_zero(s: &ArithmeticalStructure) -> Result<BigInt> {
    s.expect_kind(GraphKind::Path)?;
    Ok(BigInt::from(3 * s.n() as u64 - 3) - BigInt::from(s.d_sum()))
}

/// Splits at an interior `r_j = 1` into structures on `P_j` and
/// `P_{n-j+1}`, sharing vertex `j`.
pub fn split_at_one(
    s: &ArithmeticalStructure,
    j: usize,
) -> Result<(ArithmeticalStructure, ArithmeticalStructure)> {
    s.expect_kind(GraphKind::Path)?;
    let n = s.n();
    if j < 2 || j >= n {
        return Err(Error::Position { pos: j as i64, lo: 2, hi: n as i64 - 1 });
    }
    if !s.r()[j - 1].is_one() {
        return Err(Error::Precondition(format!("r_{j} = {} is not 1", s.r()[j - 1])));
    }
    let left = ArithmeticalStructure::from_r(Graph::path(j)?, s.r()[..j].to_vec())?;
    let right = ArithmeticalStructure::from_r(Graph::path(n - j + 1)?, s.r()[j - 1..].to_vec())?;
    Ok((left, right))
}
