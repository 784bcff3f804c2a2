//! Enumeration of every structure on `C_n` as the image of `omega` over
//! multisubsets of `[n]` with fewer than `n` elements, plus censuses and
//! the cuts that turn cycle structures into path structures.

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::bijections::{omega, Multiset};
use crate::combinatorics::CountTable;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::structure::ArithmeticalStructure;

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::GraphSize { kind: "cycle", n, min: 2 });
    }
    Ok(())
}

/// Every `(multiset, structure)` pair on `C_n`, ordered by multiset size
/// and then lexicographically.
pub fn enumerate_cycles_with_multisets(
    n: usize,
) -> Result<impl Iterator<Item = (Multiset, ArithmeticalStructure)>> {
    check_n(n)?;
    Ok(Multiset::all_up_to(n, n - 1).map(|m| {
        let s = omega(&m).expect("size below n");
        (m, s)
    }))
}

pub fn enumerate_cycles(n: usize) -> Result<impl Iterator<Item = ArithmeticalStructure>> {
    Ok(enumerate_cycles_with_multisets(n)?.map(|(_, s)| s))
}

/// Same list as [`enumerate_cycles_with_multisets`], built in parallel.
pub fn enumerate_cycles_par(n: usize) -> Result<Vec<(Multiset, ArithmeticalStructure)>> {
    check_n(n)?;
    let sets: Vec<Multiset> = Multiset::all_up_to(n, n - 1).collect();
    Ok(sets
        .into_par_iter()
        .map(|m| {
            let s = omega(&m).expect("size below n");
            (m, s)
        })
        .collect())
}

/// Parallel fold of `key(s)` counts; `None` skips the structure.
pub fn census_by<F>(n: usize, key: F) -> Result<CountTable>
where
    F: Fn(&ArithmeticalStructure) -> Option<u64> + Sync,
{
    check_n(n)?;
    let sets: Vec<Multiset> = Multiset::all_up_to(n, n - 1).collect();
    let table = sets
        .par_iter()
        .fold(
            || CountTable::new(n as u64),
            |mut t, m| {
                if let Some(k) = key(&omega(m).expect("size below n")) {
                    t.bump(k);
                }
                t
            },
        )
        .reduce(
            || CountTable::new(n as u64),
            |mut a, b| {
                a.merge(&b);
                a
            },
        );
    Ok(table)
}

pub fn census_by_r1_cycle(n: usize) -> Result<CountTable> {
    census_by(n, |s| Some(s.r_ones() as u64))
}

/// Empirical counts of the values of `d_i`. No closed form is claimed.
pub fn census_by_d_entry_cycle(n: usize, i: usize) -> Result<CountTable> {
    if i < 1 || i > n {
        return Err(Error::Position { pos: i as i64, lo: 1, hi: n as i64 });
    }
    census_by(n, |s| Some(u64::try_from(&s.d()[i - 1]).expect("d entry fits in u64")))
}

/// Number of structures on `C_n` with `d_i = 1`. Smoothing at `i` is a
/// bijection onto the structures on `C_{n-1}`, so this is
/// `binom(2n - 3, n - 2)`.
pub fn census_d_equals_one(n: usize, i: usize) -> Result<BigUint> {
    Ok(census_by_d_entry_cycle(n, i)?.get(1))
}

/// Number of structures on `C_n` with `r_i = 1`. These are the path
/// structures `(1, r_2, .., r_n, 1)` on `P_{n+1}`, so this is `C_n`.
pub fn census_r_equals_one(n: usize, i: usize) -> Result<BigUint> {
    if i < 1 || i > n {
        return Err(Error::Position { pos: i as i64, lo: 1, hi: n as i64 });
    }
    Ok(census_by(n, |s| s.r()[i - 1].is_one().then_some(1))?.get(1))
}

fn check_one(s: &ArithmeticalStructure, j: usize) -> Result<()> {
    let n = s.n();
    if j < 1 || j > n {
        return Err(Error::Position { pos: j as i64, lo: 1, hi: n as i64 });
    }
    if !s.r()[j - 1].is_one() {
        return Err(Error::Precondition(format!("r_{j} = {} is not 1", s.r()[j - 1])));
    }
    Ok(())
}

/// `(r_j, .., r_n, r_1, .., r_j)` on `P_{n+1}`, for `r_j = 1`.
pub fn cut_cycle_at_one(s: &ArithmeticalStructure, j: usize) -> Result<ArithmeticalStructure> {
    s.expect_kind(GraphKind::Cycle)?;
    check_one(s, j)?;
    let n = s.n();
    let r: Vec<BigUint> = (0..=n).map(|k| s.r()[(j - 1 + k) % n].clone()).collect();
    ArithmeticalStructure::from_r(Graph::path(n + 1)?, r)
}

/// For `alpha < beta` with `r_alpha = r_beta = 1`, the segments
/// `(r_alpha, .., r_beta)` and `(r_beta, .., r_n, r_1, .., r_alpha)`.
pub fn cut_cycle_between(
    s: &ArithmeticalStructure,
    alpha: usize,
    beta: usize,
) -> Result<(ArithmeticalStructure, ArithmeticalStructure)> {
    s.expect_kind(GraphKind::Cycle)?;
    check_one(s, alpha)?;
    check_one(s, beta)?;
    if alpha >= beta {
        return Err(Error::Precondition(format!("need alpha < beta, got {alpha} and {beta}")));
    }
    let n = s.n();
    let inner = s.r()[alpha - 1..beta].to_vec();
    let outer: Vec<BigUint> = (0..=n - beta + alpha)
        .map(|k| s.r()[(beta - 1 + k) % n].clone())
        .collect();
    let a = ArithmeticalStructure::from_r(Graph::path(inner.len())?, inner)?;
    let b = ArithmeticalStructure::from_r(Graph::path(outer.len())?, outer)?;
    Ok((a, b))
}
