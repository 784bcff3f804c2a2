//! Brute-force searches that do not share code with the enumerators.
//!
//! Path entries are bounded by the Fibonacci number `F_n` (`F_1 = F_2 = 1`):
//! every path structure comes from the all-ones vector by subdivisions, and
//! each subdivision inserts the sum of two adjacent entries, so after
//! growing from `P_2` to `P_n` no entry exceeds `F_n`.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::ArithmeticalStructure;

/// `F_n` with `F_1 = F_2 = 1`.
pub fn fibonacci(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a.checked_add(b).expect("Fibonacci overflow"));
    }
    a
}

fn extend(r: &mut Vec<u64>, n: usize, bound: u64, out: &mut Vec<Vec<u64>>) {
    let len = r.len();
    if len == n {
        if r[n - 1] == 1 {
            out.push(r.clone());
        }
        return;
    }
    let (prev, cur) = (r[len - 2], r[len - 1]);
    // r_{i+1} = k r_i - r_{i-1} >= 1
    let mut k = prev / cur + 1;
    loop {
        let next = k * cur - prev;
        if next > bound {
            break;
        }
        r.push(next);
        extend(r, n, bound, out);
        r.pop();
        k += 1;
    }
}

/// All `r` on `P_n` with every entry at most `bound`.
pub fn brute_force_path_bounded(n: usize, bound: u64) -> Result<BTreeSet<Vec<u64>>> {
    if n < 2 {
        return Err(Error::GraphSize { kind: "path", n, min: 2 });
    }
    let found: Vec<Vec<u64>> = (1..=bound)
        .into_par_iter()
        .flat_map_iter(|r2| {
            let mut out = Vec::new();
            let mut r = vec![1, r2];
            if n == 2 {
                if r2 == 1 {
                    out.push(r);
                }
            } else {
                extend(&mut r, n, bound, &mut out);
            }
            out
        })
        .collect();
    Ok(found.into_iter().collect())
}

/// All `r` on `P_n`: `r_1 = r_n = 1` and `r_i | r_{i-1} + r_{i+1}`.
pub fn brute_force_path(n: usize) -> Result<BTreeSet<Vec<u64>>> {
    brute_force_path_bounded(n, fibonacci(n))
}

fn cyclic_ok(r: &[u64]) -> bool {
    let n = r.len();
    (0..n).all(|i| (r[(i + n - 1) % n] + r[(i + 1) % n]).is_multiple_of(r[i]))
}

/// All `r` on `C_n`, from sequences on `P_{n+1}` cut at a 1, with entries
/// up to `bound`.
pub fn brute_force_cycle_bounded(n: usize, bound: u64) -> Result<BTreeSet<Vec<u64>>> {
    if n < 2 {
        return Err(Error::GraphSize { kind: "cycle", n, min: 2 });
    }
    let mut out = BTreeSet::new();
    for seq in brute_force_path_bounded(n + 1, bound)? {
        let r = &seq[..n];
        if !cyclic_ok(r) {
            continue;
        }
        for c in 0..n {
            let mut rot = r.to_vec();
            rot.rotate_left(c);
            out.insert(rot);
        }
    }
    Ok(out)
}

pub fn brute_force_cycle(n: usize) -> Result<BTreeSet<Vec<u64>>> {
    brute_force_cycle_bounded(n, fibonacci(n + 1))
}

/// Result of a bounded search on an arbitrary graph. It is never claimed
/// to be complete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralSearch {
    pub vectors: BTreeSet<Vec<u64>>,
    pub possibly_incomplete: bool,
}

/// Every primitive `r` in `[1, r_max]^n` with `r_i | sum_j a_ij r_j`.
/// Fails if `r_max^n` exceeds `budget`.
pub fn brute_force_general(g: &Graph, r_max: u64, budget: u128) -> Result<GeneralSearch> {
    let n = g.n();
    let space = (r_max as u128).checked_pow(n as u32);
    if r_max == 0 || space.is_none_or(|s| s > budget) {
        return Err(Error::Budget(format!("{r_max}^{n} candidates, budget {budget}")));
    }
    let adj = g.adjacency_matrix();
    let ok = |r: &[u64]| {
        (0..n).all(|i| {
            let s: u64 = (0..n).map(|j| u64::from(adj[i][j]) * r[j]).sum();
            s.is_multiple_of(r[i])
        }) && r.iter().fold(0u64, |a, &b| a.gcd(&b)) == 1
    };
    let mut vectors = BTreeSet::new();
    let mut r = vec![1u64; n];
    loop {
        if ok(&r) {
            vectors.insert(r.clone());
        }
        let Some(k) = (0..n).rev().find(|&k| r[k] < r_max) else { break };
        r[k] += 1;
        r[k + 1..].iter_mut().for_each(|x| *x = 1);
    }
    Ok(GeneralSearch { vectors, possibly_incomplete: true })
}

/// `(d_0; d_1, .., d_n)` with `d_0 = sum 1/d_i`: a structure on the star
/// with `n` leaves, centre first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarSolution {
    pub d0: BigUint,
    pub leaves: Vec<BigUint>,
}

impl StarSolution {
    /// `r_centre = lcm(d_i)`, `r_leaf_i = r_centre / d_i`, then divided by
    /// the gcd.
    pub fn to_structure(&self) -> Result<ArithmeticalStructure> {
        let centre = self.leaves.iter().fold(BigUint::one(), |a, b| a.lcm(b));
        let mut r = vec![centre.clone()];
        r.extend(self.leaves.iter().map(|d| &centre / d));
        let g = r.iter().fold(BigUint::zero(), |a, b| a.gcd(b));
        let r: Vec<BigUint> = r.into_iter().map(|x| x / &g).collect();
        let mut d = vec![self.d0.clone()];
        d.extend(self.leaves.iter().cloned());
        ArithmeticalStructure::validate(Graph::star(self.leaves.len())?, d, r)
    }
}

struct StarSearch {
    cap: u64,
    nodes: u64,
    found: Vec<Vec<BigUint>>,
}

impl StarSearch {
    /// Nondecreasing `d_i >= lo` with `sum 1/d_i = target` over `left` terms.
    fn dfs(&mut self, target: &BigRational, left: usize, lo: &BigUint, acc: &mut Vec<BigUint>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::Budget(format!("star search exceeded {} nodes", self.cap)));
        }
        if left == 1 {
            // the last term must be exactly 1/d
            if target.numer().is_one() {
                let d = target.denom().to_biguint().expect("positive");
                if &d >= lo {
                    acc.push(d);
                    self.found.push(acc.clone());
                    acc.pop();
                }
            }
            return Ok(());
        }
        // 1/d <= target and left/d >= target
        let floor_recip = (target.recip()).ceil().to_integer().to_biguint().expect("positive");
        let start = floor_recip.max(lo.clone());
        let stop = (BigRational::from_integer(BigInt::from(left)) / target)
            .floor()
            .to_integer()
            .to_biguint()
            .expect("positive");
        let mut d = start;
        while d <= stop {
            let rest = target - BigRational::new(BigInt::one(), BigInt::from(d.clone()));
            if rest > BigRational::zero() {
                acc.push(d.clone());
                self.dfs(&rest, left - 1, &d, acc)?;
                acc.pop();
            }
            d += 1u32;
        }
        Ok(())
    }
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { return false };
    let j = (i..v.len()).rev().find(|&j| v[i - 1] < v[j]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Sorted (unordered) solutions of `d_0 = sum 1/d_i`.
pub fn star_solutions_sorted(n: usize, cap: u64) -> Result<Vec<StarSolution>> {
    if n < 1 {
        return Err(Error::GraphSize { kind: "star", n, min: 1 });
    }
    let mut search = StarSearch { cap, nodes: 0, found: Vec::new() };
    for d0 in 1..=n {
        let target = BigRational::from_integer(BigInt::from(d0));
        search.dfs(&target, n, &BigUint::one(), &mut Vec::new())?;
    }
    let mut out: Vec<StarSolution> = search
        .found
        .into_iter()
        .map(|leaves| {
            let d0 = leaves
                .iter()
                .map(|d| BigRational::new(BigInt::one(), BigInt::from(d.clone())))
                .sum::<BigRational>()
                .to_integer()
                .to_biguint()
                .expect("positive");
            StarSolution { d0, leaves }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Every ordered solution `(d_0; d_1, .., d_n)`, sorted.
pub fn star_structures(n: usize, cap: u64) -> Result<Vec<StarSolution>> {
    let mut out = Vec::new();
    for sol in star_solutions_sorted(n, cap)? {
        let mut leaves = sol.leaves.clone();
        loop {
            out.push(StarSolution { d0: sol.d0.clone(), leaves: leaves.clone() });
            if !next_permutation(&mut leaves) {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `d` as `u64`s, centre first.
pub fn star_solution_u64(s: &StarSolution) -> Vec<u64> {
    std::iter::once(&s.d0).chain(&s.leaves).map(|x| x.to_u64().expect("small")).collect()
}
