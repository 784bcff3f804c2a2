//! Closed-form counts: binomials, Catalan and ballot numbers, and the
//! refined totals for paths and cycles.
//!
//! Everything is exact. The ballot prefactor `(k-l+1)/(k+1)` is applied
//! after the binomial so the division is always exact.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Catalan number `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Ballot number `B(k, l)`: lattice paths from `(0,0)` to `(k,l)` that
/// never go above `y = x`. Zero when `l > k`.
pub fn ballot(k: u64, l: u64) -> BigUint {
    if l > k {
        return BigUint::zero();
    }
    binomial(k + l, k) * (k - l + 1) / (k + 1)
}

/// Number of multisubsets of `[n]` with `l` elements.
pub fn multiset_coefficient(n: u64, l: u64) -> BigUint {
    if n == 0 {
        return if l == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binomial(n + l - 1, l)
}

/// `A(n, k)`: structures on `P_n` with exactly `k` entries `r_i = 1`.
pub fn path_count_refined(n: u64, k: u64) -> BigUint {
    assert!(n >= 2, "path_count_refined needs n >= 2");
    if k == 0 || k > n {
        return BigUint::zero();
    }
    ballot(n - 2, n - k)
}

/// Structures on `C_n` with exactly `k` entries `r_i = 1`:
/// `binom(2n - k - 1, n - k)`.
pub fn cycle_count_refined(n: u64, k: u64) -> BigUint {
    assert!(n >= 2, "cycle_count_refined needs n >= 2");
    if k == 0 || k > n {
        return BigUint::zero();
    }
    binomial(2 * n - k - 1, n - k)
}

/// `|Arith(P_n)| = C_{n-1}`.
pub fn path_total(n: u64) -> BigUint {
    catalan(n - 1)
}

/// `|Arith(C_n)| = binom(2n - 1, n - 1)`.
pub fn cycle_total(n: u64) -> BigUint {
    binomial(2 * n - 1, n - 1)
}

/// Structures on `P_n` whose `d` entries sum to `target`:
/// `B(n-2, target-2n+2)`, supported on `[2n-2, 3n-4]`.
pub fn dsum_census_closed(n: u64, target: u64) -> BigUint {
    assert!(n >= 2, "dsum_census_closed needs n >= 2");
    if target < 2 * n - 2 {
        return BigUint::zero();
    }
    ballot(n - 2, target - (2 * n - 2))
}

/// Structures on `P_{n+2}` with two entries `r_i = 1` and exactly `k`
/// entries `d_i = 1`: `binom(n-1, 2k-2) 2^(n+1-2k) C_{k-1}`.
pub fn aigner_schulze_count(n: u64, k: u64) -> BigUint {
    assert!(n >= 1 && k >= 1, "aigner_schulze_count needs n, k >= 1");
    if 2 * k - 2 > n - 1 {
        return BigUint::zero();
    }
    binomial(n - 1, 2 * k - 2) * (BigUint::one() << (n + 1 - 2 * k)) * catalan(k - 1)
}

/// Counts keyed by a refinement parameter (an `r(1)` value, a `d`-sum or a
/// `d_i` value).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CountTable {
    pub n: u64,
    pub rows: BTreeMap<u64, BigUint>,
}

impl CountTable {
    pub fn new(n: u64) -> Self {
        CountTable { n, rows: BTreeMap::new() }
    }

    pub fn add(&mut self, key: u64, count: impl Into<BigUint>) {
        *self.rows.entry(key).or_default() += count.into();
    }

    pub fn bump(&mut self, key: u64) {
        self.add(key, 1u32);
    }

    pub fn get(&self, key: u64) -> BigUint {
        self.rows.get(&key).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.rows.values().sum()
    }

    /// Merges another table for the same `n`.
    pub fn merge(&mut self, other: &CountTable) {
        for (k, v) in &other.rows {
            self.add(*k, v.clone());
        }
    }

    /// Drops keys whose count is zero.
    pub fn nonzero(mut self) -> Self {
        self.rows.retain(|_, v| !v.is_zero());
        self
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,key,count\n");
        for (k, v) in &self.rows {
            out.push_str(&format!("{},{},{}\n", self.n, k, v));
        }
        out
    }

    /// Closed-form table of `A(n, k)` for `k = 1..=n`.
    pub fn path_by_r1(n: u64) -> Self {
        let mut t = CountTable::new(n);
        for k in 1..=n {
            t.add(k, path_count_refined(n, k));
        }
        t
    }

    pub fn cycle_by_r1(n: u64) -> Self {
        let mut t = CountTable::new(n);
        for k in 1..=n {
            t.add(k, cycle_count_refined(n, k));
        }
        t
    }

    pub fn path_by_dsum(n: u64) -> Self {
        let mut t = CountTable::new(n);
        for s in (2 * n - 2)..=(3 * n - 2) {
            t.add(s, dsum_census_closed(n, s));
        }
        t.nonzero()
    }

    /// Count of `d_i = v` on `P_n` (any `i`): `B(n-2, n-v-1)`.
    pub fn path_by_d_entry(n: u64) -> Self {
        let mut t = CountTable::new(n);
        for v in 1..n {
            t.add(v, ballot(n - 2, n - v - 1));
        }
        t
    }

    pub fn path_by_d_ones_with_two_r_ones(n: u64) -> Self {
        // aigner_schulze_count indexes by interior length n - 2.
        let mut t = CountTable::new(n);
        if n >= 3 {
            for k in 1..=n {
                t.add(k, aigner_schulze_count(n - 2, k));
            }
        }
        t.nonzero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Lattice paths from (0,0) to (k,l) staying weakly below y = x,
    /// counted by dynamic programming over grid points.
    fn ballot_by_grid(k: usize, l: usize) -> u64 {
        let mut ways = vec![vec![0u64; l + 1]; k + 1];
        ways[0][0] = 1;
        for x in 0..=k {
            for y in 0..=l {
                if y > x || (x, y) == (0, 0) {
                    continue;
                }
                let from_west = if x > 0 { ways[x - 1][y] } else { 0 };
                let from_south = if y > 0 { ways[x][y - 1] } else { 0 };
                ways[x][y] = from_west + from_south;
            }
        }
        ways[k][l]
    }

    fn pascal(n: usize) -> Vec<Vec<u64>> {
        let mut t = vec![vec![0u64; n + 1]; n + 1];
        for i in 0..=n {
            t[i][0] = 1;
            for j in 1..=i {
                t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
            }
        }
        t
    }

    #[test]
    fn binomial_matches_pascal() {
        let t = pascal(40);
        for n in 0..=40u64 {
            for k in 0..=n + 2 {
                let expect = if k <= n { t[n as usize][k as usize] } else { 0 };
                assert_eq!(binomial(n, k), BigUint::from(expect), "binom({n},{k})");
            }
        }
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), BigUint::from(1u32));
        assert_eq!(catalan(3), BigUint::from(5u32));
        assert_eq!(catalan(4), BigUint::from(14u32));
        assert_eq!(catalan(13), BigUint::from(742_900u32));
    }

    #[test]
    fn ballot_matches_grid_oracle() {
        for k in 0..12 {
            for l in 0..12 {
                assert_eq!(
                    ballot(k as u64, l as u64),
                    BigUint::from(ballot_by_grid(k, l)),
                    "B({k},{l})"
                );
            }
        }
        assert_eq!(ballot(2, 2), BigUint::from(2u32));
        assert_eq!(ballot(3, 2), BigUint::from(5u32));
        assert_eq!(ballot(7, 0), BigUint::from(1u32));
        assert_eq!(ballot(3, 4), BigUint::zero());
    }

    #[test]
    fn path_refined_examples_and_closed_form() {
        assert_eq!(path_count_refined(4, 2), BigUint::from(2u32));
        assert_eq!(path_count_refined(4, 4), BigUint::from(1u32));
        for n in 2..20u64 {
            assert!(path_count_refined(n, 1).is_zero());
            for k in 2..=n {
                // ((k-1)/(n-1)) binom(2n-2-k, n-2)
                let alt = binomial(2 * n - 2 - k, n - 2) * (k - 1) / (n - 1);
                assert_eq!(path_count_refined(n, k), alt);
            }
        }
    }

    #[test]
    fn path_row_sums_are_catalan() {
        for n in 2..30u64 {
            assert_eq!(CountTable::path_by_r1(n).total(), catalan(n - 1));
        }
    }

    #[test]
    fn cycle_refined_examples_and_row_sums() {
        assert_eq!(cycle_count_refined(2, 2), BigUint::from(1u32));
        assert_eq!(cycle_count_refined(2, 1), BigUint::from(2u32));
        assert_eq!(cycle_count_refined(3, 1), BigUint::from(6u32));
        for n in 2..30u64 {
            assert_eq!(cycle_count_refined(n, n), BigUint::one());
            assert_eq!(CountTable::cycle_by_r1(n).total(), cycle_total(n));
            assert_eq!(cycle_count_refined(n, 1), catalan(n - 1) * n);
        }
        assert_eq!(cycle_total(12), BigUint::from(1_352_078u32));
    }

    #[test]
    fn carlitz_convolution() {
        for n in 3..25u64 {
            for k in 2..n {
                let sum: BigUint = (2..=n - k + 1)
                    .map(|m| path_count_refined(m, 2) * path_count_refined(n - m + 1, k))
                    .sum();
                assert_eq!(path_count_refined(n, k + 1), sum, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn lattice_identity() {
        for n in 2..25u64 {
            for k in 2..=n {
                let sum: BigUint = (0..=n - k)
                    .map(|z| catalan(z) * (z + 1) * path_count_refined(n - z, k))
                    .sum();
                assert_eq!(binomial(2 * n - k - 1, n - k), sum, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn dsum_census_examples() {
        assert_eq!(dsum_census_closed(4, 6), BigUint::from(1u32));
        assert_eq!(dsum_census_closed(4, 7), BigUint::from(2u32));
        assert_eq!(dsum_census_closed(4, 9), BigUint::zero());
        assert_eq!(dsum_census_closed(4, 5), BigUint::zero());
        for n in 2..20u64 {
            let t = CountTable::path_by_dsum(n);
            assert_eq!(*t.rows.keys().next().unwrap(), 2 * n - 2);
            assert_eq!(*t.rows.keys().last().unwrap(), 3 * n - 4);
            assert_eq!(t.total(), catalan(n - 1));
        }
    }

    #[test]
    fn aigner_schulze_examples() {
        assert_eq!(aigner_schulze_count(1, 1), BigUint::from(1u32));
        assert_eq!(aigner_schulze_count(3, 1), BigUint::from(4u32));
        assert_eq!(aigner_schulze_count(2, 2), BigUint::zero());
        // Summing over k gives all structures on P_{n+2} with r(1) = 2.
        for n in 1..20u64 {
            let total: BigUint = (1..=n).map(|k| aigner_schulze_count(n, k)).sum();
            assert_eq!(total, catalan(n), "n={n}");
        }
    }

    #[test]
    fn d_entry_table_sums_to_catalan() {
        for n in 2..20u64 {
            assert_eq!(CountTable::path_by_d_entry(n).total(), catalan(n - 1));
        }
    }

    #[test]
    fn csv_header() {
        let csv = CountTable::cycle_by_r1(2).to_csv();
        assert_eq!(csv, "n,key,count\n2,1,2\n2,2,1\n");
    }
}
