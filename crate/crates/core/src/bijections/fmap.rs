//! Ballot words and the map `f_n` that rotates the underlying polygon
//! triangulation by one step.

use std::fmt;

use crate::error::{Error, Result};

/// Weakly increasing word `w_1..w_k` with `0 <= w_j <= j`. There are
/// `C_{k+1}` of length `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BallotWord(Vec<usize>);

impl BallotWord {
    pub fn new(w: Vec<usize>) -> Result<Self> {
        for (idx, &x) in w.iter().enumerate() {
            if x > idx + 1 {
                return Err(Error::Word(format!("w_{} = {x} exceeds {}", idx + 1, idx + 1)));
            }
        }
        if let Some(i) = w.windows(2).position(|p| p[0] > p[1]) {
            return Err(Error::Word(format!("decreases at position {}", i + 2)));
        }
        Ok(BallotWord(w))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every ballot word of length `k`, in lexicographic order.
    pub fn all(k: usize) -> impl Iterator<Item = BallotWord> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fill(k, &mut cur, &mut out);
        out.into_iter()
    }
}

fn fill(k: usize, cur: &mut Vec<usize>, out: &mut Vec<BallotWord>) {
    if cur.len() == k {
        out.push(BallotWord(cur.clone()));
        return;
    }
    let lo = cur.last().copied().unwrap_or(0);
    for x in lo..=cur.len() + 1 {
        cur.push(x);
        fill(k, cur, out);
        cur.pop();
    }
}

impl fmt::Display for BallotWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Adds 1 to coordinate `i` modulo `i + 1`, then moves the zeros to the
/// front keeping the nonzero entries in order.
pub fn f_map(w: &BallotWord) -> BallotWord {
    let bumped: Vec<usize> =
        w.0.iter().enumerate().map(|(idx, &x)| (x + 1) % (idx + 2)).collect();
    let zeros = bumped.iter().filter(|&&x| x == 0).count();
    let mut out = vec![0; zeros];
    out.extend(bumped.into_iter().filter(|&x| x != 0));
    BallotWord(out)
}

/// Recursive form: drop the last entry `b_n`, map the prefix, then append
/// `b_n + 1` if `b_n < n` or prepend `0` if `b_n = n`.
pub fn f_map_inductive(w: &BallotWord) -> BallotWord {
    let n = w.len();
    let Some((&last, prefix)) = w.0.split_last() else {
        return BallotWord(Vec::new());
    };
    let mut inner = f_map_inductive(&BallotWord(prefix.to_vec())).0;
    if last < n {
        inner.push(last + 1);
    } else {
        inner.insert(0, 0);
    }
    BallotWord(inner)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(v: &[usize]) -> BallotWord {
        BallotWord::new(v.to_vec()).unwrap()
    }

    #[test]
    fn f1_swaps() {
        assert_eq!(f_map(&bw(&[1])), bw(&[0]));
        assert_eq!(f_map(&bw(&[0])), bw(&[1]));
        assert_eq!(f_map_inductive(&bw(&[1])), bw(&[0]));
        assert_eq!(f_map_inductive(&bw(&[0])), bw(&[1]));
    }

    #[test]
    fn f3_table() {
        let table: [([usize; 3], [usize; 3]); 14] = [
            ([1, 1, 1], [0, 2, 2]),
            ([0, 1, 1], [1, 2, 2]),
            ([0, 0, 1], [1, 1, 2]),
            ([1, 1, 2], [0, 2, 3]),
            ([0, 1, 2], [1, 2, 3]),
            ([0, 0, 2], [1, 1, 3]),
            ([1, 1, 3], [0, 0, 2]),
            ([0, 1, 3], [0, 1, 2]),
            ([0, 0, 3], [0, 1, 1]),
            ([1, 2, 2], [0, 0, 3]),
            ([0, 2, 2], [0, 1, 3]),
            ([0, 0, 0], [1, 1, 1]),
            ([1, 2, 3], [0, 0, 0]),
            ([0, 2, 3], [0, 0, 1]),
        ];
        for (from, to) in table {
            assert_eq!(f_map(&bw(&from)), bw(&to), "explicit {from:?}");
            assert_eq!(f_map_inductive(&bw(&from)), bw(&to), "inductive {from:?}");
        }
    }

    #[test]
    fn word_counts_are_catalan() {
        let counts: Vec<usize> = (0..8).map(|k| BallotWord::all(k).count()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429, 1430]);
    }

    #[test]
    fn invalid_words() {
        assert!(BallotWord::new(vec![2]).is_err());
        assert!(BallotWord::new(vec![1, 0]).is_err());
    }

    #[test]
    fn f2_has_order_five() {
        let start = bw(&[0, 0]);
        let mut w = start.clone();
        for step in 1..=5 {
            w = f_map(&w);
            assert_eq!(w == start, step == 5);
        }
    }
}
