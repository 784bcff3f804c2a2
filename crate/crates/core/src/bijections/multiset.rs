use std::fmt;

use crate::error::{Error, Result};

/// A multisubset of `[n] = {1, .., n}`, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset {
    n: usize,
    elems: Vec<usize>,
}

impl Multiset {
    pub fn new(n: usize, mut elems: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Multiset("ground set [n] needs n >= 1".into()));
        }
        if let Some(&bad) = elems.iter().find(|&&x| x == 0 || x > n) {
            return Err(Error::Multiset(format!("element {bad} outside [1, {n}]")));
        }
        elems.sort_unstable();
        Ok(Multiset { n, elems })
    }

    pub fn empty(n: usize) -> Self {
        Multiset { n, elems: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Sorted elements.
    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    /// `phi_c`: adds `c` to every element mod `n`.
    pub fn rotated(&self, c: i64) -> Multiset {
        let n = self.n as i64;
        let mut elems: Vec<usize> = self
            .elems
            .iter()
            .map(|&a| ((a as i64 - 1 + c).rem_euclid(n) + 1) as usize)
            .collect();
        elems.sort_unstable();
        Multiset { n: self.n, elems }
    }

    /// All multisubsets of `[n]` of size `len`, in lexicographic order.
    pub fn all_of_size(n: usize, len: usize) -> MultisetIter {
        MultisetIter { n, current: if n == 0 && len > 0 { None } else { Some(vec![1; len]) } }
    }

    /// All multisubsets of size at most `max_len`, by size then lex order.
    pub fn all_up_to(n: usize, max_len: usize) -> impl Iterator<Item = Multiset> {
        (0..=max_len).flat_map(move |l| Multiset::all_of_size(n, l))
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elems.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Lexicographic walk over weakly increasing sequences in `[1, n]`.
pub struct MultisetIter {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for MultisetIter {
    type Item = Multiset;

    fn next(&mut self) -> Option<Multiset> {
        let cur = self.current.take()?;
        let out = Multiset { n: self.n, elems: cur.clone() };
        let mut next = cur;
        if let Some(pos) = next.iter().rposition(|&x| x < self.n) {
            let v = next[pos] + 1;
            for x in next[pos..].iter_mut() {
                *x = v;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}
