//! Subdivision and smoothing on paths and cycles, the rotation actions of
//! `Z_n`, and canonical (reverse-lex first) orbit representatives.
//!
//! Positions are 1-based. Subdividing at position `i` inserts a new vertex
//! that ends up at position `i`, between the old vertices `i-1` and `i`
//! (old vertex `n` for `i = 1` on a cycle).

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::One;

use crate::bijections::Multiset;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::structure::ArithmeticalStructure;

/// Compares equal-length sequences at the largest index where they differ.
pub fn reverse_lex_cmp<T: Ord>(a: &[T], b: &[T]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    a.iter().rev().cmp(b.iter().rev())
}

fn check_pos(pos: usize, lo: usize, hi: usize) -> Result<()> {
    if pos < lo || pos > hi {
        return Err(Error::Position { pos: pos as i64, lo: lo as i64, hi: hi as i64 });
    }
    Ok(())
}

/// Inserts a vertex at 0-based index `at`, between old indices `left` and
/// `right`.
fn insert_vertex(
    d: &[BigUint],
    r: &[BigUint],
    at: usize,
    left: usize,
    right: usize,
) -> (Vec<BigUint>, Vec<BigUint>) {
    let mut d2 = d.to_vec();
    d2[left] += 1u32;
    d2[right] += 1u32;
    d2.insert(at, BigUint::one());
    let mut r2 = r.to_vec();
    r2.insert(at, &r[left] + &r[right]);
    (d2, r2)
}

fn remove_vertex(
    d: &[BigUint],
    r: &[BigUint],
    at: usize,
    left: usize,
    right: usize,
) -> (Vec<BigUint>, Vec<BigUint>) {
    let mut d2 = d.to_vec();
    d2[left] -= 1u32;
    d2[right] -= 1u32;
    d2.remove(at);
    let mut r2 = r.to_vec();
    r2.remove(at);
    (d2, r2)
}

/// Subdivision of a path structure at position `i` in `[2, n]`.
pub fn subdivide_path(s: &ArithmeticalStructure, i: usize) -> Result<ArithmeticalStructure> {
    s.expect_kind(GraphKind::Path)?;
    let n = s.n();
    check_pos(i, 2, n)?;
    let (d, r) = insert_vertex(s.d(), s.r(), i - 1, i - 2, i - 1);
    Ok(ArithmeticalStructure::from_parts_unchecked(Graph::path(n + 1)?, d, r))
}

/// Smoothing of a path structure at an interior position `i` with `d_i = 1`.
pub fn smooth_path(s: &ArithmeticalStructure, i: usize) -> Result<ArithmeticalStructure> {
    s.expect_kind(GraphKind::Path)?;
    let n = s.n();
    if n < 3 {
        return Err(Error::Precondition("smoothing needs at least 3 vertices".into()));
    }
    check_pos(i, 2, n - 1)?;
    let at = i - 1;
    if !s.d()[at].is_one() {
        return Err(Error::Precondition(format!("d_{i} = {} is not 1", s.d()[at])));
    }
    let (d, r) = remove_vertex(s.d(), s.r(), at, at - 1, at + 1);
    Ok(ArithmeticalStructure::from_parts_unchecked(Graph::path(n - 1)?, d, r))
}

/// Subdivision of a cycle structure at position `i` in `[1, n]`; `i = 1`
/// splits the edge between vertex `n` and vertex 1.
pub fn subdivide_cycle(s: &ArithmeticalStructure, i: usize) -> Result<ArithmeticalStructure> {
    s.expect_kind(GraphKind::Cycle)?;
    let n = s.n();
    check_pos(i, 1, n)?;
    let at = i - 1;
    let (d, r) = insert_vertex(s.d(), s.r(), at, (at + n - 1) % n, at % n);
    Ok(ArithmeticalStructure::from_parts_unchecked(Graph::cycle(n + 1)?, d, r))
}

/// Smoothing of a cycle structure at `i` with `d_{i-1} > d_i = 1 < d_{i+1}`
/// (indices mod `n`). `C_3` smooths to `C_2`.
pub fn smooth_cycle(s: &ArithmeticalStructure, i: usize) -> Result<ArithmeticalStructure> {
    s.expect_kind(GraphKind::Cycle)?;
    let n = s.n();
    if n < 3 {
        return Err(Error::Precondition("smoothing needs at least 3 vertices".into()));
    }
    check_pos(i, 1, n)?;
    let at = i - 1;
    let left = (at + n - 1) % n;
    let right = (at + 1) % n;
    let d = s.d();
    if !(d[at].is_one() && d[left] > d[at] && d[right] > d[at]) {
        return Err(Error::Precondition(format!(
            "need d_(i-1) > d_i = 1 < d_(i+1) at i = {i}, got ({}, {}, {})",
            d[left], d[at], d[right]
        )));
    }
    let (d2, r2) = remove_vertex(d, s.r(), at, left, right);
    Ok(ArithmeticalStructure::from_parts_unchecked(Graph::cycle(n - 1)?, d2, r2))
}

/// Dispatches on the graph family.
pub fn subdivide(s: &ArithmeticalStructure, i: usize) -> Result<ArithmeticalStructure> {
    match s.graph().kind() {
        GraphKind::Path => subdivide_path(s, i),
        GraphKind::Cycle => subdivide_cycle(s, i),
        other => Err(Error::WrongFamily { expected: "path or cycle", got: other.name() }),
    }
}

pub fn smooth(s: &ArithmeticalStructure, i: usize) -> Result<ArithmeticalStructure> {
    match s.graph().kind() {
        GraphKind::Path => smooth_path(s, i),
        GraphKind::Cycle => smooth_cycle(s, i),
        other => Err(Error::WrongFamily { expected: "path or cycle", got: other.name() }),
    }
}

fn rotate_left<T: Clone>(v: &[T], c: i64) -> Vec<T> {
    let n = v.len();
    if n == 0 {
        return Vec::new();
    }
    let c = c.rem_euclid(n as i64) as usize;
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&v[c..]);
    out.extend_from_slice(&v[..c]);
    out
}

/// `rho_c(r_1..r_n) = (r_{c+1}, .., r_n, r_1, .., r_c)`, applied to both
/// `d` and `r`. `c` is taken mod `n`.
pub fn rotate_structure(s: &ArithmeticalStructure, c: i64) -> Result<ArithmeticalStructure> {
    s.expect_kind(GraphKind::Cycle)?;
    Ok(ArithmeticalStructure::from_parts_unchecked(
        s.graph().clone(),
        rotate_left(s.d(), c),
        rotate_left(s.r(), c),
    ))
}

/// `phi_c`: adds `c` to every element mod `n`, representatives in `[1, n]`.
pub fn rotate_multiset(s: &Multiset, c: i64) -> Multiset {
    s.rotated(c)
}

/// Canonical orbit element together with the shift that produces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRep<T> {
    pub canonical: T,
    /// `c` in `[0, n)` with `action_c(input) == canonical`; the smallest
    /// such `c` when several shifts tie.
    pub shift: usize,
}

/// Reverse-lex first rotation of a cycle `r`-vector.
pub fn canonical_rotation<T: Ord + Clone>(r: &[T]) -> (Vec<T>, usize) {
    let n = r.len();
    let mut best = r.to_vec();
    let mut shift = 0;
    for c in 1..n {
        let cand = rotate_left(r, c as i64);
        if reverse_lex_cmp(&cand, &best) == Ordering::Less {
            best = cand;
            shift = c;
        }
    }
    (best, shift)
}

/// Reverse-lex first element of the `rho`-orbit of a cycle structure.
pub fn canonical_structure(s: &ArithmeticalStructure) -> Result<OrbitRep<ArithmeticalStructure>> {
    s.expect_kind(GraphKind::Cycle)?;
    let (_, shift) = canonical_rotation(s.r());
    Ok(OrbitRep { canonical: rotate_structure(s, shift as i64)?, shift })
}

/// Reverse-lex first element of the `phi`-orbit of a multiset.
pub fn canonical_multiset(s: &Multiset) -> OrbitRep<Multiset> {
    let mut best = s.clone();
    let mut shift = 0;
    for c in 1..s.n() {
        let cand = s.rotated(c as i64);
        if reverse_lex_cmp(cand.elements(), best.elements()) == Ordering::Less {
            best = cand;
            shift = c;
        }
    }
    OrbitRep { canonical: best, shift }
}
