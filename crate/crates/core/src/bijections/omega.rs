//! The bijection between multisubsets of `[n]` of size below `n` and
//! structures on `C_n`.
//!
//! [`omega`] picks a representative of the multiset's orbit under value
//! rotation, grows its `r`-vector by inserting local maxima, then rotates
//! back. See [`omega_representative`] for which orbit element is used.
//! [`omega_inverse`] canonicalises the `r`-vector under position rotation
//! and peels off the rightmost local maximum until only ones are left.

use num_bigint::BigUint;
use num_traits::One;

use crate::bijections::multiset::Multiset;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::structure::{d_from_r, ArithmeticalStructure};
use crate::transforms::{canonical_rotation, reverse_lex_cmp, OrbitRep};

/// Labels `L[0..]` of the growing cycle; `L[0]` plays the role of the last
/// vertex, so the `r`-vector is `(L[1], .., L[n-1], L[0])`. `None` when
/// the cycle would need more than `n` vertices.
fn grow_labels(canonical: &[usize], n: usize) -> Option<Vec<BigUint>> {
    let mut labels: Vec<BigUint> = Vec::with_capacity(n + 1);
    labels.push(BigUint::one());
    for &s in canonical {
        let len = labels.len();
        if len < s {
            labels.resize(s, BigUint::one());
            labels.push(BigUint::from(2u32));
        } else if len == s {
            let v = &labels[s - 1] + 1u32;
            labels.push(v);
        } else {
            let v = &labels[s] + &labels[s - 1];
            labels.insert(s, v);
        }
        if labels.len() > n {
            return None;
        }
    }
    labels.resize(n, BigUint::one());
    labels.rotate_left(1);
    Some(labels)
}

/// The `r`-vector produced from an already canonical multiset, before
/// rotating back. Exposed for the worked examples.
pub fn omega_canonical_r(canonical: &Multiset) -> Option<Vec<BigUint>> {
    grow_labels(canonical.elements(), canonical.n())
}

/// The orbit element the construction starts from: the first in
/// reverse-lex order among those whose growth fits in `n` vertices and
/// yields a vector that is itself reverse-lex first among its rotations.
/// Ties go to the smallest shift. Returns it with its labels.
pub fn omega_representative(s: &Multiset) -> (OrbitRep<Multiset>, Vec<BigUint>) {
    let mut orbit: Vec<(Multiset, usize)> = (0..s.n()).map(|c| (s.rotated(c as i64), c)).collect();
    orbit.sort_by(|a, b| reverse_lex_cmp(a.0.elements(), b.0.elements()).then(a.1.cmp(&b.1)));
    for (m, shift) in orbit {
        if let Some(r) = grow_labels(m.elements(), m.n()) {
            if canonical_rotation(&r).0 == r {
                return (OrbitRep { canonical: m, shift }, r);
            }
        }
    }
    unreachable!("some rotation of a multiset of size below n fits")
}

/// Structure on `C_n` with `r(1) = n - |S|`.
pub fn omega(s: &Multiset) -> Result<ArithmeticalStructure> {
    let n = s.n();
    if n < 2 {
        return Err(Error::Multiset("cycles need n >= 2".into()));
    }
    if s.len() >= n {
        return Err(Error::Multiset(format!("size {} must be below n = {n}", s.len())));
    }
    let (rep, mut r) = omega_representative(s);
    // rho_{-c}
    r.rotate_right(rep.shift);
    let g = Graph::cycle(n)?;
    let d = d_from_r(&g, &r)?;
    Ok(ArithmeticalStructure::from_parts_unchecked(g, d, r))
}

fn is_local_max(r: &[BigUint], j: usize) -> bool {
    let n = r.len();
    let prev = &r[(j + n - 1) % n];
    let next = &r[(j + 1) % n];
    r[j] == prev + next
}

/// Recovers the multiset with `omega(S) = s`.
pub fn omega_inverse(s: &ArithmeticalStructure) -> Result<Multiset> {
    s.expect_kind(GraphKind::Cycle)?;
    let n = s.n();
    let (mut r, shift) = canonical_rotation(s.r());
    let mut picked = Vec::with_capacity(n);
    while r.len() > 1 && !r.iter().all(One::is_one) {
        // The last entry of a canonical vector is 1, never a local maximum.
        let Some(j) = (0..r.len() - 1).rev().find(|&j| is_local_max(&r, j)) else {
            return Err(Error::Precondition("no local maximum in a non-constant r".into()));
        };
        picked.push(j + 1);
        r.remove(j);
    }
    let canonical = Multiset::new(n, picked)?;
    Ok(canonical.rotated(-(shift as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::to_big;
    use crate::transforms::rotate_structure;

    fn ms(n: usize, v: &[usize]) -> Multiset {
        Multiset::new(n, v.to_vec()).unwrap()
    }

    #[test]
    fn empty_multiset_is_laplacian() {
        for n in 2..7 {
            let s = omega(&Multiset::empty(n)).unwrap();
            assert_eq!(s, ArithmeticalStructure::laplacian(Graph::cycle(n).unwrap()));
            assert!(omega_inverse(&s).unwrap().is_empty());
        }
    }

    #[test]
    fn worked_examples() {
        assert_eq!(omega_canonical_r(&ms(6, &[1, 1, 3, 5])).unwrap(), to_big(&[3, 2, 3, 1, 2, 1]));
        assert_eq!(omega_canonical_r(&ms(6, &[1, 1, 4, 4])).unwrap(), to_big(&[3, 2, 1, 3, 2, 1]));
        for m in [ms(6, &[1, 1, 3, 5]), ms(6, &[1, 1, 4, 4])] {
            let s = omega(&m).unwrap();
            assert_eq!(s.r_ones(), 2);
            assert_eq!(omega_inverse(&s).unwrap(), m);
        }
    }

    #[test]
    fn c2_structures() {
        let all: Vec<_> = [ms(2, &[]), ms(2, &[1]), ms(2, &[2])]
            .iter()
            .map(|m| omega(m).unwrap())
            .collect();
        assert_eq!(all[0].d_u64(), vec![2, 2]);
        assert_eq!((all[1].d_u64(), all[1].r_u64().unwrap()), (vec![1, 4], vec![2, 1]));
        assert_eq!((all[2].d_u64(), all[2].r_u64().unwrap()), (vec![4, 1], vec![1, 2]));
    }

    #[test]
    fn singletons_place_a_two() {
        let n = 6;
        for a in 1..=n {
            let s = omega(&ms(n, &[a])).unwrap();
            let r = s.r_u64().unwrap();
            // r_{n - a + 2 mod n} = 2, all else 1
            let pos = (n + 1 - a) % n;
            for (i, &x) in r.iter().enumerate() {
                assert_eq!(x, if i == pos { 2 } else { 1 }, "a={a} r={r:?}");
            }
        }
    }

    #[test]
    fn size_errors() {
        assert!(omega(&ms(3, &[1, 2, 3])).is_err());
    }

    #[test]
    fn equivariance_small() {
        let n = 5;
        for m in Multiset::all_up_to(n, n - 1) {
            let base = omega(&m).unwrap();
            for t in 0..n as i64 {
                assert_eq!(omega(&m.rotated(t)).unwrap(), rotate_structure(&base, t).unwrap());
            }
        }
    }
}
