//! Exact integer linear algebra: generalized Laplacians, Smith normal form
//! and critical groups.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::ArithmeticalStructure;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        let mut m = Self::zeros(r, c);
        m.data = rows.into_iter().flatten().collect();
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.data.chunks(self.cols).map(<[BigInt]>::to_vec).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        for j in 0..self.cols {
            let delta = f * &self[(src, j)];
            self[(dst, j)] += delta;
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        for i in 0..self.rows {
            let delta = f * &self[(i, src)];
            self[(i, dst)] += delta;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self[(r, j)]);
            self[(r, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// `diag(d) - A`.
pub fn generalized_laplacian(g: &Graph, d: &[BigUint]) -> Result<IntMatrix> {
    if d.len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), got: d.len() });
    }
    let n = g.n();
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = BigInt::from(d[i].clone());
        for (j, w) in g.neighbors(i) {
            m[(i, j)] = -BigInt::from(w);
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Invariant factors along the diagonal, each dividing the next, zeros
    /// last. Length is `min(rows, cols)`.
    pub diag: Vec<BigInt>,
    /// `(U, V)` with `U * M * V = diag`, when requested.
    pub transforms: Option<(IntMatrix, IntMatrix)>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows, cols);
        for (i, x) in self.diag.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }
}

/// Position of the smallest nonzero |entry| in the block `[t.., t..]`,
/// ties broken by lowest row then column.
fn pivot(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows {
        for j in t..m.cols {
            let v = &m[(i, j)];
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m[(bi, bj)].abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smith normal form; `with_transforms` also records the unimodular
/// `U`, `V` with `U M V = D`.
pub fn smith_normal_form(m: &IntMatrix, with_transforms: bool) -> SmithForm {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut u = with_transforms.then(|| IntMatrix::identity(rows));
    let mut v = with_transforms.then(|| IntMatrix::identity(cols));
    let steps = rows.min(cols);

    for t in 0..steps {
        let Some((pi, pj)) = pivot(&a, t) else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        if let Some(u) = u.as_mut() {
            u.swap_rows(t, pi);
        }
        if let Some(v) = v.as_mut() {
            v.swap_cols(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row(i, t, &q);
                if let Some(u) = u.as_mut() {
                    u.add_row(i, t, &q);
                }
                if !a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col(j, t, &q);
                if let Some(v) = v.as_mut() {
                    v.add_col(j, t, &q);
                }
                if !a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // Row and column cleared; the pivot must divide the rest.
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[(i, j)].is_multiple_of(&a[(t, t)]));
                match bad {
                    None => break,
                    Some((i, _)) => {
                        let one = BigInt::one();
                        a.add_row(t, i, &one);
                        if let Some(u) = u.as_mut() {
                            u.add_row(t, i, &one);
                        }
                    }
                }
            }
            // Move the smallest remaining entry of row/column t to the pivot.
            let (mut bi, mut bj) = (t, t);
            for i in t..rows {
                if !a[(i, t)].is_zero() && a[(i, t)].abs() < a[(bi, bj)].abs() {
                    (bi, bj) = (i, t);
                }
            }
            for j in t..cols {
                if !a[(t, j)].is_zero() && a[(t, j)].abs() < a[(bi, bj)].abs() {
                    (bi, bj) = (t, j);
                }
            }
            a.swap_rows(t, bi);
            a.swap_cols(t, bj);
            if let Some(u) = u.as_mut() {
                u.swap_rows(t, bi);
            }
            if let Some(v) = v.as_mut() {
                v.swap_cols(t, bj);
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
    }

    let diag = (0..steps).map(|i| a[(i, i)].clone()).collect();
    SmithForm { diag, transforms: u.zip(v) }
}

/// Finitely generated abelian group `Z^free_rank + Z_{t_1} + .. + Z_{t_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub free_rank: usize,
    /// Invariant factors greater than 1, each dividing the next.
    pub torsion: Vec<BigUint>,
}

impl AbelianGroup {
    pub fn from_smith(form: &SmithForm, generators: usize) -> Self {
        let torsion = form
            .diag
            .iter()
            .filter(|x| !x.is_zero() && !x.is_one())
            .map(|x| x.magnitude().clone())
            .collect();
        AbelianGroup { free_rank: generators - form.rank(), torsion }
    }

    pub fn order_of_torsion(&self) -> BigUint {
        self.torsion.iter().product()
    }

    pub fn is_torsion_trivial(&self) -> bool {
        self.torsion.is_empty()
    }

    /// `Z_a ⊕ Z_b` for the torsion part, or `trivial`.
    pub fn torsion_string(&self) -> String {
        if self.torsion.is_empty() {
            return "trivial".to_string();
        }
        self.torsion.iter().map(|t| format!("Z_{t}")).collect::<Vec<_>>().join(" ⊕ ")
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z_{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

/// Cokernel of `L(g, d)`; its torsion part is the critical group. Errors
/// unless the rank is `n - 1`.
pub fn cokernel(g: &Graph, d: &[BigUint]) -> Result<AbelianGroup> {
    let l = generalized_laplacian(g, d)?;
    let form = smith_normal_form(&l, false);
    let rank = form.rank();
    if rank + 1 != g.n() {
        return Err(Error::NotArithmetical(format!("rank of L is {rank}, expected {}", g.n() - 1)));
    }
    Ok(AbelianGroup::from_smith(&form, g.n()))
}

/// The critical group `K(g, d)`, reported with `free_rank = 1` for the
/// free part of the cokernel.
pub fn critical_group(g: &Graph, d: &[BigUint]) -> Result<AbelianGroup> {
    cokernel(g, d)
}

pub fn critical_group_of(s: &ArithmeticalStructure) -> AbelianGroup {
    critical_group(s.graph(), s.d()).expect("valid structures have rank n - 1")
}
