//! Arithmetical structures `(d, r)` with `(diag(d) - A) r = 0`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArithmeticalStructure {
    graph: Graph,
    d: Vec<BigUint>,
    r: Vec<BigUint>,
}

fn neighbor_sum(g: &Graph, r: &[BigUint], i: usize) -> BigUint {
    let mut sum = BigUint::zero();
    for (j, w) in g.neighbors(i) {
        if w == 1 {
            sum += &r[j];
        } else {
            sum += &r[j] * w;
        }
    }
    sum
}

fn check_lengths(g: &Graph, len: usize) -> Result<()> {
    if len != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), got: len });
    }
    Ok(())
}

fn check_positive(v: &[BigUint], name: &'static str) -> Result<()> {
    match v.iter().position(Zero::is_zero) {
        Some(i) => Err(Error::NonPositive { vector: name, index: i + 1 }),
        None => Ok(()),
    }
}

fn gcd_all(r: &[BigUint]) -> BigUint {
    let mut g = BigUint::zero();
    for x in r {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    g
}

impl ArithmeticalStructure {
    /// Checks the defining identity row by row (lowest failing row is
    /// reported), then positivity and primitivity of `r`.
    pub fn validate(graph: Graph, d: Vec<BigUint>, r: Vec<BigUint>) -> Result<Self> {
        check_lengths(&graph, d.len())?;
        check_lengths(&graph, r.len())?;
        check_positive(&d, "d")?;
        check_positive(&r, "r")?;
        for i in 0..graph.n() {
            let lhs = &d[i] * &r[i];
            let rhs = neighbor_sum(&graph, &r, i);
            if lhs != rhs {
                return Err(Error::RowIdentity {
                    row: i + 1,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
        let g = gcd_all(&r);
        if !g.is_one() {
            return Err(Error::NotPrimitive(g.to_string()));
        }
        Ok(ArithmeticalStructure { graph, d, r })
    }

    /// Convenience wrapper over [`validate`](Self::validate) for small literals.
    pub fn from_u64(graph: Graph, d: &[u64], r: &[u64]) -> Result<Self> {
        Self::validate(graph, to_big(d), to_big(r))
    }

    /// Recovers `d_i = (sum_j A_ij r_j) / r_i` and validates the result.
    pub fn from_r(graph: Graph, r: Vec<BigUint>) -> Result<Self> {
        let d = d_from_r(&graph, &r)?;
        Self::validate(graph, d, r)
    }

    pub fn from_r_u64(graph: Graph, r: &[u64]) -> Result<Self> {
        Self::from_r(graph, to_big(r))
    }

    /// Recovers the primitive positive kernel vector of `diag(d) - A`.
    pub fn from_d(graph: Graph, d: Vec<BigUint>) -> Result<Self> {
        let r = r_from_d(&graph, &d)?;
        Self::validate(graph, d, r)
    }

    pub fn from_d_u64(graph: Graph, d: &[u64]) -> Result<Self> {
        Self::from_d(graph, to_big(d))
    }

    /// Caller guarantees the identity holds; checked in debug builds.
    pub(crate) fn from_parts_unchecked(graph: Graph, d: Vec<BigUint>, r: Vec<BigUint>) -> Self {
        debug_assert!(
            Self::validate(graph.clone(), d.clone(), r.clone()).is_ok(),
            "invalid structure on {graph}: d={d:?} r={r:?}"
        );
        ArithmeticalStructure { graph, d, r }
    }

    /// The Laplacian structure: `d` = degrees, `r` = all ones.
    pub fn laplacian(graph: Graph) -> Self {
        let n = graph.n();
        let d = (0..n).map(|i| BigUint::from(graph.degree(i))).collect();
        let r = vec![BigUint::one(); n];
        Self::from_parts_unchecked(graph, d, r)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn d(&self) -> &[BigUint] {
        &self.d
    }

    pub fn r(&self) -> &[BigUint] {
        &self.r
    }

    pub fn into_parts(self) -> (Graph, Vec<BigUint>, Vec<BigUint>) {
        (self.graph, self.d, self.r)
    }

    /// Number of entries of `r` equal to 1.
    pub fn r_ones(&self) -> usize {
        self.r.iter().filter(|x| x.is_one()).count()
    }

    /// Number of entries of `d` equal to 1.
    pub fn d_ones(&self) -> usize {
        self.d.iter().filter(|x| x.is_one()).count()
    }

    pub fn d_sum(&self) -> BigUint {
        self.d.iter().sum()
    }

    /// `d` as machine integers; entries of valid path and cycle structures
    /// are bounded by the vertex count so this never fails for them.
    pub fn d_u64(&self) -> Vec<u64> {
        self.d.iter().map(|x| x.to_u64().expect("d entry exceeds u64")).collect()
    }

    pub fn r_u64(&self) -> Option<Vec<u64>> {
        self.r.iter().map(ToPrimitive::to_u64).collect()
    }

    pub(crate) fn expect_kind(&self, kind: GraphKind) -> Result<()> {
        if self.graph.kind() != kind {
            return Err(Error::WrongFamily { expected: kind.name(), got: self.graph.kind().name() });
        }
        Ok(())
    }
}

impl fmt::Display for ArithmeticalStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: d=({}) r=({})", self.graph, join(&self.d), join(&self.r))
    }
}

fn join(v: &[BigUint]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn to_big(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

/// `d_i = (sum_j A_ij r_j) / r_i`, failing at the lowest row where `r_i`
/// does not divide the neighbour sum.
pub fn d_from_r(g: &Graph, r: &[BigUint]) -> Result<Vec<BigUint>> {
    check_lengths(g, r.len())?;
    check_positive(r, "r")?;
    let mut d = Vec::with_capacity(r.len());
    for i in 0..g.n() {
        let sum = neighbor_sum(g, r, i);
        let (q, rem) = sum.div_rem(&r[i]);
        if !rem.is_zero() {
            return Err(Error::Divisibility {
                row: i + 1,
                value: r[i].to_string(),
                sum: sum.to_string(),
            });
        }
        if q.is_zero() {
            return Err(Error::NonPositive { vector: "d", index: i + 1 });
        }
        d.push(q);
    }
    Ok(d)
}

/// Primitive positive generator of `ker(diag(d) - A)`.
///
/// Errors when the kernel is not one-dimensional or has no positive
/// generator.
pub fn r_from_d(g: &Graph, d: &[BigUint]) -> Result<Vec<BigUint>> {
    check_lengths(g, d.len())?;
    check_positive(d, "d")?;
    let n = g.n();
    if g.kind() == GraphKind::Path {
        return r_from_d_path(d);
    }
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = if i == j {
                        BigInt::from(d[i].clone())
                    } else {
                        -BigInt::from(g.weight(i, j))
                    };
                    BigRational::from_integer(v)
                })
                .collect()
        })
        .collect();

    // Reduced row echelon form over Q.
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..n {
                    let delta = &f * &m[row][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if pivots.len() + 1 != n {
        return Err(Error::NotArithmetical(format!(
            "rank of L is {}, expected {}",
            pivots.len(),
            n - 1
        )));
    }
    let free = (0..n).find(|c| !pivots.contains(c)).expect("one free column");
    let mut kernel = vec![BigRational::zero(); n];
    kernel[free] = BigRational::one();
    for (r_idx, &pc) in pivots.iter().enumerate() {
        kernel[pc] = -m[r_idx][free].clone();
    }
    let lcm = kernel.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = kernel.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g0 = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    for x in ints.iter_mut() {
        *x /= &g0;
    }
    if ints.iter().all(Signed::is_negative) {
        for x in ints.iter_mut() {
            *x = -x.clone();
        }
    }
    if !ints.iter().all(Signed::is_positive) {
        return Err(Error::NotArithmetical("kernel vector is not positive".into()));
    }
    Ok(ints.into_iter().map(|x| x.to_biguint().expect("positive")).collect())
}

/// Path recurrence `r_1 = 1`, `r_{i+1} = d_i r_i - r_{i-1}`.
fn r_from_d_path(d: &[BigUint]) -> Result<Vec<BigUint>> {
    let n = d.len();
    let mut r: Vec<BigInt> = Vec::with_capacity(n);
    r.push(BigInt::one());
    for i in 0..n - 1 {
        let prev = if i == 0 { BigInt::zero() } else { r[i - 1].clone() };
        let next = BigInt::from(d[i].clone()) * &r[i] - prev;
        if !next.is_positive() {
            return Err(Error::NotArithmetical(format!("r_{} would be {next}", i + 2)));
        }
        r.push(next);
    }
    let last = BigInt::from(d[n - 1].clone()) * &r[n - 1];
    if last != r[n - 2] {
        return Err(Error::NotArithmetical(format!("row {n} fails: {last} != {}", r[n - 2])));
    }
    Ok(r.into_iter().map(|x| x.to_biguint().expect("positive")).collect())
}
