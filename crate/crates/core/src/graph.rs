//! Finite connected multigraphs without loops.
//!
//! Paths, cycles and stars carry their adjacency implicitly; only
//! [`GraphKind::General`] stores a matrix. Vertex indices in this module
//! are 0-based storage indices; the public operations elsewhere in the
//! crate speak 1-based positions.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKind {
    Path,
    Cycle,
    Star,
    General,
}

impl GraphKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Path => "path",
            GraphKind::Cycle => "cycle",
            GraphKind::Star => "star",
            GraphKind::General => "general",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(GraphKind::Path),
            "cycle" => Ok(GraphKind::Cycle),
            "star" => Ok(GraphKind::Star),
            "general" => Ok(GraphKind::General),
            other => Err(Error::Parse(format!("unknown graph kind {other:?}"))),
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    kind: GraphKind,
    n: usize,
    adj: Option<Arc<Vec<Vec<u32>>>>,
}

impl Graph {
    /// The path `P_n` on `n >= 2` vertices.
    pub fn path(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::GraphSize { kind: "path", n, min: 2 });
        }
        Ok(Graph { kind: GraphKind::Path, n, adj: None })
    }

    /// The cycle `C_n`; `C_2` has a doubled edge.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::GraphSize { kind: "cycle", n, min: 2 });
        }
        Ok(Graph { kind: GraphKind::Cycle, n, adj: None })
    }

    /// The star `K_{leaves,1}`: center at storage index 0, leaves after it.
    pub fn star(leaves: usize) -> Result<Self> {
        if leaves < 1 {
            return Err(Error::GraphSize { kind: "star", n: leaves, min: 1 });
        }
        Ok(Graph { kind: GraphKind::Star, n: leaves + 1, adj: None })
    }

    /// Builds a graph from an explicit multiplicity matrix.
    pub fn general(adj: Vec<Vec<u32>>) -> Result<Self> {
        let n = adj.len();
        if n == 0 {
            return Err(Error::GraphSize { kind: "general", n, min: 1 });
        }
        for (row, entries) in adj.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NotSquare { rows: n, row: row + 1, len: entries.len() });
            }
        }
        for i in 0..n {
            if adj[i][i] != 0 {
                return Err(Error::Loop(i + 1));
            }
            for j in (i + 1)..n {
                if adj[i][j] != adj[j][i] {
                    return Err(Error::NotSymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        let g = Graph { kind: GraphKind::General, n, adj: Some(Arc::new(adj)) };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Constructor dispatch used by the CLI and deserialization. For stars
    /// `n` is the leaf count, matching `star(n)`.
    pub fn make(kind: GraphKind, n: usize) -> Result<Self> {
        match kind {
            GraphKind::Path => Graph::path(n),
            GraphKind::Cycle => Graph::cycle(n),
            GraphKind::Star => Graph::star(n),
            GraphKind::General => Err(Error::GraphMismatch(
                "general graphs need an explicit adjacency matrix".into(),
            )),
        }
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge multiplicity between storage indices `i` and `j`.
    pub fn weight(&self, i: usize, j: usize) -> u32 {
        let n = self.n;
        if i == j {
            return 0;
        }
        match self.kind {
            GraphKind::Path => u32::from(i.abs_diff(j) == 1),
            GraphKind::Cycle => {
                if n == 2 {
                    2
                } else {
                    let d = i.abs_diff(j);
                    u32::from(d == 1 || d == n - 1)
                }
            }
            GraphKind::Star => u32::from(i == 0 || j == 0),
            GraphKind::General => self.adj.as_ref().expect("general graph has a matrix")[i][j],
        }
    }

    /// Neighbours of `i` with multiplicities, in increasing index order.
    pub fn neighbors(&self, i: usize) -> Vec<(usize, u32)> {
        let n = self.n;
        match self.kind {
            GraphKind::Path => {
                let mut out = Vec::with_capacity(2);
                if i > 0 {
                    out.push((i - 1, 1));
                }
                if i + 1 < n {
                    out.push((i + 1, 1));
                }
                out
            }
            GraphKind::Cycle if n == 2 => vec![(1 - i, 2)],
            GraphKind::Cycle => {
                let mut out = vec![((i + n - 1) % n, 1), ((i + 1) % n, 1)];
                out.sort_unstable();
                out
            }
            GraphKind::Star if i == 0 => (1..n).map(|j| (j, 1)).collect(),
            GraphKind::Star => vec![(0, 1)],
            GraphKind::General => (0..n)
                .filter_map(|j| {
                    let w = self.weight(i, j);
                    (w > 0).then_some((j, w))
                })
                .collect(),
        }
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<u32>> {
        if let Some(adj) = &self.adj {
            return adj.as_ref().clone();
        }
        (0..self.n).map(|i| (0..self.n).map(|j| self.weight(i, j)).collect()).collect()
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.neighbors(i).iter().map(|&(_, w)| w).sum()
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for (u, _) in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GraphKind::Path => write!(f, "P_{}", self.n),
            GraphKind::Cycle => write!(f, "C_{}", self.n),
            GraphKind::Star => write!(f, "K_{{{},1}}", self.n - 1),
            GraphKind::General => write!(f, "G({} vertices)", self.n),
        }
    }
}
