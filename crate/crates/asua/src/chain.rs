//! Random-walk transition matrices and exact absorption solves.
//!
//! The transition matrix of a walk on a graph is `T = D * A` with `D` the
//! diagonal of reciprocal degrees. In canonical block form
//! `[[Q, R], [0, I]]` the expected steps to absorption satisfy
//! `(I - Q) t = 1`, which is what [`solve_asua`] solves directly — one
//! right-hand side never justifies forming `(I - Q)^-1`.
//!
//! Matrices can also be entered row-by-row via
//! [`TransitionMatrix::from_rows`], which accepts any row-stochastic matrix
//! (including ones that do not come from an undirected graph).

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::rational::{natural, Rational};

/// Row-stochastic transition matrix in canonical form, with the transient
/// and absorbing state sets tracked by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    rows: Vec<Vec<Rational>>,
    transient: Vec<VertexId>,
    absorbing: BTreeSet<VertexId>,
}

impl TransitionMatrix {
    /// Walk matrix of a graph: row `v` assigns probability
    /// `multiplicity(v, u) / degree(v)` to each neighbor `u`; absorbing rows
    /// are identity rows.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        g.validate_reachability()?;
        let n = g.vertex_count();
        let adj = g.degree_profile();
        let mut rows = vec![vec![Rational::zero(); n]; n];
        for v in g.vertices() {
            if g.is_absorbing(v) {
                rows[v.index()][v.index()] = Rational::one();
            } else {
                let deg = natural(g.degree(v));
                for &u in adj.neighbors(v) {
                    rows[v.index()][u.index()] += Rational::one() / &deg;
                }
            }
        }
        let transient = g.transient().collect();
        Ok(TransitionMatrix {
            rows,
            transient,
            absorbing: g.absorbing().clone(),
        })
    }

    /// Accepts a raw row-stochastic matrix. States whose row is an identity
    /// row are absorbing; every transient state must reach an absorbing one
    /// through nonzero entries.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.iter().any(|p| p.is_negative()) {
                return Err(Error::NotStochastic { row: i + 1 });
            }
            let sum: Rational = row.iter().sum();
            if !sum.is_one() {
                return Err(Error::NotStochastic { row: i + 1 });
            }
        }
        let absorbing: BTreeSet<VertexId> = (0..n)
            .filter(|&i| rows[i][i].is_one())
            .map(VertexId::new)
            .collect();
        if absorbing.is_empty() {
            return Err(Error::EmptyAbsorbingSet);
        }
        // reverse reachability over nonzero entries
        let mut reached = vec![false; n];
        let mut queue: VecDeque<usize> = absorbing.iter().map(|v| v.index()).collect();
        for v in &absorbing {
            reached[v.index()] = true;
        }
        while let Some(j) = queue.pop_front() {
            for i in 0..n {
                if !reached[i] && !rows[i][j].is_zero() {
                    reached[i] = true;
                    queue.push_back(i);
                }
            }
        }
        let stranded: Vec<VertexId> = (0..n)
            .filter(|&i| !reached[i])
            .map(VertexId::new)
            .collect();
        if !stranded.is_empty() {
            return Err(Error::UnreachableAbsorber { stranded });
        }
        let transient = (0..n)
            .map(VertexId::new)
            .filter(|v| !absorbing.contains(v))
            .collect();
        Ok(TransitionMatrix {
            rows,
            transient,
            absorbing,
        })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, from: VertexId, to: VertexId) -> &Rational {
        &self.rows[from.index()][to.index()]
    }

    pub fn transient_vertices(&self) -> &[VertexId] {
        &self.transient
    }

    pub fn absorbing_vertices(&self) -> &BTreeSet<VertexId> {
        &self.absorbing
    }

    pub fn is_absorbing(&self, v: VertexId) -> bool {
        self.absorbing.contains(&v)
    }

    /// `I - Q` over the transient block, plus an all-ones right-hand side.
    fn absorption_system(&self) -> (Vec<Vec<Rational>>, Vec<Rational>) {
        let m = self.transient.len();
        let mut a = vec![vec![Rational::zero(); m]; m];
        for (i, &vi) in self.transient.iter().enumerate() {
            for (j, &vj) in self.transient.iter().enumerate() {
                let q = &self.rows[vi.index()][vj.index()];
                a[i][j] = if i == j {
                    Rational::one() - q
                } else {
                    -q.clone()
                };
            }
        }
        let b = vec![Rational::one(); m];
        (a, b)
    }
}

/// Builds the walk transition matrix of a graph (see
/// [`TransitionMatrix::from_graph`]).
pub fn build_transition(g: &Graph) -> Result<TransitionMatrix> {
    TransitionMatrix::from_graph(g)
}

/// Exact expected steps until absorption, one entry per transient vertex.
/// Absorbing vertices are implicitly 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsuaVector {
    values: BTreeMap<VertexId, Rational>,
}

impl AsuaVector {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VertexId, Rational)>) -> Self {
        AsuaVector {
            values: pairs.into_iter().collect(),
        }
    }

    pub fn get(&self, v: VertexId) -> Option<&Rational> {
        self.values.get(&v)
    }

    /// Value of `v`, treating anything outside the transient set as
    /// absorbing (value 0).
    pub fn value_or_zero(&self, v: VertexId) -> Rational {
        self.values.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &Rational)> {
        self.values.iter().map(|(&v, r)| (v, r))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Sum over all transient vertices.
    pub fn total(&self) -> Rational {
        self.values.values().sum()
    }
}

/// Solves `(I - Q) t = 1` exactly.
pub fn solve_asua(tm: &TransitionMatrix) -> Result<AsuaVector> {
    let (a, b) = tm.absorption_system();
    let x = crate::linalg::solve_exact(a, b)?;
    Ok(AsuaVector {
        values: tm.transient.iter().copied().zip(x).collect(),
    })
}

/// Convenience: transition matrix plus exact solve in one call.
pub fn solve_graph(g: &Graph) -> Result<AsuaVector> {
    solve_asua(&build_transition(g)?)
}

/// Double-precision solve along with the max-norm residual of
/// `(I - Q) t - 1`; the caller decides what residual is acceptable.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatSolution {
    pub values: BTreeMap<VertexId, f64>,
    pub residual: f64,
}

impl FloatSolution {
    pub fn value_or_zero(&self, v: VertexId) -> f64 {
        self.values.get(&v).copied().unwrap_or(0.0)
    }
}

/// LU solve of the absorption system in f64, the fast path for sweeps where
/// exactness is not required.
pub fn solve_asua_float(tm: &TransitionMatrix) -> Result<FloatSolution> {
    let (a, b) = tm.absorption_system();
    let af: Vec<Vec<f64>> = a
        .iter()
        .map(|row| row.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect())
        .collect();
    let bf: Vec<f64> = b.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect();
    let x = crate::linalg::solve_f64(af.clone(), bf.clone())?;
    let residual = crate::linalg::residual_f64(&af, &x, &bf);
    Ok(FloatSolution {
        values: tm.transient.iter().copied().zip(x).collect(),
        residual,
    })
}

/// Sum of expected absorption steps over all vertices, defined for a single
/// absorbing vertex (which contributes 0).
pub fn asua_sum(g: &Graph) -> Result<Rational> {
    match g.absorbing().len() {
        0 => return Err(Error::EmptyAbsorbingSet),
        1 => {}
        count => return Err(Error::MultipleAbsorbers { count }),
    }
    Ok(solve_graph(g)?.total())
}

/// Expected steps to travel from `v` to `u` and back, as the sum of the two
/// one-way absorption solves. The return leg is treated as a fresh walk
/// absorbed at `v`; no other reading of "and back" is attempted.
pub fn round_trip(g: &Graph, v: VertexId, u: VertexId) -> Result<Rational> {
    if v == u {
        return Err(Error::SameVertex(v));
    }
    for id in [v, u] {
        if id.index() >= g.vertex_count() {
            return Err(Error::IdOutOfRange { id, vertex_count: g.vertex_count() });
        }
    }
    let there = solve_graph(&g.with_absorbing(&[u])?)?.value_or_zero(v);
    let back = solve_graph(&g.with_absorbing(&[v])?)?.value_or_zero(u);
    Ok(there + back)
}

/// Per-vertex residuals of the local mean identity
/// `t(v) = mean of neighbor values + 1` (absorbing neighbors contribute 0),
/// evaluated against an arbitrary chain. All residuals are zero iff `t` is
/// the true absorption vector.
pub fn chain_residuals(tm: &TransitionMatrix, t: &AsuaVector) -> Result<Vec<(VertexId, Rational)>> {
    if t.len() != tm.transient.len() || tm.transient.iter().any(|v| t.get(*v).is_none()) {
        return Err(Error::IndexMismatch);
    }
    let mut out = Vec::with_capacity(tm.transient.len());
    for &v in &tm.transient {
        let mut mean = Rational::zero();
        for (j, p) in tm.rows[v.index()].iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let u = VertexId::new(j);
            if !tm.is_absorbing(u) {
                mean += p * t.value_or_zero(u);
            }
        }
        let residual = t.value_or_zero(v) - mean - Rational::one();
        out.push((v, residual));
    }
    Ok(out)
}

/// Residuals of the neighbor-mean identity on a graph walk; see
/// [`chain_residuals`].
pub fn asua_equation_residuals(g: &Graph, t: &AsuaVector) -> Result<Vec<(VertexId, Rational)>> {
    chain_residuals(&build_transition(g)?, t)
}
