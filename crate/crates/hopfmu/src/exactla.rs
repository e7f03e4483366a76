//! Exact dense linear algebra over Q(zeta_n).
//!
//! Matrices stay small here (dimension at most n^2 <= 169 unknowns in the
//! nullspace solves), so everything uses dense exact Gaussian elimination
//! with first-nonzero pivoting: deterministic, fraction-exact, and fast at
//! these sizes. The one nonstandard entry point is [`sylvester_nullspace`],
//! which solves the simultaneous systems `A_k Q = Q B_k` that intertwiner
//! and antipode-conjugation computations reduce to.

use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::cyclo::CycNum;

/// Errors from exact linear algebra.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("singular {size}x{size} matrix")]
    Singular { size: usize },
}

/// Dense matrix over Q(zeta_n), row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct CMatrix {
    order: u64,
    rows: usize,
    cols: usize,
    entries: Vec<CycNum>,
}

impl CMatrix {
    /// Build a matrix entry by entry from a closure.
    pub fn from_fn(
        order: u64,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycNum,
    ) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                assert_eq!(v.order(), order, "entry ({i},{j}) has mismatched order");
                entries.push(v);
            }
        }
        CMatrix {
            order,
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(order: u64, rows: usize, cols: usize) -> Self {
        Self::from_fn(order, rows, cols, |_, _| CycNum::zero(order))
    }

    pub fn identity(order: u64, size: usize) -> Self {
        Self::from_fn(order, size, size, |i, j| {
            if i == j {
                CycNum::one(order)
            } else {
                CycNum::zero(order)
            }
        })
    }

    pub fn diagonal(diag: &[CycNum]) -> Self {
        assert!(!diag.is_empty(), "diagonal needs at least one entry");
        let order = diag[0].order();
        Self::from_fn(order, diag.len(), diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                CycNum::zero(order)
            }
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        assert_eq!(v.order(), self.order, "entry order mismatch");
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycNum::is_zero)
    }

    pub fn matmul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.order, rhs.order, "matmul order mismatch");
        assert_eq!(
            self.cols, rhs.rows,
            "matmul dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = CMatrix::zero(self.order, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = &out.entries[i * rhs.cols + j] + &(a * b);
                    out.entries[i * rhs.cols + j] = v;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> CMatrix {
        CMatrix::from_fn(self.order, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn scale(&self, c: &CycNum) -> CMatrix {
        assert_eq!(c.order(), self.order, "scale order mismatch");
        CMatrix::from_fn(self.order, self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn add(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.order, rhs.order, "add order mismatch");
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "add dimension mismatch"
        );
        CMatrix::from_fn(self.order, self.rows, self.cols, |i, j| {
            self.get(i, j) + rhs.get(i, j)
        })
    }

    pub fn sub(&self, rhs: &CMatrix) -> CMatrix {
        self.add(&rhs.scale(&CycNum::from_int(-1, self.order)))
    }

    pub fn trace(&self) -> CycNum {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut acc = CycNum::zero(self.order);
        for i in 0..self.rows {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Exact determinant via elimination with row-swap sign tracking.
    pub fn det(&self) -> CycNum {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m: Vec<Vec<CycNum>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut det = CycNum::one(self.order);
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return CycNum::zero(self.order);
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -&det;
            }
            det = &det * &m[col][col];
            let inv = m[col][col].inv().expect("pivot is nonzero");
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &inv;
                for c in col..n {
                    if m[col][c].is_zero() {
                        continue;
                    }
                    let v = &m[r][c] - &(&factor * &m[col][c]);
                    m[r][c] = v;
                }
            }
        }
        det
    }

    /// Exact inverse via Gauss-Jordan on the augmented system [A | I].
    pub fn inverse(&self) -> Result<CMatrix, LinAlgError> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug: Vec<Vec<CycNum>> = (0..n)
            .map(|i| {
                let mut row: Vec<CycNum> = (0..n).map(|j| self.get(i, j).clone()).collect();
                row.extend((0..n).map(|j| {
                    if i == j {
                        CycNum::one(self.order)
                    } else {
                        CycNum::zero(self.order)
                    }
                }));
                row
            })
            .collect();
        let pivots = rref_in_place(&mut aug, n);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(LinAlgError::Singular { size: n });
        }
        Ok(CMatrix::from_fn(self.order, n, n, |i, j| {
            aug[i][n + j].clone()
        }))
    }

    /// `Some(c)` when the matrix equals `c * I`.
    pub fn as_scalar(&self) -> Option<CycNum> {
        if !self.is_square() {
            return None;
        }
        let c = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want_zero = i != j;
                if want_zero && !self.get(i, j).is_zero() {
                    return None;
                }
                if !want_zero && self.get(i, j) != &c {
                    return None;
                }
            }
        }
        Some(c)
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix(n={}, {}x{})", self.order, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.get(i, j).to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduce `mat` (whose logical width for pivoting is `pivot_width`; columns
/// beyond that are carried along, as in an augmented system) to reduced row
/// echelon form. Pivots take the first nonzero entry in each column, scanned
/// left to right, so the result is deterministic. Returns the pivot columns.
fn rref_in_place(mat: &mut [Vec<CycNum>], pivot_width: usize) -> Vec<usize> {
    let nrows = mat.len();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..pivot_width {
        let Some(pivot_row) = (rank..nrows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot_row);
        let inv = mat[rank][col].inv().expect("pivot is nonzero");
        for v in mat[rank].iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        for r in 0..nrows {
            if r == rank || mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            let (head, tail) = if r < rank {
                let (h, t) = mat.split_at_mut(rank);
                (&mut h[r], &t[0])
            } else {
                let (h, t) = mat.split_at_mut(r);
                (&mut t[0], &h[rank])
            };
            for (v, p) in head.iter_mut().zip(tail.iter()) {
                if p.is_zero() {
                    continue;
                }
                *v = &*v - &(&factor * p);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    pivots
}

/// Incremental row-space tracker: feed vectors in, learn which ones enlarge
/// the span. Used by the word-enumeration side of the trace computation.
pub(crate) struct SpanTracker {
    width: usize,
    rows: Vec<Vec<CycNum>>,
    pivots: Vec<usize>,
}

impl SpanTracker {
    pub(crate) fn new(width: usize) -> Self {
        SpanTracker {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Returns true when `v` was independent of the current span (and was
    /// absorbed into it).
    pub(crate) fn insert(&mut self, v: &[CycNum]) -> bool {
        assert_eq!(v.len(), self.width, "span tracker width mismatch");
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, y) in v.iter_mut().zip(row.iter()) {
                if y.is_zero() {
                    continue;
                }
                *x = &*x - &(&factor * y);
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].inv().expect("pivot is nonzero");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        true
    }
}

/// Basis of `{Q : A_k Q = Q B_k for all k}`, with `Q` of shape m x p when
/// the `A_k` are m x m and the `B_k` are p x p. Each basis matrix is
/// normalized so its first nonzero entry in row-major order is 1, and the
/// basis order is deterministic.
pub fn sylvester_nullspace(constraints: &[(CMatrix, CMatrix)]) -> Vec<CMatrix> {
    assert!(!constraints.is_empty(), "need at least one constraint");
    let order = constraints[0].0.order();
    let m = constraints[0].0.rows();
    let p = constraints[0].1.rows();
    for (a, b) in constraints {
        assert!(a.is_square() && b.is_square(), "constraints must be square");
        assert_eq!((a.rows(), b.rows()), (m, p), "constraint size mismatch");
        assert_eq!(a.order(), order, "constraint order mismatch");
        assert_eq!(b.order(), order, "constraint order mismatch");
    }
    let unknowns = m * p;
    // Row for ((A Q - Q B)_{ij} = 0): coefficient of Q_{st} is
    // A_{is} delta_{tj} - delta_{is} B_{tj}.
    let mut system: Vec<Vec<CycNum>> = Vec::with_capacity(constraints.len() * unknowns);
    for (a, b) in constraints {
        for i in 0..m {
            for j in 0..p {
                let mut row = vec![CycNum::zero(order); unknowns];
                for s in 0..m {
                    let v = a.get(i, s);
                    if !v.is_zero() {
                        row[s * p + j] = &row[s * p + j] + v;
                    }
                }
                for t in 0..p {
                    let v = b.get(t, j);
                    if !v.is_zero() {
                        row[i * p + t] = &row[i * p + t] - v;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    system.push(row);
                }
            }
        }
    }
    if system.is_empty() {
        system.push(vec![CycNum::zero(order); unknowns]);
    }
    let pivots = rref_in_place(&mut system, unknowns);
    let is_pivot = {
        let mut mask = vec![false; unknowns];
        for &p in &pivots {
            mask[p] = true;
        }
        mask
    };
    let mut basis = Vec::new();
    for free in 0..unknowns {
        if is_pivot[free] {
            continue;
        }
        let mut vec_q = vec![CycNum::zero(order); unknowns];
        vec_q[free] = CycNum::one(order);
        for (row, &pcol) in system.iter().zip(&pivots) {
            if !row[free].is_zero() {
                vec_q[pcol] = -&row[free];
            }
        }
        let lead = vec_q
            .iter()
            .find(|x| !x.is_zero())
            .expect("free column entry is 1")
            .clone();
        let lead_inv = lead.inv().expect("leading entry is nonzero");
        let mat = CMatrix::from_fn(order, m, p, |i, j| &vec_q[i * p + j] * &lead_inv);
        basis.push(mat);
    }
    basis
}

// ---------------------------------------------------------------------------
// Serialization: {"rows": r, "cols": c, "entries": [[CycNum,...],...]}
// ---------------------------------------------------------------------------

impl Serialize for CMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CMatrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        let nested: Vec<Vec<&CycNum>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect();
        st.serialize_field("entries", &nested)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for CMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            rows: usize,
            cols: usize,
            entries: Vec<Vec<CycNum>>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.rows == 0 || repr.cols == 0 {
            return Err(D::Error::custom("matrix dimensions must be positive"));
        }
        if repr.entries.len() != repr.rows
            || repr.entries.iter().any(|row| row.len() != repr.cols)
        {
            return Err(D::Error::custom("entry grid does not match rows x cols"));
        }
        let order = repr.entries[0][0].order();
        let mut entries = Vec::with_capacity(repr.rows * repr.cols);
        for row in repr.entries {
            for v in row {
                if v.order() != order {
                    return Err(D::Error::custom("mixed cyclotomic orders in matrix"));
                }
                entries.push(v);
            }
        }
        Ok(CMatrix {
            order,
            rows: repr.rows,
            cols: repr.cols,
            entries,
        })
    }
}
