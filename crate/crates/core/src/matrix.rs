//! Dense matrices over a cyclotomic field with exact elimination.

use std::fmt;
use std::sync::Arc;

use crate::scalar::{CycloField, CycloScalar};

pub type Vector = Vec<CycloScalar>;

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    field: Arc<CycloField>,
    rows: usize,
    cols: usize,
    data: Vec<CycloScalar>,
}

/// Result of solving `A·X = B`.
#[derive(Clone, Debug)]
pub enum Solution {
    Inconsistent,
    Solved {
        /// One solution, of shape `A.cols × B.cols`.
        particular: ExactMatrix,
        /// Basis of the null space of `A`.
        kernel: Vec<Vector>,
    },
}

impl Solution {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Solution::Solved { .. })
    }
}

impl ExactMatrix {
    pub fn zeros(field: &Arc<CycloField>, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Arc<CycloField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: &Arc<CycloField>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycloScalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix {
            field: Arc::clone(field),
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(field: &Arc<CycloField>, cols: usize, rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            data.extend(row);
        }
        ExactMatrix {
            field: Arc::clone(field),
            rows: r,
            cols,
            data,
        }
    }

    pub fn from_columns(field: &Arc<CycloField>, rows: usize, cols: &[Vector]) -> Self {
        Self::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycloScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &CycloScalar) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[CycloScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "product of {}x{} and {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Self::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycloScalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector size mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        ExactMatrix {
            field: Arc::clone(&self.field),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// `(A⊗B)[(i·rB+k),(j·cB+l)] = A[i,j]·B[k,l]`.
    pub fn kron(&self, other: &Self) -> Self {
        let (rb, cb) = (other.rows, other.cols);
        let mut out = Self::zeros(&self.field, self.rows * rb, self.cols * cb);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rb + k, j * cb + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> CycloScalar {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        t
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(&self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut ech = RowEchelon::new(&self.field, self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i).to_vec());
        }
        ech.reduce_fully();
        let pivots = ech.pivots.clone();
        let mut rows = ech.rows;
        while rows.len() < self.rows {
            rows.push(vec![self.field.zero(); self.cols]);
        }
        (Self::from_rows(&self.field, self.cols, rows), pivots)
    }

    pub fn rank(&self) -> usize {
        let mut ech = RowEchelon::new(&self.field, self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i).to_vec());
        }
        ech.rank()
    }

    /// Basis of `{x : A·x = 0}`.
    pub fn kernel(&self) -> Vec<Vector> {
        let mut ech = RowEchelon::new(&self.field, self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i).to_vec());
        }
        ech.kernel()
    }

    /// Solves `A·X = B` for a matrix right-hand side.
    pub fn solve(&self, b: &Self) -> Solution {
        assert_eq!(self.rows, b.rows, "solve: row mismatch");
        let n = self.cols;
        let m = b.cols;
        let mut ech = RowEchelon::new(&self.field, n + m);
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            row.extend_from_slice(b.row(i));
            ech.insert(row);
        }
        ech.reduce_fully();
        if ech.pivots.iter().any(|&p| p >= n) {
            return Solution::Inconsistent;
        }
        let mut particular = Self::zeros(&self.field, n, m);
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            for j in 0..m {
                particular.set(p, j, row[n + j].clone());
            }
        }
        let mut coeff = RowEchelon::new(&self.field, n);
        for row in &ech.rows {
            coeff.insert(row[..n].to_vec());
        }
        Solution::Solved {
            particular,
            kernel: coeff.kernel(),
        }
    }

    /// Solves `A·x = b` for a single vector, returning one solution.
    pub fn solve_vec(&self, b: &[CycloScalar]) -> Option<Vector> {
        let bm = Self::from_columns(&self.field, self.rows, &[b.to_vec()]);
        match self.solve(&bm) {
            Solution::Inconsistent => None,
            Solution::Solved { particular, .. } => Some(particular.column(0)),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let id = Self::identity(&self.field, self.rows);
        match self.solve(&id) {
            Solution::Solved { particular, kernel } if kernel.is_empty() => Some(particular),
            _ => None,
        }
    }

    /// The scalar `c` with `self = c·other`, when one exists.
    pub fn scalar_multiple_of(&self, other: &Self) -> Option<CycloScalar> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return None;
        }
        let idx = other.data.iter().position(|x| !x.is_zero());
        let c = match idx {
            Some(k) => &self.data[k] * &other.data[k].inv()?,
            None => return if self.is_zero() { Some(self.field.zero()) } else { None },
        };
        if *self == other.scale(&c) {
            Some(c)
        } else {
            None
        }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Incremental row reduction: rows are reduced against the stored pivots as
/// they arrive, so tall systems never materialize as a dense matrix.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    field: Arc<CycloField>,
    cols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(field: &Arc<CycloField>, cols: usize) -> Self {
        RowEchelon {
            field: Arc::clone(field),
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn reduce(&self, mut row: Vector) -> Vector {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for j in p..self.cols {
                if !r[j].is_zero() {
                    let t = &f * &r[j];
                    row[j] -= &t;
                }
            }
        }
        row
    }

    /// Adds a row; returns true when it was independent of the previous ones.
    pub fn insert(&mut self, row: Vector) -> bool {
        assert_eq!(row.len(), self.cols, "row length");
        if self.rows.len() == self.cols {
            return false;
        }
        let row = self.reduce(row);
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[p].inv().expect("nonzero pivot");
        let row: Vector = row.iter().map(|x| x * &inv).collect();
        self.rows.push(row);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, row: &[CycloScalar]) -> bool {
        self.reduce(row.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Clears entries above every pivot and sorts rows by pivot column.
    pub fn reduce_fully(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let mut rows: Vec<Vector> = order.iter().map(|&i| self.rows[i].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        for k in (0..rows.len()).rev() {
            let p = pivots[k];
            for i in 0..k {
                if rows[i][p].is_zero() {
                    continue;
                }
                let f = rows[i][p].clone();
                for j in p..self.cols {
                    if !rows[k][j].is_zero() {
                        let t = &f * &rows[k][j];
                        rows[i][j] -= &t;
                    }
                }
            }
        }
        self.rows = rows;
        self.pivots = pivots;
    }

    /// Basis of the common null space of the stored rows.
    pub fn kernel(&mut self) -> Vec<Vector> {
        self.reduce_fully();
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -&row[free];
            }
            basis.push(v);
        }
        basis
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }
}

/// Rank of a list of vectors of common length `len`.
pub fn span_rank(field: &Arc<CycloField>, len: usize, vs: &[Vector]) -> usize {
    let mut ech = RowEchelon::new(field, len);
    for v in vs {
        ech.insert(v.clone());
    }
    ech.rank()
}

/// True when the two families span the same subspace.
pub fn same_span(field: &Arc<CycloField>, len: usize, a: &[Vector], b: &[Vector]) -> bool {
    let ra = span_rank(field, len, a);
    let rb = span_rank(field, len, b);
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    ra == rb && span_rank(field, len, &both) == ra
}

/// Coordinates of `v` in the basis `basis`, if `v` lies in its span.
pub fn coordinates(
    field: &Arc<CycloField>,
    len: usize,
    basis: &[Vector],
    v: &[CycloScalar],
) -> Option<Vector> {
    let a = ExactMatrix::from_columns(field, len, basis);
    a.solve_vec(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Arc<CycloField> {
        CycloField::new(1).unwrap()
    }

    fn mat(f: &Arc<CycloField>, rows: &[&[i64]]) -> ExactMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        ExactMatrix::from_rows(
            f,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| f.from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_examples() {
        let f = q();
        assert_eq!(ExactMatrix::zeros(&f, 3, 3).rank(), 0);
        assert_eq!(ExactMatrix::identity(&f, 5).rank(), 5);
        let f4 = CycloField::new(4).unwrap();
        let i = f4.zeta_pow(1);
        let m = ExactMatrix::from_rows(
            &f4,
            2,
            vec![vec![f4.one(), i.clone()], vec![i, f4.from_int(-1)]],
        );
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_examples() {
        let f = q();
        let id = ExactMatrix::identity(&f, 2);
        let b = mat(&f, &[&[3], &[-4]]);
        match id.solve(&b) {
            Solution::Solved { particular, kernel } => {
                assert_eq!(particular, b);
                assert!(kernel.is_empty());
            }
            Solution::Inconsistent => panic!("identity system is consistent"),
        }
        let z = ExactMatrix::zeros(&f, 2, 2);
        match z.solve(&ExactMatrix::zeros(&f, 2, 1)) {
            Solution::Solved { kernel, .. } => assert_eq!(kernel.len(), 2),
            Solution::Inconsistent => panic!(),
        }
        let a = mat(&f, &[&[1, 1], &[1, 1]]);
        match a.solve(&mat(&f, &[&[1], &[1]])) {
            Solution::Solved { particular, kernel } => {
                assert_eq!(particular, mat(&f, &[&[1], &[0]]));
                assert_eq!(kernel.len(), 1);
            }
            Solution::Inconsistent => panic!(),
        }
        assert!(!a.solve(&mat(&f, &[&[1], &[2]])).is_consistent());
    }

    #[test]
    fn kron_examples() {
        let f = q();
        let i6 = ExactMatrix::identity(&f, 2).kron(&ExactMatrix::identity(&f, 3));
        assert_eq!(i6, ExactMatrix::identity(&f, 6));
        let a = mat(&f, &[&[1, 2], &[3, 4]]);
        let e = ExactMatrix::zeros(&f, 0, 0);
        let k = a.kron(&e);
        assert_eq!((k.rows(), k.cols()), (0, 0));
    }

    #[test]
    fn inverse_and_multiples() {
        let f = q();
        let a = mat(&f, &[&[2, 1], &[7, 4]]);
        let ai = a.inverse().unwrap();
        assert!(a.mul(&ai).is_identity());
        assert!(mat(&f, &[&[1, 2], &[2, 4]]).inverse().is_none());
        let b = a.scale(&f.from_frac(-3, 5));
        assert_eq!(b.scalar_multiple_of(&a), Some(f.from_frac(-3, 5)));
        assert_eq!(b.scalar_multiple_of(&ExactMatrix::identity(&f, 2)), None);
    }

    #[test]
    fn rref_is_reduced() {
        let f = q();
        let a = mat(&f, &[&[0, 2, 4], &[1, 1, 1], &[1, 3, 5]]);
        let (r, piv) = a.rref();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(r, mat(&f, &[&[1, 0, -1], &[0, 1, 2], &[0, 0, 0]]));
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(|x| x.is_zero()));
    }
}
