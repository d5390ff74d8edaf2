use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::GaussianRational;
use crate::error::{Error, Result};

/// Dense `rows × cols` matrix over `Q(i)`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = GaussianRational::one();
        }
        m
    }

    pub fn diagonal(entries: &[GaussianRational]) -> Self {
        let mut m = QMatrix::zeros(entries.len(), entries.len());
        for (k, e) in entries.iter().enumerate() {
            m[(k, k)] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        QMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| GaussianRational::from_integer(x)).collect())
                .collect(),
        )
    }

    /// Column vector.
    pub fn column_vector(entries: Vec<GaussianRational>) -> Self {
        QMatrix { rows: entries.len(), cols: 1, data: entries }
    }

    /// Matrix whose columns are the given column vectors, all of height `rows`.
    pub fn from_columns(rows: usize, columns: &[QMatrix]) -> Self {
        let mut m = QMatrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.rows, rows);
            assert_eq!(c.cols, 1);
            for i in 0..rows {
                m[(i, j)] = c.data[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> QMatrix {
        QMatrix::column_vector((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> GaussianRational {
        assert!(self.is_square());
        let mut t = GaussianRational::zero();
        for k in 0..self.rows {
            t += &self[(k, k)];
        }
        t
    }

    /// Kronecker product `self ⊗ other`, with index `(i, j) ↦ i * other.rows + j`.
    pub fn kron(&self, other: &QMatrix) -> Self {
        let mut out = QMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * other.rows + k, j * other.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(&self, other: &QMatrix) -> Self {
        let mut out = QMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    pub fn hstack(&self, other: &QMatrix) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = QMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    pub fn vstack(&self, other: &QMatrix) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        QMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Submatrix keeping the listed rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = QMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form and its pivot columns. Pivoting takes the first
    /// nonzero entry in each column, so the result is canonical.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut a = self.clone();
        let pivots = a.rref_in_place();
        (a, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (m, n) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..n {
                    self.data.swap(p * n + j, r * n + j);
                }
            }
            let inv = self[(r, c)].inv().expect("nonzero pivot");
            for j in c..n {
                if !self[(r, j)].is_zero() {
                    self[(r, j)] = &self[(r, j)] * &inv;
                }
            }
            let pivot_row: Vec<(usize, GaussianRational)> = (c..n)
                .filter(|&j| !self[(r, j)].is_zero())
                .map(|j| (j, self[(r, j)].clone()))
                .collect();
            for i in 0..m {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for (j, v) in &pivot_row {
                    let delta = &factor * v;
                    self[(i, *j)] -= &delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space. Each vector has a 1 in one free column
    /// and 0 in every other free column, so the basis is canonical.
    pub fn kernel(&self) -> Vec<QMatrix> {
        let (r, pivots) = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![GaussianRational::zero(); n];
                v[f] = GaussianRational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(row, f)];
                }
                QMatrix::column_vector(v)
            })
            .collect()
    }

    /// Some `X` with `self · X = rhs` (free variables set to zero).
    pub fn solve(&self, rhs: &QMatrix) -> Result<QMatrix> {
        assert_eq!(self.rows, rhs.rows, "solve: row mismatch");
        let n = self.cols;
        let (r, pivots) = self.hstack(rhs).rref();
        if pivots.iter().any(|&p| p >= n) {
            return Err(Error::NoSolution);
        }
        let mut x = QMatrix::zeros(n, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(p, j)] = r[(row, n + j)].clone();
            }
        }
        Ok(x)
    }

    /// Canonical basis of the column space: the nonzero rows of the reduced
    /// row echelon form of the transpose, as column vectors.
    pub fn image(&self) -> Vec<QMatrix> {
        let (r, pivots) = self.transpose().rref();
        (0..pivots.len())
            .map(|i| QMatrix::column_vector(r.row(i).to_vec()))
            .collect()
    }

    /// Indices of the first maximal linearly independent set of columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rref().1
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if !self.is_square() {
            return None;
        }
        self.solve(&QMatrix::identity(self.rows))
            .ok()
            .filter(|_| self.rank() == self.rows)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Flatten into a column vector (row-major).
    pub fn vectorize(&self) -> QMatrix {
        QMatrix::column_vector(self.data.clone())
    }

    pub fn reshape(&self, rows: usize, cols: usize) -> QMatrix {
        assert_eq!(rows * cols, self.data.len());
        QMatrix { rows, cols, data: self.data.clone() }
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = GaussianRational;
    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianRational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += &p;
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
