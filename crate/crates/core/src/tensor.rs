//! Small dense tensors: ε-symbols, Kronecker delta and square matrices with
//! exact inversion, congruence diagonalization and Sylvester inertia.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Levi-Civita symbol on 1-based indices `1..=3`.
pub fn levi_civita(i: usize, j: usize, k: usize) -> Result<Scalar> {
    for index in [i, j, k] {
        if !(1..=3).contains(&index) {
            return Err(Error::IndexOutOfRange { index, dim: 3 });
        }
    }
    Ok(Scalar::from_int(epsilon(i - 1, j - 1, k - 1)))
}

/// ε on 0-based indices; callers guarantee `i, j, k < 3`.
pub(crate) fn epsilon(i: usize, j: usize, k: usize) -> i64 {
    if i == j || j == k || i == k {
        return 0;
    }
    // cyclic shifts of (0,1,2) are even
    if (j + 3 - i) % 3 == 1 {
        1
    } else {
        -1
    }
}

pub(crate) fn delta<T: Field>(i: usize, j: usize) -> T {
    if i == j {
        T::one()
    } else {
        T::zero()
    }
}

/// Square matrix, row-major. `m[(i, j)]` uses 0-based indices.
#[derive(Clone, PartialEq)]
pub struct Matrix<T = Scalar> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![T::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![T::one(); dim])
    }

    pub fn diagonal(values: &[T]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.dim).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<T> {
        (0..self.dim).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn scale(&self, factor: &T) -> Self {
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|e| e.clone() * factor.clone())
                .collect(),
        }
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        (0..self.dim)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (m, x)| acc + m.clone() * x.clone())
            })
            .collect()
    }

    /// Gaussian elimination with partial pivoting; exact for rationals.
    pub fn determinant(&self) -> T {
        let n = self.dim;
        let mut a = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let Some(pivot) = pivot_row(&a, col) else {
                return T::zero();
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a[(col, col)].clone();
            det *= p.clone();
            for r in col + 1..n {
                let f = a[(r, col)].clone() / p.clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = a[(col, c)].clone() * f.clone();
                    a[(r, c)] -= v;
                }
            }
        }
        det
    }

    /// Gauss-Jordan inverse.
    pub fn invert(&self) -> Result<Self> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = pivot_row(&a, col).ok_or(Error::SingularMatrix)?;
            a.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p = a[(col, col)].clone();
            for c in 0..n {
                a[(col, c)] /= p.clone();
                inv[(col, c)] /= p.clone();
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    let av = a[(col, c)].clone() * f.clone();
                    a[(r, c)] -= av;
                    let iv = inv[(col, c)].clone() * f.clone();
                    inv[(r, c)] -= iv;
                }
            }
        }
        Ok(inv)
    }

    /// Congruence diagonalization `S·M·Sᵀ = diag(d)` without square roots.
    ///
    /// Symmetric elimination with diagonal pivoting. When every remaining
    /// diagonal entry vanishes but some `m = M[i][j]` does not, row/column `i`
    /// is replaced by `i + j`, which exposes the pivot `2m`.
    pub fn congruence_diagonalize(&self) -> Result<(Self, Vec<T>)> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = self.dim;
        let mut a = self.clone();
        let mut s = Self::identity(n);
        for k in 0..n {
            let diag_pivot =
                (k..n).filter(|&i| !a[(i, i)].is_zero()).reduce(|best, i| {
                    match abs_cmp(&a[(i, i)], &a[(best, best)]) {
                        std::cmp::Ordering::Greater => i,
                        _ => best,
                    }
                });
            let pivot = match diag_pivot {
                Some(i) => i,
                None => {
                    let off = (k..n)
                        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                        .find(|&(i, j)| !a[(i, j)].is_zero());
                    let Some((i, j)) = off else { break };
                    a.add_row_col(i, j);
                    s.add_row(i, j);
                    i
                }
            };
            if pivot != k {
                a.swap_rows(pivot, k);
                a.swap_cols(pivot, k);
                s.swap_rows(pivot, k);
            }
            let p = a[(k, k)].clone();
            for r in k + 1..n {
                let f = a[(r, k)].clone() / p.clone();
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let v = a[(k, c)].clone() * f.clone();
                    a[(r, c)] -= v;
                    let sv = s[(k, c)].clone() * f.clone();
                    s[(r, c)] -= sv;
                }
                for c in 0..n {
                    let v = a[(c, k)].clone() * f.clone();
                    a[(c, r)] -= v;
                }
            }
        }
        Ok((s, a.diagonal_entries()))
    }

    /// Sylvester inertia from any congruence diagonalization.
    pub fn inertia(&self) -> Result<Inertia> {
        let (_, d) = self.congruence_diagonalize()?;
        Ok(Inertia::of_diagonal(&d))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.dim {
            self.entries.swap(a * self.dim + c, b * self.dim + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.dim {
            self.entries.swap(r * self.dim + a, r * self.dim + b);
        }
    }

    /// row i += row j
    fn add_row(&mut self, i: usize, j: usize) {
        for c in 0..self.dim {
            let v = self[(j, c)].clone();
            self[(i, c)] += v;
        }
    }

    /// row i += row j, then column i += column j
    fn add_row_col(&mut self, i: usize, j: usize) {
        self.add_row(i, j);
        for r in 0..self.dim {
            let v = self[(r, j)].clone();
            self[(r, i)] += v;
        }
    }
}

impl Matrix<Scalar> {
    pub fn to_f64(&self) -> Matrix<f64> {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(Field::to_f64).collect(),
        }
    }
}

fn pivot_row<T: Field>(a: &Matrix<T>, col: usize) -> Option<usize> {
    (col..a.dim)
        .filter(|&r| !a[(r, col)].is_zero())
        .max_by(|&x, &y| abs_cmp(&a[(x, col)], &a[(y, col)]))
}

fn abs_cmp<T: Field>(x: &T, y: &T) -> std::cmp::Ordering {
    x.abs()
        .partial_cmp(&y.abs())
        .unwrap_or(std::cmp::Ordering::Equal)
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.entries[i * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.entries[i * self.dim + j]
    }
}

impl<T: Field> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a.clone() * rhs[(k, j)].clone();
                }
            }
        }
        out
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[i * self.dim + j])?;
            }
        }
        write!(f, "]")
    }
}

/// Counts of positive, negative and zero entries in a congruence diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn of_diagonal<T: Field>(d: &[T]) -> Self {
        let positive = d.iter().filter(|x| x.is_positive()).count();
        let negative = d.iter().filter(|x| x.is_negative()).count();
        Self {
            positive,
            negative,
            zero: d.len() - positive - negative,
        }
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }

    /// `(p, q, z)` with `p >= q`, i.e. up to an overall sign of the form.
    pub fn up_to_sign(self) -> Self {
        if self.negative > self.positive {
            Self {
                positive: self.negative,
                negative: self.positive,
                zero: self.zero,
            }
        } else {
            self
        }
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.positive, self.negative, self.zero)
    }
}
