//! Skew brackets with a 2-form, and the deformed Jacobi identity
//!
//! ```text
//! [A,[B,C]] + [C,[A,B]] + [B,[C,A]] = ω(B,C)A + ω(A,B)C + ω(C,A)B
//! ```
//!
//! Tensor accessors use 0-based indices; `c(k, i, j)` is the `e_k` component
//! of `[e_i, e_j]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensor::{delta, Matrix};

/// A 2-form stored as its (antisymmetric) Gram matrix `ω_ij = ω(e_i, e_j)`.
pub type TwoForm<T = Scalar> = Matrix<T>;

/// Structure constants `c^k_ij` and 2-form `ω_ij` on a `dim`-dimensional space.
#[derive(Clone, PartialEq)]
pub struct AlgebraSpec<T = Scalar> {
    dim: usize,
    c: Vec<T>,
    omega: TwoForm<T>,
}

/// One index pair where skew-symmetry fails. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkewViolation {
    Bracket { k: usize, i: usize, j: usize },
    Omega { i: usize, j: usize },
}

impl fmt::Display for SkewViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Bracket { k, i, j } => write!(f, "c^{k}_{i}{j} != -c^{k}_{j}{i}"),
            Self::Omega { i, j } => write!(f, "omega_{i}{j} != -omega_{j}{i}"),
        }
    }
}

impl<T: Field> AlgebraSpec<T> {
    /// Abelian bracket, zero 2-form.
    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            c: vec![T::zero(); dim * dim * dim],
            omega: Matrix::zeros(dim),
        }
    }

    /// Raw constructor; `c` is laid out as `c[k][i][j]`. Skew-symmetry is not
    /// checked here, see [`AlgebraSpec::validate_skew`].
    pub fn from_parts(dim: usize, c: Vec<T>, omega: TwoForm<T>) -> Result<Self> {
        if c.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                actual: c.len(),
            });
        }
        if omega.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: omega.dim(),
            });
        }
        Ok(Self { dim, c, omega })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn c(&self, k: usize, i: usize, j: usize) -> &T {
        &self.c[self.at(k, i, j)]
    }

    pub fn omega(&self, i: usize, j: usize) -> &T {
        &self.omega[(i, j)]
    }

    pub fn omega_form(&self) -> &TwoForm<T> {
        &self.omega
    }

    /// Sets a single structure constant without touching its skew partner.
    pub fn set_c(&mut self, k: usize, i: usize, j: usize, value: T) {
        let at = self.at(k, i, j);
        self.c[at] = value;
    }

    /// Sets the `e_k` component of `[e_i, e_j]` and of `[e_j, e_i]`.
    pub fn set_bracket(&mut self, i: usize, j: usize, k: usize, value: T) {
        self.set_c(k, j, i, -value.clone());
        self.set_c(k, i, j, value);
    }

    /// Sets `ω(e_i, e_j) = value` and `ω(e_j, e_i) = -value`.
    pub fn set_omega(&mut self, i: usize, j: usize, value: T) {
        self.omega[(j, i)] = -value.clone();
        self.omega[(i, j)] = value;
    }

    pub fn with_omega(&self, omega: TwoForm<T>) -> Result<Self> {
        Self::from_parts(self.dim, self.c.clone(), omega)
    }

    fn at(&self, k: usize, i: usize, j: usize) -> usize {
        (k * self.dim + i) * self.dim + j
    }

    /// Every index pair violating skew-symmetry of the bracket or the 2-form.
    pub fn validate_skew(&self) -> Vec<SkewViolation> {
        let n = self.dim;
        let mut report = Vec::new();
        for k in 0..n {
            for i in 0..n {
                for j in i..n {
                    let sum = self.c(k, i, j).clone() + self.c(k, j, i).clone();
                    if !sum.is_zero() {
                        report.push(SkewViolation::Bracket {
                            k: k + 1,
                            i: i + 1,
                            j: j + 1,
                        });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i..n {
                let sum = self.omega(i, j).clone() + self.omega(j, i).clone();
                if !sum.is_zero() {
                    report.push(SkewViolation::Omega { i: i + 1, j: j + 1 });
                }
            }
        }
        report
    }

    fn ensure_skew(&self) -> Result<()> {
        match self.validate_skew().len() {
            0 => Ok(()),
            n => Err(Error::NotSkew(n)),
        }
    }

    fn check_len(&self, v: &[T]) -> Result<()> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: v.len(),
            })
        }
    }

    /// Basis vector `e_i` (0-based).
    pub fn basis(&self, i: usize) -> Vec<T> {
        (0..self.dim).map(|j| delta(i, j)).collect()
    }

    /// `[X, Y]_k = c^k_ij X^i Y^j`.
    pub fn bracket(&self, x: &[T], y: &[T]) -> Result<Vec<T>> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    fn bracket_unchecked(&self, x: &[T], y: &[T]) -> Vec<T> {
        let n = self.dim;
        let mut out = vec![T::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i].clone() * y[j].clone();
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.c(k, i, j);
                    if !c.is_zero() {
                        *slot += c.clone() * xy.clone();
                    }
                }
            }
        }
        out
    }

    /// Left side of the deformed identity: `[A,[B,C]] + [C,[A,B]] + [B,[C,A]]`.
    pub fn jacobiator(&self, a: &[T], b: &[T], c: &[T]) -> Result<Vec<T>> {
        for v in [a, b, c] {
            self.check_len(v)?;
        }
        let t1 = self.bracket_unchecked(a, &self.bracket_unchecked(b, c));
        let t2 = self.bracket_unchecked(c, &self.bracket_unchecked(a, b));
        let t3 = self.bracket_unchecked(b, &self.bracket_unchecked(c, a));
        Ok(add3(&t1, &t2, &t3))
    }

    /// Right side of the deformed identity: `ω(B,C)A + ω(A,B)C + ω(C,A)B`.
    pub fn omega_rhs(&self, a: &[T], b: &[T], c: &[T]) -> Result<Vec<T>> {
        for v in [a, b, c] {
            self.check_len(v)?;
        }
        Ok(omega_rhs_of(&self.omega, a, b, c))
    }

    /// Fully antisymmetrized component form of the identity,
    /// `R^m_ljk = c^m_i[l c^i_jk] + δ^m_[l ω_jk]` with weight 1/3! on the
    /// antisymmetrization. The pair is an ω-deformed Lie algebra iff `R ≡ 0`.
    pub fn residual(&self) -> Result<ResidualTensor<T>> {
        self.ensure_skew()?;
        let n = self.dim;
        let idx = |m: usize, l: usize, j: usize, k: usize| ((m * n + l) * n + j) * n + k;
        let mut raw = vec![T::zero(); n * n * n * n];
        for m in 0..n {
            for l in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let mut acc = T::zero();
                        for i in 0..n {
                            let a = self.c(m, i, l);
                            let b = self.c(i, j, k);
                            if !a.is_zero() && !b.is_zero() {
                                acc += a.clone() * b.clone();
                            }
                        }
                        if m == l {
                            acc += self.omega(j, k).clone();
                        }
                        raw[idx(m, l, j, k)] = acc;
                    }
                }
            }
        }
        let sixth = T::one() / T::from_int(6);
        let mut entries = vec![T::zero(); n * n * n * n];
        for m in 0..n {
            for l in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let even = raw[idx(m, l, j, k)].clone()
                            + raw[idx(m, j, k, l)].clone()
                            + raw[idx(m, k, l, j)].clone();
                        let odd = raw[idx(m, j, l, k)].clone()
                            + raw[idx(m, l, k, j)].clone()
                            + raw[idx(m, k, j, l)].clone();
                        entries[idx(m, l, j, k)] = (even - odd) * sixth.clone();
                    }
                }
            }
        }
        Ok(ResidualTensor { dim: n, entries })
    }

    /// Whether the pair satisfies the deformed Jacobi identity.
    pub fn is_deformed_lie_algebra(&self) -> Result<bool> {
        Ok(self.residual()?.is_zero())
    }

    /// Change of basis `e'_j = P^q_j e_q` (columns of `P` are the new basis
    /// vectors): `c'^i_jk = (P⁻¹)^i_p c^p_qr P^q_j P^r_k`, `ω' = Pᵀ ω P`.
    ///
    /// `transport(transport(s, P), Q) == transport(s, P·Q)`.
    pub fn transport(&self, p: &Matrix<T>) -> Result<Self> {
        let n = self.dim;
        if p.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: p.dim(),
            });
        }
        let p_inv = p.invert()?;
        let at = |a: usize, b: usize, c: usize| (a * n + b) * n + c;

        let mut t1 = vec![T::zero(); n * n * n];
        for a in 0..n {
            for q in 0..n {
                for r in 0..n {
                    let c = self.c(a, q, r);
                    if c.is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        t1[at(a, q, k)] += c.clone() * p[(r, k)].clone();
                    }
                }
            }
        }
        let mut t2 = vec![T::zero(); n * n * n];
        for a in 0..n {
            for q in 0..n {
                for j in 0..n {
                    let pq = &p[(q, j)];
                    if pq.is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        t2[at(a, j, k)] += pq.clone() * t1[at(a, q, k)].clone();
                    }
                }
            }
        }
        let mut c = vec![T::zero(); n * n * n];
        for i in 0..n {
            for a in 0..n {
                let pi = &p_inv[(i, a)];
                if pi.is_zero() {
                    continue;
                }
                for j in 0..n {
                    for k in 0..n {
                        c[at(i, j, k)] += pi.clone() * t2[at(a, j, k)].clone();
                    }
                }
            }
        }
        let omega = &(&p.transpose() * &self.omega) * p;
        Self::from_parts(n, c, omega)
    }

    /// Largest absolute entry difference to `other` (same dimension assumed).
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let c = self
            .c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| (a.to_f64() - b.to_f64()).abs());
        let dim = self.dim;
        let w = (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .map(|(i, j)| (self.omega(i, j).to_f64() - other.omega(i, j).to_f64()).abs());
        c.chain(w).fold(0.0, f64::max)
    }

    /// Largest absolute entry.
    pub fn max_abs_entry(&self) -> f64 {
        let dim = self.dim;
        self.c
            .iter()
            .map(|v| v.to_f64().abs())
            .chain(
                (0..dim)
                    .flat_map(|i| (0..dim).map(move |j| (i, j)))
                    .map(|(i, j)| self.omega(i, j).to_f64().abs()),
            )
            .fold(0.0, f64::max)
    }
}

impl AlgebraSpec<Scalar> {
    pub fn to_f64(&self) -> AlgebraSpec<f64> {
        AlgebraSpec {
            dim: self.dim,
            c: self.c.iter().map(Field::to_f64).collect(),
            omega: self.omega.to_f64(),
        }
    }
}

impl<T: Field> fmt::Debug for AlgebraSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraSpec(dim={}", self.dim)?;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let terms: Vec<String> = (0..self.dim)
                    .filter(|&k| !self.c(k, i, j).is_zero())
                    .map(|k| format!("{}*e{}", self.c(k, i, j), k + 1))
                    .collect();
                if !terms.is_empty() {
                    write!(f, "; [e{},e{}]={}", i + 1, j + 1, terms.join("+"))?;
                }
            }
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if !self.omega(i, j).is_zero() {
                    write!(f, "; w{}{}={}", i + 1, j + 1, self.omega(i, j))?;
                }
            }
        }
        write!(f, ")")
    }
}

/// `R[m][l][j][k]`, totally antisymmetric in `(l, j, k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualTensor<T = Scalar> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Field> ResidualTensor<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, m: usize, l: usize, j: usize, k: usize) -> &T {
        let n = self.dim;
        &self.entries[((m * n + l) * n + j) * n + k]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    /// Nonzero components with `l < j < k` (0-based), the rest follow by antisymmetry.
    pub fn nonzero_components(&self) -> Vec<([usize; 4], T)> {
        let n = self.dim;
        let mut out = Vec::new();
        for m in 0..n {
            for l in 0..n {
                for j in l + 1..n {
                    for k in j + 1..n {
                        let v = self.get(m, l, j, k);
                        if !v.is_zero() {
                            out.push(([m, l, j, k], v.clone()));
                        }
                    }
                }
            }
        }
        out
    }
}

fn add3<T: Field>(a: &[T], b: &[T], c: &[T]) -> Vec<T> {
    a.iter()
        .zip(b)
        .zip(c)
        .map(|((x, y), z)| x.clone() + y.clone() + z.clone())
        .collect()
}

fn omega_rhs_of<T: Field>(omega: &TwoForm<T>, a: &[T], b: &[T], c: &[T]) -> Vec<T> {
    let form = |x: &[T], y: &[T]| omega.row_form(x, y);
    let bc = form(b, c);
    let ab = form(a, b);
    let ca = form(c, a);
    (0..a.len())
        .map(|i| bc.clone() * a[i].clone() + ab.clone() * c[i].clone() + ca.clone() * b[i].clone())
        .collect()
}

impl<T: Field> Matrix<T> {
    /// Bilinear form `xᵀ M y`.
    pub fn row_form(&self, x: &[T], y: &[T]) -> T {
        let my = self.mul_vec(y);
        x.iter()
            .zip(my)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b)
    }
}

/// True iff `ω(B,C)A + ω(A,B)C + ω(C,A)B` vanishes on every basis triple.
///
/// Always true in dimension 2; in any other dimension only for `ω = 0`.
pub fn omega_rhs_is_identically_zero<T: Field>(omega: &TwoForm<T>) -> bool {
    let n = omega.dim();
    let e = |i: usize| -> Vec<T> { (0..n).map(|j| delta(i, j)).collect() };
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                omega_rhs_of(omega, &e(i), &e(j), &e(k))
                    .iter()
                    .all(|x| x.is_zero())
            })
        })
    })
}
