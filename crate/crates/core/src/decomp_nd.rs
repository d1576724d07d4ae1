//! Trace decomposition of structure constants in any dimension,
//!
//! ```text
//! c^i_jk = α^i_jk + a_k δ^i_j − a_j δ^i_k,   α^i_ik = 0,   a_k = c^i_ik / (n − 1)
//! ```
//!
//! and the only 2-form such a bracket can carry,
//! `ω_jk = (n − 1)/(n − 2) · a_i α^i_jk`.
//!
//! Note the sign of `a` here is opposite to the dimension-3 triple in
//! [`crate::decomp3d`]: for `n = 3`, `split_trace(c).a == −decompose(c).a`.

use crate::algebra::{AlgebraSpec, TwoForm};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensor::{delta, Matrix};

/// Trace part `a_k` and trace-free part `α^i_jk` (layout `[i][j][k]`).
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralSplit<T = Scalar> {
    dim: usize,
    alpha: Vec<T>,
    a: Vec<T>,
}

impl<T: Field> GeneralSplit<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn a(&self) -> &[T] {
        &self.a
    }

    pub fn alpha(&self, i: usize, j: usize, k: usize) -> &T {
        &self.alpha[(i * self.dim + j) * self.dim + k]
    }

    /// `Σ_i α^i_ik` for each `k`; identically zero for a valid split.
    pub fn alpha_traces(&self) -> Vec<T> {
        (0..self.dim)
            .map(|k| (0..self.dim).fold(T::zero(), |acc, i| acc + self.alpha(i, i, k).clone()))
            .collect()
    }

    /// `α^i_jk + a_k δ^i_j − a_j δ^i_k` in `[i][j][k]` layout.
    pub fn reassemble(&self) -> Vec<T> {
        let n = self.dim;
        let mut c = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c.push(
                        self.alpha(i, j, k).clone() + self.a[k].clone() * delta::<T>(i, j)
                            - self.a[j].clone() * delta::<T>(i, k),
                    );
                }
            }
        }
        c
    }
}

pub fn split_trace<T: Field>(spec: &AlgebraSpec<T>) -> Result<GeneralSplit<T>> {
    let n = spec.dim();
    if n < 2 {
        return Err(Error::UnsupportedDimension {
            requirement: ">= 2",
            actual: n,
        });
    }
    let denom = T::from_int(n as i64 - 1);
    let a: Vec<T> = (0..n)
        .map(|k| (0..n).fold(T::zero(), |acc, i| acc + spec.c(i, i, k).clone()) / denom.clone())
        .collect();
    let mut alpha = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                alpha.push(
                    spec.c(i, j, k).clone() - a[k].clone() * delta::<T>(i, j)
                        + a[j].clone() * delta::<T>(i, k),
                );
            }
        }
    }
    Ok(GeneralSplit { dim: n, alpha, a })
}

/// `ω_jk = (n − 1)/(n − 2) · a_i α^i_jk`.
pub fn induced_omega<T: Field>(split: &GeneralSplit<T>) -> Result<TwoForm<T>> {
    let n = split.dim;
    if n < 3 {
        return Err(Error::UnsupportedDimension {
            requirement: ">= 3",
            actual: n,
        });
    }
    let factor = T::from_int(n as i64 - 1) / T::from_int(n as i64 - 2);
    let mut omega = Matrix::zeros(n);
    for j in 0..n {
        for k in 0..n {
            let contracted = (0..n).fold(T::zero(), |acc, i| {
                acc + split.a[i].clone() * split.alpha(i, j, k).clone()
            });
            omega[(j, k)] = factor.clone() * contracted;
        }
    }
    Ok(omega)
}

/// The unique 2-form compatible with the bracket of `spec`, if any.
///
/// The supplied `ω` of `spec` is ignored. On failure the forced candidate is
/// returned inside [`Error::NotDeformable`].
pub fn deformability(spec: &AlgebraSpec) -> Result<TwoForm> {
    if spec.dim() < 3 {
        return Err(Error::UnsupportedDimension {
            requirement: ">= 3",
            actual: spec.dim(),
        });
    }
    let violations = spec.validate_skew().len();
    if violations > 0 {
        return Err(Error::NotSkew(violations));
    }
    let candidate = induced_omega(&split_trace(spec)?)?;
    let with_candidate = spec.with_omega(candidate.clone())?;
    if with_candidate.residual()?.is_zero() {
        Ok(candidate)
    } else {
        Err(Error::NotDeformable { candidate })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp3d::{reconstruct, NabTriple};
    use crate::scalar::int;
    use num::Zero;

    fn ix_a1() -> AlgebraSpec {
        reconstruct(
            &NabTriple::forced(
                Matrix::diagonal(&[int(1), int(1), int(1)]),
                [int(0), int(0), int(1)],
            )
            .unwrap(),
        )
    }

    #[test]
    fn abelian_splits_to_zero() {
        for dim in 2..6 {
            let s = split_trace(&AlgebraSpec::<Scalar>::abelian(dim)).unwrap();
            assert!(s.a().iter().all(|x| x.is_zero()));
            assert!(s.reassemble().iter().all(|x| x.is_zero()));
        }
        assert!(split_trace(&AlgebraSpec::<Scalar>::abelian(1)).is_err());
    }

    #[test]
    fn ix_a_split_and_induced_omega() {
        let spec = ix_a1();
        let s = split_trace(&spec).unwrap();
        assert_eq!(s.a(), &[int(0), int(0), int(-1)]);
        // α^i_jk = n^il ε_jkl with n = identity
        assert_eq!(s.alpha(2, 0, 1), &int(1));
        assert_eq!(s.alpha(0, 1, 2), &int(1));
        assert_eq!(s.alpha(1, 2, 0), &int(1));
        assert_eq!(s.alpha(2, 2, 0), &int(0));
        assert!(s.alpha_traces().iter().all(|x| x.is_zero()));
        let w = induced_omega(&s).unwrap();
        assert_eq!(w[(0, 1)], int(-2));
        assert_eq!(w[(1, 2)], int(0));
        assert_eq!(w[(2, 0)], int(0));
        assert_eq!(&w, spec.omega_form());
    }

    #[test]
    fn type_v_split() {
        let mut v = AlgebraSpec::abelian(3);
        v.set_bracket(2, 0, 0, int(1));
        v.set_bracket(1, 2, 1, int(-1));
        let s = split_trace(&v).unwrap();
        assert_eq!(s.a(), &[int(0), int(0), int(-1)]);
        assert!(s.alpha.iter().all(|x| x.is_zero()));
        assert!(induced_omega(&s).unwrap() == Matrix::zeros(3));
    }

    #[test]
    fn induced_omega_needs_dim_three() {
        let s = split_trace(&AlgebraSpec::<Scalar>::abelian(2)).unwrap();
        assert!(matches!(
            induced_omega(&s),
            Err(Error::UnsupportedDimension { actual: 2, .. })
        ));
    }

    #[test]
    fn deformability_returns_table_omega() {
        let spec = ix_a1();
        let bare = spec.with_omega(Matrix::zeros(3)).unwrap();
        assert_eq!(&deformability(&bare).unwrap(), spec.omega_form());
    }
}
