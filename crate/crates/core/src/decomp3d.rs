//! Dimension-3 dictionary between `(c, ω)` and the triple `(n, a, b)`:
//!
//! ```text
//! c^i_jk = n^il ε_jkl − δ^i_j a_k + δ^i_k a_j
//! ω_ij   = ε_ijk b^k
//! ```
//!
//! The deformed Jacobi identity reduces to `t^m = 4 n^ml a_l + 2 b^m = 0`,
//! so the 2-form is forced: `b^i = −2 n^il a_l`.

use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use crate::scalar::{half, Field, Scalar};
use crate::tensor::{delta, epsilon, Matrix};

/// `n^il` symmetric, covector `a_m`, vector `b^k`.
#[derive(Clone, PartialEq)]
pub struct NabTriple<T = Scalar> {
    n: Matrix<T>,
    a: [T; 3],
    b: [T; 3],
}

impl<T: Field> NabTriple<T> {
    pub fn new(n: Matrix<T>, a: [T; 3], b: [T; 3]) -> Result<Self> {
        if n.dim() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                actual: n.dim(),
            });
        }
        if !n.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Self { n, a, b })
    }

    /// Triple whose `b` is the forced one, so it always describes an algebra.
    pub fn forced(n: Matrix<T>, a: [T; 3]) -> Result<Self> {
        let b = forced_b(&n, &a);
        Self::new(n, a, b)
    }

    pub fn n(&self) -> &Matrix<T> {
        &self.n
    }

    pub fn a(&self) -> &[T; 3] {
        &self.a
    }

    pub fn b(&self) -> &[T; 3] {
        &self.b
    }

    /// Whether `b` is the forced vector `−2 n a`.
    pub fn is_consistent(&self) -> bool {
        forced_b(&self.n, &self.a) == self.b
    }
}

impl<T: Field> std::fmt::Debug for NabTriple<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("NabTriple")
            .field("n", &self.n)
            .field(
                "a",
                &self.a.iter().map(ToString::to_string).collect::<Vec<_>>(),
            )
            .field(
                "b",
                &self.b.iter().map(ToString::to_string).collect::<Vec<_>>(),
            )
            .finish()
    }
}

fn ensure_dim3<T: Field>(spec: &AlgebraSpec<T>) -> Result<()> {
    if spec.dim() == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension {
            requirement: "3",
            actual: spec.dim(),
        })
    }
}

/// `c^il = ½ c^i_jk ε^jkl`; symmetric part is `n`, antisymmetric part carries `a`.
pub fn dual_c<T: Field>(spec: &AlgebraSpec<T>) -> Result<Matrix<T>> {
    ensure_dim3(spec)?;
    let mut out = Matrix::zeros(3);
    for i in 0..3 {
        for l in 0..3 {
            let mut acc = T::zero();
            for j in 0..3 {
                for k in 0..3 {
                    match epsilon(j, k, l) {
                        0 => {}
                        1 => acc += spec.c(i, j, k).clone(),
                        _ => acc -= spec.c(i, j, k).clone(),
                    }
                }
            }
            out[(i, l)] = acc * half();
        }
    }
    Ok(out)
}

pub fn decompose<T: Field>(spec: &AlgebraSpec<T>) -> Result<NabTriple<T>> {
    ensure_dim3(spec)?;
    let violations = spec.validate_skew().len();
    if violations > 0 {
        return Err(Error::NotSkew(violations));
    }
    let dual = dual_c(spec)?;
    let mut n = Matrix::zeros(3);
    for i in 0..3 {
        for l in 0..3 {
            n[(i, l)] = (dual[(i, l)].clone() + dual[(l, i)].clone()) * half();
        }
    }
    let a = std::array::from_fn(|m| {
        let mut acc = T::zero();
        for i in 0..3 {
            for l in 0..3 {
                acc += T::from_int(epsilon(m, i, l)) * dual[(i, l)].clone();
            }
        }
        acc * half()
    });
    let b = std::array::from_fn(|k| {
        let mut acc = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                acc += T::from_int(epsilon(i, j, k)) * spec.omega(i, j).clone();
            }
        }
        acc * half()
    });
    NabTriple::new(n, a, b)
}

pub fn reconstruct<T: Field>(triple: &NabTriple<T>) -> AlgebraSpec<T> {
    let NabTriple { n, a, b } = triple;
    let mut spec = AlgebraSpec::abelian(3);
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let mut v = T::zero();
                for l in 0..3 {
                    v += T::from_int(epsilon(j, k, l)) * n[(i, l)].clone();
                }
                v -= delta::<T>(i, j) * a[k].clone();
                v += delta::<T>(i, k) * a[j].clone();
                spec.set_c(i, j, k, v);
            }
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            let mut w = T::zero();
            for k in 0..3 {
                w += T::from_int(epsilon(i, j, k)) * b[k].clone();
            }
            if i < j {
                spec.set_omega(i, j, w);
            }
        }
    }
    spec
}

/// `t^m = 4 n^ml a_l + 2 b^m`; zero iff the reconstructed pair is an algebra.
pub fn t_vector<T: Field>(triple: &NabTriple<T>) -> [T; 3] {
    let na = triple.n.mul_vec(&triple.a);
    std::array::from_fn(|m| T::from_int(4) * na[m].clone() + T::from_int(2) * triple.b[m].clone())
}

/// `b^i = −2 n^il a_l`.
pub fn forced_b<T: Field>(n: &Matrix<T>, a: &[T; 3]) -> [T; 3] {
    let na = n.mul_vec(a);
    std::array::from_fn(|i| T::from_int(-2) * na[i].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn diag(d: [i64; 3]) -> Matrix {
        Matrix::diagonal(&d.map(int))
    }

    fn vec3(v: [i64; 3]) -> [Scalar; 3] {
        v.map(int)
    }

    #[test]
    fn dual_of_type_ii_and_v() {
        let mut ii = AlgebraSpec::abelian(3);
        ii.set_bracket(1, 2, 0, int(1));
        assert_eq!(dual_c(&ii).unwrap(), diag([1, 0, 0]));
        assert_eq!(
            dual_c(&AlgebraSpec::<Scalar>::abelian(3)).unwrap(),
            Matrix::zeros(3)
        );

        let mut v = AlgebraSpec::abelian(3);
        v.set_bracket(2, 0, 0, int(1));
        v.set_bracket(1, 2, 1, int(-1));
        let d = dual_c(&v).unwrap();
        assert_eq!(d, d.transpose().scale(&int(-1)));
        let t = decompose(&v).unwrap();
        assert_eq!(t.n(), &Matrix::zeros(3));
        assert_eq!(t.a(), &vec3([0, 0, 1]));
    }

    #[test]
    fn decompose_table_rows() {
        let mut ii = AlgebraSpec::abelian(3);
        ii.set_bracket(1, 2, 0, int(1));
        let t = decompose(&ii).unwrap();
        assert_eq!(
            (t.n(), t.a(), t.b()),
            (&diag([1, 0, 0]), &vec3([0; 3]), &vec3([0; 3]))
        );

        let ix = reconstruct(
            &NabTriple::new(diag([1, 1, 1]), vec3([0, 0, 1]), vec3([0, 0, -2])).unwrap(),
        );
        let t = decompose(&ix).unwrap();
        assert_eq!(t.b(), &vec3([0, 0, -2]));
        assert_eq!(t.a(), &vec3([0, 0, 1]));

        let zero = decompose(&AlgebraSpec::<Scalar>::abelian(3)).unwrap();
        assert_eq!(zero.n(), &Matrix::zeros(3));
        assert!(decompose(&AlgebraSpec::<Scalar>::abelian(4)).is_err());
    }

    #[test]
    fn reconstruct_ix_a_relations() {
        let t = NabTriple::new(diag([1, 1, 1]), vec3([0, 0, 1]), vec3([0, 0, -2])).unwrap();
        let s = reconstruct(&t);
        let e = |i: usize| s.basis(i);
        assert_eq!(s.bracket(&e(0), &e(1)).unwrap(), e(2));
        assert_eq!(
            s.bracket(&e(2), &e(0)).unwrap(),
            vec![int(1), int(1), int(0)]
        );
        assert_eq!(
            s.bracket(&e(1), &e(2)).unwrap(),
            vec![int(1), int(-1), int(0)]
        );
        assert_eq!(s.omega(0, 1), &int(-2));
        assert!(s.residual().unwrap().is_zero());

        let vi_x = NabTriple::new(diag([1, -1, 0]), vec3([1, 0, 0]), vec3([-2, 0, 0])).unwrap();
        assert_eq!(reconstruct(&vi_x).omega(1, 2), &int(-2));

        let zero = NabTriple::new(Matrix::zeros(3), vec3([0; 3]), vec3([0; 3])).unwrap();
        assert_eq!(reconstruct(&zero), AlgebraSpec::abelian(3));
    }

    #[test]
    fn t_vector_examples() {
        let t = NabTriple::new(diag([1, 1, 1]), vec3([0, 0, 1]), vec3([0, 0, -2])).unwrap();
        assert_eq!(t_vector(&t), vec3([0, 0, 0]));
        let t = NabTriple::new(diag([1, 1, 1]), vec3([0, 0, 1]), vec3([0, 0, 0])).unwrap();
        assert_eq!(t_vector(&t), vec3([0, 0, 4]));
        let t = NabTriple::new(Matrix::zeros(3), vec3([0; 3]), vec3([0; 3])).unwrap();
        assert_eq!(t_vector(&t), vec3([0; 3]));
    }

    #[test]
    fn forced_b_examples() {
        assert_eq!(
            forced_b(&diag([1, 1, 1]), &vec3([0, 0, 1])),
            vec3([0, 0, -2])
        );
        assert_eq!(
            forced_b(&diag([1, 1, -1]), &vec3([0, 0, 1])),
            vec3([0, 0, 2])
        );
        assert_eq!(
            forced_b(&diag([3, -1, 2]), &vec3([0, 0, 0])),
            vec3([0, 0, 0])
        );
    }

    #[test]
    fn asymmetric_n_is_rejected() {
        let mut n = Matrix::zeros(3);
        n[(0, 1)] = int(1);
        assert!(matches!(
            NabTriple::new(n, vec3([0; 3]), vec3([0; 3])),
            Err(Error::NotSymmetric)
        ));
    }
}
