//! Diagonal rescalings `e_i → λ_i e_i` that keep a normalized `n` fixed.
//!
//! Rescaling sends `n_i` to `λ1λ2λ3 · n_i / λ_i²`, so each nonzero `n_i`
//! imposes `λ_i = λ_j λ_k` with `(i, j, k)` cyclic. Zero entries impose nothing.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Solved form of the scaling group. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalingStructure {
    /// Every triple of nonzero `λ`.
    Unconstrained,
    /// `λ_dependent = λ_{dependent+1} λ_{dependent+2}`, the other two free.
    OneConstraint { dependent: usize },
    /// `λ_sign = ±1`, `λ_dependent = λ_sign λ_free`, `λ_free` arbitrary.
    TwoConstraints {
        free: usize,
        sign: usize,
        dependent: usize,
    },
    /// A finite group.
    Finite(Vec<[i64; 3]>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualScalings {
    active: [bool; 3],
}

impl ResidualScalings {
    pub fn active(&self) -> [bool; 3] {
        self.active
    }

    /// Whether `λ` satisfies every active constraint (and has no zero entry).
    pub fn admits<T: Field>(&self, lambda: &[T; 3]) -> bool {
        if lambda.iter().any(|x| x.is_zero()) {
            return false;
        }
        (0..3).all(|i| {
            !self.active[i]
                || lambda[i] == lambda[(i + 1) % 3].clone() * lambda[(i + 2) % 3].clone()
        })
    }

    pub fn structure(&self) -> ScalingStructure {
        let active: Vec<usize> = (0..3).filter(|&i| self.active[i]).collect();
        match active.as_slice() {
            [] => ScalingStructure::Unconstrained,
            [d] => ScalingStructure::OneConstraint { dependent: *d },
            [i, j] => ScalingStructure::TwoConstraints {
                free: *i,
                sign: 3 - i - j,
                dependent: *j,
            },
            _ => ScalingStructure::Finite(vec![[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]),
        }
    }
}

impl fmt::Display for ResidualScalings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = |i: usize| format!("l{}", i + 1);
        match self.structure() {
            ScalingStructure::Unconstrained => write!(f, "all nonzero (l1, l2, l3)"),
            ScalingStructure::OneConstraint { dependent: d } => write!(
                f,
                "{} = {}*{}, {} and {} free",
                l(d),
                l((d + 1) % 3),
                l((d + 2) % 3),
                l((d + 1) % 3),
                l((d + 2) % 3)
            ),
            ScalingStructure::TwoConstraints {
                free,
                sign,
                dependent,
            } => write!(
                f,
                "{} = +-1, {} = {}*{}, {} free",
                l(sign),
                l(dependent),
                l(sign),
                l(free),
                l(free)
            ),
            ScalingStructure::Finite(elements) => {
                let parts: Vec<String> = elements.iter().map(|e| format!("{e:?}")).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
        }
    }
}

/// Residual scalings of a normalized diagonal `n` (entries in `{-1, 0, 1}`).
pub fn residual_scalings<T: Field>(n_diag: &[T; 3]) -> Result<ResidualScalings> {
    let unit = |x: &T| x.is_zero() || x.abs() == T::one();
    if !n_diag.iter().all(unit) {
        return Err(Error::NotNormalized);
    }
    Ok(ResidualScalings {
        active: std::array::from_fn(|i| !n_diag[i].is_zero()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Scalar};

    fn diag(d: [i64; 3]) -> [Scalar; 3] {
        d.map(int)
    }

    #[test]
    fn full_rank_group_is_klein_four() {
        let s = residual_scalings(&diag([1, 1, 1])).unwrap();
        let ScalingStructure::Finite(elements) = s.structure() else {
            panic!("expected finite group");
        };
        // brute force over small integers: the solutions are exactly these four
        let mut found = Vec::new();
        for a in -3..=3i64 {
            for b in -3..=3i64 {
                for c in -3..=3i64 {
                    if s.admits(&[int(a), int(b), int(c)]) {
                        found.push([a, b, c]);
                    }
                }
            }
        }
        found.sort();
        let mut expected = elements.clone();
        expected.sort();
        assert_eq!(found, expected);
        assert_eq!(elements.len(), 4);
    }

    #[test]
    fn zero_matrix_is_unconstrained() {
        let s = residual_scalings(&diag([0, 0, 0])).unwrap();
        assert_eq!(s.structure(), ScalingStructure::Unconstrained);
        assert!(s.admits(&[int(2), int(-7), int(5)]));
        assert!(!s.admits(&[int(2), int(0), int(5)]));
    }

    #[test]
    fn rank_one_has_one_constraint() {
        let s = residual_scalings(&diag([1, 0, 0])).unwrap();
        assert_eq!(
            s.structure(),
            ScalingStructure::OneConstraint { dependent: 0 }
        );
        assert!(s.admits(&[int(6), int(2), int(3)]));
        assert!(!s.admits(&[int(5), int(2), int(3)]));
    }

    #[test]
    fn rank_two_fixes_kernel_scale_up_to_sign() {
        let s = residual_scalings(&diag([1, -1, 0])).unwrap();
        assert_eq!(
            s.structure(),
            ScalingStructure::TwoConstraints {
                free: 0,
                sign: 2,
                dependent: 1
            }
        );
        assert!(s.admits(&[int(3), int(-3), int(-1)]));
        assert!(!s.admits(&[int(3), int(6), int(2)]));
    }

    #[test]
    fn rejects_unnormalized_diagonal() {
        assert!(residual_scalings(&diag([2, 0, 0])).is_err());
    }
}
