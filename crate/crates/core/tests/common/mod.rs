#![allow(dead_code)]

use omega_lie::scalar::{int, ratio};
use omega_lie::{AlgebraSpec, Matrix, Scalar};
use rand::Rng;

pub fn random_int<R: Rng>(rng: &mut R, bound: i64) -> Scalar {
    int(rng.gen_range(-bound..=bound))
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Scalar {
    ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

/// Skew bracket with independent integer entries in `[-bound, bound]`, ω = 0.
pub fn random_bracket<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> AlgebraSpec {
    let mut s = AlgebraSpec::abelian(dim);
    for i in 0..dim {
        for j in i + 1..dim {
            for k in 0..dim {
                s.set_bracket(i, j, k, random_int(rng, bound));
            }
        }
    }
    s
}

pub fn random_rational_bracket<R: Rng>(rng: &mut R, dim: usize) -> AlgebraSpec {
    let mut s = AlgebraSpec::abelian(dim);
    for i in 0..dim {
        for j in i + 1..dim {
            for k in 0..dim {
                s.set_bracket(i, j, k, random_rational(rng));
            }
        }
    }
    s
}

pub fn random_two_form<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> Matrix {
    let mut w = Matrix::zeros(dim);
    for i in 0..dim {
        for j in i + 1..dim {
            let v = random_int(rng, bound);
            w[(j, i)] = -v.clone();
            w[(i, j)] = v;
        }
    }
    w
}

pub fn random_symmetric<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> Matrix {
    let mut m = Matrix::zeros(dim);
    for i in 0..dim {
        for j in i..dim {
            let v = random_int(rng, bound);
            m[(j, i)] = v.clone();
            m[(i, j)] = v;
        }
    }
    m
}

pub fn random_vector<R: Rng>(rng: &mut R) -> [Scalar; 3] {
    std::array::from_fn(|_| random_rational(rng))
}

/// Every nonzero skew form with entries in `{-1, 0, 1}`.
pub fn sign_grid(dim: usize) -> Vec<Matrix> {
    let pairs: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (i + 1..dim).map(move |j| (i, j)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut w = Matrix::zeros(dim);
            for &(i, j) in &pairs {
                let v = int(code as i64 % 3 - 1);
                code /= 3;
                w[(j, i)] = -v.clone();
                w[(i, j)] = v;
            }
            w
        })
        .filter(|w| (0..dim).any(|i| (0..dim).any(|j| w[(i, j)] != int(0))))
        .collect()
}
