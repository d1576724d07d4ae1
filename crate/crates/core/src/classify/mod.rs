//! Orbit normalization of 3-dimensional ω-deformed Lie algebras.
//!
//! The label is decided in exact arithmetic: congruence-diagonalize `n`, fix
//! the overall sign so that `p >= q`, order the diagonal as positives,
//! negatives, zeros, and read off the inertia together with the position of
//! `a` relative to `n`. Square roots are only needed to reach the ±1/0 normal
//! form and to report the continuous parameter, so that last stage runs on
//! `f64` and is checked against the canonical table algebra.

mod causal;
mod label;
mod orbit;
mod scalings;

pub use causal::{causal_character, CausalCharacter, CausalKind};
pub use label::{generate, generate_in, table_triple, BianchiLabel, BianchiType, TableRow};
pub use orbit::{orbit_sample, orbit_transform, random_invertible};
pub use scalings::{residual_scalings, ResidualScalings, ScalingStructure};

use num::{Signed, Zero};

use crate::algebra::AlgebraSpec;
use crate::decomp3d::{decompose, t_vector, NabTriple};
use crate::error::{Error, Result};
use crate::scalar::{int, Field, Scalar};
use crate::tensor::{Inertia, Matrix};

use causal::causal_of_diagonal;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Facts behind the label, all computed in rational arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificates {
    /// Inertia of `n` with `positive >= negative`.
    pub inertia: Inertia,
    pub a_zero: bool,
    /// Causal character of `a` in the canonical frame of the reported label.
    pub causal: CausalCharacter,
    /// Exact orbit invariant whose absolute value is the squared parameter:
    /// `Q / det n` for rank 3 (signed), `a3² / |n1 n2|` for `a` in the kernel
    /// of a rank-2 `n`.
    pub invariant: Option<Scalar>,
}

#[derive(Debug, Clone)]
pub struct NormalForm {
    pub label: BianchiLabel,
    /// Table algebra of `label` (float entries).
    pub canonical: AlgebraSpec<f64>,
    /// Basis change with `input.transport(transform) ≈ canonical`.
    pub transform: Matrix<f64>,
    pub certificates: Certificates,
    /// `(n, a, b)` of the input.
    pub decomposition: NabTriple,
    pub warnings: Vec<String>,
}

pub fn classify(spec: &AlgebraSpec) -> Result<NormalForm> {
    classify_with_tolerance(spec, DEFAULT_TOLERANCE)
}

pub fn classify_with_tolerance(spec: &AlgebraSpec, tolerance: f64) -> Result<NormalForm> {
    let decomposition = decompose(spec)?;
    let t = t_vector(&decomposition);
    if t.iter().any(|x| !x.is_zero()) {
        return Err(Error::NotAnAlgebra { t: t.to_vec() });
    }

    let frame = ExactFrame::reduce(spec, &decomposition)?;
    let decision = frame.decide();

    let mut float = FloatFrame::new(&frame);
    float.normalize_diagonal(&frame);
    let pipeline_parameter = float.reduce_covector(decision.pipeline_kind);

    let kind = decision.kind;
    let parameter = if kind.is_parametric() {
        Some(match &decision.invariant {
            Some(square) => square.to_f64().abs().sqrt(),
            None => pipeline_parameter,
        })
    } else {
        None
    };

    let canonical = generate_in::<f64>(kind, parameter.as_ref())?;
    let transported = spec.to_f64().transport(&float.p)?;
    let deviation = transported.max_abs_diff(&canonical);
    let scale = 1f64
        .max(canonical.max_abs_entry())
        .max(transported.max_abs_entry());
    if deviation.is_nan() || deviation > tolerance * scale {
        return Err(Error::NormalizationMismatch(deviation));
    }

    let mut warnings = Vec::new();
    if kind == BianchiType::VIx {
        let mut note = String::from(
            "VI_x and VI_y lie in one orbit: swapping e1 and e2 preserves n = diag(1,-1,0) \
             and maps a = (0,1,0) to (1,0,0); VI_x is reported",
        );
        if decision.pipeline_kind == BianchiType::VIy {
            note.push_str(" (input reduced to VI_y first)");
        }
        warnings.push(note);
    }
    if kind == BianchiType::VIIIna {
        warnings.push(
            "VIII_na parameter depends on the normalization path: boosts preserving \
             n = diag(1,1,-1) rescale a null covector"
                .to_string(),
        );
    }

    Ok(NormalForm {
        label: BianchiLabel { kind, parameter },
        canonical,
        transform: float.p,
        certificates: Certificates {
            inertia: frame.inertia,
            a_zero: frame.a.iter().all(|x| x.is_zero()),
            causal: decision.causal,
            invariant: decision.invariant,
        },
        decomposition,
        warnings,
    })
}

/// Exact frame where `n` is diagonal, ordered positives/negatives/zeros, `p >= q`.
struct ExactFrame {
    p: Matrix,
    d: Vec<Scalar>,
    a: [Scalar; 3],
    inertia: Inertia,
}

impl ExactFrame {
    fn reduce(spec: &AlgebraSpec, triple: &NabTriple) -> Result<Self> {
        let (s, _) = triple.n().congruence_diagonalize()?;
        let mut p = s.invert()?;
        let d = decompose(&spec.transport(&p)?)?.n().diagonal_entries();

        // n picks up det(P) under a basis change, so -I flips its sign.
        if Inertia::of_diagonal(&d).negative > Inertia::of_diagonal(&d).positive {
            p = p.scale(&int(-1));
        }
        let d = decompose(&spec.transport(&p)?)?.n().diagonal_entries();

        let mut order: Vec<usize> = (0..3).filter(|&i| d[i].is_positive()).collect();
        order.extend((0..3).filter(|&i| d[i].is_negative()));
        order.extend((0..3).filter(|&i| d[i].is_zero()));
        let mut perm = Matrix::zeros(3);
        for (new, &old) in order.iter().enumerate() {
            perm[(old, new)] = int(1);
        }
        if perm.determinant().is_negative() {
            perm = perm.scale(&int(-1));
        }
        p = &p * &perm;

        let triple = decompose(&spec.transport(&p)?)?;
        debug_assert!(triple.n().is_diagonal());
        let d = triple.n().diagonal_entries();
        let inertia = Inertia::of_diagonal(&d);
        Ok(Self {
            p,
            d,
            a: triple.a().clone(),
            inertia,
        })
    }

    fn rank(&self) -> usize {
        self.inertia.rank()
    }

    fn decide(&self) -> Decision {
        use BianchiType::*;
        let causal = causal_of_diagonal(&self.d, &self.a);
        let rank = self.rank();
        let indefinite = self.inertia.negative > 0;
        let q: Scalar = (0..rank).fold(int(0), |acc, i| {
            acc + self.d[i].clone() * self.a[i].clone() * self.a[i].clone()
        });

        let simple = |kind| Decision {
            kind,
            pipeline_kind: kind,
            causal,
            invariant: None,
        };
        let with_invariant = |kind, invariant| Decision {
            kind,
            pipeline_kind: kind,
            causal,
            invariant: Some(invariant),
        };

        if causal.kind == CausalKind::Zero {
            return simple(match (self.inertia.positive, self.inertia.negative) {
                (0, 0) => I,
                (1, 0) => II,
                (1, 1) => VI0,
                (2, 0) => VII0,
                (2, 1) => VIII,
                _ => IX,
            });
        }
        match rank {
            0 => simple(V),
            1 if causal.kind == CausalKind::KernelOnly => simple(IV),
            1 => simple(IVx),
            2 if causal.kind == CausalKind::KernelOnly => {
                let h = self.a[2].clone() * self.a[2].clone()
                    / (self.d[0].clone() * self.d[1].clone()).abs();
                with_invariant(if indefinite { VIa } else { VIIa }, h)
            }
            2 if !indefinite => simple(VIIx),
            2 => match causal.kind {
                CausalKind::Null => simple(VIn),
                CausalKind::Spacelike => simple(VIx),
                _ => Decision {
                    kind: VIx,
                    pipeline_kind: VIy,
                    causal: CausalCharacter {
                        kind: CausalKind::Spacelike,
                        mixed: causal.mixed,
                    },
                    invariant: None,
                },
            },
            _ => {
                let det = self.d.iter().fold(int(1), |acc, x| acc * x.clone());
                let r = q / det;
                if !indefinite {
                    with_invariant(IXa, r)
                } else {
                    match causal.kind {
                        CausalKind::Timelike => with_invariant(VIIIa, r),
                        CausalKind::Spacelike => with_invariant(VIIIxa, r),
                        _ => simple(VIIIna),
                    }
                }
            }
        }
    }
}

struct Decision {
    kind: BianchiType,
    /// Row the float pipeline reduces to before any final relabelling.
    pipeline_kind: BianchiType,
    causal: CausalCharacter,
    invariant: Option<Scalar>,
}

/// Accumulated basis change and the current covector `a`, in floats.
struct FloatFrame {
    p: Matrix<f64>,
    a: [f64; 3],
}

fn m3(rows: [[f64; 3]; 3]) -> Matrix<f64> {
    Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("3x3")
}

fn sign_flip(flip: [bool; 3]) -> Matrix<f64> {
    Matrix::diagonal(&flip.map(|f| if f { -1.0 } else { 1.0 }))
}

/// `e3 → e3 + s1 e1 + s2 e2`; preserves any `n` whose third row vanishes.
fn kernel_shear(s1: f64, s2: f64) -> Matrix<f64> {
    m3([[1.0, 0.0, s1], [0.0, 1.0, s2], [0.0, 0.0, 1.0]])
}

/// Symmetric boost with rapidity given by `tanh`, acting on axes `i` and `j`.
fn boost(i: usize, j: usize, tanh: f64) -> Matrix<f64> {
    let ch = 1.0 / (1.0 - tanh * tanh).sqrt();
    let sh = tanh * ch;
    let mut m = Matrix::identity(3);
    m[(i, i)] = ch;
    m[(j, j)] = ch;
    m[(i, j)] = sh;
    m[(j, i)] = sh;
    m
}

/// Rotation in the 1-2 plane taking `(x, y)` to `(hypot(x, y), 0)`.
fn plane_rotation(x: f64, y: f64) -> Matrix<f64> {
    let r = x.hypot(y);
    let (c, s) = (x / r, y / r);
    m3([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
}

impl FloatFrame {
    fn new(exact: &ExactFrame) -> Self {
        Self {
            p: exact.p.to_f64(),
            a: exact.a.clone().map(|x| x.to_f64()),
        }
    }

    /// `P ← P·Q`, `a ← Qᵀ a`.
    fn apply(&mut self, q: Matrix<f64>) {
        let a = self.a;
        self.a = std::array::from_fn(|j| (0..3).map(|i| q[(i, j)] * a[i]).sum());
        self.p = &self.p * &q;
    }

    /// Positive diagonal rescaling taking the ordered diagonal to ±1/0.
    fn normalize_diagonal(&mut self, exact: &ExactFrame) {
        let d: Vec<f64> = exact.d.iter().map(|x| x.to_f64().abs()).collect();
        let lambda = match exact.rank() {
            3 => {
                let det = d[0] * d[1] * d[2];
                [
                    (d[0] / det).sqrt(),
                    (d[1] / det).sqrt(),
                    (d[2] / det).sqrt(),
                ]
            }
            2 => [1.0, (d[1] / d[0]).sqrt(), 1.0 / (d[0] * d[1]).sqrt()],
            1 => [d[0], 1.0, 1.0],
            _ => [1.0, 1.0, 1.0],
        };
        self.apply(Matrix::diagonal(&lambda));
    }

    /// Stabilizer moves taking `a` to the table pattern of `kind`; returns the
    /// size of the resulting `a` where a parameter is read off.
    fn reduce_covector(&mut self, kind: BianchiType) -> f64 {
        use BianchiType::*;
        match kind {
            I | II | VI0 | VII0 | VIII | IX => {}
            V => self.reduce_rank_zero(),
            IV => {
                let [_, a2, a3] = self.a;
                let norm2 = a2 * a2 + a3 * a3;
                // columns (−a3, a2) ⟂ (a2, a3) and (a2, a3)/|.|², block det −1
                self.apply(m3([
                    [-1.0, 0.0, 0.0],
                    [0.0, -a3, a2 / norm2],
                    [0.0, a2, a3 / norm2],
                ]));
            }
            IVx => {
                let [a1, a2, a3] = self.a;
                self.apply(m3([
                    [1.0 / a1, -a2 / (a1 * a1), -a3 / a1],
                    [0.0, 1.0 / a1, 0.0],
                    [0.0, 0.0, 1.0],
                ]));
            }
            VIa | VIIa => {
                if self.a[2] < 0.0 {
                    self.apply(sign_flip([false, true, true]));
                }
            }
            VIIx => {
                self.apply(plane_rotation(self.a[0], self.a[1]));
                self.finish_rank_two_range(0);
            }
            VIx => {
                self.apply(boost(0, 1, -self.a[1] / self.a[0]));
                self.finish_rank_two_range(0);
            }
            VIy => {
                self.apply(boost(0, 1, -self.a[0] / self.a[1]));
                self.finish_rank_two_range(1);
                // e1 <-> e2 (det −1) preserves diag(1,−1,0) and lands on VI_x
                self.apply(m3([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]));
            }
            VIn => {
                if self.a[0] < 0.0 {
                    self.apply(sign_flip([true, true, false]));
                }
                if self.a[1] < 0.0 {
                    self.apply(sign_flip([false, true, true]));
                }
                let a1 = self.a[0];
                self.apply(kernel_shear(-self.a[2] / a1, 0.0));
                self.apply(Matrix::diagonal(&[1.0 / a1, 1.0 / a1, 1.0]));
            }
            VIIIa | VIIIxa | VIIIna => {
                if self.a[0] != 0.0 || self.a[1] != 0.0 {
                    self.apply(plane_rotation(self.a[0], self.a[1]));
                }
                match kind {
                    VIIIa => self.apply(boost(0, 2, -self.a[0] / self.a[2])),
                    VIIIxa => self.apply(boost(0, 2, -self.a[2] / self.a[0])),
                    _ => {}
                }
                if self.a[2] < 0.0 {
                    self.apply(sign_flip([false, true, true]));
                }
                return self.a[0].abs().max(self.a[2].abs());
            }
            IXa => self.apply(self.rotation_to_third_axis()),
        }
        self.a.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Rank-2 `n` with `a` already on axis `axis` (0 or 1) up to sign and a
    /// kernel component: fix the sign, shear away `a3`, rescale to 1.
    fn finish_rank_two_range(&mut self, axis: usize) {
        if self.a[axis] < 0.0 {
            self.apply(sign_flip([true, true, false]));
        }
        let r = self.a[axis];
        let mut shear = [0.0, 0.0];
        shear[axis] = -self.a[2] / r;
        self.apply(kernel_shear(shear[0], shear[1]));
        self.apply(Matrix::diagonal(&[1.0 / r, 1.0 / r, 1.0]));
    }

    fn reduce_rank_zero(&mut self) {
        let a = self.a;
        let m = (0..3)
            .max_by(|&i, &j| a[i].abs().total_cmp(&a[j].abs()))
            .expect("three entries");
        let mut q = Matrix::zeros(3);
        for (col, k) in (0..3).filter(|&k| k != m).enumerate() {
            q[(k, col)] = 1.0;
            q[(m, col)] = -a[k] / a[m];
        }
        q[(m, 2)] = 1.0 / a[m];
        self.apply(q);
    }

    /// Proper rotation with third column `a/|a|`.
    fn rotation_to_third_axis(&self) -> Matrix<f64> {
        let norm = self.a.iter().map(|x| x * x).sum::<f64>().sqrt();
        let w = self.a.map(|x| x / norm);
        let k = (0..3)
            .min_by(|&i, &j| w[i].abs().total_cmp(&w[j].abs()))
            .expect("three entries");
        let mut u = [0.0; 3];
        u[k] = 1.0;
        let uw = u[k] * w[k];
        let u = std::array::from_fn::<f64, 3, _>(|i| u[i] - uw * w[i]);
        let un = u.iter().map(|x| x * x).sum::<f64>().sqrt();
        let u = u.map(|x| x / un);
        let v = [
            w[1] * u[2] - w[2] * u[1],
            w[2] * u[0] - w[0] * u[2],
            w[0] * u[1] - w[1] * u[0],
        ];
        m3([[u[0], v[0], w[0]], [u[1], v[1], w[1]], [u[2], v[2], w[2]]])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn abelian_is_type_i() {
        let nf = classify(&AlgebraSpec::abelian(3)).unwrap();
        assert_eq!(
            nf.label,
            BianchiLabel {
                kind: BianchiType::I,
                parameter: None
            }
        );
        assert!(nf.certificates.a_zero);
    }

    #[test]
    fn canonical_ix_a() {
        let nf = classify(&generate(BianchiType::IXa, Some(&int(1))).unwrap()).unwrap();
        assert_eq!(nf.label.kind, BianchiType::IXa);
        assert!((nf.label.parameter.unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(nf.certificates.invariant, Some(int(1)));
    }

    #[test]
    fn transported_viii_xa_keeps_parameter() {
        let spec = generate(BianchiType::VIIIxa, Some(&ratio(1, 2))).unwrap();
        let p = Matrix::from_rows(vec![
            vec![int(1), ratio(2, 3), int(0)],
            vec![int(-2), int(1), ratio(1, 2)],
            vec![int(3), int(0), int(-1)],
        ])
        .unwrap();
        let nf = classify(&spec.transport(&p).unwrap()).unwrap();
        assert_eq!(nf.label.kind, BianchiType::VIIIxa);
        assert!((nf.label.parameter.unwrap() - 0.5).abs() < 1e-9);
    }

    #[test]
    fn refuses_inconsistent_omega() {
        let spec = generate(BianchiType::IXa, Some(&int(1))).unwrap();
        let bare = spec.with_omega(Matrix::zeros(3)).unwrap();
        match classify(&bare) {
            Err(Error::NotAnAlgebra { t }) => assert_eq!(t, vec![int(0), int(0), int(4)]),
            other => panic!("unexpected {other:?}"),
        }
        assert!(classify(&AlgebraSpec::abelian(4)).is_err());
    }

    #[test]
    fn vi_y_reports_vi_x() {
        let nf = classify(&generate(BianchiType::VIy, None).unwrap()).unwrap();
        assert_eq!(nf.label.kind, BianchiType::VIx);
        assert_eq!(nf.certificates.causal.kind, CausalKind::Spacelike);
        assert!(nf.warnings[0].contains("VI_y first"));
    }
}
