//! Exact arithmetic for ω-deformed Lie algebras: a skew bracket together with
//! a 2-form `ω` satisfying
//!
//! ```text
//! [A,[B,C]] + [C,[A,B]] + [B,[C,A]] = ω(B,C)A + ω(A,B)C + ω(C,A)B
//! ```
//!
//! - [`algebra`]: structure constants, the deformed Jacobi identity and basis changes
//! - [`decomp3d`]: the dimension-3 `(n, a, b)` dictionary and the forced 2-form
//! - [`decomp_nd`]: the trace split in any dimension and the induced 2-form
//! - [`classify`]: Bianchi-style normal forms of 3-dimensional algebras
//! - [`document`]: the JSON document format, [`cli`]: the command-line front end
//!
//! ```
//! use omega_lie::classify::{classify, generate, BianchiType};
//! use omega_lie::scalar::int;
//!
//! let spec = generate(BianchiType::IXa, Some(&int(2))).unwrap();
//! assert!(spec.is_deformed_lie_algebra().unwrap());
//! let nf = classify(&spec).unwrap();
//! assert_eq!(nf.label.kind, BianchiType::IXa);
//! ```

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod decomp3d;
pub mod decomp_nd;
pub mod document;
pub mod error;
pub mod scalar;
pub mod tensor;

pub use algebra::{
    omega_rhs_is_identically_zero, AlgebraSpec, ResidualTensor, SkewViolation, TwoForm,
};
pub use decomp3d::NabTriple;
pub use decomp_nd::GeneralSplit;
pub use error::{Error, Result};
pub use scalar::{Field, Scalar};
pub use tensor::{levi_civita, Inertia, Matrix};
