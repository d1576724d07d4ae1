//! Checks the deformed Jacobi identity for a table algebra and for the same
//! bracket with its 2-form removed.

use omega_lie::classify::{generate, BianchiType};
use omega_lie::scalar::{format_scalar, int};
use omega_lie::Matrix;

fn main() -> omega_lie::Result<()> {
    let spec = generate(BianchiType::IXa, Some(&int(1)))?;
    println!(
        "IX_a(a=1): deformed Lie algebra = {}",
        spec.is_deformed_lie_algebra()?
    );

    let e = |i| spec.basis(i);
    let jac = spec.jacobiator(&e(0), &e(1), &e(2))?;
    let rhs = spec.omega_rhs(&e(0), &e(1), &e(2))?;
    let show = |v: &[omega_lie::Scalar]| v.iter().map(format_scalar).collect::<Vec<_>>().join(", ");
    println!("  jacobiator(e1,e2,e3) = ({})", show(&jac));
    println!("  omega side           = ({})", show(&rhs));

    let bare = spec.with_omega(Matrix::zeros(3))?;
    let residual = bare.residual()?;
    println!(
        "same bracket, omega = 0: deformed Lie algebra = {}",
        residual.is_zero()
    );
    for ([m, l, j, k], v) in residual.nonzero_components() {
        println!(
            "  R^{}_{}{}{} = {}",
            m + 1,
            l + 1,
            j + 1,
            k + 1,
            format_scalar(&v)
        );
    }
    Ok(())
}
