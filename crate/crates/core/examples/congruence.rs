//! Exact congruence diagonalization and Sylvester inertia.

use omega_lie::scalar::{format_scalar, int};
use omega_lie::Matrix;

fn main() -> omega_lie::Result<()> {
    let m = Matrix::from_rows(vec![
        vec![int(0), int(1), int(2)],
        vec![int(1), int(0), int(-1)],
        vec![int(2), int(-1), int(0)],
    ])?;
    let (s, d) = m.congruence_diagonalize()?;
    assert_eq!(&(&s * &m) * &s.transpose(), Matrix::diagonal(&d));
    let d: Vec<String> = d.iter().map(format_scalar).collect();
    println!("S M S^T = diag({})", d.join(", "));
    println!("inertia (+, -, 0) = {}", m.inertia()?);
    Ok(())
}
