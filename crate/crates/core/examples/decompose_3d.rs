//! Splits 3-dimensional brackets into `(n, a, b)` and shows the forced 2-form.

use omega_lie::classify::{generate, BianchiType};
use omega_lie::decomp3d::{decompose, forced_b, reconstruct, t_vector};
use omega_lie::scalar::{format_scalar, ratio};
use omega_lie::Scalar;

fn show(v: &[Scalar]) -> String {
    format!(
        "({})",
        v.iter().map(format_scalar).collect::<Vec<_>>().join(", ")
    )
}

fn main() -> omega_lie::Result<()> {
    for (kind, param) in [
        (BianchiType::V, None),
        (BianchiType::VIIIa, Some(ratio(3, 2))),
        (BianchiType::VIn, None),
    ] {
        let spec = generate(kind, param.as_ref())?;
        let t = decompose(&spec)?;
        let n: Vec<String> = (0..3).map(|i| show(t.n().row(i))).collect();
        println!("{kind}");
        println!("  n = [{}]", n.join(", "));
        println!("  a = {}, b = {}", show(t.a()), show(t.b()));
        println!("  forced b = -2 n a = {}", show(&forced_b(t.n(), t.a())));
        println!("  t = {}", show(&t_vector(&t)));
        assert_eq!(reconstruct(&t), spec);
    }
    Ok(())
}
