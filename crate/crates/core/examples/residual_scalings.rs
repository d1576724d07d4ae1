//! Diagonal rescalings that keep a normalized `n` fixed.

use omega_lie::classify::residual_scalings;
use omega_lie::scalar::int;

fn main() -> omega_lie::Result<()> {
    for n in [[0, 0, 0], [1, 0, 0], [1, -1, 0], [1, 1, -1], [1, 1, 1]] {
        let group = residual_scalings(&n.map(int))?;
        println!("n = diag{n:?}: {group}");
    }
    Ok(())
}
