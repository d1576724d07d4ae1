//! Trace split and induced 2-form in dimensions 3 to 5.

use omega_lie::decomp_nd::{deformability, induced_omega, split_trace};
use omega_lie::scalar::{format_scalar, int};
use omega_lie::{AlgebraSpec, Error};

fn main() -> omega_lie::Result<()> {
    // [e_n, e_i] = e_i for i < n: pure trace part a = -e^n, so ω = 0
    for dim in 3..=5 {
        let mut s = AlgebraSpec::abelian(dim);
        for i in 0..dim - 1 {
            s.set_bracket(i, dim - 1, i, int(-1));
        }
        let split = split_trace(&s)?;
        let a: Vec<String> = split.a().iter().map(format_scalar).collect();
        println!(
            "dim {dim}: a = ({}), induced omega zero = {}",
            a.join(", "),
            induced_omega(&split)? == omega_lie::Matrix::zeros(dim)
        );
    }

    // a dimension-4 bracket whose candidate 2-form fails
    let mut s = AlgebraSpec::abelian(4);
    s.set_bracket(0, 1, 1, int(1));
    s.set_bracket(2, 3, 0, int(1));
    match deformability(&s) {
        Ok(w) => println!("deformable, omega_12 = {}", format_scalar(&w[(0, 1)])),
        Err(Error::NotDeformable { candidate }) => {
            let residual = s.with_omega(candidate)?.residual()?;
            println!(
                "not deformable: the candidate leaves {} nonzero residual components",
                residual.nonzero_components().len()
            );
        }
        Err(e) => return Err(e),
    }
    Ok(())
}
