//! Moves table algebras to random bases and recovers their labels.

use omega_lie::classify::{classify, orbit_sample, BianchiType};
use omega_lie::scalar::{format_scalar, ratio};

fn main() -> omega_lie::Result<()> {
    let cases = [
        (BianchiType::IXa, Some(ratio(1, 2))),
        (BianchiType::VIIIxa, Some(ratio(2, 1))),
        (BianchiType::VIy, None),
        (BianchiType::VIIIna, Some(ratio(1, 1))),
        (BianchiType::IVx, None),
    ];
    for (kind, param) in cases {
        for seed in [1, 2] {
            let spec = orbit_sample(kind, param.as_ref(), seed)?;
            let nf = classify(&spec)?;
            let cert = &nf.certificates;
            println!(
                "{kind} seed {seed} -> {} [inertia {}, {}{}]",
                nf.label,
                cert.inertia,
                cert.causal,
                cert.invariant
                    .as_ref()
                    .map(|q| format!(", invariant = {}", format_scalar(q)))
                    .unwrap_or_default()
            );
            for w in &nf.warnings {
                println!("    note: {w}");
            }
        }
    }
    Ok(())
}
