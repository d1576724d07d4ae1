//! Prints both classification tables with the forced 2-form of each row.

use omega_lie::classify::BianchiType;

fn main() {
    for (title, rows) in [
        ("a = 0", &BianchiType::A_ZERO_TABLE[..]),
        (
            "a != 0 (parametric rows scale a and b by a > 0)",
            &BianchiType::A_NONZERO_TABLE[..],
        ),
    ] {
        println!("{title}");
        for &kind in rows {
            let row = kind.row();
            println!(
                "  {:<8} n = {:?}  a = {:?}  b = {:?}{}",
                kind.name(),
                row.n,
                row.a,
                row.forced_b(),
                if kind.is_deformed() {
                    "  (deformed)"
                } else {
                    ""
                }
            );
        }
    }
}
