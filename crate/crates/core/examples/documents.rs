//! Writes an algebra as a JSON document and reads it back.

use omega_lie::classify::{generate, BianchiType};
use omega_lie::document::{parse, serialize, AlgebraDocument};
use omega_lie::scalar::ratio;

fn main() -> omega_lie::Result<()> {
    let spec = generate(BianchiType::VIIa, Some(&ratio(3, 4)))?;
    let doc = AlgebraDocument::from_spec(&spec)?.with_metadata("label", "VII_a");
    let text = doc.to_json();
    print!("{text}");
    assert_eq!(parse(&text)?, spec);
    assert_eq!(parse(&serialize(&spec)?)?, spec);

    match parse(r#"{"dim": 3, "c_entries": [[2, 1, 3, "1"]]}"#) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
