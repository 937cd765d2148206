//! Export a table to the JSON interchange format and read it back through
//! full validation; a corrupted value is rejected by the orthogonality check.

use defectscope::chartab::{dixon_schneider, ingest};
use defectscope::cyclo::CycloNum;
use defectscope::presets;

fn main() {
    let table = dixon_schneider(&presets::sym(4)).expect("table");
    let text = serde_json::to_string(&table.to_json()).expect("serializes");
    println!("exported S_4 table: {} bytes", text.len());

    let back = ingest(&text).expect("round-trips through validation");
    assert_eq!(back.values, table.values);
    println!("re-ingested and validated: k = {}", back.k());

    let mut raw: defectscope::chartab::TableJson = serde_json::from_str(&text).expect("parses");
    raw.values[3][2] = raw.values[3][2].add(&CycloNum::one(table.exponent));
    let bad = serde_json::to_string(&raw).expect("serializes");
    match ingest(&bad) {
        Err(e) => println!("perturbed table rejected: {e}"),
        Ok(_) => unreachable!("orthogonality must fail"),
    }
}
