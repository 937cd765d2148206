//! Compute the character table of S_5 from its generators and compare the
//! degree list against the Murnaghan-Nakayama fast path.

use defectscope::chartab::{dixon_schneider, mn_table};
use defectscope::presets;

fn main() {
    let g = presets::sym(5);
    let table = dixon_schneider(&g).expect("S_5 is well within Dixon limits");
    println!(
        "S_5: order {}, exponent {}, {} classes",
        table.order,
        table.exponent,
        table.k()
    );
    println!("degrees: {:?}", table.degrees());

    let fast = mn_table(5);
    assert_eq!(table.values, fast.values);
    println!("Murnaghan-Nakayama path agrees entrywise");

    for (row, label) in table.values.iter().zip(
        fast.row_partitions
            .as_ref()
            .expect("mn tables carry partition labels"),
    ) {
        let cells: Vec<String> = row
            .iter()
            .map(|v| v.as_rational().expect("S_n values are rational").to_string())
            .collect();
        println!("{:>12}  {}", label.to_string_compact(), cells.join("\t"));
    }
}
