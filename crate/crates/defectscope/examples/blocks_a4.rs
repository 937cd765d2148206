//! Block partitions of A_4 at p = 2 and p = 3: one 2-block of four
//! characters, and at 3 a principal block of three plus a defect-zero block.

use defectscope::blocks::{block_partition, defect_class_and_group, k_of_defect_group};
use defectscope::chartab::dixon_schneider;
use defectscope::presets;

fn main() {
    let g = presets::alt(4);
    let table = dixon_schneider(&g).expect("table");
    for p in [2u64, 3] {
        let system = block_partition(&table, p).expect("blocks");
        println!("A_4 at p = {p}:");
        for (bi, b) in system.blocks.iter().enumerate() {
            let (class, dgrp) =
                defect_class_and_group(&g, &table, &system, bi).expect("defect class");
            println!(
                "  block {bi}: characters {:?}, d = {}, defect class {class}, |D| = {}, k(D) = {}",
                b.characters,
                b.d,
                dgrp.order().expect("enumerable"),
                k_of_defect_group(&dgrp).expect("enumerable"),
            );
        }
    }
}
