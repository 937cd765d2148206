//! S_9 at p = 3 without enumerating 9! elements: Murnaghan-Nakayama table,
//! 3-core block partition, and a wreath-product Sylow subgroup give
//! k(B_0) = 22 against k(D) = 17.

use defectscope::classify::{analyze, Method};
use defectscope::symfunc::{nakayama_blocks, sylow_sn};

fn main() {
    let blocks = nakayama_blocks(9, 3);
    println!("S_9 has {} 3-blocks; sizes {:?}",
        blocks.len(),
        blocks.iter().map(|b| b.members.len()).collect::<Vec<_>>());
    println!(
        "principal block core {:?}, weight {}",
        blocks[0].core.parts(),
        blocks[0].weight
    );

    let d = sylow_sn(9, 3);
    println!(
        "Sylow_3(S_9): order {}, k(D) = {}",
        d.order().expect("enumerable"),
        d.conjugacy_classes().expect("enumerable").count()
    );

    let rep = analyze("sym(9)", 3, Method::Mn, None).expect("pipeline");
    let b0 = &rep.blocks[0];
    println!(
        "pipeline: k(B_0) = {}, k(D) = {}, verdict {:?} (22 and 17 differ mod 3)",
        b0.kB, b0.defect_group.k_D, b0.verdict
    );
}
