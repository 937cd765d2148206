//! The Brauer correspondence on GL(3,2) at p = 7: the principal block has a
//! cyclic defect group of order 7 with inertial index e = 3, so Dade's
//! formula gives k(B) = 3 + 6/3 = 5 while k(D) = 7 — an exotic block.

use defectscope::blocks::{block_partition, defect_class_and_group};
use defectscope::chartab::dixon_schneider;
use defectscope::dade::{brauer_correspondent, dade_k, verify_dade};
use defectscope::presets;

fn main() {
    let g = presets::gl32();
    let table = dixon_schneider(&g).expect("table");
    let system = block_partition(&table, 7).expect("blocks");
    let principal = system.principal();
    let (_, dgrp) =
        defect_class_and_group(&g, &table, &system, principal).expect("defect group");
    assert!(dgrp.is_cyclic().expect("enumerable"));

    let root = brauer_correspondent(&g, &table, &system, principal, &dgrp).expect("root");
    println!(
        "GL(3,2) at p = 7: |D C_G(D)| = {}, |I_G(b)| = {}, e = {}",
        root.h_order, root.inertial_order, root.e
    );
    let pred = dade_k(7, 1, root.e).expect("e divides p - 1");
    println!("Dade: k(B) = e + (p - 1)/e = {}", pred.predicted_k);
    let rep = verify_dade(&g, &table, &system, principal, &dgrp).expect("counts agree");
    println!(
        "pipeline k(B) = {} matches; k(D) = 7, so the block is exotic",
        rep.pipeline_k
    );
}
