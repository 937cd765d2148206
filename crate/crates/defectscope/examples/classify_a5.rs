//! A_5 across p = 2, 3, 5: strongly k(D) at 2 and 3, exotic at 5 where
//! k(B_0) = 4 but k(D) = 5.

use defectscope::classify::{analyze, Method};

fn main() {
    for p in [2u64, 3, 5] {
        let rep = analyze("alt(5)", p, Method::Auto, None).expect("pipeline");
        println!("A_5 at p = {p}:");
        for b in &rep.blocks {
            println!(
                "  k(B) = {}, k(D) = {}, verdict {:?}{}",
                b.kB,
                b.defect_group.k_D,
                b.verdict,
                match b.e {
                    Some(e) => format!(" (cyclic defect, e = {e})"),
                    None => String::new(),
                }
            );
        }
    }
}
