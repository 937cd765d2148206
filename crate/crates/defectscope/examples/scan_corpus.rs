//! Scan a small corpus in parallel and check the structural claims: defect
//! zero, p-groups, dihedral defect, and the abelian-defect congruence at
//! p in {2, 3}.

use defectscope::classify::{scan, verify_general_cases, GroupReport};

fn main() {
    let corpus = r#"[
        {"group": "sym(4)", "primes": [2, 3]},
        {"group": "alt(4)", "primes": [2, 3]},
        {"group": "alt(5)", "primes": [2, 3, 5]},
        {"group": "dihedral(8)", "primes": [2]},
        {"group": "quaternion8", "primes": [2]},
        {"group": "sl23", "primes": [2, 3]},
        {"group": "gl32", "primes": [2, 7]}
    ]"#;
    let report = scan(corpus, Some(4), None).expect("scan");
    for rec in &report.reports {
        let rep = rec.result.as_ref().expect("no job failures expected");
        let verdicts: Vec<String> = rep.blocks.iter().map(|b| format!("{:?}", b.verdict)).collect();
        println!("{} @ {}: {}", rec.group, rec.p, verdicts.join(", "));
    }
    println!("verdict totals: {:?}", report.counts);
    println!("exotic: {:?}", report.exotic_groups);

    let oks: Vec<&GroupReport> = report
        .reports
        .iter()
        .map(|r| r.result.as_ref().expect("ok"))
        .collect();
    let findings = verify_general_cases(&oks);
    println!("structural findings: {}", findings.len());
    for f in &findings {
        println!("  {} @ {} block {}: {}", f.group, f.p, f.block, f.claim);
    }
}
