//! Cyclic-defect machinery: roots under the Brauer correspondence, the
//! inertial index, Dade's character count, and the two classification
//! predicates derived from it.

use std::collections::HashSet;

use crate::blocks::{block_partition, central_character, BlockSystem};
use crate::chartab::{dixon_schneider, CharacterTable};
use crate::error::{Error, Result};
use crate::perm::{product_subgroup, PermGroup, Permutation};

pub struct RootData {
    /// H = D * C_G(D)
    pub h_order: u64,
    pub inertial_order: u64,
    pub e: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct DadePrediction {
    pub p: u64,
    pub d: u32,
    pub e: u64,
    pub predicted_k: u64,
}

/// e + (p^d - 1)/e characters in a block with cyclic defect group of order
/// p^d and inertial index e.
pub fn dade_k(p: u64, d: u32, e: u64) -> Result<DadePrediction> {
    let pd1 = p.pow(d) - 1;
    if e == 0 || (e > 1 && pd1 % e != 0) {
        return Err(Error::NonDivisor { e, pd1 });
    }
    let predicted_k = if pd1 == 0 { 1 } else { e + pd1 / e };
    Ok(DadePrediction {
        p,
        d,
        e,
        predicted_k,
    })
}

/// k(B) = p^d = k(D) for cyclic D exactly when e = 1, or e = p-1 with d = 1.
pub fn classify_cyclic_strong(p: u64, d: u32, e: u64) -> Result<bool> {
    Ok(dade_k(p, d, e)?.predicted_k == p.pow(d))
}

/// k(B) = k(D) mod p for cyclic D: e + (p^d - 1)/e = 0 (mod p).
pub fn classify_cyclic_congruent(p: u64, d: u32, e: u64) -> Result<bool> {
    assert!(d >= 1);
    Ok(dade_k(p, d, e)?.predicted_k % p == 0)
}

/// Find the root of the given block in H = D * C_G(D) and its inertial
/// index e = [I_G(b) : H].
pub fn brauer_correspondent(
    g: &PermGroup,
    table: &CharacterTable,
    system: &BlockSystem,
    block_idx: usize,
    dgrp: &PermGroup,
) -> Result<RootData> {
    let p = system.p;
    let order = g.order()?;
    let c = g.centralizer_of_subgroup(dgrp)?;
    let h = product_subgroup(g, dgrp, &c)?;
    let h_order = h.order()?;
    if h_order == order {
        // I_G(b) is squeezed between H and N_G(D) <= G = H
        return Ok(RootData {
            h_order,
            inertial_order: order,
            e: 1,
        });
    }
    let n = g.normalizer(dgrp)?;
    let n_order = n.order()?;
    let is_principal = block_idx == system.principal();
    let fast_e = if is_principal {
        Some(n_order / h_order)
    } else {
        None
    };
    // the general path doubles as a cross-check of the fast one when H is
    // small enough to enumerate comfortably
    if let Some(e) = fast_e {
        if h_order > 3000 {
            return Ok(RootData {
                h_order,
                inertial_order: e * h_order,
                e,
            });
        }
    }

    let block = &system.blocks[block_idx];
    let red = system
        .reduction
        .as_ref()
        .expect("p divides |G| whenever H is proper");
    let th = dixon_schneider(&h)?;
    let sysh = block_partition(&th, p)?;
    let cd = g.conjugacy_classes()?;
    let cdh = h.conjugacy_classes()?;
    let helems = h.elements()?;
    let gclass_of_hclass: Vec<usize> = cdh
        .classes
        .iter()
        .map(|hc| {
            cd.class_of(&hc.representative)
                .expect("H-class lands in a G-class")
        })
        .collect();

    // the root: a block of H of the same defect inducing lambda_B
    let mut root_idx = None;
    for (bi, b) in sysh.blocks.iter().enumerate() {
        if b.d != block.d {
            continue;
        }
        let r = b.characters[0];
        let mut induced = vec![red.fq.zero(); table.k()];
        for j in 0..th.k() {
            let omega = central_character(&th, r, j)?;
            let lam = red.reduce(&omega.lift(table.exponent))?;
            let gi = gclass_of_hclass[j];
            induced[gi] = red.fq.add(&induced[gi], &lam);
        }
        if induced == block.signature {
            root_idx = Some(bi);
            break;
        }
    }
    let Some(root_idx) = root_idx else {
        return Err(Error::NoRootFound);
    };

    // I_G(b): conjugation by N_G(D) permutes the H-classes, hence the
    // central signatures of Bl(H); count the cosets of H fixing the root
    let sig = &sysh.blocks[root_idx].signature;
    let mut covered: HashSet<Permutation> = HashSet::new();
    let mut stabilizing = 0u64;
    for x in n.elements()? {
        if covered.contains(x) {
            continue;
        }
        for hh in helems {
            covered.insert(hh.compose(x));
        }
        // b^x has signature j -> sig[class of x^-1 rep_j x]; x fixes b iff
        // the permuted vector equals the original
        let xinv = x.inverse();
        let fixed = (0..th.k()).all(|j| {
            let conj = cdh.classes[j].representative.conjugate_by(&xinv);
            let jj = cdh.class_of(&conj).expect("N_G(D) normalizes H");
            sig[j] == sig[jj]
        });
        if fixed {
            stabilizing += 1;
        }
    }
    let e = stabilizing;
    if let Some(ef) = fast_e {
        if ef != e {
            return Err(Error::Mismatch {
                pipeline: ef,
                predicted: e,
            });
        }
    }
    Ok(RootData {
        h_order,
        inertial_order: e * h_order,
        e,
    })
}

pub struct DadeReport {
    pub e: u64,
    pub predicted_k: u64,
    pub pipeline_k: u64,
}

/// For a block with cyclic defect group: check k(B) against Dade's count.
pub fn verify_dade(
    g: &PermGroup,
    table: &CharacterTable,
    system: &BlockSystem,
    block_idx: usize,
    dgrp: &PermGroup,
) -> Result<DadeReport> {
    assert!(dgrp.is_cyclic()?, "Dade's formula needs a cyclic defect group");
    let block = &system.blocks[block_idx];
    let root = brauer_correspondent(g, table, system, block_idx, dgrp)?;
    let predicted = dade_k(system.p, block.d, root.e)?.predicted_k;
    let pipeline = block.kb() as u64;
    if predicted != pipeline {
        return Err(Error::Mismatch {
            pipeline,
            predicted,
        });
    }
    Ok(DadeReport {
        e: root.e,
        predicted_k: predicted,
        pipeline_k: pipeline,
    })
}
