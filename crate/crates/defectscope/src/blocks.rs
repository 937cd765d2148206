//! p-blocks from reduced central characters: partition of Irr(G), defects,
//! defect classes and defect groups, heights, and the Brauer k(B) bounds.

use num::{BigInt, BigRational};

use crate::chartab::CharacterTable;
use crate::cyclo::{build_reduction, CycloNum, PrimeIdealReduction};
use crate::error::{Error, Result};
use crate::gfp::FqElem;
use crate::perm::{valuation, PermGroup};

/// omega_chi(C-hat) = |C| * chi(g) / chi(1), an algebraic integer.
pub fn central_character(table: &CharacterTable, chi: usize, class: usize) -> Result<CycloNum> {
    let size = BigInt::from(table.classes[class].size);
    let degree = table.degree(chi);
    let v = table.values[chi][class].scale(&BigRational::new(size, degree));
    if !v.is_algebraic_integer() {
        return Err(Error::IntegralityViolation { chi, class });
    }
    Ok(v)
}

pub struct Block {
    pub characters: Vec<usize>,
    /// reduced lambda_B on each class sum; empty when p does not divide |G|
    pub signature: Vec<FqElem>,
    pub d: u32,
    pub heights: Vec<u32>,
}

impl Block {
    pub fn kb(&self) -> usize {
        self.characters.len()
    }

    pub fn k0(&self) -> usize {
        self.heights.iter().filter(|&&h| h == 0).count()
    }
}

pub struct BlockSystem {
    pub p: u64,
    /// nu_p of the group order
    pub a: u32,
    pub reduction: Option<PrimeIdealReduction>,
    pub blocks: Vec<Block>,
}

impl BlockSystem {
    /// index of the block containing the trivial character (row 0)
    pub fn principal(&self) -> usize {
        self.blocks
            .iter()
            .position(|b| b.characters.contains(&0))
            .expect("blocks partition the rows")
    }
}

/// chi ~ psi iff their reduced central characters agree on every class sum.
/// Blocks come out principal first, then by (descending k(B), least row).
pub fn block_partition(table: &CharacterTable, p: u64) -> Result<BlockSystem> {
    let a = valuation(table.order, p);
    let k = table.k();
    let degree_valuation: Vec<u32> = (0..k)
        .map(|r| {
            let d = table.degree(r);
            let mut v = 0u32;
            let mut d = d;
            let bp = BigInt::from(p);
            while (&d % &bp) == BigInt::from(0) {
                d /= &bp;
                v += 1;
            }
            v
        })
        .collect();

    let mut reduction = None;
    let mut blocks: Vec<Block> = if a == 0 {
        // trivially semisimple: every character is its own defect-zero block
        (0..k)
            .map(|r| Block {
                characters: vec![r],
                signature: Vec::new(),
                d: 0,
                heights: vec![0],
            })
            .collect()
    } else {
        let red = reduction.insert(build_reduction(p, table.exponent));
        let mut signatures: Vec<Vec<FqElem>> = Vec::with_capacity(k);
        for r in 0..k {
            let mut sig = Vec::with_capacity(k);
            for i in 0..k {
                let omega = central_character(table, r, i)?;
                sig.push(red.reduce(&omega).map_err(|e| match e {
                    Error::NotIntegral => Error::IntegralityViolation { chi: r, class: i },
                    other => other,
                })?);
            }
            signatures.push(sig);
        }
        let mut groups: Vec<(Vec<FqElem>, Vec<usize>)> = Vec::new();
        for (r, sig) in signatures.into_iter().enumerate() {
            match groups.iter_mut().find(|(s, _)| *s == sig) {
                Some((_, members)) => members.push(r),
                None => groups.push((sig, vec![r])),
            }
        }
        groups
            .into_iter()
            .map(|(sig, members)| {
                let d = members
                    .iter()
                    .map(|&r| a - degree_valuation[r])
                    .max()
                    .expect("non-empty block");
                let heights = members
                    .iter()
                    .map(|&r| degree_valuation[r] - (a - d))
                    .collect();
                Block {
                    characters: members,
                    signature: sig,
                    d,
                    heights,
                }
            })
            .collect()
    };

    blocks.sort_by(|x, y| {
        let px = x.characters.contains(&0);
        let py = y.characters.contains(&0);
        py.cmp(&px)
            .then(y.kb().cmp(&x.kb()))
            .then(x.characters[0].cmp(&y.characters[0]))
    });

    let system = BlockSystem {
        p,
        a,
        reduction,
        blocks,
    };

    // sanity: the blocks partition the rows and each block has a
    // height-zero character
    let total: usize = system.blocks.iter().map(|b| b.kb()).sum();
    debug_assert_eq!(total, k);
    for b in &system.blocks {
        debug_assert!(b.heights.contains(&0));
    }
    Ok(system)
}

/// Least class C (canonical order) with lambda_B(C-hat) nonzero and
/// nu_p(|C_G(x)|) = d; the defect group is Sylow_p(C_G(x)).
pub fn defect_class_and_group(
    g: &PermGroup,
    table: &CharacterTable,
    system: &BlockSystem,
    block_idx: usize,
) -> Result<(usize, PermGroup)> {
    let block = &system.blocks[block_idx];
    let order = table.order;
    let find = |i: usize| -> Result<Option<(usize, PermGroup)>> {
        let cent_order = order / table.classes[i].size;
        if valuation(cent_order, system.p) != block.d {
            return Ok(None);
        }
        let cd = g.conjugacy_classes()?;
        let cent = g.centralizer(&cd.classes[i].representative)?;
        let d = cent.sylow(system.p)?;
        Ok(Some((i, d)))
    };
    if block.signature.is_empty() {
        // p' order or short-circuited system: every class with nonzero
        // lambda works; for defect zero the identity class suffices when its
        // centralizer has trivial p-part, otherwise scan
        for i in 0..table.k() {
            if let Some(hit) = find(i)? {
                return Ok(hit);
            }
        }
        return Err(Error::NoDefectClass);
    }
    let red = system.reduction.as_ref().expect("signature implies reduction");
    for i in 0..table.k() {
        if red.fq.is_zero(&block.signature[i]) {
            continue;
        }
        if let Some(hit) = find(i)? {
            return Ok(hit);
        }
    }
    Err(Error::NoDefectClass)
}

pub fn k_of_defect_group(d: &PermGroup) -> Result<usize> {
    Ok(d.conjugacy_classes()?.count())
}

/// k(B) <= p^d for d <= 2 and k(B) <= p^(2d-2) for d >= 3.
pub fn brauer_bound_check(p: u64, d: u32, kb: usize) -> bool {
    let bound_exp = if d <= 2 { d } else { 2 * d - 2 };
    BigInt::from(kb) <= BigInt::from(p).pow(bound_exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{dixon_schneider, mn_table};
    use crate::presets;

    fn block_sizes(s: &BlockSystem) -> Vec<usize> {
        s.blocks.iter().map(|b| b.kb()).collect()
    }

    #[test]
    fn central_character_basics() {
        let t = dixon_schneider(&presets::sym(3)).unwrap();
        // identity class: value 1 for every character
        for r in 0..t.k() {
            assert_eq!(central_character(&t, r, 0).unwrap(), CycloNum::one(t.exponent));
        }
        // trivial character: value |C|
        for i in 0..t.k() {
            assert_eq!(
                central_character(&t, 0, i).unwrap(),
                CycloNum::from_bigint(t.exponent, BigInt::from(t.classes[i].size))
            );
        }
    }

    #[test]
    fn central_character_sl23_central_involution() {
        let t = dixon_schneider(&presets::sl23()).unwrap();
        // the central involution sits in a size-1 class of order 2
        let z = (0..t.k())
            .find(|&i| t.classes[i].size == 1 && t.classes[i].element_order == 2)
            .unwrap();
        for r in 0..t.k() {
            assert!(central_character(&t, r, z).unwrap().is_algebraic_integer());
        }
    }

    #[test]
    fn a4_partitions() {
        let t = dixon_schneider(&presets::alt(4)).unwrap();
        let s2 = block_partition(&t, 2).unwrap();
        assert_eq!(block_sizes(&s2), vec![4]);
        assert_eq!(s2.blocks[0].d, 2);
        let s3 = block_partition(&t, 3).unwrap();
        assert_eq!(block_sizes(&s3), vec![3, 1]);
        assert_eq!(s3.blocks[0].d, 1);
        assert_eq!(s3.blocks[1].d, 0);
        // p does not divide |G|
        let s5 = block_partition(&t, 5).unwrap();
        assert_eq!(block_sizes(&s5), vec![1, 1, 1, 1]);
        assert!(s5.blocks.iter().all(|b| b.d == 0));
    }

    #[test]
    fn d8_single_block() {
        let t = dixon_schneider(&presets::dihedral(8)).unwrap();
        let s = block_partition(&t, 2).unwrap();
        assert_eq!(block_sizes(&s), vec![5]);
        assert_eq!(s.blocks[0].d, 3);
        // four linear characters at height zero, the degree-2 one at height 1
        let mut hs = s.blocks[0].heights.clone();
        hs.sort();
        assert_eq!(hs, vec![0, 0, 0, 0, 1]);
    }

    #[test]
    fn sl23_p2_heights() {
        let t = dixon_schneider(&presets::sl23()).unwrap();
        let s = block_partition(&t, 2).unwrap();
        assert_eq!(block_sizes(&s), vec![7]);
        let b = &s.blocks[0];
        assert_eq!(b.d, 3);
        // canonical rows have degrees 1,1,1,2,2,2,3; the degree-2 characters
        // carry height one
        let mut hs = b.heights.clone();
        hs.sort();
        assert_eq!(hs, vec![0, 0, 0, 0, 1, 1, 1]);
        assert_eq!(b.k0(), 4);
    }

    #[test]
    fn a5_block_systems() {
        let t = dixon_schneider(&presets::alt(5)).unwrap();
        let s5 = block_partition(&t, 5).unwrap();
        assert_eq!(block_sizes(&s5), vec![4, 1]);
        assert_eq!(s5.blocks[0].d, 1);
        assert_eq!(s5.blocks[1].d, 0);
        let s2 = block_partition(&t, 2).unwrap();
        assert_eq!(s2.blocks[0].d, 2);
        let total: usize = s2.blocks.iter().map(|b| b.kb()).sum();
        assert_eq!(total, 5);
    }

    #[test]
    fn a5_defect_groups() {
        let g = presets::alt(5);
        let t = dixon_schneider(&g).unwrap();
        let s = block_partition(&t, 5).unwrap();
        let (_, d0) = defect_class_and_group(&g, &t, &s, 0).unwrap();
        assert_eq!(d0.order().unwrap(), 5);
        assert!(d0.is_cyclic().unwrap());
        let (_, d1) = defect_class_and_group(&g, &t, &s, 1).unwrap();
        assert_eq!(d1.order().unwrap(), 1);
        assert_eq!(k_of_defect_group(&d1).unwrap(), 1);
    }

    #[test]
    fn sl23_defect_group_is_q8() {
        let g = presets::sl23();
        let t = dixon_schneider(&g).unwrap();
        let s = block_partition(&t, 2).unwrap();
        let (_, d) = defect_class_and_group(&g, &t, &s, 0).unwrap();
        assert_eq!(d.order().unwrap(), 8);
        assert_eq!(k_of_defect_group(&d).unwrap(), 5);
        // Q_8: a unique involution
        let invs = d
            .elements()
            .unwrap()
            .iter()
            .filter(|x| x.order() == 2)
            .count();
        assert_eq!(invs, 1);
    }

    #[test]
    fn defect_class_count_invariance() {
        // every valid defect class of a block yields the same k(D) and |D|
        let g = presets::sym(4);
        let t = dixon_schneider(&g).unwrap();
        for p in [2u64, 3] {
            let s = block_partition(&t, p).unwrap();
            for (bi, b) in s.blocks.iter().enumerate() {
                let (_, dg) = defect_class_and_group(&g, &t, &s, bi).unwrap();
                let expected_k = k_of_defect_group(&dg).unwrap();
                let red = s.reduction.as_ref().unwrap();
                for i in 0..t.k() {
                    if b.signature.is_empty() || red.fq.is_zero(&b.signature[i]) {
                        continue;
                    }
                    let cent_order = t.order / t.classes[i].size;
                    if valuation(cent_order, p) != b.d {
                        continue;
                    }
                    let cd = g.conjugacy_classes().unwrap();
                    let cent = g.centralizer(&cd.classes[i].representative).unwrap();
                    let alt = cent.sylow(p).unwrap();
                    assert_eq!(alt.order().unwrap(), dg.order().unwrap());
                    assert_eq!(k_of_defect_group(&alt).unwrap(), expected_k);
                }
            }
        }
    }

    #[test]
    fn principal_defect_group_is_sylow_order() {
        for (g, ps) in [
            (presets::sym(4), vec![2u64, 3]),
            (presets::alt(5), vec![2, 3, 5]),
        ] {
            let t = dixon_schneider(&g).unwrap();
            for p in ps {
                let s = block_partition(&t, p).unwrap();
                let pr = s.principal();
                let (_, d) = defect_class_and_group(&g, &t, &s, pr).unwrap();
                assert_eq!(d.order().unwrap(), g.sylow(p).unwrap().order().unwrap());
            }
        }
    }

    #[test]
    fn s9_principal_block_defect_via_mn() {
        let t = mn_table(9);
        let s = block_partition(&t, 3).unwrap();
        let pr = s.principal();
        assert_eq!(s.blocks[pr].kb(), 22);
        assert_eq!(s.blocks[pr].d, 4);
    }

    #[test]
    fn brauer_bounds() {
        assert!(brauer_bound_check(5, 0, 1));
        assert!(brauer_bound_check(5, 1, 4));
        assert!(brauer_bound_check(3, 4, 22)); // 22 <= 3^6
        assert!(!brauer_bound_check(2, 1, 3));
    }
}
