//! Symmetric-group combinatorics: partitions, Murnaghan-Nakayama character
//! values, p-cores and weights, the Nakayama block partition, and Sylow
//! p-subgroups of S_n built as iterated wreath products.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::{lcm, PermGroup, Permutation};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// First-column hook lengths (a beta-set with len(parts) beads).
    pub fn beta_set(&self) -> Vec<usize> {
        let r = self.parts.len();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + (r - 1 - i))
            .collect()
    }

    pub fn from_beta(mut beta: Vec<usize>) -> Self {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let r = beta.len();
        let parts = beta
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (r - 1 - i))
            .collect();
        Partition::new(parts)
    }

    pub fn to_string_compact(&self) -> String {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        format!("({})", strs.join(","))
    }
}

/// All partitions of n in descending lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for k in (1..=max.min(n)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn partition_count(n: usize) -> usize {
    // Euler recurrence oracle-free count
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for i in 1..=n {
        let mut total = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 as usize > i && g2 as usize > i {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            if g1 as usize <= i {
                total += sign * p[i - g1 as usize];
            }
            if g2 as usize <= i {
                total += sign * p[i - g2 as usize];
            }
            k += 1;
        }
        p[i] = total;
    }
    p[n] as usize
}

/// Memoized Murnaghan-Nakayama evaluator: characters of S_n on cycle types.
pub struct MnCache {
    memo: HashMap<(Vec<usize>, usize), i64>,
    current_mu: Vec<usize>,
}

impl MnCache {
    pub fn new() -> Self {
        MnCache {
            memo: HashMap::new(),
            current_mu: Vec::new(),
        }
    }

    /// chi^lambda on the class of cycle type mu.
    pub fn value(&mut self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        if lambda.sum() != mu.sum() {
            return Err(Error::SizeMismatch(lambda.sum(), mu.sum()));
        }
        // memo entries are keyed by position within a fixed mu
        if self.current_mu != mu.parts {
            self.memo.clear();
            self.current_mu = mu.parts.clone();
        }
        Ok(self.eval(lambda.parts.clone(), &mu.parts, 0))
    }

    fn eval(&mut self, lambda: Vec<usize>, mu: &[usize], idx: usize) -> i64 {
        if idx == mu.len() {
            debug_assert!(lambda.is_empty());
            return 1;
        }
        let key = (lambda.clone(), idx);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let t = mu[idx];
        let shape = Partition {
            parts: lambda.clone(),
        };
        let beta = shape.beta_set();
        let beta_set: std::collections::HashSet<usize> = beta.iter().copied().collect();
        let mut total = 0i64;
        for &b in &beta {
            if b < t || beta_set.contains(&(b - t)) {
                continue;
            }
            // remove the rim hook: move bead b down to b - t
            let between = beta
                .iter()
                .filter(|&&x| x > b - t && x < b)
                .count();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            let new_beta: Vec<usize> = beta
                .iter()
                .map(|&x| if x == b { b - t } else { x })
                .collect();
            let new_shape = Partition::from_beta(new_beta);
            total += sign * self.eval(new_shape.parts, mu, idx + 1);
        }
        self.memo.insert(key, total);
        total
    }
}

impl Default for MnCache {
    fn default() -> Self {
        Self::new()
    }
}

pub fn mn_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    MnCache::new().value(lambda, mu)
}

/// Degree of chi^lambda by the hook length formula.
pub fn hook_length_degree(lambda: &Partition) -> u64 {
    let n = lambda.sum();
    let parts = lambda.parts();
    let cols: Vec<usize> = (0..parts.first().copied().unwrap_or(0))
        .map(|j| parts.iter().filter(|&&p| p > j).count())
        .collect();
    let mut num = num::BigUint::from(1u32);
    for k in 1..=n {
        num *= k;
    }
    let mut den = num::BigUint::from(1u32);
    for (i, &p) in parts.iter().enumerate() {
        for j in 0..p {
            let hook = (p - j) + (cols[j] - i) - 1;
            den *= hook;
        }
    }
    let q = num / den;
    q.to_u64_digits().first().copied().unwrap_or(1)
}

/// Strip all rim p-hooks: the p-core, via runner sliding on the abacus.
pub fn p_core(lambda: &Partition, p: u64) -> Partition {
    let p = p as usize;
    let beta = lambda.beta_set();
    let n_beads = beta.len();
    let mut counts = vec![0usize; p];
    for &b in &beta {
        counts[b % p] += 1;
    }
    let mut new_beta = Vec::with_capacity(n_beads);
    for r in 0..p {
        for k in 0..counts[r] {
            new_beta.push(r + k * p);
        }
    }
    Partition::from_beta(new_beta)
}

pub fn p_weight(lambda: &Partition, p: u64) -> usize {
    (lambda.sum() - p_core(lambda, p).sum()) / p as usize
}

/// A p-block of S_n: partitions sharing a p-core.
pub struct SnBlock {
    pub core: Partition,
    pub weight: usize,
    /// members in descending lexicographic partition order
    pub members: Vec<Partition>,
}

/// The Nakayama block partition of Irr(S_n): blocks indexed by (core, weight),
/// principal block (core of (n)) first, then by descending size, then by
/// lexicographically greatest first member.
pub fn nakayama_blocks(n: usize, p: u64) -> Vec<SnBlock> {
    let all = partitions(n);
    let principal_core = p_core(&Partition::new(vec![n]), p);
    let mut by_core: Vec<(Partition, Vec<Partition>)> = Vec::new();
    for lam in all {
        let core = p_core(&lam, p);
        match by_core.iter_mut().find(|(c, _)| *c == core) {
            Some((_, v)) => v.push(lam),
            None => by_core.push((core, vec![lam])),
        }
    }
    let mut blocks: Vec<SnBlock> = by_core
        .into_iter()
        .map(|(core, members)| {
            let weight = (n - core.sum()) / p as usize;
            SnBlock {
                core,
                weight,
                members,
            }
        })
        .collect();
    blocks.sort_by(|a, b| {
        let a_principal = a.core == principal_core;
        let b_principal = b.core == principal_core;
        b_principal
            .cmp(&a_principal)
            .then(b.members.len().cmp(&a.members.len()))
            .then(b.members[0].cmp(&a.members[0]))
    });
    blocks
}

/// Sylow p-subgroup of S_n: a direct product of iterated wreath products,
/// one factor of degree p^i per base-p digit of n, on consecutive points.
pub fn sylow_sn(n: usize, p: u64) -> PermGroup {
    let p = p as usize;
    let mut digits = Vec::new(); // (i, a_i) with a_i > 0
    let mut rest = n;
    let mut i = 0u32;
    while rest > 0 {
        let a = rest % p;
        if a > 0 && i > 0 {
            digits.push((i, a));
        }
        rest /= p;
        i += 1;
    }
    let mut gens: Vec<Vec<Vec<usize>>> = Vec::new(); // cycles, 1-based
    let mut offset = 0usize;
    for &(level, count) in digits.iter().rev() {
        for _ in 0..count {
            wreath_generators(p, level, offset, &mut gens);
            offset += p.pow(level);
        }
    }
    let generators = gens
        .iter()
        .map(|cycles| Permutation::from_cycles(n, cycles))
        .collect();
    PermGroup::new(n, generators)
}

/// Generators of the iterated wreath product W_level on points
/// offset+1 .. offset+p^level.
fn wreath_generators(p: usize, level: u32, offset: usize, out: &mut Vec<Vec<Vec<usize>>>) {
    if level == 0 {
        return;
    }
    wreath_generators(p, level - 1, offset, out);
    let block = p.pow(level - 1);
    // spreading element: product of `block` p-cycles across the p sub-blocks
    let cycles: Vec<Vec<usize>> = (0..block)
        .map(|j| (0..p).map(|k| offset + k * block + j + 1).collect())
        .collect();
    out.push(cycles);
}

/// Class metadata of S_n computed combinatorially from cycle types.
pub struct SnClass {
    pub cycle_type: Partition,
    pub size: u64,
    pub element_order: u64,
    pub representative: Permutation,
}

pub fn class_size(n: usize, mu: &Partition) -> u64 {
    let mut z = 1u128;
    let mut run_len = 0u128;
    let mut prev = 0usize;
    for &part in mu.parts() {
        if part == prev {
            run_len += 1;
        } else {
            prev = part;
            run_len = 1;
        }
        z *= part as u128 * run_len;
    }
    let mut fact = 1u128;
    for k in 1..=n as u128 {
        fact *= k;
    }
    (fact / z) as u64
}

/// Lexicographically least permutation of the given cycle type: fixed points
/// on the smallest labels, then cycles of increasing length on consecutive
/// points, each in natural order.
pub fn min_class_rep(n: usize, mu: &Partition) -> Permutation {
    let mut parts = mu.parts().to_vec();
    parts.sort_unstable();
    let mut cycles = Vec::new();
    let mut next = 1usize;
    for len in parts {
        if len > 1 {
            cycles.push((next..next + len).collect::<Vec<usize>>());
        }
        next += len;
    }
    Permutation::from_cycles(n, &cycles)
}

pub fn element_order(mu: &Partition) -> u64 {
    mu.parts().iter().fold(1u64, |acc, &p| lcm(acc, p as u64))
}

/// Cycle type of the k-th power of an element of cycle type mu.
pub fn power_type(mu: &Partition, k: u64) -> Partition {
    let mut parts = Vec::new();
    for &l in mu.parts() {
        let g = crate::perm::gcd(l as u64, k) as usize;
        for _ in 0..g {
            parts.push(l / g);
        }
    }
    Partition::new(parts)
}

/// Conjugacy classes of S_n in the canonical order
/// (size, element order, lexicographically least representative).
pub fn canonical_classes(n: usize) -> Vec<SnClass> {
    let mut classes: Vec<SnClass> = partitions(n)
        .into_iter()
        .map(|mu| {
            let size = class_size(n, &mu);
            let element_order = element_order(&mu);
            let representative = min_class_rep(n, &mu);
            SnClass {
                cycle_type: mu,
                size,
                element_order,
                representative,
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.size, a.element_order, &a.representative).cmp(&(b.size, b.element_order, &b.representative))
    });
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn partition_generation() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(9).len(), 30);
        assert_eq!(partitions(10).len(), 42);
        assert_eq!(partition_count(10), 42);
        assert_eq!(partition_count(9), 30);
        // descending lex, (n) first
        assert_eq!(partitions(3)[0], pt(&[3]));
        assert_eq!(partitions(3)[2], pt(&[1, 1, 1]));
    }

    #[test]
    fn mn_trivial_and_sign() {
        for mu in partitions(6) {
            assert_eq!(mn_value(&pt(&[6]), &mu).unwrap(), 1);
            let sign = if (6 - mu.parts().len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(mn_value(&pt(&[1; 6]), &mu).unwrap(), sign);
        }
    }

    #[test]
    fn mn_single_hook() {
        // (3,2) has no 5-hook, so the value on a 5-cycle vanishes
        assert_eq!(mn_value(&pt(&[3, 2]), &pt(&[5])).unwrap(), 0);
        // (3,1,1) is a hook with leg length 2, so the value is (-1)^2
        assert_eq!(mn_value(&pt(&[3, 1, 1]), &pt(&[5])).unwrap(), 1);
    }

    #[test]
    fn mn_size_mismatch() {
        assert!(matches!(
            mn_value(&pt(&[2]), &pt(&[3])),
            Err(Error::SizeMismatch(2, 3))
        ));
    }

    #[test]
    fn degrees_match_hook_formula() {
        for n in 1..=8 {
            let ones = pt(&vec![1; n]);
            for lam in partitions(n) {
                let deg = mn_value(&lam, &ones).unwrap();
                assert_eq!(deg as u64, hook_length_degree(&lam), "lambda = {:?}", lam);
            }
        }
    }

    #[test]
    fn s5_degree_list() {
        let degs: Vec<u64> = partitions(5).iter().map(hook_length_degree).collect();
        assert_eq!(degs, vec![1, 4, 5, 6, 5, 4, 1]);
    }

    #[test]
    fn p_core_examples() {
        // |lambda| < p: core = lambda
        assert_eq!(p_core(&pt(&[2, 1]), 5), pt(&[2, 1]));
        assert_eq!(p_weight(&pt(&[2, 1]), 5), 0);
        // single hook
        assert_eq!(p_core(&pt(&[3]), 3), Partition::new(vec![]));
        assert_eq!(p_weight(&pt(&[3]), 3), 1);
        // (5,4) at p = 3: empty core, weight 3
        assert_eq!(p_core(&pt(&[5, 4]), 3), Partition::new(vec![]));
        assert_eq!(p_weight(&pt(&[5, 4]), 3), 3);
    }

    /// Exhaustive stripping oracle: remove p-hooks in every possible order.
    fn all_strip_results(lambda: &Partition, p: usize) -> Vec<Partition> {
        let beta = lambda.beta_set();
        let set: std::collections::HashSet<usize> = beta.iter().copied().collect();
        let moves: Vec<usize> = beta
            .iter()
            .copied()
            .filter(|&b| b >= p && !set.contains(&(b - p)))
            .collect();
        if moves.is_empty() {
            return vec![lambda.clone()];
        }
        let mut out = Vec::new();
        for b in moves {
            let nb: Vec<usize> = beta
                .iter()
                .map(|&x| if x == b { b - p } else { x })
                .collect();
            out.extend(all_strip_results(&Partition::from_beta(nb), p));
        }
        out
    }

    #[test]
    fn p_core_stripping_order_independent() {
        for n in 4..=9 {
            for p in [2usize, 3] {
                for lam in partitions(n) {
                    let results = all_strip_results(&lam, p);
                    let expected = p_core(&lam, p as u64);
                    for r in results {
                        assert_eq!(r, expected, "lambda = {:?}, p = {p}", lam);
                    }
                }
            }
        }
    }

    #[test]
    fn nakayama_block_sizes() {
        // k(B_0(S_9)) at p = 3 is 22
        let blocks = nakayama_blocks(9, 3);
        assert_eq!(blocks[0].members.len(), 22);
        assert!(blocks[0].members.contains(&pt(&[9])));
        // k(B_0(S_10)) at p = 5 is 20 = (p^2 + 3p)/2
        let blocks = nakayama_blocks(10, 5);
        assert_eq!(blocks[0].members.len(), 20);
        // sizes sum to p(n)
        let total: usize = blocks.iter().map(|b| b.members.len()).sum();
        assert_eq!(total, 42);
        // n < p: all singletons
        let blocks = nakayama_blocks(4, 5);
        assert!(blocks.iter().all(|b| b.members.len() == 1 && b.weight == 0));
    }

    #[test]
    fn sylow_sn_orders() {
        use crate::perm::valuation;
        for (n, p) in [(4usize, 2u64), (5, 2), (6, 3), (8, 2), (9, 3), (10, 5)] {
            let s = sylow_sn(n, p);
            let mut fact = 1u64;
            for k in 1..=n as u64 {
                fact *= k;
            }
            assert_eq!(
                s.order().unwrap(),
                p.pow(valuation(fact, p)),
                "n = {n}, p = {p}"
            );
        }
    }

    #[test]
    fn sylow_s9_class_count() {
        let s = sylow_sn(9, 3);
        assert_eq!(s.order().unwrap(), 81);
        assert_eq!(s.class_count().unwrap(), 17);
    }

    #[test]
    fn sylow_s10_p5_elementary_abelian() {
        let s = sylow_sn(10, 5);
        assert_eq!(s.order().unwrap(), 25);
        assert!(s.is_elementary_abelian(5).unwrap());
        assert_eq!(s.class_count().unwrap(), 25);
    }

    #[test]
    fn sylow_s4_is_dihedral() {
        let s = sylow_sn(4, 2);
        assert_eq!(s.order().unwrap(), 8);
        assert!(s.is_dihedral().unwrap());
        assert_eq!(s.class_count().unwrap(), 5);
    }

    #[test]
    fn class_metadata_matches_enumeration() {
        for n in 2..=6 {
            let combinatorial = canonical_classes(n);
            let g = crate::presets::sym(n);
            let cd = g.conjugacy_classes().unwrap();
            assert_eq!(combinatorial.len(), cd.classes.len());
            for (a, b) in combinatorial.iter().zip(&cd.classes) {
                assert_eq!(a.size, b.size, "n = {n}");
                assert_eq!(a.element_order, b.element_order);
                assert_eq!(a.representative, b.representative, "n = {n}");
            }
        }
    }

    #[test]
    fn power_types() {
        assert_eq!(power_type(&pt(&[6]), 2), pt(&[3, 3]));
        assert_eq!(power_type(&pt(&[6]), 3), pt(&[2, 2, 2]));
        assert_eq!(power_type(&pt(&[5, 3]), 5), pt(&[3, 1, 1, 1, 1, 1]));
    }
}
