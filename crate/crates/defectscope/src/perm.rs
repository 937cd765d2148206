//! Permutation-group engine: elements, enumeration, conjugacy classes,
//! centralizers, normalizers, Sylow subgroups.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_ENUM_LIMIT: usize = 1_000_000;

/// A permutation of {1..degree}, stored as 0-based image tuple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// Build from 0-based images. Panics if not a bijection.
    pub fn from_images(images: Vec<u8>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(
                (i as usize) < images.len() && !seen[i as usize],
                "images must be a bijection"
            );
            seen[i as usize] = true;
        }
        Permutation { images }
    }

    /// Build from disjoint cycles in 1-based point labels.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Self {
        let mut images: Vec<u8> = (0..degree as u8).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let a = cycle[w] - 1;
                let b = cycle[(w + 1) % cycle.len()] - 1;
                images[a] = b as u8;
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// self followed by other: (self * other)(x) = other(self(x)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        Permutation { images }
    }

    /// Conjugate self^g = g^-1 * self * g.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().compose(self).compose(g)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn order(&self) -> u64 {
        let mut acc = self.clone();
        let mut n = 1u64;
        while !acc.is_identity() {
            acc = acc.compose(self);
            n += 1;
        }
        n
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Disjoint cycle decomposition, 1-based, nontrivial cycles only.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle type as a descending partition of the degree.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 1;
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                len += 1;
                p = self.apply(p);
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub size: u64,
    pub element_order: u64,
}

/// Class data for an enumerated group: canonical class list plus membership maps.
pub struct ClassData {
    pub classes: Vec<ConjugacyClass>,
    /// member indices (into the sorted element list) per class
    pub members: Vec<Vec<u32>>,
    class_of: HashMap<Permutation, usize>,
}

impl ClassData {
    pub fn class_of(&self, x: &Permutation) -> Option<usize> {
        self.class_of.get(x).copied()
    }

    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

/// A finitely generated group of permutations on {1..degree}.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    limit: usize,
    elements: OnceLock<Result<Vec<Permutation>>>,
    element_set: OnceLock<HashSet<Permutation>>,
    classes: OnceLock<ClassData>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Self {
        Self::with_limit(degree, generators, DEFAULT_ENUM_LIMIT)
    }

    pub fn with_limit(degree: usize, generators: Vec<Permutation>, limit: usize) -> Self {
        for g in &generators {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        PermGroup {
            degree,
            generators,
            limit,
            elements: OnceLock::new(),
            element_set: OnceLock::new(),
            classes: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, vec![])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn enum_limit(&self) -> usize {
        self.limit
    }

    /// All elements, sorted lexicographically by image tuple.
    pub fn elements(&self) -> Result<&[Permutation]> {
        let r = self.elements.get_or_init(|| {
            bfs_closure(self.degree, &self.generators, self.limit).map(|mut v| {
                v.sort_unstable();
                v
            })
        });
        match r {
            Ok(v) => Ok(v),
            Err(e) => Err(clone_enum_err(e)),
        }
    }

    pub fn order(&self) -> Result<u64> {
        Ok(self.elements()?.len() as u64)
    }

    fn set(&self) -> Result<&HashSet<Permutation>> {
        let elems = self.elements()?;
        Ok(self
            .element_set
            .get_or_init(|| elems.iter().cloned().collect()))
    }

    pub fn contains(&self, x: &Permutation) -> Result<bool> {
        Ok(x.degree() == self.degree && self.set()?.contains(x))
    }

    pub fn is_subgroup(&self, h: &PermGroup) -> Result<bool> {
        for g in h.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Conjugacy classes in canonical order: sorted by
    /// (size, element order, lexicographically least representative).
    pub fn conjugacy_classes(&self) -> Result<&ClassData> {
        self.elements()?;
        Ok(self.classes.get_or_init(|| {
            let elems = self.elements().expect("enumerated above");
            let index_of: HashMap<&Permutation, u32> =
                elems.iter().enumerate().map(|(i, g)| (g, i as u32)).collect();
            let mut assigned = vec![false; elems.len()];
            let mut raw: Vec<Vec<u32>> = Vec::new();
            for start in 0..elems.len() {
                if assigned[start] {
                    continue;
                }
                // orbit of elems[start] under conjugation by generators
                let mut orbit = vec![start as u32];
                assigned[start] = true;
                let mut queue = VecDeque::from([start as u32]);
                while let Some(i) = queue.pop_front() {
                    for g in &self.generators {
                        let y = elems[i as usize].conjugate_by(g);
                        let j = *index_of.get(&y).expect("closed under conjugation");
                        if !assigned[j as usize] {
                            assigned[j as usize] = true;
                            orbit.push(j);
                            queue.push_back(j);
                        }
                    }
                }
                orbit.sort_unstable();
                raw.push(orbit);
            }
            // canonical order; elements are sorted, so members[0] is the lex-min rep
            raw.sort_by(|a, b| {
                let (ra, rb) = (&elems[a[0] as usize], &elems[b[0] as usize]);
                (a.len(), ra.order(), ra).cmp(&(b.len(), rb.order(), rb))
            });
            let classes = raw
                .iter()
                .map(|members| {
                    let rep = elems[members[0] as usize].clone();
                    let element_order = rep.order();
                    ConjugacyClass {
                        representative: rep,
                        size: members.len() as u64,
                        element_order,
                    }
                })
                .collect();
            let mut class_of = HashMap::with_capacity(elems.len());
            for (ci, members) in raw.iter().enumerate() {
                for &i in members {
                    class_of.insert(elems[i as usize].clone(), ci);
                }
            }
            ClassData {
                classes,
                members: raw,
                class_of,
            }
        }))
    }

    pub fn class_count(&self) -> Result<usize> {
        Ok(self.conjugacy_classes()?.count())
    }

    pub fn exponent(&self) -> Result<u64> {
        let mut m = 1u64;
        for c in &self.conjugacy_classes()?.classes {
            m = lcm(m, c.element_order);
        }
        Ok(m)
    }

    /// Centralizer of a single element.
    pub fn centralizer(&self, x: &Permutation) -> Result<PermGroup> {
        if !self.contains(x)? {
            return Err(Error::NotAMember);
        }
        let elems: Vec<Permutation> = self
            .elements()?
            .iter()
            .filter(|g| g.commutes_with(x))
            .cloned()
            .collect();
        Ok(self.subgroup_from_elements(elems))
    }

    /// Centralizer of a subgroup: elements commuting with every generator of H.
    pub fn centralizer_of_subgroup(&self, h: &PermGroup) -> Result<PermGroup> {
        if !self.is_subgroup(h)? {
            return Err(Error::NotASubgroup("H is not a subgroup of G".into()));
        }
        let elems: Vec<Permutation> = self
            .elements()?
            .iter()
            .filter(|g| h.generators().iter().all(|s| g.commutes_with(s)))
            .cloned()
            .collect();
        Ok(self.subgroup_from_elements(elems))
    }

    /// Normalizer of a subgroup by direct scan.
    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup> {
        if !self.is_subgroup(h)? {
            return Err(Error::NotASubgroup("H is not a subgroup of G".into()));
        }
        let hset = h.set()?;
        let elems: Vec<Permutation> = self
            .elements()?
            .iter()
            .filter(|g| {
                h.generators()
                    .iter()
                    .all(|s| hset.contains(&s.conjugate_by(g)))
            })
            .cloned()
            .collect();
        Ok(self.subgroup_from_elements(elems))
    }

    /// A Sylow p-subgroup, built by normalizer climbing from a p-element.
    /// Returns the trivial group when p does not divide |G|.
    pub fn sylow(&self, p: u64) -> Result<PermGroup> {
        let order = self.order()?;
        let target = p.pow(valuation(order, p));
        if target == 1 {
            return Ok(PermGroup::trivial(self.degree));
        }
        // start from a lex-least p-element of maximal p-power order
        let mut best: Option<&Permutation> = None;
        let mut best_order = 0u64;
        for g in self.elements()? {
            let o = g.order();
            if o > 1 && is_p_power(o, p) && o > best_order {
                best = Some(g);
                best_order = o;
            }
        }
        let mut current = self.subgroup_from_elements(cyclic_elements(best.expect("p | |G|")));
        while current.order()? < target {
            let n = self.normalizer(&current)?;
            let cur_set = current.set()?;
            let y = n
                .elements()?
                .iter()
                .find(|y| {
                    let o = y.order();
                    o > 1 && is_p_power(o, p) && !cur_set.contains(*y)
                })
                .cloned()
                .expect("N_G(P) contains a p-element outside P when P is not Sylow");
            let mut gens = small_generating_set(
                self.degree,
                &closure_with(current.elements()?, &y, self.limit)?,
            );
            gens.sort_unstable();
            current = PermGroup::with_limit(self.degree, gens, self.limit);
        }
        Ok(current)
    }

    /// True iff G has a normal p-complement, by Frobenius' counting criterion:
    /// the number of p'-elements equals the p'-part of |G|.
    pub fn is_p_nilpotent(&self, p: u64) -> Result<bool> {
        let order = self.order()?;
        let p_part = p.pow(valuation(order, p));
        let coprime_count = self
            .elements()?
            .iter()
            .filter(|g| g.order() % p != 0)
            .count() as u64;
        Ok(coprime_count == order / p_part)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn is_cyclic(&self) -> Result<bool> {
        let order = self.order()?;
        Ok(self.elements()?.iter().any(|g| g.order() == order))
    }

    /// Dihedral of order >= 8: a cyclic subgroup of index 2 inverted by an involution.
    pub fn is_dihedral(&self) -> Result<bool> {
        let order = self.order()?;
        if order < 8 || order % 2 != 0 {
            return Ok(false);
        }
        let half = order / 2;
        for r in self.elements()? {
            if r.order() != half {
                continue;
            }
            let rot: HashSet<Permutation> = cyclic_elements(r).into_iter().collect();
            let rinv = r.inverse();
            for s in self.elements()? {
                if s.order() == 2 && !rot.contains(s) && r.conjugate_by(s) == rinv {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    pub fn is_elementary_abelian(&self, p: u64) -> Result<bool> {
        if !self.is_abelian() {
            return Ok(false);
        }
        Ok(self.elements()?.iter().all(|g| {
            let o = g.order();
            o == 1 || o == p
        }))
    }

    /// Subgroup of self from an explicit element set: finds a small generating
    /// set and pre-seeds the element cache.
    fn subgroup_from_elements(&self, mut elems: Vec<Permutation>) -> PermGroup {
        elems.sort_unstable();
        let gens = small_generating_set(self.degree, &elems);
        let g = PermGroup::with_limit(self.degree, gens, self.limit);
        let _ = g.elements.set(Ok(elems));
        g
    }
}

/// Subgroup generated by A and B inside G; requires one factor to normalize
/// the other so that the product is a subgroup of order |A||B|/|A n B|.
pub fn product_subgroup(g: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    if !g.is_subgroup(a)? || !g.is_subgroup(b)? {
        return Err(Error::NotASubgroup("factor is not a subgroup of G".into()));
    }
    let normalizes = |x: &PermGroup, y: &PermGroup| -> Result<bool> {
        let yset = y.set()?;
        for gx in x.generators() {
            for gy in y.generators() {
                if !yset.contains(&gy.conjugate_by(gx)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    };
    if !(normalizes(a, b)? || normalizes(b, a)?) {
        return Err(Error::NotASubgroup(
            "neither factor normalizes the other".into(),
        ));
    }
    let mut gens: Vec<Permutation> = a.generators().to_vec();
    gens.extend(b.generators().iter().cloned());
    let prod = PermGroup::with_limit(g.degree(), gens, g.enum_limit());
    let inter = a
        .elements()?
        .iter()
        .filter(|x| b.set().map(|s| s.contains(*x)).unwrap_or(false))
        .count() as u64;
    debug_assert_eq!(prod.order()?, a.order()? * b.order()? / inter);
    Ok(prod)
}

fn clone_enum_err(e: &Error) -> Error {
    match e {
        Error::LimitExceeded(n) => Error::LimitExceeded(*n),
        other => Error::NotASubgroup(format!("enumeration failed: {other}")),
    }
}

fn bfs_closure(
    degree: usize,
    generators: &[Permutation],
    limit: usize,
) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = g.compose(s);
            if !seen.contains(&h) {
                if seen.len() >= limit {
                    return Err(Error::LimitExceeded(limit));
                }
                seen.insert(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

fn closure_with(
    elems: &[Permutation],
    extra: &Permutation,
    limit: usize,
) -> Result<Vec<Permutation>> {
    let mut seen: HashSet<Permutation> = elems.iter().cloned().collect();
    let mut queue: VecDeque<Permutation> = seen.iter().cloned().collect();
    seen.insert(extra.clone());
    queue.push_back(extra.clone());
    let mut gens: Vec<Permutation> = elems.to_vec();
    gens.push(extra.clone());
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let h = g.compose(s);
            if !seen.contains(&h) {
                if seen.len() >= limit {
                    return Err(Error::LimitExceeded(limit));
                }
                seen.insert(h.clone());
                queue.push_back(h);
            }
        }
    }
    let mut v: Vec<Permutation> = seen.into_iter().collect();
    v.sort_unstable();
    Ok(v)
}

/// Greedy small generating set from a sorted element list.
fn small_generating_set(degree: usize, elems: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut have: HashSet<Permutation> = HashSet::new();
    have.insert(Permutation::identity(degree));
    for g in elems {
        if !have.contains(g) {
            gens.push(g.clone());
            let closed =
                bfs_closure(degree, &gens, elems.len() + 1).expect("closure of subset is bounded");
            have = closed.into_iter().collect();
            if have.len() == elems.len() {
                break;
            }
        }
    }
    gens
}

fn cyclic_elements(g: &Permutation) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(g.degree())];
    let mut acc = g.clone();
    while !acc.is_identity() {
        out.push(acc.clone());
        acc = acc.compose(g);
    }
    out
}

pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PermGroup {
        let mut gens = vec![Permutation::from_cycles(n, &[vec![1, 2]])];
        if n > 2 {
            gens.push(Permutation::from_cycles(n, &[(1..=n).collect()]));
        }
        PermGroup::new(n, gens)
    }

    fn alt5() -> PermGroup {
        PermGroup::new(
            5,
            vec![
                Permutation::from_cycles(5, &[vec![1, 2, 3, 4, 5]]),
                Permutation::from_cycles(5, &[vec![3, 4, 5]]),
            ],
        )
    }

    /// Independent closure oracle: multiply all pairs until stable.
    fn pairwise_closure_order(degree: usize, gens: &[Permutation]) -> usize {
        let mut set: HashSet<Permutation> = gens.iter().cloned().collect();
        set.insert(Permutation::identity(degree));
        loop {
            let mut next = set.clone();
            for a in &set {
                for b in &set {
                    next.insert(a.compose(b));
                }
            }
            if next.len() == set.len() {
                return set.len();
            }
            set = next;
        }
    }

    #[test]
    fn enumerate_s4() {
        assert_eq!(sym(4).order().unwrap(), 24);
    }

    #[test]
    fn enumerate_trivial() {
        assert_eq!(PermGroup::trivial(3).order().unwrap(), 1);
    }

    #[test]
    fn enumerate_a5_against_pairwise_oracle() {
        let g = alt5();
        let oracle = pairwise_closure_order(5, g.generators());
        assert_eq!(oracle, 60);
        assert_eq!(g.order().unwrap(), 60);
    }

    #[test]
    fn limit_exceeded() {
        let g = PermGroup::with_limit(5, sym(5).generators().to_vec(), 50);
        assert!(matches!(g.order(), Err(Error::LimitExceeded(50))));
    }

    #[test]
    fn classes_s4() {
        // class count of S_n = partition count; independent oracle
        fn partitions(n: usize, max: usize) -> usize {
            if n == 0 {
                return 1;
            }
            (1..=max.min(n)).map(|k| partitions(n - k, k)).sum()
        }
        let g = sym(4);
        let cd = g.conjugacy_classes().unwrap();
        assert_eq!(cd.count(), partitions(4, 4));
        assert_eq!(cd.count(), 5);
        // class equation
        let total: u64 = cd.classes.iter().map(|c| c.size).sum();
        assert_eq!(total, 24);
        assert!(cd.classes[0].representative.is_identity());
    }

    #[test]
    fn classes_trivial() {
        assert_eq!(PermGroup::trivial(1).class_count().unwrap(), 1);
    }

    #[test]
    fn centralizer_examples() {
        let s3 = sym(3);
        let x = Permutation::from_cycles(3, &[vec![1, 2, 3]]);
        assert_eq!(s3.centralizer(&x).unwrap().order().unwrap(), 3);
        // brute-force oracle
        let brute = s3
            .elements()
            .unwrap()
            .iter()
            .filter(|g| g.commutes_with(&x))
            .count();
        assert_eq!(brute, 3);

        let a5 = alt5();
        let y = Permutation::from_cycles(5, &[vec![1, 2, 3, 4, 5]]);
        assert_eq!(a5.centralizer(&y).unwrap().order().unwrap(), 5);

        let id = Permutation::identity(3);
        assert_eq!(s3.centralizer(&id).unwrap().order().unwrap(), 6);
    }

    #[test]
    fn centralizer_not_member() {
        let a5 = alt5();
        let odd = Permutation::from_cycles(5, &[vec![1, 2]]);
        assert!(matches!(a5.centralizer(&odd), Err(Error::NotAMember)));
    }

    #[test]
    fn class_equation_consistency() {
        let a5 = alt5();
        let cd = a5.conjugacy_classes().unwrap();
        for c in &cd.classes {
            let cent = a5.centralizer(&c.representative).unwrap();
            assert_eq!(cent.order().unwrap() * c.size, 60);
        }
    }

    #[test]
    fn normalizer_sylow5_a5() {
        let a5 = alt5();
        let d = a5.sylow(5).unwrap();
        assert_eq!(d.order().unwrap(), 5);
        assert!(d.is_cyclic().unwrap());
        let n = a5.normalizer(&d).unwrap();
        assert_eq!(n.order().unwrap(), 10);
        let c = a5.centralizer_of_subgroup(&d).unwrap();
        assert_eq!(c.order().unwrap(), 5);
    }

    #[test]
    fn normalizer_of_trivial_is_g() {
        let s3 = sym(3);
        let t = PermGroup::trivial(3);
        assert_eq!(s3.normalizer(&t).unwrap().order().unwrap(), 6);
        assert_eq!(s3.centralizer_of_subgroup(&t).unwrap().order().unwrap(), 6);
    }

    #[test]
    fn sylow_orders() {
        let a4 = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![1, 2, 3]]),
                Permutation::from_cycles(4, &[vec![2, 3, 4]]),
            ],
        );
        assert_eq!(a4.order().unwrap(), 12);
        assert_eq!(a4.sylow(2).unwrap().order().unwrap(), 4);
        assert_eq!(a4.sylow(3).unwrap().order().unwrap(), 3);
        // p not dividing order
        assert_eq!(a4.sylow(5).unwrap().order().unwrap(), 1);
    }

    #[test]
    fn sylow_s9_is_81() {
        let s9 = sym(9);
        let p = s9.sylow(3).unwrap();
        assert_eq!(p.order().unwrap(), 81);
        assert_eq!(p.class_count().unwrap(), 17);
    }

    #[test]
    fn product_subgroup_examples() {
        let a5 = alt5();
        let d = a5.sylow(5).unwrap();
        let c = a5.centralizer_of_subgroup(&d).unwrap();
        let h = product_subgroup(&a5, &d, &c).unwrap();
        assert_eq!(h.order().unwrap(), 5);
        // A = B -> A
        let same = product_subgroup(&a5, &d, &d).unwrap();
        assert_eq!(same.order().unwrap(), 5);
    }

    #[test]
    fn p_nilpotency() {
        let s3 = sym(3);
        // normal 3-complement... for p=2 the complement C_3 is normal
        assert!(s3.is_p_nilpotent(2).unwrap());
        // for p=3 the complement C_2 is not normal
        assert!(!s3.is_p_nilpotent(3).unwrap());
        let a4 = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![1, 2, 3]]),
                Permutation::from_cycles(4, &[vec![2, 3, 4]]),
            ],
        );
        assert!(!a4.is_p_nilpotent(2).unwrap());
        assert!(a4.is_p_nilpotent(3).unwrap());
        // p-group is p-nilpotent for its own p
        let d8 = sym(4).sylow(2).unwrap();
        assert!(d8.is_p_nilpotent(2).unwrap());
    }

    #[test]
    fn dihedral_detection() {
        let d8 = sym(4).sylow(2).unwrap();
        assert_eq!(d8.order().unwrap(), 8);
        assert!(d8.is_dihedral().unwrap());
        assert!(!d8.is_abelian());
    }

    #[test]
    fn determinism_of_class_order() {
        let g1 = sym(5);
        let g2 = sym(5);
        let c1 = g1.conjugacy_classes().unwrap();
        let c2 = g2.conjugacy_classes().unwrap();
        for (a, b) in c1.classes.iter().zip(&c2.classes) {
            assert_eq!(a.representative, b.representative);
            assert_eq!(a.size, b.size);
        }
    }
}
