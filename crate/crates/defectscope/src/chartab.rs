//! Ordinary character tables: Dixon-Schneider computation over a finite
//! field, the Murnaghan-Nakayama fast path for symmetric groups, ingestion
//! of external tables, and exact validation.

use std::collections::BTreeMap;

use num::{BigInt, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::perm::{lcm, PermGroup};
use crate::symfunc::{self, MnCache, Partition};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassMeta {
    pub size: u64,
    pub element_order: u64,
}

/// An ordinary character table over canonical class and row orders.
pub struct CharacterTable {
    pub order: u64,
    pub exponent: u64,
    pub classes: Vec<ClassMeta>,
    /// for each prime dividing the exponent, class index of q-th powers
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    /// rows = irreducible characters, columns = classes
    pub values: Vec<Vec<CycloNum>>,
    /// partition labels for the rows, when produced by the symmetric-group path
    pub row_partitions: Option<Vec<Partition>>,
}

impl CharacterTable {
    pub fn k(&self) -> usize {
        self.values.len()
    }

    pub fn degree(&self, row: usize) -> BigInt {
        self.values[row][0]
            .as_integer()
            .expect("validated table has integer degrees")
    }

    pub fn degrees(&self) -> Vec<BigInt> {
        (0..self.k()).map(|r| self.degree(r)).collect()
    }

    /// Full exact invariant suite; zero tolerance.
    pub fn validate(&self) -> Result<()> {
        let k = self.classes.len();
        if self.values.len() != k {
            return Err(Error::ValidationError(format!(
                "{} rows but {} classes",
                self.values.len(),
                k
            )));
        }
        for (r, row) in self.values.iter().enumerate() {
            if row.len() != k {
                return Err(Error::ValidationError(format!("row {r} has wrong length")));
            }
            for (i, v) in row.iter().enumerate() {
                if v.modulus() != self.exponent {
                    return Err(Error::ValidationError(format!(
                        "value [{r}][{i}] has modulus {} but table exponent is {}",
                        v.modulus(),
                        self.exponent
                    )));
                }
                if !v.is_algebraic_integer() {
                    return Err(Error::ValidationError(format!(
                        "value [{r}][{i}] is not an algebraic integer"
                    )));
                }
            }
        }
        let size_sum: u64 = self.classes.iter().map(|c| c.size).sum();
        if size_sum != self.order {
            return Err(Error::ValidationError(format!(
                "class sizes sum to {size_sum}, expected {}",
                self.order
            )));
        }
        if self.classes[0].size != 1 || self.classes[0].element_order != 1 {
            return Err(Error::ValidationError(
                "first class is not the identity class".into(),
            ));
        }
        let m = self
            .classes
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.element_order));
        if m != self.exponent {
            return Err(Error::ValidationError(format!(
                "lcm of element orders is {m}, declared exponent {}",
                self.exponent
            )));
        }
        // first row = trivial character
        let one = CycloNum::one(self.exponent);
        if !self.values[0].iter().all(|v| *v == one) {
            return Err(Error::ValidationError("first row is not trivial".into()));
        }
        // degrees: positive integers dividing |G|, sum of squares = |G|
        let mut deg_sq_sum = BigInt::zero();
        for r in 0..k {
            let d = self.values[r][0].as_integer().ok_or_else(|| {
                Error::ValidationError(format!("degree of row {r} is not a rational integer"))
            })?;
            if !d.is_positive() {
                return Err(Error::ValidationError(format!(
                    "degree of row {r} is not positive"
                )));
            }
            if (BigInt::from(self.order) % &d) != BigInt::zero() {
                return Err(Error::ValidationError(format!(
                    "degree of row {r} does not divide the group order"
                )));
            }
            deg_sq_sum += &d * &d;
        }
        if deg_sq_sum != BigInt::from(self.order) {
            return Err(Error::ValidationError(
                "sum of squared degrees differs from the group order".into(),
            ));
        }
        // power maps
        for (q, pm) in &self.power_maps {
            if self.exponent % q != 0 {
                return Err(Error::ValidationError(format!(
                    "power map for {q} but {q} does not divide the exponent"
                )));
            }
            if pm.len() != k {
                return Err(Error::ValidationError(format!(
                    "power map for {q} has wrong length"
                )));
            }
            for (i, &t) in pm.iter().enumerate() {
                if t >= k {
                    return Err(Error::ValidationError(format!(
                        "power map for {q} maps class {i} out of range"
                    )));
                }
                let o = self.classes[i].element_order;
                let expected = o / crate::perm::gcd(o, *q);
                if self.classes[t].element_order != expected {
                    return Err(Error::ValidationError(format!(
                        "power map for {q} sends class {i} (order {o}) to class of wrong order"
                    )));
                }
            }
        }
        // orthogonality, exact
        let conj: Vec<Vec<CycloNum>> = self
            .values
            .iter()
            .map(|row| row.iter().map(|v| v.conj()).collect())
            .collect();
        let big_order = CycloNum::from_bigint(self.exponent, BigInt::from(self.order));
        for r in 0..k {
            for s in r..k {
                let mut acc = CycloNum::zero(self.exponent);
                for i in 0..k {
                    let term = self.values[r][i]
                        .mul(&conj[s][i])
                        .scale(&num::BigRational::from_integer(BigInt::from(
                            self.classes[i].size,
                        )));
                    acc = acc.add(&term);
                }
                let expected = if r == s {
                    big_order.clone()
                } else {
                    CycloNum::zero(self.exponent)
                };
                if acc != expected {
                    return Err(Error::ValidationError(format!(
                        "row orthogonality fails for rows {r}, {s}"
                    )));
                }
            }
        }
        for i in 0..k {
            for j in i..k {
                let mut acc = CycloNum::zero(self.exponent);
                for r in 0..k {
                    acc = acc.add(&self.values[r][i].mul(&conj[r][j]));
                }
                let expected = if i == j {
                    CycloNum::from_bigint(
                        self.exponent,
                        BigInt::from(self.order / self.classes[i].size),
                    )
                } else {
                    CycloNum::zero(self.exponent)
                };
                if acc != expected {
                    return Err(Error::ValidationError(format!(
                        "column orthogonality fails for classes {i}, {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            order: self.order,
            exponent: self.exponent,
            classes: self.classes.clone(),
            power_maps: self
                .power_maps
                .iter()
                .map(|(q, v)| (q.to_string(), v.clone()))
                .collect(),
            values: self.values.clone(),
        }
    }
}

/// External JSON schema for tables.
#[derive(Serialize, Deserialize)]
pub struct TableJson {
    pub order: u64,
    pub exponent: u64,
    pub classes: Vec<ClassMeta>,
    pub power_maps: BTreeMap<String, Vec<usize>>,
    pub values: Vec<Vec<CycloNum>>,
}

/// Parse and fully validate an external table.
pub fn ingest(text: &str) -> Result<CharacterTable> {
    let raw: TableJson =
        serde_json::from_str(text).map_err(|e| Error::SchemaError(e.to_string()))?;
    let mut power_maps = BTreeMap::new();
    for (q, v) in raw.power_maps {
        let q: u64 = q
            .parse()
            .map_err(|_| Error::SchemaError(format!("bad power map key: {q}")))?;
        power_maps.insert(q, v);
    }
    let table = CharacterTable {
        order: raw.order,
        exponent: raw.exponent,
        classes: raw.classes,
        power_maps,
        values: raw.values,
        row_partitions: None,
    };
    table.validate()?;
    Ok(table)
}

/// Class-constant tensor a[i][j][k] = #{(x, y) in C_i x C_j : xy = z} for a
/// fixed z in C_k.
pub fn class_constants(g: &PermGroup) -> Result<Vec<Vec<Vec<u64>>>> {
    let cd = g.conjugacy_classes()?;
    let elems = g.elements()?;
    let k = cd.count();
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for kk in 0..k {
        let z = &cd.classes[kk].representative;
        for i in 0..k {
            for &xi in &cd.members[i] {
                let y = elems[xi as usize].inverse().compose(z);
                let j = cd.class_of(&y).expect("product stays in the group");
                a[i][j][kk] += 1;
            }
        }
    }
    Ok(a)
}

// ---- mod-q linear algebra ----

fn mulq(q: u64, a: u64, b: u64) -> u64 {
    (a as u128 * b as u128 % q as u128) as u64
}

fn invq(q: u64, a: u64) -> u64 {
    crate::gfp::inv_mod(q, a)
}

fn det_mod(q: u64, mut m: Vec<Vec<u64>>) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r][col] != 0);
        let Some(pr) = pivot else { return 0 };
        if pr != col {
            m.swap(pr, col);
            det = q - det;
            if det == q {
                det = 0;
            }
        }
        let pv = m[col][col];
        det = mulq(q, det, pv);
        let pinv = invq(q, pv);
        for r in col + 1..n {
            if m[r][col] == 0 {
                continue;
            }
            let factor = mulq(q, m[r][col], pinv);
            for c in col..n {
                let t = mulq(q, factor, m[col][c]);
                m[r][c] = (m[r][c] + q - t) % q;
            }
        }
    }
    det % q
}

/// Null-space basis of the matrix given by rows (each of length ncols).
fn kernel_mod(q: u64, mut rows: Vec<Vec<u64>>, ncols: usize) -> Vec<Vec<u64>> {
    let mut pivot_col_of_row = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let pivot = (rank..rows.len()).find(|&r| rows[r][col] != 0);
        let Some(pr) = pivot else { continue };
        rows.swap(pr, rank);
        let pinv = invq(q, rows[rank][col]);
        for c in 0..ncols {
            rows[rank][c] = mulq(q, rows[rank][c], pinv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..ncols {
                    let t = mulq(q, factor, rows[rank][c]);
                    rows[r][c] = (rows[r][c] + q - t) % q;
                }
            }
        }
        pivot_col_of_row.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    let pivot_cols: std::collections::HashSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (ri, &pc) in pivot_col_of_row.iter().enumerate() {
            let coeff = rows[ri][free];
            if coeff != 0 {
                v[pc] = (q - coeff) % q;
            }
        }
        basis.push(v);
    }
    basis
}

// ---- Dixon-Schneider ----

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Candidate primes q = 1 (mod m) with q > 2 * ceil(sqrt(|G|)).
fn dixon_primes(m: u64, order: u64) -> impl Iterator<Item = u64> {
    let s = isqrt(order);
    let bound = 2 * if s * s == order { s } else { s + 1 };
    (1..).map(move |t| t * m + 1).filter(move |&q| q > bound && is_prime(q))
}

/// Compute the character table by Dixon's method: common eigenvectors of the
/// class-sum matrices over GF(q), degrees from orthogonality, values lifted
/// to cyclotomics through discrete Fourier inversion over the power maps.
pub fn dixon_schneider(g: &PermGroup) -> Result<CharacterTable> {
    let a = class_constants(g)?;
    let mut last_err = Error::SplitFailure;
    for q in dixon_primes(g.exponent()?, g.order()?).take(8) {
        match dixon_with_q(g, &a, q) {
            Ok(t) => return Ok(t),
            Err(e @ Error::SplitFailure) => last_err = e,
            Err(e) => return Err(e),
        }
    }
    Err(last_err)
}

fn dixon_with_q(g: &PermGroup, a: &[Vec<Vec<u64>>], q: u64) -> Result<CharacterTable> {
    let cd = g.conjugacy_classes()?;
    let order = g.order()?;
    let m = g.exponent()?;
    let k = cd.count();

    // class-sum action matrices M_i[j][k] = a[i][j][k]
    let matrix = |i: usize| -> Vec<Vec<u64>> {
        (0..k)
            .map(|j| (0..k).map(|kk| a[i][j][kk] % q).collect())
            .collect()
    };

    // split the common eigenspaces
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()];
    for i in 1..k {
        if subspaces.iter().all(|b| b.len() == 1) {
            break;
        }
        let mi = matrix(i);
        // eigenvalues of M_i by determinant scan
        let mut eigenvalues = Vec::new();
        for lam in 0..q {
            let mut shifted = mi.clone();
            for d in 0..k {
                shifted[d][d] = (shifted[d][d] + q - lam) % q;
            }
            if det_mod(q, shifted) == 0 {
                eigenvalues.push(lam);
            }
        }
        let mut next = Vec::new();
        for basis in subspaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let r = basis.len();
            for &lam in &eigenvalues {
                // rows of (M_i - lam) * B, where B columns are basis vectors
                let mut rows = vec![vec![0u64; r]; k];
                for (bi, bvec) in basis.iter().enumerate() {
                    for row in 0..k {
                        let mut acc = 0u64;
                        for col in 0..k {
                            let mval = if row == col {
                                (mi[row][col] + q - lam) % q
                            } else {
                                mi[row][col]
                            };
                            acc = (acc + mulq(q, mval, bvec[col])) % q;
                        }
                        rows[row][bi] = acc;
                    }
                }
                let null = kernel_mod(q, rows, r);
                if null.is_empty() {
                    continue;
                }
                let sub: Vec<Vec<u64>> = null
                    .iter()
                    .map(|y| {
                        let mut v = vec![0u64; k];
                        for (bi, bvec) in basis.iter().enumerate() {
                            for t in 0..k {
                                v[t] = (v[t] + mulq(q, y[bi], bvec[t])) % q;
                            }
                        }
                        v
                    })
                    .collect();
                next.push(sub);
            }
        }
        subspaces = next;
    }
    if subspaces.len() != k || subspaces.iter().any(|b| b.len() != 1) {
        return Err(Error::SplitFailure);
    }

    // normalized eigenvectors are the central character vectors mod q
    let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(k);
    for b in &subspaces {
        let v = &b[0];
        if v[0] == 0 {
            return Err(Error::SplitFailure);
        }
        let s = invq(q, v[0]);
        omegas.push(v.iter().map(|&x| mulq(q, x, s)).collect());
    }

    // inverse-class map
    let inv_class: Vec<usize> = (0..k)
        .map(|i| {
            cd.class_of(&cd.classes[i].representative.inverse())
                .expect("inverse stays in the group")
        })
        .collect();

    // degrees from the second orthogonality relation
    let sq = isqrt(order);
    let mut degrees = Vec::with_capacity(k);
    for w in &omegas {
        let mut s = 0u64;
        for i in 0..k {
            let term = mulq(q, w[i], w[inv_class[i]]);
            s = (s + mulq(q, term, invq(q, cd.classes[i].size % q))) % q;
        }
        let d2 = mulq(q, order % q, invq(q, s));
        let d = (1..=sq).find(|&t| mulq(q, t, t) == d2);
        match d {
            Some(d) => degrees.push(d),
            None => return Err(Error::SplitFailure),
        }
    }

    // values mod q
    let vals_q: Vec<Vec<u64>> = omegas
        .iter()
        .zip(&degrees)
        .map(|(w, &d)| {
            (0..k)
                .map(|i| mulq(q, mulq(q, d, w[i]), invq(q, cd.classes[i].size % q)))
                .collect()
        })
        .collect();

    // primitive m-th root of unity mod q
    let z = (2..q)
        .map(|a0| crate::gfp::pow_mod(q, a0, (q - 1) / m))
        .find(|&z| {
            if z == 1 && m > 1 {
                return false;
            }
            // order exactly m
            let mut ok = true;
            for d in 1..m {
                if m % d == 0 && crate::gfp::pow_mod(q, z, d) == 1 {
                    ok = false;
                    break;
                }
            }
            ok
        })
        .expect("GF(q)* is cyclic of order divisible by m");

    // powers of class representatives
    let class_pow: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            let e = cd.classes[i].element_order;
            let rep = &cd.classes[i].representative;
            (0..e)
                .map(|s| cd.class_of(&rep.pow(s)).expect("closed under powers"))
                .collect()
        })
        .collect();

    // lift to cyclotomic values
    let mut values: Vec<Vec<CycloNum>> = Vec::with_capacity(k);
    for r in 0..k {
        let mut row = Vec::with_capacity(k);
        for i in 0..k {
            let e = cd.classes[i].element_order;
            let ze = crate::gfp::pow_mod(q, z, m / e);
            let zinv = invq(q, ze);
            let einv = invq(q, e % q);
            let mut terms = Vec::with_capacity(e as usize);
            let mut mult_sum = 0u64;
            for l in 0..e {
                let mut acc = 0u64;
                let mut zpow = 1u64; // zinv^(l*s)
                let zl = crate::gfp::pow_mod(q, zinv, l);
                for s in 0..e {
                    acc = (acc + mulq(q, vals_q[r][class_pow[i][s as usize]], zpow)) % q;
                    zpow = mulq(q, zpow, zl);
                }
                let mu = mulq(q, acc, einv);
                mult_sum += mu;
                if mu != 0 {
                    terms.push(((m / e) * l, BigInt::from(mu)));
                }
            }
            if mult_sum != degrees[r] {
                return Err(Error::SplitFailure);
            }
            row.push(CycloNum::from_power_sum(m, &terms));
        }
        values.push(row);
    }

    // power maps for primes dividing the exponent
    let mut power_maps = BTreeMap::new();
    let mut mm = m;
    let mut pr = 2u64;
    while mm > 1 {
        if mm % pr == 0 {
            while mm % pr == 0 {
                mm /= pr;
            }
            let pm: Vec<usize> = (0..k)
                .map(|i| {
                    cd.class_of(&cd.classes[i].representative.pow(pr))
                        .expect("closed under powers")
                })
                .collect();
            power_maps.insert(pr, pm);
        }
        pr += 1;
    }

    let classes: Vec<ClassMeta> = cd
        .classes
        .iter()
        .map(|c| ClassMeta {
            size: c.size,
            element_order: c.element_order,
        })
        .collect();

    let values = canonical_row_order(values, m, None).0;
    let table = CharacterTable {
        order,
        exponent: m,
        classes,
        power_maps,
        values,
        row_partitions: None,
    };
    table.validate()?;
    Ok(table)
}

/// Canonical row order: trivial character first, remaining rows sorted by
/// (degree, lexicographic value vector).
fn canonical_row_order(
    values: Vec<Vec<CycloNum>>,
    m: u64,
    labels: Option<Vec<Partition>>,
) -> (Vec<Vec<CycloNum>>, Option<Vec<Partition>>) {
    let one = CycloNum::one(m);
    let mut idx: Vec<usize> = (0..values.len()).collect();
    let is_trivial = |r: usize| values[r].iter().all(|v| *v == one);
    idx.sort_by(|&ra, &rb| {
        let (ta, tb) = (is_trivial(ra), is_trivial(rb));
        tb.cmp(&ta)
            .then_with(|| {
                let da = values[ra][0].as_rational();
                let db = values[rb][0].as_rational();
                da.cmp(&db)
            })
            .then_with(|| values[ra].cmp(&values[rb]))
    });
    let labels = labels.map(|ls| idx.iter().map(|&r| ls[r].clone()).collect());
    let mut tagged: Vec<(usize, Vec<CycloNum>)> = values.into_iter().enumerate().collect();
    tagged.sort_by_key(|(r, _)| idx.iter().position(|&i| i == *r).unwrap());
    (tagged.into_iter().map(|(_, v)| v).collect(), labels)
}

/// Character table of S_n by the Murnaghan-Nakayama rule, indexed and ordered
/// exactly as the generic path would order it.
pub fn mn_table(n: usize) -> CharacterTable {
    assert!(n >= 1 && n <= 14, "mn_table supports n <= 14");
    let classes_meta = symfunc::canonical_classes(n);
    let exponent = classes_meta
        .iter()
        .fold(1u64, |acc, c| lcm(acc, c.element_order));
    let mut order = 1u64;
    for t in 1..=n as u64 {
        order *= t;
    }
    let type_index: Vec<&Partition> = classes_meta.iter().map(|c| &c.cycle_type).collect();
    let find_class = |mu: &Partition| -> usize {
        type_index
            .iter()
            .position(|t| *t == mu)
            .expect("every cycle type is a class")
    };
    let mut cache = MnCache::new();
    let rows = symfunc::partitions(n);
    // column-major so the memo table is reused across rows of each class
    let mut values: Vec<Vec<CycloNum>> =
        vec![Vec::with_capacity(classes_meta.len()); rows.len()];
    for c in &classes_meta {
        for (r, lam) in rows.iter().enumerate() {
            let v = cache.value(lam, &c.cycle_type).expect("equal sizes");
            values[r].push(CycloNum::from_integer(exponent, v));
        }
    }
    let mut power_maps = BTreeMap::new();
    let mut mm = exponent;
    let mut pr = 2u64;
    while mm > 1 {
        if mm % pr == 0 {
            while mm % pr == 0 {
                mm /= pr;
            }
            let pm: Vec<usize> = classes_meta
                .iter()
                .map(|c| find_class(&symfunc::power_type(&c.cycle_type, pr)))
                .collect();
            power_maps.insert(pr, pm);
        }
        pr += 1;
    }
    let (values, labels) = canonical_row_order(values, exponent, Some(rows));
    CharacterTable {
        order,
        exponent,
        classes: classes_meta
            .iter()
            .map(|c| ClassMeta {
                size: c.size,
                element_order: c.element_order,
            })
            .collect(),
        power_maps,
        values,
        row_partitions: labels,
    }
}
