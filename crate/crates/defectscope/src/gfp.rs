//! Polynomial arithmetic over GF(p), equal-degree factorization, and the
//! residue fields GF(p^f) used for reductions modulo a prime ideal.

/// Dense polynomial over GF(p), coefficients ascending, no leading zeros.
pub type Poly = Vec<u64>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn deg(a: &Poly) -> isize {
    a.len() as isize - 1
}

pub fn add(p: u64, a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0);
        out[i] = x % p;
    }
    trim(out)
}

pub fn sub(p: u64, a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0) % p;
        out[i] = x % p;
    }
    trim(out)
}

pub fn mul(p: u64, a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + (x as u128 * y as u128 % p as u128) as u64) % p;
        }
    }
    trim(out)
}

pub fn inv_mod(p: u64, a: u64) -> u64 {
    pow_mod(p, a % p, p - 2)
}

pub fn pow_mod(p: u64, mut base: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Remainder of a modulo b.
pub fn rem(p: u64, a: &Poly, b: &Poly) -> Poly {
    assert!(!b.is_empty());
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead_inv = inv_mod(p, b[db]);
    while r.len() > db {
        let coeff = (r[r.len() - 1] as u128 * lead_inv as u128 % p as u128) as u64;
        if coeff != 0 {
            let shift = r.len() - 1 - db;
            for (i, &bc) in b.iter().enumerate() {
                let t = (coeff as u128 * bc as u128 % p as u128) as u64;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        r.pop();
        r = trim(r);
        if r.len() <= db {
            break;
        }
    }
    trim(r)
}

pub fn monic(p: u64, a: &Poly) -> Poly {
    if a.is_empty() {
        return vec![];
    }
    let inv = inv_mod(p, *a.last().unwrap());
    a.iter()
        .map(|&c| (c as u128 * inv as u128 % p as u128) as u64)
        .collect()
}

pub fn gcd(p: u64, a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(p, &a, &b);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        monic(p, &a)
    }
}

pub fn pow_poly_mod(p: u64, base: &Poly, mut e: u128, modulus: &Poly) -> Poly {
    let mut acc = vec![1u64];
    let mut b = rem(p, base, modulus);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(p, &mul(p, &acc, &b), modulus);
        }
        b = rem(p, &mul(p, &b, &b), modulus);
        e >>= 1;
    }
    acc
}

/// Deterministic splitmix64 stream for Cantor-Zassenhaus splitting choices.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

/// Factor a squarefree product of distinct monic irreducibles, all of degree f,
/// into its irreducible factors. Factors are returned sorted by coefficient
/// vector so the output is reproducible.
pub fn equal_degree_factor(p: u64, poly: &Poly, f: usize) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut rng = SplitMix(0xdefec7);
    let mut stack = vec![monic(p, poly)];
    while let Some(h) = stack.pop() {
        let d = h.len() - 1;
        if d == f {
            out.push(h);
            continue;
        }
        // random splitting polynomial of degree < deg h
        loop {
            let r: Poly = trim((0..d).map(|_| rng.next() % p).collect());
            if r.is_empty() {
                continue;
            }
            let g = if p == 2 {
                // trace map r + r^2 + ... + r^(2^(f-1)) mod h
                let mut t = rem(2, &r, &h);
                let mut acc = t.clone();
                for _ in 1..f {
                    acc = rem(2, &mul(2, &acc, &acc), &h);
                    t = add(2, &t, &acc);
                }
                gcd(2, &t, &h)
            } else {
                let e = (pow128(p, f) - 1) / 2;
                let w = pow_poly_mod(p, &r, e, &h);
                let w1 = sub(p, &w, &vec![1]);
                gcd(p, &w1, &h)
            };
            if !g.is_empty() && g.len() > 1 && g.len() < h.len() {
                let q = div_exact(p, &h, &g);
                stack.push(g);
                stack.push(q);
                break;
            }
        }
    }
    out.sort();
    out
}

fn pow128(p: u64, f: usize) -> u128 {
    let mut acc = 1u128;
    for _ in 0..f {
        acc *= p as u128;
    }
    acc
}

fn div_exact(p: u64, a: &Poly, b: &Poly) -> Poly {
    // long division; remainder must vanish
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead_inv = inv_mod(p, b[db]);
    let mut q = vec![0u64; a.len() - db];
    while r.len() > db {
        let coeff = (r[r.len() - 1] as u128 * lead_inv as u128 % p as u128) as u64;
        let shift = r.len() - 1 - db;
        q[shift] = coeff;
        for (i, &bc) in b.iter().enumerate() {
            let t = (coeff as u128 * bc as u128 % p as u128) as u64;
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        r.pop();
        r = trim(r);
    }
    assert!(r.is_empty(), "division was not exact");
    trim(q)
}

/// Multiplicative order of p modulo m (gcd(p, m) = 1).
pub fn mult_order(p: u64, m: u64) -> usize {
    if m == 1 {
        return 1;
    }
    let mut acc = p % m;
    let mut k = 1;
    while acc != 1 {
        acc = (acc as u128 * p as u128 % m as u128) as u64;
        k += 1;
    }
    k
}

/// The residue field GF(p^f) presented as GF(p)[x]/(f(x)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqContext {
    pub p: u64,
    pub modulus: Poly, // monic irreducible
}

/// Element of GF(p^f): residue polynomial, trimmed.
pub type FqElem = Poly;

impl FqContext {
    pub fn new(p: u64, modulus: Poly) -> Self {
        FqContext { p, modulus }
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> FqElem {
        vec![]
    }

    pub fn one(&self) -> FqElem {
        vec![1]
    }

    pub fn from_u64(&self, n: u64) -> FqElem {
        trim(vec![n % self.p])
    }

    pub fn from_i64(&self, n: i64) -> FqElem {
        let r = n.rem_euclid(self.p as i64) as u64;
        trim(vec![r])
    }

    pub fn x(&self) -> FqElem {
        rem(self.p, &vec![0, 1], &self.modulus)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        add(self.p, a, b)
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        sub(self.p, a, b)
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        rem(self.p, &mul(self.p, a, b), &self.modulus)
    }

    pub fn pow(&self, base: &FqElem, e: u64) -> FqElem {
        pow_poly_mod(self.p, base, e as u128, &self.modulus)
    }

    pub fn scale(&self, a: &FqElem, c: u64) -> FqElem {
        trim(
            a.iter()
                .map(|&x| (x as u128 * (c % self.p) as u128 % self.p as u128) as u64)
                .collect(),
        )
    }

    pub fn is_zero(&self, a: &FqElem) -> bool {
        a.is_empty()
    }

    /// Multiplicative order of a nonzero element.
    pub fn elem_order(&self, a: &FqElem) -> u64 {
        let mut acc = a.clone();
        let mut k = 1u64;
        while acc != vec![1] {
            acc = self.mul(&acc, a);
            k += 1;
        }
        k
    }
}
