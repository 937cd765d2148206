//! Exact cyclotomic arithmetic over the power basis of Q[x]/(Phi_m), and
//! reduction modulo a prime ideal above p into a finite residue field.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfp::{self, FqContext, FqElem};

pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        result = result / n * (n - 1);
    }
    result
}


/// Exact division of integer polynomials (divisor monic).
fn big_poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); a.len() - db];
    for shift in (0..q.len()).rev() {
        let coeff = r[shift + db].clone();
        if !coeff.is_zero() {
            q[shift] = coeff.clone();
            for (i, bc) in b.iter().enumerate() {
                r[shift + i] -= &coeff * bc;
            }
        }
    }
    assert!(r.iter().all(|c| c.is_zero()), "division was not exact");
    q
}

/// Cyclotomic polynomial Phi_m over the integers, ascending coefficients.
pub fn cyclotomic_poly(m: u64) -> Vec<BigInt> {
    let mut acc: HashMap<u64, Vec<BigInt>> = HashMap::new();
    for d in 1..=m {
        if m % d != 0 {
            continue;
        }
        // x^d - 1 divided by all Phi_e for proper divisors e of d
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = BigInt::from(-1);
        num[d as usize] = BigInt::one();
        let mut phi = num;
        for e in 1..d {
            if d % e == 0 {
                phi = big_poly_div_exact(&phi, &acc[&e]);
            }
        }
        acc.insert(d, phi);
    }
    acc.remove(&m).unwrap()
}

/// Per-modulus reduction data: Phi_m and reduction tables, globally cached.
struct PhiData {
    deg: usize,
    /// Phi_m monic over Q, ascending
    phi: Vec<BigRational>,
    /// x^(deg + i) mod Phi for i in 0..deg-1
    xpow: Vec<Vec<BigRational>>,
    /// basis images of the conjugation x -> x^(m-1), built on demand
    conj: OnceLock<Vec<Vec<BigRational>>>,
    m: u64,
}

impl PhiData {
    fn get(m: u64) -> Arc<PhiData> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<PhiData>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap();
        guard
            .entry(m)
            .or_insert_with(|| {
                let phi_int = cyclotomic_poly(m);
                let phi: Vec<BigRational> = phi_int
                    .into_iter()
                    .map(BigRational::from_integer)
                    .collect();
                let deg = phi.len() - 1;
                // x^(deg + i) mod Phi for i = 0 .. deg - 2; x^deg = -(Phi - x^deg)
                let mut xpow = Vec::with_capacity(deg);
                let mut cur: Vec<BigRational> = (0..deg).map(|i| -phi[i].clone()).collect();
                xpow.push(cur.clone());
                for _ in 0..deg.saturating_sub(2) {
                    cur = mul_by_x(&cur, &phi, deg);
                    xpow.push(cur.clone());
                }
                Arc::new(PhiData {
                    deg,
                    phi,
                    xpow,
                    conj: OnceLock::new(),
                    m,
                })
            })
            .clone()
    }

    /// Reduce a polynomial of arbitrary length to the power basis.
    fn reduce(&self, poly: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.deg];
        let mut high: Vec<(usize, &BigRational)> = Vec::new();
        for (i, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i < self.deg {
                out[i] += c;
            } else {
                high.push((i, c));
            }
        }
        if high.is_empty() {
            return out;
        }
        let max_i = high.iter().map(|&(i, _)| i).max().unwrap();
        if max_i < self.deg + self.xpow.len() {
            for (i, c) in high {
                for (j, r) in self.xpow[i - self.deg].iter().enumerate() {
                    if !r.is_zero() {
                        out[j] += c * r;
                    }
                }
            }
            out
        } else {
            // fall back to long division for very high degrees
            let mut r: Vec<BigRational> = poly.to_vec();
            while r.len() > self.deg {
                let top = r.pop().unwrap();
                if !top.is_zero() {
                    let shift = r.len() - self.deg;
                    for i in 0..self.deg {
                        let t = &top * &self.phi[i];
                        r[shift + i] -= t;
                    }
                }
            }
            r.resize(self.deg, BigRational::zero());
            r
        }
    }

    fn conj_table(&self) -> &Vec<Vec<BigRational>> {
        self.conj.get_or_init(|| {
            // y = x^(m-1) mod Phi, then successive powers y^i
            let mut y = vec![BigRational::zero(); self.deg];
            if self.deg == 0 {
                return vec![];
            }
            y[0] = BigRational::one();
            for _ in 0..(self.m - 1) {
                y = mul_by_x(&y, &self.phi, self.deg);
            }
            let mut table = Vec::with_capacity(self.deg);
            let mut one = vec![BigRational::zero(); self.deg];
            one[0] = BigRational::one();
            table.push(one);
            let mut cur = y.clone();
            for _ in 1..self.deg {
                table.push(cur.clone());
                // cur *= y
                let mut conv = vec![BigRational::zero(); 2 * self.deg - 1];
                for (i, a) in cur.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in y.iter().enumerate() {
                        if !b.is_zero() {
                            conv[i + j] += a * b;
                        }
                    }
                }
                cur = self.reduce(&conv);
            }
            table
        })
    }
}

fn mul_by_x(cur: &[BigRational], phi: &[BigRational], deg: usize) -> Vec<BigRational> {
    let mut next = vec![BigRational::zero(); deg];
    let top = cur[deg - 1].clone();
    for i in 1..deg {
        next[i] = cur[i - 1].clone();
    }
    if !top.is_zero() {
        for i in 0..deg {
            next[i] -= &top * &phi[i];
        }
    }
    next
}

/// An exact element of the m-th cyclotomic field in the power basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CycloNum {
    m: u64,
    coeffs: Vec<BigRational>,
}

impl CycloNum {
    pub fn zero(m: u64) -> Self {
        CycloNum {
            m,
            coeffs: vec![BigRational::zero(); euler_phi(m) as usize],
        }
    }

    pub fn one(m: u64) -> Self {
        Self::from_rational(m, BigRational::one())
    }

    pub fn from_rational(m: u64, r: BigRational) -> Self {
        let mut c = Self::zero(m);
        if c.coeffs.is_empty() {
            return c;
        }
        // for m = 1 the basis vector is 1 (x = 1 mod x-1), same as constants
        c.coeffs[0] = r;
        c
    }

    pub fn from_integer(m: u64, n: i64) -> Self {
        Self::from_rational(m, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(m: u64, n: BigInt) -> Self {
        Self::from_rational(m, BigRational::from_integer(n))
    }

    /// Sum of c * zeta_m^e over the given (exponent, coefficient) terms.
    pub fn from_power_sum(m: u64, terms: &[(u64, BigInt)]) -> Self {
        let data = PhiData::get(m);
        let mut poly = vec![BigRational::zero(); m as usize];
        for (e, c) in terms {
            poly[(*e % m) as usize] += BigRational::from_integer(c.clone());
        }
        CycloNum {
            m,
            coeffs: data.reduce(&poly),
        }
    }

    /// zeta_m^j as an element of the field.
    pub fn root_of_unity(m: u64, j: u64) -> Self {
        let data = PhiData::get(m);
        let j = (j % m) as usize;
        let mut poly = vec![BigRational::zero(); j + 1];
        poly[j] = BigRational::one();
        CycloNum {
            m,
            coeffs: data.reduce(&poly),
        }
    }

    pub fn from_coeffs(m: u64, coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.len() != euler_phi(m) as usize {
            return Err(Error::SchemaError(format!(
                "cyclotomic coefficient vector has length {}, expected phi({}) = {}",
                coeffs.len(),
                m,
                euler_phi(m)
            )));
        }
        Ok(CycloNum { m, coeffs })
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_algebraic_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// The value as a plain rational, when it lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.denom().is_one() {
            Some(r.numer().clone())
        } else {
            None
        }
    }

    fn check_same(&self, other: &CycloNum) {
        assert_eq!(self.m, other.m, "cyclotomic modulus mismatch; lift first");
    }

    pub fn add(&self, other: &CycloNum) -> CycloNum {
        self.check_same(other);
        CycloNum {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &CycloNum) -> CycloNum {
        self.check_same(other);
        CycloNum {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> CycloNum {
        CycloNum {
            m: self.m,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &CycloNum) -> CycloNum {
        self.check_same(other);
        // scalar fast paths keep integer-valued tables cheap
        if let Some(r) = other.as_rational() {
            return self.scale(&r);
        }
        if let Some(r) = self.as_rational() {
            return other.scale(&r);
        }
        let data = PhiData::get(self.m);
        let deg = data.deg;
        let mut conv = vec![BigRational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        CycloNum {
            m: self.m,
            coeffs: data.reduce(&conv),
        }
    }

    pub fn scale(&self, r: &BigRational) -> CycloNum {
        CycloNum {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Exact division; errs on a zero divisor.
    pub fn div(&self, other: &CycloNum) -> Result<CycloNum> {
        self.check_same(other);
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = other.as_rational() {
            return Ok(self.scale(&(BigRational::one() / r)));
        }
        Ok(self.mul(&other.inverse()?))
    }

    fn inverse(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let data = PhiData::get(self.m);
        // extended Euclid over Q[x]: u*self + v*Phi = 1
        let (g, u) = rat_poly_half_egcd(&self.coeffs, &data.phi);
        // g is a nonzero constant
        let c = g[0].clone();
        let inv: Vec<BigRational> = u.iter().map(|x| x / &c).collect();
        Ok(CycloNum {
            m: self.m,
            coeffs: data.reduce(&inv),
        })
    }

    /// Complex conjugation zeta -> zeta^(-1).
    pub fn conj(&self) -> CycloNum {
        if self.as_rational().is_some() {
            return self.clone();
        }
        let data = PhiData::get(self.m);
        let table = data.conj_table();
        let mut out = vec![BigRational::zero(); data.deg];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in table[i].iter().enumerate() {
                if !b.is_zero() {
                    out[j] += c * b;
                }
            }
        }
        CycloNum {
            m: self.m,
            coeffs: out,
        }
    }

    /// Lift to a larger modulus m2 (with m | m2): zeta_m -> zeta_m2^(m2/m).
    pub fn lift(&self, m2: u64) -> CycloNum {
        assert_eq!(m2 % self.m, 0, "target modulus must be a multiple");
        if m2 == self.m {
            return self.clone();
        }
        let t = m2 / self.m;
        let data = PhiData::get(m2);
        let deg2 = data.deg;
        let phi = &data.phi;
        let mut out = vec![BigRational::zero(); deg2];
        // walk x^(t*i) incrementally
        let mut cur = vec![BigRational::zero(); deg2];
        cur[0] = BigRational::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                for _ in 0..t {
                    cur = mul_by_x(&cur, phi, deg2);
                }
            }
            if !c.is_zero() {
                for j in 0..deg2 {
                    if !cur[j].is_zero() {
                        out[j] += c * &cur[j];
                    }
                }
            }
        }
        CycloNum { m: m2, coeffs: out }
    }
}

/// Half-extended gcd over Q[x]: returns (g, u) with u*a = g mod b.
fn rat_poly_half_egcd(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let trim = |mut v: Vec<BigRational>| -> Vec<BigRational> {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
        v
    };
    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    let mut u0 = vec![BigRational::one()];
    let mut u1: Vec<BigRational> = vec![];
    while !r1.is_empty() {
        // divide r0 by r1
        let mut rem = r0.clone();
        let mut q = vec![BigRational::zero(); rem.len().saturating_sub(r1.len()) + 1];
        let dlead = r1.last().unwrap().clone();
        while rem.len() >= r1.len() && !rem.is_empty() {
            let coeff = rem.last().unwrap() / &dlead;
            let shift = rem.len() - r1.len();
            q[shift] = coeff.clone();
            for (i, c) in r1.iter().enumerate() {
                let t = &coeff * c;
                rem[shift + i] -= t;
            }
            rem = trim(rem);
        }
        // u_next = u0 - q*u1
        let qe = trim(q);
        let mut u_next = u0.clone();
        if !qe.is_empty() && !u1.is_empty() {
            let prod_len = qe.len() + u1.len() - 1;
            if u_next.len() < prod_len {
                u_next.resize(prod_len, BigRational::zero());
            }
            for (i, x) in qe.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in u1.iter().enumerate() {
                    let t = x * y;
                    u_next[i + j] -= t;
                }
            }
        }
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = trim(u_next);
    }
    (r0, u0)
}

fn modinv_u64(a: u64, m: u64) -> u64 {
    // extended Euclid; gcd(a, m) = 1
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

/// Reduction context: a fixed prime ideal above p in Q(zeta_m).
#[derive(Clone, Debug)]
pub struct PrimeIdealReduction {
    pub p: u64,
    pub m: u64,
    pub ramified_exponent: u32,
    pub m_prime: u64,
    pub fq: FqContext,
    /// image of zeta_m, and its powers up to phi(m) - 1
    omega_pows: Vec<FqElem>,
}

/// Decompose m = p^a * m', factor Phi_{m'} mod p, and fix the
/// lexicographically least irreducible factor.
pub fn build_reduction(p: u64, m: u64) -> PrimeIdealReduction {
    let mut a = 0u32;
    let mut m_prime = m;
    while m_prime % p == 0 {
        m_prime /= p;
        a += 1;
    }
    let f_deg = gfp::mult_order(p, m_prime);
    let phi_int = cyclotomic_poly(m_prime);
    let phi_mod: Vec<u64> = phi_int
        .iter()
        .map(|c| c.mod_floor_u64(p))
        .collect();
    let phi_mod = gfp::trim(phi_mod);
    let factors = gfp::equal_degree_factor(p, &phi_mod, f_deg);
    let f = factors[0].clone();
    let fq = FqContext::new(p, f);
    let deg = euler_phi(m) as usize;
    let v = if m_prime == 1 {
        0
    } else {
        modinv_u64(gfp::pow_mod(m_prime, p, a as u64), m_prime)
    };
    let omega = if m_prime == 1 {
        fq.one()
    } else {
        fq.pow(&fq.x(), v)
    };
    let mut omega_pows = Vec::with_capacity(deg);
    let mut acc = fq.one();
    for _ in 0..deg.max(1) {
        omega_pows.push(acc.clone());
        acc = fq.mul(&acc, &omega);
    }
    PrimeIdealReduction {
        p,
        m,
        ramified_exponent: a,
        m_prime,
        fq,
        omega_pows,
    }
}

trait ModFloor {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num::Integer;
        let r = self.mod_floor(&BigInt::from(p));
        let (_, digits) = r.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }
}

impl PrimeIdealReduction {
    pub fn residue_degree(&self) -> usize {
        self.fq.degree()
    }

    /// Ring homomorphism on algebraic integers of Q(zeta_m).
    pub fn reduce(&self, a: &CycloNum) -> Result<FqElem> {
        assert_eq!(a.modulus(), self.m, "modulus mismatch with reduction context");
        if !a.is_algebraic_integer() {
            return Err(Error::NotIntegral);
        }
        let mut acc = self.fq.zero();
        for (i, c) in a.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = c.numer().mod_floor_u64(self.p);
            if r == 0 {
                continue;
            }
            let term = self.fq.scale(&self.omega_pows[i], r);
            acc = self.fq.add(&acc, &term);
        }
        Ok(acc)
    }

    pub fn reduce_bigint(&self, n: &BigInt) -> FqElem {
        self.fq.from_u64(n.mod_floor_u64(self.p))
    }
}

/// JSON form: { "m": m, "coeffs": ["num/den", ...] }.
#[derive(Serialize, Deserialize)]
struct CycloJson {
    m: u64,
    coeffs: Vec<String>,
}

impl Serialize for CycloNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                if c.denom().is_one() {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect();
        CycloJson { m: self.m, coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CycloJson::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(raw.coeffs.len());
        for s in &raw.coeffs {
            let r = parse_rational(s)
                .ok_or_else(|| D::Error::custom(format!("bad rational: {s}")))?;
            coeffs.push(r);
        }
        CycloNum::from_coeffs(raw.m, coeffs).map_err(D::Error::custom)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.trim().parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(m: u64, j: u64) -> CycloNum {
        CycloNum::root_of_unity(m, j)
    }

    #[test]
    fn cyclotomic_polys() {
        let as_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(as_i64(cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_poly(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn root_of_unity_sums() {
        // zeta_3 + zeta_3^2 = -1
        let s = zeta(3, 1).add(&zeta(3, 2));
        assert_eq!(s, CycloNum::from_integer(3, -1));
        // zeta_4^2 = -1
        let s = zeta(4, 1).mul(&zeta(4, 1));
        assert_eq!(s, CycloNum::from_integer(4, -1));
        // (zeta_5 + zeta_5^4)(zeta_5^2 + zeta_5^3) = -1 (golden ratio product)
        let a = zeta(5, 1).add(&zeta(5, 4));
        let b = zeta(5, 2).add(&zeta(5, 3));
        assert_eq!(a.mul(&b), CycloNum::from_integer(5, -1));
    }

    #[test]
    fn division_and_inverse() {
        let a = zeta(5, 1).add(&zeta(5, 4)); // golden-ratio-related unit
        let q = CycloNum::one(5).div(&a).unwrap();
        assert_eq!(q.mul(&a), CycloNum::one(5));
        assert!(matches!(
            a.div(&CycloNum::zero(5)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn algebraic_integer_check() {
        let half = CycloNum::from_rational(8, BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert!(!half.is_algebraic_integer());
        assert!(zeta(8, 3).is_algebraic_integer());
    }

    #[test]
    fn conj_is_inverse_on_roots() {
        for m in [3u64, 4, 5, 8, 12, 30] {
            for j in 1..m {
                let z = zeta(m, j);
                assert_eq!(z.conj(), zeta(m, m - j), "m={m} j={j}");
            }
        }
    }

    #[test]
    fn lift_consistency() {
        // zeta_3 lifted to Q(zeta_12) is zeta_12^4
        assert_eq!(zeta(3, 1).lift(12), zeta(12, 4));
        let s = zeta(3, 1).lift(12).add(&zeta(3, 2).lift(12));
        assert_eq!(s, CycloNum::from_integer(12, -1));
    }

    #[test]
    fn reduction_p2_m3() {
        let r = build_reduction(2, 3);
        assert_eq!(r.fq.modulus, vec![1, 1, 1]); // x^2 + x + 1
        assert_eq!(r.residue_degree(), 2);
        let z = r.reduce(&zeta(3, 1)).unwrap();
        assert_eq!(r.fq.elem_order(&z), 3);
        let z2 = r.reduce(&zeta(3, 2)).unwrap();
        assert_eq!(r.fq.add(&z, &z2), r.fq.one()); // -1 = 1 mod 2
    }

    #[test]
    fn reduction_ramified() {
        let r = build_reduction(3, 3);
        assert_eq!(r.m_prime, 1);
        let z = r.reduce(&zeta(3, 1)).unwrap();
        assert_eq!(z, r.fq.one());
    }

    #[test]
    fn reduction_p5_m4() {
        let r = build_reduction(5, 4);
        assert_eq!(r.fq.modulus, vec![2, 1]); // x + 2, the lex-least factor
        assert_eq!(r.residue_degree(), 1);
    }

    #[test]
    fn reduce_not_integral() {
        let r = build_reduction(2, 3);
        let half = CycloNum::from_rational(3, BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert!(matches!(r.reduce(&half), Err(Error::NotIntegral)));
    }

    #[test]
    fn reduce_injective_on_small_integers() {
        for (p, m) in [(5u64, 12u64), (7, 30), (2, 15)] {
            let r = build_reduction(p, m);
            let images: Vec<_> = (0..p)
                .map(|i| r.reduce(&CycloNum::from_integer(m, i as i64)).unwrap())
                .collect();
            for i in 0..p as usize {
                for j in 0..i {
                    assert_ne!(images[i], images[j]);
                }
            }
        }
    }

    #[test]
    fn homomorphism_spot_checks() {
        let r = build_reduction(2, 15);
        let a = zeta(15, 7).add(&zeta(15, 3)).add(&CycloNum::from_integer(15, 4));
        let b = zeta(15, 11).sub(&zeta(15, 2));
        let lhs = r.reduce(&a.mul(&b)).unwrap();
        let rhs = r.fq.mul(&r.reduce(&a).unwrap(), &r.reduce(&b).unwrap());
        assert_eq!(lhs, rhs);
        let lhs = r.reduce(&a.add(&b)).unwrap();
        let rhs = r.fq.add(&r.reduce(&a).unwrap(), &r.reduce(&b).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn serde_roundtrip() {
        let a = zeta(12, 5).scale(&BigRational::new(BigInt::from(3), BigInt::from(2)));
        let text = serde_json::to_string(&a).unwrap();
        let back: CycloNum = serde_json::from_str(&text).unwrap();
        assert_eq!(a, back);
    }
}
