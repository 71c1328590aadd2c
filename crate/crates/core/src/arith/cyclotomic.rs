use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// The `n`-th cyclotomic polynomial, coefficients listed from the constant
/// term upwards.
///
/// Computed as `x^n - 1` divided exactly by `Phi_d` for every proper
/// divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let mut memo: HashMap<u32, Vec<BigInt>> = HashMap::new();
    cyclotomic_memo(n, &mut memo)
}

fn cyclotomic_memo(n: u32, memo: &mut HashMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi_d = cyclotomic_memo(d, memo);
        num = div_exact_monic(&num, &phi_d);
    }
    memo.insert(n, num.clone());
    num
}

/// Exact quotient of integer polynomials where the divisor is monic.
fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let coef = rem[k + dn].clone();
        if coef.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &coef * d;
        }
        q[k] = coef;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact cyclotomic division");
    q
}

/// Reduction data for `Q[x]/Phi_N`.
#[derive(Debug)]
struct CycField {
    phi: usize,
    /// `x^(phi + k) mod Phi_N` for `k` in `0..phi - 1`.
    high_powers: Vec<Vec<Rat>>,
}

impl CycField {
    fn build(n: u32) -> CycField {
        let modulus = cyclotomic_polynomial(n);
        let phi = modulus.len() - 1;
        // x^phi = -(lower coefficients of Phi_N)
        let mut cur: Vec<Rat> = modulus[..phi].iter().map(|c| -Rat::from_bigint(c.clone())).collect();
        let mut high_powers = Vec::with_capacity(phi.saturating_sub(1));
        for _ in 0..phi.saturating_sub(1) {
            high_powers.push(cur.clone());
            cur = times_x(&cur, &high_powers[0]);
        }
        if high_powers.is_empty() {
            high_powers.push(cur);
        }
        CycField { phi, high_powers }
    }
}

/// Multiply a reduced vector by `x`, given `x^phi` reduced.
fn times_x(v: &[Rat], x_phi: &[Rat]) -> Vec<Rat> {
    let phi = v.len();
    let top = v[phi - 1].clone();
    let mut out = Vec::with_capacity(phi);
    out.push(Rat::zero());
    out.extend(v[..phi - 1].iter().cloned());
    if !top.is_zero() {
        for (o, c) in out.iter_mut().zip(x_phi) {
            *o = &*o + &(&top * c);
        }
    }
    out
}

fn field(n: u32) -> &'static CycField {
    static FIELDS: OnceLock<RwLock<HashMap<u32, &'static CycField>>> = OnceLock::new();
    let fields = FIELDS.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = fields.read().unwrap().get(&n) {
        return f;
    }
    let mut w = fields.write().unwrap();
    w.entry(n).or_insert_with(|| Box::leak(Box::new(CycField::build(n))))
}

/// An element of the cyclotomic field `Q(zeta_N)`, stored as the residue of
/// a rational polynomial modulo `Phi_N` (coefficients of `1, z, .., z^(phi-1)`
/// where `z = zeta_N`).
///
/// Arithmetic between elements of different conductors panics; callers
/// fix one conductor per session.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    n: u32,
    coeffs: Vec<Rat>,
}

impl CycNum {
    pub fn zero(n: u32) -> Self {
        let phi = field(n).phi;
        CycNum { n, coeffs: vec![Rat::zero(); phi] }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rat(n, Rat::one())
    }

    pub fn from_rat(n: u32, r: Rat) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(n: u32, k: i64) -> Self {
        Self::from_rat(n, Rat::from_int(k))
    }

    /// Build from an arbitrary coefficient list in powers of `zeta_N`,
    /// reducing modulo `Phi_N`.
    pub fn from_coeffs(n: u32, coeffs: &[Rat]) -> Self {
        let f = field(n);
        let mut out = vec![Rat::zero(); f.phi];
        let mut power = Self::one(n);
        let zeta = Self::zeta(n);
        for c in coeffs {
            if !c.is_zero() {
                for (o, p) in out.iter_mut().zip(&power.coeffs) {
                    *o = &*o + &(c * p);
                }
            }
            power = &power * &zeta;
        }
        CycNum { n, coeffs: out }
    }

    /// `zeta_N` itself.
    pub fn zeta(n: u32) -> Self {
        let f = field(n);
        if f.phi == 1 {
            // Q(zeta_1) = Q(zeta_2) = Q; zeta_1 = 1, zeta_2 = -1
            return Self::from_int(n, if n == 2 { -1 } else { 1 });
        }
        let mut z = Self::zero(n);
        z.coeffs[1] = Rat::one();
        z
    }

    /// `zeta_N^k` for any integer `k`.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as u64;
        let zeta = Self::zeta(n);
        let mut acc = Self::one(n);
        for _ in 0..e {
            acc = &acc * &zeta;
        }
        acc
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rat::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Rat::is_zero)
    }

    /// The rational value, if this element lies in `Q`.
    pub fn to_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn scale(&self, r: &Rat) -> Self {
        CycNum { n: self.n, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Phi_N`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if let Some(r) = self.to_rat() {
            return Ok(Self::from_rat(self.n, r.inv().expect("non-zero")));
        }
        let modulus: Vec<Rat> =
            cyclotomic_polynomial(self.n).into_iter().map(Rat::from_bigint).collect();
        let a = trim(self.coeffs.clone());
        let (g, s) = ext_gcd(a, modulus);
        // g is a non-zero constant since Phi_N is irreducible
        debug_assert_eq!(g.len(), 1);
        let ginv = g[0].inv().expect("gcd is a unit");
        let s: Vec<Rat> = s.iter().map(|c| c * &ginv).collect();
        Ok(Self::from_coeffs(self.n, &s))
    }

    /// Apply the Galois automorphism `zeta_N -> zeta_N^k`; `k` must be
    /// coprime to `N`.
    pub fn galois(&self, k: i64) -> Self {
        assert_eq!((k.rem_euclid(self.n as i64) as u32).gcd(&self.n), 1, "k must be a unit mod N");
        let root = Self::zeta_pow(self.n, k);
        let mut acc = Self::zero(self.n);
        let mut power = Self::one(self.n);
        for c in &self.coeffs {
            if !c.is_zero() {
                acc = &acc + &power.scale(c);
            }
            power = &power * &root;
        }
        acc
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.n, other.n, "conductor mismatch in cyclotomic arithmetic");
    }
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.len() > 1 && v.last().is_some_and(Rat::is_zero) {
        v.pop();
    }
    v
}

fn poly_is_zero(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let len = a.len().max(b.len());
    let zero = Rat::zero();
    trim((0..len)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect())
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

fn poly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("division by zero polynomial");
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (vec![Rat::zero()], rem);
    }
    let mut q = vec![Rat::zero(); rem.len() - db];
    while rem.len() >= b.len() && !poly_is_zero(&rem) {
        let shift = rem.len() - 1 - db;
        let coef = &rem[rem.len() - 1] * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] = &rem[shift + j] - &(&coef * bj);
        }
        q[shift] = coef;
        rem.pop();
        rem = trim(rem);
    }
    (trim(q), rem)
}

/// Returns `(g, s)` with `s * a = g (mod m)`.
fn ext_gcd(a: Vec<Rat>, m: Vec<Rat>) -> (Vec<Rat>, Vec<Rat>) {
    let (mut r0, mut r1) = (a, m);
    let (mut s0, mut s1) = (vec![Rat::one()], vec![Rat::zero()]);
    while !poly_is_zero(&r1) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &'a CycNum) -> CycNum {
        self.check(rhs);
        CycNum { n: self.n, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &'a CycNum) -> CycNum {
        self.check(rhs);
        CycNum { n: self.n, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &'a CycNum) -> CycNum {
        self.check(rhs);
        if rhs.is_rational() {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.is_rational() {
            return rhs.scale(&self.coeffs[0]);
        }
        let f = field(self.n);
        let phi = f.phi;
        let mut full = vec![Rat::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[i + j] = &full[i + j] + &(a * b);
                }
            }
        }
        let mut out: Vec<Rat> = full[..phi].to_vec();
        for (k, c) in full[phi..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(&f.high_powers[k]) {
                *o = &*o + &(c * r);
            }
        }
        CycNum { n: self.n, coeffs: out }
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, rhs: CycNum) -> CycNum {
        &self + &rhs
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: CycNum) -> CycNum {
        &self - &rhs
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        &self * &rhs
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { n: self.n, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

/// `zeta_n^k` inside `Q(zeta_conductor)`; `n` must divide the conductor.
pub fn cyc_embed(n: u32, k: i64, conductor: u32) -> Result<CycNum> {
    if n == 0 || !conductor.is_multiple_of(n) {
        return Err(Error::NotDivisor { order: n, conductor });
    }
    Ok(CycNum::zeta_pow(conductor, k * (conductor / n) as i64))
}

impl fmt::Display for CycNum {
    /// Rationals print plainly; other elements print as a polynomial in `z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rat() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = abs.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{abs}*z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{abs}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [Q(z{})]", self.n)
    }
}
