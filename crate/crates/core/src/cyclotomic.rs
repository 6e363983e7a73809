//! Exact arithmetic in the cyclotomic integers `Z[ζ_M]`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(M)-1}` after
//! reduction modulo the `M`-th cyclotomic polynomial, so two equal algebraic
//! values at the same conductor always have identical coefficient vectors.
//! Intermediate sums are accumulated unreduced in `Z[x]/(x^M - 1)` (see
//! [`RootSum`]) and only canonicalized when a value is needed.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{euler_phi, gcd, lcm, prime_factors};
use crate::error::{Error, Result};

/// The ring `Z[ζ_M]` together with its reduction polynomial.
#[derive(Debug, PartialEq, Eq)]
pub struct CycRing {
    conductor: u64,
    degree: usize,
    /// Nonzero terms `(i, c_i)` of `Φ_M` below the leading monomial.
    tail: Vec<(usize, i64)>,
}

impl CycRing {
    pub fn new(conductor: u64) -> Arc<Self> {
        assert!(conductor >= 1, "conductor must be positive");
        let phi = cyclotomic_poly(conductor);
        let degree = phi.len() - 1;
        debug_assert_eq!(degree as u64, euler_phi(conductor));
        let tail = phi[..degree]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect();
        Arc::new(CycRing {
            conductor,
            degree,
            tail,
        })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// `φ(M)`, the length of every coefficient vector.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn zero(self: &Arc<Self>) -> CycInt {
        CycInt {
            ring: Arc::clone(self),
            coeffs: vec![BigInt::zero(); self.degree],
        }
    }

    pub fn from_int(self: &Arc<Self>, n: impl Into<BigInt>) -> CycInt {
        let mut z = self.zero();
        z.coeffs[0] = n.into();
        z
    }

    pub fn one(self: &Arc<Self>) -> CycInt {
        self.from_int(1)
    }

    /// `ζ_M^k`, with `k` taken modulo `M`.
    pub fn root(self: &Arc<Self>, k: i64) -> CycInt {
        let e = k.rem_euclid(self.conductor as i64) as usize;
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::one();
        self.reduce_dense(v)
    }

    /// Canonicalizes a vector of coefficients on `1, x, x^2, …` (any length).
    fn reduce_dense(self: &Arc<Self>, mut v: Vec<BigInt>) -> CycInt {
        let d = self.degree;
        if v.len() < d {
            v.resize(d, BigInt::zero());
        }
        for k in (d..v.len()).rev() {
            if v[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[k]);
            let base = k - d;
            for &(i, t) in &self.tail {
                v[base + i] -= &c * t;
            }
        }
        v.truncate(d);
        CycInt {
            ring: Arc::clone(self),
            coeffs: v,
        }
    }
}

/// An element of `Z[ζ_M]` in canonical power-basis coordinates.
#[derive(Clone)]
pub struct CycInt {
    ring: Arc<CycRing>,
    coeffs: Vec<BigInt>,
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        self.ring.conductor == other.ring.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for CycInt {}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt[M={}]({})", self.ring.conductor, self)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.ring.conductor;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "E({m})")?,
                (1, false) => write!(f, "{mag}*E({m})")?,
                (_, true) => write!(f, "E({m})^{k}")?,
                (_, false) => write!(f, "{mag}*E({m})^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl CycInt {
    pub fn ring(&self) -> &Arc<CycRing> {
        &self.ring
    }

    pub fn conductor(&self) -> u64 {
        self.ring.conductor
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_same(&self, other: &CycInt) -> Result<()> {
        if self.ring.conductor != other.ring.conductor {
            return Err(Error::ConductorMismatch {
                left: self.ring.conductor,
                right: other.ring.conductor,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &CycInt) -> Result<CycInt> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycInt {
            ring: Arc::clone(&self.ring),
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &CycInt) -> Result<CycInt> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &CycInt) -> Result<CycInt> {
        self.check_same(other)?;
        let d = self.ring.degree;
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(self.ring.reduce_dense(prod))
    }

    pub fn neg(&self) -> CycInt {
        CycInt {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> CycInt {
        let k = k.into();
        CycInt {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().map(|c| c * &k).collect(),
        }
    }

    /// Re-expresses the value at a conductor divisible by the current one.
    pub fn embed(&self, conductor: u64) -> Result<CycInt> {
        let m = self.ring.conductor;
        if conductor == 0 || !conductor.is_multiple_of(m) {
            return Err(Error::ConductorNotDividing {
                from: m,
                to: conductor,
            });
        }
        if conductor == m {
            return Ok(self.clone());
        }
        let step = (conductor / m) as usize;
        let ring = CycRing::new(conductor);
        let mut v = vec![BigInt::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[k * step] = c.clone();
        }
        Ok(ring.reduce_dense(v))
    }

    /// Applies the Galois automorphism `ζ_M ↦ ζ_M^j`.
    pub fn galois(&self, j: i64) -> Result<CycInt> {
        let m = self.ring.conductor;
        let jr = j.rem_euclid(m as i64) as u64;
        if gcd(jr, m) != 1 {
            return Err(Error::NotCoprime { j, conductor: m });
        }
        let mut v = vec![BigInt::zero(); m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = ((k as u128 * jr as u128) % m as u128) as usize;
                v[e] += c;
            }
        }
        Ok(self.ring.reduce_dense(v))
    }

    /// Complex conjugation.
    pub fn conj(&self) -> CycInt {
        self.galois(-1)
            .expect("-1 is a unit modulo every conductor")
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|n| n.to_i64())
    }

    /// Value equality across conductors, by embedding both at their lcm.
    pub fn value_eq(&self, other: &CycInt) -> bool {
        let l = lcm(self.conductor(), other.conductor());
        match (self.embed(l), other.embed(l)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

/// An unreduced sum `Σ c_k x^k` in `Z[x]/(x^M - 1)`.
///
/// Canonicalization via [`RootSum::to_cycint`] first drops to the smallest
/// conductor carrying all exponents, which keeps sums of low-order roots
/// cheap even when `M` is large.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RootSum {
    modulus: u64,
    terms: BTreeMap<u64, BigInt>,
}

impl RootSum {
    pub fn new(modulus: u64) -> Self {
        assert!(modulus >= 1);
        RootSum {
            modulus,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a sum from a dense histogram indexed by exponent.
    pub fn from_counts(modulus: u64, counts: &[i64]) -> Self {
        let mut s = RootSum::new(modulus);
        for (k, &c) in counts.iter().enumerate() {
            if c != 0 {
                s.add(k as u64, c);
            }
        }
        s
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn add(&mut self, exponent: u64, coeff: impl Into<BigInt>) {
        let e = exponent % self.modulus;
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += coeff.into();
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add_sum(&mut self, other: &RootSum, sign: i64) {
        assert_eq!(self.modulus, other.modulus);
        for (&e, c) in &other.terms {
            self.add(e, c * sign);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    fn to_dense(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.modulus as usize];
        for (&e, c) in &self.terms {
            v[e as usize] += c;
        }
        v
    }

    /// The smallest conductor `M'` dividing `M` such that every exponent is a
    /// multiple of `M / M'`.
    pub fn minimal_conductor(&self) -> u64 {
        let g = self.terms.keys().fold(self.modulus, |acc, &e| gcd(acc, e));
        self.modulus / g
    }

    /// Canonical value, at [`RootSum::minimal_conductor`].
    pub fn to_cycint(&self) -> CycInt {
        let small = self.minimal_conductor();
        let step = self.modulus / small;
        let ring = CycRing::new(small);
        let mut v = vec![BigInt::zero(); small as usize];
        for (&e, c) in &self.terms {
            v[(e / step) as usize] += c;
        }
        ring.reduce_dense(v)
    }

    /// Canonical value at the full modulus.
    pub fn to_cycint_full(&self) -> CycInt {
        CycRing::new(self.modulus).reduce_dense(self.to_dense())
    }

    pub fn is_zero_value(&self) -> bool {
        self.terms.is_empty() || self.to_cycint().is_zero()
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.to_cycint().as_integer()
    }
}

/// Coefficients of the `M`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(m: u64) -> Vec<i64> {
    let primes = prime_factors(m);
    let radical: u64 = primes.iter().product();
    // Φ_{rp}(x) = Φ_r(x^p) / Φ_r(x) for p ∤ r
    let mut poly: Vec<i64> = vec![-1, 1];
    for &p in &primes {
        let stretched = stretch(&poly, p as usize);
        poly = exact_div(&stretched, &poly);
    }
    stretch(&poly, (m / radical) as usize)
}

fn stretch(poly: &[i64], k: usize) -> Vec<i64> {
    if k == 1 {
        return poly.to_vec();
    }
    let mut out = vec![0; (poly.len() - 1) * k + 1];
    for (i, &c) in poly.iter().enumerate() {
        out[i * k] = c;
    }
    out
}

/// Exact division of integer polynomials by a monic divisor.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn];
        q[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] = rem[k + i]
                    .checked_sub(c.checked_mul(d).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// `ζ_M^k` in canonical form.
pub fn cyc_root(m: u64, k: i64) -> CycInt {
    CycRing::new(m).root(k)
}

pub fn cyc_add(a: &CycInt, b: &CycInt) -> Result<CycInt> {
    a.try_add(b)
}

pub fn cyc_mul(a: &CycInt, b: &CycInt) -> Result<CycInt> {
    a.try_mul(b)
}

pub fn cyc_embed(a: &CycInt, conductor: u64) -> Result<CycInt> {
    a.embed(conductor)
}

pub fn cyc_galois(j: i64, a: &CycInt) -> Result<CycInt> {
    a.galois(j)
}

pub fn cyc_as_integer(a: &CycInt) -> Option<BigInt> {
    a.as_integer()
}
