//! Level-1 representations of `D^×` for a division algebra `D` of index `n`
//! over a non-archimedean local field with residue field `F_q`.
//!
//! A tame character `χ` of `k_f^×` is the pair `(a, w)`: `a` is the exponent
//! of its value on a fixed generator of `F_{q^f}^×`, `w = χ(ϖ_k) ∈ {±1}`.
//! Generators are taken norm-compatible, `g_f = N_{F_{q^n}/F_{q^f}}(g_n)`.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith::{checked_pow, gcd, orbit_min, orbit_size, prime_power};
use crate::error::{Error, Result};
use crate::metacyclic::{IndicatorSum, MetacyclicGroup, SubgroupCharacter};

/// An orthogonal (`+1`) or symplectic (`-1`) sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn pow(self, k: u64) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::from_parity(k % 2 == 1),
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = Error;

    fn try_from(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::Internal(format!("{v} is not a sign"))),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Sign, String> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            other => Err(format!("expected +1 or -1, got {other:?}")),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.value())
    }
}

/// A tame character of `k_f^×`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TameCharacter {
    pub q: u64,
    pub f: u64,
    pub a: u64,
    pub w: Sign,
}

impl TameCharacter {
    pub fn new(q: u64, f: u64, a: u64, w: Sign) -> Result<Self> {
        if prime_power(q).is_none() {
            return Err(Error::NotPrimePower(q));
        }
        if f == 0 {
            return Err(Error::InvalidTameCharacter("f must be positive".into()));
        }
        let modulus = residue_order(q, f)?;
        if a >= modulus {
            return Err(Error::InvalidTameCharacter(format!(
                "a = {a} must be below q^f - 1 = {modulus}"
            )));
        }
        Ok(TameCharacter { q, f, a, w })
    }

    /// `q^f - 1`, the order of `F_{q^f}^×`.
    pub fn residue_order(&self) -> u64 {
        residue_order(self.q, self.f).expect("validated at construction")
    }

    /// Smallest element of the Galois orbit of `a`.
    pub fn orbit_representative(&self) -> u64 {
        orbit_min(self.a, self.q, self.residue_order())
    }

    pub fn with_w(self, w: Sign) -> Self {
        TameCharacter { w, ..self }
    }
}

pub(crate) fn residue_order(q: u64, f: u64) -> Result<u64> {
    checked_pow(q, f)
        .filter(|&v| v <= u32::MAX as u64)
        .map(|v| v - 1)
        .ok_or_else(|| Error::TooLarge(format!("{q}^{f}")))
}

/// All Galois conjugates `χ, χ^q, …, χ^{q^{f-1}}` are distinct.
pub fn is_regular(chi: &TameCharacter) -> bool {
    orbit_size(chi.a, chi.q, chi.residue_order()) == chi.f
}

/// `π_χ` is self-dual iff `f = 2d` and `χ^{-1} = χ^{q^d}` on units, i.e.
/// `a (q^d + 1) ≡ 0 (mod q^f - 1)`.
pub fn is_selfdual_division(chi: &TameCharacter) -> Result<bool> {
    if !is_regular(chi) {
        return Err(Error::NotRegular);
    }
    Ok(selfdual_exponent(chi))
}

pub(crate) fn selfdual_exponent(chi: &TameCharacter) -> bool {
    if !chi.f.is_multiple_of(2) {
        return false;
    }
    let qd = chi.q.pow((chi.f / 2) as u32);
    (chi.a as u128 * (qd + 1) as u128).is_multiple_of(chi.residue_order() as u128)
}

/// `χ|_{k^×}` is trivial: the unit part `F_q^×` (generated by
/// `g_f^{(q^f-1)/(q-1)}`) and `ϖ_k` both map to 1.
pub fn restriction_to_base_trivial(chi: &TameCharacter) -> bool {
    chi.a.is_multiple_of(chi.q - 1) && chi.w == Sign::Plus
}

fn check_selfdual(chi: &TameCharacter) -> Result<()> {
    if !is_selfdual_division(chi)? {
        return Err(Error::NotSelfDual);
    }
    if !chi.a.is_multiple_of(chi.q - 1) {
        return Err(Error::Internal(format!(
            "self-dual {chi:?} is nontrivial on F_q^×"
        )));
    }
    Ok(())
}

/// Orthogonal iff `χ` restricted to `k^×` is trivial.
pub fn sign_division_closed_form(chi: &TameCharacter) -> Result<Sign> {
    check_selfdual(chi)?;
    Ok(if restriction_to_base_trivial(chi) {
        Sign::Plus
    } else {
        Sign::Minus
    })
}

/// The finite model `C_{q^n-1} ⋊_q C_{2n}` of `D^×/D^×(1)` modulo `ϖ^{2n}`,
/// and the character `χ̃ = χ ∘ Nrd` of `⟨x, t^f⟩`.
pub fn division_model(n: u64, chi: &TameCharacter) -> Result<(MetacyclicGroup, SubgroupCharacter)> {
    if n == 0 || !n.is_multiple_of(chi.f) {
        return Err(Error::DimensionNotDividing { f: chi.f, n });
    }
    if !is_regular(chi) {
        return Err(Error::NotRegular);
    }
    let m = residue_order(chi.q, n)?;
    let group = MetacyclicGroup::new(m, 2 * n, chi.q)?;
    // Nrd on residue units is the norm F_{q^n} → F_{q^f}: g_n ↦ g_n^{(q^n-1)/(q^f-1)}
    let a = chi.a * (m / chi.residue_order());
    // Nrd(ϖ^f) = ϖ_k, so t^f ↦ χ(ϖ_k) = w, a (2n/f)-th root of unity
    let t_order = 2 * n / chi.f;
    let c = match chi.w {
        Sign::Plus => 0,
        Sign::Minus => t_order / 2,
    };
    let psi = SubgroupCharacter::new(&group, chi.f, a, c)?;
    Ok((group, psi))
}

/// Brute-force sign: the Frobenius–Schur indicator of the modeled representation.
pub fn sign_division_oracle(n: u64, chi: &TameCharacter) -> Result<Sign> {
    Ok(division_oracle_evaluation(n, chi)?.0)
}

/// Oracle sign together with the raw indicator sum.
pub fn division_oracle_evaluation(n: u64, chi: &TameCharacter) -> Result<(Sign, IndicatorSum)> {
    if !is_selfdual_division(chi)? {
        return Err(Error::NotSelfDual);
    }
    let (group, psi) = division_model(n, chi)?;
    let eval = group.fs_evaluation(&psi)?;
    let sign = match eval.indicator {
        1 => Sign::Plus,
        -1 => Sign::Minus,
        _ => {
            return Err(Error::Internal(format!(
                "FS indicator 0 for self-dual {chi:?} (raw sum {})",
                eval.raw
            )))
        }
    };
    Ok((sign, eval))
}

/// A row of [`enumerate_level1_selfdual`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisionEntry {
    pub n: u64,
    pub chi: TameCharacter,
    pub dim: u64,
    pub closed_form: Sign,
    pub oracle: Sign,
    pub indicator: IndicatorSum,
}

/// Minimal representatives of the Galois orbits of regular self-dual
/// residue exponents for `F_{q^f}`.
pub fn selfdual_orbit_representatives(q: u64, f: u64) -> Result<Vec<u64>> {
    if !f.is_multiple_of(2) {
        return Ok(Vec::new());
    }
    let modulus = residue_order(q, f)?;
    let qd1 = q.pow((f / 2) as u32) - 1;
    // a (q^d + 1) ≡ 0 mod (q^d - 1)(q^d + 1) iff (q^d - 1) | a
    let reps = (0..modulus)
        .step_by(qd1 as usize)
        .filter(|&a| orbit_size(a, q, modulus) == f && orbit_min(a, q, modulus) == a)
        .collect();
    Ok(reps)
}

/// Every level-1 irreducible self-dual representation of `D^×` of index `n`,
/// one per Galois orbit and value of `w`, ordered by `(f, a, w)`.
pub fn enumerate_level1_selfdual(q: u64, n: u64) -> Result<Vec<DivisionEntry>> {
    if prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    if n == 0 {
        return Err(Error::DimensionNotDividing { f: 0, n });
    }
    residue_order(q, n)?;
    let mut chars = Vec::new();
    for f in (2..=n).step_by(2).filter(|f| n.is_multiple_of(*f)) {
        for a in selfdual_orbit_representatives(q, f)? {
            for w in [Sign::Plus, Sign::Minus] {
                chars.push(TameCharacter::new(q, f, a, w)?);
            }
        }
    }
    chars
        .into_par_iter()
        .map(|chi| {
            let closed_form = sign_division_closed_form(&chi)?;
            let (oracle, indicator) = division_oracle_evaluation(n, &chi)?;
            Ok(DivisionEntry {
                n,
                chi,
                dim: chi.f,
                closed_form,
                oracle,
                indicator,
            })
        })
        .collect()
}

/// A regular self-dual character of dimension `f = 2d`: the pull-back of an
/// order `q^d + 1` character of the norm-one circle group along
/// `x ↦ x / x̄ = x^{1 - q^d}`, i.e. `a = (q^d - 1)·u` with `u` a unit
/// modulo `q^d + 1`.
pub fn construct_selfdual_of_dim(q: u64, n: u64, f: u64) -> Result<TameCharacter> {
    if prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    if f == 0 || !f.is_multiple_of(2) {
        return Err(Error::OddDimension(f));
    }
    if !n.is_multiple_of(f) {
        return Err(Error::DimensionNotDividing { f, n });
    }
    let qd = q.pow((f / 2) as u32);
    let u = (1..=qd + 1)
        .find(|&u| gcd(u, qd + 1) == 1)
        .expect("1 is a unit");
    let chi = TameCharacter::new(q, f, (qd - 1) * u, Sign::Plus)?;
    if !is_regular(&chi) || !selfdual_exponent(&chi) {
        return Err(Error::Internal(format!(
            "circle-group construction produced {chi:?}, which is not regular self-dual"
        )));
    }
    Ok(chi)
}
