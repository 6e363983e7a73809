//! Tame Weil parameters `σ_μ ⊗ sp_e` and their signs.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::division::{
    is_regular, residue_order, restriction_to_base_trivial, selfdual_exponent,
    selfdual_orbit_representatives, Sign, TameCharacter,
};
use crate::error::{Error, Result};
use crate::metacyclic::{IndicatorSum, MetacyclicGroup, SubgroupCharacter};

/// `σ_μ ⊗ sp_e`, of dimension `n = f·e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct WeilParameter {
    pub mu: TameCharacter,
    pub e: u64,
}

impl WeilParameter {
    pub fn new(mu: TameCharacter, e: u64) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidTameCharacter("e must be positive".into()));
        }
        if !is_regular(&mu) {
            return Err(Error::NotRegular);
        }
        Ok(WeilParameter { mu, e })
    }

    pub fn dim(&self) -> u64 {
        self.mu.f * self.e
    }
}

/// Recipe attaching a Weil parameter to `π_χ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Recipe {
    /// `μ = χ ω_2^{e(f-1)}` (conjectural).
    #[serde(rename = "PR")]
    Pr,
    /// `μ = χ ω_2^{f-1}`.
    #[serde(rename = "SZ")]
    Sz,
}

impl Recipe {
    pub fn omega_exponent(self, f: u64, e: u64) -> u64 {
        match self {
            Recipe::Pr => e * (f - 1),
            Recipe::Sz => f - 1,
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Recipe::Pr => "PR",
            Recipe::Sz => "SZ",
        })
    }
}

impl FromStr for Recipe {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Recipe, String> {
        match s.to_ascii_uppercase().as_str() {
            "PR" => Ok(Recipe::Pr),
            "SZ" => Ok(Recipe::Sz),
            other => Err(format!("unknown recipe {other:?} (expected PR or SZ)")),
        }
    }
}

/// `C_{q^f-1} ⋊_q C_{2f}`, the tame quotient of `W_{k_f/k}` modulo `ϖ^{2f}`,
/// with `ψ = μ` on `⟨x, t^f⟩` (`t^f` is the uniformizer `ϖ_k` of `k_f`).
pub fn weil_model(mu: &TameCharacter) -> Result<(MetacyclicGroup, SubgroupCharacter)> {
    if !is_regular(mu) {
        return Err(Error::NotRegular);
    }
    let m = residue_order(mu.q, mu.f)?;
    let group = MetacyclicGroup::new(m, 2 * mu.f, mu.q)?;
    let c = match mu.w {
        Sign::Plus => 0,
        Sign::Minus => 1,
    };
    let psi = SubgroupCharacter::new(&group, mu.f, mu.a, c)?;
    Ok((group, psi))
}

/// The two descriptions of the sign of a self-dual `σ_μ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeilClauses {
    /// `μ` restricted to `k^×` is trivial.
    pub restriction_trivial: bool,
    /// `det σ_μ` is a nontrivial character.
    pub det_nontrivial: bool,
}

pub fn weil_clauses(mu: &TameCharacter) -> Result<WeilClauses> {
    if !is_regular(mu) {
        return Err(Error::NotRegular);
    }
    if !selfdual_exponent(mu) {
        return Err(Error::NotSelfDual);
    }
    let (group, psi) = weil_model(mu)?;
    let (det_x, det_t) = group.det_at_generators(&psi)?;
    let is_one = |v: &crate::cyclotomic::CycInt| v.as_i64() == Some(1);
    Ok(WeilClauses {
        restriction_trivial: restriction_to_base_trivial(mu),
        det_nontrivial: !(is_one(&det_x) && is_one(&det_t)),
    })
}

/// Orthogonal iff `μ|_{k^×}` is trivial iff `det σ_μ` is nontrivial; both
/// clauses are evaluated and must agree.
pub fn sign_weil_closed_form(mu: &TameCharacter) -> Result<Sign> {
    let clauses = weil_clauses(mu)?;
    if !mu.a.is_multiple_of(mu.q - 1) {
        return Err(Error::Internal(format!(
            "self-dual {mu:?} is nontrivial on F_q^×"
        )));
    }
    if clauses.restriction_trivial != clauses.det_nontrivial {
        return Err(Error::Internal(format!(
            "determinant clause disagrees with restriction clause for {mu:?}"
        )));
    }
    Ok(if clauses.restriction_trivial {
        Sign::Plus
    } else {
        Sign::Minus
    })
}

/// Frobenius–Schur sign of `σ_μ` on the Weil model.
pub fn weil_oracle_evaluation(mu: &TameCharacter) -> Result<(Sign, IndicatorSum)> {
    if !is_regular(mu) {
        return Err(Error::NotRegular);
    }
    if !selfdual_exponent(mu) {
        return Err(Error::NotSelfDual);
    }
    let (group, psi) = weil_model(mu)?;
    let eval = group.fs_evaluation(&psi)?;
    let sign = Sign::try_from(eval.indicator as i64)
        .map_err(|_| Error::Internal(format!("FS indicator 0 for self-dual {mu:?}")))?;
    Ok((sign, eval))
}

pub fn sign_weil_oracle(mu: &TameCharacter) -> Result<Sign> {
    Ok(weil_oracle_evaluation(mu)?.0)
}

/// `c(sp_e)`: `sp_e = Sym^{e-1}` of the standard representation of
/// `SL(2, C)`, which is symplectic for `e` even and orthogonal for `e` odd.
pub fn sp_sign(e: u64) -> Sign {
    Sign::from_parity(e.is_multiple_of(2))
}

/// `c(σ_μ ⊗ sp_e) = c(σ_μ) c(sp_e)`.
pub fn full_parameter_sign(p: &WeilParameter) -> Result<Sign> {
    Ok(sign_weil_closed_form(&p.mu)? * sp_sign(p.e))
}

/// Attaches `σ_μ ⊗ sp_e` (`e = n/f`) to `π_χ` with `μ = χ ω_2^k`; `ω_2` is
/// trivial on units and `-1` at `ϖ_k`, so only `w` changes.
pub fn attach_parameter(n: u64, chi: &TameCharacter, recipe: Recipe) -> Result<WeilParameter> {
    if n == 0 || !n.is_multiple_of(chi.f) {
        return Err(Error::DimensionNotDividing { f: chi.f, n });
    }
    let e = n / chi.f;
    let twist = Sign::from_parity(recipe.omega_exponent(chi.f, e) % 2 == 1);
    WeilParameter::new(chi.with_w(chi.w * twist), e)
}

/// A row of [`enumerate_weil_selfdual`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeilEntry {
    pub mu: TameCharacter,
    pub clauses: WeilClauses,
    pub closed_form: Sign,
    pub oracle: Sign,
    pub indicator: IndicatorSum,
}

/// All regular self-dual `μ` of `k_f^×` up to Galois orbit, with both
/// closed-form clauses and the oracle sign.
pub fn enumerate_weil_selfdual(q: u64, f: u64) -> Result<Vec<WeilEntry>> {
    let mut mus = Vec::new();
    for a in selfdual_orbit_representatives(q, f)? {
        for w in [Sign::Plus, Sign::Minus] {
            mus.push(TameCharacter::new(q, f, a, w)?);
        }
    }
    mus.into_par_iter()
        .map(|mu| {
            let clauses = weil_clauses(&mu)?;
            let closed_form = sign_weil_closed_form(&mu)?;
            let (oracle, indicator) = weil_oracle_evaluation(&mu)?;
            Ok(WeilEntry {
                mu,
                clauses,
                closed_form,
                oracle,
                indicator,
            })
        })
        .collect()
}
