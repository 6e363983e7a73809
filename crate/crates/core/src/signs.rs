//! Sign algebra relating `c(π)` on `GL_m(D)` to `c(σ)` of its parameter,
//! and the exhaustive level-1 flip check.

use serde::Serialize;

use crate::division::{enumerate_level1_selfdual, DivisionEntry, Sign, TameCharacter};
use crate::error::{Error, Result};
use crate::weil::{attach_parameter, full_parameter_sign, Recipe};

/// `c(π)` for `π` on `GL_m(D)`, `D` of index `r`, `n = m r`:
/// `(-1)^m c(π) = (-1)^n c(σ)^m`.
///
/// An irreducible self-dual parameter of odd dimension is orthogonal, so
/// `c_sigma = -1` with `n` odd is rejected.
pub fn theorem_a_sign(m: u64, r: u64, c_sigma: Sign) -> Result<Sign> {
    let n = m * r;
    if n % 2 == 1 && c_sigma == Sign::Minus {
        return Err(Error::OddSymplectic(n));
    }
    Ok(Sign::from_parity((n + m) % 2 == 1) * c_sigma.pow(m))
}

/// `n` odd: always orthogonal. `n` even: orthogonal iff `σ` is symplectic.
pub fn corollary_b(n: u64, c_sigma: Sign) -> Result<Sign> {
    if n % 2 == 1 {
        if c_sigma == Sign::Minus {
            return Err(Error::OddSymplectic(n));
        }
        return Ok(Sign::Plus);
    }
    let sign = -c_sigma;
    if Ok(sign) != theorem_a_sign(1, n, c_sigma) {
        return Err(Error::Internal(format!(
            "even case disagrees with the sign identity at n = {n}"
        )));
    }
    Ok(sign)
}

/// Sign of a self-dual discrete series representation of `GL_m(D)`, `D` of
/// index `d`, in terms of the sign of its parameter.
pub fn theorem_6_1(m: u64, d: u64, c_sigma: Sign) -> Result<Sign> {
    if (m * d) % 2 == 1 && c_sigma == Sign::Minus {
        return Err(Error::OddSymplectic(m * d));
    }
    let sign = match (d % 2 == 1, m % 2 == 1) {
        (true, _) => Sign::Plus,
        (false, true) => -c_sigma,
        (false, false) => Sign::Plus,
    };
    if Ok(sign) != theorem_a_sign(m, d, c_sigma) {
        return Err(Error::Internal(format!(
            "case analysis disagrees with the sign identity at m = {m}, d = {d}"
        )));
    }
    Ok(sign)
}

/// `c(π)^k = c(π^{⊗k})`.
pub fn tensor_power_sign(c: Sign, k: u64) -> Sign {
    c.pow(k)
}

/// The product of the local signs is `+1`.
pub fn product_check(local_signs: &[Sign]) -> bool {
    local_signs.iter().fold(Sign::Plus, |acc, &s| acc * s) == Sign::Plus
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlipRow {
    pub q: u64,
    pub n: u64,
    pub f: u64,
    pub e: u64,
    pub chi: TameCharacter,
    pub division_closed_form: Sign,
    pub division_oracle: Sign,
    /// `Σ_g χ(g²)` on the division model, the oracle's witness.
    pub raw_indicator_sum: i64,
    pub group_order: u64,
    pub recipe: Recipe,
    pub mu: TameCharacter,
    pub parameter_sign: Sign,
    pub predicted_division_sign: Sign,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlipReport {
    pub q: u64,
    pub n: u64,
    pub recipe: Recipe,
    pub rows: Vec<FlipRow>,
}

impl FlipReport {
    pub fn all_consistent(&self) -> bool {
        self.rows.iter().all(|r| r.consistent)
    }

    pub fn inconsistent(&self) -> impl Iterator<Item = &FlipRow> {
        self.rows.iter().filter(|r| !r.consistent)
    }
}

/// Checks one enumerated representation against the sign identity under
/// the given parameter recipe.
pub fn flip_row(entry: &DivisionEntry, recipe: Recipe) -> Result<FlipRow> {
    let chi = entry.chi;
    let param = attach_parameter(entry.n, &chi, recipe)?;
    let parameter_sign = full_parameter_sign(&param)?;
    let predicted = corollary_b(entry.n, parameter_sign)?;
    Ok(FlipRow {
        q: chi.q,
        n: entry.n,
        f: chi.f,
        e: param.e,
        chi,
        division_closed_form: entry.closed_form,
        division_oracle: entry.oracle,
        raw_indicator_sum: entry.indicator.raw,
        group_order: entry.indicator.group_order,
        recipe,
        mu: param.mu,
        parameter_sign,
        predicted_division_sign: predicted,
        consistent: entry.oracle == predicted && entry.closed_form == entry.oracle,
    })
}

pub fn flip_report(
    q: u64,
    n: u64,
    entries: &[DivisionEntry],
    recipe: Recipe,
) -> Result<FlipReport> {
    let rows = entries
        .iter()
        .map(|e| flip_row(e, recipe))
        .collect::<Result<Vec<_>>>()?;
    Ok(FlipReport { q, n, recipe, rows })
}

/// Exhaustive level-1 check of `c(π) = -c(σ)` for `D` of index `n` over a
/// field with residue field `F_q`.
pub fn verify_flip(q: u64, n: u64, recipe: Recipe) -> Result<FlipReport> {
    let entries = enumerate_level1_selfdual(q, n)?;
    flip_report(q, n, &entries, recipe)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus, Plus};

    #[test]
    fn theorem_a_examples() {
        assert_eq!(theorem_a_sign(1, 2, Minus), Ok(Plus));
        for m in 1..10 {
            assert_eq!(theorem_a_sign(m, 1, Plus), Ok(Plus));
        }
        for m in (2..10).step_by(2) {
            assert_eq!(theorem_a_sign(m, 1, Minus), Ok(Plus));
        }
        assert_eq!(theorem_a_sign(3, 1, Minus), Err(Error::OddSymplectic(3)));
        assert_eq!(theorem_a_sign(1, 3, Plus), Ok(Plus));
        assert_eq!(theorem_a_sign(2, 2, Minus), Ok(Plus));
    }

    #[test]
    fn corollary_b_examples() {
        assert_eq!(corollary_b(2, Minus), Ok(Plus));
        assert_eq!(corollary_b(3, Plus), Ok(Plus));
        assert_eq!(corollary_b(4, Plus), Ok(Minus));
        assert_eq!(corollary_b(5, Minus), Err(Error::OddSymplectic(5)));
    }

    #[test]
    fn theorem_6_1_examples() {
        assert_eq!(theorem_6_1(2, 3, Plus), Ok(Plus));
        assert_eq!(theorem_6_1(1, 2, Minus), Ok(Plus));
        assert_eq!(theorem_6_1(1, 2, Plus), Ok(Minus));
        assert_eq!(theorem_6_1(2, 2, Plus), Ok(Plus));
        assert_eq!(theorem_6_1(2, 2, Minus), Ok(Plus));
        assert_eq!(theorem_6_1(3, 3, Minus), Err(Error::OddSymplectic(9)));
    }

    #[test]
    fn tensor_and_product() {
        assert_eq!(tensor_power_sign(Minus, 2), Plus);
        assert_eq!(tensor_power_sign(Minus, 1), Minus);
        assert_eq!(tensor_power_sign(Plus, 1), Plus);
        assert_eq!(tensor_power_sign(Minus, 3), Minus);
        assert!(product_check(&[Plus, Plus]));
        assert!(product_check(&[Minus, Minus]));
        assert!(!product_check(&[Minus, Plus]));
        assert!(product_check(&[]));
    }

    #[test]
    fn flip_small_cases() {
        let r = verify_flip(2, 2, Recipe::Pr).unwrap();
        assert_eq!(r.rows.len(), 2);
        assert!(r.all_consistent());

        let pr = verify_flip(2, 4, Recipe::Pr).unwrap();
        assert!(pr.all_consistent());
        let sz = verify_flip(2, 4, Recipe::Sz).unwrap();
        assert!(sz.inconsistent().any(|r| r.f == 2 && r.e == 2));
        assert!(sz.inconsistent().all(|r| r.e % 2 == 0));
    }
}
