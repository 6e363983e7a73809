//! Character fields of the induced representations, and reality.
//!
//! All character values of `Ind ψ` on `C_m ⋊_s C_N` lie in `Q(ζ_M)` with
//! `M = lcm(m, N)`, so `Aut(C/Q)` acts through `(Z/M)^×`. The stabilizer of
//! the character is computed from the Clifford description: `σ_j` sends `ψ`
//! to `ψ^j`, and `Ind ψ^j ≅ Ind ψ` iff `ψ^j` is a `t`-conjugate of `ψ`.

use serde::Serialize;

use crate::arith::{gcd, lcm, mul_mod};
use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::metacyclic::{MetacyclicGroup, SubgroupCharacter};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterField {
    pub conductor: u64,
    /// `j ∈ (Z/M)^×` with `χ^{σ_j} = χ`, ascending.
    pub stabilizer: Vec<u64>,
    /// `[Q(χ) : Q]`.
    pub degree: u64,
}

impl CharacterField {
    pub fn contains(&self, j: u64) -> bool {
        self.stabilizer.binary_search(&(j % self.conductor)).is_ok()
    }

    fn from_stabilizer(conductor: u64, stabilizer: Vec<u64>) -> Result<Self> {
        let units = (1..=conductor)
            .filter(|&j| gcd(j % conductor, conductor) == 1)
            .count() as u64;
        let size = stabilizer.len() as u64;
        if size == 0 || !units.is_multiple_of(size) {
            return Err(Error::Internal(format!(
                "stabilizer of size {size} in a unit group of order {units}"
            )));
        }
        Ok(CharacterField {
            conductor,
            stabilizer,
            degree: units / size,
        })
    }
}

fn units(conductor: u64) -> impl Iterator<Item = u64> {
    (0..conductor.max(1)).filter(move |&j| gcd(j, conductor) == 1 || conductor == 1)
}

/// `ψ^j` is `t`-conjugate to `ψ`.
fn galois_fixes(group: &MetacyclicGroup, psi: &SubgroupCharacter, j: u64) -> bool {
    let t_order = psi.t_order(group);
    if mul_mod(psi.c, j, t_order) != psi.c % t_order {
        return false;
    }
    let target = mul_mod(psi.a, j, group.m());
    (0..psi.f).any(|k| mul_mod(psi.a, group.s_pow(k as i64), group.m()) == target)
}

pub fn character_field(group: &MetacyclicGroup, psi: &SubgroupCharacter) -> Result<CharacterField> {
    SubgroupCharacter::new(group, psi.f, psi.a, psi.c)?;
    let conductor = lcm(group.m(), group.n());
    let stabilizer = units(conductor)
        .filter(|&j| galois_fixes(group, psi, j))
        .collect();
    CharacterField::from_stabilizer(conductor, stabilizer)
}

/// [`character_field`] by applying `σ_j` to every character value.
pub fn character_field_exhaustive(
    group: &MetacyclicGroup,
    psi: &SubgroupCharacter,
) -> Result<CharacterField> {
    let conductor = lcm(group.m(), group.n());
    let values: Vec<CycInt> = group
        .elements()
        .map(|g| group.induced_character(psi, g))
        .collect::<Result<_>>()?;
    let value_conductor = group.value_conductor(psi);
    let mut stabilizer = Vec::new();
    for j in units(conductor) {
        let jl = (j % value_conductor) as i64;
        let mut fixed = true;
        for v in &values {
            if &v.galois(jl)? != v {
                fixed = false;
                break;
            }
        }
        if fixed {
            stabilizer.push(j);
        }
    }
    CharacterField::from_stabilizer(conductor, stabilizer)
}

/// Every character value is real, i.e. fixed by complex conjugation.
pub fn is_real_character(group: &MetacyclicGroup, psi: &SubgroupCharacter) -> Result<bool> {
    SubgroupCharacter::new(group, psi.f, psi.a, psi.c)?;
    let conductor = lcm(group.m(), group.n());
    Ok(galois_fixes(group, psi, conductor - 1))
}

/// [`is_real_character`] by conjugating every character value.
pub fn is_real_character_exhaustive(
    group: &MetacyclicGroup,
    psi: &SubgroupCharacter,
) -> Result<bool> {
    for g in group.elements() {
        let v = group.induced_character(psi, g)?;
        if v.conj() != v {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dic12() -> MetacyclicGroup {
        MetacyclicGroup::new(3, 4, 2).unwrap()
    }

    #[test]
    fn trivial_character_is_rational() {
        let g = dic12();
        let psi = SubgroupCharacter::new(&g, 1, 0, 0).unwrap();
        let field = character_field(&g, &psi).unwrap();
        assert_eq!(field.degree, 1);
        assert_eq!(field.stabilizer, vec![1, 5, 7, 11]);
        assert!(is_real_character(&g, &psi).unwrap());
    }

    #[test]
    fn two_dimensional_irreps_are_rational() {
        let g = dic12();
        for c in 0..2 {
            let psi = SubgroupCharacter::new(&g, 2, 1, c).unwrap();
            let field = character_field(&g, &psi).unwrap();
            assert_eq!(field.degree, 1);
            assert_eq!(field, character_field_exhaustive(&g, &psi).unwrap());
            assert!(field.contains(11));
        }
    }

    #[test]
    fn faithful_linear_characters_of_c4_quotient() {
        // t ↦ ±i: values in Q(i), degree 2, not real
        let g = dic12();
        let psi = SubgroupCharacter::new(&g, 1, 0, 1).unwrap();
        let field = character_field(&g, &psi).unwrap();
        assert_eq!(field.degree, 2);
        assert!(!is_real_character(&g, &psi).unwrap());
        assert!(!is_real_character_exhaustive(&g, &psi).unwrap());
    }
}
