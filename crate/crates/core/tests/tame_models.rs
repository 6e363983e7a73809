mod common;

use common::{DenseInduced, Grp};
use proptest::prelude::*;
use tamesign_core::division::{
    construct_selfdual_of_dim, division_model, enumerate_level1_selfdual, is_regular,
    is_selfdual_division, restriction_to_base_trivial, sign_division_closed_form,
};
use tamesign_core::rationality::is_real_character;
use tamesign_core::signs::{corollary_b, verify_flip};
use tamesign_core::weil::{
    attach_parameter, enumerate_weil_selfdual, full_parameter_sign, weil_model, Recipe,
};
use tamesign_core::{Sign, TameCharacter};

/// Small cases where the dense complex oracle is affordable.
const DENSE: &[(u64, u64)] = &[(2, 2), (3, 2), (4, 2), (5, 2), (2, 4)];

fn orbit_min(a: u64, q: u64, m: u64) -> u64 {
    let mut best = a;
    let mut cur = a;
    loop {
        cur = cur * q % m;
        if cur == a {
            return best;
        }
        best = best.min(cur);
    }
}

fn orbit_len(a: u64, q: u64, m: u64) -> u64 {
    let mut cur = a * q % m;
    let mut len = 1;
    while cur != a {
        cur = cur * q % m;
        len += 1;
    }
    len
}

/// Every regular `(f, a, w)` with `f | n` whose modeled representation is
/// self-dual by the dense oracle, with its dense Frobenius–Schur sign.
fn brute_force_selfdual(q: u64, n: u64) -> Vec<(u64, u64, Sign, i64)> {
    let mut out = Vec::new();
    let m = q.pow(n as u32) - 1;
    let grp = Grp {
        m,
        n: 2 * n,
        s: q % m,
    };
    for f in (1..=n).filter(|f| n.is_multiple_of(*f)) {
        let mf = q.pow(f as u32) - 1;
        for a in 0..mf {
            if orbit_len(a, q, mf) != f || orbit_min(a, q, mf) != a {
                continue;
            }
            for w in [Sign::Plus, Sign::Minus] {
                let t_order = 2 * n / f;
                let c = if w == Sign::Plus { 0 } else { t_order / 2 };
                let dense = DenseInduced::new(&grp, f, a * (m / mf), c);
                assert_eq!(dense.norm(), 1);
                let fs = dense.fs();
                if fs != 0 {
                    out.push((f, a, w, fs));
                }
            }
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for &(q, n) in DENSE {
        let (expected, linear): (Vec<_>, Vec<_>) = brute_force_selfdual(q, n)
            .into_iter()
            .partition(|r| r.0 > 1);
        // quadratic characters of D^× are self-dual and orthogonal, but are
        // not part of the f > 1 enumeration
        assert!(!linear.is_empty());
        assert!(linear.iter().all(|r| r.0 == 1 && r.3 == 1));
        let entries = enumerate_level1_selfdual(q, n).unwrap();
        let got: Vec<(u64, u64, Sign, i64)> = entries
            .iter()
            .map(|e| (e.chi.f, e.chi.a, e.chi.w, e.oracle.value() as i64))
            .collect();
        assert_eq!(got, expected, "q = {q}, n = {n}");
    }
}

#[test]
fn frozen_enumeration_counts() {
    // counts certified by `enumeration_matches_brute_force` on the dense cases
    assert_eq!(enumerate_level1_selfdual(2, 2).unwrap().len(), 2);
    assert_eq!(enumerate_level1_selfdual(3, 2).unwrap().len(), 2);
    assert_eq!(enumerate_level1_selfdual(2, 4).unwrap().len(), 4);
    let e = enumerate_level1_selfdual(2, 2).unwrap();
    assert_eq!((e[0].chi.a, e[0].oracle), (1, Sign::Plus));
    assert_eq!((e[1].chi.a, e[1].oracle), (1, Sign::Minus));
}

#[test]
fn division_signs_over_moderate_range() {
    for q in [2, 3, 4, 5, 7] {
        for n in [2, 4] {
            for e in enumerate_level1_selfdual(q, n).unwrap() {
                assert_eq!(e.closed_form, e.oracle, "{:?}", e.chi);
                assert_eq!(
                    e.indicator.raw,
                    e.indicator.group_order as i64 * e.oracle.value() as i64
                );
                let (g, psi) = division_model(n, &e.chi).unwrap();
                assert!(g.is_irreducible_induced(&psi).unwrap());
                assert!(is_real_character(&g, &psi).unwrap());
                if g.order() <= 20_000 {
                    assert_eq!(g.fs_evaluation_exhaustive(&psi).unwrap(), e.indicator);
                }
            }
        }
    }
}

#[test]
fn orthogonal_iff_determinant_at_uniformizer_is_minus_one() {
    for q in [2u64, 3, 4, 5] {
        for n in [2u64, 4, 6] {
            if q.pow(n as u32) > 20_000 {
                continue;
            }
            for e in enumerate_level1_selfdual(q, n).unwrap() {
                let (g, psi) = division_model(n, &e.chi).unwrap();
                let (_, det_t) = g.det_at_generators(&psi).unwrap();
                let det_t = det_t.as_i64().expect("±1");
                assert_eq!(e.oracle == Sign::Plus, det_t == -1, "{:?}", e.chi);
                let scalar = g.t_power_scalar(&psi, psi.f).unwrap().unwrap().as_i64();
                assert_eq!(e.oracle == Sign::Plus, scalar == Some(1), "{:?}", e.chi);
            }
        }
    }
}

#[test]
fn weil_side_clauses_and_oracle() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for f in [2, 4] {
            for e in enumerate_weil_selfdual(q, f).unwrap() {
                assert_eq!(e.clauses.restriction_trivial, e.clauses.det_nontrivial);
                assert_eq!(e.closed_form, e.oracle, "{:?}", e.mu);
                let (g, psi) = weil_model(&e.mu).unwrap();
                assert!(g.is_irreducible_induced(&psi).unwrap());
                let (_, det_t) = g.det_at_generators(&psi).unwrap();
                assert_eq!(e.oracle == Sign::Plus, det_t.as_i64() == Some(-1));
            }
        }
    }
}

#[test]
fn weil_dense_oracle_small() {
    for (q, f) in [(2u64, 2u64), (3, 2), (5, 2), (2, 4)] {
        let m = q.pow(f as u32) - 1;
        let grp = Grp {
            m,
            n: 2 * f,
            s: q % m,
        };
        for e in enumerate_weil_selfdual(q, f).unwrap() {
            let (_, psi) = weil_model(&e.mu).unwrap();
            let dense = DenseInduced::new(&grp, psi.f, psi.a, psi.c);
            assert_eq!(dense.fs(), e.oracle.value() as i64, "{:?}", e.mu);
        }
    }
}

#[test]
fn weil_example_signs() {
    let mu = TameCharacter::new(2, 2, 1, Sign::Minus).unwrap();
    assert_eq!(weil_model(&mu).unwrap().1.c, 1);
    let entries = enumerate_weil_selfdual(2, 2).unwrap();
    let signs: Vec<_> = entries.iter().map(|e| (e.mu.w, e.oracle)).collect();
    assert_eq!(
        signs,
        vec![(Sign::Plus, Sign::Plus), (Sign::Minus, Sign::Minus)]
    );
}

#[test]
fn flip_under_both_recipes() {
    for q in [2u64, 3, 4, 5] {
        for n in [2u64, 4, 6] {
            if q.pow(n as u32) > 20_000 {
                continue;
            }
            let pr = verify_flip(q, n, Recipe::Pr).unwrap();
            assert!(pr.all_consistent(), "PR q = {q}, n = {n}");
            let sz = verify_flip(q, n, Recipe::Sz).unwrap();
            for row in &sz.rows {
                assert_eq!(row.consistent, row.e % 2 == 1, "SZ {row:?}");
            }
        }
    }
}

#[test]
fn constructed_characters_pass_predicates() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for n in [2u64, 4, 6] {
            if q.pow(n as u32) > 1_000_000 {
                continue;
            }
            for f in (2..=n).step_by(2).filter(|f| n % f == 0) {
                let chi = construct_selfdual_of_dim(q, n, f).unwrap();
                assert_eq!(chi.f, f);
                assert!(is_regular(&chi));
                assert!(is_selfdual_division(&chi).unwrap());
                assert!(restriction_to_base_trivial(&chi));
                assert_eq!(sign_division_closed_form(&chi), Ok(Sign::Plus));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Attaching under PR and predicting the division sign always recovers
    /// the closed form.
    #[test]
    fn pr_prediction_matches_closed_form(q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9]), fi in 0usize..2, mult in 1u64..4, k in 0usize..100, w in any::<bool>()) {
        let f = [2u64, 4][fi];
        let n = f * mult;
        let reps = tamesign_core::division::selfdual_orbit_representatives(q, f).unwrap();
        prop_assume!(!reps.is_empty());
        let w = if w { Sign::Plus } else { Sign::Minus };
        let chi = TameCharacter::new(q, f, reps[k % reps.len()], w).unwrap();
        let param = attach_parameter(n, &chi, Recipe::Pr).unwrap();
        let predicted = corollary_b(n, full_parameter_sign(&param).unwrap()).unwrap();
        prop_assert_eq!(predicted, sign_division_closed_form(&chi).unwrap());
    }
}
