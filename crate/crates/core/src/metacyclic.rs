//! Finite metacyclic groups `C_m ⋊_s C_N` and their induced representations.
//!
//! The group is `⟨x, t | x^m, t^N, t x t^{-1} = x^s⟩` and every element is
//! written `x^i t^j`. All irreducible representations are induced from
//! characters `ψ` of `A_f = ⟨x, t^f⟩`; they are monomial, which is what makes
//! every computation here exact and cheap.
//!
//! Element sums come in two flavours. The default path walks every element
//! `x^i t^j` but fibers the walk by `j`: for fixed `j` the sum over `i` is a
//! geometric series of roots of unity, `Σ_i ζ^{iK} = m·[K ≡ 0]`, and is
//! evaluated in closed form. The `*_exhaustive` variants perform the literal
//! per-element sum and exist to cross-check the fibered path on small groups.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{gcd, lcm, mul_mod, orbit_min, orbit_size, pow_mod};
use crate::cyclotomic::{CycInt, CycRing, RootSum};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MetacyclicGroup {
    m: u64,
    n: u64,
    s: u64,
    /// `s^j mod m` for `0 ≤ j < N`.
    #[serde(skip)]
    s_pows: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupElem {
    pub i: u64,
    pub j: u64,
}

impl GroupElem {
    pub const IDENTITY: GroupElem = GroupElem { i: 0, j: 0 };
}

impl MetacyclicGroup {
    /// `C_m ⋊_s C_N`; requires `s^N ≡ 1 (mod m)`.
    pub fn new(m: u64, n: u64, s: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidGroup(format!(
                "orders must be positive (m = {m}, N = {n})"
            )));
        }
        if m > 1 && pow_mod(s, n, m) != 1 {
            return Err(Error::InvalidGroup(format!("{s}^{n} is not 1 modulo {m}")));
        }
        m.checked_mul(n)
            .ok_or_else(|| Error::TooLarge(format!("|G| = {m}·{n}")))?;
        let s = s % m;
        let mut s_pows = Vec::with_capacity(n as usize);
        let mut cur = 1 % m;
        for _ in 0..n {
            s_pows.push(cur);
            cur = mul_mod(cur, s, m);
        }
        Ok(MetacyclicGroup { m, n, s, s_pows })
    }

    /// Order of the normal cyclic subgroup `⟨x⟩`.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Order of `t`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Action exponent: `t x t^{-1} = x^s`.
    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    pub fn x(&self) -> GroupElem {
        GroupElem {
            i: 1 % self.m,
            j: 0,
        }
    }

    pub fn t(&self) -> GroupElem {
        GroupElem {
            i: 0,
            j: 1 % self.n,
        }
    }

    pub fn elem(&self, i: i64, j: i64) -> GroupElem {
        GroupElem {
            i: i.rem_euclid(self.m as i64) as u64,
            j: j.rem_euclid(self.n as i64) as u64,
        }
    }

    pub fn contains(&self, g: GroupElem) -> bool {
        g.i < self.m && g.j < self.n
    }

    /// `s^j mod m`, for any integer `j`.
    pub fn s_pow(&self, j: i64) -> u64 {
        self.s_pows[j.rem_euclid(self.n as i64) as usize]
    }

    pub fn mul(&self, a: GroupElem, b: GroupElem) -> GroupElem {
        GroupElem {
            i: (a.i + mul_mod(self.s_pows[a.j as usize], b.i, self.m)) % self.m,
            j: (a.j + b.j) % self.n,
        }
    }

    pub fn inv(&self, g: GroupElem) -> GroupElem {
        // (x^i t^j)^{-1} = t^{-j} x^{-i} = x^{-i s^{-j}} t^{-j}
        let i = mul_mod((self.m - g.i) % self.m, self.s_pow(-(g.j as i64)), self.m);
        GroupElem {
            i,
            j: (self.n - g.j) % self.n,
        }
    }

    pub fn pow(&self, g: GroupElem, mut k: u64) -> GroupElem {
        let mut result = GroupElem::IDENTITY;
        let mut base = g;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElem> + '_ {
        (0..self.n).flat_map(move |j| (0..self.m).map(move |i| GroupElem { i, j }))
    }

    /// `#{g : g² = 1}`, by direct enumeration.
    pub fn involution_count(&self) -> u64 {
        (0..self.n)
            .into_par_iter()
            .map(|j| {
                if (2 * j) % self.n != 0 {
                    return 0;
                }
                let k = (1 + self.s_pows[j as usize]) % self.m;
                (0..self.m).filter(|&i| mul_mod(i, k, self.m) == 0).count() as u64
            })
            .sum()
    }
}

/// A character `ψ` of `A_f = ⟨x, t^f⟩`: `x ↦ ζ_m^a`, `t^f ↦ ζ_{N/f}^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SubgroupCharacter {
    pub f: u64,
    pub a: u64,
    pub c: u64,
}

impl SubgroupCharacter {
    /// Validates `ψ` against `group`: `f | N`, and `ψ` kills the commutators
    /// of `A_f`, i.e. `a·(s^f - 1) ≡ 0 (mod m)`.
    pub fn new(group: &MetacyclicGroup, f: u64, a: u64, c: u64) -> Result<Self> {
        if f == 0 || !group.n.is_multiple_of(f) {
            return Err(Error::InvalidCharacter(format!(
                "index f = {f} must divide N = {}",
                group.n
            )));
        }
        if a >= group.m {
            return Err(Error::InvalidCharacter(format!(
                "a = {a} must be below m = {}",
                group.m
            )));
        }
        let t_order = group.n / f;
        if c >= t_order {
            return Err(Error::InvalidCharacter(format!(
                "c = {c} must be below N/f = {t_order}"
            )));
        }
        let sf = group.s_pow(f as i64);
        if mul_mod(a, (sf + group.m - 1) % group.m, group.m) != 0 {
            return Err(Error::InvalidCharacter(format!(
                "x ↦ ζ_{}^{a} is not fixed by t^{f}",
                group.m
            )));
        }
        Ok(SubgroupCharacter { f, a, c })
    }

    /// Order of `t^f` in the group, `N/f`.
    pub fn t_order(&self, group: &MetacyclicGroup) -> u64 {
        group.n / self.f
    }
}

/// Exponent bookkeeping for the values of `ψ` inside `Z/L`, where `ζ_L`
/// generates every value of the induced character.
#[derive(Debug, Clone, Copy)]
struct Exps {
    /// `L = lcm(order of ψ(x), N/f)`.
    conductor: u64,
    /// exponent of `ψ(x)` in `Z/L`
    ex: u64,
    /// exponent of `ψ(t^f)` in `Z/L`
    et: u64,
}

impl Exps {
    fn new(group: &MetacyclicGroup, psi: &SubgroupCharacter) -> Self {
        let g = gcd(psi.a, group.m);
        let x_order = group.m / g;
        let t_order = psi.t_order(group);
        let conductor = lcm(x_order, t_order);
        let ex = (psi.a / g) % x_order * (conductor / x_order);
        let et = psi.c * (conductor / t_order);
        Exps {
            conductor,
            ex: ex % conductor,
            et: et % conductor,
        }
    }

    /// Exponent of `ψ(x^i t^{f k})`.
    fn psi(&self, i: u64, k: u64) -> u64 {
        (mul_mod(i, self.ex, self.conductor) + mul_mod(k, self.et, self.conductor)) % self.conductor
    }
}

/// Outcome of a Frobenius–Schur evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndicatorSum {
    /// `Σ_g χ(g²)`, always a rational integer.
    pub raw: i64,
    pub group_order: u64,
    pub indicator: i8,
}

impl IndicatorSum {
    fn from_raw(raw: BigInt, group_order: u64, what: &str) -> Result<Self> {
        let order = BigInt::from(group_order);
        let c = &raw / &order;
        if &c * &order != raw || !(-1..=1).contains(&c.to_i64().unwrap_or(2)) {
            return Err(Error::Internal(format!(
                "{what}: raw sum {raw} is not |G|·c with |G| = {group_order}, c ∈ {{-1,0,1}}"
            )));
        }
        Ok(IndicatorSum {
            raw: raw.to_i64().expect("bounded by |G|"),
            group_order,
            indicator: c.to_i64().unwrap() as i8,
        })
    }
}

/// An `f × f` monomial matrix: column `l` has the single entry `ζ_L^{exps[l]}`
/// in row `rows[l]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMatrix {
    pub conductor: u64,
    pub rows: Vec<usize>,
    pub exps: Vec<u64>,
}

impl MonomialMatrix {
    pub fn identity(size: usize, conductor: u64) -> Self {
        MonomialMatrix {
            conductor,
            rows: (0..size).collect(),
            exps: vec![0; size],
        }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, other: &MonomialMatrix) -> MonomialMatrix {
        assert_eq!(self.conductor, other.conductor);
        // (A B) e_l = A (β_l e_{r(l)}) = α_{r(l)} β_l e_{R(r(l))}
        let rows = other.rows.iter().map(|&r| self.rows[r]).collect();
        let exps = other
            .rows
            .iter()
            .zip(&other.exps)
            .map(|(&r, &b)| (self.exps[r] + b) % self.conductor)
            .collect();
        MonomialMatrix {
            conductor: self.conductor,
            rows,
            exps,
        }
    }

    pub fn inverse(&self) -> MonomialMatrix {
        let n = self.size();
        let mut rows = vec![0; n];
        let mut exps = vec![0; n];
        for (l, (&r, &e)) in self.rows.iter().zip(&self.exps).enumerate() {
            rows[r] = l;
            exps[r] = (self.conductor - e) % self.conductor;
        }
        MonomialMatrix {
            conductor: self.conductor,
            rows,
            exps,
        }
    }

    pub fn pow(&self, mut k: u64) -> MonomialMatrix {
        let mut result = MonomialMatrix::identity(self.size(), self.conductor);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        result
    }

    pub fn transpose(&self) -> MonomialMatrix {
        let n = self.size();
        let mut rows = vec![0; n];
        let mut exps = vec![0; n];
        for (l, (&r, &e)) in self.rows.iter().zip(&self.exps).enumerate() {
            rows[r] = l;
            exps[r] = e;
        }
        MonomialMatrix {
            conductor: self.conductor,
            rows,
            exps,
        }
    }

    pub fn trace_sum(&self) -> RootSum {
        let mut s = RootSum::new(self.conductor);
        for (l, (&r, &e)) in self.rows.iter().zip(&self.exps).enumerate() {
            if r == l {
                s.add(e, 1);
            }
        }
        s
    }

    pub fn trace(&self) -> CycInt {
        self.trace_sum().to_cycint_full()
    }

    /// `sign(permutation) · Π entries`.
    pub fn determinant(&self) -> CycInt {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.rows[cur];
                len += 1;
            }
            transpositions += len - 1;
        }
        let e = self
            .exps
            .iter()
            .fold(0, |acc, &e| (acc + e) % self.conductor);
        let root = CycRing::new(self.conductor).root(e as i64);
        if transpositions % 2 == 1 {
            root.neg()
        } else {
            root
        }
    }

    /// Dense matrix over `Z[ζ_L]`, row-major.
    pub fn to_dense(&self) -> Vec<Vec<CycInt>> {
        let ring = CycRing::new(self.conductor);
        let n = self.size();
        let mut out = vec![vec![ring.zero(); n]; n];
        for (l, (&r, &e)) in self.rows.iter().zip(&self.exps).enumerate() {
            out[r][l] = ring.root(e as i64);
        }
        out
    }
}

/// Explicit model of `Ind ψ` on the basis `t^0 v, …, t^{f-1} v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixModel {
    pub x: MonomialMatrix,
    pub t: MonomialMatrix,
}

impl MatrixModel {
    pub fn conductor(&self) -> u64 {
        self.x.conductor
    }

    pub fn element(&self, g: GroupElem) -> MonomialMatrix {
        self.x.pow(g.i).mul(&self.t.pow(g.j))
    }
}

/// An involutive automorphism `θ(x) = x^u`, `θ(t) = x^v t^w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvolutionSpec {
    pub u: u64,
    pub v: u64,
    pub w: u64,
}

impl InvolutionSpec {
    pub fn identity() -> Self {
        InvolutionSpec { u: 1, v: 0, w: 1 }
    }

    pub fn new(group: &MetacyclicGroup, u: u64, v: u64, w: u64) -> Result<Self> {
        let m = group.m;
        let spec = InvolutionSpec {
            u: u % m,
            v: v % m,
            w: w % group.n,
        };
        let theta_x = group.elem(spec.u as i64, 0);
        let theta_t = GroupElem {
            i: spec.v,
            j: spec.w,
        };
        if group.pow(theta_t, group.n) != GroupElem::IDENTITY {
            return Err(Error::InvalidInvolution("θ(t)^N ≠ 1".into()));
        }
        // θ(t) θ(x) θ(t)^{-1} = θ(x)^s
        let lhs = group.mul(group.mul(theta_t, theta_x), group.inv(theta_t));
        if lhs != group.pow(theta_x, group.s) {
            return Err(Error::InvalidInvolution(
                "θ does not respect t x t^{-1} = x^s".into(),
            ));
        }
        if spec.apply(group, theta_x) != group.x() || spec.apply(group, theta_t) != group.t() {
            return Err(Error::InvalidInvolution("θ∘θ ≠ id".into()));
        }
        Ok(spec)
    }

    pub fn apply(&self, group: &MetacyclicGroup, g: GroupElem) -> GroupElem {
        let tx = group.elem(mul_mod(self.u, g.i, group.m) as i64, 0);
        let tt = GroupElem {
            i: self.v % group.m,
            j: self.w % group.n,
        };
        group.mul(tx, group.pow(tt, g.j))
    }
}

impl MetacyclicGroup {
    fn check_character(&self, psi: &SubgroupCharacter) -> Result<()> {
        SubgroupCharacter::new(self, psi.f, psi.a, psi.c).map(|_| ())
    }

    /// Exponents of the nonzero terms of `χ_{Ind ψ}(g)` in `Z/L`.
    fn induced_terms(
        &self,
        exps: &Exps,
        psi: &SubgroupCharacter,
        g: GroupElem,
    ) -> Option<Vec<u64>> {
        if !g.j.is_multiple_of(psi.f) {
            return None;
        }
        let k = g.j / psi.f;
        Some(
            (0..psi.f)
                .map(|l| {
                    // t^{-l} x^i t^j t^l = x^{i s^{-l}} t^j
                    let i = mul_mod(g.i, self.s_pow(-(l as i64)), self.m);
                    exps.psi(i, k)
                })
                .collect(),
        )
    }

    /// Conductor `L` used for the character values and matrices of `Ind ψ`.
    pub fn value_conductor(&self, psi: &SubgroupCharacter) -> u64 {
        Exps::new(self, psi).conductor
    }

    /// `χ_{Ind ψ}(g)` as an element of `Z[ζ_L]`, `L = value_conductor(ψ)`.
    pub fn induced_character(&self, psi: &SubgroupCharacter, g: GroupElem) -> Result<CycInt> {
        self.check_character(psi)?;
        let exps = Exps::new(self, psi);
        let mut sum = RootSum::new(exps.conductor);
        for e in self.induced_terms(&exps, psi, g).unwrap_or_default() {
            sum.add(e, 1);
        }
        Ok(sum.to_cycint_full())
    }

    /// `⟨χ, χ⟩_G` for `χ = χ_{Ind ψ}` (fibered element sum).
    pub fn norm_squared(&self, psi: &SubgroupCharacter) -> Result<u64> {
        self.check_character(psi)?;
        // Only j ≡ 0 (mod f) contributes, with |ψ(t^j)| = 1. The sum over i of
        // |Σ_l ζ_m^{a i s^{-l}}|^2 is m times the number of pairs (l, l')
        // with a s^{-l} ≡ a s^{-l'}.
        let f = psi.f;
        let conj: Vec<u64> = (0..f)
            .map(|l| mul_mod(psi.a, self.s_pow(-(l as i64)), self.m))
            .collect();
        let pairs = conj
            .iter()
            .map(|x| conj.iter().filter(|y| *y == x).count() as u64)
            .sum::<u64>();
        let raw = (self.n / f) as u128 * self.m as u128 * pairs as u128;
        let order = self.order() as u128;
        if !raw.is_multiple_of(order) {
            return Err(Error::Internal(format!(
                "⟨χ,χ⟩ raw sum {raw} not divisible by |G| = {order}"
            )));
        }
        Ok((raw / order) as u64)
    }

    /// `⟨χ, χ⟩_G` by a literal sum of `χ(g)·conj(χ(g))` over every element.
    pub fn norm_squared_exhaustive(&self, psi: &SubgroupCharacter) -> Result<u64> {
        self.check_character(psi)?;
        let exps = Exps::new(self, psi);
        let l = exps.conductor;
        let mut counts = vec![0i64; l as usize];
        for g in self.elements() {
            if let Some(terms) = self.induced_terms(&exps, psi, g) {
                for &e1 in &terms {
                    for &e2 in &terms {
                        counts[((e1 + l - e2) % l) as usize] += 1;
                    }
                }
            }
        }
        let value = RootSum::from_counts(l, &counts).to_cycint();
        let raw = value
            .as_integer()
            .ok_or_else(|| Error::Internal(format!("Σ|χ(g)|² = {value} is not an integer")))?;
        let order = BigInt::from(self.order());
        if (&raw % &order) != BigInt::zero() {
            return Err(Error::Internal(format!(
                "Σ|χ(g)|² = {raw} is not a multiple of |G| = {order}"
            )));
        }
        Ok((raw / order).to_u64().expect("nonnegative"))
    }

    pub fn is_irreducible_induced(&self, psi: &SubgroupCharacter) -> Result<bool> {
        Ok(self.norm_squared(psi)? == 1)
    }

    /// The `f` conjugates `ψ^{t^j}` (`0 ≤ j < f`) are pairwise distinct.
    pub fn conjugates_distinct(&self, psi: &SubgroupCharacter) -> bool {
        orbit_size(psi.a, self.s, self.m) == psi.f
    }

    /// One descriptor per isomorphism class of irreducible representations,
    /// ordered by orbit representative `a`, then `c`.
    pub fn enumerate_irreps(&self) -> Result<Vec<(SubgroupCharacter, u64)>> {
        let m = self.m as usize;
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for a in 0..self.m {
            if seen[a as usize] {
                continue;
            }
            let mut cur = a;
            let mut f = 0;
            loop {
                seen[cur as usize] = true;
                f += 1;
                cur = mul_mod(cur, self.s, self.m);
                if cur == a {
                    break;
                }
            }
            if !self.n.is_multiple_of(f) {
                return Err(Error::UnsupportedGroup(format!(
                    "orbit of {a} has size {f}, not dividing N = {}",
                    self.n
                )));
            }
            for c in 0..self.n / f {
                out.push((SubgroupCharacter::new(self, f, a, c)?, f));
            }
        }
        let total: u128 = out.iter().map(|(_, d)| (*d as u128) * (*d as u128)).sum();
        if total != self.order() as u128 {
            return Err(Error::UnsupportedGroup(format!(
                "Σ dim² = {total} ≠ |G| = {}",
                self.order()
            )));
        }
        Ok(out)
    }

    /// Frobenius–Schur indicator of `Ind ψ` (fibered element sum).
    pub fn fs_indicator(&self, psi: &SubgroupCharacter) -> Result<i8> {
        Ok(self.fs_evaluation(psi)?.indicator)
    }

    /// `Σ_g χ(g²)` via the fibered sum, with the `|G|·c` recognition.
    pub fn fs_evaluation(&self, psi: &SubgroupCharacter) -> Result<IndicatorSum> {
        self.check_character(psi)?;
        let f = psi.f;
        let t_order = psi.t_order(self);
        // (x^i t^j)^2 = x^{i(1+s^j)} t^{2j}; the sum over i of
        // ζ_m^{a i (1+s^j) s^{-l}} is m·[a(1+s^j) ≡ 0], uniformly in l.
        let mut acc = RootSum::new(t_order);
        for j in 0..self.n {
            let two_j = (2 * j) % self.n;
            if !two_j.is_multiple_of(f) {
                continue;
            }
            let k = (1 + self.s_pows[j as usize]) % self.m;
            if mul_mod(psi.a, k, self.m) != 0 {
                continue;
            }
            acc.add(psi.c * (two_j / f) % t_order, 1);
        }
        let inner = acc.to_cycint();
        let count = inner.as_integer().ok_or_else(|| {
            Error::Internal(format!(
                "FS sum for {psi:?}: Σ ψ(t^{{2j}}) = {inner} is not an integer"
            ))
        })?;
        let raw = count * BigInt::from(f) * BigInt::from(self.m);
        IndicatorSum::from_raw(raw, self.order(), "FS indicator")
    }

    /// `Σ_g χ(g²)` summed literally over every element.
    pub fn fs_evaluation_exhaustive(&self, psi: &SubgroupCharacter) -> Result<IndicatorSum> {
        self.check_character(psi)?;
        let exps = Exps::new(self, psi);
        let l = exps.conductor as usize;
        let counts = (0..self.n)
            .into_par_iter()
            .map(|j| {
                let mut counts = vec![0i64; l];
                for i in 0..self.m {
                    let g = GroupElem { i, j };
                    let sq = self.mul(g, g);
                    if let Some(terms) = self.induced_terms(&exps, psi, sq) {
                        for e in terms {
                            counts[e as usize] += 1;
                        }
                    }
                }
                counts
            })
            .reduce(
                || vec![0i64; l],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        let value = RootSum::from_counts(exps.conductor, &counts).to_cycint();
        let raw = value
            .as_integer()
            .ok_or_else(|| Error::Internal(format!("Σ χ(g²) = {value} is not an integer")))?;
        IndicatorSum::from_raw(raw, self.order(), "exhaustive FS indicator")
    }

    pub fn matrix_model(&self, psi: &SubgroupCharacter) -> Result<MatrixModel> {
        self.check_character(psi)?;
        let exps = Exps::new(self, psi);
        let f = psi.f as usize;
        // x t^l v = t^l x^{s^{-l}} v
        let x = MonomialMatrix {
            conductor: exps.conductor,
            rows: (0..f).collect(),
            exps: (0..f)
                .map(|l| exps.psi(self.s_pow(-(l as i64)), 0))
                .collect(),
        };
        // t · t^l v = t^{l+1} v, and t · t^{f-1} v = t^f v = ψ(t^f) v
        let mut t_exps = vec![0; f];
        t_exps[f - 1] = exps.psi(0, 1);
        let t = MonomialMatrix {
            conductor: exps.conductor,
            rows: (0..f).map(|l| (l + 1) % f).collect(),
            exps: t_exps,
        };
        Ok(MatrixModel { x, t })
    }

    /// `(det π(x), det π(t))`.
    pub fn det_at_generators(&self, psi: &SubgroupCharacter) -> Result<(CycInt, CycInt)> {
        let model = self.matrix_model(psi)?;
        Ok((model.x.determinant(), model.t.determinant()))
    }

    /// The scalar by which `t^k` acts on `Ind ψ`, if it acts by a scalar
    /// (exactly when `f | k`).
    pub fn t_power_scalar(&self, psi: &SubgroupCharacter, k: u64) -> Result<Option<CycInt>> {
        self.check_character(psi)?;
        if !k.is_multiple_of(psi.f) {
            return Ok(None);
        }
        let exps = Exps::new(self, psi);
        let e = exps.psi(0, (k / psi.f) % psi.t_order(self));
        Ok(Some(CycRing::new(exps.conductor).root(e as i64)))
    }

    /// Sign `c_θ` of the `θ`-twisted invariant bilinear form on `Ind ψ`:
    /// `+1` symmetric, `-1` alternating, `0` if no nonzero form exists.
    /// Averages `M(g)^T B_0 M(θ g)` over `G` with the sum over `x^i` done in
    /// closed form.
    pub fn theta_sign(&self, theta: &InvolutionSpec, psi: &SubgroupCharacter) -> Result<i8> {
        self.check_character(psi)?;
        let model = self.matrix_model(psi)?;
        let l_cond = model.conductor();
        let f = psi.f as usize;
        let theta_t = GroupElem {
            i: theta.v % self.m,
            j: theta.w % self.n,
        };
        let t_pows: Vec<MonomialMatrix> = (0..self.n).map(|j| model.t.pow(j)).collect();
        let h_pows: Vec<MonomialMatrix> = (0..self.n)
            .map(|j| model.element(self.pow(theta_t, j)))
            .collect();
        let dx = &model.x.exps;
        for a in 0..f {
            for b in 0..f {
                // Σ_i ζ^{i (dx[a] + u dx[b])} = m if the exponent vanishes, else 0
                let e = (dx[a] + mul_mod(theta.u, dx[b], l_cond)) % l_cond;
                if e != 0 {
                    continue;
                }
                let mut form: BTreeMap<(usize, usize), RootSum> = BTreeMap::new();
                for j in 0..self.n as usize {
                    let tj_inv = t_pows[j].inverse();
                    let hj_inv = h_pows[j].inverse();
                    let k = tj_inv.rows[a];
                    let l = hj_inv.rows[b];
                    let value = (t_pows[j].exps[k] + h_pows[j].exps[l]) % l_cond;
                    form.entry((k, l))
                        .or_insert_with(|| RootSum::new(l_cond))
                        .add(value, self.m as i64);
                }
                if let Some(c) = classify_form(&form, l_cond)? {
                    return Ok(c);
                }
            }
        }
        Ok(0)
    }

    /// [`Self::theta_sign`] by a literal average over every element.
    pub fn theta_sign_exhaustive(
        &self,
        theta: &InvolutionSpec,
        psi: &SubgroupCharacter,
    ) -> Result<i8> {
        self.check_character(psi)?;
        let model = self.matrix_model(psi)?;
        let l_cond = model.conductor();
        let f = psi.f as usize;
        let pairs: Vec<(MonomialMatrix, MonomialMatrix)> = self
            .elements()
            .map(|g| (model.element(g), model.element(theta.apply(self, g))))
            .collect();
        for a in 0..f {
            for b in 0..f {
                let mut form: BTreeMap<(usize, usize), RootSum> = BTreeMap::new();
                for (mg, mh) in &pairs {
                    // (M(g)^T E_ab M(h))_{kl} = M(g)_{ak} M(h)_{bl}
                    let gi = mg.inverse();
                    let hi = mh.inverse();
                    let k = gi.rows[a];
                    let l = hi.rows[b];
                    let value = (mg.exps[k] + mh.exps[l]) % l_cond;
                    form.entry((k, l))
                        .or_insert_with(|| RootSum::new(l_cond))
                        .add(value, 1);
                }
                if let Some(c) = classify_form(&form, l_cond)? {
                    return Ok(c);
                }
            }
        }
        Ok(0)
    }
}

/// `None` if the form vanishes; otherwise `c` with `B^T = c B`.
fn classify_form(form: &BTreeMap<(usize, usize), RootSum>, conductor: u64) -> Result<Option<i8>> {
    let nonzero: BTreeMap<(usize, usize), &RootSum> = form
        .iter()
        .filter(|(_, v)| !v.is_zero_value())
        .map(|(k, v)| (*k, v))
        .collect();
    if nonzero.is_empty() {
        return Ok(None);
    }
    let empty = RootSum::new(conductor);
    for c in [1i64, -1] {
        let holds = nonzero.iter().all(|(&(k, l), v)| {
            let mut diff = (*v).clone();
            diff.add_sum(nonzero.get(&(l, k)).copied().unwrap_or(&empty), -c);
            diff.is_zero_value()
        });
        if holds {
            return Ok(Some(c as i8));
        }
    }
    Err(Error::Internal(
        "averaged form is neither symmetric nor alternating".into(),
    ))
}

/// Smallest representative of the orbit of `a` under `t`-conjugation.
pub fn orbit_representative(group: &MetacyclicGroup, a: u64) -> u64 {
    orbit_min(a, group.s, group.m)
}
