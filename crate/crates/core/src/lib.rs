//! Exact orthogonal/symplectic signs for tame self-dual representations of
//! `D^×` and of the tame Weil group, modeled on finite metacyclic groups.
//!
//! * [`cyclotomic`]: exact arithmetic in `Z[ζ_M]`.
//! * [`metacyclic`]: `C_m ⋊_s C_N`, induced representations, Frobenius–Schur
//!   indicators and twisted bilinear forms.
//! * [`division`]: level-1 representations of `D^×` and their signs.
//! * [`weil`]: tame parameters `σ_μ ⊗ sp_e` and their signs.
//! * [`signs`]: sign identities and the exhaustive flip check.
//! * [`rationality`]: character fields and reality.

pub mod arith;
pub mod cyclotomic;
pub mod division;
pub mod error;
pub mod metacyclic;
pub mod rationality;
pub mod signs;
pub mod weil;

pub use cyclotomic::{
    cyc_add, cyc_as_integer, cyc_embed, cyc_galois, cyc_mul, cyc_root, CycInt, CycRing, RootSum,
};
pub use division::{Sign, TameCharacter};
pub use error::{Error, Result};
pub use metacyclic::{GroupElem, InvolutionSpec, MetacyclicGroup, SubgroupCharacter};
pub use weil::{Recipe, WeilParameter};
