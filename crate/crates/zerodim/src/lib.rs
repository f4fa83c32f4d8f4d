//! Exact combinatorics of the Kottwitz set `B(G, {μ})`.
//!
//! The crate enumerates neutrally acceptable σ-conjugacy classes for a Coxeter
//! datum `(root datum, σ₀, τ, μ)`, computes essential gaps together with their
//! lattice-point decomposition, and decides which classes satisfy the two
//! combinatorial characterizations of zero-dimensional affine Deligne–Lusztig
//! varieties (extended Lubin–Tate Levi versus μ-ordinary maximum with zero gap).
//!
//! All arithmetic is exact.

pub mod affine;
pub mod bg;
pub mod classifier;
pub mod datum;
pub mod error;
pub mod essgap;
pub mod hodgenewton;
pub mod linalg;
pub mod polygon;
pub mod rat;
pub mod rootsys;

pub use bg::{BgMuPoset, SigmaClass};
pub use datum::{CoxeterDatum, KappaValue, OmegaElement};
pub use error::{Error, Result};
pub use rat::{RatVec, Q};
pub use rootsys::{CartanType, RootDatum, WeylElement};
