//! Exact combinatorics of parabolic subalgebras of simple Lie algebras.
//!
//! Starting from a simple type (or an explicit Cartan matrix) the crate builds
//! the full root system and, for any choice of simple roots kept in a Levi
//! factor, the system of t-roots: the nonzero restrictions of roots to the
//! center t of the Levi factor. On top of that it provides
//!
//! * irreducibility certificates for every t-root space,
//! * simple t-roots, the element δ_n and the sign and string laws of t-roots,
//! * the grading of the nilradical and its upper and lower central series,
//!   in closed form and by brute force,
//! * the extended Dynkin diagram and Borel–de Siebenthal node deletion,
//! * a block-matrix model of parabolics in sl(n) used as a cross-check.
//!
//! # Bracket semantics
//!
//! In a Chevalley basis `[e_φ, e_φ']` is a nonzero multiple of `e_{φ+φ'}`
//! exactly when `φ + φ'` is a root, and `[e_φ, e_{-φ}]` is a nonzero element of
//! the Cartan subalgebra. Every t-root space and every term of the central
//! series considered here is a sum of root spaces, so spans of brackets are
//! determined by root sums alone. No structure constant is ever computed.
//!
//! # Normalization
//!
//! Cartan matrices follow `a_ij = 2(α_i, α_j)/(α_j, α_j)` with Bourbaki node
//! numbering. The bilinear form is `(α_i, α_j) = a_ij d_j` where `d_j` are the
//! minimal positive integers making that matrix symmetric, so short roots have
//! `(α, α) = 2`. This differs from the Killing form by a positive scalar,
//! which leaves every sign, vanishing statement and ratio unchanged.

#![allow(clippy::needless_range_loop)]

pub mod bds;
pub mod error;
pub mod exactlin;
pub mod levi;
pub mod report;
pub mod rootsys;
pub mod series;
pub mod slnx;
pub mod verify;

pub use error::{Error, Result};
pub use exactlin::{Rat, RatMat, RatVec};
pub use report::Report;
pub use rootsys::{CartanMatrix, Family, Root, RootId, RootSystem, SimpleType};
