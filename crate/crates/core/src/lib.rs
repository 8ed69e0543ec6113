//! Exact computer algebra for double Hall-Littlewood symmetric functions and
//! the derived Hall algebra of the Jordan quiver.
//!
//! The crate provides:
//!
//! - [`combinat`]: partitions, bipartitions, strips and the extended
//!   dominance order;
//! - [`ratfun`]: Laurent polynomials and rational functions over exact
//!   rationals in one formal variable;
//! - [`dlambda`]: the ring of double symmetric functions, the double HL
//!   basis `V_{lambda,mu}` via raising/lowering operator recursions, and
//!   triangular basis conversion;
//! - [`pieri`]: strip coefficients and the horizontal / vertical / Schur
//!   Pieri rules;
//! - [`hall`]: the classical Hall algebra of the Jordan quiver with a
//!   finite-field counting oracle;
//! - [`dhall`]: the derived Hall algebra, its structure constants, the
//!   normalized basis and the isomorphism onto the symmetric-function side;
//! - [`schur`]: Schur-Laurent determinants and the `t = 0` specialization;
//! - [`genfun`]: truncated bivariate generating functions over the derived
//!   Hall algebra and the transition-identity checker;
//! - [`verify`]: named, bounded verification suites runnable from the CLI.

pub mod combinat;
pub mod dhall;
pub mod dlambda;
pub mod genfun;
pub mod hall;
pub mod pieri;
pub mod ratfun;
pub mod schur;
pub mod verify;

pub use combinat::{Bipartition, IntVector, Partition};
pub use dlambda::{AlgebraElement, Basis, Side};
pub use ratfun::{LaurentPoly, RatFun, Variable};
