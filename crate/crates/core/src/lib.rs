//! Exact-arithmetic algebraic combinatorics for representation-theoretic
//! positivity questions.
//!
//! Everything here is computed over the integers or the rationals; there is
//! no floating point anywhere in the crate. The modules build on each other:
//!
//! - [`combinatorics`]: partitions, skew shapes, tableaux and lattice words.
//! - [`characters`]: symmetric-group characters, Schur polynomials, Kostka,
//!   Kronecker and plethysm constants.
//! - [`polyhedra`]: exact simplex, affine hulls, lattice-point counting and
//!   Ehrhart quasipolynomials.
//! - [`lattice`]: Smith normal form, odd-denominator feasibility and the
//!   quasipolynomial index of a polytope.
//! - [`lr`]: Littlewood-Richardson coefficients by the LR rule, by lattice
//!   points of the LR polytope, nonvanishing and stretching.
//! - [`crystals`]: type A crystal operators on words.
//! - [`grassmannian`]: Plücker brackets, van der Waerden syzygies and
//!   straightening.
//! - [`stability`]: Reynolds operator, Molien series, torus weights, the
//!   null cone and Kempf's optimal one-parameter subgroup.

pub mod characters;
pub mod combinatorics;
pub mod crystals;
pub mod error;
pub mod grassmannian;
pub mod lattice;
pub mod linalg;
pub mod lr;
pub mod poly;
pub mod polyhedra;
pub mod rational;
pub mod stability;

pub use error::{Error, Result};
pub use rational::Rational;
