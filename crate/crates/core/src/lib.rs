//! Exact computer algebra for multiplicative Hom-Lie structures.
//!
//! A Hom-Lie structure on a Lie algebra `g` is a linear map `D` satisfying
//! `[D x, [y, z]] + [D y, [z, x]] + [D z, [x, y]] = 0`; it is multiplicative
//! when `D` is also a Lie algebra homomorphism. With `D(e_i) = sum_j x_ij e_j`
//! these conditions are polynomial equations in the `x_ij`, and this crate
//! builds and studies the resulting ideals over `Q`:
//!
//! * [`poly`]: polynomial arithmetic, orderings, normal forms, Buchberger.
//! * [`ideal`]: products, intersections, colon ideals, radical membership,
//!   containment and Krull dimension.
//! * [`lie`]: structure-constant tables and the built-in algebras
//!   `gl_n`, `sl_n`, `h_{2n+1}`, `u_n`.
//! * [`homlie`]: the Hom-Lie ideals, classification of concrete maps and
//!   symbolic verification of parametric families.
//! * [`derivations`]: `D^k`-derivation spaces and Hilbert series of the
//!   derivation algebra.
//!
//! Everything is computed over the rationals with arbitrary precision.

pub mod derivations;
pub mod homlie;
pub mod ideal;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod scalar;

pub use scalar::{Coeff, Integer, Rational};
