//! Exact-arithmetic implementation of the peak algebra of the symmetric group
//! and of the descent algebras of types A and B.
//!
//! The crate is `no_std` and only needs `alloc`. Every coefficient is an
//! arbitrary-precision rational; nothing is ever rounded.
//!
//! Layout:
//!
//! - [`combinatorics`]: sparse subsets, compositions, the two partial orders
//!   on sparse subsets and their Möbius function, partition counts.
//! - [`permutations`]: ordinary and signed permutations, descents, peaks,
//!   shuffles and the sign-forgetting projection.
//! - [`algebra`]: group-algebra elements with the internal and convolution
//!   products.
//! - [`classes`]: structure constants of subalgebras spanned by class sums.
//! - [`bases`]: the P, Q, O, Ō bases, the X and Y bases, the maps φ, π, β and
//!   the chains of ideals.
//! - [`radical`]: radical generators, codimensions and nilpotency.
//! - [`eulerian`]: the Eulerian-type idempotents and the semiidempotent basis.
//! - [`lie`]: the action on the tensor algebra and the Lie-monomial
//!   characterizations.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod bases;
pub mod bitset;
mod cache;
pub mod check;
pub mod classes;
pub mod combinatorics;
pub mod error;
pub mod eulerian;
pub mod lie;
pub mod linalg;
pub mod permutations;
pub mod radical;

pub use bitset::BitSet;
pub use error::{Error, Result};

/// Coefficient field used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Degree limits for anything that enumerates a whole group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` for which `S_n` may be enumerated.
    pub type_a: usize,
    /// Largest `n` for which `B_n` may be enumerated.
    pub type_b: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { type_a: 8, type_b: 6 }
    }
}
