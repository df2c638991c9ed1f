//! Affine and projective lifted Reed-Solomon codes.
//!
//! The crate is organised bottom-up:
//!
//! * [`gf`]: arithmetic in `GF(p^t)` and extension isomorphisms.
//! * [`matrix`]: dense linear algebra over a [`gf::FiniteField`].
//! * [`geometry`]: affine and projective spaces, lines and line embeddings.
//! * [`degrees`]: exponent reduction and the degree sets of lifted codes.
//! * [`codes`]: monomial evaluation codes, encoding and line restriction.
//! * [`decode`]: projective Reed-Solomon decoding and local correction.
//! * [`analysis`]: information sets, quasi-cyclicity, distance, design
//!   duality and rate tables.
//! * [`selftest`]: a quick pass over all of the above.
//!
//! Everything is `no_std` with `alloc`. Randomised operations take a caller
//! supplied [`rand::RngCore`].

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod codes;
pub mod decode;
pub mod degrees;
pub mod error;
pub mod geometry;
pub mod gf;
pub mod matrix;
pub mod selftest;

pub use codes::{CodeKind, LinearCode, MonomialCode, Word};
pub use degrees::DegreeSet;
pub use error::{Error, Result};
pub use geometry::{LineEmbedding, ProjectivePoint, Space, Support};
pub use gf::{Elem, ExtensionIso, FieldElement, FiniteField};
pub use matrix::{Matrix, RowSpace};
