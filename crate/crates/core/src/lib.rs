//! Exact computational models for the equivariant Satake category of the real
//! affine Grassmannian of `PGL(2, R)` and its comparison with Lusztig's quantum
//! `SL(2)` at `q = i`.
//!
//! The crate is layered bottom-up:
//!
//! * [`arith`]: rationals, Gaussian rationals, Laurent polynomials and dense
//!   exact linear algebra over `Q(i)`.
//! * [`characters`]: signed characters (graded `Z/2`-representations), their
//!   convolution product and Jordan-Hölder decomposition.
//! * [`qsl2`]: weight modules over the divided-power quantum group at `q = i`.
//! * [`modtools`]: intertwiner spaces, socles, Jordan-Hölder multiplicities and
//!   quantum projectives.
//! * [`zigzag`]: the presented zigzag algebra.
//! * [`equivalence`]: the Hom-algebra of quantum projectives compared exactly
//!   against the zigzag algebra.
//! * [`satake`]: formal bookkeeping for standard, costandard, simple and
//!   projective perverse sheaves.
//! * [`cli`]: the command-line front end.

pub mod arith;
pub mod characters;
pub mod cli;
pub mod equivalence;
pub mod error;
pub mod modtools;
pub mod qsl2;
pub mod report;
pub mod satake;
pub mod zigzag;

pub use error::{Error, Result};
