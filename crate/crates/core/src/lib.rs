//! E-polynomials of representation varieties of closed orientable surfaces,
//! optionally with parabolic punctures, computed as transfer-matrix products
//! of tube operators.
//!
//! - [`poly`]: exact arithmetic in `Z[u^±1, v^±1]`.
//! - [`motivic`]: classes of standard strata, additivity and fibrations.
//! - [`tqft`]: tube words and their evaluation over a [`tqft::TqftDatum`].
//! - [`finite_group`]: data for arbitrary finite groups plus a brute-force oracle.
//! - [`affc`]: the data for the affine group `Aff(C)` with closed-form checks.
//! - [`verify`]: the oracle comparisons behind the `verify` subcommand.

pub mod affc;
pub mod cli;
pub mod error;
pub mod finite_group;
pub mod matrix;
pub mod motivic;
pub mod poly;
pub mod tqft;
pub mod verify;

pub use error::{Error, Result};
pub use finite_group::FiniteGroup;
pub use poly::LaurentPoly;
pub use tqft::{SurfaceSpec, TqftDatum, Tube, TubeWord};
