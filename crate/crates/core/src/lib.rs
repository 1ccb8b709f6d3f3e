//! Exact-arithmetic engines for invariants of super matrices.
//!
//! The crate computes the multiplicity `m_lambda` with which the irreducible
//! character `chi_lambda` appears in the invariant theory of `k x l` super
//! matrices, together with the "barred" variant `mbar_lambda` for the trace
//! ring, and assembles truncated Poincare series from those multiplicities.
//!
//! Two independent routes are implemented and cross-checked:
//!
//! * a symmetric-group route ([`characters`]): Murnaghan-Nakayama character
//!   values feed Kronecker coefficients, which are summed over a hook to give
//!   `m_lambda`;
//! * a torus constant-term route ([`multiplicity`]): hook Schur polynomials in
//!   the eigenvalue monomials are paired against `1` under a Weyl-type inner
//!   product, either after an exact polynomial division (large shapes) or via
//!   a truncated region expansion of the inverse factors.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! all final multiplicities are checked to be integers.  No floating point is
//! used anywhere.
//!
//! When the `parallel` feature (on by default) is enabled, the hot summation
//! loops fan out over a rayon thread pool; disabling the feature yields a
//! fully sequential build with identical results.

pub mod characters;
pub mod error;
pub mod laurent;
pub mod multiplicity;
mod par;
pub mod partitions;
pub mod series;
pub mod symfunc;
pub(crate) mod util;
pub mod verify;

pub use error::Error;
pub use partitions::{HookParams, Partition};
