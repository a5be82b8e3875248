//! Exact computations for Sally-type numerical semigroups.
//!
//! A numerical semigroup of *Sally type* has multiplicity one more than its
//! width. The two families handled here are
//!
//! * `S_e<m>`: generated by `[e, 2e-1] \ {e+m}`, and
//! * `S_e<m,n>`: generated by `[e, 2e-1] \ {e+m, e+n}`.
//!
//! The crate computes everything from first principles:
//!
//! * [`semigroup`]: membership through the Apery table, gaps, Frobenius
//!   number, pseudo-Frobenius numbers, type, (almost) symmetry.
//! * [`linalg`]: exact rank over the rationals by fraction-free elimination.
//! * [`hochster`]: graded Betti numbers of `k[S]` as reduced homology of the
//!   squarefree divisor complexes.
//! * [`fibers`]: monomial fibers of the toric ideal, minimal binomial
//!   generators and generating-set verification by fiber connectivity.
//! * [`sallymatrices`]: the two-row monomial matrices whose 2x2 minors
//!   generate the defining ideals.
//! * [`formulas`]: closed forms for the invariants and Betti sequences.
//! * [`conjectures`]: scanners comparing conjectured Betti identities against
//!   computed tables.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod conjectures;
pub mod error;
pub mod fibers;
pub mod formulas;
pub mod hochster;
pub mod linalg;
pub mod sallymatrices;
pub mod semigroup;

mod util;

pub use error::{Error, Result};
pub use fibers::{Binomial, Monomial};
pub use hochster::{BettiTable, SquarefreeComplex};
pub use linalg::ExactMatrix;
pub use semigroup::{NumericalSemigroup, SallyParams};
