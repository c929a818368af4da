//! Exact computations around Cox rings of K3 surfaces.
//!
//! The crate is `no_std` (it needs `alloc`) and has no IO. It covers
//!
//! * [`intlin`]: integer matrices, Smith normal form, Gale duality, even
//!   lattices and their 2-elementary invariants, representation of `0` and
//!   `-2` by indefinite binary forms;
//! * [`cones`]: rational polyhedral cones (double description);
//! * [`toric`]: fans, the Cox construction, stellar subdivision and the
//!   proper-transform recipe for ambient blow-ups;
//! * [`graded`]: multigraded presentations, monomial counting, Hilbert
//!   functions of complete intersections, a small Buchberger;
//! * [`k3`]: Riemann-Roch oracles and generator predictions for K3
//!   surfaces of Picard number two, double-cover presentations, the
//!   classification table and del Pezzo curve enumeration;
//! * [`fixtures`]: the builtin fans and reference matrices.
//!
//! All arithmetic is arbitrary precision.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod cones;
pub mod error;
pub mod fixtures;
pub mod graded;
pub mod intlin;
pub mod k3;
pub mod toric;

pub use error::{Error, Result};
pub use intlin::{ClassVector, IntMatrix};
