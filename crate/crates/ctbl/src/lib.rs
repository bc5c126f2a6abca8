//! Computational group theory toolkit.
//!
//! The crate provides the exact-arithmetic machinery needed to build and
//! verify character tables of finite groups from matrix and permutation
//! representations:
//!
//! * [`slp`] — straight-line programs and free-group words over named
//!   generators;
//! * [`ff`] — dense linear algebra over small finite fields GF(p^k), with
//!   bit-packed GF(2) kernels;
//! * [`meataxe`] — permutations and module operations: standard bases,
//!   conjugacy certificates, spinning, composition factors;
//! * [`cyclo`] — exact cyclotomic arithmetic over the Zumbroich basis;
//! * [`chartab`] — character tables, class functions, induction, lattice
//!   reduction, fusion and power-map inference;
//! * [`classify`] — a measurement-driven decision engine that names the
//!   conjugacy class of a matrix-group element;
//! * [`oracle`] — a brute-force permutation-group engine used to
//!   cross-check everything at small scale;
//! * [`io`] — text codecs for matrices, permutations, programs, tables and
//!   class functions.

pub mod error;
pub use error::{Error, Result};

mod arith;

pub mod chartab;
pub mod cyclo;
pub mod ff;
pub mod fixtures;
pub mod meataxe;
pub mod oracle;
pub mod slp;

mod threads;
pub(crate) use threads::thread_budget;
