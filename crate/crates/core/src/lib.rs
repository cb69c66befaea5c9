//! Frobenius and classical probable prime tests over arbitrary-precision
//! integers.
//!
//! The crate is organized in four layers:
//!
//! * [`ring`] — polynomial arithmetic over `Z/nZ`: canonical polynomials,
//!   modular exponentiation and composition, the greatest common monic
//!   divisor (which doubles as a factor-finding device when `n` is
//!   composite), Jacobi symbols and integer discriminants.
//! * [`frobenius`] — the Frobenius and strong Frobenius probable prime
//!   tests, built from a precheck, a distinct-degree factorization step, a
//!   Frobenius step, a Jacobi step and a square root step, all emitting
//!   auditable certificates. A quadratic fast path avoids computing
//!   `x^(n^2)` for degree-2 polynomials.
//! * [`classic`] — the classical tests the Frobenius test subsumes:
//!   Fermat, Euler, strong, Lucas, strong Lucas, extra strong Lucas,
//!   Lehmer, Perrin-signature and Szekeres symmetric-function tests.
//! * [`harness`] — a compositeness ground-truth oracle, a pseudoprime
//!   range search, cross-validation suites for the implications between
//!   test families, and line-oriented result emission. The `froblab`
//!   binary exposes all of it on the command line.
//!
//! Probable prime tests never prove primality: every odd prime passes
//! (when the test's admissibility condition holds), and composites that
//! pass are pseudoprimes for that test.

pub mod classic;
pub mod frobenius;
pub mod harness;
pub mod ring;

pub use ring::{IntPoly, ModPoly, Modulus};
