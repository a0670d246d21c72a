//! Exact quantum link invariants of oriented framed tangles.
//!
//! Three independent engines evaluate the same slice diagrams: a skein
//! rewriting engine for HOMFLY-PT, the Reshetikhin–Turaev functor for
//! U_q(gl(m|n)), and ladder evaluation in the idempotented q-Schur algebra.

pub mod ring;
pub mod diagram;
pub mod skein;
pub mod quantumrep;
pub mod hecke;
pub mod schur;
mod uf;
