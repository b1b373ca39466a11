//! Computational toolkit for large values of quadratic character sums.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: Kronecker symbols, fundamental discriminants, squarefree
//!   decompositions, Möbius, prime tables.
//! - [`char_sums`]: exact prefix sums of `χ_d` and the extremal search over a
//!   dyadic window of discriminants.
//! - [`polya`]: Gauss sums, the truncated Pólya Fourier expansion and the
//!   cosine/sine decomposition `C_d(z)`, `S_d(z)`.
//! - [`discriminant_avg`]: averages of `χ_d(n)` over fundamental
//!   discriminants against their square-indicator main term.
//! - [`resonance`]: resonator coefficients, the moments `M₁`, `M₂`, the
//!   weighted-mean lower bound for `max C_d(z)²` and the quadruple-sum
//!   evaluator that drives it.
//! - [`report`]: CSV/JSON emission with a fixed column order.
//!
//! All parallel work runs on the ambient rayon pool. Integer reductions are
//! exact and floating-point reductions are performed in a fixed order after
//! the parallel map, so results do not depend on the thread count.

pub mod arith;
pub mod char_sums;
pub mod discriminant_avg;
mod error;
pub mod numeric;
pub mod polya;
pub mod report;
pub mod resonance;

pub use arith::{FundamentalDiscriminant, PrimeTable, SquarefreeDecomposition};
pub use error::{Error, Result};
