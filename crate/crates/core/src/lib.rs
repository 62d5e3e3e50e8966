//! Exact q- and ψ-extended Stirling numbers, Bell numbers and Dobinski-type
//! series, with a harness that checks the identities relating them.
//!
//! Everything is computed over exact rationals. The main entry points:
//!
//! - [`exactnum`]: rationals, polynomials, truncated series, Newton bases
//! - [`psi`]: the sequences `n ↦ n_ψ` (classical, q-Gauss, custom)
//! - [`stirling`]: triangles for every Stirling-like family
//! - [`umbral`]: ψ- and q-derivatives, dilation, the Rota functional
//! - [`bell`]: extended Bell numbers, ε-weights, truncated Dobinski sums
//! - [`harness`]: the identity registry and its JSON ledger
//!
//! Runnable walkthroughs live under `examples/`.

pub mod bell;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod harness;
pub mod oracle;
pub mod psi;
pub mod stirling;
pub mod umbral;

pub use error::{Error, Result};
pub use exactnum::{rat, Poly, Rational, TruncatedSeries};
pub use psi::{PsiFamily, PsiSequence};
pub use stirling::{Family, Triangle};
