pub mod claims;
pub mod ledger;
pub mod registry;
pub mod verdict;

pub use verdict::{Counterexample, IdentityVerdict, Verdict};
