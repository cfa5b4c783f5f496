pub mod cli;
pub mod counterexample;
pub mod error;
pub mod greedy;
pub mod lemmas;
pub mod rational;
pub mod report;
pub mod underapprox;

pub use error::{Error, Result};
pub use rational::Rational;
pub use report::VerificationReport;
