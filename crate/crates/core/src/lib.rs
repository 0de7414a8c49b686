//! Simulation and evaluation harness for behavioral operations-management
//! lab experiments.

pub mod error;
pub mod sampling;
pub mod stats;

pub use error::Error;
pub use sampling::SamplingConfig;
