//! System-level simulator and analytic toolkit for dynamic-TDD macro-cell
//! networks with user-adaptive 3D beamforming.
//!
//! The crate builds a truncated tri-sectorized hexagonal network, realizes
//! per-TTI uplink/downlink direction draws and interferer placements, and
//! evaluates cross-link interference-to-signal ratios both by Monte Carlo
//! and through semi-analytic lattice series built on a self-contained
//! special-function kernel.

pub mod analytic;
pub mod antenna;
pub mod channel;
pub mod config;
pub mod error;
pub mod geometry;
pub mod montecarlo;
pub mod presets;
pub mod report;
pub mod scenario;
pub mod specfun;
pub mod validate;

pub use error::{Error, Result};
