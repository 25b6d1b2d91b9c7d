//! Link-level simulator and analysis toolkit for nonlinear power amplifiers
//! in a massive-MIMO OFDM downlink.
//!
//! The crate covers the full chain from channel generation through precoding,
//! OFDM modulation, PA nonlinearity and Bussgang decomposition, to
//! receiver-side signal/distortion accounting. On top of the simulator sit a
//! statistical victim-SDR model (truncated-GEV scaling of the theoretical
//! SDR), a small convolutional SDR regressor trained on channel correlation
//! features, and a distortion-aware per-user IBO allocator.
//!
//! The `mimodist` binary exposes the experiment pipeline (`simulate-sdr`,
//! `fit-gev`, `autocorr`, `dataset`, `train`, `eval`, `prune`, `allocate`,
//! `report`); see the crate README for the file formats it reads and writes.

pub mod allocation;
pub mod channel;
pub mod config;
pub mod error;
pub mod harness;
pub mod io;
pub mod linksim;
pub mod mlpredict;
pub mod rng;
pub mod rxmetrics;
pub mod statmodel;
pub mod txchain;

pub use error::{Error, Result};

/// Convert a linear power ratio to decibels.
pub fn to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

/// Convert decibels to a linear power ratio.
pub fn from_db(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}
