//! Achievable secrecy rate regions of the two-user multiple access channel
//! with generalized feedback: two cooperating transmitters send confidential
//! messages to one receiver while a passive eavesdropper listens.
//!
//! The crate evaluates, numerically and deterministically:
//!
//! * the partial decode-and-forward secrecy region (rate splitting into
//!   cooperative and non-cooperative parts plus binning rates that saturate
//!   the eavesdropper), via an eight-variable constraint polytope projected
//!   onto `(R1, R2)` with a small built-in simplex solver ([`polytope`]);
//! * the full decode-and-forward region, secrecy sum rates, and the regular
//!   (no-secrecy) feedback region of the Gaussian model, swept over power
//!   splits ([`gaussian`]);
//! * the same regions for explicit finite-alphabet channels with sampled
//!   factored input laws ([`dm`]);
//! * the no-feedback wiretap, relay-eavesdropper, and virtual MISO special
//!   cases in closed form ([`reductions`]).
//!
//! All rates are in bits per channel use. Region sweeps are deterministic for
//! a fixed seed and grid; `SECRECY_REGIONS_THREADS` caps sweep parallelism
//! (0 or unset picks the available cores).
//!
//! # Example
//!
//! ```
//! use secrecy_regions::gaussian::{region_partial, GaussianChannel, SweepSpec};
//!
//! let ch = GaussianChannel::new(0.6, 0.6, 0.2, 0.1, 0.6, 0.6, 1.0, 1.0)?;
//! let spec = SweepSpec::new(7, 31)?;
//! let region = region_partial(&ch, &spec)?;
//! assert!(region.support(1.0, 1.0) > 0.25);
//! # Ok::<(), secrecy_regions::Error>(())
//! ```
//!
//! The `examples/` directory has one runnable program per capability; the
//! `secrecy-regions` binary exposes the same evaluators as subcommands.

pub mod cli;
pub mod dm;
mod error;
pub mod gaussian;
pub mod info;
pub mod output;
pub mod polytope;
mod pool;
pub mod reductions;
mod simplex;

pub use error::{Error, Result};
