//! Recurrence quantification analysis (RQA) for scalar time series, with
//! automatic selection of the three recurrence-plot parameters:
//!
//! - the embedding delay, from the first local minimum of the mutual
//!   information ([`embedding::mutual_information`], [`embedding::select_delay`]);
//! - the embedding dimension, from Cao's E1/E2 curves
//!   ([`embedding::cao_dimensions`], [`embedding::select_dimension`]);
//! - the recurrence radius, from two surrogate-discrimination sweeps over a
//!   recurrence-rate grid ([`radius::method1`], [`radius::method2`]).
//!
//! The crate also ships the supporting pieces: CSV ingestion and summary
//! statistics for raw signals ([`signal`]), the phase-space machinery
//! ([`embedding`]), the five classical RQA variables computed from diagonal
//! and vertical line structures ([`rqa`]), and a fixed-step Lorenz generator
//! used for validation ([`systems`]).

pub mod embedding;
pub mod error;
pub mod radius;
pub mod rqa;
pub mod signal;
pub mod systems;
mod util;

pub use error::{Error, Result};
