//! Green-tensor electrodynamics of a two-level atom near a lossy dielectric
//! nanosphere.
//!
//! The library computes, from first principles, the partial local density of
//! photonic states (PLDOS) seen by a radially oriented dipole outside a
//! dispersive sphere, the thermal transition rates of the atom when sphere
//! and environment are held at different temperatures, the closed-form
//! reduced density-matrix evolution, and the geometric phase acquired along
//! one quasicyclic period, together with its medium- and non-equilibrium
//! induced corrections. A configuration-driven sweep runner evaluates the
//! pipeline over frequency/distance/temperature grids and emits
//! deterministic CSV tables and optional SVG plots.

pub mod constants;
pub mod error;
pub mod specfun;

pub use error::{Error, Result};
