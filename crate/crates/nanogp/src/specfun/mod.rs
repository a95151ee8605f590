//! Special functions underlying the multipole expansions: complex-argument
//! spherical Bessel/Hankel functions with their Riccati-type derivatives,
//! Legendre polynomials, and adaptive Gauss-Kronrod quadrature.
//!
//! All functions are pure and reentrant.

pub mod bessel;
pub mod legendre;
pub mod quadrature;

pub use bessel::{
    riccati_dh, riccati_dh_seq, riccati_dj, riccati_dj_seq, sph_bessel_j, sph_bessel_j_seq,
    sph_hankel1, sph_hankel1_seq,
};
pub use legendre::{legendre_dp_dtheta, legendre_dp_dtheta_seq, legendre_p, legendre_p_seq};
pub use quadrature::{
    adaptive_quadrature, adaptive_quadrature_real, QuadratureResult, QuadratureSpec,
};
