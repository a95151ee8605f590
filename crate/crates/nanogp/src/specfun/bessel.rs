//! Spherical Bessel and Hankel functions of complex argument.
//!
//! `j_n` is evaluated by Miller's downward recurrence normalized against the
//! closed forms of `j_0`/`j_1` (downward is the stable direction for the
//! recessive solution), with an ascending power series taking over for small
//! arguments. `h^(1)_n` is evaluated by upward recurrence from its closed
//! seeds, which is stable because the Hankel function is the dominant
//! solution for growing order. See Abramowitz & Stegun ch. 10.
//!
//! The Riccati-type derivative used throughout the multipole formulas is
//!
//! ```text
//! Dj_n(z) = (1/z) d(z j_n(z))/dz = j_{n-1}(z) - n j_n(z)/z
//! ```
//!
//! and analogously for h, with j_{-1}(z) = cos(z)/z and h_{-1}(z) = e^{iz}/z.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Magnitude threshold at which the downward recurrence is rescaled.
const RESCALE_AT: f64 = 1e250;
/// log10 of the largest tolerated dynamic range of the recurrence.
const RANGE_GUARD_LOG10: f64 = 280.0;
/// Below this |z| the ascending series is used for every order.
const SERIES_CUTOFF: f64 = 0.5;

fn i_times(z: Complex64) -> Complex64 {
    Complex64::new(-z.im, z.re)
}

/// j_n(z) by the ascending series z^n/(2n+1)!! sum_k (-z^2/2)^k / (k! ...).
///
/// Both the leading coefficient and the correction series are benign for
/// |z| < 1: every leading factor |z|/(2k+1) is < 1, so the prefactor can only
/// underflow, never overflow.
fn series_j(n: usize, z: Complex64) -> Result<Complex64> {
    let mut lead = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        lead *= z / (2.0 * k as f64 + 1.0);
    }
    if n > 0 && lead == Complex64::new(0.0, 0.0) && z != Complex64::new(0.0, 0.0) {
        // True value underflows f64 entirely.
        return Err(Error::OrderRange {
            order: n,
            z_abs: z.norm(),
        });
    }
    let z2h = -0.5 * z * z;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 1..60 {
        term *= z2h / ((k as f64) * (2 * n + 2 * k + 1) as f64);
        sum += term;
        if term.norm() <= 1e-18 * sum.norm() {
            break;
        }
    }
    Ok(lead * sum)
}

/// All of j_0(z) ... j_{n_max}(z).
///
/// `z = 0` is handled as the limit (j_0 = 1, higher orders 0). Returns an
/// `OrderRange` error when the downward recurrence would span a dynamic range
/// beyond ~1e280.
pub fn sph_bessel_j_seq(n_max: usize, z: Complex64) -> Result<Vec<Complex64>> {
    if z == Complex64::new(0.0, 0.0) {
        let mut out = vec![Complex64::new(0.0, 0.0); n_max + 1];
        out[0] = Complex64::new(1.0, 0.0);
        return Ok(out);
    }
    if z.norm() < SERIES_CUTOFF {
        return (0..=n_max).map(|n| series_j(n, z)).collect();
    }

    let j0 = z.sin() / z;
    let j1 = z.sin() / (z * z) - z.cos() / z;
    if n_max == 0 {
        return Ok(vec![j0]);
    }

    let zn = z.norm();
    let start = n_max.max(zn.ceil() as usize) + 25 + (14.0 * zn.cbrt()).ceil() as usize;

    let mut out = vec![Complex64::new(0.0, 0.0); n_max + 1];
    let mut f_up = Complex64::new(0.0, 0.0); // f_{k+1}
    let mut f = Complex64::new(1.0, 0.0); // f_k, arbitrary seed
    let mut rescales = 0u32;
    for k in (0..start).rev() {
        let f_down = (2.0 * (k as f64 + 1.0) + 1.0) / z * f - f_up;
        f_up = f;
        f = f_down;
        if k <= n_max {
            out[k] = f;
        }
        if f.norm() > RESCALE_AT {
            let s = 1.0 / RESCALE_AT;
            f *= s;
            f_up *= s;
            for v in out.iter_mut() {
                *v *= s;
            }
            rescales += 1;
        }
    }
    let dyn_log = 250.0 * rescales as f64 + out[0].norm().log10();
    if dyn_log > RANGE_GUARD_LOG10 {
        return Err(Error::OrderRange {
            order: n_max,
            z_abs: zn,
        });
    }

    // Normalize against whichever closed-form seed is better conditioned.
    // The unnormalized values can exceed 1e154, where a direct complex
    // division overflows its |denominator|^2; divide out the magnitude first.
    let (anchor, closed) = if j0.norm() >= j1.norm() { (0, j0) } else { (1, j1) };
    let inv_mag = 1.0 / out[anchor].norm();
    if !inv_mag.is_finite() {
        return Err(Error::OrderRange {
            order: n_max,
            z_abs: zn,
        });
    }
    let scale = closed / (out[anchor] * inv_mag);
    for v in out.iter_mut() {
        *v = (*v * inv_mag) * scale;
    }
    Ok(out)
}

/// j_n(z).
pub fn sph_bessel_j(n: usize, z: Complex64) -> Result<Complex64> {
    Ok(sph_bessel_j_seq(n, z)?[n])
}

/// All of h^(1)_0(z) ... h^(1)_{n_max}(z), by upward recurrence from
/// h_0 = -i e^{iz}/z and h_1 = -e^{iz}(z + i)/z^2.
pub fn sph_hankel1_seq(n_max: usize, z: Complex64) -> Result<Vec<Complex64>> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain(
            "sph_hankel1 is singular at z = 0".to_string(),
        ));
    }
    let eiz = i_times(z).exp();
    let h0 = -i_times(eiz) / z;
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(h0);
    if n_max >= 1 {
        out.push(-eiz * (z + Complex64::new(0.0, 1.0)) / (z * z));
    }
    for k in 1..n_max {
        let next = (2.0 * k as f64 + 1.0) / z * out[k] - out[k - 1];
        if next.norm() > 1e280 {
            return Err(Error::OrderRange {
                order: k + 1,
                z_abs: z.norm(),
            });
        }
        out.push(next);
    }
    Ok(out)
}

/// h^(1)_n(z).
pub fn sph_hankel1(n: usize, z: Complex64) -> Result<Complex64> {
    Ok(sph_hankel1_seq(n, z)?[n])
}

/// Dj_n(z) = (1/z) d(z j_n(z))/dz for n = 0..=n_max.
pub fn riccati_dj_seq(n_max: usize, z: Complex64) -> Result<Vec<Complex64>> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain(
            "riccati derivative is singular at z = 0".to_string(),
        ));
    }
    let j = sph_bessel_j_seq(n_max, z)?;
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(z.cos() / z); // j_{-1}(z)
    for n in 1..=n_max {
        out.push(j[n - 1] - (n as f64) * j[n] / z);
    }
    Ok(out)
}

/// Dj_n(z).
pub fn riccati_dj(n: usize, z: Complex64) -> Result<Complex64> {
    Ok(riccati_dj_seq(n, z)?[n])
}

/// Dh_n(z) = (1/z) d(z h^(1)_n(z))/dz for n = 0..=n_max.
pub fn riccati_dh_seq(n_max: usize, z: Complex64) -> Result<Vec<Complex64>> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain(
            "riccati derivative is singular at z = 0".to_string(),
        ));
    }
    let h = sph_hankel1_seq(n_max, z)?;
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(i_times(z).exp() / z); // h_{-1}(z)
    for n in 1..=n_max {
        out.push(h[n - 1] - (n as f64) * h[n] / z);
    }
    Ok(out)
}

/// Dh_n(z).
pub fn riccati_dh(n: usize, z: Complex64) -> Result<Complex64> {
    Ok(riccati_dh_seq(n, z)?[n])
}
