//! High-precision series oracles for the spherical Bessel family and the
//! Bose-Einstein occupation.
//!
//! Everything here evaluates ascending power series term by term in
//! double-double arithmetic, which is practical for orders n <= 100 and
//! moderate arguments (|z| <= 15 or so, where the largest intermediate term
//! stays far from f64 overflow). Results are returned rounded to f64 pairs.

use crate::{Dd, DdComplex};

const MAX_TERMS: usize = 400;
const TERM_TOL: f64 = 1e-36;

/// (2n+1)!! as a double-double.
fn odd_double_factorial(n: usize) -> Dd {
    let mut acc = Dd::ONE;
    for m in 0..=n {
        acc = acc.mul(Dd::from_f64((2 * m + 1) as f64));
    }
    acc
}

/// z^n by repeated multiplication.
fn powi(z: DdComplex, n: usize) -> DdComplex {
    let mut acc = DdComplex::ONE;
    for _ in 0..n {
        acc = acc.mul(z);
    }
    acc
}

/// 1/z.
fn recip(z: DdComplex) -> DdComplex {
    let denom = z.re.mul(z.re).add(z.im.mul(z.im));
    DdComplex {
        re: z.re.div(denom),
        im: z.im.neg().div(denom),
    }
}

/// Spherical Bessel function of the first kind by its ascending series,
///
/// ```text
/// j_n(z) = z^n / (2n+1)!! * sum_k (-z^2/2)^k / (k! (2n+3)(2n+5)...(2n+2k+1))
/// ```
///
/// Valid for |z| <= ~15; panics if the series fails to converge.
pub fn sph_bessel_j(n: usize, re: f64, im: f64) -> (f64, f64) {
    let z = DdComplex::from_f64(re, im);
    let z2h = z.mul(z).scale(-0.5);
    let mut term = powi(z, n).div_real(odd_double_factorial(n));
    let mut sum = term;
    let mut converged = false;
    for k in 1..MAX_TERMS {
        let denom = (k as f64) * ((2 * n + 2 * k + 1) as f64);
        term = term.mul(z2h).div_real(Dd::from_f64(denom));
        sum = sum.add(term);
        if term.mag_f64() <= TERM_TOL * sum.mag_f64().max(1e-300) {
            converged = true;
            break;
        }
    }
    assert!(converged, "j_{n} series did not converge at z = {re}+{im}i");
    sum.to_f64()
}

/// Spherical Bessel function of the second kind by its ascending series,
///
/// ```text
/// y_n(z) = -(2n-1)!!/z^(n+1) * sum_k (-z^2/2)^k / (k! (1-2n)(3-2n)...(2k-1-2n))
/// ```
pub fn sph_bessel_y(n: usize, re: f64, im: f64) -> (f64, f64) {
    let z = DdComplex::from_f64(re, im);
    let z2h = z.mul(z).scale(-0.5);
    let dfac = if n == 0 {
        Dd::ONE
    } else {
        odd_double_factorial(n - 1)
    };
    let mut term = recip(powi(z, n + 1))
        .mul(DdComplex { re: dfac, im: Dd::ZERO })
        .scale(-1.0);
    let mut sum = term;
    let mut converged = false;
    for k in 1..MAX_TERMS {
        let factor = (k as f64) * ((2 * k - 1) as f64 - (2 * n) as f64);
        term = term.mul(z2h).div_real(Dd::from_f64(factor));
        sum = sum.add(term);
        if term.mag_f64() <= TERM_TOL * sum.mag_f64().max(1e-300) {
            converged = true;
            break;
        }
    }
    assert!(converged, "y_{n} series did not converge at z = {re}+{im}i");
    sum.to_f64()
}

/// h^(1)_n(z) = j_n(z) + i y_n(z), from the two series above.
pub fn sph_hankel1(n: usize, re: f64, im: f64) -> (f64, f64) {
    let (jr, ji) = sph_bessel_j(n, re, im);
    let (yr, yi) = sph_bessel_y(n, re, im);
    (jr - yi, ji + yr)
}

/// Central finite difference of (1/z) d(z j_n(z))/dz with step `h` along the
/// real axis, evaluated with the series j_n. Independent route to the
/// Riccati-type derivative.
pub fn riccati_dj_fd(n: usize, re: f64, im: f64, h: f64) -> (f64, f64) {
    let (jp_re, jp_im) = sph_bessel_j(n, re + h, im);
    let (jm_re, jm_im) = sph_bessel_j(n, re - h, im);
    let zp = DdComplex::from_f64(re + h, im).mul(DdComplex::from_f64(jp_re, jp_im));
    let zm = DdComplex::from_f64(re - h, im).mul(DdComplex::from_f64(jm_re, jm_im));
    let diff = zp.add(zm.scale(-1.0)).scale(1.0 / (2.0 * h));
    diff.mul(recip(DdComplex::from_f64(re, im))).to_f64()
}

/// Bose-Einstein occupation 1/(exp(x) - 1) at double-double precision, where
/// `x = hbar omega / (kB T)`.
pub fn bose_occupation(x: f64) -> f64 {
    assert!(x > 0.0);
    Dd::ONE.div(Dd::from_f64(x).exp_m1()).to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j0_matches_closed_form() {
        let (r, i) = sph_bessel_j(0, 1.0, 0.0);
        // 30-digit value of sin(1): 0.841470984807896506652502321630
        assert!((r - (1.0f64).sin()).abs() < 1e-16);
        assert!(i.abs() < 1e-30);
    }

    #[test]
    fn y0_matches_closed_form() {
        let (r, _) = sph_bessel_y(0, 2.0, 0.0);
        assert!((r - (-(2.0f64).cos() / 2.0)).abs() < 1e-16);
    }

    #[test]
    fn hankel_h0_closed_form() {
        // h0(x) = -i e^{ix}/x = sin(x)/x - i cos(x)/x
        let x: f64 = 1.7;
        let (hr, hi) = sph_hankel1(0, x, 0.0);
        assert!((hr - x.sin() / x).abs() < 1e-15);
        assert!((hi - (-x.cos() / x)).abs() < 1e-15);
    }

    #[test]
    fn cross_product_identity() {
        // j_{n+1}(x) y_n(x) - j_n(x) y_{n+1}(x) = 1/x^2
        let x: f64 = 3.3;
        for n in 0..6 {
            let (j1, _) = sph_bessel_j(n + 1, x, 0.0);
            let (j0, _) = sph_bessel_j(n, x, 0.0);
            let (y1, _) = sph_bessel_y(n + 1, x, 0.0);
            let (y0, _) = sph_bessel_y(n, x, 0.0);
            assert!((j1 * y0 - j0 * y1 - 1.0 / (x * x)).abs() < 1e-14);
        }
    }

    #[test]
    fn complex_argument_conjugate_symmetry() {
        let (r1, i1) = sph_bessel_j(4, 2.0, 0.7);
        let (r2, i2) = sph_bessel_j(4, 2.0, -0.7);
        assert!((r1 - r2).abs() < 1e-28);
        assert!((i1 + i2).abs() < 1e-28);
    }

    #[test]
    fn bose_at_log2_is_one() {
        let x = std::f64::consts::LN_2;
        assert!((bose_occupation(x) - 1.0).abs() < 1e-15);
    }
}
