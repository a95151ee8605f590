//! Adaptive Gauss-Kronrod quadrature (G7-K15) for complex-valued integrands
//! on a real interval, with QUADPACK-style error rescaling and bisection of
//! the worst interval.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Kronrod abscissae (positive half, outermost first). Entries at odd index
/// are the embedded 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

/// 7-point Gauss weights (for XGK[1], XGK[3], XGK[5]) and the center node.
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Tolerances and subdivision budget for adaptive quadrature.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            rel_tol: 1e-10,
            abs_tol: 1e-300,
            max_subdivisions: 256,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::Domain(format!(
                "quadrature rel_tol must be > 0, got {}",
                self.rel_tol
            )));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::Domain(
                "quadrature max_subdivisions must be >= 1".to_string(),
            ));
        }
        Ok(())
    }

    /// Same budget with a tightened relative tolerance (used to split a
    /// global tolerance across series orders).
    pub fn tightened(&self, factor: f64) -> QuadratureSpec {
        QuadratureSpec {
            rel_tol: (self.rel_tol * factor).max(1e-15),
            abs_tol: self.abs_tol * factor,
            max_subdivisions: self.max_subdivisions,
        }
    }
}

/// Integral estimate with its achieved-error report.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub abs_error: f64,
    pub subdivisions: usize,
}

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
}

/// One G7-K15 evaluation on [a, b]: returns (kronrod value, error estimate).
fn kronrod_panel<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let f_center = f(center);
    let mut res_k = WGK[7] * f_center;
    let mut res_g = WG[3] * f_center;
    let mut res_abs = WGK[7] * f_center.norm();

    let mut samples = [Complex64::new(0.0, 0.0); 15];
    samples[7] = f_center;

    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        samples[j] = f1;
        samples[14 - j] = f2;
        let sum = f1 + f2;
        res_k += WGK[j] * sum;
        res_abs += WGK[j] * (f1.norm() + f2.norm());
        if j % 2 == 1 {
            res_g += WG[j / 2] * sum;
        }
    }

    let mean = res_k * 0.5;
    let mut res_asc = WGK[7] * (f_center - mean).norm();
    for j in 0..7 {
        res_asc += WGK[j] * ((samples[j] - mean).norm() + (samples[14 - j] - mean).norm());
    }

    let value = res_k * half;
    res_abs *= half.abs();
    res_asc *= half.abs();

    // QUADPACK error rescaling.
    let mut err = ((res_k - res_g) * half).norm();
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (value, err)
}

/// Adaptively integrate `f` over [a, b] to the requested tolerances.
///
/// Bisects the interval with the largest error estimate until the summed
/// error satisfies `max(abs_tol, rel_tol * |integral|)`. Fails with the best
/// estimate attached once the subdivision budget is spent.
pub fn adaptive_quadrature<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult> {
    spec.validate()?;
    if !(a < b) {
        return Err(Error::Domain(format!(
            "quadrature interval must satisfy a < b, got [{a}, {b}]"
        )));
    }

    let (value, err) = kronrod_panel(&f, a, b);
    let mut panels = vec![Panel { a, b, value, err }];
    let mut subdivisions = 0usize;

    loop {
        let total: Complex64 = panels.iter().map(|p| p.value).sum();
        let total_err: f64 = panels.iter().map(|p| p.err).sum();
        let target = spec.abs_tol.max(spec.rel_tol * total.norm());
        if total_err <= target {
            return Ok(QuadratureResult {
                value: total,
                abs_error: total_err,
                subdivisions,
            });
        }
        if subdivisions >= spec.max_subdivisions {
            return Err(Error::QuadratureNonConvergence {
                best: total,
                abs_error: total_err,
                subdivisions,
            });
        }

        // Split the worst panel; ties resolved by the left endpoint so the
        // refinement order is deterministic.
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|(_, p), (_, q)| {
                p.err
                    .partial_cmp(&q.err)
                    .unwrap()
                    .then(q.a.partial_cmp(&p.a).unwrap())
            })
            .map(|(i, _)| i)
            .expect("at least one panel");
        let Panel { a, b, .. } = panels.swap_remove(worst);
        let mid = 0.5 * (a + b);
        let (v1, e1) = kronrod_panel(&f, a, mid);
        let (v2, e2) = kronrod_panel(&f, mid, b);
        panels.push(Panel {
            a,
            b: mid,
            value: v1,
            err: e1,
        });
        panels.push(Panel {
            a: mid,
            b,
            value: v2,
            err: e2,
        });
        subdivisions += 1;
    }
}

/// Convenience wrapper for real integrands.
pub fn adaptive_quadrature_real<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<(f64, f64)> {
    let r = adaptive_quadrature(|x| Complex64::new(f(x), 0.0), a, b, spec)?;
    Ok((r.value.re, r.abs_error))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn sine_over_half_period() {
        let r = adaptive_quadrature(
            |x| Complex64::new(x.sin(), 0.0),
            0.0,
            PI,
            &QuadratureSpec::default(),
        )
        .unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-12);
        assert!(r.value.im.abs() < 1e-14);
    }

    #[test]
    fn monomial() {
        let (v, _) =
            adaptive_quadrature_real(|x| x * x, 0.0, 1.0, &QuadratureSpec::default()).unwrap();
        assert_relative_eq!(v, 1.0 / 3.0, max_relative = 1e-13);
    }

    #[test]
    fn complex_radial_integrand_vs_dense_trapezoid() {
        // integral over [0, a] of r^2 |j_2(k r)/(k r)|^2 dr with k = (2+0.1i)/a,
        // cross-checked against a 10^6-point trapezoid oracle.
        use crate::specfun::bessel::sph_bessel_j;
        let a = 1.0;
        let k = Complex64::new(2.0, 0.1);
        let f = |r: f64| {
            if r == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            let z = k * r;
            let j = sph_bessel_j(2, z).unwrap();
            Complex64::new(r * r * (j / z).norm_sqr(), 0.0)
        };
        let r = adaptive_quadrature(f, 0.0, a, &QuadratureSpec::default()).unwrap();

        let n = 1_000_000usize;
        let h = a / n as f64;
        let mut acc = 0.5 * (f(0.0).re + f(a).re);
        for i in 1..n {
            acc += f(i as f64 * h).re;
        }
        let oracle = acc * h;
        assert_relative_eq!(r.value.re, oracle, max_relative = 1e-8);
    }

    #[test]
    fn legendre_orthogonality_via_quadrature() {
        // Both angular identities used by the multipole reduction:
        //   int P_n P_n' sin t dt = 2/(2n+1) delta_nn'
        //   int dP_n/dt dP_n'/dt sin t dt = 2n(n+1)/(2n+1) delta_nn'
        use crate::specfun::legendre::{legendre_dp_dtheta_seq, legendre_p_seq};
        // Off-diagonal integrals are exactly zero: an absolute floor is the
        // only meaningful convergence target there.
        let spec = QuadratureSpec {
            rel_tol: 1e-12,
            abs_tol: 1e-12,
            max_subdivisions: 256,
        };
        let nmax = 30usize;
        for n in (0..=nmax).step_by(6) {
            for m in (0..=nmax).step_by(6) {
                let (vp, _) = adaptive_quadrature_real(
                    |t| {
                        let p = legendre_p_seq(nmax, t.cos());
                        p[n] * p[m] * t.sin()
                    },
                    0.0,
                    PI,
                    &spec,
                )
                .unwrap();
                let expect_p = if n == m { 2.0 / (2.0 * n as f64 + 1.0) } else { 0.0 };
                assert!((vp - expect_p).abs() < 1e-10, "P orth n={n} m={m}: {vp}");

                let (vd, _) = adaptive_quadrature_real(
                    |t| {
                        let d = legendre_dp_dtheta_seq(nmax, t);
                        d[n] * d[m] * t.sin()
                    },
                    0.0,
                    PI,
                    &spec,
                )
                .unwrap();
                let expect_d = if n == m {
                    2.0 * (n * (n + 1)) as f64 / (2.0 * n as f64 + 1.0)
                } else {
                    0.0
                };
                assert!((vd - expect_d).abs() < 1e-10, "dP orth n={n} m={m}: {vd}");
            }
        }
    }

    #[test]
    fn nonconvergence_carries_best_estimate() {
        // An integrable endpoint singularity with an absurd budget.
        let spec = QuadratureSpec {
            rel_tol: 1e-14,
            abs_tol: 0.0,
            max_subdivisions: 3,
        };
        let err = adaptive_quadrature(
            |x| Complex64::new(x.max(1e-300).powf(-0.5), 0.0),
            0.0,
            1.0,
            &spec,
        )
        .unwrap_err();
        match err {
            Error::QuadratureNonConvergence { best, .. } => {
                // Best estimate should be in the vicinity of the true value 2.
                assert!((best.re - 2.0).abs() < 0.5, "best {best}");
            }
            other => panic!("expected QuadratureNonConvergence, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_interval() {
        assert!(adaptive_quadrature(
            |_| Complex64::new(1.0, 0.0),
            1.0,
            1.0,
            &QuadratureSpec::default()
        )
        .is_err());
    }
}
