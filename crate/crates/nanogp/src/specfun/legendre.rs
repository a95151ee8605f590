//! Legendre polynomials P_n(x) and the angular derivative dP_n(cos t)/dt.

/// P_0(x) ... P_{n_max}(x) by the Bonnet recurrence.
///
/// Panics if |x| > 1 (the callers integrate over cos of a polar angle, so the
/// domain is a hard precondition rather than a recoverable error).
pub fn legendre_p_seq(n_max: usize, x: f64) -> Vec<f64> {
    assert!(x.abs() <= 1.0, "legendre_p requires |x| <= 1, got {x}");
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(1.0);
    if n_max >= 1 {
        out.push(x);
    }
    for n in 1..n_max {
        let next = ((2 * n + 1) as f64 * x * out[n] - n as f64 * out[n - 1]) / (n + 1) as f64;
        out.push(next);
    }
    out
}

/// P_n(x).
pub fn legendre_p(n: usize, x: f64) -> f64 {
    legendre_p_seq(n, x)[n]
}

/// dP_n(cos t)/dt for n = 0..=n_max.
///
/// Uses (1 - x^2) P_n'(x) = n (P_{n-1}(x) - x P_n(x)) so that one sin(theta)
/// cancels analytically; the remaining division by sin(theta) is benign
/// because the numerator vanishes like theta^2 at the poles, where the
/// derivative itself is exactly zero.
pub fn legendre_dp_dtheta_seq(n_max: usize, theta: f64) -> Vec<f64> {
    assert!(
        (0.0..=std::f64::consts::PI).contains(&theta),
        "theta must lie in [0, pi], got {theta}"
    );
    let s = theta.sin();
    if s == 0.0 {
        return vec![0.0; n_max + 1];
    }
    let x = theta.cos();
    let p = legendre_p_seq(n_max, x);
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(0.0);
    for n in 1..=n_max {
        out.push(-(n as f64) * (p[n - 1] - x * p[n]) / s);
    }
    out
}

/// dP_n(cos t)/dt.
pub fn legendre_dp_dtheta(n: usize, theta: f64) -> f64 {
    legendre_dp_dtheta_seq(n, theta)[n]
}
