//! Double-double reference arithmetic for test oracles.
//!
//! A [`Dd`] is an unevaluated sum `hi + lo` of two `f64`, carrying roughly 32
//! significant decimal digits. This crate exists so that tests can evaluate
//! slowly-converging series and closed forms at a working precision well
//! beyond `f64` and then compare the production path against the rounded
//! result. Nothing here is tuned for speed, and nothing here is meant to be
//! used outside of test code.

mod series;

pub use series::{bose_occupation, riccati_dj_fd, sph_bessel_j, sph_bessel_y, sph_hankel1};

/// Knuth two-sum: `a + b = s + e` exactly.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    let e = (a - (s - v)) + (b - v);
    (s, e)
}

/// Two-sum under the assumption `|a| >= |b|`.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Exact product via FMA: `a * b = p + e`.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

/// Double-double number `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Renormalized constructor from an unevaluated pair.
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, rhs: Dd) -> Dd {
        let (s1, e1) = two_sum(self.hi, rhs.hi);
        let (s2, e2) = two_sum(self.lo, rhs.lo);
        let (s1, t) = quick_two_sum(s1, e1 + s2);
        let (hi, lo) = quick_two_sum(s1, t + e2);
        Dd { hi, lo }
    }

    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn sub(self, rhs: Dd) -> Dd {
        self.add(rhs.neg())
    }

    pub fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul(Dd::from_f64(q1)));
        let q2 = r.hi / rhs.hi;
        let r = r.sub(rhs.mul(Dd::from_f64(q2)));
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd::new(hi, lo + q3)
    }

    pub fn scale(self, k: f64) -> Dd {
        self.mul(Dd::from_f64(k))
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    /// exp(x) by Taylor series with argument halving for |x| > 8.
    pub fn exp(self) -> Dd {
        let mut halvings = 0u32;
        let mut x = self;
        while x.hi.abs() > 8.0 {
            x = x.scale(0.5);
            halvings += 1;
            assert!(halvings < 64, "exp argument out of oracle range");
        }
        let mut sum = Dd::ONE;
        let mut term = Dd::ONE;
        for k in 1..200 {
            term = term.mul(x).div(Dd::from_f64(k as f64));
            sum = sum.add(term);
            if term.hi.abs() < 1e-40 * sum.hi.abs() {
                break;
            }
        }
        for _ in 0..halvings {
            sum = sum.mul(sum);
        }
        sum
    }

    /// expm1(x), accurate near zero.
    pub fn exp_m1(self) -> Dd {
        if self.hi.abs() > 0.5 {
            return self.exp().sub(Dd::ONE);
        }
        let mut sum = self;
        let mut term = self;
        for k in 2..100 {
            term = term.mul(self).div(Dd::from_f64(k as f64));
            sum = sum.add(term);
            if term.hi.abs() < 1e-40 * sum.hi.abs().max(1e-300) {
                break;
            }
        }
        sum
    }
}

/// Complex number with double-double components.
#[derive(Debug, Clone, Copy)]
pub struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub const ZERO: DdComplex = DdComplex {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };
    pub const ONE: DdComplex = DdComplex {
        re: Dd::ONE,
        im: Dd::ZERO,
    };

    pub fn from_f64(re: f64, im: f64) -> DdComplex {
        DdComplex {
            re: Dd::from_f64(re),
            im: Dd::from_f64(im),
        }
    }

    pub fn add(self, rhs: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.add(rhs.re),
            im: self.im.add(rhs.im),
        }
    }

    pub fn mul(self, rhs: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.mul(rhs.re).sub(self.im.mul(rhs.im)),
            im: self.re.mul(rhs.im).add(self.im.mul(rhs.re)),
        }
    }

    pub fn div_real(self, rhs: Dd) -> DdComplex {
        DdComplex {
            re: self.re.div(rhs),
            im: self.im.div(rhs),
        }
    }

    pub fn scale(self, k: f64) -> DdComplex {
        DdComplex {
            re: self.re.scale(k),
            im: self.im.scale(k),
        }
    }

    /// |z|, adequate for convergence checks (uses f64 hypot of hi parts).
    pub fn mag_f64(self) -> f64 {
        self.re.hi.hypot(self.im.hi)
    }

    pub fn to_f64(self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}
