//! Minimal double-double arithmetic (unevaluated sum of two f64).
//!
//! The Airy Maclaurin series loses up to e^{2|ζ|} ≈ 16 decimal digits to
//! cancellation near |z| = 9; accumulating the auxiliary series f, g in
//! ~31-digit double-double keeps the switch radius of the series branch at 9
//! with ≤ 1e-14 relative error. Only the handful of operations the series
//! needs are implemented.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, b: Dd) -> Dd {
        // accurate (ieee) double-double addition; the sloppy variant loses
        // precision exactly where the Airy series cancels hardest
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let s2 = s2 + t1;
        let (s1, s2) = fast_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = fast_two_sum(s1, s2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, b: Dd) -> Dd {
        self.add(Dd { hi: -b.hi, lo: -b.lo })
    }

    #[inline]
    pub fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + self.hi * b.lo + self.lo * b.hi;
        let (hi, lo) = fast_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (hi, lo) = fast_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Dd {
        let q1 = self.hi / b;
        let (p, e) = two_prod(q1, b);
        let r = (self.hi - p - e + self.lo) / b;
        let (hi, lo) = fast_two_sum(q1, r);
        Dd { hi, lo }
    }

    #[inline]
    pub fn abs(self) -> f64 {
        self.to_f64().abs()
    }
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    let e = (a - (s - v)) + (b - v);
    (s, e)
}

#[inline]
fn fast_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b| in exact arithmetic; the surrounding code
    // always calls it with the dominant term first
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

/// Complex number with double-double components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ZERO: Cdd = Cdd { re: Dd::ZERO, im: Dd::ZERO };

    #[inline]
    pub fn from_c64(z: num_complex::Complex64) -> Cdd {
        Cdd { re: Dd::from_f64(z.re), im: Dd::from_f64(z.im) }
    }

    #[inline]
    pub fn from_dd(re: Dd) -> Cdd {
        Cdd { re, im: Dd::ZERO }
    }

    #[inline]
    pub fn to_c64(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn add(self, b: Cdd) -> Cdd {
        Cdd { re: self.re.add(b.re), im: self.im.add(b.im) }
    }

    #[inline]
    pub fn mul(self, b: Cdd) -> Cdd {
        Cdd {
            re: self.re.mul(b.re).sub(self.im.mul(b.im)),
            im: self.re.mul(b.im).add(self.im.mul(b.re)),
        }
    }

    #[inline]
    pub fn mul_dd(self, b: Dd) -> Cdd {
        Cdd { re: self.re.mul(b), im: self.im.mul(b) }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Cdd {
        Cdd { re: self.re.mul_f64(b), im: self.im.mul_f64(b) }
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Cdd {
        Cdd { re: self.re.div_f64(b), im: self.im.div_f64(b) }
    }

    #[inline]
    pub fn norm_f64(self) -> f64 {
        self.to_c64().norm()
    }
}
