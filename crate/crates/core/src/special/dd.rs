//! Minimal double-double arithmetic (an unevaluated sum `hi + lo` of two
//! f64) for the compensated Maclaurin summation in the Airy evaluator.
//! Roughly 32 significant digits; only the handful of operations the
//! series loop needs.

#[derive(Clone, Copy, Debug)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn new(hi: f64, lo: f64) -> Self {
        let (s, e) = two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    pub fn add(self, rhs: Dd) -> Dd {
        let (s1, e1) = two_sum(self.hi, rhs.hi);
        let e = e1 + self.lo + rhs.lo;
        Dd::new(s1, e)
    }

    pub fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + self.hi * rhs.lo + self.lo * rhs.hi;
        Dd::new(p, e)
    }

    pub fn mul_f64(self, rhs: f64) -> Dd {
        let (p, e) = two_prod(self.hi, rhs);
        Dd::new(p, e + self.lo * rhs)
    }

    pub fn div_f64(self, rhs: f64) -> Dd {
        let q1 = self.hi / rhs;
        let (p, e) = two_prod(q1, rhs);
        let r = (self.hi - p - e + self.lo) / rhs;
        Dd::new(q1, r)
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> f64 {
        self.to_f64().abs()
    }
}
