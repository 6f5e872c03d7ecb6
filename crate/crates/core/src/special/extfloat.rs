//! Extended-exponent floating point: a f64 mantissa with a separate i64
//! binary exponent. Guards the wave-function recurrences against
//! underflow deep in the exponential tail (the start values there are of
//! size `exp(-x^2/2)` with `x^2/2` in the thousands).

/// Value `m * 2^e` with `|m|` normalized into `[1, 2)` (or exactly zero).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtF64 {
    m: f64,
    e: i64,
}

/// Split `x` into `(mantissa, exponent)` with mantissa in `[1, 2)`.
fn frexp1(x: f64) -> (f64, i64) {
    debug_assert!(x.is_finite() && x != 0.0);
    let bits = x.to_bits();
    let raw_exp = ((bits >> 52) & 0x7ff) as i64;
    if raw_exp == 0 {
        // Subnormal: rescale into the normal range first.
        let (m, e) = frexp1(x * f64::powi(2.0, 120));
        return (m, e - 120);
    }
    let e = raw_exp - 1023;
    let m = f64::from_bits((bits & !(0x7ffu64 << 52)) | (1023u64 << 52));
    (m, e)
}

impl ExtF64 {
    pub const ZERO: ExtF64 = ExtF64 { m: 0.0, e: 0 };

    pub fn new(x: f64) -> Self {
        if x == 0.0 {
            return Self::ZERO;
        }
        let (m, e) = frexp1(x);
        ExtF64 { m, e }
    }

    /// Value `exp(ln_value)` without ever forming the unscaled number.
    pub fn from_ln(ln_value: f64) -> Self {
        let log2 = ln_value / std::f64::consts::LN_2;
        let e = log2.floor();
        ExtF64 { m: (log2 - e).exp2(), e: e as i64 }.normalized()
    }

    fn normalized(self) -> Self {
        if self.m == 0.0 {
            return Self::ZERO;
        }
        let (m, de) = frexp1(self.m);
        ExtF64 { m, e: self.e + de }
    }

    pub fn is_zero(&self) -> bool {
        self.m == 0.0
    }

    pub fn to_f64(&self) -> f64 {
        if self.m == 0.0 {
            return 0.0;
        }
        if self.e > 1024 {
            return if self.m > 0.0 { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        if self.e < -1080 {
            return 0.0;
        }
        self.m * f64::powi(2.0, self.e as i32)
    }

    /// Natural log of the absolute value.
    pub fn ln_abs(&self) -> f64 {
        debug_assert!(!self.is_zero());
        self.m.abs().ln() + self.e as f64 * std::f64::consts::LN_2
    }

    pub fn mul(self, rhs: ExtF64) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::ZERO;
        }
        ExtF64 { m: self.m * rhs.m, e: self.e + rhs.e }.normalized()
    }

    pub fn mul_f64(self, rhs: f64) -> Self {
        if self.is_zero() || rhs == 0.0 {
            return Self::ZERO;
        }
        let (rm, re) = frexp1(rhs);
        ExtF64 { m: self.m * rm, e: self.e + re }.normalized()
    }

    pub fn add(self, rhs: ExtF64) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (hi, lo) = if self.e >= rhs.e { (self, rhs) } else { (rhs, self) };
        let shift = hi.e - lo.e;
        if shift > 128 {
            return hi;
        }
        let m = hi.m + lo.m * f64::powi(2.0, -(shift as i32));
        ExtF64 { m, e: hi.e }.normalized()
    }

    pub fn sub(self, rhs: ExtF64) -> Self {
        self.add(rhs.neg())
    }

    pub fn neg(self) -> Self {
        ExtF64 { m: -self.m, e: self.e }
    }

    /// `self / rhs` as plain f64; both may be far outside f64 range as long
    /// as the ratio is representable.
    pub fn ratio(self, rhs: ExtF64) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let de = self.e - rhs.e;
        if de.abs() > 1000 {
            return if de > 0 { f64::INFINITY * (self.m / rhs.m).signum() } else { 0.0 };
        }
        (self.m / rhs.m) * f64::powi(2.0, de as i32)
    }
}
