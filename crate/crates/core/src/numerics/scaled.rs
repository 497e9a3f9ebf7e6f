//! Floating point numbers with a separate 64-bit binary exponent.
//!
//! Recurrence values for orthogonal polynomials grow like `e^{N Q}` and leave
//! the `f64` range long before `N = 10^5`. Keeping the exponent in an `i64`
//! makes products and sums exact up to mantissa rounding regardless of scale.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

const LN2_HI: f64 = 6.931_471_803_691_238_164_90e-01;
const LN2_LO: f64 = 1.908_214_929_270_587_700_02e-10;

/// `sign * mantissa * 2^exponent` with `mantissa` in `[1, 2)`, or exactly zero.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct ScaledReal {
    sign: i8,
    mantissa: f64,
    exponent: i64,
}

/// Splits a finite nonzero `|x|` into a mantissa in `[1, 2)` and a binary exponent.
fn split(x: f64) -> (f64, i64) {
    let bits = x.abs().to_bits();
    let biased = ((bits >> 52) & 0x7ff) as i64;
    if biased == 0 {
        let (m, e) = split(x * f64::from_bits((1023 + 64) << 52));
        return (m, e - 64);
    }
    let m = f64::from_bits((bits & ((1u64 << 52) - 1)) | (1023u64 << 52));
    (m, biased - 1023)
}

/// `2^e` as an `f64`, saturating to 0 or infinity.
fn pow2(e: i64) -> f64 {
    if e > 1023 {
        f64::INFINITY
    } else if e >= -1022 {
        f64::from_bits(((e + 1023) as u64) << 52)
    } else if e >= -1074 {
        f64::from_bits(1u64 << (e + 1074))
    } else {
        0.0
    }
}

/// `m * 2^e` without spurious intermediate overflow or underflow.
fn ldexp(m: f64, e: i64) -> f64 {
    if e > 1023 {
        let half = e / 2;
        return m * pow2(half) * pow2(e - half);
    }
    if e < -1022 {
        let half = e / 2;
        return m * pow2(half) * pow2(e - half);
    }
    m * pow2(e)
}

impl ScaledReal {
    pub const ZERO: ScaledReal = ScaledReal { sign: 0, mantissa: 0.0, exponent: 0 };
    pub const ONE: ScaledReal = ScaledReal { sign: 1, mantissa: 1.0, exponent: 0 };

    /// Normalizes an ordinary double. Non-finite inputs panic.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "ScaledReal::from_f64 called with {x}");
        if x == 0.0 {
            return Self::ZERO;
        }
        let (m, e) = split(x);
        ScaledReal { sign: if x > 0.0 { 1 } else { -1 }, mantissa: m, exponent: e }
    }

    /// Builds `x * 2^e` from any finite double `x`.
    pub fn from_parts(x: f64, e: i64) -> Self {
        let s = Self::from_f64(x);
        if s.sign == 0 {
            return s;
        }
        ScaledReal { exponent: s.exponent + e, ..s }
    }

    /// Builds a value from its stored fields, renormalizing if needed.
    pub fn from_fields(sign: i8, mantissa: f64, exponent: i64) -> Self {
        if sign == 0 || mantissa == 0.0 {
            return Self::ZERO;
        }
        Self::from_parts(sign.signum() as f64 * mantissa.abs(), exponent)
    }

    /// `e^x` for any finite `x`, with the integer part carried in the exponent.
    pub fn exp(x: f64) -> Self {
        let k = (x / std::f64::consts::LN_2).round();
        let r = (x - k * LN2_HI) - k * LN2_LO;
        Self::from_parts(r.exp(), k as i64)
    }

    /// `2^x` for any finite `x`.
    pub fn exp2(x: f64) -> Self {
        let k = x.floor();
        Self::from_parts((x - k).exp2(), k as i64)
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn mantissa(&self) -> f64 {
        self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn abs(self) -> Self {
        ScaledReal { sign: self.sign.abs(), ..self }
    }

    /// Converts back to `f64`, saturating to infinity or zero.
    pub fn to_f64(self) -> f64 {
        if self.sign == 0 {
            return 0.0;
        }
        self.sign as f64 * ldexp(self.mantissa, self.exponent)
    }

    /// `log2 |x|`; `-inf` for zero.
    pub fn log2_abs(self) -> f64 {
        if self.sign == 0 {
            return f64::NEG_INFINITY;
        }
        self.exponent as f64 + self.mantissa.log2()
    }

    /// `ln |x|`; `-inf` for zero.
    pub fn ln_abs(self) -> f64 {
        if self.sign == 0 {
            return f64::NEG_INFINITY;
        }
        self.exponent as f64 * std::f64::consts::LN_2 + self.mantissa.ln()
    }

    /// Square root of a nonnegative value.
    pub fn sqrt(self) -> Self {
        assert!(self.sign >= 0, "sqrt of negative ScaledReal");
        if self.sign == 0 {
            return self;
        }
        let (m, e) = if self.exponent.rem_euclid(2) == 0 {
            (self.mantissa, self.exponent)
        } else {
            (2.0 * self.mantissa, self.exponent - 1)
        };
        Self::from_parts(m.sqrt(), e / 2)
    }

    /// `|x|^p` carried through the exponent.
    pub fn powf_abs(self, p: f64) -> Self {
        if self.sign == 0 {
            return if p == 0.0 { Self::ONE } else { Self::ZERO };
        }
        let whole = self.exponent as f64 * p;
        let k = whole.floor();
        Self::from_parts(self.mantissa.powf(p) * (whole - k).exp2(), k as i64)
    }

    /// Multiplies by `2^k` exactly.
    pub fn ldexp(self, k: i64) -> Self {
        if self.sign == 0 {
            return self;
        }
        ScaledReal { exponent: self.exponent + k, ..self }
    }

    /// `|self - other| / |other|`, formed after aligning exponents.
    pub fn rel_diff(self, other: Self) -> f64 {
        if other.sign == 0 {
            return if self.sign == 0 { 0.0 } else { f64::INFINITY };
        }
        ((self - other) / other).to_f64().abs()
    }
}

impl From<f64> for ScaledReal {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl Neg for ScaledReal {
    type Output = Self;
    fn neg(self) -> Self {
        ScaledReal { sign: -self.sign, ..self }
    }
}

impl Mul for ScaledReal {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.sign == 0 || rhs.sign == 0 {
            return Self::ZERO;
        }
        let s = Self::from_f64(self.mantissa * rhs.mantissa);
        ScaledReal {
            sign: self.sign * rhs.sign,
            mantissa: s.mantissa,
            exponent: s.exponent + self.exponent + rhs.exponent,
        }
    }
}

impl Mul<f64> for ScaledReal {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self * Self::from_f64(rhs)
    }
}

impl Div for ScaledReal {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.sign != 0, "ScaledReal division by zero");
        if self.sign == 0 {
            return Self::ZERO;
        }
        let s = Self::from_f64(self.mantissa / rhs.mantissa);
        ScaledReal {
            sign: self.sign * rhs.sign,
            mantissa: s.mantissa,
            exponent: s.exponent + self.exponent - rhs.exponent,
        }
    }
}

impl Div<f64> for ScaledReal {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        self / Self::from_f64(rhs)
    }
}

impl Add for ScaledReal {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.sign == 0 {
            return rhs;
        }
        if rhs.sign == 0 {
            return self;
        }
        let (big, small) = if self.exponent >= rhs.exponent { (self, rhs) } else { (rhs, self) };
        let shift = big.exponent - small.exponent;
        if shift > 64 {
            return big;
        }
        let sum = big.sign as f64 * big.mantissa + small.sign as f64 * small.mantissa * pow2(-shift);
        Self::from_parts(sum, big.exponent)
    }
}

impl Sub for ScaledReal {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl PartialOrd for ScaledReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let d = *self - *other;
        Some(d.sign.cmp(&0))
    }
}

impl fmt::Display for ScaledReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return write!(f, "0");
        }
        let l10 = self.log2_abs() * std::f64::consts::LOG10_2;
        let e10 = l10.floor();
        let m10 = 10f64.powf(l10 - e10) * self.sign as f64;
        write!(f, "{m10:.15}e{}", e10 as i64)
    }
}
