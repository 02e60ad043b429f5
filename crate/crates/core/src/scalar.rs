//! Exact scalars. Every coordinate in the crate is a reduced big rational.

use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn sign(v: &Scalar) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_scalar(v: &Scalar) -> String {
    v.to_string()
}

pub fn to_f64(v: &Scalar) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// Decimal rendering with `digits` significant digits, trailing zeros trimmed.
pub fn format_decimal(v: &Scalar, digits: usize) -> String {
    let f = to_f64(v);
    if f == 0.0 || !f.is_finite() {
        return "0".to_string();
    }
    let magnitude = f.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).clamp(0, 30) as usize;
    let mut s = format!("{:.*}", decimals, f);
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}
