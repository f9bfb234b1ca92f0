use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

static FLOAT_TOLERANCE: AtomicU64 = AtomicU64::new(f64::to_bits(1e-9));

/// Absolute tolerance used by the complex-float scalar for zero tests.
pub fn float_tolerance() -> f64 {
    f64::from_bits(FLOAT_TOLERANCE.load(Ordering::Relaxed))
}

pub fn set_float_tolerance(tol: f64) {
    FLOAT_TOLERANCE.store(tol.abs().to_bits(), Ordering::Relaxed);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    Rational,
    Gaussian,
    ComplexFloat,
    Laurent,
}

impl ScalarKind {
    pub fn is_exact(self) -> bool {
        !matches!(self, ScalarKind::ComplexFloat)
    }

    pub fn name(self) -> &'static str {
        match self {
            ScalarKind::Rational => "rational",
            ScalarKind::Gaussian => "gaussian",
            ScalarKind::ComplexFloat => "complex-float",
            ScalarKind::Laurent => "laurent",
        }
    }
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScalarKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rational" => Ok(ScalarKind::Rational),
            "gaussian" => Ok(ScalarKind::Gaussian),
            "complex-float" => Ok(ScalarKind::ComplexFloat),
            "laurent" => Ok(ScalarKind::Laurent),
            other => Err(format!("unknown scalar kind `{other}`")),
        }
    }
}

/// Ring element usable as a frieze entry.
///
/// Every kind is closed under the ring operations; division is partial and
/// exact (`checked_div` returns `None` for a zero or non-exact divisor).
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    const KIND: ScalarKind;

    fn from_i64(v: i64) -> Self;

    fn checked_div(&self, rhs: &Self) -> Option<Self>;

    /// Zero test; tolerance-based for floating kinds.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn approx_eq(&self, other: &Self) -> bool {
        if Self::KIND.is_exact() {
            self == other
        } else {
            (self.clone() - other.clone()).is_negligible()
        }
    }

    /// Pivot weight for inexact elimination.
    fn magnitude(&self) -> f64 {
        0.0
    }

    fn canonical(&self) -> String {
        self.to_string()
    }

    fn parse_scalar(_s: &str) -> Option<Self> {
        None
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

impl Scalar for BigRational {
    const KIND: ScalarKind = ScalarKind::Rational;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn parse_scalar(s: &str) -> Option<Self> {
        parse_rational(s)
    }
}

impl Scalar for Complex<BigRational> {
    const KIND: ScalarKind = ScalarKind::Gaussian;

    fn from_i64(v: i64) -> Self {
        Complex::new(BigRational::from_i64(v), BigRational::zero())
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn canonical(&self) -> String {
        let re = &self.re;
        let im = &self.im;
        if im.is_zero() {
            return re.to_string();
        }
        let mag = if im.abs().is_one() {
            String::new()
        } else {
            im.abs().to_string()
        };
        let sign = if im.is_negative() { "-" } else { "+" };
        if re.is_zero() {
            let sign = if im.is_negative() { "-" } else { "" };
            format!("{sign}{mag}i")
        } else {
            format!("{re}{sign}{mag}i")
        }
    }

    fn parse_scalar(s: &str) -> Option<Self> {
        let (re, im) = split_complex(s.trim())?;
        let re = if re.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(re)?
        };
        let im = match im {
            None => BigRational::zero(),
            Some("") | Some("+") => BigRational::one(),
            Some("-") => -BigRational::one(),
            Some(t) => parse_rational(t)?,
        };
        Some(Complex::new(re, im))
    }
}

impl Scalar for Complex64 {
    const KIND: ScalarKind = ScalarKind::ComplexFloat;

    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_negligible() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn is_negligible(&self) -> bool {
        self.norm() <= float_tolerance()
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }

    fn canonical(&self) -> String {
        let sign = if self.im.is_sign_negative() { "-" } else { "+" };
        format!("{:?}{}{:?}i", self.re, sign, self.im.abs())
    }

    fn parse_scalar(s: &str) -> Option<Self> {
        let (re, im) = split_complex(s.trim())?;
        let re = if re.is_empty() { 0.0 } else { re.parse().ok()? };
        let im = match im {
            None => 0.0,
            Some("") | Some("+") => 1.0,
            Some("-") => -1.0,
            Some(t) => t.trim_start_matches('+').parse().ok()?,
        };
        Some(Complex64::new(re, im))
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim().trim_start_matches('+');
    if s.is_empty() {
        return None;
    }
    BigRational::from_str(s).ok()
}

/// Splits `a+bi` into the real text and the optional imaginary coefficient text.
fn split_complex(s: &str) -> Option<(&str, Option<&str>)> {
    if s.is_empty() {
        return None;
    }
    let Some(body) = s.strip_suffix('i') else {
        return Some((s, None));
    };
    let bytes = body.as_bytes();
    let mut cut = None;
    for k in (1..bytes.len()).rev() {
        if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
            cut = Some(k);
            break;
        }
    }
    match cut {
        Some(k) => Some((&body[..k], Some(&body[k..]))),
        None => Some(("", Some(body))),
    }
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int<T: Scalar>(v: i64) -> T {
    T::from_i64(v)
}

pub fn ints<T: Scalar>(vs: &[i64]) -> Vec<T> {
    vs.iter().map(|&v| T::from_i64(v)).collect()
}
