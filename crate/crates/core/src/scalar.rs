//! Coefficient types.
//!
//! Every algebraic structure in the crate is generic over [`Scalar`]. The
//! exact instantiation used throughout is [`crate::Q`], arbitrary-precision
//! rationals. `Ratio<i64>` is available for small, bounded computations and
//! `f64` for quick numerical evaluation of braiding functions; anything that
//! needs exact zero tests (echelon forms, kernels, descent) is restricted to
//! [`Exact`] scalars.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{NumAssignRef, NumRef, Signed, Zero};

pub trait Scalar:
    Clone + PartialEq + fmt::Debug + NumRef + NumAssignRef + Signed + Send + Sync + 'static
{
    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    /// Parse `"p"` or `"p/q"`.
    fn parse_ratio(text: &str) -> Option<Self>;

    /// Render as `"p/q"` with `q > 0` (inexact types print their decimal value).
    fn to_ratio_string(&self) -> String;
}

/// Scalars with exact equality, i.e. fields where `x == 0` is decidable.
pub trait Exact: Scalar + Eq {}

impl Scalar for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn parse_ratio(text: &str) -> Option<Self> {
        parse_fraction::<BigInt>(text).map(|(n, d)| BigRational::new(n, d))
    }

    fn to_ratio_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

impl Exact for BigRational {}

impl Scalar for Ratio<i64> {
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }

    fn parse_ratio(text: &str) -> Option<Self> {
        parse_fraction::<i64>(text).map(|(n, d)| Ratio::new(n, d))
    }

    fn to_ratio_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

impl Exact for Ratio<i64> {}

impl Scalar for f64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn parse_ratio(text: &str) -> Option<Self> {
        let (n, d) = parse_fraction::<i64>(text)?;
        Some(n as f64 / d as f64)
    }

    fn to_ratio_string(&self) -> String {
        format!("{self}")
    }
}

fn parse_fraction<T: FromStr + Zero>(text: &str) -> Option<(T, T)> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = num.strip_prefix('+').unwrap_or(num);
    let num: T = num.parse().ok()?;
    let den: T = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some((num, den))
}
