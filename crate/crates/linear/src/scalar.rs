use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Exact rational number. `BigRational` keeps itself in lowest terms with a
/// positive denominator, so equality is structural.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    assert!(q != 0, "zero denominator");
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p"` or `"p/q"` with optional surrounding whitespace and a sign
/// on the numerator only. The result is reduced.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let bad = || Error::Scalar(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let valid = |s: &str, signed: bool| {
        let digits = if signed { s.strip_prefix('-').unwrap_or(s) } else { s };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Small random rational with numerator in [-6, 6] and denominator in [1, 4].
/// Used by the multilinearity bridge and by randomized tests.
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    frac(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

/// Random integer scalar drawn uniformly from `lo..=hi`.
pub fn random_int<R: Rng + ?Sized>(rng: &mut R, lo: i64, hi: i64) -> Scalar {
    int(rng.gen_range(lo..=hi))
}

pub fn is_negative(x: &Scalar) -> bool {
    x.is_negative()
}
