//! Exact rational scalars and their text forms.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational used for every volume, formula and solve.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p / q`; panics when `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Renders `r` as `p/q` with `q >= 1`, also for integers (`2/1`).
pub fn format_fraction(r: &Rational) -> String {
    let mut s = r.numer().to_string();
    s.push('/');
    s.push_str(&r.denom().to_string());
    s
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_fraction(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), e as usize)
}

/// Decimal rendering of `r` rounded (half away from zero) to `digits`
/// significant digits, without exponent notation. Trailing zeros after the
/// decimal point are trimmed.
pub fn to_decimal(r: &Rational, digits: u32) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let negative = r.is_negative();
    let x = r.abs();
    // Find e with 10^e <= x < 10^(e+1).
    let mut e: i64 = (x.numer().to_string().len() as i64) - (x.denom().to_string().len() as i64);
    loop {
        let lower = pow10_rational(e);
        if x < lower {
            e -= 1;
            continue;
        }
        if x >= pow10_rational(e + 1) {
            e += 1;
            continue;
        }
        break;
    }
    // Scale so that the integer part carries `digits` digits.
    let shift = digits as i64 - 1 - e;
    let scaled = x * pow10_rational(shift);
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let mut m = q;
    if rem * BigInt::from(2) >= *scaled.denom() {
        m += 1;
    }
    // Rounding may carry into a new digit (e.g. 9.99 -> 10.0).
    let mut mantissa = m.to_string();
    let mut shift = shift;
    if mantissa.len() as u32 > digits {
        mantissa.pop();
        shift -= 1;
    }
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if shift <= 0 {
        out.push_str(&mantissa);
        for _ in 0..(-shift) {
            out.push('0');
        }
        return out;
    }
    let shift = shift as usize;
    let (int_part, frac_part) = if mantissa.len() > shift {
        let split = mantissa.len() - shift;
        (mantissa[..split].to_string(), mantissa[split..].to_string())
    } else {
        let mut f = String::new();
        for _ in 0..(shift - mantissa.len()) {
            f.push('0');
        }
        f.push_str(&mantissa);
        ("0".to_string(), f)
    };
    let frac_part = frac_part.trim_end_matches('0');
    out.push_str(&int_part);
    if !frac_part.is_empty() {
        out.push('.');
        out.push_str(frac_part);
    }
    out
}

fn pow10_rational(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(pow10(e as u32))
    } else {
        Rational::new(BigInt::one(), pow10((-e) as u32))
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator(values: &[Rational]) -> BigInt {
    values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales a rational vector to a primitive integer vector with the same
/// direction. Returns `None` for the zero vector.
pub fn primitive_integer(values: &[Rational]) -> Option<Vec<BigInt>> {
    let den = common_denominator(values);
    let ints: Vec<BigInt> = values.iter().map(|v| (v * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return None;
    }
    Some(ints.into_iter().map(|v| v / &g).collect())
}

pub(crate) fn sign(r: &Rational) -> Sign {
    if r.is_zero() {
        Sign::NoSign
    } else if r.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    }
}
