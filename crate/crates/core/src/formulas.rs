//! Closed forms for the F-signature and Hilbert–Kunz multiplicity in the
//! regimes where they are known, evaluated in exact rationals.
//!
//! With `b_1 ≥ ... ≥ b_n` and `S_i` the elementary symmetric polynomials,
//!
//! ```text
//! A = ∫_0^{1-1/b_1} ∫_0^{1/b_1} Π (1 - b_i v) dv du
//! B = ∫_0^{1/b_1} Σ_i (-1)^i S_i(b) u^{i+1}/(i+1) du
//! ```

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// `S_0, ..., S_n` of a vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPolyCache {
    values: Vec<BigInt>,
}

impl SymmetricPolyCache {
    /// `S_i`, zero outside `0..=n`.
    pub fn get(&self, i: isize) -> BigInt {
        if i < 0 {
            return BigInt::zero();
        }
        self.values
            .get(i as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Builds `S_i` from the coefficients of `Π (x + v_j)`, one factor at a time.
pub fn sym_poly(v: &[i64]) -> SymmetricPolyCache {
    let mut s = vec![BigInt::one()];
    for &x in v {
        s.push(BigInt::zero());
        for i in (1..s.len()).rev() {
            let add = &s[i - 1] * BigInt::from(x);
            s[i] += add;
        }
    }
    SymmetricPolyCache { values: s }
}

fn check_sorted_positive(b: &[i64]) -> Result<()> {
    if b.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(i) = b.iter().position(|&v| v < 1) {
        return Err(Error::NonPositiveEntry { index: i });
    }
    if b.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameter(
            "vector must be sorted in non-increasing order",
        ));
    }
    Ok(())
}

fn pow(b: i64, e: usize) -> Rational {
    Rational::from_integer(num_traits::pow(BigInt::from(b), e))
}

pub fn integral_a(b: &[i64]) -> Result<Rational> {
    check_sorted_positive(b)?;
    let b1 = b[0];
    let tail = sym_poly(&b[1..]);
    let mut sum = Rational::zero();
    for i in 1..=b.len() {
        let term = Rational::from_integer(tail.get(i as isize - 1))
            / (int((i * (i + 1)) as i64) * pow(b1, i));
        if i % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok((Rational::one() - int(b1).recip()) * sum)
}

pub fn integral_b(b: &[i64]) -> Result<Rational> {
    check_sorted_positive(b)?;
    let b1 = b[0];
    let tail = sym_poly(&b[1..]);
    let mut sum = Rational::zero();
    for i in 1..=b.len() {
        let term = Rational::from_integer(tail.get(i as isize - 1))
            / (int((i * (i + 1) * (i + 2)) as i64) * pow(b1, i + 1));
        if i % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(int(2) * sum)
}

/// `n = 1`: `(6b-1)/(6ab)` for `a > b` and `(3a-1)/(3a²)` for `a = b`.
pub fn f_signature_formula_n1(a: i64, b: i64) -> Result<Rational> {
    if a < 1 || b < 1 {
        return Err(Error::NonPositiveEntry { index: 0 });
    }
    if a < b {
        return Err(Error::CaseNotCovered("n = 1 formula needs a ≥ b"));
    }
    if a == b {
        Ok(Rational::new(
            BigInt::from(3 * a - 1),
            BigInt::from(3 * a * a),
        ))
    } else {
        Ok(Rational::new(
            BigInt::from(6 * b - 1),
            BigInt::from(6 * a * b),
        ))
    }
}

/// F-signature of `B(k·b, b)` for `b` sorted non-increasing.
pub fn f_signature_formula_kb(k: i64, b: &[i64]) -> Result<Rational> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be positive"));
    }
    check_sorted_positive(b)?;
    let a_int = integral_a(b)?;
    let b_int = integral_b(b)?;
    let b1 = b[0];
    if k == 1 {
        return Ok(int(2) * (a_int + b_int));
    }
    let k_inv = int(k).recip();
    if b1 >= 2 {
        let c = Rational::new(BigInt::from(2 * b1 - 1), BigInt::from(b1 - 1));
        Ok(k_inv * (c * a_int + b_int))
    } else {
        let n = b.len();
        let mut binom = BigInt::one();
        let mut alternating = Rational::zero();
        for i in 0..=n {
            let term = Rational::new(binom.clone(), BigInt::from(i + 1));
            if i % 2 == 0 {
                alternating += term;
            } else {
                alternating -= term;
            }
            binom = binom * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        Ok(k_inv * (alternating + b_int))
    }
}

/// `2 - s(B(a, a))`; `a` is sorted internally.
pub fn hk_formula_a_eq_b(a: &[i64]) -> Result<Rational> {
    let mut sorted = a.to_vec();
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    Ok(int(2) - f_signature_formula_kb(1, &sorted)?)
}

/// `e_HK(B(kb, b))` for `n = 1`: `((k+1) - 6kb + 3k(k+3)b²) / (6kb²)`.
pub fn hk_formula_kb(k: i64, b: i64) -> Result<Rational> {
    if k < 1 || b < 1 {
        return Err(Error::InvalidParameter("k and b must be positive"));
    }
    let num = (k + 1) - 6 * k * b + 3 * k * (k + 3) * b * b;
    Ok(Rational::new(
        BigInt::from(num),
        BigInt::from(6 * k * b * b),
    ))
}

/// Hilbert–Kunz multiplicity of the rational normal scroll of degree
/// `e = a + 1`: `e/2 + e/(6a)`.
pub fn hk_scroll(a: i64) -> Result<Rational> {
    if a < 1 {
        return Err(Error::InvalidParameter("a must be positive"));
    }
    let e = int(a + 1);
    Ok(&e / int(2) + &e / int(6 * a))
}
