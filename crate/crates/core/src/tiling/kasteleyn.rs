//! Closed-form count of domino tilings of a `2m x 2n` rectangle:
//!
//! ```text
//! 4^{mn} * prod_{j=1..m} prod_{k=1..n} ( cos^2(j pi / (2m+1)) + cos^2(k pi / (2n+1)) )
//! ```
//!
//! The product is evaluated in binary fixed point on big integers, with
//! enough fractional bits that the rounding step is exact. Pi comes from
//! Machin's formula and cosines from their Taylor series.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KasteleynError {
    #[error("rectangle half-sides must be at least 1, got ({0}, {1})")]
    InvalidSize(usize, usize),
    #[error("product is not within 1e-6 of an integer; precision was insufficient")]
    NotIntegral,
}

/// Fixed-point arithmetic with `bits` fractional bits.
struct Fixed {
    bits: u64,
}

impl Fixed {
    fn one(&self) -> BigInt {
        BigInt::one() << self.bits
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) >> self.bits
    }

    /// atan(1/q) by its alternating power series.
    fn atan_inv(&self, q: u64) -> BigInt {
        let q2 = BigInt::from(q * q);
        let mut power = self.one() / BigInt::from(q);
        let mut total = BigInt::zero();
        let mut k = 0u64;
        while !power.is_zero() {
            let term = &power / BigInt::from(2 * k + 1);
            if k.is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
            power /= &q2;
            k += 1;
        }
        total
    }

    fn pi(&self) -> BigInt {
        BigInt::from(16) * self.atan_inv(5) - BigInt::from(4) * self.atan_inv(239)
    }

    fn cos(&self, x: &BigInt) -> BigInt {
        let x2 = self.mul(x, x);
        let mut term = self.one();
        let mut total = BigInt::zero();
        let mut k = 0u64;
        while !term.is_zero() {
            total += &term;
            term = -self.mul(&term, &x2) / BigInt::from((2 * k + 1) * (2 * k + 2));
            k += 1;
        }
        total
    }
}

/// Number of domino tilings of the `2m x 2n` rectangle.
pub fn count_rectangle_kasteleyn(m: usize, n: usize) -> Result<BigUint, KasteleynError> {
    if m < 1 || n < 1 {
        return Err(KasteleynError::InvalidSize(m, n));
    }
    // The count is below 2^(3mn); every factor lies in (0, 8].
    let fixed = Fixed {
        bits: 4 * (m as u64) * (n as u64) + 128,
    };
    let pi = fixed.pi();
    let cos_squared = |index: usize, modulus: usize| {
        let angle = &pi * BigInt::from(index) / BigInt::from(2 * modulus + 1);
        let c = fixed.cos(&angle);
        fixed.mul(&c, &c)
    };
    let rows: Vec<BigInt> = (1..=m).map(|j| cos_squared(j, m)).collect();
    let cols: Vec<BigInt> = (1..=n).map(|k| cos_squared(k, n)).collect();

    let mut product = fixed.one();
    for a in &rows {
        for b in &cols {
            let factor = (a + b) * BigInt::from(4);
            product = fixed.mul(&product, &factor);
        }
    }

    let half = BigInt::one() << (fixed.bits - 1);
    let rounded: BigInt = (&product + &half) >> fixed.bits;
    let residual = (&product - (&rounded << fixed.bits)).abs();
    if residual * BigInt::from(1_000_000) >= fixed.one() {
        return Err(KasteleynError::NotIntegral);
    }
    match rounded.sign() {
        Sign::Minus => Err(KasteleynError::NotIntegral),
        _ => Ok(rounded.magnitude().clone()),
    }
}
