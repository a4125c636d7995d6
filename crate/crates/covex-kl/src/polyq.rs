//! Exact univariate polynomials in `q` with arbitrary-precision integer
//! coefficients, and Gaussian q-binomial coefficients.
//!
//! The canonical text rendering lists terms by descending power, writes
//! `q^k` for powers above one, and shows a coefficient only when its absolute
//! value is at least two: `q^3 + 2*q^2 + 2*q + 1`.  The zero polynomial renders
//! as `0`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// A polynomial `Σ c_i q^i` stored densely, lowest degree first.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial is
/// the empty coefficient vector and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        QPoly { coeffs: vec![BigInt::one()] }
    }

    /// `c · q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c.into());
        QPoly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients, lowest degree first.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from machine integers, lowest degree first.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Coefficients, lowest degree first, without trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        QPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// Coefficientwise sum.
pub fn add(p: &QPoly, r: &QPoly) -> QPoly {
    let len = p.coeffs.len().max(r.coeffs.len());
    let coeffs = (0..len)
        .map(|i| match (p.coeffs.get(i), r.coeffs.get(i)) {
            (Some(a), Some(b)) => a + b,
            (Some(a), None) | (None, Some(a)) => a.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    QPoly::from_coeffs(coeffs)
}

/// Convolution product.
pub fn mul(p: &QPoly, r: &QPoly) -> QPoly {
    if p.is_zero() || r.is_zero() {
        return QPoly::zero();
    }
    let mut coeffs = vec![BigInt::zero(); p.coeffs.len() + r.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in r.coeffs.iter().enumerate() {
            coeffs[i + j] += a * b;
        }
    }
    QPoly::from_coeffs(coeffs)
}

/// The Gaussian binomial coefficient `[α β]_q`.
///
/// Returns `0` when `β < 0` or `α < β`, and `1` when `β = 0 ≤ α`.  Computed
/// row by row with the division-free Pascal recurrence
/// `[α β] = [α−1 β−1] + q^β [α−1 β]`.
pub fn q_binomial(alpha: i64, beta: i64) -> QPoly {
    if beta < 0 || alpha < beta {
        return QPoly::zero();
    }
    // Symmetry keeps the table narrow.
    let beta = beta.min(alpha - beta) as usize;
    let alpha = alpha as usize;
    // row[j] holds [m j] for the current m.
    let mut row: Vec<QPoly> = vec![QPoly::one()];
    for m in 1..=alpha {
        let width = m.min(beta);
        let mut next = Vec::with_capacity(width + 1);
        for j in 0..=width {
            let left = if j == 0 { QPoly::zero() } else { row[j - 1].clone() };
            let up = if j < row.len() && j < m { row[j].shift(j) } else { QPoly::zero() };
            next.push(add(&left, &up));
        }
        row = next;
    }
    row.swap_remove(beta)
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        add(self, rhs)
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        add(&self, &rhs)
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = add(self, rhs);
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        add(self, &-rhs)
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        mul(self, rhs)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        mul(&self, &rhs)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}*q^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse polynomial term `{0}`")]
pub struct ParsePolyError(pub String);

impl FromStr for QPoly {
    type Err = ParsePolyError;

    /// Parses the canonical rendering (and slightly looser spacing).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParsePolyError(s.to_string()));
        }
        // Split into signed terms.
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut acc = QPoly::zero();
        for term in terms {
            let bad = || ParsePolyError(term.to_string());
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            let (coef, power) = match body.find('q') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let coef = match &body[..pos] {
                        "" => BigInt::one(),
                        c => c.strip_suffix('*').ok_or_else(bad)?.parse::<BigInt>().map_err(|_| bad())?,
                    };
                    let power = match &body[pos + 1..] {
                        "" => 1,
                        e => e.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?,
                    };
                    (coef, power)
                }
            };
            acc += &QPoly::monomial(coef * sign, power);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_and_parse() {
        let p = QPoly::from_i64s(&[1, 2, 2, 1]);
        assert_eq!(p.to_string(), "q^3 + 2*q^2 + 2*q + 1");
        assert_eq!("q^3 + 2*q^2 + 2*q + 1".parse::<QPoly>().unwrap(), p);
        assert_eq!(QPoly::from_i64s(&[-1, 0, -3]).to_string(), "-3*q^2 - 1");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::one().to_string(), "1");
    }

    #[test]
    fn small_binomials() {
        assert_eq!(q_binomial(3, 1), QPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(q_binomial(4, 2), QPoly::from_i64s(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(0, 0), QPoly::one());
        assert!(q_binomial(2, 3).is_zero());
        assert!(q_binomial(-1, 0).is_zero());
    }
}
