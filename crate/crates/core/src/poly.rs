//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// Coefficients in ascending degree order with trailing zeros trimmed; the
/// zero polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Polynomial::new(vec![Rational::zero(), Rational::one()])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Polynomial { coeffs }
    }

    /// `(x - r_0)(x - r_1)...(x - r_m)`.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots
            .iter()
            .fold(Polynomial::constant(Rational::one()), |acc, r| acc.mul_linear(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiplies by `(x - r)`.
    pub fn mul_linear(&self, r: &Rational) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] += c;
            out[k] -= c * r;
        }
        Polynomial::new(out)
    }

    /// `p(x + s)`, expanded by repeated synthetic division.
    pub fn shift(&self, s: &Rational) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for k in (i..n.saturating_sub(1)).rev() {
                let t = &c[k + 1] * s;
                c[k] += t;
            }
        }
        Polynomial::new(c)
    }

    /// Exact `k`-th derivative.
    pub fn derivative(&self, k: usize) -> Self {
        if k >= self.coeffs.len() {
            return Polynomial::zero();
        }
        let coeffs = self.coeffs[k..]
            .iter()
            .enumerate()
            .map(|(i, c)| {
                // d^k/dx^k x^(i+k) = (i+k)!/i! x^i
                let falling: BigInt = (i + 1..=i + k).map(BigInt::from).product();
                c * Rational::from_integer(falling)
            })
            .collect();
        Polynomial::new(coeffs)
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rational::from_integer(BigInt::from(k + 1)));
        }
        Polynomial::new(coeffs)
    }

    /// `q(x) = ∫_0^h p(x + t) dt`, formed as `P(x + h) - P(x)` for an
    /// antiderivative `P`.
    pub fn shift_integral(&self, h: &Rational) -> Self {
        let big_p = self.antiderivative();
        &big_p.shift(h) - &big_p
    }
}

impl From<Vec<Rational>> for Polynomial {
    fn from(coeffs: Vec<Rational>) -> Self {
        Polynomial::new(coeffs)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}
