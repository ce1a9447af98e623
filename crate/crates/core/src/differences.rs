//! Divided differences, forward finite differences and the identity that
//! ties them together on the equispaced knots `0, 1/n, ..., 1`.
//!
//! Finite differences use the binomial form
//! `Δ_h^n f(x) = Σ_{j=0}^{n} (-1)^{n-j} C(n, j) f(x + jh)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::func::FuncSpec;
use crate::poly::Polynomial;
use crate::rational::{binomial_row, factorial, pow, Rational};

/// `(knot, value)` pairs with pairwise distinct knots. The order of the
/// divided difference is `len - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotValueList {
    pairs: Vec<(Rational, Rational)>,
}

impl KnotValueList {
    pub fn new(pairs: Vec<(Rational, Rational)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptyKnots);
        }
        let mut knots: Vec<&Rational> = pairs.iter().map(|(x, _)| x).collect();
        knots.sort();
        if let Some(w) = knots.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateKnot { knot: w[0].clone() });
        }
        Ok(KnotValueList { pairs })
    }

    pub fn from_parts(knots: Vec<Rational>, values: Vec<Rational>) -> Result<Self> {
        if knots.len() != values.len() {
            return Err(Error::LengthMismatch {
                knots: knots.len(),
                values: values.len(),
            });
        }
        KnotValueList::new(knots.into_iter().zip(values).collect())
    }

    /// Samples `f` at the given knots.
    pub fn sample(f: &FuncSpec, knots: Vec<Rational>) -> Result<Self> {
        let values = knots.iter().map(|x| f.eval(x)).collect::<Result<Vec<_>>>()?;
        KnotValueList::from_parts(knots, values)
    }

    /// Samples `f` at `k/n`, `k = 0..=n`.
    pub fn equispaced(f: &FuncSpec, n: usize) -> Result<Self> {
        KnotValueList::sample(f, equispaced_knots(n))
    }

    pub fn order(&self) -> usize {
        self.pairs.len() - 1
    }

    pub fn pairs(&self) -> &[(Rational, Rational)] {
        &self.pairs
    }

    pub fn knots(&self) -> impl Iterator<Item = &Rational> {
        self.pairs.iter().map(|(x, _)| x)
    }
}

/// `0, 1/n, 2/n, ..., 1`; for `n == 0` the single knot `0`.
pub fn equispaced_knots(n: usize) -> Vec<Rational> {
    if n == 0 {
        return vec![Rational::zero()];
    }
    (0..=n)
        .map(|k| Rational::new(BigInt::from(k), BigInt::from(n)))
        .collect()
}

/// `Σ_k f(x_k) / Ω'(x_k)` with `Ω(x) = Π (x - x_i)`, so
/// `Ω'(x_k) = Π_{i != k} (x_k - x_i)`.
pub fn divided_difference_direct(kv: &KnotValueList) -> Rational {
    let pairs = kv.pairs();
    pairs
        .iter()
        .enumerate()
        .map(|(k, (xk, fk))| {
            let omega_prime = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .fold(Rational::one(), |acc, (_, (xi, _))| acc * (xk - xi));
            fk / omega_prime
        })
        .sum()
}

/// Newton table for the prefix divided differences `f[x_0..x_k]`,
/// `k = 0..=n`.
pub fn newton_coefficients(kv: &KnotValueList) -> Vec<Rational> {
    let pairs = kv.pairs();
    let mut table: Vec<Rational> = pairs.iter().map(|(_, v)| v.clone()).collect();
    let mut coeffs = Vec::with_capacity(pairs.len());
    coeffs.push(table[0].clone());
    for level in 1..pairs.len() {
        // table[i] holds f[x_i .. x_{i+level-1}] before this pass
        for i in 0..pairs.len() - level {
            let span = &pairs[i + level].0 - &pairs[i].0;
            table[i] = (&table[i + 1] - &table[i]) / span;
        }
        coeffs.push(table[0].clone());
    }
    coeffs
}

/// The recurrence `f[x_i..x_j] = (f[x_{i+1}..x_j] - f[x_i..x_{j-1}]) / (x_j - x_i)`.
pub fn divided_difference_recursive(kv: &KnotValueList) -> Rational {
    newton_coefficients(kv).pop().expect("knot list is never empty")
}

/// Arguments of `Δ_h^n f(x)`.
#[derive(Debug, Clone)]
pub struct FiniteDifferenceRequest<'a> {
    pub f: &'a FuncSpec,
    pub x: Rational,
    pub h: Rational,
    pub n: usize,
}

impl<'a> FiniteDifferenceRequest<'a> {
    pub fn new(f: &'a FuncSpec, x: Rational, h: Rational, n: usize) -> Result<Self> {
        if !h.is_positive() {
            return Err(Error::NonPositiveStep { h });
        }
        Ok(FiniteDifferenceRequest { f, x, h, n })
    }
}

/// `Δ_h^n f(x) = Σ_{j=0}^{n} (-1)^{n-j} C(n, j) f(x + jh)`.
pub fn finite_difference(req: &FiniteDifferenceRequest<'_>) -> Result<Rational> {
    forward_difference(|t| req.f.eval(t), &req.x, &req.h, req.n)
}

/// Forward difference of an arbitrary exact evaluator.
pub fn forward_difference(
    f: impl Fn(&Rational) -> Result<Rational>,
    x: &Rational,
    h: &Rational,
    n: usize,
) -> Result<Rational> {
    let row = binomial_row(n);
    let mut acc = Rational::zero();
    for (j, c) in row.into_iter().enumerate() {
        let point = x + h * Rational::from_integer(BigInt::from(j));
        let term = f(&point)? * Rational::from_integer(c);
        if (n - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// `Δ_h^n p(x)` through the integral representation
/// `∫_0^h ... ∫_0^h p^{(n)}(x + t_1 + ... + t_n) dt_1 ... dt_n`: the `n`-th
/// derivative is integrated over one shift at a time, then evaluated.
pub fn finite_difference_via_integral(p: &Polynomial, x: &Rational, h: &Rational, n: usize) -> Result<Rational> {
    if !h.is_positive() {
        return Err(Error::NonPositiveStep { h: h.clone() });
    }
    let q = (0..n).fold(p.derivative(n), |q, _| q.shift_integral(h));
    Ok(q.eval(x))
}

/// `n! h^n`, the value of `Δ_h^n x^n`.
pub fn monomial_difference_scale(n: usize, h: &Rational) -> Rational {
    Rational::from_integer(factorial(n)) * pow(h, n)
}

/// Both sides of `f[0, 1/n, ..., 1] = Δ_{1/n}^n f(0) / (n! (1/n)^n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub n: usize,
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

/// Evaluates the equispaced divided difference directly (through `1/Ω'`)
/// and through the scaled finite difference, and compares them exactly.
pub fn check_uniform_identity(f: &FuncSpec, n: usize) -> Result<IdentityCheck> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let lhs = divided_difference_direct(&KnotValueList::equispaced(f, n)?);
    let h = Rational::new(BigInt::one(), BigInt::from(n));
    let req = FiniteDifferenceRequest::new(f, Rational::zero(), h.clone(), n)?;
    let rhs = finite_difference(&req)? / monomial_difference_scale(n, &h);
    let equal = lhs == rhs;
    Ok(IdentityCheck { n, lhs, rhs, equal })
}

/// The order-`n` divided difference of `f` at `0, 1/n, ..., 1`.
pub fn uniform_divided_difference(f: &FuncSpec, n: usize) -> Result<Rational> {
    Ok(divided_difference_direct(&KnotValueList::equispaced(f, n)?))
}
