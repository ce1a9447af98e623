//! Functions that can be evaluated exactly at rational points.
//!
//! Text syntax:
//!
//! * `poly:a0,a1,...,ak` is `a0 + a1 x + ... + ak x^k`;
//! * `ratfun:a0,...;b0,...` is the quotient of two such polynomials;
//! * `pl:<path>` reads a piecewise-linear grid function from a file
//!   (see [`GridFunction::parse_table`]);
//! * `plv:L=<L>;v0,v1,...,vL` gives the grid values inline.
//!
//! Coefficients and values are `p/q` or integers.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{floor, max_abs, parse_rational, parse_rational_list, Rational};

/// Values at the grid `{k/L : 0 <= k <= L}`. As a function on `[0, 1]` it is
/// the piecewise-linear interpolant of those values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridFunction {
    denom: usize,
    values: Vec<Rational>,
}

impl GridFunction {
    pub fn new(denom: usize, values: Vec<Rational>) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidArgument("grid denominator must be positive".into()));
        }
        if values.len() != denom + 1 {
            return Err(Error::InvalidArgument(format!(
                "grid with denominator {denom} needs {} values, got {}",
                denom + 1,
                values.len()
            )));
        }
        Ok(GridFunction { denom, values })
    }

    pub fn zeros(denom: usize) -> Self {
        GridFunction {
            denom,
            values: vec![Rational::zero(); denom + 1],
        }
    }

    /// The grid denominator `L`.
    pub fn denom(&self) -> usize {
        self.denom
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }

    /// Piecewise-linear value at `x`; `None` outside `[0, 1]`.
    pub fn interpolate(&self, x: &Rational) -> Option<Rational> {
        if x.is_negative() || *x > Rational::from_integer(1.into()) {
            return None;
        }
        let scaled = x * Rational::from_integer(BigInt::from(self.denom));
        let k = floor(&scaled);
        let frac = &scaled - Rational::from_integer(k.clone());
        let k = k.to_usize()?;
        if frac.is_zero() {
            return Some(self.values[k].clone());
        }
        let lo = &self.values[k];
        let hi = &self.values[k + 1];
        Some(lo + (hi - lo) * frac)
    }

    pub fn sup_norm(&self) -> Rational {
        max_abs(&self.values)
    }

    /// `L * max_k |v[k+1] - v[k]|`, the Lipschitz constant of the interpolant.
    pub fn lipschitz(&self) -> Rational {
        let steepest = self
            .values
            .windows(2)
            .map(|w| (&w[1] - &w[0]).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        steepest * Rational::from_integer(BigInt::from(self.denom))
    }

    /// Parses the tabular form: a header line `L=<integer>` then lines
    /// `k,<value>` for `0 <= k <= L`. Missing `k` default to zero. Blank lines
    /// and lines starting with `#` are skipped.
    pub fn parse_table(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::parse("", "missing `L=<integer>` header"))?;
        let denom = parse_denom_header(header)?;
        let mut values = vec![Rational::zero(); denom + 1];
        for line in lines {
            let (k, v) = line
                .split_once(',')
                .ok_or_else(|| Error::parse(line, "expected `k,value`"))?;
            let k: usize = k
                .trim()
                .parse()
                .map_err(|_| Error::parse(k.trim(), "grid index is not a non-negative integer"))?;
            if k > denom {
                return Err(Error::parse(line, format!("grid index exceeds L = {denom}")));
            }
            values[k] = parse_rational(v)?;
        }
        Ok(GridFunction { denom, values })
    }

    /// Renders the tabular form accepted by [`GridFunction::parse_table`].
    pub fn to_table(&self) -> String {
        let mut out = format!("L={}\n", self.denom);
        for (k, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{k},{v}\n"));
        }
        out
    }
}

fn parse_denom_header(header: &str) -> Result<usize> {
    let rest = header
        .strip_prefix("L=")
        .ok_or_else(|| Error::parse(header, "expected `L=<integer>` header"))?;
    match rest.trim().parse::<usize>() {
        Ok(l) if l > 0 => Ok(l),
        _ => Err(Error::parse(header, "L must be a positive integer")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FuncKind {
    Poly(Polynomial),
    RatFun {
        numerator: Polynomial,
        denominator: Polynomial,
    },
    PiecewiseLinear(GridFunction),
}

/// A function on `[0, 1]`, optionally extended by zero to the whole line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuncSpec {
    pub kind: FuncKind,
    pub extended_by_zero: bool,
}

impl FuncSpec {
    pub fn poly(p: Polynomial) -> Self {
        FuncSpec {
            kind: FuncKind::Poly(p),
            extended_by_zero: false,
        }
    }

    pub fn ratfun(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FuncSpec {
            kind: FuncKind::RatFun { numerator, denominator },
            extended_by_zero: false,
        })
    }

    pub fn piecewise_linear(g: GridFunction) -> Self {
        FuncSpec {
            kind: FuncKind::PiecewiseLinear(g),
            extended_by_zero: false,
        }
    }

    pub fn with_zero_extension(mut self, on: bool) -> Self {
        self.extended_by_zero = on;
        self
    }

    /// Parses the text syntax, reading `pl:` files from disk.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with(text, |path| {
            std::fs::read_to_string(Path::new(path)).map_err(|e| Error::parse(path, format!("cannot read file: {e}")))
        })
    }

    /// Parses the text syntax, resolving `pl:<path>` through `load`.
    pub fn parse_with(text: &str, load: impl FnOnce(&str) -> Result<String>) -> Result<Self> {
        let text = text.trim();
        let (tag, body) = text
            .split_once(':')
            .ok_or_else(|| Error::parse(text, "expected `poly:`, `ratfun:`, `pl:` or `plv:` prefix"))?;
        match tag {
            "poly" => Ok(FuncSpec::poly(Polynomial::new(parse_rational_list(body)?))),
            "ratfun" => {
                let (num, den) = body
                    .split_once(';')
                    .ok_or_else(|| Error::parse(body, "expected `numerator;denominator`"))?;
                let num = Polynomial::new(parse_rational_list(num)?);
                let den = Polynomial::new(parse_rational_list(den)?);
                if den.is_zero() {
                    return Err(Error::parse(text, "denominator is the zero polynomial"));
                }
                FuncSpec::ratfun(num, den)
            }
            "pl" => {
                let contents = load(body.trim())?;
                Ok(FuncSpec::piecewise_linear(GridFunction::parse_table(&contents)?))
            }
            "plv" => {
                let (header, vals) = body
                    .split_once(';')
                    .ok_or_else(|| Error::parse(body, "expected `L=<integer>;v0,...,vL`"))?;
                let denom = parse_denom_header(header.trim())?;
                let values = parse_rational_list(vals)?;
                Ok(FuncSpec::piecewise_linear(GridFunction::new(denom, values)?))
            }
            other => Err(Error::parse(other, "unknown function kind")),
        }
    }

    /// Exact value at `x`.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let outside = x.is_negative() || *x > Rational::from_integer(1.into());
        if outside && self.extended_by_zero {
            return Ok(Rational::zero());
        }
        match &self.kind {
            FuncKind::Poly(p) => Ok(p.eval(x)),
            FuncKind::RatFun { numerator, denominator } => {
                let d = denominator.eval(x);
                if d.is_zero() {
                    return Err(Error::Pole { at: x.clone() });
                }
                Ok(numerator.eval(x) / d)
            }
            FuncKind::PiecewiseLinear(g) => g.interpolate(x).ok_or_else(|| Error::OutsideDomain { at: x.clone() }),
        }
    }

    /// Values at `k/n`, `k = 0..=n`.
    pub fn sample_uniform(&self, n: usize) -> Result<Vec<Rational>> {
        let step = Rational::new(1.into(), BigInt::from(n.max(1)));
        (0..=n)
            .map(|k| self.eval(&(&step * Rational::from_integer(BigInt::from(k)))))
            .collect()
    }

    /// Exact `sup |f|` on `[0, 1]` when it is cheaply known (piecewise-linear
    /// functions attain it at a grid point).
    pub fn exact_sup_norm(&self) -> Option<Rational> {
        match &self.kind {
            FuncKind::PiecewiseLinear(g) => Some(g.sup_norm()),
            FuncKind::Poly(p) if p.degree().is_none_or(|d| d == 0) => Some(p.coeff(0).abs()),
            _ => None,
        }
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        match &self.kind {
            FuncKind::Poly(p) => Some(p),
            _ => None,
        }
    }
}
