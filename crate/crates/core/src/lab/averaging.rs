//! Averages of finite differences over growing steps, for functions
//! extended by zero outside `[0, 1]`.
//!
//! For `f̃` the zero extension and `x` in `[0, 1)`,
//!
//! ```text
//! (1/N) Σ_{i=1}^{N} Δ_{ih}^n f̃(x)
//!     = (-1)^n f(x) + (1/N) Σ_{j=1}^{n} (-1)^{n-j} C(n, j) Σ_{i<=N, x+jih<=1} f(x + jih)
//! ```
//!
//! since the `j = 0` term is `(-1)^n f(x)` for every `i`. The inner sums see
//! at most `floor((1 - x) / (jh))` points, so once `N` passes
//! `floor((1 - x) / h)` the boundary sum is fixed and the residual is that
//! constant over `N`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::differences::forward_difference;
use crate::error::{Error, Result};
use crate::func::FuncSpec;
use crate::rational::{binomial_row, factorial, floor, max_abs, sign_pow, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AveragingProbeResult {
    pub n: usize,
    pub h: Rational,
    pub x: Rational,
    pub count: usize,
    /// `(1/N) Σ_{i=1}^{N} Δ_{ih}^n f̃(x)`, summed term by term.
    pub average: Rational,
    /// `average - (-1)^n f(x)`.
    pub residual: Rational,
    /// `Σ_{j>=1} (-1)^{n-j} C(n, j) Σ_{i<=N, x+jih<=1} f(x + jih)`, computed
    /// separately; equals `residual * N`.
    pub boundary_sum: Rational,
    /// `(1/N) Σ_j C(n, j) max(0, floor((1 - x)/(jh))) M`.
    pub bound: Rational,
    /// `M`, the bound on `|f|` used in `bound`.
    pub sup_bound: Rational,
    /// `floor((1 - x)/h)`: past this many terms `residual * N` is constant.
    pub cutoff: usize,
}

/// Exact zero-extended evaluator.
pub(crate) type Eval<'a> = dyn Fn(&Rational) -> Result<Rational> + 'a;

pub(crate) fn validate_step(h: &Rational) -> Result<()> {
    if !h.is_positive() {
        return Err(Error::NonPositiveStep { h: h.clone() });
    }
    Ok(())
}

fn validate_base_point(x: &Rational) -> Result<()> {
    if x.is_negative() || *x >= Rational::from_integer(1.into()) {
        return Err(Error::InvalidArgument(format!("base point {x} is not in [0, 1)")));
    }
    Ok(())
}

fn int(k: usize) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// Number of `i >= 1` with `t + i*step <= 1`.
pub(crate) fn steps_inside(t: &Rational, step: &Rational) -> usize {
    let room = (Rational::from_integer(1.into()) - t) / step;
    if room.is_negative() {
        return 0;
    }
    floor(&room).to_usize().unwrap_or(usize::MAX)
}

/// `(1/N) Σ_{i=1}^{N} Δ_{ih}^n g(t)`.
pub(crate) fn difference_average(g: &Eval<'_>, t: &Rational, h: &Rational, n: usize, count: usize) -> Result<Rational> {
    let mut acc = Rational::zero();
    for i in 1..=count {
        acc += forward_difference(g, t, &(h * int(i)), n)?;
    }
    Ok(acc / int(count))
}

/// `Σ_{j=1}^{n} (-1)^{n-j} C(n, j) Σ_{i<=N, t+jih<=1} g(t + jih)`.
pub(crate) fn boundary_sum(g: &Eval<'_>, t: &Rational, h: &Rational, n: usize, count: usize) -> Result<Rational> {
    let row = binomial_row(n);
    let mut acc = Rational::zero();
    for (j, c) in row.into_iter().enumerate().skip(1) {
        let step = h * int(j);
        let mut inner = Rational::zero();
        for i in 1..=steps_inside(t, &step).min(count) {
            inner += g(&(t + &step * int(i)))?;
        }
        acc += sign_pow(n - j) * Rational::from_integer(c) * inner;
    }
    Ok(acc)
}

/// `Σ_j C(n, j) floor((1 - t)/(jh))`, the number of boundary evaluations
/// weighted by their binomial coefficients.
pub(crate) fn boundary_weight(t: &Rational, h: &Rational, n: usize) -> Rational {
    binomial_row(n)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| Rational::from_integer(c) * int(steps_inside(t, &(h * int(j)))))
        .sum()
}

/// `max |g(x + kh)|` over the grid points `x + kh` in `(x, 1]`. Every
/// boundary evaluation `x + jih` is one of them.
pub(crate) fn touched_sup(g: &Eval<'_>, x: &Rational, h: &Rational) -> Result<Rational> {
    let points = (1..=steps_inside(x, h))
        .map(|k| g(&(x + h * int(k))))
        .collect::<Result<Vec<_>>>()?;
    Ok(max_abs(&points))
}

pub fn averaging_probe(
    f: &FuncSpec,
    x: &Rational,
    h: &Rational,
    n: usize,
    count: usize,
) -> Result<AveragingProbeResult> {
    validate_step(h)?;
    validate_base_point(x)?;
    if count == 0 {
        return Err(Error::InvalidArgument(
            "number of averaged steps must be positive".into(),
        ));
    }
    let f = f.clone().with_zero_extension(true);
    let eval = |t: &Rational| f.eval(t);
    let average = difference_average(&eval, x, h, n, count)?;
    let residual = &average - sign_pow(n) * f.eval(x)?;
    let boundary = boundary_sum(&eval, x, h, n, count)?;
    let sup_bound = match f.exact_sup_norm() {
        Some(m) => m,
        None => touched_sup(&eval, x, h)?,
    };
    let bound = boundary_weight(x, h, n) * &sup_bound / int(count);
    Ok(AveragingProbeResult {
        n,
        h: h.clone(),
        x: x.clone(),
        count,
        average,
        residual,
        boundary_sum: boundary,
        bound,
        sup_bound,
        cutoff: steps_inside(x, h),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TelescopeCheck {
    /// `n! / j`.
    pub cofactor: usize,
    /// `x + n! h`.
    pub y: Rational,
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

/// `n!/j` for `1 <= j <= n`.
pub fn factorial_cofactor(n: usize, j: usize) -> Result<usize> {
    let nf = factorial(n);
    let jb = BigInt::from(j);
    if j == 0 || j > n || !(&nf % &jb).is_zero() {
        return Err(Error::NotFactorialDivisor { j, n });
    }
    (nf / jb)
        .to_usize()
        .ok_or_else(|| Error::InvalidArgument(format!("{n}!/{j} does not fit in a machine word")))
}

/// With `y = x + n! h` and `j' = n!/j`, checks
///
/// ```text
/// Σ_{i=1}^{N} g(x + jih) - Σ_{i=1}^{N} g(y + jih)
///     = Σ_{i=1}^{j'} g(x + jih) - Σ_{i=N+1}^{N+j'} g(x + jih)
/// ```
///
/// by evaluating both sides independently. `g` is evaluated as given (zero
/// extension only if its flag is set).
pub fn telescope_shift_identity(
    g: &FuncSpec,
    x: &Rational,
    n: usize,
    j: usize,
    h: &Rational,
    count: usize,
) -> Result<TelescopeCheck> {
    validate_step(h)?;
    let cofactor = factorial_cofactor(n, j)?;
    let y = x + Rational::from_integer(factorial(n)) * h;
    let stride = h * int(j);
    let sum = |base: &Rational, range: std::ops::RangeInclusive<usize>| -> Result<Rational> {
        let mut acc = Rational::zero();
        for i in range {
            acc += g.eval(&(base + &stride * int(i)))?;
        }
        Ok(acc)
    };
    let lhs = sum(x, 1..=count)? - sum(&y, 1..=count)?;
    let rhs = sum(x, 1..=cofactor)? - sum(x, count + 1..=count + cofactor)?;
    let equal = lhs == rhs;
    Ok(TelescopeCheck {
        cofactor,
        y,
        lhs,
        rhs,
        equal,
    })
}
