//! Every finite-`N` quantity of the averaging argument for the error
//! `e = f - Q_n`, with `Q_n` the interpolant at `0, 1/n, ..., 1` and `e`
//! taken as zero outside `[0, 1]`.
//!
//! Exact relations computed here, with `w_j = (-1)^{n-j} C(n, j)`,
//! `y = x + n! h` and `j' = n!/j`:
//!
//! ```text
//! A(t)  = (1/N) Σ_{i=1}^{N} Δ_{ih}^n e(t)  = (-1)^n e(t) + B(t)/N
//! A(x) - A(y) = (-1)^n [e(x) - e(y)]
//!             + (1/N) Σ_j w_j [ Σ_{i=1}^{j'} e(x+jih) - Σ_{i=N+1}^{N+j'} e(x+jih) ]
//! ```
//!
//! The second line is the shifted-argument reading of the reindexing step.
//! The report also evaluates the blocks with the index ranges as they are
//! usually displayed (`i = N-j'+1..N` at `x`, `i = 1..j'` at `y`) and flags
//! whether the two readings agree. Nothing is asserted about the limit
//! `N -> ∞`; each O(1/N) term carries an explicit envelope.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::func::FuncSpec;
use crate::interp::{lagrange_equispaced, leading_coefficient, EquispacedSample};
use crate::lab::averaging::{
    boundary_weight, difference_average, factorial_cofactor, touched_sup, validate_step, Eval,
};
use crate::poly::Polynomial;
use crate::rational::{binomial_row, factorial, sign_pow, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftTerms {
    pub j: usize,
    /// `j' = n!/j`.
    pub cofactor: usize,
    /// `(-1)^{n-j} C(n, j)`.
    pub weight: Rational,
    /// `Σ_{i=1}^{j'} e(x + jih)`.
    pub head: Rational,
    /// `Σ_{i=N+1}^{N+j'} e(x + jih)`.
    pub tail: Rational,
    /// `Σ_{i=N-j'+1}^{N} e(x + jih)` (displayed index range).
    pub displayed_tail: Rational,
    /// `Σ_{i=1}^{j'} e(y + ijh)` (displayed index range).
    pub displayed_head_at_y: Rational,
    /// `(-1)^n (j'/N) Q_n(x)`.
    pub interpolant_term: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkthroughReport {
    pub n: usize,
    pub h: Rational,
    pub x: Rational,
    pub count: usize,
    pub y: Rational,
    pub interpolant: Polynomial,
    pub leading_coefficient: Rational,
    pub degree_reduced: bool,
    pub f_at_x: Rational,
    pub interpolant_at_x: Rational,
    pub error_at_x: Rational,
    pub error_at_y: Rational,

    pub average_at_x: Rational,
    pub average_at_y: Rational,
    /// `A(x) - A(y)`.
    pub first_term: Rational,
    /// `(-1)^n [e(x) - e(y)]`, the exact large-`N` value of `first_term`.
    pub first_term_limit: Rational,
    /// `first_term - first_term_limit`, O(1/N).
    pub first_term_residual: Rational,
    pub first_term_envelope: Rational,
    /// `(-1)^n f(x)`, the value the averaging step aims for.
    pub averaging_target: Rational,
    /// `first_term_limit - averaging_target`; does not shrink with `N`.
    pub averaging_target_gap: Rational,

    pub shifts: Vec<ShiftTerms>,
    /// `(1/N) Σ_j w_j (head - tail)`.
    pub second_term: Rational,
    /// `(1/N) Σ_j w_j (displayed_tail - displayed_head_at_y)`.
    pub second_term_displayed: Rational,
    /// `(-1)^n [e(x) - e(y)] = first_term - second_term`, checked exactly.
    pub reindexing_holds: bool,
    /// Whether the displayed index ranges give the same second term.
    pub displayed_indexing_agrees: bool,

    /// `(-1)^n [f(x) - Q_n(x)]`.
    pub final_lhs: Rational,
    /// `final_lhs - A(x)`, O(1/N).
    pub final_residual: Rational,
    pub final_envelope: Rational,
    /// `final_lhs - (-1)^n f(x) = -(-1)^n Q_n(x)`; zero exactly when
    /// `Q_n(x) = 0`.
    pub unresolved_gap: Rational,
}

pub fn proof_walkthrough(
    f: &FuncSpec,
    n: usize,
    h: &Rational,
    count: usize,
    x: &Rational,
) -> Result<WalkthroughReport> {
    validate_step(h)?;
    if count == 0 {
        return Err(crate::error::Error::InvalidArgument(
            "number of averaged steps must be positive".into(),
        ));
    }
    let f = f.clone().with_zero_extension(true);
    let sample = EquispacedSample::of(&f, n)?;
    let q = lagrange_equispaced(&sample);
    let lead = leading_coefficient(&q, n)?;
    let one = Rational::from_integer(1.into());
    let error = |t: &Rational| -> Result<Rational> {
        if *t >= Rational::zero() && *t <= one {
            Ok(f.eval(t)? - q.eval(t))
        } else {
            Ok(Rational::zero())
        }
    };
    let e: &Eval<'_> = &error;
    let nn = Rational::from_integer(BigInt::from(count));
    let sign = sign_pow(n);
    let y = x + Rational::from_integer(factorial(n)) * h;

    let f_at_x = f.eval(x)?;
    let q_at_x = q.eval(x);
    let e_x = e(x)?;
    let e_y = e(&y)?;

    let average_at_x = difference_average(e, x, h, n, count)?;
    let average_at_y = difference_average(e, &y, h, n, count)?;
    let first_term = &average_at_x - &average_at_y;
    let first_term_limit = &sign * (&e_x - &e_y);
    let sup = touched_sup(e, x, h)?;
    let first_term_envelope = (boundary_weight(x, h, n) + boundary_weight(&y, h, n)) * &sup / &nn;
    let averaging_target = &sign * &f_at_x;

    let int = |k: usize| Rational::from_integer(BigInt::from(k));
    let block = |base: &Rational, stride: &Rational, lo: usize, hi: usize| -> Result<Rational> {
        let mut acc = Rational::zero();
        for i in lo..=hi {
            acc += e(&(base + stride * int(i)))?;
        }
        Ok(acc)
    };
    let mut shifts = Vec::with_capacity(n);
    for (j, c) in binomial_row(n).into_iter().enumerate().skip(1) {
        let cofactor = factorial_cofactor(n, j)?;
        let stride = h * int(j);
        let displayed_lo = (count + 1).saturating_sub(cofactor).max(1);
        shifts.push(ShiftTerms {
            j,
            cofactor,
            weight: sign_pow(n - j) * Rational::from_integer(c),
            head: block(x, &stride, 1, cofactor)?,
            tail: block(x, &stride, count + 1, count + cofactor)?,
            displayed_tail: block(x, &stride, displayed_lo, count)?,
            displayed_head_at_y: block(&y, &stride, 1, cofactor)?,
            interpolant_term: &sign * int(cofactor) / &nn * &q_at_x,
        });
    }
    let second_term: Rational = shifts.iter().map(|s| &s.weight * (&s.head - &s.tail)).sum::<Rational>() / &nn;
    let second_term_displayed: Rational = shifts
        .iter()
        .map(|s| &s.weight * (&s.displayed_tail - &s.displayed_head_at_y))
        .sum::<Rational>()
        / &nn;
    let reindexing_holds = first_term_limit == &first_term - &second_term;

    let final_lhs = &sign * (&f_at_x - &q_at_x);
    let final_residual = &final_lhs - &average_at_x;
    let final_envelope = boundary_weight(x, h, n) * &sup / &nn;

    Ok(WalkthroughReport {
        n,
        h: h.clone(),
        x: x.clone(),
        count,
        y,
        degree_reduced: lead.is_zero(),
        leading_coefficient: lead,
        interpolant: q,
        error_at_x: e_x,
        error_at_y: e_y,
        averaging_target_gap: &first_term_limit - &averaging_target,
        first_term_residual: &first_term - &first_term_limit,
        first_term,
        first_term_limit,
        first_term_envelope,
        averaging_target,
        average_at_x,
        average_at_y,
        displayed_indexing_agrees: second_term == second_term_displayed,
        second_term,
        second_term_displayed,
        reindexing_holds,
        unresolved_gap: &final_lhs - &sign * &f_at_x,
        final_lhs,
        final_residual,
        final_envelope,
        f_at_x,
        interpolant_at_x: q_at_x,
        shifts,
    })
}
