//! Smallest Lipschitz constant of a unit-norm survivor of the constraint
//! system.
//!
//! A survivor is a kernel vector `f` read as the piecewise-linear function on
//! the grid `{k/L}`; its Lipschitz constant is `L * max_k |f_{k+1} - f_k|`.
//! Normalizing `max |f_k| = 1` is not convex, so each admissible grid point
//! `p` is pinned to `f_p = 1` in turn (`-1` is the same problem up to sign)
//! and the resulting linear programs are solved exactly. With the
//! substitution `g = f + 1` every variable is non-negative:
//!
//! ```text
//! minimize t
//!   A g = A 1,   g_p = 2,   g_k <= 2,
//!   L (g_{k+1} - g_k) <= t,   L (g_k - g_{k+1}) <= t
//! ```
//!
//! The constraint system is symmetric under `x -> 1 - x` (row `n` picks up a
//! factor `(-1)^n`), so only pins `p <= L/2` are solved.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::func::GridFunction;
use crate::lab::constraints::{build_constraint_system, nullspace, ConstraintSystem};
use crate::lab::simplex::{Constraint, LinearProgram, LpOutcome, Relation};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinLipschitz {
    /// The kernel is trivial: no nonzero survivor exists.
    Infeasible,
    Optimal {
        value: Rational,
        witness: GridFunction,
        /// Grid index pinned to `+1` in the winning program.
        pinned: usize,
    },
}

impl MinLipschitz {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            MinLipschitz::Optimal { value, .. } => Some(value),
            MinLipschitz::Infeasible => None,
        }
    }
}

pub fn min_lipschitz_unit_norm(max_order: usize) -> Result<MinLipschitz> {
    let system = build_constraint_system(max_order)?;
    let report = nullspace(&system);
    if report.dimension == 0 {
        return Ok(MinLipschitz::Infeasible);
    }
    let l = system.denom();
    let pins: Vec<usize> = (0..=l / 2).filter(|&p| !report.is_forced_zero(p)).collect();

    let solve = |&p: &usize| -> Option<(usize, Rational, Vec<Rational>)> {
        match pinned_program(&system, p).solve() {
            LpOutcome::Optimal { value, x } => Some((p, value, x)),
            _ => None,
        }
    };
    #[cfg(feature = "parallel")]
    let results: Vec<_> = {
        use rayon::prelude::*;
        pins.par_iter().filter_map(solve).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<_> = pins.iter().filter_map(solve).collect();

    // smallest value, ties to the smallest pin, so the answer does not
    // depend on scheduling
    let best = results.into_iter().min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    Ok(match best {
        None => MinLipschitz::Infeasible,
        Some((pinned, value, x)) => {
            let values = x[..=l].iter().map(|g| g - Rational::one()).collect();
            MinLipschitz::Optimal {
                value,
                witness: GridFunction::new(l, values)?,
                pinned,
            }
        }
    })
}

/// Variables `g_0..g_L` then `t`.
fn pinned_program(system: &ConstraintSystem, pin: usize) -> LinearProgram {
    let l = system.denom();
    let width = l + 2;
    let t = l + 1;
    let two = Rational::from_integer(BigInt::from(2));
    let big_l = Rational::from_integer(BigInt::from(l));
    let unit = |entries: &[(usize, Rational)]| {
        let mut v = vec![Rational::zero(); width];
        for (j, c) in entries {
            v[*j] = c.clone();
        }
        v
    };

    let mut constraints = Vec::new();
    for row in system.rows() {
        let coeffs: Vec<Rational> = row
            .iter()
            .map(|a| Rational::from_integer(a.clone()))
            .chain(std::iter::once(Rational::zero()))
            .collect();
        let rhs = Rational::from_integer(row.iter().sum());
        constraints.push(Constraint {
            coeffs,
            relation: Relation::Eq,
            rhs,
        });
    }
    constraints.push(Constraint {
        coeffs: unit(&[(pin, Rational::one())]),
        relation: Relation::Eq,
        rhs: two.clone(),
    });
    for k in 0..=l {
        if k != pin {
            constraints.push(Constraint {
                coeffs: unit(&[(k, Rational::one())]),
                relation: Relation::Le,
                rhs: two.clone(),
            });
        }
    }
    for k in 0..l {
        for sign in [Rational::one(), -Rational::one()] {
            constraints.push(Constraint {
                coeffs: unit(&[(k + 1, &sign * &big_l), (k, -&sign * &big_l), (t, -Rational::one())]),
                relation: Relation::Le,
                rhs: Rational::zero(),
            });
        }
    }
    LinearProgram {
        objective: unit(&[(t, Rational::one())]),
        constraints,
    }
}
