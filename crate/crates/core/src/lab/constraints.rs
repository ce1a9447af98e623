//! The truncated hypothesis as a linear system over grid values.
//!
//! With `L = lcm(1..=N)` every knot `k/n`, `n <= N`, lies on the grid
//! `{k/L}`, so "`f(0) = 0` and `Δ_{1/n}^n f(0) = 0` for `n = 1..=N`" is an
//! integer matrix acting on the unknowns `f(k/L)`. A vanishing finite
//! difference at step `1/n` is the same condition as a vanishing
//! equispaced divided difference, so the integer rows carry the same kernel
//! as the `1/Ω'` rows.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::func::{FuncSpec, GridFunction};
use crate::rational::{binomial_row, lcm_upto, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    max_order: usize,
    denom: usize,
    rows: Vec<Vec<BigInt>>,
}

/// Builds the `(N + 1) x (L + 1)` system for orders up to `max_order`.
pub fn build_constraint_system(max_order: usize) -> Result<ConstraintSystem> {
    if max_order == 0 {
        return Err(Error::InvalidArgument("maximum order must be at least 1".into()));
    }
    let denom = lcm_upto(max_order)
        .to_usize()
        .ok_or_else(|| Error::InvalidArgument(format!("lcm(1..={max_order}) overflows")))?;
    let width = denom + 1;
    let mut rows = Vec::with_capacity(max_order + 1);
    let mut origin = vec![BigInt::zero(); width];
    origin[0] = BigInt::one();
    rows.push(origin);
    for n in 1..=max_order {
        let stride = denom / n;
        let mut row = vec![BigInt::zero(); width];
        for (j, c) in binomial_row(n).into_iter().enumerate() {
            row[j * stride] = if (n - j) % 2 == 0 { c } else { -c };
        }
        rows.push(row);
    }
    Ok(ConstraintSystem { max_order, denom, rows })
}

impl ConstraintSystem {
    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// The grid denominator `L`.
    pub fn denom(&self) -> usize {
        self.denom
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn num_unknowns(&self) -> usize {
        self.denom + 1
    }

    /// Applies every row to the grid values.
    pub fn apply(&self, values: &[Rational]) -> Vec<Rational> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(values)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, v)| v * Rational::from_integer(a.clone()))
                    .sum()
            })
            .collect()
    }

    /// True when `g` is on this grid and satisfies every row.
    pub fn is_satisfied_by(&self, g: &GridFunction) -> bool {
        g.denom() == self.denom && self.apply(g.values()).iter().all(Zero::is_zero)
    }

    /// Samples `f` on the grid `{k/L}`.
    pub fn sample(&self, f: &FuncSpec) -> Result<Vec<Rational>> {
        let l = BigInt::from(self.denom);
        (0..=self.denom)
            .map(|k| f.eval(&Rational::new(BigInt::from(k), l.clone())))
            .collect()
    }
}

/// Kernel of an integer matrix, kept in reduced row-echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerKernel {
    width: usize,
    /// Reduced rows; row `r` has `pivots[r]` as its only nonzero pivot-column entry.
    reduced: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

/// Fraction-free Gauss-Jordan elimination: rows stay integral and are divided
/// by their content after every update.
pub fn integer_kernel(rows: &[Vec<BigInt>], width: usize) -> IntegerKernel {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), width, "ragged matrix");
            r.clone()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..width {
        if rank == m.len() {
            break;
        }
        // smallest nonzero entry keeps the multipliers small
        let Some(pick) = (rank..m.len())
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].abs())
        else {
            continue;
        };
        m.swap(rank, pick);
        let (head, tail) = m.split_at_mut(rank + 1);
        let (pivot_row, above) = head.split_last_mut().expect("pivot row present");
        for row in above.iter_mut().chain(tail.iter_mut()) {
            eliminate(row, pivot_row, col);
        }
        pivots.push(col);
        rank += 1;
    }
    m.truncate(rank);
    for row in &mut m {
        remove_content(row);
    }
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let free = (0..width).filter(|c| !pivot_set.contains(c)).collect();
    IntegerKernel {
        width,
        reduced: m,
        pivots,
        free,
    }
}

/// `row <- (p/g) row - (a/g) pivot_row` with `a = row[col]`, `p = pivot_row[col]`,
/// `g = gcd(a, p)`; clears `row[col]`.
fn eliminate(row: &mut [BigInt], pivot_row: &[BigInt], col: usize) {
    let a = row[col].clone();
    if a.is_zero() {
        return;
    }
    let p = &pivot_row[col];
    let g = a.gcd(p);
    let (pm, am) = (p / &g, &a / &g);
    for (x, y) in row.iter_mut().zip(pivot_row) {
        if y.is_zero() {
            if !x.is_zero() {
                *x *= &pm;
            }
        } else {
            *x = &*x * &pm - y * &am;
        }
    }
    remove_content(row);
}

fn remove_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        row.iter_mut().for_each(|x| *x /= &g);
    }
}

impl IntegerKernel {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn dimension(&self) -> usize {
        self.free.len()
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    /// Basis vector `i` as `(column, value)` pairs with nonzero value: one at
    /// its free column, `-a[r][free] / a[r][pivot]` at each pivot column.
    pub fn sparse_basis_vector(&self, i: usize) -> Vec<(usize, Rational)> {
        let f = self.free[i];
        let mut entries: Vec<(usize, Rational)> = self
            .reduced
            .iter()
            .zip(&self.pivots)
            .filter(|(row, _)| !row[f].is_zero())
            .map(|(row, &p)| (p, -Rational::new(row[f].clone(), row[p].clone())))
            .collect();
        entries.push((f, Rational::one()));
        entries.sort_by_key(|(c, _)| *c);
        entries
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.width];
        for (c, x) in self.sparse_basis_vector(i) {
            v[c] = x;
        }
        v
    }

    /// Columns that vanish in every kernel vector: pivot columns whose
    /// reduced row has no free-column entries.
    pub fn forced_zero_columns(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .reduced
            .iter()
            .zip(&self.pivots)
            .filter(|(row, _)| self.free.iter().all(|&f| row[f].is_zero()))
            .map(|(_, &p)| p)
            .collect();
        out.sort_unstable();
        out
    }
}

/// Exact kernel of a [`ConstraintSystem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullspaceReport {
    pub max_order: usize,
    pub denom: usize,
    pub rank: usize,
    pub dimension: usize,
    pub forced_zero_points: Vec<usize>,
    kernel: IntegerKernel,
}

impl NullspaceReport {
    pub fn kernel(&self) -> &IntegerKernel {
        &self.kernel
    }

    pub fn basis_vector(&self, i: usize) -> GridFunction {
        GridFunction::new(self.denom, self.kernel.basis_vector(i)).expect("kernel vector has L + 1 entries")
    }

    /// Every basis vector as a grid function. Allocates `dimension x (L + 1)`
    /// rationals; use [`IntegerKernel::sparse_basis_vector`] for large `N`.
    pub fn basis(&self) -> Vec<GridFunction> {
        (0..self.dimension).map(|i| self.basis_vector(i)).collect()
    }

    pub fn is_forced_zero(&self, k: usize) -> bool {
        self.forced_zero_points.binary_search(&k).is_ok()
    }
}

pub fn nullspace(system: &ConstraintSystem) -> NullspaceReport {
    let kernel = integer_kernel(system.rows(), system.num_unknowns());
    NullspaceReport {
        max_order: system.max_order(),
        denom: system.denom(),
        rank: kernel.rank(),
        dimension: kernel.dimension(),
        forced_zero_points: kernel.forced_zero_columns(),
        kernel,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_systems_by_hand() {
        let s = build_constraint_system(1).unwrap();
        assert_eq!(s.denom(), 1);
        assert_eq!(s.rows(), &[ints(&[1, 0]), ints(&[-1, 1])]);

        let s = build_constraint_system(2).unwrap();
        assert_eq!(s.denom(), 2);
        assert_eq!(s.rows(), &[ints(&[1, 0, 0]), ints(&[-1, 0, 1]), ints(&[1, -2, 1])]);
    }

    #[test]
    fn order_four_row_pattern() {
        let s = build_constraint_system(4).unwrap();
        assert_eq!(s.denom(), 12);
        assert_eq!(s.rows().len(), 5);
        let row = &s.rows()[4];
        let nonzero: Vec<(usize, i64)> = row
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(k, a)| (k, a.to_i64().unwrap()))
            .collect();
        assert_eq!(nonzero, vec![(0, 1), (3, -4), (6, 6), (9, -4), (12, 1)]);
        for (n, row) in s.rows().iter().enumerate().skip(1) {
            assert_eq!(row.iter().filter(|a| !a.is_zero()).count(), n + 1);
        }
    }

    #[test]
    fn order_zero_is_rejected() {
        assert!(build_constraint_system(0).is_err());
    }

    #[test]
    fn nullspace_fixtures() {
        for n in 1..=2 {
            let r = nullspace(&build_constraint_system(n).unwrap());
            assert_eq!(r.dimension, 0);
        }
        let r = nullspace(&build_constraint_system(3).unwrap());
        assert_eq!((r.denom, r.rank, r.dimension), (6, 4, 3));
        assert_eq!(r.forced_zero_points, vec![0, 3, 6]);
        for g in r.basis() {
            assert_eq!(g.values()[2], g.values()[4]);
        }
        let r = nullspace(&build_constraint_system(4).unwrap());
        assert_eq!((r.rank, r.dimension), (5, 8));
    }

    #[test]
    fn kernel_of_a_dependent_matrix() {
        // second row is twice the first
        let rows = vec![ints(&[2, 4, -6]), ints(&[4, 8, -12]), ints(&[0, 3, 3])];
        let k = integer_kernel(&rows, 3);
        assert_eq!(k.rank(), 2);
        assert_eq!(k.dimension(), 1);
        let v = k.basis_vector(0);
        for row in &rows {
            let dot: Rational = row
                .iter()
                .zip(&v)
                .map(|(a, x)| x * Rational::from_integer(a.clone()))
                .sum();
            assert!(dot.is_zero());
        }
        assert_eq!(v, vec![int(5), int(-1), int(1)]);
    }

    #[test]
    fn basis_vectors_satisfy_the_system() {
        for n in 1..=6 {
            let s = build_constraint_system(n).unwrap();
            let r = nullspace(&s);
            assert_eq!(r.rank + r.dimension, s.num_unknowns());
            for g in r.basis() {
                assert!(s.is_satisfied_by(&g));
            }
        }
    }
}
