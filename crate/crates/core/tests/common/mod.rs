//! Seeded generators and independent oracles shared by the integration tests.

#![allow(dead_code)]

use divdiff_core::rational::{int, ratio};
use divdiff_core::{FuncSpec, GridFunction, Polynomial, Rational};
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(r: &mut impl Rng) -> Rational {
    ratio(r.gen_range(-40..=40), r.gen_range(1..=12))
}

/// A rational in `[0, 1]` with denominator at most `den`.
pub fn unit_point(r: &mut impl Rng, den: i64) -> Rational {
    let d = r.gen_range(1..=den);
    ratio(r.gen_range(0..=d), d)
}

pub fn polynomial(r: &mut impl Rng, max_degree: usize) -> Polynomial {
    let d = r.gen_range(0..=max_degree);
    Polynomial::new((0..=d).map(|_| small_rational(r)).collect())
}

/// Exactly degree `d`.
pub fn polynomial_of_degree(r: &mut impl Rng, d: usize) -> Polynomial {
    let mut c: Vec<Rational> = (0..=d).map(|_| small_rational(r)).collect();
    while c[d].is_zero() {
        c[d] = small_rational(r);
    }
    Polynomial::new(c)
}

/// Denominator with nonnegative coefficients and positive constant term, so
/// it has no zero on `[0, ∞)`.
pub fn positive_denominator(r: &mut impl Rng) -> Polynomial {
    let d = r.gen_range(1..=3);
    let mut c: Vec<Rational> = (0..=d).map(|_| ratio(r.gen_range(0..=9), r.gen_range(1..=5))).collect();
    c[0] = ratio(r.gen_range(1..=9), r.gen_range(1..=5));
    Polynomial::new(c)
}

pub fn grid_function(r: &mut impl Rng, max_denom: usize) -> GridFunction {
    let l = r.gen_range(1..=max_denom);
    GridFunction::new(l, (0..=l).map(|_| small_rational(r)).collect()).unwrap()
}

/// Polynomial, rational or piecewise-linear, in rotation.
pub fn func_spec(r: &mut impl Rng) -> FuncSpec {
    match r.gen_range(0..3) {
        0 => FuncSpec::poly(polynomial(r, 10)),
        1 => FuncSpec::ratfun(polynomial(r, 6), positive_denominator(r)).unwrap(),
        _ => FuncSpec::piecewise_linear(grid_function(r, 12)),
    }
}

/// Leading coefficient of the interpolant through `(x_k, y_k)`, found by
/// solving the Vandermonde system with plain Gaussian elimination.
pub fn vandermonde_leading(xs: &[Rational], ys: &[Rational]) -> Rational {
    let n = xs.len();
    let mut a: Vec<Vec<Rational>> = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let mut row = Vec::with_capacity(n + 1);
            let mut p = int(1);
            for _ in 0..n {
                row.push(p.clone());
                p *= x;
            }
            row.push(y.clone());
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !a[i][col].is_zero()).expect("distinct knots");
        a.swap(col, piv);
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let f = &a[i][col] / &a[col][col];
                let pivot_row = a[col].clone();
                for (dst, src) in a[i].iter_mut().zip(&pivot_row).skip(col) {
                    *dst -= &f * src;
                }
            }
        }
    }
    &a[n - 1][n] / &a[n - 1][n - 1]
}

/// Distinct random knots in `[-2, 2]`.
pub fn distinct_knots(r: &mut impl Rng, count: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let k = ratio(r.gen_range(-60..=60), r.gen_range(1..=30));
        if !out.contains(&k) {
            out.push(k);
        }
    }
    out
}
