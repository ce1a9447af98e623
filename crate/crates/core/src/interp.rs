//! Lagrange interpolation at the equispaced knots `0, 1/n, ..., 1`.

use num_traits::Zero;

use crate::differences::{equispaced_knots, newton_coefficients, KnotValueList};
use crate::error::{Error, Result};
use crate::func::FuncSpec;
use crate::poly::Polynomial;
use crate::rational::Rational;

/// `values[k] = f(k/n)` for `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquispacedSample {
    n: usize,
    values: Vec<Rational>,
}

impl EquispacedSample {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        if values.len() != n + 1 {
            return Err(Error::SampleLength {
                order: n,
                expected: n + 1,
                got: values.len(),
            });
        }
        Ok(EquispacedSample { n, values })
    }

    pub fn of(f: &FuncSpec, n: usize) -> Result<Self> {
        EquispacedSample::new(n, f.sample_uniform(n)?)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn knot_values(&self) -> KnotValueList {
        KnotValueList::from_parts(equispaced_knots(self.n), self.values.clone()).expect("equispaced knots are distinct")
    }
}

/// `Q_n`: the polynomial of formal degree `<= n` through every sample point,
/// expanded from its Newton form into the monomial basis.
pub fn lagrange_equispaced(s: &EquispacedSample) -> Polynomial {
    let kv = s.knot_values();
    let coeffs = newton_coefficients(&kv);
    let knots: Vec<&Rational> = kv.knots().collect();
    // nested form: c_0 + (x - x_0)(c_1 + (x - x_1)(c_2 + ...))
    coeffs.iter().enumerate().rev().fold(Polynomial::zero(), |acc, (k, c)| {
        let acc = if k + 1 < coeffs.len() {
            acc.mul_linear(knots[k])
        } else {
            acc
        };
        &acc + &Polynomial::constant(c.clone())
    })
}

/// Coefficient of `x^n` in `q`, zero when `deg q < n`.
pub fn leading_coefficient(q: &Polynomial, n: usize) -> Result<Rational> {
    match q.degree() {
        Some(d) if d > n => Err(Error::DegreeExceedsOrder { degree: d, order: n }),
        _ => Ok(q.coeff(n)),
    }
}

/// True when `Q_n` has degree below `n`.
pub fn degree_reduced(s: &EquispacedSample) -> bool {
    let q = lagrange_equispaced(s);
    leading_coefficient(&q, s.order())
        .expect("interpolant degree never exceeds its order")
        .is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::differences::divided_difference_direct;
    use crate::rational::{int, ratio};

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn line_through_two_points() {
        let s = EquispacedSample::new(1, vec![int(0), int(1)]).unwrap();
        assert_eq!(lagrange_equispaced(&s), Polynomial::x());
    }

    #[test]
    fn reproduces_cubic() {
        let p = poly(&[0, -1, 0, 1]);
        let s = EquispacedSample::of(&FuncSpec::poly(p.clone()), 3).unwrap();
        assert_eq!(lagrange_equispaced(&s), p);
    }

    #[test]
    fn interpolates_arbitrary_values() {
        let values = vec![ratio(3, 7), int(-2), ratio(1, 9), int(0), ratio(-5, 2)];
        let s = EquispacedSample::new(4, values.clone()).unwrap();
        let q = lagrange_equispaced(&s);
        for (k, v) in values.iter().enumerate() {
            assert_eq!(q.eval(&ratio(k as i64, 4)), *v);
        }
        assert_eq!(
            leading_coefficient(&q, 4).unwrap(),
            divided_difference_direct(&s.knot_values())
        );
    }

    #[test]
    fn order_zero_is_constant() {
        let s = EquispacedSample::new(0, vec![ratio(2, 3)]).unwrap();
        assert_eq!(lagrange_equispaced(&s), Polynomial::constant(ratio(2, 3)));
    }

    #[test]
    fn leading_coefficient_fixtures() {
        assert_eq!(leading_coefficient(&Polynomial::x(), 1).unwrap(), int(1));
        assert_eq!(leading_coefficient(&Polynomial::x(), 2).unwrap(), int(0));
        assert_eq!(
            leading_coefficient(&Polynomial::monomial(3), 2),
            Err(Error::DegreeExceedsOrder { degree: 3, order: 2 })
        );
    }

    #[test]
    fn degree_reduction_fixtures() {
        // x(x - 1)(x - 1/2) vanishes at 0, 1/2, 1
        let f = FuncSpec::poly(Polynomial::from_roots(&[int(0), int(1), ratio(1, 2)]));
        assert!(degree_reduced(&EquispacedSample::of(&f, 2).unwrap()));
        let sq = FuncSpec::poly(poly(&[0, 0, 1]));
        assert!(!degree_reduced(&EquispacedSample::of(&sq, 2).unwrap()));
        let quad = FuncSpec::poly(poly(&[0, -1, 1]));
        assert!(degree_reduced(&EquispacedSample::of(&quad, 3).unwrap()));
    }

    #[test]
    fn sample_length_is_checked() {
        assert!(EquispacedSample::new(2, vec![int(0); 2]).is_err());
    }
}
