//! Polynomial case: for `p` of degree `d`, `Δ_{1/d}^d p(0) = a_d d! (1/d)^d`,
//! so a vanishing top difference kills the leading coefficient. Working down
//! the orders one at a time reaches `a_0 = p(0)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::differences::forward_difference;
use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CascadeVerdict {
    ZeroPolynomial,
    /// Largest order whose equispaced difference does not vanish.
    NonzeroAtOrder(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CascadeCheck {
    pub order: usize,
    /// `Δ_{1/n}^n p(0)`; for order 0 this is `p(0)`.
    pub difference: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CascadeReport {
    pub checks: Vec<CascadeCheck>,
    pub verdict: CascadeVerdict,
}

pub fn polynomial_cascade(p: &Polynomial) -> CascadeReport {
    let top = p.degree().unwrap_or(0);
    let checks: Vec<CascadeCheck> = (0..=top)
        .rev()
        .map(|n| {
            let h = Rational::new(BigInt::one(), BigInt::from(n.max(1)));
            let difference = forward_difference(|t| Ok(p.eval(t)), &Rational::zero(), &h, n)
                .expect("polynomial evaluation cannot fail");
            CascadeCheck { order: n, difference }
        })
        .collect();
    let verdict = checks
        .iter()
        .find(|c| !c.difference.is_zero())
        .map_or(CascadeVerdict::ZeroPolynomial, |c| {
            CascadeVerdict::NonzeroAtOrder(c.order)
        });
    CascadeReport { checks, verdict }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn zero_polynomial() {
        let r = polynomial_cascade(&Polynomial::zero());
        assert_eq!(r.verdict, CascadeVerdict::ZeroPolynomial);
        assert_eq!(r.checks.len(), 1);
        let cancelled = &Polynomial::x() - &Polynomial::x();
        assert_eq!(polynomial_cascade(&cancelled).verdict, CascadeVerdict::ZeroPolynomial);
    }

    #[test]
    fn quadratic_vanishing_at_ends() {
        let p = Polynomial::new(vec![int(0), int(-1), int(1)]);
        let r = polynomial_cascade(&p);
        assert_eq!(r.verdict, CascadeVerdict::NonzeroAtOrder(2));
        assert_eq!(
            r.checks[0],
            CascadeCheck {
                order: 2,
                difference: ratio(1, 2)
            }
        );
        // orders 1 and 0 vanish: p(1) - p(0) = 0, p(0) = 0
        assert!(r.checks[1..].iter().all(|c| c.difference.is_zero()));
    }

    #[test]
    fn constant_polynomial() {
        let r = polynomial_cascade(&Polynomial::constant(ratio(-3, 4)));
        assert_eq!(r.verdict, CascadeVerdict::NonzeroAtOrder(0));
        assert_eq!(r.checks[0].difference, ratio(-3, 4));
    }
}
