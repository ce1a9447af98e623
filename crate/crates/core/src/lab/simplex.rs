//! Dense two-phase simplex over exact rationals.
//!
//! Minimizes `c·x` subject to linear rows and `x >= 0`. Pricing is Dantzig's
//! most-negative reduced cost; after a run of degenerate pivots it switches
//! to Bland's rule for the rest of the phase, which rules out cycling.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `minimize objective·x` subject to `constraints`, `x >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, x: Vec<Rational> },
    Infeasible,
    Unbounded,
}

const DEGENERATE_STREAK: usize = 50;

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// reduced costs and the negated objective value
    cost: Vec<Rational>,
    cost_rhs: Rational,
}

impl Tableau {
    fn pivot(&mut self, r: usize, e: usize) {
        let p = self.rows[r][e].clone();
        for v in self.rows[r].iter_mut().filter(|v| !v.is_zero()) {
            *v /= &p;
        }
        self.rhs[r] /= &p;
        let (pivot_row, pivot_rhs) = (self.rows[r].clone(), self.rhs[r].clone());
        let nonzero: Vec<usize> = pivot_row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, _)| j)
            .collect();
        let update = |row: &mut Vec<Rational>, rhs: &mut Rational| {
            let factor = row[e].clone();
            if factor.is_zero() {
                return;
            }
            for &j in &nonzero {
                let d = &factor * &pivot_row[j];
                row[j] -= d;
            }
            *rhs -= &factor * &pivot_rhs;
        };
        for i in 0..self.rows.len() {
            if i != r {
                let (row, rhs) = (&mut self.rows[i], &mut self.rhs[i]);
                update(row, rhs);
            }
        }
        update(&mut self.cost, &mut self.cost_rhs);
        self.basis[r] = e;
    }

    fn set_costs(&mut self, costs: &[Rational]) {
        self.cost = costs.to_vec();
        self.cost_rhs = Rational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = costs[b].clone();
            if cb.is_zero() {
                continue;
            }
            for (j, v) in self.rows[i].iter().enumerate() {
                if !v.is_zero() {
                    self.cost[j] -= &cb * v;
                }
            }
            self.cost_rhs -= &cb * &self.rhs[i];
        }
    }

    /// Runs simplex iterations over the allowed columns. Returns false when
    /// the objective is unbounded below.
    fn optimize(&mut self, allowed: usize) -> bool {
        let mut degenerate = 0;
        loop {
            let bland = degenerate >= DEGENERATE_STREAK;
            let entering = if bland {
                (0..allowed).find(|&j| self.cost[j].is_negative())
            } else {
                (0..allowed)
                    .filter(|&j| self.cost[j].is_negative())
                    .min_by(|&a, &b| self.cost[a].cmp(&self.cost[b]).then(a.cmp(&b)))
            };
            let Some(e) = entering else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][e];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, ratio)) = leave else {
                return false;
            };
            if ratio.is_zero() {
                degenerate += 1;
            } else if !bland {
                degenerate = 0;
            }
            self.pivot(r, e);
        }
    }
}

impl LinearProgram {
    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn solve(&self) -> LpOutcome {
        let n = self.num_vars();
        let m = self.constraints.len();
        let normalized: Vec<(Vec<Rational>, Relation, Rational)> = self
            .constraints
            .iter()
            .map(|c| {
                assert_eq!(c.coeffs.len(), n, "constraint width differs from objective");
                if c.rhs.is_negative() {
                    let flipped = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|v| -v).collect(), flipped, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();
        let slacks = normalized.iter().filter(|c| c.1 != Relation::Eq).count();
        let artificials = normalized.iter().filter(|c| c.1 != Relation::Le).count();
        let width = n + slacks + artificials;
        let first_artificial = n + slacks;

        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let (mut next_slack, mut next_art) = (n, first_artificial);
        for (coeffs, rel, b) in normalized {
            let mut row = coeffs;
            row.resize(width, Rational::zero());
            match rel {
                Relation::Le => {
                    row[next_slack] = Rational::from_integer(1.into());
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = Rational::from_integer((-1).into());
                    next_slack += 1;
                    row[next_art] = Rational::from_integer(1.into());
                    basis.push(next_art);
                    next_art += 1;
                }
                Relation::Eq => {
                    row[next_art] = Rational::from_integer(1.into());
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            rows.push(row);
            rhs.push(b);
        }
        let mut t = Tableau {
            rows,
            rhs,
            basis,
            cost: Vec::new(),
            cost_rhs: Rational::zero(),
        };

        if artificials > 0 {
            let phase_one: Vec<Rational> = (0..width)
                .map(|j| {
                    if j >= first_artificial {
                        Rational::from_integer(1.into())
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            t.set_costs(&phase_one);
            t.optimize(width);
            if !t.cost_rhs.is_zero() {
                return LpOutcome::Infeasible;
            }
            // drive zero-level artificials out of the basis
            let mut i = 0;
            while i < t.rows.len() {
                if t.basis[i] >= first_artificial {
                    match (0..first_artificial).find(|&j| !t.rows[i][j].is_zero()) {
                        Some(j) => t.pivot(i, j),
                        None => {
                            t.rows.remove(i);
                            t.rhs.remove(i);
                            t.basis.remove(i);
                            continue;
                        }
                    }
                }
                i += 1;
            }
        }

        let mut costs = self.objective.clone();
        costs.resize(width, Rational::zero());
        t.set_costs(&costs);
        if !t.optimize(first_artificial) {
            return LpOutcome::Unbounded;
        }
        let mut x = vec![Rational::zero(); n];
        for (i, &b) in t.basis.iter().enumerate() {
            if b < n {
                x[b] = t.rhs[i].clone();
            }
        }
        LpOutcome::Optimal { value: -t.cost_rhs, x }
    }
}
