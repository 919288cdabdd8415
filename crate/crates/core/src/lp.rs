//! Small dense linear programs on top of `microlp`.
//!
//! Used for the feasibility programs of the crate: inradius of a polygon,
//! translation search for containment, extreme-point pruning and exact
//! membership in a Minkowski sum of polytopes.

use microlp::{ComparisonOp, OptimizationDirection, Problem};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { objective: f64, x: Vec<f64> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

/// A linear program in the variables `x_0 … x_{n-1}` with box bounds.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    sense: Sense,
    objective: Vec<f64>,
    bounds: Vec<(f64, f64)>,
    rows: Vec<(Vec<(usize, f64)>, Cmp, f64)>,
}

impl LinearProgram {
    pub fn new(sense: Sense) -> Self {
        Self {
            sense,
            objective: Vec::new(),
            bounds: Vec::new(),
            rows: Vec::new(),
        }
    }

    /// Adds a variable and returns its index.
    pub fn var(&mut self, obj: f64, lo: f64, hi: f64) -> usize {
        self.objective.push(obj);
        self.bounds.push((lo, hi));
        self.objective.len() - 1
    }

    pub fn free_var(&mut self, obj: f64) -> usize {
        self.var(obj, f64::NEG_INFINITY, f64::INFINITY)
    }

    /// Adds the sparse row `∑ coeff·x_idx  cmp  rhs`.
    pub fn constraint(&mut self, row: Vec<(usize, f64)>, cmp: Cmp, rhs: f64) {
        self.rows.push((row, cmp, rhs));
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn solve(&self) -> Result<LpOutcome> {
        let dir = match self.sense {
            Sense::Minimize => OptimizationDirection::Minimize,
            Sense::Maximize => OptimizationDirection::Maximize,
        };
        let mut problem = Problem::new(dir);
        let vars: Vec<_> = self
            .objective
            .iter()
            .zip(&self.bounds)
            .map(|(&c, &b)| problem.add_var(c, b))
            .collect();
        for (row, cmp, rhs) in &self.rows {
            let expr: Vec<_> = row.iter().map(|&(i, c)| (vars[i], c)).collect();
            let op = match cmp {
                Cmp::Le => ComparisonOp::Le,
                Cmp::Ge => ComparisonOp::Ge,
                Cmp::Eq => ComparisonOp::Eq,
            };
            problem.add_constraint(expr.as_slice(), op, *rhs);
        }
        match problem.solve() {
            Ok(outcome) => {
                let sol = outcome
                    .into_solution()
                    .map_err(|_| Error::Lp("solve interrupted".into()))?;
                let x = vars.iter().map(|&v| sol.var_value(v)).collect();
                Ok(LpOutcome::Optimal {
                    objective: sol.objective(),
                    x,
                })
            }
            Err(microlp::Error::Infeasible) => Ok(LpOutcome::Infeasible),
            Err(microlp::Error::Unbounded) => Ok(LpOutcome::Unbounded),
            Err(e) => Err(Error::Lp(e.to_string())),
        }
    }
}
