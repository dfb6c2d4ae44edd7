//! Fractional-memory time stepping shared by both equations.
//!
//! Each step solves
//!
//! ```text
//! [H - c0 δx²] u^{n+1} = H u^n + δx² Σ_{j=0}^{n} w_{n+1-j} u^j + τ/2 H(f^n + f^{n+1}) + r
//! ```
//!
//! on interior nodes, where every memory term `(c, λ)` contributes
//! `c λ_0` to `c0` and `c (λ_m + λ_{m-1})` to `w_m`, and `r` is an optional
//! time-independent forcing.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{
    apply_compact, second_diff, second_diff_into, thomas_solve, Field, Grid, Tridiagonal,
};
use crate::weights::WeightSequence;

/// Source term `f(x, t)` or exact solution `u(x, t)`.
pub type SpaceTimeFn = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;
/// Boundary data `φ(t)`.
pub type TimeFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
/// Spatial profile `φ(x)`.
pub type SpaceFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Every time level `u^0, ..., u^N` of a run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolutionHistory {
    pub grid: Grid,
    pub levels: Vec<Field>,
}

impl SolutionHistory {
    pub fn level(&self, k: usize) -> &Field {
        &self.levels[k]
    }

    pub fn final_level(&self) -> &Field {
        self.levels.last().expect("history holds at least u^0")
    }
}

/// The known part of the two memory sums at step `n -> n + 1`:
/// `Σ_{k=1}^{n+1} λ_k δx² u^{n+1-k} + Σ_{k=0}^{n} λ_k δx² u^{n-k}`.
///
/// `levels` must hold `u^0..=u^n`.
pub fn history_term(levels: &[Field], n: usize, lambdas: &WeightSequence, h: f64) -> Result<Field> {
    if lambdas.len() < n + 2 {
        return Err(Error::WeightsTooShort {
            need: n + 2,
            have: lambdas.len(),
        });
    }
    if levels.len() < n + 1 {
        return Err(Error::SizeMismatch {
            expected: n + 1,
            got: levels.len(),
        });
    }
    let nodes = levels[0].len();
    let mut out = vec![0.0; nodes];
    let mut add = |coef: f64, level: &Field| -> Result<()> {
        let d2 = second_diff(level, h)?;
        for (o, v) in out.iter_mut().zip(&d2.0) {
            *o += coef * v;
        }
        Ok(())
    };
    for k in 1..=n + 1 {
        add(lambdas[k], &levels[n + 1 - k])?;
    }
    for k in 0..=n {
        add(lambdas[k], &levels[n - k])?;
    }
    Ok(Field(out))
}

pub(crate) struct MemoryTerm {
    pub coeff: f64,
    pub lambdas: WeightSequence,
}

pub(crate) struct Stepper<'a> {
    pub grid: Grid,
    pub terms: Vec<MemoryTerm>,
    pub source: &'a SpaceTimeFn,
    pub left: &'a TimeFn,
    pub right: &'a TimeFn,
    pub initial: Field,
    pub forcing: Option<Field>,
}

/// Interior matrix `H - c0 δx²` of order `M - 1`.
pub(crate) fn implicit_matrix(grid: &Grid, c0: f64) -> Tridiagonal {
    let h2 = grid.h() * grid.h();
    let off = 1.0 / 12.0 - c0 / h2;
    let main = 10.0 / 12.0 + 2.0 * c0 / h2;
    Tridiagonal::constant(grid.m() - 1, off, main, off)
}

impl Stepper<'_> {
    fn leading_coeff(&self) -> f64 {
        self.terms.iter().map(|t| t.coeff * t.lambdas[0]).sum()
    }

    pub fn lhs(&self) -> Tridiagonal {
        implicit_matrix(&self.grid, self.leading_coeff())
    }

    /// `w_m = Σ c (λ_m + λ_{m-1})` for `m = 1..=N`; index 0 is unused.
    fn memory_weights(&self) -> Result<Vec<f64>> {
        let n = self.grid.n();
        let mut w = vec![0.0; n + 1];
        for term in &self.terms {
            if term.lambdas.len() < n + 1 {
                return Err(Error::WeightsTooShort {
                    need: n + 1,
                    have: term.lambdas.len(),
                });
            }
            let lam = term.lambdas.values();
            for (wm, pair) in w[1..].iter_mut().zip(lam.windows(2)) {
                *wm += term.coeff * (pair[1] + pair[0]);
            }
        }
        Ok(w)
    }

    pub fn run(self) -> Result<SolutionHistory> {
        let grid = self.grid;
        let (m, n_steps) = (grid.m(), grid.n());
        let (h, tau) = (grid.h(), grid.tau());
        let nodes = m + 1;
        if self.initial.len() != nodes {
            return Err(Error::SizeMismatch {
                expected: nodes,
                got: self.initial.len(),
            });
        }
        if let Some(r) = &self.forcing {
            if r.len() != nodes {
                return Err(Error::SizeMismatch {
                    expected: nodes,
                    got: r.len(),
                });
            }
        }

        let lhs = self.lhs();
        lhs.check_dominance()?;
        let coupling = 1.0 / 12.0 - self.leading_coeff() / (h * h);
        let weights = self.memory_weights()?;

        let sample_source =
            |t: f64| -> Result<Field> { apply_compact(&grid.sample(|x| (self.source)(x, t))) };

        let mut levels = Vec::with_capacity(n_steps + 1);
        levels.push(self.initial.clone());
        let mut memory = vec![0.0; nodes];
        let mut memory_d2 = vec![0.0; nodes];
        let mut rhs = vec![0.0; m - 1];
        let mut hf_prev = sample_source(0.0)?;

        for n in 0..n_steps {
            let t_next = grid.t(n + 1);

            memory.fill(0.0);
            for (j, level) in levels.iter().enumerate() {
                let w = weights[n + 1 - j];
                for (acc, v) in memory.iter_mut().zip(&level.0) {
                    *acc += w * v;
                }
            }
            second_diff_into(&memory, h, &mut memory_d2);

            let hf_next = sample_source(t_next)?;
            let hu = apply_compact(&levels[n])?;
            for i in 1..m {
                let mut r = hu[i] + memory_d2[i] + 0.5 * tau * (hf_prev[i] + hf_next[i]);
                if let Some(extra) = &self.forcing {
                    r += extra[i];
                }
                rhs[i - 1] = r;
            }
            let left = (self.left)(t_next);
            let right = (self.right)(t_next);
            rhs[0] -= coupling * left;
            rhs[m - 2] -= coupling * right;

            let interior = thomas_solve(&lhs, &rhs)?;
            let mut next = Vec::with_capacity(nodes);
            next.push(left);
            next.extend_from_slice(&interior);
            next.push(right);
            levels.push(Field(next));
            hf_prev = hf_next;
        }

        Ok(SolutionHistory { grid, levels })
    }
}
