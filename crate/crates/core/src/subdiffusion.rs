//! Compact scheme for the modified anomalous sub-diffusion equation
//!
//! ```text
//! u_t = (κ1 D_t^α + κ2 D_t^β) u_xx + f,   0 < α, β < 1,
//! ```
//!
//! with Riemann-Liouville derivatives in time, Dirichlet boundaries and zero
//! initial data.

use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{Field, Grid, Tridiagonal};
use crate::stepper::{implicit_matrix, MemoryTerm, SolutionHistory, SpaceTimeFn, Stepper, TimeFn};
use crate::weights::{lambda_subdiffusion, FracOrder, WeightSequence};

#[derive(Clone)]
pub struct SubDiffusionProblem {
    pub alpha: FracOrder,
    pub beta: FracOrder,
    pub kappa1: f64,
    pub kappa2: f64,
    pub source: SpaceTimeFn,
    pub left_bc: TimeFn,
    pub right_bc: TimeFn,
    /// `u^0`; `None` means zero. A nonzero field is only meaningful for
    /// perturbation studies.
    pub initial: Option<Field>,
    pub exact: Option<SpaceTimeFn>,
}

impl fmt::Debug for SubDiffusionProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubDiffusionProblem")
            .field("alpha", &self.alpha)
            .field("beta", &self.beta)
            .field("kappa1", &self.kappa1)
            .field("kappa2", &self.kappa2)
            .field("has_initial", &self.initial.is_some())
            .field("has_exact", &self.exact.is_some())
            .finish()
    }
}

impl SubDiffusionProblem {
    pub fn validate(&self) -> Result<()> {
        for (name, k) in [("kappa1", self.kappa1), ("kappa2", self.kappa2)] {
            if !(k >= 0.0 && k.is_finite()) {
                return Err(Error::InvalidProblem(format!(
                    "{name} must be >= 0, got {k}"
                )));
            }
        }
        Ok(())
    }

    fn memory_coefficients(&self, grid: &Grid) -> (f64, f64) {
        let tau = grid.tau();
        (
            0.5 * self.kappa1 * tau.powf(1.0 - self.alpha.value()),
            0.5 * self.kappa2 * tau.powf(1.0 - self.beta.value()),
        )
    }
}

/// Implicit-level matrix
/// `H - (κ1 τ^{1-α}/2) λ_0^{(α)} δx² - (κ2 τ^{1-β}/2) λ_0^{(β)} δx²` on the interior.
pub fn assemble_lhs(
    problem: &SubDiffusionProblem,
    grid: &Grid,
    lambdas_alpha: &WeightSequence,
    lambdas_beta: &WeightSequence,
) -> Tridiagonal {
    let (c1, c2) = problem.memory_coefficients(grid);
    implicit_matrix(grid, c1 * lambdas_alpha[0] + c2 * lambdas_beta[0])
}

pub fn solve(problem: &SubDiffusionProblem, grid: &Grid) -> Result<SolutionHistory> {
    problem.validate()?;
    let n = grid.n();
    let (c1, c2) = problem.memory_coefficients(grid);
    let stepper = Stepper {
        grid: *grid,
        terms: vec![
            MemoryTerm {
                coeff: c1,
                lambdas: lambda_subdiffusion(problem.alpha, n),
            },
            MemoryTerm {
                coeff: c2,
                lambdas: lambda_subdiffusion(problem.beta, n),
            },
        ],
        source: &problem.source,
        left: &problem.left_bc,
        right: &problem.right_bc,
        initial: problem
            .initial
            .clone()
            .unwrap_or_else(|| Field::zeros(grid.m() + 1)),
        forcing: None,
    };
    stepper.run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::sync::Arc;

    fn zero_problem(k1: f64, k2: f64) -> SubDiffusionProblem {
        SubDiffusionProblem {
            alpha: FracOrder::new(0.5).unwrap(),
            beta: FracOrder::new(0.3).unwrap(),
            kappa1: k1,
            kappa2: k2,
            source: Arc::new(|_, _| 0.0),
            left_bc: Arc::new(|_| 0.0),
            right_bc: Arc::new(|_| 0.0),
            initial: None,
            exact: None,
        }
    }

    #[test]
    fn lhs_without_memory_is_compact_matrix() {
        let p = zero_problem(0.0, 0.0);
        let g = Grid::unit(6, 4).unwrap();
        let la = lambda_subdiffusion(p.alpha, 4);
        let lb = lambda_subdiffusion(p.beta, 4);
        let a = assemble_lhs(&p, &g, &la, &lb);
        assert_eq!(a.order(), 5);
        for d in &a.diag {
            assert_relative_eq!(*d, 10.0 / 12.0, max_relative = 1e-15);
        }
        for o in a.lower.iter().chain(&a.upper) {
            assert_relative_eq!(*o, 1.0 / 12.0, max_relative = 1e-15);
        }
    }

    #[test]
    fn lhs_hand_assembly() {
        let p = zero_problem(1.0, 0.0);
        let g = Grid::new(3, 1, 3.0, 1.0).unwrap(); // h = tau = 1
        let la = lambda_subdiffusion(p.alpha, 1);
        let lb = lambda_subdiffusion(p.beta, 1);
        let a = assemble_lhs(&p, &g, &la, &lb);
        assert_relative_eq!(a.diag[0], 10.0 / 12.0 + 1.25, max_relative = 1e-15);
        assert_relative_eq!(a.upper[0], 1.0 / 12.0 - 0.625, max_relative = 1e-15);
    }

    #[test]
    fn zero_data_is_fixed_point() {
        let p = zero_problem(1.0, 0.7);
        let h = solve(&p, &Grid::unit(10, 12).unwrap()).unwrap();
        assert_eq!(h.levels.len(), 13);
        assert!(h.levels.iter().all(|l| l.0.iter().all(|&v| v == 0.0)));
    }

    #[test]
    fn negative_kappa_rejected() {
        let p = zero_problem(-1.0, 0.0);
        assert!(matches!(
            solve(&p, &Grid::unit(4, 4).unwrap()),
            Err(Error::InvalidProblem(_))
        ));
    }

    #[test]
    fn boundary_values_are_imposed() {
        let mut p = zero_problem(1.0, 1.0);
        p.left_bc = Arc::new(|t| 2.0 * t);
        p.right_bc = Arc::new(|t| -t * t);
        let g = Grid::unit(5, 8).unwrap();
        let h = solve(&p, &g).unwrap();
        for k in 1..=8 {
            let t = g.t(k);
            assert_relative_eq!(h.level(k)[0], 2.0 * t);
            assert_relative_eq!(h.level(k)[5], -t * t);
        }
    }
}
