//! Compact scheme for the fractional diffusion-wave equation
//! `C_D_t^γ u = κ u_xx + g`, `1 < γ < 2`, solved in its integrated form
//!
//! ```text
//! u_t = φ(x) + κ I_t^α u_xx + f,   α = γ - 1,  f = I_t^α g,
//! ```
//!
//! where `φ` is the initial velocity.

use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{apply_compact, Field, Grid};
use crate::stepper::{MemoryTerm, SolutionHistory, SpaceFn, SpaceTimeFn, Stepper, TimeFn};
use crate::weights::{lambda_wave, FracOrder, WeightSequence};

#[derive(Clone)]
pub struct WaveProblem {
    /// Caputo order in `(1, 2)`.
    pub gamma: f64,
    /// `γ - 1`.
    pub alpha: FracOrder,
    pub kappa: f64,
    pub initial_velocity: SpaceFn,
    /// The integrated source `I^α g`, in closed form.
    pub transformed_source: SpaceTimeFn,
    pub left_bc: TimeFn,
    pub right_bc: TimeFn,
    pub initial: Option<Field>,
    pub exact: Option<SpaceTimeFn>,
}

impl fmt::Debug for WaveProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WaveProblem")
            .field("gamma", &self.gamma)
            .field("kappa", &self.kappa)
            .field("has_initial", &self.initial.is_some())
            .field("has_exact", &self.exact.is_some())
            .finish()
    }
}

impl WaveProblem {
    /// Builds a problem from the Caputo order `γ`; `α = γ - 1` is derived.
    pub fn new(
        gamma: f64,
        kappa: f64,
        initial_velocity: SpaceFn,
        transformed_source: SpaceTimeFn,
        left_bc: TimeFn,
        right_bc: TimeFn,
    ) -> Result<Self> {
        if !(gamma > 1.0 && gamma < 2.0) {
            return Err(Error::Domain {
                what: "gamma",
                value: gamma,
                domain: "(1, 2)",
            });
        }
        let problem = Self {
            gamma,
            alpha: FracOrder::new(gamma - 1.0)?,
            kappa,
            initial_velocity,
            transformed_source,
            left_bc,
            right_bc,
            initial: None,
            exact: None,
        };
        problem.validate()?;
        Ok(problem)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.kappa > 0.0 && self.kappa.is_finite()) {
            return Err(Error::InvalidProblem(format!(
                "kappa must be > 0, got {}",
                self.kappa
            )));
        }
        if !(self.gamma > 1.0 && self.gamma < 2.0) {
            return Err(Error::Domain {
                what: "gamma",
                value: self.gamma,
                domain: "(1, 2)",
            });
        }
        if ((self.gamma - 1.0) - self.alpha.value()).abs() > 1e-12 {
            return Err(Error::InvalidProblem(format!(
                "alpha = {} does not match gamma - 1 = {}",
                self.alpha.value(),
                self.gamma - 1.0
            )));
        }
        Ok(())
    }
}

/// Same sums as [`crate::stepper::history_term`]; the wave weights are
/// simply a different `λ` sequence.
pub fn history_term_wave(
    levels: &[Field],
    n: usize,
    lambdas: &WeightSequence,
    h: f64,
) -> Result<Field> {
    crate::stepper::history_term(levels, n, lambdas, h)
}

pub fn solve_wave(problem: &WaveProblem, grid: &Grid) -> Result<SolutionHistory> {
    solve_wave_with_velocity_offset(problem, grid, None)
}

/// Runs with nodal values `offset` added to the sampled initial velocity.
pub(crate) fn solve_wave_with_velocity_offset(
    problem: &WaveProblem,
    grid: &Grid,
    offset: Option<&Field>,
) -> Result<SolutionHistory> {
    problem.validate()?;
    let tau = grid.tau();
    let alpha = problem.alpha;
    let mut velocity = grid.sample(|x| (problem.initial_velocity)(x));
    if let Some(extra) = offset {
        velocity = velocity.add(extra)?;
    }
    let velocity = apply_compact(&velocity)?;
    let stepper = Stepper {
        grid: *grid,
        terms: vec![MemoryTerm {
            coeff: 0.5 * problem.kappa * tau.powf(alpha.value() + 1.0),
            lambdas: lambda_wave(alpha, grid.n()),
        }],
        source: &problem.transformed_source,
        left: &problem.left_bc,
        right: &problem.right_bc,
        initial: problem
            .initial
            .clone()
            .unwrap_or_else(|| Field::zeros(grid.m() + 1)),
        forcing: Some(velocity.scaled(tau)),
    };
    stepper.run()
}
