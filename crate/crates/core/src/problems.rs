//! Manufactured test problems with closed-form sources.
//!
//! | id                 | equation      | exact solution              |
//! |--------------------|---------------|-----------------------------|
//! | `sub.sinx`         | sub-diffusion | `sin(x) t^{3-α-β}`          |
//! | `sub.t2sin2pix`    | sub-diffusion | `t² sin(2πx)`               |
//! | `wave.exp`         | wave          | `e^x t^{α+2}`               |
//! | `wave.sin2pix_vel` | wave          | none, fine-grid reference   |

use std::f64::consts::PI;
use std::sync::Arc;

use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::stepper::{SolutionHistory, SpaceTimeFn};
use crate::subdiffusion::{self, SubDiffusionProblem};
use crate::wave::{self, WaveProblem};
use crate::weights::FracOrder;

pub const PROBLEM_IDS: [&str; 4] = ["sub.sinx", "sub.t2sin2pix", "wave.exp", "wave.sin2pix_vel"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    SubDiffusion,
    Wave,
}

#[derive(Debug, Clone)]
pub enum AnyProblem {
    SubDiffusion(SubDiffusionProblem),
    Wave(WaveProblem),
}

#[derive(Debug, Clone)]
pub struct NamedProblem {
    pub id: &'static str,
    pub problem: AnyProblem,
    /// Grid of the self-reference run for problems without a closed form.
    pub reference_grid: Option<Grid>,
}

impl NamedProblem {
    pub fn kind(&self) -> ProblemKind {
        match self.problem {
            AnyProblem::SubDiffusion(_) => ProblemKind::SubDiffusion,
            AnyProblem::Wave(_) => ProblemKind::Wave,
        }
    }

    pub fn exact(&self) -> Option<&SpaceTimeFn> {
        match &self.problem {
            AnyProblem::SubDiffusion(p) => p.exact.as_ref(),
            AnyProblem::Wave(p) => p.exact.as_ref(),
        }
    }

    pub fn solve(&self, grid: &Grid) -> Result<SolutionHistory> {
        match &self.problem {
            AnyProblem::SubDiffusion(p) => subdiffusion::solve(p, grid),
            AnyProblem::Wave(p) => wave::solve_wave(p, grid),
        }
    }
}

/// Looks a problem up by id. `beta` is required by `sub.sinx` and ignored
/// elsewhere.
pub fn lookup(id: &str, alpha: f64, beta: Option<f64>) -> Result<NamedProblem> {
    match id {
        "sub.sinx" => {
            let beta = beta.ok_or_else(|| {
                Error::InvalidProblem("sub.sinx needs a second order `beta`".into())
            })?;
            make_sinx_subdiffusion(alpha, beta)
        }
        "sub.t2sin2pix" => make_t2sin2pix_subdiffusion(alpha),
        "wave.exp" => make_exp_wave(alpha),
        "wave.sin2pix_vel" => make_sin2pix_wave_with_velocity(alpha),
        other => Err(Error::UnknownProblem(other.to_string())),
    }
}

pub fn make_sinx_subdiffusion(alpha: f64, beta: f64) -> Result<NamedProblem> {
    let (a, b) = (FracOrder::new(alpha)?, FracOrder::new(beta)?);
    let s = 3.0 - alpha - beta;
    let ca = gamma(4.0 - alpha - beta) / gamma(4.0 - 2.0 * alpha - beta);
    let cb = gamma(4.0 - alpha - beta) / gamma(4.0 - alpha - 2.0 * beta);
    let sin1 = 1f64.sin();
    Ok(NamedProblem {
        id: "sub.sinx",
        problem: AnyProblem::SubDiffusion(SubDiffusionProblem {
            alpha: a,
            beta: b,
            kappa1: 1.0,
            kappa2: 1.0,
            source: Arc::new(move |x, t| {
                x.sin() * (s * t.powf(s - 1.0) + ca * t.powf(s - alpha) + cb * t.powf(s - beta))
            }),
            left_bc: Arc::new(|_| 0.0),
            right_bc: Arc::new(move |t| t.powf(s) * sin1),
            initial: None,
            exact: Some(Arc::new(move |x, t| x.sin() * t.powf(s))),
        }),
        reference_grid: None,
    })
}

/// Single memory term (`κ2 = 0`); the unused second order mirrors `alpha`.
pub fn make_t2sin2pix_subdiffusion(alpha: f64) -> Result<NamedProblem> {
    let a = FracOrder::new(alpha)?;
    let c = 8.0 * PI * PI / gamma(3.0 - alpha);
    Ok(NamedProblem {
        id: "sub.t2sin2pix",
        problem: AnyProblem::SubDiffusion(SubDiffusionProblem {
            alpha: a,
            beta: a,
            kappa1: 1.0,
            kappa2: 0.0,
            source: Arc::new(move |x, t| {
                (2.0 * t + c * t.powf(2.0 - alpha)) * (2.0 * PI * x).sin()
            }),
            left_bc: Arc::new(|_| 0.0),
            right_bc: Arc::new(|_| 0.0),
            initial: None,
            exact: Some(Arc::new(|x, t| t * t * (2.0 * PI * x).sin())),
        }),
        reference_grid: None,
    })
}

pub fn make_exp_wave(alpha: f64) -> Result<NamedProblem> {
    FracOrder::new(alpha)?;
    let c = gamma(alpha + 3.0) / gamma(2.0 * alpha + 3.0);
    let e = 1f64.exp();
    let mut p = WaveProblem::new(
        alpha + 1.0,
        1.0,
        Arc::new(|_| 0.0),
        Arc::new(move |x, t| {
            x.exp() * ((alpha + 2.0) * t.powf(alpha + 1.0) - c * t.powf(2.0 * alpha + 2.0))
        }),
        Arc::new(move |t| t.powf(alpha + 2.0)),
        Arc::new(move |t| e * t.powf(alpha + 2.0)),
    )?;
    p.exact = Some(Arc::new(move |x, t| x.exp() * t.powf(alpha + 2.0)));
    Ok(NamedProblem {
        id: "wave.exp",
        problem: AnyProblem::Wave(p),
        reference_grid: None,
    })
}

pub fn make_sin2pix_wave_with_velocity(alpha: f64) -> Result<NamedProblem> {
    FracOrder::new(alpha)?;
    let c = 4.0 * PI * PI * gamma(alpha + 4.0) / gamma(2.0 * alpha + 4.0);
    let p = WaveProblem::new(
        alpha + 1.0,
        1.0,
        Arc::new(|x| 0.1 * (2.0 * PI * x).sin()),
        Arc::new(move |x, t| {
            (2.0 * PI * x).sin()
                * ((alpha + 3.0) * t.powf(alpha + 2.0) + c * t.powf(2.0 * alpha + 3.0))
        }),
        Arc::new(|_| 0.0),
        Arc::new(|_| 0.0),
    )?;
    Ok(NamedProblem {
        id: "wave.sin2pix_vel",
        problem: AnyProblem::Wave(p),
        reference_grid: Some(Grid::unit(400, 4000)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn registry_ids_resolve() {
        for id in PROBLEM_IDS {
            let p = lookup(id, 0.4, Some(0.2)).unwrap();
            assert_eq!(p.id, id);
            assert!(p.exact().is_some() ^ p.reference_grid.is_some());
        }
        assert!(matches!(
            lookup("nope", 0.5, None),
            Err(Error::UnknownProblem(_))
        ));
        assert!(lookup("sub.sinx", 0.5, None).is_err());
        assert!(lookup("wave.exp", 1.2, None).is_err());
    }

    #[test]
    fn exact_solution_spot_values() {
        let p = make_sinx_subdiffusion(0.35, 0.05).unwrap();
        let u = p.exact().unwrap();
        assert_eq!(u(0.7, 0.0), 0.0);
        assert_relative_eq!(u(1.0, 1.0), 1f64.sin());

        let p = make_t2sin2pix_subdiffusion(0.5).unwrap();
        let u = p.exact().unwrap();
        assert_eq!(u(0.0, 0.6), 0.0);
        assert_relative_eq!(u(0.25, 1.0), 1.0);

        let p = make_exp_wave(0.6).unwrap();
        let u = p.exact().unwrap();
        assert_eq!(u(0.3, 0.0), 0.0);
        assert_relative_eq!(u(0.0, 1.0), 1.0);
    }

    #[test]
    fn velocity_problem_data() {
        let p = make_sin2pix_wave_with_velocity(0.5).unwrap();
        let AnyProblem::Wave(w) = &p.problem else {
            panic!("wave problem expected")
        };
        assert_relative_eq!((w.initial_velocity)(0.25), 0.1);
        for x in [0.1, 0.3, 0.77] {
            assert_eq!((w.transformed_source)(x, 0.0), 0.0);
        }
        let g = p.reference_grid.unwrap();
        assert_eq!((g.m(), g.n()), (400, 4000));
    }
}
