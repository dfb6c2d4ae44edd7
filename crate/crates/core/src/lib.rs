//! Second-order-in-time, fourth-order-in-space compact finite-difference
//! solvers for time-fractional sub-diffusion and diffusion-wave equations.
//!
//! The time discretisation combines two shifted Grünwald approximations so
//! that the first-order error cancels, and the resulting memory weights are
//! certified positive semi-definite through their Toeplitz symbols. Space is
//! discretised with the fourth-order compact operator
//! `H = 1 + h²/12 δx²`.
//!
//! ```
//! use fracpde::{problems, analysis, Grid};
//!
//! let problem = problems::make_t2sin2pix_subdiffusion(0.5).unwrap();
//! let grid = Grid::unit(16, 64).unwrap();
//! let history = problem.solve(&grid).unwrap();
//! let report = analysis::error_report_exact(&history, problem.exact().unwrap());
//! assert!(report.e_inf < 1e-3);
//! ```

pub mod analysis;
pub mod cli;
pub mod error;
pub mod grid;
pub mod plot;
pub mod problems;
pub mod stepper;
pub mod subdiffusion;
pub mod wave;
pub mod weights;

pub use error::{Error, Result};
pub use grid::{Field, Grid, Tridiagonal};
pub use stepper::{history_term, SolutionHistory, SpaceFn, SpaceTimeFn, TimeFn};
pub use weights::{FracOrder, ShiftPair, WeightKind, WeightSequence};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/weights.md")]
    mod weights {}
    #[doc = include_str!("../../../book/src/compact.md")]
    mod compact {}
    #[doc = include_str!("../../../book/src/subdiffusion.md")]
    mod subdiffusion {}
    #[doc = include_str!("../../../book/src/wave.md")]
    mod wave {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
