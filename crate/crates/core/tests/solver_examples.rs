use std::sync::Arc;

use fracpde::analysis::{error_report, error_report_exact, Reference};
use fracpde::problems::{self, NamedProblem};
use fracpde::subdiffusion::{self, SubDiffusionProblem};
use fracpde::wave::{self, WaveProblem};
use fracpde::{FracOrder, Grid};

fn e_inf(problem: &NamedProblem, m: usize, n: usize) -> f64 {
    let grid = Grid::unit(m, n).unwrap();
    let history = problem.solve(&grid).unwrap();
    error_report_exact(&history, problem.exact().unwrap()).e_inf
}

fn assert_published(got: f64, published: f64) {
    // Published values carry five significant digits.
    assert!(
        ((got - published) / published).abs() <= 1e-3,
        "{got:.6e} vs published {published:.4e}"
    );
}

#[test]
fn subdiffusion_temporal_row() {
    let p = problems::make_sinx_subdiffusion(0.35, 0.05).unwrap();
    assert_published(e_inf(&p, 30, 40), 1.2567e-5);
}

#[test]
fn subdiffusion_spatial_row() {
    let p = problems::make_t2sin2pix_subdiffusion(0.5).unwrap();
    assert_published(e_inf(&p, 16, 4000), 9.6041e-5);
}

#[test]
fn wave_temporal_row() {
    let p = problems::make_exp_wave(0.6).unwrap();
    assert_published(e_inf(&p, 30, 20), 5.7192e-4);
}

#[test]
fn wave_spatial_row() {
    let p = problems::make_exp_wave(0.5).unwrap();
    assert_published(e_inf(&p, 8, 5000), 1.4229e-7);
}

#[test]
fn zero_data_is_a_fixed_point() {
    let grid = Grid::unit(20, 30).unwrap();
    let half = FracOrder::new(0.5).unwrap();
    let sub = SubDiffusionProblem {
        alpha: half,
        beta: FracOrder::new(0.2).unwrap(),
        kappa1: 1.0,
        kappa2: 0.7,
        source: Arc::new(|_, _| 0.0),
        left_bc: Arc::new(|_| 0.0),
        right_bc: Arc::new(|_| 0.0),
        initial: None,
        exact: None,
    };
    let h = subdiffusion::solve(&sub, &grid).unwrap();
    assert!(h
        .levels
        .iter()
        .all(|l| l.as_slice().iter().all(|&v| v == 0.0)));

    let w = WaveProblem::new(
        1.5,
        2.0,
        Arc::new(|_| 0.0),
        Arc::new(|_, _| 0.0),
        Arc::new(|_| 0.0),
        Arc::new(|_| 0.0),
    )
    .unwrap();
    let h = wave::solve_wave(&w, &grid).unwrap();
    assert_eq!(h.levels.len(), 31);
    assert!(h
        .levels
        .iter()
        .all(|l| l.as_slice().iter().all(|&v| v == 0.0)));
}

#[test]
fn histories_satisfy_boundary_data() {
    let p = problems::make_exp_wave(0.4).unwrap();
    let grid = Grid::unit(10, 16).unwrap();
    let h = p.solve(&grid).unwrap();
    for k in 1..=grid.n() {
        let t = grid.t(k);
        assert_eq!(h.level(k)[0], t.powf(2.4));
        assert_eq!(h.level(k)[10], 1f64.exp() * t.powf(2.4));
    }
}

#[test]
fn reference_errors_match_exact_errors_on_coinciding_grids() {
    // A fine run used as reference gives nearly the exact-solution error of
    // the coarse run when the fine run is much more accurate.
    let p = problems::make_exp_wave(0.5).unwrap();
    let coarse = p.solve(&Grid::unit(10, 10).unwrap()).unwrap();
    let fine = p.solve(&Grid::unit(40, 320).unwrap()).unwrap();
    let vs_ref = error_report(&coarse, Reference::History(&fine)).unwrap();
    let vs_exact = error_report_exact(&coarse, p.exact().unwrap());
    assert!((vs_ref.e_inf - vs_exact.e_inf).abs() <= 0.02 * vs_exact.e_inf);

    let off = p.solve(&Grid::unit(12, 10).unwrap()).unwrap();
    assert!(error_report(&off, Reference::History(&fine)).is_err());
}

#[test]
fn velocity_problem_converges_to_its_reference_at_second_order() {
    let p = problems::make_sin2pix_wave_with_velocity(0.5).unwrap();
    let reference = p.solve(&Grid::unit(50, 640).unwrap()).unwrap();
    let errors: Vec<f64> = [10, 20, 40]
        .iter()
        .map(|&n| {
            let h = p.solve(&Grid::unit(50, n).unwrap()).unwrap();
            error_report(&h, Reference::History(&reference))
                .unwrap()
                .e_inf
        })
        .collect();
    for w in errors.windows(2) {
        let rate = (w[0] / w[1]).log2();
        assert!((1.8..=2.2).contains(&rate), "rate {rate} from {errors:?}");
    }
}
