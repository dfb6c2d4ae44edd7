use fracpde::analysis::{
    self, error_report, operator_order_check, shifted_operator, stability_experiment,
    toeplitz_matrix, toeplitz_psd_check, LambdaKind, OperatorKind, RateTable, Reference,
};
use fracpde::{problems, Field, FracOrder, Grid, ShiftPair, SolutionHistory, SpaceTimeFn};
use std::f64::consts::PI;
use std::sync::Arc;

fn half() -> FracOrder {
    FracOrder::new(0.5).unwrap()
}

#[test]
fn two_by_two_toeplitz_eigenvalues() {
    let t = toeplitz_matrix(LambdaKind::Subdiffusion, half(), 2);
    let mut eig: Vec<f64> = t.symmetric_eigenvalues().iter().copied().collect();
    eig.sort_by(f64::total_cmp);
    assert!((eig[0] - (1.25 - 0.4375)).abs() < 1e-14);
    assert!((eig[1] - (1.25 + 0.4375)).abs() < 1e-14);
    let check = toeplitz_psd_check(LambdaKind::Subdiffusion, half(), 2).unwrap();
    assert!(check.pass);
    assert!((check.min_eigenvalue - 0.8125).abs() < 1e-14);

    let single = toeplitz_psd_check(LambdaKind::Wave, half(), 1).unwrap();
    assert!((single.min_eigenvalue - 0.75).abs() < 1e-15);
    assert!(toeplitz_psd_check(LambdaKind::Wave, half(), 0).is_err());
}

#[test]
fn operator_orders_on_monomials() {
    let taus: Vec<f64> = (4..=9).map(|p| 0.5f64.powi(p)).collect();
    for kind in [OperatorKind::Derivative, OperatorKind::Integral] {
        let table =
            operator_order_check(kind, half(), ShiftPair::new(0, -1).unwrap(), 4.0, &taus).unwrap();
        let last = *table.rates_inf().last().unwrap();
        assert!((last - 2.0).abs() < 0.1, "{kind:?}: {last}");
    }
    assert!(operator_order_check(
        OperatorKind::Derivative,
        half(),
        ShiftPair::new(2, 0).unwrap(),
        4.0,
        &taus
    )
    .is_err());
    assert!(operator_order_check(
        OperatorKind::Integral,
        half(),
        ShiftPair::new(1, 0).unwrap(),
        2.0,
        &taus
    )
    .is_err());
}

#[test]
fn zero_function_gives_zero_operator_value() {
    for kind in [OperatorKind::Derivative, OperatorKind::Integral] {
        for tau in [0.1, 0.01, 0.001] {
            let v = shifted_operator(
                kind,
                half(),
                ShiftPair::new(1, 0).unwrap(),
                |_| 0.0,
                1.0,
                tau,
            );
            assert_eq!(v, 0.0);
        }
    }
}

#[test]
fn error_report_trivial_cases() {
    let grid = Grid::unit(4, 3).unwrap();
    let zero: SpaceTimeFn = Arc::new(|_, _| 0.0);
    let history = SolutionHistory {
        grid,
        levels: vec![Field::zeros(5); 4],
    };
    let r = error_report(&history, Reference::Exact(&zero)).unwrap();
    assert_eq!((r.e_inf, r.e_l2), (0.0, 0.0));

    let mut shifted = history.clone();
    shifted.levels[2] = Field(vec![0.0, 0.3, 0.3, 0.3, 0.0]);
    let r = error_report(&shifted, Reference::History(&history)).unwrap();
    assert!((r.e_inf - 0.3).abs() < 1e-15);
}

#[test]
fn zero_errors_leave_rates_undefined() {
    let table = RateTable::from_errors(
        analysis::Axis::Temporal,
        &[(0.5, 0.0, 0.0), (0.25, 0.0, 0.0), (0.125, 0.0, 0.0)],
    );
    assert!(table
        .rows
        .iter()
        .all(|r| r.rate_inf.is_none() && r.rate_l2.is_none()));
}

#[test]
fn subdiffusion_temporal_rates_follow_published_column() {
    let p = problems::make_sinx_subdiffusion(0.35, 0.05).unwrap();
    let table = analysis::temporal_rate_study(&p, 30, &[5, 10, 20, 40, 80, 160]).unwrap();
    let published = [2.0447, 1.9903, 1.9944, 1.9961, 1.9976];
    for (got, want) in table.rates_inf().iter().zip(published) {
        assert!((got - want).abs() < 5e-4, "{got} vs {want}");
    }
    assert!(table.rows[0].rate_inf.is_none());
    assert!(analysis::temporal_rate_study(&p, 30, &[5, 10, 30]).is_err());
}

#[test]
fn stability_zero_perturbation() {
    let p = problems::make_t2sin2pix_subdiffusion(0.5).unwrap();
    let grid = Grid::unit(50, 50).unwrap();
    let out = stability_experiment(&p, &grid, &Field::zeros(51), None).unwrap();
    assert_eq!(out.deviation, 0.0);
    assert!(out.pass);
}

#[test]
fn stability_sine_perturbation_and_linearity() {
    let p = problems::make_t2sin2pix_subdiffusion(0.5).unwrap();
    let grid = Grid::unit(50, 50).unwrap();
    let mut rho = grid.sample(|x| 1e-3 * (PI * x).sin());
    rho.0[50] = 0.0;
    let once = stability_experiment(&p, &grid, &rho, None).unwrap();
    assert!(once.pass, "{once:?}");
    assert!(once.deviation > 0.0);

    let twice = stability_experiment(&p, &grid, &rho.scaled(2.0), None).unwrap();
    assert!((twice.deviation - 2.0 * once.deviation).abs() <= 1e-9 * once.deviation);
    assert!((twice.bound - 2.0 * once.bound).abs() <= 1e-12 * once.bound);
}

#[test]
fn stability_wave_with_velocity_perturbation() {
    let p = problems::make_exp_wave(0.5).unwrap();
    let grid = Grid::unit(50, 50).unwrap();
    let mut rho = grid.sample(|x| 1e-3 * (PI * x).sin());
    rho.0[50] = 0.0;
    let mut rho_tilde = grid.sample(|x| 1e-3 * (2.0 * PI * x).sin());
    rho_tilde.0[50] = 0.0;
    let out = stability_experiment(&p, &grid, &rho, Some(&rho_tilde)).unwrap();
    assert!(out.pass, "{out:?}");

    let sub = problems::make_t2sin2pix_subdiffusion(0.5).unwrap();
    assert!(stability_experiment(&sub, &grid, &rho, Some(&rho_tilde)).is_err());
    let mut bad = rho.clone();
    bad.0[0] = 1.0;
    assert!(stability_experiment(&p, &grid, &bad, None).is_err());
}
