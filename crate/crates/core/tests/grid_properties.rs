use fracpde::grid::{
    apply_compact, diff_inner, discrete_l2_norm, inner, second_diff, thomas_solve,
};
use fracpde::{Field, Grid, Tridiagonal};
use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;

fn field_with_zero_ends(interior: Vec<f64>) -> Field {
    let mut v = Vec::with_capacity(interior.len() + 2);
    v.push(0.0);
    v.extend(interior);
    v.push(0.0);
    Field(v)
}

fn sbp_case(m: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (
        prop::collection::vec(-10.0..10.0f64, m + 1),
        prop::collection::vec(-10.0..10.0f64, m - 1),
    )
}

fn check_summation_by_parts(u: Vec<f64>, v: Vec<f64>, m: usize) -> Result<(), TestCaseError> {
    let h = 1.0 / m as f64;
    let u = Field(u);
    let v = field_with_zero_ends(v);
    let lhs = inner(&second_diff(&u, h).unwrap(), &v, h).unwrap();
    let rhs = -diff_inner(&u, &v, h).unwrap();
    let scale = lhs.abs().max(rhs.abs()).max(1.0);
    prop_assert!((lhs - rhs).abs() <= 1e-13 * scale, "lhs {lhs} rhs {rhs}");
    Ok(())
}

proptest! {
    #[test]
    fn summation_by_parts_m4((u, v) in sbp_case(4)) {
        check_summation_by_parts(u, v, 4)?;
    }

    #[test]
    fn summation_by_parts_m17((u, v) in sbp_case(17)) {
        check_summation_by_parts(u, v, 17)?;
    }

    #[test]
    fn summation_by_parts_m64((u, v) in sbp_case(64)) {
        check_summation_by_parts(u, v, 64)?;
    }

    #[test]
    fn compact_energy_bound(interior in prop::collection::vec(-5.0..5.0f64, 1..80)) {
        let m = interior.len() + 1;
        let h = 1.0 / m as f64;
        let u = field_with_zero_ends(interior);
        let energy = inner(&apply_compact(&u).unwrap(), &u, h).unwrap();
        let norm = discrete_l2_norm(&u, h);
        prop_assert!(energy >= (2.0 / 3.0) * norm * norm - 1e-12 * norm * norm);
    }

    #[test]
    fn thomas_matches_dense_solve(
        n in 1usize..=200,
        seed in prop::collection::vec(-1.0..1.0f64, 4 * 200),
    ) {
        let lower: Vec<f64> = seed[..n - 1].to_vec();
        let upper: Vec<f64> = seed[200..200 + n - 1].to_vec();
        let rhs: Vec<f64> = seed[400..400 + n].to_vec();
        let diag: Vec<f64> = (0..n)
            .map(|i| {
                let l = if i > 0 { lower[i - 1].abs() } else { 0.0 };
                let u = if i + 1 < n { upper[i].abs() } else { 0.0 };
                let sign = if seed[600 + i] < 0.0 { -1.0 } else { 1.0 };
                sign * (l + u + 0.1 + seed[600 + i].abs())
            })
            .collect();
        let sys = Tridiagonal::new(lower, diag, upper).unwrap();
        let x = thomas_solve(&sys, &rhs).unwrap();

        let mut dense = DMatrix::<f64>::zeros(n, n);
        for i in 0..n {
            dense[(i, i)] = sys.diag[i];
            if i > 0 {
                dense[(i, i - 1)] = sys.lower[i - 1];
            }
            if i + 1 < n {
                dense[(i, i + 1)] = sys.upper[i];
            }
        }
        let oracle = dense.lu().solve(&DVector::from_column_slice(&rhs)).unwrap();
        let x_inf = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for (a, b) in x.iter().zip(oracle.iter()) {
            prop_assert!((a - b).abs() <= 1e-12 * x_inf.max(1.0));
        }

        let residual = sys
            .mul_vec(&x)
            .iter()
            .zip(&rhs)
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        let rhs_inf = rhs.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        prop_assert!(residual <= 1e-12 * (sys.norm_inf() * x_inf + rhs_inf));
    }
}

#[test]
fn compact_identity_is_fourth_order() {
    let errors: Vec<f64> = (3..=7)
        .map(|p| {
            let m = 1usize << p;
            let grid = Grid::unit(m, 1).unwrap();
            let h = grid.h();
            let f = grid.sample(f64::sin);
            let f2 = grid.sample(|x| -x.sin());
            let lhs = apply_compact(&f2).unwrap();
            let rhs = second_diff(&f, h).unwrap();
            (1..m).map(|i| (lhs[i] - rhs[i]).abs()).fold(0.0, f64::max)
        })
        .collect();
    // Least-squares slope of log2(error) against -log2(h); the finest level
    // already carries O(ε/h²) roundoff, so a pairwise ratio would be noisy.
    let pts: Vec<(f64, f64)> = errors
        .iter()
        .enumerate()
        .map(|(i, e)| ((i + 3) as f64, -e.log2()))
        .collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let slope = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>()
        / pts.iter().map(|p| (p.0 - mx).powi(2)).sum::<f64>();
    assert!((slope - 4.0).abs() <= 0.2, "slope {slope} from {errors:?}");
}

#[test]
fn random_dominant_system_meets_residual_contract() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(50);
    let n = 50;
    let lower: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let upper: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let diag: Vec<f64> = (0..n).map(|_| rng.gen_range(2.5..4.0)).collect();
    let rhs: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let sys = Tridiagonal::new(lower, diag, upper).unwrap();
    let x = thomas_solve(&sys, &rhs).unwrap();
    let residual = sys
        .mul_vec(&x)
        .iter()
        .zip(&rhs)
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    let x_inf = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let rhs_inf = rhs.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    assert!(residual <= 1e-12 * (sys.norm_inf() * x_inf + rhs_inf));
}
